package lib;

public class C { public Object m(Class<?> c) { return null; } }
