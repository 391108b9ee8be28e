package lib;

public class C { public <T> T m(Class<T> c) { return null; } }
