package lib;

public class C { public <T> T m(T t) { return t; } }
