package lib;

public class C { public <T extends Number> void m(java.util.List<T> l) {} }
