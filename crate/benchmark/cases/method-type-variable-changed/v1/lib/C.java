package lib;

public class C { public <T> void m(java.util.List<T> l) {} }
