package lib;

public class C { public <T> C(T t) {} }
