package lib;

public class C { public void m(Object o) {} }
