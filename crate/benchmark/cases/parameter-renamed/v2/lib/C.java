package lib;

public class C { public void m(java.util.List<String> list) {} }
