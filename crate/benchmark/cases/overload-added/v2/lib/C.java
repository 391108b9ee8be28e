package lib;

public class C { public void m() {} public void m(int x) {} }
