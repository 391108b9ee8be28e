package lib;

public class C extends S { public void m() {} }
