package lib;

public final class C { public void m() {} }
