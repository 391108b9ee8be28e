package lib;

public final class C { protected void m() {} }
