package lib;

public final class C { public final void m() {} }
