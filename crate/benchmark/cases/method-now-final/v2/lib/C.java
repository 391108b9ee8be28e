package lib;

public class C { public final void m() {} }
