package lib;

public abstract class C { public void m() {} }
