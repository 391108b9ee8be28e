package lib;

public abstract class C { public abstract void m(); }
