package lib;

public class C { public final int f; public C() { f = 0; } }
