package lib;

public class C { public int f; public C() { f = 0; } }
