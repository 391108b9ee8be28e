package lib;

public class C extends S { public int f; }
