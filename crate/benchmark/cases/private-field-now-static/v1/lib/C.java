package lib;

public class C { private int f; public int get() { return f; } }
