package lib;

public class C { private static int f; public int get() { return f; } }
