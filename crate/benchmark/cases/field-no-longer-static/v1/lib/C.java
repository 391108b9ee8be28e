package lib;

public class C { public static int f; }
