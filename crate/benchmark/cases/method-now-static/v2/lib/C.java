package lib;

public class C { public static void m() {} }
