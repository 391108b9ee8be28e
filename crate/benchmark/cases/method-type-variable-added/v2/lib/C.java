package lib;

public class C { public <T, U> void m() {} }
