package lib;

public class C { public <T> void m() {} }
