package lib;

public class C { protected void m() {} }
