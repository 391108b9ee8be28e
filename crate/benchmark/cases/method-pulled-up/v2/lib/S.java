package lib;

public class S { public void m() {} }
