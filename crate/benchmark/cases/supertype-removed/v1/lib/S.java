package lib;

public class S { public void s() {} }
