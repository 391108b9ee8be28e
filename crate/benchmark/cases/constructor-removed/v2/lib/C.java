package lib;

public class C { public C() {} }
