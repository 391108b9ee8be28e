package lib;

public class C { public C() {} public C(int x) {} }
