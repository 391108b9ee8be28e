package lib;

public class C { private C() {} public static C make() { return new C(); } }
