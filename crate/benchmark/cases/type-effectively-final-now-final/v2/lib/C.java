package lib;

public final class C { private C() {} public static C make() { return new C(); } }
