package lib;

public abstract class C { C() {} void h() {} public static C make() { return new Impl(); } }
