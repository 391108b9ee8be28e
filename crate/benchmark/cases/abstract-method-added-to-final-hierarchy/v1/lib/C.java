package lib;

public abstract class C { C() {} public static C make() { return new Impl(); } }
