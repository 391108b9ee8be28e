package lib;

public abstract class C { C() {} abstract void h(); public static C make() { return new Impl(); } }
