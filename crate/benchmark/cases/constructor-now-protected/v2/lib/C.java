package lib;

public class C { protected C() {} }
