package lib;

public class C { public C() throws Exception {} }
