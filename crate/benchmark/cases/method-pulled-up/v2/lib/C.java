package lib;

public class C extends S { }
