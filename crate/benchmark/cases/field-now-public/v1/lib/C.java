package lib;

public class C { protected int f; }
