package lib;

public class C { public int f; }
