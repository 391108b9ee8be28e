package lib;

public class C { public long f; }
