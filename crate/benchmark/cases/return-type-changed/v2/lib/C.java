package lib;

public class C { public long m() { return 0; } }
