package lib;

public class C { public int m() { return 0; } }
