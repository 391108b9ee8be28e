package lib;

public class C { public <U> U m(U u) { return u; } }
