package lib;

public final class C { }
