package lib;

public abstract class C { }
