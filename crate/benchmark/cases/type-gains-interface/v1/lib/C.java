package lib;

public class C { }
