package lib;

public class A { }
