package lib;

public class E extends RuntimeException { }
