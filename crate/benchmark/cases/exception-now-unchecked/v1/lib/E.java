package lib;

public class E extends Exception { }
