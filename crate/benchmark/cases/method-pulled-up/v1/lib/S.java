package lib;

public class S { }
