package lib;

public class S { public int f; }
