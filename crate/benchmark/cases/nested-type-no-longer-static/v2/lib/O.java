package lib;

public class O { public class I { } }
