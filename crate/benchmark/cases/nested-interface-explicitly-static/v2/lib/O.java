package lib;

public class O { public static interface J { } }
