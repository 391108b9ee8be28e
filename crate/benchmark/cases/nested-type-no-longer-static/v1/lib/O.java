package lib;

public class O { public static class I { } }
