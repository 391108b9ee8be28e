package lib;

public class O { private static class I { } }
