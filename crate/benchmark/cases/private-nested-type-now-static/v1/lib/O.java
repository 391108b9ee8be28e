package lib;

public class O { private class I { } }
