package lib;

public class O { protected static class N { } }
