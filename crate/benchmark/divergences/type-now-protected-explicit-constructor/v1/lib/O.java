package lib;

public class O { public static class N { public N() {} } }
