package lib;

public class C { public java.util.List<String> m() { return null; } }
