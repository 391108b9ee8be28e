package lib;

public class C { public java.util.List<Integer> m() { return null; } }
