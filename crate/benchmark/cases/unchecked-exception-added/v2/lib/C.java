package lib;

public class C { public void m() throws IllegalStateException {} }
