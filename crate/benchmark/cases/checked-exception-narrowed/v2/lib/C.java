package lib;

public class C { public void m() throws java.io.FileNotFoundException {} }
