package lib;

public class C { public void run() {} }
