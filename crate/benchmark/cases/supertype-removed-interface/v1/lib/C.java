package lib;

public class C implements Runnable { public void run() {} }
