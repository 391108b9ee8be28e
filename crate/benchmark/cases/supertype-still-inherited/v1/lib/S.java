package lib;

public class S implements Runnable { public void run() {} }
