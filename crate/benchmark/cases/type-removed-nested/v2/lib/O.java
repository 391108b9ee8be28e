package lib;

public class O { }
