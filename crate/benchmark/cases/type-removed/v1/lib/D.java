package lib;

public class D { }
