package lib;

public class C implements java.io.Serializable { }
