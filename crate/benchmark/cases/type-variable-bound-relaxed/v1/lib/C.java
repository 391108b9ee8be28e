package lib;

public class C<A extends Number> { }
