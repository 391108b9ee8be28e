package lib;

public class C<A, B> { }
