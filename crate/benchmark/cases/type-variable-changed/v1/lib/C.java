package lib;

public class C<A> { }
