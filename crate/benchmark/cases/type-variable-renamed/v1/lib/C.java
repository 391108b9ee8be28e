package lib;

public class C<A> { public A get() { return null; } }
