package lib;

public class C<B> { public B get() { return null; } }
