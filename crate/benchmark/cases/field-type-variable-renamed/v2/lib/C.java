package lib;

public class C<U> { public U f; }
