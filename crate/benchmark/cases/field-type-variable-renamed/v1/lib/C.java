package lib;

public class C<T> { public T f; }
