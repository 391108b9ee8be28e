package library;

public abstract class B extends A { protected abstract void m(); }
