package lib;

public interface I { void m(); }
