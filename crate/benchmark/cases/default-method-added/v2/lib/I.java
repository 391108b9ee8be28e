package lib;

public interface I { default void m() {} }
