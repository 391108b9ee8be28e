package lib;

public interface I { }
