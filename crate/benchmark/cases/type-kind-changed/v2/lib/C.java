package lib;

public interface C { }
