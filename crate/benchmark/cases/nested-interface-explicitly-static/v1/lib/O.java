package lib;

public class O { public interface J { } }
