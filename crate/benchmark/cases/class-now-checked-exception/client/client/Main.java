package client;

import lib.*;

public class Main {
    public static void main(String[] args) {
        Use.raise(false);
        Use.take(new E());
    }
}

class Use {
    static void raise(boolean b) { if (b) throw new E(); }
    static void take(RuntimeException e) { }
}
