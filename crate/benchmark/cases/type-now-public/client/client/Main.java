package client;

import lib.*;

public class Main {
    public static void main(String[] args) {
        Sub.keep();
    }
}

class Sub extends O { static O.N keep() { return null; } }
