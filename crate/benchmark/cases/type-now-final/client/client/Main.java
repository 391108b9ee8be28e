package client;

import lib.*;

public class Main {
    public static void main(String[] args) {
        new D();
    }
}

class D extends C { }
