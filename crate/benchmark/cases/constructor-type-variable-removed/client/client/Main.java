package client;

import lib.*;

public class Main {
    public static void main(String[] args) {
        new C("x");
        new K();
    }
}

class K extends C { K() { super("x"); } }
