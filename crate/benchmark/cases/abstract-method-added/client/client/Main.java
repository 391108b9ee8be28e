package client;

import lib.*;

public class Main {
    public static void main(String[] args) {
        new K();
    }
}

class K implements I { }
