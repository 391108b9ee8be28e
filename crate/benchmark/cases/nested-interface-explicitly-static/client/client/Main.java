package client;

import lib.*;

public class Main {
    public static void main(String[] args) {
        O.J j = null;
        new O();
    }
}
