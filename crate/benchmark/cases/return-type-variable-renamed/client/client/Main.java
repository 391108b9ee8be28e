package client;

import lib.*;

public class Main {
    public static void main(String[] args) {
        String s = new C().m("x");
    }
}
