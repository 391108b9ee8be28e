package client;

import lib.*;

public class Main {
    public static void main(String[] args) {
        S s = new C();
        s.s();
    }
}
