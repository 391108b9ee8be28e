package client;

import lib.*;

public class Main {
    public static void main(String[] args) {
        Runnable r = new C();
        r.run();
    }
}
