package client;

import lib.*;

public class Main {
    public static void main(String[] args) {
        try {
            new C().m();
        } catch (java.io.IOException e) {
        }
    }
}
