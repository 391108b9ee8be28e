package client;

import lib.*;

public class Main {
    public static void main(String[] args) {
        java.util.List<String> l = new C().m();
    }
}
