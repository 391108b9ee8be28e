package client;

import lib.*;

public class Main {
    public static void main(String[] args) {
        int x = new C().f;
    }
}
