package client;

import library.*;

public class Main {
    public static void main(String[] args) {
        new K();
    }
}

class K extends B { protected void m() {} }
