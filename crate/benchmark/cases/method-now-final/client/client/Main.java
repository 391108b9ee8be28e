package client;

import lib.*;

public class Main {
    public static void main(String[] args) {
        new K().m();
    }
}

class K extends C { public void m() {} }
