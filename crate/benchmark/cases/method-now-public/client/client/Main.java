package client;

import lib.*;

public class Main {
    public static void main(String[] args) {
        new K().g();
    }
}

class K extends C { void g() { m(); } }
