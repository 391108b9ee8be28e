package client;

import lib.*;

public class Main {
    public static void main(String[] args) {
        new C().m("x");
        new K().m("y");
    }
}

class K extends C { public void m(Object o) {} }
