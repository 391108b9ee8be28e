package client;

import lib.*;

public class Main {
    public static void main(String[] args) {
        new K().m(new java.util.ArrayList<String>());
    }
}

class K extends C { public void m(java.util.List<String> l) {} }
