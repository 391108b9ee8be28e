package client;

import lib.*;

public class Main {
    public static void main(String[] args) {
        new K().m(new java.util.ArrayList<String>());
    }
}

class K extends C { public <T> void m(java.util.List<T> l) {} }
