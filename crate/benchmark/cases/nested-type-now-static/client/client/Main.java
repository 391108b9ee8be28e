package client;

import lib.*;

public class Main {
    public static void main(String[] args) {
        O o = new O();
        O.I i = o.new I();
    }
}
