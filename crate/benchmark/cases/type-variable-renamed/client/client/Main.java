package client;

import lib.*;

public class Main {
    public static void main(String[] args) {
        C<String> c = new C<String>();
        String s = c.get();
    }
}
