package client;

import lib.*;

public class Main {
    public static void main(String[] args) {
        C.m();
    }
}
