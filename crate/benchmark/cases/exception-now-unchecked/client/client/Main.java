package client;

import lib.*;

public class Main {
    public static void main(String[] args) {
        try {
            Main2.raise(false);
        } catch (E e) {
        }
    }
}

class Main2 { static void raise(boolean b) throws E { if (b) throw new E(); } }
