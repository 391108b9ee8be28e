package p.q;
public final class Util { private Util() {} public static void f(p.Shapes<?>.Inner in) {} }
class Hidden { public void x() {} }
