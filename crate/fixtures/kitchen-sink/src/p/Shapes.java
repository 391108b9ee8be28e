package p;

import java.util.*;
import java.io.IOException;

public class Shapes<T extends Comparable<? super T>> extends AbstractList<T> implements java.io.Serializable {
    public static final int MAX = 10, MIN[] = {1};
    protected transient volatile Map<String, List<T>> cache = new HashMap<String, List<T>>(), other;
    public Shapes() {}
    protected Shapes(T seed, String... rest) throws IOException { }
    public T get(int i) { return null; }
    public int size() { return 0; }
    public static <E extends Number & Comparable<E>> E max(Collection<? extends E> xs) { return null; }
    public synchronized native void nat();
    public int legacy()[] { return null; }
    public class Inner { public Inner(int x) {} public T t; }
    public static class Nested<U> { protected Nested() {} }
    public interface Visitor<R> { R visit(Object o); default void done() {} static int zero() { return 0; } int K = 1; class Impl {} }
    public enum Color { RED, GREEN { public String toString() { return "g"; } }; public abstract static class X {} }
    public enum Plain implements Runnable { A, B; public void run() {} }
    public record Point(int x, List<String> ys) implements Comparable<Point> {
        public Point { }
        public int compareTo(Point o) { return 0; }
        public int x() { return x; }
    }
    public record Empty() {}
    public @interface Marker { String value() default "x"; int[] n() default {1, 2}; }
    @Deprecated public void old() {}
    @Override public boolean isEmpty() { return true; }
    public abstract static sealed class Sh permits Circle, Sq {}
    public static final class Circle extends Sh {}
    public static non-sealed class Sq extends Sh {}
    private void hidden() {}
    void pkg() {}
    public Map.Entry<String, Map.Entry<T, T>> entry() { return null; }
}
