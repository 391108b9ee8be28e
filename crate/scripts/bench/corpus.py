#!/usr/bin/env python3
"""Benchmark corpus authoring and labelling.

    corpus.py generate [--out benchmark/cases]   write every case and label it
    corpus.py check    [--out benchmark/cases]   re-label and compare with case.json

Cases whose real effect differs from the flags the rules assign go to the
sibling `divergences/` directory.

Labels come from compiling and running a client:
  source-breaking  the client, compiled against v1, does not compile against v2
  binary-breaking  the client classes built against v1 fail to link or run
                   with the v2 library classes

Needs ecj (ECJ_JAR, default /opt/ecj/ecj.jar) and a Java runtime (JAVA, else
`java` on PATH, else the jdk4py runtime).
"""

import argparse
import json
import os
import shutil
import subprocess
import sys
import tempfile
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, Optional

ROOT = Path(__file__).resolve().parents[2]


def java_bin() -> str:
    if os.environ.get("JAVA"):
        return os.environ["JAVA"]
    found = shutil.which("java")
    if found:
        return found
    try:
        import jdk4py

        return str(jdk4py.JAVA)
    except ImportError:
        sys.exit("no Java runtime: set JAVA")


ECJ = os.environ.get("ECJ_JAR", "/opt/ecj/ecj.jar")


@dataclass
class Case:
    id: str
    description: str
    v1: Dict[str, str]
    v2: Dict[str, Optional[str]]
    main: str
    extra: str = ""
    expected: Optional[str] = None
    counterpart: Optional[str] = None
    package: str = "lib"
    imports: str = ""
    group: str = "cases"

    def tree(self, version: int) -> Dict[str, str]:
        files = dict(self.v1)
        if version == 2:
            for name, text in self.v2.items():
                if text is None:
                    files.pop(name, None)
                else:
                    files[name] = text
        return {
            f"{self.package}/{name}.java": f"package {self.package};\n\n{text.strip()}\n"
            for name, text in files.items()
        }

    def client(self) -> str:
        body = "\n".join("        " + line for line in self.main.strip().splitlines())
        imports = "".join(f"import {i};\n" for i in self.imports.split() if i)
        extra = f"\n{self.extra.strip()}\n" if self.extra.strip() else ""
        return (
            f"package client;\n\nimport {self.package}.*;\n{imports}\n"
            f"public class Main {{\n    public static void main(String[] args) {{\n{body}\n    }}\n}}\n{extra}"
        )


def B(id, kind, description, v1, v2, main, **kw):
    return Case(id, description, v1, v2, main, expected=kind, **kw)


def C(id, kind, description, v1, v2, main, **kw):
    return Case(id, description, v1, v2, main, counterpart=kind, **kw)


CASES = [
    # Types
    B("type-removed", "type removed", "public class deleted",
      {"C": "public class C { public void m() {} }", "D": "public class D { }"}, {"C": None},
      "new C().m();\nnew D();"),
    B("type-removed-nested", "type removed", "public nested class deleted",
      {"O": "public class O { public static class N {} }"}, {"O": "public class O { }"},
      "new O.N();"),
    C("type-removed-hidden", "type removed", "package-private class deleted",
      {"A": "public class A { }", "Helper": "class Helper { }"}, {"Helper": None},
      "new A();"),
    B("type-now-protected", "type now protected", "public nested class becomes protected",
      {"O": "public class O { public static class N { } }"},
      {"O": "public class O { protected static class N { } }"},
      "new O.N();"),
    C("type-now-public", "type now protected", "protected nested class becomes public",
      {"O": "public class O { protected static class N { } }"},
      {"O": "public class O { public static class N { } }"},
      "Sub.keep();",
      extra="class Sub extends O { static O.N keep() { return null; } }"),
    B("type-kind-changed", "type kind changed", "class becomes an interface",
      {"C": "public class C { }"}, {"C": "public interface C { }"},
      "new C();"),
    C("type-gains-interface", "type kind changed", "class implements a new interface",
      {"C": "public class C { }"}, {"C": "public class C implements java.io.Serializable { }"},
      "new C();"),
    B("supertype-removed", "supertype removed", "class no longer extends its public superclass",
      {"S": "public class S { public void s() {} }", "C": "public class C extends S { }"},
      {"C": "public class C { }"},
      "S s = new C();\ns.s();"),
    B("supertype-removed-interface", "supertype removed", "class drops an interface",
      {"C": "public class C implements Runnable { public void run() {} }"},
      {"C": "public class C { public void run() {} }"},
      "Runnable r = new C();\nr.run();"),
    C("supertype-still-inherited", "supertype removed", "redundant interface dropped",
      {"S": "public class S implements Runnable { public void run() {} }",
       "C": "public class C extends S implements Runnable { }"},
      {"C": "public class C extends S { }"},
      "Runnable r = new C();\nr.run();"),
    B("type-variable-removed", "type variable removed", "generic class loses its type parameter",
      {"C": "public class C<A> { }"}, {"C": "public class C { }"},
      "C<String> c = new C<String>();"),
    C("type-variable-renamed", "type variable removed", "type parameter renamed",
      {"C": "public class C<A> { public A get() { return null; } }"},
      {"C": "public class C<B> { public B get() { return null; } }"},
      "C<String> c = new C<String>();\nString s = c.get();"),
    B("type-variable-added", "type variable added", "generic class gains a second type parameter",
      {"C": "public class C<A> { }"}, {"C": "public class C<A, B> { }"},
      "C<String> c = new C<String>();"),
    C("type-generified", "type variable added", "raw class becomes generic",
      {"C": "public class C { }"}, {"C": "public class C<A> { }"},
      "C c = new C();"),
    B("type-variable-changed", "type variable changed", "type parameter gains a bound",
      {"C": "public class C<A> { }"}, {"C": "public class C<A extends Number> { }"},
      "C<String> c = new C<String>();"),
    C("type-variable-bound-relaxed", "type variable changed", "type parameter bound removed",
      {"C": "public class C<A extends Number> { }"}, {"C": "public class C<A> { }"},
      "C<Integer> c = new C<Integer>();"),
    B("type-now-final", "type now final", "extensible class becomes final",
      {"C": "public class C { }"}, {"C": "public final class C { }"},
      "new D();", extra="class D extends C { }"),
    C("type-effectively-final-now-final", "type now final", "class without visible constructors becomes final",
      {"C": "public class C { private C() {} public static C make() { return new C(); } }"},
      {"C": "public final class C { private C() {} public static C make() { return new C(); } }"},
      "C.make();"),
    B("type-now-abstract", "type now abstract", "concrete class becomes abstract",
      {"C": "public class C { }"}, {"C": "public abstract class C { }"},
      "new C();"),
    C("type-no-longer-abstract", "type now abstract", "abstract class becomes concrete",
      {"C": "public abstract class C { }"}, {"C": "public class C { }"},
      "new D();", extra="class D extends C { }"),
    B("nested-type-now-static", "nested type now static", "inner class becomes static",
      {"O": "public class O { public class I { } }"},
      {"O": "public class O { public static class I { } }"},
      "O o = new O();\nO.I i = o.new I();"),
    C("private-nested-type-now-static", "nested type now static", "private inner class becomes static",
      {"O": "public class O { private class I { } }"},
      {"O": "public class O { private static class I { } }"},
      "new O();"),
    B("nested-type-no-longer-static", "nested type no longer static", "static nested class becomes inner",
      {"O": "public class O { public static class I { } }"},
      {"O": "public class O { public class I { } }"},
      "new O.I();"),
    C("nested-interface-explicitly-static", "nested type no longer static", "nested interface gains a redundant static",
      {"O": "public class O { public interface J { } }"},
      {"O": "public class O { public static interface J { } }"},
      "O.J j = null;\nnew O();"),
    B("class-now-checked-exception", "class now checked exception", "unchecked exception becomes checked",
      {"E": "public class E extends RuntimeException { }"},
      {"E": "public class E extends Exception { }"},
      "Use.raise(false);\nUse.take(new E());",
      extra="class Use {\n    static void raise(boolean b) { if (b) throw new E(); }\n    static void take(RuntimeException e) { }\n}"),
    C("exception-now-unchecked", "class now checked exception", "checked exception becomes unchecked",
      {"E": "public class E extends Exception { }"},
      {"E": "public class E extends RuntimeException { }"},
      "try {\n    Main2.raise(false);\n} catch (E e) {\n}",
      extra="class Main2 { static void raise(boolean b) throws E { if (b) throw new E(); } }"),
    B("abstract-method-added", "abstract method added to type", "interface gains an abstract method",
      {"I": "public interface I { }"}, {"I": "public interface I { void m(); }"},
      "new K();", extra="class K implements I { }"),
    B("hidden-abstract-method", "abstract method added to type",
      "abstract method added to a package-private superclass of a public abstract class",
      {"A": "abstract class A { }",
       "B": "public abstract class B extends A { protected abstract void m(); }"},
      {"A": "abstract class A { protected abstract void n(); }"},
      "new K();", extra="class K extends B { protected void m() {} }", package="library"),
    C("default-method-added", "abstract method added to type", "interface gains a default method",
      {"I": "public interface I { }"}, {"I": "public interface I { default void m() {} }"},
      "new K();", extra="class K implements I { }"),
    C("abstract-method-added-to-final-hierarchy", "abstract method added to type",
      "abstract method added to a class nobody outside can extend",
      {"C": "public abstract class C { C() {} public static C make() { return new Impl(); } }",
       "Impl": "class Impl extends C { void h() {} }"},
      {"C": "public abstract class C { C() {} abstract void h(); public static C make() { return new Impl(); } }"},
      "C.make();"),
    # Executables
    B("method-removed", "executable removed", "public method deleted",
      {"C": "public class C { public void m() {} }"}, {"C": "public class C { }"},
      "new C().m();"),
    B("constructor-removed", "executable removed", "public constructor deleted",
      {"C": "public class C { public C() {} public C(int x) {} }"},
      {"C": "public class C { public C() {} }"},
      "new C(1);"),
    B("leaked-method-removed", "executable removed", "method inherited from a hidden superclass deleted",
      {"S": "class S { public void m() {} }", "C": "public class C extends S { }"},
      {"S": "class S { }"},
      "new C().m();"),
    C("method-pulled-up", "executable removed", "method moved to the superclass",
      {"S": "public class S { }", "C": "public class C extends S { public void m() {} }"},
      {"S": "public class S { public void m() {} }", "C": "public class C extends S { }"},
      "new C().m();"),
    C("protected-method-of-final-class-removed", "executable removed", "protected method of a final class deleted",
      {"C": "public final class C { protected void m() {} }"},
      {"C": "public final class C { }"},
      "new C();"),
    C("overload-added", "executable removed", "overload added next to an existing method",
      {"C": "public class C { public void m() {} }"},
      {"C": "public class C { public void m() {} public void m(int x) {} }"},
      "new C().m();"),
    B("method-now-protected", "executable now protected", "public method becomes protected",
      {"C": "public class C { public void m() {} }"},
      {"C": "public class C { protected void m() {} }"},
      "new C().m();"),
    B("constructor-now-protected", "executable now protected", "public constructor becomes protected",
      {"C": "public class C { public C() {} }"},
      {"C": "public class C { protected C() {} }"},
      "new C();"),
    C("method-now-public", "executable now protected", "protected method becomes public",
      {"C": "public class C { protected void m() {} }"},
      {"C": "public class C { public void m() {} }"},
      "new K().g();", extra="class K extends C { void g() { m(); } }"),
    B("checked-exception-removed", "executable checked exception removed", "method no longer throws a checked exception",
      {"C": "public class C { public void m() throws java.io.IOException {} }"},
      {"C": "public class C { public void m() {} }"},
      "try {\n    new C().m();\n} catch (java.io.IOException e) {\n}"),
    C("checked-exception-narrowed", "executable checked exception removed", "thrown exception narrowed to a subclass",
      {"C": "public class C { public void m() throws java.io.IOException {} }"},
      {"C": "public class C { public void m() throws java.io.FileNotFoundException {} }"},
      "try {\n    new C().m();\n} catch (java.io.IOException e) {\n}"),
    B("checked-exception-added", "executable checked exception added", "method now throws a checked exception",
      {"C": "public class C { public void m() {} }"},
      {"C": "public class C { public void m() throws java.io.IOException {} }"},
      "new C().m();"),
    B("constructor-checked-exception-added", "executable checked exception added", "constructor now throws a checked exception",
      {"C": "public class C { public C() {} }"},
      {"C": "public class C { public C() throws Exception {} }"},
      "new C();"),
    C("unchecked-exception-added", "executable checked exception added", "method declares an unchecked exception",
      {"C": "public class C { public void m() {} }"},
      {"C": "public class C { public void m() throws IllegalStateException {} }"},
      "new C().m();"),
    B("parameter-generics-changed", "executable parameter generics changed", "parameterized parameter becomes raw",
      {"C": "public class C { public void m(java.util.List<String> l) {} }"},
      {"C": "public class C { public void m(java.util.List l) {} }"},
      "new K().m(new java.util.ArrayList<String>());",
      extra="class K extends C { public void m(java.util.List<String> l) {} }"),
    C("parameter-renamed", "executable parameter generics changed", "parameter renamed",
      {"C": "public class C { public void m(java.util.List<String> l) {} }"},
      {"C": "public class C { public void m(java.util.List<String> list) {} }"},
      "new K().m(new java.util.ArrayList<String>());",
      extra="class K extends C { public void m(java.util.List<String> l) {} }"),
    B("method-type-variable-removed", "executable type variable removed", "generic method loses its type parameter",
      {"C": "public class C { public <T> void m(java.util.List<T> l) {} }"},
      {"C": "public class C { public void m(java.util.List<?> l) {} }"},
      "new K().m(new java.util.ArrayList<String>());",
      extra="class K extends C { public <T> void m(java.util.List<T> l) {} }"),
    C("constructor-type-variable-removed", "executable type variable removed", "constructor loses its only type parameter",
      {"C": "public class C { public <T> C(T t) {} }"},
      {"C": "public class C { public C(Object t) {} }"},
      "new C(\"x\");\nnew K();",
      extra="class K extends C { K() { super(\"x\"); } }"),
    B("method-type-variable-added", "executable type variable added", "generic method gains a second type parameter",
      {"C": "public class C { public <T> void m() {} }"},
      {"C": "public class C { public <T, U> void m() {} }"},
      "new C().<String>m();"),
    C("method-generified", "executable type variable added", "method becomes generic",
      {"C": "public class C { public void m(Object o) {} }"},
      {"C": "public class C { public <T> void m(T o) {} }"},
      "new C().m(\"x\");\nnew K().m(\"y\");",
      extra="class K extends C { public void m(Object o) {} }"),
    B("method-type-variable-changed", "executable type variable changed", "method type parameter gains a bound",
      {"C": "public class C { public <T> void m(java.util.List<T> l) {} }"},
      {"C": "public class C { public <T extends Number> void m(java.util.List<T> l) {} }"},
      "new C().m(new java.util.ArrayList<String>());"),
    C("method-type-variable-relaxed", "executable type variable changed", "method type parameter bound removed",
      {"C": "public class C { public <T extends Number> void m(java.util.List<T> l) {} }"},
      {"C": "public class C { public <T> void m(java.util.List<T> l) {} }"},
      "new C().m(new java.util.ArrayList<Integer>());"),
    # Methods
    B("method-now-final", "method now final", "overridable method becomes final",
      {"C": "public class C { public void m() {} }"},
      {"C": "public class C { public final void m() {} }"},
      "new K().m();", extra="class K extends C { public void m() {} }"),
    C("method-of-final-class-now-final", "method now final", "method of a final class becomes final",
      {"C": "public final class C { public void m() {} }"},
      {"C": "public final class C { public final void m() {} }"},
      "new C().m();"),
    B("method-now-static", "method now static", "instance method becomes static",
      {"C": "public class C { public void m() {} }"},
      {"C": "public class C { public static void m() {} }"},
      "new C().m();"),
    C("private-method-now-static", "method now static", "private helper becomes static",
      {"C": "public class C { public void m() { h(); } private void h() {} }"},
      {"C": "public class C { public void m() { h(); } private static void h() {} }"},
      "new C().m();"),
    B("method-no-longer-static", "method no longer static", "static method becomes an instance method",
      {"C": "public class C { public static void m() {} }"},
      {"C": "public class C { public void m() {} }"},
      "C.m();"),
    C("private-method-no-longer-static", "method no longer static", "private static helper becomes an instance method",
      {"C": "public class C { public void m() { h(); } private static void h() {} }"},
      {"C": "public class C { public void m() { h(); } private void h() {} }"},
      "new C().m();"),
    B("method-now-abstract", "method now abstract", "concrete method becomes abstract",
      {"C": "public abstract class C { public void m() {} }"},
      {"C": "public abstract class C { public abstract void m(); }"},
      "new K().m();", extra="class K extends C { }"),
    C("hidden-method-now-abstract", "method now abstract", "package-private method becomes abstract",
      {"C": "public abstract class C { C() {} void h() {} public static C make() { return new Impl(); } }",
       "Impl": "class Impl extends C { void h() {} }"},
      {"C": "public abstract class C { C() {} abstract void h(); public static C make() { return new Impl(); } }"},
      "C.make();"),
    B("return-type-changed", "method return type changed", "return type widened from int to long",
      {"C": "public class C { public int m() { return 0; } }"},
      {"C": "public class C { public long m() { return 0; } }"},
      "int x = new C().m();"),
    C("return-type-variable-renamed", "method return type changed", "return type variable renamed",
      {"C": "public class C { public <T> T m(T t) { return t; } }"},
      {"C": "public class C { public <U> U m(U u) { return u; } }"},
      "String s = new C().m(\"x\");"),
    # Fields
    B("field-removed", "field removed", "public field deleted",
      {"C": "public class C { public int f; }"}, {"C": "public class C { }"},
      "int x = new C().f;"),
    C("field-pulled-up", "field removed", "field moved to the superclass",
      {"S": "public class S { }", "C": "public class C extends S { public int f; }"},
      {"S": "public class S { public int f; }", "C": "public class C extends S { }"},
      "int x = new C().f;"),
    B("field-now-protected", "field now protected", "public field becomes protected",
      {"C": "public class C { public int f; }"}, {"C": "public class C { protected int f; }"},
      "int x = new C().f;"),
    C("field-now-public", "field now protected", "protected field becomes public",
      {"C": "public class C { protected int f; }"}, {"C": "public class C { public int f; }"},
      "new K().g();", extra="class K extends C { int g() { return f; } }"),
    B("field-now-final", "field now final", "mutable field becomes final",
      {"C": "public class C { public int f; }"},
      {"C": "public class C { public final int f; public C() { f = 0; } }"},
      "new C().f = 1;"),
    C("field-no-longer-final", "field now final", "final field becomes mutable",
      {"C": "public class C { public final int f; public C() { f = 0; } }"},
      {"C": "public class C { public int f; public C() { f = 0; } }"},
      "int x = new C().f;"),
    B("field-now-static", "field now static", "instance field becomes static",
      {"C": "public class C { public int f; }"}, {"C": "public class C { public static int f; }"},
      "int x = new C().f;"),
    C("private-field-now-static", "field now static", "private field becomes static",
      {"C": "public class C { private int f; public int get() { return f; } }"},
      {"C": "public class C { private static int f; public int get() { return f; } }"},
      "int x = new C().get();"),
    B("field-no-longer-static", "field no longer static", "static field becomes an instance field",
      {"C": "public class C { public static int f; }"}, {"C": "public class C { public int f; }"},
      "int x = C.f;"),
    C("private-field-no-longer-static", "field no longer static", "private static field becomes an instance field",
      {"C": "public class C { private static int f; public int get() { return f; } }"},
      {"C": "public class C { private int f; public int get() { return f; } }"},
      "int x = new C().get();"),
    B("field-type-changed", "field type changed", "field type widened from int to long",
      {"C": "public class C { public int f; }"}, {"C": "public class C { public long f; }"},
      "int x = new C().f;"),
    C("field-type-variable-renamed", "field type changed", "type variable of a field type renamed",
      {"C": "public class C<T> { public T f; }"}, {"C": "public class C<U> { public U f; }"},
      "C<String> c = new C<String>();\nString s = c.f;"),
]


def write_tree(root: Path, files: Dict[str, str]):
    for rel, text in files.items():
        p = root / rel
        p.parent.mkdir(parents=True, exist_ok=True)
        p.write_text(text)


def compile_tree(src: Path, out: Path, classpath: Optional[Path] = None) -> subprocess.CompletedProcess:
    out.mkdir(parents=True, exist_ok=True)
    cmd = [java_bin(), "-jar", ECJ, "-17", "-nowarn", "-d", str(out)]
    if classpath:
        cmd += ["-cp", str(classpath)]
    cmd.append(str(src))
    return subprocess.run(cmd, capture_output=True, text=True)


def label(case_dir: Path) -> dict:
    """Runs the compile/link oracle over one case directory."""
    with tempfile.TemporaryDirectory() as tmp:
        tmp = Path(tmp)
        for v in ("v1", "v2"):
            r = compile_tree(case_dir / v, tmp / v)
            if r.returncode != 0:
                raise RuntimeError(f"{case_dir.name}: {v} does not compile\n{r.stdout}{r.stderr}")
        r = compile_tree(case_dir / "client", tmp / "client", tmp / "v1")
        if r.returncode != 0:
            raise RuntimeError(f"{case_dir.name}: client does not compile against v1\n{r.stdout}{r.stderr}")

        def run(lib: str) -> subprocess.CompletedProcess:
            cp = os.pathsep.join([str(tmp / "client"), str(tmp / lib)])
            return subprocess.run([java_bin(), "-cp", cp, "client.Main"], capture_output=True, text=True)

        r = run("v1")
        if r.returncode != 0:
            raise RuntimeError(f"{case_dir.name}: client fails against v1\n{r.stderr}")
        source = compile_tree(case_dir / "client", tmp / "client-v2", tmp / "v2").returncode != 0
        binary = run("v2").returncode != 0
        return {"sourceBreaking": source, "binaryBreaking": binary}


def manifest(case: Case, labels: dict) -> dict:
    m = {"id": case.id, "description": case.description, **labels}
    if case.expected:
        m["expectedKind"] = case.expected
    if case.counterpart:
        m["counterpartOf"] = case.counterpart
    return m


# Changes whose real effect differs from the static flags of the kind the
# rules assign. Labelled by the same oracle, scored apart from the corpus.
DIVERGENCES = [
    B("return-type-argument-changed", "method return type changed",
      "return type argument changed; the erasure and so the descriptor stay the same",
      {"C": "public class C { public java.util.List<String> m() { return null; } }"},
      {"C": "public class C { public java.util.List<Integer> m() { return null; } }"},
      "java.util.List<String> l = new C().m();", group="divergences"),
    B("type-now-protected-explicit-constructor", "type now protected",
      "nested class becomes protected but keeps a public constructor",
      {"O": "public class O { public static class N { public N() {} } }"},
      {"O": "public class O { protected static class N { public N() {} } }"},
      "new O.N();", group="divergences"),
    B("method-type-variable-removed-from-return", "executable type variable removed",
      "generic return type replaced by its erasure",
      {"C": "public class C { public <T> T m(Class<T> c) { return null; } }"},
      {"C": "public class C { public Object m(Class<?> c) { return null; } }"},
      "String s = new C().m(String.class);", group="divergences"),
]


def generate(out: Path):
    groups = {"cases": out, "divergences": out.parent / "divergences"}
    for d in groups.values():
        if d.exists():
            shutil.rmtree(d)
    work = []
    for case in CASES + DIVERGENCES:
        d = groups[case.group] / case.id
        write_tree(d / "v1", case.tree(1))
        write_tree(d / "v2", case.tree(2))
        write_tree(d / "client", {"client/Main.java": case.client()})
        work.append((case, d))
    with ThreadPoolExecutor(max_workers=os.cpu_count()) as pool:
        labels = list(pool.map(lambda w: label(w[1]), work))
    for (case, d), l in zip(work, labels):
        (d / "case.json").write_text(json.dumps(manifest(case, l), indent=2) + "\n")
        print(f"{case.group:11} {case.id:45} source={l['sourceBreaking']!s:5} binary={l['binaryBreaking']!s:5}")


def check(out: Path) -> int:
    dirs = sorted(
        p for root in (out, out.parent / "divergences") if root.is_dir()
        for p in root.iterdir() if (p / "case.json").is_file()
    )
    with ThreadPoolExecutor(max_workers=os.cpu_count()) as pool:
        labels = list(pool.map(label, dirs))
    bad = 0
    for d, l in zip(dirs, labels):
        stored = json.loads((d / "case.json").read_text())
        ok = all(stored[k] == v for k, v in l.items())
        bad += not ok
        print(f"{'ok  ' if ok else 'DIFF'} {d.parent.name}/{d.name:45} {l}")
    return 1 if bad else 0


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("mode", choices=["generate", "check"])
    ap.add_argument("--out", type=Path, default=ROOT / "benchmark" / "cases")
    args = ap.parse_args()
    if args.mode == "generate":
        generate(args.out)
    else:
        sys.exit(check(args.out))


if __name__ == "__main__":
    main()
