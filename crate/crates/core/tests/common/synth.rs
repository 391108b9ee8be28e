//! Deterministic synthetic Java library used for scale tests.
//!
//! The output compiles with a Java 17 compiler; `fixtures/synthetic/` holds
//! the compiled archive of `library(SEED, TARGET_LOC)`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const SEED: u64 = 0x5EED_0050;
pub const TARGET_LOC: usize = 50_000;
const PER_PACKAGE: usize = 24;

#[derive(Clone, Copy, PartialEq, Eq)]
enum Kind {
    Class,
    Interface,
    Enum,
}

#[derive(Clone)]
struct Ty {
    pkg: usize,
    name: String,
    kind: Kind,
    generic: bool,
}

impl Ty {
    fn qualified(&self) -> String {
        format!("gen.p{}.{}", self.pkg, self.name)
    }

    /// How another declaration refers to this type.
    fn use_site(&self) -> String {
        if self.generic {
            format!("{}<String>", self.name)
        } else {
            self.name.clone()
        }
    }
}

struct Gen {
    rng: ChaCha8Rng,
    types: Vec<Ty>,
}

impl Gen {
    fn pick(&mut self, kind: Kind) -> Option<Ty> {
        let candidates: Vec<&Ty> = self.types.iter().filter(|t| t.kind == kind).collect();
        candidates.choose(&mut self.rng).map(|t| (*t).clone())
    }

    fn unit(&mut self, pkg: usize, body: &str, refs: &[Ty]) -> String {
        let mut imports: BTreeSet<String> = BTreeSet::new();
        for r in refs {
            if r.pkg != pkg {
                imports.insert(r.qualified());
            }
        }
        let mut out = format!("package gen.p{pkg};\n\n");
        out.push_str("import java.io.IOException;\nimport java.io.Serializable;\nimport java.util.*;\n");
        for i in &imports {
            writeln!(out, "import {i};").unwrap();
        }
        out.push('\n');
        out.push_str(body);
        out
    }

    fn class(&mut self, ty: &Ty) -> String {
        let rng = &mut self.rng;
        let mut refs = Vec::new();
        let sup = if rng.gen_bool(0.5) { self.pick(Kind::Class) } else { None };
        let mut ifaces = Vec::new();
        for _ in 0..self.rng.gen_range(0..3) {
            if let Some(i) = self.pick(Kind::Interface) {
                if !ifaces.iter().any(|x: &Ty| x.name == i.name) {
                    ifaces.push(i);
                }
            }
        }
        let link = self.pick(Kind::Class);
        let rng = &mut self.rng;

        let name = &ty.name;
        let mut s = String::new();
        writeln!(s, "/**\n * Generated class {name}.\n */").unwrap();
        let params = if ty.generic { "<E extends Comparable<E>>" } else { "" };
        write!(s, "public class {name}{params}").unwrap();
        if let Some(sup) = &sup {
            write!(s, " extends {}", sup.use_site()).unwrap();
            refs.push(sup.clone());
        }
        let mut implemented: Vec<String> = ifaces.iter().map(|i| i.name.clone()).collect();
        if rng.gen_bool(0.3) {
            implemented.push("Serializable".into());
        }
        if !implemented.is_empty() {
            write!(s, " implements {}", implemented.join(", ")).unwrap();
        }
        refs.extend(ifaces.iter().cloned());
        s.push_str(" {\n");

        for j in 0..rng.gen_range(1..4) {
            writeln!(s, "    public static final int K{j} = {};", rng.gen_range(0..1000)).unwrap();
        }
        writeln!(s, "    protected List<String> names = new ArrayList<>();").unwrap();
        writeln!(s, "    private final Map<String, Integer> counts = new HashMap<>();").unwrap();
        if ty.generic {
            writeln!(s, "    protected E current;").unwrap();
        }
        if let Some(l) = &link {
            writeln!(s, "    public {} peer;", l.use_site()).unwrap();
            refs.push(l.clone());
        }
        s.push('\n');
        writeln!(s, "    public {name}() {{\n        super();\n    }}\n").unwrap();
        writeln!(
            s,
            "    protected {name}(int seed) throws IOException {{\n        this();\n        if (seed < 0) {{\n            throw new IOException(\"negative seed \" + seed);\n        }}\n        counts.put(\"seed\", seed);\n    }}\n"
        )
        .unwrap();
        writeln!(
            s,
            "    public String describe() {{\n        return \"{name}\" + names.size();\n    }}\n"
        )
        .unwrap();

        let suffix = name.to_lowercase();
        for j in 0..rng.gen_range(4..9) {
            let m = format!("{suffix}_{j}");
            match rng.gen_range(0..8) {
                0 => writeln!(
                    s,
                    "    public int sum{m}(int[] xs) {{\n        int acc = 0;\n        for (int x : xs) {{\n            acc += x;\n        }}\n        return acc;\n    }}\n"
                ),
                1 => writeln!(
                    s,
                    "    /** Largest element, or null. */\n    public <R extends Comparable<R>> R max{m}(Collection<? extends R> xs) {{\n        R best = null;\n        for (R x : xs) {{\n            if (best == null || x.compareTo(best) > 0) {{\n                best = x;\n            }}\n        }}\n        return best;\n    }}\n"
                ),
                2 => writeln!(
                    s,
                    "    protected static List<String> split{m}(String... parts) throws IOException {{\n        List<String> out = new ArrayList<>();\n        for (String p : parts) {{\n            if (p == null) {{\n                throw new IOException(\"null part\");\n            }}\n            out.add(p.trim());\n        }}\n        return out;\n    }}\n"
                ),
                3 => writeln!(
                    s,
                    "    public Comparator<String> order{m}() {{\n        return (a, b) -> {{\n            int d = a.length() - b.length();\n            return d != 0 ? d : a.compareTo(b);\n        }};\n    }}\n"
                ),
                4 if link.is_some() => {
                    let l = link.as_ref().unwrap().use_site();
                    writeln!(
                        s,
                        "    public {l} link{m}({l} other, boolean keep) {{\n        if (keep) {{\n            peer = other;\n        }}\n        return peer;\n    }}\n"
                    )
                }
                5 if ty.generic => writeln!(
                    s,
                    "    public E first{m}(List<E> xs) {{\n        current = xs.isEmpty() ? null : xs.get(0);\n        return current;\n    }}\n"
                ),
                6 => writeln!(
                    s,
                    "    @Deprecated\n    public synchronized void reset{m}() {{\n        names.clear();\n        counts.clear();\n    }}\n"
                ),
                _ => writeln!(
                    s,
                    "    public final Map<String, List<Integer>> index{m}(Iterable<String> words) {{\n        Map<String, List<Integer>> out = new TreeMap<>();\n        int i = 0;\n        for (String w : words) {{\n            out.computeIfAbsent(w, k -> new ArrayList<>()).add(i++);\n        }}\n        return out;\n    }}\n"
                ),
            }
            .unwrap();
        }

        if rng.gen_bool(0.35) {
            writeln!(
                s,
                "    public static class Builder {{\n        private int total;\n\n        public Builder add(int k) {{\n            total += k;\n            return this;\n        }}\n\n        public int build() {{\n            return total;\n        }}\n    }}\n"
            )
            .unwrap();
        }
        if rng.gen_bool(0.2) {
            writeln!(s, "    protected enum Mode {{\n        FAST,\n        SAFE\n    }}\n").unwrap();
        }
        s.push_str("}\n");
        self.unit(ty.pkg, &s, &refs)
    }

    fn interface(&mut self, ty: &Ty) -> String {
        let parent = if self.rng.gen_bool(0.4) { self.pick(Kind::Interface) } else { None };
        let name = &ty.name;
        let suffix = name.to_lowercase();
        let mut s = format!("/** Generated interface {name}. */\npublic interface {name}");
        if let Some(p) = &parent {
            write!(s, " extends {}", p.name).unwrap();
        }
        writeln!(s, " {{\n    int LIMIT_{suffix} = {};\n", self.rng.gen_range(1..100)).unwrap();
        writeln!(s, "    String describe();\n").unwrap();
        writeln!(
            s,
            "    default <V> V pick{suffix}(List<V> xs) {{\n        return xs.isEmpty() ? null : xs.get(0);\n    }}\n"
        )
        .unwrap();
        writeln!(s, "    static {name} named{suffix}(String n) {{\n        return () -> n;\n    }}\n}}").unwrap();
        let refs: Vec<Ty> = parent.into_iter().collect();
        self.unit(ty.pkg, &s, &refs)
    }

    fn enumeration(&mut self, ty: &Ty) -> String {
        let iface = self.pick(Kind::Interface);
        let name = &ty.name;
        let mut s = format!("/** Generated enum {name}. */\npublic enum {name}");
        if let Some(i) = &iface {
            write!(s, " implements {}", i.name).unwrap();
        }
        s.push_str(" {\n    ALPHA,\n    BETA,\n    GAMMA;\n\n");
        writeln!(s, "    public String describe() {{\n        return name().toLowerCase();\n    }}\n").unwrap();
        writeln!(
            s,
            "    public static {name} parse(String s) {{\n        for ({name} e : values()) {{\n            if (e.name().equalsIgnoreCase(s)) {{\n                return e;\n            }}\n        }}\n        throw new IllegalArgumentException(s);\n    }}\n}}"
        )
        .unwrap();
        let refs: Vec<Ty> = iface.into_iter().collect();
        self.unit(ty.pkg, &s, &refs)
    }
}

/// Non-blank lines across all files.
pub fn loc(files: &BTreeMap<String, String>) -> usize {
    files.values().map(|t| t.lines().filter(|l| !l.trim().is_empty()).count()).sum()
}

/// Generates a library of at least `target_loc` non-blank lines, keyed by
/// relative path.
pub fn library(seed: u64, target_loc: usize) -> BTreeMap<String, String> {
    let mut g = Gen {
        rng: ChaCha8Rng::seed_from_u64(seed),
        types: Vec::new(),
    };
    let mut files = BTreeMap::new();
    let mut lines = 0;
    let mut i = 0;
    while lines < target_loc {
        let pkg = i / PER_PACKAGE;
        let roll = g.rng.gen_range(0..10);
        let (kind, prefix) = match roll {
            0 | 1 => (Kind::Interface, "I"),
            2 => (Kind::Enum, "E"),
            _ => (Kind::Class, "C"),
        };
        let ty = Ty {
            pkg,
            name: format!("{prefix}{i}"),
            kind,
            generic: kind == Kind::Class && g.rng.gen_bool(0.3),
        };
        let text = match kind {
            Kind::Class => g.class(&ty),
            Kind::Interface => g.interface(&ty),
            Kind::Enum => g.enumeration(&ty),
        };
        if i % 10 == 9 {
            let helper = format!(
                "package gen.p{pkg};\n\nfinal class Helper{i} {{\n    static int twice(int x) {{\n        return 2 * x;\n    }}\n}}\n"
            );
            lines += helper.lines().filter(|l| !l.trim().is_empty()).count();
            files.insert(format!("gen/p{pkg}/Helper{i}.java"), helper);
        }
        lines += text.lines().filter(|l| !l.trim().is_empty()).count();
        files.insert(format!("gen/p{pkg}/{}.java", ty.name), text);
        g.types.push(ty);
        i += 1;
    }
    files
}

pub fn write_tree(root: &std::path::Path, files: &BTreeMap<String, String>) -> std::io::Result<()> {
    for (path, text) in files {
        let p = root.join(path);
        std::fs::create_dir_all(p.parent().unwrap())?;
        std::fs::write(p, text)?;
    }
    Ok(())
}
