//! Small random Java projects and random edits to them, for checking
//! incremental updates against full re-extraction.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write;

use rand::seq::SliceRandom;
use rand::Rng;

const PACKAGES: [&str; 3] = ["a", "a.b", "c"];
/// Some names collide with `java.util` types on purpose: a same-package type
/// shadows the on-demand import, so adding or deleting one rebinds others.
const NAMES: [&str; 10] = ["Node", "List", "Shape", "Map", "Util", "Entry", "Box", "Tree", "Set", "Pair"];

const JAVA_UTIL: [&str; 3] = ["List", "Map", "Set"];

#[derive(Clone, Debug)]
enum Ty {
    Int,
    Str,
    ListOf(Box<Ty>),
    Project(usize),
}

#[derive(Clone, Debug)]
struct Member {
    name: String,
    method: bool,
    ret: Ty,
    params: Vec<Ty>,
    is_static: bool,
    is_final: bool,
    public: bool,
}

#[derive(Clone, Debug)]
struct TypeSpec {
    id: usize,
    pkg: &'static str,
    name: String,
    interface: bool,
    public: bool,
    is_final: bool,
    sup: Option<usize>,
    ifaces: Vec<usize>,
    members: Vec<Member>,
    nested: bool,
    wildcard_imports: bool,
    padding: usize,
}

/// A project: live type declarations plus the names of every type ever
/// created, so references to deleted types render as dangling names.
#[derive(Clone, Debug, Default)]
pub struct Project {
    types: BTreeMap<usize, TypeSpec>,
    names: BTreeMap<usize, (&'static str, String)>,
    next: usize,
}

impl Project {
    pub fn random(rng: &mut impl Rng, size: usize) -> Project {
        let mut p = Project::default();
        for _ in 0..size {
            p.add_type(rng);
        }
        p
    }

    pub fn len(&self) -> usize {
        self.types.len()
    }

    fn live(&self, interface: bool, below: usize) -> Vec<usize> {
        self.types
            .values()
            .filter(|t| t.interface == interface && t.id < below)
            .map(|t| t.id)
            .collect()
    }

    fn random_ty(&self, rng: &mut impl Rng, depth: u32) -> Ty {
        match rng.gen_range(0..5) {
            0 => Ty::Int,
            1 => Ty::Str,
            2 if depth < 2 => Ty::ListOf(Box::new(self.random_ty(rng, depth + 1))),
            _ => match self.names.keys().copied().collect::<Vec<_>>().choose(rng) {
                Some(&id) => Ty::Project(id),
                None => Ty::Str,
            },
        }
    }

    fn random_member(&self, rng: &mut impl Rng, interface: bool, n: usize) -> Member {
        let method = interface || rng.gen_bool(0.7);
        Member {
            name: format!("{}{n}", if method { "m" } else { "f" }),
            method,
            ret: self.random_ty(rng, 0),
            params: (0..rng.gen_range(0..3)).map(|_| self.random_ty(rng, 0)).collect(),
            is_static: !interface && rng.gen_bool(0.2),
            is_final: !interface && rng.gen_bool(0.2),
            public: interface || rng.gen_bool(0.8),
        }
    }

    fn fresh_name(&self, rng: &mut impl Rng, pkg: &str) -> String {
        // Names are never reused, so a reference to a deleted type stays
        // dangling and the hierarchy stays acyclic.
        let taken: BTreeSet<&str> = self
            .names
            .values()
            .filter(|(p, _)| *p == pkg)
            .map(|(_, n)| n.as_str())
            .collect();
        let free: Vec<&&str> = NAMES.iter().filter(|n| !taken.contains(**n)).collect();
        match free.choose(rng) {
            Some(n) => n.to_string(),
            None => format!("T{}", self.next),
        }
    }

    fn add_type(&mut self, rng: &mut impl Rng) {
        let id = self.next;
        self.next += 1;
        let pkg = *PACKAGES.choose(rng).unwrap();
        let name = self.fresh_name(rng, pkg);
        let interface = rng.gen_bool(0.25);
        let sup = if interface { None } else { self.live(false, id).choose(rng).copied() };
        let mut ifaces: Vec<usize> = self.live(true, id);
        ifaces.shuffle(rng);
        ifaces.truncate(rng.gen_range(0..2));
        self.names.insert(id, (pkg, name.clone()));
        let members = (0..rng.gen_range(0..4)).map(|n| self.random_member(rng, interface, n)).collect();
        self.types.insert(
            id,
            TypeSpec {
                id,
                pkg,
                name,
                interface,
                public: rng.gen_bool(0.85),
                is_final: !interface && rng.gen_bool(0.15),
                sup,
                ifaces,
                members,
                nested: rng.gen_bool(0.2),
                wildcard_imports: rng.gen_bool(0.5),
                padding: 0,
            },
        );
    }

    /// Applies one random edit and returns a short description of it.
    pub fn mutate(&mut self, rng: &mut impl Rng) -> String {
        let ids: Vec<usize> = self.types.keys().copied().collect();
        let Some(&id) = ids.choose(rng) else {
            self.add_type(rng);
            return "add type".into();
        };
        match rng.gen_range(0..12) {
            0 | 1 => {
                self.add_type(rng);
                "add type".into()
            }
            2 => {
                self.types.remove(&id);
                "delete type".into()
            }
            3 => {
                let t = &self.types[&id];
                let (interface, n) = (t.interface, t.members.len() + t.padding + 10);
                let m = self.random_member(rng, interface, n);
                self.types.get_mut(&id).unwrap().members.push(m);
                "add member".into()
            }
            4 => {
                let t = self.types.get_mut(&id).unwrap();
                if !t.members.is_empty() {
                    let i = rng.gen_range(0..t.members.len());
                    t.members.remove(i);
                }
                "remove member".into()
            }
            5 => {
                let ty = self.random_ty(rng, 0);
                let t = self.types.get_mut(&id).unwrap();
                if let Some(m) = t.members.choose_mut(rng) {
                    m.ret = ty;
                }
                "change member type".into()
            }
            6 => {
                let t = self.types.get_mut(&id).unwrap();
                if let Some(m) = t.members.choose_mut(rng) {
                    if !t.interface {
                        m.is_static = !m.is_static;
                        m.is_final = rng.gen_bool(0.5);
                    }
                    m.public = t.interface || !m.public;
                }
                "toggle member modifiers".into()
            }
            7 => {
                let interface = self.types[&id].interface;
                let sup = if interface { None } else { self.live(false, id).choose(rng).copied() };
                self.types.get_mut(&id).unwrap().sup = sup;
                "change superclass".into()
            }
            8 => {
                let t = self.types.get_mut(&id).unwrap();
                t.public = !t.public;
                t.is_final = !t.interface && rng.gen_bool(0.3);
                "toggle type modifiers".into()
            }
            9 => {
                let t = self.types.get_mut(&id).unwrap();
                t.wildcard_imports = !t.wildcard_imports;
                t.nested = rng.gen_bool(0.5);
                "change imports".into()
            }
            10 => {
                self.types.get_mut(&id).unwrap().padding += 1;
                "reformat".into()
            }
            _ => {
                let ifaces = self.live(true, id);
                let t = self.types.get_mut(&id).unwrap();
                t.ifaces = ifaces.choose(rng).copied().into_iter().collect();
                "change interfaces".into()
            }
        }
    }

    fn ty(&self, ty: &Ty, pkg: &str, imports: &mut BTreeSet<String>, wildcard: bool) -> String {
        match ty {
            Ty::Int => "int".into(),
            Ty::Str => "String".into(),
            Ty::ListOf(inner) => format!("List<{}>", self.boxed(inner, pkg, imports, wildcard)),
            Ty::Project(id) => {
                let (p, name) = &self.names[id];
                // Qualify names an import would make ambiguous or that a
                // same-package type would shadow.
                let clash = JAVA_UTIL.contains(&name.as_str())
                    || self.names.values().any(|(q, n)| q != p && n == name);
                if *p != pkg && clash {
                    return format!("{p}.{name}");
                }
                if *p != pkg {
                    imports.insert(if wildcard { format!("{p}.*") } else { format!("{p}.{name}") });
                }
                name.clone()
            }
        }
    }

    fn boxed(&self, ty: &Ty, pkg: &str, imports: &mut BTreeSet<String>, wildcard: bool) -> String {
        match ty {
            Ty::Int => "Integer".into(),
            other => self.ty(other, pkg, imports, wildcard),
        }
    }

    fn render(&self, t: &TypeSpec) -> String {
        let mut imports = BTreeSet::new();
        let w = t.wildcard_imports;
        let mut body = String::new();
        for _ in 0..t.padding {
            body.push_str("\n// edited\n");
        }
        if t.public {
            body.push_str("public ");
        }
        if t.is_final {
            body.push_str("final ");
        }
        write!(body, "{} {}", if t.interface { "interface" } else { "class" }, t.name).unwrap();
        if let Some(s) = t.sup {
            let name = self.ty(&Ty::Project(s), t.pkg, &mut imports, w);
            write!(body, " extends {name}").unwrap();
        }
        if !t.ifaces.is_empty() {
            let names: Vec<String> =
                t.ifaces.iter().map(|i| self.ty(&Ty::Project(*i), t.pkg, &mut imports, w)).collect();
            let kw = if t.interface { "extends" } else { "implements" };
            write!(body, " {kw} {}", names.join(", ")).unwrap();
        }
        body.push_str(" {\n");
        for m in &t.members {
            body.push_str("    ");
            if m.public {
                body.push_str("public ");
            }
            if m.is_static {
                body.push_str("static ");
            }
            if m.is_final {
                body.push_str("final ");
            }
            let ret = self.ty(&m.ret, t.pkg, &mut imports, w);
            if m.method {
                let params: Vec<String> = m
                    .params
                    .iter()
                    .enumerate()
                    .map(|(i, p)| format!("{} p{i}", self.ty(p, t.pkg, &mut imports, w)))
                    .collect();
                let tail = if t.interface { ";".to_string() } else { " { return null; }".to_string() };
                writeln!(body, "{ret} {}({}){tail}", m.name, params.join(", ")).unwrap();
            } else {
                writeln!(body, "{ret} {};", m.name).unwrap();
            }
        }
        if t.nested {
            body.push_str("    public static class Inner { protected int x; }\n");
        }
        body.push_str("}\n");

        let mut out = format!("package {};\n\nimport java.util.*;\n", t.pkg);
        for i in &imports {
            writeln!(out, "import {i};").unwrap();
        }
        out.push('\n');
        out + &body
    }

    /// Source files as `(relative path, bytes)`, sorted by path.
    pub fn files(&self) -> Vec<(String, Vec<u8>)> {
        self.types
            .values()
            .map(|t| {
                let path = format!("{}/{}.java", t.pkg.replace('.', "/"), t.name);
                (path, self.render(t).into_bytes())
            })
            .collect::<BTreeMap<_, _>>()
            .into_iter()
            .collect()
    }
}
