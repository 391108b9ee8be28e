//! Regenerates `data/jdk-api.zip` from a jar of JDK class files.
//!
//! Usage: cargo run --example gen_jdk_model -- <jdk-classes.jar> <out.zip>

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::io::Write;
use std::path::Path;

use apishift::bytecode::read_binaries;
use apishift::model::{ApiFilter, QualifiedName, TypeDecl, Visibility};
use apishift::report::{ModelDocument, SCHEMA, SCHEMA_VERSION};

fn exported(decl: &TypeDecl, all: &HashMap<QualifiedName, TypeDecl>) -> bool {
    let visible = match &decl.enclosing_type {
        None => decl.visibility == Visibility::Public,
        Some(outer) => {
            decl.visibility.is_visible_outside_package()
                && all.get(outer).is_some_and(|o| exported(o, all))
        }
    };
    visible
}

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let [_, jar, out] = args.as_slice() else {
        eprintln!("usage: gen_jdk_model <jdk-classes.jar> <out.zip>");
        std::process::exit(2);
    };
    let set = read_binaries(Path::new(jar)).expect("readable jar");
    for d in &set.diagnostics {
        eprintln!("warning: {d}");
    }
    let all: HashMap<QualifiedName, TypeDecl> =
        set.decls.into_iter().map(|d| (d.id.clone(), d)).collect();

    // Keep exported types and every library type reachable from them as a supertype.
    let mut keep: BTreeSet<QualifiedName> = BTreeSet::new();
    let mut stack: Vec<QualifiedName> = all
        .values()
        .filter(|d| exported(d, &all))
        .map(|d| d.id.clone())
        .collect();
    while let Some(name) = stack.pop() {
        if !keep.insert(name.clone()) {
            continue;
        }
        let Some(decl) = all.get(&name) else { continue };
        for sup in decl.direct_supertypes() {
            if let Some(n) = sup.declared_name() {
                if all.contains_key(n.qualified_name()) {
                    stack.push(n.qualified_name().clone());
                }
            }
        }
        if let Some(outer) = &decl.enclosing_type {
            stack.push(outer.clone());
        }
    }

    let mut symbols = BTreeMap::new();
    for name in keep {
        let mut decl = all[&name].clone();
        // Annotations on members are irrelevant for resolution; drop them to save space.
        decl.methods.iter_mut().for_each(|m| m.annotations.clear());
        decl.constructors.iter_mut().for_each(|m| m.annotations.clear());
        decl.fields.iter_mut().for_each(|f| f.annotations.clear());
        decl.methods.iter_mut().chain(decl.constructors.iter_mut()).for_each(|m| {
            m.params.iter_mut().for_each(|p| p.name.clear());
        });
        symbols.insert(name, decl);
    }
    let doc = ModelDocument {
        schema: SCHEMA.to_owned(),
        schema_version: SCHEMA_VERSION,
        filter: ApiFilter::default(),
        symbols,
    };
    let text = serde_json::to_string(&doc).expect("serializable");
    let file = std::fs::File::create(out).expect("writable output");
    let mut zip = zip::ZipWriter::new(file);
    let options = zip::write::SimpleFileOptions::default()
        .compression_method(zip::CompressionMethod::Deflated)
        .last_modified_time(zip::DateTime::default());
    zip.start_file("jdk-api.json", options).expect("zip entry");
    zip.write_all(text.as_bytes()).expect("zip write");
    zip.finish().expect("zip finish");
    eprintln!("wrote {} types to {out}", doc.symbols.len());
}
