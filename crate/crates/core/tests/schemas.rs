//! Keeps the published JSON schemas in step with what the crate writes.

use std::collections::BTreeSet;
use std::path::PathBuf;

use apishift::diff::BcKind;
use apishift::model::{ApiFilter, Classpath};
use apishift::report::{serialize_model, DiffReport, Format};
use apishift::source::{model_from_units, parse_files};
use serde_json::Value;

fn schema(name: &str) -> Value {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../schemas").join(name);
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

fn strings(v: &Value) -> BTreeSet<String> {
    v.as_array().unwrap().iter().map(|s| s.as_str().unwrap().to_string()).collect()
}

fn keys(v: &Value) -> BTreeSet<String> {
    v.as_object().unwrap().keys().cloned().collect()
}

#[test]
fn report_kind_enum_lists_every_rule() {
    let s = schema("diff-report.schema.json");
    let phrases: BTreeSet<String> = BcKind::ALL.iter().map(|k| k.phrase().to_string()).collect();
    assert_eq!(strings(&s["$defs"]["kind"]["enum"]), phrases);
}

#[test]
fn report_keys_match_the_schema() {
    let s = schema("diff-report.schema.json");
    let src = |body: &str| vec![("p/A.java".to_string(), format!("package p; public class A {{ {body} }}").into_bytes())];
    let model = |body| model_from_units(parse_files(src(body)).unwrap(), ApiFilter::default(), Classpath::standard()).unwrap();
    let changes = apishift::diff::diff(&model("public int f; public void m() {}"), &model("public final int f;"));
    let report: Value = serde_json::from_str(&DiffReport::new("v1", "v2", changes).render(Format::Json)).unwrap();
    assert_eq!(keys(&report), strings(&s["required"]));
    let change = &report["changes"][0];
    assert_eq!(keys(change), strings(&s["$defs"]["change"]["required"]));
    assert_eq!(keys(&report["summary"]), strings(&s["properties"]["summary"]["required"]));
}

#[test]
fn model_keys_are_declared_in_the_schema() {
    let s = schema("api-model.schema.json");
    let text = "package p; import java.util.List; \
        public class A<T extends Number> { public static final int F = 1; \
        protected A(int x) {} public <U> List<? super U> m(T[] a, String... rest) throws Exception { return null; } \
        public static class N {} }";
    let files = vec![("p/A.java".to_string(), text.as_bytes().to_vec())];
    let m = model_from_units(parse_files(files).unwrap(), ApiFilter::default(), Classpath::standard()).unwrap();
    let doc: Value = serde_json::from_str(&serialize_model(&m)).unwrap();
    assert!(keys(&doc).is_subset(&keys(&s["properties"])));
    assert_eq!(doc["schema"], s["properties"]["schema"]["const"]);
    let decl = &s["$defs"]["typeDecl"]["properties"];
    let field = &s["$defs"]["field"]["properties"];
    let exec = &s["$defs"]["executable"]["properties"];
    for t in doc["symbols"].as_object().unwrap().values() {
        assert!(keys(t).is_subset(&keys(decl)), "{t}");
        for f in t["fields"].as_array().into_iter().flatten() {
            assert!(keys(f).is_subset(&keys(field)), "{f}");
        }
        for e in ["methods", "constructors"].iter().flat_map(|k| t[k].as_array().into_iter().flatten()) {
            assert!(keys(e).is_subset(&keys(exec)), "{e}");
        }
    }
}
