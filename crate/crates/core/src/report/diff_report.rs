use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::diff::{BcKind, BreakingChange};

pub const TOOL_VERSION: &str = concat!("apishift ", env!("CARGO_PKG_VERSION"));

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Summary {
    pub total: usize,
    pub binary_breaking: usize,
    pub source_breaking: usize,
    pub by_kind: BTreeMap<BcKind, usize>,
}

impl Summary {
    pub fn of(changes: &[BreakingChange]) -> Summary {
        let mut s = Summary {
            total: changes.len(),
            ..Summary::default()
        };
        for c in changes {
            s.binary_breaking += c.binary_breaking as usize;
            s.source_breaking += c.source_breaking as usize;
            *s.by_kind.entry(c.kind).or_default() += 1;
        }
        s
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct DiffReport {
    pub old_version_label: String,
    pub new_version_label: String,
    pub changes: Vec<BreakingChange>,
    pub summary: Summary,
    pub tool_version: String,
}

impl DiffReport {
    pub fn new(
        old_label: impl Into<String>,
        new_label: impl Into<String>,
        changes: Vec<BreakingChange>,
    ) -> DiffReport {
        DiffReport {
            old_version_label: old_label.into(),
            new_version_label: new_label.into(),
            summary: Summary::of(&changes),
            changes,
            tool_version: TOOL_VERSION.to_owned(),
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => render_json(self),
            Format::Csv => render_csv(&self.changes),
            Format::Html => render_html(self),
        }
    }

    pub fn parse_json(text: &str) -> serde_json::Result<DiffReport> {
        serde_json::from_str(text)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Format {
    Json,
    Csv,
    Html,
}

#[derive(Debug, thiserror::Error)]
#[error("unknown report format `{0}` (expected json, csv or html)")]
pub struct UnknownFormat(pub String);

impl FromStr for Format {
    type Err = UnknownFormat;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "html" => Ok(Format::Html),
            _ => Err(UnknownFormat(s.to_owned())),
        }
    }
}

fn render_json(report: &DiffReport) -> String {
    let mut text = serde_json::to_string_pretty(report).expect("reports always serialize");
    text.push('\n');
    text
}

pub const CSV_HEADER: [&str; 6] = ["symbol", "kind", "binary", "source", "file", "line"];

fn render_csv(changes: &[BreakingChange]) -> String {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    w.write_record(CSV_HEADER).expect("in-memory write");
    for c in changes {
        let line = c.location.line.map(|l| l.to_string()).unwrap_or_default();
        w.write_record([
            c.impacted_symbol.as_str(),
            c.kind.phrase(),
            if c.binary_breaking { "true" } else { "false" },
            if c.source_breaking { "true" } else { "false" },
            c.location.file.as_str(),
            line.as_str(),
        ])
        .expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("UTF-8 fields")
}

fn escape(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for ch in s.chars() {
        match ch {
            '&' => out.push_str("&amp;"),
            '<' => out.push_str("&lt;"),
            '>' => out.push_str("&gt;"),
            '"' => out.push_str("&quot;"),
            '\'' => out.push_str("&#39;"),
            c => out.push(c),
        }
    }
    out
}

const STYLE: &str = "body{font-family:sans-serif;margin:2em;color:#222}\
table{border-collapse:collapse;margin-bottom:1.5em}\
td,th{border:1px solid #ccc;padding:.25em .6em;text-align:left}\
th{background:#f3f3f3}code{font-size:.95em}.no{color:#999}";

fn render_html(report: &DiffReport) -> String {
    let mut by_kind: BTreeMap<BcKind, Vec<&BreakingChange>> = BTreeMap::new();
    for c in &report.changes {
        by_kind.entry(c.kind).or_default().push(c);
    }
    let title = format!(
        "Breaking changes: {} to {}",
        escape(&report.old_version_label),
        escape(&report.new_version_label)
    );
    let mut h = String::new();
    let _ = write!(
        h,
        "<!DOCTYPE html>\n<html lang=\"en\">\n<head>\n<meta charset=\"utf-8\">\n\
         <title>{title}</title>\n<style>{STYLE}</style>\n</head>\n<body>\n<h1>{title}</h1>\n"
    );
    let s = &report.summary;
    let _ = writeln!(
        h,
        "<p>{} changes, {} binary-breaking, {} source-breaking.</p>",
        s.total, s.binary_breaking, s.source_breaking
    );
    for (kind, changes) in &by_kind {
        let _ = writeln!(
            h,
            "<h2 id=\"{}\">{} ({})</h2>\n<table>\n<tr><th>Symbol</th><th>Binary</th><th>Source</th><th>Location</th></tr>",
            kind.phrase().replace(' ', "-"),
            escape(kind.phrase()),
            changes.len()
        );
        for c in changes {
            let flag = |b: bool| if b { "<td>breaking</td>" } else { "<td class=\"no\">compatible</td>" };
            let loc = match c.location.line {
                Some(l) => format!("{}:{l}", c.location.file),
                None => c.location.file.clone(),
            };
            let _ = writeln!(
                h,
                "<tr><td><code>{}</code></td>{}{}<td>{}</td></tr>",
                escape(c.impacted_symbol.as_str()),
                flag(c.binary_breaking),
                flag(c.source_breaking),
                escape(&loc)
            );
        }
        h.push_str("</table>\n");
    }
    let _ = write!(
        h,
        "<footer><small>{}</small></footer>\n</body>\n</html>\n",
        escape(&report.tool_version)
    );
    h
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{QualifiedName, SourceLocation};

    fn sample() -> DiffReport {
        let loc = |f: &str, l| SourceLocation::new(f, l);
        DiffReport::new(
            "1.0",
            "2.0",
            vec![
                BreakingChange::new(
                    BcKind::AbstractMethodAddedToType,
                    QualifiedName::new("library.B"),
                    loc("library/B.java", Some(1)),
                ),
                BreakingChange::new(
                    BcKind::MethodNowStatic,
                    QualifiedName::new("p.C.m(java.util.List<T>,int)"),
                    loc("p/C, \"odd\".java", None),
                ),
            ],
        )
    }

    #[test]
    fn summary_counts() {
        let s = sample().summary;
        assert_eq!((s.total, s.binary_breaking, s.source_breaking), (2, 1, 1));
        assert_eq!(s.by_kind[&BcKind::MethodNowStatic], 1);
    }

    #[test]
    fn json_round_trip() {
        let r = sample();
        let text = r.render(Format::Json);
        assert!(text.contains("\"abstract method added to type\": 1"));
        assert_eq!(DiffReport::parse_json(&text).unwrap(), r);
    }

    #[test]
    fn empty_csv_is_header_only() {
        let r = DiffReport::new("a", "b", vec![]);
        assert_eq!(r.render(Format::Csv), "symbol,kind,binary,source,file,line\n");
    }

    #[test]
    fn csv_quotes_and_uses_lf() {
        let text = sample().render(Format::Csv);
        assert!(!text.contains('\r'));
        let mut rows = csv::Reader::from_reader(text.as_bytes());
        let got: Vec<Vec<String>> = rows
            .records()
            .map(|r| r.unwrap().iter().map(str::to_owned).collect())
            .collect();
        assert_eq!(got[1][0], "p.C.m(java.util.List<T>,int)");
        assert_eq!(got[1][4], "p/C, \"odd\".java");
        assert_eq!(got[1][5], "");
        assert_eq!(got[0][1..4], ["abstract method added to type", "false", "true"]);
    }

    #[test]
    fn html_groups_by_kind_and_escapes() {
        let text = sample().render(Format::Html);
        assert!(text.contains("<h2 id=\"method-now-static\">method now static (1)</h2>"));
        assert!(text.contains("p.C.m(java.util.List&lt;T&gt;,int)"));
        assert!(!text.contains("<script"));
    }

    #[test]
    fn format_parsing() {
        assert_eq!("HTML".parse::<Format>().unwrap(), Format::Html);
        assert!("xml".parse::<Format>().is_err());
    }
}
