//! Poset files, command-line value parsers, and report serialization.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::sync::OnceLock;

use regex::Regex;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::poset::Poset;

/// On-disk form of a poset: 1-based cover pairs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub n: usize,
    pub covers: Vec<[usize; 2]>,
}

impl PosetFile {
    pub fn from_poset(p: &Poset, name: Option<String>) -> Self {
        let covers = p.covers_one_based().into_iter().map(|(i, j)| [i, j]).collect();
        PosetFile { name, n: p.n(), covers }
    }

    pub fn to_poset(&self) -> Result<Poset> {
        let rel: Vec<(usize, usize)> = self.covers.iter().map(|&[i, j]| (i, j)).collect();
        Poset::new(self.n, &rel)
    }
}

fn bare_keys() -> &'static Regex {
    static RE: OnceLock<Regex> = OnceLock::new();
    RE.get_or_init(|| Regex::new(r#"([{,]\s*)([A-Za-z_][A-Za-z0-9_]*)\s*:"#).unwrap())
}

/// Accepts JSON, and also the shorthand with bare keys such as
/// `{n:3, covers:[[1,3]]}`. A cyclic cover list is reported with the
/// offending pair and its position.
pub fn parse_poset_file(text: &str) -> Result<(PosetFile, Poset)> {
    let file: PosetFile = match serde_json::from_str(text) {
        Ok(f) => f,
        Err(strict) => {
            let quoted = bare_keys().replace_all(text, r#"$1"$2":"#);
            serde_json::from_str(&quoted).map_err(|_| Error::Parse(strict.to_string()))?
        }
    };
    let poset = file.to_poset()?;
    Ok((file, poset))
}

/// Canonical text: sorted covers of the transitive reduction as one line of JSON.
pub fn serialize_poset(p: &Poset, name: Option<&str>) -> String {
    let file = PosetFile::from_poset(p, name.map(str::to_string));
    let mut out = serde_json::to_string(&file).expect("poset files always serialize");
    out.push('\n');
    out
}

fn parse_num<T: std::str::FromStr>(s: &str, what: &str) -> Result<T> {
    s.trim().parse().map_err(|_| Error::Parse(format!("bad {what} `{}`", s.trim())))
}

/// `"1,2,3"`; the empty string is the empty list.
pub fn parse_list(s: &str) -> Result<Vec<usize>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(|t| parse_num(t, "integer")).collect()
}

/// Generator rows separated by `;`, entries by `,`: `"1,1,0;0,1,1"`.
pub fn parse_matrix(s: &str) -> Result<Vec<Vec<u32>>> {
    s.split(';')
        .map(|row| row.split(',').map(|t| parse_num(t, "matrix entry")).collect())
        .collect()
}

/// `"1:1,2:3"` as 1-based pairs.
pub fn parse_map(s: &str) -> Result<Vec<(usize, usize)>> {
    s.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| {
            let (a, b) = t.split_once(':').ok_or_else(|| Error::Parse(format!("bad map entry `{t}`")))?;
            Ok((parse_num(a, "map source")?, parse_num(b, "map target")?))
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub version: String,
    pub inputs: BTreeMap<String, Value>,
    pub results: Value,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Text,
}

impl std::str::FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "text" => Ok(Format::Text),
            other => Err(Error::Usage(format!("format must be json, csv or text, got `{other}`"))),
        }
    }
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report {
            command: command.to_string(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            inputs: BTreeMap::new(),
            results: Value::Object(Default::default()),
        }
    }

    pub fn emit(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(self).expect("reports always serialize");
                s.push('\n');
                s
            }
            Format::Csv => emit_csv(self),
            Format::Text => emit_text(self),
        }
    }
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some(String::new()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        _ => None,
    }
}

fn scalar_row(v: &Value) -> Option<Vec<String>> {
    v.as_array()?.iter().map(scalar).collect()
}

/// A non-empty array of equally long scalar arrays.
fn matrix(v: &Value) -> Option<Vec<Vec<String>>> {
    let rows: Vec<Vec<String>> = v.as_array()?.iter().map(scalar_row).collect::<Option<_>>()?;
    let width = rows.first()?.len();
    (width > 0 && rows.iter().all(|r| r.len() == width)).then_some(rows)
}

enum Leaf {
    Scalar(String),
    Row(Vec<String>),
    Matrix(Vec<Vec<String>>),
}

fn flatten(prefix: &str, v: &Value, out: &mut Vec<(String, Leaf)>) {
    if let Some(s) = scalar(v) {
        out.push((prefix.to_string(), Leaf::Scalar(s)));
    } else if let Some(m) = matrix(v) {
        out.push((prefix.to_string(), Leaf::Matrix(m)));
    } else if let Some(r) = scalar_row(v) {
        out.push((prefix.to_string(), Leaf::Row(r)));
    } else if let Value::Array(items) = v {
        for (i, item) in items.iter().enumerate() {
            flatten(&format!("{prefix}.{i}"), item, out);
        }
    } else if let Value::Object(map) = v {
        for (k, item) in map {
            let key = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
            flatten(&key, item, out);
        }
    }
}

fn csv_cell(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn leaves(r: &Report) -> Vec<(String, Leaf)> {
    let mut out = Vec::new();
    for (k, v) in &r.inputs {
        flatten(&format!("inputs.{k}"), v, &mut out);
    }
    flatten("results", &r.results, &mut out);
    out
}

/// A `key,value` table for scalars and vectors, then one block per matrix
/// with class indices as row and column headers.
fn emit_csv(r: &Report) -> String {
    let mut s = format!("command,version\n{},{}\n", csv_cell(&r.command), csv_cell(&r.version));
    let all = leaves(r);
    let mut blocks = String::new();
    let mut table = String::new();
    for (key, leaf) in &all {
        match leaf {
            Leaf::Scalar(v) => writeln!(table, "{},{}", csv_cell(key), csv_cell(v)).unwrap(),
            Leaf::Row(row) => writeln!(table, "{},{}", csv_cell(key), csv_cell(&row.join(" "))).unwrap(),
            Leaf::Matrix(m) => {
                let header: Vec<String> = (0..m[0].len()).map(|j| j.to_string()).collect();
                writeln!(blocks, "\n{},{}", csv_cell(key), header.join(",")).unwrap();
                for (i, row) in m.iter().enumerate() {
                    let cells: Vec<String> = row.iter().map(|c| csv_cell(c)).collect();
                    writeln!(blocks, "{i},{}", cells.join(",")).unwrap();
                }
            }
        }
    }
    if !table.is_empty() {
        s.push_str("\nkey,value\n");
        s.push_str(&table);
    }
    s.push_str(&blocks);
    s
}

fn emit_text(r: &Report) -> String {
    let mut s = format!("{} (posetcode {})\n", r.command, r.version);
    for (key, leaf) in leaves(r) {
        match leaf {
            Leaf::Scalar(v) => writeln!(s, "{key}: {v}").unwrap(),
            Leaf::Row(row) => writeln!(s, "{key}: [{}]", row.join(", ")).unwrap(),
            Leaf::Matrix(m) => {
                let width = m.iter().flatten().map(String::len).max().unwrap_or(1);
                writeln!(s, "{key}:").unwrap();
                for row in m {
                    let cells: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
                    writeln!(s, "  {}", cells.join(" ")).unwrap();
                }
            }
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn bare_key_shorthand() {
        let (file, p) = parse_poset_file("{n:3, covers:[[1,3]]}").unwrap();
        assert_eq!(file.n, 3);
        assert_eq!(p, Poset::new(3, &[(1, 3)]).unwrap());
        let (_, a) = parse_poset_file("{n:2, covers:[]}").unwrap();
        assert_eq!(a, Poset::antichain(2).unwrap());
    }

    #[test]
    fn cycles_name_the_pair() {
        let err = parse_poset_file("{n:3, covers:[[1,2],[2,3],[3,1]]}").unwrap_err();
        assert_eq!(err, Error::Cycle { index: 3, i: 3, j: 1 });
        assert!(matches!(parse_poset_file("{n:3, covers:[[1,"), Err(Error::Parse(_))));
    }

    #[test]
    fn canonical_round_trip() {
        let p = Poset::new(4, &[(2, 4), (1, 3), (1, 4), (1, 2)]).unwrap();
        let text = serialize_poset(&p, Some("x"));
        assert_eq!(text, "{\"name\":\"x\",\"n\":4,\"covers\":[[1,2],[1,3],[2,4]]}\n");
        let (file, q) = parse_poset_file(&text).unwrap();
        assert_eq!(q, p);
        assert_eq!(serialize_poset(&q, file.name.as_deref()), text);
    }

    #[test]
    fn flag_values() {
        assert_eq!(parse_matrix("1,1,0;0,1,1").unwrap(), vec![vec![1, 1, 0], vec![0, 1, 1]]);
        assert_eq!(parse_map("1:1,2:3").unwrap(), vec![(1, 1), (2, 3)]);
        assert_eq!(parse_list("").unwrap(), Vec::<usize>::new());
        assert!(parse_list("1,x").is_err());
    }

    #[test]
    fn empty_report_is_header_only() {
        let r = Report::new("analyze");
        let csv = r.emit(Format::Csv);
        assert_eq!(csv, format!("command,version\nanalyze,{}\n", env!("CARGO_PKG_VERSION")));
    }

    #[test]
    fn matrix_csv_block() {
        let mut r = Report::new("scheme");
        r.results = json!({"p_mat": [[1, 1, 2], [1, -1, 0], [1, 1, -2]], "classes": 3});
        let csv = r.emit(Format::Csv);
        assert!(csv.contains("results.classes,3\n"));
        assert!(csv.contains("\nresults.p_mat,0,1,2\n0,1,1,2\n1,1,-1,0\n2,1,1,-2\n"));
        let back: Report = serde_json::from_str(&r.emit(Format::Json)).unwrap();
        assert_eq!(back, r);
    }
}
