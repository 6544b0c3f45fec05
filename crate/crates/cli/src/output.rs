use burnside_core::BurnsideRing;
use clap::ValueEnum;
use serde_json::{json, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok,
    Mismatch,
}

/// A command result, pre-rendered in every format.
pub struct Output {
    pub json: Value,
    pub plain: String,
    pub csv: Vec<Vec<String>>,
    pub status: Status,
}

impl Output {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Plain => self.plain.clone(),
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.json).expect("values serialize");
                s.push('\n');
                s
            }
            Format::Csv => self.csv.iter().map(|row| csv_line(row) + "\n").collect(),
        }
    }
}

fn csv_line(row: &[String]) -> String {
    row.iter()
        .map(|f| {
            if f.contains([',', '"', '\n']) {
                format!("\"{}\"", f.replace('"', "\"\""))
            } else {
                f.clone()
            }
        })
        .collect::<Vec<_>>()
        .join(",")
}

/// `{group, order, classes, result}`
pub fn envelope(spec: &str, ring: &BurnsideRing, result: Value) -> Value {
    json!({
        "group": spec,
        "order": ring.group().order(),
        "classes": ring.class_names(),
        "result": result,
    })
}

pub fn header(spec: &str, ring: &BurnsideRing) -> String {
    format!(
        "group {spec} ({}, order {}, {} subgroup classes)\n",
        ring.label().name_with_order(ring.group().order()),
        ring.group().order(),
        ring.dim()
    )
}

/// Right-aligned text table.
pub fn align(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|c| {
            rows.iter()
                .filter_map(|r| r.get(c))
                .map(|s| s.chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = String::new();
    for r in rows {
        let line: Vec<String> = r
            .iter()
            .enumerate()
            .map(|(c, s)| format!("{:>w$}", s, w = widths[c]))
            .collect();
        out.push_str(line.join("  ").trim_end());
        out.push('\n');
    }
    out
}

pub fn bits(v: &burnside_core::gf2::BitVec) -> String {
    v.to_bools()
        .iter()
        .map(|&b| if b { '1' } else { '0' })
        .collect()
}
