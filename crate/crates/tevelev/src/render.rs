//! Output formats. Table and CSV share one flat column layout so every field
//! of the JSON record appears, with identical value strings, in all three.

use clap::ValueEnum;

use crate::record::Record;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum Format {
    #[default]
    Table,
    Json,
    Csv,
}

const BASE_COLUMNS: [&str; 14] = [
    "g",
    "ell",
    "profiles",
    "d",
    "n",
    "b",
    "dim",
    "valid",
    "violated",
    "value",
    "closed",
    "recursion",
    "schubert",
    "agree",
];
const TIMING_COLUMNS: [&str; 3] = ["closed_us", "recursion_us", "schubert_us"];

fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map(ToString::to_string).unwrap_or_default()
}

/// Header and rows; timing columns appear only if some record carries timings.
pub fn flatten(records: &[Record]) -> (Vec<&'static str>, Vec<Vec<String>>) {
    let timed = records.iter().any(|r| r.timings_us.is_some());
    let mut header: Vec<&'static str> = BASE_COLUMNS.to_vec();
    if timed {
        header.extend(TIMING_COLUMNS);
    }
    let rows = records
        .iter()
        .map(|r| {
            let mut row = vec![
                r.g.to_string(),
                r.ell.to_string(),
                r.profile_spec(),
                r.d.to_string(),
                r.n.to_string(),
                r.b.to_string(),
                r.dim.to_string(),
                r.valid.to_string(),
                r.violated.join(" "),
                r.value.clone(),
                opt(&r.engines.closed),
                opt(&r.engines.recursion),
                opt(&r.engines.schubert),
                r.agree.to_string(),
            ];
            if timed {
                let t = r.timings_us.clone().unwrap_or_default();
                row.extend([opt(&t.closed), opt(&t.recursion), opt(&t.schubert)]);
            }
            row
        })
        .collect();
    (header, rows)
}

pub fn to_table(records: &[Record]) -> String {
    let (header, rows) = flatten(records);
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in &rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let line = |cells: Vec<&str>| {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect();
        padded.join("  ").trim_end().to_string()
    };
    let mut out = line(header.clone());
    out.push('\n');
    for row in &rows {
        out.push_str(&line(row.iter().map(String::as_str).collect()));
        out.push('\n');
    }
    out
}

pub fn to_csv(records: &[Record]) -> String {
    let (header, rows) = flatten(records);
    let mut w = csv::Writer::from_writer(Vec::new());
    // writing to a Vec cannot fail
    w.write_record(&header).unwrap();
    for row in rows {
        w.write_record(&row).unwrap();
    }
    String::from_utf8(w.into_inner().unwrap()).unwrap()
}

/// A lone record renders as an object, anything else as an array.
pub fn to_json(records: &[Record]) -> String {
    let text = match records {
        [one] => serde_json::to_string_pretty(one),
        many => serde_json::to_string_pretty(many),
    };
    text.expect("records always serialize") + "\n"
}

pub fn render(records: &[Record], format: Format) -> String {
    match format {
        Format::Table => to_table(records),
        Format::Json => to_json(records),
        Format::Csv => to_csv(records),
    }
}
