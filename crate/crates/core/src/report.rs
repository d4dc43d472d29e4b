//! Small CSV helpers shared by the verification reports.
//!
//! Hand-rolled so report bytes are fully deterministic: fields are quoted
//! only when needed and rows always end in a single `\n`.

pub fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

pub fn csv_row(fields: &[&str]) -> String {
    let mut row = fields
        .iter()
        .map(|f| csv_field(f))
        .collect::<Vec<_>>()
        .join(",");
    row.push('\n');
    row
}
