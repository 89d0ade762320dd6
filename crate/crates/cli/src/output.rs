//! Rendering of emitted results as JSON lines or aligned tables.

use crate::session::Emitted;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Table,
}

pub fn json_line(e: &Emitted) -> String {
    serde_json::to_string(&e.json).expect("values serialize") + "\n"
}

/// Pads every column but the last to its widest cell.
pub fn table(rows: &[Vec<String>]) -> String {
    let ncols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let mut widths = vec![0; ncols];
    for r in rows.iter().filter(|r| r.len() > 1) {
        for (k, cell) in r.iter().enumerate() {
            widths[k] = widths[k].max(cell.chars().count());
        }
    }
    let mut out = String::new();
    for r in rows {
        let mut line = String::new();
        for (k, cell) in r.iter().enumerate() {
            if k + 1 < r.len() {
                line.push_str(&format!("{cell:<w$}  ", w = widths[k]));
            } else {
                line.push_str(cell);
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

/// Renders the results of one statement.
pub fn render(batch: &[Emitted], format: Format) -> String {
    match format {
        Format::Json => batch.iter().map(json_line).collect(),
        Format::Table => {
            let rows: Vec<Vec<String>> = batch.iter().flat_map(|e| e.rows.iter().cloned()).collect();
            table(&rows)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn columns_align() {
        let rows = vec![vec!["a".into(), "1".into()], vec!["long key".into(), "2".into()], vec!["title only".into()]];
        assert_eq!(table(&rows), "a         1\nlong key  2\ntitle only\n");
    }
}
