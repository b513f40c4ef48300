//! Cayley-table text format.
//!
//! ```text
//! 3
//! 0 1 2
//! 1 2 0
//! 2 0 1
//! labels
//! e
//! r
//! r^2
//! ```
//!
//! The first line is the order `n`, followed by `n` rows of `n`
//! whitespace-separated indices. An optional trailing block starts with the
//! line `labels` and lists one label per line. Blank lines and lines starting
//! with `#` are ignored outside the label block.

use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Error, Result};
use crate::group::table::GroupTable;

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { column: 1, message: format!("line {line}: {}", message.into()) }
}

pub fn parse_cayley_table(text: &str) -> Result<GroupTable> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
    let mut content = lines.by_ref().filter(|(_, l)| {
        let t = l.trim();
        !t.is_empty() && !t.starts_with('#')
    });
    let (first_no, first) = content.next().ok_or_else(|| parse_err(1, "missing order line"))?;
    let n: usize = first.trim().parse().map_err(|_| parse_err(first_no, format!("bad order {:?}", first.trim())))?;
    if n == 0 {
        return Err(parse_err(first_no, "order must be positive"));
    }
    let mut rows = Vec::with_capacity(n);
    for _ in 0..n {
        let (no, line) = content.next().ok_or_else(|| parse_err(first_no, format!("expected {n} rows")))?;
        let row = line
            .split_whitespace()
            .map(|tok| tok.parse::<u32>().map_err(|_| parse_err(no, format!("bad index {tok:?}"))))
            .collect::<Result<Vec<u32>>>()?;
        rows.push(row);
    }
    let labels = match content.next() {
        None => None,
        Some((_, l)) if l.trim() == "labels" => {
            let labels: Vec<String> = lines.take(n).map(|(_, l)| l.trim().to_string()).collect();
            if labels.len() != n {
                return Err(parse_err(first_no, format!("label block has {} entries, expected {n}", labels.len())));
            }
            Some(labels)
        }
        Some((no, _)) => return Err(parse_err(no, "unexpected content after table")),
    };
    GroupTable::from_cayley_table_with_labels(&rows, labels)
}

pub fn load_cayley_table(path: impl AsRef<Path>) -> Result<GroupTable> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    parse_cayley_table(&text)
}

pub fn write_cayley_table(g: &GroupTable) -> String {
    let mut out = String::new();
    writeln!(out, "{}", g.order()).unwrap();
    for a in g.elements() {
        let row: Vec<String> = g.row(a).iter().map(u32::to_string).collect();
        writeln!(out, "{}", row.join(" ")).unwrap();
    }
    if let Some(labels) = g.labels() {
        out.push_str("labels\n");
        for l in labels {
            writeln!(out, "{l}").unwrap();
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reads_labelled_table() {
        let g = parse_cayley_table("# C3\n3\n0 1 2\n1 2 0\n2 0 1\nlabels\ne\nr\nr^2\n").unwrap();
        assert_eq!(g.order(), 3);
        assert_eq!(g.label(2), "r^2");
        let again = parse_cayley_table(&write_cayley_table(&g)).unwrap();
        assert_eq!(again, g);
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_cayley_table("").is_err());
        assert!(parse_cayley_table("2\n0 1\n").is_err());
        assert!(parse_cayley_table("2\n0 1\n1 x\n").is_err());
        assert!(parse_cayley_table("2\n0 1\n1 0\nextra\n").is_err());
        assert!(matches!(parse_cayley_table("2\n0 1\n0 1\n"), Err(Error::NotLatinSquare { .. })));
    }
}
