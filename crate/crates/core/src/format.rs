//! Line-oriented text formats for matrices and graphs.
//!
//! Matrix:
//!
//! ```text
//! field GF(2)
//! cols a b
//! x: 1 0
//! y: 0 1
//! ```
//!
//! `labels a b` may replace `cols` when the row labels are the same set; the
//! rows may then appear in any order but each exactly once.
//!
//! Graph:
//!
//! ```text
//! vertices a b c
//! edge a b
//! ```
//!
//! Blank lines and lines starting with `#` are ignored in both.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::graph::SimpleGraph;
use crate::labels::{Label, LabelSet};
use crate::matrix::LabeledMatrix;

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn label_at(line: usize, token: &str) -> Result<Label> {
    Label::new(token).map_err(|e| Error::parse(line, e.to_string()))
}

fn relabel_line(line: usize, err: Error) -> Error {
    match err {
        Error::Parse { line: 0, message } => Error::Parse { line, message },
        other => Error::parse(line, other.to_string()),
    }
}

/// Parses the matrix format. With `field_override`, entries are read in that
/// field instead of the one named in the header.
pub fn parse_matrix(text: &str, field_override: Option<Field>) -> Result<LabeledMatrix> {
    let mut lines = content_lines(text);

    let (ln, header) = lines
        .next()
        .ok_or_else(|| Error::parse(1, "missing `field` line"))?;
    let declared = header
        .strip_prefix("field")
        .filter(|rest| rest.starts_with(char::is_whitespace))
        .ok_or_else(|| Error::parse(ln, "expected `field <GF(2)|GF(p)|Q>`"))?;
    let declared: Field = declared.trim().parse().map_err(|e| relabel_line(ln, e))?;
    let field = field_override.unwrap_or(declared);

    let (ln, header) = lines
        .next()
        .ok_or_else(|| Error::parse(ln + 1, "missing `cols` or `labels` line"))?;
    let mut tokens = header.split_whitespace();
    let square = match tokens.next() {
        Some("cols") => false,
        Some("labels") => true,
        _ => return Err(Error::parse(ln, "expected `cols ...` or `labels ...`")),
    };
    let cols: Vec<Label> = tokens.map(|t| label_at(ln, t)).collect::<Result<_>>()?;

    let mut rows = Vec::new();
    let mut values = Vec::new();
    for (ln, line) in lines {
        let (label, entries) = line
            .split_once(':')
            .ok_or_else(|| Error::parse(ln, "expected `<row-label>: <entries>`"))?;
        let label = label_at(ln, label.trim())?;
        let row = entries
            .split_whitespace()
            .map(|t| field.parse_value(t).map_err(|e| relabel_line(ln, e)))
            .collect::<Result<Vec<_>>>()?;
        if row.len() != cols.len() {
            return Err(Error::parse(
                ln,
                format!(
                    "row {label} has {} entries, expected {}",
                    row.len(),
                    cols.len()
                ),
            ));
        }
        if rows.contains(&label) {
            return Err(Error::parse(ln, format!("duplicate row {label}")));
        }
        rows.push(label);
        values.push(row);
    }

    if square {
        let row_set: LabelSet = rows.iter().cloned().collect();
        let col_set: LabelSet = cols.iter().cloned().collect();
        if row_set != col_set {
            return Err(Error::parse(
                ln,
                "`labels` matrix must have exactly one row per label",
            ));
        }
    }
    LabeledMatrix::from_rows(field, &rows, &cols, values).map_err(|e| relabel_line(ln, e))
}

/// Renders a matrix in canonical label order; inverse of [`parse_matrix`].
pub fn write_matrix(m: &LabeledMatrix) -> String {
    let mut out = format!("field {}\n", m.field());
    let header = if m.is_square() { "labels" } else { "cols" };
    out.push_str(header);
    for c in m.col_labels() {
        out.push(' ');
        out.push_str(c.as_str());
    }
    out.push('\n');
    for (i, r) in m.row_labels().iter().enumerate() {
        out.push_str(r.as_str());
        out.push(':');
        for j in 0..m.ncols() {
            out.push(' ');
            out.push_str(&m.entry(i, j).to_string());
        }
        out.push('\n');
    }
    out
}

pub fn parse_graph(text: &str) -> Result<SimpleGraph> {
    let mut lines = content_lines(text);
    let (ln, header) = lines
        .next()
        .ok_or_else(|| Error::parse(1, "missing `vertices` line"))?;
    let mut tokens = header.split_whitespace();
    if tokens.next() != Some("vertices") {
        return Err(Error::parse(ln, "expected `vertices <label> ...`"));
    }
    let mut vertices = LabelSet::new();
    for t in tokens {
        let v = label_at(ln, t)?;
        if !vertices.insert(v.clone()) {
            return Err(Error::parse(ln, format!("duplicate vertex {v}")));
        }
    }
    let mut graph = SimpleGraph::edgeless(vertices);
    for (ln, line) in lines {
        let tokens: Vec<&str> = line.split_whitespace().collect();
        match tokens.as_slice() {
            ["edge", u, w] => {
                let (u, w) = (label_at(ln, u)?, label_at(ln, w)?);
                graph.insert_edge(&u, &w).map_err(|e| relabel_line(ln, e))?;
            }
            _ => return Err(Error::parse(ln, "expected `edge <u> <v>`")),
        }
    }
    Ok(graph)
}

/// Renders a graph with edges in canonical order; inverse of [`parse_graph`].
pub fn write_graph(g: &SimpleGraph) -> String {
    let mut out = String::from("vertices");
    for v in g.vertices() {
        out.push(' ');
        out.push_str(v.as_str());
    }
    out.push('\n');
    for (u, w) in g.edges() {
        out.push_str(&format!("edge {u} {w}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_square_matrix() {
        let text = "# sample\nfield GF(2)\nlabels 1 2\n\n2: 1 0\n1: 1 1\n";
        let m = parse_matrix(text, None).unwrap();
        assert_eq!(
            m,
            LabeledMatrix::from_ints(Field::gf2(), &[[1, 1], [1, 0]]).unwrap()
        );
        assert_eq!(
            write_matrix(&m),
            "field GF(2)\nlabels 1 2\n1: 1 1\n2: 1 0\n"
        );
    }

    #[test]
    fn parses_rectangular_rational_matrix() {
        let text = "field Q\ncols b a\nx: 1/2 -3\n";
        let m = parse_matrix(text, None).unwrap();
        assert_eq!(write_matrix(&m), "field Q\ncols a b\nx: -3 1/2\n");
        assert_eq!(parse_matrix(&write_matrix(&m), None).unwrap(), m);
    }

    #[test]
    fn empty_shapes() {
        let m = parse_matrix("field Q\nlabels\n", None).unwrap();
        assert_eq!((m.nrows(), m.ncols()), (0, 0));
        let tall = parse_matrix("field GF(3)\ncols\na:\nb:\n", None).unwrap();
        assert_eq!((tall.nrows(), tall.ncols()), (2, 0));
        assert_eq!(parse_matrix(&write_matrix(&tall), None).unwrap(), tall);
    }

    #[test]
    fn field_override() {
        let m = parse_matrix(
            "field Q\nlabels 1\n1: 1/2\n",
            Some(Field::prime(3).unwrap()),
        )
        .unwrap();
        assert_eq!(m.entry(0, 0), Field::prime(3).unwrap().int(2));
    }

    #[test]
    fn matrix_errors_carry_lines() {
        let cases = [
            ("", 1),
            ("field GF(4)\nlabels\n", 1),
            ("field Q\nrows a\n", 2),
            ("field Q\ncols a b\nx: 1\n", 3),
            ("field Q\ncols a\nx: 1\nx: 2\n", 4),
            ("field Q\nlabels a b\na: 1 2\n", 2),
            ("field Q\ncols a\nx 1\n", 3),
            ("field Q\ncols a\nx: 1/0\n", 3),
            ("field GF(2)\ncols a a\nx: 1 0\n", 2),
        ];
        for (text, line) in cases {
            match parse_matrix(text, None) {
                Err(Error::Parse { line: l, .. }) => assert_eq!(l, line, "{text:?}"),
                other => panic!("{text:?}: {other:?}"),
            }
        }
    }

    #[test]
    fn graph_round_trip() {
        let text = "vertices c a b\n# comment\nedge b a\n\nedge c b\n";
        let g = parse_graph(text).unwrap();
        let out = write_graph(&g);
        assert_eq!(out, "vertices a b c\nedge a b\nedge b c\n");
        assert_eq!(parse_graph(&out).unwrap(), g);
    }

    #[test]
    fn graph_errors() {
        assert!(parse_graph("edge a b\n").is_err());
        assert!(parse_graph("vertices a a\n").is_err());
        assert!(parse_graph("vertices a\nedge a a\n").is_err());
        assert!(parse_graph("vertices a\nedge a\n").is_err());
        assert!(parse_graph("vertices a\nedge a z\n").is_err());
    }
}
