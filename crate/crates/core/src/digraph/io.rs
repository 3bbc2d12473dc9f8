//! Edge-list text format and DOT export.
//!
//! ```text
//! # comment
//! n 3
//! 0 1
//! 1 2
//! ```

use std::collections::BTreeSet;
use std::fmt::Write;

use thiserror::Error;

use super::Digraph;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("missing header line `n <count>`")]
    MissingHeader,
    #[error("line {line}: malformed header, expected `n <count>`")]
    MalformedHeader { line: usize },
    #[error("line {line}: malformed arc, expected `<tail> <head>`")]
    MalformedArc { line: usize },
    #[error("line {line}: loop at vertex {vertex}")]
    Loop { line: usize, vertex: usize },
    #[error("line {line}: duplicate arc {tail} -> {head}")]
    DuplicateArc { line: usize, tail: usize, head: usize },
    #[error("line {line}: vertex {index} out of range for {n} vertices")]
    IndexOutOfRange { line: usize, index: usize, n: usize },
}

pub fn parse_digraph(text: &str) -> Result<Digraph, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (line, header) = lines.next().ok_or(ParseError::MissingHeader)?;
    let n = match header.split_whitespace().collect::<Vec<_>>()[..] {
        ["n", count] => count
            .parse::<usize>()
            .map_err(|_| ParseError::MalformedHeader { line })?,
        _ => return Err(ParseError::MalformedHeader { line }),
    };

    let mut arcs = Vec::new();
    for (line, text) in lines {
        let fields: Vec<&str> = text.split_whitespace().collect();
        let [tail, head] = fields[..] else {
            return Err(ParseError::MalformedArc { line });
        };
        let parse = |s: &str| s.parse::<usize>().map_err(|_| ParseError::MalformedArc { line });
        arcs.push((line, parse(tail)?, parse(head)?));
    }
    assemble(n, arcs)
}

fn assemble(n: usize, arcs: Vec<(usize, usize, usize)>) -> Result<Digraph, ParseError> {
    let mut set = BTreeSet::new();
    for (line, tail, head) in arcs {
        for index in [tail, head] {
            if index >= n {
                return Err(ParseError::IndexOutOfRange { line, index, n });
            }
        }
        if tail == head {
            return Err(ParseError::Loop { line, vertex: tail });
        }
        if !set.insert((tail, head)) {
            return Err(ParseError::DuplicateArc { line, tail, head });
        }
    }
    Ok(Digraph::from_valid(n, set.into_iter().collect()))
}

/// Reads the DOT subset written by [`to_dot`]: one statement per line,
/// `k;` declares vertex `k` and `u -> v;` adds an arc. The declared
/// vertices must be exactly `0..n`.
pub fn parse_dot(text: &str) -> Result<Digraph, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with("//"));
    let (line, header) = lines.next().ok_or(ParseError::MissingHeader)?;
    if header.split_whitespace().collect::<Vec<_>>() != ["digraph", "{"] {
        return Err(ParseError::MalformedHeader { line });
    }
    let mut declared = BTreeSet::new();
    let mut arcs = Vec::new();
    let mut closed = false;
    for (line, stmt) in lines {
        if closed {
            return Err(ParseError::MalformedArc { line });
        }
        if stmt == "}" {
            closed = true;
            continue;
        }
        let stmt = stmt.strip_suffix(';').ok_or(ParseError::MalformedArc { line })?;
        let id = |s: &str| s.trim().parse::<usize>().map_err(|_| ParseError::MalformedArc { line });
        match stmt.split_once("->") {
            Some((u, v)) => arcs.push((line, id(u)?, id(v)?)),
            None => {
                declared.insert(id(stmt)?);
            }
        }
    }
    if !closed {
        return Err(ParseError::MalformedArc { line: text.lines().count() });
    }
    let n = declared.len();
    if let Some(&index) = declared.iter().next_back().filter(|&&max| max >= n) {
        return Err(ParseError::IndexOutOfRange { line, index, n });
    }
    assemble(n, arcs)
}

pub fn serialize_digraph(d: &Digraph) -> String {
    let mut out = format!("n {}\n", d.n());
    for (u, v) in d.arcs() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

/// DOT text with numeric node ids. Every vertex is declared so isolated
/// vertices survive the export.
pub fn to_dot(d: &Digraph) -> String {
    let mut out = String::from("digraph {\n");
    for v in 0..d.n() {
        writeln!(out, "  {v};").unwrap();
    }
    for (u, v) in d.arcs() {
        writeln!(out, "  {u} -> {v};").unwrap();
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_examples() {
        assert_eq!(parse_digraph("n 2\n0 1\n").unwrap(), Digraph::path(2));
        assert_eq!(parse_digraph("n 3\n0 1\n1 2\n2 0\n").unwrap(), Digraph::cycle(3));
        assert_eq!(
            parse_digraph("# a comment\n\nn 3  \n 2 0 \n0 1\t\n1 2\n").unwrap(),
            Digraph::cycle(3)
        );
        assert_eq!(parse_digraph("n 0\n").unwrap(), Digraph::empty(0));
    }

    #[test]
    fn parse_errors_carry_lines() {
        assert_eq!(
            parse_digraph("n 2\n0 0\n"),
            Err(ParseError::Loop { line: 2, vertex: 0 })
        );
        assert_eq!(parse_digraph("# only\n"), Err(ParseError::MissingHeader));
        assert_eq!(
            parse_digraph("nodes 2\n"),
            Err(ParseError::MalformedHeader { line: 1 })
        );
        assert_eq!(
            parse_digraph("n -1\n"),
            Err(ParseError::MalformedHeader { line: 1 })
        );
        assert_eq!(
            parse_digraph("n 2\n0 1 1\n"),
            Err(ParseError::MalformedArc { line: 2 })
        );
        assert_eq!(
            parse_digraph("n 2\n0 x\n"),
            Err(ParseError::MalformedArc { line: 2 })
        );
        assert_eq!(
            parse_digraph("n 2\n0 1\n# c\n0 1\n"),
            Err(ParseError::DuplicateArc { line: 4, tail: 0, head: 1 })
        );
        assert_eq!(
            parse_digraph("n 2\n0 2\n"),
            Err(ParseError::IndexOutOfRange { line: 2, index: 2, n: 2 })
        );
    }

    #[test]
    fn round_trip_and_dot() {
        let d = Digraph::complete(3);
        assert_eq!(parse_digraph(&serialize_digraph(&d)).unwrap(), d);
        assert_eq!(serialize_digraph(&Digraph::path(2)), "n 2\n0 1\n");
        assert_eq!(
            to_dot(&Digraph::path(2)),
            "digraph {\n  0;\n  1;\n  0 -> 1;\n}\n"
        );
    }

    #[test]
    fn dot_round_trip() {
        for d in [Digraph::empty(3), Digraph::cycle(4), Digraph::complete(3), Digraph::empty(0)] {
            assert_eq!(parse_dot(&to_dot(&d)).unwrap(), d);
        }
        assert_eq!(
            parse_dot("digraph {\n  0;\n  2;\n}\n"),
            Err(ParseError::IndexOutOfRange { line: 1, index: 2, n: 2 })
        );
        assert_eq!(
            parse_dot("digraph {\n  0;\n  0 -> 0;\n}\n"),
            Err(ParseError::Loop { line: 3, vertex: 0 })
        );
        assert_eq!(parse_dot("digraph {\n  0\n}\n"), Err(ParseError::MalformedArc { line: 2 }));
        assert_eq!(parse_dot("graph {\n}\n"), Err(ParseError::MalformedHeader { line: 1 }));
        assert!(parse_dot("digraph {\n  0;\n").is_err());
    }
}
