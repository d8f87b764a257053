//! The MGF text format.
//!
//! ```text
//! mgf 2 3
//! # name: 3K2
//! 0 1
//! 0 1
//! 0 1
//!
//! rot
//! 0: 0 1 2
//! 1: 2 1 0
//! ```
//!
//! Edge ids follow the order of the edge lines. Lines starting with `#` are
//! comments; `# name:` and `# source:` comments are kept as metadata.

use std::fmt::Write as _;

use sz5_core::planar::RotationSystem;
use sz5_core::Multigraph;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseErrorKind {
    #[error("expected header \"mgf <vertices> <edges>\"")]
    Header,
    #[error("expected an edge \"<u> <v>\"")]
    Edge,
    #[error("vertex {0} out of range")]
    Vertex(usize),
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("header announces {expected} edges, found {found}")]
    EdgeCount { expected: usize, found: usize },
    #[error("expected \"rot\" or end of input")]
    Trailing,
    #[error("expected a rotation line \"<v>: <edge ids>\"")]
    RotationLine,
    #[error("rotation for vertex {0} given twice")]
    DuplicateRotation(usize),
    #[error("rotation block lists {found} of {expected} vertices")]
    RotationCount { expected: usize, found: usize },
    #[error("{0}")]
    Rotation(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphDocument {
    pub graph: Multigraph,
    pub rotation: Option<RotationSystem>,
    pub name: Option<String>,
    pub source: Option<String>,
}

impl GraphDocument {
    pub fn new(graph: Multigraph) -> Self {
        GraphDocument { graph, rotation: None, name: None, source: None }
    }
}

fn err(line: usize, kind: ParseErrorKind) -> ParseError {
    ParseError { line, kind }
}

fn numbers(s: &str) -> Option<Vec<usize>> {
    s.split_whitespace().map(|t| t.parse().ok()).collect()
}

pub fn parse(text: &str) -> Result<GraphDocument, ParseError> {
    let mut name = None;
    let mut source = None;
    // (line number, content) of every non-comment line, blank lines kept
    let mut lines = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if let Some(c) = line.strip_prefix('#') {
            let c = c.trim();
            if let Some(v) = c.strip_prefix("name:") {
                name = Some(v.trim().to_string());
            } else if let Some(v) = c.strip_prefix("source:") {
                source = Some(v.trim().to_string());
            }
            continue;
        }
        lines.push((i + 1, line));
    }
    let mut it = lines.into_iter().skip_while(|(_, l)| l.is_empty()).peekable();

    let (hl, header) = it.next().ok_or(err(1, ParseErrorKind::Header))?;
    let (n, m) = match header.strip_prefix("mgf").and_then(numbers).as_deref() {
        Some(&[n, m]) => (n, m),
        _ => return Err(err(hl, ParseErrorKind::Header)),
    };

    let mut g = Multigraph::new(n);
    let mut last = hl;
    while let Some(&(ln, l)) = it.peek() {
        if l.is_empty() || l == "rot" {
            break;
        }
        it.next();
        last = ln;
        let (u, v) = match numbers(l).as_deref() {
            Some(&[u, v]) => (u, v),
            _ => return Err(err(ln, ParseErrorKind::Edge)),
        };
        for x in [u, v] {
            if x >= n {
                return Err(err(ln, ParseErrorKind::Vertex(x)));
            }
        }
        if u == v {
            return Err(err(ln, ParseErrorKind::Loop(u)));
        }
        g.add_edge(u, v).expect("checked above");
    }
    if g.edge_count() != m {
        return Err(err(last, ParseErrorKind::EdgeCount { expected: m, found: g.edge_count() }));
    }

    let mut rotation = None;
    while let Some(&(ln, l)) = it.peek() {
        it.next();
        if l.is_empty() {
            continue;
        }
        if l != "rot" {
            return Err(err(ln, ParseErrorKind::Trailing));
        }
        let mut rows: Vec<Option<Vec<usize>>> = vec![None; n];
        let mut end = ln;
        for (ln, l) in it.by_ref() {
            if l.is_empty() {
                continue;
            }
            end = ln;
            let (v, rest) = l.split_once(':').ok_or(err(ln, ParseErrorKind::RotationLine))?;
            let v: usize = v.trim().parse().map_err(|_| err(ln, ParseErrorKind::RotationLine))?;
            if v >= n {
                return Err(err(ln, ParseErrorKind::Vertex(v)));
            }
            let ids = numbers(rest).ok_or(err(ln, ParseErrorKind::RotationLine))?;
            if rows[v].replace(ids).is_some() {
                return Err(err(ln, ParseErrorKind::DuplicateRotation(v)));
            }
        }
        let found = rows.iter().filter(|r| r.is_some()).count();
        if found != n {
            return Err(err(end, ParseErrorKind::RotationCount { expected: n, found }));
        }
        let rows = rows.into_iter().map(Option::unwrap).collect();
        let rot = RotationSystem::new(&g, rows).map_err(|e| err(end, ParseErrorKind::Rotation(e.to_string())))?;
        rotation = Some(rot);
        break;
    }
    Ok(GraphDocument { graph: g, rotation, name, source })
}

pub fn serialize(doc: &GraphDocument) -> String {
    let g = &doc.graph;
    let mut out = format!("mgf {} {}\n", g.vertex_count(), g.edge_count());
    if let Some(name) = &doc.name {
        writeln!(out, "# name: {name}").unwrap();
    }
    if let Some(source) = &doc.source {
        writeln!(out, "# source: {source}").unwrap();
    }
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    if let Some(rot) = &doc.rotation {
        out.push_str("\nrot\n");
        for (v, row) in rot.rotations().iter().enumerate() {
            let ids: Vec<String> = row.iter().map(|e| e.to_string()).collect();
            if ids.is_empty() {
                writeln!(out, "{v}:").unwrap();
            } else {
                writeln!(out, "{v}: {}", ids.join(" ")).unwrap();
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use sz5_core::catalog::{make_named, NamedPattern};

    const W1: &str = "mgf 4 12\n# name: W1\n0 1\n0 1\n0 1\n0 2\n0 2\n0 2\n0 3\n0 3\n0 3\n1 2\n1 3\n2 3\n";

    #[test]
    fn five_parallel_edges() {
        let doc = parse("mgf 2 5\n0 1\n0 1\n0 1\n0 1\n0 1\n").unwrap();
        assert_eq!(doc.graph.multiplicity(0, 1).unwrap(), 5);
        assert!(doc.rotation.is_none());
    }

    #[test]
    fn wheel_document() {
        let doc = parse(W1).unwrap();
        let mut d = doc.graph.degrees();
        d.sort();
        assert_eq!(d, vec![5, 5, 5, 9]);
        assert_eq!(doc.name.as_deref(), Some("W1"));
        assert!(doc.graph.same_multiplicities(&make_named(&NamedPattern::W1)));
        assert_eq!(serialize(&doc), W1);
    }

    #[test]
    fn loops_are_rejected_with_line() {
        let e = parse("mgf 2 2\n0 1\n0 0\n").unwrap_err();
        assert_eq!(e, ParseError { line: 3, kind: ParseErrorKind::Loop(0) });
    }

    #[test]
    fn syntax_errors() {
        assert_eq!(parse("").unwrap_err().kind, ParseErrorKind::Header);
        assert_eq!(parse("mgf 2\n").unwrap_err().kind, ParseErrorKind::Header);
        assert_eq!(parse("mgf 2 1\n0 x\n").unwrap_err().line, 2);
        assert_eq!(parse("mgf 2 1\n0 2\n").unwrap_err().kind, ParseErrorKind::Vertex(2));
        let e = parse("mgf 2 2\n0 1\n").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::EdgeCount { expected: 2, found: 1 });
        assert_eq!(parse("mgf 2 1\n0 1\n\nfoo\n").unwrap_err().kind, ParseErrorKind::Trailing);
    }

    #[test]
    fn rotation_round_trip() {
        let text = "mgf 3 4\n0 1\n0 1\n1 2\n2 0\n\nrot\n0: 0 3 1\n1: 0 1 2\n2: 2 3\n";
        let doc = parse(text).unwrap();
        assert_eq!(doc.rotation.as_ref().unwrap().rotation(0), &[0, 3, 1]);
        assert_eq!(serialize(&doc), text);
        assert_eq!(serialize(&parse(&serialize(&doc)).unwrap()), text);
    }

    #[test]
    fn rotation_errors() {
        let e = parse("mgf 2 1\n0 1\n\nrot\n0: 0\n").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::RotationCount { expected: 2, found: 1 });
        let e = parse("mgf 2 1\n0 1\n\nrot\n0: 0\n1: 1\n").unwrap_err();
        assert!(matches!(e.kind, ParseErrorKind::Rotation(_)));
        let e = parse("mgf 2 1\n0 1\n\nrot\n0: 0\n0: 0\n").unwrap_err();
        assert_eq!(e, ParseError { line: 6, kind: ParseErrorKind::DuplicateRotation(0) });
    }

    #[test]
    fn comments_anywhere() {
        let doc = parse("# a graph\nmgf 2 1\n# source: hand\n0 1 \n").unwrap();
        assert_eq!(doc.source.as_deref(), Some("hand"));
        assert_eq!(doc.graph.edge_count(), 1);
    }
}
