//! The line-based embedded-graph document.
//!
//! ```text
//! # comment
//! vertex 0
//! edge 0 0 1            (sign defaults to +1)
//! edge 1 1 2 sign -1
//! rot 0: 0.0 2.0         (darts <eid>.<end>, clockwise)
//! ring facial 0 1 2 3
//! ring vertex 7 weak at 3.1
//! join 3.0 v7            (corner after a dart, or an isolated vertex)
//! precoloring 0=1 1=2
//! ```
//!
//! The emitter is canonical: ids sorted numerically, rotations and rings
//! kept in document order, so emitting a parsed canonical document gives
//! the same bytes back.

use std::fmt::Write as _;

use girth5_core::coloring::Precoloring;
use girth5_core::{CornerRef, EmbeddedGraph, EmbeddingError, GraphSpec, RingSpec};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum DocError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error(transparent)]
    Embedding(#[from] EmbeddingError),
    #[error("precoloring names unknown vertex {0}")]
    UnknownVertex(u32),
}

#[derive(Clone, Debug, Default)]
pub struct Document {
    pub graph: GraphSpec,
    /// `(vertex id, color)` pairs.
    pub precoloring: Vec<(u32, u8)>,
}

fn syntax(line: usize, msg: impl Into<String>) -> DocError {
    DocError::Syntax { line, msg: msg.into() }
}

fn num<T: std::str::FromStr>(line: usize, tok: &str, what: &str) -> Result<T, DocError> {
    tok.parse().map_err(|_| syntax(line, format!("bad {what} `{tok}`")))
}

fn dart(line: usize, tok: &str) -> Result<(u32, u8), DocError> {
    let (e, end) = tok.split_once('.').ok_or_else(|| syntax(line, format!("bad dart `{tok}`")))?;
    let end: u8 = num(line, end, "dart end")?;
    if end > 1 {
        return Err(syntax(line, format!("dart end must be 0 or 1 in `{tok}`")));
    }
    Ok((num(line, e, "edge id")?, end))
}

fn corner(line: usize, tok: &str) -> Result<CornerRef, DocError> {
    match tok.strip_prefix('v') {
        Some(v) => Ok(CornerRef::Vertex(num(line, v, "vertex id")?)),
        None => dart(line, tok).map(|(e, end)| CornerRef::Dart(e, end)),
    }
}

/// Parses `v=c` pairs separated by whitespace or commas.
pub fn parse_assignments(line: usize, toks: &[&str]) -> Result<Vec<(u32, u8)>, DocError> {
    let mut out = Vec::new();
    for tok in toks.iter().flat_map(|t| t.split(',')).filter(|t| !t.is_empty()) {
        let (v, c) = tok.split_once('=').ok_or_else(|| syntax(line, format!("bad assignment `{tok}`")))?;
        let c: u8 = num(line, c, "color")?;
        if c > 2 {
            return Err(syntax(line, format!("color {c} out of range")));
        }
        out.push((num(line, v, "vertex id")?, c));
    }
    Ok(out)
}

pub fn parse(text: &str) -> Result<Document, DocError> {
    let mut doc = Document::default();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let body = raw.split('#').next().unwrap_or("");
        let toks: Vec<&str> = body.split_whitespace().collect();
        let Some(&head) = toks.first() else { continue };
        match head {
            "vertex" => {
                if toks.len() != 2 {
                    return Err(syntax(line, "expected `vertex <id>`"));
                }
                doc.graph.vertices.push(num(line, toks[1], "vertex id")?);
            }
            "edge" => {
                let sign = match toks.len() {
                    4 => 1,
                    6 if toks[4] == "sign" => match toks[5] {
                        "-1" => -1,
                        "+1" | "1" => 1,
                        s => return Err(syntax(line, format!("bad sign `{s}`"))),
                    },
                    _ => return Err(syntax(line, "expected `edge <eid> <v1> <v2> [sign -1]`")),
                };
                doc.graph.edges.push((
                    num(line, toks[1], "edge id")?,
                    num(line, toks[2], "vertex id")?,
                    num(line, toks[3], "vertex id")?,
                    sign,
                ));
            }
            "rot" => {
                let v = toks
                    .get(1)
                    .and_then(|t| t.strip_suffix(':'))
                    .ok_or_else(|| syntax(line, "expected `rot <vid>: <dart>...`"))?;
                let v = num(line, v, "vertex id")?;
                let darts = toks[2..].iter().map(|t| dart(line, t)).collect::<Result<_, _>>()?;
                doc.graph.rotations.push((v, darts));
            }
            "ring" => match toks.get(1).copied() {
                Some("facial") => {
                    let vs = toks[2..].iter().map(|t| num(line, t, "vertex id")).collect::<Result<Vec<u32>, _>>()?;
                    if vs.is_empty() {
                        return Err(syntax(line, "facial ring needs vertices"));
                    }
                    doc.graph.rings.push(RingSpec::Facial(vs));
                }
                Some("vertex") => {
                    let v = num(line, toks.get(2).copied().unwrap_or(""), "vertex id")?;
                    let mut rest = &toks[3.min(toks.len())..];
                    let weak = rest.first() == Some(&"weak");
                    if weak {
                        rest = &rest[1..];
                    }
                    let at = match rest {
                        [] => None,
                        ["at", d] => Some(dart(line, d)?),
                        _ => return Err(syntax(line, "expected `ring vertex <vid> [weak] [at <eid>.<end>]`")),
                    };
                    doc.graph.rings.push(RingSpec::Vertex { v, weak, at });
                }
                _ => return Err(syntax(line, "ring kind must be `facial` or `vertex`")),
            },
            "join" => {
                if toks.len() != 3 {
                    return Err(syntax(line, "expected `join <corner> <corner>`"));
                }
                doc.graph.joins.push((corner(line, toks[1])?, corner(line, toks[2])?));
            }
            "precoloring" => doc.precoloring.extend(parse_assignments(line, &toks[1..])?),
            other => return Err(syntax(line, format!("unknown directive `{other}`"))),
        }
    }
    Ok(doc)
}

fn write_corner(out: &mut String, c: &CornerRef) {
    match c {
        CornerRef::Dart(e, end) => write!(out, "{e}.{end}").unwrap(),
        CornerRef::Vertex(v) => write!(out, "v{v}").unwrap(),
    }
}

pub fn emit(doc: &Document) -> String {
    let g = &doc.graph;
    let mut out = String::new();
    let mut vs = g.vertices.clone();
    vs.sort_unstable();
    for v in vs {
        writeln!(out, "vertex {v}").unwrap();
    }
    let mut es = g.edges.clone();
    es.sort_unstable();
    for (e, a, b, sign) in es {
        if sign < 0 {
            writeln!(out, "edge {e} {a} {b} sign -1").unwrap();
        } else {
            writeln!(out, "edge {e} {a} {b}").unwrap();
        }
    }
    let mut rots = g.rotations.clone();
    rots.sort_by_key(|r| r.0);
    for (v, darts) in rots {
        write!(out, "rot {v}:").unwrap();
        for (e, end) in darts {
            write!(out, " {e}.{end}").unwrap();
        }
        out.push('\n');
    }
    for r in &g.rings {
        match r {
            RingSpec::Facial(vs) => {
                out.push_str("ring facial");
                for v in vs {
                    write!(out, " {v}").unwrap();
                }
            }
            RingSpec::Vertex { v, weak, at } => {
                write!(out, "ring vertex {v}").unwrap();
                if *weak {
                    out.push_str(" weak");
                }
                if let Some((e, end)) = at {
                    write!(out, " at {e}.{end}").unwrap();
                }
            }
        }
        out.push('\n');
    }
    for (a, b) in &g.joins {
        out.push_str("join ");
        write_corner(&mut out, a);
        out.push(' ');
        write_corner(&mut out, b);
        out.push('\n');
    }
    if !doc.precoloring.is_empty() {
        let mut pc = doc.precoloring.clone();
        pc.sort_unstable();
        out.push_str("precoloring");
        for (v, c) in pc {
            write!(out, " {v}={c}").unwrap();
        }
        out.push('\n');
    }
    out
}

/// The document for a graph, with an optional precoloring by vertex index.
pub fn document_of(g: &EmbeddedGraph, phi: Option<&Precoloring>) -> Document {
    let precoloring = phi
        .map(|p| p.0.iter().enumerate().filter_map(|(v, c)| c.map(|c| (g.vertex_id(v), c))).collect())
        .unwrap_or_default();
    Document { graph: g.to_spec(), precoloring }
}

pub fn emit_graph(g: &EmbeddedGraph) -> String {
    emit(&document_of(g, None))
}

/// Converts `(vertex id, color)` pairs to a precoloring by vertex index.
pub fn precoloring_of(g: &EmbeddedGraph, pairs: &[(u32, u8)]) -> Result<Precoloring, DocError> {
    let mut p = vec![None; g.n_vertices()];
    for &(v, c) in pairs {
        p[g.vertex_index(v).ok_or(DocError::UnknownVertex(v))?] = Some(c);
    }
    Ok(Precoloring(p))
}

/// A validated graph plus the document's precoloring, if it has one.
pub fn load(text: &str) -> Result<(EmbeddedGraph, Option<Precoloring>), DocError> {
    let doc = parse(text)?;
    let g = EmbeddedGraph::build(&doc.graph)?;
    let phi = if doc.precoloring.is_empty() { None } else { Some(precoloring_of(&g, &doc.precoloring)?) };
    Ok((g, phi))
}

#[cfg(test)]
mod tests {
    use super::*;
    use girth5_core::canon::canonical_form;

    const K4: &str = "\
vertex 0
vertex 1
vertex 2
vertex 3
edge 0 0 1
edge 1 0 2
edge 2 0 3
edge 3 1 2
edge 4 1 3
edge 5 2 3
rot 0: 0.0 2.0 1.0
rot 1: 3.0 4.0 0.1
rot 2: 1.1 5.0 3.1
rot 3: 2.1 4.1 5.1
";

    #[test]
    fn k4_builds() {
        let (g, phi) = load(K4).unwrap();
        assert_eq!((g.n_vertices(), g.n_edges()), (4, 6));
        assert!(phi.is_none());
        assert_eq!(g.euler_genus(), (0, true));
    }

    #[test]
    fn canonical_text_round_trips() {
        assert_eq!(emit(&parse(K4).unwrap()), K4);
        let (g, _) = load(K4).unwrap();
        assert_eq!(emit_graph(&g), K4);
    }

    #[test]
    fn errors_carry_line_numbers() {
        let bad = "vertex 0\n# fine\nedge 0 0\n";
        assert_eq!(parse(bad).unwrap_err(), syntax(3, "expected `edge <eid> <v1> <v2> [sign -1]`"));
        assert!(matches!(parse("rot 0: 1.2\n"), Err(DocError::Syntax { line: 1, .. })));
        assert!(matches!(parse("vertex 0\nfrobnicate\n"), Err(DocError::Syntax { line: 2, .. })));
    }

    #[test]
    fn non_facial_ring_is_reported() {
        // a 4-cycle of the plane K4 bounds no face
        let text = format!("{K4}ring facial 0 1 2 3\n");
        let err = load(&text).unwrap_err();
        assert!(err.to_string().contains("ring is not facial"), "{err}");
    }

    #[test]
    fn extended_lines_round_trip() {
        let text = format!("{K4}ring vertex 3 weak at 2.1\nprecoloring 3=2\n");
        let doc = parse(&text).unwrap();
        assert_eq!(emit(&doc), text);
        assert_eq!(doc.precoloring, vec![(3, 2)]);
        let joins = "vertex 0\nvertex 1\njoin v0 v1\n";
        assert_eq!(emit(&parse(joins).unwrap()), joins);
    }

    proptest::proptest! {
        #![proptest_config(proptest::prelude::ProptestConfig { failure_persistence: None, ..proptest::prelude::ProptestConfig::with_cases(64) })]

        #[test]
        fn random_graphs_round_trip(n in 5usize..30, seed in 0u64..1000) {
            let g = crate::random::random_triangle_free_plane(n, seed);
            let text = emit_graph(&g);
            let h = load(&text).unwrap().0;
            proptest::prop_assert_eq!(&emit_graph(&h), &text);
            proptest::prop_assert_eq!(canonical_form(&g), canonical_form(&h));
        }
    }
}
