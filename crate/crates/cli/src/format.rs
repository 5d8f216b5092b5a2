//! Text formats for hypergraphs, pairs and monotone DNFs.
//!
//! Every non-blank line lists the vertex tokens of one edge, separated by
//! whitespace. `#` starts a comment that runs to the end of the line, and
//! the line `EMPTYEDGE` stands for the empty edge. In a pair file the first
//! blank line ends `G`; later blank lines are ignored. Vertex indices are
//! assigned by sorting the distinct tokens, so the edge order in the file
//! does not affect them.

use std::collections::BTreeSet;

use hgdual::{Hypergraph, Instance, VertexSet, MAX_VERTICES};

pub const EMPTY_EDGE: &str = "EMPTYEDGE";

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    /// 1-based; 0 when the problem is not tied to one line.
    pub line: usize,
    pub message: String,
}

impl ParseError {
    fn new(line: usize, message: impl Into<String>) -> Self {
        Self {
            line,
            message: message.into(),
        }
    }
}

/// A hypergraph together with the token of each vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NamedHypergraph {
    pub names: Vec<String>,
    pub hypergraph: Hypergraph,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NamedPair {
    pub names: Vec<String>,
    pub instance: Instance,
}

enum Line<'a> {
    Blank,
    Comment,
    Edge(Vec<&'a str>),
}

fn classify(raw: &str) -> Line<'_> {
    let (body, had_comment) = match raw.find('#') {
        Some(i) => (&raw[..i], true),
        None => (raw, false),
    };
    let tokens: Vec<&str> = body.split_whitespace().collect();
    if tokens.is_empty() {
        if had_comment {
            Line::Comment
        } else {
            Line::Blank
        }
    } else if tokens == [EMPTY_EDGE] {
        Line::Edge(Vec::new())
    } else {
        Line::Edge(tokens)
    }
}

type RawEdge<'a> = (usize, Vec<&'a str>);

fn check_tokens(edges: &[RawEdge<'_>]) -> Result<(), ParseError> {
    for (line, tokens) in edges {
        if tokens.contains(&EMPTY_EDGE) {
            return Err(ParseError::new(
                *line,
                format!("{EMPTY_EDGE} must be alone on its line"),
            ));
        }
    }
    Ok(())
}

fn names_of<'a>(sides: &[&[RawEdge<'a>]]) -> Result<Vec<String>, ParseError> {
    let tokens: BTreeSet<&str> = sides
        .iter()
        .flat_map(|s| s.iter())
        .flat_map(|(_, t)| t.iter().copied())
        .collect();
    if tokens.len() > MAX_VERTICES {
        return Err(ParseError::new(
            0,
            format!(
                "{} distinct vertices exceed the limit of {MAX_VERTICES}",
                tokens.len()
            ),
        ));
    }
    Ok(tokens.into_iter().map(str::to_owned).collect())
}

fn build(names: &[String], edges: &[RawEdge<'_>]) -> Hypergraph {
    let n = names.len();
    let index = |t: &str| {
        names
            .binary_search_by(|s| s.as_str().cmp(t))
            .expect("known token")
    };
    let sets = edges
        .iter()
        .map(|(_, tokens)| VertexSet::from_indices(n, tokens.iter().map(|t| index(t))))
        .collect();
    Hypergraph::new(n, sets).expect("indices are in range")
}

/// Parses a single hypergraph; blank lines are ignored.
pub fn parse_hypergraph(text: &str) -> Result<NamedHypergraph, ParseError> {
    let edges: Vec<RawEdge<'_>> = text
        .lines()
        .enumerate()
        .filter_map(|(i, raw)| match classify(raw) {
            Line::Edge(t) => Some((i + 1, t)),
            _ => None,
        })
        .collect();
    check_tokens(&edges)?;
    let names = names_of(&[&edges])?;
    let hypergraph = build(&names, &edges);
    Ok(NamedHypergraph { names, hypergraph })
}

/// Parses a pair file: `G`, a blank line, then `H`.
pub fn parse_pair(text: &str) -> Result<NamedPair, ParseError> {
    let mut g = Vec::new();
    let mut h = Vec::new();
    let mut in_h = false;
    for (i, raw) in text.lines().enumerate() {
        match classify(raw) {
            Line::Blank => in_h = true,
            Line::Comment => {}
            Line::Edge(t) if in_h => h.push((i + 1, t)),
            Line::Edge(t) => g.push((i + 1, t)),
        }
    }
    if !in_h {
        return Err(ParseError::new(
            text.lines().count(),
            "missing blank line between the two hypergraphs",
        ));
    }
    check_tokens(&g)?;
    check_tokens(&h)?;
    let names = names_of(&[&g, &h])?;
    let instance = Instance::new(build(&names, &g), build(&names, &h)).expect("shared universe");
    Ok(NamedPair { names, instance })
}

/// Parses a monotone DNF, one conjunction per line, into the hypergraph of
/// its terms. Redundant terms are dropped and reported as warnings.
pub fn parse_dnf(text: &str) -> Result<(NamedHypergraph, Vec<String>), ParseError> {
    let parsed = parse_hypergraph(text)?;
    if parsed.hypergraph.has_empty_edge() {
        let line = text
            .lines()
            .position(|l| matches!(classify(l), Line::Edge(ref t) if t.is_empty()))
            .map_or(0, |i| i + 1);
        return Err(ParseError::new(
            line,
            "a DNF term needs at least one variable",
        ));
    }
    let minimized = parsed.hypergraph.minimize();
    let mut warnings = Vec::new();
    for e in parsed.hypergraph.edges() {
        if !minimized.edges().contains(e) {
            warnings.push(format!(
                "term {} is implied by a shorter term and was dropped",
                render_set(&parsed.names, e)
            ));
        }
    }
    let dropped_duplicates = parsed.hypergraph.len() - minimized.len() - warnings.len();
    if dropped_duplicates > 0 {
        warnings.push(format!("{dropped_duplicates} duplicate term(s) dropped"));
    }
    Ok((
        NamedHypergraph {
            names: parsed.names,
            hypergraph: minimized,
        },
        warnings,
    ))
}

/// Tokens of `set` joined by spaces, in index order.
pub fn render_tokens(names: &[String], set: &VertexSet) -> String {
    let mut out = String::new();
    for (k, v) in set.iter().enumerate() {
        if k > 0 {
            out.push(' ');
        }
        out.push_str(&names[v]);
    }
    out
}

/// `{a b c}`.
pub fn render_set(names: &[String], set: &VertexSet) -> String {
    format!("{{{}}}", render_tokens(names, set))
}

pub fn token_list(names: &[String], set: &VertexSet) -> Vec<String> {
    set.iter().map(|v| names[v].clone()).collect()
}

pub fn emit_hypergraph(names: &[String], hg: &Hypergraph) -> String {
    let mut out = String::new();
    for e in hg.edges() {
        if e.is_empty() {
            out.push_str(EMPTY_EDGE);
        } else {
            out.push_str(&render_tokens(names, e));
        }
        out.push('\n');
    }
    out
}

pub fn emit_pair(names: &[String], inst: &Instance) -> String {
    let mut out = emit_hypergraph(names, inst.g());
    out.push('\n');
    out.push_str(&emit_hypergraph(names, inst.h()));
    out
}

/// Removes `drop` from the universe, renumbering the remaining vertices.
pub fn remove_vertices(names: &[String], inst: &Instance, drop: &VertexSet) -> NamedPair {
    let keep: Vec<usize> = drop.complement().iter().collect();
    let n = keep.len();
    let mut new_index = vec![usize::MAX; names.len()];
    for (k, &v) in keep.iter().enumerate() {
        new_index[v] = k;
    }
    let remap = |hg: &Hypergraph| {
        let edges = hg
            .edges()
            .iter()
            .map(|e| {
                VertexSet::from_indices(
                    n,
                    e.iter()
                        .filter(|v| !drop.contains(*v))
                        .map(|v| new_index[v]),
                )
            })
            .collect();
        Hypergraph::new(n, edges).expect("remapped indices are in range")
    };
    NamedPair {
        names: keep.iter().map(|&v| names[v].clone()).collect(),
        instance: Instance::new(remap(inst.g()), remap(inst.h())).expect("shared universe"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const SIX_VERTEX_PAIR: &str = "\
# G
a c d
a e f
c b
e b

# H
a b
c e
c b f
e b d
d b f
";

    #[test]
    fn parses_a_pair() {
        let p = parse_pair(SIX_VERTEX_PAIR).unwrap();
        assert_eq!(p.names, ["a", "b", "c", "d", "e", "f"]);
        assert_eq!(p.instance.g().len(), 4);
        assert_eq!(p.instance.h().len(), 5);
        assert_eq!(
            p.instance.g().edges()[0],
            VertexSet::from_indices(6, [0, 2, 3])
        );
        assert_eq!(emit_pair(&p.names, &p.instance).lines().count(), 10);
        assert_eq!(parse_pair(&emit_pair(&p.names, &p.instance)).unwrap(), p);
    }

    #[test]
    fn token_order_is_independent_of_file_order() {
        let a = parse_pair("y x\nz\n\nx z\ny z\n").unwrap();
        let b = parse_pair("z\nx y\n\ny z\nz x\n").unwrap();
        assert_eq!(a.names, b.names);
        assert!(a.instance.g().same_edges(b.instance.g()));
        assert!(a.instance.h().same_edges(b.instance.h()));
    }

    #[test]
    fn comment_lines_do_not_separate() {
        let p = parse_pair("a\n# still G\nb\n\nc\n").unwrap();
        assert_eq!(p.instance.g().len(), 2);
        assert_eq!(p.instance.h().len(), 1);
        let p = parse_pair("a # trailing\n\n\n\nb\n").unwrap();
        assert_eq!(p.instance.h().len(), 1);
    }

    #[test]
    fn empty_edges_and_sides() {
        let p = parse_pair("\nEMPTYEDGE\n").unwrap();
        assert!(p.instance.g().is_empty());
        assert!(p.instance.h().has_empty_edge());
        assert!(p.instance.is_trivially_dual());
        assert_eq!(emit_pair(&p.names, &p.instance), "\nEMPTYEDGE\n");
    }

    #[test]
    fn errors_carry_line_numbers() {
        let e = parse_pair("a b\nc\n").unwrap_err();
        assert!(e.message.contains("blank line"));
        let e = parse_hypergraph("a\nEMPTYEDGE b\n").unwrap_err();
        assert_eq!(e.line, 2);
        assert_eq!(e.to_string(), "line 2: EMPTYEDGE must be alone on its line");
    }

    #[test]
    fn dnf_terms_are_minimized_with_warnings() {
        let (hg, warnings) = parse_dnf("x1 x2\nx1 x2 x3\nx2 x1\nx4\n").unwrap();
        assert_eq!(hg.hypergraph.len(), 2);
        assert_eq!(warnings.len(), 2);
        assert!(warnings[0].contains("{x1 x2 x3}"));
        assert!(parse_dnf("x1\nEMPTYEDGE\n").is_err());
    }

    #[test]
    fn removing_vertices_renumbers() {
        let p = parse_pair("a b\nb c\n\nb\na c\n").unwrap();
        let drop = VertexSet::from_indices(3, [0]);
        let q = remove_vertices(&p.names, &p.instance, &drop);
        assert_eq!(q.names, ["b", "c"]);
        assert_eq!(q.instance.g().edges()[0], VertexSet::from_indices(2, [0]));
        assert_eq!(q.instance.h().edges()[1], VertexSet::from_indices(2, [1]));
    }
}
