//! Plain-text formats.
//!
//! Digraph:
//! ```text
//! # optional comments
//! digraph <n> <m>
//! <u> <v>        (m lines)
//! ```
//! A Steiner instance is a digraph block followed by `root <v>`, any number
//! of `terminal <v>` lines and `budget <k>`.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Digraph;
use crate::steiner::DstInstance;
use crate::vertex_set::VertexSet;

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

fn significant_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_num(line: usize, tok: Option<&str>, what: &str) -> Result<usize> {
    let tok = tok.ok_or_else(|| parse_err(line, format!("missing {what}")))?;
    tok.parse().map_err(|_| parse_err(line, format!("bad {what} `{tok}`")))
}

fn expect_end<'a>(line: usize, mut toks: impl Iterator<Item = &'a str>) -> Result<()> {
    match toks.next() {
        None => Ok(()),
        Some(t) => Err(parse_err(line, format!("unexpected token `{t}`"))),
    }
}

/// Parses the digraph block at the start of `lines`, returning the graph and
/// the remaining lines.
fn parse_digraph_lines<'a, I>(lines: &mut I) -> Result<Digraph>
where
    I: Iterator<Item = (usize, &'a str)>,
{
    let (hline, header) = lines.next().ok_or_else(|| parse_err(0, "missing `digraph <n> <m>` header"))?;
    let mut toks = header.split_whitespace();
    if toks.next() != Some("digraph") {
        return Err(parse_err(hline, "expected `digraph <n> <m>` header"));
    }
    let n = parse_num(hline, toks.next(), "vertex count")?;
    let m = parse_num(hline, toks.next(), "arc count")?;
    expect_end(hline, toks)?;
    let mut arcs = Vec::with_capacity(m);
    let mut last_line = hline;
    for _ in 0..m {
        let (ln, text) =
            lines.next().ok_or_else(|| parse_err(last_line, format!("expected {m} arcs, found {}", arcs.len())))?;
        last_line = ln;
        let mut toks = text.split_whitespace();
        let u = parse_num(ln, toks.next(), "tail")?;
        let v = parse_num(ln, toks.next(), "head")?;
        expect_end(ln, toks)?;
        if u >= n || v >= n {
            return Err(parse_err(ln, format!("arc ({u},{v}) out of range for n={n}")));
        }
        if u == v {
            return Err(parse_err(ln, format!("self-loop at {u}")));
        }
        arcs.push((ln, u, v));
    }
    let mut sorted: Vec<(usize, usize, usize)> = arcs.iter().map(|&(ln, u, v)| (u, v, ln)).collect();
    sorted.sort_unstable();
    if let Some(w) = sorted.windows(2).find(|w| w[0].0 == w[1].0 && w[0].1 == w[1].1) {
        return Err(parse_err(w[1].2, format!("duplicate arc ({},{})", w[1].0, w[1].1)));
    }
    Digraph::from_arcs(n, arcs.into_iter().map(|(_, u, v)| (u, v)))
}

pub fn parse_digraph(text: &str) -> Result<Digraph> {
    let mut lines = significant_lines(text);
    let g = parse_digraph_lines(&mut lines)?;
    if let Some((ln, extra)) = lines.next() {
        return Err(parse_err(ln, format!("trailing content `{extra}`")));
    }
    Ok(g)
}

/// Serializes `g`, each entry of `comments` becoming a `# ...` line first.
pub fn write_digraph(g: &Digraph, comments: &[String]) -> String {
    let mut out = String::new();
    for c in comments {
        let _ = writeln!(out, "# {c}");
    }
    let _ = writeln!(out, "digraph {} {}", g.n(), g.m());
    for (u, v) in g.arcs() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

pub fn parse_dst_instance(text: &str) -> Result<DstInstance> {
    let mut lines = significant_lines(text);
    let g = parse_digraph_lines(&mut lines)?;
    let n = g.n();
    let mut root = None;
    let mut budget = None;
    let mut terminals = VertexSet::new(n);
    for (ln, text) in lines {
        let mut toks = text.split_whitespace();
        let key = toks.next().unwrap_or_default();
        let value = parse_num(ln, toks.next(), key)?;
        expect_end(ln, toks)?;
        match key {
            "root" | "terminal" if value >= n => {
                return Err(parse_err(ln, format!("vertex {value} out of range for n={n}")))
            }
            "root" if root.is_some() => return Err(parse_err(ln, "root given twice")),
            "root" => root = Some(value),
            "terminal" => {
                if !terminals.insert(value) {
                    return Err(parse_err(ln, format!("terminal {value} given twice")));
                }
            }
            "budget" if budget.is_some() => return Err(parse_err(ln, "budget given twice")),
            "budget" => budget = Some(value),
            other => return Err(parse_err(ln, format!("unknown key `{other}`"))),
        }
    }
    let root = root.ok_or_else(|| parse_err(0, "missing `root` line"))?;
    let budget = budget.ok_or_else(|| parse_err(0, "missing `budget` line"))?;
    DstInstance::new(g, root, terminals, budget)
}

pub fn write_dst_instance(inst: &DstInstance, comments: &[String]) -> String {
    let mut out = write_digraph(&inst.graph, comments);
    let _ = writeln!(out, "root {}", inst.root);
    for t in inst.terminals.iter() {
        let _ = writeln!(out, "terminal {t}");
    }
    let _ = writeln!(out, "budget {}", inst.budget);
    out
}

/// One vertex index per line; `#` comments and blank lines ignored.
pub fn parse_vertex_list(text: &str, n: usize) -> Result<VertexSet> {
    let mut set = VertexSet::new(n);
    for (ln, line) in significant_lines(text) {
        let mut toks = line.split_whitespace();
        let v = parse_num(ln, toks.next(), "vertex")?;
        expect_end(ln, toks)?;
        if v >= n {
            return Err(parse_err(ln, format!("vertex {v} out of range for n={n}")));
        }
        set.insert(v);
    }
    Ok(set)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_with_comments() {
        let g = parse_digraph("# hello\ndigraph 3 2\n0 1\n# mid\n1 2\n").unwrap();
        assert_eq!(g.arcs().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
        let text = write_digraph(&g, &["recipe".into()]);
        assert_eq!(text, "# recipe\ndigraph 3 2\n0 1\n1 2\n");
        assert_eq!(parse_digraph(&text).unwrap(), g);
    }

    #[test]
    fn rejects_malformed() {
        for bad in [
            "digraph 2 1\n0 0\n",
            "digraph 2 2\n0 1\n0 1\n",
            "digraph 2 1\n0 5\n",
            "digraph 2 2\n0 1\n",
            "graph 2 0\n",
            "digraph 2 0\n0 1\n",
            "digraph x 0\n",
            "",
        ] {
            assert!(parse_digraph(bad).is_err(), "accepted {bad:?}");
        }
        match parse_digraph("digraph 3 2\n0 1\n0 1\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn dst_instance_round_trip() {
        let text = "digraph 3 2\n0 1\n1 2\nroot 0\nterminal 2\nbudget 1\n";
        let inst = parse_dst_instance(text).unwrap();
        assert_eq!(inst.root, 0);
        assert_eq!(inst.terminals.to_vec(), vec![2]);
        assert_eq!(inst.budget, 1);
        assert_eq!(write_dst_instance(&inst, &[]), text);
        assert!(parse_dst_instance("digraph 2 0\nroot 0\nterminal 0\nbudget 0\n").is_err());
        assert!(parse_dst_instance("digraph 2 0\nterminal 1\nbudget 0\n").is_err());
    }

    #[test]
    fn vertex_lists() {
        assert_eq!(parse_vertex_list("1\n# c\n3\n", 4).unwrap().to_vec(), vec![1, 3]);
        assert!(parse_vertex_list("9\n", 4).is_err());
    }
}
