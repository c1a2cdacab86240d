//! Plain-text graph format.
//!
//! ```text
//! # comment
//! n m          (digraph)      or      u n m   (undirected)
//! u v          one line per arc / edge
//! ```
//!
//! Blank lines and `#` comments are ignored. Vertex tokens may be arbitrary
//! labels; when every token is an integer in `0..n` the ids are used as is,
//! otherwise labels are numbered in order of first appearance.

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::digraph::{Digraph, UndirectedGraph};
use crate::error::{Error, Result};

/// A parsed graph together with the original vertex labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Parsed<G> {
    pub graph: G,
    /// `labels[v]` is the token that named vertex `v` in the input.
    pub labels: Vec<String>,
}

struct Raw {
    undirected: bool,
    n: usize,
    pairs: Vec<(String, String, usize)>,
}

fn read_raw(text: &str) -> Result<Raw> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (hline, header) = lines
        .next()
        .ok_or_else(|| Error::input("line 1: missing header `n m`"))?;
    let toks: Vec<&str> = header.split_whitespace().collect();
    let (undirected, nums) = match toks.as_slice() {
        ["u", a, b] => (true, [*a, *b]),
        [a, b] => (false, [*a, *b]),
        _ => {
            return Err(Error::input(format!(
                "line {hline}: expected header `n m` or `u n m`, got `{header}`"
            )))
        }
    };
    let parse = |s: &str| -> Result<usize> {
        s.parse()
            .map_err(|_| Error::input(format!("line {hline}: `{s}` is not a count")))
    };
    let (n, m) = (parse(nums[0])?, parse(nums[1])?);
    let mut pairs = Vec::with_capacity(m);
    for (lineno, line) in lines {
        let toks: Vec<&str> = line.split_whitespace().collect();
        match toks.as_slice() {
            [u, v] => pairs.push((u.to_string(), v.to_string(), lineno)),
            _ => {
                return Err(Error::input(format!(
                    "line {lineno}: expected `u v`, got `{line}`"
                )))
            }
        }
    }
    if pairs.len() != m {
        return Err(Error::input(format!(
            "header announces {m} pairs but {} were given",
            pairs.len()
        )));
    }
    Ok(Raw {
        undirected,
        n,
        pairs,
    })
}

fn resolve<'a>(raw: &'a Raw) -> Result<(Vec<(usize, usize, usize)>, Vec<String>)> {
    let n = raw.n;
    let numeric = raw.pairs.iter().all(|(u, v, _)| {
        [u, v]
            .iter()
            .all(|t| t.parse::<usize>().map(|x| x < n).unwrap_or(false))
    });
    if numeric {
        let pairs = raw
            .pairs
            .iter()
            .map(|(u, v, l)| (u.parse().unwrap(), v.parse().unwrap(), *l))
            .collect();
        return Ok((pairs, (0..n).map(|i| i.to_string()).collect()));
    }
    let mut ids: HashMap<&'a str, usize> = HashMap::new();
    let mut labels = Vec::new();
    let mut pairs = Vec::with_capacity(raw.pairs.len());
    for (u, v, line) in &raw.pairs {
        let mut id = |t: &'a str| -> Result<usize> {
            if let Some(&i) = ids.get(t) {
                return Ok(i);
            }
            if labels.len() == n {
                return Err(Error::input(format!(
                    "line {line}: more than {n} distinct vertex labels"
                )));
            }
            labels.push(t.to_string());
            Ok(*ids.entry(t).or_insert(labels.len() - 1))
        };
        let (a, b) = (id(u.as_str())?, id(v.as_str())?);
        pairs.push((a, b, *line));
    }
    for i in labels.len()..n {
        labels.push(format!("#{i}"));
    }
    Ok((pairs, labels))
}

fn line_error(e: Error, line: usize) -> Error {
    match e {
        Error::Input(msg) => Error::Input(format!("line {line}: {msg}")),
        other => other,
    }
}

pub fn parse_digraph(text: &str) -> Result<Parsed<Digraph>> {
    let raw = read_raw(text)?;
    if raw.undirected {
        return Err(Error::input("expected a digraph, found an undirected header"));
    }
    let (pairs, labels) = resolve(&raw)?;
    for &(u, v, line) in &pairs {
        Digraph::from_arcs(raw.n, [(u, v)]).map_err(|e| line_error(e, line))?;
    }
    let graph = Digraph::from_arcs(raw.n, pairs.iter().map(|&(u, v, _)| (u, v)))?;
    Ok(Parsed { graph, labels })
}

pub fn parse_undirected(text: &str) -> Result<Parsed<UndirectedGraph>> {
    let raw = read_raw(text)?;
    if !raw.undirected {
        return Err(Error::input("expected an undirected header `u n m`"));
    }
    let (pairs, labels) = resolve(&raw)?;
    for &(u, v, line) in &pairs {
        UndirectedGraph::from_edges(raw.n, [(u, v)]).map_err(|e| line_error(e, line))?;
    }
    let graph = UndirectedGraph::from_edges(raw.n, pairs.iter().map(|&(u, v, _)| (u, v)))?;
    Ok(Parsed { graph, labels })
}

/// Either kind of graph, as determined by the header.
pub enum AnyGraph {
    Directed(Parsed<Digraph>),
    Undirected(Parsed<UndirectedGraph>),
}

pub fn parse_any(text: &str) -> Result<AnyGraph> {
    if read_raw(text)?.undirected {
        parse_undirected(text).map(AnyGraph::Undirected)
    } else {
        parse_digraph(text).map(AnyGraph::Directed)
    }
}

pub fn write_digraph(g: &Digraph) -> String {
    let mut s = format!("{} {}\n", g.order(), g.arc_count());
    for (u, v) in g.arcs() {
        let _ = writeln!(s, "{u} {v}");
    }
    s
}

pub fn write_undirected(g: &UndirectedGraph) -> String {
    let mut s = format!("u {} {}\n", g.order(), g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(s, "{u} {v}");
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_numeric_digraph_with_comments() {
        let p = parse_digraph("# path\n3 2\n\n0 1 # first\n1 2\n").unwrap();
        assert_eq!(p.graph, Digraph::from_arcs(3, [(0, 1), (1, 2)]).unwrap());
        assert_eq!(p.labels, vec!["0", "1", "2"]);
    }

    #[test]
    fn maps_arbitrary_labels() {
        let p = parse_digraph("3 2\nb a\na c\n").unwrap();
        assert_eq!(p.labels, vec!["b", "a", "c"]);
        assert_eq!(p.graph, Digraph::from_arcs(3, [(0, 1), (1, 2)]).unwrap());
    }

    #[test]
    fn reports_line_numbers() {
        let err = parse_digraph("2 1\n\n0 0\n").unwrap_err();
        assert!(err.to_string().contains("line 3"), "{err}");
        let err = parse_digraph("2 2\n0 1\n").unwrap_err();
        assert!(matches!(err, Error::Input(_)));
        let err = parse_digraph("2 1\n0 1 2\n").unwrap_err();
        assert!(err.to_string().contains("line 2"));
    }

    #[test]
    fn undirected_round_trip() {
        let g = UndirectedGraph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        let p = parse_undirected(&write_undirected(&g)).unwrap();
        assert_eq!(p.graph, g);
        assert!(parse_digraph(&write_undirected(&g)).is_err());
    }

    #[test]
    fn digraph_round_trip() {
        let g = Digraph::from_arcs(4, [(0, 1), (1, 0), (3, 2)]).unwrap();
        assert_eq!(parse_digraph(&write_digraph(&g)).unwrap().graph, g);
    }
}
