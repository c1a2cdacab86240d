//! Exhaustive enumeration of small digraphs and graphs, optionally one per
//! isomorphism class.
//!
//! A graph is encoded as a bit string over vertex pairs in lexicographic
//! order, first pair most significant. The canonical form is the minimum code
//! over all vertex permutations; a representative is kept only if it already
//! is canonical, which most labelled graphs disprove after a few permutations.

use crate::digraph::{Digraph, UndirectedGraph};
use crate::error::{Error, Result};
use crate::set::VertexSet;

/// Largest order accepted by the enumerators.
pub const ENUMERATION_LIMIT: usize = 5;

fn check(n: usize) -> Result<()> {
    if n > ENUMERATION_LIMIT {
        return Err(Error::Capacity {
            what: "vertex count for exhaustive enumeration",
            actual: n,
            limit: ENUMERATION_LIMIT,
        });
    }
    Ok(())
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    loop {
        out.push(p.clone());
        let Some(i) = (1..n).rev().find(|&i| p[i - 1] < p[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| p[j] > p[i - 1]).expect("successor exists");
        p.swap(i - 1, j);
        p[i..].reverse();
    }
}

fn ordered_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v)))
        .collect()
}

fn unordered_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect()
}

struct Coder {
    n: usize,
    index: Vec<usize>,
    bits: usize,
    directed: bool,
}

impl Coder {
    fn new(n: usize, directed: bool) -> Self {
        let pairs = if directed { ordered_pairs(n) } else { unordered_pairs(n) };
        let mut index = vec![usize::MAX; n * n];
        for (i, &(u, v)) in pairs.iter().enumerate() {
            index[u * n + v] = i;
            if !directed {
                index[v * n + u] = i;
            }
        }
        Coder {
            n,
            index,
            bits: pairs.len(),
            directed,
        }
    }

    fn bit(&self, u: usize, v: usize) -> u64 {
        1u64 << (self.bits - 1 - self.index[u * self.n + v])
    }

    fn code<I: Iterator<Item = (usize, usize)>>(&self, pairs: I, perm: &[usize]) -> u64 {
        pairs.map(|(u, v)| self.bit(perm[u], perm[v])).fold(0, |a, b| a | b)
    }

    fn pairs_of(&self, code: u64) -> Vec<(usize, usize)> {
        let all = if self.directed {
            ordered_pairs(self.n)
        } else {
            unordered_pairs(self.n)
        };
        all.into_iter()
            .enumerate()
            .filter(|&(i, _)| code >> (self.bits - 1 - i) & 1 == 1)
            .map(|(_, p)| p)
            .collect()
    }
}

/// Minimum code of `g` over all vertex permutations.
pub fn canonical_code(g: &Digraph) -> u64 {
    let c = Coder::new(g.order(), true);
    permutations(g.order())
        .iter()
        .map(|p| c.code(g.arcs(), p))
        .min()
        .unwrap_or(0)
}

/// Minimum code of `g` over all vertex permutations.
pub fn canonical_code_undirected(g: &UndirectedGraph) -> u64 {
    let c = Coder::new(g.order(), false);
    permutations(g.order())
        .iter()
        .map(|p| c.code(g.edges(), p))
        .min()
        .unwrap_or(0)
}

pub fn is_isomorphic(g: &Digraph, h: &Digraph) -> bool {
    g.order() == h.order() && g.arc_count() == h.arc_count() && canonical_code(g) == canonical_code(h)
}

fn enumerate(n: usize, directed: bool, up_to_iso: bool) -> Vec<Vec<(usize, usize)>> {
    let c = Coder::new(n, directed);
    let perms = if up_to_iso { permutations(n) } else { Vec::new() };
    let mut out = Vec::new();
    for code in 0..1u64 << c.bits {
        let pairs = c.pairs_of(code);
        if up_to_iso && perms.iter().any(|p| c.code(pairs.iter().copied(), p) < code) {
            continue;
        }
        out.push(pairs);
    }
    out
}

/// Every loop-free digraph on `0..n`, or one per isomorphism class.
pub fn enumerate_digraphs(n: usize, up_to_iso: bool) -> Result<Vec<Digraph>> {
    check(n)?;
    enumerate(n, true, up_to_iso)
        .into_iter()
        .map(|arcs| Digraph::from_arcs(n, arcs))
        .collect()
}

/// Every simple graph on `0..n`, or one per isomorphism class.
pub fn enumerate_undirected(n: usize, up_to_iso: bool) -> Result<Vec<UndirectedGraph>> {
    check(n)?;
    enumerate(n, false, up_to_iso)
        .into_iter()
        .map(|edges| UndirectedGraph::from_edges(n, edges))
        .collect()
}

/// Every induced subdigraph on `n - 1` vertices.
pub fn vertex_deletions(g: &Digraph) -> Vec<Digraph> {
    let all = g.vertices();
    (0..g.order())
        .map(|v| g.induced_subdigraph(all.difference(VertexSet::singleton(v))).expect("subset"))
        .collect()
}
