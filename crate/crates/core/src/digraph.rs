//! Loop-free digraphs and undirected graphs on at most 64 vertices.
//!
//! Vertices are the integers `0..n`. Each vertex keeps its out- and
//! in-neighbourhood as a [`VertexSet`], so arc tests are O(1) and the
//! subset dynamic programs can intersect neighbourhoods with a prefix set
//! without allocating.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::set::VertexSet;

/// Hard cap on the number of vertices (one machine word per neighbourhood).
pub const MAX_VERTICES: usize = 64;

/// Read access to a neighbourhood structure. Undirected graphs expose the
/// same set as out- and in-neighbourhood.
pub trait Adjacency {
    fn order(&self) -> usize;
    fn out_set(&self, v: usize) -> VertexSet;
    fn in_set(&self, v: usize) -> VertexSet;

    /// `(N+_W(v), N-_W(v))`.
    #[inline]
    fn signature(&self, v: usize, within: VertexSet) -> (u64, u64) {
        (
            self.out_set(v).intersection(within).0,
            self.in_set(v).intersection(within).0,
        )
    }
}

fn check_order(n: usize) -> Result<()> {
    if n > MAX_VERTICES {
        return Err(Error::Capacity {
            what: "vertex count",
            actual: n,
            limit: MAX_VERTICES,
        });
    }
    Ok(())
}

/// A loop-free digraph with vertex set `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Digraph {
    out: Vec<VertexSet>,
    inn: Vec<VertexSet>,
}

/// Maximum out-degree, in-degree and total degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeProfile {
    pub max_out: usize,
    pub max_in: usize,
    pub max_total: usize,
}

impl DegreeProfile {
    /// `min(Δ⁻, Δ⁺)`, the factor appearing in the path-width bounds.
    pub fn min_in_out(&self) -> usize {
        self.max_in.min(self.max_out)
    }
}

/// Structural class of a digraph, most specific first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DigraphClass {
    Edgeless,
    Complete,
    Tournament,
    Semicomplete,
    Oriented,
    General,
}

impl Digraph {
    /// The edgeless digraph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        check_order(n)?;
        Ok(Digraph {
            out: vec![VertexSet::EMPTY; n],
            inn: vec![VertexSet::EMPTY; n],
        })
    }

    /// Builds a digraph from an arc list. Duplicate arcs are merged; loops and
    /// out-of-range endpoints are rejected.
    pub fn from_arcs<I>(n: usize, arcs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Digraph::empty(n)?;
        for (u, v) in arcs {
            if u >= n || v >= n {
                return Err(Error::input(format!(
                    "arc ({u},{v}) has an endpoint outside 0..{n}"
                )));
            }
            if u == v {
                return Err(Error::input(format!("loop at vertex {u}")));
            }
            g.out[u].insert(v);
            g.inn[v].insert(u);
        }
        Ok(g)
    }

    /// Builds a digraph from out-neighbourhood masks. Bits outside `0..n` and
    /// loops are dropped.
    pub fn from_out_sets(out: Vec<VertexSet>) -> Result<Self> {
        let n = out.len();
        check_order(n)?;
        let full = VertexSet::full(n);
        let out: Vec<VertexSet> = out
            .into_iter()
            .enumerate()
            .map(|(v, s)| s.intersection(full).without(v))
            .collect();
        let mut inn = vec![VertexSet::EMPTY; n];
        for (u, s) in out.iter().enumerate() {
            for v in s.iter() {
                inn[v].insert(u);
            }
        }
        Ok(Digraph { out, inn })
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.out.len()
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.order())
    }

    #[inline]
    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.out[u].contains(v)
    }

    #[inline]
    pub fn out_neighbours(&self, v: usize) -> VertexSet {
        self.out[v]
    }

    #[inline]
    pub fn in_neighbours(&self, v: usize) -> VertexSet {
        self.inn[v]
    }

    pub fn arc_count(&self) -> usize {
        self.out.iter().map(|s| s.len()).sum()
    }

    /// Arcs in lexicographic order.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.out
            .iter()
            .enumerate()
            .flat_map(|(u, s)| s.iter().map(move |v| (u, v)))
    }

    /// `un(G)`: `{u,v}` is an edge iff `(u,v)` or `(v,u)` is an arc.
    pub fn underlying_undirected(&self) -> UndirectedGraph {
        UndirectedGraph {
            adj: self
                .out
                .iter()
                .zip(&self.inn)
                .map(|(o, i)| o.union(*i))
                .collect(),
        }
    }

    /// The digraph with every arc reversed.
    pub fn converse(&self) -> Digraph {
        Digraph {
            out: self.inn.clone(),
            inn: self.out.clone(),
        }
    }

    /// `G[S]`, relabelled to `0..|S|` by ascending original id.
    pub fn induced_subdigraph(&self, s: VertexSet) -> Result<Digraph> {
        if !s.is_subset(self.vertices()) {
            return Err(Error::input(format!(
                "vertex set {s:?} is not a subset of 0..{}",
                self.order()
            )));
        }
        let ids = s.to_vec();
        let remap = |t: VertexSet| -> VertexSet {
            ids.iter()
                .enumerate()
                .filter(|(_, &v)| t.contains(v))
                .map(|(i, _)| i)
                .collect()
        };
        let out = ids.iter().map(|&v| remap(self.out[v])).collect();
        Digraph::from_out_sets(out)
    }

    /// Applies a vertex permutation: vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Digraph {
        let n = self.order();
        let mut out = vec![VertexSet::EMPTY; n];
        for (u, v) in self.arcs() {
            out[perm[u]].insert(perm[v]);
        }
        Digraph::from_out_sets(out).expect("permutation preserves order")
    }

    pub fn degree_profile(&self) -> DegreeProfile {
        let mut p = DegreeProfile {
            max_out: 0,
            max_in: 0,
            max_total: 0,
        };
        for v in 0..self.order() {
            let (o, i) = (self.out[v].len(), self.inn[v].len());
            p.max_out = p.max_out.max(o);
            p.max_in = p.max_in.max(i);
            p.max_total = p.max_total.max(o + i);
        }
        p
    }

    /// True iff there is no directed cycle; a pair of opposite arcs counts as
    /// a cycle of length two.
    pub fn is_dag(&self) -> bool {
        self.topological_order().is_some()
    }

    /// A topological order (smallest available vertex first), if one exists.
    pub fn topological_order(&self) -> Option<Vec<usize>> {
        let n = self.order();
        let mut remaining = self.vertices();
        let mut order = Vec::with_capacity(n);
        while !remaining.is_empty() {
            let v = remaining
                .iter()
                .find(|&v| self.inn[v].is_disjoint(remaining))?;
            order.push(v);
            remaining.remove(v);
        }
        Some(order)
    }

    pub fn is_semicomplete(&self) -> bool {
        (0..self.order()).all(|v| {
            self.out[v].union(self.inn[v]) == self.vertices().without(v)
        })
    }

    pub fn classify(&self) -> DigraphClass {
        let n = self.order();
        let all = self.vertices();
        let mut has_both = false;
        let mut has_none = false;
        for v in 0..n {
            let others = all.without(v);
            if !self.out[v].intersection(self.inn[v]).is_empty() {
                has_both = true;
            }
            if self.out[v].union(self.inn[v]) != others {
                has_none = true;
            }
        }
        if self.arc_count() == 0 {
            DigraphClass::Edgeless
        } else if !has_none && (0..n).all(|v| self.out[v] == all.without(v)) {
            DigraphClass::Complete
        } else if !has_none && !has_both {
            DigraphClass::Tournament
        } else if !has_none {
            DigraphClass::Semicomplete
        } else if !has_both {
            DigraphClass::Oriented
        } else {
            DigraphClass::General
        }
    }

    /// True iff some vertex subset of `self` induces a copy of `h`.
    ///
    /// Plain backtracking over injections, pruned by out/in-degree.
    pub fn contains_induced(&self, h: &Digraph) -> bool {
        let (n, k) = (self.order(), h.order());
        if k > n {
            return false;
        }
        let mut image = vec![usize::MAX; k];
        self.extend_embedding(h, 0, VertexSet::EMPTY, &mut image)
    }

    fn extend_embedding(
        &self,
        h: &Digraph,
        next: usize,
        used: VertexSet,
        image: &mut [usize],
    ) -> bool {
        if next == h.order() {
            return true;
        }
        let (ho, hi) = (h.out[next].len(), h.inn[next].len());
        for cand in self.vertices().difference(used) {
            if self.out[cand].len() < ho || self.inn[cand].len() < hi {
                continue;
            }
            let consistent = (0..next).all(|j| {
                h.has_arc(next, j) == self.has_arc(cand, image[j])
                    && h.has_arc(j, next) == self.has_arc(image[j], cand)
            });
            if consistent {
                image[next] = cand;
                if self.extend_embedding(h, next + 1, used.with(cand), image) {
                    return true;
                }
            }
        }
        false
    }
}

impl std::fmt::Debug for Digraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Digraph(n={}, arcs={:?})", self.order(), self.arcs().collect::<Vec<_>>())
    }
}

impl Adjacency for Digraph {
    fn order(&self) -> usize {
        self.out.len()
    }
    #[inline]
    fn out_set(&self, v: usize) -> VertexSet {
        self.out[v]
    }
    #[inline]
    fn in_set(&self, v: usize) -> VertexSet {
        self.inn[v]
    }
}

/// A simple undirected graph with vertex set `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct UndirectedGraph {
    adj: Vec<VertexSet>,
}

impl UndirectedGraph {
    pub fn empty(n: usize) -> Result<Self> {
        check_order(n)?;
        Ok(UndirectedGraph {
            adj: vec![VertexSet::EMPTY; n],
        })
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = UndirectedGraph::empty(n)?;
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::input(format!(
                    "edge {{{u},{v}}} has an endpoint outside 0..{n}"
                )));
            }
            if u == v {
                return Err(Error::input(format!("loop at vertex {u}")));
            }
            g.adj[u].insert(v);
            g.adj[v].insert(u);
        }
        Ok(g)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.order())
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    #[inline]
    pub fn neighbours(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    /// Edges `(u,v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, s)| s.iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(|s| s.len()).max().unwrap_or(0)
    }

    /// `↔G`: every edge replaced by both opposite arcs.
    pub fn complete_biorientation(&self) -> Digraph {
        Digraph {
            out: self.adj.clone(),
            inn: self.adj.clone(),
        }
    }

    pub fn permuted(&self, perm: &[usize]) -> UndirectedGraph {
        let mut g = UndirectedGraph::empty(self.order()).expect("same order");
        for (u, v) in self.edges() {
            g.adj[perm[u]].insert(perm[v]);
            g.adj[perm[v]].insert(perm[u]);
        }
        g
    }

    /// True iff the graph contains `K_{l,l}` as a (not necessarily induced)
    /// subgraph.
    pub fn has_complete_bipartite_subgraph(&self, l: usize) -> bool {
        if l == 0 {
            return true;
        }
        // Choose the left side; the right side must be l common neighbours.
        fn pick(
            g: &UndirectedGraph,
            l: usize,
            start: usize,
            left: VertexSet,
            common: VertexSet,
        ) -> bool {
            if left.len() == l {
                return common.difference(left).len() >= l;
            }
            (start..g.order()).any(|v| {
                let c = if left.is_empty() {
                    g.adj[v]
                } else {
                    common.intersection(g.adj[v])
                };
                c.difference(left).len() >= l && pick(g, l, v + 1, left.with(v), c)
            })
        }
        pick(self, l, 0, VertexSet::EMPTY, VertexSet::EMPTY)
    }
}

impl std::fmt::Debug for UndirectedGraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.order(), self.edges().collect::<Vec<_>>())
    }
}

impl Adjacency for UndirectedGraph {
    fn order(&self) -> usize {
        self.adj.len()
    }
    #[inline]
    fn out_set(&self, v: usize) -> VertexSet {
        self.adj[v]
    }
    #[inline]
    fn in_set(&self, v: usize) -> VertexSet {
        self.adj[v]
    }
}
