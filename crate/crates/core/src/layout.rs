//! Layout-based width measures and the exact subset dynamic program.
//!
//! Every measure here has the shape `min over layouts φ of max over i of
//! cost(L(i, φ))`, where the cost of a prefix depends only on the prefix as a
//! set. That makes `f(S) = max(cost(S), min_{v ∈ S} f(S \ v))` exact, with
//! `f(∅) = 0` and the answer `f(V)`.

use serde::{Deserialize, Serialize};

use crate::digraph::{Adjacency, Digraph, UndirectedGraph};
use crate::error::{Error, Result};
use crate::gf::{cut_rank_gf2, cut_rank_gf4};
use crate::set::VertexSet;

/// A bijection from vertices to positions; `order[i]` sits at position `i+1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Layout {
    order: Vec<usize>,
}

impl Layout {
    pub fn new(order: Vec<usize>) -> Result<Self> {
        let n = order.len();
        let mut seen = vec![false; n];
        for &v in &order {
            if v >= n || std::mem::replace(&mut seen[v], true) {
                return Err(Error::input(format!(
                    "layout {order:?} is not a permutation of 0..{n}"
                )));
            }
        }
        Ok(Layout { order })
    }

    pub fn identity(n: usize) -> Self {
        Layout {
            order: (0..n).collect(),
        }
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// `φ(v)` in `1..=n`.
    pub fn position(&self, v: usize) -> usize {
        self.order.iter().position(|&x| x == v).expect("vertex in layout") + 1
    }

    /// Positions indexed by vertex, 1-based.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.order.len()];
        for (i, &v) in self.order.iter().enumerate() {
            pos[v] = i + 1;
        }
        pos
    }

    /// `φ^R(u) = n - φ(u) + 1`.
    pub fn reversed(&self) -> Layout {
        Layout {
            order: self.order.iter().rev().copied().collect(),
        }
    }

    /// `L(i, φ)` for `i = 0..=n`.
    pub fn prefixes(&self) -> impl Iterator<Item = VertexSet> + '_ {
        std::iter::once(VertexSet::EMPTY).chain(self.order.iter().scan(
            VertexSet::EMPTY,
            |acc, &v| {
                acc.insert(v);
                Some(*acc)
            },
        ))
    }

    pub(crate) fn check_for(&self, n: usize) -> Result<()> {
        if self.order.len() != n {
            return Err(Error::input(format!(
                "layout has {} vertices, graph has {n}",
                self.order.len()
            )));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MeasureKind {
    /// Prefix vertices with an in-arc from the suffix.
    DvsnIn,
    /// Prefix vertices with an out-arc into the suffix.
    DvsnOut,
    /// Arcs from the prefix to the suffix.
    DcutwFwd,
    /// Arcs from the suffix to the prefix.
    DcutwBwd,
    /// Distinct (out, in)-neighbourhoods of prefix vertices into the suffix.
    Dnw,
    /// GF(4) rank of the cut matrix.
    Dlrw,
    UVsn,
    UCutw,
    UNw,
    /// GF(2) rank of the cut matrix.
    ULrw,
}

impl MeasureKind {
    pub const DIRECTED: [MeasureKind; 6] = [
        MeasureKind::DvsnIn,
        MeasureKind::DvsnOut,
        MeasureKind::DcutwFwd,
        MeasureKind::DcutwBwd,
        MeasureKind::Dnw,
        MeasureKind::Dlrw,
    ];
    pub const UNDIRECTED: [MeasureKind; 4] = [
        MeasureKind::UVsn,
        MeasureKind::UCutw,
        MeasureKind::UNw,
        MeasureKind::ULrw,
    ];

    pub fn is_undirected(self) -> bool {
        matches!(
            self,
            MeasureKind::UVsn | MeasureKind::UCutw | MeasureKind::UNw | MeasureKind::ULrw
        )
    }

    /// Rank-based measures also count the pendant edges of the caterpillar.
    pub fn counts_singletons(self) -> bool {
        matches!(self, MeasureKind::Dlrw | MeasureKind::ULrw)
    }

    /// The undirected counterpart (identity on undirected kinds).
    pub fn undirected(self) -> MeasureKind {
        use MeasureKind::*;
        match self {
            DvsnIn | DvsnOut | UVsn => UVsn,
            DcutwFwd | DcutwBwd | UCutw => UCutw,
            Dnw | UNw => UNw,
            Dlrw | ULrw => ULrw,
        }
    }

    pub fn name(self) -> &'static str {
        use MeasureKind::*;
        match self {
            DvsnIn => "dvsn_in",
            DvsnOut => "dvsn_out",
            DcutwFwd => "dcutw_fwd",
            DcutwBwd => "dcutw_bwd",
            Dnw => "dnw",
            Dlrw => "dlrw",
            UVsn => "u_vsn",
            UCutw => "u_cutw",
            UNw => "u_nw",
            ULrw => "u_lrw",
        }
    }
}

/// Number of distinct neighbourhood signatures of `s` into `rest`.
pub fn neighbourhood_classes<G: Adjacency>(g: &G, s: VertexSet, rest: VertexSet) -> usize {
    let mut sigs: Vec<(u64, u64)> = s.iter().map(|u| g.signature(u, rest)).collect();
    sigs.sort_unstable();
    sigs.dedup();
    sigs.len()
}

fn directed_cost(g: &Digraph, kind: MeasureKind, s: VertexSet) -> usize {
    let rest = g.vertices().difference(s);
    match kind {
        MeasureKind::DvsnIn => s
            .iter()
            .filter(|&u| !g.in_neighbours(u).is_disjoint(rest))
            .count(),
        MeasureKind::DvsnOut => s
            .iter()
            .filter(|&u| !g.out_neighbours(u).is_disjoint(rest))
            .count(),
        MeasureKind::DcutwFwd => s
            .iter()
            .map(|u| g.out_neighbours(u).intersection(rest).len())
            .sum(),
        MeasureKind::DcutwBwd => s
            .iter()
            .map(|u| g.in_neighbours(u).intersection(rest).len())
            .sum(),
        MeasureKind::Dnw => neighbourhood_classes(g, s, rest),
        MeasureKind::Dlrw => cut_rank_gf4(g, s, rest),
        _ => unreachable!("undirected kind"),
    }
}

fn undirected_cost(g: &UndirectedGraph, kind: MeasureKind, s: VertexSet) -> usize {
    let rest = g.vertices().difference(s);
    match kind {
        MeasureKind::UVsn => s
            .iter()
            .filter(|&u| !g.neighbours(u).is_disjoint(rest))
            .count(),
        MeasureKind::UCutw => s
            .iter()
            .map(|u| g.neighbours(u).intersection(rest).len())
            .sum(),
        MeasureKind::UNw => neighbourhood_classes(g, s, rest),
        MeasureKind::ULrw => cut_rank_gf2(g, s, rest),
        _ => unreachable!("directed kind"),
    }
}

/// Cost of the cut `(S, V \ S)`. Undirected kinds are evaluated on `un(G)`.
pub fn prefix_cost(g: &Digraph, kind: MeasureKind, s: VertexSet) -> usize {
    if kind.is_undirected() {
        undirected_cost(&g.underlying_undirected(), kind, s)
    } else {
        directed_cost(g, kind, s)
    }
}

/// Cost of the cut `(S, V \ S)` for an undirected kind.
pub fn undirected_prefix_cost(g: &UndirectedGraph, kind: MeasureKind, s: VertexSet) -> Result<usize> {
    if !kind.is_undirected() {
        return Err(Error::input(format!(
            "{} is not an undirected measure",
            kind.name()
        )));
    }
    Ok(undirected_cost(g, kind, s))
}

enum Target<'a> {
    Directed(&'a Digraph),
    Undirected(&'a UndirectedGraph),
}

impl Target<'_> {
    fn order(&self) -> usize {
        match self {
            Target::Directed(g) => g.order(),
            Target::Undirected(g) => g.order(),
        }
    }

    fn cost(&self, kind: MeasureKind, s: VertexSet) -> usize {
        match self {
            Target::Directed(g) => directed_cost(g, kind, s),
            Target::Undirected(g) => undirected_cost(g, kind, s),
        }
    }

    fn singleton_term(&self, kind: MeasureKind) -> usize {
        if !kind.counts_singletons() || self.order() < 2 {
            return 0;
        }
        let all = VertexSet::full(self.order());
        (0..self.order())
            .map(|v| {
                let s = VertexSet::singleton(v);
                match self {
                    Target::Directed(g) => cut_rank_gf4(g, s, all.without(v)),
                    Target::Undirected(g) => cut_rank_gf2(*g, s, all.without(v)),
                }
            })
            .max()
            .unwrap_or(0)
    }

    fn upper_bound(&self) -> usize {
        let n = self.order();
        n * n
    }
}

fn layout_cost(t: &Target, kind: MeasureKind, layout: &Layout) -> Result<usize> {
    layout.check_for(t.order())?;
    let worst = layout
        .prefixes()
        .skip(1)
        .map(|s| t.cost(kind, s))
        .max()
        .unwrap_or(0);
    Ok(worst.max(t.singleton_term(kind)))
}

/// `max_i cost(L(i, φ))`, plus the singleton cuts for rank measures.
pub fn measure_cost(g: &Digraph, kind: MeasureKind, layout: &Layout) -> Result<usize> {
    if kind.is_undirected() {
        let u = g.underlying_undirected();
        layout_cost(&Target::Undirected(&u), kind, layout)
    } else {
        layout_cost(&Target::Directed(g), kind, layout)
    }
}

pub fn undirected_measure_cost(g: &UndirectedGraph, kind: MeasureKind, layout: &Layout) -> Result<usize> {
    if !kind.is_undirected() {
        return Err(Error::input(format!("{} is not an undirected measure", kind.name())));
    }
    layout_cost(&Target::Undirected(g), kind, layout)
}

/// Limits for the exponential solvers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolverConfig {
    /// Largest vertex count accepted by the subset dynamic programs.
    pub dp_limit: usize,
    /// Largest vertex count accepted by the expression searches.
    pub search_limit: usize,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            dp_limit: 20,
            search_limit: 10,
        }
    }
}

/// An optimal value and a layout attaining it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveResult {
    pub value: usize,
    pub layout: Layout,
}

/// Table of optimal values indexed by subset; one byte per entry when the
/// values are known to fit.
enum Table {
    Narrow(Vec<u8>),
    Wide(Vec<u16>),
}

impl Table {
    fn new(n: usize, bound: usize) -> Table {
        if bound < u8::MAX as usize {
            Table::Narrow(vec![0; 1 << n])
        } else {
            Table::Wide(vec![0; 1 << n])
        }
    }

    #[inline]
    fn get(&self, i: usize) -> usize {
        match self {
            Table::Narrow(t) => t[i] as usize,
            Table::Wide(t) => t[i] as usize,
        }
    }

    #[inline]
    fn set(&mut self, i: usize, x: usize) {
        match self {
            Table::Narrow(t) => t[i] = x as u8,
            Table::Wide(t) => t[i] = x as u16,
        }
    }
}

fn check_limit(n: usize, limit: usize) -> Result<()> {
    if n > limit {
        return Err(Error::Capacity {
            what: "vertex count for the subset dynamic program",
            actual: n,
            limit,
        });
    }
    Ok(())
}

/// Minimises `max_i step(L(i-1), φ⁻¹(i))` over all layouts of `0..n`.
///
/// `step(S, v)` is the cost of appending `v` to the prefix `S`; `bound` must
/// dominate every step cost. Ties in the witness are broken towards the
/// smallest vertex id, scanning from the end of the layout.
pub fn min_max_layout<F>(n: usize, limit: usize, bound: usize, mut step: F) -> Result<(usize, Layout)>
where
    F: FnMut(VertexSet, usize) -> usize,
{
    check_limit(n, limit.min(crate::digraph::MAX_VERTICES))?;
    let mut f = Table::new(n, bound);
    for s in 1usize..1 << n {
        let set = VertexSet(s as u64);
        let best = set
            .iter()
            .map(|v| f.get(s & !(1 << v)).max(step(set.without(v), v)))
            .min()
            .expect("nonempty set");
        f.set(s, best);
    }
    let full = (1usize << n) - 1;
    let value = f.get(full);
    let mut order = Vec::with_capacity(n);
    let mut s = full;
    while s != 0 {
        let set = VertexSet(s as u64);
        let v = set
            .iter()
            .find(|&v| f.get(s & !(1 << v)).max(step(set.without(v), v)) == f.get(s))
            .expect("optimal predecessor exists");
        order.push(v);
        s &= !(1 << v);
    }
    order.reverse();
    Ok((value, Layout { order }))
}

/// Special case of [`min_max_layout`] where the step cost only depends on the
/// resulting prefix set; each set is costed once.
pub fn min_max_prefix_layout<F>(n: usize, limit: usize, bound: usize, mut cost: F) -> Result<(usize, Layout)>
where
    F: FnMut(VertexSet) -> usize,
{
    check_limit(n, limit.min(crate::digraph::MAX_VERTICES))?;
    let mut f = Table::new(n, bound);
    for s in 1usize..1 << n {
        let set = VertexSet(s as u64);
        let inner = set
            .iter()
            .map(|v| f.get(s & !(1 << v)))
            .min()
            .expect("nonempty set");
        f.set(s, inner.max(cost(set)));
    }
    let full = (1usize << n) - 1;
    let value = f.get(full);
    let mut order = Vec::with_capacity(n);
    let mut s = full;
    while s != 0 {
        let set = VertexSet(s as u64);
        let need = f.get(s);
        let v = set
            .iter()
            .find(|&v| f.get(s & !(1 << v)) <= need)
            .expect("optimal predecessor exists");
        order.push(v);
        s &= !(1 << v);
    }
    order.reverse();
    Ok((value, Layout { order }))
}

fn solve_target(t: &Target, kind: MeasureKind, config: &SolverConfig) -> Result<SolveResult> {
    let n = t.order();
    let (value, layout) =
        min_max_prefix_layout(n, config.dp_limit, t.upper_bound(), |s| t.cost(kind, s))?;
    Ok(SolveResult {
        value: value.max(t.singleton_term(kind)),
        layout,
    })
}

pub fn solve_exact(g: &Digraph, kind: MeasureKind) -> Result<SolveResult> {
    solve_exact_with(g, kind, &SolverConfig::default())
}

/// Exact minimum of [`measure_cost`] over all layouts.
pub fn solve_exact_with(g: &Digraph, kind: MeasureKind, config: &SolverConfig) -> Result<SolveResult> {
    if kind.is_undirected() {
        let u = g.underlying_undirected();
        solve_target(&Target::Undirected(&u), kind, config)
    } else {
        solve_target(&Target::Directed(g), kind, config)
    }
}

pub fn undirected_measure(g: &UndirectedGraph, kind: MeasureKind) -> Result<SolveResult> {
    undirected_measure_with(g, kind, &SolverConfig::default())
}

pub fn undirected_measure_with(
    g: &UndirectedGraph,
    kind: MeasureKind,
    config: &SolverConfig,
) -> Result<SolveResult> {
    if !kind.is_undirected() {
        return Err(Error::input(format!("{} is not an undirected measure", kind.name())));
    }
    solve_target(&Target::Undirected(g), kind, config)
}

/// Directed path-width, computed as the directed vertex separation number.
pub fn dpw(g: &Digraph) -> Result<SolveResult> {
    solve_exact(g, MeasureKind::DvsnIn)
}
