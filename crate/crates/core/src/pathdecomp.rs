//! Directed path-decompositions: a bag sequence in which every arc points
//! forwards (or stays inside a bag) and every vertex occupies an interval.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::layout::Layout;
use crate::set::VertexSet;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DirectedPathDecomposition {
    /// Each bag as a sorted list of vertex ids.
    pub bags: Vec<Vec<usize>>,
}

/// The first condition a decomposition breaks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "condition", rename_all = "snake_case")]
pub enum Violation {
    /// A vertex appears in no bag.
    Coverage { vertex: usize },
    /// No bag holding `from` precedes or equals a bag holding `to`.
    ArcOrder { from: usize, to: usize },
    /// The bags holding `vertex` are not consecutive.
    Interval { vertex: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Violation::Coverage { vertex } => {
                write!(f, "condition (1) violated: vertex {vertex} is in no bag")
            }
            Violation::ArcOrder { from, to } => write!(
                f,
                "condition (2) violated: arc ({from},{to}) has no bag of {from} at or before a bag of {to}"
            ),
            Violation::Interval { vertex } => write!(
                f,
                "condition (3) violated: the bags containing vertex {vertex} are not consecutive"
            ),
        }
    }
}

impl DirectedPathDecomposition {
    /// Sorts and deduplicates every bag.
    pub fn new(bags: Vec<Vec<usize>>) -> Self {
        let bags = bags
            .into_iter()
            .map(|mut b| {
                b.sort_unstable();
                b.dedup();
                b
            })
            .collect();
        DirectedPathDecomposition { bags }
    }

    pub fn from_sets(bags: &[VertexSet]) -> Self {
        DirectedPathDecomposition {
            bags: bags.iter().map(|b| b.to_vec()).collect(),
        }
    }

    /// Largest bag size minus one; `-1` when there are no nonempty bags.
    pub fn width(&self) -> isize {
        self.bags.iter().map(|b| b.len() as isize).max().unwrap_or(0) - 1
    }

    fn sets(&self, n: usize) -> Result<Vec<VertexSet>> {
        self.bags
            .iter()
            .enumerate()
            .map(|(i, b)| {
                b.iter()
                    .map(|&v| {
                        if v < n {
                            Ok(v)
                        } else {
                            Err(Error::input(format!(
                                "bag {} contains vertex {v}, digraph has {n} vertices",
                                i + 1
                            )))
                        }
                    })
                    .collect()
            })
            .collect()
    }
}

/// Checks the three decomposition conditions in order. `Ok(None)` means the
/// decomposition is valid.
pub fn validate(g: &Digraph, d: &DirectedPathDecomposition) -> Result<Option<Violation>> {
    let n = g.order();
    let bags = d.sets(n)?;
    let mut first = vec![usize::MAX; n];
    let mut last = vec![0; n];
    for (i, b) in bags.iter().enumerate() {
        for v in b.iter() {
            first[v] = first[v].min(i);
            last[v] = i;
        }
    }
    if let Some(v) = (0..n).find(|&v| first[v] == usize::MAX) {
        return Ok(Some(Violation::Coverage { vertex: v }));
    }
    if let Some((u, v)) = g.arcs().find(|&(u, v)| first[u] > last[v]) {
        return Ok(Some(Violation::ArcOrder { from: u, to: v }));
    }
    for v in 0..n {
        if (first[v]..=last[v]).any(|i| !bags[i].contains(v)) {
            return Ok(Some(Violation::Interval { vertex: v }));
        }
    }
    Ok(None)
}

/// Bag `i` holds `φ⁻¹(i)` and every earlier vertex with an in-neighbour at
/// position `i` or later.
pub fn from_layout(g: &Digraph, layout: &Layout) -> Result<DirectedPathDecomposition> {
    layout.check_for(g.order())?;
    let pos = layout.positions();
    let bags = layout
        .order()
        .iter()
        .enumerate()
        .map(|(idx, &v)| {
            let i = idx + 1;
            let mut bag = VertexSet::singleton(v);
            for &u in &layout.order()[..idx] {
                if g.in_neighbours(u).iter().any(|w| pos[w] >= i) {
                    bag.insert(u);
                }
            }
            bag
        })
        .collect::<Vec<_>>();
    Ok(DirectedPathDecomposition::from_sets(&bags))
}

/// A minimum-width decomposition found by searching introduce/forget
/// sequences directly, without going through layouts.
///
/// A vertex may be forgotten once all its in-neighbours have been introduced;
/// the bag is everything introduced and not yet forgotten.
pub fn search_min_width(g: &Digraph) -> Result<DirectedPathDecomposition> {
    let n = g.order();
    if n > 16 {
        return Err(Error::Capacity {
            what: "vertex count for decomposition search",
            actual: n,
            limit: 16,
        });
    }
    if n == 0 {
        return Ok(DirectedPathDecomposition { bags: Vec::new() });
    }
    for cap in 1..=n {
        let mut failed = HashSet::new();
        let mut bags = Vec::new();
        if search(g, cap, VertexSet::EMPTY, VertexSet::EMPTY, &mut failed, &mut bags) {
            return Ok(DirectedPathDecomposition::from_sets(&bags));
        }
    }
    unreachable!("a single bag of all vertices always works")
}

fn search(
    g: &Digraph,
    cap: usize,
    introduced: VertexSet,
    forgotten: VertexSet,
    failed: &mut HashSet<(u64, u64)>,
    bags: &mut Vec<VertexSet>,
) -> bool {
    let all = g.vertices();
    if introduced == all {
        return true;
    }
    if failed.contains(&(introduced.0, forgotten.0)) {
        return false;
    }
    let live = introduced.difference(forgotten);
    for u in live.iter() {
        if g.in_neighbours(u).is_subset(introduced)
            && search(g, cap, introduced, forgotten.with(u), failed, bags)
        {
            return true;
        }
    }
    if live.len() < cap {
        for v in all.difference(introduced).iter() {
            bags.push(live.with(v));
            if search(g, cap, introduced.with(v), forgotten, failed, bags) {
                return true;
            }
            bags.pop();
        }
    }
    failed.insert((introduced.0, forgotten.0));
    false
}
