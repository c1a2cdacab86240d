//! Generators for the named digraph families.

use serde::{Deserialize, Serialize};

use crate::digraph::{Digraph, UndirectedGraph};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum FamilySpec {
    /// `→P_n`: arcs `(i, i+1)`.
    DirectedPath { n: usize },
    /// `→C_n`: `→P_n` plus `(n-1, 0)`. Needs `n ≥ 2`.
    DirectedCycle { n: usize },
    /// `↔K_n`.
    BidirectionalComplete { n: usize },
    /// `(→P_n)^k`: arc `(i, j)` iff `0 < j - i ≤ k`.
    PathPower { n: usize, k: usize },
    /// `↔G_n`: complete biorientation of the `n×n` grid, row-major ids.
    BiorientedGrid { n: usize },
    /// `↔K_{1,n}` with centre `0`.
    BiorientedStar { n: usize },
    /// `↔K_{n,m}`: parts `0..n` and `n..n+m`.
    BiorientedCompleteBipartite { n: usize, m: usize },
    /// Arc `(i, j)` iff `i < j`.
    TransitiveTournament { n: usize },
    /// Path on `orientation.len() + 1` vertices; `true` orients edge
    /// `{i, i+1}` forward.
    OrientedPath { orientation: Vec<bool> },
}

fn need(cond: bool, msg: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::input(msg.to_string()))
    }
}

pub fn generate(spec: &FamilySpec) -> Result<Digraph> {
    use FamilySpec::*;
    match *spec {
        DirectedPath { n } => {
            need(n >= 1, "directed_path needs n >= 1")?;
            Digraph::from_arcs(n, (1..n).map(|i| (i - 1, i)))
        }
        DirectedCycle { n } => {
            need(n >= 2, "directed_cycle needs n >= 2")?;
            Digraph::from_arcs(n, (0..n).map(|i| (i, (i + 1) % n)))
        }
        BidirectionalComplete { n } => Digraph::from_arcs(
            n,
            (0..n).flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v))),
        ),
        PathPower { n, k } => {
            need(n >= 1, "path_power needs n >= 1")?;
            need(k >= 1, "path_power needs k >= 1")?;
            Digraph::from_arcs(
                n,
                (0..n).flat_map(|i| (i + 1..n.min(i + k + 1)).map(move |j| (i, j))),
            )
        }
        BiorientedGrid { n } => {
            need(n >= 1, "bioriented_grid needs n >= 1")?;
            let id = |r: usize, c: usize| r * n + c;
            let mut edges = Vec::new();
            for r in 0..n {
                for c in 0..n {
                    if c + 1 < n {
                        edges.push((id(r, c), id(r, c + 1)));
                    }
                    if r + 1 < n {
                        edges.push((id(r, c), id(r + 1, c)));
                    }
                }
            }
            Ok(UndirectedGraph::from_edges(n * n, edges)?.complete_biorientation())
        }
        BiorientedStar { n } => {
            Ok(UndirectedGraph::from_edges(n + 1, (1..=n).map(|v| (0, v)))?.complete_biorientation())
        }
        BiorientedCompleteBipartite { n, m } => Ok(UndirectedGraph::from_edges(
            n + m,
            (0..n).flat_map(|u| (n..n + m).map(move |v| (u, v))),
        )?
        .complete_biorientation()),
        TransitiveTournament { n } => {
            Digraph::from_arcs(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))))
        }
        OrientedPath { ref orientation } => Digraph::from_arcs(
            orientation.len() + 1,
            orientation
                .iter()
                .enumerate()
                .map(|(i, &fwd)| if fwd { (i, i + 1) } else { (i + 1, i) }),
        ),
    }
}

/// All orientations of the path on `n ≥ 2` vertices.
pub fn oriented_paths(n: usize) -> impl Iterator<Item = Vec<bool>> {
    let edges = n.saturating_sub(1);
    (0u64..1 << edges).map(move |bits| (0..edges).map(|i| bits >> i & 1 == 1).collect())
}

pub fn directed_path(n: usize) -> Digraph {
    generate(&FamilySpec::DirectedPath { n }).expect("valid family parameters")
}

pub fn directed_cycle(n: usize) -> Digraph {
    generate(&FamilySpec::DirectedCycle { n }).expect("valid family parameters")
}

pub fn bidirectional_complete(n: usize) -> Digraph {
    generate(&FamilySpec::BidirectionalComplete { n }).expect("valid family parameters")
}

pub fn path_power(n: usize, k: usize) -> Digraph {
    generate(&FamilySpec::PathPower { n, k }).expect("valid family parameters")
}

pub fn bioriented_star(n: usize) -> Digraph {
    generate(&FamilySpec::BiorientedStar { n }).expect("valid family parameters")
}

pub fn transitive_tournament(n: usize) -> Digraph {
    generate(&FamilySpec::TransitiveTournament { n }).expect("valid family parameters")
}
