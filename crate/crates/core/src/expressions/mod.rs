//! Linear NLC-width and linear clique-width expressions, directed and
//! undirected: evaluation, exact minimum-label search, conversions between
//! the grammars, and the caterpillar rank decomposition of a layout.
//!
//! Expressions are stored as flat operation lists in evaluation order. Every
//! vertex-introducing operation names the vertex it creates, so evaluation
//! produces a digraph on `0..n` that can be compared with a target directly.
//! Labels are `1..=k`.

mod caterpillar;
mod convert;
mod cw;
mod nlc;
mod search;
mod undirected;

pub use caterpillar::{layout_to_rank_decomposition, Caterpillar};
pub use convert::{biorient_cw, biorient_nlc, cw_to_nlc, drop_directions_cw, drop_directions_nlc, nlc_to_cw};
pub use cw::{eval_cw, CwExpr, CwOp};
pub use nlc::{eval_nlc, NlcExpr, NlcOp};
pub use search::{
    exact_dlcw, exact_dlcw_with, exact_dlnlc, exact_dlnlc_with, exact_lcw, exact_lcw_with, exact_lnlc,
    exact_lnlc_with,
};
pub use undirected::{eval_ucw, eval_unlc, LabeledGraph, UCwExpr, UCwOp, UNlcExpr, UNlcOp};

use serde::{Deserialize, Serialize};

use crate::digraph::Digraph;
use crate::error::{Error, Result};

/// A digraph together with a label in `1..=k` for every vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledDigraph {
    pub digraph: Digraph,
    pub labels: Vec<usize>,
}

/// Any of the four expression kinds, tagged by `kind` in JSON.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Expression {
    Nlc(NlcExpr),
    Cw(CwExpr),
    UndirectedNlc(UNlcExpr),
    UndirectedCw(UCwExpr),
}

impl Expression {
    pub fn k(&self) -> usize {
        match self {
            Expression::Nlc(x) => x.k,
            Expression::Cw(x) => x.k,
            Expression::UndirectedNlc(x) => x.k,
            Expression::UndirectedCw(x) => x.k,
        }
    }
}

pub(crate) fn check_label(label: usize, k: usize, step: usize) -> Result<()> {
    if label == 0 || label > k {
        return Err(Error::input(format!(
            "operation {step}: label {label} outside 1..={k}"
        )));
    }
    Ok(())
}

/// Checks that the vertex-introducing operations name each of `0..n` once,
/// returning `n`.
pub(crate) fn check_vertices(vertices: &[usize]) -> Result<usize> {
    let n = vertices.len();
    let mut seen = vec![false; n];
    for &v in vertices {
        if v >= n {
            return Err(Error::input(format!(
                "vertex {v} out of range for an expression with {n} vertices"
            )));
        }
        if std::mem::replace(&mut seen[v], true) {
            return Err(Error::input(format!("vertex {v} is introduced twice")));
        }
    }
    if n > crate::digraph::MAX_VERTICES {
        return Err(Error::Capacity {
            what: "vertex count",
            actual: n,
            limit: crate::digraph::MAX_VERTICES,
        });
    }
    Ok(n)
}

pub(crate) fn check_relabel_map(map: &[usize], k: usize, step: usize) -> Result<()> {
    if map.len() != k {
        return Err(Error::input(format!(
            "operation {step}: relabelling map has {} entries, expected {k}",
            map.len()
        )));
    }
    map.iter().try_for_each(|&b| check_label(b, k, step))
}
