use serde::{Deserialize, Serialize};

use super::{check_label, check_vertices, LabeledDigraph};
use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::layout::Layout;
use crate::set::VertexSet;

/// A directed linear clique-width expression.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CwExpr {
    pub k: usize,
    pub ops: Vec<CwOp>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "snake_case")]
pub enum CwOp {
    /// `•_a` for the first vertex, `G ⊕ •_a` afterwards.
    Vertex { vertex: usize, label: usize },
    /// `α_{from,to}`: an arc from every `from`-vertex to every `to`-vertex.
    AddArcs { from: usize, to: usize },
    /// `ρ_{from→to}`.
    Relabel { from: usize, to: usize },
}

impl CwExpr {
    pub fn layout(&self) -> Layout {
        Layout::new(self.vertices()).expect("well-formed expression")
    }

    pub(crate) fn vertices(&self) -> Vec<usize> {
        self.ops
            .iter()
            .filter_map(|op| match op {
                CwOp::Vertex { vertex, .. } => Some(*vertex),
                _ => None,
            })
            .collect()
    }
}

/// Vertices grouped by label, indexed by label.
pub(crate) struct Classes {
    pub(crate) of: Vec<VertexSet>,
}

impl Classes {
    pub(crate) fn new(k: usize) -> Self {
        Classes {
            of: vec![VertexSet::EMPTY; k + 1],
        }
    }

    pub(crate) fn relabel(&mut self, from: usize, to: usize) {
        if from != to {
            let moved = std::mem::take(&mut self.of[from]);
            self.of[to] = self.of[to].union(moved);
        }
    }

    pub(crate) fn labels(&self, n: usize) -> Vec<usize> {
        let mut labels = vec![0; n];
        for (a, s) in self.of.iter().enumerate() {
            for v in s.iter() {
                labels[v] = a;
            }
        }
        labels
    }
}

pub fn eval_cw(x: &CwExpr) -> Result<LabeledDigraph> {
    let k = x.k;
    let n = check_vertices(&x.vertices())?;
    let mut classes = Classes::new(k);
    let mut out = vec![VertexSet::EMPTY; n];
    for (step, op) in x.ops.iter().enumerate() {
        match *op {
            CwOp::Vertex { vertex, label } => {
                check_label(label, k, step)?;
                classes.of[label].insert(vertex);
            }
            CwOp::AddArcs { from, to } => {
                check_label(from, k, step)?;
                check_label(to, k, step)?;
                if from == to {
                    return Err(Error::input(format!(
                        "operation {step}: arcs inside label {from} cannot be added"
                    )));
                }
                let targets = classes.of[to];
                for u in classes.of[from].iter() {
                    out[u] = out[u].union(targets);
                }
            }
            CwOp::Relabel { from, to } => {
                check_label(from, k, step)?;
                check_label(to, k, step)?;
                classes.relabel(from, to);
            }
        }
    }
    Ok(LabeledDigraph {
        digraph: Digraph::from_out_sets(out)?,
        labels: classes.labels(n),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::*;

    fn v(vertex: usize, label: usize) -> CwOp {
        CwOp::Vertex { vertex, label }
    }

    #[test]
    fn bidirectional_edge() {
        let x = CwExpr {
            k: 2,
            ops: vec![v(0, 1), v(1, 2), CwOp::AddArcs { from: 1, to: 2 }, CwOp::AddArcs { from: 2, to: 1 }],
        };
        assert_eq!(eval_cw(&x).unwrap().digraph, bidirectional_complete(2));
    }

    #[test]
    fn edgeless_and_idempotent() {
        let x = CwExpr {
            k: 1,
            ops: vec![v(0, 1), v(1, 1), v(2, 1)],
        };
        let r = eval_cw(&x).unwrap();
        assert_eq!(r.digraph, Digraph::empty(3).unwrap());
        assert_eq!(r.labels, vec![1, 1, 1]);
        let once = CwExpr {
            k: 2,
            ops: vec![v(0, 1), v(1, 2), CwOp::AddArcs { from: 1, to: 2 }],
        };
        let mut twice = once.clone();
        twice.ops.push(CwOp::AddArcs { from: 1, to: 2 });
        assert_eq!(eval_cw(&once).unwrap(), eval_cw(&twice).unwrap());
    }

    #[test]
    fn directed_path_three_labels() {
        let x = CwExpr {
            k: 3,
            ops: vec![
                v(0, 1),
                v(1, 2),
                CwOp::AddArcs { from: 1, to: 2 },
                CwOp::Relabel { from: 1, to: 3 },
                v(2, 1),
                CwOp::AddArcs { from: 2, to: 1 },
            ],
        };
        let r = eval_cw(&x).unwrap();
        assert_eq!(r.digraph, directed_path(3));
        assert_eq!(r.labels, vec![3, 2, 1]);
    }

    #[test]
    fn rejects_loops_and_bad_labels() {
        let x = CwExpr {
            k: 2,
            ops: vec![v(0, 1), CwOp::AddArcs { from: 1, to: 1 }],
        };
        assert!(eval_cw(&x).is_err());
        let y = CwExpr {
            k: 2,
            ops: vec![v(0, 3)],
        };
        assert!(eval_cw(&y).is_err());
    }
}
