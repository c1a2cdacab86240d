use serde::{Deserialize, Serialize};

use super::{check_label, check_relabel_map, check_vertices, LabeledDigraph};
use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::layout::Layout;
use crate::set::VertexSet;

/// A directed linear NLC-width expression.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NlcExpr {
    pub k: usize,
    pub ops: Vec<NlcOp>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "snake_case")]
pub enum NlcOp {
    /// `•_a`; only valid as the first operation.
    Create { vertex: usize, label: usize },
    /// `G ⊗_(fwd, bwd) •_a`. A pair `(b, a)` in `fwd` adds an arc from every
    /// old `b`-vertex to the new vertex; in `bwd` it adds the reverse arcs.
    Join {
        vertex: usize,
        label: usize,
        #[serde(default)]
        fwd: Vec<(usize, usize)>,
        #[serde(default)]
        bwd: Vec<(usize, usize)>,
    },
    /// `∘_R`, with `map[a-1] = R(a)`.
    Relabel { map: Vec<usize> },
}

impl NlcExpr {
    /// Vertex insertion order.
    pub fn layout(&self) -> Layout {
        Layout::new(self.vertices()).expect("well-formed expression")
    }

    pub(crate) fn vertices(&self) -> Vec<usize> {
        self.ops
            .iter()
            .filter_map(|op| match op {
                NlcOp::Create { vertex, .. } | NlcOp::Join { vertex, .. } => Some(*vertex),
                NlcOp::Relabel { .. } => None,
            })
            .collect()
    }
}

fn pair_table(pairs: &[(usize, usize)], k: usize, step: usize) -> Result<Vec<bool>> {
    let mut t = vec![false; (k + 1) * (k + 1)];
    for &(b, a) in pairs {
        check_label(b, k, step)?;
        check_label(a, k, step)?;
        t[b * (k + 1) + a] = true;
    }
    Ok(t)
}

pub fn eval_nlc(x: &NlcExpr) -> Result<LabeledDigraph> {
    let k = x.k;
    let n = check_vertices(&x.vertices())?;
    let mut labels = vec![0usize; n];
    let mut placed = Vec::with_capacity(n);
    let mut out = vec![VertexSet::EMPTY; n];
    for (step, op) in x.ops.iter().enumerate() {
        match op {
            NlcOp::Create { vertex, label } => {
                if step != 0 {
                    return Err(Error::input(format!(
                        "operation {step}: create is only allowed first"
                    )));
                }
                check_label(*label, k, step)?;
                labels[*vertex] = *label;
                placed.push(*vertex);
            }
            NlcOp::Join { vertex, label, fwd, bwd } => {
                if placed.is_empty() {
                    return Err(Error::input(format!(
                        "operation {step}: join before any vertex was created"
                    )));
                }
                let a = *label;
                check_label(a, k, step)?;
                let f = pair_table(fwd, k, step)?;
                let b = pair_table(bwd, k, step)?;
                for &u in &placed {
                    let idx = labels[u] * (k + 1) + a;
                    if f[idx] {
                        out[u].insert(*vertex);
                    }
                    if b[idx] {
                        out[*vertex].insert(u);
                    }
                }
                labels[*vertex] = a;
                placed.push(*vertex);
            }
            NlcOp::Relabel { map } => {
                check_relabel_map(map, k, step)?;
                for &u in &placed {
                    labels[u] = map[labels[u] - 1];
                }
            }
        }
    }
    Ok(LabeledDigraph {
        digraph: Digraph::from_out_sets(out)?,
        labels,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::*;

    fn join(vertex: usize, label: usize, fwd: &[(usize, usize)], bwd: &[(usize, usize)]) -> NlcOp {
        NlcOp::Join {
            vertex,
            label,
            fwd: fwd.to_vec(),
            bwd: bwd.to_vec(),
        }
    }

    #[test]
    fn complete_with_one_label() {
        let x = NlcExpr {
            k: 1,
            ops: vec![
                NlcOp::Create { vertex: 0, label: 1 },
                join(1, 1, &[(1, 1)], &[(1, 1)]),
                join(2, 1, &[(1, 1)], &[(1, 1)]),
            ],
        };
        let r = eval_nlc(&x).unwrap();
        assert_eq!(r.digraph, bidirectional_complete(3));
        assert_eq!(r.labels, vec![1, 1, 1]);
    }

    #[test]
    fn directed_path_three() {
        let x = NlcExpr {
            k: 2,
            ops: vec![
                NlcOp::Create { vertex: 0, label: 2 },
                join(1, 1, &[(2, 1)], &[]),
                NlcOp::Relabel { map: vec![2, 1] },
                join(2, 1, &[(2, 1)], &[]),
            ],
        };
        assert_eq!(eval_nlc(&x).unwrap().digraph, directed_path(3));
    }

    #[test]
    fn single_vertex() {
        let x = NlcExpr {
            k: 1,
            ops: vec![NlcOp::Create { vertex: 0, label: 1 }],
        };
        let r = eval_nlc(&x).unwrap();
        assert_eq!(r.digraph.order(), 1);
        assert_eq!(r.digraph.arc_count(), 0);
    }

    #[test]
    fn malformed_expressions() {
        let bad_label = NlcExpr {
            k: 1,
            ops: vec![NlcOp::Create { vertex: 0, label: 2 }],
        };
        assert!(eval_nlc(&bad_label).is_err());
        let twice = NlcExpr {
            k: 1,
            ops: vec![NlcOp::Create { vertex: 0, label: 1 }, join(0, 1, &[], &[])],
        };
        assert!(eval_nlc(&twice).is_err());
        let short_map = NlcExpr {
            k: 2,
            ops: vec![NlcOp::Create { vertex: 0, label: 1 }, NlcOp::Relabel { map: vec![1] }],
        };
        assert!(eval_nlc(&short_map).is_err());
    }

    #[test]
    fn json_shape() {
        let x = NlcExpr {
            k: 1,
            ops: vec![NlcOp::Create { vertex: 0, label: 1 }, join(1, 1, &[(1, 1)], &[])],
        };
        let s = serde_json::to_string(&x).unwrap();
        assert_eq!(
            s,
            r#"{"k":1,"ops":[{"op":"create","vertex":0,"label":1},{"op":"join","vertex":1,"label":1,"fwd":[[1,1]],"bwd":[]}]}"#
        );
        assert_eq!(serde_json::from_str::<NlcExpr>(&s).unwrap(), x);
    }
}
