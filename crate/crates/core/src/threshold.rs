//! Directed threshold graphs: build sequences, evaluation, recognition by
//! peeling, and the correspondence with one-label NLC expressions.

use serde::{Deserialize, Serialize};

use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::expressions::{eval_nlc, NlcExpr, NlcOp};
use crate::set::VertexSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ThresholdOp {
    /// The single starting vertex.
    Start,
    /// `G ⊕ •`: no arcs.
    Isolated,
    /// `G ⊘ •`: arcs from every existing vertex to the new one.
    Sink,
    /// `• ⊘ G`: arcs from the new vertex to every existing one.
    Source,
    /// `G ⊗ •`: arcs in both directions.
    Series,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ThresholdStep {
    pub op: ThresholdOp,
    pub vertex: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ThresholdSequence {
    pub steps: Vec<ThresholdStep>,
}

impl ThresholdSequence {
    /// Steps on vertices `0, 1, ...` in order.
    pub fn from_ops(ops: &[ThresholdOp]) -> Self {
        ThresholdSequence {
            steps: ops
                .iter()
                .enumerate()
                .map(|(vertex, &op)| ThresholdStep { op, vertex })
                .collect(),
        }
    }

    pub fn ops(&self) -> Vec<ThresholdOp> {
        self.steps.iter().map(|s| s.op).collect()
    }
}

pub fn eval_threshold(seq: &ThresholdSequence) -> Result<Digraph> {
    let n = seq.steps.len();
    if n == 0 {
        return Err(Error::input("empty threshold sequence"));
    }
    crate::expressions::check_vertices(&seq.steps.iter().map(|s| s.vertex).collect::<Vec<_>>())?;
    let mut out = vec![VertexSet::EMPTY; n];
    let mut existing = VertexSet::EMPTY;
    for (i, s) in seq.steps.iter().enumerate() {
        let v = s.vertex;
        match (i, s.op) {
            (0, ThresholdOp::Start) => {}
            (0, _) => return Err(Error::input("a threshold sequence must begin with start")),
            (_, ThresholdOp::Start) => {
                return Err(Error::input(format!("step {i}: start is only allowed first")))
            }
            (_, ThresholdOp::Isolated) => {}
            (_, ThresholdOp::Sink) => existing.iter().for_each(|u| out[u].insert(v)),
            (_, ThresholdOp::Source) => out[v] = existing,
            (_, ThresholdOp::Series) => {
                existing.iter().for_each(|u| out[u].insert(v));
                out[v] = existing;
            }
        }
        existing.insert(v);
    }
    Digraph::from_out_sets(out)
}

/// Outcome of recognition. A negative answer carries the vertices left when
/// peeling got stuck, together with the arcs among them.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "RecognitionJson", try_from = "RecognitionJson")]
pub enum Recognition {
    Threshold { sequence: ThresholdSequence },
    Residual {
        vertices: Vec<usize>,
        arcs: Vec<(usize, usize)>,
    },
}

#[derive(Serialize, Deserialize)]
struct ResidualJson {
    vertices: Vec<usize>,
    arcs: Vec<(usize, usize)>,
}

#[derive(Serialize, Deserialize)]
struct RecognitionJson {
    is_threshold: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    sequence: Option<ThresholdSequence>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    residual: Option<ResidualJson>,
}

impl From<Recognition> for RecognitionJson {
    fn from(r: Recognition) -> Self {
        match r {
            Recognition::Threshold { sequence } => RecognitionJson {
                is_threshold: true,
                sequence: Some(sequence),
                residual: None,
            },
            Recognition::Residual { vertices, arcs } => RecognitionJson {
                is_threshold: false,
                sequence: None,
                residual: Some(ResidualJson { vertices, arcs }),
            },
        }
    }
}

impl TryFrom<RecognitionJson> for Recognition {
    type Error = String;

    fn try_from(r: RecognitionJson) -> std::result::Result<Self, String> {
        match (r.is_threshold, r.sequence, r.residual) {
            (true, Some(sequence), None) => Ok(Recognition::Threshold { sequence }),
            (false, None, Some(ResidualJson { vertices, arcs })) => {
                Ok(Recognition::Residual { vertices, arcs })
            }
            _ => Err("expected a sequence for threshold graphs and a residual otherwise".into()),
        }
    }
}

impl Recognition {
    pub fn is_threshold(&self) -> bool {
        matches!(self, Recognition::Threshold { .. })
    }

    pub fn sequence(&self) -> Option<&ThresholdSequence> {
        match self {
            Recognition::Threshold { sequence } => Some(sequence),
            Recognition::Residual { .. } => None,
        }
    }
}

/// The operation that could have added `v` last to `g[rest]`, if any.
pub fn last_op(g: &Digraph, rest: VertexSet, v: usize) -> Option<ThresholdOp> {
    let others = rest.without(v);
    let out = g.out_neighbours(v).intersection(others);
    let inn = g.in_neighbours(v).intersection(others);
    if others.is_empty() {
        Some(ThresholdOp::Start)
    } else if out.is_empty() && inn.is_empty() {
        Some(ThresholdOp::Isolated)
    } else if inn == others && out.is_empty() {
        Some(ThresholdOp::Sink)
    } else if out == others && inn.is_empty() {
        Some(ThresholdOp::Source)
    } else if out == others && inn == others {
        Some(ThresholdOp::Series)
    } else {
        None
    }
}

pub fn recognize_threshold(g: &Digraph) -> Result<Recognition> {
    recognize_threshold_with(g, false)
}

/// Peels the smallest qualifying vertex until none is left or none
/// qualifies. With `oriented`, series steps are not allowed.
pub fn recognize_threshold_with(g: &Digraph, oriented: bool) -> Result<Recognition> {
    if g.order() == 0 {
        return Err(Error::input("threshold recognition needs at least one vertex"));
    }
    let mut rest = g.vertices();
    let mut peeled = Vec::with_capacity(g.order());
    while !rest.is_empty() {
        let next = rest.iter().find_map(|v| {
            last_op(g, rest, v)
                .filter(|&op| !(oriented && op == ThresholdOp::Series))
                .map(|op| ThresholdStep { op, vertex: v })
        });
        match next {
            Some(step) => {
                rest.remove(step.vertex);
                peeled.push(step);
            }
            None => {
                return Ok(Recognition::Residual {
                    vertices: rest.to_vec(),
                    arcs: g
                        .arcs()
                        .filter(|&(u, v)| rest.contains(u) && rest.contains(v))
                        .collect(),
                })
            }
        }
    }
    peeled.reverse();
    Ok(Recognition::Threshold {
        sequence: ThresholdSequence { steps: peeled },
    })
}

pub fn threshold_to_nlc1(seq: &ThresholdSequence) -> Result<NlcExpr> {
    eval_threshold(seq)?;
    let one = vec![(1, 1)];
    let ops = seq
        .steps
        .iter()
        .map(|s| {
            let (fwd, bwd) = match s.op {
                ThresholdOp::Start => {
                    return NlcOp::Create {
                        vertex: s.vertex,
                        label: 1,
                    }
                }
                ThresholdOp::Isolated => (vec![], vec![]),
                ThresholdOp::Sink => (one.clone(), vec![]),
                ThresholdOp::Source => (vec![], one.clone()),
                ThresholdOp::Series => (one.clone(), one.clone()),
            };
            NlcOp::Join {
                vertex: s.vertex,
                label: 1,
                fwd,
                bwd,
            }
        })
        .collect();
    Ok(NlcExpr { k: 1, ops })
}

pub fn nlc1_to_threshold(x: &NlcExpr) -> Result<ThresholdSequence> {
    if x.k != 1 {
        return Err(Error::input(format!(
            "expected a one-label expression, got k = {}",
            x.k
        )));
    }
    eval_nlc(x)?;
    let steps = x
        .ops
        .iter()
        .filter_map(|op| match op {
            NlcOp::Create { vertex, .. } => Some(ThresholdStep {
                op: ThresholdOp::Start,
                vertex: *vertex,
            }),
            NlcOp::Join { vertex, fwd, bwd, .. } => {
                let op = match (!fwd.is_empty(), !bwd.is_empty()) {
                    (false, false) => ThresholdOp::Isolated,
                    (true, false) => ThresholdOp::Sink,
                    (false, true) => ThresholdOp::Source,
                    (true, true) => ThresholdOp::Series,
                };
                Some(ThresholdStep { op, vertex: *vertex })
            }
            NlcOp::Relabel { .. } => None,
        })
        .collect();
    Ok(ThresholdSequence { steps })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::*;
    use ThresholdOp::*;

    #[test]
    fn eval_examples() {
        let seq = |ops: &[ThresholdOp]| eval_threshold(&ThresholdSequence::from_ops(ops)).unwrap();
        assert_eq!(seq(&[Start, Sink, Sink]), transitive_tournament(3));
        assert_eq!(seq(&[Start, Series, Series]), bidirectional_complete(3));
        assert_eq!(seq(&[Start, Isolated]), Digraph::empty(2).unwrap());
        assert!(eval_threshold(&ThresholdSequence { steps: vec![] }).is_err());
        assert!(eval_threshold(&ThresholdSequence::from_ops(&[Sink])).is_err());
        assert!(eval_threshold(&ThresholdSequence::from_ops(&[Start, Start])).is_err());
    }

    #[test]
    fn recognition_examples() {
        match recognize_threshold(&directed_cycle(3)).unwrap() {
            Recognition::Residual { vertices, arcs } => {
                assert_eq!(vertices, vec![0, 1, 2]);
                assert_eq!(arcs.len(), 3);
            }
            r => panic!("{r:?}"),
        }
        let two_p2 = Digraph::from_arcs(4, [(0, 1), (2, 3)]).unwrap();
        assert!(!recognize_threshold(&two_p2).unwrap().is_threshold());
        let tt = transitive_tournament(4);
        let r = recognize_threshold(&tt).unwrap();
        let s = r.sequence().unwrap();
        assert_eq!(s.ops(), vec![Start, Source, Source, Source]);
        assert_eq!(eval_threshold(s).unwrap(), tt);
        let star = bioriented_star(3);
        let r = recognize_threshold(&star).unwrap();
        assert_eq!(eval_threshold(r.sequence().unwrap()).unwrap(), star);
        assert!(recognize_threshold(&Digraph::empty(0).unwrap()).is_err());
    }

    #[test]
    fn oriented_flag() {
        let k3 = bidirectional_complete(3);
        assert!(recognize_threshold(&k3).unwrap().is_threshold());
        assert!(!recognize_threshold_with(&k3, true).unwrap().is_threshold());
        assert!(recognize_threshold_with(&transitive_tournament(4), true).unwrap().is_threshold());
    }

    #[test]
    fn nlc_correspondence() {
        let s = ThresholdSequence::from_ops(&[Start, Series]);
        let x = threshold_to_nlc1(&s).unwrap();
        assert_eq!(
            x.ops[1],
            NlcOp::Join { vertex: 1, label: 1, fwd: vec![(1, 1)], bwd: vec![(1, 1)] }
        );
        assert_eq!(eval_nlc(&x).unwrap().digraph, bidirectional_complete(2));
        let iso = threshold_to_nlc1(&ThresholdSequence::from_ops(&[Start, Isolated])).unwrap();
        assert_eq!(eval_nlc(&iso).unwrap().digraph, Digraph::empty(2).unwrap());
        let tt = recognize_threshold(&transitive_tournament(3)).unwrap();
        let x = threshold_to_nlc1(tt.sequence().unwrap()).unwrap();
        assert_eq!(eval_nlc(&x).unwrap().digraph, transitive_tournament(3));
        assert_eq!(nlc1_to_threshold(&x).unwrap(), *tt.sequence().unwrap());

        let (_, k4) = crate::expressions::exact_dlnlc(&bidirectional_complete(4)).unwrap();
        assert_eq!(nlc1_to_threshold(&k4).unwrap().ops(), vec![Start, Series, Series, Series]);
        let (_, p3) = crate::expressions::exact_dlnlc(&directed_path(3)).unwrap();
        assert!(nlc1_to_threshold(&p3).is_err());
    }

    #[test]
    fn json_shape() {
        let r = recognize_threshold(&bidirectional_complete(2)).unwrap();
        assert_eq!(
            serde_json::to_string(&r).unwrap(),
            r#"{"is_threshold":true,"sequence":[{"op":"start","vertex":1},{"op":"series","vertex":0}]}"#
        );
        let json = serde_json::to_string(&recognize_threshold(&directed_cycle(3)).unwrap()).unwrap();
        assert_eq!(
            json,
            r#"{"is_threshold":false,"residual":{"vertices":[0,1,2],"arcs":[[0,1],[1,2],[2,0]]}}"#
        );
        assert!(serde_json::from_str::<Recognition>(&json).is_ok());
    }
}
