//! Conversions between expression grammars.

use super::{CwExpr, CwOp, NlcExpr, NlcOp, UCwExpr, UCwOp, UNlcExpr, UNlcOp};

/// A linear clique-width expression with `k` labels becomes an NLC
/// expression with the same labels. Each insertion looks ahead: the new
/// vertex `w` (label `a`) gets an arc from an old `b`-vertex exactly when some
/// later `α_{x,y}` sees the images of `b` and `a` under the relabellings in
/// between as `x` and `y`.
pub fn cw_to_nlc(x: &CwExpr) -> NlcExpr {
    let k = x.k;
    let mut ops = Vec::new();
    let mut live = vec![false; k + 1];
    let mut first = true;
    for (i, op) in x.ops.iter().enumerate() {
        match *op {
            CwOp::Vertex { vertex, label: a } => {
                if first {
                    ops.push(NlcOp::Create { vertex, label: a });
                    first = false;
                } else {
                    let (mut fwd, mut bwd) = (Vec::new(), Vec::new());
                    for b in (1..=k).filter(|&b| live[b]) {
                        let (f, r) = future_arcs(&x.ops[i + 1..], k, b, a);
                        if f {
                            fwd.push((b, a));
                        }
                        if r {
                            bwd.push((b, a));
                        }
                    }
                    ops.push(NlcOp::Join { vertex, label: a, fwd, bwd });
                }
                live[a] = true;
            }
            CwOp::AddArcs { .. } => {}
            CwOp::Relabel { from, to } => {
                if from != to && !first {
                    let mut map: Vec<usize> = (1..=k).collect();
                    map[from - 1] = to;
                    if live[from] {
                        live[from] = false;
                        live[to] = true;
                    }
                    ops.push(NlcOp::Relabel { map });
                }
            }
        }
    }
    NlcExpr { k, ops }
}

/// Whether the remaining operations add an arc `b → a` and `a → b`.
fn future_arcs(rest: &[CwOp], k: usize, b: usize, a: usize) -> (bool, bool) {
    let mut f: Vec<usize> = (0..=k).collect();
    let (mut fwd, mut bwd) = (false, false);
    for op in rest {
        match *op {
            CwOp::Relabel { from, to } => {
                for l in f.iter_mut() {
                    if *l == from {
                        *l = to;
                    }
                }
            }
            CwOp::AddArcs { from, to } => {
                fwd |= f[b] == from && f[a] == to;
                bwd |= f[a] == from && f[b] == to;
            }
            CwOp::Vertex { .. } => {}
        }
    }
    (fwd, bwd)
}

/// An NLC expression with `k` labels becomes a clique-width expression with
/// `k + 1`: each new vertex arrives on the spare label `k + 1`, takes its arcs
/// through `α`, then moves to its own label. Relabelling maps are split into
/// single `ρ` steps, using the spare label to break cycles.
pub fn nlc_to_cw(x: &NlcExpr) -> CwExpr {
    let k = x.k;
    let spare = k + 1;
    let mut ops = Vec::new();
    for op in &x.ops {
        match op {
            NlcOp::Create { vertex, label } => ops.push(CwOp::Vertex {
                vertex: *vertex,
                label: *label,
            }),
            NlcOp::Join { vertex, label, fwd, bwd } => {
                ops.push(CwOp::Vertex { vertex: *vertex, label: spare });
                for &(b, a) in fwd {
                    if a == *label {
                        ops.push(CwOp::AddArcs { from: b, to: spare });
                    }
                }
                for &(b, a) in bwd {
                    if a == *label {
                        ops.push(CwOp::AddArcs { from: spare, to: b });
                    }
                }
                ops.push(CwOp::Relabel { from: spare, to: *label });
            }
            NlcOp::Relabel { map } => split_relabel(map, spare, &mut ops),
        }
    }
    CwExpr { k: spare, ops }
}

fn split_relabel(map: &[usize], spare: usize, ops: &mut Vec<CwOp>) {
    // Pending moves `(source, target)`; a source may move once nothing still
    // has to leave its target.
    let mut pending: Vec<(usize, usize)> = map
        .iter()
        .enumerate()
        .map(|(i, &t)| (i + 1, t))
        .filter(|&(s, t)| s != t)
        .collect();
    while !pending.is_empty() {
        let ready = pending
            .iter()
            .position(|&(_, t)| pending.iter().all(|&(s, _)| s != t));
        match ready {
            Some(i) => {
                let (s, t) = pending.remove(i);
                ops.push(CwOp::Relabel { from: s, to: t });
            }
            None => {
                let (s, t) = pending[0];
                ops.push(CwOp::Relabel { from: s, to: spare });
                pending[0] = (spare, t);
            }
        }
    }
}

/// Forgets arc directions: `⊗_(fwd, bwd)` becomes `×_{fwd ∪ bwd}`.
pub fn drop_directions_nlc(x: &NlcExpr) -> UNlcExpr {
    let ops = x
        .ops
        .iter()
        .map(|op| match op {
            NlcOp::Create { vertex, label } => UNlcOp::Create {
                vertex: *vertex,
                label: *label,
            },
            NlcOp::Join { vertex, label, fwd, bwd } => {
                let mut s: Vec<(usize, usize)> = fwd.iter().chain(bwd).copied().collect();
                s.sort_unstable();
                s.dedup();
                UNlcOp::Join {
                    vertex: *vertex,
                    label: *label,
                    s,
                }
            }
            NlcOp::Relabel { map } => UNlcOp::Relabel { map: map.clone() },
        })
        .collect();
    UNlcExpr { k: x.k, ops }
}

/// Forgets arc directions: `α_{a,b}` becomes `η_{a,b}`.
pub fn drop_directions_cw(x: &CwExpr) -> UCwExpr {
    let ops = x
        .ops
        .iter()
        .map(|op| match *op {
            CwOp::Vertex { vertex, label } => UCwOp::Vertex { vertex, label },
            CwOp::AddArcs { from, to } => UCwOp::AddEdges { a: from, b: to },
            CwOp::Relabel { from, to } => UCwOp::Relabel { from, to },
        })
        .collect();
    UCwExpr { k: x.k, ops }
}

/// Complete biorientation: `×_S` becomes `⊗_(S, S)`.
pub fn biorient_nlc(x: &UNlcExpr) -> NlcExpr {
    let ops = x
        .ops
        .iter()
        .map(|op| match op {
            UNlcOp::Create { vertex, label } => NlcOp::Create {
                vertex: *vertex,
                label: *label,
            },
            UNlcOp::Join { vertex, label, s } => NlcOp::Join {
                vertex: *vertex,
                label: *label,
                fwd: s.clone(),
                bwd: s.clone(),
            },
            UNlcOp::Relabel { map } => NlcOp::Relabel { map: map.clone() },
        })
        .collect();
    NlcExpr { k: x.k, ops }
}

/// Complete biorientation: `η_{a,b}` becomes `α_{b,a} ∘ α_{a,b}`.
pub fn biorient_cw(x: &UCwExpr) -> CwExpr {
    let mut ops = Vec::new();
    for op in &x.ops {
        match *op {
            UCwOp::Vertex { vertex, label } => ops.push(CwOp::Vertex { vertex, label }),
            UCwOp::AddEdges { a, b } => {
                ops.push(CwOp::AddArcs { from: a, to: b });
                ops.push(CwOp::AddArcs { from: b, to: a });
            }
            UCwOp::Relabel { from, to } => ops.push(CwOp::Relabel { from, to }),
        }
    }
    CwExpr { k: x.k, ops }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::Digraph;
    use crate::expressions::{eval_cw, eval_nlc, eval_ucw, eval_unlc, exact_dlcw, exact_dlnlc};
    use crate::families::*;

    #[test]
    fn complete_nlc_to_cw() {
        let (k, x) = exact_dlnlc(&bidirectional_complete(3)).unwrap();
        assert_eq!(k, 1);
        let y = nlc_to_cw(&x);
        assert!(y.k <= 2);
        assert_eq!(eval_cw(&y).unwrap().digraph, bidirectional_complete(3));
    }

    #[test]
    fn edgeless_cw_to_nlc() {
        let x = CwExpr {
            k: 1,
            ops: (0..3).map(|v| CwOp::Vertex { vertex: v, label: 1 }).collect(),
        };
        let y = cw_to_nlc(&x);
        assert_eq!(y.k, 1);
        assert!(y.ops.iter().all(|op| match op {
            NlcOp::Join { fwd, bwd, .. } => fwd.is_empty() && bwd.is_empty(),
            _ => true,
        }));
        assert_eq!(eval_nlc(&y).unwrap().digraph, Digraph::empty(3).unwrap());
    }

    #[test]
    fn path_round_trip() {
        let p3 = directed_path(3);
        let (_, x) = exact_dlnlc(&p3).unwrap();
        assert_eq!(eval_cw(&nlc_to_cw(&x)).unwrap().digraph, p3);
        assert_eq!(eval_nlc(&cw_to_nlc(&nlc_to_cw(&x))).unwrap().digraph, p3);
        let (_, y) = exact_dlcw(&p3).unwrap();
        assert_eq!(eval_nlc(&cw_to_nlc(&y)).unwrap().digraph, p3);
    }

    #[test]
    fn cyclic_relabel_needs_spare() {
        let x = NlcExpr {
            k: 2,
            ops: vec![
                NlcOp::Create { vertex: 0, label: 1 },
                NlcOp::Join { vertex: 1, label: 2, fwd: vec![(1, 2)], bwd: vec![] },
                NlcOp::Relabel { map: vec![2, 1] },
                NlcOp::Join { vertex: 2, label: 1, fwd: vec![(2, 1)], bwd: vec![(1, 1)] },
            ],
        };
        let want = eval_nlc(&x).unwrap().digraph;
        assert_eq!(want, Digraph::from_arcs(3, [(0, 1), (0, 2), (2, 1)]).unwrap());
        assert_eq!(eval_cw(&nlc_to_cw(&x)).unwrap().digraph, want);
    }

    #[test]
    fn drop_and_biorient() {
        let k3 = bidirectional_complete(3);
        let (_, x) = exact_dlnlc(&k3).unwrap();
        let u = drop_directions_nlc(&x);
        assert_eq!(u.k, 1);
        assert_eq!(eval_unlc(&u).unwrap().graph, k3.underlying_undirected());
        assert_eq!(eval_nlc(&biorient_nlc(&u)).unwrap().digraph, k3);

        let p3 = directed_path(3);
        let (_, x) = exact_dlnlc(&p3).unwrap();
        let u = drop_directions_nlc(&x);
        assert_eq!(u.k, 2);
        assert_eq!(eval_unlc(&u).unwrap().graph, p3.underlying_undirected());

        let (_, y) = exact_dlcw(&p3).unwrap();
        let u = drop_directions_cw(&y);
        assert_eq!(eval_ucw(&u).unwrap().graph, p3.underlying_undirected());
        let b = biorient_cw(&u);
        assert_eq!(eval_cw(&b).unwrap().digraph, p3.underlying_undirected().complete_biorientation());
    }
}
