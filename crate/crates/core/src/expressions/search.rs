//! Exact minimum-label expressions.
//!
//! Linear NLC-width: before the `i`-th insertion the labels on the placed set
//! `P` must separate vertices with different neighbourhoods into `V \ P`, so
//! at least `|N(P, V \ P)|` labels are live; the new vertex reuses a label
//! only if it agrees with that class on everything still to come. Merging
//! classes with equal futures never hurts, so the label count of a layout is
//! a max of per-step costs and the subset dynamic program is exact.
//!
//! Linear clique-width is different: an `α` between two classes also adds
//! arcs between older members, so merging equivalent classes can forbid a
//! later insertion. The search walks states `(partition of P)` where every
//! class is homogeneous towards `V \ P`, assuming every arc inside `P` has
//! already been added, and tries every admissible merge.

use std::collections::HashSet;

use super::{CwExpr, CwOp, NlcExpr, NlcOp, UCwExpr, UCwOp, UNlcExpr, UNlcOp};
use crate::digraph::{Adjacency, Digraph, UndirectedGraph};
use crate::error::{Error, Result};
use crate::layout::{min_max_layout, neighbourhood_classes, SolverConfig};
use crate::set::VertexSet;

struct NlcStep {
    vertex: usize,
    label: usize,
    /// Old labels with an arc into the new vertex.
    fwd: Vec<usize>,
    /// Old labels receiving an arc from the new vertex.
    bwd: Vec<usize>,
    relabel: Option<Vec<usize>>,
}

fn check_search_limit(n: usize, limit: usize) -> Result<()> {
    if n > limit {
        return Err(Error::Capacity {
            what: "vertex count for the expression search",
            actual: n,
            limit,
        });
    }
    Ok(())
}

fn nlc_plan<G: Adjacency>(g: &G, limit: usize) -> Result<(usize, Vec<NlcStep>)> {
    let n = g.order();
    check_search_limit(n, limit)?;
    let all = VertexSet::full(n);
    let (k, layout) = min_max_layout(n, usize::MAX, n + 1, |s, v| {
        let rest = all.difference(s);
        let after = rest.without(v);
        let sv = g.signature(v, after);
        let shared = s.iter().any(|u| g.signature(u, after) == sv);
        neighbourhood_classes(g, s, rest) + usize::from(!shared)
    })?;

    let mut label = vec![0usize; n];
    let mut placed = VertexSet::EMPTY;
    let mut steps = Vec::with_capacity(n);
    for &v in layout.order() {
        let after = all.difference(placed).without(v);
        let live = placed.iter().map(|u| label[u]).max().unwrap_or(0);
        let sv = g.signature(v, after);
        let a = placed
            .iter()
            .find(|&u| g.signature(u, after) == sv)
            .map_or(live + 1, |u| label[u]);
        let collect = |pick: &dyn Fn(usize) -> bool| -> Vec<usize> {
            let mut ls: Vec<usize> = placed.iter().filter(|&u| pick(u)).map(|u| label[u]).collect();
            ls.sort_unstable();
            ls.dedup();
            ls
        };
        let fwd = collect(&|u| g.out_set(u).contains(v));
        let bwd = collect(&|u| g.in_set(u).contains(v));
        label[v] = a;
        placed.insert(v);

        // Renumber the classes towards what is left, by smallest member.
        let mut sigs: Vec<(u64, u64)> = Vec::new();
        let mut map: Vec<usize> = (1..=k).collect();
        for u in placed.iter() {
            let s = g.signature(u, after);
            let new = match sigs.iter().position(|&t| t == s) {
                Some(i) => i + 1,
                None => {
                    sigs.push(s);
                    sigs.len()
                }
            };
            map[label[u] - 1] = new;
        }
        for u in placed.iter() {
            label[u] = map[label[u] - 1];
        }
        let identity = map.iter().enumerate().all(|(i, &b)| b == i + 1);
        steps.push(NlcStep {
            vertex: v,
            label: a,
            fwd,
            bwd,
            relabel: (!identity).then_some(map),
        });
    }
    Ok((k, steps))
}

pub fn exact_dlnlc(g: &Digraph) -> Result<(usize, NlcExpr)> {
    exact_dlnlc_with(g, &SolverConfig::default())
}

/// Directed linear NLC-width with a witness expression on the same vertices.
pub fn exact_dlnlc_with(g: &Digraph, config: &SolverConfig) -> Result<(usize, NlcExpr)> {
    let (k, steps) = nlc_plan(g, config.search_limit)?;
    let mut ops = Vec::new();
    for (i, st) in steps.into_iter().enumerate() {
        let a = st.label;
        ops.push(if i == 0 {
            NlcOp::Create { vertex: st.vertex, label: a }
        } else {
            NlcOp::Join {
                vertex: st.vertex,
                label: a,
                fwd: st.fwd.iter().map(|&b| (b, a)).collect(),
                bwd: st.bwd.iter().map(|&b| (b, a)).collect(),
            }
        });
        if let Some(map) = st.relabel {
            ops.push(NlcOp::Relabel { map });
        }
    }
    Ok((k, NlcExpr { k, ops }))
}

pub fn exact_lnlc(g: &UndirectedGraph) -> Result<(usize, UNlcExpr)> {
    exact_lnlc_with(g, &SolverConfig::default())
}

/// Undirected linear NLC-width with a witness expression.
pub fn exact_lnlc_with(g: &UndirectedGraph, config: &SolverConfig) -> Result<(usize, UNlcExpr)> {
    let (k, steps) = nlc_plan(g, config.search_limit)?;
    let mut ops = Vec::new();
    for (i, st) in steps.into_iter().enumerate() {
        let a = st.label;
        ops.push(if i == 0 {
            UNlcOp::Create { vertex: st.vertex, label: a }
        } else {
            UNlcOp::Join {
                vertex: st.vertex,
                label: a,
                s: st.fwd.iter().map(|&b| (b, a)).collect(),
            }
        });
        if let Some(map) = st.relabel {
            ops.push(UNlcOp::Relabel { map });
        }
    }
    Ok((k, UNlcExpr { k, ops }))
}

struct CwStep {
    vertex: usize,
    /// The class the vertex joins, or `None` for a fresh label.
    join: Option<VertexSet>,
    /// Classes after insertion and merging.
    after: Vec<VertexSet>,
}

struct CwSearch<'a, G> {
    g: &'a G,
    all: VertexSet,
    k: usize,
    failed: HashSet<Vec<u64>>,
    steps: Vec<CwStep>,
}

/// Every partition of `0..m`, as restricted growth strings, coarsest first.
fn set_partitions(m: usize) -> Vec<Vec<usize>> {
    fn rec(i: usize, m: usize, cur: &mut Vec<usize>, blocks: usize, out: &mut Vec<Vec<usize>>) {
        if i == m {
            out.push(cur.clone());
            return;
        }
        for b in 0..=blocks {
            cur.push(b);
            rec(i + 1, m, cur, blocks.max(b + 1), out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, m, &mut Vec::new(), 0, &mut out);
    out.sort_by_key(|p| p.iter().max().map_or(0, |&b| b + 1));
    out
}

fn sorted(mut classes: Vec<VertexSet>) -> Vec<VertexSet> {
    classes.sort_unstable_by_key(|c| c.first());
    classes
}

impl<G: Adjacency> CwSearch<'_, G> {
    /// Partitions obtained by merging classes with equal neighbourhoods into
    /// `future`, coarsest first.
    fn coarsenings(&self, classes: &[VertexSet], future: VertexSet) -> Vec<Vec<VertexSet>> {
        let mut groups: Vec<((u64, u64), Vec<VertexSet>)> = Vec::new();
        for &c in classes {
            let s = self.g.signature(c.first().expect("nonempty class"), future);
            match groups.iter_mut().find(|(t, _)| *t == s) {
                Some((_, members)) => members.push(c),
                None => groups.push((s, vec![c])),
            }
        }
        if future.is_empty() {
            return vec![vec![classes.iter().fold(VertexSet::EMPTY, |a, &c| a.union(c))]];
        }
        let mut results: Vec<Vec<VertexSet>> = vec![Vec::new()];
        for (_, members) in &groups {
            let mut next = Vec::new();
            for base in &results {
                for p in set_partitions(members.len()) {
                    let blocks = p.iter().max().map_or(0, |&b| b + 1);
                    let mut merged = vec![VertexSet::EMPTY; blocks];
                    for (c, &b) in members.iter().zip(&p) {
                        merged[b] = merged[b].union(*c);
                    }
                    let mut r = base.clone();
                    r.extend(merged);
                    next.push(r);
                }
            }
            results = next;
        }
        let mut results: Vec<Vec<VertexSet>> = results.into_iter().map(sorted).collect();
        results.sort_by_key(|r| r.len());
        results
    }

    fn dfs(&mut self, classes: Vec<VertexSet>) -> bool {
        let placed = classes.iter().fold(VertexSet::EMPTY, |a, &c| a.union(c));
        if placed == self.all {
            return true;
        }
        let key: Vec<u64> = classes.iter().map(|c| c.0).collect();
        if self.failed.contains(&key) {
            return false;
        }
        let g = self.g;
        for w in self.all.difference(placed).iter() {
            let future = self.all.difference(placed).without(w);
            let sw = g.signature(w, future);
            let (out_w, in_w) = (g.out_set(w), g.in_set(w));
            let mut options: Vec<Option<usize>> = Vec::new();
            for (i, &a) in classes.iter().enumerate() {
                if !out_w.is_disjoint(a) || !in_w.is_disjoint(a) {
                    continue;
                }
                if g.signature(a.first().expect("nonempty class"), future) != sw {
                    continue;
                }
                let ok = classes.iter().all(|&c| {
                    (out_w.is_disjoint(c) || a.iter().all(|x| c.is_subset(g.out_set(x))))
                        && (in_w.is_disjoint(c) || a.iter().all(|x| c.is_subset(g.in_set(x))))
                });
                if ok {
                    options.push(Some(i));
                }
            }
            if classes.len() < self.k {
                options.push(None);
            }
            for opt in options {
                let mut post = classes.clone();
                match opt {
                    Some(i) => post[i].insert(w),
                    None => post.push(VertexSet::singleton(w)),
                }
                for next in self.coarsenings(&post, future) {
                    self.steps.push(CwStep {
                        vertex: w,
                        join: opt.map(|i| classes[i]),
                        after: next.clone(),
                    });
                    if self.dfs(next) {
                        return true;
                    }
                    self.steps.pop();
                }
            }
        }
        self.failed.insert(key);
        false
    }
}

/// Arc requests are `(from_label, to_label)`.
fn cw_plan<G: Adjacency>(g: &G, limit: usize) -> Result<(usize, Vec<CwStep>)> {
    let n = g.order();
    check_search_limit(n, limit)?;
    if n == 0 {
        return Ok((0, Vec::new()));
    }
    for k in 1..=n {
        let mut s = CwSearch {
            g,
            all: VertexSet::full(n),
            k,
            failed: HashSet::new(),
            steps: Vec::new(),
        };
        if s.dfs(Vec::new()) {
            return Ok((k, s.steps));
        }
    }
    unreachable!("one label per vertex always suffices")
}

enum Emitted {
    Vertex(usize, usize),
    Arc(usize, usize),
    Relabel(usize, usize),
}

fn emit_cw<G: Adjacency>(g: &G, k: usize, steps: &[CwStep], symmetric: bool) -> Vec<Emitted> {
    let mut ops = Vec::new();
    let mut classes: Vec<(VertexSet, usize)> = Vec::new();
    for st in steps {
        let w = st.vertex;
        let lw = match st.join {
            Some(a) => classes.iter().find(|(c, _)| *c == a).expect("joined class").1,
            None => (1..=k)
                .find(|l| classes.iter().all(|(_, m)| m != l))
                .expect("free label"),
        };
        ops.push(Emitted::Vertex(w, lw));
        for &(c, l) in &classes {
            if l == lw {
                continue;
            }
            if !g.out_set(w).is_disjoint(c) {
                ops.push(Emitted::Arc(lw, l));
            }
            if !symmetric && !g.in_set(w).is_disjoint(c) {
                ops.push(Emitted::Arc(l, lw));
            }
        }
        match classes.iter_mut().find(|(_, l)| *l == lw) {
            Some(entry) => entry.0.insert(w),
            None => classes.push((VertexSet::singleton(w), lw)),
        }
        let mut next = Vec::new();
        for &r in &st.after {
            let mut parts: Vec<usize> = classes
                .iter()
                .filter(|(c, _)| c.is_subset(r))
                .map(|&(_, l)| l)
                .collect();
            parts.sort_unstable();
            for &l in &parts[1..] {
                ops.push(Emitted::Relabel(l, parts[0]));
            }
            next.push((r, parts[0]));
        }
        classes = next;
    }
    ops
}

pub fn exact_dlcw(g: &Digraph) -> Result<(usize, CwExpr)> {
    exact_dlcw_with(g, &SolverConfig::default())
}

/// Directed linear clique-width with a witness expression.
pub fn exact_dlcw_with(g: &Digraph, config: &SolverConfig) -> Result<(usize, CwExpr)> {
    let (k, steps) = cw_plan(g, config.search_limit)?;
    let ops = emit_cw(g, k, &steps, false)
        .into_iter()
        .map(|e| match e {
            Emitted::Vertex(vertex, label) => CwOp::Vertex { vertex, label },
            Emitted::Arc(from, to) => CwOp::AddArcs { from, to },
            Emitted::Relabel(from, to) => CwOp::Relabel { from, to },
        })
        .collect();
    Ok((k, CwExpr { k, ops }))
}

pub fn exact_lcw(g: &UndirectedGraph) -> Result<(usize, UCwExpr)> {
    exact_lcw_with(g, &SolverConfig::default())
}

/// Undirected linear clique-width with a witness expression.
pub fn exact_lcw_with(g: &UndirectedGraph, config: &SolverConfig) -> Result<(usize, UCwExpr)> {
    let (k, steps) = cw_plan(g, config.search_limit)?;
    let ops = emit_cw(g, k, &steps, true)
        .into_iter()
        .map(|e| match e {
            Emitted::Vertex(vertex, label) => UCwOp::Vertex { vertex, label },
            Emitted::Arc(a, b) => UCwOp::AddEdges { a, b },
            Emitted::Relabel(from, to) => UCwOp::Relabel { from, to },
        })
        .collect();
    Ok((k, UCwExpr { k, ops }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expressions::{eval_cw, eval_nlc, eval_ucw, eval_unlc};
    use crate::families::*;

    fn nlc(g: &Digraph) -> usize {
        let (k, x) = exact_dlnlc(g).unwrap();
        assert_eq!(eval_nlc(&x).unwrap().digraph, *g);
        k
    }

    fn cw(g: &Digraph) -> usize {
        let (k, x) = exact_dlcw(g).unwrap();
        assert_eq!(x.k, k);
        assert_eq!(eval_cw(&x).unwrap().digraph, *g, "{x:?}");
        k
    }

    #[test]
    fn nlc_examples() {
        assert_eq!(nlc(&directed_path(3)), 2);
        assert_eq!(nlc(&directed_path(4)), 2);
        assert_eq!(nlc(&directed_path(5)), 3);
        assert_eq!(nlc(&bidirectional_complete(5)), 1);
        assert_eq!(nlc(&transitive_tournament(4)), 1);
    }

    #[test]
    fn cw_examples() {
        assert_eq!(cw(&directed_path(4)), 3);
        assert_eq!(cw(&bidirectional_complete(4)), 2);
        assert_eq!(cw(&path_power(8, 2)), 4);
        assert_eq!(cw(&Digraph::empty(3).unwrap()), 1);
        assert_eq!(cw(&directed_cycle(5)), 4);
    }

    #[test]
    fn tiny_digraphs() {
        let e = Digraph::empty(0).unwrap();
        assert_eq!(exact_dlnlc(&e).unwrap().0, 0);
        assert_eq!(exact_dlcw(&e).unwrap().0, 0);
        assert_eq!(nlc(&Digraph::empty(1).unwrap()), 1);
        assert_eq!(cw(&Digraph::empty(1).unwrap()), 1);
    }

    #[test]
    fn undirected_witnesses() {
        let p4 = directed_path(4).underlying_undirected();
        let (k, x) = exact_lnlc(&p4).unwrap();
        assert_eq!(eval_unlc(&x).unwrap().graph, p4);
        assert_eq!(k, 2);
        let (k, x) = exact_lcw(&p4).unwrap();
        assert_eq!(eval_ucw(&x).unwrap().graph, p4);
        assert_eq!(k, 3);
    }

    #[test]
    fn limit() {
        let g = Digraph::empty(11).unwrap();
        assert!(matches!(exact_dlcw(&g), Err(Error::Capacity { .. })));
        assert!(matches!(exact_dlnlc(&g), Err(Error::Capacity { .. })));
    }

    #[test]
    fn partitions_count() {
        assert_eq!(set_partitions(4).len(), 15);
        assert_eq!(set_partitions(3)[0], vec![0, 0, 0]);
    }
}
