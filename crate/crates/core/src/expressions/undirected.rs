//! Undirected linear NLC-width and linear clique-width expressions.

use serde::{Deserialize, Serialize};

use super::cw::Classes;
use super::{check_label, check_relabel_map, check_vertices};
use crate::digraph::UndirectedGraph;
use crate::error::{Error, Result};
use crate::layout::Layout;
use crate::set::VertexSet;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledGraph {
    pub graph: UndirectedGraph,
    pub labels: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct UNlcExpr {
    pub k: usize,
    pub ops: Vec<UNlcOp>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "snake_case")]
pub enum UNlcOp {
    Create { vertex: usize, label: usize },
    /// `G ×_S •_a`: an edge to every old `b`-vertex with `(b, a) ∈ s`.
    Join {
        vertex: usize,
        label: usize,
        #[serde(default)]
        s: Vec<(usize, usize)>,
    },
    Relabel { map: Vec<usize> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct UCwExpr {
    pub k: usize,
    pub ops: Vec<UCwOp>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "snake_case")]
pub enum UCwOp {
    Vertex { vertex: usize, label: usize },
    /// `η_{a,b}`: an edge between every `a`-vertex and every `b`-vertex.
    AddEdges { a: usize, b: usize },
    Relabel { from: usize, to: usize },
}

impl UNlcExpr {
    pub fn layout(&self) -> Layout {
        Layout::new(self.vertices()).expect("well-formed expression")
    }

    fn vertices(&self) -> Vec<usize> {
        self.ops
            .iter()
            .filter_map(|op| match op {
                UNlcOp::Create { vertex, .. } | UNlcOp::Join { vertex, .. } => Some(*vertex),
                UNlcOp::Relabel { .. } => None,
            })
            .collect()
    }
}

impl UCwExpr {
    pub fn layout(&self) -> Layout {
        Layout::new(self.vertices()).expect("well-formed expression")
    }

    fn vertices(&self) -> Vec<usize> {
        self.ops
            .iter()
            .filter_map(|op| match op {
                UCwOp::Vertex { vertex, .. } => Some(*vertex),
                _ => None,
            })
            .collect()
    }
}

fn build(n: usize, adj: Vec<VertexSet>, labels: Vec<usize>) -> Result<LabeledGraph> {
    let edges = (0..n).flat_map(|u| adj[u].iter().filter(move |&v| u < v).map(move |v| (u, v)));
    Ok(LabeledGraph {
        graph: UndirectedGraph::from_edges(n, edges.collect::<Vec<_>>())?,
        labels,
    })
}

pub fn eval_unlc(x: &UNlcExpr) -> Result<LabeledGraph> {
    let k = x.k;
    let n = check_vertices(&x.vertices())?;
    let mut labels = vec![0usize; n];
    let mut placed = Vec::with_capacity(n);
    let mut adj = vec![VertexSet::EMPTY; n];
    for (step, op) in x.ops.iter().enumerate() {
        match op {
            UNlcOp::Create { vertex, label } => {
                if step != 0 {
                    return Err(Error::input(format!(
                        "operation {step}: create is only allowed first"
                    )));
                }
                check_label(*label, k, step)?;
                labels[*vertex] = *label;
                placed.push(*vertex);
            }
            UNlcOp::Join { vertex, label, s } => {
                if placed.is_empty() {
                    return Err(Error::input(format!(
                        "operation {step}: join before any vertex was created"
                    )));
                }
                check_label(*label, k, step)?;
                for &(b, a) in s {
                    check_label(b, k, step)?;
                    check_label(a, k, step)?;
                }
                for &u in &placed {
                    if s.contains(&(labels[u], *label)) {
                        adj[u].insert(*vertex);
                        adj[*vertex].insert(u);
                    }
                }
                labels[*vertex] = *label;
                placed.push(*vertex);
            }
            UNlcOp::Relabel { map } => {
                check_relabel_map(map, k, step)?;
                for &u in &placed {
                    labels[u] = map[labels[u] - 1];
                }
            }
        }
    }
    build(n, adj, labels)
}

pub fn eval_ucw(x: &UCwExpr) -> Result<LabeledGraph> {
    let k = x.k;
    let n = check_vertices(&x.vertices())?;
    let mut classes = Classes::new(k);
    let mut adj = vec![VertexSet::EMPTY; n];
    for (step, op) in x.ops.iter().enumerate() {
        match *op {
            UCwOp::Vertex { vertex, label } => {
                check_label(label, k, step)?;
                classes.of[label].insert(vertex);
            }
            UCwOp::AddEdges { a, b } => {
                check_label(a, k, step)?;
                check_label(b, k, step)?;
                if a == b {
                    return Err(Error::input(format!(
                        "operation {step}: edges inside label {a} cannot be added"
                    )));
                }
                let (sa, sb) = (classes.of[a], classes.of[b]);
                for u in sa.iter() {
                    adj[u] = adj[u].union(sb);
                }
                for u in sb.iter() {
                    adj[u] = adj[u].union(sa);
                }
            }
            UCwOp::Relabel { from, to } => {
                check_label(from, k, step)?;
                check_label(to, k, step)?;
                classes.relabel(from, to);
            }
        }
    }
    build(n, adj, classes.labels(n))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_with_one_label() {
        let x = UNlcExpr {
            k: 1,
            ops: vec![
                UNlcOp::Create { vertex: 0, label: 1 },
                UNlcOp::Join { vertex: 1, label: 1, s: vec![(1, 1)] },
                UNlcOp::Join { vertex: 2, label: 1, s: vec![(1, 1)] },
            ],
        };
        let g = eval_unlc(&x).unwrap().graph;
        assert_eq!(g.edge_count(), 3);
    }

    #[test]
    fn path_by_clique_width() {
        let x = UCwExpr {
            k: 3,
            ops: vec![
                UCwOp::Vertex { vertex: 0, label: 1 },
                UCwOp::Vertex { vertex: 1, label: 2 },
                UCwOp::AddEdges { a: 1, b: 2 },
                UCwOp::Relabel { from: 1, to: 3 },
                UCwOp::Vertex { vertex: 2, label: 1 },
                UCwOp::AddEdges { a: 2, b: 1 },
            ],
        };
        let g = eval_ucw(&x).unwrap().graph;
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
        let bad = UCwExpr {
            k: 1,
            ops: vec![UCwOp::Vertex { vertex: 0, label: 1 }, UCwOp::AddEdges { a: 1, b: 1 }],
        };
        assert!(eval_ucw(&bad).is_err());
    }
}
