//! `witness-verify` and `convert`.
//!
//! Witness files may be the bare object (a layout array, a decomposition, an
//! expression, a threshold sequence, a caterpillar) or any command output that
//! holds it under its usual key, so `compute` results can be fed back in.

use std::collections::BTreeSet;

use clap::ValueEnum;
use serde::de::DeserializeOwned;
use serde_json::{json, Value};

use diwidth::expressions::{
    biorient_cw, biorient_nlc, cw_to_nlc, drop_directions_cw, drop_directions_nlc, eval_cw, eval_nlc, eval_ucw,
    eval_unlc, layout_to_rank_decomposition, nlc_to_cw, Caterpillar, Expression,
};
use diwidth::format::AnyGraph;
use diwidth::layout::{measure_cost, undirected_measure_cost};
use diwidth::pathdecomp::{from_layout, validate, DirectedPathDecomposition};
use diwidth::threshold::{eval_threshold, nlc1_to_threshold, threshold_to_nlc1, ThresholdSequence};
use diwidth::{Digraph, Layout};

use crate::{measure_by_name, read_digraph, read_graph, read_json, Failure, Outcome};

#[derive(Clone, Copy, ValueEnum)]
pub enum Kind {
    /// A layout with its measure (and optionally its claimed value).
    Layout,
    /// A directed path-decomposition.
    Dpd,
    /// An NLC or clique-width expression, directed or undirected.
    Expr,
    /// A threshold build sequence.
    Threshold,
    /// A caterpillar rank decomposition.
    Rankdec,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum Conversion {
    NlcToCw,
    CwToNlc,
    DropDirections,
    Biorient,
    LayoutToDpd,
    LayoutToRankdec,
    ThresholdToNlc1,
    Nlc1ToThreshold,
}

/// `doc[key]` if present, else the whole document.
fn part<T: DeserializeOwned>(doc: &Value, key: &str, what: &str) -> Result<T, Failure> {
    let v = doc.get(key).unwrap_or(doc);
    serde_json::from_value(v.clone()).map_err(|e| Failure::Input(format!("malformed {what}: {e}")))
}

fn claimed(doc: &Value) -> Result<Option<usize>, Failure> {
    match doc.get("value") {
        None => Ok(None),
        Some(v) => v
            .as_u64()
            .map(|x| Some(x as usize))
            .ok_or_else(|| Failure::Input(format!("claimed value {v} is not a count"))),
    }
}

pub fn expression_layout(x: &Expression) -> Layout {
    match x {
        Expression::Nlc(x) => x.layout(),
        Expression::Cw(x) => x.layout(),
        Expression::UndirectedNlc(x) => x.layout(),
        Expression::UndirectedCw(x) => x.layout(),
    }
}

fn arc_difference(want: &[(usize, usize)], got: &[(usize, usize)]) -> Value {
    let want: BTreeSet<_> = want.iter().copied().collect();
    let got: BTreeSet<_> = got.iter().copied().collect();
    json!({
        "missing": want.difference(&got).collect::<Vec<_>>(),
        "extra": got.difference(&want).collect::<Vec<_>>(),
    })
}

fn verdict(mut out: Value, problem: Option<Value>) -> Outcome {
    out["valid"] = json!(problem.is_none());
    match problem {
        None => Ok(out),
        Some(p) => {
            out["violation"] = p;
            Err(Failure::Verification(out))
        }
    }
}

fn value_mismatch(claim: Option<usize>, actual: usize) -> Option<Value> {
    claim
        .filter(|&c| c != actual)
        .map(|c| json!({ "message": format!("claimed value {c}, witness attains {actual}") }))
}

fn verify_layout(graph: &str, doc: &Value) -> Outcome {
    let name = doc
        .get("measure")
        .and_then(Value::as_str)
        .ok_or_else(|| Failure::Input("layout witness needs a `measure`".into()))?;
    let kind = measure_by_name(name)
        .ok_or_else(|| Failure::Input(format!("`{name}` is not a layout measure")))?;
    let layout: Layout = part(doc, "layout", "layout")?;
    let cost = match read_graph(graph)? {
        AnyGraph::Directed(p) => measure_cost(&p.graph, kind, &layout)?,
        AnyGraph::Undirected(p) => undirected_measure_cost(&p.graph, kind, &layout)?,
    };
    let out = json!({ "kind": "layout", "measure": name, "value": cost });
    verdict(out, value_mismatch(claimed(doc)?, cost))
}

fn verify_dpd(graph: &str, doc: &Value) -> Outcome {
    let g = read_digraph(graph)?;
    let d: DirectedPathDecomposition = part(doc, "dpd", "decomposition")?;
    let d = DirectedPathDecomposition::new(d.bags);
    let out = json!({ "kind": "dpd", "width": d.width() });
    let problem = validate(&g, &d)?.map(|v| {
        let mut p = json!(v);
        p["message"] = json!(v.to_string());
        p
    });
    verdict(out, problem)
}

fn verify_expr(graph: &str, doc: &Value) -> Outcome {
    let x: Expression = part(doc, "expression", "expression")?;
    type Edges = Vec<(usize, usize)>;
    let ((n, want), (m, got)): ((usize, Edges), (usize, Edges)) = match (read_graph(graph)?, &x) {
        (AnyGraph::Directed(p), Expression::Nlc(e)) => {
            let h = eval_nlc(e)?.digraph;
            ((p.graph.order(), p.graph.arcs().collect()), (h.order(), h.arcs().collect()))
        }
        (AnyGraph::Directed(p), Expression::Cw(e)) => {
            let h = eval_cw(e)?.digraph;
            ((p.graph.order(), p.graph.arcs().collect()), (h.order(), h.arcs().collect()))
        }
        (AnyGraph::Undirected(p), Expression::UndirectedNlc(e)) => {
            let h = eval_unlc(e)?.graph;
            ((p.graph.order(), p.graph.edges().collect()), (h.order(), h.edges().collect()))
        }
        (AnyGraph::Undirected(p), Expression::UndirectedCw(e)) => {
            let h = eval_ucw(e)?.graph;
            ((p.graph.order(), p.graph.edges().collect()), (h.order(), h.edges().collect()))
        }
        (AnyGraph::Directed(_), _) => {
            return Err(Failure::Input("an undirected expression needs an undirected graph".into()))
        }
        (AnyGraph::Undirected(_), _) => return Err(Failure::Input("a directed expression needs a digraph".into())),
    };
    let out = json!({ "kind": "expr", "k": x.k() });
    let problem = if n != m {
        Some(json!({ "message": format!("the expression creates {m} vertices, the graph has {n}") }))
    } else if want == got {
        value_mismatch(claimed(doc)?, x.k())
    } else {
        let mut p = arc_difference(&want, &got);
        p["message"] = json!("the expression does not evaluate to the graph");
        Some(p)
    };
    verdict(out, problem)
}

fn verify_threshold(graph: &str, doc: &Value) -> Outcome {
    let g = read_digraph(graph)?;
    let seq: ThresholdSequence = part(doc, "sequence", "threshold sequence")?;
    let built = eval_threshold(&seq)?;
    let out = json!({ "kind": "threshold", "steps": seq.steps.len() });
    let problem = (built != g).then(|| {
        if built.order() != g.order() {
            let (m, n) = (built.order(), g.order());
            return json!({ "message": format!("the sequence creates {m} vertices, the graph has {n}") });
        }
        let mut p = arc_difference(&g.arcs().collect::<Vec<_>>(), &built.arcs().collect::<Vec<_>>());
        p["message"] = json!("the sequence does not build the graph");
        p
    });
    verdict(out, problem)
}

fn verify_rankdec(graph: &str, doc: &Value) -> Outcome {
    let g = read_digraph(graph)?;
    let c: Caterpillar = part(doc, "caterpillar", "caterpillar")?;
    let layout = Layout::new(c.spine.clone())?;
    layout_to_rank_decomposition(&g, &layout)?;
    let width = c.width(&g);
    verdict(json!({ "kind": "rankdec", "width": width }), value_mismatch(claimed(doc)?, width))
}

pub fn verify(kind: Kind, graph: &str, witness: &str) -> Outcome {
    let doc = read_json(witness)?;
    match kind {
        Kind::Layout => verify_layout(graph, &doc),
        Kind::Dpd => verify_dpd(graph, &doc),
        Kind::Expr => verify_expr(graph, &doc),
        Kind::Threshold => verify_threshold(graph, &doc),
        Kind::Rankdec => verify_rankdec(graph, &doc),
    }
}

fn wrong_kind(want: &str) -> Failure {
    Failure::Input(format!("expected {want} expression"))
}

fn needs_graph(graph: Option<&str>) -> Result<Digraph, Failure> {
    read_digraph(graph.ok_or_else(|| Failure::Input("this conversion needs --graph".into()))?)
}

pub fn convert(conversion: Conversion, witness: &str, graph: Option<&str>) -> Outcome {
    let doc = read_json(witness)?;
    let expr = || part::<Expression>(&doc, "expression", "expression");
    let result = match conversion {
        Conversion::NlcToCw => match expr()? {
            Expression::Nlc(x) => json!({ "expression": Expression::Cw(nlc_to_cw(&x)) }),
            _ => return Err(wrong_kind("an nlc")),
        },
        Conversion::CwToNlc => match expr()? {
            Expression::Cw(x) => json!({ "expression": Expression::Nlc(cw_to_nlc(&x)) }),
            _ => return Err(wrong_kind("a cw")),
        },
        Conversion::DropDirections => match expr()? {
            Expression::Nlc(x) => json!({ "expression": Expression::UndirectedNlc(drop_directions_nlc(&x)) }),
            Expression::Cw(x) => json!({ "expression": Expression::UndirectedCw(drop_directions_cw(&x)) }),
            _ => return Err(wrong_kind("a directed")),
        },
        Conversion::Biorient => match expr()? {
            Expression::UndirectedNlc(x) => json!({ "expression": Expression::Nlc(biorient_nlc(&x)) }),
            Expression::UndirectedCw(x) => json!({ "expression": Expression::Cw(biorient_cw(&x)) }),
            _ => return Err(wrong_kind("an undirected")),
        },
        Conversion::LayoutToDpd => {
            let d = from_layout(&needs_graph(graph)?, &part(&doc, "layout", "layout")?)?;
            json!({ "width": d.width(), "dpd": d })
        }
        Conversion::LayoutToRankdec => {
            let g = needs_graph(graph)?;
            let c = layout_to_rank_decomposition(&g, &part(&doc, "layout", "layout")?)?;
            json!({ "width": c.width(&g), "caterpillar": c })
        }
        Conversion::ThresholdToNlc1 => {
            let seq: ThresholdSequence = part(&doc, "sequence", "threshold sequence")?;
            json!({ "expression": Expression::Nlc(threshold_to_nlc1(&seq)?) })
        }
        Conversion::Nlc1ToThreshold => match expr()? {
            Expression::Nlc(x) => json!({ "sequence": nlc1_to_threshold(&x)? }),
            _ => return Err(wrong_kind("an nlc")),
        },
    };
    let name = conversion.to_possible_value().map(|v| v.get_name().to_string());
    let mut out = result;
    out["conversion"] = json!(name);
    Ok(out)
}

