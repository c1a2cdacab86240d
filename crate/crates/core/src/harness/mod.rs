//! Exhaustive and family-based checking of the relations between the width
//! measures.

mod enumerate;
mod properties;
mod table;

pub use enumerate::{
    canonical_code, canonical_code_undirected, enumerate_digraphs, enumerate_undirected, is_isomorphic,
    permutations, vertex_deletions, ENUMERATION_LIMIT,
};
pub use properties::{check_all_properties, properties_from, Parameters, PropertyResult, Relation, PROPERTY_IDS};
pub use table::{check_biorientation_equalities, check_table1};

use serde::{Deserialize, Serialize};

use crate::digraph::Digraph;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropertyViolation {
    pub property: String,
    pub n: usize,
    pub arcs: Vec<(usize, usize)>,
    pub lhs: i64,
    pub rhs: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub values: Option<Parameters>,
}

/// The instance with the least slack seen for an inequality.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Extremal {
    pub property: String,
    pub slack: i64,
    pub n: usize,
    pub arcs: Vec<(usize, usize)>,
}

/// Largest observed `dlcw / dlrw` among instances with `dlrw ≥ 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RatioWitness {
    pub dlcw: usize,
    pub dlrw: usize,
    pub arcs: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepReport {
    pub n: usize,
    pub up_to_iso: bool,
    pub instances_checked: usize,
    pub violations: Vec<PropertyViolation>,
    pub extremal_witnesses: Vec<Extremal>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub l2_ratio: Option<RatioWitness>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl SweepReport {
    pub(crate) fn new(n: usize, up_to_iso: bool) -> Self {
        SweepReport {
            n,
            up_to_iso,
            instances_checked: 0,
            violations: Vec::new(),
            extremal_witnesses: Vec::new(),
            l2_ratio: None,
            notes: Vec::new(),
        }
    }

    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn extremal(&self, property: &str) -> Option<&Extremal> {
        self.extremal_witnesses.iter().find(|e| e.property == property)
    }

    pub(crate) fn record_extremal(&mut self, property: &str, slack: i64, g: &Digraph) {
        match self.extremal_witnesses.iter_mut().find(|e| e.property == property) {
            Some(e) if e.slack <= slack => {}
            Some(e) => {
                e.slack = slack;
                e.n = g.order();
                e.arcs = g.arcs().collect();
            }
            None => self.extremal_witnesses.push(Extremal {
                property: property.to_string(),
                slack,
                n: g.order(),
                arcs: g.arcs().collect(),
            }),
        }
    }
}

/// Checks every property on every digraph of order `n`, optionally one per
/// isomorphism class, restricted to `only` when given.
pub fn sweep(n: usize, up_to_iso: bool, only: Option<&[String]>) -> Result<SweepReport> {
    if let Some(ids) = only {
        if let Some(bad) = ids.iter().find(|id| !PROPERTY_IDS.contains(&id.as_str())) {
            return Err(Error::input(format!("unknown property `{bad}`")));
        }
    }
    let wanted = |id: &str| only.is_none_or(|ids| ids.iter().any(|x| x == id));
    let mut report = SweepReport::new(n, up_to_iso);
    for g in enumerate_digraphs(n, up_to_iso)? {
        let p = Parameters::compute(&g)?;
        let mut results = properties_from(&p);
        if wanted("induced-monotone") {
            results.push(properties::induced_monotone(&g, &p)?);
        }
        for r in results.iter().filter(|r| wanted(r.id)) {
            if !r.holds() {
                report.violations.push(PropertyViolation {
                    property: r.id.to_string(),
                    n,
                    arcs: g.arcs().collect(),
                    lhs: r.lhs,
                    rhs: r.rhs,
                    values: Some(p.clone()),
                });
            }
            if let Some(s) = r.slack() {
                report.record_extremal(r.id, s, &g);
            }
        }
        if p.dlrw >= 1 {
            let better = report
                .l2_ratio
                .as_ref()
                .is_none_or(|w| p.dlcw * w.dlrw > w.dlcw * p.dlrw);
            if better {
                report.l2_ratio = Some(RatioWitness {
                    dlcw: p.dlcw,
                    dlrw: p.dlrw,
                    arcs: g.arcs().collect(),
                });
            }
        }
        report.instances_checked += 1;
    }
    report.extremal_witnesses.sort_by(|a, b| a.property.cmp(&b.property));
    Ok(report)
}
