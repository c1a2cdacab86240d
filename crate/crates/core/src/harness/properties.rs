//! Exact parameter profiles and the per-digraph property checks.

use serde::{Deserialize, Serialize};

use crate::digraph::Digraph;
use crate::error::Result;
use crate::expressions::{exact_dlcw_with, exact_dlnlc_with, exact_lcw_with, exact_lnlc_with};
use crate::layout::{solve_exact_with, undirected_measure_with, MeasureKind, SolverConfig};
use crate::pathdecomp::search_min_width;
use crate::threshold::recognize_threshold;

/// Every parameter the checks refer to, computed exactly.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Parameters {
    pub n: usize,
    pub dpw: usize,
    pub dvsn_out: usize,
    /// Width of a minimum directed path-decomposition found without layouts.
    pub dpd_width: isize,
    pub dcutw: usize,
    pub dcutw_bwd: usize,
    pub dnw: usize,
    pub dlnlc: usize,
    pub dlcw: usize,
    pub dlrw: usize,
    pub pw_un: usize,
    pub cutw_un: usize,
    pub nw_un: usize,
    pub lnlc_un: usize,
    pub lcw_un: usize,
    pub lrw_un: usize,
    pub max_degree_un: usize,
    pub max_in: usize,
    pub max_out: usize,
    pub is_dag: bool,
    pub is_semicomplete: bool,
    pub is_threshold: bool,
    pub k22_free: bool,
}

impl Parameters {
    pub fn compute(g: &Digraph) -> Result<Self> {
        Self::compute_with(g, &SolverConfig::default())
    }

    pub fn compute_with(g: &Digraph, config: &SolverConfig) -> Result<Self> {
        let d = |k| solve_exact_with(g, k, config).map(|r| r.value);
        let un = g.underlying_undirected();
        let u = |k| undirected_measure_with(&un, k, config).map(|r| r.value);
        let deg = g.degree_profile();
        Ok(Parameters {
            n: g.order(),
            dpw: d(MeasureKind::DvsnIn)?,
            dvsn_out: d(MeasureKind::DvsnOut)?,
            dpd_width: search_min_width(g)?.width(),
            dcutw: d(MeasureKind::DcutwFwd)?,
            dcutw_bwd: d(MeasureKind::DcutwBwd)?,
            dnw: d(MeasureKind::Dnw)?,
            dlnlc: exact_dlnlc_with(g, config)?.0,
            dlcw: exact_dlcw_with(g, config)?.0,
            dlrw: d(MeasureKind::Dlrw)?,
            pw_un: u(MeasureKind::UVsn)?,
            cutw_un: u(MeasureKind::UCutw)?,
            nw_un: u(MeasureKind::UNw)?,
            lnlc_un: exact_lnlc_with(&un, config)?.0,
            lcw_un: exact_lcw_with(&un, config)?.0,
            lrw_un: u(MeasureKind::ULrw)?,
            max_degree_un: un.max_degree(),
            max_in: deg.max_in,
            max_out: deg.max_out,
            is_dag: g.is_dag(),
            is_semicomplete: g.is_semicomplete(),
            is_threshold: g.order() > 0 && recognize_threshold(g)?.is_threshold(),
            k22_free: !un.has_complete_bipartite_subgraph(2),
        })
    }

    pub fn min_in_out(&self) -> usize {
        self.max_in.min(self.max_out)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Relation {
    /// `lhs ≤ rhs`.
    AtMost,
    /// `lhs = rhs`.
    Equal,
    /// A logical statement; `lhs` is 1 when it holds.
    Holds,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropertyResult {
    pub id: &'static str,
    pub relation: Relation,
    pub lhs: i64,
    pub rhs: i64,
}

impl PropertyResult {
    pub fn holds(&self) -> bool {
        match self.relation {
            Relation::AtMost => self.lhs <= self.rhs,
            Relation::Equal => self.lhs == self.rhs,
            Relation::Holds => self.lhs == 1,
        }
    }

    /// `rhs - lhs` for inequalities.
    pub fn slack(&self) -> Option<i64> {
        (self.relation == Relation::AtMost).then_some(self.rhs - self.lhs)
    }
}

/// Stable ids of every property [`check_all_properties`] can report.
pub const PROPERTY_IDS: &[&str] = &[
    "vsn-in-out",
    "cutw-fwd-bwd",
    "T3a-lower",
    "T3a-upper",
    "T3b-nlc-lower",
    "T3b-nlc-upper",
    "T3b-cw-lower",
    "T3b-cw-upper",
    "T3ac",
    "L2",
    "th-pw-vs",
    "th-pw-cutw",
    "th-cw-pw2",
    "th-pw-nw",
    "cor-Tpw-deg-nlc",
    "cor-Tpw-deg-cw",
    "cor-Tpw-deg-rw",
    "cor-Tpw-nw2x",
    "th-u-d-w-1",
    "th-u-d-w-2",
    "th-u-d-w-3-lower",
    "th-u-d-w-3-upper",
    "th-u-d-w-4-lower",
    "th-u-d-w-4-upper",
    "th-u-d-w-5-lower",
    "th-u-d-w-5-upper",
    "th-u-d-w-6-lower",
    "th-u-d-w-6-upper",
    "small-pw0",
    "th-cw-pw",
    "cor-Tpw-deg-n6-nlc",
    "cor-Tpw-deg-n6-nw",
    "cor-Tpw-deg-n6-rw",
    "threshold-nlc1",
    "threshold-nw1",
    "threshold-cw2",
    "cor-pl-or-thres2",
    "induced-monotone",
];

fn at_most(id: &'static str, lhs: usize, rhs: i64) -> PropertyResult {
    PropertyResult {
        id,
        relation: Relation::AtMost,
        lhs: lhs as i64,
        rhs,
    }
}

fn equal(id: &'static str, lhs: i64, rhs: i64) -> PropertyResult {
    PropertyResult {
        id,
        relation: Relation::Equal,
        lhs,
        rhs,
    }
}

fn holds(id: &'static str, ok: bool) -> PropertyResult {
    PropertyResult {
        id,
        relation: Relation::Holds,
        lhs: i64::from(ok),
        rhs: 1,
    }
}

fn pow4_bound(r: usize) -> i64 {
    4i64.pow(r as u32 + 1) - 1
}

/// Evaluates every applicable property from precomputed parameters. The
/// upper bounds of items 3 and 6 of the undirected comparison need an edge:
/// with `Δ(un(G)) = 0` their right-hand sides drop below the trivial values.
pub fn properties_from(p: &Parameters) -> Vec<PropertyResult> {
    let i = |x: usize| x as i64;
    let md = i(p.min_in_out());
    let delta = i(p.max_degree_un);
    let mut r = vec![
        equal("vsn-in-out", i(p.dpw), i(p.dvsn_out)),
        equal("cutw-fwd-bwd", i(p.dcutw), i(p.dcutw_bwd)),
        at_most("T3a-lower", p.dlnlc, i(p.dlcw)),
        at_most("T3a-upper", p.dlcw, i(p.dlnlc) + 1),
        at_most("T3b-nlc-lower", p.dnw, i(p.dlnlc)),
        at_most("T3b-nlc-upper", p.dlnlc, i(p.dnw) + 1),
        at_most("T3b-cw-lower", p.dnw, i(p.dlcw)),
        at_most("T3b-cw-upper", p.dlcw, i(p.dnw) + 1),
        at_most("T3ac", p.dlrw, i(p.dnw)),
        at_most("L2", p.dlcw, pow4_bound(p.dlrw)),
        equal("th-pw-vs", p.dpd_width.max(0) as i64, i(p.dpw)),
        at_most("th-pw-cutw", p.dpw, i(p.dcutw)),
        at_most("th-cw-pw2", p.dcutw, md * i(p.dpw)),
        at_most("th-pw-nw", p.dpw, md * i(p.dnw)),
        at_most("cor-Tpw-deg-nlc", p.dpw, md * i(p.dlnlc)),
        at_most("cor-Tpw-deg-cw", p.dpw, md * i(p.dlcw)),
        at_most("cor-Tpw-deg-rw", p.dpw, md * pow4_bound(p.dlrw)),
    ];
    if p.k22_free {
        let chain = p.dpw <= p.pw_un && p.pw_un <= 2 * p.lnlc_un && p.lnlc_un <= p.dlnlc;
        r.push(holds("cor-Tpw-nw2x", chain));
    }
    r.extend([
        at_most("th-u-d-w-1", p.dpw, i(p.pw_un)),
        at_most("th-u-d-w-2", p.dcutw, i(p.cutw_un)),
        at_most("th-u-d-w-3-lower", p.nw_un, i(p.dnw)),
        at_most("th-u-d-w-4-lower", p.lnlc_un, i(p.dlnlc)),
        at_most("th-u-d-w-4-upper", p.dlnlc, delta * i(p.lnlc_un) + 1),
        at_most("th-u-d-w-5-lower", p.lcw_un, i(p.dlcw)),
        at_most("th-u-d-w-5-upper", p.dlcw, delta * i(p.lcw_un) + 1),
        at_most("th-u-d-w-6-lower", p.lrw_un, i(p.dlrw)),
    ]);
    if p.max_degree_un >= 1 {
        r.push(at_most("th-u-d-w-3-upper", p.dnw, delta * i(p.nw_un)));
        r.push(at_most(
            "th-u-d-w-6-upper",
            p.dlrw,
            delta * 2i64.pow(p.lrw_un as u32 + 1) - 1,
        ));
    }
    let zeros = [p.is_dag, p.dpw == 0, p.dpd_width <= 0, p.dcutw == 0];
    r.push(holds("small-pw0", zeros.iter().all(|&z| z == zeros[0])));
    if p.is_semicomplete {
        let bound = i(p.dpw) + 2;
        r.push(at_most("th-cw-pw", p.dlcw, bound));
        r.push(at_most("cor-Tpw-deg-n6-nlc", p.dlnlc, bound));
        r.push(at_most("cor-Tpw-deg-n6-nw", p.dnw, bound));
        r.push(at_most("cor-Tpw-deg-n6-rw", p.dlrw, bound));
    }
    if p.n > 0 {
        r.push(holds("threshold-nlc1", p.is_threshold == (p.dlnlc == 1)));
        r.push(holds("threshold-nw1", (p.dlnlc == 1) == (p.dnw == 1)));
    }
    if p.is_threshold {
        r.push(at_most("threshold-cw2", p.dlcw, 2));
        r.push(at_most("cor-pl-or-thres2", p.dpw, md));
    }
    r
}

/// Every applicable property of `g`, including the induced-subdigraph
/// monotonicity of the separation number, neighbourhood-width and rank-width.
pub fn check_all_properties(g: &Digraph) -> Result<Vec<PropertyResult>> {
    let p = Parameters::compute(g)?;
    let mut r = properties_from(&p);
    r.push(induced_monotone(g, &p)?);
    Ok(r)
}

pub(crate) fn induced_monotone(g: &Digraph, p: &Parameters) -> Result<PropertyResult> {
    let mut ok = true;
    for h in super::enumerate::vertex_deletions(g) {
        let v = |k| solve_exact_with(&h, k, &SolverConfig::default()).map(|r| r.value);
        ok &= v(MeasureKind::DvsnIn)? <= p.dpw && v(MeasureKind::Dnw)? <= p.dnw && v(MeasureKind::Dlrw)? <= p.dlrw;
    }
    Ok(holds("induced-monotone", ok))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::*;

    fn find<'a>(r: &'a [PropertyResult], id: &str) -> Option<&'a PropertyResult> {
        r.iter().find(|x| x.id == id)
    }

    #[test]
    fn complete_three() {
        let r = check_all_properties(&bidirectional_complete(3)).unwrap();
        assert!(r.iter().all(|x| x.holds()), "{r:?}");
        let c = find(&r, "th-pw-cutw").unwrap();
        assert_eq!((c.lhs, c.rhs), (2, 2));
    }

    #[test]
    fn transitive_tournament_semicomplete_block() {
        let r = check_all_properties(&transitive_tournament(4)).unwrap();
        assert!(r.iter().all(|x| x.holds()), "{r:?}");
        let c = find(&r, "th-cw-pw").unwrap();
        assert_eq!((c.lhs, c.rhs), (2, 2));
    }

    #[test]
    fn edgeless() {
        let g = Digraph::empty(3).unwrap();
        let p = Parameters::compute(&g).unwrap();
        assert_eq!((p.dpw, p.dcutw, p.dlcw, p.dlnlc, p.dnw, p.dlrw), (0, 0, 1, 1, 1, 0));
        let r = check_all_properties(&g).unwrap();
        assert!(r.iter().all(|x| x.holds()));
        assert!(find(&r, "th-u-d-w-3-upper").is_none());
        assert!(find(&r, "th-cw-pw").is_none());
    }

    #[test]
    fn ids_are_listed() {
        let r = check_all_properties(&directed_cycle(4)).unwrap();
        for x in &r {
            assert!(PROPERTY_IDS.contains(&x.id), "{}", x.id);
        }
    }
}
