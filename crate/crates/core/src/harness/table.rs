//! Family values of the summary table, and the equalities between undirected
//! measures and their directed counterparts on complete biorientations.

use super::{enumerate_undirected, PropertyViolation, SweepReport};
use crate::digraph::{Digraph, UndirectedGraph};
use crate::error::{Error, Result};
use crate::expressions::{
    biorient_cw, biorient_nlc, drop_directions_cw, drop_directions_nlc, eval_cw, eval_nlc, eval_ucw, eval_unlc,
    exact_dlcw_with, exact_dlnlc_with, exact_lcw_with, exact_lnlc_with,
};
use crate::families::{bidirectional_complete, bioriented_star, generate, oriented_paths, path_power, transitive_tournament, FamilySpec};
use crate::layout::{solve_exact_with, undirected_measure_with, MeasureKind, SolverConfig};

const CONFIG: SolverConfig = SolverConfig {
    dp_limit: 20,
    search_limit: 16,
};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum M {
    Dcutw,
    Dpw,
    Dlcw,
    Dlnlc,
    Dnw,
    Dlrw,
}

impl M {
    const ALL: [M; 6] = [M::Dcutw, M::Dpw, M::Dlcw, M::Dlnlc, M::Dnw, M::Dlrw];

    fn name(self) -> &'static str {
        match self {
            M::Dcutw => "dcutw",
            M::Dpw => "dpw",
            M::Dlcw => "dlcw",
            M::Dlnlc => "dlnlc",
            M::Dnw => "dnw",
            M::Dlrw => "dlrw",
        }
    }

    fn eval(self, g: &Digraph) -> Result<usize> {
        let d = |k| solve_exact_with(g, k, &CONFIG).map(|r| r.value);
        match self {
            M::Dcutw => d(MeasureKind::DcutwFwd),
            M::Dpw => d(MeasureKind::DvsnIn),
            M::Dlcw => exact_dlcw_with(g, &CONFIG).map(|r| r.0),
            M::Dlnlc => exact_dlnlc_with(g, &CONFIG).map(|r| r.0),
            M::Dnw => d(MeasureKind::Dnw),
            M::Dlrw => d(MeasureKind::Dlrw),
        }
    }
}

struct Table<'a> {
    report: &'a mut SweepReport,
}

impl Table<'_> {
    fn fail(&mut self, cell: String, g: &Digraph, observed: i64, expected: i64) {
        self.report.violations.push(PropertyViolation {
            property: cell,
            n: g.order(),
            arcs: g.arcs().collect(),
            lhs: observed,
            rhs: expected,
            values: None,
        });
    }

    /// Checks a finite cell on one instance.
    fn cell(&mut self, column: &str, m: M, g: &Digraph, expected: usize) -> Result<()> {
        let v = m.eval(g)?;
        self.report.instances_checked += 1;
        if v != expected {
            self.fail(format!("table1/{column}/{}", m.name()), g, v as i64, expected as i64);
        }
        Ok(())
    }

    /// Checks an unbounded cell as strict growth along the given instances.
    fn growth(&mut self, column: &str, m: M, instances: &[Digraph]) -> Result<()> {
        let mut prev: Option<usize> = None;
        for g in instances {
            let v = m.eval(g)?;
            self.report.instances_checked += 1;
            if let Some(p) = prev {
                if v <= p {
                    self.fail(format!("table1/{column}/{}/growth", m.name()), g, v as i64, p as i64 + 1);
                }
            }
            prev = Some(v);
        }
        Ok(())
    }
}

/// Verifies the finite cells of every family column on instances with
/// `3..=max_n` vertices (paths up to `max_n`), and the unbounded cells as
/// strict growth along fixed instance chains.
pub fn check_table1(max_n: usize) -> Result<SweepReport> {
    if !(3..=8).contains(&max_n) {
        return Err(Error::input(format!("max_n must lie in 3..=8, got {max_n}")));
    }
    let mut report = SweepReport::new(max_n, false);
    let mut t = Table { report: &mut report };

    for n in 3..=max_n {
        let tt = transitive_tournament(n);
        for (m, v) in M::ALL.into_iter().zip([0, 0, 2, 1, 1, 1]) {
            t.cell("TT", m, &tt, v)?;
        }
        let cb = bidirectional_complete(n);
        for (m, v) in M::ALL.into_iter().zip([(n / 2) * n.div_ceil(2), n - 1, 2, 1, 1, 1]) {
            t.cell("CB", m, &cb, v)?;
        }
        let bs = bioriented_star(n);
        for (m, v) in M::ALL.into_iter().zip([n.div_ceil(2), 1, 2, 1, 1, 1]) {
            t.cell("BS", m, &bs, v)?;
        }
    }
    let cb: Vec<Digraph> = (3..=5).map(bidirectional_complete).collect();
    t.growth("CB", M::Dcutw, &cb)?;
    t.growth("CB", M::Dpw, &cb)?;
    let bs: Vec<Digraph> = [2, 4, 6].into_iter().map(bioriented_star).collect();
    t.growth("BS", M::Dcutw, &bs)?;

    // Oriented paths: every orientation is acyclic; the remaining cells are
    // maxima over all orientations.
    let mut best = [0usize; 6];
    for n in 2..=max_n {
        for o in oriented_paths(n) {
            let g = generate(&FamilySpec::OrientedPath { orientation: o })?;
            t.cell("OP", M::Dcutw, &g, 0)?;
            t.cell("OP", M::Dpw, &g, 0)?;
            for (i, m) in M::ALL.into_iter().enumerate().skip(2) {
                best[i] = best[i].max(m.eval(&g)?);
            }
        }
    }
    let expect_op = [(2, 3, 3), (3, 3, 5), (4, 2, 3)];
    for (i, v, needs) in expect_op {
        let reached = max_n >= needs;
        if best[i] > v || (reached && best[i] < v) {
            let witness = Digraph::empty(0)?;
            t.fail(format!("table1/OP/{}", M::ALL[i].name()), &witness, best[i] as i64, v as i64);
        }
    }
    t.report.notes.push(format!(
        "OP dlrw: table value 2; maximum over oriented paths with at most {max_n} vertices is {}",
        best[5]
    ));

    // Acyclic digraphs: powers of directed paths.
    let chain = |pairs: &[(usize, usize)]| -> Vec<Digraph> { pairs.iter().map(|&(n, k)| path_power(n, k)).collect() };
    let dp_chain = chain(&[(4, 1), (8, 2), (14, 3)]);
    for g in &dp_chain {
        t.cell("DAG", M::Dcutw, g, 0)?;
        t.cell("DAG", M::Dpw, g, 0)?;
    }
    for m in [M::Dlnlc, M::Dnw, M::Dlrw] {
        t.growth("DAG", m, &dp_chain)?;
    }
    t.growth("DAG", M::Dlcw, &chain(&[(2, 1), (4, 1), (8, 2)]))?;
    Ok(report)
}

fn bio_violation(report: &mut SweepReport, id: &str, g: &UndirectedGraph, lhs: usize, rhs: usize) {
    report.violations.push(PropertyViolation {
        property: id.to_string(),
        n: g.order(),
        arcs: g.edges().collect(),
        lhs: lhs as i64,
        rhs: rhs as i64,
        values: None,
    });
}

/// For every graph on at most `max_n` vertices up to isomorphism, compares
/// each undirected measure with the directed one on the complete
/// biorientation, and converts the witnesses both ways.
pub fn check_biorientation_equalities(max_n: usize) -> Result<SweepReport> {
    let mut report = SweepReport::new(max_n, true);
    let cfg = SolverConfig::default();
    for n in 1..=max_n {
        for g in enumerate_undirected(n, true)? {
            let bio = g.complete_biorientation();
            let pairs = [
                ("th-bio-pw", MeasureKind::UVsn, MeasureKind::DvsnIn),
                ("th-bio-cutw", MeasureKind::UCutw, MeasureKind::DcutwFwd),
                ("th-bio-nw", MeasureKind::UNw, MeasureKind::Dnw),
                ("th-bio-lrw", MeasureKind::ULrw, MeasureKind::Dlrw),
            ];
            for (id, uk, dk) in pairs {
                let u = undirected_measure_with(&g, uk, &cfg)?.value;
                let d = solve_exact_with(&bio, dk, &cfg)?.value;
                if u != d {
                    bio_violation(&mut report, id, &g, u, d);
                }
            }

            let (u, ux) = exact_lnlc_with(&g, &cfg)?;
            let (d, dx) = exact_dlnlc_with(&bio, &cfg)?;
            if u != d {
                bio_violation(&mut report, "th-bio-lnlc", &g, u, d);
            }
            let up = eval_nlc(&biorient_nlc(&ux))?.digraph == bio;
            let down = eval_unlc(&drop_directions_nlc(&dx))?.graph == g;
            if !(up && down) {
                bio_violation(&mut report, "th-bio-lnlc-witness", &g, u, d);
            }

            let (u, ux) = exact_lcw_with(&g, &cfg)?;
            let (d, dx) = exact_dlcw_with(&bio, &cfg)?;
            if u != d {
                bio_violation(&mut report, "th-bio-lcw", &g, u, d);
            }
            let up = eval_cw(&biorient_cw(&ux))?.digraph == bio;
            let down = eval_ucw(&drop_directions_cw(&dx))?.graph == g;
            if !(up && down) {
                bio_violation(&mut report, "th-bio-lcw-witness", &g, u, d);
            }
            report.instances_checked += 1;
        }
    }
    Ok(report)
}
