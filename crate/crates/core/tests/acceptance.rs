//! Acceptance criteria, one line per criterion. Runs as a plain binary so the
//! output stays readable; any failing criterion makes the process exit 1.

use std::collections::HashSet;
use std::time::{Duration, Instant};

use diwidth::expressions::{
    biorient_cw, biorient_nlc, cw_to_nlc, drop_directions_cw, drop_directions_nlc, eval_cw, eval_nlc, eval_ucw,
    eval_unlc, exact_dlcw, exact_dlnlc, layout_to_rank_decomposition, nlc_to_cw,
};
use diwidth::families::*;
use diwidth::gf::{gf4_rank, Gf4, Gf4Matrix};
use diwidth::harness::{
    check_biorientation_equalities, enumerate_digraphs, permutations, sweep,
};
use diwidth::layout::{dpw, measure_cost, solve_exact, MeasureKind};
use diwidth::pathdecomp::{from_layout, validate};
use diwidth::threshold::{eval_threshold, nlc1_to_threshold, recognize_threshold, threshold_to_nlc1};
use diwidth::Digraph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration) -> Result<(), String> {
    let took = start.elapsed();
    ensure(took < limit, || format!("took {took:.2?}, limit {limit:?}"))
}

fn value(g: &Digraph, kind: MeasureKind) -> usize {
    solve_exact(g, kind).unwrap().value
}

fn dlnlc(g: &Digraph) -> usize {
    exact_dlnlc(g).unwrap().0
}

fn dlcw(g: &Digraph) -> usize {
    exact_dlcw(g).unwrap().0
}

fn family_values() -> Outcome {
    let start = Instant::now();
    let mut checked = 0;
    let mut check = |what: String, got: usize, want: usize| -> Result<(), String> {
        checked += 1;
        ensure(got == want, || format!("{what}: got {got}, expected {want}"))
    };
    use MeasureKind::*;
    for n in 3..=6 {
        let tt = transitive_tournament(n);
        check(format!("dpw(TT_{n})"), value(&tt, DvsnIn), 0)?;
        check(format!("dcutw(TT_{n})"), value(&tt, DcutwFwd), 0)?;
        check(format!("dlnlc(TT_{n})"), dlnlc(&tt), 1)?;
        check(format!("dnw(TT_{n})"), value(&tt, Dnw), 1)?;
        check(format!("dlrw(TT_{n})"), value(&tt, Dlrw), 1)?;
        check(format!("dlcw(TT_{n})"), dlcw(&tt), 2)?;

        let k = bidirectional_complete(n);
        check(format!("dpw(K_{n})"), value(&k, DvsnIn), n - 1)?;
        check(format!("dcutw(K_{n})"), value(&k, DcutwFwd), (n / 2) * n.div_ceil(2))?;
        check(format!("dnw(K_{n})"), value(&k, Dnw), 1)?;
        check(format!("dlnlc(K_{n})"), dlnlc(&k), 1)?;
        check(format!("dlrw(K_{n})"), value(&k, Dlrw), 1)?;

        let s = bioriented_star(n);
        check(format!("dcutw(K_1,{n})"), value(&s, DcutwFwd), n.div_ceil(2))?;
        check(format!("dpw(K_1,{n})"), value(&s, DvsnIn), 1)?;

        let p = directed_path(n);
        check(format!("dpw(P_{n})"), value(&p, DvsnIn), 0)?;
        check(format!("dcutw(P_{n})"), value(&p, DcutwFwd), 0)?;
        check(format!("dlrw(P_{n})"), value(&p, Dlrw), 1)?;
        check(format!("dnw(P_{n})"), value(&p, Dnw), 2)?;
        check(format!("dlcw(P_{n})"), dlcw(&p), 3)?;

        let c = directed_cycle(n);
        check(format!("dvsn(C_{n})"), value(&c, DvsnIn), 1)?;
        check(format!("dcutw(C_{n})"), value(&c, DcutwFwd), 1)?;
    }
    check("dlnlc(P_4)".into(), dlnlc(&directed_path(4)), 2)?;
    check("dlnlc(P_5)".into(), dlnlc(&directed_path(5)), 3)?;
    within(start, Duration::from_secs(10))?;
    Ok(format!("{checked} values"))
}

fn power_paths() -> Outcome {
    let start = Instant::now();
    let p82 = path_power(8, 2);
    let p41 = path_power(4, 1);
    let got = [dlcw(&p82), value(&p82, MeasureKind::Dnw), dlcw(&p41), value(&p41, MeasureKind::Dnw)];
    ensure(got == [4, 3, 3, 2], || format!("(dlcw, dnw) of P8^2 and P4^1: {got:?}"))?;
    within(start, Duration::from_secs(5))?;
    Ok("dlcw/dnw = 4/3 and 3/2".into())
}

fn exhaustive_sweep() -> Outcome {
    let start = Instant::now();
    let r = sweep(4, false, None).map_err(|e| e.to_string())?;
    ensure(r.instances_checked == 4096, || format!("{} instances", r.instances_checked))?;
    ensure(r.is_clean(), || {
        format!("{} violations, first: {:?}", r.violations.len(), r.violations.first())
    })?;
    within(start, Duration::from_secs(120))?;
    let ratio = r.l2_ratio.as_ref().map_or(String::from("-"), |w| format!("{}/{}", w.dlcw, w.dlrw));
    Ok(format!("4096 digraphs, 0 violations, max dlcw/dlrw {ratio}"))
}

fn biorientation() -> Outcome {
    let start = Instant::now();
    let r = check_biorientation_equalities(5).map_err(|e| e.to_string())?;
    ensure(r.instances_checked == 52, || format!("{} graphs", r.instances_checked))?;
    ensure(r.is_clean(), || format!("violations: {:?}", r.violations))?;
    within(start, Duration::from_secs(300))?;
    Ok("52 graphs, six equalities each".into())
}

fn tightness() -> Outcome {
    let mut nlc_gap = None;
    let mut cw_gap = None;
    for n in 1..=5 {
        for g in enumerate_digraphs(n, true).map_err(|e| e.to_string())? {
            if nlc_gap.is_some() && cw_gap.is_some() {
                break;
            }
            let (nw, nlc, cw) = (value(&g, MeasureKind::Dnw), dlnlc(&g), dlcw(&g));
            if nlc == nw + 1 && nlc_gap.is_none() {
                nlc_gap = Some(g.arcs().collect::<Vec<_>>());
            }
            if cw == nlc + 1 && cw_gap.is_none() {
                cw_gap = Some(g.arcs().collect::<Vec<_>>());
            }
        }
    }
    let (a, b) = match (nlc_gap, cw_gap) {
        (Some(a), Some(b)) => (a, b),
        other => return Err(format!("missing witness: {other:?}")),
    };
    Ok(format!("dlnlc = dnw+1 on {a:?}; dlcw = dlnlc+1 on {b:?}"))
}

fn threshold_equivalence() -> Outcome {
    let mut positives = 0;
    let mut total = 0;
    let mut instances: Vec<Digraph> = Vec::new();
    for n in 1..=4 {
        instances.extend(enumerate_digraphs(n, false).map_err(|e| e.to_string())?);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let five = enumerate_digraphs(5, true).map_err(|e| e.to_string())?;
    instances.extend((0..1500).map(|_| five[rng.gen_range(0..five.len())].clone()));
    for g in &instances {
        total += 1;
        let rec = recognize_threshold(g).map_err(|e| e.to_string())?;
        let (nlc, nw) = (dlnlc(g), value(g, MeasureKind::Dnw));
        ensure(rec.is_threshold() == (nlc == 1) && (nlc == 1) == (nw == 1), || {
            format!("{:?}: threshold {}, dlnlc {nlc}, dnw {nw}", g, rec.is_threshold())
        })?;
        if let Some(seq) = rec.sequence() {
            positives += 1;
            ensure(eval_threshold(seq).unwrap() == *g, || format!("{g:?}: sequence does not rebuild"))?;
            let deg = g.degree_profile();
            let (cw, pw) = (dlcw(g), dpw(g).unwrap().value);
            ensure(cw <= 2 && pw <= deg.min_in_out(), || {
                format!("{g:?}: dlcw {cw}, dpw {pw}, min degree bound {}", deg.min_in_out())
            })?;
        }
    }
    Ok(format!("{total} digraphs, {positives} threshold"))
}

/// Cut costs straight from the definitions, cached per prefix set.
struct Oracle {
    n: usize,
    arc: Vec<Vec<bool>>,
}

impl Oracle {
    fn new(g: &Digraph) -> Self {
        let n = g.order();
        let arc = (0..n).map(|u| (0..n).map(|v| g.has_arc(u, v)).collect()).collect();
        Oracle { n, arc }
    }

    fn cost(&self, kind: MeasureKind, s: &[bool]) -> usize {
        let n = self.n;
        let left: Vec<usize> = (0..n).filter(|&u| s[u]).collect();
        let right: Vec<usize> = (0..n).filter(|&u| !s[u]).collect();
        match kind {
            MeasureKind::DvsnIn => left.iter().filter(|&&u| right.iter().any(|&v| self.arc[v][u])).count(),
            MeasureKind::DvsnOut => left.iter().filter(|&&u| right.iter().any(|&v| self.arc[u][v])).count(),
            MeasureKind::DcutwFwd => left.iter().map(|&u| right.iter().filter(|&&v| self.arc[u][v]).count()).sum(),
            MeasureKind::DcutwBwd => left.iter().map(|&u| right.iter().filter(|&&v| self.arc[v][u]).count()).sum(),
            MeasureKind::Dnw => {
                let rows: HashSet<Vec<(bool, bool)>> = left
                    .iter()
                    .map(|&u| right.iter().map(|&v| (self.arc[u][v], self.arc[v][u])).collect())
                    .collect();
                rows.len()
            }
            MeasureKind::Dlrw => {
                let rows: Vec<Vec<Gf4>> = left
                    .iter()
                    .map(|&u| {
                        right
                            .iter()
                            .map(|&v| match (self.arc[u][v], self.arc[v][u]) {
                                (false, false) => Gf4::Zero,
                                (true, true) => Gf4::One,
                                (true, false) => Gf4::A,
                                (false, true) => Gf4::A2,
                            })
                            .collect()
                    })
                    .collect();
                span_rank(&rows)
            }
            _ => unreachable!(),
        }
    }
}

/// Rank as `log_4` of the number of distinct linear combinations of the rows.
fn span_rank(rows: &[Vec<Gf4>]) -> usize {
    let width = rows.first().map_or(0, |r| r.len());
    let mut span: HashSet<Vec<Gf4>> = HashSet::new();
    span.insert(vec![Gf4::Zero; width]);
    for r in rows {
        let mut next = HashSet::new();
        for v in &span {
            for c in Gf4::ALL {
                next.insert(v.iter().zip(r).map(|(&x, &y)| x + c * y).collect::<Vec<_>>());
            }
        }
        span = next;
    }
    let mut size = span.len();
    let mut rank = 0;
    while size > 1 {
        size /= 4;
        rank += 1;
    }
    rank
}

fn oracle_solve(g: &Digraph, kind: MeasureKind) -> usize {
    let o = Oracle::new(g);
    let n = g.order();
    let mut cache = vec![None; 1 << n];
    let mut cost = |mask: usize| -> usize {
        *cache[mask].get_or_insert_with(|| {
            let s: Vec<bool> = (0..n).map(|v| mask >> v & 1 == 1).collect();
            o.cost(kind, &s)
        })
    };
    let pendant = if kind == MeasureKind::Dlrw && n >= 2 {
        (0..n).map(|v| cost(1 << v)).max().unwrap()
    } else {
        0
    };
    permutations(n)
        .into_iter()
        .map(|p| {
            let mut mask = 0;
            p.iter()
                .map(|&v| {
                    mask |= 1 << v;
                    cost(mask)
                })
                .max()
                .unwrap_or(0)
        })
        .min()
        .unwrap()
        .max(pendant)
}

fn random_digraph(rng: &mut ChaCha8Rng, n: usize) -> Digraph {
    let p: f64 = rng.gen_range(0.1..0.7);
    let arcs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (0..n).map(move |v| (u, v)))
        .filter(|&(u, v)| u != v)
        .filter(|_| rng.gen_bool(p))
        .collect();
    Digraph::from_arcs(n, arcs).unwrap()
}

/// `SCALED[c][r]` multiplies every 2-bit lane of the packed row `r` by `c`.
fn scaled_rows() -> Vec<[u8; 256]> {
    Gf4::ALL
        .iter()
        .map(|&c| {
            let mut t = [0u8; 256];
            for (r, slot) in t.iter_mut().enumerate() {
                *slot = (0..4).fold(0, |acc, i| {
                    let x = Gf4::from_bits((r >> (2 * i)) as u8 & 3);
                    acc | ((c * x).bits() << (2 * i))
                });
            }
            t
        })
        .collect()
}

fn gf4_oracle_all() -> Result<usize, String> {
    let scaled = scaled_rows();
    let mut count = 0;
    for rows in 1..=3usize {
        for cols in 1..=4usize {
            let cells = rows * cols;
            for code in 0u64..1 << (2 * cells) {
                let packed: Vec<u8> = (0..rows).map(|r| (code >> (2 * cols * r)) as u8 & ((1u16 << (2 * cols)) - 1) as u8).collect();
                // Span size over every coefficient vector; rank is its log base 4.
                let mut seen = [false; 256];
                let mut size = 0usize;
                for coeffs in 0..1usize << (2 * rows) {
                    let v = packed
                        .iter()
                        .enumerate()
                        .fold(0u8, |acc, (r, &row)| acc ^ scaled[coeffs >> (2 * r) & 3][row as usize]);
                    if !seen[v as usize] {
                        seen[v as usize] = true;
                        size += 1;
                    }
                }
                let expect = (size.trailing_zeros() / 2) as usize;
                let m = Gf4Matrix::from_rows(
                    packed
                        .iter()
                        .map(|&row| (0..cols).map(|i| Gf4::from_bits(row >> (2 * i) & 3)).collect())
                        .collect(),
                )
                .unwrap();
                let got = gf4_rank(&m);
                if got != expect {
                    return Err(format!("rank {got} vs span oracle {expect} on {m:?}"));
                }
                count += 1;
            }
        }
    }
    Ok(count)
}

fn oracle_equivalences() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..50 {
        let g = random_digraph(&mut rng, 6);
        for kind in MeasureKind::DIRECTED {
            let (a, b) = (value(&g, kind), oracle_solve(&g, kind));
            ensure(a == b, || format!("{kind:?} on {g:?}: solver {a}, all layouts {b}"))?;
        }
    }
    let matrices = gf4_oracle_all()?;
    Ok(format!("50 digraphs x 6 measures; {matrices} GF(4) matrices"))
}

fn witness_closure() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut witnesses = 0;
    for _ in 0..100 {
        let n = rng.gen_range(1..=8);
        let g = random_digraph(&mut rng, n);
        let un = g.underlying_undirected();
        let fail = |what: &str| format!("{what} on {g:?}");
        for kind in MeasureKind::DIRECTED.into_iter().chain(MeasureKind::UNDIRECTED) {
            let r = solve_exact(&g, kind).unwrap();
            ensure(measure_cost(&g, kind, &r.layout).unwrap() == r.value, || fail(kind.name()))?;
            witnesses += 1;
        }
        let pw = dpw(&g).unwrap();
        let d = from_layout(&g, &pw.layout).unwrap();
        ensure(validate(&g, &d).unwrap().is_none() && d.width() == pw.value as isize, || fail("dpd"))?;

        let rw = solve_exact(&g, MeasureKind::Dlrw).unwrap();
        let cat = layout_to_rank_decomposition(&g, &rw.layout).unwrap();
        ensure(cat.width(&g) == rw.value, || fail("caterpillar"))?;
        let nw = solve_exact(&g, MeasureKind::Dnw).unwrap();
        let cat = layout_to_rank_decomposition(&g, &nw.layout).unwrap();
        ensure(cat.width(&g) <= nw.value, || fail("caterpillar bound"))?;

        let (k, x) = exact_dlnlc(&g).unwrap();
        ensure(eval_nlc(&x).unwrap().digraph == g && x.k == k, || fail("nlc witness"))?;
        ensure(measure_cost(&g, MeasureKind::Dnw, &x.layout()).unwrap() <= k, || fail("nlc layout"))?;
        let (c, y) = exact_dlcw(&g).unwrap();
        ensure(eval_cw(&y).unwrap().digraph == g && y.k == c, || fail("cw witness"))?;
        ensure(measure_cost(&g, MeasureKind::Dnw, &y.layout()).unwrap() <= c, || fail("cw layout"))?;

        let xc = nlc_to_cw(&x);
        ensure(eval_cw(&xc).unwrap().digraph == g && xc.k <= k + 1, || fail("nlc to cw"))?;
        let yn = cw_to_nlc(&y);
        ensure(eval_nlc(&yn).unwrap().digraph == g && yn.k <= c, || fail("cw to nlc"))?;
        let xu = drop_directions_nlc(&x);
        ensure(eval_unlc(&xu).unwrap().graph == un && xu.k == k, || fail("drop nlc"))?;
        let yu = drop_directions_cw(&y);
        ensure(eval_ucw(&yu).unwrap().graph == un && yu.k == c, || fail("drop cw"))?;
        let bio = un.complete_biorientation();
        ensure(eval_nlc(&biorient_nlc(&xu)).unwrap().digraph == bio, || fail("biorient nlc"))?;
        ensure(eval_cw(&biorient_cw(&yu)).unwrap().digraph == bio, || fail("biorient cw"))?;

        if let Some(seq) = recognize_threshold(&g).unwrap().sequence() {
            ensure(eval_threshold(seq).unwrap() == g, || fail("threshold sequence"))?;
            let t = threshold_to_nlc1(seq).unwrap();
            ensure(eval_nlc(&t).unwrap().digraph == g, || fail("threshold to nlc"))?;
            ensure(nlc1_to_threshold(&t).unwrap() == *seq, || fail("nlc to threshold"))?;
            witnesses += 1;
        }
        witnesses += 12;
    }
    Ok(format!("100 digraphs, {witnesses} witnesses re-verified"))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("family values", family_values),
        ("power-path exactness", power_paths),
        ("exhaustive sweep n=4", exhaustive_sweep),
        ("biorientation equalities n<=5", biorientation),
        ("tightness witnesses", tightness),
        ("threshold equivalence", threshold_equivalence),
        ("oracle equivalences", oracle_equivalences),
        ("witness closure", witness_closure),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        let took = start.elapsed();
        match outcome {
            Ok(detail) => println!("PASS {} {name} ({took:.2?}): {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {} {name} ({took:.2?}): {detail}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
