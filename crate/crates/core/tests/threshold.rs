//! Threshold recognition against the set of all build sequences.

use std::collections::HashSet;

use diwidth::harness::{canonical_code, enumerate_digraphs, is_isomorphic, vertex_deletions};
use diwidth::threshold::{eval_threshold, recognize_threshold, recognize_threshold_with, ThresholdOp, ThresholdSequence};
use diwidth::Digraph;

const STEPS: [ThresholdOp; 4] = [ThresholdOp::Isolated, ThresholdOp::Sink, ThresholdOp::Source, ThresholdOp::Series];

/// Canonical codes of every digraph some sequence over `steps` builds.
fn buildable(n: usize, steps: &[ThresholdOp]) -> HashSet<u64> {
    let mut seqs = vec![vec![ThresholdOp::Start]];
    for _ in 1..n {
        seqs = seqs
            .into_iter()
            .flat_map(|s| steps.iter().map(move |&op| [s.clone(), vec![op]].concat()))
            .collect();
    }
    seqs.iter()
        .map(|s| canonical_code(&eval_threshold(&ThresholdSequence::from_ops(s)).unwrap()))
        .collect()
}

#[test]
fn recognition_matches_all_sequences() {
    for n in 1..=4 {
        let all = buildable(n, &STEPS);
        let oriented = buildable(n, &STEPS[..3]);
        for g in enumerate_digraphs(n, false).unwrap() {
            let code = canonical_code(&g);
            let r = recognize_threshold(&g).unwrap();
            assert_eq!(r.is_threshold(), all.contains(&code), "{g:?}");
            if let Some(seq) = r.sequence() {
                assert_eq!(eval_threshold(seq).unwrap(), g);
            }
            let o = recognize_threshold_with(&g, true).unwrap();
            assert_eq!(o.is_threshold(), oriented.contains(&code), "{g:?}");
            if let Some(seq) = o.sequence() {
                assert!(!seq.ops().contains(&ThresholdOp::Series));
                assert!(r.is_threshold());
            }
        }
    }
}

#[test]
fn threshold_class_is_hereditary() {
    for g in enumerate_digraphs(5, true).unwrap() {
        if recognize_threshold(&g).unwrap().is_threshold() {
            for h in vertex_deletions(&g) {
                assert!(recognize_threshold(&h).unwrap().is_threshold(), "{h:?} inside {g:?}");
            }
        }
    }
}

#[test]
fn residual_is_stuck() {
    let p4 = Digraph::from_arcs(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
    let r = recognize_threshold(&p4).unwrap();
    assert!(!r.is_threshold());
    let text = serde_json::to_string(&r).unwrap();
    assert!(text.starts_with(r#"{"is_threshold":false,"residual":"#), "{text}");
    assert_eq!(serde_json::from_str::<diwidth::threshold::Recognition>(&text).unwrap(), r);

    let tt = Digraph::from_arcs(3, [(0, 1), (0, 2), (1, 2)]).unwrap();
    let seq = recognize_threshold(&tt).unwrap().sequence().unwrap().clone();
    assert!(is_isomorphic(&eval_threshold(&seq).unwrap(), &tt));
}
