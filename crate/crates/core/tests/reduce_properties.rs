use proptest::prelude::*;

use graphlim::corpus;
use graphlim::density::mixed_moment;
use graphlim::graphon::StepGraphon;
use graphlim::rational::{int, ratio};
use graphlim::reduce::{
    anchor_tags, build_coupling, find_distinguishing_graph, random_anchors, twin_partition,
    twin_reduce, weak_iso, CouplingMatrix, WeakIsoVerdict,
};

prop_compose! {
    fn step_graphon(max_blocks: usize)
        (b in 1..=max_blocks)
        (raw in proptest::collection::vec(0i64..4, b),
         cells in proptest::collection::vec(0usize..3, b * b),
         b in Just(b))
        -> StepGraphon
    {
        // a small palette makes twins common
        let raw = if raw.iter().all(|&w| w == 0) { vec![1; b] } else { raw };
        let total: i64 = raw.iter().sum();
        let palette = [int(0), ratio(1, 2), int(1)];
        let mut values = vec![vec![int(0); b]; b];
        for i in 0..b {
            for j in i..b {
                values[i][j] = palette[cells[i * b + j]].clone();
                values[j][i] = palette[cells[i * b + j]].clone();
            }
        }
        StepGraphon::new(raw.iter().map(|&w| ratio(w, total)).collect(), values).unwrap()
    }
}

fn all_pairs() -> Vec<(String, StepGraphon, StepGraphon)> {
    let graphons = corpus::graphons();
    let mut out = Vec::new();
    for (n, a, b) in corpus::equivalent_pairs()
        .into_iter()
        .chain(corpus::inequivalent_pairs())
    {
        out.push((n.to_string(), a, b));
    }
    for (n1, a) in &graphons {
        for (n2, b) in &graphons {
            out.push((format!("{n1}/{n2}"), a.clone(), b.clone()));
        }
    }
    out.retain(|(_, a, b)| a.num_blocks() <= 6 && b.num_blocks() <= 6);
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn reduced_forms_have_singleton_twin_classes(h in step_graphon(5)) {
        let r = twin_reduce(&h);
        prop_assert_eq!(twin_partition(&r).num_classes(), r.num_blocks());
    }

    #[test]
    fn permuted_blowups_are_weakly_isomorphic(h in step_graphon(4), k in 1usize..3, rot in 0usize..4) {
        let n = h.num_blocks();
        let order: Vec<usize> = (0..n).map(|i| (i + rot) % n).collect();
        let other = h.permute(&order).blowup(k);
        prop_assert!(weak_iso(&h, &other).is_isomorphic());
        let c = build_coupling(&h, &other).unwrap();
        prop_assert!(c.has_marginals(&h, &other));
        prop_assert_eq!(c.support_violation(&h, &other), None);
        prop_assert_eq!(CouplingMatrix::from_json(&c.to_json()).unwrap(), c);
    }

    #[test]
    fn graphon_json_round_trip(h in step_graphon(5)) {
        prop_assert_eq!(StepGraphon::from_json(&h.to_json()).unwrap(), h);
    }
}

#[test]
fn weak_iso_agrees_with_distinguisher_search() {
    for (name, a, b) in all_pairs() {
        let iso = weak_iso(&a, &b).is_isomorphic();
        let found = find_distinguishing_graph(&a, &b, 5).unwrap();
        assert_eq!(iso, found.is_none(), "{name}: {found:?}");
    }
}

#[test]
fn random_anchors_recover_twin_classes() {
    for (name, h) in corpus::graphons() {
        let m = 8 * h.num_blocks();
        let twins = twin_partition(&h);
        let hits = (0..500)
            .filter(|&seed| {
                let anchors = random_anchors(&h, m, seed);
                let (_, tags) = anchor_tags(&h, &anchors).unwrap();
                tags.same_grouping(&twins)
            })
            .count();
        assert!(hits >= 495, "{name}: {hits}/500");
    }
}

#[test]
fn random_anchors_follow_the_weights() {
    let h = corpus::asymmetric3();
    let anchors = random_anchors(&h, 60_000, 3);
    for b in 0..3 {
        let share = anchors.iter().filter(|&&a| a == b).count() as f64 / 60_000.0;
        let want = graphlim::rational::to_f64(h.weight(b));
        assert!((share - want).abs() < 0.01, "block {b}: {share} vs {want}");
    }
    assert_eq!(anchors, random_anchors(&h, 60_000, 3));
}

fn tuples(blocks: usize, len: usize) -> Vec<Vec<usize>> {
    (0..blocks.pow(len as u32))
        .map(|code| {
            (0..len)
                .map(|i| code / blocks.pow(i as u32) % blocks)
                .collect()
        })
        .collect()
}

#[test]
fn mixed_moments_transfer_along_the_matching() {
    for (name, a, b) in corpus::equivalent_pairs() {
        let WeakIsoVerdict::Isomorphic(m) = weak_iso(&a, &b) else {
            panic!("{name} should be weakly isomorphic");
        };
        let (r1, r2) = (&m.reduced1.graphon, &m.reduced2.graphon);
        for len in 1..=3 {
            for anchors in tuples(r1.num_blocks(), len) {
                let mapped: Vec<usize> = anchors.iter().map(|&x| m.bijection[x]).collect();
                for exps in tuples(4, len) {
                    let exps: Vec<u32> = exps.into_iter().map(|e| e as u32).collect();
                    assert_eq!(
                        mixed_moment(r1, &anchors, &exps).unwrap(),
                        mixed_moment(r2, &mapped, &exps).unwrap(),
                        "{name} {anchors:?} {exps:?}"
                    );
                }
            }
        }
    }
}
