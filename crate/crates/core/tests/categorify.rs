use cluster_frobenius::categorify::{verify_main_theorem, Categorification, Label, VerifyOptions};
use cluster_frobenius::clusteralg::{exchange_graph, universal_seed, DEFAULT_BUDGET};
use cluster_frobenius::quiver::Quiver;
use cluster_frobenius::rootsys::{Family, Root, RootSystem};
use std::collections::{BTreeSet, HashSet};

fn setup(f: Family, n: usize, arrows: &[(usize, usize)]) -> (RootSystem, Quiver) {
    let rs = RootSystem::of_type(f, n).unwrap();
    let q = rs.diagram().orientation(arrows).unwrap();
    (rs, q)
}

fn x(c: &[i64]) -> Label {
    Label::X(Root::new(c.to_vec()))
}

#[test]
fn a2_ice_quiver_of_initial_object() {
    let (rs, q) = setup(Family::A, 2, &[(0, 1)]);
    let cat = Categorification::new(&rs, &q).unwrap();
    let (g, _) = cat.ice_quiver_oracle().unwrap();
    let mut arrows = BTreeSet::new();
    for u in 0..g.vertices.len() {
        for v in 0..g.vertices.len() {
            let frozen_pair = u >= g.mutable && v >= g.mutable;
            if g.counts[u][v] > 0 && !frozen_pair {
                assert_eq!(g.counts[u][v], 1);
                arrows.insert((g.labels[u].to_string(), g.labels[v].to_string()));
            }
        }
    }
    let want: BTreeSet<(String, String)> = [
        ("X[-a1]", "X[-a2]"),
        ("X[-a2]", "P[a1+a2]"),
        ("X[-a2]", "P[a2]"),
        ("P[-a2]", "X[-a2]"),
        ("P[a1]", "X[-a1]"),
        ("X[-a1]", "P[-a1]"),
        ("P[a1+a2]", "X[-a1]"),
    ]
    .iter()
    .map(|(a, b)| (a.to_string(), b.to_string()))
    .collect();
    assert_eq!(arrows, want);
}

#[test]
fn summands_follow_denominator_vectors() {
    let (rs, q) = setup(Family::A, 2, &[(0, 1)]);
    let cat = Categorification::new(&rs, &q).unwrap();
    let mid: Vec<String> = cat
        .summands_for(&[vec![1, 0], vec![1, 1]])
        .unwrap()
        .iter()
        .map(|&v| cat.label(v).unwrap().to_string())
        .collect();
    assert_eq!(mid, ["X[a1]", "X[a1+a2]"]);
    let t = cat.initial_summands().unwrap();
    assert!(cat.cluster_tilting(&t).unwrap().is_cluster_tilting());
}

fn index_oracle(rs: &RootSystem, q: &Quiver) {
    let cat = Categorification::new(rs, q).unwrap();
    let t = cat.initial_summands().unwrap();
    let n = rs.rank();
    for i in 0..n {
        let mut alpha = vec![0; n];
        alpha[i] = 1;
        let a = cat.approximation_triangle(cat.vertex(&x(&alpha)).unwrap(), &t).unwrap();
        let mut want = vec![0; n];
        want[i] = -1;
        if q.is_source(i) {
            for j in q.successors(i) {
                want[j] += 1;
            }
        }
        assert_eq!(a.index, want, "index of X[a{}]", i + 1);
    }
    let mut seen = HashSet::new();
    for v in cat.nakajima().non_frozen_reps() {
        let a = cat.approximation_triangle(v, &t).unwrap();
        assert!(seen.insert(a.index.clone()), "index {:?} repeats", a.index);
    }
    assert_eq!(seen.len(), rs.almost_positive().len());
}

#[test]
fn index_of_simples_and_injectivity() {
    let (rs, q) = setup(Family::A, 2, &[(0, 1)]);
    index_oracle(&rs, &q);
    let (rs, q) = setup(Family::A, 3, &[(0, 1), (2, 1)]);
    index_oracle(&rs, &q);
    let (rs, q) = setup(Family::D, 4, &[(1, 0), (1, 2), (1, 3)]);
    index_oracle(&rs, &q);
}

#[test]
fn adding_any_summand_breaks_rigidity() {
    for n in [2, 3] {
        let rs = RootSystem::of_type(Family::A, n).unwrap();
        let q = rs.diagram().bipartite_orientation();
        let cat = Categorification::new(&rs, &q).unwrap();
        let t = cat.initial_summands().unwrap();
        for alpha in rs.positive_roots() {
            let mut bigger = t.clone();
            bigger.push(cat.vertex(&Label::X(alpha.clone())).unwrap());
            let ct = cat.cluster_tilting(&bigger).unwrap();
            assert!(!ct.rigidity_failures.is_empty(), "T + X[{}] is rigid", alpha);
        }
    }
}

#[test]
fn every_cluster_is_cluster_tilting_a3() {
    let (rs, q) = setup(Family::A, 3, &[(0, 1), (2, 1)]);
    let cat = Categorification::new(&rs, &q).unwrap();
    let g = exchange_graph(&universal_seed(&rs, &q).unwrap(), DEFAULT_BUDGET).unwrap();
    for seed in &g.seeds {
        let d: Vec<Vec<i64>> = seed.cluster().iter().map(|v| v.d_vector()).collect();
        let t = cat.summands_for(&d).unwrap();
        let ct = cat.cluster_tilting(&t).unwrap();
        assert!(ct.is_cluster_tilting(), "{:?}", ct);
    }
}

#[test]
fn resolutions_of_simples_a3_and_d4() {
    for (rs, q) in [
        setup(Family::A, 3, &[(0, 1), (2, 1)]),
        setup(Family::D, 4, &[(1, 0), (1, 2), (1, 3)]),
    ] {
        let cat = Categorification::new(&rs, &q).unwrap();
        let checks = cat.resolution_checks().unwrap();
        assert_eq!(checks.len(), rs.rank() + rs.almost_positive().len());
        for r in checks {
            assert!(r.agrees(), "{:?}", r);
        }
    }
}

#[test]
fn opposite_bipartite_orientations_pass() {
    for (f, n) in [(Family::A, 2), (Family::A, 3), (Family::A, 4), (Family::D, 4)] {
        let rs = RootSystem::of_type(f, n).unwrap();
        let q = rs.diagram().bipartite_orientation().opposite();
        let r = verify_main_theorem(&rs, &q, &VerifyOptions::default()).unwrap();
        assert!(r.passed(), "{}", r.to_text());
    }
}

#[test]
fn non_bipartite_orientation_is_rejected() {
    let (rs, q) = setup(Family::A, 3, &[(0, 1), (1, 2)]);
    assert!(Categorification::new(&rs, &q).is_err());
}

#[test]
fn proper_configuration_checks_only_the_mutable_part() {
    let (rs, q) = setup(Family::A, 3, &[(0, 1), (2, 1)]);
    let opts = VerifyOptions { configuration: Some("(1,0);(2,0);(3,0)".into()), ..Default::default() };
    let r = verify_main_theorem(&rs, &q, &opts).unwrap();
    assert!(r.passed(), "{}", r.to_text());
    assert!(r.to_text().contains("N/A"));
}
