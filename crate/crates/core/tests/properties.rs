use cluster_frobenius::clusteralg::{universal_seed, Seed, TropicalMonomial};
use cluster_frobenius::meshcat::{Happel, RQVertex};
use cluster_frobenius::quiver::{IceQuiver, Quiver};
use cluster_frobenius::repmod::{ext1_dim, hom_dim, ModuleCategory};
use cluster_frobenius::rootsys::{pairing, simple_reflection, Family, RootSystem, SignFunction};
use proptest::prelude::*;

const TYPES: [(Family, usize); 7] = [
    (Family::A, 1),
    (Family::A, 2),
    (Family::A, 3),
    (Family::A, 4),
    (Family::D, 4),
    (Family::D, 5),
    (Family::E, 6),
];

fn system(k: usize) -> (RootSystem, Quiver) {
    let (f, n) = TYPES[k % TYPES.len()];
    let rs = RootSystem::of_type(f, n).unwrap();
    let q = rs.diagram().bipartite_orientation();
    (rs, q)
}

fn word(n: usize, raw: &[usize]) -> Vec<usize> {
    raw.iter().map(|&k| k % n).collect()
}

fn monomial() -> impl Strategy<Value = TropicalMonomial> {
    prop::collection::vec(-3i64..=3, 4).prop_map(|v| TropicalMonomial::from_dense(&v))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn tau_eps_are_involutions(k in 0usize..7, flip in any::<bool>()) {
        let (rs, q) = system(k);
        let q = if flip { q.opposite() } else { q };
        let signs = SignFunction::from_orientation(&q).unwrap();
        for a in rs.almost_positive() {
            let p = rs.tau_plus(&signs, a).unwrap();
            let m = rs.tau_minus(&signs, a).unwrap();
            prop_assert_eq!(&rs.tau_plus(&signs, &p).unwrap(), a);
            prop_assert_eq!(&rs.tau_minus(&signs, &m).unwrap(), a);
        }
    }

    #[test]
    fn reflections_preserve_length(k in 0usize..7, i in 0usize..8) {
        let (rs, _) = system(k);
        let d = rs.diagram();
        let i = i % rs.rank();
        for a in rs.positive_roots() {
            let r = simple_reflection(d, i, a.coeffs());
            prop_assert_eq!(pairing(d, &r, &r), 2);
            prop_assert_eq!(pairing(d, a.coeffs(), a.coeffs()), 2);
        }
    }

    #[test]
    fn same_sign_reflections_commute(k in 0usize..7) {
        let (rs, q) = system(k);
        let d = rs.diagram();
        let signs = SignFunction::from_orientation(&q).unwrap();
        for a in rs.almost_positive() {
            for i in 0..rs.rank() {
                for j in 0..rs.rank() {
                    if signs.get(i) != signs.get(j) {
                        continue;
                    }
                    let ij = simple_reflection(d, i, &simple_reflection(d, j, a.coeffs()));
                    let ji = simple_reflection(d, j, &simple_reflection(d, i, a.coeffs()));
                    prop_assert_eq!(ij, ji);
                }
            }
        }
    }

    #[test]
    fn quiver_mutation_is_an_involution(k in 0usize..7, raw in prop::collection::vec(0usize..8, 0..10), v in 0usize..8) {
        let (_, q) = system(k);
        let n = q.n();
        let ice = IceQuiver::new(q, n).unwrap().mutate_sequence(&word(n, &raw)).unwrap();
        let v = v % n;
        let once = ice.mutate(v).unwrap();
        prop_assert_eq!(&once.mutate(v).unwrap(), &ice);
        let b = once.b();
        for a in 0..n {
            prop_assert_eq!(b[a][a], 0);
            for c in 0..n {
                prop_assert_eq!(b[a][c], -b[c][a]);
            }
        }
    }

    #[test]
    fn universal_seeds_stay_consistent(k in 0usize..5, raw in prop::collection::vec(0usize..8, 0..8)) {
        let (rs, q) = system(k);
        let seed = universal_seed(&rs, &q).unwrap();
        let (s, _) = seed.mutate_sequence(&word(rs.rank(), &raw)).unwrap();
        prop_assert_eq!(Seed::y_from_ice(s.ice()), s.coeffs().to_vec());
        for x in s.cluster() {
            prop_assert!(rs.almost_positive().iter().any(|r| r.coeffs() == x.d_vector().as_slice()));
        }
        let mq = s.ice().mutable_part();
        for a in 0..rs.rank() {
            for b in 0..rs.rank() {
                prop_assert!(mq.arrow_count(a, b) == 0 || mq.arrow_count(b, a) == 0);
            }
        }
        let back: Vec<usize> = word(rs.rank(), &raw).into_iter().rev().collect();
        let (home, _) = s.mutate_sequence(&back).unwrap();
        prop_assert_eq!(home.key(), seed.key());
    }

    #[test]
    fn tropical_sum_laws(a in monomial(), b in monomial(), c in monomial()) {
        prop_assert_eq!(a.oplus(&a), a.clone());
        prop_assert_eq!(a.oplus(&b), b.oplus(&a));
        prop_assert_eq!(a.oplus(&b).oplus(&c), a.oplus(&b.oplus(&c)));
        let one = TropicalMonomial::one();
        let want: Vec<i64> = a.dense(4).iter().map(|&e| e.min(0)).collect();
        prop_assert_eq!(a.oplus(&one).dense(4), want);
    }

    #[test]
    fn meshcat_translations_commute(k in 0usize..7, i in 0usize..8, p in -20i64..20) {
        let (rs, q) = system(k);
        let hp = Happel::knit(&rs, &q).unwrap();
        let x = RQVertex::new(i % rs.rank(), p);
        let (tau, nu, sigma) = (hp.tau(), hp.nu().clone(), hp.sigma().clone());
        prop_assert_eq!(nu.apply(tau.apply(x)), tau.apply(nu.apply(x)));
        prop_assert_eq!(sigma.apply(tau.apply(x)), tau.apply(sigma.apply(x)));
        prop_assert_eq!(sigma.apply(x), tau.inverse().apply(nu.apply(x)));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn euler_form_is_hom_minus_ext(k in 0usize..5, a in 0usize..64, b in 0usize..64) {
        let (rs, q) = system(k);
        let mut cat = ModuleCategory::new(rs.clone(), q).unwrap();
        let pos = rs.positive_roots();
        let (ra, rb) = (&pos[a % pos.len()], &pos[b % pos.len()]);
        let m = cat.indecomposable(ra).unwrap();
        let n = cat.indecomposable(rb).unwrap();
        prop_assert_eq!(m.dim_vector(), ra.coeffs().to_vec());
        let lhs = hom_dim(&m, &n) as i64 - ext1_dim(&m, &n) as i64;
        prop_assert_eq!(lhs, cat.euler_form(ra.coeffs(), rb.coeffs()));
        prop_assert_eq!(hom_dim(&m, &m), 1);
        prop_assert_eq!(ext1_dim(&m, &m), 0);
    }
}
