use posetcode::code::{build_code, dual_code, macwilliams_check, weight_determination_counterexample, DEFAULT_CODE_CAP};
use posetcode::corpus::{hierarchical, n_poset, scheme_corpus, v_poset};
use posetcode::field::{Matrix, PrimeField};
use posetcode::nrt::nrt_poset;
use posetcode::scheme::{
    build_scheme, dual_scheme_on_dual_poset, eigenmatrices, parameter_isomorphism, scheme_isomorphic_default,
    verify_certificate, SchemeIsoOutcome,
};
use posetcode::space::{Space, DEFAULT_SPACE_CAP};
use posetcode::Poset;
use proptest::prelude::*;

fn space(p: u32, n: usize) -> Space {
    Space::new(PrimeField::new(p).unwrap(), n, DEFAULT_SPACE_CAP).unwrap()
}

fn binomial(n: i64, k: i64) -> i64 {
    if k < 0 || k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// `K_k(x) = Σ_j (-1)^j (q-1)^{k-j} C(x, j) C(n-x, k-j)`.
fn krawtchouk(n: i64, q: i64, k: i64, x: i64) -> i64 {
    (0..=k).map(|j| (-1i64).pow(j as u32) * (q - 1).pow((k - j) as u32) * binomial(x, j) * binomial(n - x, k - j)).sum()
}

#[test]
fn antichain_schemes_are_hamming_schemes() {
    for (n, q) in [(3, 2), (4, 2), (3, 3), (2, 5)] {
        let sp = space(q, n);
        let s = build_scheme(&Poset::antichain(n).unwrap(), &sp).unwrap();
        let e = eigenmatrices(&s).unwrap();
        assert_eq!(s.class_count(), n + 1);
        for i in 0..=n {
            for k in 0..=n {
                assert_eq!(e.p_mat[i][k], krawtchouk(n as i64, q as i64, k as i64, i as i64), "n={n} q={q}");
            }
            assert_eq!(s.valencies()[i] as i64, binomial(n as i64, i as i64) * (q as i64 - 1).pow(i as u32));
        }
    }
}

#[test]
fn chains_give_p_valencies() {
    let sp = space(3, 3);
    let s = build_scheme(&Poset::chain(3).unwrap(), &sp).unwrap();
    assert_eq!(s.valencies(), &[1, 2, 6, 18]);
}

#[test]
fn isomorphism_search() {
    let sp = space(3, 2);
    let a = build_scheme(&Poset::antichain(2).unwrap(), &sp).unwrap();
    let c = build_scheme(&Poset::chain(2).unwrap(), &sp).unwrap();
    assert!(parameter_isomorphism(&a, &c).is_none());
    assert!(matches!(scheme_isomorphic_default(&a, &c).unwrap(), SchemeIsoOutcome::NotIsomorphic { .. }));

    // over F_2 both have valencies 1, 1, 2 and a linear map swaps them
    let sp2 = space(2, 2);
    let a2 = build_scheme(&Poset::antichain(2).unwrap(), &sp2).unwrap();
    let c2 = build_scheme(&Poset::chain(2).unwrap(), &sp2).unwrap();
    match scheme_isomorphic_default(&a2, &c2).unwrap() {
        SchemeIsoOutcome::Isomorphic { images, class_map } => assert!(verify_certificate(&a2, &c2, &images, &class_map)),
        other => panic!("{other:?}"),
    }

    // the N poset is self-dual, so its scheme matches the one on the dual poset
    let sp = space(3, 4);
    let s = build_scheme(&n_poset(), &sp).unwrap();
    let d = dual_scheme_on_dual_poset(&n_poset(), &sp).unwrap();
    match scheme_isomorphic_default(&s, &d).unwrap() {
        SchemeIsoOutcome::Isomorphic { images, class_map } => assert!(verify_certificate(&s, &d, &images, &class_map)),
        other => panic!("{other:?}"),
    }
    let v = build_scheme(&v_poset(), &space(2, 3)).unwrap();
    assert!(!verify_certificate(&v, &v, &[1, 1, 4], &(0..v.class_count()).collect::<Vec<_>>()));
}

#[test]
fn weight_determination() {
    for layers in [vec![2, 2], vec![1, 2], vec![3]] {
        let p = hierarchical(&layers).unwrap();
        let sp = space(2, p.n());
        assert!(weight_determination_counterexample(&p, &sp, p.n()).unwrap().is_none(), "{layers:?}");
    }
    let p = nrt_poset(2, 2).unwrap();
    let sp = space(2, 4);
    let (c1, c2) = weight_determination_counterexample(&p, &sp, 4).unwrap().expect("nrt(2,2) is not hierarchical");
    let w = |c| posetcode::code::weight_distribution(&p, c);
    assert_eq!(w(&c1), w(&c2));
    let d = p.dual();
    let wd = |c| posetcode::code::weight_distribution(&d, &dual_code(c, DEFAULT_CODE_CAP).unwrap());
    assert_ne!(wd(&c1), wd(&c2));
}

fn small_instances() -> Vec<(Poset, u32)> {
    let mut out = Vec::new();
    for (_, p) in scheme_corpus() {
        for q in [2u32, 3] {
            if (q as usize).pow(p.n() as u32) <= 81 {
                out.push((p.clone(), q));
            }
        }
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig { failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn random_codes_satisfy_macwilliams(pick in any::<prop::sample::Index>(), entries in proptest::collection::vec(0u32..3, 36), k in 1usize..=5) {
        let cases = small_instances();
        let (p, q) = &cases[pick.index(cases.len())];
        let sp = space(*q, p.n());
        let k = k.clamp(1, p.n());
        let rows: Vec<Vec<u32>> = entries.chunks(6).take(k).map(|r| r[..p.n()].to_vec()).collect();
        let c = build_code(&sp, &Matrix::from_rows(sp.field(), &rows).unwrap(), DEFAULT_CODE_CAP).unwrap();
        let d = dual_code(&c, DEFAULT_CODE_CAP).unwrap();
        prop_assert_eq!(c.dimension() + d.dimension(), p.n());
        let dd = dual_code(&d, DEFAULT_CODE_CAP).unwrap();
        prop_assert_eq!(dd.codewords(), c.codewords());
        for &x in c.codewords() {
            for &y in d.codewords() {
                prop_assert_eq!(sp.dot(x, y), 0);
            }
        }
        let s = build_scheme(p, &sp).unwrap();
        let e = eigenmatrices(&s).unwrap();
        let report = macwilliams_check(&c, &s, &e, DEFAULT_CODE_CAP).unwrap();
        prop_assert!(report.holds);
        prop_assert_eq!(report.a.iter().sum::<u64>(), c.len() as u64);
    }
}
