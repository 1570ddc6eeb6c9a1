use posetcode::io::{parse_poset_file, serialize_poset};
use posetcode::iso::{automorphism_generators, automorphism_group, ideal_isomorphism, DEFAULT_GROUP_CAP};
use posetcode::poset::DEFAULT_IDEAL_CAP;
use posetcode::{Poset, Subset};
use proptest::prelude::*;

/// Random posets on up to six points: each pair `i < j` is related with
/// probability one half, so every labelling is already a linear extension.
fn poset() -> impl Strategy<Value = Poset> {
    (1usize..=6).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j))).collect();
        proptest::collection::vec(any::<bool>(), pairs.len()).prop_map(move |keep| {
            let rel: Vec<_> = pairs.iter().zip(keep).filter(|(_, k)| *k).map(|(r, _)| *r).collect();
            Poset::new(n, &rel).unwrap()
        })
    })
}

fn brute_ideals(p: &Poset) -> Vec<Subset> {
    let n = p.n();
    let mut out: Vec<Subset> = (0u64..1 << n)
        .map(Subset::from_bits)
        .filter(|s| s.iter().all(|j| (0..n).all(|i| !p.leq(i, j) || s.contains(i))))
        .collect();
    out.sort();
    out
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for perm in permutations(n - 1) {
        for pos in 0..n {
            let mut p = perm.clone();
            p.insert(pos, n - 1);
            out.push(p);
        }
    }
    out
}

fn brute_isomorphic(p: &Poset, i: Subset, j: Subset) -> bool {
    let (src, dst): (Vec<usize>, Vec<usize>) = (i.iter().collect(), j.iter().collect());
    src.len() == dst.len()
        && permutations(src.len()).into_iter().any(|g| {
            (0..src.len()).all(|a| (0..src.len()).all(|b| p.leq(src[a], src[b]) == p.leq(dst[g[a]], dst[g[b]])))
        })
}

proptest! {
    #![proptest_config(ProptestConfig { failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn ideals_match_brute_force(p in poset()) {
        prop_assert_eq!(p.enumerate_ideals(DEFAULT_IDEAL_CAP).unwrap(), brute_ideals(&p));
        let filters = p.enumerate_filters(DEFAULT_IDEAL_CAP).unwrap();
        prop_assert_eq!(filters.len(), brute_ideals(&p.dual()).len());
        prop_assert!(filters.iter().all(|&f| p.is_filter(f)));
    }

    #[test]
    fn dual_is_an_involution(p in poset()) {
        prop_assert_eq!(p.dual().dual(), p.clone());
        prop_assert_eq!(p.dual().strict_pairs(), p.strict_pairs());
    }

    #[test]
    fn automorphism_count_matches_all_permutations(p in poset()) {
        let brute = permutations(p.n()).into_iter().filter(|g| p.is_automorphism(g)).count();
        prop_assert_eq!(automorphism_generators(&p).unwrap().order, brute as u128);
        prop_assert_eq!(automorphism_group(&p, DEFAULT_GROUP_CAP).unwrap().order, brute as u64);
    }

    #[test]
    fn ideal_isomorphism_is_a_bijection_preserving_order(p in poset(), a in any::<prop::sample::Index>(), b in any::<prop::sample::Index>()) {
        let ideals = p.enumerate_ideals(DEFAULT_IDEAL_CAP).unwrap();
        let (i, j) = (ideals[a.index(ideals.len())], ideals[b.index(ideals.len())]);
        let brute = brute_isomorphic(&p, i, j);
        let found = ideal_isomorphism(&p, i, j).unwrap();
        prop_assert_eq!(found.is_some(), brute);
        if let Some(map) = found {
            prop_assert_eq!(map.len(), i.len());
            for &(x, y) in &map {
                for &(u, v) in &map {
                    prop_assert_eq!(p.leq(x, u), p.leq(y, v));
                }
            }
        }
    }

    #[test]
    fn serialization_round_trips(p in poset()) {
        let text = serialize_poset(&p, Some("random"));
        let (file, q) = parse_poset_file(&text).unwrap();
        prop_assert_eq!(&q, &p);
        prop_assert_eq!(serialize_poset(&q, file.name.as_deref()), text);
    }
}

#[test]
fn cyclic_input_is_rejected() {
    assert!(Poset::new(2, &[(1, 2), (2, 1)]).is_err());
    assert!(Poset::new(2, &[(1, 3)]).is_err());
}
