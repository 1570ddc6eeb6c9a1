//! Named small posets used as fixtures by the test suites and the CLI.

use crate::error::Result;
use crate::nrt::nrt_poset;
use crate::poset::Poset;
use crate::tree::{build_tree, tree_size};

/// Ordinal sum of antichains of the given sizes, lowest layer first.
pub fn hierarchical(layers: &[usize]) -> Result<Poset> {
    let mut rel = Vec::new();
    let mut start = 1;
    for w in layers.windows(2) {
        let (lo, hi) = (w[0], w[1]);
        for i in start..start + lo {
            for j in start + lo..start + lo + hi {
                rel.push((i, j));
            }
        }
        start += lo;
    }
    Poset::new(layers.iter().sum(), &rel)
}

/// `1 ≺ 2`, `1 ≺ 3`.
pub fn v_poset() -> Poset {
    Poset::new(3, &[(1, 2), (1, 3)]).unwrap()
}

/// `1 ≺ 3`, `2 ≺ 3`.
pub fn lambda_poset() -> Poset {
    Poset::new(3, &[(1, 3), (2, 3)]).unwrap()
}

/// `1 ≺ 3`, `2 ≺ 3`, `2 ≺ 4`.
pub fn n_poset() -> Poset {
    Poset::new(4, &[(1, 3), (2, 3), (2, 4)]).unwrap()
}

/// A single relation `1 ≺ 3` on three points.
pub fn single_relation() -> Poset {
    Poset::new(3, &[(1, 3)]).unwrap()
}

/// Ten-element regular meet semilattice without the extension property.
pub fn counterexample_lattice() -> Poset {
    Poset::new(
        10,
        &[
            (1, 2),
            (1, 3),
            (1, 4),
            (1, 5),
            (2, 6),
            (2, 9),
            (3, 6),
            (3, 7),
            (4, 7),
            (4, 8),
            (5, 8),
            (5, 9),
            (6, 10),
            (7, 10),
            (8, 10),
            (9, 10),
        ],
    )
    .unwrap()
}

/// Every degree sequence whose level-regular tree has at most `max_vertices`
/// vertices, shortest sequences first.
pub fn tree_degree_sequences(max_vertices: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut frontier: Vec<Vec<usize>> = vec![Vec::new()];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for seq in &frontier {
            for d in 1.. {
                let mut s = seq.clone();
                s.push(d);
                if tree_size(&s) > max_vertices {
                    break;
                }
                next.push(s);
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

/// Small posets for the scheme, code and isometry suites.
pub fn scheme_corpus() -> Vec<(String, Poset)> {
    let mut out = Vec::new();
    for n in 1..=4 {
        out.push((format!("antichain_{n}"), Poset::antichain(n).unwrap()));
        out.push((format!("chain_{n}"), Poset::chain(n).unwrap()));
    }
    out.push(("v".into(), v_poset()));
    out.push(("lambda".into(), lambda_poset()));
    out.push(("n".into(), n_poset()));
    out.push(("single_relation".into(), single_relation()));
    out.push(("nrt_2_2".into(), nrt_poset(2, 2).unwrap()));
    out.push(("hierarchical_2_2".into(), hierarchical(&[2, 2]).unwrap()));
    out.push(("hierarchical_1_2_1".into(), hierarchical(&[1, 2, 1]).unwrap()));
    out.push(("tree_2_2".into(), build_tree(&[2, 2]).unwrap().poset().clone()));
    out.push(("tree_3".into(), build_tree(&[3]).unwrap().poset().clone()));
    out.push(("chain_5".into(), Poset::chain(5).unwrap()));
    out.push(("antichain_5".into(), Poset::antichain(5).unwrap()));
    out.push(("nrt_2_3".into(), nrt_poset(2, 3).unwrap()));
    out.push(("nrt_3_2".into(), nrt_poset(3, 2).unwrap()));
    out.push(("hierarchical_2_3".into(), hierarchical(&[2, 3]).unwrap()));
    out
}

/// Looks up a fixture by name: the corpus names above plus `lattice`,
/// `chain_<n>`, `antichain_<n>`, `nrt_<m>_<r>` and `tree_<d0>_<d1>...`.
pub fn named(name: &str) -> Option<Poset> {
    if let Some((_, p)) = scheme_corpus().into_iter().find(|(n, _)| n == name) {
        return Some(p);
    }
    let parts: Vec<&str> = name.split('_').collect();
    let nums: Option<Vec<usize>> = parts[1..].iter().map(|s| s.parse().ok()).collect();
    match (parts[0], nums?.as_slice()) {
        ("lattice", []) => Some(counterexample_lattice()),
        ("chain", [n]) => Poset::chain(*n).ok(),
        ("antichain", [n]) => Poset::antichain(*n).ok(),
        ("nrt", [m, r]) => nrt_poset(*m, *r).ok(),
        ("tree", ds) if !ds.is_empty() => build_tree(ds).ok().map(|t| t.poset().clone()),
        ("hierarchical", hs) if !hs.is_empty() => hierarchical(hs).ok(),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hierarchical_layers() {
        let h = hierarchical(&[2, 1]).unwrap();
        assert_eq!(h, lambda_poset());
        assert_eq!(hierarchical(&[1, 2]).unwrap(), v_poset());
    }

    #[test]
    fn tree_sequences() {
        let seqs = tree_degree_sequences(7);
        assert!(seqs.contains(&vec![2, 2]));
        assert!(seqs.contains(&vec![6]));
        assert!(!seqs.contains(&vec![7]));
        assert!(seqs.iter().all(|s| tree_size(s) <= 7));
    }

    #[test]
    fn names_resolve() {
        assert_eq!(named("chain_3"), Poset::chain(3).ok());
        assert_eq!(named("lattice").unwrap().n(), 10);
        assert_eq!(named("tree_2_2").unwrap().n(), 7);
        assert!(named("nope").is_none());
    }
}
