//! Finite posets on `{0, ..., n-1}` with precomputed closure, covers and levels.

use crate::error::{Error, Result};
use crate::subset::{Subset, MAX_ELEMENTS};

/// A permutation of the ground set, `perm[i]` is the image of `i`.
pub type Perm = Vec<usize>;

pub const DEFAULT_IDEAL_CAP: u64 = 100_000;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poset {
    n: usize,
    down: Vec<Subset>,
    up: Vec<Subset>,
    covers: Vec<(usize, usize)>,
    level: Vec<usize>,
}

impl Poset {
    /// Builds the poset generated by `relations`, given as 1-based pairs
    /// `(i, j)` meaning `i ≺ j`. Redundant pairs are allowed; the stored
    /// covers are the transitive reduction.
    pub fn new(n: usize, relations: &[(usize, usize)]) -> Result<Self> {
        if n > MAX_ELEMENTS {
            return Err(Error::SizeOverflow(n));
        }
        let mut down: Vec<Subset> = (0..n).map(Subset::singleton).collect();
        for (index, &(i, j)) in relations.iter().enumerate() {
            for v in [i, j] {
                if v == 0 || v > n {
                    return Err(Error::Range { value: v, n });
                }
            }
            let (a, b) = (i - 1, j - 1);
            if down[a].contains(b) {
                return Err(Error::Cycle { index: index + 1, i, j });
            }
            let below = down[a];
            for x in 0..n {
                if down[x].contains(b) {
                    down[x] = down[x].union(below);
                }
            }
        }
        Ok(Poset::from_down_sets(down))
    }

    /// `down[i]` must be the reflexive down-closure of `i` in a partial order.
    pub(crate) fn from_down_sets(down: Vec<Subset>) -> Self {
        let n = down.len();
        let mut up = vec![Subset::EMPTY; n];
        for (j, d) in down.iter().enumerate() {
            for i in d.iter() {
                up[i].insert(j);
            }
        }
        let mut covers = Vec::new();
        for j in 0..n {
            let strict = down[j].without(j);
            for i in strict.iter() {
                // i is covered by j when nothing strictly between them
                if up[i].without(i).intersection(strict).is_empty() {
                    covers.push((i, j));
                }
            }
        }
        covers.sort_unstable();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&i| down[i].len());
        let mut level = vec![1; n];
        for &j in &order {
            level[j] = 1 + down[j].without(j).iter().map(|i| level[i]).max().unwrap_or(0);
        }
        Poset { n, down, up, covers, level }
    }

    pub fn antichain(n: usize) -> Result<Self> {
        Poset::new(n, &[])
    }

    /// `1 ≺ 2 ≺ ... ≺ n`.
    pub fn chain(n: usize) -> Result<Self> {
        let rel: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
        Poset::new(n, &rel)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ground(&self) -> Subset {
        Subset::full(self.n)
    }

    #[inline]
    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.down[j].contains(i)
    }

    #[inline]
    pub fn lt(&self, i: usize, j: usize) -> bool {
        i != j && self.leq(i, j)
    }

    /// `{j : j ⪯ i}`.
    pub fn down(&self, i: usize) -> Subset {
        self.down[i]
    }

    /// `{j : i ⪯ j}`.
    pub fn up(&self, i: usize) -> Subset {
        self.up[i]
    }

    /// Cover pairs `(i, j)`, `i` covered by `j`, 0-based and sorted.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn covers_one_based(&self) -> Vec<(usize, usize)> {
        self.covers.iter().map(|&(i, j)| (i + 1, j + 1)).collect()
    }

    pub fn lower_covers(&self, j: usize) -> Subset {
        self.covers.iter().filter(|c| c.1 == j).map(|c| c.0).collect()
    }

    pub fn upper_covers(&self, i: usize) -> Subset {
        self.covers.iter().filter(|c| c.0 == i).map(|c| c.1).collect()
    }

    /// Number of elements in a longest chain ending at `i`.
    pub fn level(&self, i: usize) -> usize {
        self.level[i]
    }

    pub fn levels(&self) -> &[usize] {
        &self.level
    }

    pub fn height(&self) -> usize {
        self.level.iter().copied().max().unwrap_or(0)
    }

    /// Number of strict relations `i ≺ j`.
    pub fn strict_pairs(&self) -> usize {
        self.down.iter().map(|d| d.len() - 1).sum()
    }

    pub fn check_subset(&self, s: Subset) -> Result<()> {
        match s.difference(self.ground()).first() {
            Some(v) => Err(Error::Range { value: v + 1, n: self.n }),
            None => Ok(()),
        }
    }

    /// Smallest ideal containing `s`.
    pub fn ideal_of(&self, s: Subset) -> Subset {
        s.iter().fold(Subset::EMPTY, |acc, i| acc.union(self.down[i]))
    }

    /// Smallest filter containing `s`.
    pub fn filter_of(&self, s: Subset) -> Subset {
        s.iter().fold(Subset::EMPTY, |acc, i| acc.union(self.up[i]))
    }

    pub fn is_ideal(&self, s: Subset) -> bool {
        s.is_subset(self.ground()) && self.ideal_of(s) == s
    }

    pub fn is_filter(&self, s: Subset) -> bool {
        s.is_subset(self.ground()) && self.filter_of(s) == s
    }

    /// Elements of `s` with no strict successor in `s`.
    pub fn maximal_in(&self, s: Subset) -> Subset {
        s.iter().filter(|&i| self.up[i].intersection(s) == Subset::singleton(i)).collect()
    }

    /// Elements of `s` with no strict predecessor in `s`.
    pub fn minimal_in(&self, s: Subset) -> Subset {
        s.iter().filter(|&i| self.down[i].intersection(s) == Subset::singleton(i)).collect()
    }

    /// `M(I)` for an ideal `I`.
    pub fn maximal_elements(&self, ideal: Subset) -> Result<Subset> {
        if !self.is_ideal(ideal) {
            return Err(Error::NotAnIdeal(ideal.to_string()));
        }
        Ok(self.maximal_in(ideal))
    }

    /// All ideals, sorted by size and then by sorted element list.
    pub fn enumerate_ideals(&self, cap: u64) -> Result<Vec<Subset>> {
        let mut order: Vec<usize> = (0..self.n).collect();
        order.sort_by_key(|&i| (self.down[i].len(), i));
        let mut out = Vec::new();
        self.ideal_rec(&order, 0, Subset::EMPTY, cap, &mut out)?;
        out.sort_unstable();
        Ok(out)
    }

    fn ideal_rec(&self, order: &[usize], k: usize, cur: Subset, cap: u64, out: &mut Vec<Subset>) -> Result<()> {
        if k == order.len() {
            if out.len() as u64 >= cap {
                return Err(Error::CapExceeded { what: "ideal enumeration", cap });
            }
            out.push(cur);
            return Ok(());
        }
        let x = order[k];
        self.ideal_rec(order, k + 1, cur, cap, out)?;
        if self.down[x].without(x).is_subset(cur) {
            self.ideal_rec(order, k + 1, cur.with(x), cap, out)?;
        }
        Ok(())
    }

    /// All filters, in the same order convention as ideals.
    pub fn enumerate_filters(&self, cap: u64) -> Result<Vec<Subset>> {
        self.dual().enumerate_ideals(cap)
    }

    /// Same ground set, every relation reversed.
    pub fn dual(&self) -> Poset {
        Poset::from_down_sets(self.up.clone())
    }

    /// Order-preserving-and-reflecting check for a permutation.
    pub fn is_automorphism(&self, perm: &[usize]) -> bool {
        perm.len() == self.n
            && is_permutation(perm)
            && (0..self.n).all(|j| apply_perm(perm, self.down[j]) == self.down[perm[j]])
    }

    /// Subposet induced on `s`, relabelled `0..|s|` in increasing order.
    pub fn induced(&self, s: Subset) -> Poset {
        let elems: Vec<usize> = s.iter().collect();
        let down = elems
            .iter()
            .map(|&j| {
                elems
                    .iter()
                    .enumerate()
                    .filter(|&(_, &i)| self.leq(i, j))
                    .map(|(k, _)| k)
                    .collect()
            })
            .collect();
        Poset::from_down_sets(down)
    }
}

impl std::fmt::Debug for Poset {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Poset(n={}, covers={:?})", self.n, self.covers_one_based())
    }
}

pub fn is_permutation(perm: &[usize]) -> bool {
    let mut seen = vec![false; perm.len()];
    perm.iter().all(|&v| v < perm.len() && !std::mem::replace(&mut seen[v], true))
}

pub fn apply_perm(perm: &[usize], s: Subset) -> Subset {
    s.iter().map(|i| perm[i]).collect()
}

pub fn compose(outer: &[usize], inner: &[usize]) -> Perm {
    inner.iter().map(|&i| outer[i]).collect()
}

pub fn invert(perm: &[usize]) -> Perm {
    let mut inv = vec![0; perm.len()];
    for (i, &v) in perm.iter().enumerate() {
        inv[v] = i;
    }
    inv
}

pub fn identity(n: usize) -> Perm {
    (0..n).collect()
}

/// 1-based image list, `[φ(1), ..., φ(n)]`.
pub fn perm_one_based(perm: &[usize]) -> Vec<usize> {
    perm.iter().map(|v| v + 1).collect()
}
