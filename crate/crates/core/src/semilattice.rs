//! Meet semilattices and the regularity conditions on their rank fibers.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::extension::{has_extension_property, ExtensionMode};
use crate::poset::Poset;
use crate::subset::Subset;

/// `table[x][y] = x ∧ y`, or `None` if some pair has no greatest lower bound.
pub fn meet_table(p: &Poset) -> Option<Vec<Vec<usize>>> {
    let n = p.n();
    let mut table = vec![vec![0; n]; n];
    for x in 0..n {
        for y in x..n {
            let common = p.down(x).intersection(p.down(y));
            let top = p.maximal_in(common);
            if top.len() != 1 {
                return None;
            }
            let m = top.first().unwrap();
            table[x][y] = m;
            table[y][x] = m;
        }
    }
    Some(table)
}

/// Ranks counted from 0 at the minimal elements. Every cover must raise the
/// rank by exactly one.
pub fn ranks(p: &Poset) -> Result<Vec<usize>> {
    for &(i, j) in p.covers() {
        if p.level(j) != p.level(i) + 1 {
            return Err(Error::NotGraded(format!(
                "{} covers {} but their levels are {} and {}",
                j + 1,
                i + 1,
                p.level(j),
                p.level(i)
            )));
        }
    }
    Ok(p.levels().iter().map(|&l| l - 1).collect())
}

/// The minimal common upper bounds of `a` and `b`.
pub fn join_set(p: &Poset, a: usize, b: usize) -> Subset {
    p.minimal_in(p.up(a).intersection(p.up(b)))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    /// Indices of the constant, e.g. `[r, s]`.
    pub key: Vec<usize>,
    /// 1-based elements defining the first count.
    pub first: Vec<usize>,
    pub first_count: u64,
    pub second: Vec<usize>,
    pub second_count: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Condition {
    pub name: &'static str,
    pub holds: bool,
    /// Constant value for each key whose count never varied.
    pub constants: BTreeMap<String, u64>,
    pub violation: Option<Violation>,
}

struct ConstantTracker {
    name: &'static str,
    seen: BTreeMap<Vec<usize>, (u64, Vec<usize>, bool)>,
    violation: Option<Violation>,
}

impl ConstantTracker {
    fn new(name: &'static str) -> Self {
        ConstantTracker { name, seen: BTreeMap::new(), violation: None }
    }

    fn record(&mut self, key: &[usize], count: u64, elems: &[usize]) {
        let one_based: Vec<usize> = elems.iter().map(|e| e + 1).collect();
        match self.seen.get_mut(key) {
            None => {
                self.seen.insert(key.to_vec(), (count, one_based, true));
            }
            Some((value, first, constant)) => {
                if *value != count {
                    *constant = false;
                    if self.violation.is_none() {
                        self.violation = Some(Violation {
                            key: key.to_vec(),
                            first: first.clone(),
                            first_count: *value,
                            second: one_based,
                            second_count: count,
                        });
                    }
                }
            }
        }
    }

    fn finish(self) -> Condition {
        let constants = self
            .seen
            .iter()
            .filter(|(_, (_, _, constant))| *constant)
            .map(|(k, (v, _, _))| {
                let key: Vec<String> = k.iter().map(|x| x.to_string()).collect();
                (key.join(","), *v)
            })
            .collect();
        Condition { name: self.name, holds: self.violation.is_none(), constants, violation: self.violation }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RegularityReport {
    pub is_meet_semilattice: bool,
    /// Rank fibers `X_0, ..., X_m` as 1-based element lists.
    pub fibers: Vec<Vec<usize>>,
    /// `mu`, `nu`, `pi`, then `nu_bar` and `rho`.
    pub conditions: Vec<Condition>,
    pub regular: bool,
    pub strongly_regular: bool,
}

impl RegularityReport {
    pub fn condition(&self, name: &str) -> Option<&Condition> {
        self.conditions.iter().find(|c| c.name == name)
    }
}

/// Exhaustive counts for conditions 1–3 and (r1), (r2). Condition 3 counts
/// pairs `(b, z) ∈ X_s × X_m` with `b ⪯ z` and `a ⪯ z`, keyed by the rank of
/// `a ∧ y`, exactly as stated.
pub fn regularity_check(p: &Poset) -> Result<RegularityReport> {
    let Some(meet) = meet_table(p) else {
        return Ok(RegularityReport {
            is_meet_semilattice: false,
            fibers: Vec::new(),
            conditions: Vec::new(),
            regular: false,
            strongly_regular: false,
        });
    };
    let rank = ranks(p)?;
    let top = rank.iter().copied().max().unwrap_or(0);
    let mut fibers = vec![Subset::EMPTY; top + 1];
    for (x, &r) in rank.iter().enumerate() {
        fibers[r].insert(x);
    }
    let count_in = |s: Subset, fiber: usize| s.intersection(fibers[fiber]).len() as u64;
    let ranks_range = 0..=top;

    let mut mu = ConstantTracker::new("mu");
    for y in fibers[top].iter() {
        for z in p.down(y).iter() {
            for s in ranks_range.clone() {
                let between = p.up(z).intersection(p.down(y));
                mu.record(&[rank[z], s], count_in(between, s), &[y, z]);
            }
        }
    }

    let mut nu = ConstantTracker::new("nu");
    for u in 0..p.n() {
        for r in ranks_range.clone() {
            nu.record(&[r, rank[u]], count_in(p.down(u), r), &[u]);
        }
    }

    let mut pi = ConstantTracker::new("pi");
    for a in 0..p.n() {
        for s in ranks_range.clone() {
            // independent of y, which only selects the key j
            let count: u64 = fibers[top]
                .iter()
                .filter(|&z| p.leq(a, z))
                .map(|z| count_in(p.down(z), s))
                .sum();
            for y in fibers[top].iter() {
                let j = rank[meet[a][y]];
                pi.record(&[j, rank[a], s], count, &[a, y]);
            }
        }
    }

    let mut nu_bar = ConstantTracker::new("nu_bar");
    for z in 0..p.n() {
        for s in ranks_range.clone() {
            nu_bar.record(&[rank[z], s], count_in(p.up(z), s), &[z]);
        }
    }

    let mut rho = ConstantTracker::new("rho");
    for r in ranks_range.clone() {
        let fiber: Vec<usize> = fibers[r].iter().collect();
        for s in ranks_range.clone() {
            for (ia, &a) in fiber.iter().enumerate() {
                for &b in &fiber[ia + 1..] {
                    let join = join_set(p, a, b);
                    if join.is_empty() {
                        continue;
                    }
                    let above = join.iter().fold(p.ground(), |acc, x| acc.intersection(p.up(x)));
                    rho.record(&[r, s], count_in(above, s), &[a, b]);
                }
            }
        }
    }

    let conditions: Vec<Condition> = [mu, nu, pi, nu_bar, rho].into_iter().map(ConstantTracker::finish).collect();
    let regular = conditions[..3].iter().all(|c| c.holds);
    let strongly_regular = regular && conditions[3..].iter().all(|c| c.holds);
    Ok(RegularityReport {
        is_meet_semilattice: true,
        fibers: fibers.iter().map(|f| f.to_one_based()).collect(),
        conditions,
        regular,
        strongly_regular,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProbeRow {
    pub name: String,
    pub strongly_regular: Option<bool>,
    pub ie: Option<bool>,
    /// Strongly regular but without the extension property.
    pub candidate: bool,
    pub note: Option<String>,
}

/// Strong regularity against the ideal extension property, one row per poset.
/// Rows that hit a cap or are not graded are kept with a note.
pub fn conjecture_probe(corpus: &[(String, Poset)], cap: u64) -> Vec<ProbeRow> {
    corpus
        .iter()
        .map(|(name, p)| {
            let mut notes = Vec::new();
            let strongly_regular = match regularity_check(p) {
                Ok(r) => Some(r.strongly_regular),
                Err(e) => {
                    notes.push(e.to_string());
                    None
                }
            };
            let ie = match has_extension_property(p, ExtensionMode::Ie, cap) {
                Ok(r) => Some(r.holds),
                Err(e) => {
                    notes.push(e.to_string());
                    None
                }
            };
            ProbeRow {
                name: name.clone(),
                strongly_regular,
                ie,
                candidate: strongly_regular == Some(true) && ie == Some(false),
                note: (!notes.is_empty()).then(|| notes.join("; ")),
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn meets() {
        let chain = Poset::chain(4).unwrap();
        let t = meet_table(&chain).unwrap();
        assert_eq!(t[1][3], 1);
        assert!(meet_table(&Poset::antichain(2).unwrap()).is_none());
        let v = Poset::new(3, &[(1, 2), (1, 3)]).unwrap();
        assert_eq!(meet_table(&v).unwrap()[1][2], 0);
    }

    #[test]
    fn chain_is_strongly_regular() {
        let r = regularity_check(&Poset::chain(4).unwrap()).unwrap();
        assert!(r.regular && r.strongly_regular);
        assert_eq!(r.fibers.len(), 4);
    }

    #[test]
    fn ungraded_is_rejected() {
        // 1 < 2 < 3 < 4 alongside 1 < 5 < 4: 5 sits on level 2 but is covered by 4 on level 4
        let bad = Poset::new(5, &[(1, 2), (2, 3), (3, 4), (1, 5), (5, 4)]).unwrap();
        assert!(matches!(regularity_check(&bad), Err(Error::NotGraded(_))));
    }
}
