//! Ideal isomorphism classes and the ideal/filter extension properties.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::iso::{automorphism_generators, automorphism_mapping, subset_orbit, Matcher};
use crate::poset::Poset;
use crate::subset::Subset;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ExtensionMode {
    /// Isomorphisms between ideals.
    Ie,
    /// Isomorphisms between filters.
    Fe,
}

impl fmt::Display for ExtensionMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ExtensionMode::Ie => "IE",
            ExtensionMode::Fe => "FE",
        })
    }
}

impl FromStr for ExtensionMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "ie" => Ok(ExtensionMode::Ie),
            "fe" => Ok(ExtensionMode::Fe),
            other => Err(Error::Usage(format!("mode must be ie or fe, got `{other}`"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionReport {
    pub mode: ExtensionMode,
    pub holds: bool,
    /// Isomorphic ideals (filters in FE mode) that no automorphism relates.
    pub witness: Option<(Subset, Subset)>,
    pub ideal_count: usize,
    pub class_count: usize,
    pub orbit_count: usize,
}

/// The ideals of a poset grouped into isomorphism classes.
#[derive(Clone, Debug)]
pub struct IdealClasses {
    /// Every ideal, in enumeration order.
    pub ideals: Vec<Subset>,
    /// Class id of each ideal, parallel to `ideals`.
    pub class_of: Vec<usize>,
    /// Least member of each class; class ids follow this order.
    pub reps: Vec<Subset>,
}

impl IdealClasses {
    pub fn class_of_ideal(&self, ideal: Subset) -> Option<usize> {
        self.ideals.binary_search(&ideal).ok().map(|k| self.class_of[k])
    }

    pub fn members(&self, class: usize) -> impl Iterator<Item = Subset> + '_ {
        self.ideals
            .iter()
            .zip(&self.class_of)
            .filter(move |(_, &c)| c == class)
            .map(|(&i, _)| i)
    }
}

/// Isomorphism-invariant fingerprint of the subposet induced on `s`.
fn shape_key(p: &Poset, s: Subset) -> Vec<(usize, usize, usize)> {
    let mut lvl = vec![0usize; p.n()];
    let mut order: Vec<usize> = s.iter().collect();
    order.sort_by_key(|&i| p.down(i).intersection(s).len());
    for &j in &order {
        lvl[j] = 1 + p.down(j).intersection(s).without(j).iter().map(|i| lvl[i]).max().unwrap_or(0);
    }
    let mut key: Vec<_> = s
        .iter()
        .map(|i| (lvl[i], p.down(i).intersection(s).len(), p.up(i).intersection(s).len()))
        .collect();
    key.sort_unstable();
    key
}

pub fn ideal_classes(p: &Poset, cap: u64) -> Result<IdealClasses> {
    let ideals = p.enumerate_ideals(cap)?;
    let mut buckets: HashMap<Vec<(usize, usize, usize)>, Vec<usize>> = HashMap::new();
    let mut reps: Vec<Subset> = Vec::new();
    let mut class_of = Vec::with_capacity(ideals.len());
    for &ideal in &ideals {
        let bucket = buckets.entry(shape_key(p, ideal)).or_default();
        let mut found = None;
        for &c in bucket.iter() {
            if Matcher::new(p, ideal, p, reps[c]).first()?.is_some() {
                found = Some(c);
                break;
            }
        }
        let c = found.unwrap_or_else(|| {
            reps.push(ideal);
            bucket.push(reps.len() - 1);
            reps.len() - 1
        });
        class_of.push(c);
    }
    Ok(IdealClasses { ideals, class_of, reps })
}

fn working_poset(p: &Poset, mode: ExtensionMode) -> Poset {
    match mode {
        ExtensionMode::Ie => p.clone(),
        ExtensionMode::Fe => p.dual(),
    }
}

/// Decides the property by comparing isomorphism classes with Aut-orbits.
/// A failure reports the least witness pair: the smallest ideal whose class
/// splits into several orbits, paired with the smallest class member outside
/// its orbit.
pub fn has_extension_property(p: &Poset, mode: ExtensionMode, cap: u64) -> Result<ExtensionReport> {
    let q = working_poset(p, mode);
    let classes = ideal_classes(&q, cap)?;
    let gens = automorphism_generators(&q)?.generators;
    let mut seen = vec![false; classes.ideals.len()];
    let mut orbit_count = 0;
    let mut witness: Option<(Subset, Subset)> = None;
    for k in 0..classes.ideals.len() {
        if seen[k] {
            continue;
        }
        orbit_count += 1;
        let start = classes.ideals[k];
        let orbit = subset_orbit(start, &gens);
        for i in &orbit {
            let idx = classes.ideals.binary_search(i).expect("automorphisms map ideals to ideals");
            seen[idx] = true;
        }
        let class = classes.class_of[k];
        if classes.reps[class] == start && witness.is_none() {
            if let Some(j) = classes.members(class).find(|j| !orbit.contains(j)) {
                witness = Some((start, j));
            }
        }
    }
    Ok(ExtensionReport {
        mode,
        holds: witness.is_none(),
        witness,
        ideal_count: classes.ideals.len(),
        class_count: classes.reps.len(),
        orbit_count,
    })
}

/// True when `i` and `j` are isomorphic ideals (filters in FE mode) and no
/// automorphism carries `i` onto `j`.
pub fn is_extension_witness(p: &Poset, mode: ExtensionMode, i: Subset, j: Subset) -> Result<bool> {
    let q = working_poset(p, mode);
    for s in [i, j] {
        if !q.is_ideal(s) {
            let what = if mode == ExtensionMode::Ie { "ideal" } else { "filter" };
            return Err(Error::NotAnIdeal(format!("{s} (as {what})")));
        }
    }
    let isomorphic = Matcher::new(&q, i, &q, j).first()?.is_some();
    Ok(isomorphic && automorphism_mapping(&q, i, j)?.is_none())
}
