//! Order-isomorphism search between subsets of posets, and everything built
//! on it: automorphism groups, ideal isomorphisms and self-duality.

use std::collections::{BTreeSet, HashSet};
use std::ops::ControlFlow;

use crate::error::{Error, Result};
use crate::poset::{apply_perm, compose, identity, Perm, Poset};
use crate::subset::Subset;

pub const DEFAULT_NODE_CAP: u64 = 1_000_000;
pub const DEFAULT_GROUP_CAP: u64 = 100_000;

/// Per-element invariant inside an induced subposet: (level, co-level,
/// down-set size, up-set size, color). Isomorphisms preserve all five.
type Signature = (usize, usize, usize, usize, u32);

fn signatures(p: &Poset, s: Subset, color: &dyn Fn(usize) -> u32) -> Vec<Option<Signature>> {
    let mut sig = vec![None; p.n()];
    let mut order: Vec<usize> = s.iter().collect();
    order.sort_by_key(|&i| p.down(i).intersection(s).len());
    let mut lvl = vec![0; p.n()];
    for &j in &order {
        lvl[j] = 1 + p.down(j).intersection(s).without(j).iter().map(|i| lvl[i]).max().unwrap_or(0);
    }
    let mut colvl = vec![0; p.n()];
    for &j in order.iter().rev() {
        colvl[j] = 1 + p.up(j).intersection(s).without(j).iter().map(|i| colvl[i]).max().unwrap_or(0);
    }
    for &i in &order {
        sig[i] = Some((
            lvl[i],
            colvl[i],
            p.down(i).intersection(s).len(),
            p.up(i).intersection(s).len(),
            color(i),
        ));
    }
    sig
}

/// Backtracking search for bijections `src_set → dst_set` that preserve and
/// reflect the order, respect colors, and honour pinned images.
pub struct Matcher<'a> {
    src: &'a Poset,
    dst: &'a Poset,
    order: Vec<usize>,
    candidates: Vec<Vec<usize>>,
    node_cap: u64,
    nodes: u64,
}

impl<'a> Matcher<'a> {
    pub fn new(src: &'a Poset, src_set: Subset, dst: &'a Poset, dst_set: Subset) -> Self {
        Matcher::colored(src, src_set, &|_| 0, dst, dst_set, &|_| 0)
    }

    pub fn colored(
        src: &'a Poset,
        src_set: Subset,
        src_color: &dyn Fn(usize) -> u32,
        dst: &'a Poset,
        dst_set: Subset,
        dst_color: &dyn Fn(usize) -> u32,
    ) -> Self {
        let ssig = signatures(src, src_set, src_color);
        let dsig = signatures(dst, dst_set, dst_color);
        let mut candidates = vec![Vec::new(); src.n()];
        let mut feasible = src_set.len() == dst_set.len();
        for x in src_set.iter() {
            candidates[x] = dst_set.iter().filter(|&y| dsig[y] == ssig[x]).collect();
            feasible &= !candidates[x].is_empty();
        }
        // Assign bottom-up so comparabilities with earlier choices prune early,
        // most constrained first within a level.
        let mut order: Vec<usize> = src_set.iter().collect();
        order.sort_by_key(|&x| (ssig[x].map(|s| s.0), candidates[x].len(), x));
        if !feasible {
            order.clear();
            candidates.iter_mut().for_each(Vec::clear);
            // an unreachable candidate list makes every search fail at once
            if let Some(x) = src_set.first() {
                order.push(x);
            }
        }
        Matcher { src, dst, order, candidates, node_cap: DEFAULT_NODE_CAP, nodes: 0 }
    }

    pub fn with_node_cap(mut self, cap: u64) -> Self {
        self.node_cap = cap;
        self
    }

    /// Restricts `x` to the single image `y`.
    pub fn pin(&mut self, x: usize, y: usize) {
        let keep = self.candidates[x].contains(&y);
        self.candidates[x].clear();
        if keep {
            self.candidates[x].push(y);
        }
    }

    pub fn nodes(&self) -> u64 {
        self.nodes
    }

    /// Visits every isomorphism as a map indexed by source element
    /// (`usize::MAX` outside the source set).
    pub fn for_each(&mut self, f: &mut dyn FnMut(&[usize]) -> ControlFlow<()>) -> Result<()> {
        let mut map = vec![usize::MAX; self.src.n()];
        let mut used = Subset::EMPTY;
        self.rec(0, &mut map, &mut used, f).map(|_| ())
    }

    pub fn first(&mut self) -> Result<Option<Vec<usize>>> {
        let mut found = None;
        self.for_each(&mut |m| {
            found = Some(m.to_vec());
            ControlFlow::Break(())
        })?;
        Ok(found)
    }

    fn rec(
        &mut self,
        k: usize,
        map: &mut Vec<usize>,
        used: &mut Subset,
        f: &mut dyn FnMut(&[usize]) -> ControlFlow<()>,
    ) -> Result<ControlFlow<()>> {
        if k == self.order.len() {
            return Ok(f(map));
        }
        let x = self.order[k];
        for ci in 0..self.candidates[x].len() {
            let y = self.candidates[x][ci];
            if used.contains(y) {
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.node_cap {
                return Err(Error::CapExceeded { what: "isomorphism search nodes", cap: self.node_cap });
            }
            let consistent = self.order[..k].iter().all(|&x2| {
                let y2 = map[x2];
                self.src.leq(x2, x) == self.dst.leq(y2, y) && self.src.leq(x, x2) == self.dst.leq(y, y2)
            });
            if !consistent {
                continue;
            }
            map[x] = y;
            used.insert(y);
            let flow = self.rec(k + 1, map, used, f)?;
            map[x] = usize::MAX;
            *used = used.without(y);
            if flow.is_break() {
                return Ok(flow);
            }
        }
        Ok(ControlFlow::Continue(()))
    }
}

/// A complete list of automorphisms, sorted lexicographically by image list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AutomorphismGroup {
    pub elements: Vec<Perm>,
    pub order: u64,
}

/// Generators of Aut(P) from a stabilizer chain, plus the group order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AutGenerators {
    pub generators: Vec<Perm>,
    pub order: u128,
}

fn orbit_of(point: usize, gens: &[&Perm]) -> Subset {
    let mut orbit = Subset::singleton(point);
    let mut stack = vec![point];
    while let Some(v) = stack.pop() {
        for g in gens {
            let w = g[v];
            if !orbit.contains(w) {
                orbit.insert(w);
                stack.push(w);
            }
        }
    }
    orbit
}

pub fn automorphism_generators(p: &Poset) -> Result<AutGenerators> {
    let n = p.n();
    let full = p.ground();
    // generator list with the base level at which each was found
    let mut gens: Vec<(usize, Perm)> = Vec::new();
    let mut order: u128 = 1;
    for k in 0..n {
        let stab: Vec<&Perm> = gens.iter().filter(|g| g.0 >= k).map(|g| &g.1).collect();
        let mut orbit = orbit_of(k, &stab);
        let probe = Matcher::new(p, full, p, full);
        let cands: Vec<usize> = probe.candidates[k].clone();
        for y in cands {
            if orbit.contains(y) {
                continue;
            }
            let mut m = Matcher::new(p, full, p, full);
            for b in 0..k {
                m.pin(b, b);
            }
            m.pin(k, y);
            if let Some(g) = m.first()? {
                gens.push((k, g));
                let stab: Vec<&Perm> = gens.iter().filter(|g| g.0 >= k).map(|g| &g.1).collect();
                orbit = orbit_of(k, &stab);
            }
        }
        order *= orbit.len() as u128;
    }
    Ok(AutGenerators { generators: gens.into_iter().map(|g| g.1).collect(), order })
}

pub fn automorphism_group(p: &Poset, group_cap: u64) -> Result<AutomorphismGroup> {
    let gens = automorphism_generators(p)?;
    if gens.order > group_cap as u128 {
        return Err(Error::CapExceeded { what: "automorphism group order", cap: group_cap });
    }
    let full = p.ground();
    let mut m = Matcher::new(p, full, p, full);
    let mut elements = Vec::new();
    m.for_each(&mut |map| {
        elements.push(map.to_vec());
        ControlFlow::Continue(())
    })?;
    elements.sort();
    debug_assert_eq!(elements.len() as u128, gens.order);
    Ok(AutomorphismGroup { order: elements.len() as u64, elements })
}

/// An order isomorphism between two subsets of `p`, as sorted `(x, y)` pairs.
pub fn ideal_isomorphism(p: &Poset, i: Subset, j: Subset) -> Result<Option<Vec<(usize, usize)>>> {
    if i == j {
        return Ok(Some(i.iter().map(|x| (x, x)).collect()));
    }
    if i.len() != j.len() {
        return Ok(None);
    }
    let found = Matcher::new(p, i, p, j).first()?;
    Ok(found.map(|m| i.iter().map(|x| (x, m[x])).collect()))
}

/// An automorphism of `p` with `φ(i) = j`, if any.
pub fn automorphism_mapping(p: &Poset, i: Subset, j: Subset) -> Result<Option<Perm>> {
    if i.len() != j.len() {
        return Ok(None);
    }
    let full = p.ground();
    let mut m = Matcher::colored(p, full, &|x| i.contains(x) as u32, p, full, &|y| j.contains(y) as u32);
    m.first()
}

/// A permutation `π` with `x ⪯ y ⟺ π(y) ⪯ π(x)`, if one exists.
pub fn is_self_dual(p: &Poset) -> Result<Option<Perm>> {
    let d = p.dual();
    let full = p.ground();
    Matcher::new(p, full, &d, full).first()
}

/// Closure of a generating set under composition, capped.
pub fn group_closure(n: usize, gens: &[Perm], cap: u64) -> Result<BTreeSet<Perm>> {
    let mut seen: HashSet<Perm> = HashSet::new();
    let id = identity(n);
    seen.insert(id.clone());
    let mut stack = vec![id];
    while let Some(g) = stack.pop() {
        for h in gens {
            let c = compose(h, &g);
            if seen.insert(c.clone()) {
                if seen.len() as u64 > cap {
                    return Err(Error::CapExceeded { what: "group closure", cap });
                }
                stack.push(c);
            }
        }
    }
    Ok(seen.into_iter().collect())
}

/// Orbit of a subset under the group generated by `gens`.
pub fn subset_orbit(s: Subset, gens: &[Perm]) -> BTreeSet<Subset> {
    let mut orbit = BTreeSet::from([s]);
    let mut stack = vec![s];
    while let Some(t) = stack.pop() {
        for g in gens {
            let u = apply_perm(g, t);
            if orbit.insert(u) {
                stack.push(u);
            }
        }
    }
    orbit
}

/// Verifies `map` (pairs) is an order isomorphism from `i` onto `j`.
pub fn check_isomorphism(p: &Poset, i: Subset, j: Subset, map: &[(usize, usize)]) -> Result<()> {
    let bad = |msg: String| Err(Error::NotAnIsomorphism(msg));
    let dom: Subset = map.iter().map(|m| m.0).collect();
    let img: Subset = map.iter().map(|m| m.1).collect();
    if dom != i || img != j || map.len() != i.len() {
        return bad(format!("map is not a bijection from {i} onto {j}"));
    }
    for &(a, fa) in map {
        for &(b, fb) in map {
            if p.leq(a, b) != p.leq(fa, fb) {
                return bad(format!("order between {} and {} not preserved", a + 1, b + 1));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(items: &[usize]) -> Subset {
        Subset::from_one_based(items)
    }

    fn factorial(n: u64) -> u64 {
        (1..=n).product()
    }

    #[test]
    fn antichain_group_is_symmetric() {
        for n in 1..=5 {
            let p = Poset::antichain(n).unwrap();
            let g = automorphism_group(&p, 1000).unwrap();
            assert_eq!(g.order, factorial(n as u64));
            assert!(g.elements.iter().all(|e| p.is_automorphism(e)));
        }
        let big = Poset::antichain(14).unwrap();
        assert_eq!(automorphism_generators(&big).unwrap().order, factorial(14) as u128);
    }

    #[test]
    fn chains_and_single_relation_are_rigid() {
        let chain = Poset::chain(4).unwrap();
        assert_eq!(automorphism_group(&chain, 10).unwrap().elements, vec![identity(4)]);
        let p = Poset::new(3, &[(1, 3)]).unwrap();
        assert_eq!(automorphism_group(&p, 10).unwrap().order, 1);
    }

    #[test]
    fn group_cap_is_enforced() {
        let p = Poset::antichain(6).unwrap();
        assert!(matches!(automorphism_group(&p, 100), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn ideal_isomorphism_examples() {
        let p = Poset::new(3, &[(1, 3)]).unwrap();
        assert_eq!(ideal_isomorphism(&p, s(&[1]), s(&[2])).unwrap(), Some(vec![(0, 1)]));
        assert_eq!(ideal_isomorphism(&p, s(&[1, 3]), s(&[1, 2])).unwrap(), None);
        assert_eq!(ideal_isomorphism(&p, s(&[1, 3]), s(&[1, 3])).unwrap(), Some(vec![(0, 0), (2, 2)]));
        assert_eq!(automorphism_mapping(&p, s(&[1]), s(&[2])).unwrap(), None);
    }

    #[test]
    fn self_duality_examples() {
        let n_poset = Poset::new(4, &[(1, 3), (2, 3), (2, 4)]).unwrap();
        let pi = is_self_dual(&n_poset).unwrap().expect("N is self-dual");
        let d = n_poset.dual();
        for x in 0..4 {
            for y in 0..4 {
                assert_eq!(n_poset.leq(x, y), d.leq(pi[x], pi[y]));
            }
        }
        let v = Poset::new(3, &[(1, 2), (1, 3)]).unwrap();
        assert_eq!(is_self_dual(&v).unwrap(), None);
    }

    #[test]
    fn closure_matches_enumeration() {
        let p = Poset::new(6, &[(1, 2), (1, 3), (4, 5), (4, 6)]).unwrap();
        let gens = automorphism_generators(&p).unwrap();
        let closed = group_closure(6, &gens.generators, 1000).unwrap();
        let all = automorphism_group(&p, 1000).unwrap();
        assert_eq!(closed.into_iter().collect::<Vec<_>>(), all.elements);
        assert_eq!(gens.order, 8);
    }
}
