//! Translation association schemes on `F_p^n` whose classes are the orbits
//! of the isometry group, with exact eigenmatrices.

use std::collections::HashMap;

use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};
use crate::extension::{has_extension_property, ExtensionMode};
use crate::iso::{automorphism_generators, is_self_dual, subset_orbit, DEFAULT_NODE_CAP};
use crate::orbits::{orbit_partition, OrbitPartition};
use crate::poset::Poset;
use crate::space::Space;
use crate::subset::Subset;

/// Work bound (in inner-loop steps) for the quadratic and cubic checks.
pub const DEFAULT_WORK_CAP: u64 = 1 << 31;

#[derive(Clone, Debug)]
pub struct Scheme {
    space: Space,
    classes: OrbitPartition,
    valencies: Vec<u64>,
    /// `p^γ_{αβ}` at `[(γ * k + α) * k + β]`, `k` the number of classes.
    tensor: Vec<u64>,
}

fn breach(msg: String) -> Error {
    Error::AxiomViolation(msg)
}

impl Scheme {
    /// Checks axioms (i) and (ii) on every vector, and (iii) on two pairs per
    /// class, then stores the intersection numbers.
    pub fn from_partition(space: Space, classes: OrbitPartition) -> Result<Self> {
        let size = space.size();
        if classes.orbit_id.len() != size {
            return Err(Error::DimensionMismatch(format!(
                "partition covers {} vectors, space has {size}",
                classes.orbit_id.len()
            )));
        }
        if classes.sizes.first() != Some(&1) || classes.orbit_id[0] != 0 {
            return Err(breach("class 0 is not the diagonal".into()));
        }
        for x in 0..size {
            if classes.orbit_id[x] != classes.orbit_id[space.neg(x)] {
                return Err(breach(format!("class of {} is not symmetric", space.format(x))));
            }
        }
        let k = classes.len();
        let work = (k as u64).saturating_mul(size as u64).saturating_mul(2);
        if work > DEFAULT_WORK_CAP {
            return Err(Error::CapExceeded { what: "intersection number work", cap: DEFAULT_WORK_CAP });
        }
        let cls = &classes.orbit_id;
        let mut tensor = vec![0u64; k * k * k];
        let last = size - 1;
        let mut check = vec![0u64; k * k];
        for gamma in 0..k {
            let y = classes.reps[gamma];
            let row = &mut tensor[gamma * k * k..(gamma + 1) * k * k];
            // pair (0, -y) lies in R_γ; z ranges over the whole space
            let ny = space.neg(y);
            for z in 0..size {
                let a = cls[space.neg(z)] as usize;
                let b = cls[space.sub(ny, z)] as usize;
                row[a * k + b] += 1;
            }
            // a second pair (u, u - w) with w the last member of γ
            let w = (0..size).rev().find(|&v| cls[v] as usize == gamma).unwrap();
            let u = last;
            let v = space.sub(u, w);
            check.iter_mut().for_each(|c| *c = 0);
            for z in 0..size {
                let a = cls[space.sub(u, z)] as usize;
                let b = cls[space.sub(v, z)] as usize;
                check[a * k + b] += 1;
            }
            if check != row {
                return Err(breach(format!("intersection numbers of class {gamma} depend on the pair")));
            }
        }
        let valencies = classes.sizes.iter().map(|&s| s as u64).collect();
        Ok(Scheme { space, classes, valencies, tensor })
    }

    pub fn space(&self) -> &Space {
        &self.space
    }

    pub fn classes(&self) -> &OrbitPartition {
        &self.classes
    }

    /// `s + 1`.
    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn class_of(&self, x: usize) -> usize {
        self.classes.orbit_id[x] as usize
    }

    pub fn valencies(&self) -> &[u64] {
        &self.valencies
    }

    pub fn intersection(&self, gamma: usize, alpha: usize, beta: usize) -> u64 {
        let k = self.class_count();
        self.tensor[(gamma * k + alpha) * k + beta]
    }

    /// Axiom (iii) for every pair `(x, y)`: the counts over all `z` must
    /// equal the stored intersection numbers. Cubic in the space size.
    pub fn verify_axioms_exhaustive(&self, work_cap: u64) -> Result<()> {
        let size = self.space.size();
        let k = self.class_count();
        let work = (size as u64).saturating_pow(3);
        if work > work_cap {
            return Err(Error::CapExceeded { what: "exhaustive axiom check", cap: work_cap });
        }
        // diff[x * size + z] = class of x - z
        let mut diff = vec![0u16; size * size];
        for x in 0..size {
            for z in 0..size {
                diff[x * size + z] = self.classes.orbit_id[self.space.sub(x, z)] as u16;
            }
        }
        let mut counts = vec![0u64; k * k];
        let mut touched: Vec<usize> = Vec::with_capacity(size);
        for x in 0..size {
            let rx = &diff[x * size..(x + 1) * size];
            if rx[x] != 0 || rx.iter().enumerate().any(|(z, &c)| c != diff[z * size + x]) {
                return Err(breach(format!("axioms (i)/(ii) fail at {}", self.space.format(x))));
            }
            for y in 0..size {
                let ry = &diff[y * size..(y + 1) * size];
                let gamma = rx[y] as usize;
                for z in 0..size {
                    let idx = rx[z] as usize * k + ry[z] as usize;
                    if counts[idx] == 0 {
                        touched.push(idx);
                    }
                    counts[idx] += 1;
                }
                let row = &self.tensor[gamma * k * k..(gamma + 1) * k * k];
                // all counts sum to |X| as do the stored numbers, so agreement
                // on touched cells forces zeros everywhere else
                for &idx in &touched {
                    if counts[idx] != row[idx] {
                        return Err(breach(format!(
                            "p^{gamma}_({},{}) differs at pair ({}, {})",
                            idx / k,
                            idx % k,
                            self.space.format(x),
                            self.space.format(y)
                        )));
                    }
                    counts[idx] = 0;
                }
                touched.clear();
            }
        }
        Ok(())
    }
}

pub fn build_scheme(p: &Poset, space: &Space) -> Result<Scheme> {
    Scheme::from_partition(space.clone(), orbit_partition(p, space)?)
}

/// The scheme of the dual poset on the same space.
pub fn dual_scheme_on_dual_poset(p: &Poset, space: &Space) -> Result<Scheme> {
    build_scheme(&p.dual(), space)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Eigenmatrices {
    /// `P[α][β]`: eigenvalue of `A_β` on the eigenspace `α`.
    pub p_mat: Vec<Vec<i64>>,
    pub q_mat: Vec<Vec<i64>>,
    pub multiplicities: Vec<u64>,
    /// Characters `χ_y(x) = ω^{x·y}` grouped by eigenvalue row; class ids
    /// follow the least `y`, so class 0 is the trivial character.
    pub dual_classes: OrbitPartition,
}

/// Character sums `Σ_{x ∈ N_β} ω^{x·y}` for every `y`, grouped into dual
/// classes by their rows.
pub fn eigenmatrices(s: &Scheme) -> Result<Eigenmatrices> {
    let space = &s.space;
    let size = space.size();
    let k = s.class_count();
    let p = space.p() as usize;
    let work = (size as u64).saturating_mul(size as u64);
    if work > DEFAULT_WORK_CAP {
        return Err(Error::CapExceeded { what: "character sum work", cap: DEFAULT_WORK_CAP });
    }
    let mut rows: Vec<Vec<i64>> = Vec::with_capacity(size);
    let mut counts = vec![0i64; k * p];
    for y in 0..size {
        counts.iter_mut().for_each(|c| *c = 0);
        for x in 0..size {
            counts[s.class_of(x) * p + space.dot(x, y) as usize] += 1;
        }
        let row = (0..k)
            .map(|beta| {
                let c = Cyclotomic::from_coeffs(counts[beta * p..(beta + 1) * p].to_vec());
                c.to_integer().ok_or_else(|| {
                    Error::NonIntegralEigenvalue(format!("class {beta}, character {}: {c}", space.format(y)))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        rows.push(row);
    }
    let dual_classes = OrbitPartition::from_labels(&rows);
    if dual_classes.len() != k {
        return Err(breach(format!("{} distinct eigenvalue rows for {k} classes", dual_classes.len())));
    }
    let p_mat: Vec<Vec<i64>> = dual_classes.reps.iter().map(|&y| rows[y].clone()).collect();
    let multiplicities: Vec<u64> = dual_classes.sizes.iter().map(|&m| m as u64).collect();
    let mut q_mat = vec![vec![0i64; k]; k];
    for beta in 0..k {
        for alpha in 0..k {
            let num = multiplicities[alpha] as i64 * p_mat[alpha][beta];
            let v = s.valencies[beta] as i64;
            if num % v != 0 {
                return Err(Error::NonIntegralQ(format!("Q[{beta}][{alpha}] = {num}/{v}")));
            }
            q_mat[beta][alpha] = num / v;
        }
    }
    Ok(Eigenmatrices { p_mat, q_mat, multiplicities, dual_classes })
}

impl Eigenmatrices {
    /// `PQ = |X| I`, first column of P is all ones, first row is the valencies.
    pub fn check_relations(&self, s: &Scheme) -> Result<()> {
        let k = self.p_mat.len();
        let size = s.space.size() as i64;
        for a in 0..k {
            if self.p_mat[a][0] != 1 || self.p_mat[0][a] != s.valencies[a] as i64 {
                return Err(breach(format!("row/column {a} of P is not normalised")));
            }
            for b in 0..k {
                let dot: i64 = (0..k).map(|c| self.p_mat[a][c] * self.q_mat[c][b]).sum();
                if dot != if a == b { size } else { 0 } {
                    return Err(breach(format!("(PQ)[{a}][{b}] = {dot}")));
                }
            }
        }
        Ok(())
    }

    pub fn dual_class_of(&self, y: usize) -> usize {
        self.dual_classes.orbit_id[y] as usize
    }
}

/// Primitive idempotents `E_α = |X|^{-1} Σ_{y ∈ N*_α} χ_y χ_y^†` built from
/// raw character sums: checks `E_α E_β = δ_{αβ} E_α` and `Σ E_α = I` exactly.
pub fn check_idempotents(s: &Scheme, e: &Eigenmatrices, work_cap: u64) -> Result<()> {
    let space = &s.space;
    let size = space.size();
    let k = s.class_count();
    let p = space.p() as usize;
    let work = (k as u64 * k as u64).saturating_mul((size * size) as u64);
    if work > work_cap {
        return Err(Error::CapExceeded { what: "idempotent check", cap: work_cap });
    }
    // |X| (E_α)_{xz} = f_α(x - z) with f_α(d) = Σ_{y ∈ N*_α} ω^{d·y}
    let mut f = vec![vec![0i64; size]; k];
    let mut counts = vec![0i64; p];
    for (alpha, fa) in f.iter_mut().enumerate() {
        for (d, slot) in fa.iter_mut().enumerate() {
            counts.iter_mut().for_each(|c| *c = 0);
            for y in e.dual_classes.members(alpha) {
                counts[space.dot(d, y) as usize] += 1;
            }
            let c = Cyclotomic::from_coeffs(counts.clone());
            *slot = c.to_integer().ok_or_else(|| Error::NonIntegralEigenvalue(format!("idempotent {alpha}: {c}")))?;
        }
    }
    let size_i = size as i64;
    for d in 0..size {
        let total: i64 = f.iter().map(|fa| fa[d]).sum();
        if total != if d == 0 { size_i } else { 0 } {
            return Err(breach(format!("idempotents do not sum to the identity at {}", space.format(d))));
        }
    }
    for a in 0..k {
        for b in a..k {
            for d in 0..size {
                // (E_a E_b)_{d,0} scaled by |X|^2
                let conv: i64 = (0..size).map(|w| f[a][space.sub(d, w)] * f[b][w]).sum();
                let expected = if a == b { size_i * f[a][d] } else { 0 };
                if conv != expected {
                    return Err(breach(format!("E_{a} E_{b} wrong at {}", space.format(d))));
                }
            }
        }
    }
    Ok(())
}

/// The dual scheme, realised on `F_p^n` through `y ↦ χ_y`: its classes are
/// the dual classes.
pub fn dual_scheme(s: &Scheme, e: &Eigenmatrices) -> Result<Scheme> {
    Scheme::from_partition(s.space.clone(), e.dual_classes.clone())
}

/// Duality checks: the dual scheme has valencies `m`, multiplicities `v`,
/// `P* = Q`, `Q* = P`, and its own dual classes are the original classes.
pub fn check_duality(s: &Scheme, e: &Eigenmatrices) -> Result<()> {
    let d = dual_scheme(s, e)?;
    let de = eigenmatrices(&d)?;
    if d.valencies != e.multiplicities {
        return Err(breach("dual valencies differ from multiplicities".into()));
    }
    if de.multiplicities != s.valencies {
        return Err(breach("dual multiplicities differ from valencies".into()));
    }
    if de.dual_classes != s.classes {
        return Err(breach("second dual does not return the original classes".into()));
    }
    if de.p_mat != e.q_mat || de.q_mat != e.p_mat {
        return Err(breach("dual eigenmatrices are not swapped".into()));
    }
    Ok(())
}

/// Closed-form eigenvalue: the sum over ideals `I` in `ideals` with
/// `I ∩ J ⊆ M(I)` of `(-1)^{|M(I) ∩ J|} q^{|I \ M(I)|} (q-1)^{|M(I) \ J|}`,
/// where `J` is a filter of `p` (an ideal of the dual poset).
pub fn closed_form_eigenvalue(p: &Poset, q: u64, j: Subset, ideals: impl IntoIterator<Item = Subset>) -> i128 {
    let q = q as i128;
    ideals
        .into_iter()
        .filter_map(|i| {
            let top = p.maximal_in(i);
            if !i.intersection(j).is_subset(top) {
                return None;
            }
            let sign = if top.intersection(j).len() % 2 == 0 { 1 } else { -1 };
            Some(sign * q.pow(i.difference(top).len() as u32) * (q - 1).pow(top.difference(j).len() as u32))
        })
        .sum()
}

/// [`closed_form_eigenvalue`] over the Aut-orbit of `class_rep`, restricted
/// to self-dual posets with the extension property.
pub fn eigen_closed_form_selfdual(p: &Poset, q: u64, j: Subset, class_rep: Subset, cap: u64) -> Result<i128> {
    if is_self_dual(p)?.is_none() {
        return Err(Error::NotSelfDual);
    }
    if !has_extension_property(p, ExtensionMode::Ie, cap)?.holds {
        return Err(Error::IeViolation);
    }
    if !p.is_filter(j) {
        return Err(Error::NotAnIdeal(format!("{j} (as an ideal of the dual poset)")));
    }
    if !p.is_ideal(class_rep) {
        return Err(Error::NotAnIdeal(class_rep.to_string()));
    }
    let gens = automorphism_generators(p)?.generators;
    Ok(closed_form_eigenvalue(p, q, j, subset_orbit(class_rep, &gens)))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SchemeIsoOutcome {
    /// A linear bijection: images of the unit vectors and the class permutation.
    Isomorphic { images: Vec<usize>, class_map: Vec<usize> },
    /// The parameters already rule out any isomorphism.
    NotIsomorphic { reason: String },
    /// No linear certificate was found; this proves nothing about nonlinear maps.
    Inconclusive { reason: String },
}

/// Class bijection fixing 0 that preserves valencies and intersection numbers.
pub fn parameter_isomorphism(a: &Scheme, b: &Scheme) -> Option<Vec<usize>> {
    let k = a.class_count();
    if k != b.class_count() {
        return None;
    }
    fn rec(a: &Scheme, b: &Scheme, c: usize, pi: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
        let k = a.class_count();
        if c == k {
            return true;
        }
        for t in 0..k {
            if used[t] || a.valencies[c] != b.valencies[t] || (c == 0) != (t == 0) {
                continue;
            }
            pi[c] = t;
            let ok = (0..=c).all(|x| {
                (0..=c).all(|y| {
                    [(c, x, y), (x, c, y), (x, y, c)]
                        .iter()
                        .all(|&(g, al, be)| a.intersection(g, al, be) == b.intersection(pi[g], pi[al], pi[be]))
                })
            });
            if ok {
                used[t] = true;
                if rec(a, b, c + 1, pi, used) {
                    return true;
                }
                used[t] = false;
            }
        }
        false
    }
    let mut pi = vec![usize::MAX; k];
    let mut used = vec![false; k];
    rec(a, b, 0, &mut pi, &mut used).then_some(pi)
}

struct LinearSearch<'a> {
    a: &'a Scheme,
    b: &'a Scheme,
    map: Vec<usize>,
    pi: Vec<usize>,
    pi_inv: Vec<usize>,
    images: Vec<usize>,
    nodes: u64,
    cap: u64,
}

impl LinearSearch<'_> {
    fn rec(&mut self, k: usize) -> Result<bool> {
        let sp = &self.a.space;
        let n = sp.n();
        if k == n {
            return Ok(true);
        }
        let p = sp.p() as usize;
        let block = p.pow(k as u32);
        let ek = block;
        let want = self.a.class_of(ek);
        let mut cands: Vec<usize> = (0..n).map(|i| p.pow(i as u32)).collect();
        let units = cands.clone();
        cands.extend((1..sp.size()).filter(|v| !units.contains(v)));
        for v in cands {
            let cv = self.b.class_of(v);
            if self.a.valencies[want] != self.b.valencies[cv] {
                continue;
            }
            if (self.pi[want] != usize::MAX && self.pi[want] != cv) || (self.pi[want] == usize::MAX && self.pi_inv[cv] != usize::MAX) {
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.cap {
                return Err(Error::CapExceeded { what: "scheme isomorphism search", cap: self.cap });
            }
            let mut newly = Vec::new();
            let mut ok = true;
            'fill: for c in 1..p {
                for low in 0..block {
                    let x = c * block + low;
                    let lx = self.b.space.add(self.map[low], self.b.space.scale(c as u32, v));
                    let (ca, cb) = (self.a.class_of(x), self.b.class_of(lx));
                    if self.pi[ca] == usize::MAX && self.pi_inv[cb] == usize::MAX {
                        self.pi[ca] = cb;
                        self.pi_inv[cb] = ca;
                        newly.push(ca);
                    } else if self.pi[ca] != cb {
                        ok = false;
                        break 'fill;
                    }
                    self.map[x] = lx;
                }
            }
            if ok {
                self.images.push(v);
                if self.rec(k + 1)? {
                    return Ok(true);
                }
                self.images.pop();
            }
            for ca in newly {
                self.pi_inv[self.pi[ca]] = usize::MAX;
                self.pi[ca] = usize::MAX;
            }
        }
        Ok(false)
    }
}

/// Decides isomorphism of two schemes on the same space: a parameter
/// comparison first, then a search for a linear bijection mapping classes
/// onto classes.
pub fn scheme_isomorphic(a: &Scheme, b: &Scheme, node_cap: u64) -> Result<SchemeIsoOutcome> {
    if a.space != b.space {
        return Err(Error::DimensionMismatch("schemes live on different spaces".into()));
    }
    if a.class_count() != b.class_count() {
        return Ok(SchemeIsoOutcome::NotIsomorphic {
            reason: format!("{} classes against {}", a.class_count(), b.class_count()),
        });
    }
    let mut va = a.valencies.clone();
    let mut vb = b.valencies.clone();
    va.sort_unstable();
    vb.sort_unstable();
    if va != vb {
        return Ok(SchemeIsoOutcome::NotIsomorphic { reason: format!("valency multisets {va:?} and {vb:?} differ") });
    }
    if parameter_isomorphism(a, b).is_none() {
        return Ok(SchemeIsoOutcome::NotIsomorphic {
            reason: "no class bijection preserves the intersection numbers".into(),
        });
    }
    let k = a.class_count();
    let size = a.space.size();
    let mut search = LinearSearch {
        a,
        b,
        map: vec![usize::MAX; size],
        pi: vec![usize::MAX; k],
        pi_inv: vec![usize::MAX; k],
        images: Vec::new(),
        nodes: 0,
        cap: node_cap,
    };
    search.map[0] = 0;
    search.pi[0] = 0;
    search.pi_inv[0] = 0;
    match search.rec(0) {
        Ok(true) => Ok(SchemeIsoOutcome::Isomorphic { images: search.images, class_map: search.pi }),
        Ok(false) => Ok(SchemeIsoOutcome::Inconclusive {
            reason: "parameters agree but no linear map carries classes onto classes".into(),
        }),
        Err(Error::CapExceeded { cap, .. }) => Ok(SchemeIsoOutcome::Inconclusive {
            reason: format!("linear search stopped after {cap} nodes"),
        }),
        Err(e) => Err(e),
    }
}

pub fn scheme_isomorphic_default(a: &Scheme, b: &Scheme) -> Result<SchemeIsoOutcome> {
    scheme_isomorphic(a, b, DEFAULT_NODE_CAP)
}

/// Independent check of a certificate: the linear map with the given unit
/// images is bijective and sends each class `α` of `a` into class `π(α)` of `b`.
pub fn verify_certificate(a: &Scheme, b: &Scheme, images: &[usize], class_map: &[usize]) -> bool {
    let sp = &a.space;
    if images.len() != sp.n() || class_map.len() != a.class_count() {
        return false;
    }
    let mut hit = vec![false; sp.size()];
    let mut classes: HashMap<usize, usize> = HashMap::new();
    for x in 0..sp.size() {
        let lx = sp
            .digits(x)
            .iter()
            .zip(images)
            .fold(0, |acc, (&c, &img)| b.space.add(acc, b.space.scale(c, img)));
        if std::mem::replace(&mut hit[lx], true) {
            return false;
        }
        if b.class_of(lx) != class_map[a.class_of(x)] {
            return false;
        }
        classes.insert(a.class_of(x), b.class_of(lx));
    }
    classes.len() == a.class_count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::space::DEFAULT_SPACE_CAP;

    fn space(p: u32, n: usize) -> Space {
        Space::new(PrimeField::new(p).unwrap(), n, DEFAULT_SPACE_CAP).unwrap()
    }

    #[test]
    fn chain_scheme() {
        let sp = space(2, 2);
        let s = build_scheme(&Poset::chain(2).unwrap(), &sp).unwrap();
        assert_eq!(s.valencies(), &[1, 1, 2]);
        s.verify_axioms_exhaustive(DEFAULT_WORK_CAP).unwrap();
        let e = eigenmatrices(&s).unwrap();
        assert_eq!(e.p_mat, vec![vec![1, 1, 2], vec![1, -1, 0], vec![1, 1, -2]]);
        assert_eq!(e.multiplicities, vec![1, 2, 1]);
        assert_eq!(e.q_mat, vec![vec![1, 2, 1], vec![1, -2, 1], vec![1, 0, -1]]);
        let names: Vec<Vec<String>> =
            (0..3).map(|a| e.dual_classes.members(a).map(|y| sp.format(y)).collect()).collect();
        assert_eq!(names, vec![vec!["00"], vec!["10", "11"], vec!["01"]]);
        e.check_relations(&s).unwrap();
        check_idempotents(&s, &e, DEFAULT_WORK_CAP).unwrap();
        check_duality(&s, &e).unwrap();
    }

    #[test]
    fn hamming_scheme_rows_are_krawtchouk() {
        let sp = space(2, 3);
        let s = build_scheme(&Poset::antichain(3).unwrap(), &sp).unwrap();
        assert_eq!(s.class_count(), 4);
        let e = eigenmatrices(&s).unwrap();
        assert_eq!(e.p_mat[1], vec![1, 1, -1, -1]);
    }

    #[test]
    fn closed_form_on_chain() {
        let chain = Poset::chain(2).unwrap();
        // J = {2} is the filter generated by coordinate 2, i.e. the class of 01
        let j = Subset::from_one_based(&[2]);
        let v = eigen_closed_form_selfdual(&chain, 2, j, Subset::full(2), 100).unwrap();
        assert_eq!(v, -2);
        let v0 = eigen_closed_form_selfdual(&chain, 2, Subset::EMPTY, Subset::full(2), 100).unwrap();
        assert_eq!(v0, 2);
        let v_poset = Poset::new(3, &[(1, 2), (1, 3)]).unwrap();
        assert_eq!(eigen_closed_form_selfdual(&v_poset, 2, Subset::EMPTY, Subset::EMPTY, 100), Err(Error::NotSelfDual));
    }

    #[test]
    fn self_isomorphism_and_refutation() {
        let sp = space(2, 3);
        let chain = build_scheme(&Poset::chain(3).unwrap(), &sp).unwrap();
        match scheme_isomorphic_default(&chain, &chain).unwrap() {
            SchemeIsoOutcome::Isomorphic { images, class_map } => {
                assert!(verify_certificate(&chain, &chain, &images, &class_map));
            }
            other => panic!("expected isomorphism, got {other:?}"),
        }
        let anti = build_scheme(&Poset::antichain(3).unwrap(), &sp).unwrap();
        assert!(matches!(scheme_isomorphic_default(&chain, &anti).unwrap(), SchemeIsoOutcome::NotIsomorphic { .. }));
    }
}
