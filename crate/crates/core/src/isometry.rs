//! Linear isometries of `(F_p^n, d_P)`: pairs of a poset automorphism and a
//! matrix supported on the order relation.
//!
//! The action is `T(x) = A · T_φ(x)` with `(T_φ x)_k = x_{φ(k)}`: permute
//! first, then multiply.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::field::{Matrix, PrimeField};
use crate::iso::automorphism_generators;
use crate::poset::{compose, identity, is_permutation, Perm, Poset};
use crate::space::Space;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Isometry {
    pub perm: Perm,
    pub matrix: Matrix,
}

/// Matrix conditions for membership in the triangular part of the group:
/// nonzero diagonal, and `a_ij ≠ 0` for `i ≠ j` only when `i ≺ j`.
///
/// For a labelling with `i ≺ j ⇒ i < j` this is the familiar "upper
/// triangular with zeros outside the order" condition.
pub fn validate_isometry_matrix(p: &Poset, a: &Matrix) -> bool {
    let n = p.n();
    a.rows() == n
        && a.cols() == n
        && (0..n).all(|i| {
            (0..n).all(|j| {
                let v = a.get(i, j);
                if i == j {
                    v != 0
                } else {
                    v == 0 || p.lt(i, j)
                }
            })
        })
}

impl Isometry {
    pub fn identity(field: PrimeField, n: usize) -> Self {
        Isometry { perm: identity(n), matrix: Matrix::identity(field, n) }
    }

    pub fn new(p: &Poset, perm: Perm, matrix: Matrix) -> Result<Self> {
        if perm.len() != p.n() || !is_permutation(&perm) || !p.is_automorphism(&perm) {
            return Err(Error::MalformedIsometry("permutation is not a poset automorphism".into()));
        }
        if !validate_isometry_matrix(p, &matrix) {
            return Err(Error::MalformedIsometry("matrix violates the order support conditions".into()));
        }
        Ok(Isometry { perm, matrix })
    }

    pub fn apply_digits(&self, x: &[u32]) -> Vec<u32> {
        let permuted: Vec<u32> = self.perm.iter().map(|&k| x[k]).collect();
        self.matrix.mul_vec(&permuted)
    }

    pub fn apply(&self, space: &Space, x: usize) -> usize {
        space.index(&self.apply_digits(&space.digits(x)))
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Isometry) -> Isometry {
        // T_φ A = A' T_φ with A'_ij = A_{φ(i) φ(j)}
        let n = self.perm.len();
        let f = self.matrix.field();
        let mut moved = Matrix::zeros(f, n, n);
        for i in 0..n {
            for j in 0..n {
                moved.set(i, j, other.matrix.get(self.perm[i], self.perm[j]));
            }
        }
        Isometry { perm: compose(&other.perm, &self.perm), matrix: self.matrix.mul(&moved) }
    }
}

/// `i ↦ M(⟨T e_i⟩)`, which is always a single element for an isometry.
pub fn isometry_to_automorphism(p: &Poset, space: &Space, t: &Isometry) -> Result<Perm> {
    let n = p.n();
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let image = t.apply(space, space.unit(i));
        let top = p.maximal_in(p.ideal_of(space.support(image)));
        if top.len() != 1 {
            return Err(Error::MalformedIsometry(format!("image of e_{} has {} maximal coordinates", i + 1, top.len())));
        }
        out.push(top.first().unwrap());
    }
    if !p.is_automorphism(&out) {
        return Err(Error::MalformedIsometry("induced map is not an automorphism".into()));
    }
    Ok(out)
}

/// Elementary generators of the isometry group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GeneratorOp {
    /// `x_i ← c · x_i`.
    Scale { i: usize, c: u32 },
    /// `x_i ← x_i + x_j`, for `i ≺ j`.
    Transvection { i: usize, j: usize },
    /// `x ← T_φ x`.
    Permute(Perm),
}

impl GeneratorOp {
    pub fn apply_digits(&self, field: PrimeField, x: &mut Vec<u32>) {
        match self {
            GeneratorOp::Scale { i, c } => x[*i] = field.mul(*c, x[*i]),
            GeneratorOp::Transvection { i, j } => x[*i] = field.add(x[*i], x[*j]),
            GeneratorOp::Permute(phi) => *x = phi.iter().map(|&k| x[k]).collect(),
        }
    }

    pub fn to_isometry(&self, field: PrimeField, n: usize) -> Isometry {
        let mut t = Isometry::identity(field, n);
        match self {
            GeneratorOp::Scale { i, c } => t.matrix.set(*i, *i, *c),
            GeneratorOp::Transvection { i, j } => t.matrix.set(*i, *j, 1),
            GeneratorOp::Permute(phi) => t.perm = phi.clone(),
        }
        t
    }
}

/// Scalings by a primitive root, unit transvections along every strict
/// relation, and permutations for generators of Aut(P).
pub fn generator_ops(p: &Poset, field: PrimeField) -> Result<Vec<GeneratorOp>> {
    let mut ops = Vec::new();
    if field.p() > 2 {
        let g = field.primitive_root();
        ops.extend((0..p.n()).map(|i| GeneratorOp::Scale { i, c: g }));
    }
    for j in 0..p.n() {
        for i in p.down(j).without(j).iter() {
            ops.push(GeneratorOp::Transvection { i, j });
        }
    }
    for phi in automorphism_generators(p)?.generators {
        ops.push(GeneratorOp::Permute(phi));
    }
    Ok(ops)
}

pub fn isometry_generators(p: &Poset, field: PrimeField) -> Result<Vec<Isometry>> {
    Ok(generator_ops(p, field)?.iter().map(|op| op.to_isometry(field, p.n())).collect())
}

/// `|GL_P(n)| = |Aut(P)| · (p-1)^n · p^(number of strict relations)`.
pub fn isometry_group_order(p: &Poset, field: PrimeField) -> Result<u128> {
    let aut = automorphism_generators(p)?.order;
    let q = field.p() as u128;
    let err = || Error::Domain("group order overflows 128 bits".into());
    (q - 1)
        .checked_pow(p.n() as u32)
        .and_then(|a| a.checked_mul(q.checked_pow(p.strict_pairs() as u32)?))
        .and_then(|a| a.checked_mul(aut))
        .ok_or_else(err)
}

/// Every element of the group generated by `gens`, by breadth-first closure.
pub fn isometry_closure(gens: &[Isometry], field: PrimeField, n: usize, cap: u64) -> Result<HashSet<Isometry>> {
    let id = Isometry::identity(field, n);
    let mut seen: HashSet<Isometry> = HashSet::from([id.clone()]);
    let mut frontier = vec![id];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for t in &frontier {
            for g in gens {
                let c = g.compose(t);
                if !seen.contains(&c) {
                    if seen.len() as u64 >= cap {
                        return Err(Error::CapExceeded { what: "isometry group closure", cap });
                    }
                    seen.insert(c.clone());
                    next.push(c);
                }
            }
        }
        frontier = next;
    }
    Ok(seen)
}

/// The representative `x̂` of `x` (indicator of `M(⟨x⟩)`) and an isometry
/// `T = B A` with `T(x) = x̂`.
///
/// `A` rescales each maximal coordinate to 1. `B` then clears every other
/// support coordinate `i` against the largest-indexed maximal `j` above it,
/// using `b_ij = -x_i` (after `A`, `x_j = 1`).
pub fn canonical_form(p: &Poset, space: &Space, x: usize) -> (usize, Isometry) {
    let f = space.field();
    let n = p.n();
    let digits = space.digits(x);
    let support = space.support(x);
    let top = p.maximal_in(p.ideal_of(support));
    let mut a = Matrix::identity(f, n);
    for i in top.iter() {
        a.set(i, i, f.inv(digits[i]).expect("maximal coordinates are nonzero"));
    }
    let mut b = Matrix::identity(f, n);
    for i in support.difference(top).iter() {
        let j = top.iter().filter(|&k| p.lt(i, k)).max().expect("support lies below its maximal elements");
        b.set(i, j, f.neg(digits[i]));
    }
    let hat = space.index(&(0..n).map(|i| top.contains(i) as u32).collect::<Vec<_>>());
    (hat, Isometry { perm: identity(n), matrix: b.mul(&a) })
}
