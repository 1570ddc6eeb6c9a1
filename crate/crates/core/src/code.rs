//! Linear codes in `F_p^n`, their duals, inner distributions and the
//! MacWilliams transforms through the eigenmatrices.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::field::Matrix;
use crate::poset::Poset;
use crate::scheme::{Eigenmatrices, Scheme};
use crate::space::{poset_weight, Space};

/// Bound on the number of codewords enumerated for one code.
pub const DEFAULT_CODE_CAP: u64 = 1 << 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearCode {
    space: Space,
    /// Reduced row echelon generator matrix with `k` nonzero rows.
    gen: Matrix,
    codewords: Vec<usize>,
}

/// Spans `gen` (any row count, possibly dependent) inside `space`.
pub fn build_code(space: &Space, gen: &Matrix, cap: u64) -> Result<LinearCode> {
    if gen.cols() != space.n() {
        return Err(Error::DimensionMismatch(format!(
            "generator has {} columns, space has {} coordinates",
            gen.cols(),
            space.n()
        )));
    }
    if gen.field() != space.field() {
        return Err(Error::DimensionMismatch("generator and space use different fields".into()));
    }
    let (rref, pivots) = gen.rref();
    let k = pivots.len();
    let count = (space.p() as u64).checked_pow(k as u32).filter(|&c| c <= cap);
    if count.is_none() {
        return Err(Error::CapExceeded { what: "codeword enumeration", cap });
    }
    let rows: Vec<usize> = (0..k).map(|i| space.index(rref.row(i))).collect();
    Ok(LinearCode { space: space.clone(), gen: rref, codewords: span(space, &rows) })
}

/// All `F_p`-combinations of `rows`, sorted.
fn span(space: &Space, rows: &[usize]) -> Vec<usize> {
    let mut words = vec![0usize];
    for &r in rows {
        let base = words.len();
        for c in 1..space.p() {
            let step = space.scale(c, r);
            for w in 0..base {
                words.push(space.add(words[w], step));
            }
        }
    }
    words.sort_unstable();
    words
}

impl LinearCode {
    pub fn space(&self) -> &Space {
        &self.space
    }

    pub fn generator(&self) -> &Matrix {
        &self.gen
    }

    pub fn dimension(&self) -> usize {
        self.gen.rows()
    }

    pub fn len(&self) -> usize {
        self.codewords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.codewords.is_empty()
    }

    pub fn codewords(&self) -> &[usize] {
        &self.codewords
    }

    pub fn contains(&self, x: usize) -> bool {
        self.codewords.binary_search(&x).is_ok()
    }
}

/// `{y : x·y = 0 for all x ∈ C}`.
pub fn dual_code(c: &LinearCode, cap: u64) -> Result<LinearCode> {
    let f = c.space.field();
    let n = c.space.n();
    let basis = if c.dimension() == 0 { Matrix::identity(f, n) } else { c.gen.kernel() };
    if basis.rows() == 0 {
        return build_code(&c.space, &Matrix::zeros(f, 1, n), cap);
    }
    build_code(&c.space, &basis, cap)
}

/// Calls `f` on every code of dimension at most `max_dim`, each given by its
/// unique reduced echelon generator.
pub fn for_each_code(space: &Space, max_dim: usize, f: &mut dyn FnMut(&LinearCode) -> Result<()>) -> Result<()> {
    let n = space.n();
    let field = space.field();
    let p = space.p();
    for k in 0..=max_dim.min(n) {
        if k == 0 {
            f(&build_code(space, &Matrix::zeros(field, 1, n), 1)?)?;
            continue;
        }
        let mut pivots: Vec<usize> = (0..k).collect();
        loop {
            // free cells: right of the row's pivot, outside pivot columns
            let free: Vec<(usize, usize)> = (0..k)
                .flat_map(|i| ((pivots[i] + 1)..n).filter(|j| !pivots.contains(j)).map(move |j| (i, j)))
                .collect();
            let mut values = vec![0u32; free.len()];
            loop {
                let mut m = Matrix::zeros(field, k, n);
                for (i, &c) in pivots.iter().enumerate() {
                    m.set(i, c, 1);
                }
                for (&(i, j), &v) in free.iter().zip(&values) {
                    m.set(i, j, v);
                }
                let rows: Vec<usize> = (0..k).map(|i| space.index(m.row(i))).collect();
                f(&LinearCode { space: space.clone(), gen: m, codewords: span(space, &rows) })?;
                // odometer over the free values
                let mut t = 0;
                while t < values.len() && values[t] == p - 1 {
                    values[t] = 0;
                    t += 1;
                }
                if t == values.len() {
                    break;
                }
                values[t] += 1;
            }
            // next k-subset of pivot columns
            let mut i = k;
            while i > 0 && pivots[i - 1] == n - k + i - 1 {
                i -= 1;
            }
            if i == 0 {
                break;
            }
            pivots[i - 1] += 1;
            for t in i..k {
                pivots[t] = pivots[t - 1] + 1;
            }
        }
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// Codewords counted per class of the scheme.
    Primal,
    /// Codewords, read as character indices, counted per dual class.
    DualClasses,
}

pub fn inner_distribution(c: &LinearCode, s: &Scheme, e: &Eigenmatrices, side: Side) -> Result<Vec<u64>> {
    if c.space != *s.space() {
        return Err(Error::DimensionMismatch("code and scheme live on different spaces".into()));
    }
    let mut a = vec![0u64; s.class_count()];
    for &x in &c.codewords {
        let class = match side {
            Side::Primal => s.class_of(x),
            Side::DualClasses => e.dual_class_of(x),
        };
        a[class] += 1;
    }
    Ok(a)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MacWilliamsReport {
    /// Inner distribution of `C` over the classes.
    pub a: Vec<u64>,
    /// Inner distribution of the dual code over the dual classes.
    pub a_dual: Vec<u64>,
    /// `a Q / |C|`.
    pub a_dual_from_a: Vec<i64>,
    /// `|C| a' P / q^n`.
    pub a_from_dual: Vec<i64>,
    pub holds: bool,
}

fn exact_div(num: i128, den: i128, what: &str) -> Result<i64> {
    if num % den != 0 {
        return Err(Error::NonIntegralResult(format!("{what}: {num}/{den}")));
    }
    Ok((num / den) as i64)
}

/// Both directions of the MacWilliams transform, compared against the
/// measured distributions.
pub fn macwilliams_check(c: &LinearCode, s: &Scheme, e: &Eigenmatrices, cap: u64) -> Result<MacWilliamsReport> {
    let d = dual_code(c, cap)?;
    let a = inner_distribution(c, s, e, Side::Primal)?;
    let a_dual = inner_distribution(&d, s, e, Side::DualClasses)?;
    let k = s.class_count();
    let size_c = c.len() as i128;
    let q_n = s.space().size() as i128;
    let a_dual_from_a = (0..k)
        .map(|alpha| {
            let num: i128 = (0..k).map(|beta| a[beta] as i128 * e.q_mat[beta][alpha] as i128).sum();
            exact_div(num, size_c, "a Q / |C|")
        })
        .collect::<Result<Vec<_>>>()?;
    let a_from_dual = (0..k)
        .map(|beta| {
            let num: i128 = (0..k).map(|alpha| a_dual[alpha] as i128 * e.p_mat[alpha][beta] as i128).sum();
            exact_div(num * size_c, q_n, "|C| a' P / q^n")
        })
        .collect::<Result<Vec<_>>>()?;
    let holds = a_dual_from_a.iter().zip(&a_dual).all(|(&x, &y)| x == y as i64)
        && a_from_dual.iter().zip(&a).all(|(&x, &y)| x == y as i64);
    Ok(MacWilliamsReport { a, a_dual, a_dual_from_a, a_from_dual, holds })
}

/// Number of codewords of each poset weight `0..=n`.
pub fn weight_distribution(p: &Poset, c: &LinearCode) -> Vec<u64> {
    let mut w = vec![0u64; p.n() + 1];
    for &x in &c.codewords {
        w[poset_weight(p, &c.space, x)] += 1;
    }
    w
}

/// Two codes whose `P`-weight distributions agree while the `P⊥`-weight
/// distributions of their duals differ, if any code of dimension at most
/// `max_dim` gives one.
pub fn weight_determination_counterexample(
    p: &Poset,
    space: &Space,
    max_dim: usize,
) -> Result<Option<(LinearCode, LinearCode)>> {
    let dual = p.dual();
    let mut seen: HashMap<Vec<u64>, (Vec<u64>, LinearCode)> = HashMap::new();
    let mut found = None;
    for_each_code(space, max_dim, &mut |c| {
        if found.is_some() {
            return Ok(());
        }
        let w = weight_distribution(p, c);
        let wd = weight_distribution(&dual, &dual_code(c, DEFAULT_CODE_CAP)?);
        match seen.get(&w) {
            Some((prev, code)) if *prev != wd => found = Some((code.clone(), c.clone())),
            Some(_) => {}
            None => {
                seen.insert(w, (wd, c.clone()));
            }
        }
        Ok(())
    })?;
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::scheme::{build_scheme, eigenmatrices};
    use crate::space::DEFAULT_SPACE_CAP;

    fn space(p: u32, n: usize) -> Space {
        Space::new(PrimeField::new(p).unwrap(), n, DEFAULT_SPACE_CAP).unwrap()
    }

    fn code(sp: &Space, rows: &[Vec<u32>]) -> LinearCode {
        build_code(sp, &Matrix::from_rows(sp.field(), rows).unwrap(), DEFAULT_CODE_CAP).unwrap()
    }

    #[test]
    fn build_and_dual() {
        let sp = space(2, 2);
        let c = code(&sp, &[vec![1, 1]]);
        assert_eq!(c.codewords(), &[0, 3]);
        assert_eq!(dual_code(&c, DEFAULT_CODE_CAP).unwrap().codewords(), &[0, 3]);
        let zero = code(&sp, &[vec![0, 0]]);
        assert_eq!(zero.dimension(), 0);
        assert_eq!(dual_code(&zero, DEFAULT_CODE_CAP).unwrap().len(), 4);
        let sp3 = space(2, 3);
        assert_eq!(code(&sp3, &[vec![1, 1, 0], vec![0, 1, 1]]).len(), 4);
    }

    #[test]
    fn code_counts_are_gaussian_binomials() {
        let sp = space(2, 4);
        let mut by_dim = [0u32; 5];
        for_each_code(&sp, 4, &mut |c| {
            by_dim[c.dimension()] += 1;
            Ok(())
        })
        .unwrap();
        assert_eq!(by_dim, [1, 15, 35, 15, 1]);
        let sp3 = space(3, 3);
        let mut count = 0;
        for_each_code(&sp3, 1, &mut |_| {
            count += 1;
            Ok(())
        })
        .unwrap();
        assert_eq!(count, 1 + 13);
    }

    #[test]
    fn chain_macwilliams() {
        let sp = space(2, 2);
        let s = build_scheme(&Poset::chain(2).unwrap(), &sp).unwrap();
        let e = eigenmatrices(&s).unwrap();
        let c = code(&sp, &[vec![1, 1]]);
        let r = macwilliams_check(&c, &s, &e, DEFAULT_CODE_CAP).unwrap();
        assert_eq!(r.a, vec![1, 0, 1]);
        assert_eq!(r.a_dual, vec![1, 1, 0]);
        assert_eq!(r.a_dual_from_a, vec![1, 1, 0]);
        assert!(r.holds);
    }
}
