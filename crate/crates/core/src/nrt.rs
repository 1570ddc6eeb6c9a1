//! The NRT poset (`m` disjoint chains of length `r`), its shape vectors and
//! sphere sizes.

use crate::error::{Error, Result};
use crate::poset::Poset;
use crate::subset::Subset;

/// Chains `k r + 1 ≺ k r + 2 ≺ ... ≺ (k + 1) r` for `k = 0..m`.
pub fn nrt_poset(m: usize, r: usize) -> Result<Poset> {
    let mut rel = Vec::new();
    for k in 0..m {
        for t in 1..r {
            rel.push((k * r + t, k * r + t + 1));
        }
    }
    Poset::new(m * r, &rel)
}

/// `e_j` = number of maximal elements of `⟨s⟩` at level `j`, for `j = 1..r`.
/// `s` may be any support set; its ideal is taken first.
pub fn nrt_shape(p: &Poset, m: usize, r: usize, s: Subset) -> Result<Vec<usize>> {
    if m * r != p.n() || nrt_poset(m, r)? != *p {
        return Err(Error::ShapeDomain(format!("poset is not {m} chains of length {r}")));
    }
    p.check_subset(s)?;
    let mut e = vec![0; r];
    for i in p.maximal_in(p.ideal_of(s)).iter() {
        e[p.level(i) - 1] += 1;
    }
    Ok(e)
}

fn checked_pow(base: u128, exp: usize) -> Result<u128> {
    u32::try_from(exp)
        .ok()
        .and_then(|e| base.checked_pow(e))
        .ok_or_else(|| Error::Domain("valency overflows 128 bits".into()))
}

fn multinomial(parts: &[usize]) -> Result<u128> {
    let mut acc: u128 = 1;
    let mut used = 0usize;
    for &k in parts {
        for t in 1..=k {
            // acc * C(used + t, t) built incrementally stays integral
            acc = acc
                .checked_mul((used + t) as u128)
                .ok_or_else(|| Error::Domain("valency overflows 128 bits".into()))?
                / t as u128;
        }
        used += k;
    }
    Ok(acc)
}

fn validate(m: usize, r: usize, q: u64, e: &[usize]) -> Result<usize> {
    if e.len() != r {
        return Err(Error::Domain(format!("shape has {} entries, expected {r}", e.len())));
    }
    if q < 2 {
        return Err(Error::Domain(format!("alphabet size {q} is below 2")));
    }
    let total: usize = e.iter().sum();
    if total > m {
        return Err(Error::Domain(format!("shape entries sum to {total} > {m}")));
    }
    Ok(total)
}

/// Number of vectors of shape `e` in `F_q^{m r}`:
/// `m! / (e_1! ... e_r! (m - Σe)!) · (q-1)^{Σ e_i} · q^{Σ (i-1) e_i}`.
pub fn nrt_valency(m: usize, r: usize, q: u64, e: &[usize]) -> Result<u128> {
    let total = validate(m, r, q, e)?;
    let mut parts = e.to_vec();
    parts.push(m - total);
    let below: usize = e.iter().enumerate().map(|(i, &k)| i * k).sum();
    let v = multinomial(&parts)?;
    let err = || Error::Domain("valency overflows 128 bits".into());
    v.checked_mul(checked_pow(q as u128 - 1, total)?)
        .and_then(|v| v.checked_mul(checked_pow(q as u128, below).ok()?))
        .ok_or_else(err)
}

/// The same multinomial with the two exponents exchanged:
/// `(q-1)^{Σ (i-1) e_i} · q^{Σ e_i}`. Kept for comparison with `nrt_valency`;
/// it does not count vectors (already wrong at `e = (1, 0)`).
pub fn nrt_valency_swapped_exponents(m: usize, r: usize, q: u64, e: &[usize]) -> Result<u128> {
    let total = validate(m, r, q, e)?;
    let mut parts = e.to_vec();
    parts.push(m - total);
    let below: usize = e.iter().enumerate().map(|(i, &k)| i * k).sum();
    let v = multinomial(&parts)?;
    let err = || Error::Domain("valency overflows 128 bits".into());
    v.checked_mul(checked_pow(q as u128 - 1, below)?)
        .and_then(|v| v.checked_mul(checked_pow(q as u128, total).ok()?))
        .ok_or_else(err)
}

/// All shape vectors of length `r` with entries summing to at most `m`,
/// in lexicographic order of the reversed vector.
pub fn nrt_shapes(m: usize, r: usize) -> Vec<Vec<usize>> {
    fn rec(m: usize, r: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        let used: usize = cur.iter().sum();
        for k in 0..=m - used {
            cur.push(k);
            rec(m, r, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(m, r, &mut Vec::new(), &mut out);
    out.sort_by(|a, b| a.iter().rev().cmp(b.iter().rev()));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shape_examples() {
        let p = nrt_poset(2, 2).unwrap();
        assert_eq!(nrt_shape(&p, 2, 2, Subset::EMPTY).unwrap(), vec![0, 0]);
        assert_eq!(nrt_shape(&p, 2, 2, Subset::from_one_based(&[2, 3])).unwrap(), vec![1, 1]);
        let c = nrt_poset(1, 3).unwrap();
        assert_eq!(nrt_shape(&c, 1, 3, Subset::from_one_based(&[1, 2])).unwrap(), vec![0, 1, 0]);
        let v = Poset::new(3, &[(1, 2), (1, 3)]).unwrap();
        assert!(matches!(nrt_shape(&v, 1, 3, Subset::EMPTY), Err(Error::ShapeDomain(_))));
    }

    #[test]
    fn valencies_sum_to_space_size() {
        for (m, r, q) in [(2, 2, 2), (3, 2, 3), (2, 3, 5), (4, 1, 2)] {
            let total: u128 = nrt_shapes(m, r).iter().map(|e| nrt_valency(m, r, q, e).unwrap()).sum();
            assert_eq!(total, (q as u128).pow((m * r) as u32));
        }
    }

    #[test]
    fn displayed_and_counted_forms_differ() {
        assert_eq!(nrt_valency(2, 2, 2, &[0, 0]).unwrap(), 1);
        assert_eq!(nrt_valency(2, 2, 2, &[1, 0]).unwrap(), 2);
        assert_eq!(nrt_valency_swapped_exponents(2, 2, 2, &[1, 0]).unwrap(), 4);
        assert!(nrt_valency(2, 2, 2, &[2, 1]).is_err());
        assert!(nrt_valency(2, 2, 2, &[1]).is_err());
    }

    #[test]
    fn shapes_enumerated() {
        assert_eq!(
            nrt_shapes(2, 2),
            vec![vec![0, 0], vec![1, 0], vec![2, 0], vec![0, 1], vec![1, 1], vec![0, 2]]
        );
    }
}
