//! Exact sums of p-th roots of unity, `Σ_k c_k ω^k`.

use std::fmt;

/// An element of `Z[ω]` for a primitive p-th root of unity `ω`, kept in
/// the normal form where the smallest coefficient is zero (this uses
/// `1 + ω + ... + ω^(p-1) = 0`).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cyclotomic {
    coeffs: Vec<i64>,
}

impl Cyclotomic {
    pub fn zero(p: u32) -> Self {
        Cyclotomic { coeffs: vec![0; p as usize] }
    }

    /// `Σ_k counts[k] ω^k`.
    pub fn from_coeffs(coeffs: Vec<i64>) -> Self {
        let mut c = Cyclotomic { coeffs };
        c.normalize();
        c
    }

    pub fn p(&self) -> u32 {
        self.coeffs.len() as u32
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// Adds `ω^k`.
    pub fn add_power(&mut self, k: u32) {
        self.coeffs[k as usize] += 1;
    }

    fn normalize(&mut self) {
        let min = self.coeffs.iter().copied().min().unwrap_or(0);
        self.coeffs.iter_mut().for_each(|c| *c -= min);
    }

    /// The value as a rational integer, if it is one.
    pub fn to_integer(&self) -> Option<i64> {
        let mut c = self.clone();
        c.normalize();
        // in normal form, a rational value c_0 - c has c_1 = ... = c_{p-1} = c
        match c.coeffs.split_first() {
            None => Some(0),
            Some((&c0, rest)) => {
                let base = rest.first().copied().unwrap_or(0);
                rest.iter().all(|&v| v == base).then_some(c0 - base)
            }
        }
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut c = self.clone();
        c.normalize();
        let terms: Vec<String> = c
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, &v)| v != 0)
            .map(|(k, v)| if k == 0 { v.to_string() } else { format!("{v}w^{k}") })
            .collect();
        if terms.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&terms.join(" + "))
        }
    }
}
