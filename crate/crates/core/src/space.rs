//! The space `F_p^n` with vectors stored as integers `Σ x_i p^(i-1)`, so
//! coordinate 1 is the least significant digit.

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::poset::Poset;
use crate::subset::Subset;

/// Default bound on `p^n` for anything that walks the whole space.
pub const DEFAULT_SPACE_CAP: u64 = 1 << 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Space {
    field: PrimeField,
    n: usize,
    size: usize,
}

impl Space {
    pub fn new(field: PrimeField, n: usize, cap: u64) -> Result<Self> {
        let size = (field.p() as u64)
            .checked_pow(n as u32)
            .filter(|&s| s <= cap)
            .ok_or(Error::CapExceeded { what: "vector space size", cap })?;
        Ok(Space { field, n, size: size as usize })
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn p(&self) -> u32 {
        self.field.p()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `p^n`.
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn digits(&self, mut x: usize) -> Vec<u32> {
        let p = self.p() as usize;
        (0..self.n)
            .map(|_| {
                let d = (x % p) as u32;
                x /= p;
                d
            })
            .collect()
    }

    pub fn index(&self, digits: &[u32]) -> usize {
        let p = self.p() as usize;
        digits.iter().rev().fold(0, |acc, &d| acc * p + (d % self.p()) as usize)
    }

    pub fn unit(&self, i: usize) -> usize {
        (self.p() as usize).pow(i as u32)
    }

    pub fn support(&self, x: usize) -> Subset {
        if self.p() == 2 {
            return Subset::from_bits(x as u64);
        }
        self.digits(x).iter().enumerate().filter(|(_, &d)| d != 0).map(|(i, _)| i).collect()
    }

    /// Digit-wise combination without allocating.
    #[inline]
    fn zip_digits(&self, mut x: usize, mut y: usize, f: impl Fn(u32, u32) -> u32) -> usize {
        let p = self.p() as usize;
        let (mut out, mut place) = (0, 1);
        for _ in 0..self.n {
            out += f((x % p) as u32, (y % p) as u32) as usize * place;
            x /= p;
            y /= p;
            place *= p;
        }
        out
    }

    pub fn add(&self, x: usize, y: usize) -> usize {
        if self.p() == 2 {
            return x ^ y;
        }
        let f = self.field;
        self.zip_digits(x, y, |u, v| f.add(u, v))
    }

    pub fn sub(&self, x: usize, y: usize) -> usize {
        if self.p() == 2 {
            return x ^ y;
        }
        let f = self.field;
        self.zip_digits(x, y, |u, v| f.sub(u, v))
    }

    pub fn neg(&self, x: usize) -> usize {
        self.sub(0, x)
    }

    pub fn scale(&self, c: u32, x: usize) -> usize {
        let f = self.field;
        self.zip_digits(x, 0, |u, _| f.mul(c, u))
    }

    pub fn dot(&self, mut x: usize, mut y: usize) -> u32 {
        if self.p() == 2 {
            return (x & y).count_ones() & 1;
        }
        let p = self.p() as usize;
        let mut acc = 0;
        for _ in 0..self.n {
            acc += (x % p) * (y % p);
            x /= p;
            y /= p;
        }
        (acc % p) as u32
    }

    /// Digit string with coordinate 1 first, e.g. `"10"` is `e_1`.
    pub fn format(&self, x: usize) -> String {
        self.digits(x).iter().map(|d| char::from_digit(*d, 36).unwrap()).collect()
    }

    /// Digit strings use `0-9a-z`; comma-separated digits are also accepted.
    pub fn parse(&self, s: &str) -> Result<usize> {
        let s = s.trim();
        let digits: Vec<u32> = if s.contains(',') {
            s.split(',')
                .map(|t| t.trim().parse::<u32>().map_err(|_| Error::Parse(format!("bad coordinate `{t}`"))))
                .collect::<Result<_>>()?
        } else {
            s.chars()
                .map(|c| c.to_digit(36).ok_or_else(|| Error::Parse(format!("bad digit `{c}`"))))
                .collect::<Result<_>>()?
        };
        if digits.len() != self.n {
            return Err(Error::DimensionMismatch(format!("vector `{s}` has {} coordinates, expected {}", digits.len(), self.n)));
        }
        if let Some(d) = digits.iter().find(|&&d| d >= self.p()) {
            return Err(Error::Parse(format!("coordinate {d} is not below {}", self.p())));
        }
        Ok(self.index(&digits))
    }
}

/// `|⟨supp(x)⟩|`.
pub fn poset_weight(p: &Poset, space: &Space, x: usize) -> usize {
    p.ideal_of(space.support(x)).len()
}

pub fn poset_distance(p: &Poset, space: &Space, x: usize, y: usize) -> usize {
    poset_weight(p, space, space.sub(x, y))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn space(p: u32, n: usize) -> Space {
        Space::new(PrimeField::new(p).unwrap(), n, DEFAULT_SPACE_CAP).unwrap()
    }

    #[test]
    fn digit_round_trip() {
        let s = space(3, 4);
        for x in 0..s.size() {
            assert_eq!(s.index(&s.digits(x)), x);
            assert_eq!(s.parse(&s.format(x)).unwrap(), x);
        }
        assert_eq!(s.format(1), "1000");
        assert_eq!(s.parse("0,2,0,1").unwrap(), 2 * 3 + 27);
        assert!(s.parse("0300").is_err());
        assert!(s.parse("01").is_err());
    }

    #[test]
    fn arithmetic_matches_digits() {
        let s = space(5, 3);
        for x in (0..s.size()).step_by(7) {
            for y in (0..s.size()).step_by(11) {
                assert_eq!(s.sub(s.add(x, y), y), x);
                assert_eq!(s.add(x, s.scale(4, x)), 0);
            }
        }
    }

    #[test]
    fn weights() {
        let s = space(2, 3);
        let chain = Poset::chain(3).unwrap();
        let anti = Poset::antichain(3).unwrap();
        assert_eq!(poset_weight(&chain, &s, 0), 0);
        assert_eq!(poset_weight(&chain, &s, s.parse("010").unwrap()), 2);
        for x in 0..s.size() {
            assert_eq!(poset_weight(&anti, &s, x), (x as u32).count_ones() as usize);
        }
    }

    #[test]
    fn space_cap() {
        let f = PrimeField::new(3).unwrap();
        assert!(matches!(Space::new(f, 13, DEFAULT_SPACE_CAP), Err(Error::CapExceeded { .. })));
    }
}
