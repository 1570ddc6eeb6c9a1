//! Ordinal and direct sums and products of posets.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::extension::{has_extension_property, ExtensionMode, ExtensionReport};
use crate::poset::Poset;
use crate::shape::ShapeLabel;
use crate::subset::{Subset, MAX_ELEMENTS};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CombineKind {
    OrdinalSum,
    DirectSum,
    OrdinalProduct,
    DirectProduct,
}

impl CombineKind {
    pub const ALL: [CombineKind; 4] = [
        CombineKind::OrdinalSum,
        CombineKind::DirectSum,
        CombineKind::OrdinalProduct,
        CombineKind::DirectProduct,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CombineKind::OrdinalSum => "ordinal_sum",
            CombineKind::DirectSum => "direct_sum",
            CombineKind::OrdinalProduct => "ordinal_product",
            CombineKind::DirectProduct => "direct_product",
        }
    }
}

impl fmt::Display for CombineKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CombineKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let norm = s.replace('-', "_");
        CombineKind::ALL
            .into_iter()
            .find(|k| k.name() == norm)
            .ok_or_else(|| Error::Usage(format!("unknown combination kind `{s}`")))
    }
}

/// 1-based index of the pair `(i, j)` in a product with a second factor of size `m`.
pub fn pair_index(i: usize, j: usize, m: usize) -> usize {
    (i - 1) * m + j
}

/// Inverse of [`pair_index`].
pub fn pair_of(index: usize, m: usize) -> (usize, usize) {
    ((index - 1) / m + 1, (index - 1) % m + 1)
}

/// Builds `P * Q`. Sums live on `n + m` points with `Q` shifted by `n`;
/// products live on `n * m` points indexed by [`pair_index`].
///
/// The ordinal product relates `(i, j) ⪯ (i', j')` exactly when `i = i'` and
/// `j ⪯ j'` in `Q`, so it is `n` disjoint copies of `Q`.
pub fn combine(p: &Poset, q: &Poset, kind: CombineKind) -> Result<Poset> {
    let (n, m) = (p.n(), q.n());
    let size = match kind {
        CombineKind::OrdinalSum | CombineKind::DirectSum => n + m,
        _ => n * m,
    };
    if size > MAX_ELEMENTS {
        return Err(Error::SizeOverflow(size));
    }
    let mut rel = Vec::new();
    match kind {
        CombineKind::OrdinalSum | CombineKind::DirectSum => {
            rel.extend(p.covers_one_based());
            rel.extend(q.covers_one_based().into_iter().map(|(i, j)| (i + n, j + n)));
            if kind == CombineKind::OrdinalSum {
                for i in 1..=n {
                    for j in n + 1..=n + m {
                        rel.push((i, j));
                    }
                }
            }
        }
        CombineKind::OrdinalProduct => {
            for i in 1..=n {
                for (j, j2) in q.covers_one_based() {
                    rel.push((pair_index(i, j, m), pair_index(i, j2, m)));
                }
            }
        }
        CombineKind::DirectProduct => {
            for i in 0..n {
                for i2 in 0..n {
                    for j in 0..m {
                        for j2 in 0..m {
                            if (i, j) != (i2, j2) && p.leq(i, i2) && q.leq(j, j2) {
                                rel.push((pair_index(i + 1, j + 1, m), pair_index(i2 + 1, j2 + 1, m)));
                            }
                        }
                    }
                }
            }
        }
    }
    Poset::new(size, &rel)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InheritanceRow {
    pub kind: CombineKind,
    pub size: usize,
    pub report: ExtensionReport,
}

/// The IE verdict for each of the four combinations of `p` and `q`.
pub fn ie_inheritance_report(p: &Poset, q: &Poset, cap: u64) -> Result<Vec<InheritanceRow>> {
    CombineKind::ALL
        .into_iter()
        .map(|kind| {
            let c = combine(p, q, kind)?;
            Ok(InheritanceRow { kind, size: c.n(), report: has_extension_property(&c, ExtensionMode::Ie, cap)? })
        })
        .collect()
}

pub type ShapeFn<'a> = &'a dyn Fn(Subset) -> Result<ShapeLabel>;

/// Shape of an ideal of the ordinal sum `P ⊕ Q`, assembled from shapes on
/// the summands: `(0, shape_Q(I_m))` if `I` reaches into `Q`, else
/// `(1, shape_P(I_n))`.
pub fn shape_ordinal_sum(p: &Poset, q: &Poset, shape_p: ShapeFn, shape_q: ShapeFn, ideal: Subset) -> Result<ShapeLabel> {
    let sum = combine(p, q, CombineKind::OrdinalSum)?;
    if !sum.is_ideal(ideal) {
        return Err(Error::NotAnIdeal(ideal.to_string()));
    }
    let n = p.n();
    let lower = ideal.intersection(Subset::full(n));
    let upper = Subset::from_bits(ideal.bits() >> n);
    Ok(if upper.is_empty() {
        ShapeLabel::OrdinalSum(1, Box::new(shape_p(lower)?))
    } else {
        ShapeLabel::OrdinalSum(0, Box::new(shape_q(upper)?))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(items: &[usize]) -> Subset {
        Subset::from_one_based(items)
    }

    #[test]
    fn ordinal_sum_of_antichains_is_hierarchical() {
        let a = Poset::antichain(2).unwrap();
        let h = combine(&a, &a, CombineKind::OrdinalSum).unwrap();
        assert_eq!(h.covers_one_based(), vec![(1, 3), (1, 4), (2, 3), (2, 4)]);
    }

    #[test]
    fn direct_sum_of_chains_is_nrt() {
        let c = Poset::chain(2).unwrap();
        let d = combine(&c, &c, CombineKind::DirectSum).unwrap();
        assert_eq!(d.covers_one_based(), vec![(1, 2), (3, 4)]);
    }

    #[test]
    fn direct_product_relations() {
        let c = Poset::chain(2).unwrap();
        let v = Poset::new(3, &[(1, 2), (1, 3)]).unwrap();
        let d = combine(&c, &v, CombineKind::DirectProduct).unwrap();
        assert_eq!(d.n(), 6);
        let leq = |a: (usize, usize), b: (usize, usize)| d.leq(pair_index(a.0, a.1, 3) - 1, pair_index(b.0, b.1, 3) - 1);
        assert!(leq((1, 2), (2, 3)) == false);
        assert!(leq((1, 2), (2, 2)));
        assert!(leq((1, 3), (2, 3)));
        assert!(leq((1, 1), (2, 3)));
        assert_eq!(d.covers().len(), 7);
    }

    #[test]
    fn ordinal_product_is_disjoint_copies() {
        let a = Poset::antichain(2).unwrap();
        let v = Poset::new(3, &[(1, 2), (1, 3)]).unwrap();
        let d = combine(&a, &v, CombineKind::OrdinalProduct).unwrap();
        assert_eq!(d.covers_one_based(), vec![(1, 2), (1, 3), (4, 5), (4, 6)]);
    }

    #[test]
    fn kinds_parse() {
        assert_eq!("ordinal-sum".parse::<CombineKind>().unwrap(), CombineKind::OrdinalSum);
        assert!("sum".parse::<CombineKind>().is_err());
        assert_eq!(pair_of(pair_index(2, 3, 3), 3), (2, 3));
    }

    #[test]
    fn ordinal_sum_shape_cases() {
        let a = Poset::antichain(2).unwrap();
        let card = |i: Subset| Ok(ShapeLabel::Count(i.len()));
        let shape = |i| shape_ordinal_sum(&a, &a, &card, &card, i).unwrap();
        assert_eq!(shape(s(&[])), ShapeLabel::OrdinalSum(1, Box::new(ShapeLabel::Count(0))));
        assert_eq!(shape(s(&[1, 2, 3])), ShapeLabel::OrdinalSum(0, Box::new(ShapeLabel::Count(1))));
        assert_eq!(shape(s(&[1])), ShapeLabel::OrdinalSum(1, Box::new(ShapeLabel::Count(1))));
        assert!(shape_ordinal_sum(&a, &a, &card, &card, s(&[3])).is_err());
    }
}
