//! Orbits of the isometry group on `F_p^n`.

use crate::error::{Error, Result};
use crate::extension::{has_extension_property, ideal_classes, ExtensionMode};
use crate::isometry::generator_ops;
use crate::poset::Poset;
use crate::space::Space;
use crate::subset::Subset;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitPartition {
    /// Orbit id of every vector, by vector index.
    pub orbit_id: Vec<u32>,
    /// Least vector of each orbit; orbit ids follow this order, so orbit 0 is `{0}`.
    pub reps: Vec<usize>,
    pub sizes: Vec<usize>,
}

impl OrbitPartition {
    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    pub fn members(&self, orbit: usize) -> impl Iterator<Item = usize> + '_ {
        self.orbit_id.iter().enumerate().filter(move |(_, &o)| o as usize == orbit).map(|(x, _)| x)
    }

    /// Builds a partition from arbitrary class labels, renumbering classes
    /// by their least member.
    pub fn from_labels<T: Eq + std::hash::Hash + Clone>(labels: &[T]) -> OrbitPartition {
        let mut ids = std::collections::HashMap::new();
        let mut orbit_id = Vec::with_capacity(labels.len());
        let mut reps = Vec::new();
        let mut sizes = Vec::new();
        for (x, l) in labels.iter().enumerate() {
            let id = *ids.entry(l.clone()).or_insert_with(|| {
                reps.push(x);
                sizes.push(0);
                reps.len() - 1
            });
            sizes[id] += 1;
            orbit_id.push(id as u32);
        }
        OrbitPartition { orbit_id, reps, sizes }
    }
}

/// Breadth-first closure of every vector under the elementary generators.
pub fn orbit_partition(p: &Poset, space: &Space) -> Result<OrbitPartition> {
    if space.n() != p.n() {
        return Err(Error::DimensionMismatch(format!("space has {} coordinates, poset {}", space.n(), p.n())));
    }
    let f = space.field();
    let ops = generator_ops(p, f)?;
    let mut orbit_id = vec![u32::MAX; space.size()];
    let mut reps = Vec::new();
    let mut sizes = Vec::new();
    let mut queue = Vec::new();
    for start in 0..space.size() {
        if orbit_id[start] != u32::MAX {
            continue;
        }
        let id = reps.len() as u32;
        reps.push(start);
        orbit_id[start] = id;
        queue.clear();
        queue.push(start);
        let mut head = 0;
        while head < queue.len() {
            let x = queue[head];
            head += 1;
            let digits = space.digits(x);
            for op in &ops {
                let mut y = digits.clone();
                op.apply_digits(f, &mut y);
                let yi = space.index(&y);
                if orbit_id[yi] == u32::MAX {
                    orbit_id[yi] = id;
                    queue.push(yi);
                }
            }
        }
        sizes.push(queue.len());
    }
    Ok(OrbitPartition { orbit_id, reps, sizes })
}

/// Orbit size predicted for vectors `x` with `⟨x⟩ ≅ I`:
/// `(p-1)^{|M(I)|} · p^{|I \ M(I)|} · (number of ideals isomorphic to I)`.
pub fn orbit_size_formula(p: &Poset, prime: u32, ideal: Subset, cap: u64) -> Result<u128> {
    let top = p.maximal_elements(ideal)?;
    if !has_extension_property(p, ExtensionMode::Ie, cap)?.holds {
        return Err(Error::IeViolation);
    }
    let classes = ideal_classes(p, cap)?;
    let class = classes.class_of_ideal(ideal).expect("ideal was enumerated");
    let count = classes.members(class).count() as u128;
    let q = prime as u128;
    Ok((q - 1).pow(top.len() as u32) * q.pow(ideal.difference(top).len() as u32) * count)
}
