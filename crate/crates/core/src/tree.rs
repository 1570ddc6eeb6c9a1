//! Level-regular rooted trees, their canonical bitstring labels, and the
//! extension of ideal isomorphisms to tree automorphisms.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::iso::check_isomorphism;
use crate::poset::{Perm, Poset};
use crate::subset::{Subset, MAX_ELEMENTS};

/// A level-regular rooted tree: every vertex at depth `s` has `degrees[s]`
/// children. Vertices are numbered breadth first in label order, root first.
#[derive(Clone, Debug)]
pub struct TreePoset {
    degrees: Vec<usize>,
    poset: Poset,
    labels: Vec<Vec<usize>>,
    by_label: HashMap<Vec<usize>, usize>,
}

pub fn build_tree(degrees: &[usize]) -> Result<TreePoset> {
    if degrees.is_empty() || degrees.contains(&0) {
        return Err(Error::Domain("degree sequence must be nonempty and positive".into()));
    }
    let mut labels: Vec<Vec<usize>> = vec![Vec::new()];
    let mut frontier = vec![0usize];
    let mut rel = Vec::new();
    for &d in degrees {
        let mut next = Vec::new();
        for &parent in &frontier {
            for digit in 0..d {
                if labels.len() >= MAX_ELEMENTS {
                    return Err(Error::SizeOverflow(tree_size(degrees)));
                }
                let mut label = labels[parent].clone();
                label.push(digit);
                labels.push(label);
                rel.push((parent + 1, labels.len()));
                next.push(labels.len() - 1);
            }
        }
        frontier = next;
    }
    let poset = Poset::new(labels.len(), &rel)?;
    let by_label = labels.iter().cloned().enumerate().map(|(v, l)| (l, v)).collect();
    Ok(TreePoset { degrees: degrees.to_vec(), poset, labels, by_label })
}

/// `1 + d_0 + d_0 d_1 + ...`, saturating.
pub fn tree_size(degrees: &[usize]) -> usize {
    let mut total = 1usize;
    let mut layer = 1usize;
    for &d in degrees {
        layer = layer.saturating_mul(d);
        total = total.saturating_add(layer);
    }
    total
}

impl TreePoset {
    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    /// Digit string of a vertex; the root has the empty label.
    pub fn label(&self, v: usize) -> &[usize] {
        &self.labels[v]
    }

    pub fn vertex(&self, label: &[usize]) -> Option<usize> {
        self.by_label.get(label).copied()
    }

    fn children(&self, v: usize) -> Vec<usize> {
        let depth = self.labels[v].len();
        let d = self.degrees.get(depth).copied().unwrap_or(0);
        (0..d)
            .map(|j| {
                let mut l = self.labels[v].clone();
                l.push(j);
                self.by_label[&l]
            })
            .collect()
    }
}

/// Canonical label of a rooted tree: a leaf is `01`, an inner vertex is `0`
/// followed by its children's labels in increasing string order, then `1`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TreeLabel(String);

impl TreeLabel {
    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn into_string(self) -> String {
        self.0
    }

    /// Balanced: as many 1s as 0s and no prefix with more 1s than 0s.
    pub fn is_balanced(&self) -> bool {
        let mut depth = 0i64;
        for c in self.0.chars() {
            depth += if c == '0' { 1 } else { -1 };
            if depth < 0 {
                return false;
            }
        }
        depth == 0
    }
}

impl fmt::Display for TreeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// Label of the subposet induced on `s`, which must be a rooted tree (or empty).
pub fn ahu_label(p: &Poset, s: Subset) -> Result<TreeLabel> {
    p.check_subset(s)?;
    if s.is_empty() {
        return Ok(TreeLabel(String::new()));
    }
    let roots = p.minimal_in(s);
    if roots.len() != 1 {
        return Err(Error::NotATree(format!("{s} has {} minimal elements", roots.len())));
    }
    let mut children: Vec<Vec<usize>> = vec![Vec::new(); p.n()];
    for v in s.iter() {
        let below = p.down(v).intersection(s).without(v);
        if below.is_empty() {
            continue;
        }
        let parents = p.maximal_in(below);
        if parents.len() != 1 {
            return Err(Error::NotATree(format!("{} has {} immediate predecessors", v + 1, parents.len())));
        }
        children[parents.first().unwrap()].push(v);
    }
    fn rec(v: usize, children: &[Vec<usize>]) -> String {
        let mut parts: Vec<String> = children[v].iter().map(|&c| rec(c, children)).collect();
        parts.sort();
        format!("0{}1", parts.concat())
    }
    Ok(TreeLabel(rec(roots.first().unwrap(), &children)))
}

/// Extends an order isomorphism `φ: I → J` between ideals of a level-regular
/// tree to an automorphism of the whole tree.
///
/// A vertex `a` outside `I` hangs below its deepest ancestor `a_I` in `I`
/// through a child digit outside `I`. That digit is sent to the child digit of
/// `φ(a_I)` of the same rank among the digits outside `J`; the rest of the
/// label is copied.
pub fn extend_ideal_isomorphism(t: &TreePoset, i: Subset, j: Subset, phi: &[(usize, usize)]) -> Result<Perm> {
    let p = &t.poset;
    for s in [i, j] {
        if !p.is_ideal(s) {
            return Err(Error::NotAnIdeal(s.to_string()));
        }
    }
    check_isomorphism(p, i, j, phi)?;
    let n = p.n();
    if i.is_empty() {
        return Ok((0..n).collect());
    }
    let mut image = vec![usize::MAX; n];
    for &(a, b) in phi {
        image[a] = b;
    }
    let outside = |v: usize, ideal: Subset| -> Vec<usize> {
        t.children(v).into_iter().filter(|c| !ideal.contains(*c)).map(|c| *t.labels[c].last().unwrap()).collect()
    };
    for a in 0..n {
        if i.contains(a) {
            continue;
        }
        let label = &t.labels[a];
        let cut = (0..label.len()).rev().find(|&k| i.contains(t.by_label[&label[..k]])).expect("root lies in I");
        let a_i = t.by_label[&label[..cut]];
        let target = image[a_i];
        let from = outside(a_i, i);
        let to = outside(target, j);
        let rank = from.iter().position(|&d| d == label[cut]).expect("first step leaves I");
        let mut new_label = t.labels[target].clone();
        new_label.push(to[rank]);
        new_label.extend_from_slice(&label[cut + 1..]);
        image[a] = t.by_label[&new_label];
    }
    debug_assert!(p.is_automorphism(&image));
    Ok(image)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(items: &[usize]) -> Subset {
        Subset::from_one_based(items)
    }

    #[test]
    fn builds_breadth_first() {
        let t = build_tree(&[2, 2]).unwrap();
        assert_eq!(t.poset().covers_one_based(), vec![(1, 2), (1, 3), (2, 4), (2, 5), (3, 6), (3, 7)]);
        assert_eq!(t.label(4), &[0, 1]);
        assert_eq!(t.vertex(&[1, 0]), Some(5));
        assert_eq!(build_tree(&[2]).unwrap().poset().n(), 3);
        assert_eq!(build_tree(&[3, 2]).unwrap().poset().n(), 10);
        assert_eq!(tree_size(&[3, 2]), 10);
        assert!(matches!(build_tree(&[2; 6]), Err(Error::SizeOverflow(127))));
        assert!(build_tree(&[]).is_err());
    }

    #[test]
    fn labels_are_prefix_consistent() {
        let t = build_tree(&[2, 3, 2]).unwrap();
        for a in 0..t.poset().n() {
            for b in 0..t.poset().n() {
                assert_eq!(t.poset().leq(a, b), t.label(b).starts_with(t.label(a)));
            }
        }
    }

    #[test]
    fn ahu_examples() {
        let t = build_tree(&[2, 2]).unwrap();
        let p = t.poset();
        assert_eq!(ahu_label(p, s(&[1])).unwrap().as_str(), "01");
        assert_eq!(ahu_label(p, s(&[1, 2, 3])).unwrap().as_str(), "001011");
        let full = ahu_label(p, p.ground()).unwrap();
        assert_eq!(full.as_str(), "00010110010111");
        assert!(full.is_balanced());
        assert_eq!(ahu_label(p, Subset::EMPTY).unwrap().as_str(), "");
        assert_eq!(ahu_label(p, s(&[1, 2, 4])).unwrap(), ahu_label(p, s(&[1, 3, 7])).unwrap());
    }

    #[test]
    fn ahu_rejects_non_trees() {
        let n_poset = Poset::new(4, &[(1, 3), (2, 3), (2, 4)]).unwrap();
        assert!(matches!(ahu_label(&n_poset, s(&[1, 2])), Err(Error::NotATree(_))));
        let diamond = Poset::new(4, &[(1, 2), (1, 3), (2, 4), (3, 4)]).unwrap();
        assert!(matches!(ahu_label(&diamond, diamond.ground()), Err(Error::NotATree(_))));
    }

    #[test]
    fn extension_swaps_subtrees() {
        let t = build_tree(&[2, 2]).unwrap();
        let phi = [(0, 0), (1, 2)];
        let ext = extend_ideal_isomorphism(&t, s(&[1, 2]), s(&[1, 3]), &phi).unwrap();
        assert_eq!(ext, vec![0, 2, 1, 5, 6, 3, 4]);
        let id = extend_ideal_isomorphism(&t, Subset::EMPTY, Subset::EMPTY, &[]).unwrap();
        assert_eq!(id, (0..7).collect::<Vec<_>>());
    }

    #[test]
    fn extension_rejects_non_isomorphisms() {
        let t = build_tree(&[2, 2]).unwrap();
        let bad = [(0, 1), (1, 0)];
        assert!(matches!(
            extend_ideal_isomorphism(&t, s(&[1, 2]), s(&[1, 2]), &bad),
            Err(Error::NotAnIsomorphism(_))
        ));
    }
}
