//! Canonical finite-set machinery: hierarchical labels, label sets, set
//! partitions, and the deterministic enumerators every species builds on.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

/// A label is either an atom or a block of labels, so structures over
/// partitions can reuse blocks as labels at the next level. Atoms sort
/// before blocks; atoms by value; blocks lexicographically, which for
/// canonically sorted blocks means by minima.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Label {
    Atom(i64),
    Block(Vec<Label>),
}

impl Label {
    /// Canonical block: sorted, duplicate-free.
    pub fn block(mut items: Vec<Label>) -> Label {
        items.sort();
        items.dedup();
        Label::Block(items)
    }

    pub fn is_atom(&self) -> bool {
        matches!(self, Label::Atom(_))
    }
}

impl fmt::Display for Label {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Atom(-1) => write!(out, "*"),
            Label::Atom(n) => write!(out, "{n}"),
            Label::Block(items) => {
                write!(out, "{{")?;
                for (i, item) in items.iter().enumerate() {
                    if i > 0 {
                        write!(out, ",")?;
                    }
                    write!(out, "{item}")?;
                }
                write!(out, "}}")
            }
        }
    }
}

/// Sorted duplicate-free set of labels.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct LabelSet {
    items: Vec<Label>,
}

impl LabelSet {
    pub fn new(mut items: Vec<Label>) -> Self {
        items.sort();
        items.dedup();
        LabelSet { items }
    }

    pub fn empty() -> Self {
        LabelSet { items: vec![] }
    }

    pub fn singleton(label: Label) -> Self {
        LabelSet { items: vec![label] }
    }

    /// The ground set {1, ..., n} of atoms.
    pub fn atoms(n: usize) -> Self {
        LabelSet {
            items: (1..=n as i64).map(Label::Atom).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn contains(&self, label: &Label) -> bool {
        self.items.binary_search(label).is_ok()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Label> {
        self.items.iter()
    }

    pub fn as_slice(&self) -> &[Label] {
        &self.items
    }

    pub fn min_label(&self) -> Option<&Label> {
        self.items.first()
    }

    pub fn union(&self, other: &LabelSet) -> LabelSet {
        let mut items = self.items.clone();
        items.extend(other.items.iter().cloned());
        LabelSet::new(items)
    }

    pub fn difference(&self, other: &LabelSet) -> LabelSet {
        LabelSet {
            items: self
                .items
                .iter()
                .filter(|l| !other.contains(l))
                .cloned()
                .collect(),
        }
    }

    pub fn is_disjoint(&self, other: &LabelSet) -> bool {
        self.items.iter().all(|l| !other.contains(l))
    }

    pub fn is_subset(&self, other: &LabelSet) -> bool {
        self.items.iter().all(|l| other.contains(l))
    }

    pub fn inserted(&self, label: Label) -> LabelSet {
        let mut items = self.items.clone();
        items.push(label);
        LabelSet::new(items)
    }
}

impl FromIterator<Label> for LabelSet {
    fn from_iter<I: IntoIterator<Item = Label>>(iter: I) -> Self {
        LabelSet::new(iter.into_iter().collect())
    }
}

impl fmt::Display for LabelSet {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(out, "{{")?;
        for (i, item) in self.items.iter().enumerate() {
            if i > 0 {
                write!(out, ",")?;
            }
            write!(out, "{item}")?;
        }
        write!(out, "}}")
    }
}

/// Partition of a ground set into disjoint nonempty blocks, blocks sorted
/// by their minima (which is lexicographic order on canonical blocks).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct SetPartition {
    blocks: Vec<LabelSet>,
}

impl SetPartition {
    pub fn new(mut blocks: Vec<LabelSet>) -> Result<Self> {
        if blocks.iter().any(LabelSet::is_empty) {
            return Err(Error::Invalid("partition block is empty".into()));
        }
        blocks.sort();
        for pair in blocks.windows(2) {
            if !pair[0].is_disjoint(&pair[1]) {
                return Err(Error::Invalid("partition blocks overlap".into()));
            }
        }
        let total: usize = blocks.iter().map(LabelSet::len).sum();
        let ground: LabelSet = blocks.iter().flat_map(|b| b.iter().cloned()).collect();
        if ground.len() != total {
            return Err(Error::Invalid("partition blocks overlap".into()));
        }
        Ok(SetPartition { blocks })
    }

    pub fn empty() -> Self {
        SetPartition { blocks: vec![] }
    }

    pub fn singletons(ground: &LabelSet) -> Self {
        SetPartition {
            blocks: ground
                .iter()
                .map(|l| LabelSet::singleton(l.clone()))
                .collect(),
        }
    }

    pub fn blocks(&self) -> &[LabelSet] {
        &self.blocks
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    pub fn ground(&self) -> LabelSet {
        self.blocks
            .iter()
            .flat_map(|b| b.iter().cloned())
            .collect()
    }

    pub fn block_containing(&self, label: &Label) -> Option<&LabelSet> {
        self.blocks.iter().find(|b| b.contains(label))
    }

    /// Each block as a single `Label::Block`, forming the ground set one
    /// level up.
    pub fn block_labels(&self) -> LabelSet {
        self.blocks
            .iter()
            .map(|b| Label::block(b.as_slice().to_vec()))
            .collect()
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, block) in self.blocks.iter().enumerate() {
            if i > 0 {
                write!(out, "|")?;
            }
            write!(out, "{block}")?;
        }
        Ok(())
    }
}

/// All 2^|v| ordered decompositions (V1, V2), in binary-counter order:
/// bit i of the counter puts element i into V1.
pub fn subsets(v: &LabelSet) -> Vec<(LabelSet, LabelSet)> {
    let n = v.len();
    assert!(n < usize::BITS as usize, "ground set too large");
    (0..(1usize << n))
        .map(|mask| {
            let mut v1 = Vec::new();
            let mut v2 = Vec::new();
            for (i, label) in v.iter().enumerate() {
                if mask & (1 << i) != 0 {
                    v1.push(label.clone());
                } else {
                    v2.push(label.clone());
                }
            }
            (LabelSet::new(v1), LabelSet::new(v2))
        })
        .collect()
}

/// All set partitions of v, in restricted-growth-string order.
pub fn set_partitions(v: &LabelSet) -> Vec<SetPartition> {
    let labels = v.as_slice();
    if labels.is_empty() {
        return vec![SetPartition::empty()];
    }
    let n = labels.len();
    let mut out = Vec::new();
    // rgs[i] = block index of labels[i]; rgs[i] <= max(rgs[..i]) + 1
    let mut rgs = vec![0usize; n];
    loop {
        let num_blocks = rgs.iter().max().unwrap() + 1;
        let mut blocks: Vec<Vec<Label>> = vec![Vec::new(); num_blocks];
        for (i, &b) in rgs.iter().enumerate() {
            blocks[b].push(labels[i].clone());
        }
        out.push(
            SetPartition::new(blocks.into_iter().map(LabelSet::new).collect())
                .expect("RGS blocks are disjoint"),
        );
        // advance to the next restricted growth string
        let mut i = n;
        loop {
            if i == 1 {
                return out;
            }
            i -= 1;
            let cap = rgs[..i].iter().max().unwrap() + 1;
            if rgs[i] < cap {
                rgs[i] += 1;
                for slot in rgs[i + 1..].iter_mut() {
                    *slot = 0;
                }
                break;
            }
        }
    }
}

/// True iff every block of p1 is contained in a block of p2.
pub fn refine_order(p1: &SetPartition, p2: &SetPartition) -> Result<bool> {
    if p1.ground() != p2.ground() {
        return Err(Error::GroundSetMismatch);
    }
    Ok(p1.blocks().iter().all(|b| {
        b.min_label()
            .and_then(|m| p2.block_containing(m))
            .is_some_and(|c| b.is_subset(c))
    }))
}

/// A label bijection, as an explicit finite map.
pub type Bijection = BTreeMap<Label, Label>;

pub fn apply_bijection(f: &Bijection, label: &Label) -> Label {
    f.get(label)
        .cloned()
        .unwrap_or_else(|| panic!("label {label} not in bijection domain"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bell_oracle(n: usize) -> u64 {
        // Bell(n) = sum_k binom(n-1,k) Bell(k)
        let mut bell = vec![1u64];
        for m in 1..=n {
            let mut acc = 0u64;
            let mut binom = 1u64;
            for (k, b) in bell.iter().enumerate() {
                acc += binom * b;
                binom = binom * (m as u64 - 1 - k as u64) / (k as u64 + 1);
            }
            bell.push(acc);
        }
        bell[n]
    }

    fn stirling2_oracle(n: usize, k: usize) -> u64 {
        if n == 0 {
            return (k == 0) as u64;
        }
        if k == 0 || k > n {
            return 0;
        }
        k as u64 * stirling2_oracle(n - 1, k) + stirling2_oracle(n - 1, k - 1)
    }

    #[test]
    fn label_order() {
        let a1 = Label::Atom(1);
        let a2 = Label::Atom(2);
        let b12 = Label::block(vec![a1.clone(), a2.clone()]);
        let b2 = Label::block(vec![a2.clone()]);
        assert!(a1 < a2);
        assert!(a2 < b12); // atoms before blocks
        assert!(b12 < b2); // blocks by minima
        assert_eq!(
            Label::block(vec![a2.clone(), a1.clone(), a1.clone()]),
            Label::block(vec![a1.clone(), a2.clone()])
        );
        assert_eq!(b12.to_string(), "{1,2}");
        assert_eq!(Label::Atom(-1).to_string(), "*");
    }

    #[test]
    fn label_set_basics() {
        let v = LabelSet::atoms(3);
        assert_eq!(v.len(), 3);
        assert_eq!(v.min_label(), Some(&Label::Atom(1)));
        assert_eq!(v.to_string(), "{1,2,3}");
        let w = LabelSet::new(vec![Label::Atom(3), Label::Atom(3), Label::Atom(5)]);
        assert_eq!(w.len(), 2);
        assert_eq!(v.union(&w).len(), 4);
        assert_eq!(v.difference(&w), LabelSet::new(vec![Label::Atom(1), Label::Atom(2)]));
        assert!(!v.is_disjoint(&w));
        assert!(w.difference(&v).is_subset(&w));
    }

    #[test]
    fn subset_counts_and_determinism() {
        assert_eq!(subsets(&LabelSet::atoms(2)).len(), 4);
        assert_eq!(subsets(&LabelSet::empty()).len(), 1);
        assert_eq!(subsets(&LabelSet::atoms(3)).len(), 8);
        let v = LabelSet::atoms(4);
        assert_eq!(subsets(&v), subsets(&v));
        for (v1, v2) in subsets(&v) {
            assert!(v1.is_disjoint(&v2));
            assert_eq!(v1.union(&v2), v);
        }
    }

    #[test]
    fn partition_counts_match_bell_and_stirling() {
        for n in 0..=8 {
            let parts = set_partitions(&LabelSet::atoms(n));
            assert_eq!(parts.len() as u64, bell_oracle(n), "Bell({n})");
            for k in 0..=n {
                let count = parts.iter().filter(|p| p.num_blocks() == k).count();
                assert_eq!(count as u64, stirling2_oracle(n, k), "S({n},{k})");
            }
        }
    }

    #[test]
    fn partition_enumeration_deterministic() {
        let v = LabelSet::atoms(5);
        assert_eq!(set_partitions(&v), set_partitions(&v));
        assert_eq!(set_partitions(&LabelSet::empty()), vec![SetPartition::empty()]);
    }

    #[test]
    fn partition_canonical_form() {
        let p = SetPartition::new(vec![
            LabelSet::new(vec![Label::Atom(3)]),
            LabelSet::new(vec![Label::Atom(2), Label::Atom(1)]),
        ])
        .unwrap();
        assert_eq!(p.to_string(), "{1,2}|{3}");
        assert_eq!(p.ground(), LabelSet::atoms(3));
        assert!(SetPartition::new(vec![LabelSet::empty()]).is_err());
        assert!(SetPartition::new(vec![
            LabelSet::atoms(2),
            LabelSet::new(vec![Label::Atom(2)])
        ])
        .is_err());
        assert_eq!(
            p.block_containing(&Label::Atom(2)),
            Some(&LabelSet::new(vec![Label::Atom(1), Label::Atom(2)]))
        );
        assert_eq!(p.block_labels().len(), 2);
    }

    #[test]
    fn refinement() {
        let v = LabelSet::atoms(3);
        let parts = set_partitions(&v);
        let finest = SetPartition::singletons(&v);
        let coarsest = SetPartition::new(vec![v.clone()]).unwrap();
        for p in &parts {
            assert!(refine_order(&finest, p).unwrap());
            assert!(refine_order(p, &coarsest).unwrap());
            assert!(refine_order(p, p).unwrap());
        }
        let p12 = SetPartition::new(vec![
            LabelSet::new(vec![Label::Atom(1), Label::Atom(2)]),
            LabelSet::singleton(Label::Atom(3)),
        ])
        .unwrap();
        let p13 = SetPartition::new(vec![
            LabelSet::new(vec![Label::Atom(1), Label::Atom(3)]),
            LabelSet::singleton(Label::Atom(2)),
        ])
        .unwrap();
        assert!(!refine_order(&p12, &p13).unwrap());
        assert_eq!(
            refine_order(&p12, &SetPartition::singletons(&LabelSet::atoms(2))),
            Err(Error::GroundSetMismatch)
        );
    }
}
