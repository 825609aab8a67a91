//! Linear orders: the concatenation monoid L, its r-fold version L^r, and
//! the positive-list operad L_+.

use itertools::Itertools;

use crate::combinatorics::{Label, LabelSet};
use crate::species::{Assembly, Monoid, Operad, Payload, Species, Structure};

fn seq_of(s: &Structure) -> &Vec<Label> {
    match &s.payload {
        Payload::Seq(seq) => seq,
        _ => panic!("list payload expected on {s}"),
    }
}

/// L: all linear orders; product is concatenation.
pub struct ListsMonoid;

impl Species for ListsMonoid {
    fn id(&self) -> String {
        "L".into()
    }
    fn enumerate(&self, labels: &LabelSet) -> Vec<Structure> {
        labels
            .iter()
            .cloned()
            .permutations(labels.len())
            .map(|perm| Structure::new("L", labels.clone(), Payload::Seq(perm)))
            .collect()
    }
}

impl Monoid for ListsMonoid {
    fn identity_element(&self) -> Structure {
        Structure::new("L", LabelSet::empty(), Payload::Seq(vec![]))
    }
    fn nu(&self, m1: &Structure, m2: &Structure) -> Structure {
        let seq = seq_of(m1).iter().chain(seq_of(m2)).cloned().collect();
        Structure::new("L", m1.labels.union(&m2.labels), Payload::Seq(seq))
    }
}

/// L^r: r-tuples of linear orders jointly covering the set; product is
/// componentwise concatenation.
pub struct ListTupleMonoid(pub usize);

impl ListTupleMonoid {
    fn make(&self, labels: LabelSet, seqs: Vec<Vec<Label>>) -> Structure {
        Structure::new(
            self.id(),
            labels,
            Payload::Tuple(seqs.into_iter().map(Payload::Seq).collect()),
        )
    }

    fn seqs_of(s: &Structure) -> Vec<&Vec<Label>> {
        match &s.payload {
            Payload::Tuple(parts) => parts
                .iter()
                .map(|p| match p {
                    Payload::Seq(seq) => seq,
                    _ => panic!("list components expected"),
                })
                .collect(),
            _ => panic!("tuple payload expected on {s}"),
        }
    }
}

impl Species for ListTupleMonoid {
    fn id(&self) -> String {
        format!("L_r:{}", self.0)
    }
    fn enumerate(&self, labels: &LabelSet) -> Vec<Structure> {
        // distribute the labels over r slots, then order each slot freely
        let r = self.0;
        let n = labels.len();
        let mut out = Vec::new();
        let total = r.pow(n as u32);
        for code in 0..total {
            let mut slots: Vec<Vec<Label>> = vec![Vec::new(); r];
            let mut c = code;
            for l in labels.iter() {
                slots[c % r].push(l.clone());
                c /= r;
            }
            for parts in slots
                .iter()
                .map(|slot| slot.iter().cloned().permutations(slot.len()))
                .multi_cartesian_product()
            {
                out.push(self.make(labels.clone(), parts));
            }
        }
        out
    }
}

impl Monoid for ListTupleMonoid {
    fn identity_element(&self) -> Structure {
        self.make(LabelSet::empty(), vec![vec![]; self.0])
    }
    fn nu(&self, m1: &Structure, m2: &Structure) -> Structure {
        let (s1, s2) = (Self::seqs_of(m1), Self::seqs_of(m2));
        let seqs = s1
            .iter()
            .zip(s2.iter())
            .map(|(a, b)| a.iter().chain(b.iter()).cloned().collect())
            .collect();
        self.make(m1.labels.union(&m2.labels), seqs)
    }
}

/// L_+: nonempty linear orders; substitution concatenates the inner lists
/// in the order of the external list.
pub struct PositiveListsOperad;

impl Species for PositiveListsOperad {
    fn id(&self) -> String {
        "L_plus".into()
    }
    fn is_positive(&self) -> bool {
        true
    }
    fn enumerate(&self, labels: &LabelSet) -> Vec<Structure> {
        if labels.is_empty() {
            return vec![];
        }
        labels
            .iter()
            .cloned()
            .permutations(labels.len())
            .map(|perm| Structure::new("L_plus", labels.clone(), Payload::Seq(perm)))
            .collect()
    }
}

/// Concatenate assembly member lists following an external list of blocks.
pub fn splice_lists(a: &Assembly, external_order: &[Label]) -> Vec<Label> {
    external_order
        .iter()
        .flat_map(|block| {
            let member = a
                .member_for_block(block)
                .unwrap_or_else(|| panic!("no assembly member for block {block}"));
            seq_of(member).clone()
        })
        .collect()
}

impl Operad for PositiveListsOperad {
    fn identity_on(&self, label: &Label) -> Structure {
        Structure::new(
            "L_plus",
            LabelSet::singleton(label.clone()),
            Payload::Seq(vec![label.clone()]),
        )
    }
    fn eta(&self, a: &Assembly, external: &Structure) -> Structure {
        Structure::new(
            "L_plus",
            a.ground(),
            Payload::Seq(splice_lists(a, seq_of(external))),
        )
    }
}
