//! The cycle operad C. A cyclic permutation is stored as the linear order
//! that starts at its minimum label; substitution splices the inner linear
//! orders around the external cycle.

use itertools::Itertools;

use crate::combinatorics::{Label, LabelSet};
use crate::instances::lists::splice_lists;
use crate::species::{Assembly, Operad, Payload, Species, Structure};

pub struct CyclesOperad;

fn seq_of(s: &Structure) -> &Vec<Label> {
    match &s.payload {
        Payload::Seq(seq) => seq,
        _ => panic!("cycle payload expected on {s}"),
    }
}

/// Rotate a nonempty sequence so it starts at its minimum entry.
fn rotate_to_min(seq: Vec<Label>) -> Vec<Label> {
    let min_pos = seq
        .iter()
        .enumerate()
        .min_by(|(_, a), (_, b)| a.cmp(b))
        .map(|(i, _)| i)
        .unwrap_or(0);
    let mut out = seq;
    out.rotate_left(min_pos);
    out
}

impl Species for CyclesOperad {
    fn id(&self) -> String {
        "C".into()
    }
    fn is_positive(&self) -> bool {
        true
    }
    fn enumerate(&self, labels: &LabelSet) -> Vec<Structure> {
        if labels.is_empty() {
            return vec![];
        }
        let first = labels.min_label().unwrap().clone();
        let rest: Vec<Label> = labels.iter().skip(1).cloned().collect();
        rest.iter()
            .cloned()
            .permutations(rest.len())
            .map(|perm| {
                let mut seq = vec![first.clone()];
                seq.extend(perm);
                Structure::new("C", labels.clone(), Payload::Seq(seq))
            })
            .collect()
    }
    fn canonicalize(&self, payload: Payload, _labels: &LabelSet) -> Payload {
        match payload {
            Payload::Seq(seq) if !seq.is_empty() => Payload::Seq(rotate_to_min(seq)),
            other => other,
        }
    }
}

impl Operad for CyclesOperad {
    fn identity_on(&self, label: &Label) -> Structure {
        Structure::new(
            "C",
            LabelSet::singleton(label.clone()),
            Payload::Seq(vec![label.clone()]),
        )
    }
    fn eta(&self, a: &Assembly, external: &Structure) -> Structure {
        // the external cycle starts at the block holding the overall minimum,
        // and that block's list starts at the minimum, so the splice is
        // already in canonical rotation
        let seq = rotate_to_min(splice_lists(a, seq_of(external)));
        Structure::new("C", a.ground(), Payload::Seq(seq))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::checks::check_operad_axioms;
    use crate::combinatorics::Bijection;
    use crate::species::assemblies_over;

    #[test]
    fn axioms() {
        assert!(check_operad_axioms(&CyclesOperad, 4).passed);
    }

    #[test]
    fn counts_are_unsigned_stirling() {
        // assemblies of cycles = permutations by cycle type
        let v = LabelSet::atoms(4);
        let assemblies = assemblies_over(&CyclesOperad, &v);
        assert_eq!(assemblies.len(), 24);
        let with_k = |k| assemblies.iter().filter(|a| a.len() == k).count();
        assert_eq!(with_k(2), 11); // |s(4,2)|
        assert_eq!(with_k(1), 6);
        assert_eq!(with_k(3), 6);
    }

    #[test]
    fn transport_rotates_to_minimum() {
        let op = CyclesOperad;
        let v = LabelSet::atoms(3);
        // the cycle (1 3 2), sent through 1->3, 2->1, 3->2, is (3 2 1) = (1 3 2)
        let s = Structure::new(
            "C",
            v.clone(),
            Payload::Seq(vec![Label::Atom(1), Label::Atom(3), Label::Atom(2)]),
        );
        let f: Bijection = [
            (Label::Atom(1), Label::Atom(3)),
            (Label::Atom(2), Label::Atom(1)),
            (Label::Atom(3), Label::Atom(2)),
        ]
        .into_iter()
        .collect();
        let moved = op.transport(&s, &f);
        assert_eq!(moved.to_string(), "(1,3,2)");
        assert!(op.enumerate(&v).contains(&moved));
    }
}
