//! The Dowling operad E_+^{uG}: nonempty sets colored by a finite group,
//! normalized so the minimum label wears the identity color. Substitution
//! multiplies inner colors by the external color of their block.

use std::sync::Arc;

use crate::combinatorics::{Label, LabelSet};
use crate::instances::group::FiniteGroup;
use crate::species::{Assembly, Operad, Payload, Species, Structure};

pub struct DowlingOperad {
    group: Arc<FiniteGroup>,
}

impl DowlingOperad {
    pub fn new(group: Arc<FiniteGroup>) -> Self {
        DowlingOperad { group }
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    fn make(&self, labels: &LabelSet, colors: Vec<(Label, usize)>) -> Structure {
        Structure::new(self.id(), labels.clone(), Payload::Colors(colors))
    }

    fn colors_of(s: &Structure) -> &Vec<(Label, usize)> {
        match &s.payload {
            Payload::Colors(colors) => colors,
            _ => panic!("coloration payload expected on {s}"),
        }
    }

    fn color_of(s: &Structure, label: &Label) -> usize {
        Self::colors_of(s)
            .iter()
            .find(|(l, _)| l == label)
            .unwrap_or_else(|| panic!("label {label} is uncolored in {s}"))
            .1
    }
}

impl Species for DowlingOperad {
    fn id(&self) -> String {
        format!("dowling:{}", self.group.name())
    }
    fn is_positive(&self) -> bool {
        true
    }
    fn enumerate(&self, labels: &LabelSet) -> Vec<Structure> {
        if labels.is_empty() {
            return vec![];
        }
        let m = self.group.order();
        let rest: Vec<Label> = labels.iter().skip(1).cloned().collect();
        let min = labels.min_label().unwrap().clone();
        let total = m.pow(rest.len() as u32);
        (0..total)
            .map(|code| {
                let mut colors = vec![(min.clone(), 0)];
                let mut c = code;
                for l in &rest {
                    colors.push((l.clone(), c % m));
                    c /= m;
                }
                colors.sort();
                self.make(labels, colors)
            })
            .collect()
    }
    fn canonicalize(&self, payload: Payload, labels: &LabelSet) -> Payload {
        // renormalize so the (possibly new) minimum label has the identity
        let Payload::Colors(colors) = payload else {
            return payload;
        };
        let Some(min) = labels.min_label() else {
            return Payload::Colors(colors);
        };
        let base = colors
            .iter()
            .find(|(l, _)| l == min)
            .expect("minimum is colored")
            .1;
        let inv = self.group.inverse(base);
        Payload::Colors(
            colors
                .into_iter()
                .map(|(l, c)| (l, self.group.mul(c, inv)))
                .collect(),
        )
    }
}

impl Operad for DowlingOperad {
    fn identity_on(&self, label: &Label) -> Structure {
        self.make(
            &LabelSet::singleton(label.clone()),
            vec![(label.clone(), 0)],
        )
    }
    fn eta(&self, a: &Assembly, external: &Structure) -> Structure {
        // h(b) = f_B(b) * f_pi(B): the block's external color twists every
        // color inside the block
        let mut colors = Vec::new();
        for member in a.members() {
            let block = Label::block(member.labels.as_slice().to_vec());
            let outer = Self::color_of(external, &block);
            for (l, c) in Self::colors_of(member) {
                colors.push((l.clone(), self.group.mul(*c, outer)));
            }
        }
        colors.sort();
        self.make(&a.ground(), colors)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::checks::check_operad_axioms;
    use crate::combinatorics::Bijection;

    fn z(m: usize) -> DowlingOperad {
        DowlingOperad::new(Arc::new(FiniteGroup::cyclic(m)))
    }

    #[test]
    fn axioms() {
        assert!(check_operad_axioms(&z(1), 4).passed);
        assert!(check_operad_axioms(&z(2), 4).passed);
        assert!(check_operad_axioms(&z(3), 3).passed);
    }

    #[test]
    fn counts_are_group_powers() {
        for m in 1..=3 {
            for n in 1..=5 {
                assert_eq!(
                    z(m).enumerate(&LabelSet::atoms(n)).len(),
                    m.pow(n as u32 - 1)
                );
            }
        }
        assert_eq!(z(2).enumerate(&LabelSet::atoms(3)).len(), 4);
    }

    #[test]
    fn transport_renormalizes_the_new_minimum() {
        let op = z(3);
        let v = LabelSet::atoms(2);
        // colors 1 -> 0, 2 -> 1; swap the labels: 1 gets old color 1, must
        // renormalize back to identity at the minimum
        let s = op.enumerate(&v)[1].clone();
        let f: Bijection = [
            (Label::Atom(1), Label::Atom(2)),
            (Label::Atom(2), Label::Atom(1)),
        ]
        .into_iter()
        .collect();
        let moved = op.transport(&s, &f);
        assert!(op.enumerate(&v).contains(&moved));
        assert_eq!(DowlingOperad::color_of(&moved, &Label::Atom(1)), 0);
        // Z3: color difference flips from +1 to -1 = 2
        assert_eq!(DowlingOperad::color_of(&moved, &Label::Atom(2)), 2);
    }
}
