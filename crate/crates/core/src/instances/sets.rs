//! Set-like species: E, E_k, the ballot monoid E^r, the parity species
//! E^ev / E^odd, the positive-set operad E_+, and the one-point monoid.

use crate::combinatorics::{Label, LabelSet};
use crate::species::{Assembly, Monoid, Operad, Payload, Species, Structure};

/// E: exactly one structure on every finite set; product is disjoint union.
pub struct SetsMonoid;

impl Species for SetsMonoid {
    fn id(&self) -> String {
        "E".into()
    }
    fn enumerate(&self, labels: &LabelSet) -> Vec<Structure> {
        vec![Structure::new("E", labels.clone(), Payload::Unit)]
    }
}

impl Monoid for SetsMonoid {
    fn identity_element(&self) -> Structure {
        Structure::new("E", LabelSet::empty(), Payload::Unit)
    }
    fn nu(&self, m1: &Structure, m2: &Structure) -> Structure {
        Structure::new("E", m1.labels.union(&m2.labels), Payload::Unit)
    }
}

/// E_+: one structure on every nonempty set; substitution merges blocks.
pub struct PositiveSetsOperad;

impl Species for PositiveSetsOperad {
    fn id(&self) -> String {
        "E_plus".into()
    }
    fn is_positive(&self) -> bool {
        true
    }
    fn enumerate(&self, labels: &LabelSet) -> Vec<Structure> {
        if labels.is_empty() {
            vec![]
        } else {
            vec![Structure::new("E_plus", labels.clone(), Payload::Unit)]
        }
    }
}

impl Operad for PositiveSetsOperad {
    fn identity_on(&self, label: &Label) -> Structure {
        Structure::new("E_plus", LabelSet::singleton(label.clone()), Payload::Unit)
    }
    fn eta(&self, a: &Assembly, _external: &Structure) -> Structure {
        Structure::new("E_plus", a.ground(), Payload::Unit)
    }
}

/// E_k: one structure on sets of size exactly k (used as E_2 for pairings).
pub struct SetsOfSize(pub usize);

impl Species for SetsOfSize {
    fn id(&self) -> String {
        format!("E_{}", self.0)
    }
    fn is_positive(&self) -> bool {
        self.0 > 0
    }
    fn enumerate(&self, labels: &LabelSet) -> Vec<Structure> {
        if labels.len() == self.0 {
            vec![Structure::new(self.id(), labels.clone(), Payload::Unit)]
        } else {
            vec![]
        }
    }
}

/// E^r: functions from the set into r slots (ballot monoid); the product
/// joins the r components. r = 1 is E with an explicit coloring payload.
pub struct BallotMonoid(pub usize);

impl BallotMonoid {
    fn make(&self, labels: &LabelSet, colors: Vec<(Label, usize)>) -> Structure {
        Structure::new(self.id(), labels.clone(), Payload::Colors(colors))
    }
}

impl Species for BallotMonoid {
    fn id(&self) -> String {
        format!("E_r:{}", self.0)
    }
    fn enumerate(&self, labels: &LabelSet) -> Vec<Structure> {
        let r = self.0;
        let n = labels.len();
        let mut out = Vec::new();
        let total = r.pow(n as u32);
        for code in 0..total {
            let mut c = code;
            let colors = labels
                .iter()
                .map(|l| {
                    let slot = c % r;
                    c /= r;
                    (l.clone(), slot)
                })
                .collect();
            out.push(self.make(labels, colors));
        }
        out
    }
}

impl Monoid for BallotMonoid {
    fn identity_element(&self) -> Structure {
        self.make(&LabelSet::empty(), vec![])
    }
    fn nu(&self, m1: &Structure, m2: &Structure) -> Structure {
        let (Payload::Colors(c1), Payload::Colors(c2)) = (&m1.payload, &m2.payload) else {
            panic!("ballot payloads expected");
        };
        let mut colors: Vec<(Label, usize)> = c1.iter().chain(c2.iter()).cloned().collect();
        colors.sort();
        self.make(&m1.labels.union(&m2.labels), colors)
    }
}

/// E^ev: one structure on every even-size set.
pub struct EvenSetsMonoid;

impl Species for EvenSetsMonoid {
    fn id(&self) -> String {
        "E_ev".into()
    }
    fn enumerate(&self, labels: &LabelSet) -> Vec<Structure> {
        if labels.len() % 2 == 0 {
            vec![Structure::new("E_ev", labels.clone(), Payload::Unit)]
        } else {
            vec![]
        }
    }
}

impl Monoid for EvenSetsMonoid {
    fn identity_element(&self) -> Structure {
        Structure::new("E_ev", LabelSet::empty(), Payload::Unit)
    }
    fn nu(&self, m1: &Structure, m2: &Structure) -> Structure {
        Structure::new("E_ev", m1.labels.union(&m2.labels), Payload::Unit)
    }
}

/// E^odd: one structure on every odd-size set; merging an odd number of odd
/// blocks keeps the size odd.
pub struct OddSetsOperad;

impl Species for OddSetsOperad {
    fn id(&self) -> String {
        "E_odd".into()
    }
    fn is_positive(&self) -> bool {
        true
    }
    fn enumerate(&self, labels: &LabelSet) -> Vec<Structure> {
        if labels.len() % 2 == 1 {
            vec![Structure::new("E_odd", labels.clone(), Payload::Unit)]
        } else {
            vec![]
        }
    }
}

impl Operad for OddSetsOperad {
    fn identity_on(&self, label: &Label) -> Structure {
        Structure::new("E_odd", LabelSet::singleton(label.clone()), Payload::Unit)
    }
    fn eta(&self, a: &Assembly, _external: &Structure) -> Structure {
        Structure::new("E_odd", a.ground(), Payload::Unit)
    }
}

/// 1: the monoid with a single structure over the empty set; pairing it
/// with an operad yields the pure-operad counting data.
pub struct OneMonoid;

impl Species for OneMonoid {
    fn id(&self) -> String {
        "One".into()
    }
    fn enumerate(&self, labels: &LabelSet) -> Vec<Structure> {
        if labels.is_empty() {
            vec![self.identity_element()]
        } else {
            vec![]
        }
    }
}

impl Monoid for OneMonoid {
    fn identity_element(&self) -> Structure {
        Structure::new("One", LabelSet::empty(), Payload::Unit)
    }
    fn nu(&self, m1: &Structure, m2: &Structure) -> Structure {
        assert!(m1.labels.is_empty() && m2.labels.is_empty());
        self.identity_element()
    }
}
