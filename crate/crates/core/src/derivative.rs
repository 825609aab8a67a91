//! The derivative construction: for an operad O, the species derivative O'
//! (an O-structure with one distinguished extra spot) is a monoid, and
//! (O', O) is a monop. Its counting pair is (d/dx O(x), O(x)).
//!
//! The extra spot is a reserved star label, smaller than every ordinary
//! atom; structures over V are stored as inner O-structures over V + {*}.

use std::sync::Arc;

use crate::combinatorics::{Bijection, Label, LabelSet};
use crate::powerseries::ExactSeries;
use crate::riordan::AdmissiblePair;
use crate::species::{Assembly, Monoid, Monop, Operad, Payload, Species, Structure};

/// The reserved spot label. Ordinary structures use positive atoms, so the
/// star sorts first and never collides.
pub fn star() -> Label {
    Label::Atom(-1)
}

pub struct DerivativeMonoid {
    inner: Arc<dyn Operad + Send + Sync>,
}

impl DerivativeMonoid {
    pub fn new(inner: Arc<dyn Operad + Send + Sync>) -> Self {
        DerivativeMonoid { inner }
    }

    fn wrap(&self, inner_structure: Structure) -> Structure {
        let labels = inner_structure
            .labels
            .difference(&LabelSet::singleton(star()));
        Structure::new(self.id(), labels, Payload::Members(vec![inner_structure]))
    }

    pub fn unwrap(s: &Structure) -> &Structure {
        match &s.payload {
            Payload::Members(members) if members.len() == 1 => &members[0],
            _ => panic!("derivative payload expected on {s}"),
        }
    }
}

impl Species for DerivativeMonoid {
    fn id(&self) -> String {
        format!("{}'", self.inner.id())
    }
    fn enumerate(&self, labels: &LabelSet) -> Vec<Structure> {
        assert!(!labels.contains(&star()), "star label is reserved");
        self.inner
            .enumerate(&labels.inserted(star()))
            .into_iter()
            .map(|s| self.wrap(s))
            .collect()
    }
    fn transport(&self, s: &Structure, f: &Bijection) -> Structure {
        let mut extended = f.clone();
        extended.insert(star(), star());
        self.wrap(self.inner.transport(Self::unwrap(s), &extended))
    }
}

impl Monoid for DerivativeMonoid {
    fn identity_element(&self) -> Structure {
        self.wrap(self.inner.identity_on(&star()))
    }
    fn nu(&self, m1: &Structure, m2: &Structure) -> Structure {
        // substitute m1 into the starred spot of m2, keeping the labels of
        // m2 as singletons
        let i1 = Self::unwrap(m1);
        let i2 = Self::unwrap(m2);
        let starred_block = Label::block(i1.labels.as_slice().to_vec());
        let mut members: Vec<Structure> = m2
            .labels
            .iter()
            .map(|v| self.inner.identity_on(v))
            .collect();
        members.push(i1.clone());
        let a = Assembly::new(members).expect("disjoint label sets");
        let mut lift: Bijection = m2
            .labels
            .iter()
            .map(|v| (v.clone(), Label::block(vec![v.clone()])))
            .collect();
        lift.insert(star(), starred_block);
        let external = self.inner.transport(i2, &lift);
        self.wrap(self.inner.eta(&a, &external))
    }
}

/// The monop (O', O): assemblies act on a starred structure by substitution
/// away from the star.
pub struct DerivativeMonop {
    id: String,
    monoid: DerivativeMonoid,
    operad: Arc<dyn Operad + Send + Sync>,
    egf: Box<dyn Fn(usize) -> ExactSeries + Send + Sync>,
    n_max: usize,
}

impl DerivativeMonop {
    pub fn new(
        id: impl Into<String>,
        operad: Arc<dyn Operad + Send + Sync>,
        egf: Box<dyn Fn(usize) -> ExactSeries + Send + Sync>,
        n_max: usize,
    ) -> Self {
        DerivativeMonop {
            id: id.into(),
            monoid: DerivativeMonoid::new(operad.clone()),
            operad,
            egf,
            n_max,
        }
    }
}

impl Monop for DerivativeMonop {
    fn id(&self) -> String {
        self.id.clone()
    }
    fn monoid(&self) -> &dyn Monoid {
        &self.monoid
    }
    fn operad(&self) -> &dyn Operad {
        self.operad.as_ref()
    }
    fn tau(&self, a: &Assembly, m: &Structure) -> Structure {
        let i = DerivativeMonoid::unwrap(m);
        let mut members = a.members().to_vec();
        members.push(self.operad.identity_on(&star()));
        let a2 = Assembly::new(members).expect("star is fresh");
        let mut lift: Bijection = a
            .block_labels()
            .iter()
            .map(|b| (b.clone(), b.clone()))
            .collect();
        lift.insert(star(), Label::block(vec![star()]));
        let external = self.operad.transport(i, &lift);
        self.monoid.wrap(self.operad.eta(&a2, &external))
    }
    fn counting_pair(&self, trunc: usize) -> Option<AdmissiblePair> {
        let o = (self.egf)(trunc + 1);
        let d = ExactSeries::from_fn(trunc, |n| o.coeff(n + 1).clone());
        AdmissiblePair::new(d, (self.egf)(trunc)).ok()
    }
    fn default_n_max(&self) -> usize {
        self.n_max
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::checks::check_monop_axioms;
    use crate::instances::cycles::CyclesOperad;
    use crate::instances::egf;
    use crate::instances::lists::PositiveListsOperad;
    use crate::instances::sets::PositiveSetsOperad;

    fn of_sets() -> DerivativeMonop {
        DerivativeMonop::new(
            "E'_Eplus",
            Arc::new(PositiveSetsOperad),
            Box::new(ExactSeries::exp_minus_one),
            6,
        )
    }

    fn of_lists() -> DerivativeMonop {
        DerivativeMonop::new(
            "L2_Lplus",
            Arc::new(PositiveListsOperad),
            Box::new(egf::lists_plus),
            6,
        )
    }

    fn of_cycles() -> DerivativeMonop {
        DerivativeMonop::new("L_C'", Arc::new(CyclesOperad), Box::new(egf::cycles), 5)
    }

    #[test]
    fn axioms() {
        for mp in [of_sets(), of_lists(), of_cycles()] {
            let report = check_monop_axioms(&mp, 3);
            assert!(report.passed, "{}: {:?}", mp.id(), report.first_failure());
        }
    }

    #[test]
    fn derivative_of_lists_counts() {
        // |L_+'[n]| = (n+1)!: a list with one starred spot
        let m = DerivativeMonoid::new(Arc::new(PositiveListsOperad));
        for n in 0..=4 {
            let fact: usize = (1..=n + 1).product();
            assert_eq!(m.enumerate(&LabelSet::atoms(n)).len(), fact);
        }
    }

    #[test]
    fn counting_pairs() {
        // derivative of sets has the same pair as (E, E_+)
        let pair = of_sets().counting_pair(6).unwrap();
        assert_eq!(pair.f(), &ExactSeries::exp(6));
        assert_eq!(pair.g(), &ExactSeries::exp_minus_one(6));
        // derivative of cycles counts like lists
        let pair = of_cycles().counting_pair(6).unwrap();
        assert_eq!(pair.f(), &ExactSeries::geometric(6));
        // derivative of nonempty lists counts (n+1)!
        let pair = of_lists().counting_pair(6).unwrap();
        assert_eq!(pair.f(), &egf::lists_tuple(6, 2));
    }

    #[test]
    fn monoid_identity_and_product() {
        let m = DerivativeMonoid::new(Arc::new(PositiveListsOperad));
        let e = m.identity_element();
        assert!(e.labels.is_empty());
        // the product substitutes the left factor into the star of the right
        let ones = m.enumerate(&LabelSet::atoms(1));
        // lists over {*, 1}: (*,1) and (1,*)
        assert_eq!(ones.len(), 2);
        let f: Bijection = [(Label::Atom(1), Label::Atom(2))].into_iter().collect();
        let other = m.transport(&ones[1], &f);
        let prod = m.nu(&ones[0], &other);
        assert_eq!(prod.labels, LabelSet::atoms(2));
        assert_eq!(m.nu(&e, &other), other);
        assert_eq!(m.nu(&other, &e), other);
    }
}
