//! The free commutative monoid E(M) on a positive species M: structures are
//! assemblies of M-structures, and the product is disjoint union. Partitions
//! arise as E(E_+), pairings as E(E_2), graphs as E(G_c).

use std::sync::Arc;

use crate::combinatorics::{Bijection, LabelSet};
use crate::species::{assemblies_over, Assembly, Monoid, Payload, Species, Structure};

pub struct FreeCommutativeMonoid {
    id: String,
    inner: Arc<dyn Species + Send + Sync>,
}

impl FreeCommutativeMonoid {
    pub fn new(id: impl Into<String>, inner: Arc<dyn Species + Send + Sync>) -> Self {
        assert!(inner.is_positive(), "generator species must be positive");
        FreeCommutativeMonoid {
            id: id.into(),
            inner,
        }
    }

    pub fn wrap(&self, labels: LabelSet, a: &Assembly) -> Structure {
        Structure::new(self.id.clone(), labels, Payload::Members(a.members().to_vec()))
    }

    pub fn unwrap(s: &Structure) -> Assembly {
        match &s.payload {
            Payload::Members(members) => {
                Assembly::new(members.clone()).expect("member labels are disjoint")
            }
            _ => panic!("assembly payload expected on {s}"),
        }
    }
}

impl Species for FreeCommutativeMonoid {
    fn id(&self) -> String {
        self.id.clone()
    }
    fn enumerate(&self, labels: &LabelSet) -> Vec<Structure> {
        assemblies_over(self.inner.as_ref(), labels)
            .iter()
            .map(|a| self.wrap(labels.clone(), a))
            .collect()
    }
    fn transport(&self, s: &Structure, f: &Bijection) -> Structure {
        // transport member-by-member so inner canonicalization applies
        let a = Self::unwrap(s);
        let moved = Assembly::new(
            a.members()
                .iter()
                .map(|m| self.inner.transport(m, f))
                .collect(),
        )
        .expect("bijections preserve disjointness");
        let labels = s.labels.iter().map(|l| f[l].clone()).collect();
        self.wrap(labels, &moved)
    }
}

impl Monoid for FreeCommutativeMonoid {
    fn identity_element(&self) -> Structure {
        self.wrap(LabelSet::empty(), &Assembly::empty())
    }
    fn nu(&self, m1: &Structure, m2: &Structure) -> Structure {
        let joined = Self::unwrap(m1)
            .union(&Self::unwrap(m2))
            .expect("disjoint grounds");
        self.wrap(m1.labels.union(&m2.labels), &joined)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::checks::check_monoid_axioms;
    use crate::instances::sets::{PositiveSetsOperad, SetsOfSize};

    fn partitions_monoid() -> FreeCommutativeMonoid {
        FreeCommutativeMonoid::new("Pi", Arc::new(PositiveSetsOperad))
    }

    fn pairings_monoid() -> FreeCommutativeMonoid {
        FreeCommutativeMonoid::new("E(E_2)", Arc::new(SetsOfSize(2)))
    }

    #[test]
    fn axioms() {
        assert!(check_monoid_axioms(&partitions_monoid(), 4).passed);
        assert!(check_monoid_axioms(&pairings_monoid(), 4).passed);
    }

    #[test]
    fn partition_counts_are_bell() {
        let bell = [1usize, 1, 2, 5, 15, 52];
        for n in 0..=5 {
            assert_eq!(
                partitions_monoid().enumerate(&LabelSet::atoms(n)).len(),
                bell[n]
            );
        }
    }

    #[test]
    fn pairing_counts_are_perfect_matchings() {
        // (n-1)!! on even sets, nothing on odd sets
        let matchings = [1usize, 0, 1, 0, 3, 0, 15];
        for n in 0..=6 {
            assert_eq!(
                pairings_monoid().enumerate(&LabelSet::atoms(n)).len(),
                matchings[n]
            );
        }
    }
}
