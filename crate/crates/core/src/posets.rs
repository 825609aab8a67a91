//! Posets generated by monoids, operads, and monops: the order is produced
//! constructively by evaluating the product against every right factor, the
//! partial-order axioms are re-verified, and Möbius functions from the zero
//! element invert the counting data exactly.

use std::collections::BTreeMap;

use serde_json::json;

use crate::combinatorics::{subsets, LabelSet};
use crate::error::{Error, Result};
use crate::powerseries::{rat_int, ExactSeries, Rat};
use crate::riordan::LowerTriangular;
use crate::sheffer::ExactPoly;
use crate::species::{
    as_species, assemblies_over, bar_eta, bar_rho, monop_elements, Assembly, Monoid, Monop,
    Operad, Structure,
};

/// A finite poset with a zero element. Down-sets are stored as sorted index
/// lists; Möbius values mu(0, x) are computed on construction.
pub struct FinitePoset {
    names: Vec<String>,
    down: Vec<Vec<u32>>,
    zero: usize,
    mobius: Vec<i128>,
}

impl FinitePoset {
    /// Build from (low, high) relation pairs; the relation must already be
    /// reflexive and transitively closed, which is re-verified.
    pub fn new(names: Vec<String>, relations: &[(usize, usize)]) -> Result<Self> {
        let n = names.len();
        let mut down: Vec<Vec<u32>> = vec![Vec::new(); n];
        for &(lo, hi) in relations {
            if lo >= n || hi >= n {
                return Err(Error::Invalid("relation index out of range".into()));
            }
            down[hi].push(lo as u32);
        }
        for row in &mut down {
            row.sort_unstable();
            row.dedup();
        }
        for (i, row) in down.iter().enumerate() {
            if row.binary_search(&(i as u32)).is_err() {
                return Err(Error::OrderAxiom(format!(
                    "not reflexive at {}",
                    names[i]
                )));
            }
        }
        // antisymmetry and transitivity: mark down(i), then every j <= i
        // must satisfy down(j) inside the marks
        let mut mark = vec![false; n];
        for (i, row) in down.iter().enumerate() {
            for &j in row {
                mark[j as usize] = true;
            }
            for &j in row {
                let j = j as usize;
                if j != i && down[j].binary_search(&(i as u32)).is_ok() {
                    return Err(Error::OrderAxiom(format!(
                        "antisymmetry fails between {} and {}",
                        names[i], names[j]
                    )));
                }
                if down[j].iter().any(|&k| !mark[k as usize]) {
                    return Err(Error::OrderAxiom(format!(
                        "transitivity fails below {}",
                        names[i]
                    )));
                }
            }
            for &j in row {
                mark[j as usize] = false;
            }
        }
        // the zero element sits in every down-set and below nothing else
        let mut occurrences = vec![0usize; n];
        for row in &down {
            for &j in row {
                occurrences[j as usize] += 1;
            }
        }
        let zero = (0..n)
            .find(|&i| occurrences[i] == n && down[i].len() == 1)
            .ok_or(Error::NoZeroElement)?;
        // mu(0, x) by the incidence recursion, in order of down-set size
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&i| down[i].len());
        let mut mobius = vec![0i128; n];
        for &i in &order {
            if i == zero {
                mobius[i] = 1;
                continue;
            }
            let mut acc: i128 = 0;
            for &j in &down[i] {
                if j as usize != i {
                    acc = acc
                        .checked_add(mobius[j as usize])
                        .ok_or_else(|| Error::Invalid("Möbius value overflow".into()))?;
                }
            }
            mobius[i] = -acc;
        }
        Ok(FinitePoset {
            names,
            down,
            zero,
            mobius,
        })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn zero_index(&self) -> usize {
        self.zero
    }

    pub fn leq(&self, lo: usize, hi: usize) -> bool {
        self.down[hi].binary_search(&(lo as u32)).is_ok()
    }

    pub fn down_set(&self, i: usize) -> &[u32] {
        &self.down[i]
    }

    pub fn up_set(&self, i: usize) -> Vec<usize> {
        (0..self.len()).filter(|&j| self.leq(i, j)).collect()
    }

    pub fn mobius_from_zero(&self) -> &[i128] {
        &self.mobius
    }

    /// Cover pairs (lo, hi) of the Hasse diagram.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for hi in 0..self.len() {
            'pair: for &lo in &self.down[hi] {
                let lo = lo as usize;
                if lo == hi {
                    continue;
                }
                for &mid in &self.down[hi] {
                    let mid = mid as usize;
                    if mid != lo && mid != hi && self.leq(lo, mid) {
                        continue 'pair;
                    }
                }
                out.push((lo, hi));
            }
        }
        out
    }

    /// Hasse diagram as DOT text, drawn bottom-up.
    pub fn to_dot(&self, title: &str) -> String {
        let mut out = String::new();
        out.push_str(&format!("digraph \"{title}\" {{\n"));
        out.push_str("  rankdir=BT;\n  node [shape=plaintext];\n");
        for (i, name) in self.names.iter().enumerate() {
            out.push_str(&format!("  n{i} [label=\"{}\"];\n", name.replace('"', "'")));
        }
        for (lo, hi) in self.covers() {
            out.push_str(&format!("  n{lo} -> n{hi};\n"));
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "elements": self.names,
            "zero": self.zero,
            "covers": self.covers(),
            "mobius_from_zero": self.mobius.iter().map(|m| m.to_string()).collect::<Vec<_>>(),
        })
    }
}

/// Elements of the monoid poset: a structure over part of the ground set,
/// the rest left free.
pub struct MonoidPoset {
    pub elements: Vec<(Structure, LabelSet)>,
    pub poset: FinitePoset,
}

/// Elements of the operad poset: assemblies over the full ground set.
pub struct OperadPoset {
    pub elements: Vec<Assembly>,
    pub poset: FinitePoset,
}

/// Elements of the monop poset: pairs (monoid structure, operad assembly)
/// tiling the ground set.
pub struct MonopPoset {
    pub elements: Vec<(Structure, Assembly)>,
    pub poset: FinitePoset,
}

/// P_M[V]: m1 <= m2 when m2 = nu(m1, m2') for some m2' over the free part.
pub fn build_poset_monoid(m: &dyn Monoid, ground: &LabelSet) -> Result<MonoidPoset> {
    let mut elements: Vec<(Structure, LabelSet)> = Vec::new();
    for (v1, v2) in subsets(ground) {
        for s in m.enumerate(&v1) {
            elements.push((s, v2.clone()));
        }
    }
    elements.sort();
    let index: BTreeMap<&(Structure, LabelSet), usize> =
        elements.iter().zip(0..).collect();
    let mut relations = Vec::new();
    for (i, (m1, free)) in elements.iter().enumerate() {
        for (w, rest) in subsets(free) {
            for m2 in m.enumerate(&w) {
                let z = (m.nu(m1, &m2), rest.clone());
                let j = *index
                    .get(&z)
                    .ok_or_else(|| Error::Invalid(format!("product escapes poset: {}", z.0)))?;
                relations.push((i, j));
            }
        }
    }
    let names = elements
        .iter()
        .map(|(s, free)| format!("{s}+{free}"))
        .collect();
    Ok(MonoidPoset {
        poset: FinitePoset::new(names, &relations)?,
        elements,
    })
}

/// P_O[V]: a1 <= a2 when a2 = eta-bar(a1, a2') for some assembly a2' over
/// the blocks of a1.
pub fn build_poset_operad(o: &dyn Operad, ground: &LabelSet) -> Result<OperadPoset> {
    let mut elements = assemblies_over(as_species(o), ground);
    elements.sort();
    let index: BTreeMap<&Assembly, usize> = elements.iter().zip(0..).collect();
    let mut relations = Vec::new();
    for (i, a1) in elements.iter().enumerate() {
        for a2 in assemblies_over(as_species(o), &a1.block_labels()) {
            let z = bar_eta(o, a1, &a2)?;
            let j = *index
                .get(&z)
                .ok_or_else(|| Error::Invalid(format!("product escapes poset: {z}")))?;
            relations.push((i, j));
        }
    }
    let names = elements.iter().map(|a| a.to_string()).collect();
    Ok(OperadPoset {
        poset: FinitePoset::new(names, &relations)?,
        elements,
    })
}

/// P_{(M,O)}[V]: x <= z when z = rho-bar(x, y) for some pair y over the
/// blocks of x's assembly.
pub fn build_poset_monop(mp: &dyn Monop, ground: &LabelSet) -> Result<MonopPoset> {
    let mut elements = monop_elements(mp, ground);
    elements.sort();
    let index: BTreeMap<&(Structure, Assembly), usize> =
        elements.iter().zip(0..).collect();
    // right factors only depend on the block label set, so memoize them
    let mut factors: BTreeMap<LabelSet, Vec<(Structure, Assembly)>> = BTreeMap::new();
    let mut relations = Vec::new();
    for (i, x) in elements.iter().enumerate() {
        let blocks = x.1.block_labels();
        let ys = factors
            .entry(blocks)
            .or_insert_with_key(|b| monop_elements(mp, b));
        for y in ys.iter() {
            let z = bar_rho(mp, x, y)?;
            let j = *index
                .get(&z)
                .ok_or_else(|| Error::Invalid(format!("product escapes poset: {}", z.0)))?;
            relations.push((i, j));
        }
    }
    let names = elements
        .iter()
        .map(|(m, a)| format!("{m}|{a}"))
        .collect();
    Ok(MonopPoset {
        poset: FinitePoset::new(names, &relations)?,
        elements,
    })
}

/// C_{n,k}: the number of pairs (m, a) over [n] whose assembly has k members.
pub fn counting_matrix(mp: &dyn Monop, n_max: usize) -> Result<LowerTriangular> {
    let mut table = vec![vec![Rat::from_integer(0.into()); n_max + 1]; n_max + 1];
    for n in 0..=n_max {
        for (_, a) in monop_elements(mp, &LabelSet::atoms(n)) {
            table[n][a.len()] += rat_int(1);
        }
    }
    Ok(LowerTriangular::from_fn(n_max, |n, k| table[n][k].clone()))
}

/// The Möbius companion of the counting matrix: entries are sums of
/// mu(0, (m, a)) over pairs with k assembly members.
pub fn mobius_matrix(mp: &dyn Monop, n_max: usize) -> Result<LowerTriangular> {
    let mut table = vec![vec![Rat::from_integer(0.into()); n_max + 1]; n_max + 1];
    for n in 0..=n_max {
        let built = build_poset_monop(mp, &LabelSet::atoms(n))?;
        let mobius = built.poset.mobius_from_zero();
        for (i, (_, a)) in built.elements.iter().enumerate() {
            table[n][a.len()] += Rat::from_integer(mobius[i].into());
        }
    }
    Ok(LowerTriangular::from_fn(n_max, |n, k| table[n][k].clone()))
}

/// The n-th counting and Möbius polynomials of a monop poset:
/// sum of x^|a| and of mu(0, (m,a)) x^|a| over all elements.
pub fn sheffer_by_summation(mp: &dyn Monop, n: usize) -> Result<(ExactPoly, ExactPoly)> {
    let built = build_poset_monop(mp, &LabelSet::atoms(n))?;
    let mobius = built.poset.mobius_from_zero();
    let mut plain = vec![Rat::from_integer(0.into()); n + 1];
    let mut signed = plain.clone();
    for (i, (_, a)) in built.elements.iter().enumerate() {
        plain[a.len()] += rat_int(1);
        signed[a.len()] += Rat::from_integer(mobius[i].into());
    }
    Ok((ExactPoly::from_coeffs(plain), ExactPoly::from_coeffs(signed)))
}

/// The same summation over a monoid poset, graded by the size of the free
/// part: sum of x^|free| and mu(0, element) x^|free|.
pub fn monoid_polys_by_summation(m: &dyn Monoid, n: usize) -> Result<(ExactPoly, ExactPoly)> {
    let built = build_poset_monoid(m, &LabelSet::atoms(n))?;
    let mobius = built.poset.mobius_from_zero();
    let mut plain = vec![Rat::from_integer(0.into()); n + 1];
    let mut signed = plain.clone();
    for (i, (_, free)) in built.elements.iter().enumerate() {
        plain[free.len()] += rat_int(1);
        signed[free.len()] += Rat::from_integer(mobius[i].into());
    }
    Ok((ExactPoly::from_coeffs(plain), ExactPoly::from_coeffs(signed)))
}

/// Möbius cardinal series of the monoid posets: coefficient n is the sum of
/// mu(0, m) over structures covering all of [n]. Equals the multiplicative
/// inverse of the monoid's counting series.
pub fn monoid_mobius_series(m: &dyn Monoid, n_max: usize) -> Result<ExactSeries> {
    let mut coeffs = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let built = build_poset_monoid(m, &LabelSet::atoms(n))?;
        let mobius = built.poset.mobius_from_zero();
        let mut acc: i128 = 0;
        for (i, (_, free)) in built.elements.iter().enumerate() {
            if free.is_empty() {
                acc += mobius[i];
            }
        }
        coeffs.push(Rat::from_integer(acc.into()));
    }
    Ok(ExactSeries::from_coeffs(coeffs))
}

/// Möbius cardinal series of the operad posets: coefficient n is the sum of
/// mu(0, a) over one-member assemblies. Equals the compositional inverse of
/// the operad's counting series.
pub fn operad_mobius_series(o: &dyn Operad, n_max: usize) -> Result<ExactSeries> {
    let mut coeffs = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let built = build_poset_operad(o, &LabelSet::atoms(n))?;
        let mobius = built.poset.mobius_from_zero();
        let mut acc: i128 = 0;
        for (i, a) in built.elements.iter().enumerate() {
            if a.len() == 1 {
                acc += mobius[i];
            }
        }
        coeffs.push(Rat::from_integer(acc.into()));
    }
    Ok(ExactSeries::from_coeffs(coeffs))
}

/// Structural checks on the monop poset over [n]: every lower interval
/// factors through the element's parts, and the coideal above any element is
/// order-isomorphic to the poset over its assembly's blocks.
pub fn check_interval_factorization(mp: &dyn Monop, n: usize) -> Result<crate::checks::Report> {
    let mut report = crate::checks::Report::new(
        format!("poset structure of {} over [{}]", mp.id(), n),
        n,
    );
    let built = build_poset_monop(mp, &LabelSet::atoms(n))?;
    let mut sub_posets: BTreeMap<LabelSet, MonopPoset> = BTreeMap::new();
    fn ensure<'a>(
        cache: &'a mut BTreeMap<LabelSet, MonopPoset>,
        mp: &dyn Monop,
        ground: &LabelSet,
    ) -> Result<&'a MonopPoset> {
        if !cache.contains_key(ground) {
            cache.insert(ground.clone(), build_poset_monop(mp, ground)?);
        }
        Ok(&cache[ground])
    }

    // lower intervals factor: |[0,(m,a)]| = |[0,(m,0)]| * prod |[0,(1,{w})]|
    let mut cardinality_witness = None;
    'outer: for (i, (m, a)) in built.elements.iter().enumerate() {
        let mut expected = {
            let base = ensure(&mut sub_posets, mp, &m.labels)?;
            let idx = base
                .elements
                .binary_search(&(m.clone(), Assembly::empty()))
                .map_err(|_| Error::Invalid("missing monoid-part element".into()))?;
            base.poset.down_set(idx).len()
        };
        for member in a.members() {
            let block = ensure(&mut sub_posets, mp, &member.labels)?;
            let single = (
                mp.monoid().identity_element(),
                Assembly::new(vec![member.clone()])?,
            );
            let idx = block
                .elements
                .binary_search(&single)
                .map_err(|_| Error::Invalid("missing one-member element".into()))?;
            expected *= block.poset.down_set(idx).len();
        }
        let got = built.poset.down_set(i).len();
        if got != expected {
            cardinality_witness = Some(format!(
                "interval below {} has {} elements, parts give {}",
                built.poset.name(i),
                got,
                expected
            ));
            break 'outer;
        }
    }
    report.record("lower intervals factor through the parts", cardinality_witness);

    // coideal above x is isomorphic to the poset over the blocks of x,
    // via y -> rho-bar(x, y)
    let mut coideal_witness = None;
    'elements: for (i, x) in built.elements.iter().enumerate() {
        let blocks = x.1.block_labels();
        let quotient = ensure(&mut sub_posets, mp, &blocks)?;
        let mut image = Vec::with_capacity(quotient.elements.len());
        for (yi, y) in quotient.elements.iter().enumerate() {
            let z = bar_rho(mp, x, y)?;
            match built.elements.binary_search(&z) {
                Ok(j) if built.poset.leq(i, j) => image.push(j),
                _ => {
                    coideal_witness = Some(format!(
                        "rho-bar({}, {}) leaves the coideal",
                        built.poset.name(i),
                        quotient.poset.name(yi)
                    ));
                    break 'elements;
                }
            }
        }
        let mut sorted = image.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != quotient.elements.len()
            || sorted.len() != built.poset.up_set(i).len()
        {
            coideal_witness = Some(format!(
                "coideal above {} is not in bijection with the block poset",
                built.poset.name(i)
            ));
            break 'elements;
        }
        for (y1, &z1) in image.iter().enumerate() {
            for (y2, &z2) in image.iter().enumerate() {
                if quotient.poset.leq(y1, y2) != built.poset.leq(z1, z2) {
                    coideal_witness = Some(format!(
                        "order mismatch above {} between {} and {}",
                        built.poset.name(i),
                        quotient.poset.name(y1),
                        quotient.poset.name(y2)
                    ));
                    break 'elements;
                }
            }
        }
    }
    report.record("coideals are isomorphic to block posets", coideal_witness);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances;
    
    fn atoms(n: usize) -> LabelSet {
        LabelSet::atoms(n)
    }

    #[test]
    fn boolean_lattice_from_sets() {
        let m = instances::monoid("E").unwrap();
        let built = build_poset_monoid(m.as_ref(), &atoms(3)).unwrap();
        assert_eq!(built.poset.len(), 8);
        // mu(0, top) = (-1)^3
        let top = built
            .elements
            .iter()
            .position(|(s, _)| s.labels.len() == 3)
            .unwrap();
        assert_eq!(built.poset.mobius_from_zero()[top], -1);
        assert_eq!(built.poset.down_set(top).len(), 8);
        // zero is the empty structure with everything free
        let zero = built.poset.zero_index();
        assert!(built.elements[zero].0.labels.is_empty());
    }

    #[test]
    fn pairings_poset_has_four_elements() {
        let m = instances::monoid("E(E_2)").unwrap();
        let built = build_poset_monoid(m.as_ref(), &atoms(3)).unwrap();
        // 0 and the three single pairings
        assert_eq!(built.poset.len(), 4);
    }

    #[test]
    fn list_poset_is_prefix_order() {
        let m = instances::monoid("L").unwrap();
        let built = build_poset_monoid(m.as_ref(), &atoms(2)).unwrap();
        assert_eq!(built.poset.len(), 5);
        let find = |text: &str| {
            (0..built.poset.len())
                .find(|&i| built.poset.name(i).starts_with(text))
                .unwrap()
        };
        // (1) is a prefix of (1,2) but not of (2,1)
        assert!(built.poset.leq(find("(1)"), find("(1,2)")));
        assert!(!built.poset.leq(find("(1)"), find("(2,1)")));
        assert!(built.poset.leq(find("(2)"), find("(2,1)")));
    }

    #[test]
    fn partition_lattice_from_positive_sets() {
        let o = instances::operad("E_plus").unwrap();
        let built = build_poset_operad(o.as_ref(), &atoms(3)).unwrap();
        assert_eq!(built.poset.len(), 5);
        let top = built.elements.iter().position(|a| a.len() == 1).unwrap();
        assert_eq!(built.poset.mobius_from_zero()[top], 2);
        assert_eq!(built.poset.zero_index(),
            built.elements.iter().position(|a| a.len() == 3).unwrap());
    }

    #[test]
    fn list_operad_poset_on_two() {
        let o = instances::operad("L_plus").unwrap();
        let built = build_poset_operad(o.as_ref(), &atoms(2)).unwrap();
        // {(1),(2)} below (1,2) and (2,1)
        assert_eq!(built.poset.len(), 3);
        let zero = built.poset.zero_index();
        assert_eq!(built.elements[zero].len(), 2);
        for i in 0..3 {
            assert!(built.poset.leq(zero, i));
        }
    }

    #[test]
    fn odd_sets_poset_on_three() {
        let o = instances::operad("E_odd").unwrap();
        let built = build_poset_operad(o.as_ref(), &atoms(3)).unwrap();
        // singletons below the full block; no two-block assemblies
        assert_eq!(built.poset.len(), 2);
    }

    #[test]
    fn cycle_mobius_vanishes_unless_monotone() {
        // mu(0, sigma) for a single n-cycle is nonzero only for specific
        // cycles; the sum over one-member assemblies gives the inverse
        // series 1 - e^{-x} with coefficients (-1)^{n-1}
        let o = instances::operad("C").unwrap();
        let series = operad_mobius_series(o.as_ref(), 5).unwrap();
        let expected = ExactSeries::from_fn(5, |n| {
            if n == 0 {
                Rat::from_integer(0.into())
            } else if n % 2 == 1 {
                rat_int(1)
            } else {
                rat_int(-1)
            }
        });
        assert_eq!(series, expected);
        let g = instances::species_egf("C", 5).unwrap();
        assert_eq!(g.substitute(&series).unwrap(), ExactSeries::x(5));
    }

    #[test]
    fn monop_poset_smallest_cases() {
        for id in ["E_Eplus", "L_Lplus", "L_C"] {
            let mp = instances::monop(id).unwrap();
            let built = build_poset_monop(mp.as_ref(), &atoms(1)).unwrap();
            // 0 below each (m over {1}, empty assembly)
            let zero = built.poset.zero_index();
            for i in 0..built.poset.len() {
                assert!(built.poset.leq(zero, i), "{id}");
            }
        }
        let mp = instances::monop("E_Eplus").unwrap();
        let built = build_poset_monop(mp.as_ref(), &atoms(2)).unwrap();
        assert_eq!(built.poset.len(), 5);
    }

    #[test]
    fn counting_rows_match_known_triangles() {
        // (E, E_+) row 2; the pure operad gives the Stirling-2 triangle
        let mp = instances::monop("E_Eplus").unwrap();
        let c = counting_matrix(mp.as_ref(), 3).unwrap();
        assert_eq!(c.row(2).to_vec(), vec![rat_int(1), rat_int(3), rat_int(1)]);
        let pure = instances::monop("One_Eplus").unwrap();
        let c = counting_matrix(pure.as_ref(), 5).unwrap();
        assert_eq!(c.entry(4, 2), rat_int(7)); // S(4,2)
        assert_eq!(c.entry(5, 3), rat_int(25)); // S(5,3)
        // (E, E_+^{uZ2}) row 2: the colored block makes the middle entry 4
        let mp = instances::monop("E_dowling:Z2").unwrap();
        let c = counting_matrix(mp.as_ref(), 2).unwrap();
        assert_eq!(c.row(2).to_vec(), vec![rat_int(1), rat_int(4), rat_int(1)]);
    }

    #[test]
    fn mobius_matrix_inverts_counting_matrix() {
        for id in ["E_Eplus", "One_Eplus", "L_C"] {
            let mp = instances::monop(id).unwrap();
            let c = counting_matrix(mp.as_ref(), 4).unwrap();
            let m = mobius_matrix(mp.as_ref(), 4).unwrap();
            assert!(c.mul(&m).unwrap().is_identity(), "{id}");
            assert!(m.mul(&c).unwrap().is_identity(), "{id}");
        }
        // signed Stirling numbers of the first kind from (1, E_+)
        let pure = instances::monop("One_Eplus").unwrap();
        let m = mobius_matrix(pure.as_ref(), 5).unwrap();
        assert_eq!(m.entry(3, 1), rat_int(2)); // s(3,1)
        assert_eq!(m.entry(4, 2), rat_int(11)); // s(4,2)
        assert_eq!(m.entry(5, 2), rat_int(-50)); // s(5,2)
    }

    #[test]
    fn summation_polynomials() {
        // (Pi, E_+) at n = 2: shifted Touchard x^2 + 3x + 2
        let mp = instances::monop("Pi_Eplus").unwrap();
        let (plain, _) = sheffer_by_summation(mp.as_ref(), 2).unwrap();
        assert_eq!(plain.to_string(), "x^2 + 3x + 2");
        let (one, mone) = sheffer_by_summation(mp.as_ref(), 0).unwrap();
        assert_eq!(one.to_string(), "1");
        assert_eq!(mone.to_string(), "1");
        // pairing monoid at n = 4: Hermite-type polynomials
        let m = instances::monoid("E(E_2)").unwrap();
        let (plain, signed) = monoid_polys_by_summation(m.as_ref(), 4).unwrap();
        assert_eq!(plain.to_string(), "x^4 + 6x^2 + 3");
        assert_eq!(signed.to_string(), "x^4 - 6x^2 + 3");
    }

    #[test]
    fn monoid_mobius_series_is_reciprocal() {
        for id in ["E", "L", "Pi", "E_ev"] {
            let m = instances::monoid(id).unwrap();
            let series = monoid_mobius_series(m.as_ref(), 4).unwrap();
            let counting = instances::species_egf(id, 4).unwrap();
            assert_eq!(series, counting.mul_inverse().unwrap(), "{id}");
        }
    }

    #[test]
    fn operad_mobius_series_is_compositional_inverse() {
        for id in ["E_plus", "L_plus", "E_odd"] {
            let o = instances::operad(id).unwrap();
            let series = operad_mobius_series(o.as_ref(), 4).unwrap();
            let counting = instances::species_egf(id, 4).unwrap();
            assert_eq!(series, counting.comp_inverse().unwrap(), "{id}");
        }
    }

    #[test]
    fn graph_mobius_is_signed_by_components() {
        // mu(0, (empty-m, {g})) = (-1)^{n-k} ... the operad series check
        let o = instances::operad("G_c").unwrap();
        let series = operad_mobius_series(o.as_ref(), 4).unwrap();
        let counting = instances::species_egf("G_c", 4).unwrap();
        assert_eq!(series, counting.comp_inverse().unwrap());
    }

    #[test]
    fn bessel_mobius_series() {
        let o = instances::operad("B").unwrap();
        let series = operad_mobius_series(o.as_ref(), 4).unwrap();
        // inverse of 1 - sqrt(1-2x) is x - x^2/2: mu vanishes above n = 2
        let expected = ExactSeries::from_fn(4, |n| match n {
            1 => rat_int(1),
            2 => rat_int(-1),
            _ => Rat::from_integer(0.into()),
        });
        assert_eq!(series, expected);
    }

    #[test]
    fn interval_factorization_reports() {
        for id in ["E_Eplus", "Pi_Eplus"] {
            let mp = instances::monop(id).unwrap();
            let report = check_interval_factorization(mp.as_ref(), 3).unwrap();
            assert!(report.passed, "{}: {:?}", id, report.first_failure());
        }
    }

    #[test]
    fn stirling_factorial_polynomial() {
        // signed Stirling-1 row 3 as a polynomial: x(x-1)(x-2) evaluated
        // via the Möbius matrix of the pure set operad
        let pure = instances::monop("One_Eplus").unwrap();
        let m = mobius_matrix(pure.as_ref(), 3).unwrap();
        let row: Vec<Rat> = m.row(3).to_vec();
        let falling = ExactPoly::from_coeffs(row);
        // x(x-1)(x-2) = x^3 - 3x^2 + 2x has values 0, 0, 0, 6 at 0..3
        for v in 0..=3i64 {
            let expect = v * (v - 1) * (v - 2);
            assert_eq!(falling.eval(&rat_int(v)), rat_int(expect));
        }
    }

    #[test]
    fn dot_and_json_output() {
        let o = instances::operad("E_plus").unwrap();
        let built = build_poset_operad(o.as_ref(), &atoms(2)).unwrap();
        let dot = built.poset.to_dot("partitions of [2]");
        assert!(dot.contains("digraph"));
        assert!(dot.contains("->"));
        let js = built.poset.to_json();
        assert_eq!(js["elements"].as_array().unwrap().len(), 2);
        assert_eq!(js["mobius_from_zero"][built.poset.zero_index()], "1");
    }

    #[test]
    fn rejects_broken_orders() {
        // missing reflexive pair
        assert!(FinitePoset::new(vec!["a".into(), "b".into()], &[(0, 0), (0, 1)]).is_err());
        // antisymmetry violation
        assert!(FinitePoset::new(
            vec!["a".into(), "b".into()],
            &[(0, 0), (1, 1), (0, 1), (1, 0)]
        )
        .is_err());
        // transitivity violation
        assert!(FinitePoset::new(
            vec!["a".into(), "b".into(), "c".into()],
            &[(0, 0), (1, 1), (2, 2), (0, 1), (1, 2)]
        )
        .is_err());
        // no zero
        assert!(FinitePoset::new(
            vec!["a".into(), "b".into()],
            &[(0, 0), (1, 1)]
        )
        .is_err());
    }
}
