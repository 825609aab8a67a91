//! Exhaustive finite axiom checkers for monoids, operads, and monops.
//! At the sizes used here exhaustion is a proof; failures carry the first
//! counterexample found.

use serde::Serialize;

use crate::combinatorics::{subsets, Bijection, Label, LabelSet};
use crate::species::{
    assemblies_over, bar_eta, bar_rho, monop_elements, monop_zero, Assembly, Monoid, Monop,
    Operad, Structure,
};

#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub law: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub subject: String,
    pub n_max: usize,
    pub passed: bool,
    pub checks: Vec<CheckResult>,
}

impl Report {
    pub fn new(subject: String, n_max: usize) -> Self {
        Report {
            subject,
            n_max,
            passed: true,
            checks: vec![],
        }
    }

    pub fn record(&mut self, law: &str, counterexample: Option<String>) {
        let passed = counterexample.is_none();
        self.passed &= passed;
        self.checks.push(CheckResult {
            law: law.to_string(),
            passed,
            counterexample,
        });
    }

    pub fn first_failure(&self) -> Option<&CheckResult> {
        self.checks.iter().find(|c| !c.passed)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("report serializes")
    }
}

/// Bijection sending each label v to the singleton block {v}.
fn singleton_lift(ground: &LabelSet) -> Bijection {
    ground
        .iter()
        .map(|l| (l.clone(), Label::block(vec![l.clone()])))
        .collect()
}

/// Bijection sending each block-label of a2's partition (a set of blocks of
/// a1) to the block-label of the merged underlying set.
fn merge_lift(a2: &Assembly) -> Bijection {
    a2.members()
        .iter()
        .map(|member| {
            let from = Label::block(member.labels.as_slice().to_vec());
            let atoms: Vec<Label> = member
                .labels
                .iter()
                .flat_map(|l| match l {
                    Label::Block(items) => items.clone(),
                    atom => vec![atom.clone()],
                })
                .collect();
            (from, Label::block(atoms))
        })
        .collect()
}

/// tau with the empty-assembly case fixed by definition.
fn tau_or_identity(mp: &dyn Monop, a: &Assembly, m: &Structure) -> Structure {
    if a.is_empty() {
        mp.monoid().identity_element()
    } else {
        mp.tau(a, m)
    }
}

pub fn check_monoid_axioms(m: &dyn Monoid, n_max: usize) -> Report {
    let mut report = Report::new(format!("monoid {}", m.id()), n_max);
    let e = m.identity_element();

    let empty = m.enumerate(&LabelSet::empty());
    report.record(
        "unique trivial structure",
        if empty.len() == 1 && empty[0] == e {
            None
        } else {
            Some(format!("M[0] = {empty:?}, identity = {e}"))
        },
    );

    let mut identity_cex = None;
    let mut label_cex = None;
    for n in 0..=n_max {
        for s in m.enumerate(&LabelSet::atoms(n)) {
            if m.nu(&e, &s) != s || m.nu(&s, &e) != s {
                identity_cex.get_or_insert(format!("identity fails at {s}"));
            }
        }
    }
    let mut assoc_cex = None;
    let mut cancel_cex = None;
    for n in 0..=n_max {
        let ground = LabelSet::atoms(n);
        for (v1, rest) in subsets(&ground) {
            let m1s = m.enumerate(&v1);
            // left cancellation and label correctness on two-way splits
            for (v2a, _) in subsets(&rest) {
                let m2s = m.enumerate(&v2a);
                for m1 in &m1s {
                    let mut seen = std::collections::BTreeMap::new();
                    for m2 in &m2s {
                        let prod = m.nu(m1, m2);
                        if prod.labels != v1.union(&v2a) {
                            label_cex.get_or_insert(format!(
                                "nu({m1},{m2}) lands over {}",
                                prod.labels
                            ));
                        }
                        if let Some(other) = seen.insert(prod.clone(), m2.clone()) {
                            cancel_cex.get_or_insert(format!(
                                "nu({m1},{m2}) = nu({m1},{other}) = {prod}"
                            ));
                        }
                    }
                }
            }
            // associativity on three-way splits
            for (v2, v3) in subsets(&rest) {
                let m2s = m.enumerate(&v2);
                let m3s = m.enumerate(&v3);
                for m1 in &m1s {
                    for m2 in &m2s {
                        for m3 in &m3s {
                            let lhs = m.nu(&m.nu(m1, m2), m3);
                            let rhs = m.nu(m1, &m.nu(m2, m3));
                            if lhs != rhs {
                                assoc_cex.get_or_insert(format!(
                                    "nu(nu({m1},{m2}),{m3}) = {lhs} != {rhs}"
                                ));
                            }
                        }
                    }
                }
            }
        }
    }
    report.record("two-sided identity", identity_cex);
    report.record("product labels", label_cex);
    report.record("associativity", assoc_cex);
    report.record("left cancellation", cancel_cex);
    report
}

pub fn check_operad_axioms(o: &dyn Operad, n_max: usize) -> Report {
    let mut report = Report::new(format!("operad {}", o.id()), n_max);

    report.record(
        "positive species",
        if o.enumerate(&LabelSet::empty()).is_empty() {
            None
        } else {
            Some("O[0] is nonempty".into())
        },
    );
    let one = o.enumerate(&LabelSet::atoms(1));
    let e1 = o.identity_on(&Label::Atom(1));
    report.record(
        "unique singleton structure",
        if one.len() == 1 && one[0] == e1 {
            None
        } else {
            Some(format!("O[1] = {one:?}, identity = {e1}"))
        },
    );

    let mut left_identity_cex = None;
    let mut right_identity_cex = None;
    let mut assoc_cex = None;
    let mut cancel_cex = None;
    for n in 1..=n_max {
        let ground = LabelSet::atoms(n);
        let lift = singleton_lift(&ground);
        for w in o.enumerate(&ground) {
            // eta over all-singleton identities returns the external structure
            let ids = o.identity_assembly(&ground);
            let lifted = o.transport(&w, &lift);
            let back = o.eta(&ids, &lifted);
            if back != w {
                left_identity_cex
                    .get_or_insert(format!("eta(identities, {lifted}) = {back} != {w}"));
            }
            // eta of a single member under the identity external returns it
            let a = Assembly::new(vec![w.clone()]).expect("single member");
            let e_block = o.identity_on(&Label::block(ground.as_slice().to_vec()));
            let out = o.eta(&a, &e_block);
            if out != w {
                right_identity_cex.get_or_insert(format!("eta({{{w}}}, e) = {out} != {w}"));
            }
        }
        for a1 in assemblies_over(o, &ground) {
            let blocks = a1.block_labels();
            // cancellation in the external argument
            let mut seen = std::collections::BTreeMap::new();
            for w in o.enumerate(&blocks) {
                let out = o.eta(&a1, &w);
                if let Some(other) = seen.insert(out.clone(), w.clone()) {
                    cancel_cex
                        .get_or_insert(format!("eta({a1},{w}) = eta({a1},{other}) = {out}"));
                }
            }
            // associativity over two-level nestings
            for a2 in assemblies_over(o, &blocks) {
                let merge = merge_lift(&a2);
                for w in o.enumerate(&a2.block_labels()) {
                    let inner = o.eta(&a2, &w);
                    let rhs = o.eta(&a1, &inner);
                    let merged = bar_eta(o, &a1, &a2).expect("grounds match");
                    let lhs = o.eta(&merged, &o.transport(&w, &merge));
                    if lhs != rhs {
                        assoc_cex.get_or_insert(format!(
                            "eta(bar_eta({a1},{a2}), {w}) = {lhs} != {rhs}"
                        ));
                    }
                }
            }
        }
    }
    report.record("left identity law", left_identity_cex);
    report.record("right identity law", right_identity_cex);
    report.record("associativity", assoc_cex);
    report.record("left cancellation", cancel_cex);
    report
}

pub fn check_monop_axioms(mp: &dyn Monop, n_max: usize) -> Report {
    let mut report = Report::new(format!("monop {}", mp.id()), n_max);
    let monoid = mp.monoid();
    let operad = mp.operad();

    let monoid_report = check_monoid_axioms(monoid, n_max);
    report.record(
        "monoid axioms",
        monoid_report
            .first_failure()
            .map(|c| format!("{}: {}", c.law, c.counterexample.clone().unwrap_or_default())),
    );
    let operad_report = check_operad_axioms(operad, n_max);
    report.record(
        "operad axioms",
        operad_report
            .first_failure()
            .map(|c| format!("{}: {}", c.law, c.counterexample.clone().unwrap_or_default())),
    );

    let mut module_identity_cex = None;
    let mut module_assoc_cex = None;
    let mut module_cancel_cex = None;
    let mut compat_cex = None;
    for n in 1..=n_max {
        let ground = LabelSet::atoms(n);
        let lift = singleton_lift(&ground);
        // identity assemblies act trivially
        for m in monoid.enumerate(&ground) {
            let lifted = monoid.transport(&m, &lift);
            let back = mp.tau(&operad.identity_assembly(&ground), &lifted);
            if back != m {
                module_identity_cex
                    .get_or_insert(format!("tau(identities, {lifted}) = {back} != {m}"));
            }
        }
        for a1 in assemblies_over(operad, &ground) {
            let blocks = a1.block_labels();
            // cancellation of the action
            let mut seen = std::collections::BTreeMap::new();
            for m in monoid.enumerate(&blocks) {
                let out = mp.tau(&a1, &m);
                if let Some(other) = seen.insert(out.clone(), m.clone()) {
                    module_cancel_cex
                        .get_or_insert(format!("tau({a1},{m}) = tau({a1},{other}) = {out}"));
                }
            }
            // pseudo-associativity with the substitution product
            for a2 in assemblies_over(operad, &blocks) {
                let merge = merge_lift(&a2);
                for m in monoid.enumerate(&a2.block_labels()) {
                    let rhs = mp.tau(&a1, &mp.tau(&a2, &m));
                    let merged = bar_eta(operad, &a1, &a2).expect("grounds match");
                    let lhs = mp.tau(&merged, &monoid.transport(&m, &merge));
                    if lhs != rhs {
                        module_assoc_cex.get_or_insert(format!(
                            "tau(bar_eta({a1},{a2}),{m}) = {lhs} != {rhs}"
                        ));
                    }
                }
            }
        }
        // compatibility of nu and tau over two-way splits
        for (v1, v2) in subsets(&ground) {
            for a1 in assemblies_over(operad, &v1) {
                for a2 in assemblies_over(operad, &v2) {
                    let joint = a1.union(&a2).expect("disjoint grounds");
                    for m1 in monoid.enumerate(&a1.block_labels()) {
                        for m2 in monoid.enumerate(&a2.block_labels()) {
                            let lhs = monoid.nu(
                                &tau_or_identity(mp, &a1, &m1),
                                &tau_or_identity(mp, &a2, &m2),
                            );
                            let rhs = tau_or_identity(mp, &joint, &monoid.nu(&m1, &m2));
                            if lhs != rhs {
                                compat_cex.get_or_insert(format!(
                                    "nu(tau({a1},{m1}),tau({a2},{m2})) = {lhs} != {rhs}"
                                ));
                            }
                        }
                    }
                }
            }
        }
    }
    report.record("module identity", module_identity_cex);
    report.record("module pseudo-associativity", module_assoc_cex);
    report.record("module cancellation", module_cancel_cex);
    report.record("compatibility", compat_cex);

    // lifted product laws on pairs
    let mut rho_unit_cex = None;
    let mut rho_zero_cex = None;
    let mut rho_assoc_cex = None;
    let mut rho_cancel_cex = None;
    let mut rho_nondiv_cex = None;
    for n in 0..=n_max {
        let ground = LabelSet::atoms(n);
        let zero = monop_zero(mp, &ground);
        let lift = singleton_lift(&ground);
        for x in monop_elements(mp, &ground) {
            let blocks = x.1.block_labels();
            let unit = (monoid.identity_element(), operad.identity_assembly(&blocks));
            match bar_rho(mp, &x, &unit) {
                Ok(out) if out == x => {}
                out => {
                    rho_unit_cex.get_or_insert(format!("rho({x:?}, unit) = {out:?}"));
                }
            }
            // x is reached from the zero element by its own lift
            let lifted = (
                monoid.transport(&x.0, &lift),
                Assembly::new(
                    x.1.members()
                        .iter()
                        .map(|s| operad.transport(s, &lift))
                        .collect(),
                )
                .expect("lift preserves disjointness"),
            );
            match bar_rho(mp, &zero, &lifted) {
                Ok(out) if out == x => {}
                out => {
                    rho_zero_cex.get_or_insert(format!("rho(zero, lift of {x:?}) = {out:?}"));
                }
            }

            let mut seen = std::collections::BTreeMap::new();
            for y in monop_elements(mp, &blocks) {
                let xy = bar_rho(mp, &x, &y).expect("y splits the blocks");
                if let Some(other) = seen.insert(xy.clone(), y.clone()) {
                    rho_cancel_cex
                        .get_or_insert(format!("rho(x,{y:?}) = rho(x,{other:?}) for x={x:?}"));
                }
                if xy == x && y != unit {
                    rho_nondiv_cex.get_or_insert(format!("proper divisor {y:?} fixes {x:?}"));
                }
                // associativity: absorb z at the inner or the outer level
                let y_blocks = y.1.block_labels();
                let merge = merge_lift(&y.1);
                for z in monop_elements(mp, &y_blocks) {
                    let rhs = bar_rho(mp, &x, &bar_rho(mp, &y, &z).expect("z splits y"))
                        .expect("result splits x");
                    let z_lift = (
                        monoid.transport(&z.0, &merge),
                        Assembly::new(
                            z.1.members()
                                .iter()
                                .map(|s| operad.transport(s, &merge))
                                .collect(),
                        )
                        .expect("merge preserves disjointness"),
                    );
                    let lhs = bar_rho(mp, &xy, &z_lift).expect("lifted z splits xy");
                    if lhs != rhs {
                        rho_assoc_cex.get_or_insert(format!(
                            "rho(rho(x,y),z) != rho(x,rho(y,z)) at x={x:?}, y={y:?}, z={z:?}"
                        ));
                    }
                }
            }
        }
    }
    report.record("rho unit law", rho_unit_cex);
    report.record("rho reaches every element from zero", rho_zero_cex);
    report.record("rho associativity", rho_assoc_cex);
    report.record("rho left cancellation", rho_cancel_cex);
    report.record("rho has no proper divisors of identity", rho_nondiv_cex);
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::riordan::AdmissiblePair;
    use crate::species::{Payload, Species};
    use itertools::Itertools;

    struct SetMonoid;

    impl Species for SetMonoid {
        fn id(&self) -> String {
            "test_E".into()
        }
        fn enumerate(&self, labels: &LabelSet) -> Vec<Structure> {
            vec![Structure::new("test_E", labels.clone(), Payload::Unit)]
        }
    }

    impl Monoid for SetMonoid {
        fn identity_element(&self) -> Structure {
            Structure::new("test_E", LabelSet::empty(), Payload::Unit)
        }
        fn nu(&self, m1: &Structure, m2: &Structure) -> Structure {
            Structure::new("test_E", m1.labels.union(&m2.labels), Payload::Unit)
        }
    }

    struct SetOperad;

    impl Species for SetOperad {
        fn id(&self) -> String {
            "test_E_plus".into()
        }
        fn is_positive(&self) -> bool {
            true
        }
        fn enumerate(&self, labels: &LabelSet) -> Vec<Structure> {
            if labels.is_empty() {
                vec![]
            } else {
                vec![Structure::new("test_E_plus", labels.clone(), Payload::Unit)]
            }
        }
    }

    impl Operad for SetOperad {
        fn identity_on(&self, label: &Label) -> Structure {
            Structure::new(
                "test_E_plus",
                LabelSet::singleton(label.clone()),
                Payload::Unit,
            )
        }
        fn eta(&self, a: &Assembly, _external: &Structure) -> Structure {
            Structure::new("test_E_plus", a.ground(), Payload::Unit)
        }
    }

    struct SetMonop;

    impl Monop for SetMonop {
        fn id(&self) -> String {
            "test_E_E_plus".into()
        }
        fn monoid(&self) -> &dyn Monoid {
            &SET_MONOID
        }
        fn operad(&self) -> &dyn Operad {
            &SET_OPERAD
        }
        fn tau(&self, a: &Assembly, _m: &Structure) -> Structure {
            Structure::new("test_E", a.ground(), Payload::Unit)
        }
        fn counting_pair(&self, _trunc: usize) -> Option<AdmissiblePair> {
            None
        }
    }

    static SET_MONOID: SetMonoid = SetMonoid;
    static SET_OPERAD: SetOperad = SetOperad;

    /// List monoid used for fault detection: plenty of structures, so broken
    /// laws are visible.
    struct ListMonoid {
        swap_singletons: bool,
    }

    impl Species for ListMonoid {
        fn id(&self) -> String {
            "test_L".into()
        }
        fn enumerate(&self, labels: &LabelSet) -> Vec<Structure> {
            labels
                .iter()
                .cloned()
                .permutations(labels.len())
                .map(|perm| Structure::new("test_L", labels.clone(), Payload::Seq(perm)))
                .collect()
        }
    }

    impl Monoid for ListMonoid {
        fn identity_element(&self) -> Structure {
            Structure::new("test_L", LabelSet::empty(), Payload::Seq(vec![]))
        }
        fn nu(&self, m1: &Structure, m2: &Structure) -> Structure {
            let (Payload::Seq(s1), Payload::Seq(s2)) = (&m1.payload, &m2.payload) else {
                panic!("list payloads expected");
            };
            let seq: Vec<Label> = if self.swap_singletons && s1.len() == 1 {
                s2.iter().chain(s1.iter()).cloned().collect()
            } else {
                s1.iter().chain(s2.iter()).cloned().collect()
            };
            Structure::new("test_L", m1.labels.union(&m2.labels), Payload::Seq(seq))
        }
    }

    #[test]
    fn set_monoid_passes() {
        let report = check_monoid_axioms(&SET_MONOID, 4);
        assert!(report.passed, "{:?}", report.first_failure());
    }

    #[test]
    fn set_operad_passes() {
        let report = check_operad_axioms(&SET_OPERAD, 4);
        assert!(report.passed, "{:?}", report.first_failure());
    }

    #[test]
    fn set_monop_passes() {
        let report = check_monop_axioms(&SetMonop, 4);
        assert!(report.passed, "{:?}", report.first_failure());
        let json = report.to_json();
        assert_eq!(json["passed"], true);
        assert!(json["checks"].as_array().unwrap().len() >= 10);
    }

    #[test]
    fn list_monoid_passes() {
        let report = check_monoid_axioms(
            &ListMonoid {
                swap_singletons: false,
            },
            4,
        );
        assert!(report.passed, "{:?}", report.first_failure());
    }

    #[test]
    fn broken_nu_is_caught() {
        let report = check_monoid_axioms(
            &ListMonoid {
                swap_singletons: true,
            },
            3,
        );
        assert!(!report.passed);
        let failure = report.first_failure().unwrap();
        assert_eq!(failure.law, "associativity");
        assert!(failure.counterexample.is_some());
    }

    /// Operad that drops the external structure entirely.
    struct ForgetfulOperad;

    impl Species for ForgetfulOperad {
        fn id(&self) -> String {
            "test_L_plus_broken".into()
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
                .map(|perm| {
                    Structure::new("test_L_plus_broken", labels.clone(), Payload::Seq(perm))
                })
                .collect()
        }
    }

    impl Operad for ForgetfulOperad {
        fn identity_on(&self, label: &Label) -> Structure {
            Structure::new(
                "test_L_plus_broken",
                LabelSet::singleton(label.clone()),
                Payload::Seq(vec![label.clone()]),
            )
        }
        fn eta(&self, a: &Assembly, _external: &Structure) -> Structure {
            // concatenates in block order, ignoring the external list
            let seq: Vec<Label> = a
                .members()
                .iter()
                .flat_map(|m| match &m.payload {
                    Payload::Seq(s) => s.clone(),
                    _ => panic!("list payloads expected"),
                })
                .collect();
            Structure::new("test_L_plus_broken", a.ground(), Payload::Seq(seq))
        }
    }

    #[test]
    fn broken_eta_is_caught() {
        let report = check_operad_axioms(&ForgetfulOperad, 3);
        assert!(!report.passed);
        assert!(report
            .checks
            .iter()
            .any(|c| c.law == "left cancellation" && !c.passed));
    }
}
