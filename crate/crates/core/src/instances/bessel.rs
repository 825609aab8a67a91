//! The Bessel operad B = X + E_2(B): commutative binary trees with the
//! labels as leaves; substitution grafts the inner trees onto the leaves of
//! the external tree.

use crate::combinatorics::{Label, LabelSet};
use crate::species::{Assembly, Operad, Payload, Species, Structure, TreeNode};

pub struct BesselOperad;

fn tree_of(s: &Structure) -> &TreeNode {
    match &s.payload {
        Payload::Tree(t) => t,
        _ => panic!("tree payload expected on {s}"),
    }
}

fn all_trees(labels: &LabelSet) -> Vec<TreeNode> {
    match labels.len() {
        0 => vec![],
        1 => vec![TreeNode::Leaf(labels.min_label().unwrap().clone())],
        _ => {
            // split off the part containing the minimum to enumerate each
            // unordered pair of subtrees once
            let min = labels.min_label().unwrap().clone();
            let rest = labels.difference(&LabelSet::singleton(min.clone()));
            let mut out = Vec::new();
            for (more, right) in crate::combinatorics::subsets(&rest) {
                if right.is_empty() {
                    continue;
                }
                let left = more.inserted(min.clone());
                for lt in all_trees(&left) {
                    for rt in all_trees(&right) {
                        out.push(TreeNode::node(lt.clone(), rt.clone()));
                    }
                }
            }
            out
        }
    }
}

fn graft(t: &TreeNode, a: &Assembly) -> TreeNode {
    match t {
        TreeNode::Leaf(block) => {
            let member = a
                .member_for_block(block)
                .unwrap_or_else(|| panic!("no subtree for block {block}"));
            tree_of(member).clone()
        }
        TreeNode::Node(left, right) => TreeNode::node(graft(left, a), graft(right, a)),
    }
}

impl Species for BesselOperad {
    fn id(&self) -> String {
        "B".into()
    }
    fn is_positive(&self) -> bool {
        true
    }
    fn enumerate(&self, labels: &LabelSet) -> Vec<Structure> {
        let mut out: Vec<Structure> = all_trees(labels)
            .into_iter()
            .map(|t| Structure::new("B", labels.clone(), Payload::Tree(t)))
            .collect();
        out.sort();
        out
    }
}

impl Operad for BesselOperad {
    fn identity_on(&self, label: &Label) -> Structure {
        Structure::new(
            "B",
            LabelSet::singleton(label.clone()),
            Payload::Tree(TreeNode::Leaf(label.clone())),
        )
    }
    fn eta(&self, a: &Assembly, external: &Structure) -> Structure {
        Structure::new("B", a.ground(), Payload::Tree(graft(tree_of(external), a)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::checks::check_operad_axioms;
    use crate::species::assemblies_over;

    #[test]
    fn axioms() {
        assert!(check_operad_axioms(&BesselOperad, 4).passed);
    }

    #[test]
    fn counts_are_double_factorials() {
        // (2n-3)!! trees on n leaves
        let expected = [0usize, 1, 1, 3, 15, 105];
        for n in 1..=5 {
            assert_eq!(
                BesselOperad.enumerate(&LabelSet::atoms(n)).len(),
                expected[n]
            );
        }
    }

    #[test]
    fn forest_counts() {
        // B_{3,k}: forests of commutative binary trees on 3 labels
        let assemblies = assemblies_over(&BesselOperad, &LabelSet::atoms(3));
        let with_k = |k| assemblies.iter().filter(|a| a.len() == k).count();
        assert_eq!(with_k(1), 3);
        assert_eq!(with_k(2), 3);
        assert_eq!(with_k(3), 1);
    }
}
