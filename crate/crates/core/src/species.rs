//! Species, monoids, operads, and monops as runtime descriptors, plus the
//! lifted assembly products eta-bar and rho-bar that generate the posets.

use std::fmt;

use itertools::Itertools;

use crate::combinatorics::{
    apply_bijection, set_partitions, subsets, Bijection, Label, LabelSet, SetPartition,
};
use crate::error::{Error, Result};
use crate::riordan::AdmissiblePair;

/// Canonical payload of a structure. Equality of structures is payload (and
/// label) equality, so every variant keeps a sorted normal form.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Payload {
    /// The bare set carries all the information (E, E_k, E^ev, ...).
    Unit,
    /// A linear arrangement of the labels (lists; cycles stored as the
    /// linear order starting at the minimum).
    Seq(Vec<Label>),
    /// Simple graph: sorted list of sorted endpoint pairs.
    Edges(Vec<(Label, Label)>),
    /// Coloring of the labels by indices (group elements, or ballot slots),
    /// sorted by label.
    Colors(Vec<(Label, usize)>),
    /// An ordered tuple of payloads over disjoint label subsets (L^r).
    Tuple(Vec<Payload>),
    /// A set of inner structures with disjoint labels, sorted (free
    /// commutative monoids, partitions as E(E_+)).
    Members(Vec<Structure>),
    /// Commutative binary tree over the labels as leaves.
    Tree(TreeNode),
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TreeNode {
    Leaf(Label),
    Node(Box<TreeNode>, Box<TreeNode>),
}

impl TreeNode {
    pub fn min_leaf(&self) -> &Label {
        match self {
            TreeNode::Leaf(l) => l,
            // children are kept ordered by minimum leaf
            TreeNode::Node(left, _) => left.min_leaf(),
        }
    }

    /// Unordered pair of children, stored with the min-leaf child first.
    pub fn node(a: TreeNode, b: TreeNode) -> TreeNode {
        if a.min_leaf() <= b.min_leaf() {
            TreeNode::Node(Box::new(a), Box::new(b))
        } else {
            TreeNode::Node(Box::new(b), Box::new(a))
        }
    }

    pub fn leaves(&self) -> LabelSet {
        match self {
            TreeNode::Leaf(l) => LabelSet::singleton(l.clone()),
            TreeNode::Node(a, b) => a.leaves().union(&b.leaves()),
        }
    }

    pub fn num_leaves(&self) -> usize {
        match self {
            TreeNode::Leaf(_) => 1,
            TreeNode::Node(a, b) => a.num_leaves() + b.num_leaves(),
        }
    }

    fn relabel(&self, f: &Bijection) -> TreeNode {
        match self {
            TreeNode::Leaf(l) => TreeNode::Leaf(apply_bijection(f, l)),
            TreeNode::Node(a, b) => TreeNode::node(a.relabel(f), b.relabel(f)),
        }
    }
}

impl Payload {
    /// Push a label bijection through the payload, restoring each variant's
    /// normal form. Species with extra canonicity constraints (cycles)
    /// post-process via `Species::canonicalize`.
    pub fn relabel(&self, f: &Bijection) -> Payload {
        match self {
            Payload::Unit => Payload::Unit,
            Payload::Seq(labels) => {
                Payload::Seq(labels.iter().map(|l| apply_bijection(f, l)).collect())
            }
            Payload::Edges(edges) => {
                let mut out: Vec<(Label, Label)> = edges
                    .iter()
                    .map(|(a, b)| {
                        let (a, b) = (apply_bijection(f, a), apply_bijection(f, b));
                        if a <= b {
                            (a, b)
                        } else {
                            (b, a)
                        }
                    })
                    .collect();
                out.sort();
                out.dedup();
                Payload::Edges(out)
            }
            Payload::Colors(colors) => {
                let mut out: Vec<(Label, usize)> = colors
                    .iter()
                    .map(|(l, c)| (apply_bijection(f, l), *c))
                    .collect();
                out.sort();
                Payload::Colors(out)
            }
            Payload::Tuple(parts) => {
                Payload::Tuple(parts.iter().map(|p| p.relabel(f)).collect())
            }
            Payload::Members(members) => {
                let mut out: Vec<Structure> = members.iter().map(|s| s.relabel(f)).collect();
                out.sort();
                Payload::Members(out)
            }
            Payload::Tree(t) => Payload::Tree(t.relabel(f)),
        }
    }
}

/// A structure of a species over a finite label set.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Structure {
    pub species_id: String,
    pub labels: LabelSet,
    pub payload: Payload,
}

impl Structure {
    pub fn new(species_id: impl Into<String>, labels: LabelSet, payload: Payload) -> Self {
        Structure {
            species_id: species_id.into(),
            labels,
            payload,
        }
    }

    /// Raw relabeling (labels and payload); does not apply species-specific
    /// canonicalization.
    pub fn relabel(&self, f: &Bijection) -> Structure {
        Structure {
            species_id: self.species_id.clone(),
            labels: self.labels.iter().map(|l| apply_bijection(f, l)).collect(),
            payload: self.payload.relabel(f),
        }
    }
}

impl fmt::Display for Structure {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.payload {
            Payload::Unit => write!(out, "{}", self.labels),
            Payload::Seq(labels) => {
                write!(out, "(")?;
                for (i, l) in labels.iter().enumerate() {
                    if i > 0 {
                        write!(out, ",")?;
                    }
                    write!(out, "{l}")?;
                }
                write!(out, ")")
            }
            Payload::Edges(edges) => {
                write!(out, "{}[", self.labels)?;
                for (i, (a, b)) in edges.iter().enumerate() {
                    if i > 0 {
                        write!(out, ",")?;
                    }
                    write!(out, "{a}-{b}")?;
                }
                write!(out, "]")
            }
            Payload::Colors(colors) => {
                write!(out, "[")?;
                for (i, (l, c)) in colors.iter().enumerate() {
                    if i > 0 {
                        write!(out, ",")?;
                    }
                    write!(out, "{l}:{c}")?;
                }
                write!(out, "]")
            }
            Payload::Tuple(parts) => {
                write!(out, "<")?;
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        write!(out, ";")?;
                    }
                    match p {
                        Payload::Seq(labels) => {
                            write!(out, "(")?;
                            for (j, l) in labels.iter().enumerate() {
                                if j > 0 {
                                    write!(out, ",")?;
                                }
                                write!(out, "{l}")?;
                            }
                            write!(out, ")")?;
                        }
                        other => write!(out, "{other:?}")?,
                    }
                }
                write!(out, ">")
            }
            Payload::Members(members) => {
                write!(out, "{{")?;
                for (i, m) in members.iter().enumerate() {
                    if i > 0 {
                        write!(out, "|")?;
                    }
                    write!(out, "{m}")?;
                }
                write!(out, "}}")
            }
            Payload::Tree(t) => write!(out, "{}", display_tree(t)),
        }
    }
}

fn display_tree(t: &TreeNode) -> String {
    match t {
        TreeNode::Leaf(l) => l.to_string(),
        TreeNode::Node(a, b) => format!("({},{})", display_tree(a), display_tree(b)),
    }
}

/// A set of structures with disjoint nonempty label sets, sorted; its
/// partition is the label sets of its members.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Assembly {
    members: Vec<Structure>,
}

impl Assembly {
    pub fn new(mut members: Vec<Structure>) -> Result<Self> {
        if members.iter().any(|m| m.labels.is_empty()) {
            return Err(Error::Invalid("assembly member over empty labels".into()));
        }
        members.sort();
        let total: usize = members.iter().map(|m| m.labels.len()).sum();
        let ground: LabelSet = members
            .iter()
            .flat_map(|m| m.labels.iter().cloned())
            .collect();
        if ground.len() != total {
            return Err(Error::Invalid("assembly members overlap".into()));
        }
        Ok(Assembly { members })
    }

    pub fn empty() -> Self {
        Assembly { members: vec![] }
    }

    pub fn members(&self) -> &[Structure] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn ground(&self) -> LabelSet {
        self.members
            .iter()
            .flat_map(|m| m.labels.iter().cloned())
            .collect()
    }

    pub fn partition(&self) -> SetPartition {
        SetPartition::new(self.members.iter().map(|m| m.labels.clone()).collect())
            .expect("assembly members are disjoint and nonempty")
    }

    /// Ground set one level up: each member's label set as a block label.
    pub fn block_labels(&self) -> LabelSet {
        self.members
            .iter()
            .map(|m| Label::block(m.labels.as_slice().to_vec()))
            .collect()
    }

    pub fn member_for_block(&self, block: &Label) -> Option<&Structure> {
        self.members
            .iter()
            .find(|m| &Label::block(m.labels.as_slice().to_vec()) == block)
    }

    /// Union of two assemblies with disjoint grounds.
    pub fn union(&self, other: &Assembly) -> Result<Assembly> {
        let mut members = self.members.clone();
        members.extend(other.members.iter().cloned());
        Assembly::new(members)
    }
}

impl fmt::Display for Assembly {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(out, "{{")?;
        for (i, m) in self.members.iter().enumerate() {
            if i > 0 {
                write!(out, " ")?;
            }
            write!(out, "{m}")?;
        }
        write!(out, "}}")
    }
}

/// A finite-set species given by explicit enumeration and transport.
pub trait Species: Sync {
    fn id(&self) -> String;

    fn is_positive(&self) -> bool {
        false
    }

    /// All structures over the given labels, in a deterministic order.
    fn enumerate(&self, labels: &LabelSet) -> Vec<Structure>;

    /// Restore any canonicity constraint the generic relabeling cannot see
    /// (e.g. rotating a cycle to start at its minimum).
    fn canonicalize(&self, payload: Payload, _labels: &LabelSet) -> Payload {
        payload
    }

    fn transport(&self, s: &Structure, f: &Bijection) -> Structure {
        let moved = s.relabel(f);
        let payload = self.canonicalize(moved.payload, &moved.labels);
        Structure {
            payload,
            ..moved
        }
    }
}

/// A monoid of species: associative product with unit over the empty set.
pub trait Monoid: Species {
    fn identity_element(&self) -> Structure;

    /// Product over the disjoint union of the two label sets.
    fn nu(&self, m1: &Structure, m2: &Structure) -> Structure;
}

/// An operad of species: substitution product and singleton identities.
pub trait Operad: Species {
    fn identity_on(&self, label: &Label) -> Structure;

    /// Substitute the assembly into an external structure whose labels are
    /// the assembly's blocks.
    fn eta(&self, a: &Assembly, external: &Structure) -> Structure;

    /// The assembly of singleton identities over a ground set.
    fn identity_assembly(&self, ground: &LabelSet) -> Assembly {
        Assembly::new(ground.iter().map(|l| self.identity_on(l)).collect())
            .expect("singleton identities are disjoint")
    }
}

/// A monop: a monoid, an operad, and a compatible right action tau of
/// operad assemblies on monoid structures over their partition.
pub trait Monop: Sync {
    fn id(&self) -> String;
    fn monoid(&self) -> &dyn Monoid;
    fn operad(&self) -> &dyn Operad;

    /// tau(a, m): a an assembly of operad structures over V, m a monoid
    /// structure over the blocks of a; the result lives over V.
    fn tau(&self, a: &Assembly, m: &Structure) -> Structure;

    /// Closed-form EGF pair (M(x), O(x)) when known.
    fn counting_pair(&self, trunc: usize) -> Option<AdmissiblePair>;

    fn default_n_max(&self) -> usize {
        6
    }
}

/// Lifted substitution on assemblies: each member of a2 swallows the members
/// of a1 lying in its label set (a set of blocks of a1).
pub fn bar_eta(op: &dyn Operad, a1: &Assembly, a2: &Assembly) -> Result<Assembly> {
    if a2.ground() != a1.block_labels() {
        return Err(Error::LabelMismatch(format!(
            "assembly over {} cannot substitute into assembly over {}",
            a1.block_labels(),
            a2.ground()
        )));
    }
    let members = a2
        .members()
        .iter()
        .map(|w| {
            let inner: Vec<Structure> = w
                .labels
                .iter()
                .map(|block| {
                    a1.member_for_block(block)
                        .cloned()
                        .ok_or_else(|| Error::LabelMismatch(format!("no member for {block}")))
                })
                .collect::<Result<_>>()?;
            Ok(op.eta(&Assembly::new(inner)?, w))
        })
        .collect::<Result<Vec<_>>>()?;
    Assembly::new(members)
}

/// The monop product on pairs. x = (m1, a1) over V; y = (m2', a2') over the
/// blocks of a1 split as pi1 + pi2: m2' a monoid structure on pi1, a2' an
/// operad assembly on pi2. Returns
/// (nu(m1, tau(a1|pi1, m2')), bar_eta(a1|pi2, a2')).
pub fn bar_rho(
    mp: &dyn Monop,
    x: &(Structure, Assembly),
    y: &(Structure, Assembly),
) -> Result<(Structure, Assembly)> {
    let (m1, a1) = x;
    let (m2, a2) = y;
    let blocks = a1.block_labels();
    if !m2.labels.is_disjoint(&a2.ground())
        || m2.labels.union(&a2.ground()) != blocks
    {
        return Err(Error::LabelMismatch(format!(
            "pair over {}+{} does not split the blocks {}",
            m2.labels,
            a2.ground(),
            blocks
        )));
    }
    let mut absorbed = Vec::new();
    let mut kept = Vec::new();
    for member in a1.members() {
        let block = Label::block(member.labels.as_slice().to_vec());
        if m2.labels.contains(&block) {
            absorbed.push(member.clone());
        } else {
            kept.push(member.clone());
        }
    }
    let m = if m2.labels.is_empty() {
        // tau over the empty assembly is the monoid identity
        m1.clone()
    } else {
        mp.monoid().nu(m1, &mp.tau(&Assembly::new(absorbed)?, m2))
    };
    let a = bar_eta(mp.operad(), &Assembly::new(kept)?, a2)?;
    Ok((m, a))
}

/// All assemblies of structures of a species over a ground set.
pub fn assemblies_over(sp: &dyn Species, ground: &LabelSet) -> Vec<Assembly> {
    let mut out = Vec::new();
    for partition in set_partitions(ground) {
        if partition.num_blocks() == 0 {
            out.push(Assembly::empty());
            continue;
        }
        let choices: Vec<Vec<Structure>> = partition
            .blocks()
            .iter()
            .map(|b| sp.enumerate(b))
            .collect();
        if choices.iter().any(Vec::is_empty) {
            continue;
        }
        for combo in choices.into_iter().multi_cartesian_product() {
            out.push(Assembly::new(combo).expect("partition blocks are disjoint"));
        }
    }
    out
}

/// All monop elements (m, a) over a ground set: m over V1, a over V2.
pub fn monop_elements(mp: &dyn Monop, ground: &LabelSet) -> Vec<(Structure, Assembly)> {
    let mut out = Vec::new();
    for (v1, v2) in subsets(ground) {
        for m in mp.monoid().enumerate(&v1) {
            for a in assemblies_over(as_species(mp.operad()), &v2) {
                out.push((m.clone(), a));
            }
        }
    }
    out
}

/// The minimum element (identity of M[0], all-singleton identities).
pub fn monop_zero(mp: &dyn Monop, ground: &LabelSet) -> (Structure, Assembly) {
    (
        mp.monoid().identity_element(),
        mp.operad().identity_assembly(ground),
    )
}

/// Upcast helper: operads are species.
pub fn as_species(op: &dyn Operad) -> &dyn Species {
    op as &dyn Species
}
