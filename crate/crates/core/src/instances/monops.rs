//! The cataloged monops: a monoid, an operad, and the action tau that lets
//! operad assemblies collapse into monoid structures. Each carries its
//! closed-form counting pair (M(x), O(x)).

use std::sync::Arc;

use crate::combinatorics::Label;
use crate::instances::cycles::CyclesOperad;
use crate::instances::dowling::DowlingOperad;
use crate::instances::egf;
use crate::instances::free_monoid::FreeCommutativeMonoid;
use crate::instances::graphs::{graph_action, ConnectedGraphsOperad, GraphsMonoid};
use crate::instances::group::FiniteGroup;
use crate::instances::lists::{splice_lists, ListTupleMonoid, ListsMonoid, PositiveListsOperad};
use crate::instances::sets::{
    BallotMonoid, EvenSetsMonoid, OddSetsOperad, OneMonoid, PositiveSetsOperad, SetsMonoid,
};
use crate::riordan::AdmissiblePair;
use crate::species::{bar_eta, Assembly, Monoid, Monop, Operad, Payload, Species, Structure};

fn seq_of(s: &Structure) -> &Vec<Label> {
    match &s.payload {
        Payload::Seq(seq) => seq,
        _ => panic!("list payload expected on {s}"),
    }
}

fn colors_of(s: &Structure) -> &Vec<(Label, usize)> {
    match &s.payload {
        Payload::Colors(colors) => colors,
        _ => panic!("coloring payload expected on {s}"),
    }
}

/// Spread the colors of a block coloring to the atoms inside each block.
fn spread_colors(a: &Assembly, m: &Structure) -> Vec<(Label, usize)> {
    let mut colors = Vec::new();
    for member in a.members() {
        let block = Label::block(member.labels.as_slice().to_vec());
        let slot = colors_of(m)
            .iter()
            .find(|(l, _)| l == &block)
            .unwrap_or_else(|| panic!("block {block} is uncolored in {m}"))
            .1;
        for l in member.labels.iter() {
            colors.push((l.clone(), slot));
        }
    }
    colors.sort();
    colors
}

/// (E, E_+): sets acted on by positive sets; counting pair (e^x, e^x - 1).
pub struct SetsOverSets {
    monoid: SetsMonoid,
    operad: PositiveSetsOperad,
}

impl SetsOverSets {
    pub fn new() -> Self {
        SetsOverSets {
            monoid: SetsMonoid,
            operad: PositiveSetsOperad,
        }
    }
}

impl Monop for SetsOverSets {
    fn id(&self) -> String {
        "E_Eplus".into()
    }
    fn monoid(&self) -> &dyn Monoid {
        &self.monoid
    }
    fn operad(&self) -> &dyn Operad {
        &self.operad
    }
    fn tau(&self, a: &Assembly, _m: &Structure) -> Structure {
        Structure::new("E", a.ground(), Payload::Unit)
    }
    fn counting_pair(&self, trunc: usize) -> Option<AdmissiblePair> {
        use crate::powerseries::ExactSeries;
        AdmissiblePair::new(ExactSeries::exp(trunc), ExactSeries::exp_minus_one(trunc)).ok()
    }
}

/// (Pi, E_+): partitions acted on by block merging; counting pair
/// (e^{e^x-1}, e^x - 1).
pub struct PartitionsOverSets {
    monoid: FreeCommutativeMonoid,
    operad: PositiveSetsOperad,
}

impl PartitionsOverSets {
    pub fn new() -> Self {
        PartitionsOverSets {
            monoid: FreeCommutativeMonoid::new("Pi", Arc::new(PositiveSetsOperad)),
            operad: PositiveSetsOperad,
        }
    }
}

impl Monop for PartitionsOverSets {
    fn id(&self) -> String {
        "Pi_Eplus".into()
    }
    fn monoid(&self) -> &dyn Monoid {
        &self.monoid
    }
    fn operad(&self) -> &dyn Operad {
        &self.operad
    }
    fn tau(&self, a: &Assembly, m: &Structure) -> Structure {
        // the partition over the blocks of a substitutes blockwise
        let merged = bar_eta(&self.operad, a, &FreeCommutativeMonoid::unwrap(m))
            .expect("partition covers the blocks of the assembly");
        self.monoid.wrap(a.ground(), &merged)
    }
    fn counting_pair(&self, trunc: usize) -> Option<AdmissiblePair> {
        use crate::powerseries::ExactSeries;
        AdmissiblePair::new(egf::bell(trunc), ExactSeries::exp_minus_one(trunc)).ok()
    }
}

/// (L, L_+): lists acted on by nonempty lists; counting pair
/// (1/(1-x), x/(1-x)).
pub struct ListsOverLists {
    monoid: ListsMonoid,
    operad: PositiveListsOperad,
}

impl ListsOverLists {
    pub fn new() -> Self {
        ListsOverLists {
            monoid: ListsMonoid,
            operad: PositiveListsOperad,
        }
    }
}

impl Monop for ListsOverLists {
    fn id(&self) -> String {
        "L_Lplus".into()
    }
    fn monoid(&self) -> &dyn Monoid {
        &self.monoid
    }
    fn operad(&self) -> &dyn Operad {
        &self.operad
    }
    fn tau(&self, a: &Assembly, m: &Structure) -> Structure {
        Structure::new(
            "L",
            a.ground(),
            Payload::Seq(splice_lists(a, seq_of(m))),
        )
    }
    fn counting_pair(&self, trunc: usize) -> Option<AdmissiblePair> {
        use crate::powerseries::ExactSeries;
        AdmissiblePair::new(ExactSeries::geometric(trunc), egf::lists_plus(trunc)).ok()
    }
}

/// (L^r, L_+): r-tuples of lists, each acted on by splicing into its own
/// component; counting pair ((1/(1-x))^r, x/(1-x)).
pub struct ListTuplesOverLists {
    r: usize,
    monoid: ListTupleMonoid,
    operad: PositiveListsOperad,
}

impl ListTuplesOverLists {
    pub fn new(r: usize) -> Self {
        assert!(r >= 1);
        ListTuplesOverLists {
            r,
            monoid: ListTupleMonoid(r),
            operad: PositiveListsOperad,
        }
    }
}

impl Monop for ListTuplesOverLists {
    fn id(&self) -> String {
        format!("laguerre:r={}", self.r)
    }
    fn monoid(&self) -> &dyn Monoid {
        &self.monoid
    }
    fn operad(&self) -> &dyn Operad {
        &self.operad
    }
    fn tau(&self, a: &Assembly, m: &Structure) -> Structure {
        let Payload::Tuple(parts) = &m.payload else {
            panic!("tuple payload expected on {m}");
        };
        let spliced = parts
            .iter()
            .map(|p| match p {
                Payload::Seq(seq) => Payload::Seq(splice_lists(a, seq)),
                _ => panic!("list components expected"),
            })
            .collect();
        Structure::new(self.monoid.id(), a.ground(), Payload::Tuple(spliced))
    }
    fn counting_pair(&self, trunc: usize) -> Option<AdmissiblePair> {
        AdmissiblePair::new(egf::lists_tuple(trunc, self.r), egf::lists_plus(trunc)).ok()
    }
    fn default_n_max(&self) -> usize {
        5
    }
}

/// (E^r, E_+): r-colorings acted on by merging, the merged block inheriting
/// its color from the external block; counting pair (e^{rx}, e^x - 1).
pub struct BallotsOverSets {
    r: usize,
    monoid: BallotMonoid,
    operad: PositiveSetsOperad,
}

impl BallotsOverSets {
    pub fn new(r: usize) -> Self {
        assert!(r >= 1);
        BallotsOverSets {
            r,
            monoid: BallotMonoid(r),
            operad: PositiveSetsOperad,
        }
    }
}

impl Monop for BallotsOverSets {
    fn id(&self) -> String {
        format!("actuarial:r={}", self.r)
    }
    fn monoid(&self) -> &dyn Monoid {
        &self.monoid
    }
    fn operad(&self) -> &dyn Operad {
        &self.operad
    }
    fn tau(&self, a: &Assembly, m: &Structure) -> Structure {
        Structure::new(
            self.monoid.id(),
            a.ground(),
            Payload::Colors(spread_colors(a, m)),
        )
    }
    fn counting_pair(&self, trunc: usize) -> Option<AdmissiblePair> {
        use crate::powerseries::ExactSeries;
        AdmissiblePair::new(
            ExactSeries::exp_c(trunc, self.r as i64),
            ExactSeries::exp_minus_one(trunc),
        )
        .ok()
    }
}

/// (L, C): lists acted on by cycles, reading each cycle from its minimum;
/// counting pair (1/(1-x), log(1/(1-x))).
pub struct ListsOverCycles {
    monoid: ListsMonoid,
    operad: CyclesOperad,
}

impl ListsOverCycles {
    pub fn new() -> Self {
        ListsOverCycles {
            monoid: ListsMonoid,
            operad: CyclesOperad,
        }
    }
}

impl Monop for ListsOverCycles {
    fn id(&self) -> String {
        "L_C".into()
    }
    fn monoid(&self) -> &dyn Monoid {
        &self.monoid
    }
    fn operad(&self) -> &dyn Operad {
        &self.operad
    }
    fn tau(&self, a: &Assembly, m: &Structure) -> Structure {
        // each cycle contributes its canonical linear order, in the order of
        // the external list
        Structure::new(
            "L",
            a.ground(),
            Payload::Seq(splice_lists(a, seq_of(m))),
        )
    }
    fn counting_pair(&self, trunc: usize) -> Option<AdmissiblePair> {
        use crate::powerseries::ExactSeries;
        AdmissiblePair::new(ExactSeries::geometric(trunc), egf::cycles(trunc)).ok()
    }
    fn default_n_max(&self) -> usize {
        5
    }
}

/// (E^ev, E^odd): even sets acted on by odd sets; counting pair
/// (cosh x, sinh x).
pub struct EvenOverOdd {
    monoid: EvenSetsMonoid,
    operad: OddSetsOperad,
}

impl EvenOverOdd {
    pub fn new() -> Self {
        EvenOverOdd {
            monoid: EvenSetsMonoid,
            operad: OddSetsOperad,
        }
    }
}

impl Monop for EvenOverOdd {
    fn id(&self) -> String {
        "Eev_Eodd".into()
    }
    fn monoid(&self) -> &dyn Monoid {
        &self.monoid
    }
    fn operad(&self) -> &dyn Operad {
        &self.operad
    }
    fn tau(&self, a: &Assembly, _m: &Structure) -> Structure {
        // an even number of odd blocks covers an even ground set
        Structure::new("E_ev", a.ground(), Payload::Unit)
    }
    fn counting_pair(&self, trunc: usize) -> Option<AdmissiblePair> {
        use crate::powerseries::ExactSeries;
        AdmissiblePair::new(ExactSeries::cosh(trunc), ExactSeries::sinh(trunc)).ok()
    }
}

/// (E^r, E_+^{uG}): r-colorings acted on by the Dowling operad; the group
/// colors are forgotten and each atom takes its block's slot. Counting pair
/// (e^{rx}, (e^{mx}-1)/m) for |G| = m.
pub struct BallotsOverDowling {
    r: usize,
    monoid: BallotMonoid,
    operad: DowlingOperad,
}

impl BallotsOverDowling {
    pub fn new(r: usize, group: Arc<FiniteGroup>) -> Self {
        assert!(r >= 1);
        BallotsOverDowling {
            r,
            monoid: BallotMonoid(r),
            operad: DowlingOperad::new(group),
        }
    }
}

impl Monop for BallotsOverDowling {
    fn id(&self) -> String {
        let base = if self.r == 1 {
            "E".into()
        } else {
            format!("E{}", self.r)
        };
        format!("{}_{}", base, self.operad.id())
    }
    fn monoid(&self) -> &dyn Monoid {
        &self.monoid
    }
    fn operad(&self) -> &dyn Operad {
        &self.operad
    }
    fn tau(&self, a: &Assembly, m: &Structure) -> Structure {
        Structure::new(
            self.monoid.id(),
            a.ground(),
            Payload::Colors(spread_colors(a, m)),
        )
    }
    fn counting_pair(&self, trunc: usize) -> Option<AdmissiblePair> {
        use crate::powerseries::ExactSeries;
        AdmissiblePair::new(
            ExactSeries::exp_c(trunc, self.r as i64),
            egf::dowling(trunc, self.operad.group().order()),
        )
        .ok()
    }
    fn default_n_max(&self) -> usize {
        5
    }
}

/// (G, G_c): graphs acted on by connected graphs, external edges expanding
/// to all cross edges; counting pair (G(x), log G(x)).
pub struct GraphsOverConnected {
    monoid: GraphsMonoid,
    operad: ConnectedGraphsOperad,
}

impl GraphsOverConnected {
    pub fn new() -> Self {
        GraphsOverConnected {
            monoid: GraphsMonoid,
            operad: ConnectedGraphsOperad,
        }
    }
}

impl Monop for GraphsOverConnected {
    fn id(&self) -> String {
        "G_Gc".into()
    }
    fn monoid(&self) -> &dyn Monoid {
        &self.monoid
    }
    fn operad(&self) -> &dyn Operad {
        &self.operad
    }
    fn tau(&self, a: &Assembly, m: &Structure) -> Structure {
        graph_action(a, m)
    }
    fn counting_pair(&self, trunc: usize) -> Option<AdmissiblePair> {
        AdmissiblePair::new(egf::graphs(trunc), egf::graphs_connected(trunc)).ok()
    }
    fn default_n_max(&self) -> usize {
        4
    }
}

/// (1, O): the trivial monoid paired with any operad; the poset of such a
/// monop is the poset of assemblies of O. Counting pair (1, O(x)).
pub struct PureOperad {
    id: String,
    operad: Box<dyn Operad + Send + Sync>,
    egf: Box<dyn Fn(usize) -> crate::powerseries::ExactSeries + Send + Sync>,
    monoid: OneMonoid,
    n_max: usize,
}

impl PureOperad {
    pub fn new(
        id: impl Into<String>,
        operad: Box<dyn Operad + Send + Sync>,
        egf: Box<dyn Fn(usize) -> crate::powerseries::ExactSeries + Send + Sync>,
        n_max: usize,
    ) -> Self {
        PureOperad {
            id: id.into(),
            operad,
            egf,
            monoid: OneMonoid,
            n_max,
        }
    }
}

impl Monop for PureOperad {
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
        // the only monoid structure lives over the empty set, so the
        // assembly is empty and tau is forced
        assert!(a.is_empty() && m.labels.is_empty(), "trivial monoid");
        self.monoid.identity_element()
    }
    fn counting_pair(&self, trunc: usize) -> Option<AdmissiblePair> {
        use crate::powerseries::ExactSeries;
        AdmissiblePair::new(ExactSeries::one(trunc), (self.egf)(trunc)).ok()
    }
    fn default_n_max(&self) -> usize {
        self.n_max
    }
}
