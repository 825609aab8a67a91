//! The instance catalog: named monoids, operads, and monops constructible
//! from a string id, plus their closed-form generating series.

pub mod bessel;
pub mod cycles;
pub mod dowling;
pub mod egf;
pub mod free_monoid;
pub mod graphs;
pub mod group;
pub mod lists;
pub mod monops;
pub mod sets;

use std::sync::Arc;

use serde::Serialize;

use crate::derivative::DerivativeMonop;
use crate::error::{Error, Result};
use crate::powerseries::ExactSeries;
use crate::species::{Monoid, Monop, Operad};

use bessel::BesselOperad;
use cycles::CyclesOperad;
use dowling::DowlingOperad;
use free_monoid::FreeCommutativeMonoid;
use graphs::{ConnectedGraphsOperad, GraphsMonoid};
use group::FiniteGroup;
use lists::{ListTupleMonoid, ListsMonoid, PositiveListsOperad};
use monops::{
    BallotsOverDowling, BallotsOverSets, EvenOverOdd, GraphsOverConnected, ListTuplesOverLists,
    ListsOverCycles, ListsOverLists, PartitionsOverSets, PureOperad, SetsOverSets,
};
use sets::{
    BallotMonoid, EvenSetsMonoid, OddSetsOperad, OneMonoid, PositiveSetsOperad, SetsMonoid,
    SetsOfSize,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum InstanceKind {
    Monoid,
    Operad,
    Monop,
}

#[derive(Debug, Clone, Serialize)]
pub struct CatalogEntry {
    pub id: String,
    pub kind: InstanceKind,
    pub description: String,
    /// Default ground-set bound for exhaustive computations.
    pub n_max: usize,
}

fn entry(id: &str, kind: InstanceKind, description: &str, n_max: usize) -> CatalogEntry {
    CatalogEntry {
        id: id.into(),
        kind,
        description: description.into(),
        n_max,
    }
}

/// Every registered instance id with a one-line description.
pub fn catalog() -> Vec<CatalogEntry> {
    use InstanceKind::*;
    vec![
        entry("E", Monoid, "sets under disjoint union", 6),
        entry("E_ev", Monoid, "even-size sets", 6),
        entry("E_r:2", Monoid, "2-colored sets (any r via E_r:<r>)", 6),
        entry("L", Monoid, "linear orders under concatenation", 6),
        entry("L_r:2", Monoid, "pairs of lists (any r via L_r:<r>)", 5),
        entry("Pi", Monoid, "set partitions under union", 6),
        entry("E(E_2)", Monoid, "perfect matchings under union", 6),
        entry("G", Monoid, "simple graphs under disjoint union", 4),
        entry("One", Monoid, "the trivial monoid", 6),
        entry("E_plus", Operad, "nonempty sets; substitution merges", 6),
        entry("L_plus", Operad, "nonempty lists; substitution splices", 6),
        entry("C", Operad, "cycles; substitution splices", 5),
        entry("E_odd", Operad, "odd-size sets", 6),
        entry("G_c", Operad, "connected graphs; edges expand", 4),
        entry("B", Operad, "commutative binary trees; grafting", 5),
        entry(
            "dowling:Z2",
            Operad,
            "group-colored sets (any cyclic group via dowling:Z<m>)",
            5,
        ),
        entry("E_Eplus", Monop, "sets acted on by nonempty sets", 6),
        entry("Pi_Eplus", Monop, "partitions acted on by nonempty sets", 6),
        entry("L_Lplus", Monop, "lists acted on by nonempty lists", 6),
        entry(
            "L2_Lplus",
            Monop,
            "derivative of nonempty lists: pairs of lists",
            6,
        ),
        entry(
            "laguerre:r=2",
            Monop,
            "r-tuples of lists acted on by nonempty lists",
            5,
        ),
        entry(
            "actuarial:r=2",
            Monop,
            "r-colored sets acted on by nonempty sets",
            6,
        ),
        entry("L_C", Monop, "lists acted on by cycles", 5),
        entry("Eev_Eodd", Monop, "even sets acted on by odd sets", 6),
        entry(
            "E_dowling:Z2",
            Monop,
            "sets acted on by group-colored sets",
            5,
        ),
        entry(
            "E2_dowling:Z2",
            Monop,
            "2-colored sets acted on by group-colored sets",
            5,
        ),
        entry("G_Gc", Monop, "graphs acted on by connected graphs", 4),
        entry("One_Eplus", Monop, "trivial monoid over nonempty sets", 6),
        entry("One_Lplus", Monop, "trivial monoid over nonempty lists", 6),
        entry("One_C", Monop, "trivial monoid over cycles", 5),
        entry("One_Eodd", Monop, "trivial monoid over odd sets", 6),
        entry(
            "One_dowling:Z2",
            Monop,
            "trivial monoid over group-colored sets",
            5,
        ),
        entry("One_B", Monop, "trivial monoid over binary trees", 5),
    ]
}

fn unknown(id: &str) -> Error {
    Error::UnknownInstance(id.into())
}

fn parse_param<'a>(id: &'a str, prefix: &str) -> Option<&'a str> {
    id.strip_prefix(prefix)
}

fn parse_group(name: &str) -> Result<Arc<FiniteGroup>> {
    let m: usize = parse_param(name, "Z")
        .and_then(|s| s.parse().ok())
        .filter(|&m| (1..=6).contains(&m))
        .ok_or_else(|| unknown(name))?;
    Ok(Arc::new(FiniteGroup::cyclic(m)))
}

/// Construct a monoid by id.
pub fn monoid(id: &str) -> Result<Box<dyn Monoid + Send + Sync>> {
    Ok(match id {
        "E" => Box::new(SetsMonoid),
        "E_ev" => Box::new(EvenSetsMonoid),
        "L" => Box::new(ListsMonoid),
        "Pi" => Box::new(FreeCommutativeMonoid::new("Pi", Arc::new(PositiveSetsOperad))),
        "E(E_2)" => Box::new(FreeCommutativeMonoid::new("E(E_2)", Arc::new(SetsOfSize(2)))),
        "G" => Box::new(GraphsMonoid),
        "One" => Box::new(OneMonoid),
        _ => {
            if let Some(r) = parse_param(id, "E_r:") {
                let r: usize = r.parse().map_err(|_| unknown(id))?;
                if r == 0 {
                    return Err(unknown(id));
                }
                Box::new(BallotMonoid(r))
            } else if let Some(r) = parse_param(id, "L_r:") {
                let r: usize = r.parse().map_err(|_| unknown(id))?;
                if r == 0 {
                    return Err(unknown(id));
                }
                Box::new(ListTupleMonoid(r))
            } else {
                return Err(unknown(id));
            }
        }
    })
}

/// Construct an operad by id.
pub fn operad(id: &str) -> Result<Box<dyn Operad + Send + Sync>> {
    Ok(match id {
        "E_plus" => Box::new(PositiveSetsOperad),
        "L_plus" => Box::new(PositiveListsOperad),
        "C" => Box::new(CyclesOperad),
        "E_odd" => Box::new(OddSetsOperad),
        "G_c" => Box::new(ConnectedGraphsOperad),
        "B" => Box::new(BesselOperad),
        _ => {
            if let Some(g) = parse_param(id, "dowling:") {
                Box::new(DowlingOperad::new(parse_group(g)?))
            } else {
                return Err(unknown(id));
            }
        }
    })
}

/// Construct a monop by id.
pub fn monop(id: &str) -> Result<Box<dyn Monop + Send + Sync>> {
    Ok(match id {
        "E_Eplus" => Box::new(SetsOverSets::new()),
        "Pi_Eplus" => Box::new(PartitionsOverSets::new()),
        "L_Lplus" => Box::new(ListsOverLists::new()),
        "L2_Lplus" => Box::new(DerivativeMonop::new(
            "L2_Lplus",
            Arc::new(PositiveListsOperad),
            Box::new(egf::lists_plus),
            6,
        )),
        "L_C" => Box::new(ListsOverCycles::new()),
        "Eev_Eodd" => Box::new(EvenOverOdd::new()),
        "G_Gc" => Box::new(GraphsOverConnected::new()),
        "One_Eplus" => Box::new(PureOperad::new(
            "One_Eplus",
            Box::new(PositiveSetsOperad),
            Box::new(ExactSeries::exp_minus_one),
            6,
        )),
        "One_Lplus" => Box::new(PureOperad::new(
            "One_Lplus",
            Box::new(PositiveListsOperad),
            Box::new(egf::lists_plus),
            6,
        )),
        "One_C" => Box::new(PureOperad::new(
            "One_C",
            Box::new(CyclesOperad),
            Box::new(egf::cycles),
            5,
        )),
        "One_Eodd" => Box::new(PureOperad::new(
            "One_Eodd",
            Box::new(OddSetsOperad),
            Box::new(ExactSeries::sinh),
            6,
        )),
        "One_B" => Box::new(PureOperad::new(
            "One_B",
            Box::new(BesselOperad),
            Box::new(egf::bessel),
            5,
        )),
        _ => {
            if let Some(r) = parse_param(id, "laguerre:r=") {
                let r: usize = r.parse().map_err(|_| unknown(id))?;
                if r == 0 {
                    return Err(unknown(id));
                }
                Box::new(ListTuplesOverLists::new(r))
            } else if let Some(r) = parse_param(id, "actuarial:r=") {
                let r: usize = r.parse().map_err(|_| unknown(id))?;
                if r == 0 {
                    return Err(unknown(id));
                }
                Box::new(BallotsOverSets::new(r))
            } else if let Some(g) = parse_param(id, "E_dowling:") {
                Box::new(BallotsOverDowling::new(1, parse_group(g)?))
            } else if let Some(g) = parse_param(id, "E2_dowling:") {
                Box::new(BallotsOverDowling::new(2, parse_group(g)?))
            } else if let Some(g) = parse_param(id, "One_dowling:") {
                let group = parse_group(g)?;
                let m = group.order();
                Box::new(PureOperad::new(
                    id,
                    Box::new(DowlingOperad::new(group)),
                    Box::new(move |trunc| egf::dowling(trunc, m)),
                    5,
                ))
            } else {
                return Err(unknown(id));
            }
        }
    })
}

/// Closed-form generating series of a cataloged monoid or operad.
pub fn species_egf(id: &str, trunc: usize) -> Result<ExactSeries> {
    Ok(match id {
        "E" => ExactSeries::exp(trunc),
        "E_ev" => ExactSeries::cosh(trunc),
        "L" => ExactSeries::geometric(trunc),
        "Pi" => egf::bell(trunc),
        "E(E_2)" => egf::pairings(trunc),
        "G" => egf::graphs(trunc),
        "One" => ExactSeries::one(trunc),
        "E_plus" => ExactSeries::exp_minus_one(trunc),
        "L_plus" => egf::lists_plus(trunc),
        "C" => egf::cycles(trunc),
        "E_odd" => ExactSeries::sinh(trunc),
        "G_c" => egf::graphs_connected(trunc),
        "B" => egf::bessel(trunc),
        _ => {
            if let Some(r) = parse_param(id, "E_r:") {
                let r: i64 = r.parse().map_err(|_| unknown(id))?;
                ExactSeries::exp_c(trunc, r)
            } else if let Some(r) = parse_param(id, "L_r:") {
                let r: usize = r.parse().map_err(|_| unknown(id))?;
                egf::lists_tuple(trunc, r)
            } else if let Some(g) = parse_param(id, "dowling:") {
                egf::dowling(trunc, parse_group(g)?.order())
            } else {
                return Err(unknown(id));
            }
        }
    })
}
