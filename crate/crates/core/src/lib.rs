//! Exact Riordan arrays, Sheffer polynomial sequences, and the posets that
//! arise from monoids, operads, and monops in the category of set species.

pub mod checks;
pub mod combinatorics;
pub mod derivative;
pub mod error;
pub mod instances;
pub mod posets;
pub mod powerseries;
pub mod riordan;
pub mod sheffer;
pub mod species;

pub use checks::{check_monoid_axioms, check_monop_axioms, check_operad_axioms, Report};
pub use combinatorics::{
    apply_bijection, refine_order, set_partitions, subsets, Bijection, Label, LabelSet,
    SetPartition,
};
pub use derivative::{DerivativeMonoid, DerivativeMonop};
pub use error::{Error, Result};
pub use instances::{catalog, CatalogEntry, InstanceKind};
pub use posets::{
    build_poset_monoid, build_poset_monop, build_poset_operad, check_interval_factorization,
    counting_matrix, mobius_matrix, monoid_mobius_series, monoid_polys_by_summation,
    operad_mobius_series, sheffer_by_summation, FinitePoset, MonoidPoset, MonopPoset,
    OperadPoset,
};
pub use powerseries::{ExactSeries, Rat, SeriesClass};
pub use riordan::{AdmissiblePair, LowerTriangular};
pub use species::{
    assemblies_over, bar_eta, bar_rho, monop_elements, monop_zero, Assembly, Monoid, Monop,
    Operad, Payload, Species, Structure, TreeNode,
};

pub use sheffer::{
    appel_conjugate, apply_delta_series, binomial_conjugate, sheffer_conjugate,
    umbral_inverse, umbral_substitute, ExactPoly, PolySeq,
};
