//! Randić index of simple graphs, its sharp bounds in terms of minimum and
//! maximum degree, the graphs that attain them, and exhaustive checks over
//! small graphs.

pub mod bounds;
pub mod cli;
pub mod constructions;
pub mod edge_list;
pub mod enumeration;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod numeric;
pub mod profile;
pub mod randic;

pub use bounds::{
    baseline_bound, bounds_report, decomposition_identity, lower_bound, separation_gap,
    separation_gap_product, star_bound, upper_bound, BoundsReport, DecompositionCheck,
};
pub use constructions::{
    build_biregular, build_end_block, build_family_graph, build_mid_block, family_f_certificate,
    minimal_biregular_scale, FamilyFCertificate,
};
pub use edge_list::{parse_edge_list, to_edge_list};
pub use enumeration::{
    enumerate_graphs, extremal_scan, verify_theorems, Constraints, EnumerationSummary,
    VerificationReport,
};
pub use error::{Error, Result};
pub use graph::{BiregularCertificate, Graph};
pub use graph6::{parse_graph6, to_graph6};
pub use numeric::Tolerances;
pub use profile::DegreeProfile;
pub use randic::{identity_residual, randic_caporossi, randic_direct, RandicValue};
