//! Exact combinatorics of independent domination and independent bondage on
//! planar graphs under girth constraints.
//!
//! The crate is organized around a pipeline:
//!
//! * [`graph`] — immutable simple graphs with degree-class and girth queries
//! * [`embed`] — rotation systems, face extraction, planarity testing
//! * [`dom`] — exact independent domination number `gamma_i`
//! * [`bond`] — exact independent bondage number `b_i` and closed-form bounds
//! * [`detect`] — structural configuration detection in embedded planar graphs
//! * [`discharge`] — exact-rational discharging engine (charge schemes + rules)
//! * [`certify`] — constructive bondage certificates, always re-verified
//! * [`gen`] — seeded generators of class members (planar, girth/degree bounded)
//! * [`io`] — edge-list, graph6 and rotation-system formats
//! * [`graphs`] — small named graphs used throughout tests and demos

pub mod bond;
pub mod certify;
pub mod detect;
pub mod discharge;
pub mod dom;
pub mod embed;
pub mod gen;
pub mod graph;
pub mod graphs;
pub mod io;

// pub use bond::{b_i_exact, girth_bound, priddy_wei_bound, BondageOutcome, BondageResult};
// pub use certify::{certify_graph, BondageCertificate, GraphClass, Provenance};
// pub use detect::{validate_witness, ConfigWitness, Family};
// pub use discharge::{apply_rules, initial_charges, verify_nonnegative, ChargeState, ChargingScheme, RuleSet};
// pub use dom::{gamma_i, is_independent_dominating, DominationResult};
// pub use embed::{check_planar_embedding, compute_embedding, faces_of, Face, PlanarEmbedding, RotationSystem};
// pub use gen::{generate, ClassSpec};
// pub use graph::{Girth, Graph, GraphError};
