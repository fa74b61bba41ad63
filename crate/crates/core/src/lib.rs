//! Spectral radius of sparse graphs with given order and diameter, with exact
//! certification, quipu families, transfer tools and exhaustive searches.

pub mod canon;
pub mod charpoly;
pub mod error;
pub mod exec;
pub mod float;
pub mod graph;
pub mod graph6;
pub mod poly;
pub mod quipu;
pub mod random;
pub mod root;
pub mod search;
pub mod suites;
pub mod transfer;

pub use canon::{canonical_code, CanonicalCode};
pub use charpoly::{charpoly, charpoly_dense};
pub use error::{GraphError, PolyError, QuipuError, SearchError, TransferError};
pub use exec::Exec;
pub use float::{rho_float, FloatBracket};
pub use graph::{Diameter, Graph};
pub use poly::{Dyadic, IntPoly, Rational};
pub use root::{compare_rho, compare_roots, equal_rho_certificate, rho, rho_certified, CertifiedRoot};
pub use search::{
    brute_force_all_graphs, brute_force_sparse, minimize_over_quipus, verify_exceptions, verify_theorem,
    MinimizerReport, SearchOptions, SearchSpace, Verdict,
};
