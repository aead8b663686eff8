//! Exact Dynkin indices of simple Lie algebra representations.
//!
//! Every quantity is computed in exact arithmetic (arbitrary-precision
//! integers and rationals) by two independent routes — a closed form via
//! the Casimir eigenvalue and Weyl dimension formula, and a character-sum
//! oracle over the full weight system — and audited against embedded
//! published tables.
//!
//! ```
//! use dynkin::{build_root_system, dynkin_index, LieType};
//!
//! let rs = build_root_system("E8".parse::<LieType>().unwrap());
//! // The adjoint representation's index is twice the dual Coxeter number…
//! let adjoint = rs.adjoint_weight();
//! assert_eq!(dynkin_index(&rs, &adjoint).unwrap().to_string(), "60");
//! assert_eq!(rs.dual_coxeter_number(), 30);
//! // …and for E8 it coincides with d(𝔤), the lcm of the comarks.
//! assert_eq!(rs.d_of_g(), 60);
//! ```

pub mod cli;
pub mod error;
pub mod index;
pub mod reference;
pub mod report;
pub mod representation;
pub mod rootsystem;
pub mod serdes;

pub use error::{Error, Result};
pub use index::{
    canonical_level, divisibility_check, dynkin_index, dynkin_index_oracle, fundamental_index_table,
    fundamental_index_table_with, gamma_bound, gamma_bound_with_candidates, index_report,
    is_orthogonal, tensor_index, DivisibilityReport, IndexReport, OracleMode,
};
pub use reference::{ReferenceEntry, ReferenceKind};
pub use report::{
    bounds_table, build_verification, BoundsRow, CheckResult, Scope, Summary, VerificationReport,
    SCHEMA_VERSION,
};
pub use representation::{
    casimir_eigenvalue, tensor_weight_multiset, weight_system, weight_system_with_cap,
    weyl_dimension, WeightMultiset, DEFAULT_MASS_CAP,
};
pub use rootsystem::{build_root_system, LieType, Root, RootSystem, Series, Weight};
