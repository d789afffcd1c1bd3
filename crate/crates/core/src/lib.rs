//! Exact characters of reductive groups and multiplicity-freeness checks for
//! super symmetric algebras `S(V₀) ⊗ ∧(V₁)`.
//!
//! The layers build on each other: partitions and Littlewood–Richardson
//! coefficients, root data and weights, a Freudenthal-based character engine,
//! universal characters for classical branching, closed-form formulas, and
//! finally representation diagrams with a bounded multiplicity-free check.
//!
//! ```
//! use supermf_core::{dsl::parse_diagram, superalg::is_super_mf, Engine};
//!
//! let d = parse_diagram(
//!     "diagram \"G2 double\"\ngroup G1 = G2\neven U = G1:std\nodd W = G1:std\n",
//! )
//! .unwrap();
//! let v = is_super_mf(&Engine::new(), &d, 3).unwrap();
//! assert!(!v.is_mf());
//! ```

pub mod charengine;
pub mod dsl;
pub mod error;
pub mod formulas;
pub mod lr;
pub mod partitions;
pub mod rootdata;
pub mod superalg;
pub mod universal;
pub mod verify;

pub use charengine::{Engine, FormalChar, PowerKind, RestrictTarget};
pub use error::{Error, Result};
pub use partitions::Partition;
pub use rootdata::{Flavor, GroupType, ProductGroup, Weight};
pub use superalg::{MFVerdict, MfStatus, MultiIndex, Parity, RepDiagram};
pub use verify::{run_suite, SuiteReport};
