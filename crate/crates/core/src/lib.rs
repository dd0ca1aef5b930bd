//! Computation with positively presented monoids.
//!
//! The entry point is [`Monoid`], a homogeneous presentation with a
//! rewriting index. On top of it sit divisibility and common multiples,
//! fundamental and Garside elements, cancellation searches, the
//! `G⁺(m, n)` family, and the group word problem through a central power
//! of a fundamental element.
//!
//! ```
//! use posmon_core::{fixtures::Fixture, Monoid};
//!
//! let m = Monoid::new(Fixture::M6.presentation()).unwrap();
//! let w = |s| m.parse_word(s).unwrap();
//! assert!(m.equal(&w("cdeaf"), &w("ceafd")).unwrap());
//! assert!(!m.equal(&w("deaf"), &w("eafd")).unwrap());
//! ```

pub mod cancel;
pub mod claims;
pub mod divisibility;
pub mod error;
pub mod fixtures;
pub mod garside;
pub mod gmn;
pub mod group;
pub mod presentation;
pub mod rewrite;

pub use divisibility::{DivisionResult, McmReport, Side};
pub use error::{Error, Result};
pub use presentation::{Letter, Presentation, Relation, Word};
pub use rewrite::{EquivClass, Monoid, DEFAULT_CAP};
