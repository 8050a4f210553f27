//! Transmission-irregular trees and the Wiener index.
//!
//! A tree is transmission irregular (TI) when no two of its vertices have
//! the same transmission, the sum of distances to all other vertices. This
//! crate builds the trees that maximize the Wiener index among TI trees of
//! a given order, certifies them, and checks the claims exhaustively on
//! small orders.
//!
//! ```
//! use tiwiener::{extremal, FamilySpec, Verdict};
//!
//! let t = "S(3,2,1)".parse::<FamilySpec>()?.build()?.tree;
//! assert_eq!(t.wiener(), 50);
//! assert!(t.is_ti());
//!
//! let out = extremal(16)?;
//! assert_eq!(out.verdict, Verdict::Solved);
//! assert_eq!(out.spec.unwrap().to_string(), "CV(13; 7:2, 9:1)");
//! # Ok::<(), tiwiener::Error>(())
//! ```

pub mod canon;
pub mod error;
pub mod extremal;
pub mod families;
pub mod formulas;
pub mod graph;
pub mod io;
pub mod search;
pub mod transforms;

pub use canon::CanonicalCode;
pub use error::{Error, Result};
pub use extremal::{extremal, CaseLabel, ExtremalOutcome, Verdict};
pub use families::{BuiltTree, FamilySpec, LabelMap};
pub use formulas::{ClosedForm, ClosedFormValue, SpectrumKind, SpectrumOffsets};
pub use graph::{TransmissionProfile, Tree, Vertex};
pub use search::{search_max_ti, search_max_ti_sharded, verify_range, SearchReport, VerifyTable};
