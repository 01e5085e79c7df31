//! Exact HOMFLY, Alexander-Conway, Jones and degenerate `D` polynomials of
//! closed braids, computed with the two-term skein recurrence.
//!
//! ```
//! use homfly_core::{eval_poly, BraidWord, Specialization};
//!
//! let trefoil: BraidWord = "B2: 1 1 1".parse().unwrap();
//! let conway = eval_poly(&trefoil, &Specialization::alexander()).unwrap();
//! assert_eq!(conway.to_string(), "s^-2 - 1 + s^2");
//! ```

pub mod braid;
pub mod coeff;
pub mod engine;
pub mod error;
pub mod families;
pub mod genfun;
pub mod laurent;
pub mod oracles;
pub mod rewrite;
pub mod spec;
pub mod verify;

pub use braid::{BraidWord, SimplePartition, Template, WordTransform};
pub use coeff::GaussianRational;
pub use engine::{
    eval_homfly, eval_invariant, eval_poly, expand_template, relative_coefficients,
    relative_expand, simple_base_value, AnyEvaluator, EvalOptions, Evaluator, ExpansionTerm,
    InvariantValue,
};
pub use error::{Error, Result};
pub use genfun::{build_genfun, RationalGF};
pub use laurent::{DegreeProfile, LaurentPoly, Ring, TwoVarLaurent};
pub use rewrite::{class_search, is_simple, RewriteOutcome, SimpleVerdict};
pub use spec::{expansion_coefficient, RecurrenceCoefficients, SpecKind, Specialization};
