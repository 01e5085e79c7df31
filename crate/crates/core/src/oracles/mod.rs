//! Reference computations that do not use the skein recurrence.

pub mod burau;
pub mod hecke;
pub mod kauffman;
pub mod unit;

pub use burau::burau_alexander;
pub use hecke::{hecke_homfly, HECKE_MAX_STRANDS};
pub use kauffman::{kauffman_jones, kauffman_jones_capped, KAUFFMAN_DEFAULT_CAP};
pub use unit::{equal_up_to_unit, UnitClass, UnitWitness};
