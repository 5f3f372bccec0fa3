//! Ideal-level operations (quotient, saturation, elimination) and the
//! Hilbert series machinery that converts Gröbner output into numerical
//! invariants.

pub mod hilbert;
pub mod ideal;

pub use hilbert::{HilbertPoly, HilbertSeries};
pub use ideal::Ideal;
