//! Gröbner bases for ideals and submodules of graded free modules:
//! Buchberger with Gebauer–Möller pair elimination, normal forms, and
//! syzygy computation.

pub mod basis;
pub mod engine;
pub mod module;

pub use basis::GroebnerBasis;
pub use engine::{module_buchberger, module_normal_form};
pub use module::{syzygies, FreeModule, FreeModuleElement};
