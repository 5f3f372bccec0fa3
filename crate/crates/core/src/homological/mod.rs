//! Graded free resolutions, Hom modules between graded modules, and sheaf
//! sections as degree slices of saturated modules.

pub mod graded_module;
pub mod hom;
pub mod resolution;

pub use graded_module::GradedModule;
pub use graded_module::mul_poly;
pub use hom::{graded_hom, hom_slice_dim, sheaf_h0};
pub use resolution::{free_resolution, Resolution};
