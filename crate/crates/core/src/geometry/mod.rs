//! Projective-scheme operations: smoothness via the Jacobian criterion,
//! rational point sampling, internal projection with exceptional-line
//! tracking, random hypersurfaces through a subscheme, quadric rank, and
//! normal-sheaf section counts.

pub mod certificate;
pub mod hypersurface;
pub mod normal_sheaf;
pub mod points;
pub mod projection;
pub mod scheme;
pub mod singular;

pub use certificate::type_ii_certificate;
pub use hypersurface::{quadric_rank, random_hypersurface_containing, random_smooth_hypersurface};
pub use normal_sheaf::h0_normal_sheaf;
pub use points::sample_rational_point;
pub use projection::{are_skew_lines, internal_projection, line_through, InternalProjection};
pub use scheme::{ProjectiveScheme, RationalPoint};
pub use singular::singular_locus;
