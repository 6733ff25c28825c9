//! Integer drawings of Horton sets and exact checks of their structure.
//!
//! The crate is organized bottom-up:
//!
//! * [`exact`]: arbitrary-precision points, rationals and the orientation predicate.
//! * [`construct`]: the small drawing `P^k` and the classic drawing `H^k`.
//! * [`analysis`]: order types, the recursive Horton check, empty triangles and holes.
//! * [`lowerbound`]: the level tree of a Horton drawing, slab lines, girth and
//!   width, level pruning and the isotheticizing change of basis.

pub mod analysis;
pub mod construct;
mod drawing;
mod error;
pub mod exact;
mod limits;
pub mod lowerbound;

pub use drawing::{drawing_size, Drawing};
pub use error::{Error, Result};
pub use exact::{orientation, Line, Orientation, Point, Rational, Scalar};
pub use limits::Limits;
