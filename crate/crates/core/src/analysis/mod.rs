//! Order types, the Horton-set verifier, and empty convex polygons.

mod holes;
mod horton;
mod order_type;
mod search;
mod triangles;

pub use holes::{largest_empty_hole, largest_empty_hole_exhaustive, largest_empty_hole_with, HoleReport};
pub use horton::{
    high_above_violation, horton_violation, is_high_above, is_horton, HighAboveViolation, HortonViolation,
};
pub use order_type::{
    first_orientation_difference, order_type, realizes, same_labeled_order_type, triple_rank, OrderTypeVector,
};
pub use search::{min_drawing_search, min_drawing_search_with, SearchOutcome};
pub use triangles::{count_empty_triangles, count_empty_triangles_with, strictly_inside, TriangleTable};
