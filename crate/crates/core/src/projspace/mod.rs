//! Points, lines and surfaces in P^2 and P^3 over finite fields.

mod line;
mod point;
mod poly;
mod search;
mod smooth;
mod surface;

pub use line::{enumerate_lines, line_count, ProjectiveLine};
pub use point::{canonicalize, enumerate_points, point_count, point_index, ProjectivePoint};
pub use poly::{monomials, HomogeneousPoly, Term};
pub use search::{find_cubic_no_lines, norm_form, CubicFamily, CubicSearchReport};
pub use smooth::{SingularWitness, SmoothnessReport};
pub use surface::{Surface, SurfaceKind};
