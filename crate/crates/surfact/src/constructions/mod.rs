//! Exact-arithmetic verification of the model extendable actions: rational
//! turns, coordinatewise `S³` isometries, embedded geodesic graphs, the
//! cage/wheel/fork builders, the flat-torus square construction, and the
//! claim-by-claim verifiers.

pub mod builders;
pub mod graph;
pub mod isometry;
pub mod square;
pub mod turn;
pub mod verify;

pub use builders::{
    build_cage, build_cage_odd, build_fork, build_wheel, classify_action, generate_group,
    Construction, GROUP_CLOSURE_CAP,
};
pub use graph::{graph_genus, graph_image, Edge, GeodesicGraph, GraphImage};
pub use isometry::{S3Isometry, S3Point};
pub use square::{build_square, SquareConstruction, TorusAffineMap};
pub use turn::RationalTurn;
pub use verify::{
    verify_cage, verify_cage_odd, verify_example, verify_fork, verify_square, verify_wheel, Check,
    CheckReport,
};
