//! Achievement (`GEN`) and avoidance (`DNG`) building games played on the
//! vertices of a graph, where a set generates when its geodetic closure or
//! convex hull is the whole vertex set.
//!
//! The crate computes nim-numbers of both games with three independent
//! engines (plain game-tree recursion, a memo keyed by structure class, and
//! the structure-digraph type calculus), enumerates the convexity families
//! the games depend on, and knows the closed forms for the standard graph
//! families.
//!
//! ```
//! use geodetic_games::{families, game, GameKind, GameSpec};
//!
//! let g = families::wheel(5).unwrap();
//! assert_eq!(game::nim_brute(&g, GameSpec::hull(GameKind::Gen)).unwrap().value(), 2);
//! ```

pub mod cli;
pub mod closed_forms;
pub mod convexity;
pub mod error;
pub mod families;
pub mod game;
pub mod graph;
pub mod search;
pub mod structure;
pub mod verify;
pub mod vertex_set;

pub use convexity::{ClosureKind, ConvexityReport, Limits, SetFamily};
pub use error::{Error, Result};
pub use families::FamilySpec;
pub use game::{GameKind, GameSpec, Nimber};
pub use graph::Graph;
pub use structure::StructureDigraph;
pub use vertex_set::VertexSet;
