//! Budgeted edge-cover algorithms on vertex-weighted simple graphs.
//!
//! - [`fcec`]: Fixed Cost Minimum Edge Cover, a 2-approximation via an
//!   exact minimum-degree knapsack, plus the uniform-weight shortcut.
//! - [`mwec`]: Maximum Weight m'-Edge Cover, a 2-approximation via
//!   heaviest-vertex guessing and dynamic programming.
//! - [`density`]: exact Degrees Density Augmentation through parametric
//!   minimum s-t cuts with exact rational search.
//! - [`reduce`]: weight rescaling, the randomized MWEC-via-FCEC
//!   reduction, and the empirical LP integrality-gap experiment.
//! - [`oracle`]: exhaustive exact solvers for small instances.

pub mod density;
pub mod error;
pub mod fcec;
pub mod flow;
pub mod gen;
pub mod graph;
pub mod instance;
pub mod mwec;
pub mod oracle;
pub mod rational;
pub mod reduce;

pub use error::{Error, Result};
pub use graph::{Graph, Solution, VertexSet};
pub use rational::Rational;
