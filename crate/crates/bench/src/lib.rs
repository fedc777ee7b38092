//! Shared instance builders for the benchmark suite.

use edgecover_core::{gen, Graph, Rational};

/// Weighted G(n, p) with weights in [1, 8]; panics on bad parameters,
/// which is fine for benchmark setup.
pub fn weighted_gnp(n: usize, num: i128, den: i128, seed: u64) -> Graph {
    let g = gen::gnp(n, Rational::new(num, den).unwrap(), seed).unwrap();
    gen::random_weights(&g, 1, 8, seed ^ 0x9e3779b97f4a7c15).unwrap()
}
