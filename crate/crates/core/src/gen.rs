//! Instance generators. All randomness flows through a ChaCha stream
//! seeded explicitly, so identical parameters give identical graphs on
//! every platform.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rational::Rational;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;

/// G(n, p): each of the C(n,2) pairs is an edge independently with
/// probability `p`, decided exactly as an integer draw below `p.num()`
/// out of `p.den()`. Unit weights.
pub fn gnp(n: usize, p: Rational, seed: u64) -> Result<Graph> {
    if n < 1 {
        return Err(Error::Input("gnp requires n >= 1".into()));
    }
    if p < Rational::zero() || p > Rational::from_int(1) {
        return Err(Error::Input(format!("edge probability {p} outside [0,1]")));
    }
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    let num = p.num() as u64;
    let den = p.den() as u64;
    let mut edges = Vec::new();
    for u in 0..n as u32 {
        for v in (u + 1)..n as u32 {
            if rng.random_range(0..den) < num {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, vec![1; n], edges)
}

/// Star with vertex 0 as the center and `leaves` pendant vertices.
pub fn star(leaves: usize) -> Result<Graph> {
    let n = leaves + 1;
    let edges = (1..n as u32).map(|v| (0, v)).collect();
    Graph::new(n, vec![1; n], edges)
}

/// Path 0 - 1 - ... - (n-1).
pub fn path(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::Input("path requires n >= 1".into()));
    }
    let edges = (1..n as u32).map(|v| (v - 1, v)).collect();
    Graph::new(n, vec![1; n], edges)
}

/// Complete graph K_n.
pub fn complete(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::Input("complete requires n >= 1".into()));
    }
    let mut edges = Vec::new();
    for u in 0..n as u32 {
        for v in (u + 1)..n as u32 {
            edges.push((u, v));
        }
    }
    Graph::new(n, vec![1; n], edges)
}

/// Replaces unit weights with integers drawn uniformly from `[lo, hi]`.
pub fn random_weights(g: &Graph, lo: u64, hi: u64, seed: u64) -> Result<Graph> {
    if lo > hi {
        return Err(Error::Input("weight range lo > hi".into()));
    }
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    let weights = (0..g.n()).map(|_| rng.random_range(lo..=hi)).collect();
    Graph::new(g.n(), weights, g.edges().to_vec())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gnp_extremes() {
        let g = gnp(5, Rational::zero(), 3).unwrap();
        assert_eq!(g.m(), 0);
        let g = gnp(5, Rational::from_int(1), 3).unwrap();
        assert_eq!(g.m(), 10);
    }

    #[test]
    fn gnp_rejects_bad_probability() {
        assert!(gnp(5, Rational::new(3, 2).unwrap(), 0).is_err());
        assert!(gnp(5, Rational::new(-1, 2).unwrap(), 0).is_err());
    }

    #[test]
    fn gnp_seed_determinism() {
        let p = Rational::new(1, 10).unwrap();
        let a = gnp(100, p, 42).unwrap();
        let b = gnp(100, p, 42).unwrap();
        assert_eq!(a.edges(), b.edges());
        let c = gnp(100, p, 43).unwrap();
        assert_ne!(a.edges(), c.edges());
    }

    #[test]
    fn gnp_regression_edge_count() {
        // E[m] = 495 at n=100, p=1/10; frozen count for this seed
        let g = gnp(100, Rational::new(1, 10).unwrap(), 42).unwrap();
        assert!((300..=600).contains(&g.m()), "m={}", g.m());
        assert_eq!(g.m(), GNP_100_SEED42_EDGES);
    }

    // frozen from the first run; gnp determinism makes this a regression value
    const GNP_100_SEED42_EDGES: usize = 451;

    #[test]
    fn shapes() {
        let s = star(4).unwrap();
        assert_eq!((s.n(), s.m()), (5, 4));
        assert_eq!(s.degree(0), 4);
        let p = path(3).unwrap();
        assert_eq!((p.n(), p.m()), (3, 2));
        let k = complete(4).unwrap();
        assert_eq!((k.n(), k.m()), (4, 6));
    }
}
