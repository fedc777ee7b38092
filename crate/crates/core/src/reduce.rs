//! Weight rescaling, the randomized MWEC-via-FCEC reduction, and the
//! empirical LP integrality-gap experiment.

use crate::error::{Error, Result};
use crate::fcec::{fcec_approx, k_lowest_degree, FcecInstance};
use crate::gen;
use crate::graph::{touched, Graph, Solution, VertexSet};
use crate::rational::Rational;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;

/// Instance with weights dropped below w_max / n^2 and the survivors
/// rescaled to integers in [n^2, n^4].
#[derive(Debug, Clone)]
pub struct RescaledInstance {
    /// induced graph on the kept vertices, carrying the rescaled weights
    pub graph: Graph,
    /// original ids of the kept vertices, indexed by new id
    pub kept: Vec<u32>,
    /// original id of the pivot (lightest kept vertex)
    pub pivot: u32,
    /// original weights of the kept vertices, indexed by new id
    pub original_weights: Vec<u64>,
}

/// Drops every vertex with w(v) * n^2 < w_max and rescales survivors by
/// w'(v) = floor(w(v) * n^2 / w_pivot). Keeps the optimum within a
/// (1 - 1/n)(1 - 1/n^2) factor while bounding total weight by n^5.
pub fn rescale_weights(g: &Graph) -> Result<RescaledInstance> {
    let n = g.n() as u128;
    let w_max = *g.weights().iter().max().expect("n >= 1");
    if w_max == 0 {
        return Err(Error::Input("rescaling requires a positive weight".into()));
    }
    let kept: Vec<u32> = (0..g.n() as u32)
        .filter(|&v| g.weight(v) as u128 * n * n >= w_max as u128)
        .collect();
    let (pivot, w_pivot) = kept
        .iter()
        .map(|&v| (v, g.weight(v)))
        .min_by_key(|&(v, w)| (w, std::cmp::Reverse(v)))
        .expect("the heaviest vertex always survives");
    let new_weights: Vec<u64> = kept
        .iter()
        .map(|&v| (g.weight(v) as u128 * n * n / w_pivot as u128) as u64)
        .collect();
    let original_weights = kept.iter().map(|&v| g.weight(v)).collect();
    Ok(RescaledInstance {
        graph: g.induced(&kept, new_weights)?,
        kept,
        pivot,
        original_weights,
    })
}

/// Distinct achievable subset sums of `weights`, ascending, zero
/// excluded. Bit-set dynamic program; refuses instances whose total
/// weight would need more than `LIMIT` bits.
fn achievable_sums(weights: &[u64]) -> Result<Vec<u64>> {
    const LIMIT: u64 = 1 << 27;
    let total: u64 = weights.iter().sum();
    if total >= LIMIT {
        return Err(Error::Input(format!(
            "total rescaled weight {total} too large to enumerate reduction guesses"
        )));
    }
    let words = (total as usize) / 64 + 1;
    let mut bits = vec![0u64; words];
    bits[0] = 1; // empty sum
    for &w in weights {
        let (word_shift, bit_shift) = ((w / 64) as usize, (w % 64) as u32);
        for i in (word_shift..words).rev() {
            let mut shifted = bits[i - word_shift] << bit_shift;
            if bit_shift > 0 && i > word_shift {
                shifted |= bits[i - word_shift - 1] >> (64 - bit_shift);
            }
            bits[i] |= shifted;
        }
    }
    Ok((1..=total)
        .filter(|&s| bits[(s / 64) as usize] >> (s % 64) & 1 == 1)
        .collect())
}

#[derive(Debug, Clone)]
pub struct ReductionOutcome {
    /// best budget-feasible set found, audited against the original graph
    pub solution: Solution,
    /// true when no guess produced a round avoiding both bad events
    pub exhausted: bool,
}

fn round_rng(seed: u64, guess_index: u64) -> ChaCha12Rng {
    let mut key = [0u8; 32];
    key[..8].copy_from_slice(&seed.to_le_bytes());
    key[8..16].copy_from_slice(&guess_index.to_le_bytes());
    ChaCha12Rng::from_seed(key)
}

/// MWEC via an FCEC solver (Theorem 6.2 shape): rescale, guess the
/// optimum weight over achievable rescaled sums, solve FCEC per guess,
/// and randomly keep each chosen vertex with probability 1/alpha. The
/// FCEC output itself is also considered whenever it is budget-feasible.
/// Feasibility (touched <= edge_budget in the ORIGINAL graph) is a hard
/// invariant of the returned set.
pub fn mwec_via_fcec(
    g: &Graph,
    edge_budget: u64,
    alpha: &Rational,
    tau: &Rational,
    retries: u32,
    seed: u64,
) -> Result<ReductionOutcome> {
    if *alpha < Rational::from_int(1) {
        return Err(Error::Input("alpha must be >= 1".into()));
    }
    if *tau <= Rational::zero() {
        return Err(Error::Input("tau must be positive".into()));
    }
    let rescaled = rescale_weights(g)?;
    let gp = &rescaled.graph;
    let guesses = achievable_sums(gp.weights())?;
    // bad-event-(i) threshold: w'(B) > W* / ((1 + tau) * alpha)
    let q = alpha.checked_mul(&Rational::from_int(1).checked_add(tau)?)?;

    let mut best = Solution::audit(g, VertexSet::empty())?;
    let mut exhausted = true;
    for (gi, &target) in guesses.iter().enumerate() {
        let fcec_sol = fcec_approx(&FcecInstance {
            graph: gp.clone(),
            target_weight: target,
        })?;
        let chosen: Vec<u32> = fcec_sol.set.members().to_vec();
        let mut rng = round_rng(seed, gi as u64);

        // candidate 0 is the FCEC set itself, then `retries` samples
        for round in 0..=retries {
            let members: Vec<u32> = if round == 0 {
                chosen.clone()
            } else {
                chosen
                    .iter()
                    .copied()
                    .filter(|_| {
                        (rng.random_range(0..alpha.num() as u64) as i128) < alpha.den()
                    })
                    .collect()
            };
            let original: VertexSet = members
                .iter()
                .map(|&v| rescaled.kept[v as usize])
                .collect();
            if touched(g, &original)? > edge_budget {
                continue;
            }
            let w_scaled: u64 = members.iter().map(|&v| gp.weight(v)).sum();
            // w'(B) * q.num > W* * q.den  <=>  w'(B) > W* / q
            if (w_scaled as i128) * q.num() > (target as i128) * q.den() {
                exhausted = false;
            }
            let sol = Solution::audit(g, original)?;
            if sol.weight > best.weight || (sol.weight == best.weight && sol.set < best.set) {
                best = sol;
            }
        }
    }
    Ok(ReductionOutcome {
        solution: best,
        exhausted,
    })
}

/// One integrality-gap measurement on G(n, 1/floor(sqrt n)).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GapReport {
    pub n: usize,
    pub k: usize,
    pub seed: u64,
    pub m: usize,
    /// cost of the explicit fractional point x_v = 1/k: exactly m/k
    pub lp_value: Rational,
    /// touched count of the k lowest-degree vertices
    pub integral_value: u64,
    /// integral_value / lp_value, exact
    pub ratio: Rational,
}

impl GapReport {
    /// Line-oriented key=value form.
    pub fn to_kv(&self) -> String {
        format!(
            "n={} k={} seed={} m={} lp_value={} integral_value={} ratio={}",
            self.n, self.k, self.seed, self.m, self.lp_value, self.integral_value, self.ratio
        )
    }
}

fn isqrt(n: usize) -> usize {
    let mut r = (n as f64).sqrt() as usize;
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    while r * r > n {
        r -= 1;
    }
    r
}

/// Builds G(n, 1/floor(sqrt n)), covers with the k = floor(sqrt n)
/// lowest-degree vertices and reports the ratio to the closed-form LP
/// value m/k.
pub fn gap_experiment(n: usize, seed: u64) -> Result<GapReport> {
    if n < 16 {
        return Err(Error::Input("gap experiment requires n >= 16".into()));
    }
    let k = isqrt(n);
    let g = gen::gnp(n, Rational::new(1, k as i128)?, seed)?;
    let m = g.m();
    if m == 0 {
        return Err(Error::Degenerate(
            "generated graph has no edges; gap ratio is 0/0".into(),
        ));
    }
    let integral_value = k_lowest_degree(&g, k)?.touched;
    let lp_value = Rational::new(m as i128, k as i128)?;
    let ratio = Rational::new(integral_value as i128 * k as i128, m as i128)?;
    Ok(GapReport {
        n,
        k,
        seed,
        m,
        lp_value,
        integral_value,
        ratio,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle;

    #[test]
    fn rescale_uniform_keeps_everything() {
        let g = gen::complete(4).unwrap();
        let g = Graph::new(4, vec![7; 4], g.edges().to_vec()).unwrap();
        let r = rescale_weights(&g).unwrap();
        assert_eq!(r.kept, vec![0, 1, 2, 3]);
        assert!(r.graph.weights().iter().all(|&w| w == 16)); // n^2
    }

    #[test]
    fn rescale_drops_tiny_weight() {
        // n=2, threshold w_max / 4: weight 1 < 8/4 is dropped
        let g = Graph::new(2, vec![8, 1], vec![(0, 1)]).unwrap();
        let r = rescale_weights(&g).unwrap();
        assert_eq!(r.kept, vec![0]);
        assert_eq!(r.pivot, 0);
        assert_eq!(r.graph.m(), 0);
    }

    #[test]
    fn rescale_bounds() {
        let g = gen::gnp(8, Rational::new(2, 5).unwrap(), 21).unwrap();
        let g = gen::random_weights(&g, 1, 1_000_000, 22).unwrap();
        let r = rescale_weights(&g).unwrap();
        let n = g.n() as u64;
        assert!(r.graph.weights().iter().all(|&w| w <= n.pow(4)));
        assert!(r.graph.total_weight() <= n.pow(5));
    }

    #[test]
    fn rescale_rejects_all_zero() {
        let g = Graph::new(2, vec![0, 0], vec![(0, 1)]).unwrap();
        assert!(rescale_weights(&g).is_err());
    }

    #[test]
    fn achievable_sums_small() {
        assert_eq!(achievable_sums(&[1, 3]).unwrap(), vec![1, 3, 4]);
        assert_eq!(achievable_sums(&[2, 2]).unwrap(), vec![2, 4]);
        // shifts crossing word boundaries
        let sums = achievable_sums(&[63, 65, 130]).unwrap();
        assert_eq!(sums, vec![63, 65, 128, 130, 193, 195, 258]);
    }

    #[test]
    fn reduction_trivial_budget_takes_everything() {
        let g = gen::path(3).unwrap();
        let out = mwec_via_fcec(
            &g,
            2,
            &Rational::from_int(2),
            &Rational::new(1, 2).unwrap(),
            5,
            7,
        )
        .unwrap();
        assert_eq!(out.solution.weight, 3);
        assert!(!out.exhausted);
    }

    #[test]
    fn reduction_path_budget2() {
        let g = gen::path(3).unwrap();
        // brute OPT = 2 ({a,c}); any feasible nontrivial answer has weight >= 1
        let out = mwec_via_fcec(
            &g,
            2,
            &Rational::from_int(2),
            &Rational::new(1, 2).unwrap(),
            10,
            3,
        )
        .unwrap();
        assert!(out.solution.touched <= 2);
        assert!(out.solution.weight >= 1);
    }

    #[test]
    fn reduction_star_budget1() {
        let g = gen::star(4).unwrap();
        let out = mwec_via_fcec(
            &g,
            1,
            &Rational::from_int(2),
            &Rational::new(1, 2).unwrap(),
            10,
            4,
        )
        .unwrap();
        assert!(out.solution.touched <= 1);
        assert!(out.solution.weight >= 1);
        let opt = oracle::brute_mwec(&g, 1, oracle::DEFAULT_CAP).unwrap().int();
        assert!(out.solution.weight <= opt);
    }

    #[test]
    fn gap_rejects_small_n() {
        assert!(gap_experiment(15, 1).is_err());
    }

    #[test]
    fn gap_n16_regression() {
        let r = gap_experiment(16, 7).unwrap();
        assert_eq!(r.k, 4);
        assert!(r.ratio >= Rational::zero());
        // determinism
        assert_eq!(gap_experiment(16, 7).unwrap(), r);
    }

    #[test]
    fn isqrt_values() {
        assert_eq!(isqrt(16), 4);
        assert_eq!(isqrt(17), 4);
        assert_eq!(isqrt(24), 4);
        assert_eq!(isqrt(25), 5);
        assert_eq!(isqrt(4096), 64);
    }
}
