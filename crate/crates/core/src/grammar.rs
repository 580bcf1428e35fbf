//! Categorical HG, MaxEnt, and sampled stochastic HG evaluation.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::tableau::{ConstraintSet, InputEntry};
use crate::Result;

/// Nonnegative constraint weights, one per constraint.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WeightVector {
    weights: Vec<f64>,
}

impl WeightVector {
    pub fn new(weights: Vec<f64>) -> Result<Self> {
        if weights.iter().any(|w| !w.is_finite() || *w < 0.0) {
            return Err(Error::domain("weights must be finite and nonnegative"));
        }
        Ok(WeightVector { weights })
    }

    pub fn zeros(n: usize) -> Self {
        WeightVector { weights: vec![0.0; n] }
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.weights
    }

    /// Loads a weights document: one `name value` pair per line, `#` comments.
    /// Every constraint must be assigned exactly once; unknown names are errors.
    pub fn parse(source: &str, constraints: &ConstraintSet) -> Result<Self> {
        let mut seen: Vec<Option<f64>> = vec![None; constraints.len()];
        for (lineno, raw) in source.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (name, value) = line
                .rsplit_once(char::is_whitespace)
                .ok_or_else(|| Error::parse(format!("line {}: expected `name value`", lineno + 1)))?;
            let name = name.trim();
            let idx = constraints
                .index_of(name)
                .ok_or_else(|| Error::lookup(format!("line {}: unknown constraint {name:?}", lineno + 1)))?;
            let v: f64 = value
                .trim()
                .parse()
                .map_err(|_| Error::parse(format!("line {}: bad weight {value:?}", lineno + 1)))?;
            if !v.is_finite() || v < 0.0 {
                return Err(Error::domain(format!("line {}: weight for {name:?} must be nonnegative", lineno + 1)));
            }
            if seen[idx].replace(v).is_some() {
                return Err(Error::schema(format!("line {}: duplicate weight for {name:?}", lineno + 1)));
            }
        }
        let weights = seen
            .into_iter()
            .enumerate()
            .map(|(i, v)| v.ok_or_else(|| Error::schema(format!("missing weight for {:?}", constraints.names()[i]))))
            .collect::<Result<Vec<f64>>>()?;
        WeightVector::new(weights)
    }
}

/// Per-constraint noise for stochastic HG.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct NoiseSpec {
    pub distribution: NoiseDistribution,
    /// Shared scale of the i.i.d. per-constraint noise.
    pub sigma: f64,
    /// Clamp effective weights at zero. Off by default: effective weights may
    /// go negative, matching plain `w + noise` composition.
    #[serde(default)]
    pub clip_at_zero: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum NoiseDistribution {
    Gaussian,
}

impl NoiseSpec {
    pub fn gaussian(sigma: f64, clip_at_zero: bool) -> Result<Self> {
        if !(sigma > 0.0) {
            return Err(Error::domain("noise sigma must be positive"));
        }
        Ok(NoiseSpec { distribution: NoiseDistribution::Gaussian, sigma, clip_at_zero })
    }
}

impl Default for NoiseSpec {
    fn default() -> Self {
        NoiseSpec { distribution: NoiseDistribution::Gaussian, sigma: 1.0, clip_at_zero: false }
    }
}

/// A Monte Carlo probability estimate with its binomial standard error.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ProbabilityEstimate {
    pub point: f64,
    pub standard_error: f64,
    pub trials: u64,
}

impl ProbabilityEstimate {
    pub fn new(point: f64, trials: u64) -> Self {
        let standard_error = (point * (1.0 - point) / trials as f64).max(0.0).sqrt();
        ProbabilityEstimate { point, standard_error, trials }
    }
}

/// Negated weighted violation sum.
pub fn harmony(w: &WeightVector, violations: &[u32]) -> Result<f64> {
    if w.len() != violations.len() {
        return Err(Error::Dimension { expected: w.len(), got: violations.len() });
    }
    Ok(-w
        .as_slice()
        .iter()
        .zip(violations)
        .map(|(wk, &v)| wk * f64::from(v))
        .sum::<f64>())
}

fn harmonies(w: &[f64], input: &InputEntry) -> Result<Vec<f64>> {
    input
        .candidates
        .iter()
        .map(|c| {
            if c.violations.len() != w.len() {
                return Err(Error::Dimension { expected: w.len(), got: c.violations.len() });
            }
            Ok(-w.iter().zip(&c.violations).map(|(wk, &v)| wk * f64::from(v)).sum::<f64>())
        })
        .collect()
}

/// The harmony-argmax set; a singleton means a strict winner.
pub fn hg_winners(w: &WeightVector, input: &InputEntry) -> Result<BTreeSet<String>> {
    let hs = harmonies(w.as_slice(), input)?;
    let best = hs.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    Ok(input
        .candidates
        .iter()
        .zip(&hs)
        .filter(|(_, &h)| h == best)
        .map(|(c, _)| c.sr.clone())
        .collect())
}

/// MaxEnt distribution over the candidates of one input, computed with a
/// max-harmony shift before exponentiation.
pub fn me_distribution(w: &WeightVector, input: &InputEntry) -> Result<Vec<(String, f64)>> {
    let hs = harmonies(w.as_slice(), input)?;
    let m = hs.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let exps: Vec<f64> = hs.iter().map(|h| (h - m).exp()).collect();
    let z: f64 = exps.iter().sum();
    Ok(input
        .candidates
        .iter()
        .zip(&exps)
        .map(|(c, e)| (c.sr.clone(), e / z))
        .collect())
}

/// MaxEnt probability of one candidate.
pub fn me_probability(w: &WeightVector, input: &InputEntry, sr: &str) -> Result<f64> {
    me_distribution(w, input)?
        .into_iter()
        .find(|(s, _)| s == sr)
        .map(|(_, p)| p)
        .ok_or_else(|| Error::lookup(format!("no candidate {sr:?}")))
}

/// Stream-splitting rule for all Monte Carlo work in this crate.
///
/// A sampling context is addressed by a base seed plus a list of tags
/// (pair index, weight-vector index, ...). The generator is
/// `ChaCha12Rng::seed_from_u64(mix(seed, tags))` where `mix` folds each tag
/// into the state with a splitmix64 step. Identical (seed, tags) give
/// identical streams, so parallel evaluation over cells reproduces the
/// serial result regardless of scheduling.
pub fn derive_rng(seed: u64, tags: &[u64]) -> ChaCha12Rng {
    fn splitmix64(mut z: u64) -> u64 {
        z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    }
    let mut state = splitmix64(seed);
    for &t in tags {
        state = splitmix64(state ^ t.wrapping_mul(0xd134_2543_de82_ef95));
    }
    ChaCha12Rng::seed_from_u64(state)
}

fn lcm_u128(upto: u128) -> u128 {
    let mut l: u128 = 1;
    for k in 2..=upto {
        let g = gcd_u128(l, k);
        l = l / g * k;
    }
    l
}

fn gcd_u128(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Per-trial winner credits for one input under sampled weights, accumulated
/// exactly: a strict winner gets full credit, a k-way tie gives each tied
/// candidate 1/k. Credits are integers scaled by lcm(1..=#candidates), so
/// the per-candidate totals sum to exactly `trials`.
pub(crate) struct CreditTally {
    pub credits: Vec<u128>,
    pub scale: u128,
    pub trials: u64,
}

impl CreditTally {
    pub fn new(num_candidates: usize, trials: u64) -> Result<Self> {
        if num_candidates == 0 {
            return Err(Error::domain("input has no candidates"));
        }
        if num_candidates > 64 {
            return Err(Error::domain("sampling supports at most 64 candidates per input"));
        }
        Ok(CreditTally {
            credits: vec![0u128; num_candidates],
            scale: lcm_u128(num_candidates as u128),
            trials,
        })
    }

    pub fn estimates(&self) -> Vec<ProbabilityEstimate> {
        let denom = self.scale as f64 * self.trials as f64;
        self.credits
            .iter()
            .map(|&c| ProbabilityEstimate::new(c as f64 / denom, self.trials))
            .collect()
    }
}

/// Applies one sampled noise vector to the weights and credits the winners.
pub(crate) fn credit_trial(
    tally: &mut CreditTally,
    effective: &[f64],
    input: &InputEntry,
) -> Result<()> {
    let hs = harmonies(effective, input)?;
    let best = hs.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let tie: Vec<usize> = (0..hs.len()).filter(|&i| hs[i] == best).collect();
    let share = tally.scale / tie.len() as u128;
    for i in tie {
        tally.credits[i] += share;
    }
    Ok(())
}

/// Draws one noise vector into `buf` and returns the effective weights.
pub(crate) fn effective_weights(
    w: &[f64],
    noise: &NoiseSpec,
    rng: &mut ChaCha12Rng,
    buf: &mut Vec<f64>,
) {
    buf.clear();
    for &wk in w {
        let eps: f64 = rng.sample::<f64, _>(StandardNormal) * noise.sigma;
        let mut u = wk + eps;
        if noise.clip_at_zero && u < 0.0 {
            u = 0.0;
        }
        buf.push(u);
    }
}

/// Monte Carlo stochastic-HG estimates for every candidate of `input`.
///
/// Deterministic given `(seed, trials)`; the per-candidate points sum to 1
/// exactly at the credit level (ties are fractionally credited).
pub fn shg_estimate(
    w: &WeightVector,
    input: &InputEntry,
    noise: &NoiseSpec,
    trials: u64,
    seed: u64,
) -> Result<Vec<(String, ProbabilityEstimate)>> {
    if trials == 0 {
        return Err(Error::domain("trials must be at least 1"));
    }
    let mut tally = CreditTally::new(input.candidates.len(), trials)?;
    let mut rng = derive_rng(seed, &[]);
    let mut buf = Vec::with_capacity(w.len());
    for _ in 0..trials {
        effective_weights(w.as_slice(), noise, &mut rng, &mut buf);
        credit_trial(&mut tally, &buf, input)?;
    }
    debug_assert_eq!(
        tally.credits.iter().sum::<u128>(),
        tally.scale * u128::from(trials),
        "credits must sum to exactly scale * trials"
    );
    Ok(input
        .candidates
        .iter()
        .map(|c| c.sr.clone())
        .zip(tally.estimates())
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableau::CandidateEntry;

    fn input(cands: &[(&str, &[u32])]) -> InputEntry {
        InputEntry {
            ur: "x".into(),
            candidates: cands
                .iter()
                .map(|(sr, v)| CandidateEntry { sr: sr.to_string(), violations: v.to_vec(), frequency: None })
                .collect(),
        }
    }

    #[test]
    fn harmony_basics() {
        let w = WeightVector::new(vec![2.0, 3.0]).unwrap();
        assert_eq!(harmony(&w, &[1, 1]).unwrap(), -5.0);
        assert_eq!(harmony(&WeightVector::zeros(2), &[7, 9]).unwrap(), 0.0);
        assert_eq!(harmony(&w, &[0, 0]).unwrap(), 0.0);
        assert!(harmony(&w, &[1]).is_err());
    }

    #[test]
    fn winners_single_candidate() {
        let w = WeightVector::new(vec![1.0]).unwrap();
        let i = input(&[("y", &[5])]);
        assert_eq!(hg_winners(&w, &i).unwrap().len(), 1);
    }

    #[test]
    fn zero_weights_tie_everything() {
        let i = input(&[("a", &[1]), ("b", &[2]), ("c", &[0])]);
        assert_eq!(hg_winners(&WeightVector::zeros(1), &i).unwrap().len(), 3);
    }

    #[test]
    fn winner_set_invariant_under_scaling() {
        let i = input(&[("a", &[1, 0]), ("b", &[0, 2]), ("c", &[3, 3])]);
        let w1 = WeightVector::new(vec![1.5, 0.75]).unwrap();
        let w2 = WeightVector::new(vec![3.0, 1.5]).unwrap();
        assert_eq!(hg_winners(&w1, &i).unwrap(), hg_winners(&w2, &i).unwrap());
    }

    #[test]
    fn me_distribution_normalizes() {
        let i = input(&[("a", &[1, 0]), ("b", &[0, 1]), ("c", &[2, 2])]);
        let w = WeightVector::new(vec![0.7, 1.9]).unwrap();
        let dist = me_distribution(&w, &i).unwrap();
        let total: f64 = dist.iter().map(|(_, p)| p).sum();
        assert!((total - 1.0).abs() < 1e-12);
        assert!(dist.iter().all(|(_, p)| *p > 0.0));
    }

    #[test]
    fn me_closed_form_softmax() {
        // one constraint, winner 0 violations, loser 1 violation, w = ln 3:
        // winner probability 3/4.
        let i = input(&[("w", &[0]), ("l", &[1])]);
        let w = WeightVector::new(vec![3f64.ln()]).unwrap();
        let p = me_probability(&w, &i, "w").unwrap();
        assert!((p - 0.75).abs() < 1e-12);
    }

    #[test]
    fn me_uniform_at_zero_weights() {
        let i = input(&[("a", &[1]), ("b", &[9]), ("c", &[4])]);
        for (_, p) in me_distribution(&WeightVector::zeros(1), &i).unwrap() {
            assert!((p - 1.0 / 3.0).abs() < 1e-12);
        }
    }

    #[test]
    fn shg_single_candidate_is_certain() {
        let i = input(&[("y", &[3])]);
        let w = WeightVector::new(vec![1.0]).unwrap();
        let est = shg_estimate(&w, &i, &NoiseSpec::default(), 100, 1).unwrap();
        assert_eq!(est[0].1.point, 1.0);
        assert_eq!(est[0].1.standard_error, 0.0);
    }

    #[test]
    fn shg_symmetric_coin_at_zero_weights() {
        // loser difference vector (1): the winner prevails iff its noise term
        // exceeds the loser's weighted sum, probability 1/2 at w = 0.
        let i = input(&[("w", &[0]), ("l", &[1])]);
        let est = shg_estimate(&WeightVector::zeros(1), &i, &NoiseSpec::default(), 200_000, 42).unwrap();
        assert!((est[0].1.point - 0.5).abs() < 4.0 * est[0].1.standard_error);
    }

    #[test]
    fn shg_matches_gaussian_cdf_oracle() {
        // winner wins iff eps > -w1, probability Phi(1) ~ 0.8413 at w1 = 1.
        let i = input(&[("w", &[0]), ("l", &[1])]);
        let w = WeightVector::new(vec![1.0]).unwrap();
        let est = shg_estimate(&w, &i, &NoiseSpec::default(), 100_000, 7).unwrap();
        let phi1 = 0.8413447460685429;
        assert!(
            (est[0].1.point - phi1).abs() < 3.0 * est[0].1.standard_error,
            "estimate {} vs oracle {phi1}",
            est[0].1.point
        );
    }

    #[test]
    fn shg_is_bit_reproducible() {
        let i = input(&[("a", &[1, 0]), ("b", &[0, 1])]);
        let w = WeightVector::new(vec![0.5, 1.5]).unwrap();
        let e1 = shg_estimate(&w, &i, &NoiseSpec::default(), 10_000, 99).unwrap();
        let e2 = shg_estimate(&w, &i, &NoiseSpec::default(), 10_000, 99).unwrap();
        assert_eq!(e1, e2);
    }

    #[test]
    fn estimates_sum_to_one() {
        let i = input(&[("a", &[1, 0]), ("b", &[0, 1]), ("c", &[1, 1])]);
        let w = WeightVector::new(vec![0.3, 0.9]).unwrap();
        let est = shg_estimate(&w, &i, &NoiseSpec::default(), 9_999, 5).unwrap();
        let total: f64 = est.iter().map(|(_, e)| e.point).sum();
        assert!((total - 1.0).abs() < 1e-12);
    }

    #[test]
    fn bounded_loser_never_wins_with_clipping() {
        // difference vector entrywise >= 0 with clipping on: the loser can at
        // best tie the winner.
        let i = input(&[("w", &[0, 1]), ("l", &[2, 1])]);
        let w = WeightVector::new(vec![2.0, 2.0]).unwrap();
        let noise = NoiseSpec::gaussian(1.0, true).unwrap();
        let est = shg_estimate(&w, &i, &noise, 50_000, 3).unwrap();
        // ties happen only on the measure-zero/clipped-atom boundary; the
        // loser share is bounded by the tie credit.
        assert!(est[1].1.point < 0.01, "bounded loser won {} of trials", est[1].1.point);
    }

    #[test]
    fn hg_impossible_mapping_estimates_near_zero_with_clipping() {
        // losers (1,-2) and (-2,1) relative to the winner: no nonnegative
        // weights make the winner strictly best.
        let i = input(&[("y", &[0, 0]), ("z1", &[1, 0]), ("z2", &[0, 1])]);
        // z1 diff (1,0)... choose violations so diffs are (1,-2) and (-2,1):
        let i = {
            let mut i = i;
            i.candidates[0].violations = vec![2, 2];
            i.candidates[1].violations = vec![3, 0];
            i.candidates[2].violations = vec![0, 3];
            i
        };
        let w = WeightVector::new(vec![3.0, 3.0]).unwrap();
        let noise = NoiseSpec::gaussian(1.0, true).unwrap();
        let est = shg_estimate(&w, &i, &noise, 100_000, 11).unwrap();
        assert!(est[0].1.point < 1e-3, "impossible mapping got {}", est[0].1.point);
    }

    #[test]
    fn weights_file_round_trip() {
        let cs = ConstraintSet::new(vec!["A".into(), "B".into()]).unwrap();
        let w = WeightVector::parse("# comment\nB 2.5\nA 1\n", &cs).unwrap();
        assert_eq!(w.as_slice(), &[1.0, 2.5]);
        assert!(WeightVector::parse("A 1\n", &cs).is_err(), "missing name must error");
        assert!(WeightVector::parse("A 1\nB 2\nC 3\n", &cs).is_err(), "unknown name must error");
        assert!(WeightVector::parse("A -1\nB 2\n", &cs).is_err(), "negative weight must error");
    }
}
