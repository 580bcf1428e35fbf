//! Numeric cross-validation of the symbolic verdicts: weight sweeps, paired
//! Monte Carlo comparison, and counterexample search.
//!
//! MaxEnt probabilities are evaluated exactly (closed form); stochastic HG
//! only by simulation. Pair comparisons share the per-trial noise draws
//! between the two mappings (common random numbers), so two mappings whose
//! win events coincide produce literally identical estimates and the
//! comparison noise cancels.

use num_traits::ToPrimitive;
use serde::Serialize;

use crate::error::Error;
use crate::grammar::{
    credit_trial, derive_rng, effective_weights, me_probability, CreditTally, NoiseSpec,
    ProbabilityEstimate, WeightVector,
};
use crate::tableau::{MappingId, Tableau};
use crate::typology::{
    hg_possible, me_equiprobable, shg_uniform_leq, EdgeStatus, Framework, TOrderGraph,
};
use crate::geometry::MembershipCertificate;
use crate::Result;

/// How a sweep generates its weight vectors.
#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum WeightSource {
    /// Per-constraint value lists; the sweep takes their cartesian product.
    Grid(Vec<Vec<f64>>),
    /// `count` vectors drawn uniformly from `[min_weight, max_weight]^n`.
    Random { count: usize, min_weight: f64, max_weight: f64 },
}

/// Configuration of a verification sweep.
#[derive(Debug, Clone, Serialize)]
pub struct SweepSpec {
    pub weights: WeightSource,
    pub seed: u64,
    pub noise: NoiseSpec,
    pub trials: u64,
    /// Consistency threshold in combined standard errors (default 3).
    pub consistent_se: f64,
    /// Confident-difference threshold in combined standard errors (default 5).
    pub different_se: f64,
}

impl SweepSpec {
    pub fn random(count: usize, max_weight: f64, seed: u64, noise: NoiseSpec, trials: u64) -> Self {
        SweepSpec {
            weights: WeightSource::Random { count, min_weight: 0.0, max_weight },
            seed,
            noise,
            trials,
            consistent_se: 3.0,
            different_se: 5.0,
        }
    }

    /// Materializes the weight vectors for `n` constraints; deterministic
    /// given the spec.
    pub fn weight_vectors(&self, n: usize) -> Result<Vec<WeightVector>> {
        match &self.weights {
            WeightSource::Grid(axes) => {
                if axes.len() != n {
                    return Err(Error::Dimension { expected: n, got: axes.len() });
                }
                if axes.iter().any(|a| a.is_empty()) {
                    return Err(Error::domain("grid axes must be nonempty"));
                }
                let mut out = vec![Vec::new()];
                for axis in axes {
                    let mut next = Vec::with_capacity(out.len() * axis.len());
                    for prefix in &out {
                        for &v in axis {
                            let mut w = prefix.clone();
                            w.push(v);
                            next.push(w);
                        }
                    }
                    out = next;
                }
                out.into_iter().map(WeightVector::new).collect()
            }
            WeightSource::Random { count, min_weight, max_weight } => {
                if *count == 0 {
                    return Err(Error::domain("random weight spec must generate at least one vector"));
                }
                use rand::Rng;
                let mut rng = derive_rng(self.seed, &[0x5745_4947_4854_53u64]);
                (0..*count)
                    .map(|_| {
                        WeightVector::new(
                            (0..n).map(|_| rng.random_range(*min_weight..=*max_weight)).collect(),
                        )
                    })
                    .collect()
            }
        }
    }
}

/// One (pair, weight vector) comparison cell.
#[derive(Debug, Clone, Serialize)]
pub struct ComparisonCell {
    pub weights: Vec<f64>,
    pub me_left: f64,
    pub me_right: f64,
    pub me_gap: f64,
    pub shg_left: ProbabilityEstimate,
    pub shg_right: ProbabilityEstimate,
    pub shg_gap: f64,
    pub combined_se: f64,
}

/// Per-pair record of a sweep.
#[derive(Debug, Clone, Serialize)]
pub struct PairReport {
    pub left: MappingId,
    pub right: MappingId,
    pub max_me_gap: f64,
    pub max_me_gap_weights: Vec<f64>,
    pub max_shg_gap: f64,
    pub max_shg_gap_weights: Vec<f64>,
    pub max_shg_gap_in_se: f64,
    pub cells: Vec<ComparisonCell>,
}

/// Result of a verification sweep with the agreement semantics:
/// an "equal" symbolic verdict agrees iff all observed SHG gaps are within
/// `consistent_se` combined standard errors; a "not equal" verdict agrees iff
/// some gap reaches `different_se` combined standard errors.
#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub seed: u64,
    pub noise: NoiseSpec,
    pub trials: u64,
    pub pairs: Vec<PairReport>,
}

/// Stochastic-HG estimates for the two mappings of a pair under shared noise.
///
/// Both inputs see the same effective-weight draw in each trial; within one
/// tableau the constraint set (and hence the noise vector) is shared.
pub fn paired_shg_estimate(
    t: &Tableau,
    a: &MappingId,
    b: &MappingId,
    w: &WeightVector,
    noise: &NoiseSpec,
    trials: u64,
    seed: u64,
    stream_tags: &[u64],
) -> Result<(ProbabilityEstimate, ProbabilityEstimate)> {
    let (input_a, _) = t.resolve(a)?;
    let (input_b, _) = t.resolve(b)?;
    let mut tally_a = CreditTally::new(input_a.candidates.len(), trials)?;
    let mut tally_b = CreditTally::new(input_b.candidates.len(), trials)?;
    let mut rng = derive_rng(seed, stream_tags);
    let mut buf = Vec::with_capacity(w.len());
    for _ in 0..trials {
        effective_weights(w.as_slice(), noise, &mut rng, &mut buf);
        credit_trial(&mut tally_a, &buf, input_a)?;
        if std::ptr::eq(input_a, input_b) {
            // Same input: one evaluation per trial keeps the tallies identical.
            tally_b.credits.clone_from(&tally_a.credits);
        } else {
            credit_trial(&mut tally_b, &buf, input_b)?;
        }
    }
    let pos_a = input_a.candidates.iter().position(|c| c.sr == a.sr).unwrap();
    let pos_b = input_b.candidates.iter().position(|c| c.sr == b.sr).unwrap();
    Ok((tally_a.estimates()[pos_a], tally_b.estimates()[pos_b]))
}

/// Evaluates every pair at every sweep weight vector, recording exact MaxEnt
/// gaps and paired stochastic-HG estimates. Deterministic given the spec.
pub fn sweep_compare(
    t: &Tableau,
    pairs: &[(MappingId, MappingId)],
    spec: &SweepSpec,
) -> Result<VerificationReport> {
    let n = t.constraints.len();
    let weight_vectors = spec.weight_vectors(n)?;
    let mut out = Vec::with_capacity(pairs.len());
    for (pi, (a, b)) in pairs.iter().enumerate() {
        let (input_a, _) = t.resolve(a)?;
        let (input_b, _) = t.resolve(b)?;
        let _ = (input_a, input_b);
        let mut cells = Vec::with_capacity(weight_vectors.len());
        let mut best_me = (0.0f64, Vec::new());
        let mut best_shg = (0.0f64, Vec::new(), 0.0f64);
        for (wi, w) in weight_vectors.iter().enumerate() {
            let me_left = me_probability(w, t.resolve(a)?.0, &a.sr)?;
            let me_right = me_probability(w, t.resolve(b)?.0, &b.sr)?;
            let me_gap = (me_left - me_right).abs();
            let (ea, eb) = paired_shg_estimate(
                t,
                a,
                b,
                w,
                &spec.noise,
                spec.trials,
                spec.seed,
                &[pi as u64, wi as u64],
            )?;
            let shg_gap = (ea.point - eb.point).abs();
            let combined_se = (ea.standard_error.powi(2) + eb.standard_error.powi(2)).sqrt();
            if me_gap > best_me.0 {
                best_me = (me_gap, w.as_slice().to_vec());
            }
            let gap_in_se = if combined_se > 0.0 { shg_gap / combined_se } else if shg_gap > 0.0 { f64::INFINITY } else { 0.0 };
            if shg_gap > best_shg.0 {
                best_shg = (shg_gap, w.as_slice().to_vec(), gap_in_se);
            }
            cells.push(ComparisonCell {
                weights: w.as_slice().to_vec(),
                me_left,
                me_right,
                me_gap,
                shg_left: ea,
                shg_right: eb,
                shg_gap,
                combined_se,
            });
        }
        out.push(PairReport {
            left: a.clone(),
            right: b.clone(),
            max_me_gap: best_me.0,
            max_me_gap_weights: best_me.1,
            max_shg_gap: best_shg.0,
            max_shg_gap_weights: best_shg.1,
            max_shg_gap_in_se: best_shg.2,
            cells,
        });
    }
    Ok(VerificationReport {
        seed: spec.seed,
        noise: spec.noise,
        trials: spec.trials,
        pairs: out,
    })
}

/// Search trace of a counterexample hunt.
#[derive(Debug, Clone, Serialize)]
pub struct SearchTrace {
    pub evaluations: u64,
    pub best_gap: f64,
    pub best_weights: Option<Vec<f64>>,
}

/// Weight vectors suggested by the exact certificates of a failing uniform
/// inequality: scaled combinations of the Farkas separator for some loser of
/// `b` with an HG-possibility witness for `a`. Along such directions the
/// probability of `a` tends to 1 while `b`'s winner loses to the separated
/// loser, so gaps become macroscopic.
pub fn certificate_guided_weights(t: &Tableau, a: &MappingId, b: &MappingId) -> Result<Vec<WeightVector>> {
    let n = t.constraints.len();
    let mut base: Vec<Vec<f64>> = Vec::new();
    let verdict = shg_uniform_leq(t, b, a)?; // failing direction: P(b) <= P(a) refuted witnesses P(b) > P(a) hunting grounds
    for (_, cert) in &verdict.per_loser {
        if let MembershipCertificate::NonMember { separator } = cert {
            let w: Vec<f64> = separator.iter().map(|r| r.to_f64().unwrap_or(0.0).max(0.0)).collect();
            if w.iter().any(|&x| x > 0.0) {
                base.push(w);
            }
        }
    }
    let verdict = shg_uniform_leq(t, a, b)?;
    for (_, cert) in &verdict.per_loser {
        if let MembershipCertificate::NonMember { separator } = cert {
            let w: Vec<f64> = separator.iter().map(|r| r.to_f64().unwrap_or(0.0).max(0.0)).collect();
            if w.iter().any(|&x| x > 0.0) {
                base.push(w);
            }
        }
    }
    let mut witnesses: Vec<Vec<f64>> = Vec::new();
    for m in [a, b] {
        if let Some(wit) = hg_possible(t, m)?.witness {
            let w: Vec<f64> = wit.iter().map(|r| r.to_f64().unwrap_or(0.0).max(0.0)).collect();
            witnesses.push(w);
        }
    }
    let mut out = Vec::new();
    let mut push = |w: Vec<f64>| {
        if w.iter().all(|x| x.is_finite()) && w.iter().any(|&x| x > 0.0) {
            out.push(WeightVector::new(w).unwrap());
        }
    };
    for sep in &base {
        for wit in &witnesses {
            for s in [0.0, 0.25, 1.0] {
                for t_scale in [1.0, 4.0, 16.0, 64.0] {
                    let w: Vec<f64> = (0..n).map(|k| t_scale * (sep[k] + s * wit[k])).collect();
                    push(w);
                }
            }
        }
        if witnesses.is_empty() {
            for t_scale in [1.0, 4.0, 16.0, 64.0] {
                push(sep.iter().map(|&x| t_scale * x).collect());
            }
        }
    }
    for wit in &witnesses {
        for t_scale in [1.0, 8.0] {
            push(wit.iter().map(|&x| t_scale * x).collect());
        }
    }
    Ok(out)
}

/// Searches for a nonnegative weight vector giving the two mappings MaxEnt
/// probabilities that differ by more than `gap_threshold` (default 1e-6
/// callers use). Multi-start random search plus coordinate ascent, seeded
/// with certificate-guided vectors; exact (closed-form) evaluation.
///
/// Calling this on an ME-equiprobable pair is a domain error: no
/// counterexample exists.
pub fn find_me_counterexample(
    t: &Tableau,
    a: &MappingId,
    b: &MappingId,
    budget: u64,
    seed: u64,
) -> Result<(Option<(Vec<f64>, f64)>, SearchTrace)> {
    const GAP: f64 = 1e-6;
    if me_equiprobable(t, a, b)?.equal {
        return Err(Error::domain(
            "mappings are MaxEnt-equiprobable; no counterexample exists",
        ));
    }
    let n = t.constraints.len();
    let input_a = t.resolve(a)?.0;
    let input_b = t.resolve(b)?.0;
    let mut evals: u64 = 0;
    let mut best: (f64, Option<Vec<f64>>) = (0.0, None);
    let gap_at = |w: &WeightVector, evals: &mut u64| -> Result<f64> {
        *evals += 1;
        let pa = me_probability(w, input_a, &a.sr)?;
        let pb = me_probability(w, input_b, &b.sr)?;
        Ok((pa - pb).abs())
    };

    let mut candidates: Vec<WeightVector> = Vec::new();
    candidates.push(WeightVector::zeros(n));
    candidates.extend(certificate_guided_weights(t, a, b)?);

    use rand::Rng;
    let mut rng = derive_rng(seed, &[0x4d45_4345u64]);
    let mut found: Option<(Vec<f64>, f64)> = None;
    'outer: for round in 0.. {
        let w = if round < candidates.len() {
            candidates[round].clone()
        } else {
            let scale = [1.0, 4.0, 10.0][round % 3];
            WeightVector::new((0..n).map(|_| rng.random_range(0.0..=scale)).collect()).unwrap()
        };
        if evals >= budget {
            break;
        }
        let mut w_cur = w.as_slice().to_vec();
        let mut g_cur = gap_at(&WeightVector::new(w_cur.clone()).unwrap(), &mut evals)?;
        if g_cur > best.0 {
            best = (g_cur, Some(w_cur.clone()));
        }
        // Coordinate ascent on |p_a - p_b|.
        let mut step = 1.0f64;
        while step > 1e-3 && evals < budget {
            let mut improved = false;
            for k in 0..n {
                for dir in [1.0, -1.0] {
                    let mut w_try = w_cur.clone();
                    w_try[k] = (w_try[k] + dir * step).max(0.0);
                    let g = gap_at(&WeightVector::new(w_try.clone()).unwrap(), &mut evals)?;
                    if g > g_cur {
                        g_cur = g;
                        w_cur = w_try;
                        improved = true;
                    }
                    if evals >= budget {
                        break;
                    }
                }
            }
            if g_cur > best.0 {
                best = (g_cur, Some(w_cur.clone()));
            }
            if g_cur > GAP {
                found = Some((w_cur.clone(), g_cur));
                break 'outer;
            }
            if !improved {
                step /= 2.0;
            }
        }
        if g_cur > GAP {
            found = Some((w_cur, g_cur));
            break;
        }
        if evals >= budget {
            break;
        }
    }
    let trace = SearchTrace {
        evaluations: evals,
        best_gap: best.0,
        best_weights: best.1,
    };
    Ok((found, trace))
}

/// A violated expectation found by [`mc_validate_torder`], with full
/// reproduction data.
#[derive(Debug, Clone, Serialize)]
pub struct TOrderViolation {
    pub kind: String,
    pub left: MappingId,
    pub right: MappingId,
    pub weights: Vec<f64>,
    pub seed: u64,
    pub gap: f64,
    pub combined_se: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct TOrderValidation {
    pub seed: u64,
    pub noise: NoiseSpec,
    pub trials: u64,
    pub weight_vectors: usize,
    pub cells_checked: usize,
    pub violations: Vec<TOrderViolation>,
}

/// Spot-checks a T-order graph by simulation: along every edge `a <= b` and
/// every sampled weight vector the estimated `P(a)` must not exceed `P(b)` by
/// more than `consistent_se` combined standard errors, and within every block
/// pairwise gaps must stay inside `consistent_se`.
pub fn mc_validate_torder(
    t: &Tableau,
    graph: &TOrderGraph,
    spec: &SweepSpec,
) -> Result<TOrderValidation> {
    let n = t.constraints.len();
    let weight_vectors = spec.weight_vectors(n)?;
    let mut violations = Vec::new();
    let mut cells = 0usize;
    let check_pair = |a: &MappingId,
                          b: &MappingId,
                          kind: &str,
                          tag: u64,
                          cells: &mut usize,
                          violations: &mut Vec<TOrderViolation>|
     -> Result<()> {
        for (wi, w) in weight_vectors.iter().enumerate() {
            let (ea, eb) =
                paired_shg_estimate(t, a, b, w, &spec.noise, spec.trials, spec.seed, &[tag, wi as u64])?;
            let combined_se = (ea.standard_error.powi(2) + eb.standard_error.powi(2)).sqrt();
            *cells += 1;
            let bad = match kind {
                // edge a <= b: flag estimated P(a) > P(b) beyond tolerance
                "edge" => ea.point - eb.point > spec.consistent_se * combined_se,
                // block pair: flag any gap beyond tolerance
                _ => (ea.point - eb.point).abs() > spec.consistent_se * combined_se,
            };
            if bad {
                violations.push(TOrderViolation {
                    kind: kind.to_string(),
                    left: a.clone(),
                    right: b.clone(),
                    weights: w.as_slice().to_vec(),
                    seed: spec.seed,
                    gap: ea.point - eb.point,
                    combined_se,
                });
            }
        }
        Ok(())
    };

    let mut tag = 0u64;
    for &(i, j) in &graph.edges_closed {
        let a = &graph.blocks[i][0];
        let b = &graph.blocks[j][0];
        check_pair(a, b, "edge", tag, &mut cells, &mut violations)?;
        tag += 1;
    }
    for block in &graph.blocks {
        for x in 1..block.len() {
            check_pair(&block[0], &block[x], "block", tag, &mut cells, &mut violations)?;
            tag += 1;
        }
    }
    Ok(TOrderValidation {
        seed: spec.seed,
        noise: spec.noise,
        trials: spec.trials,
        weight_vectors: weight_vectors.len(),
        cells_checked: cells,
        violations,
    })
}

/// Numeric confirmation of a `me-necessary` T-order: candidate equalities
/// (mutually passing pairs) whose difference-vector multisets actually differ
/// are split by exact counterexample search, and candidate arrows refuted by
/// an exact reverse gap are dropped. Returns the refined graph.
pub fn confirm_me_torder(
    t: &Tableau,
    mappings: &[MappingId],
    budget: u64,
    seed: u64,
) -> Result<TOrderGraph> {
    use crate::typology::me_uniform_leq_necessary;
    let k = mappings.len();
    // candidate arrows from the necessary condition
    let mut leq = vec![vec![false; k]; k];
    for i in 0..k {
        for j in 0..k {
            leq[i][j] = i == j || me_uniform_leq_necessary(t, &mappings[i], &mappings[j])?.holds;
        }
    }
    // Arbitration: for i != j with a candidate arrow i <= j, search for an
    // exact reverse gap P(i) > P(j); a hit refutes the arrow.
    for i in 0..k {
        for j in 0..k {
            if i != j && leq[i][j] {
                if me_equiprobable(t, &mappings[i], &mappings[j])?.equal {
                    continue;
                }
                let input_i = t.resolve(&mappings[i])?.0;
                let input_j = t.resolve(&mappings[j])?.0;
                // reuse the counterexample machinery on the signed gap
                let mut refuted = false;
                let (hit, _) = find_me_counterexample(t, &mappings[i], &mappings[j], budget, seed)?;
                if let Some((w, _)) = hit {
                    let wv = WeightVector::new(w)?;
                    let pi = me_probability(&wv, input_i, &mappings[i].sr)?;
                    let pj = me_probability(&wv, input_j, &mappings[j].sr)?;
                    if pi > pj + 1e-9 {
                        refuted = true;
                    }
                }
                if !refuted {
                    // directed search: maximize p_i - p_j specifically
                    let (hit, _) = find_me_counterexample(t, &mappings[j], &mappings[i], budget, seed ^ 1)?;
                    if let Some((w, _)) = hit {
                        let wv = WeightVector::new(w)?;
                        let pi = me_probability(&wv, input_i, &mappings[i].sr)?;
                        let pj = me_probability(&wv, input_j, &mappings[j].sr)?;
                        if pi > pj + 1e-9 {
                            refuted = true;
                        }
                    }
                }
                if refuted {
                    leq[i][j] = false;
                }
            }
        }
    }
    // Rebuild blocks (surviving mutual arrows) and edges.
    let mut parent: Vec<usize> = (0..k).collect();
    fn find(p: &mut Vec<usize>, i: usize) -> usize {
        if p[i] != i {
            let r = find(p, p[i]);
            p[i] = r;
        }
        p[i]
    }
    for i in 0..k {
        for j in (i + 1)..k {
            if leq[i][j] && leq[j][i] {
                let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                if ri != rj {
                    parent[ri.max(rj)] = ri.min(rj);
                }
            }
        }
    }
    let mut by_root: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for i in 0..k {
        let r = find(&mut parent, i);
        by_root.entry(r).or_default().push(i);
    }
    let mut blocks: Vec<Vec<MappingId>> = by_root
        .values()
        .map(|idxs| {
            let mut ms: Vec<MappingId> = idxs.iter().map(|&i| mappings[i].clone()).collect();
            ms.sort();
            ms
        })
        .collect();
    blocks.sort();
    let block_of = |m: &MappingId| blocks.iter().position(|b| b.contains(m)).unwrap();
    let nb = blocks.len();
    let mut adj = vec![vec![false; nb]; nb];
    for i in 0..k {
        for j in 0..k {
            if i != j && leq[i][j] {
                let (bi, bj) = (block_of(&mappings[i]), block_of(&mappings[j]));
                if bi != bj && !leq[j][i] {
                    adj[bi][bj] = true;
                }
            }
        }
    }
    // closure + reduction
    for x in 0..nb {
        for i in 0..nb {
            if adj[i][x] {
                for j in 0..nb {
                    if adj[x][j] {
                        adj[i][j] = true;
                    }
                }
            }
        }
    }
    let mut closed = Vec::new();
    for i in 0..nb {
        for j in 0..nb {
            if i != j && adj[i][j] {
                closed.push((i, j));
            }
        }
    }
    let reduced: Vec<(usize, usize)> = closed
        .iter()
        .copied()
        .filter(|&(i, j)| !(0..nb).any(|x| x != i && x != j && adj[i][x] && adj[x][j]))
        .collect();
    Ok(TOrderGraph {
        framework: Framework::MeNecessary,
        blocks,
        edges_closed: closed,
        edges_reduced: reduced,
        edge_status: EdgeStatus::NecessaryConfirmed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableau::Tableau;

    fn tableau(json: &str) -> Tableau {
        Tableau::parse(json.as_bytes()).unwrap()
    }

    fn pair_tableau() -> Tableau {
        // a's losers {(1,-1)}; b's losers {(1,0)}
        tableau(
            r#"{"constraints": ["A", "B"],
                "inputs": [
                  {"ur": "x", "candidates": [
                    {"sr": "w", "violations": [0, 1]}, {"sr": "z", "violations": [1, 0]}]},
                  {"ur": "y", "candidates": [
                    {"sr": "w", "violations": [0, 0]}, {"sr": "z", "violations": [1, 0]}]}
                ]}"#,
        )
    }

    #[test]
    fn self_pair_has_zero_me_gap() {
        let t = pair_tableau();
        let a = MappingId::new("x", "w");
        let spec = SweepSpec::random(5, 10.0, 3, NoiseSpec::default(), 200);
        let report = sweep_compare(&t, &[(a.clone(), a.clone())], &spec).unwrap();
        assert_eq!(report.pairs[0].max_me_gap, 0.0);
        // identical mappings share every trial: the SHG gap is exactly zero
        assert_eq!(report.pairs[0].max_shg_gap, 0.0);
    }

    #[test]
    fn closed_form_gap_at_unit_weight() {
        // at w = (0,1): p_a = 1/(1+e^1) ~ 0.2689, p_b = 1/2; gap ~ 0.2311
        let t = pair_tableau();
        let a = MappingId::new("x", "w");
        let b = MappingId::new("y", "w");
        let mut spec = SweepSpec::random(1, 1.0, 1, NoiseSpec::default(), 10);
        spec.weights = WeightSource::Grid(vec![vec![0.0], vec![1.0]]);
        let report = sweep_compare(&t, &[(a, b)], &spec).unwrap();
        let gap = report.pairs[0].cells[0].me_gap;
        assert!((gap - 0.23105857863000487).abs() < 1e-12, "gap {gap}");
    }

    #[test]
    fn counterexample_found_for_distinct_multisets() {
        let t = pair_tableau();
        let (hit, trace) = find_me_counterexample(
            &t,
            &MappingId::new("x", "w"),
            &MappingId::new("y", "w"),
            10_000,
            7,
        )
        .unwrap();
        let (w, gap) = hit.expect("counterexample must exist");
        assert!(gap > 1e-6, "gap {gap} at {w:?}; trace {trace:?}");
    }

    #[test]
    fn extra_loser_lowers_probability() {
        // losers {(2,0),(0,2)} vs {(2,0),(0,2),(5,5)}: at w = 0 the gap is
        // 1/3 - 1/4 = 1/12.
        let t = tableau(
            r#"{"constraints": ["A", "B"],
                "inputs": [
                  {"ur": "x", "candidates": [
                    {"sr": "w", "violations": [0, 0]},
                    {"sr": "z1", "violations": [2, 0]},
                    {"sr": "z2", "violations": [0, 2]}]},
                  {"ur": "y", "candidates": [
                    {"sr": "w", "violations": [0, 0]},
                    {"sr": "z1", "violations": [2, 0]},
                    {"sr": "z2", "violations": [0, 2]},
                    {"sr": "z3", "violations": [5, 5]}]}
                ]}"#,
        );
        let (hit, _) =
            find_me_counterexample(&t, &MappingId::new("x", "w"), &MappingId::new("y", "w"), 5_000, 11)
                .unwrap();
        assert!(hit.is_some());
        // exact check at w = 0
        let w0 = WeightVector::zeros(2);
        let pa = me_probability(&w0, t.resolve(&MappingId::new("x", "w")).unwrap().0, "w").unwrap();
        let pb = me_probability(&w0, t.resolve(&MappingId::new("y", "w")).unwrap().0, "w").unwrap();
        assert!((pa - pb - (1.0 / 3.0 - 0.25)).abs() < 1e-15);
    }

    #[test]
    fn zero_budget_returns_none_with_empty_trace() {
        let t = pair_tableau();
        let (hit, trace) =
            find_me_counterexample(&t, &MappingId::new("x", "w"), &MappingId::new("y", "w"), 0, 7)
                .unwrap();
        assert!(hit.is_none());
        assert_eq!(trace.evaluations, 0);
    }

    #[test]
    fn counterexample_on_equal_pair_is_domain_error() {
        let t = tableau(
            r#"{"constraints": ["A"],
                "inputs": [
                  {"ur": "x", "candidates": [
                    {"sr": "w", "violations": [0]}, {"sr": "z", "violations": [1]}]},
                  {"ur": "y", "candidates": [
                    {"sr": "w", "violations": [2]}, {"sr": "z", "violations": [3]}]}
                ]}"#,
        );
        assert!(matches!(
            find_me_counterexample(&t, &MappingId::new("x", "w"), &MappingId::new("y", "w"), 100, 1),
            Err(Error::Domain(_))
        ));
    }
}
