//! Cone/hull-plus-orthant membership, extreme generators, nonredundant
//! losers, and ray canonicalization over integer difference vectors.

use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::simplex::{solve_feasibility, Feasibility, FeasibilityProblem};
use super::{rat, Rational};
use crate::error::Error;
use crate::Result;

/// Which generated region a membership query is about.
///
/// `Cone`: nonnegative combinations of the generators, plus the nonnegative
/// orthant. `Hull`: convex combinations (coefficients summing to one), plus
/// the orthant. The hull is the cone cut down by the normalization on the
/// coefficients.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RegionKind {
    Cone,
    Hull,
}

/// Constructive answer to a membership query.
#[derive(Debug, Clone, PartialEq)]
pub enum MembershipCertificate {
    /// `target = sum(lambda_i * generator_i) + slack`, `lambda >= 0`,
    /// `slack >= 0` entrywise, and in hull mode `sum(lambda) = 1`.
    Member { lambdas: Vec<Rational>, slack: Vec<Rational> },
    /// `separator >= 0` with `separator . target` strictly below the
    /// infimum of `separator . p` over the region (0 in cone mode,
    /// `min_i separator . generator_i` in hull mode).
    NonMember { separator: Vec<Rational> },
}

impl MembershipCertificate {
    pub fn is_member(&self) -> bool {
        matches!(self, MembershipCertificate::Member { .. })
    }
}

fn check_dims(target: &[i64], generators: &[Vec<i64>]) -> Result<usize> {
    let n = target.len();
    for g in generators {
        if g.len() != n {
            return Err(Error::Dimension { expected: n, got: g.len() });
        }
    }
    Ok(n)
}

fn membership_problem(target: &[i64], generators: &[Vec<i64>], kind: RegionKind) -> FeasibilityProblem {
    let n = target.len();
    let m = generators.len();
    // Variables: m lambdas then n orthant slacks, all nonnegative.
    let mut p = FeasibilityProblem::new(m + n);
    for k in 0..n {
        let mut row = vec![Rational::zero(); m + n];
        for (i, g) in generators.iter().enumerate() {
            row[i] = rat(g[k]);
        }
        row[m + k] = rat(1);
        p.eq.push((row, rat(target[k])));
    }
    if kind == RegionKind::Hull {
        let mut row = vec![Rational::zero(); m + n];
        for cell in row.iter_mut().take(m) {
            *cell = rat(1);
        }
        p.eq.push((row, rat(1)));
    }
    p
}

fn decide(target: &[i64], generators: &[Vec<i64>], kind: RegionKind) -> Result<MembershipCertificate> {
    let n = check_dims(target, generators)?;
    let m = generators.len();
    let problem = membership_problem(target, generators, kind);
    let cert = match solve_feasibility(&problem)? {
        Feasibility::Feasible(x) => MembershipCertificate::Member {
            lambdas: x[..m].to_vec(),
            slack: x[m..].to_vec(),
        },
        Feasibility::Infeasible(farkas) => {
            // The equality-row multipliers y satisfy y . g_i (+ y_hull) <= 0,
            // y_k <= 0 on the slack columns, and y . target (+ y_hull) > 0;
            // w = -y[..n] is the separating weight vector.
            let separator = farkas.eq_multipliers[..n].iter().map(|y| -y).collect();
            MembershipCertificate::NonMember { separator }
        }
    };
    debug_assert!(verify_membership(kind, target, generators, &cert));
    Ok(cert)
}

/// Is `target >= sum(lambda_i * generator_i)` entrywise for some `lambda >= 0`?
///
/// An empty generator list is legal: the region is the nonnegative orthant.
pub fn cone_orthant_member(target: &[i64], generators: &[Vec<i64>]) -> Result<MembershipCertificate> {
    decide(target, generators, RegionKind::Cone)
}

/// Is `target >= sum(lambda_i * generator_i)` entrywise for some `lambda >= 0`
/// with `sum(lambda) = 1`? The hull of nothing is empty, so an empty generator
/// list is a domain error rather than a non-membership.
pub fn hull_orthant_member(target: &[i64], generators: &[Vec<i64>]) -> Result<MembershipCertificate> {
    if generators.is_empty() {
        return Err(Error::domain("hull membership needs at least one generator"));
    }
    decide(target, generators, RegionKind::Hull)
}

/// Exact soundness check for a certificate, usable by callers that want to
/// re-verify a verdict independently of the solver.
pub fn verify_membership(
    kind: RegionKind,
    target: &[i64],
    generators: &[Vec<i64>],
    cert: &MembershipCertificate,
) -> bool {
    let n = target.len();
    match cert {
        MembershipCertificate::Member { lambdas, slack } => {
            if lambdas.len() != generators.len() || slack.len() != n {
                return false;
            }
            if lambdas.iter().any(|l| l.is_negative()) || slack.iter().any(|s| s.is_negative()) {
                return false;
            }
            if kind == RegionKind::Hull {
                let total: Rational = lambdas.iter().cloned().sum();
                if total != rat(1) {
                    return false;
                }
            }
            (0..n).all(|k| {
                let combo: Rational = generators
                    .iter()
                    .zip(lambdas)
                    .map(|(g, l)| l * rat(g[k]))
                    .sum();
                combo + &slack[k] == rat(target[k])
            })
        }
        MembershipCertificate::NonMember { separator } => {
            if separator.len() != n || separator.iter().any(|w| w.is_negative()) {
                return false;
            }
            let dot = |v: &[i64]| -> Rational {
                separator.iter().zip(v).map(|(w, &x)| w * rat(x)).sum()
            };
            let wt = dot(target);
            match kind {
                RegionKind::Cone => {
                    wt.is_negative() && generators.iter().all(|g| !dot(g).is_negative())
                }
                RegionKind::Hull => generators.iter().all(|g| wt < dot(g)),
            }
        }
    }
}

/// The canonical representative of the open ray `{ c * v : c > 0 }`: divide
/// by the gcd of the absolute values, signs preserved. The zero vector maps
/// to a distinguished marker.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CanonicalRay {
    Zero,
    Dir(Vec<i64>),
}

pub fn canonical_ray(v: &[i64]) -> CanonicalRay {
    let mut g: i64 = 0;
    for &x in v {
        g = g.gcd(&x.abs());
    }
    if g == 0 {
        CanonicalRay::Zero
    } else {
        CanonicalRay::Dir(v.iter().map(|&x| x / g).collect())
    }
}

/// Indices of the generators that are extreme points of
/// `conv(generators) + nonnegative orthant`.
///
/// A generator is extreme iff it is not a hull-plus-orthant member of the
/// remaining generators; the leave-one-out test excludes *all* copies of the
/// tested value so duplicates cannot mask extremeness, and only the
/// lowest-index copy of a duplicated value is reported. An empty remainder
/// counts as extreme.
pub fn extreme_generators(generators: &[Vec<i64>]) -> Result<Vec<usize>> {
    if let Some(first) = generators.first() {
        check_dims(first, generators)?;
    }
    let mut out = Vec::new();
    for (i, g) in generators.iter().enumerate() {
        if generators[..i].contains(g) {
            continue;
        }
        let rest: Vec<Vec<i64>> = generators.iter().filter(|h| *h != g).cloned().collect();
        let extreme = if rest.is_empty() {
            true
        } else {
            !hull_orthant_member(g, &rest)?.is_member()
        };
        if extreme {
            out.push(i);
        }
    }
    Ok(out)
}

/// Indices of the difference vectors that are *not* cone-plus-orthant members
/// of the remaining ones (the HG-nonredundant losers).
///
/// Positive rescalings and duplicates of a kept vector are redundant; the
/// leave-one-out test therefore excludes the whole ray of the tested vector,
/// and only the lowest-index representative of each ray is reported. All-zero
/// vectors and entrywise-nonnegative vectors are always redundant.
pub fn nonredundant_losers(diffs: &[Vec<i64>]) -> Result<Vec<usize>> {
    if let Some(first) = diffs.first() {
        check_dims(first, diffs)?;
    }
    let rays: Vec<CanonicalRay> = diffs.iter().map(|d| canonical_ray(d)).collect();
    let mut out = Vec::new();
    for (i, d) in diffs.iter().enumerate() {
        if rays[i] == CanonicalRay::Zero {
            continue;
        }
        if rays[..i].contains(&rays[i]) {
            continue;
        }
        let rest: Vec<Vec<i64>> = diffs
            .iter()
            .enumerate()
            .filter(|(j, _)| rays[*j] != rays[i])
            .map(|(_, v)| v.clone())
            .collect();
        if !cone_orthant_member(d, &rest)?.is_member() {
            out.push(i);
        }
    }
    Ok(out)
}
