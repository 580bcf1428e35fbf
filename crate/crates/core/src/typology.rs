//! The symbolic decision procedures: uniform probability inequalities,
//! equiprobability, HG equivalence, and T-order construction.
//!
//! A mapping's stochastic-HG probability is uniformly below another's for
//! every nonnegative weight vector exactly when each loser difference vector
//! of the right-hand mapping lies in the cone-plus-orthant generated by the
//! left-hand mapping's loser difference vectors. The MaxEnt analogue uses the
//! convex hull instead of the cone and is a necessary condition only. Two
//! mappings are MaxEnt-equiprobable exactly when their difference-vector
//! multisets coincide; stochastic-HG equiprobability holds exactly when the
//! nonredundant difference vectors match up to positive rescaling, which is
//! also equivalence in categorical HG.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

use crate::geometry::{
    canonical_ray, cone_orthant_member, hull_orthant_member, nonredundant_losers, rat,
    solve_feasibility, CanonicalRay, FarkasCertificate, Feasibility, FeasibilityProblem,
    MembershipCertificate, Rational,
};
use crate::tableau::{DifferenceVector, MappingId, Tableau};
use crate::Result;

/// Framework tag attached to verdicts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Framework {
    Shg,
    MeNecessary,
    Me,
    Hg,
}

impl std::fmt::Display for Framework {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Framework::Shg => "shg",
            Framework::MeNecessary => "me-necessary",
            Framework::Me => "me",
            Framework::Hg => "hg",
        };
        f.write_str(s)
    }
}

/// Outcome of the HG possibility test: a witness weight vector with
/// `w . diff >= 1` for every loser, or an exact infeasibility certificate.
#[derive(Debug, Clone)]
pub struct HgPossible {
    pub possible: bool,
    pub witness: Option<Vec<Rational>>,
    pub certificate: Option<FarkasCertificate>,
}

/// Is the mapping a categorical-HG winner for some nonnegative weights?
///
/// Strictness is decided by the normalization `w . diff >= 1`: the scaled
/// system is feasible iff the strict one is.
pub fn hg_possible(t: &Tableau, a: &MappingId) -> Result<HgPossible> {
    let diffs = t.loser_diffs(a)?;
    let n = t.constraints.len();
    if diffs.is_empty() {
        return Ok(HgPossible { possible: true, witness: Some(vec![rat(0); n]), certificate: None });
    }
    let m = diffs.len();
    // Variables: w (n) then one surplus per loser; w . c_i - s_i = 1.
    let mut p = FeasibilityProblem::new(n + m);
    for (i, d) in diffs.iter().enumerate() {
        let mut row = vec![rat(0); n + m];
        for (k, &c) in d.as_slice().iter().enumerate() {
            row[k] = rat(c);
        }
        row[n + i] = rat(-1);
        p.eq.push((row, rat(1)));
    }
    Ok(match solve_feasibility(&p)? {
        Feasibility::Feasible(x) => HgPossible {
            possible: true,
            witness: Some(x[..n].to_vec()),
            certificate: None,
        },
        Feasibility::Infeasible(cert) => HgPossible {
            possible: false,
            witness: None,
            certificate: Some(cert),
        },
    })
}

/// Verdict on a uniform probability inequality `P(a) <= P(b)` for all
/// nonnegative weight vectors.
#[derive(Debug, Clone)]
pub struct UniformInequalityVerdict {
    pub framework: Framework,
    pub left: MappingId,
    pub right: MappingId,
    pub holds: bool,
    /// True when the verdict holds because the left mapping is impossible in
    /// HG (its probability is identically zero).
    pub vacuous: bool,
    /// One certificate per loser of the right-hand mapping, in candidate order.
    pub per_loser: Vec<(String, MembershipCertificate)>,
}

impl UniformInequalityVerdict {
    fn from_certs(
        framework: Framework,
        left: &MappingId,
        right: &MappingId,
        per_loser: Vec<(String, MembershipCertificate)>,
    ) -> Self {
        let holds = per_loser.iter().all(|(_, c)| c.is_member());
        UniformInequalityVerdict {
            framework,
            left: left.clone(),
            right: right.clone(),
            holds,
            vacuous: false,
            per_loser,
        }
    }
}

fn raw_vecs(diffs: &[DifferenceVector]) -> Vec<Vec<i64>> {
    diffs.iter().map(|d| d.0.clone()).collect()
}

/// Exact verdict on the uniform stochastic-HG inequality `P(a) <= P(b)`.
///
/// Holds iff every loser difference vector of `b` is a cone-plus-orthant
/// member of `a`'s loser difference vectors; if `a` is impossible in HG the
/// inequality holds vacuously (its left side is identically zero).
pub fn shg_uniform_leq(t: &Tableau, a: &MappingId, b: &MappingId) -> Result<UniformInequalityVerdict> {
    let a_diffs = raw_vecs(&t.loser_diffs(a)?);
    let b_diffs = t.difference_vectors(b)?;
    if !hg_possible(t, a)?.possible {
        return Ok(UniformInequalityVerdict {
            framework: Framework::Shg,
            left: a.clone(),
            right: b.clone(),
            holds: true,
            vacuous: true,
            per_loser: Vec::new(),
        });
    }
    let per_loser = b_diffs
        .into_iter()
        .map(|(sr, d)| Ok((sr, cone_orthant_member(d.as_slice(), &a_diffs)?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(UniformInequalityVerdict::from_certs(Framework::Shg, a, b, per_loser))
}

/// Necessary condition for the uniform MaxEnt inequality `P(a) <= P(b)`:
/// every loser of `b` must be a hull-plus-orthant member of `a`'s loser
/// difference vectors. `holds = false` refutes the inequality; `holds = true`
/// is only a candidate arrow pending numeric confirmation.
///
/// If `a` has no losers its MaxEnt probability is identically 1 and the
/// verdict is decided directly: holds iff `b` also has no losers.
pub fn me_uniform_leq_necessary(
    t: &Tableau,
    a: &MappingId,
    b: &MappingId,
) -> Result<UniformInequalityVerdict> {
    let a_diffs = raw_vecs(&t.loser_diffs(a)?);
    let b_diffs = t.difference_vectors(b)?;
    if a_diffs.is_empty() {
        return Ok(UniformInequalityVerdict {
            framework: Framework::MeNecessary,
            left: a.clone(),
            right: b.clone(),
            holds: b_diffs.is_empty(),
            vacuous: false,
            per_loser: Vec::new(),
        });
    }
    let per_loser = b_diffs
        .into_iter()
        .map(|(sr, d)| Ok((sr, hull_orthant_member(d.as_slice(), &a_diffs)?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(UniformInequalityVerdict::from_certs(Framework::MeNecessary, a, b, per_loser))
}

/// Evidence carried by an equiprobability verdict, sufficient to re-verify it.
#[derive(Debug, Clone)]
pub enum EquiprobabilityEvidence {
    /// MaxEnt: the two difference-vector multisets and their symmetric
    /// difference (empty iff equal).
    Me {
        left: Vec<DifferenceVector>,
        right: Vec<DifferenceVector>,
        only_left: Vec<DifferenceVector>,
        only_right: Vec<DifferenceVector>,
    },
    /// Stochastic HG / categorical HG: nonredundant loser indices, their
    /// canonical rays, the matched ray pairs, and HG-impossibility flags.
    Shg {
        left_nonredundant: Vec<usize>,
        right_nonredundant: Vec<usize>,
        left_rays: Vec<Vec<i64>>,
        right_rays: Vec<Vec<i64>>,
        matched: Vec<(usize, usize)>,
        left_impossible: bool,
        right_impossible: bool,
    },
}

/// Framework-tagged equiprobability verdict.
#[derive(Debug, Clone)]
pub struct EquiprobabilityVerdict {
    pub framework: Framework,
    pub left: MappingId,
    pub right: MappingId,
    pub equal: bool,
    pub evidence: EquiprobabilityEvidence,
}

fn sorted_multiset(diffs: &[DifferenceVector]) -> Vec<DifferenceVector> {
    let mut v = diffs.to_vec();
    v.sort();
    v
}

fn multiset_difference(a: &[DifferenceVector], b: &[DifferenceVector]) -> Vec<DifferenceVector> {
    let mut counts: BTreeMap<&DifferenceVector, i64> = BTreeMap::new();
    for d in b {
        *counts.entry(d).or_insert(0) += 1;
    }
    let mut out = Vec::new();
    for d in a {
        match counts.get_mut(d) {
            Some(c) if *c > 0 => *c -= 1,
            _ => out.push(d.clone()),
        }
    }
    out
}

/// Two mappings are MaxEnt-equiprobable iff their difference-vector multisets
/// coincide. Multisets, not sets: the MaxEnt partition function sums one
/// exponential per loser, so duplicated losers change the identity.
pub fn me_equiprobable(t: &Tableau, a: &MappingId, b: &MappingId) -> Result<EquiprobabilityVerdict> {
    let left = sorted_multiset(&t.loser_diffs(a)?);
    let right = sorted_multiset(&t.loser_diffs(b)?);
    let only_left = multiset_difference(&left, &right);
    let only_right = multiset_difference(&right, &left);
    let equal = only_left.is_empty() && only_right.is_empty();
    Ok(EquiprobabilityVerdict {
        framework: Framework::Me,
        left: a.clone(),
        right: b.clone(),
        equal,
        evidence: EquiprobabilityEvidence::Me { left, right, only_left, only_right },
    })
}

fn shg_like_equiprobable(
    t: &Tableau,
    a: &MappingId,
    b: &MappingId,
    framework: Framework,
) -> Result<EquiprobabilityVerdict> {
    let a_diffs = raw_vecs(&t.loser_diffs(a)?);
    let b_diffs = raw_vecs(&t.loser_diffs(b)?);
    let left_impossible = !hg_possible(t, a)?.possible;
    let right_impossible = !hg_possible(t, b)?.possible;
    let left_nr = nonredundant_losers(&a_diffs)?;
    let right_nr = nonredundant_losers(&b_diffs)?;
    let ray_of = |v: &Vec<i64>| match canonical_ray(v) {
        CanonicalRay::Dir(d) => d,
        // All-zero difference vectors never survive the nonredundancy filter.
        CanonicalRay::Zero => unreachable!("zero rays are excluded from nonredundant sets"),
    };
    let left_rays: Vec<Vec<i64>> = left_nr.iter().map(|&i| ray_of(&a_diffs[i])).collect();
    let right_rays: Vec<Vec<i64>> = right_nr.iter().map(|&i| ray_of(&b_diffs[i])).collect();
    let mut matched = Vec::new();
    for (i, lr) in left_rays.iter().enumerate() {
        if let Some(j) = right_rays.iter().position(|rr| rr == lr) {
            matched.push((i, j));
        }
    }
    let rays_equal = matched.len() == left_rays.len() && left_rays.len() == right_rays.len() && {
        let mut seen = vec![false; right_rays.len()];
        matched.iter().all(|&(_, j)| {
            let fresh = !seen[j];
            seen[j] = true;
            fresh
        })
    };
    // Impossible mappings have probability identically zero, so they are
    // equiprobable with each other and with nothing else.
    let equal = if left_impossible || right_impossible {
        left_impossible && right_impossible
    } else {
        rays_equal
    };
    Ok(EquiprobabilityVerdict {
        framework,
        left: a.clone(),
        right: b.clone(),
        equal,
        evidence: EquiprobabilityEvidence::Shg {
            left_nonredundant: left_nr,
            right_nonredundant: right_nr,
            left_rays,
            right_rays,
            matched,
            left_impossible,
            right_impossible,
        },
    })
}

/// Two mappings are stochastic-HG equiprobable iff each nonredundant
/// difference vector on one side is a positive rescaling of a nonredundant
/// difference vector on the other side (both directions), decided on
/// canonical rays.
pub fn shg_equiprobable(t: &Tableau, a: &MappingId, b: &MappingId) -> Result<EquiprobabilityVerdict> {
    shg_like_equiprobable(t, a, b, Framework::Shg)
}

/// Equivalence in categorical HG: the same decision procedure as
/// stochastic-HG equiprobability, tagged for reporting.
pub fn hg_equivalent(t: &Tableau, a: &MappingId, b: &MappingId) -> Result<EquiprobabilityVerdict> {
    shg_like_equiprobable(t, a, b, Framework::Hg)
}

/// Status of a T-order edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum EdgeStatus {
    /// Exact (stochastic HG / Lemma-1 style) edge.
    Exact,
    /// Candidate arrow from a necessary-only condition.
    Necessary,
    /// Candidate arrow corroborated by the numeric verifier.
    NecessaryConfirmed,
}

/// Partial order of equiprobability blocks.
#[derive(Debug, Clone)]
pub struct TOrderGraph {
    pub framework: Framework,
    /// Blocks partition the analyzed mappings; each block is sorted and the
    /// blocks are sorted by their first element.
    pub blocks: Vec<Vec<MappingId>>,
    /// Transitively closed strict edges between block indices.
    pub edges_closed: Vec<(usize, usize)>,
    /// Transitive reduction of `edges_closed` for display.
    pub edges_reduced: Vec<(usize, usize)>,
    pub edge_status: EdgeStatus,
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }
    fn find(&mut self, i: usize) -> usize {
        if self.0[i] != i {
            let root = self.find(self.0[i]);
            self.0[i] = root;
        }
        self.0[i]
    }
    fn union(&mut self, i: usize, j: usize) {
        let (ri, rj) = (self.find(i), self.find(j));
        if ri != rj {
            self.0[ri.max(rj)] = ri.min(rj);
        }
    }
}

fn transitive_closure(n: usize, edges: &mut Vec<(usize, usize)>) {
    let mut adj = vec![vec![false; n]; n];
    for &(i, j) in edges.iter() {
        adj[i][j] = true;
    }
    for k in 0..n {
        for i in 0..n {
            if adj[i][k] {
                for j in 0..n {
                    if adj[k][j] {
                        adj[i][j] = true;
                    }
                }
            }
        }
    }
    edges.clear();
    for i in 0..n {
        for j in 0..n {
            if i != j && adj[i][j] {
                edges.push((i, j));
            }
        }
    }
}

fn transitive_reduction(n: usize, closed: &[(usize, usize)]) -> Vec<(usize, usize)> {
    let mut adj = vec![vec![false; n]; n];
    for &(i, j) in closed {
        adj[i][j] = true;
    }
    let mut reduced = Vec::new();
    for &(i, j) in closed {
        let covered = (0..n).any(|k| k != i && k != j && adj[i][k] && adj[k][j]);
        if !covered {
            reduced.push((i, j));
        }
    }
    reduced
}

/// Builds the T-order over the given mappings: blocks are equivalence classes
/// under the framework's equiprobability test (mutual passing of the
/// necessary condition for `me-necessary`, reported as candidate equalities),
/// edges are pairwise uniform-inequality verdicts between block
/// representatives, transitively closed for queries and reduced for display.
pub fn torder(t: &Tableau, framework: Framework, mappings: &[MappingId]) -> Result<TOrderGraph> {
    let leq = |a: &MappingId, b: &MappingId| -> Result<bool> {
        Ok(match framework {
            Framework::Shg | Framework::Hg => shg_uniform_leq(t, a, b)?.holds,
            Framework::MeNecessary | Framework::Me => me_uniform_leq_necessary(t, a, b)?.holds,
        })
    };

    let k = mappings.len();
    let mut uf = UnionFind::new(k);
    let mut leq_matrix = vec![vec![false; k]; k];
    for i in 0..k {
        leq_matrix[i][i] = true;
        for j in 0..k {
            if i != j {
                leq_matrix[i][j] = leq(&mappings[i], &mappings[j])?;
            }
        }
    }
    for i in 0..k {
        for j in (i + 1)..k {
            let merge = match framework {
                Framework::Shg | Framework::Hg => {
                    shg_like_equiprobable(t, &mappings[i], &mappings[j], framework)?.equal
                }
                Framework::Me => me_equiprobable(t, &mappings[i], &mappings[j])?.equal,
                Framework::MeNecessary => leq_matrix[i][j] && leq_matrix[j][i],
            };
            if merge {
                uf.union(i, j);
            }
        }
    }

    let mut by_root: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for i in 0..k {
        let root = uf.find(i);
        by_root.entry(root).or_default().push(i);
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
    // Representative of each block for edge computation.
    let block_of = |m: &MappingId| blocks.iter().position(|b| b.contains(m)).unwrap();
    let mut rep = vec![None; blocks.len()];
    for m in mappings {
        let b = block_of(m);
        if rep[b].is_none() {
            rep[b] = Some(m.clone());
        }
    }

    let nb = blocks.len();
    let mut edges = Vec::new();
    for i in 0..nb {
        for j in 0..nb {
            if i != j {
                let (a, b) = (rep[i].as_ref().unwrap(), rep[j].as_ref().unwrap());
                if leq(a, b)? && !leq(b, a)? {
                    edges.push((i, j));
                }
            }
        }
    }
    transitive_closure(nb, &mut edges);
    let reduced = transitive_reduction(nb, &edges);
    Ok(TOrderGraph {
        framework,
        blocks,
        edges_closed: edges,
        edges_reduced: reduced,
        edge_status: match framework {
            Framework::Shg | Framework::Hg => EdgeStatus::Exact,
            Framework::MeNecessary | Framework::Me => EdgeStatus::Necessary,
        },
    })
}

impl TOrderGraph {
    /// Graphviz rendering; necessary-only edges are drawn dashed.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph torder {\n  rankdir=LR;\n  node [shape=box];\n");
        for (i, block) in self.blocks.iter().enumerate() {
            let label = block
                .iter()
                .map(|m| m.to_string().replace('"', "\\\""))
                .collect::<Vec<_>>()
                .join("\\n");
            let _ = writeln!(out, "  b{i} [label=\"{label}\"];");
        }
        let style = match self.edge_status {
            EdgeStatus::Exact => "",
            EdgeStatus::Necessary => " [style=dashed, label=\"necessary\"]",
            EdgeStatus::NecessaryConfirmed => " [style=dashed, label=\"confirmed\"]",
        };
        for &(i, j) in &self.edges_reduced {
            let _ = writeln!(out, "  b{i} -> b{j}{style};");
        }
        out.push_str("}\n");
        out
    }

    pub fn block_index_of(&self, m: &MappingId) -> Option<usize> {
        self.blocks.iter().position(|b| b.contains(m))
    }

    /// Queries the closed relation on blocks.
    pub fn block_leq(&self, i: usize, j: usize) -> bool {
        i == j || self.edges_closed.contains(&(i, j))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableau::Tableau;

    fn tableau(json: &str) -> Tableau {
        Tableau::parse(json.as_bytes()).unwrap()
    }

    fn two_inputs(a_viols: &[(&str, [u32; 2])], b_viols: &[(&str, [u32; 2])]) -> Tableau {
        let mk = |cands: &[(&str, [u32; 2])]| {
            cands
                .iter()
                .map(|(sr, v)| format!(r#"{{"sr": "{sr}", "violations": [{}, {}]}}"#, v[0], v[1]))
                .collect::<Vec<_>>()
                .join(",")
        };
        tableau(&format!(
            r#"{{"constraints": ["A", "B"],
                "inputs": [
                  {{"ur": "x", "candidates": [{}]}},
                  {{"ur": "y", "candidates": [{}]}}
                ]}}"#,
            mk(a_viols),
            mk(b_viols)
        ))
    }

    #[test]
    fn hg_possible_cases() {
        // no losers -> possible with w = 0
        let t = tableau(
            r#"{"constraints": ["A"], "inputs": [{"ur": "x", "candidates": [{"sr": "y", "violations": [0]}]}]}"#,
        );
        assert!(hg_possible(&t, &MappingId::new("x", "y")).unwrap().possible);

        // single loser (1,-1): possible
        let t = two_inputs(&[("w", [0, 1]), ("z", [1, 0])], &[("w", [0, 0])]);
        let p = hg_possible(&t, &MappingId::new("x", "w")).unwrap();
        assert!(p.possible);
        let witness = p.witness.unwrap();
        // w . (1, -1) >= 1 must hold exactly for the witness.
        let dot = &witness[0] - &witness[1];
        assert!(dot >= rat(1));

        // all-zero difference vector: impossible
        let t = two_inputs(&[("w", [1, 1]), ("z", [1, 1])], &[("w", [0, 0])]);
        let p = hg_possible(&t, &MappingId::new("x", "w")).unwrap();
        assert!(!p.possible);
        assert!(p.certificate.is_some());
    }

    #[test]
    fn shg_uniform_leq_reflexive_and_vacuous() {
        let t = two_inputs(&[("w", [0, 1]), ("z", [1, 0])], &[("solo", [0, 0])]);
        let a = MappingId::new("x", "w");
        let v = shg_uniform_leq(&t, &a, &a).unwrap();
        assert!(v.holds && !v.vacuous);

        // right side with no losers: holds with no certificates needed.
        let b = MappingId::new("y", "solo");
        let v = shg_uniform_leq(&t, &a, &b).unwrap();
        assert!(v.holds);
        assert!(v.per_loser.is_empty());
    }

    #[test]
    fn vacuous_branch_for_impossible_left_mapping() {
        // x's winner ties its loser everywhere: impossible in HG.
        let t = two_inputs(&[("w", [1, 1]), ("z", [1, 1])], &[("w", [0, 1]), ("z", [1, 0])]);
        let v = shg_uniform_leq(&t, &MappingId::new("x", "w"), &MappingId::new("y", "w")).unwrap();
        assert!(v.holds && v.vacuous);
    }

    #[test]
    fn me_necessary_no_loser_branches() {
        let t = two_inputs(&[("solo", [0, 0])], &[("w", [0, 0]), ("z", [1, 1])]);
        let a = MappingId::new("x", "solo");
        let b = MappingId::new("y", "w");
        // P(a) is identically 1; the inequality holds iff b also has no losers.
        assert!(!me_uniform_leq_necessary(&t, &a, &b).unwrap().holds);
        assert!(me_uniform_leq_necessary(&t, &b, &a).unwrap().holds);
        assert!(me_uniform_leq_necessary(&t, &a, &a).unwrap().holds);
    }

    #[test]
    fn hull_refutation_example() {
        // a's losers {(2,0),(0,2)}; b has an extra all-zero loser.
        let t = two_inputs(
            &[("w", [0, 0]), ("z1", [2, 0]), ("z2", [0, 2])],
            &[("w", [1, 1]), ("z1", [3, 1]), ("z2", [1, 3]), ("z3", [1, 1])],
        );
        let a = MappingId::new("x", "w");
        let b = MappingId::new("y", "w");
        // SHG: all of b's losers are cone members of a's (the zero vector via
        // lambda = 0), so the exact inequality holds...
        assert!(shg_uniform_leq(&t, &a, &b).unwrap().holds);
        // ...but the hull cannot reach the zero vector, so the ME necessary
        // condition refutes the uniform inequality.
        let v = me_uniform_leq_necessary(&t, &a, &b).unwrap();
        assert!(!v.holds);
    }

    #[test]
    fn me_equiprobable_multiset_semantics() {
        // same multiset, different winner profiles
        let t = two_inputs(&[("w", [0, 1]), ("z", [1, 0])], &[("w", [2, 2]), ("z", [3, 1])]);
        let v = me_equiprobable(&t, &MappingId::new("x", "w"), &MappingId::new("y", "w")).unwrap();
        assert!(v.equal);

        // duplicated loser on one side breaks the identity
        let t2 = two_inputs(
            &[("w", [0, 0]), ("z", [1, 1])],
            &[("w", [0, 0]), ("z1", [1, 1]), ("z2", [1, 1])],
        );
        let v = me_equiprobable(&t2, &MappingId::new("x", "w"), &MappingId::new("y", "w")).unwrap();
        assert!(!v.equal);
        match &v.evidence {
            EquiprobabilityEvidence::Me { only_right, .. } => assert_eq!(only_right.len(), 1),
            _ => unreachable!(),
        }
    }

    #[test]
    fn shg_equiprobable_rescaling() {
        let t = two_inputs(&[("w", [2, 0]), ("z", [0, 5])], &[("w", [4, 0]), ("z", [0, 10])]);
        // diffs: (-2, 5) vs (-4, 10): same canonical ray.
        let v = shg_equiprobable(&t, &MappingId::new("x", "w"), &MappingId::new("y", "w")).unwrap();
        assert!(v.equal);
        // but not ME-equiprobable (different multisets)
        assert!(!me_equiprobable(&t, &MappingId::new("x", "w"), &MappingId::new("y", "w")).unwrap().equal);
    }

    #[test]
    fn shg_equiprobable_bounded_losers_both_sides() {
        let t = two_inputs(&[("w", [0, 0]), ("z", [1, 0])], &[("w", [0, 0]), ("z", [0, 2])]);
        let v = shg_equiprobable(&t, &MappingId::new("x", "w"), &MappingId::new("y", "w")).unwrap();
        assert!(v.equal, "empty nonredundant sets on both sides are equal");
    }

    #[test]
    fn hg_equivalent_is_same_procedure() {
        let t = two_inputs(&[("w", [2, 0]), ("z", [0, 5])], &[("w", [4, 0]), ("z", [0, 10])]);
        let a = MappingId::new("x", "w");
        let b = MappingId::new("y", "w");
        let s = shg_equiprobable(&t, &a, &b).unwrap();
        let h = hg_equivalent(&t, &a, &b).unwrap();
        assert_eq!(s.equal, h.equal);
        assert_eq!(h.framework, Framework::Hg);
    }

    #[test]
    fn torder_identical_mappings_single_block() {
        let t = two_inputs(&[("w", [0, 1]), ("z", [1, 0])], &[("w", [0, 1]), ("z", [1, 0])]);
        let g = torder(
            &t,
            Framework::Shg,
            &[MappingId::new("x", "w"), MappingId::new("y", "w")],
        )
        .unwrap();
        assert_eq!(g.blocks.len(), 1);
        assert!(g.edges_closed.is_empty());
    }
}
