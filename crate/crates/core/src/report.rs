//! Machine-readable report structures shared by the CLI and the library.
//!
//! Reports are emitted as JSON with deterministic field and map ordering, so
//! a fixed configuration plus fixed seeds reproduces a byte-identical file.
//! Exact certificate coefficients are serialized as numerator/denominator
//! string pairs.

use serde::Serialize;

use crate::geometry::{FarkasCertificate, MembershipCertificate, Rational};
use crate::tableau::MappingId;
use crate::typology::{
    EquiprobabilityEvidence, EquiprobabilityVerdict, TOrderGraph, UniformInequalityVerdict,
};

/// Exact rational as decimal strings.
#[derive(Debug, Clone, Serialize)]
pub struct RationalRepr {
    pub num: String,
    pub den: String,
}

impl From<&Rational> for RationalRepr {
    fn from(r: &Rational) -> Self {
        RationalRepr { num: r.numer().to_string(), den: r.denom().to_string() }
    }
}

fn rationals(rs: &[Rational]) -> Vec<RationalRepr> {
    rs.iter().map(RationalRepr::from).collect()
}

#[derive(Debug, Clone, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum CertificateRepr {
    Member { lambdas: Vec<RationalRepr>, slack: Vec<RationalRepr> },
    NonMember { separator: Vec<RationalRepr> },
}

impl From<&MembershipCertificate> for CertificateRepr {
    fn from(c: &MembershipCertificate) -> Self {
        match c {
            MembershipCertificate::Member { lambdas, slack } => CertificateRepr::Member {
                lambdas: rationals(lambdas),
                slack: rationals(slack),
            },
            MembershipCertificate::NonMember { separator } => CertificateRepr::NonMember {
                separator: rationals(separator),
            },
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct FarkasRepr {
    pub eq_multipliers: Vec<RationalRepr>,
    pub ge_multipliers: Vec<RationalRepr>,
}

impl From<&FarkasCertificate> for FarkasRepr {
    fn from(c: &FarkasCertificate) -> Self {
        FarkasRepr {
            eq_multipliers: rationals(&c.eq_multipliers),
            ge_multipliers: rationals(&c.ge_multipliers),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct UniformInequalityRepr {
    pub framework: String,
    pub left: MappingId,
    pub right: MappingId,
    pub holds: bool,
    pub vacuous: bool,
    pub per_loser: Vec<(String, CertificateRepr)>,
}

impl From<&UniformInequalityVerdict> for UniformInequalityRepr {
    fn from(v: &UniformInequalityVerdict) -> Self {
        UniformInequalityRepr {
            framework: v.framework.to_string(),
            left: v.left.clone(),
            right: v.right.clone(),
            holds: v.holds,
            vacuous: v.vacuous,
            per_loser: v.per_loser.iter().map(|(sr, c)| (sr.clone(), c.into())).collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
#[serde(tag = "framework", rename_all = "kebab-case")]
pub enum EvidenceRepr {
    Me {
        left: Vec<Vec<i64>>,
        right: Vec<Vec<i64>>,
        only_left: Vec<Vec<i64>>,
        only_right: Vec<Vec<i64>>,
    },
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

#[derive(Debug, Clone, Serialize)]
pub struct EquiprobabilityRepr {
    pub framework: String,
    pub left: MappingId,
    pub right: MappingId,
    pub equal: bool,
    pub evidence: EvidenceRepr,
}

impl From<&EquiprobabilityVerdict> for EquiprobabilityRepr {
    fn from(v: &EquiprobabilityVerdict) -> Self {
        let evidence = match &v.evidence {
            EquiprobabilityEvidence::Me { left, right, only_left, only_right } => EvidenceRepr::Me {
                left: left.iter().map(|d| d.0.clone()).collect(),
                right: right.iter().map(|d| d.0.clone()).collect(),
                only_left: only_left.iter().map(|d| d.0.clone()).collect(),
                only_right: only_right.iter().map(|d| d.0.clone()).collect(),
            },
            EquiprobabilityEvidence::Shg {
                left_nonredundant,
                right_nonredundant,
                left_rays,
                right_rays,
                matched,
                left_impossible,
                right_impossible,
            } => EvidenceRepr::Shg {
                left_nonredundant: left_nonredundant.clone(),
                right_nonredundant: right_nonredundant.clone(),
                left_rays: left_rays.clone(),
                right_rays: right_rays.clone(),
                matched: matched.clone(),
                left_impossible: *left_impossible,
                right_impossible: *right_impossible,
            },
        };
        EquiprobabilityRepr {
            framework: v.framework.to_string(),
            left: v.left.clone(),
            right: v.right.clone(),
            equal: v.equal,
            evidence,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct TOrderRepr {
    pub framework: String,
    pub edge_status: String,
    pub blocks: Vec<Vec<String>>,
    pub edges_reduced: Vec<(usize, usize)>,
    pub edges_closed: Vec<(usize, usize)>,
}

impl From<&TOrderGraph> for TOrderRepr {
    fn from(g: &TOrderGraph) -> Self {
        TOrderRepr {
            framework: g.framework.to_string(),
            edge_status: format!("{:?}", g.edge_status),
            blocks: g
                .blocks
                .iter()
                .map(|b| b.iter().map(|m| m.to_string()).collect())
                .collect(),
            edges_reduced: g.edges_reduced.clone(),
            edges_closed: g.edges_closed.clone(),
        }
    }
}
