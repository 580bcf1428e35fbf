//! Derivation of the bundled fixture tableaux.
//!
//! The Finnish stress fixture covers thirteen partitive-plural stem types.
//! Each stem is one input; its candidates are the footings of the suffixed
//! word generated by a small GEN (contiguous feet from the word start, foot
//! sizes 2-3 non-decreasing left to right, at most one trailing unfooted
//! syllable). The suffix stop is realized iff the final syllable is footed:
//! fully footed parses surface with the retention string (`...Vi.ta`),
//! parses with an unfooted final syllable with the deletion string (`...ja`).
//! Corpus percentages ride along as display metadata; the analyzed mappings
//! (the displayed deletion and retention parses) are recorded under the
//! `analysis.mappings` metadata key.

use serde_json::json;

use super::prosody::{eval_finnish_constraints, parse_prosodic_candidate, FinnishDefs};
use super::{build_tableau, ConstraintChoice, IntervenerReading};
use crate::tableau::{CandidateEntry, ConstraintSet, InputEntry, MappingId, Tableau};
use crate::Result;

pub const FINNISH_CONSTRAINTS: [&str; 8] =
    ["FtBin", "PkProm", "Align-L", "*Rev", "*Flat", "*H.X", "WSP", "WSP/VV"];

/// stem letter, example word, deletion-string syllables, retention-string
/// syllables, deletion corpus %, retention corpus % (None for stems whose
/// retention parse is not displayed).
const STEMS: [(&str, &str, &str, &str, f64, Option<f64>); 13] = [
    ("a", "akvarellisti", "ak.va.rel.lis.te.ja", "ak.va.rel.lis.tei.ta", 100.0, Some(0.0)),
    ("b", "propagandisti", "pro.pa.gan.dis.te.ja", "pro.pa.gan.dis.tei.ta", 100.0, Some(0.0)),
    ("c", "symposiumi", "sym.po.si.u.me.ja", "sym.po.si.u.mei.ta", 98.6, Some(1.4)),
    ("d", "liirumlaarumi", "lii.rum.laa.ru.me.ja", "lii.rum.laa.ru.mei.ta", 18.6, Some(81.4)),
    ("e", "polyamidi", "po.ly.a.mi.de.ja", "po.ly.a.mi.dei.ta", 95.7, Some(4.3)),
    ("f", "inkunaabeli", "in.ku.naa.be.le.ja", "in.ku.naa.be.lei.ta", 9.5, Some(90.5)),
    ("g", "operaatio", "o.pe.raa.ti.o.ja", "o.pe.raa.ti.oi.ta", 0.0, Some(100.0)),
    ("h", "allegoria", "al.le.go.ri.o.ja", "al.le.go.ri.oi.ta", 0.0, Some(100.0)),
    ("i", "kommunikea", "kom.mu.ni.ke.o.ja", "kom.mu.ni.ke.oi.ta", 0.3, Some(99.7)),
    ("j", "konsultaatio", "kon.sul.taa.ti.o.ja", "kon.sul.taa.ti.oi.ta", 0.5, Some(99.5)),
    ("k", "termostaatti", "ter.mos.taat.te.ja", "ter.mos.taat.tei.ta", 100.0, None),
    ("l", "margariini", "mar.ga.rii.ne.ja", "mar.ga.rii.nei.ta", 100.0, None),
    ("m", "affrikaatta", "af.fri.kaat.to.ja", "af.fri.kaat.toi.ta", 99.7, None),
];

/// Footings of `n` syllables: contiguous feet from the start, sizes 2-3
/// non-decreasing, at most one trailing unfooted syllable.
fn gen_footings(n: usize) -> Vec<Vec<(usize, usize)>> {
    let mut out = Vec::new();
    fn rec(n: usize, pos: usize, last: usize, feet: &mut Vec<(usize, usize)>, out: &mut Vec<Vec<(usize, usize)>>) {
        if n - pos <= 1 {
            out.push(feet.clone());
            if n == pos {
                return;
            }
        }
        for sz in [2usize, 3] {
            if sz >= last && pos + sz <= n {
                feet.push((pos, sz));
                rec(n, pos + sz, sz, feet, out);
                feet.pop();
            }
        }
    }
    rec(n, 0, 0, &mut Vec::new(), &mut out);
    out.sort();
    out.dedup();
    out
}

fn render(syllables: &[&str], feet: &[(usize, usize)]) -> String {
    let mut out = String::new();
    let mut i = 0;
    while i < syllables.len() {
        if let Some(&(start, len)) = feet.iter().find(|&&(s, _)| s == i) {
            out.push('(');
            out.push_str(&syllables[start..start + len].join("."));
            out.push(')');
            i = start + len;
        } else {
            if !out.is_empty() && !out.ends_with(')') {
                out.push('.');
            }
            out.push_str(syllables[i]);
            i += 1;
        }
    }
    out
}

/// The displayed deletion parse: initial binary foot, then a foot over the
/// remaining stem syllables, final syllable unfooted.
fn displayed_del(n: usize) -> Vec<(usize, usize)> {
    if n == 6 {
        vec![(0, 2), (2, 3)]
    } else {
        vec![(0, 2), (2, 2)]
    }
}

/// The displayed retention parse (six-syllable stems): exhaustive binary feet.
fn displayed_ret() -> Vec<(usize, usize)> {
    vec![(0, 2), (2, 2), (4, 2)]
}

/// Derives the frozen Finnish stress fixture with the gate-selected
/// constraint definitions.
pub fn derive_finnish() -> Result<Tableau> {
    derive_finnish_with(&FinnishDefs::default())
}

/// Derives the Finnish fixture under explicit definition switches (the
/// bundled file uses [`FinnishDefs::default`]).
pub fn derive_finnish_with(defs: &FinnishDefs) -> Result<Tableau> {
    let constraints = ConstraintSet::new(FINNISH_CONSTRAINTS.iter().map(|s| s.to_string()).collect())?;
    let mut inputs = Vec::new();
    let mut analysis: Vec<String> = Vec::new();
    let mut metadata = serde_json::Map::new();

    for (stem, word, del_str, ret_str, del_pct, ret_pct) in STEMS {
        let del_sylls: Vec<&str> = del_str.split('.').collect();
        let ret_sylls: Vec<&str> = ret_str.split('.').collect();
        let n = del_sylls.len();
        assert_eq!(n, ret_sylls.len());
        let mut candidates = Vec::new();
        for feet in gen_footings(n) {
            let full = feet.iter().map(|&(_, len)| len).sum::<usize>() == n;
            let notation = if full { render(&ret_sylls, &feet) } else { render(&del_sylls, &feet) };
            let parse = parse_prosodic_candidate(&notation)?;
            let violations = eval_finnish_constraints(&parse, defs).to_vec();
            candidates.push(CandidateEntry { sr: notation, violations, frequency: None });
        }
        let del_notation = render(&del_sylls, &displayed_del(n));
        analysis.push(format!("{stem}:{del_notation}"));
        metadata.insert(format!("percent.{stem}.{del_notation}"), json!(del_pct));
        if let Some(pct) = ret_pct {
            let ret_notation = render(&ret_sylls, &displayed_ret());
            analysis.push(format!("{stem}:{ret_notation}"));
            metadata.insert(format!("percent.{stem}.{ret_notation}"), json!(pct));
        }
        metadata.insert(format!("stem.{stem}"), json!(word));
        inputs.push(InputEntry { ur: stem.to_string(), candidates });
    }

    let mut t = Tableau::new(constraints, inputs)?;
    t.metadata.insert("analysis.mappings".into(), json!(analysis));
    t.metadata.insert(
        "note".into(),
        json!("corpus percentages are display annotations only; they play no role in any verdict"),
    );
    t.metadata.extend(metadata);
    Ok(t)
}

/// Derives the vowel-harmony fixture: the essive of a monosyllabic and a
/// disyllabic all-back root, with harmonized and disharmonic suffix variants.
pub fn derive_harmony() -> Result<Tableau> {
    let entries = vec![
        ("/maa-nä/".to_string(), vec!["[maana]".to_string(), "[maanä]".to_string()]),
        ("/kaava-nä/".to_string(), vec!["[kaavana]".to_string(), "[kaavanä]".to_string()]),
    ];
    let mut t = build_tableau(ConstraintChoice::Harmony(IntervenerReading::RightmostTrigger), &entries)?;
    t.metadata.insert(
        "analysis.mappings".into(),
        json!(["/maa-nä/:[maana]", "/kaava-nä/:[kaavana]"]),
    );
    Ok(t)
}

/// The two-constraint final/initial devoicing example: /mab/ -> [map] and
/// /bam/ -> [pam] share violation profiles with their losers.
pub fn derive_voicing() -> Result<Tableau> {
    let constraints = ConstraintSet::new(vec!["NoVoicedObstruent".into(), "Ident(voice)".into()])?;
    let mk = |ur: &str, winner: &str, loser: &str| InputEntry {
        ur: ur.to_string(),
        candidates: vec![
            CandidateEntry { sr: winner.to_string(), violations: vec![0, 1], frequency: None },
            CandidateEntry { sr: loser.to_string(), violations: vec![1, 0], frequency: None },
        ],
    };
    Tableau::new(constraints, vec![mk("/mab/", "[map]", "[mab]"), mk("/bam/", "[pam]", "[bam]")])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gen_footings_shapes() {
        let six = gen_footings(6);
        assert_eq!(
            six,
            vec![
                vec![(0, 2), (2, 2), (4, 2)],
                vec![(0, 2), (2, 3)],
                vec![(0, 3), (3, 3)],
            ]
        );
        let five = gen_footings(5);
        assert_eq!(five, vec![vec![(0, 2), (2, 2)], vec![(0, 2), (2, 3)]]);
    }

    #[test]
    fn fixture_has_thirteen_inputs_and_eight_constraints() {
        let t = derive_finnish().unwrap();
        assert_eq!(t.constraints.names(), FINNISH_CONSTRAINTS);
        assert_eq!(t.inputs.len(), 13);
        assert!(t.validate().is_empty());
        // 6-syllable stems have 3 candidates, 5-syllable stems 2.
        for input in &t.inputs {
            let expect = if ["k", "l", "m"].contains(&input.ur.as_str()) { 2 } else { 3 };
            assert_eq!(input.candidates.len(), expect, "stem {}", input.ur);
        }
        assert_eq!(t.analysis_mappings().unwrap().len(), 23);
    }

    #[test]
    fn frozen_violation_profiles() {
        // Hand-checked rows; any change to the constraint definitions that
        // moves these counts must be deliberate.
        let t = derive_finnish().unwrap();
        let get = |ur: &str, sr: &str| {
            t.resolve(&MappingId::new(ur, sr)).unwrap().1.violations.clone()
        };
        assert_eq!(get("c", "(sym.po)(si.u.me)ja"), vec![1, 1, 2, 1, 0, 0, 0, 0]);
        assert_eq!(get("c", "(sym.po)(si.u)(mei.ta)"), vec![0, 1, 6, 2, 0, 0, 0, 0]);
        assert_eq!(get("c", "(sym.po.si)(u.mei.ta)"), vec![2, 1, 3, 2, 0, 1, 1, 1]);
        assert_eq!(get("d", "(lii.rum)(laa.ru.me)ja"), vec![1, 0, 2, 0, 1, 2, 1, 0]);
        assert_eq!(get("j", "(kon.sul)(taa.ti.o)ja"), vec![1, 0, 2, 1, 0, 2, 1, 0]);
        assert_eq!(get("k", "(ter.mos)(taat.te)ja"), vec![0, 0, 2, 1, 0, 2, 1, 0]);
        assert_eq!(get("m", "(af.fri)(kaat.to)ja"), vec![0, 0, 2, 0, 0, 0, 0, 0]);
    }

    #[test]
    fn harmony_fixture_diff_vectors_match() {
        let t = derive_harmony().unwrap();
        let d1 = t.loser_diffs(&MappingId::new("/maa-nä/", "[maana]")).unwrap();
        let d2 = t.loser_diffs(&MappingId::new("/kaava-nä/", "[kaavana]")).unwrap();
        assert_eq!(d1, d2);
        assert_eq!(d1[0].0, vec![1, 0, 0, -1]);
    }

    #[test]
    fn voicing_fixture_shares_profiles() {
        let t = derive_voicing().unwrap();
        let d1 = t.loser_diffs(&MappingId::new("/mab/", "[map]")).unwrap();
        let d2 = t.loser_diffs(&MappingId::new("/bam/", "[pam]")).unwrap();
        assert_eq!(d1, d2);
        assert_eq!(d1[0].0, vec![1, -1]);
    }
}
