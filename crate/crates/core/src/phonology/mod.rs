//! Prosodic parsing and the bundled constraint evaluators that derive the
//! fixture tableaux: Finnish foot structure (eight metrical constraints) and
//! Finnish vowel harmony (four segmental constraints).

mod fixtures;
mod harmony;
mod prosody;

pub use fixtures::{derive_finnish, derive_harmony, derive_voicing, FINNISH_CONSTRAINTS};
pub use harmony::{eval_harmony_constraints, IntervenerReading, SegmentalForm, HARMONY_CONSTRAINTS};
pub use prosody::{
    eval_finnish_constraints, parse_prosodic_candidate, FinnishDefs, FlatReading, FootPosition,
    HeavySource, HxReading, PkPromReading, ProsodicParse, Sonority, Stress, Syllable, Weight,
};

use crate::tableau::{CandidateEntry, ConstraintSet, InputEntry, Tableau};
use crate::Result;

/// Which bundled constraint set a tableau is built against.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConstraintChoice {
    Finnish(FinnishDefs),
    Harmony(IntervenerReading),
}

/// Builds a tableau by scoring candidate notations with the matching
/// evaluator. For the Finnish choice each candidate is a prosodic parse; for
/// the harmony choice each entry's UR is a segmental form and the candidates
/// are surface forms aligned with it.
pub fn build_tableau(choice: ConstraintChoice, entries: &[(String, Vec<String>)]) -> Result<Tableau> {
    let (names, score): (Vec<&str>, Box<dyn Fn(&str, &str) -> Result<Vec<u32>>>) = match choice {
        ConstraintChoice::Finnish(defs) => (
            FINNISH_CONSTRAINTS.to_vec(),
            Box::new(move |_ur: &str, notation: &str| {
                let parse = parse_prosodic_candidate(notation)?;
                Ok(eval_finnish_constraints(&parse, &defs).to_vec())
            }),
        ),
        ConstraintChoice::Harmony(reading) => (
            HARMONY_CONSTRAINTS.to_vec(),
            Box::new(move |ur: &str, surface: &str| {
                let under = SegmentalForm::parse_underlying(ur)?;
                let cand = SegmentalForm::parse_surface(surface, &under)?;
                Ok(eval_harmony_constraints(&under, &cand, reading).to_vec())
            }),
        ),
    };
    let constraints = ConstraintSet::new(names.iter().map(|s| s.to_string()).collect())?;
    let inputs = entries
        .iter()
        .map(|(ur, candidates)| {
            let candidates = candidates
                .iter()
                .map(|sr| {
                    Ok(CandidateEntry {
                        sr: sr.clone(),
                        violations: score(ur, sr)?,
                        frequency: None,
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(InputEntry { ur: ur.clone(), candidates })
        })
        .collect::<Result<Vec<_>>>()?;
    Tableau::new(constraints, inputs)
}
