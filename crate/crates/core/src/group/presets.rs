//! Presentations quoted verbatim from the literature on these manifolds.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::group::presentation::Presentation;
use crate::group::word::Word;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PresetId {
    /// Face-boundary presentation announced for `M25(n)`; valid only for odd `n`.
    G25,
    /// Corrected presentation for `M25(n)`, `n` even, with one tree edge killed.
    H25,
    /// Face-boundary presentation of `M24(n)`.
    Dual24,
    /// Seifert fibred space `(S^2; (3,1), (3,2), (3,2), (1,-1))`; `n` is ignored.
    SeifertM24_2,
}

impl FromStr for PresetId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "G25" => Ok(PresetId::G25),
            "H25" => Ok(PresetId::H25),
            "DUAL24" => Ok(PresetId::Dual24),
            "SEIFERT_M24_2" => Ok(PresetId::SeifertM24_2),
            _ => Err(Error::Domain(format!("unknown preset `{s}`"))),
        }
    }
}

impl fmt::Display for PresetId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PresetId::G25 => "G25",
            PresetId::H25 => "H25",
            PresetId::Dual24 => "DUAL24",
            PresetId::SeifertM24_2 => "SEIFERT_M24_2",
        })
    }
}

pub fn preset_presentation(id: PresetId, n: usize) -> Result<Presentation> {
    if n == 0 {
        return Err(Error::Domain("n must be at least 1".into()));
    }
    if id == PresetId::H25 && n % 2 == 1 {
        return Err(Error::Domain(format!("H25 needs even n, got {n}")));
    }
    let idx = |i: i64| (i - 1).rem_euclid(n as i64) + 1;
    let g = |s: &str, i: i64| format!("{s}{}", idx(i));
    let word = |parts: &[(String, i64)]| Word::from_powers(parts);
    let xyzu = || {
        let mut gens: Vec<String> = Vec::new();
        for s in ["x", "y", "z"] {
            gens.extend((1..=n as i64).map(|i| g(s, i)));
        }
        gens.push("u".into());
        gens
    };
    let product = || word(&(1..=n as i64).map(|i| (g("x", i), 1)).collect::<Vec<_>>());
    let u = || "u".to_string();

    match id {
        PresetId::G25 => {
            let mut rels = vec![product()];
            for i in 1..=n as i64 {
                rels.push(word(&[(g("x", i), 1), (g("y", i), 1), (u(), -1)]));
                rels.push(word(&[(g("y", i), 1), (g("z", i), 1), (g("x", i - 1), -1)]));
                rels.push(word(&[(g("z", i - 1), 1), (g("z", i), 1), (g("y", i - 1), -1)]));
            }
            Presentation::new(xyzu(), rels)
        }
        PresetId::H25 => {
            let mut rels = vec![product()];
            for i in 1..=n as i64 {
                rels.push(word(&[(g("y", i), 1), (g("z", i), 1), (g("x", i - 1), -1)]));
                rels.push(word(&[(g("z", i - 1), 1), (g("z", i), 1), (g("y", i - 1), -1)]));
            }
            for j in 1..=(n / 2) as i64 {
                rels.push(word(&[(g("x", 2 * j - 1), 1), (g("y", 2 * j - 1), 1), (u(), -1)]));
                rels.push(word(&[(g("x", 2 * j), 1), (g("y", 2 * j), 1)]));
            }
            Presentation::new(xyzu(), rels)
        }
        PresetId::Dual24 => {
            let mut rels = vec![product()];
            for i in 1..=n as i64 {
                rels.push(word(&[(g("x", i), 1), (u(), 1), (g("y", i), -1)]));
                rels.push(word(&[(g("x", i), 1), (g("y", i + 2), 1), (g("z", i + 2), -1)]));
                rels.push(word(&[(g("z", i), 2), (g("y", i - 1), 1)]));
            }
            Presentation::new(xyzu(), rels)
        }
        PresetId::SeifertM24_2 => {
            let s = |x: &str, e: i64| (x.to_string(), e);
            let comm = |a: &str| word(&[s(a, 1), s("h", 1), s(a, -1), s("h", -1)]);
            Presentation::new(
                ["x", "y", "z", "h"].iter().map(|x| x.to_string()).collect(),
                vec![
                    word(&[s("x", 1), s("y", 1), s("z", 1)]),
                    comm("x"),
                    comm("y"),
                    comm("z"),
                    word(&[s("x", 3), s("h", 1)]),
                    word(&[s("y", 3), s("h", 2)]),
                    word(&[s("z", 3), s("h", -1)]),
                ],
            )
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn g25_size() {
        let p = preset_presentation(PresetId::G25, 3).unwrap();
        assert_eq!((p.generators.len(), p.relators.len()), (10, 10));
    }

    #[test]
    fn h25_needs_even() {
        assert!(matches!(preset_presentation(PresetId::H25, 3), Err(Error::Domain(_))));
        let p = preset_presentation(PresetId::H25, 4).unwrap();
        assert!(p.has_relator(&Word::from_powers(&[("x2", 1), ("y2", 1)])));
        assert!(p.has_relator(&Word::from_powers(&[("x4", 1), ("y4", 1)])));
    }

    #[test]
    fn seifert_relators() {
        let p = preset_presentation(PresetId::SeifertM24_2, 1).unwrap();
        assert_eq!(p.generators, vec!["x", "y", "z", "h"]);
        assert!(p.has_relator(&Word::from_powers(&[("x", 3), ("h", 1)])));
        assert!(p.has_relator(&Word::from_powers(&[("z", 3), ("h", -1)])));
    }
}
