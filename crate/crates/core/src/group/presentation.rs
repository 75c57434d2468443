use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::group::matrix::IntegerMatrix;
use crate::group::word::Word;

/// A finite presentation: ordered generator names and relator words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    pub generators: Vec<String>,
    pub relators: Vec<Word>,
}

impl Presentation {
    /// Checks that generator names are unique and every relator letter names
    /// a listed generator.
    pub fn new(generators: Vec<String>, relators: Vec<Word>) -> Result<Self> {
        let p = Presentation { generators, relators };
        p.check()?;
        Ok(p)
    }

    pub fn check(&self) -> Result<()> {
        let mut seen = HashSet::new();
        for g in &self.generators {
            if !seen.insert(g.as_str()) {
                return Err(Error::Domain(format!("duplicate generator `{g}`")));
            }
        }
        for r in &self.relators {
            for l in &r.letters {
                if !seen.contains(l.gen.as_str()) {
                    return Err(Error::Name(l.gen.clone()));
                }
            }
        }
        Ok(())
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g == name)
    }

    /// Exponent-sum matrix: one row per relator, one column per generator.
    pub fn abelianization_matrix(&self) -> IntegerMatrix {
        let mut m = IntegerMatrix::zeros(self.relators.len(), self.generators.len());
        for (i, r) in self.relators.iter().enumerate() {
            for l in &r.letters {
                if let Some(j) = self.generator_index(&l.gen) {
                    m.add_to(i, j, l.exponent());
                }
            }
        }
        m
    }

    /// Relators in cyclic normal form, deduplicated and sorted, with trivial
    /// relators removed. Two presentations with equal `relator_set`s have the
    /// same relators up to rotation, inversion and repetition.
    pub fn relator_set(&self) -> Vec<Word> {
        let mut v: Vec<Word> = self.relators.iter().map(Word::cyclic_normal_form).filter(|w| !w.is_empty()).collect();
        v.sort_by(|a, b| a.letters.cmp(&b.letters));
        v.dedup();
        v
    }

    /// True if some relator is cyclically equal to `w`.
    pub fn has_relator(&self, w: &Word) -> bool {
        let target = w.cyclic_normal_form();
        self.relators.iter().any(|r| r.cyclic_normal_form() == target)
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "< {} | ", self.generators.join(", "))?;
        let rels: Vec<String> = self.relators.iter().map(|r| r.to_string()).collect();
        write!(f, "{} >", rels.join(", "))
    }
}
