//! Words in a free group over named generators.

use std::cmp::Ordering;
use std::fmt;

/// A generator or its inverse.
///
/// Letters order by generator name first, and a positive letter sorts before
/// the inverse of the same generator.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub gen: String,
    pub inv: bool,
}

impl Letter {
    pub fn new(gen: impl Into<String>, inv: bool) -> Self {
        Letter { gen: gen.into(), inv }
    }

    pub fn pos(gen: impl Into<String>) -> Self {
        Letter::new(gen, false)
    }

    pub fn neg(gen: impl Into<String>) -> Self {
        Letter::new(gen, true)
    }

    pub fn inverse(&self) -> Letter {
        Letter { gen: self.gen.clone(), inv: !self.inv }
    }

    pub fn exponent(&self) -> i64 {
        if self.inv {
            -1
        } else {
            1
        }
    }

    fn cancels(&self, other: &Letter) -> bool {
        self.gen == other.gen && self.inv != other.inv
    }
}

/// A flat signed sequence of letters. No run-length compression is stored;
/// `Display` compresses runs as `c1^2`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Word {
    pub letters: Vec<Letter>,
}

impl Word {
    pub fn empty() -> Self {
        Word { letters: Vec::new() }
    }

    pub fn new(letters: Vec<Letter>) -> Self {
        Word { letters }
    }

    pub fn gen(name: impl Into<String>) -> Self {
        Word { letters: vec![Letter::pos(name)] }
    }

    /// Builds a word from `(name, exponent)` pairs; exponents of any size
    /// are expanded into repeated letters.
    pub fn from_powers<S: AsRef<str>>(powers: &[(S, i64)]) -> Self {
        let mut letters = Vec::new();
        for (name, e) in powers {
            for _ in 0..e.unsigned_abs() {
                letters.push(Letter::new(name.as_ref(), *e < 0));
            }
        }
        Word { letters }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> Word {
        Word { letters: self.letters.iter().rev().map(Letter::inverse).collect() }
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.letters.clone();
        letters.extend(other.letters.iter().cloned());
        Word { letters }
    }

    pub fn pow(&self, k: i64) -> Word {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut letters = Vec::with_capacity(base.len() * k.unsigned_abs() as usize);
        for _ in 0..k.unsigned_abs() {
            letters.extend(base.letters.iter().cloned());
        }
        Word { letters }
    }

    pub fn free_reduce(&self) -> Word {
        let mut out: Vec<Letter> = Vec::with_capacity(self.letters.len());
        for l in &self.letters {
            if out.last().is_some_and(|top| top.cancels(l)) {
                out.pop();
            } else {
                out.push(l.clone());
            }
        }
        Word { letters: out }
    }

    pub fn is_freely_reduced(&self) -> bool {
        self.letters.windows(2).all(|w| !w[0].cancels(&w[1]))
    }

    /// Freely reduces, then strips inverse pairs from the two ends.
    pub fn cyclic_reduce(&self) -> Word {
        let w = self.free_reduce();
        let l = &w.letters;
        let (mut lo, mut hi) = (0, l.len());
        while hi - lo >= 2 && l[lo].cancels(&l[hi - 1]) {
            lo += 1;
            hi -= 1;
        }
        Word { letters: l[lo..hi].to_vec() }
    }

    pub fn is_cyclically_reduced(&self) -> bool {
        self.is_freely_reduced()
            && match (self.letters.first(), self.letters.last()) {
                (Some(a), Some(b)) if self.letters.len() > 1 => !a.cancels(b),
                _ => true,
            }
    }

    pub fn rotate(&self, k: usize) -> Word {
        if self.is_empty() {
            return Word::empty();
        }
        let k = k % self.len();
        let mut letters = self.letters[k..].to_vec();
        letters.extend_from_slice(&self.letters[..k]);
        Word { letters }
    }

    /// Canonical representative of the conjugacy class of `self` and of its
    /// inverse: the lexicographically least rotation of the cyclically
    /// reduced word or its inverse.
    pub fn cyclic_normal_form(&self) -> Word {
        let w = self.cyclic_reduce();
        if w.is_empty() {
            return w;
        }
        let inv = w.inverse();
        let mut best = w.clone();
        for base in [&w, &inv] {
            for k in 0..base.len() {
                let r = base.rotate(k);
                if lex_cmp(&r, &best) == Ordering::Less {
                    best = r;
                }
            }
        }
        best
    }

    /// Net exponent of `gen` in the word.
    pub fn exponent_sum(&self, gen: &str) -> i64 {
        self.letters.iter().filter(|l| l.gen == gen).map(Letter::exponent).sum()
    }

    pub fn occurrences(&self, gen: &str) -> usize {
        self.letters.iter().filter(|l| l.gen == gen).count()
    }

    pub fn contains(&self, gen: &str) -> bool {
        self.letters.iter().any(|l| l.gen == gen)
    }

    /// Replaces every occurrence of `gen` by `image` (and `gen^-1` by its
    /// inverse). The result is not reduced.
    pub fn substitute(&self, gen: &str, image: &Word) -> Word {
        let inv_image = image.inverse();
        let mut letters = Vec::with_capacity(self.len());
        for l in &self.letters {
            if l.gen == gen {
                let src = if l.inv { &inv_image } else { image };
                letters.extend(src.letters.iter().cloned());
            } else {
                letters.push(l.clone());
            }
        }
        Word { letters }
    }

    /// Equality up to rotation and inversion.
    pub fn cyclically_equal(&self, other: &Word) -> bool {
        self.cyclic_normal_form() == other.cyclic_normal_form()
    }

    /// Space separated tokens, inverses prefixed with `-` (`a1 b3 -d`).
    pub fn to_tokens(&self) -> String {
        self.letters
            .iter()
            .map(|l| if l.inv { format!("-{}", l.gen) } else { l.gen.clone() })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

fn lex_cmp(a: &Word, b: &Word) -> Ordering {
    a.letters.cmp(&b.letters)
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "1");
        }
        let mut parts = Vec::new();
        let mut i = 0;
        while i < self.letters.len() {
            let l = &self.letters[i];
            let mut j = i + 1;
            while j < self.letters.len() && self.letters[j] == *l {
                j += 1;
            }
            let run = (j - i) as i64 * l.exponent();
            if run == 1 {
                parts.push(l.gen.clone());
            } else {
                parts.push(format!("{}^{}", l.gen, run));
            }
            i = j;
        }
        write!(f, "{}", parts.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(spec: &[(&str, i64)]) -> Word {
        Word::from_powers(spec)
    }

    #[test]
    fn free_reduce_cancels_inverse_pairs() {
        assert!(w(&[("a", 1), ("a", -1)]).free_reduce().is_empty());
        assert_eq!(w(&[("a", 1), ("b", 1), ("b", -1), ("a", 1)]).free_reduce(), w(&[("a", 2)]));
        assert_eq!(w(&[("c1", 2), ("c2", 1), ("c2", -1), ("c1", 1)]).free_reduce(), w(&[("c1", 3)]));
    }

    #[test]
    fn cyclic_normal_form_examples() {
        // all six rotations of c2^3 c1^3 and of its inverse, minimum taken by hand
        let input = w(&[("c2", 3), ("c1", 1), ("c1", 2)]);
        assert_eq!(input.cyclic_normal_form(), w(&[("c1", 3), ("c2", 3)]));
        assert!(Word::empty().cyclic_normal_form().is_empty());
        assert_eq!(w(&[("a", -1)]).cyclic_normal_form(), w(&[("a", 1)]));
    }

    #[test]
    fn cyclic_reduce_strips_conjugation() {
        let x = w(&[("a", 1), ("b", 2), ("c", 1), ("a", -1)]);
        assert_eq!(x.cyclic_reduce(), w(&[("b", 2), ("c", 1)]));
        assert!(x.cyclic_reduce().is_cyclically_reduced());
    }

    #[test]
    fn substitute_and_exponent_sum() {
        let r = w(&[("a", 1), ("b", -1), ("a", 1)]);
        let img = w(&[("c", 2)]);
        let s = r.substitute("b", &img).free_reduce();
        assert_eq!(s, w(&[("a", 1), ("c", -2), ("a", 1)]));
        assert_eq!(s.exponent_sum("c"), -2);
        assert_eq!(s.exponent_sum("a"), 2);
    }

    #[test]
    fn display_compresses_runs() {
        let x = w(&[("c1", 2), ("c2", 1), ("c3", -2)]);
        assert_eq!(x.to_string(), "c1^2 c2 c3^-2");
        assert_eq!(x.to_tokens(), "c1 c1 c2 -c3 -c3");
        assert_eq!(Word::empty().to_string(), "1");
    }
}
