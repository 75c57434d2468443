use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::group::matrix::smith_normal_form;
use crate::group::presentation::Presentation;

/// A finitely generated abelian group `Z^rank + Z_{d1} + ... + Z_{dk}` with
/// `d_i >= 2` and `d_i | d_{i+1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AbelianGroup {
    pub rank: usize,
    pub invariant_factors: Vec<BigInt>,
}

impl AbelianGroup {
    pub fn trivial() -> Self {
        AbelianGroup { rank: 0, invariant_factors: Vec::new() }
    }

    /// Finite part only, from a divisibility chain (1s are dropped).
    pub fn torsion<T: Into<BigInt> + Copy>(factors: &[T]) -> Self {
        AbelianGroup {
            rank: 0,
            invariant_factors: factors.iter().map(|&f| f.into()).filter(|f: &BigInt| !f.is_one()).collect(),
        }
    }

    pub fn is_finite(&self) -> bool {
        self.rank == 0
    }

    /// Order of the group, `None` when infinite.
    pub fn order(&self) -> Option<BigInt> {
        self.is_finite().then(|| self.invariant_factors.iter().product())
    }

    pub fn is_valid_chain(&self) -> bool {
        self.invariant_factors.iter().all(|d| *d >= BigInt::from(2))
            && self.invariant_factors.windows(2).all(|w| (&w[1] % &w[0]).is_zero())
    }
}

/// Factors ascending joined by " + ", trailing `Z^r` for a free part,
/// `0` for the trivial group.
impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self.invariant_factors.iter().map(|d| format!("Z{d}")).collect();
        match self.rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// Abelianization of the presented group.
pub fn h1(p: &Presentation) -> AbelianGroup {
    let m = p.abelianization_matrix();
    let snf = smith_normal_form(&m);
    let diag = snf.diagonal();
    let nonzero: Vec<BigInt> = diag.into_iter().filter(|d| !d.is_zero()).collect();
    AbelianGroup {
        rank: p.generators.len() - nonzero.len(),
        invariant_factors: nonzero.into_iter().filter(|d| !d.is_one()).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::word::Word;

    #[test]
    fn cyclic_presentation() {
        let p = Presentation::new(vec!["c".into()], vec![Word::from_powers(&[("c", 3)])]).unwrap();
        assert_eq!(h1(&p), AbelianGroup::torsion(&[3]));
        assert_eq!(h1(&p).to_string(), "Z3");
    }

    #[test]
    fn free_part_and_trivial() {
        let p = Presentation::new(vec!["a".into(), "b".into()], vec![]).unwrap();
        assert_eq!(h1(&p).to_string(), "Z^2");
        let p = Presentation::new(vec!["a".into()], vec![Word::gen("a")]).unwrap();
        assert_eq!(h1(&p).to_string(), "0");
        let p =
            Presentation::new(vec!["a".into(), "b".into()], vec![Word::from_powers(&[("a", 2), ("b", 4)])]).unwrap();
        assert_eq!(h1(&p).to_string(), "Z2 + Z");
    }
}
