//! Small finite groups as multiplication tables, and homomorphism counts
//! from a finite presentation into them.

use crate::error::{Error, Result};
use crate::group::presentation::Presentation;

/// Largest generator count accepted by [`count_homomorphisms`].
pub const MAX_GENERATORS: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    pub name: String,
    table: Vec<Vec<usize>>,
    identity: usize,
    inverse: Vec<usize>,
}

impl FiniteGroup {
    /// Validates closure, associativity, identity and inverses.
    pub fn from_table(name: impl Into<String>, table: Vec<Vec<usize>>) -> Result<Self> {
        let n = table.len();
        let bad = |why: &str| Error::Domain(format!("not a group table: {why}"));
        if n == 0 {
            return Err(bad("empty"));
        }
        if table.iter().any(|row| row.len() != n || row.iter().any(|&x| x >= n)) {
            return Err(bad("not closed"));
        }
        let identity =
            (0..n).find(|&e| (0..n).all(|x| table[e][x] == x && table[x][e] == x)).ok_or_else(|| bad("no identity"))?;
        let mut inverse = vec![0; n];
        for x in 0..n {
            inverse[x] = (0..n)
                .find(|&y| table[x][y] == identity && table[y][x] == identity)
                .ok_or_else(|| bad("missing inverse"))?;
        }
        for a in 0..n {
            for b in 0..n {
                let ab = table[a][b];
                for c in 0..n {
                    if table[ab][c] != table[a][table[b][c]] {
                        return Err(bad("not associative"));
                    }
                }
            }
        }
        Ok(FiniteGroup { name: name.into(), table, identity, inverse })
    }

    fn from_rule(name: String, order: usize, mul: impl Fn(usize, usize) -> usize) -> Self {
        let table = (0..order).map(|a| (0..order).map(|b| mul(a, b)).collect()).collect();
        FiniteGroup::from_table(name, table).expect("constructed group tables are valid")
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..n).all(|b| self.table[a][b] == self.table[b][a]))
    }

    pub fn cyclic(n: usize) -> Self {
        Self::from_rule(format!("Z{n}"), n, |a, b| (a + b) % n)
    }

    pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> Self {
        let m = h.order();
        Self::from_rule(format!("{}x{}", g.name, h.name), g.order() * m, |a, b| {
            g.mul(a / m, b / m) * m + h.mul(a % m, b % m)
        })
    }

    /// Elements `r^i s^j`, `s r s^-1 = r^-1`, `s^2 = 1`; order `2m`.
    pub fn dihedral(m: usize) -> Self {
        Self::from_rule(format!("D{m}"), 2 * m, move |a, b| twisted(m, a, b, 0))
    }

    /// Elements `r^i s^j`, `s r s^-1 = r^-1`, `s^2 = r^m`; order `4m`
    /// (`m = 2` is the quaternion group).
    pub fn dicyclic(m: usize) -> Self {
        let name = if m == 2 { "Q8".to_string() } else { format!("Dic{m}") };
        Self::from_rule(name, 4 * m, move |a, b| twisted(2 * m, a, b, m))
    }

    /// Even permutations of four points.
    pub fn alternating4() -> Self {
        let mut perms: Vec<[usize; 4]> = Vec::new();
        let mut p = [0, 1, 2, 3];
        permute_all(&mut p, 0, &mut perms);
        perms.retain(|q| parity(q) == 0);
        perms.sort();
        let compose = |a: &[usize; 4], b: &[usize; 4]| -> [usize; 4] { [a[b[0]], a[b[1]], a[b[2]], a[b[3]]] };
        let table = perms
            .iter()
            .map(|a| {
                perms
                    .iter()
                    .map(|b| {
                        let c = compose(a, b);
                        perms.iter().position(|q| *q == c).expect("A4 is closed")
                    })
                    .collect()
            })
            .collect();
        FiniteGroup::from_table("A4", table).expect("A4 table is valid")
    }
}

/// Multiplication in `<r, s | r^k, s r s^-1 = r^-1, s^2 = r^t>` on elements
/// encoded as `i + k*j` for `r^i s^j`.
fn twisted(k: usize, a: usize, b: usize, t: usize) -> usize {
    let (i, j) = (a % k, a / k);
    let (p, q) = (b % k, b / k);
    let p_conj = if j == 1 { (k - p) % k } else { p };
    let mut r = (i + p_conj) % k;
    let mut s = j + q;
    if s == 2 {
        s = 0;
        r = (r + t) % k;
    }
    r + k * s
}

fn permute_all(p: &mut [usize; 4], k: usize, out: &mut Vec<[usize; 4]>) {
    if k == p.len() {
        out.push(*p);
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permute_all(p, k + 1, out);
        p.swap(k, i);
    }
}

fn parity(p: &[usize; 4]) -> usize {
    let mut inv = 0;
    for i in 0..4 {
        for j in i + 1..4 {
            if p[i] > p[j] {
                inv += 1;
            }
        }
    }
    inv % 2
}

/// One representative of every isomorphism class of groups of order at
/// most 12 (24 groups in total).
pub fn groups_up_to_order_12() -> Vec<FiniteGroup> {
    let z = FiniteGroup::cyclic;
    let x = FiniteGroup::direct_product;
    let mut v: Vec<FiniteGroup> = (1..=12).map(z).collect();
    v.push(x(&z(2), &z(2)));
    v.push(FiniteGroup::dihedral(3));
    v.push(x(&z(4), &z(2)));
    v.push(x(&x(&z(2), &z(2)), &z(2)));
    v.push(FiniteGroup::dihedral(4));
    v.push(FiniteGroup::dicyclic(2));
    v.push(x(&z(3), &z(3)));
    v.push(FiniteGroup::dihedral(5));
    v.push(x(&z(6), &z(2)));
    v.push(FiniteGroup::alternating4());
    v.push(FiniteGroup::dihedral(6));
    v.push(FiniteGroup::dicyclic(3));
    v.sort_by_key(|g| g.order());
    v
}

/// Number of homomorphisms from the presented group into `target`, by
/// exhaustive search over generator images.
pub fn count_homomorphisms(p: &Presentation, target: &FiniteGroup) -> Result<u64> {
    let k = p.generators.len();
    if k > MAX_GENERATORS {
        return Err(Error::Capacity(format!("{k} generators exceed the search guard of {MAX_GENERATORS}")));
    }
    let rels: Vec<Vec<(usize, bool)>> = p
        .relators
        .iter()
        .map(|r| {
            r.letters
                .iter()
                .map(|l| p.generator_index(&l.gen).map(|i| (i, l.inv)).ok_or_else(|| Error::Name(l.gen.clone())))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;

    let n = target.order();
    let mut images = vec![0usize; k];
    let mut count = 0u64;
    loop {
        let ok = rels.iter().all(|r| {
            let mut acc = target.identity();
            for &(g, inv) in r {
                let x = if inv { target.inv(images[g]) } else { images[g] };
                acc = target.mul(acc, x);
            }
            acc == target.identity()
        });
        if ok {
            count += 1;
        }
        // odometer
        let mut pos = 0;
        loop {
            if pos == k {
                return Ok(count);
            }
            images[pos] += 1;
            if images[pos] < n {
                break;
            }
            images[pos] = 0;
            pos += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::word::Word;

    fn cyclic_pres(k: i64) -> Presentation {
        Presentation::new(vec!["c".into()], vec![Word::from_powers(&[("c", k)])]).unwrap()
    }

    #[test]
    fn catalog_has_right_counts() {
        let groups = groups_up_to_order_12();
        assert_eq!(groups.len(), 24);
        let per_order: Vec<usize> = (1..=12).map(|n| groups.iter().filter(|g| g.order() == n).count()).collect();
        assert_eq!(per_order, vec![1, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5]);
        let nonabelian: Vec<&str> = groups.iter().filter(|g| !g.is_abelian()).map(|g| g.name.as_str()).collect();
        assert_eq!(nonabelian, vec!["D3", "D4", "Q8", "D5", "A4", "D6", "Dic3"]);
    }

    #[test]
    fn quaternion_has_one_involution() {
        let q = FiniteGroup::dicyclic(2);
        let invols = (0..8).filter(|&a| a != q.identity() && q.mul(a, a) == q.identity()).count();
        assert_eq!(invols, 1);
    }

    #[test]
    fn cube_root_counts() {
        assert_eq!(count_homomorphisms(&cyclic_pres(3), &FiniteGroup::cyclic(3)).unwrap(), 3);
        // 3x = 0 mod 6 has solutions 0, 2, 4
        assert_eq!(count_homomorphisms(&cyclic_pres(3), &FiniteGroup::cyclic(6)).unwrap(), 3);
    }

    #[test]
    fn invalid_tables_are_rejected() {
        let t = vec![vec![0, 1], vec![1, 1]];
        assert!(matches!(FiniteGroup::from_table("bad", t), Err(Error::Domain(_))));
    }

    #[test]
    fn guard_is_enforced() {
        let gens: Vec<String> = (0..7).map(|i| format!("g{i}")).collect();
        let p = Presentation::new(gens, vec![]).unwrap();
        assert!(matches!(count_homomorphisms(&p, &FiniteGroup::cyclic(2)), Err(Error::Capacity(_))));
    }
}
