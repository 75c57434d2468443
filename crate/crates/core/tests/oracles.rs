//! Library results checked against small independent computations.

use std::collections::BTreeMap;

use num_traits::ToPrimitive;

use facepair::group::{
    count_homomorphisms, h1, presentation_from_pairings, reduced_family_presentation, FiniteGroup, Presentation, Word,
};
use facepair::FamilyId::{self, M24, M25};

/// Vertex-label correspondences of the face pairings, written out by hand.
fn correspondences(f: FamilyId, n: usize) -> Vec<(Vec<String>, Vec<String>)> {
    let l = |x: &str, i: i64| format!("{x}{}", (i - 1).rem_euclid(n as i64) + 1);
    let mut out = Vec::new();
    for i in 1..=n as i64 {
        let (a, b, c) = match f {
            M24 => (
                ([l("P", i), l("P", i + 1), l("Q", i)], [l("R", i + 2), l("P", i + 2), l("Q", i + 1)]),
                ([l("R", i), l("P", i), l("Q", i)], [l("S", i), l("S", i + 1), l("R", i + 1)]),
                ([l("S", i), l("R", i), l("Q", i)], [l("R", i + 1), l("Q", i), l("S", i)]),
            ),
            M25 => (
                ([l("P", i), l("P", i + 1), l("Q", i)], [l("P", i + 2), l("R", i + 2), l("Q", i + 2)]),
                ([l("Q", i), l("R", i + 1), l("P", i + 1)], [l("R", i + 2), l("S", i + 2), l("S", i + 1)]),
                ([l("Q", i - 1), l("R", i), l("S", i - 1)], [l("S", i), l("Q", i), l("R", i)]),
            ),
        };
        for (s, t) in [a, b, c] {
            out.push((s.to_vec(), t.to_vec()));
        }
    }
    let top = (1..=n as i64).map(|j| l("P", j)).collect();
    let bottom = (0..n as i64).map(|m| l("S", m + 3)).collect();
    out.push((top, bottom));
    out
}

struct Classes {
    parent: BTreeMap<String, String>,
}

impl Classes {
    fn find(&mut self, x: &str) -> String {
        let p = self.parent.entry(x.to_string()).or_insert_with(|| x.to_string()).clone();
        if p == x {
            return p;
        }
        let root = self.find(&p);
        self.parent.insert(x.to_string(), root.clone());
        root
    }

    fn join(&mut self, a: &str, b: &str) {
        let (ra, rb) = (self.find(a), self.find(b));
        self.parent.insert(ra, rb);
    }

    fn count(&mut self) -> usize {
        let keys: Vec<String> = self.parent.keys().cloned().collect();
        let mut roots: Vec<String> = keys.iter().map(|k| self.find(k)).collect();
        roots.sort();
        roots.dedup();
        roots.len()
    }
}

fn edge_key(a: &str, b: &str) -> String {
    if a < b {
        format!("{a}-{b}")
    } else {
        format!("{b}-{a}")
    }
}

#[test]
fn label_orbit_counts_match_cell_counts() {
    for n in 3..=30 {
        for f in [M24, M25] {
            let mut verts = Classes { parent: BTreeMap::new() };
            let mut edges = Classes { parent: BTreeMap::new() };
            let pairs = correspondences(f, n);
            for (s, t) in &pairs {
                let len = s.len();
                for k in 0..len {
                    verts.join(&s[k], &t[k]);
                    let es = edge_key(&s[k], &s[(k + 1) % len]);
                    let et = edge_key(&t[k], &t[(k + 1) % len]);
                    edges.join(&es, &et);
                }
            }
            let counts = f.build(n).unwrap().cell_counts().unwrap();
            assert_eq!(edges.parent.len(), 10 * n, "{f}({n}) edge labels");
            assert_eq!((verts.count(), edges.count(), pairs.len(), 1), counts.as_tuple(), "{f}({n})");
        }
    }
}

fn rank_mod_p(p: &Presentation, prime: i64) -> usize {
    let cols = p.generators.len();
    let mut rows: Vec<Vec<i64>> =
        p.relators.iter().map(|r| p.generators.iter().map(|g| r.exponent_sum(g).rem_euclid(prime)).collect()).collect();
    let mut rank = 0;
    for c in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = (1..prime).find(|&x| x * rows[rank][c] % prime == 1).unwrap();
        for i in 0..rows.len() {
            if i != rank && rows[i][c] != 0 {
                let factor = rows[i][c] * inv % prime;
                let pivot_row = rows[rank].clone();
                for (x, y) in rows[i].iter_mut().zip(&pivot_row) {
                    *x = (*x - factor * y).rem_euclid(prime);
                }
            }
        }
        rank += 1;
    }
    rank
}

#[test]
fn homology_agrees_with_rank_mod_p() {
    for n in 1..=14 {
        for f in [M24, M25] {
            let p = presentation_from_pairings(&f.build(n).unwrap()).unwrap();
            let h = h1(&p);
            for prime in [2i64, 3, 5, 7, 11, 13, 17] {
                let expected = p.generators.len() - rank_mod_p(&p, prime);
                let divisible = h.invariant_factors.iter().filter(|d| (*d % prime).to_i64() == Some(0)).count();
                assert_eq!(h.rank + divisible, expected, "{f}({n}) mod {prime}: {h}");
            }
        }
    }
}

#[test]
fn hom_counts_into_cyclic_groups_follow_homology() {
    for n in 1..=5 {
        for f in [M24, M25] {
            let p = reduced_family_presentation(f, n).unwrap();
            let h = h1(&p);
            for m in 1..=12u64 {
                let mut expected = m.pow(h.rank as u32);
                for d in &h.invariant_factors {
                    expected *= num_integer::gcd(d.to_u64().unwrap(), m);
                }
                let got = count_homomorphisms(&p, &FiniteGroup::cyclic(m as usize)).unwrap();
                assert_eq!(got, expected, "{f}({n}) into Z{m}");
            }
        }
    }
}

#[test]
fn cyclic_normal_form_by_enumeration() {
    let w = Word::from_powers(&[("c2", 3), ("c1", 1), ("c1", 2)]);
    let mut candidates = Vec::new();
    for base in [w.clone(), w.inverse()] {
        for k in 0..base.len() {
            candidates.push(base.rotate(k));
        }
    }
    let key = |x: &Word| x.letters.iter().map(|l| (l.gen.clone(), l.inv)).collect::<Vec<_>>();
    let least = candidates.iter().min_by_key(|x| key(x)).unwrap();
    assert_eq!(&w.cyclic_normal_form(), least);
    assert_eq!(*least, Word::from_powers(&[("c1", 3), ("c2", 3)]));
}
