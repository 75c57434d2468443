//! Builders for the two icosahedral families `M24(n)` and `M25(n)`.
//!
//! `P_n` is a band of `6n` triangles between the cycles `P_1..P_n` (top) and
//! `S_1..S_n` (bottom), capped by the `n`-gons `D` and `Dbar`. Its `10n`
//! edges come in ten kinds per index `i`:
//!
//! ```text
//! 0: P_i P_{i+1}   1: P_i Q_i       2: P_{i+1} Q_i   3: R_i P_i      4: R_i Q_i
//! 5: R_{i+1} Q_i   6: Q_i S_i       7: S_i R_i       8: S_i R_{i+1}  9: S_i S_{i+1}
//! ```
//!
//! All subscripts are taken mod `n` into `1..=n`.

use std::fmt;
use std::str::FromStr;

use crate::complex::{Edge, Face, PairedComplex, Pairing, SlotEdge};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyId {
    M24,
    M25,
}

impl FamilyId {
    pub fn build(self, n: usize) -> Result<PairedComplex> {
        match self {
            FamilyId::M24 => build_m24(n),
            FamilyId::M25 => build_m25(n),
        }
    }

    pub fn tag(self) -> &'static str {
        match self {
            FamilyId::M24 => "m24",
            FamilyId::M25 => "m25",
        }
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for FamilyId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "m24" => Ok(FamilyId::M24),
            "m25" => Ok(FamilyId::M25),
            other => Err(Error::Domain(format!("unknown family `{other}`"))),
        }
    }
}

#[derive(Clone, Copy)]
enum V {
    P,
    Q,
    R,
    S,
}

/// One face slot: edge kind, edge subscript, and whether the slot runs along
/// the kind's reference direction listed in the module docs.
type SlotSpec = (usize, i64, bool);

struct Builder {
    n: usize,
    /// Kinds whose canonical direction is reversed relative to the reference.
    flipped: [bool; 10],
    labels: Vec<(usize, i64, String)>,
}

impl Builder {
    fn idx(&self, i: i64) -> usize {
        (i - 1).rem_euclid(self.n as i64) as usize
    }

    fn vertex(&self, v: V, i: i64) -> usize {
        let block = match v {
            V::P => 0,
            V::Q => 1,
            V::R => 2,
            V::S => 3,
        };
        block * self.n + self.idx(i)
    }

    fn edge_id(&self, kind: usize, i: i64) -> usize {
        kind * self.n + self.idx(i)
    }

    /// Reference endpoints of edge kind `kind` with subscript `i`.
    fn reference_ends(&self, kind: usize, i: i64) -> (usize, usize) {
        use V::*;
        let (a, ai, b, bi) = match kind {
            0 => (P, i, P, i + 1),
            1 => (P, i, Q, i),
            2 => (P, i + 1, Q, i),
            3 => (R, i, P, i),
            4 => (R, i, Q, i),
            5 => (R, i + 1, Q, i),
            6 => (Q, i, S, i),
            7 => (S, i, R, i),
            8 => (S, i, R, i + 1),
            9 => (S, i, S, i + 1),
            _ => unreachable!("ten edge kinds"),
        };
        (self.vertex(a, ai), self.vertex(b, bi))
    }

    fn edges(&self) -> Vec<Edge> {
        let mut edges = Vec::with_capacity(10 * self.n);
        for kind in 0..10 {
            for i in 1..=self.n as i64 {
                let (a, b) = self.reference_ends(kind, i);
                let (tail, head) = if self.flipped[kind] { (b, a) } else { (a, b) };
                let label = self
                    .labels
                    .iter()
                    .find(|(k, j, _)| *k == kind && self.idx(*j) == self.idx(i))
                    .map(|(_, _, s)| s.clone());
                edges.push(Edge { tail, head, label });
            }
        }
        edges
    }

    fn face(&self, name: String, verts: &[(V, i64)], slots: &[SlotSpec]) -> Face {
        Face {
            name,
            cycle: verts.iter().map(|&(v, i)| self.vertex(v, i)).collect(),
            slots: slots
                .iter()
                .map(|&(kind, i, along)| SlotEdge { edge: self.edge_id(kind, i), forward: along != self.flipped[kind] })
                .collect(),
        }
    }

    fn vertex_labels(&self) -> Vec<String> {
        ["P", "Q", "R", "S"].iter().flat_map(|l| (1..=self.n).map(move |i| format!("{l}{i}"))).collect()
    }

    /// Caps `D = P_1..P_n` and `Dbar = S_3 S_4 .. S_1 S_2`.
    fn caps(&self) -> (Face, Face) {
        let n = self.n as i64;
        let top: Vec<(V, i64)> = (1..=n).map(|j| (V::P, j)).collect();
        let top_slots: Vec<SlotSpec> = (1..=n).map(|j| (0, j, true)).collect();
        let bottom: Vec<(V, i64)> = (0..n).map(|m| (V::S, m + 3)).collect();
        let bottom_slots: Vec<SlotSpec> = (0..n).map(|m| (9, m + 3, true)).collect();
        (self.face("D".into(), &top, &top_slots), self.face("Dbar".into(), &bottom, &bottom_slots))
    }

    /// Assembles faces in the order A, Abar, B, Bbar, C, Cbar, D, Dbar and
    /// pairings a_i, b_i, c_i, d, all with the identity alignment.
    fn assemble(&self, name: String, per_index: impl Fn(i64) -> [Face; 6]) -> PairedComplex {
        let n = self.n;
        let mut groups: [Vec<Face>; 6] = Default::default();
        for i in 1..=n as i64 {
            for (g, f) in groups.iter_mut().zip(per_index(i)) {
                g.push(f);
            }
        }
        let mut faces: Vec<Face> = groups.into_iter().flatten().collect();
        let (d, dbar) = self.caps();
        faces.push(d);
        faces.push(dbar);

        let mut pairings = Vec::with_capacity(3 * n + 1);
        for (letter, src_block, dst_block) in [("a", 0, 1), ("b", 2, 3), ("c", 4, 5)] {
            for i in 0..n {
                let source = src_block * n + i;
                let target = dst_block * n + i;
                pairings.push(Pairing {
                    name: format!("{letter}{}", i + 1),
                    source,
                    target,
                    map: (0..faces[source].len()).collect(),
                });
            }
        }
        pairings.push(Pairing { name: "d".into(), source: 6 * n, target: 6 * n + 1, map: (0..n).collect() });

        PairedComplex { name, vertices: self.vertex_labels(), edges: self.edges(), faces, pairings }
    }
}

fn check_n(n: usize) -> Result<()> {
    if n == 0 {
        Err(Error::Domain("n must be at least 1".into()))
    } else {
        Ok(())
    }
}

/// `P_n` with the identification
/// `a_i: [P_i P_{i+1} Q_i -> R_{i+2} P_{i+2} Q_{i+1}]`,
/// `b_i: [R_i P_i Q_i -> S_i S_{i+1} R_{i+1}]`,
/// `c_i: [S_i R_i Q_i -> R_{i+1} Q_i S_i]`,
/// `d: [P_1 .. P_n -> S_3 .. S_2]`.
pub fn build_m24(n: usize) -> Result<PairedComplex> {
    check_n(n)?;
    let b = Builder {
        n,
        flipped: [false; 10],
        labels: {
            let mut l = Vec::new();
            for i in 1..=n as i64 {
                l.push((0, i, format!("x{i}")));
                l.push((1, i, format!("y{i}")));
                l.push((4, i, format!("z{i}")));
            }
            l.push((2, 1, "u".to_string()));
            l
        },
    };
    use V::*;
    Ok(b.assemble(format!("m24({n})"), |i| {
        [
            b.face(format!("A{i}"), &[(P, i), (P, i + 1), (Q, i)], &[(0, i, true), (2, i, true), (1, i, false)]),
            b.face(
                format!("Abar{i}"),
                &[(R, i + 2), (P, i + 2), (Q, i + 1)],
                &[(3, i + 2, true), (2, i + 1, true), (5, i + 1, false)],
            ),
            b.face(format!("B{i}"), &[(R, i), (P, i), (Q, i)], &[(3, i, true), (1, i, true), (4, i, false)]),
            b.face(
                format!("Bbar{i}"),
                &[(S, i), (S, i + 1), (R, i + 1)],
                &[(9, i, true), (7, i + 1, true), (8, i, false)],
            ),
            b.face(format!("C{i}"), &[(S, i), (R, i), (Q, i)], &[(7, i, true), (4, i, true), (6, i, true)]),
            b.face(format!("Cbar{i}"), &[(R, i + 1), (Q, i), (S, i)], &[(5, i, true), (6, i, true), (8, i, true)]),
        ]
    }))
}

/// `P_n` with the identification
/// `a_i: [P_i P_{i+1} Q_i -> P_{i+2} R_{i+2} Q_{i+2}]`,
/// `b_i: [Q_i R_{i+1} P_{i+1} -> R_{i+2} S_{i+2} S_{i+1}]`,
/// `c_i: [Q_{i-1} R_i S_{i-1} -> S_i Q_i R_i]`,
/// `d: [P_1 .. P_n -> S_3 .. S_2]`.
pub fn build_m25(n: usize) -> Result<PairedComplex> {
    check_n(n)?;
    let mut flipped = [false; 10];
    for k in [3, 5, 6, 7] {
        flipped[k] = true;
    }
    let b = Builder {
        n,
        flipped,
        labels: {
            let mut l = Vec::new();
            for i in 1..=n as i64 {
                l.push((0, i, format!("x{i}")));
                l.push((2, i, format!("y{i}")));
                l.push((5, i, format!("z{i}")));
            }
            l.push((1, 1, "u".to_string()));
            if n >= 2 {
                l.push((1, 2, "v".to_string()));
            }
            l
        },
    };
    use V::*;
    Ok(b.assemble(format!("m25({n})"), |i| {
        [
            b.face(format!("A{i}"), &[(P, i), (P, i + 1), (Q, i)], &[(0, i, true), (2, i, true), (1, i, false)]),
            b.face(
                format!("Abar{i}"),
                &[(P, i + 2), (R, i + 2), (Q, i + 2)],
                &[(3, i + 2, false), (4, i + 2, true), (1, i + 2, false)],
            ),
            b.face(
                format!("B{i}"),
                &[(Q, i), (R, i + 1), (P, i + 1)],
                &[(5, i, false), (3, i + 1, true), (2, i, true)],
            ),
            b.face(
                format!("Bbar{i}"),
                &[(R, i + 2), (S, i + 2), (S, i + 1)],
                &[(7, i + 2, false), (9, i + 1, false), (8, i + 1, true)],
            ),
            b.face(
                format!("C{i}"),
                &[(Q, i - 1), (R, i), (S, i - 1)],
                &[(5, i - 1, false), (8, i - 1, false), (6, i - 1, false)],
            ),
            b.face(format!("Cbar{i}"), &[(S, i), (Q, i), (R, i)], &[(6, i, false), (4, i, false), (7, i, false)]),
        ]
    }))
}
