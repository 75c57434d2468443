//! A single polyhedral 3-cell whose boundary faces are identified in pairs.
//!
//! Edges are positional: a face slot `k` runs from `cycle[k]` to
//! `cycle[k + 1]` and refers to an explicit polyhedron edge, so faces may
//! repeat vertex labels (the `n = 1` monogon, for instance).

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::group::word::{Letter, Word};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub tail: usize,
    pub head: usize,
    /// Preferred generator name when this edge represents its class.
    pub label: Option<String>,
}

/// The polyhedron edge under a face slot. `forward` is true when the slot
/// traverses the edge from tail to head.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SlotEdge {
    pub edge: usize,
    pub forward: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    pub name: String,
    pub cycle: Vec<usize>,
    pub slots: Vec<SlotEdge>,
}

impl Face {
    pub fn len(&self) -> usize {
        self.cycle.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycle.is_empty()
    }
}

/// `map[k]` is the target-face vertex position receiving source position `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pairing {
    pub name: String,
    pub source: usize,
    pub target: usize,
    pub map: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Slot {
    pub face: usize,
    pub index: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairedComplex {
    pub name: String,
    pub vertices: Vec<String>,
    pub edges: Vec<Edge>,
    pub faces: Vec<Face>,
    pub pairings: Vec<Pairing>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Diagnostic {
    EmptyFace { face: String },
    SlotCountMismatch { face: String },
    DuplicateName { kind: &'static str, name: String },
    BadVertex { face: String, index: usize },
    BadEdge { face: String, slot: usize },
    EndpointMismatch { face: String, slot: usize },
    EdgeIncidence { edge: usize, count: usize },
    UnpairedFace { face: String },
    DoublyPairedFace { face: String },
    SelfPairing { pairing: String },
    BadPairingFace { pairing: String },
    LengthMismatch { pairing: String },
    NotBijective { pairing: String },
    NotDihedral { pairing: String },
    NonOrientableBoundary { face: String },
    OrientationPreserving { pairing: String },
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use Diagnostic::*;
        match self {
            EmptyFace { face } => write!(f, "empty face {face}"),
            SlotCountMismatch { face } => write!(f, "face {face}: slot count differs from vertex count"),
            DuplicateName { kind, name } => write!(f, "duplicate {kind} name {name}"),
            BadVertex { face, index } => write!(f, "face {face}: position {index} names no vertex"),
            BadEdge { face, slot } => write!(f, "face {face} slot {slot}: no such edge"),
            EndpointMismatch { face, slot } => {
                write!(f, "face {face} slot {slot}: edge endpoints disagree with face cycle")
            }
            EdgeIncidence { edge, count } => {
                write!(f, "edge {edge} borders {count} face slots (expected 2)")
            }
            UnpairedFace { face } => write!(f, "unpaired face {face}"),
            DoublyPairedFace { face } => write!(f, "face doubly paired {face}"),
            SelfPairing { pairing } => write!(f, "pairing {pairing} maps a face to itself"),
            BadPairingFace { pairing } => write!(f, "pairing {pairing} names no face"),
            LengthMismatch { pairing } => write!(f, "pairing {pairing}: faces of unequal length"),
            NotBijective { pairing } => write!(f, "pairing {pairing}: correspondence is not a bijection"),
            NotDihedral { pairing } => {
                write!(f, "pairing {pairing}: correspondence does not preserve adjacency")
            }
            NonOrientableBoundary { face } => write!(f, "boundary is not an oriented surface near face {face}"),
            OrientationPreserving { pairing } => {
                write!(f, "pairing {pairing} preserves boundary orientation")
            }
        }
    }
}

/// Cell counts of the quotient complex.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CellCounts {
    pub sigma0: usize,
    pub sigma1: usize,
    pub sigma2: usize,
    pub sigma3: usize,
}

impl CellCounts {
    pub fn euler_characteristic(&self) -> i64 {
        self.sigma0 as i64 - self.sigma1 as i64 + self.sigma2 as i64 - self.sigma3 as i64
    }

    pub fn as_tuple(&self) -> (usize, usize, usize, usize) {
        (self.sigma0, self.sigma1, self.sigma2, self.sigma3)
    }
}

/// One class of polyhedron edges under the face pairings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeOrbit {
    /// Sorted edge ids.
    pub member_edges: Vec<usize>,
    /// Slots visited by the cycle, starting at the representative's first slot.
    pub cycle: Vec<Slot>,
    pub cycle_word: Word,
    pub representative: usize,
    /// For each member (parallel to `member_edges`): +1 if the class
    /// orientation agrees with the edge's tail-to-head direction.
    pub orientation: Vec<i8>,
}

impl EdgeOrbit {
    pub fn len(&self) -> usize {
        self.member_edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.member_edges.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexOrbit {
    pub member_vertices: Vec<usize>,
    pub representative: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ManifoldCertificate {
    pub is_manifold: bool,
    pub euler_characteristic: i64,
    pub counts: CellCounts,
}

/// Precomputed incidence data for a validated complex.
pub(crate) struct Topology {
    /// Boundary involution on slots.
    partner: Vec<Vec<Slot>>,
    /// For each face: its pairing and whether the face is the source.
    face_pairing: Vec<(usize, bool)>,
}

impl Topology {
    pub(crate) fn partner(&self, s: Slot) -> Slot {
        self.partner[s.face][s.index]
    }

    pub(crate) fn face_pairing(&self, face: usize) -> (usize, bool) {
        self.face_pairing[face]
    }
}

impl PairedComplex {
    pub fn vertex_index(&self, label: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == label)
    }

    pub fn face_index(&self, name: &str) -> Option<usize> {
        self.faces.iter().position(|f| f.name == name)
    }

    pub fn pairing_index(&self, name: &str) -> Option<usize> {
        self.pairings.iter().position(|p| p.name == name)
    }

    pub fn slot_count(&self) -> usize {
        self.faces.iter().map(Face::len).sum()
    }

    /// Every violated structural invariant; empty iff the complex is legal.
    pub fn validate(&self) -> Vec<Diagnostic> {
        let mut out = Vec::new();
        check_unique(self.vertices.iter(), "vertex", &mut out);
        check_unique(self.faces.iter().map(|f| &f.name), "face", &mut out);
        check_unique(self.pairings.iter().map(|p| &p.name), "pairing", &mut out);

        let mut incidence = vec![0usize; self.edges.len()];
        let mut faces_ok = true;
        for f in &self.faces {
            if f.cycle.is_empty() {
                out.push(Diagnostic::EmptyFace { face: f.name.clone() });
                faces_ok = false;
                continue;
            }
            if f.slots.len() != f.cycle.len() {
                out.push(Diagnostic::SlotCountMismatch { face: f.name.clone() });
                faces_ok = false;
                continue;
            }
            for (k, &v) in f.cycle.iter().enumerate() {
                if v >= self.vertices.len() {
                    out.push(Diagnostic::BadVertex { face: f.name.clone(), index: k });
                    faces_ok = false;
                }
            }
            for (k, s) in f.slots.iter().enumerate() {
                let Some(e) = self.edges.get(s.edge) else {
                    out.push(Diagnostic::BadEdge { face: f.name.clone(), slot: k });
                    faces_ok = false;
                    continue;
                };
                incidence[s.edge] += 1;
                let (a, b) = (f.cycle[k], f.cycle[(k + 1) % f.len()]);
                let ok = if s.forward { (a, b) == (e.tail, e.head) } else { (a, b) == (e.head, e.tail) };
                if !ok {
                    out.push(Diagnostic::EndpointMismatch { face: f.name.clone(), slot: k });
                    faces_ok = false;
                }
            }
        }
        for (e, &count) in incidence.iter().enumerate() {
            if count != 2 {
                out.push(Diagnostic::EdgeIncidence { edge: e, count });
                faces_ok = false;
            }
        }

        let mut paired = vec![0usize; self.faces.len()];
        let mut pairings_ok = true;
        for p in &self.pairings {
            let (Some(src), Some(dst)) = (self.faces.get(p.source), self.faces.get(p.target)) else {
                out.push(Diagnostic::BadPairingFace { pairing: p.name.clone() });
                pairings_ok = false;
                continue;
            };
            paired[p.source] += 1;
            paired[p.target] += 1;
            if p.source == p.target {
                out.push(Diagnostic::SelfPairing { pairing: p.name.clone() });
                pairings_ok = false;
            }
            if src.len() != dst.len() || p.map.len() != src.len() {
                out.push(Diagnostic::LengthMismatch { pairing: p.name.clone() });
                pairings_ok = false;
                continue;
            }
            let distinct: BTreeSet<usize> = p.map.iter().copied().collect();
            if distinct.len() != p.map.len() || p.map.iter().any(|&t| t >= dst.len()) {
                out.push(Diagnostic::NotBijective { pairing: p.name.clone() });
                pairings_ok = false;
                continue;
            }
            if map_kind(&p.map).is_none() {
                out.push(Diagnostic::NotDihedral { pairing: p.name.clone() });
                pairings_ok = false;
            }
        }
        for (f, &count) in paired.iter().enumerate() {
            match count {
                0 => out.push(Diagnostic::UnpairedFace { face: self.faces[f].name.clone() }),
                1 => {}
                _ => out.push(Diagnostic::DoublyPairedFace { face: self.faces[f].name.clone() }),
            }
        }

        if faces_ok {
            match self.face_orientations() {
                Err(face) => out.push(Diagnostic::NonOrientableBoundary { face: self.faces[face].name.clone() }),
                Ok(sign) if pairings_ok => {
                    for p in &self.pairings {
                        let reflected = map_kind(&p.map) == Some(MapKind::Reflection);
                        // a rotation-type correspondence must join faces of opposite sign
                        let reverses = (sign[p.source] == sign[p.target]) == reflected;
                        if !reverses {
                            out.push(Diagnostic::OrientationPreserving { pairing: p.name.clone() });
                        }
                    }
                }
                Ok(_) => {}
            }
        }
        out
    }

    pub fn ensure_valid(&self) -> Result<()> {
        let d = self.validate();
        if d.is_empty() {
            Ok(())
        } else {
            Err(Error::Structural(d))
        }
    }

    /// Relative orientation signs of the faces in the boundary surface, or the
    /// face where propagation hits a contradiction.
    fn face_orientations(&self) -> std::result::Result<Vec<i8>, usize> {
        let mut incid: Vec<Vec<(usize, bool)>> = vec![Vec::new(); self.edges.len()];
        for (fi, f) in self.faces.iter().enumerate() {
            for s in &f.slots {
                incid[s.edge].push((fi, s.forward));
            }
        }
        let mut sign = vec![0i8; self.faces.len()];
        for start in 0..self.faces.len() {
            if sign[start] != 0 {
                continue;
            }
            sign[start] = 1;
            let mut stack = vec![start];
            while let Some(fi) = stack.pop() {
                for s in &self.faces[fi].slots {
                    for &(gi, gfwd) in &incid[s.edge] {
                        if gi == fi && gfwd == s.forward {
                            continue;
                        }
                        // coherent orientations traverse a shared edge in opposite directions
                        let want = if gfwd == s.forward { -sign[fi] } else { sign[fi] };
                        if sign[gi] == 0 {
                            sign[gi] = want;
                            stack.push(gi);
                        } else if sign[gi] != want {
                            return Err(gi);
                        }
                    }
                }
            }
        }
        Ok(sign)
    }

    pub(crate) fn topology(&self) -> Result<Topology> {
        self.ensure_valid()?;
        let mut by_edge: Vec<Vec<Slot>> = vec![Vec::new(); self.edges.len()];
        for (fi, f) in self.faces.iter().enumerate() {
            for (k, s) in f.slots.iter().enumerate() {
                by_edge[s.edge].push(Slot { face: fi, index: k });
            }
        }
        let mut partner: Vec<Vec<Slot>> =
            self.faces.iter().map(|f| vec![Slot { face: 0, index: 0 }; f.len()]).collect();
        for slots in &by_edge {
            let (a, b) = (slots[0], slots[1]);
            partner[a.face][a.index] = b;
            partner[b.face][b.index] = a;
        }
        let mut face_pairing = vec![(0, true); self.faces.len()];
        for (pi, p) in self.pairings.iter().enumerate() {
            face_pairing[p.source] = (pi, true);
            face_pairing[p.target] = (pi, false);
        }
        Ok(Topology { partner, face_pairing })
    }

    /// Image of a slot under a pairing (or its inverse). Returns the image
    /// slot and whether the traversal direction along the slot is reversed.
    pub(crate) fn apply_pairing(&self, pairing: usize, forward: bool, s: Slot) -> (Slot, bool) {
        let p = &self.pairings[pairing];
        let len = p.map.len();
        let (face, pos): (usize, Box<dyn Fn(usize) -> usize>) = if forward {
            debug_assert_eq!(s.face, p.source);
            (p.target, Box::new(|k| p.map[k]))
        } else {
            debug_assert_eq!(s.face, p.target);
            let mut inv = vec![0; len];
            for (k, &t) in p.map.iter().enumerate() {
                inv[t] = k;
            }
            (p.source, Box::new(move |k| inv[k]))
        };
        let a = pos(s.index);
        let b = pos((s.index + 1) % len);
        if len == 1 || b == (a + 1) % len {
            (Slot { face, index: a }, false)
        } else {
            (Slot { face, index: b }, true)
        }
    }

    /// Edge classes under the pairings, each with its closed cycle word,
    /// ordered by representative (smallest member edge id).
    pub fn edge_orbits(&self) -> Result<Vec<EdgeOrbit>> {
        let topo = self.topology()?;
        let mut assigned = vec![false; self.edges.len()];
        let mut first_slot = vec![None; self.edges.len()];
        for (fi, f) in self.faces.iter().enumerate() {
            for (k, s) in f.slots.iter().enumerate() {
                first_slot[s.edge].get_or_insert(Slot { face: fi, index: k });
            }
        }
        let mut orbits = Vec::new();
        for rep in 0..self.edges.len() {
            if assigned[rep] {
                continue;
            }
            let s0 = first_slot[rep].expect("validated edge has slots");
            // direction of travel as "tail to head" of the current edge
            let mut along_edge = true;
            let mut cur = s0;
            let mut cycle = Vec::new();
            let mut letters = Vec::new();
            let mut members: Vec<(usize, i8)> = Vec::new();
            loop {
                let se = self.faces[cur.face].slots[cur.index];
                cycle.push(cur);
                members.push((se.edge, if along_edge { 1 } else { -1 }));
                let along_slot = along_edge == se.forward;
                let (pi, is_src) = topo.face_pairing(cur.face);
                letters.push(Letter::new(self.pairings[pi].name.clone(), !is_src));
                let (img, flipped) = self.apply_pairing(pi, is_src, cur);
                let along_img = along_slot != flipped;
                let img_se = self.faces[img.face].slots[img.index];
                along_edge = along_img == img_se.forward;
                cur = topo.partner(img);
                if cur == s0 {
                    break;
                }
            }
            members.sort();
            members.dedup();
            let mut member_edges: Vec<usize> = members.iter().map(|m| m.0).collect();
            member_edges.dedup();
            // an edge listed with both signs is identified with its reverse; keep the first sign
            let orientation: Vec<i8> =
                member_edges.iter().map(|e| members.iter().find(|m| m.0 == *e).map(|m| m.1).unwrap_or(1)).collect();
            for &e in &member_edges {
                assigned[e] = true;
            }
            orbits.push(EdgeOrbit {
                member_edges,
                cycle,
                cycle_word: Word::new(letters),
                representative: rep,
                orientation,
            });
        }
        Ok(orbits)
    }

    pub fn vertex_orbits(&self) -> Result<Vec<VertexOrbit>> {
        self.ensure_valid()?;
        let mut uf = UnionFind::new(self.vertices.len());
        for p in &self.pairings {
            let src = &self.faces[p.source];
            let dst = &self.faces[p.target];
            for (k, &t) in p.map.iter().enumerate() {
                uf.union(src.cycle[k], dst.cycle[t]);
            }
        }
        // vertices on no face still form their own classes
        let mut classes: Vec<Vec<usize>> = Vec::new();
        let mut index_of_root = vec![usize::MAX; self.vertices.len()];
        for v in 0..self.vertices.len() {
            let r = uf.find(v);
            if index_of_root[r] == usize::MAX {
                index_of_root[r] = classes.len();
                classes.push(Vec::new());
            }
            classes[index_of_root[r]].push(v);
        }
        Ok(classes.into_iter().map(|m| VertexOrbit { representative: m[0], member_vertices: m }).collect())
    }

    pub fn cell_counts(&self) -> Result<CellCounts> {
        Ok(CellCounts {
            sigma0: self.vertex_orbits()?.len(),
            sigma1: self.edge_orbits()?.len(),
            sigma2: self.faces.len() / 2,
            sigma3: 1,
        })
    }

    /// Euler-characteristic criterion for a single-cell quotient.
    pub fn is_manifold(&self) -> Result<ManifoldCertificate> {
        let counts = self.cell_counts()?;
        let chi = counts.euler_characteristic();
        Ok(ManifoldCertificate { is_manifold: chi == 0, euler_characteristic: chi, counts })
    }

    /// Map from edge id to the index of its class in `orbits`.
    pub fn edge_class_index(&self, orbits: &[EdgeOrbit]) -> Vec<usize> {
        let mut idx = vec![usize::MAX; self.edges.len()];
        for (i, o) in orbits.iter().enumerate() {
            for &e in &o.member_edges {
                idx[e] = i;
            }
        }
        idx
    }

    /// Human-readable endpoint labels of an edge, e.g. `P1P2`.
    pub fn edge_display(&self, e: usize) -> String {
        let edge = &self.edges[e];
        format!("{}{}", self.vertices[edge.tail], self.vertices[edge.head])
    }

    /// Isomorphism that preserves vertex, face and pairing names. Edge ids
    /// and edge labels may differ; edges are matched through the face slots.
    pub fn same_cells(&self, other: &PairedComplex) -> bool {
        if self.vertices.len() != other.vertices.len()
            || self.edges.len() != other.edges.len()
            || self.faces.len() != other.faces.len()
            || self.pairings.len() != other.pairings.len()
        {
            return false;
        }
        let mut vmap = vec![0; self.vertices.len()];
        for (i, v) in self.vertices.iter().enumerate() {
            match other.vertex_index(v) {
                Some(j) => vmap[i] = j,
                None => return false,
            }
        }
        let mut fmap = vec![0; self.faces.len()];
        let mut emap: Vec<Option<usize>> = vec![None; self.edges.len()];
        for (fi, f) in self.faces.iter().enumerate() {
            let Some(gi) = other.face_index(&f.name) else {
                return false;
            };
            fmap[fi] = gi;
            let g = &other.faces[gi];
            if f.len() != g.len() || f.cycle.iter().zip(&g.cycle).any(|(&a, &b)| vmap[a] != b) {
                return false;
            }
            for (s, t) in f.slots.iter().zip(&g.slots) {
                if s.forward != t.forward || *emap[s.edge].get_or_insert(t.edge) != t.edge {
                    return false;
                }
            }
        }
        let mut hit = vec![false; other.edges.len()];
        for (e, img) in emap.iter().enumerate() {
            let Some(img) = *img else {
                return false;
            };
            let (a, b) = (&self.edges[e], &other.edges[img]);
            if std::mem::replace(&mut hit[img], true) || vmap[a.tail] != b.tail || vmap[a.head] != b.head {
                return false;
            }
        }
        self.pairings.iter().all(|p| {
            other.pairing_index(&p.name).is_some_and(|qi| {
                let q = &other.pairings[qi];
                fmap[p.source] == q.source && fmap[p.target] == q.target && p.map == q.map
            })
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum MapKind {
    Rotation,
    Reflection,
}

/// Classifies a position correspondence as a cyclic rotation or reflection.
pub(crate) fn map_kind(map: &[usize]) -> Option<MapKind> {
    let len = map.len();
    // monogons and digons are read as rotations; their vertex maps cannot
    // distinguish the two kinds
    if len <= 2 {
        return Some(MapKind::Rotation);
    }
    if (0..len).all(|k| map[(k + 1) % len] == (map[k] + 1) % len) {
        Some(MapKind::Rotation)
    } else if (0..len).all(|k| (map[(k + 1) % len] + 1) % len == map[k]) {
        Some(MapKind::Reflection)
    } else {
        None
    }
}

fn check_unique<'a>(names: impl Iterator<Item = &'a String>, kind: &'static str, out: &mut Vec<Diagnostic>) {
    let mut seen = BTreeSet::new();
    for n in names {
        if !seen.insert(n) {
            out.push(Diagnostic::DuplicateName { kind, name: n.clone() });
        }
    }
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    pub(crate) fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.parent[r] != r {
            r = self.parent[r];
        }
        let mut c = x;
        while self.parent[c] != r {
            let next = self.parent[c];
            self.parent[c] = r;
            c = next;
        }
        r
    }

    /// Returns false if already joined. The smaller root wins.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi] = lo;
        true
    }
}
