//! Cyclic rotations of the family polyhedra, their quotient complexes and
//! the singular-set data of the resulting branched coverings.

use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;

use crate::complex::{Edge, Face, PairedComplex, Pairing, SlotEdge, UnionFind};
use crate::error::{Error, Result};
use crate::families::FamilyId;

/// A relabelling of vertices, from which face, slot and edge maps are
/// derived against a particular complex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComplexAutomorphism {
    pub name: String,
    pub vertex_map: BTreeMap<String, String>,
    /// Declared order.
    pub order: usize,
}

/// `X_i -> X_{i+step}` for `X` in `P, Q, R, S`.
pub fn rotation(family: FamilyId, n: usize, step: usize) -> Result<ComplexAutomorphism> {
    if n == 0 {
        return Err(Error::Domain("n must be at least 1".into()));
    }
    if step != 1 && step != 2 {
        return Err(Error::Domain(format!("rotation step must be 1 or 2, got {step}")));
    }
    if step == 2 && n % 2 == 1 {
        return Err(Error::Domain(format!("step 2 needs even n, got {n}")));
    }
    let mut vertex_map = BTreeMap::new();
    for x in ["P", "Q", "R", "S"] {
        for i in 0..n {
            vertex_map.insert(format!("{x}{}", i + 1), format!("{x}{}", (i + step) % n + 1));
        }
    }
    Ok(ComplexAutomorphism { name: format!("rho[{family}({n}),+{step}]"), vertex_map, order: n / n.gcd(&step) })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AutomorphismCheck {
    pub holds: bool,
    /// Actual order of the induced cell permutation, when one was induced.
    pub order: Option<usize>,
    pub failure: Option<String>,
}

impl AutomorphismCheck {
    fn fail(why: impl Into<String>, order: Option<usize>) -> Self {
        AutomorphismCheck { holds: false, order, failure: Some(why.into()) }
    }
}

/// Cell maps induced on one complex. Slot `k` of face `f` goes to slot
/// `(k + face_map[f].1) % len` of face `face_map[f].0`.
#[derive(Debug, Clone)]
struct Induced {
    vertex_map: Vec<usize>,
    face_map: Vec<(usize, usize)>,
    /// Image edge and whether the direction is preserved.
    edge_map: Vec<(usize, bool)>,
    pairing_map: Vec<usize>,
    order: usize,
}

fn resolve_vertices(c: &PairedComplex, a: &ComplexAutomorphism) -> Result<Vec<usize>> {
    let index = |label: &str| c.vertex_index(label).ok_or_else(|| Error::Name(label.to_string()));
    for (from, to) in &a.vertex_map {
        index(from)?;
        index(to)?;
    }
    c.vertices
        .iter()
        .map(|v| match a.vertex_map.get(v) {
            Some(t) => index(t),
            None => index(v),
        })
        .collect()
}

struct Search<'a> {
    c: &'a PairedComplex,
    vmap: &'a [usize],
    candidates: Vec<Vec<(usize, usize)>>,
    face_map: Vec<Option<(usize, usize)>>,
    face_used: Vec<bool>,
    edge_map: Vec<Option<(usize, bool)>>,
    edge_used: Vec<bool>,
}

impl Search<'_> {
    fn run(&mut self, f: usize) -> bool {
        if f == self.c.faces.len() {
            return true;
        }
        for ci in 0..self.candidates[f].len() {
            let (g, r) = self.candidates[f][ci];
            if self.face_used[g] {
                continue;
            }
            let mut touched = Vec::new();
            if self.assign(f, g, r, &mut touched) {
                self.face_map[f] = Some((g, r));
                self.face_used[g] = true;
                if self.run(f + 1) {
                    return true;
                }
                self.face_map[f] = None;
                self.face_used[g] = false;
            }
            for e in touched {
                let (img, _) = self.edge_map[e].take().expect("touched edges are assigned");
                self.edge_used[img] = false;
            }
        }
        false
    }

    fn assign(&mut self, f: usize, g: usize, r: usize, touched: &mut Vec<usize>) -> bool {
        let (src, dst) = (&self.c.faces[f], &self.c.faces[g]);
        let len = src.len();
        for k in 0..len {
            let s = src.slots[k];
            let t = dst.slots[(k + r) % len];
            let same = s.forward == t.forward;
            match self.edge_map[s.edge] {
                Some(prev) if prev != (t.edge, same) => return false,
                Some(_) => {}
                None => {
                    if self.edge_used[t.edge] {
                        return false;
                    }
                    let (e, img) = (&self.c.edges[s.edge], &self.c.edges[t.edge]);
                    let (tail, head) = (self.vmap[e.tail], self.vmap[e.head]);
                    if (same && (img.tail, img.head) != (tail, head)) || (!same && (img.head, img.tail) != (tail, head))
                    {
                        return false;
                    }
                    self.edge_map[s.edge] = Some((t.edge, same));
                    self.edge_used[t.edge] = true;
                    touched.push(s.edge);
                }
            }
        }
        true
    }
}

fn permutation_order(perm: impl Fn(usize) -> usize, size: usize) -> usize {
    let mut seen = vec![false; size];
    let mut order = 1usize;
    for start in 0..size {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = perm(x);
            len += 1;
        }
        order = order.lcm(&len);
    }
    order
}

fn induce(c: &PairedComplex, a: &ComplexAutomorphism) -> Result<std::result::Result<Induced, AutomorphismCheck>> {
    let vmap = resolve_vertices(c, a)?;
    c.ensure_valid()?;
    let mut seen = vec![false; vmap.len()];
    for &v in &vmap {
        if std::mem::replace(&mut seen[v], true) {
            return Ok(Err(AutomorphismCheck::fail("vertex map is not a permutation", None)));
        }
    }

    let candidates: Vec<Vec<(usize, usize)>> = c
        .faces
        .iter()
        .map(|f| {
            let image: Vec<usize> = f.cycle.iter().map(|&v| vmap[v]).collect();
            let mut out = Vec::new();
            for (gi, g) in c.faces.iter().enumerate() {
                if g.len() != f.len() {
                    continue;
                }
                for r in 0..g.len() {
                    if (0..f.len()).all(|k| g.cycle[(k + r) % g.len()] == image[k]) {
                        out.push((gi, r));
                    }
                }
            }
            out
        })
        .collect();
    if let Some(f) = candidates.iter().position(|cands| cands.is_empty()) {
        return Ok(Err(AutomorphismCheck::fail(
            format!("image of face {} is not a face boundary", c.faces[f].name),
            None,
        )));
    }
    let mut search = Search {
        c,
        vmap: &vmap,
        candidates,
        face_map: vec![None; c.faces.len()],
        face_used: vec![false; c.faces.len()],
        edge_map: vec![None; c.edges.len()],
        edge_used: vec![false; c.edges.len()],
    };
    if !search.run(0) {
        return Ok(Err(AutomorphismCheck::fail("no consistent face and edge correspondence", None)));
    }
    let face_map: Vec<(usize, usize)> = search.face_map.into_iter().map(|x| x.expect("all faces mapped")).collect();
    let edge_map: Vec<(usize, bool)> = search.edge_map.into_iter().map(|x| x.expect("all edges mapped")).collect();

    let mut pairing_map = Vec::with_capacity(c.pairings.len());
    for g in &c.pairings {
        let (fs, rs) = face_map[g.source];
        let (ft, rt) = face_map[g.target];
        let (ls, lt) = (g.map.len(), c.faces[g.target].len());
        let found = c.pairings.iter().position(|h| {
            h.source == fs && h.target == ft && (0..ls).all(|k| h.map[(k + rs) % ls] == (g.map[k] + rt) % lt)
        });
        match found {
            Some(h) if !pairing_map.contains(&h) => pairing_map.push(h),
            _ => {
                return Ok(Err(AutomorphismCheck::fail(
                    format!("pairing {} is not carried to a pairing", g.name),
                    None,
                )))
            }
        }
    }

    let offsets: Vec<usize> = c
        .faces
        .iter()
        .scan(0, |acc, f| {
            let o = *acc;
            *acc += f.len();
            Some(o)
        })
        .collect();
    let slot_perm = |s: usize| {
        let f = offsets.partition_point(|&o| o <= s) - 1;
        let k = s - offsets[f];
        let (g, r) = face_map[f];
        offsets[g] + (k + r) % c.faces[g].len()
    };
    let order = permutation_order(|v| vmap[v], vmap.len()).lcm(&permutation_order(slot_perm, c.slot_count()));
    Ok(Ok(Induced { vertex_map: vmap, face_map, edge_map, pairing_map, order }))
}

/// Checks that `a` induces a cellular automorphism of `c` commuting with the
/// pairings, and that its declared order is exact.
pub fn verify_automorphism(c: &PairedComplex, a: &ComplexAutomorphism) -> Result<AutomorphismCheck> {
    Ok(match induce(c, a)? {
        Err(check) => check,
        Ok(ind) if ind.order != a.order => AutomorphismCheck::fail(
            format!("declared order {} but the induced map has order {}", a.order, ind.order),
            Some(ind.order),
        ),
        Ok(ind) => AutomorphismCheck { holds: true, order: Some(ind.order), failure: None },
    })
}

fn induced_checked(c: &PairedComplex, a: &ComplexAutomorphism) -> Result<Induced> {
    match induce(c, a)? {
        Ok(ind) if ind.order == a.order => Ok(ind),
        Ok(ind) => {
            Err(Error::Domain(format!("declared order {} but the induced map has order {}", a.order, ind.order)))
        }
        Err(check) => Err(Error::Domain(check.failure.unwrap_or_default())),
    }
}

/// Orbits of a permutation, as (orbit id per element, representatives in
/// increasing order). The representative is the smallest member.
fn orbits(size: usize, perm: impl Fn(usize) -> usize) -> (Vec<usize>, Vec<usize>) {
    let mut uf = UnionFind::new(size);
    for x in 0..size {
        uf.union(x, perm(x));
    }
    let mut reps: Vec<usize> = (0..size).filter(|&x| uf.find(x) == x).collect();
    reps.sort_unstable();
    let id = (0..size).map(|x| reps.binary_search(&uf.find(x)).expect("root is a representative")).collect();
    (id, reps)
}

/// Where each member of a face orbit sits relative to its representative:
/// slot `k` of the representative corresponds to slot `(k + shift) % len` of
/// the member.
fn face_shifts(c: &PairedComplex, ind: &Induced, reps: &[usize]) -> Vec<usize> {
    let mut shift = vec![0; c.faces.len()];
    let mut done = vec![false; c.faces.len()];
    for &r in reps {
        let mut f = r;
        let mut acc = 0;
        while !done[f] {
            done[f] = true;
            shift[f] = acc;
            let (g, s) = ind.face_map[f];
            acc = (acc + s) % c.faces[f].len();
            f = g;
        }
    }
    shift
}

/// Rotation of a face onto itself after going once around its orbit.
fn face_stabilizer(c: &PairedComplex, ind: &Induced, f: usize) -> usize {
    let len = c.faces[f].len();
    let (mut g, mut acc) = ind.face_map[f];
    acc %= len;
    while g != f {
        let (h, s) = ind.face_map[g];
        acc = (acc + s) % len;
        g = h;
    }
    acc
}

/// The complex whose cells are orbits of cells under `a`, with induced
/// pairings. A face carried onto itself by a rotation of `r` slots becomes a
/// face with `gcd(len, r)` slots.
pub fn quotient_complex(c: &PairedComplex, a: &ComplexAutomorphism) -> Result<PairedComplex> {
    let ind = induced_checked(c, a)?;
    let (vid, vreps) = orbits(c.vertices.len(), |v| ind.vertex_map[v]);
    let (eid, ereps) = orbits(c.edges.len(), |e| ind.edge_map[e].0);
    let (fid, freps) = orbits(c.faces.len(), |f| ind.face_map[f].0);

    // direction of each edge relative to its orbit representative
    let mut along = vec![true; c.edges.len()];
    for &r in &ereps {
        let (mut e, mut dir) = (r, true);
        loop {
            along[e] = dir;
            let (next, same) = ind.edge_map[e];
            dir = dir == same;
            e = next;
            if e == r {
                if !dir {
                    return Err(Error::UnsupportedQuotient(format!(
                        "edge {} is reversed by the map",
                        c.edge_display(r)
                    )));
                }
                break;
            }
        }
    }

    let vertices = vreps.iter().map(|&v| c.vertices[v].clone()).collect();
    let edges = ereps
        .iter()
        .map(|&e| {
            let x = &c.edges[e];
            Edge { tail: vid[x.tail], head: vid[x.head], label: x.label.clone() }
        })
        .collect();
    let shifts = face_shifts(c, &ind, &freps);
    let mut qlen = Vec::with_capacity(freps.len());
    let mut faces = Vec::with_capacity(freps.len());
    for &f in &freps {
        let face = &c.faces[f];
        let r = face_stabilizer(c, &ind, f);
        let g = if r == 0 { face.len() } else { face.len().gcd(&r) };
        qlen.push(g);
        faces.push(Face {
            name: face.name.clone(),
            cycle: face.cycle[..g].iter().map(|&v| vid[v]).collect(),
            slots: face.slots[..g]
                .iter()
                .map(|s| SlotEdge { edge: eid[s.edge], forward: s.forward == along[s.edge] })
                .collect(),
        });
    }

    let (_, preps) = orbits(c.pairings.len(), |p| ind.pairing_map[p]);
    let mut pairings = Vec::with_capacity(preps.len());
    for &p in &preps {
        let g = &c.pairings[p];
        let (src, dst) = (fid[g.source], fid[g.target]);
        if src == dst {
            return Err(Error::UnsupportedQuotient(format!("pairing {} joins two faces of the same orbit", g.name)));
        }
        let (ls, lt) = (c.faces[g.source].len(), c.faces[g.target].len());
        let (ts, tt) = (shifts[g.source], shifts[g.target]);
        let map: Vec<usize> = (0..qlen[src]).map(|k| (g.map[(k + ts) % ls] + lt - tt) % lt % qlen[dst]).collect();
        let mut hit = vec![false; qlen[dst]];
        for &m in &map {
            hit[m] = true;
        }
        if qlen[src] != qlen[dst] || hit.contains(&false) {
            return Err(Error::UnsupportedQuotient(format!("pairing {} does not descend", g.name)));
        }
        pairings.push(Pairing { name: g.name.clone(), source: src, target: dst, map });
    }

    let q = PairedComplex { name: format!("{}/{}", c.name, a.name), vertices, edges, faces, pairings };
    q.ensure_valid()?;
    Ok(q)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ComponentKind {
    CollapsedEdgeClass,
    /// Encoded rule: the rotation fixes the centres of its invariant faces,
    /// so the axis through them is singular with index equal to the
    /// stabilizer order.
    RotationAxis,
}

impl fmt::Display for ComponentKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ComponentKind::CollapsedEdgeClass => "collapsed-edge-class",
            ComponentKind::RotationAxis => "rotation-axis",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SingularComponent {
    pub kind: ComponentKind,
    pub branching_index: usize,
    pub upstairs_orbit_size: usize,
    /// Edge class or face pair in the base complex.
    pub location: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SingularityReport {
    pub base_family: FamilyId,
    pub base_n: usize,
    pub covering_degree: usize,
    pub components: Vec<SingularComponent>,
    /// The quotient matches the family builder at `base_n` cell for cell.
    pub base_matches_builder: bool,
}

impl SingularityReport {
    pub fn is_strongly_cyclic(&self) -> bool {
        self.components.iter().all(|c| c.branching_index == self.covering_degree)
    }
}

impl fmt::Display for SingularityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "base: {}({})", self.base_family, self.base_n)?;
        writeln!(f, "base matches builder: {}", if self.base_matches_builder { "yes" } else { "no" })?;
        writeln!(f, "covering degree: {}", self.covering_degree)?;
        writeln!(f, "components: {}", self.components.len())?;
        for c in &self.components {
            writeln!(
                f,
                "  {} at {}: index {}, upstairs orbit size {}",
                c.kind, c.location, c.branching_index, c.upstairs_orbit_size
            )?;
        }
        writeln!(f, "strongly cyclic: {}", if self.is_strongly_cyclic() { "yes" } else { "no" })?;
        if self.components.iter().any(|c| c.kind == ComponentKind::RotationAxis) {
            writeln!(f, "note: the rotation-axis component comes from the fixed centres of the invariant faces, not from the cell data")?;
        }
        Ok(())
    }
}

pub fn singularity_report(family: FamilyId, n: usize, step: usize) -> Result<SingularityReport> {
    let a = rotation(family, n, step)?;
    let up = family.build(n)?;
    let ind = induced_checked(&up, &a)?;
    let down = quotient_complex(&up, &a)?;
    let base_n = n.gcd(&step);

    let (eid, _) = orbits(up.edges.len(), |e| ind.edge_map[e].0);
    let up_classes = up.edge_orbits()?;
    let down_classes = down.edge_orbits()?;
    let down_class_of = down.edge_class_index(&down_classes);

    let mut components = Vec::new();
    for (ci, class) in down_classes.iter().enumerate() {
        let above: Vec<&crate::complex::EdgeOrbit> =
            up_classes.iter().filter(|u| down_class_of[eid[u.representative]] == ci).collect();
        let size = above.first().map_or(0, |u| u.len());
        if size > class.len() {
            components.push(SingularComponent {
                kind: ComponentKind::CollapsedEdgeClass,
                branching_index: size / class.len(),
                upstairs_orbit_size: size,
                location: format!("edge class of {}", down.edge_display(class.representative)),
            });
        }
    }

    let fixed: Vec<usize> = (0..up.faces.len()).filter(|&f| face_stabilizer(&up, &ind, f) != 0).collect();
    let fixed_pairs: Vec<&Pairing> =
        up.pairings.iter().filter(|p| fixed.contains(&p.source) || fixed.contains(&p.target)).collect();
    match fixed_pairs.as_slice() {
        [] => {}
        [p] => {
            let (s, t) = (p.source, p.target);
            if !fixed.contains(&s) || !fixed.contains(&t) || fixed.len() != 2 {
                return Err(Error::UnsupportedQuotient("invariant faces are not paired with each other".into()));
            }
            let len = up.faces[s].len();
            let r = face_stabilizer(&up, &ind, s);
            components.push(SingularComponent {
                kind: ComponentKind::RotationAxis,
                branching_index: len / len.gcd(&r),
                upstairs_orbit_size: 1,
                location: format!("centres of {} and {}", up.faces[s].name, up.faces[t].name),
            });
        }
        _ => return Err(Error::UnsupportedQuotient("more than one invariant face pair".into())),
    }

    let base_matches_builder = down.same_cells(&family.build(base_n)?);
    Ok(SingularityReport { base_family: family, base_n, covering_degree: ind.order, components, base_matches_builder })
}
