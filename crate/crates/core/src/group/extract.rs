//! Two independent routes from a paired complex to a presentation of its
//! fundamental group.

use crate::complex::{PairedComplex, UnionFind};
use crate::error::Result;
use crate::group::presentation::Presentation;
use crate::group::word::{Letter, Word};

/// Pairing route: one generator per face pairing, one relator per edge class
/// (the class's cycle word).
pub fn presentation_from_pairings(c: &PairedComplex) -> Result<Presentation> {
    let orbits = c.edge_orbits()?;
    let generators = c.pairings.iter().map(|p| p.name.clone()).collect();
    let relators = orbits.into_iter().map(|o| o.cycle_word).collect();
    Presentation::new(generators, relators)
}

/// How to choose the spanning tree of the quotient 1-skeleton.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub enum TreeStrategy {
    /// Greedy over edge classes in representative order.
    #[default]
    First,
    /// Greedy over edge classes in reverse order.
    Last,
    /// Named generators first (in the given order), then the rest in order.
    Prefer(Vec<String>),
}

/// CW route: one generator per edge class, one relator per face pair (the
/// source face boundary), plus one relator killing each spanning-tree edge.
pub fn presentation_from_cw(c: &PairedComplex, tree: &TreeStrategy) -> Result<Presentation> {
    let orbits = c.edge_orbits()?;
    let vorbits = c.vertex_orbits()?;
    let class_of = c.edge_class_index(&orbits);

    let names: Vec<String> = orbits
        .iter()
        .map(|o| c.edges[o.representative].label.clone().unwrap_or_else(|| format!("e{}", o.representative)))
        .collect();
    // sign of each edge relative to its class orientation
    let mut edge_sign = vec![1i8; c.edges.len()];
    for o in &orbits {
        for (e, s) in o.member_edges.iter().zip(&o.orientation) {
            edge_sign[*e] = *s;
        }
    }

    let mut relators = Vec::with_capacity(c.pairings.len());
    for p in &c.pairings {
        let face = &c.faces[p.source];
        let letters = face
            .slots
            .iter()
            .map(|s| {
                let along = (edge_sign[s.edge] > 0) == s.forward;
                Letter::new(names[class_of[s.edge]].clone(), !along)
            })
            .collect();
        relators.push(Word::new(letters));
    }

    let mut vclass = vec![0usize; c.vertices.len()];
    for (i, vo) in vorbits.iter().enumerate() {
        for &v in &vo.member_vertices {
            vclass[v] = i;
        }
    }
    let mut order: Vec<usize> = (0..orbits.len()).collect();
    match tree {
        TreeStrategy::First => {}
        TreeStrategy::Last => order.reverse(),
        TreeStrategy::Prefer(pref) => {
            let rank = |i: &usize| pref.iter().position(|p| *p == names[*i]).unwrap_or(pref.len());
            order.sort_by_key(|i| (rank(i), *i));
        }
    }
    let mut uf = UnionFind::new(vorbits.len());
    for i in order {
        let e = &c.edges[orbits[i].representative];
        if uf.union(vclass[e.tail], vclass[e.head]) {
            relators.push(Word::gen(names[i].clone()));
        }
    }
    Presentation::new(names, relators)
}
