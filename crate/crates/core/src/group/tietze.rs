//! Tietze moves and the scripted reductions of the family presentations.

use crate::error::{Error, Result};
use crate::families::FamilyId;
use crate::group::extract::presentation_from_pairings;
use crate::group::presentation::Presentation;
use crate::group::word::Word;

/// If `r` contains `g` exactly once, returns `w` with `g = w` a consequence
/// of `r`.
pub fn solve_for(r: &Word, g: &str) -> Option<Word> {
    if r.occurrences(g) != 1 {
        return None;
    }
    let k = r.letters.iter().position(|l| l.gen == g)?;
    let rot = r.rotate(k);
    let rest = Word::new(rot.letters[1..].to_vec());
    // g^e rest = 1  =>  g = rest^-1 (e = 1) or g = rest (e = -1)
    Some(if rot.letters[0].inv { rest } else { rest.inverse() }.free_reduce())
}

/// Indices of relators that define `g`, shortest first then lowest index.
pub fn defining_relators(p: &Presentation, g: &str) -> Vec<usize> {
    let mut v: Vec<usize> = (0..p.relators.len()).filter(|&i| p.relators[i].occurrences(g) == 1).collect();
    v.sort_by_key(|&i| (p.relators[i].len(), i));
    v
}

/// Removes `g` using relator `idx` as its definition.
pub fn tietze_eliminate_using(p: &Presentation, g: &str, idx: usize) -> Result<Presentation> {
    if p.generator_index(g).is_none() {
        return Err(Error::Name(g.to_string()));
    }
    let image = p.relators.get(idx).and_then(|r| solve_for(r, g)).ok_or_else(|| Error::Elimination(g.to_string()))?;
    let generators = p.generators.iter().filter(|x| *x != g).cloned().collect();
    let relators = p
        .relators
        .iter()
        .enumerate()
        .filter(|(i, _)| *i != idx)
        .map(|(_, r)| r.substitute(g, &image).free_reduce())
        .filter(|r| !r.is_empty())
        .collect();
    Presentation::new(generators, relators)
}

/// Removes `g` using its shortest defining relator (lowest index on ties).
pub fn tietze_eliminate(p: &Presentation, g: &str) -> Result<Presentation> {
    if p.generator_index(g).is_none() {
        return Err(Error::Name(g.to_string()));
    }
    let idx = *defining_relators(p, g).first().ok_or_else(|| Error::Elimination(g.to_string()))?;
    tietze_eliminate_using(p, g, idx)
}

/// Repeatedly eliminates the generator with the shortest defining relator
/// (lowest generator index on ties) until none is left.
pub fn simplify(p: &Presentation) -> Presentation {
    let mut cur = p.clone();
    loop {
        let best = cur
            .generators
            .iter()
            .enumerate()
            .filter_map(|(gi, g)| defining_relators(&cur, g).first().map(|&ri| (cur.relators[ri].len(), gi, ri)))
            .min();
        let Some((_, gi, ri)) = best else {
            return cur;
        };
        let g = cur.generators[gi].clone();
        cur = tietze_eliminate_using(&cur, &g, ri).expect("defining relator was found");
    }
}

/// Relator that defines `g` purely in terms of `allowed` generators,
/// lowest index first.
fn defining_in_terms_of(p: &Presentation, g: &str, allowed: &dyn Fn(&str) -> bool) -> Option<usize> {
    (0..p.relators.len()).find(|&i| {
        let r = &p.relators[i];
        r.occurrences(g) == 1 && r.letters.iter().all(|l| l.gen == g || allowed(&l.gen))
    })
}

/// Removes `g` when several relators `R_1..R_k` each define it (`g = w_i`),
/// replacing them by the consecutive consequences `w_i w_{i+1}^-1` (indices
/// cyclic). Duplicate relators are dropped.
pub fn eliminate_chain(p: &Presentation, g: &str, allowed: &dyn Fn(&str) -> bool) -> Result<Presentation> {
    let defs: Vec<(usize, Word)> = (0..p.relators.len())
        .filter_map(|i| {
            let r = &p.relators[i];
            if r.letters.iter().all(|l| l.gen == g || allowed(&l.gen)) {
                solve_for(r, g).map(|w| (i, w))
            } else {
                None
            }
        })
        .collect();
    if defs.is_empty() {
        return Err(Error::Elimination(g.to_string()));
    }
    let image = defs[0].1.clone();
    let mut relators: Vec<Word> = Vec::new();
    for (i, r) in p.relators.iter().enumerate() {
        if defs.iter().any(|(j, _)| *j == i) {
            continue;
        }
        let s = r.substitute(g, &image).free_reduce();
        if !s.is_empty() {
            relators.push(s);
        }
    }
    let k = defs.len();
    for i in 0..k {
        let rel = defs[i].1.concat(&defs[(i + 1) % k].1.inverse()).free_reduce();
        if rel.is_empty() {
            continue;
        }
        let nf = rel.cyclic_normal_form();
        if relators.iter().any(|r| r.cyclic_normal_form() == nf) {
            continue;
        }
        relators.push(rel);
    }
    let generators = p.generators.iter().filter(|x| *x != g).cloned().collect();
    Presentation::new(generators, relators)
}

/// The scripted reduction: `b_i` then `a_i` (each via its relator written in
/// the `c` generators), then `d` by [`eliminate_chain`]. Returns every
/// intermediate presentation, starting with the pairing presentation.
pub fn reduction_trace(family: FamilyId, n: usize) -> Result<Vec<Presentation>> {
    let complex = family.build(n)?;
    let mut cur = presentation_from_pairings(&complex)?;
    let mut trace = vec![cur.clone()];
    let is_c = |g: &str| g.starts_with('c');
    for letter in ['b', 'a'] {
        for i in 1..=n {
            let g = format!("{letter}{i}");
            let idx = defining_in_terms_of(&cur, &g, &is_c).ok_or_else(|| Error::Elimination(g.clone()))?;
            cur = tietze_eliminate_using(&cur, &g, idx)?;
            trace.push(cur.clone());
        }
    }
    cur = eliminate_chain(&cur, "d", &is_c)?;
    trace.push(cur);
    Ok(trace)
}

/// The `n`-generator presentation on `c_1..c_n`.
pub fn reduced_family_presentation(family: FamilyId, n: usize) -> Result<Presentation> {
    Ok(reduction_trace(family, n)?.pop().expect("trace is never empty"))
}
