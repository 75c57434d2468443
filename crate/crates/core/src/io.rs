//! Line-oriented text formats for complexes and presentations.
//!
//! Complex document:
//!
//! ```text
//! pgv1
//! name m24(1)
//! vertices P1 Q1 R1 S1
//! edge e0 P1 P1 x1
//! edge e1 P1 Q1 y1
//! face A1 P1 P1 Q1 : e0 e2 -e1
//! pair a1 A1 Abar1 : 0 1 2 > 0 1 2
//! ```
//!
//! An edge line is `edge NAME TAIL HEAD [LABEL]`. A face line lists the
//! boundary cycle, then after `:` the edge in each slot, prefixed with `-`
//! when the slot runs against the edge. A pair line gives source and target
//! slot positions that are matched one to one.
//!
//! Presentation document:
//!
//! ```text
//! gens: a1 b1 d
//! rel: a1 b1 -d
//! ```

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use crate::complex::{Edge, Face, PairedComplex, Pairing, SlotEdge};
use crate::error::{Error, Result};
use crate::group::presentation::Presentation;
use crate::group::word::{Letter, Word};

pub const FORMAT_HEADER: &str = "pgv1";

pub fn serialize_complex(c: &PairedComplex) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{FORMAT_HEADER}");
    let _ = writeln!(out, "name {}", c.name);
    let _ = writeln!(out, "vertices {}", c.vertices.join(" "));
    for (i, e) in c.edges.iter().enumerate() {
        let _ = write!(out, "edge e{i} {} {}", c.vertices[e.tail], c.vertices[e.head]);
        if let Some(l) = &e.label {
            let _ = write!(out, " {l}");
        }
        out.push('\n');
    }
    for f in &c.faces {
        let cycle: Vec<&str> = f.cycle.iter().map(|&v| c.vertices[v].as_str()).collect();
        let slots: Vec<String> =
            f.slots.iter().map(|s| format!("{}e{}", if s.forward { "" } else { "-" }, s.edge)).collect();
        let _ = writeln!(out, "face {} {} : {}", f.name, cycle.join(" "), slots.join(" "));
    }
    for p in &c.pairings {
        let src: Vec<String> = (0..p.map.len()).map(|k| k.to_string()).collect();
        let dst: Vec<String> = p.map.iter().map(|k| k.to_string()).collect();
        let _ = writeln!(
            out,
            "pair {} {} {} : {} > {}",
            p.name,
            c.faces[p.source].name,
            c.faces[p.target].name,
            src.join(" "),
            dst.join(" ")
        );
    }
    out
}

fn perr(line: usize, reason: impl Into<String>) -> Error {
    Error::Parse { line, reason: reason.into() }
}

fn lookup(map: &BTreeMap<String, usize>, key: &str, what: &str, line: usize) -> Result<usize> {
    map.get(key).copied().ok_or_else(|| perr(line, format!("unknown {what} `{key}`")))
}

fn insert_unique(map: &mut BTreeMap<String, usize>, key: &str, what: &str, line: usize) -> Result<usize> {
    let id = map.len();
    if map.insert(key.to_string(), id).is_some() {
        return Err(perr(line, format!("duplicate {what} `{key}`")));
    }
    Ok(id)
}

fn split_colon<'a>(tokens: &'a [&'a str], line: usize) -> Result<(&'a [&'a str], &'a [&'a str])> {
    let k = tokens.iter().position(|t| *t == ":").ok_or_else(|| perr(line, "missing `:`"))?;
    Ok((&tokens[..k], &tokens[k + 1..]))
}

fn parse_positions(tokens: &[&str], line: usize) -> Result<Vec<usize>> {
    tokens.iter().map(|t| t.parse().map_err(|_| perr(line, format!("bad slot position `{t}`")))).collect()
}

/// Parses a complex document and checks its structural invariants.
pub fn parse_complex(text: &str) -> Result<PairedComplex> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty());
    match lines.next() {
        Some((_, l)) if l == FORMAT_HEADER => {}
        Some((i, l)) => return Err(perr(i, format!("expected header `{FORMAT_HEADER}`, found `{l}`"))),
        None => return Err(perr(1, "empty document")),
    }

    let mut name = None;
    let mut vertices: Vec<String> = Vec::new();
    let mut vindex = BTreeMap::new();
    let mut edges = Vec::new();
    let mut eindex = BTreeMap::new();
    let mut faces: Vec<Face> = Vec::new();
    let mut findex = BTreeMap::new();
    let mut pairings = Vec::new();
    let mut pindex = BTreeMap::new();
    let mut paired_faces = BTreeSet::new();

    for (ln, l) in lines {
        let tokens: Vec<&str> = l.split_whitespace().collect();
        match tokens[0] {
            "name" => {
                if tokens.len() != 2 {
                    return Err(perr(ln, "expected `name NAME`"));
                }
                name = Some(tokens[1].to_string());
            }
            "vertices" => {
                for v in &tokens[1..] {
                    insert_unique(&mut vindex, v, "vertex", ln)?;
                    vertices.push(v.to_string());
                }
            }
            "edge" => {
                if !(4..=5).contains(&tokens.len()) {
                    return Err(perr(ln, "expected `edge NAME TAIL HEAD [LABEL]`"));
                }
                insert_unique(&mut eindex, tokens[1], "edge", ln)?;
                edges.push(Edge {
                    tail: lookup(&vindex, tokens[2], "vertex", ln)?,
                    head: lookup(&vindex, tokens[3], "vertex", ln)?,
                    label: tokens.get(4).map(|s| s.to_string()),
                });
            }
            "face" => {
                let (head, slot_tokens) = split_colon(&tokens[1..], ln)?;
                let Some((fname, cycle_tokens)) = head.split_first() else {
                    return Err(perr(ln, "missing face name"));
                };
                if cycle_tokens.len() != slot_tokens.len() {
                    return Err(perr(ln, "ragged face: cycle and slot lists differ in length"));
                }
                insert_unique(&mut findex, fname, "face", ln)?;
                let cycle = cycle_tokens.iter().map(|v| lookup(&vindex, v, "vertex", ln)).collect::<Result<_>>()?;
                let slots = slot_tokens
                    .iter()
                    .map(|t| {
                        let (forward, e) = match t.strip_prefix('-') {
                            Some(rest) => (false, rest),
                            None => (true, *t),
                        };
                        Ok(SlotEdge { edge: lookup(&eindex, e, "edge", ln)?, forward })
                    })
                    .collect::<Result<_>>()?;
                faces.push(Face { name: fname.to_string(), cycle, slots });
            }
            "pair" => {
                let (head, corr) = split_colon(&tokens[1..], ln)?;
                let [pname, src, dst] = head else {
                    return Err(perr(ln, "expected `pair NAME SOURCE TARGET : ...`"));
                };
                let k = corr.iter().position(|t| *t == ">").ok_or_else(|| perr(ln, "missing `>`"))?;
                let from = parse_positions(&corr[..k], ln)?;
                let to = parse_positions(&corr[k + 1..], ln)?;
                insert_unique(&mut pindex, pname, "pairing", ln)?;
                let source = lookup(&findex, src, "face", ln)?;
                let target = lookup(&findex, dst, "face", ln)?;
                for f in [src, dst] {
                    if !paired_faces.insert(f.to_string()) {
                        return Err(perr(ln, format!("face doubly paired `{f}`")));
                    }
                }
                let len = faces[source].len();
                if from.len() != to.len() || from.len() != len || faces[target].len() != len {
                    return Err(perr(ln, "ragged correspondence"));
                }
                let mut map = vec![usize::MAX; len];
                for (&a, &b) in from.iter().zip(&to) {
                    if a >= len || b >= len || map[a] != usize::MAX {
                        return Err(perr(ln, "correspondence is not a bijection of slots"));
                    }
                    map[a] = b;
                }
                pairings.push(Pairing { name: pname.to_string(), source, target, map });
            }
            other => return Err(perr(ln, format!("unknown directive `{other}`"))),
        }
    }

    let c = PairedComplex { name: name.unwrap_or_default(), vertices, edges, faces, pairings };
    c.ensure_valid()?;
    Ok(c)
}

pub fn serialize_presentation(p: &Presentation) -> String {
    let mut out = format!("gens: {}", p.generators.join(" "));
    for r in &p.relators {
        out.push_str("\nrel: ");
        out.push_str(&r.to_tokens());
    }
    out
}

/// Parses a presentation document. A leading `pgv1` line is accepted.
pub fn parse_presentation(text: &str) -> Result<Presentation> {
    let mut generators: Option<Vec<String>> = None;
    let mut relators = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let ln = i + 1;
        let l = raw.trim();
        if l.is_empty() || (l == FORMAT_HEADER && generators.is_none() && relators.is_empty()) {
            continue;
        }
        if let Some(rest) = l.strip_prefix("gens:") {
            if generators.is_some() {
                return Err(perr(ln, "second `gens:` line"));
            }
            let gens: Vec<String> = rest.split_whitespace().map(str::to_string).collect();
            let mut seen = BTreeSet::new();
            for g in &gens {
                if g.starts_with('-') {
                    return Err(perr(ln, format!("generator `{g}` may not start with `-`")));
                }
                if !seen.insert(g) {
                    return Err(perr(ln, format!("duplicate generator `{g}`")));
                }
            }
            generators = Some(gens);
        } else if let Some(rest) = l.strip_prefix("rel:") {
            let gens = generators.as_ref().ok_or_else(|| perr(ln, "`rel:` before `gens:`"))?;
            let letters = rest
                .split_whitespace()
                .map(|t| {
                    let (inv, g) = match t.strip_prefix('-') {
                        Some(g) => (true, g),
                        None => (false, t),
                    };
                    if gens.iter().any(|x| x == g) {
                        Ok(Letter::new(g, inv))
                    } else {
                        Err(perr(ln, format!("unknown generator `{g}`")))
                    }
                })
                .collect::<Result<Vec<_>>>()?;
            relators.push(Word::new(letters));
        } else {
            return Err(perr(ln, format!("expected `gens:` or `rel:`, found `{l}`")));
        }
    }
    let generators = generators.ok_or_else(|| perr(1, "missing `gens:` line"))?;
    Presentation::new(generators, relators)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{build_m24, build_m25};
    use crate::group::presentation_from_pairings;

    #[test]
    fn complex_round_trip() {
        for c in [build_m24(3).unwrap(), build_m25(2).unwrap(), build_m24(1).unwrap()] {
            let text = serialize_complex(&c);
            assert_eq!(parse_complex(&text).unwrap(), c);
            assert_eq!(serialize_complex(&parse_complex(&text).unwrap()), text);
        }
    }

    #[test]
    fn m25_2_line_counts() {
        let text = serialize_complex(&build_m25(2).unwrap());
        assert_eq!(text.lines().filter(|l| l.starts_with("face ")).count(), 14);
        assert_eq!(text.lines().filter(|l| l.starts_with("pair ")).count(), 7);
    }

    #[test]
    fn doubly_paired_face_is_reported_with_line() {
        let text = serialize_complex(&build_m24(2).unwrap());
        let extra = "pair zz A1 Abar2 : 0 1 2 > 0 1 2";
        let doc = format!("{text}{extra}\n");
        let line = doc.lines().count();
        match parse_complex(&doc) {
            Err(Error::Parse { line: l, reason }) => {
                assert_eq!(l, line);
                assert!(reason.contains("face doubly paired"), "{reason}");
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn ragged_and_duplicate_inputs_fail() {
        let text = serialize_complex(&build_m24(2).unwrap());
        let ragged = text.replace("pair a1 A1 Abar1 : 0 1 2 > 0 1 2", "pair a1 A1 Abar1 : 0 1 2 > 0 1");
        assert!(matches!(parse_complex(&ragged), Err(Error::Parse { .. })));
        let dup = text.replacen("vertices P1", "vertices P1 P1", 1);
        assert!(matches!(parse_complex(&dup), Err(Error::Parse { line: 3, .. })));
        assert!(matches!(parse_complex("pgv2\n"), Err(Error::Parse { line: 1, .. })));
    }

    #[test]
    fn presentation_format() {
        let p = Presentation::new(vec!["c".into()], vec![Word::from_powers(&[("c", 3)])]).unwrap();
        assert_eq!(serialize_presentation(&p), "gens: c\nrel: c c c");
        assert_eq!(parse_presentation("pgv1\ngens: c\nrel: c c c").unwrap(), p);
    }

    #[test]
    fn relator_tokens() {
        let p = presentation_from_pairings(&build_m24(3).unwrap()).unwrap();
        let text = serialize_presentation(&p);
        assert!(text.lines().any(|l| l == "rel: a1 b3 -d"), "{text}");
        assert_eq!(parse_presentation(&text).unwrap(), p);
    }

    #[test]
    fn unknown_generator_is_a_parse_error() {
        assert!(matches!(parse_presentation("gens: a\nrel: a -b"), Err(Error::Parse { line: 2, .. })));
    }
}
