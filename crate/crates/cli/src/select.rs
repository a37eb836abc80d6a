//! Resolving subgroup selectors against a computed lattice.
//!
//! Normal subgroups: `1`/`trivial`, `G`, `center`, `An` (the unique
//! index-2 normal subgroup), `gens=[w,...]` at the group's degree, or any
//! group spec. A group spec is matched by elements first and otherwise
//! must be isomorphic to exactly one normal subgroup.

use burnside_core::catalog::build;
use burnside_core::{closure, is_isomorphic, Analysis, Error, Permutation, Result};

pub fn normal(analysis: &Analysis, spec: &str) -> Result<usize> {
    let l = &analysis.lattice;
    let spec = spec.trim();
    let index = match spec {
        "1" | "trivial" => l.trivial(),
        "G" => l.top(),
        "center" | "Z" => center(analysis)?,
        "An" => {
            let order = l.group().order();
            let candidates: Vec<usize> = l
                .normal_subgroups()
                .into_iter()
                .filter(|&n| l.order(n) * 2 == order)
                .collect();
            match candidates[..] {
                [n] => n,
                [] => {
                    return Err(usage(format!(
                        "{} has no normal subgroup of index 2",
                        l.group().name()
                    )))
                }
                _ => {
                    return Err(usage(format!(
                        "{} has several normal subgroups of index 2",
                        l.group().name()
                    )))
                }
            }
        }
        _ if spec.starts_with("gens=") && !spec.contains(';') => from_words(analysis, spec)?,
        _ => from_group_spec(analysis, spec)?,
    };
    if !l.is_normal(index) {
        return Err(usage(format!(
            "{spec} is not a normal subgroup of {}",
            l.group().name()
        )));
    }
    Ok(index)
}

/// A cyclic subgroup: `1`/`trivial`, a single cycle word such as `(123)`,
/// or `gens=[w,...]` generating a cyclic subgroup.
pub fn cyclic(analysis: &Analysis, spec: &str) -> Result<usize> {
    let l = &analysis.lattice;
    let spec = spec.trim();
    let index = match spec {
        "1" | "trivial" => l.trivial(),
        _ if spec.starts_with("gens=") => from_words(analysis, spec)?,
        _ => {
            let degree = l.group().degree();
            let g = Permutation::parse_cycles(spec, degree)?;
            find(analysis, &[g])?
        }
    };
    if !l.is_cyclic(index) {
        return Err(usage(format!("{spec} does not generate a cyclic subgroup")));
    }
    Ok(index)
}

fn usage(msg: String) -> Error {
    Error::Precondition(msg)
}

fn find(analysis: &Analysis, gens: &[Permutation]) -> Result<usize> {
    let group = analysis.lattice.group();
    if let Some(g) = gens.iter().find(|g| !group.contains(g)) {
        return Err(usage(format!("{g} is not an element of {}", group.name())));
    }
    let sub = closure(gens, group.degree())?;
    analysis
        .lattice
        .find_elements(sub.elements())
        .ok_or_else(|| Error::Consistency("closure of elements is missing from the lattice".into()))
}

fn from_words(analysis: &Analysis, spec: &str) -> Result<usize> {
    let inner = spec
        .strip_prefix("gens=")
        .and_then(|s| s.trim().strip_prefix('['))
        .and_then(|s| s.strip_suffix(']'))
        .ok_or_else(|| Error::Parse(format!("expected gens=[...] in {spec:?}")))?;
    let degree = analysis.lattice.group().degree();
    let gens: Vec<Permutation> = split_words(inner)
        .into_iter()
        .map(|w| Permutation::parse_cycles(w, degree))
        .collect::<Result<_>>()?;
    find(analysis, &gens)
}

fn split_words(s: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0;
    let mut start = 0;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push(s[start..i].trim());
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(s[start..].trim());
    out.retain(|w| !w.is_empty());
    out
}

fn center(analysis: &Analysis) -> Result<usize> {
    let l = &analysis.lattice;
    let t = l.table();
    let gens: Vec<usize> = l
        .group()
        .generators()
        .iter()
        .map(|g| l.group().index_of(g).expect("generator lies in group"))
        .collect();
    let elements: Vec<Permutation> = (0..t.len())
        .filter(|&z| gens.iter().all(|&g| t.mul(z, g) == t.mul(g, z)))
        .map(|z| l.group().element(z).clone())
        .collect();
    l.find_elements(&elements)
        .ok_or_else(|| Error::Consistency("center is missing from the lattice".into()))
}

fn from_group_spec(analysis: &Analysis, spec: &str) -> Result<usize> {
    let l = &analysis.lattice;
    let wanted =
        build(spec).map_err(|e| usage(format!("unknown subgroup selector {spec:?}: {e}")))?;
    if wanted.degree() == l.group().degree() {
        if let Some(i) = l.find_elements(wanted.elements()) {
            return Ok(i);
        }
    }
    let mut matches = Vec::new();
    for n in l.normal_subgroups() {
        if l.order(n) == wanted.order() && is_isomorphic(&l.subgroup_as_group(n)?, &wanted)? {
            matches.push(n);
        }
    }
    match matches[..] {
        [n] => Ok(n),
        [] => Err(usage(format!(
            "{} has no normal subgroup isomorphic to {spec}",
            l.group().name()
        ))),
        _ => Err(usage(format!(
            "{spec} matches {} normal subgroups of {}; use gens=[...]",
            matches.len(),
            l.group().name()
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn analysis(spec: &str) -> Analysis {
        Analysis::new(&build(spec).unwrap()).unwrap()
    }

    #[test]
    fn named_selectors() {
        let s4 = analysis("S4");
        let l = &s4.lattice;
        assert_eq!(normal(&s4, "1").unwrap(), l.trivial());
        assert_eq!(normal(&s4, "G").unwrap(), l.top());
        assert_eq!(l.order(normal(&s4, "An").unwrap()), 12);
        assert_eq!(normal(&s4, "A4").unwrap(), normal(&s4, "An").unwrap());
        assert_eq!(normal(&s4, "center").unwrap(), l.trivial());
        assert_eq!(l.order(normal(&s4, "gens=[(12)(34),(13)(24)]").unwrap()), 4);
    }

    #[test]
    fn isomorphism_fallback() {
        let a = analysis("A4 x C2");
        let n = normal(&a, "A4").unwrap();
        assert_eq!(a.lattice.order(n), 12);
        // three normal subgroups of order 2 in C2 x C2 x C2
        assert!(normal(&analysis("C2 x C2 x C2"), "C2").is_err());
    }

    #[test]
    fn rejects_non_normal_and_non_cyclic() {
        let s4 = analysis("S4");
        assert!(normal(&s4, "gens=[(12)]").is_err());
        assert!(normal(&s4, "S3").is_err());
        assert!(cyclic(&s4, "gens=[(12),(34)]").is_err());
        assert_eq!(s4.lattice.order(cyclic(&s4, "(1234)").unwrap()), 4);
        assert!(cyclic(&s4, "(1234").is_err());
    }
}
