//! Builders for the standard permutation groups and a small parser for
//! group specifications.
//!
//! Grammar:
//!
//! ```text
//! spec   := factor ( "x" factor )*
//! factor := "S" n | "A" n | "C" n | "D" n | "gens=[" word ("," word)* ";" n "]"
//! ```
//!
//! `Dn` is the dihedral group of order `2n`. A direct product places its
//! factors on disjoint point sets, so its degree is the sum of the factor
//! degrees. `gens=[(12345),(2354);5]` is the closure of the listed cycle
//! words at degree 5.

use crate::error::{Error, Result};
use crate::group::{closure_with_limit, FiniteGroup, DEFAULT_CLOSURE_LIMIT};
use crate::perm::Permutation;

pub fn symmetric(n: usize) -> Result<FiniteGroup> {
    symmetric_limited(n, DEFAULT_CLOSURE_LIMIT)
}

fn symmetric_limited(n: usize, limit: usize) -> Result<FiniteGroup> {
    check_n(n, 'S')?;
    let mut gens = Vec::new();
    if n >= 2 {
        gens.push(Permutation::from_cycles(n, &[(0..n).collect()])?);
        gens.push(Permutation::from_cycles(n, &[vec![0, 1]])?);
    }
    Ok(closure_with_limit(&gens, n, limit)?.with_name(format!("S{n}")))
}

pub fn alternating(n: usize) -> Result<FiniteGroup> {
    alternating_limited(n, DEFAULT_CLOSURE_LIMIT)
}

fn alternating_limited(n: usize, limit: usize) -> Result<FiniteGroup> {
    check_n(n, 'A')?;
    let gens: Vec<Permutation> = (2..n)
        .map(|k| Permutation::from_cycles(n, &[vec![0, 1, k]]))
        .collect::<Result<_>>()?;
    Ok(closure_with_limit(&gens, n, limit)?.with_name(format!("A{n}")))
}

pub fn cyclic(n: usize) -> Result<FiniteGroup> {
    cyclic_limited(n, DEFAULT_CLOSURE_LIMIT)
}

fn cyclic_limited(n: usize, limit: usize) -> Result<FiniteGroup> {
    check_n(n, 'C')?;
    let gens = if n >= 2 {
        vec![Permutation::from_cycles(n, &[(0..n).collect()])?]
    } else {
        Vec::new()
    };
    Ok(closure_with_limit(&gens, n, limit)?.with_name(format!("C{n}")))
}

/// Dihedral group of order `2n`: the symmetries of an `n`-gon for
/// `n ≥ 3`, with `D1 ≅ C2` and `D2 ≅ C2 × C2` realised on 2 and 4 points.
pub fn dihedral(n: usize) -> Result<FiniteGroup> {
    dihedral_limited(n, DEFAULT_CLOSURE_LIMIT)
}

fn dihedral_limited(n: usize, limit: usize) -> Result<FiniteGroup> {
    check_n(n, 'D')?;
    let group = match n {
        1 => closure_with_limit(&[Permutation::from_cycles(2, &[vec![0, 1]])?], 2, limit)?,
        2 => closure_with_limit(
            &[
                Permutation::from_cycles(4, &[vec![0, 1], vec![2, 3]])?,
                Permutation::from_cycles(4, &[vec![0, 2], vec![1, 3]])?,
            ],
            4,
            limit,
        )?,
        _ => {
            let rotation = Permutation::from_cycles(n, &[(0..n).collect()])?;
            let reflection = Permutation::from_images((0..n).map(|i| (n - i) % n).collect())?;
            closure_with_limit(&[rotation, reflection], n, limit)?
        }
    };
    Ok(group.with_name(format!("D{n}")))
}

/// External direct product on disjoint point sets.
pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup) -> Result<FiniteGroup> {
    direct_product_limited(a, b, DEFAULT_CLOSURE_LIMIT)
}

fn direct_product_limited(a: &FiniteGroup, b: &FiniteGroup, limit: usize) -> Result<FiniteGroup> {
    let degree = a.degree() + b.degree();
    let gens: Vec<Permutation> = a
        .generators()
        .iter()
        .map(|g| g.embed(0, degree))
        .chain(b.generators().iter().map(|g| g.embed(a.degree(), degree)))
        .collect();
    let name = format!("{} x {}", a.name(), b.name());
    Ok(closure_with_limit(&gens, degree, limit)?.with_name(name))
}

fn check_n(n: usize, family: char) -> Result<()> {
    if n < 1 {
        return Err(Error::Parse(format!("{family}{n}: n must be at least 1")));
    }
    Ok(())
}

/// Parses and builds a group from the specification mini-language.
pub fn build(spec: &str) -> Result<FiniteGroup> {
    build_with_limit(spec, DEFAULT_CLOSURE_LIMIT)
}

/// [`build`] with a ceiling on the order of every group formed on the way.
pub fn build_with_limit(spec: &str, limit: usize) -> Result<FiniteGroup> {
    let factors = split_top_level(spec, 'x');
    if factors.iter().any(|f| f.trim().is_empty()) {
        return Err(Error::Parse(format!("empty factor in {spec:?}")));
    }
    let mut iter = factors.into_iter();
    let first = build_factor(iter.next().unwrap_or_default().trim(), limit)?;
    iter.try_fold(first, |acc, f| {
        direct_product_limited(&acc, &build_factor(f.trim(), limit)?, limit)
    })
}

fn build_factor(s: &str, limit: usize) -> Result<FiniteGroup> {
    if let Some(body) = s.strip_prefix("gens=") {
        return build_from_generators(s, body, limit);
    }
    let mut chars = s.chars();
    let family = chars
        .next()
        .ok_or_else(|| Error::Parse("empty group spec".into()))?;
    let n: usize = chars
        .as_str()
        .parse()
        .map_err(|_| Error::Parse(format!("cannot parse group spec {s:?}")))?;
    match family {
        'S' => symmetric_limited(n, limit),
        'A' => alternating_limited(n, limit),
        'C' => cyclic_limited(n, limit),
        'D' => dihedral_limited(n, limit),
        _ => Err(Error::Parse(format!("unknown group family in {s:?}"))),
    }
}

fn build_from_generators(full: &str, body: &str, limit: usize) -> Result<FiniteGroup> {
    let inner = body
        .trim()
        .strip_prefix('[')
        .and_then(|b| b.strip_suffix(']'))
        .ok_or_else(|| Error::Parse(format!("expected gens=[...;n] in {full:?}")))?;
    let (words, degree) = inner
        .rsplit_once(';')
        .ok_or_else(|| Error::Parse(format!("missing ';degree' in {full:?}")))?;
    let degree: usize = degree
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("bad degree in {full:?}")))?;
    if degree < 1 {
        return Err(Error::Parse(format!(
            "degree must be at least 1 in {full:?}"
        )));
    }
    let gens: Vec<Permutation> = split_top_level(words, ',')
        .into_iter()
        .map(str::trim)
        .filter(|w| !w.is_empty())
        .map(|w| Permutation::parse_cycles(w, degree))
        .collect::<Result<_>>()?;
    Ok(closure_with_limit(&gens, degree, limit)?.with_name(full.trim()))
}

/// Splits on `sep` outside parentheses and brackets.
fn split_top_level(s: &str, sep: char) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in s.char_indices() {
        match c {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            _ if c == sep && depth == 0 => {
                out.push(&s[start..i]);
                start = i + c.len_utf8();
            }
            _ => {}
        }
    }
    out.push(&s[start..]);
    out
}

/// Group specs exercised by the regression suite: every group of order at
/// most 24 listed here, plus `A5` and `S5`.
pub const CATALOG: &[&str] = &[
    "C1",
    "C2",
    "C3",
    "C4",
    "C2 x C2",
    "C5",
    "C6",
    "S3",
    "C7",
    "C8",
    "C4 x C2",
    "C2 x C2 x C2",
    "D4",
    "gens=[(1234)(5678),(1537)(2846);8]",
    "C9",
    "C3 x C3",
    "C10",
    "D5",
    "C11",
    "C12",
    "C6 x C2",
    "D6",
    "A4",
    "C13",
    "D7",
    "C4 x C4",
    "D8",
    "D4 x C2",
    "C2 x C2 x C2 x C2",
    "S3 x C3",
    "C3 x C3 x C2",
    "D10",
    "S3 x C4",
    "S3 x C2 x C2",
    "D12",
    "A4 x C2",
    "D4 x C3",
    "S4",
    "A5",
    "S5",
];

/// Builds every catalog group of order at most `max_order`.
pub fn catalog_groups(max_order: usize) -> Result<Vec<FiniteGroup>> {
    let mut out = Vec::new();
    for spec in CATALOG {
        let g = build(spec)?;
        if g.order() <= max_order {
            out.push(g);
        }
    }
    Ok(out)
}
