//! Permutations of `{0, …, n-1}` in image-array form.
//!
//! Composition follows the convention that the right factor acts first:
//! `a.compose(&b)` maps `i` to `a(b(i))`. Cycle notation uses the points
//! `1..=n`, e.g. `(12)(34)`; when the degree exceeds 9 the points inside a
//! cycle are separated by commas or whitespace, e.g. `(1,2,10)`.

use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree).collect(),
        }
    }

    /// Builds a permutation from its image array, checking bijectivity.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return Err(Error::InvalidPermutation(format!(
                    "{images:?} is not a bijection on 0..{n}"
                )));
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation from zero-indexed cycles. Cycles are applied
    /// right to left, so overlapping cycles compose like a word.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut acc = Permutation::identity(degree);
        for cycle in cycles.iter().rev() {
            let mut images: Vec<usize> = (0..degree).collect();
            let mut seen = std::collections::HashSet::new();
            for (k, &p) in cycle.iter().enumerate() {
                if p >= degree {
                    return Err(Error::InvalidPermutation(format!(
                        "point {} out of range for degree {degree}",
                        p + 1
                    )));
                }
                if !seen.insert(p) {
                    return Err(Error::InvalidPermutation(format!(
                        "point {} repeated inside a cycle",
                        p + 1
                    )));
                }
                images[p] = cycle[(k + 1) % cycle.len()];
            }
            acc = Permutation { images }.compose(&acc)?;
        }
        Ok(acc)
    }

    /// Parses a cycle word such as `(12)(345)` or `(1,2,10)` with points
    /// `1..=degree`. The empty word and `()` denote the identity.
    pub fn parse_cycles(word: &str, degree: usize) -> Result<Self> {
        let mut cycles = Vec::new();
        let mut rest = word.trim();
        while !rest.is_empty() {
            let body_start = rest
                .strip_prefix('(')
                .ok_or_else(|| Error::Parse(format!("expected '(' in cycle word {word:?}")))?;
            let close = body_start
                .find(')')
                .ok_or_else(|| Error::Parse(format!("unbalanced parenthesis in {word:?}")))?;
            let body = &body_start[..close];
            let points = parse_cycle_body(body)?;
            let zero: Vec<usize> = points
                .into_iter()
                .map(|p| {
                    if p == 0 || p > degree {
                        Err(Error::Parse(format!(
                            "point {p} outside 1..={degree} in {word:?}"
                        )))
                    } else {
                        Ok(p - 1)
                    }
                })
                .collect::<Result<_>>()?;
            if zero.len() > 1 {
                cycles.push(zero);
            }
            rest = body_start[close + 1..].trim_start();
        }
        Permutation::from_cycles(degree, &cycles)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, point: usize) -> usize {
        self.images[point]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// `i ↦ self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(self.compose_unchecked(other))
    }

    pub(crate) fn compose_unchecked(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x] = i;
        }
        Permutation { images }
    }

    /// Disjoint cycles of length at least two, each starting at its
    /// smallest point, ordered by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.images[start];
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.images[x];
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    /// Least `k ≥ 1` with `self^k = 1`, i.e. the lcm of the cycle lengths.
    pub fn order(&self) -> u64 {
        self.cycles()
            .iter()
            .fold(1u64, |acc, c| acc.lcm(&(c.len() as u64)))
    }

    pub fn is_even(&self) -> bool {
        self.cycles().iter().map(|c| c.len() - 1).sum::<usize>() % 2 == 0
    }

    /// Shifts the permutation onto the points `offset..offset+degree` of a
    /// larger set of `total` points, fixing everything else.
    pub fn embed(&self, offset: usize, total: usize) -> Permutation {
        let mut images: Vec<usize> = (0..total).collect();
        for (i, &x) in self.images.iter().enumerate() {
            images[offset + i] = offset + x;
        }
        Permutation { images }
    }
}

fn parse_cycle_body(body: &str) -> Result<Vec<usize>> {
    let body = body.trim();
    if body.is_empty() {
        return Ok(Vec::new());
    }
    let separated = body.contains(|c: char| c == ',' || c.is_whitespace());
    if separated {
        body.split(|c: char| c == ',' || c.is_whitespace())
            .filter(|s| !s.is_empty())
            .map(|s| {
                s.parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad point {s:?} in cycle ({body})")))
            })
            .collect()
    } else {
        body.chars()
            .map(|c| {
                c.to_digit(10)
                    .map(|d| d as usize)
                    .ok_or_else(|| Error::Parse(format!("bad point {c:?} in cycle ({body})")))
            })
            .collect()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        let sep = if self.degree() > 9 { "," } else { "" };
        for cycle in cycles {
            let pts: Vec<String> = cycle.iter().map(|p| (p + 1).to_string()).collect();
            write!(f, "({})", pts.join(sep))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(word: &str, n: usize) -> Permutation {
        Permutation::parse_cycles(word, n).unwrap()
    }

    #[test]
    fn transposition_squares_to_identity() {
        let t = p("(12)", 2);
        assert!(t.compose(&t).unwrap().is_identity());
    }

    #[test]
    fn identity_is_neutral() {
        let x = p("(132)", 3);
        let e = Permutation::identity(3);
        assert_eq!(e.compose(&x).unwrap(), x);
        assert_eq!(x.compose(&e).unwrap(), x);
    }

    #[test]
    fn right_factor_acts_first() {
        // (123)∘(12): 1 -> 2 -> 3, 2 -> 1 -> 2, 3 -> 3 -> 1.
        let prod = p("(123)", 3).compose(&p("(12)", 3)).unwrap();
        assert_eq!(prod, p("(13)", 3));
        assert_eq!(p("(123)(12)", 3), prod);
    }

    #[test]
    fn degree_mismatch_is_an_error() {
        let err = p("(12)", 2).compose(&p("(12)", 3)).unwrap_err();
        assert_eq!(err, Error::DegreeMismatch { left: 2, right: 3 });
    }

    #[test]
    fn orders() {
        assert_eq!(Permutation::identity(4).order(), 1);
        assert_eq!(p("(12)(34)", 4).order(), 2);
        assert_eq!(p("(12345)", 5).order(), 5);
        assert_eq!(p("(12)(345)", 5).order(), 6);
    }

    #[test]
    fn display_roundtrip() {
        for (w, n) in [
            ("(12)(34)", 4),
            ("(2354)", 5),
            ("()", 3),
            ("(1,2,10)(3,11)", 11),
        ] {
            let x = p(w, n);
            assert_eq!(x.to_string(), w);
            assert_eq!(p(&x.to_string(), n), x);
        }
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(Permutation::parse_cycles("(16)", 5).is_err());
        assert!(Permutation::parse_cycles("(1a)", 5).is_err());
        assert!(Permutation::parse_cycles("(12", 5).is_err());
        assert!(Permutation::parse_cycles("(121)", 5).is_err());
        assert!(Permutation::from_images(vec![0, 0, 1]).is_err());
    }

    #[test]
    fn inverse_and_parity() {
        let x = p("(2354)", 5);
        assert!(x.compose(&x.inverse()).unwrap().is_identity());
        assert!(!x.is_even());
        assert!(p("(12345)", 5).is_even());
    }
}
