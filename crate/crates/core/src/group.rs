//! Finite permutation groups given by explicit element lists.

use std::collections::{HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Default ceiling on the order of a group produced by [`closure`].
pub const DEFAULT_CLOSURE_LIMIT: usize = 20_000;

/// A finite group of permutations of `{0, …, degree-1}`.
///
/// Elements are deduplicated and sorted lexicographically on their image
/// arrays, so equal groups have identical element lists and the identity
/// is always element `0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    name: String,
    degree: usize,
    elements: Vec<Permutation>,
    generators: Vec<Permutation>,
}

impl FiniteGroup {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, index: usize) -> &Permutation {
        &self.elements[index]
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn identity(&self) -> &Permutation {
        &self.elements[0]
    }

    /// Position of `g` in the canonical element order.
    pub fn index_of(&self, g: &Permutation) -> Option<usize> {
        self.elements.binary_search(g).ok()
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        self.index_of(g).is_some()
    }

    pub fn is_abelian(&self) -> bool {
        self.generators.iter().enumerate().all(|(i, a)| {
            self.generators[i + 1..]
                .iter()
                .all(|b| a.compose_unchecked(b) == b.compose_unchecked(a))
        })
    }
}

/// Smallest group containing `generators`, with the default ceiling.
pub fn closure(generators: &[Permutation], degree: usize) -> Result<FiniteGroup> {
    closure_with_limit(generators, degree, DEFAULT_CLOSURE_LIMIT)
}

/// Orbit of the identity under right multiplication by the generators,
/// computed to a fixpoint. Exceeding `limit` elements is an error.
pub fn closure_with_limit(
    generators: &[Permutation],
    degree: usize,
    limit: usize,
) -> Result<FiniteGroup> {
    for g in generators {
        if g.degree() != degree {
            return Err(Error::DegreeMismatch {
                left: degree,
                right: g.degree(),
            });
        }
    }
    let identity = Permutation::identity(degree);
    let mut seen: HashSet<Permutation> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(identity.clone());
    queue.push_back(identity);
    while let Some(x) = queue.pop_front() {
        for g in generators {
            let y = x.compose_unchecked(g);
            if !seen.contains(&y) {
                if seen.len() >= limit {
                    return Err(Error::resource("group order", limit as u64));
                }
                seen.insert(y.clone());
                queue.push_back(y);
            }
        }
    }
    let mut elements: Vec<Permutation> = seen.into_iter().collect();
    elements.sort();
    let mut gens: Vec<Permutation> = Vec::new();
    for g in generators {
        if !g.is_identity() && !gens.contains(g) {
            gens.push(g.clone());
        }
    }
    Ok(FiniteGroup {
        name: String::new(),
        degree,
        elements,
        generators: gens,
    })
}

/// Multiplication, inversion and element orders by index into a group's
/// canonical element list.
#[derive(Debug, Clone)]
pub struct CayleyTable {
    n: usize,
    mul: Vec<u32>,
    inv: Vec<u32>,
    orders: Vec<u32>,
}

impl CayleyTable {
    pub fn new(group: &FiniteGroup) -> Self {
        let n = group.order();
        let elems = group.elements();
        let mut mul = Vec::with_capacity(n * n);
        for a in elems {
            for b in elems {
                let c = a.compose_unchecked(b);
                let idx = group.index_of(&c).expect("group is closed");
                mul.push(idx as u32);
            }
        }
        let inv = elems
            .iter()
            .map(|a| group.index_of(&a.inverse()).expect("group is closed") as u32)
            .collect();
        let orders = elems.iter().map(|a| a.order() as u32).collect();
        CayleyTable {
            n,
            mul,
            inv,
            orders,
        }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// Index of `a ∘ b`.
    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.n + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    #[inline]
    pub fn element_order(&self, a: usize) -> usize {
        self.orders[a] as usize
    }

    /// `g⁻¹ x g`.
    #[inline]
    pub fn conjugate(&self, x: usize, g: usize) -> usize {
        self.mul(self.mul(self.inv(g), x), g)
    }

    /// Sorted multiset of element orders.
    pub fn order_profile(&self) -> Vec<usize> {
        let mut v: Vec<usize> = (0..self.n).map(|a| self.element_order(a)).collect();
        v.sort_unstable();
        v
    }
}
