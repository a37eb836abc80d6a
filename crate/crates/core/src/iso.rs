//! Isomorphism testing for small groups by backtracking over generator
//! images.

use crate::error::{Error, Result};
use crate::group::{CayleyTable, FiniteGroup};
use crate::lattice::generate;

/// Default bound on the group orders accepted by [`is_isomorphic`].
pub const DEFAULT_ISO_LIMIT: usize = 48;

pub fn is_isomorphic(a: &FiniteGroup, b: &FiniteGroup) -> Result<bool> {
    is_isomorphic_with_limit(a, b, DEFAULT_ISO_LIMIT)
}

/// Searches for a multiplication-preserving bijection `a → b`. Generators
/// of `a` are sent to elements of `b` of the same order; each partial
/// assignment is extended along the Cayley graph and rejected as soon as
/// it is inconsistent or non-injective.
pub fn is_isomorphic_with_limit(a: &FiniteGroup, b: &FiniteGroup, limit: usize) -> Result<bool> {
    let largest = a.order().max(b.order());
    if largest > limit {
        return Err(Error::resource(
            format!("isomorphism test on groups of order {largest}"),
            limit as u64,
        ));
    }
    if a.order() != b.order() {
        return Ok(false);
    }
    let ta = CayleyTable::new(a);
    let tb = CayleyTable::new(b);
    if ta.order_profile() != tb.order_profile() {
        return Ok(false);
    }
    let gens = small_generating_set(&ta);
    let mut images = Vec::with_capacity(gens.len());
    Ok(search(&ta, &tb, &gens, &mut images))
}

fn search(ta: &CayleyTable, tb: &CayleyTable, gens: &[usize], images: &mut Vec<usize>) -> bool {
    let k = images.len();
    let Some(map) = extend(ta, tb, &gens[..k], images) else {
        return false;
    };
    if k == gens.len() {
        // The generated subgroup is all of `a`, so an injective map is a
        // bijection.
        return map.iter().all(|&m| m != usize::MAX);
    }
    let want = ta.element_order(gens[k]);
    for candidate in 0..tb.len() {
        if tb.element_order(candidate) != want {
            continue;
        }
        images.push(candidate);
        if search(ta, tb, gens, images) {
            return true;
        }
        images.pop();
    }
    false
}

/// Extends `gens[i] ↦ images[i]` to a homomorphism on `⟨gens⟩`, checking
/// `φ(x g) = φ(x) φ(g)` on every Cayley-graph edge. Returns `None` on any
/// inconsistency or collision.
fn extend(
    ta: &CayleyTable,
    tb: &CayleyTable,
    gens: &[usize],
    images: &[usize],
) -> Option<Vec<usize>> {
    let mut map = vec![usize::MAX; ta.len()];
    let mut used = vec![false; tb.len()];
    map[0] = 0;
    used[0] = true;
    let mut stack = vec![0usize];
    while let Some(x) = stack.pop() {
        for (&g, &h) in gens.iter().zip(images) {
            let y = ta.mul(x, g);
            let fy = tb.mul(map[x], h);
            if map[y] == usize::MAX {
                if used[fy] {
                    return None;
                }
                map[y] = fy;
                used[fy] = true;
                stack.push(y);
            } else if map[y] != fy {
                return None;
            }
        }
    }
    Some(map)
}

fn small_generating_set(t: &CayleyTable) -> Vec<usize> {
    let mut elems: Vec<usize> = (0..t.len()).collect();
    elems.sort_by_key(|&x| (std::cmp::Reverse(t.element_order(x)), x));
    let mut gens = Vec::new();
    let mut current = generate(t, &gens);
    for x in elems {
        if current.len() == t.len() {
            break;
        }
        if !current.contains(x) {
            gens.push(x);
            current = generate(t, &gens);
        }
    }
    gens
}
