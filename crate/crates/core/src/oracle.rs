//! Brute-force reference computations for small groups.
//!
//! Nothing here goes through [`CayleyTable`](crate::CayleyTable) or the
//! lattice code: products come straight from [`Permutation::compose`] and
//! subgroups are found by testing every subset for closure.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::group::FiniteGroup;

/// Largest group order accepted by [`subgroups_by_subsets`].
pub const SUBSET_ORACLE_LIMIT: usize = 20;

/// Every subgroup of `group` as a sorted list of element indices, found by
/// testing all subsets that contain the identity for closure under
/// multiplication. The result is sorted lexicographically.
pub fn subgroups_by_subsets(group: &FiniteGroup) -> Result<Vec<Vec<usize>>> {
    let n = group.order();
    if n > SUBSET_ORACLE_LIMIT {
        return Err(Error::resource(
            "group order for subset enumeration",
            SUBSET_ORACLE_LIMIT as u64,
        ));
    }
    let elems = group.elements();
    let id = group
        .index_of(group.identity())
        .expect("identity lies in group");
    let mut mul = vec![0usize; n * n];
    for a in 0..n {
        for b in 0..n {
            let p = elems[a].compose(&elems[b])?;
            mul[a * n + b] = group
                .index_of(&p)
                .ok_or_else(|| Error::Consistency("group is not closed".into()))?;
        }
    }
    let others: Vec<usize> = (0..n).filter(|&i| i != id).collect();
    let mut found = BTreeSet::new();
    for mask in 0u64..(1u64 << others.len()) {
        let mut inside = vec![false; n];
        inside[id] = true;
        for (bit, &e) in others.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                inside[e] = true;
            }
        }
        let members: Vec<usize> = (0..n).filter(|&i| inside[i]).collect();
        if !n.is_multiple_of(members.len()) {
            continue;
        }
        let closed = members
            .iter()
            .all(|&a| members.iter().all(|&b| inside[mul[a * n + b]]));
        if closed {
            found.insert(members);
        }
    }
    Ok(found.into_iter().collect())
}

/// `μ(X, G)` for every subgroup `X` in `subgroups` (which must contain the
/// whole group) by the row recursion `μ(G,G) = 1`,
/// `μ(X,G) = −Σ_{X < Y ≤ G} μ(Y,G)`.
pub fn moebius_to_top(subgroups: &[Vec<usize>]) -> Vec<i64> {
    let contains =
        |big: &[usize], small: &[usize]| small.iter().all(|x| big.binary_search(x).is_ok());
    let mut order: Vec<usize> = (0..subgroups.len()).collect();
    order.sort_by_key(|&i| std::cmp::Reverse(subgroups[i].len()));
    let mut mu = vec![0i64; subgroups.len()];
    for (pos, &x) in order.iter().enumerate() {
        if pos == 0 {
            mu[x] = 1;
            continue;
        }
        mu[x] = -order[..pos]
            .iter()
            .filter(|&&y| {
                subgroups[y].len() > subgroups[x].len() && contains(&subgroups[y], &subgroups[x])
            })
            .map(|&y| mu[y])
            .sum::<i64>();
    }
    mu
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::build;

    #[test]
    fn small_counts() {
        let counts: Vec<usize> = ["C1", "C2", "C4", "C2 x C2", "S3", "D4", "Q8"]
            .iter()
            .map(|s| {
                let spec = if *s == "Q8" {
                    "gens=[(1234)(5678),(1537)(2846);8]"
                } else {
                    s
                };
                subgroups_by_subsets(&build(spec).unwrap()).unwrap().len()
            })
            .collect();
        assert_eq!(counts, vec![1, 2, 3, 5, 6, 10, 6]);
    }

    #[test]
    fn row_recursion_on_klein_four() {
        let subs = subgroups_by_subsets(&build("C2 x C2").unwrap()).unwrap();
        let mu = moebius_to_top(&subs);
        let trivial = subs.iter().position(|s| s.len() == 1).unwrap();
        assert_eq!(mu[trivial], 2);
    }

    #[test]
    fn rejects_large_groups() {
        assert!(subgroups_by_subsets(&build("S4").unwrap()).is_err());
    }
}
