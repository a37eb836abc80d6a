//! Betti numbers of class posets checked against a dense reference
//! computation built directly from the lattice order.

use burnside_core::catalog::build;
use burnside_core::topology::{class_poset, nerve_summary, ClassPoset};
use burnside_core::{Analysis, SubgroupLattice};
use num_rational::Ratio;

/// All strictly increasing chains, grouped by length, as member positions.
fn chains(lattice: &SubgroupLattice, poset: &ClassPoset) -> Vec<Vec<Vec<usize>>> {
    let m = &poset.members;
    let lt = |a: usize, b: usize| a != b && lattice.le(m[a], m[b]);
    let mut out: Vec<Vec<Vec<usize>>> = vec![(0..m.len()).map(|a| vec![a]).collect()];
    loop {
        let next: Vec<Vec<usize>> = out
            .last()
            .unwrap()
            .iter()
            .flat_map(|c| {
                let last = *c.last().unwrap();
                (0..m.len()).filter(move |&b| lt(last, b)).map(move |b| {
                    let mut d = c.clone();
                    d.push(b);
                    d
                })
            })
            .collect();
        if next.is_empty() {
            break;
        }
        out.push(next);
    }
    if m.is_empty() {
        out.clear();
    }
    out
}

/// Dense boundary matrix from chains of length `k + 1` to length `k`.
fn boundary(lower: &[Vec<usize>], upper: &[Vec<usize>]) -> Vec<Vec<i64>> {
    let mut rows = vec![vec![0i64; upper.len()]; lower.len()];
    for (j, c) in upper.iter().enumerate() {
        for skip in 0..c.len() {
            let face: Vec<usize> = c
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != skip)
                .map(|(_, &x)| x)
                .collect();
            let i = lower
                .iter()
                .position(|f| *f == face)
                .expect("face is a chain");
            rows[i][j] = if skip % 2 == 0 { 1 } else { -1 };
        }
    }
    rows
}

fn rank_rational(m: &[Vec<i64>]) -> usize {
    let mut a: Vec<Vec<Ratio<i128>>> = m
        .iter()
        .map(|r| r.iter().map(|&x| Ratio::from_integer(x as i128)).collect())
        .collect();
    gauss(
        &mut a,
        |x| *x == Ratio::from_integer(0),
        |p, x| x / p,
        |x, f, y| x - f * y,
    )
}

const PRIMES: [i64; 2] = [2_147_483_647, 1_000_000_007];

fn rank_mod(m: &[Vec<i64>], p: i64) -> usize {
    let inv = |x: i64| {
        let (mut b, mut e, mut r) = (x.rem_euclid(p), p - 2, 1i64);
        while e > 0 {
            if e & 1 == 1 {
                r = (r as i128 * b as i128 % p as i128) as i64;
            }
            b = (b as i128 * b as i128 % p as i128) as i64;
            e >>= 1;
        }
        r
    };
    let mut a: Vec<Vec<i64>> = m
        .iter()
        .map(|r| r.iter().map(|&x| x.rem_euclid(p)).collect())
        .collect();
    gauss(
        &mut a,
        |x| *x == 0,
        |piv, x| (x as i128 * inv(*piv) as i128 % p as i128) as i64,
        |x, f, y| (x as i128 - f as i128 * y as i128).rem_euclid(p as i128) as i64,
    )
}

fn gauss<T: Clone>(
    a: &mut [Vec<T>],
    is_zero: impl Fn(&T) -> bool,
    div: impl Fn(&T, T) -> T,
    sub_mul: impl Fn(T, T, T) -> T,
) -> usize {
    let cols = a.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..a.len()).find(|&i| !is_zero(&a[i][c])) else {
            continue;
        };
        a.swap(r, p);
        let pivot = a[r][c].clone();
        let row: Vec<T> = a[r].iter().map(|x| div(&pivot, x.clone())).collect();
        a[r] = row.clone();
        for (i, other) in a.iter_mut().enumerate() {
            if i != r && !is_zero(&other[c]) {
                let f = other[c].clone();
                for (x, y) in other.iter_mut().zip(&row) {
                    *x = sub_mul(x.clone(), f.clone(), y.clone());
                }
            }
        }
        r += 1;
    }
    r
}

fn reference_betti(
    lattice: &SubgroupLattice,
    poset: &ClassPoset,
    rank: impl Fn(&[Vec<i64>]) -> usize,
) -> Vec<u64> {
    let ch = chains(lattice, poset);
    let mats: Vec<Vec<Vec<i64>>> = (1..ch.len())
        .map(|k| boundary(&ch[k - 1], &ch[k]))
        .collect();
    for k in 1..mats.len() {
        // ∂_k ∘ ∂_{k+1} = 0
        let (d1, d2) = (&mats[k - 1], &mats[k]);
        for row in d1 {
            for j in 0..d2[0].len() {
                let s: i64 = (0..d2.len()).map(|t| row[t] * d2[t][j]).sum();
                assert_eq!(s, 0, "boundary of boundary is nonzero");
            }
        }
    }
    let ranks: Vec<usize> = mats.iter().map(|m| rank(m)).collect();
    (0..ch.len())
        .map(|k| {
            let below = if k == 0 { 0 } else { ranks[k - 1] };
            let above = ranks.get(k).copied().unwrap_or(0);
            (ch[k].len() - below - above) as u64
        })
        .collect()
}

fn normal_of_index_two(a: &Analysis) -> usize {
    let order = a.lattice.group().order();
    a.lattice
        .normal_subgroups()
        .into_iter()
        .find(|&n| a.lattice.order(n) * 2 == order)
        .unwrap()
}

#[test]
fn s4_trivial_base_has_six_loops() {
    let a = Analysis::new(&build("S4").unwrap()).unwrap();
    let a4 = normal_of_index_two(&a);
    let poset = class_poset(&a.lattice, a4, 0).unwrap();
    let ours = nerve_summary(&poset, true).unwrap();
    let reference = reference_betti(&a.lattice, &poset, rank_rational);
    assert_eq!(ours.betti_numbers.as_deref(), Some(&reference[..]));
    assert_eq!(reference, vec![1, 6, 0]);
    assert!(ours.connected);
    assert_eq!(ours.euler, -5);
}

#[test]
fn s5_trivial_base_is_connected_but_not_acyclic() {
    let a = Analysis::new(&build("S5").unwrap()).unwrap();
    let a5 = normal_of_index_two(&a);
    let poset = class_poset(&a.lattice, a5, 0).unwrap();
    let ours = nerve_summary(&poset, true).unwrap();
    assert_eq!(ours.chain_counts, vec![96, 345, 280, 30]);
    assert!(ours.connected);
    assert_eq!(ours.euler, 1);
    for p in PRIMES {
        let reference = reference_betti(&a.lattice, &poset, |m| rank_mod(m, p));
        assert_eq!(ours.betti_numbers.as_deref(), Some(&reference[..]));
    }
    assert_eq!(ours.betti_numbers, Some(vec![1, 24, 24, 0]));
}

#[test]
fn small_catalog_matches_reference() {
    for spec in ["S3", "D4", "C6", "D6", "A4 x C2", "S3 x C2 x C2"] {
        let a = Analysis::new(&build(spec).unwrap()).unwrap();
        let l = &a.lattice;
        for n in l.normal_subgroups() {
            if n == l.top() || !l.has_prime_index(n) {
                continue;
            }
            for c in l.below(n).filter(|&c| l.is_cyclic(c)) {
                let poset = class_poset(l, n, c).unwrap();
                let ours = nerve_summary(&poset, true).unwrap();
                let reference = reference_betti(l, &poset, rank_rational);
                assert_eq!(
                    ours.betti_numbers.as_deref(),
                    Some(&reference[..]),
                    "{spec}, N = K{n}, C = K{c}"
                );
            }
        }
    }
}
