//! Burnside-ring invariants: `m_{G,N}`, its complement `m'_{G,N}`, the
//! integer `M'_{G,N} = |G| m'_{G,N}` by direct summation and by recursion
//! over proper subgroups, `β(G)` and the B-group predicate.

use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::iso::is_isomorphic;
use crate::lattice::{enumerate_subgroups, QuotientPresentation, SubgroupLattice};
use crate::moebius::{compute_moebius, euler_totient, MoebiusTable};
use crate::rational::Rational;

/// A group's subgroup lattice together with its Möbius function.
#[derive(Debug, Clone)]
pub struct Analysis {
    pub lattice: SubgroupLattice,
    pub mu: MoebiusTable,
}

impl Analysis {
    pub fn new(group: &FiniteGroup) -> Result<Self> {
        Self::from_lattice(enumerate_subgroups(group)?)
    }

    pub fn from_lattice(lattice: SubgroupLattice) -> Result<Self> {
        let mu = compute_moebius(&lattice)?;
        Ok(Analysis { lattice, mu })
    }
}

fn require_normal(lattice: &SubgroupLattice, n: usize) -> Result<()> {
    if n >= lattice.len() {
        return Err(Error::Precondition(format!("no subgroup with index {n}")));
    }
    if !lattice.is_normal(n) {
        return Err(Error::Precondition(format!(
            "{} is not normal in {}",
            lattice.label(n),
            lattice.group().name()
        )));
    }
    Ok(())
}

fn require_prime_index(lattice: &SubgroupLattice, n: usize) -> Result<()> {
    require_normal(lattice, n)?;
    if !lattice.has_prime_index(n) {
        return Err(Error::Precondition(format!(
            "|G : N| = {} is not prime",
            lattice.group().order() / lattice.order(n)
        )));
    }
    Ok(())
}

/// `m_{G,N} = (1/|G|) Σ_{XN = G} |X| μ(X, G)`.
pub fn m_gn(lattice: &SubgroupLattice, mu: &MoebiusTable, n: usize) -> Result<Rational> {
    require_normal(lattice, n)?;
    let g = lattice.group().order();
    let top = lattice.top();
    let sum: i128 = (0..lattice.len())
        .filter(|&x| lattice.product_order(x, n) == g)
        .map(|x| lattice.order(x) as i128 * i128::from(mu.get(x, top)))
        .sum();
    Ok(Rational::new(sum, g as i128))
}

pub fn m_gg(lattice: &SubgroupLattice, mu: &MoebiusTable) -> Rational {
    m_gn(lattice, mu, lattice.top()).expect("G is normal in itself")
}

/// `M'_{G,N} = Σ_{X ≤ N} |X| μ(X, G)` for `N` normal of prime index.
pub fn m_primed_direct(lattice: &SubgroupLattice, mu: &MoebiusTable, n: usize) -> Result<i128> {
    require_prime_index(lattice, n)?;
    let top = lattice.top();
    Ok(lattice
        .below(n)
        .map(|x| lattice.order(x) as i128 * i128::from(mu.get(x, top)))
        .sum())
}

/// `m'_{G,N} = M'_{G,N} / |G|`.
pub fn m_primed(lattice: &SubgroupLattice, mu: &MoebiusTable, n: usize) -> Result<Rational> {
    let big = m_primed_direct(lattice, mu, n)?;
    Ok(Rational::new(big, lattice.group().order() as i128))
}

/// `M'_{G,N}` from the recursion
///
/// ```text
/// M'_{Y, Y∩N} = -Σ_{C ≤ Y∩N cyclic} φ(|C|) - Σ_{Z < Y, Z ⊄ N} M'_{Z, Z∩N}
/// ```
///
/// started at `Y = G`. Each `Z ⊄ N` meets `N` in a subgroup of the same
/// prime index, so the recursion stays inside the parent lattice; values
/// are memoised per lattice index. The Möbius function is not used.
pub fn m_primed_recursive(lattice: &SubgroupLattice, n: usize) -> Result<i128> {
    require_prime_index(lattice, n)?;
    let p = lattice.group().order() / lattice.order(n);
    let cyclic_in_n: Vec<usize> = lattice.below(n).filter(|&c| lattice.is_cyclic(c)).collect();

    // Indices are sorted by height, so every proper subgroup of Y has a
    // smaller index and is already memoised when Y is reached.
    let mut memo: Vec<Option<i128>> = vec![None; lattice.len()];
    for y in 0..lattice.len() {
        if lattice.le(y, n) {
            continue;
        }
        let meet = lattice.intersection(y, n);
        if lattice.order(y) != p * lattice.order(meet) {
            return Err(Error::Consistency(format!(
                "|K{y} : K{y} ∩ N| = {} but |G : N| = {p}",
                lattice.order(y) / lattice.order(meet)
            )));
        }
        let base: i128 = cyclic_in_n
            .iter()
            .filter(|&&c| lattice.le(c, y))
            .map(|&c| euler_totient(lattice.order(c) as u64) as i128)
            .sum();
        let mut rest = 0i128;
        for z in lattice.below(y) {
            if z != y && !lattice.le(z, n) {
                rest += memo[z].ok_or_else(|| {
                    Error::Consistency(format!("K{z} < K{y} visited out of order"))
                })?;
            }
        }
        memo[y] = Some(-base - rest);
    }
    memo[lattice.top()].ok_or_else(|| Error::Consistency("recursion did not reach G".into()))
}

/// Normal subgroups `N`, maximal under inclusion, with `m_{G,N} ≠ 0`.
pub fn beta_candidates(lattice: &SubgroupLattice, mu: &MoebiusTable) -> Result<Vec<usize>> {
    let mut nonzero = Vec::new();
    for n in lattice.normal_subgroups() {
        if !m_gn(lattice, mu, n)?.is_zero() {
            nonzero.push(n);
        }
    }
    Ok(nonzero
        .iter()
        .copied()
        .filter(|&a| !nonzero.iter().any(|&b| b != a && lattice.le(a, b)))
        .collect())
}

#[derive(Debug, Clone)]
pub struct BetaResult {
    /// The chosen maximal `N` (smallest index among the candidates).
    pub normal: usize,
    pub candidates: Vec<usize>,
    pub quotient: QuotientPresentation,
}

/// `β(G) = G/N` for `N ⊴ G` maximal with `m_{G,N} ≠ 0`. When several such
/// `N` exist their quotients are checked to be pairwise isomorphic.
pub fn beta(analysis: &Analysis) -> Result<BetaResult> {
    let lattice = &analysis.lattice;
    let candidates = beta_candidates(lattice, &analysis.mu)?;
    let quotients: Vec<QuotientPresentation> = candidates
        .iter()
        .map(|&n| lattice.quotient(n))
        .collect::<Result<_>>()?;
    for (i, a) in quotients.iter().enumerate() {
        for b in &quotients[i + 1..] {
            if !is_isomorphic(&a.group, &b.group)? {
                return Err(Error::Consistency(format!(
                    "β candidates {} and {} have non-isomorphic quotients",
                    a.group.name(),
                    b.group.name()
                )));
            }
        }
    }
    let normal = *candidates
        .first()
        .ok_or_else(|| Error::Consistency("m_{G,1} = 0, no β candidate".into()))?;
    let quotient = quotients.into_iter().next().expect("non-empty");
    Ok(BetaResult {
        normal,
        candidates,
        quotient,
    })
}

/// B-group test through the minimal normal subgroups only.
pub fn is_b_group(lattice: &SubgroupLattice, mu: &MoebiusTable) -> Result<bool> {
    for n in lattice.minimal_normal_subgroups() {
        if !m_gn(lattice, mu, n)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// B-group test over every nontrivial normal subgroup.
pub fn is_b_group_exhaustive(lattice: &SubgroupLattice, mu: &MoebiusTable) -> Result<bool> {
    for n in lattice.normal_subgroups() {
        if n != lattice.trivial() && !m_gn(lattice, mu, n)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Both sides of `m_{G,M} = m_{G,N} · m_{G/N, M/N}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Multiplicativity {
    pub lhs: Rational,
    pub rhs: Rational,
}

impl Multiplicativity {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// Evaluates both sides of the multiplicativity identity for normal
/// `N ≤ M`, computing the right factor on the quotient's own lattice.
pub fn multiplicativity(
    lattice: &SubgroupLattice,
    mu: &MoebiusTable,
    n: usize,
    m: usize,
) -> Result<Multiplicativity> {
    require_normal(lattice, n)?;
    require_normal(lattice, m)?;
    if !lattice.le(n, m) {
        return Err(Error::Precondition(format!(
            "{} is not contained in {}",
            lattice.label(n),
            lattice.label(m)
        )));
    }
    let q = lattice.quotient(n)?;
    let quotient = Analysis::new(&q.group)?;
    let image = q.image(lattice, m);
    let m_mod_n = quotient
        .lattice
        .find(&image)
        .ok_or_else(|| Error::Consistency("image of M in G/N is not a subgroup".into()))?;
    let lhs = m_gn(lattice, mu, m)?;
    let rhs = m_gn(lattice, mu, n)? * m_gn(&quotient.lattice, &quotient.mu, m_mod_n)?;
    Ok(Multiplicativity { lhs, rhs })
}

pub fn multiplicativity_check(
    lattice: &SubgroupLattice,
    mu: &MoebiusTable,
    n: usize,
    m: usize,
) -> Result<bool> {
    Ok(multiplicativity(lattice, mu, n, m)?.holds())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::build;

    fn analysis(spec: &str) -> Analysis {
        Analysis::new(&build(spec).unwrap()).unwrap()
    }

    fn normal_of_order(a: &Analysis, order: usize) -> usize {
        let l = &a.lattice;
        let found: Vec<usize> = l
            .normal_subgroups()
            .into_iter()
            .filter(|&i| l.order(i) == order)
            .collect();
        assert_eq!(found.len(), 1);
        found[0]
    }

    #[test]
    fn m_g1_is_one() {
        for s in ["C1", "C6", "S3", "D4", "A4"] {
            let a = analysis(s);
            assert_eq!(m_gn(&a.lattice, &a.mu, 0).unwrap(), Rational::one());
        }
    }

    #[test]
    fn m_gg_values() {
        let a = analysis("S3");
        assert_eq!(m_gg(&a.lattice, &a.mu), Rational::zero());
        let a = analysis("C6");
        assert_eq!(m_gg(&a.lattice, &a.mu), Rational::new(1, 3));
        let a = analysis("C2");
        assert_eq!(m_gg(&a.lattice, &a.mu), Rational::new(1, 2));
    }

    #[test]
    fn m_primed_small_cases() {
        let a = analysis("C5");
        assert_eq!(m_primed_direct(&a.lattice, &a.mu, 0).unwrap(), -1);
        assert_eq!(m_primed_recursive(&a.lattice, 0).unwrap(), -1);

        let a = analysis("S3");
        let a3 = normal_of_order(&a, 3);
        assert_eq!(m_primed_direct(&a.lattice, &a.mu, a3).unwrap(), 0);
        assert_eq!(m_primed_recursive(&a.lattice, a3).unwrap(), 0);
    }

    #[test]
    fn prime_index_is_required() {
        let a = analysis("S3");
        assert!(matches!(
            m_primed_direct(&a.lattice, &a.mu, 0),
            Err(Error::Precondition(_))
        ));
        assert!(matches!(
            m_primed_recursive(&a.lattice, 1),
            Err(Error::Precondition(_))
        ));
        assert!(m_gn(&a.lattice, &a.mu, 1).is_err());
    }

    #[test]
    fn beta_examples() {
        // β(C_p): C_p itself has m ≠ 0, so the quotient is trivial.
        let b = beta(&analysis("C5")).unwrap();
        assert_eq!(b.quotient.group.order(), 1);
        let b = beta(&analysis("A5")).unwrap();
        assert_eq!(b.normal, 0);
        assert_eq!(b.quotient.group.order(), 60);
    }

    #[test]
    fn b_group_examples() {
        let a = analysis("A5");
        assert!(is_b_group(&a.lattice, &a.mu).unwrap());
        let a = analysis("C3");
        assert!(!is_b_group(&a.lattice, &a.mu).unwrap());
    }

    #[test]
    fn multiplicativity_on_c4() {
        let a = analysis("C4");
        let m = multiplicativity(&a.lattice, &a.mu, 1, 2).unwrap();
        assert_eq!(m.lhs, Rational::new(1, 2));
        assert!(m.holds());
        assert!(multiplicativity(&a.lattice, &a.mu, 2, 1).is_err());
    }
}
