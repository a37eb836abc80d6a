//! Serializable views of lattices, Möbius tables and invariant reports.

use serde::Serialize;

use crate::error::Result;
use crate::invariants::{m_gg, m_gn, m_primed_direct, m_primed_recursive, Analysis};
use crate::lattice::SubgroupLattice;
use crate::moebius::MoebiusTable;
use crate::rational::Rational;
use crate::topology::m_gn_via_euler;

#[derive(Debug, Clone, Serialize)]
pub struct GroupInfo {
    pub name: String,
    pub order: usize,
}

impl GroupInfo {
    pub fn of(lattice: &SubgroupLattice) -> Self {
        GroupInfo {
            name: lattice.group().name().to_string(),
            order: lattice.group().order(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SubgroupEntry {
    pub index: usize,
    pub order: usize,
    pub is_normal: bool,
    pub is_cyclic: bool,
    pub generators: Vec<String>,
}

/// All subgroups plus the strict inclusion relation as `[i, j]` pairs
/// meaning `K_i < K_j`.
#[derive(Debug, Clone, Serialize)]
pub struct LatticeExport {
    pub group: GroupInfo,
    pub subgroups: Vec<SubgroupEntry>,
    pub inclusions: Vec<[usize; 2]>,
}

pub fn export_lattice(lattice: &SubgroupLattice) -> LatticeExport {
    let subgroups = (0..lattice.len())
        .map(|i| SubgroupEntry {
            index: i,
            order: lattice.order(i),
            is_normal: lattice.is_normal(i),
            is_cyclic: lattice.is_cyclic(i),
            generators: lattice
                .generators_of(i)
                .iter()
                .map(|g| g.to_string())
                .collect(),
        })
        .collect();
    let inclusions = (0..lattice.len())
        .flat_map(|i| {
            lattice
                .above(i)
                .filter(move |&j| j != i)
                .map(move |j| [i, j])
        })
        .collect();
    LatticeExport {
        group: GroupInfo::of(lattice),
        subgroups,
        inclusions,
    }
}

/// Nonzero Möbius values as `(i, j, μ)` triples.
pub fn export_moebius(mu: &MoebiusTable) -> Vec<(usize, usize, i64)> {
    mu.nonzero()
}

#[derive(Debug, Clone, Serialize)]
pub struct InvariantReport {
    pub group: String,
    #[serde(rename = "normalSubgroup")]
    pub normal_subgroup: usize,
    #[serde(rename = "mDirect")]
    pub m_direct: Rational,
    #[serde(rename = "mPrimed")]
    pub m_primed: Rational,
    #[serde(rename = "MPrimed")]
    pub big_m_primed: i128,
    #[serde(rename = "MPrimedRecursive")]
    pub big_m_primed_recursive: i128,
    #[serde(rename = "mViaEuler")]
    pub m_via_euler: Option<Rational>,
    pub agreement: bool,
}

impl InvariantReport {
    /// Computes every route to `m_{G,N}` for `N` normal of prime index and
    /// records whether they agree. The Euler-characteristic route is only
    /// taken for non-cyclic `G`.
    pub fn compute(analysis: &Analysis, n: usize) -> Result<Self> {
        let lattice = &analysis.lattice;
        let mu = &analysis.mu;
        let order = lattice.group().order() as i128;
        let m_direct = m_gn(lattice, mu, n)?;
        let big = m_primed_direct(lattice, mu, n)?;
        let big_rec = m_primed_recursive(lattice, n)?;
        let m_primed = Rational::new(big, order);
        let m_via_euler = if lattice.is_cyclic(lattice.top()) {
            None
        } else {
            Some(m_gn_via_euler(lattice, n)?)
        };
        let agreement = m_direct + m_primed == m_gg(lattice, mu)
            && big == big_rec
            && m_via_euler.is_none_or(|e| e == m_direct);
        Ok(InvariantReport {
            group: lattice.group().name().to_string(),
            normal_subgroup: n,
            m_direct,
            m_primed,
            big_m_primed: big,
            big_m_primed_recursive: big_rec,
            m_via_euler,
            agreement,
        })
    }
}
