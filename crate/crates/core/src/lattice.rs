//! Subgroup lattices of small permutation groups.
//!
//! All subgroups are found by saturation: start from the cyclic subgroups
//! `⟨g⟩`, then repeatedly join a known subgroup with a cyclic one until no
//! new subgroup appears. Every subgroup is generated by finitely many
//! cyclic subgroups, so the fixpoint contains all of them.
//!
//! Lattice indices are ordered by (height, canonical element set): index
//! `0` is the trivial subgroup and the last index is the whole group.

use std::collections::{HashMap, VecDeque};

use crate::bitset::ElementSet;
use crate::error::{Error, Result};
use crate::group::{closure, CayleyTable, FiniteGroup};
use crate::perm::Permutation;

/// Default ceiling on `|G|` for [`enumerate_subgroups`].
pub const DEFAULT_LATTICE_LIMIT: usize = 360;

#[derive(Debug, Clone)]
pub struct Subgroup {
    pub elements: ElementSet,
    pub order: usize,
    pub is_normal: bool,
    pub is_cyclic: bool,
}

#[derive(Debug, Clone)]
pub struct SubgroupLattice {
    group: FiniteGroup,
    table: CayleyTable,
    subgroups: Vec<Subgroup>,
    /// `above[i]` holds every `j` with `K_i ≤ K_j`, i.e. row `i` of ζ.
    above: Vec<ElementSet>,
    lookup: HashMap<ElementSet, usize>,
}

pub fn enumerate_subgroups(group: &FiniteGroup) -> Result<SubgroupLattice> {
    enumerate_subgroups_with_limit(group, DEFAULT_LATTICE_LIMIT)
}

pub fn enumerate_subgroups_with_limit(
    group: &FiniteGroup,
    limit: usize,
) -> Result<SubgroupLattice> {
    if group.order() > limit {
        return Err(Error::resource(
            format!("order of {} ({})", group.name(), group.order()),
            limit as u64,
        ));
    }
    let table = CayleyTable::new(group);
    let n = table.len();

    // Subgroup set -> a generating set (element indices).
    let mut found: HashMap<ElementSet, Vec<usize>> = HashMap::new();
    let mut seeds: Vec<(usize, ElementSet)> = Vec::new();
    for g in 0..n {
        let set = generate(&table, &[g]);
        if !found.contains_key(&set) {
            found.insert(set.clone(), if g == 0 { vec![] } else { vec![g] });
            if g != 0 {
                seeds.push((g, set));
            }
        }
    }

    let mut queue: VecDeque<ElementSet> = found.keys().cloned().collect();
    let mut gens_buf = Vec::new();
    while let Some(h) = queue.pop_front() {
        let h_gens = found[&h].clone();
        for (z, zset) in &seeds {
            if zset.is_subset(&h) {
                continue;
            }
            gens_buf.clear();
            gens_buf.extend_from_slice(&h_gens);
            gens_buf.push(*z);
            let joined = generate(&table, &gens_buf);
            if !found.contains_key(&joined) {
                found.insert(joined.clone(), gens_buf.clone());
                queue.push_back(joined);
            }
        }
    }

    let mut sets: Vec<ElementSet> = found.into_keys().collect();
    sets.sort_by_key(|s| s.len());
    // Longest chain from the trivial subgroup, counting both ends.
    let mut height = vec![1usize; sets.len()];
    for j in 0..sets.len() {
        for i in 0..j {
            if sets[i].len() < sets[j].len() && sets[i].is_subset(&sets[j]) {
                height[j] = height[j].max(height[i] + 1);
            }
        }
    }
    let mut keyed: Vec<(usize, ElementSet)> = height.into_iter().zip(sets).collect();
    keyed.sort();

    let gen_indices: Vec<usize> = group
        .generators()
        .iter()
        .map(|g| group.index_of(g).expect("generator lies in group"))
        .collect();

    let subgroups: Vec<Subgroup> = keyed
        .into_iter()
        .map(|(_, elements)| {
            let order = elements.len();
            let is_cyclic = elements.iter().any(|x| table.element_order(x) == order);
            let is_normal = gen_indices.iter().all(|&g| {
                elements
                    .iter()
                    .all(|x| elements.contains(table.conjugate(x, g)))
            });
            Subgroup {
                elements,
                order,
                is_normal,
                is_cyclic,
            }
        })
        .collect();

    let m = subgroups.len();
    let above: Vec<ElementSet> = (0..m)
        .map(|i| {
            ElementSet::from_indices(
                m,
                (0..m).filter(|&j| subgroups[i].elements.is_subset(&subgroups[j].elements)),
            )
        })
        .collect();
    let lookup = subgroups
        .iter()
        .enumerate()
        .map(|(i, s)| (s.elements.clone(), i))
        .collect();

    Ok(SubgroupLattice {
        group: group.clone(),
        table,
        subgroups,
        above,
        lookup,
    })
}

/// Subgroup generated by the given element indices.
pub(crate) fn generate(table: &CayleyTable, gens: &[usize]) -> ElementSet {
    let mut set = ElementSet::empty(table.len());
    set.insert(0);
    let mut queue = vec![0usize];
    while let Some(x) = queue.pop() {
        for &g in gens {
            let y = table.mul(x, g);
            if set.insert(y) {
                queue.push(y);
            }
        }
    }
    set
}

impl SubgroupLattice {
    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn table(&self) -> &CayleyTable {
        &self.table
    }

    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subgroups.is_empty()
    }

    pub fn subgroups(&self) -> &[Subgroup] {
        &self.subgroups
    }

    pub fn subgroup(&self, i: usize) -> &Subgroup {
        &self.subgroups[i]
    }

    pub fn order(&self, i: usize) -> usize {
        self.subgroups[i].order
    }

    pub fn is_normal(&self, i: usize) -> bool {
        self.subgroups[i].is_normal
    }

    pub fn is_cyclic(&self, i: usize) -> bool {
        self.subgroups[i].is_cyclic
    }

    pub fn trivial(&self) -> usize {
        0
    }

    pub fn top(&self) -> usize {
        self.subgroups.len() - 1
    }

    /// ζ(K_i, K_j): whether `K_i ≤ K_j`.
    #[inline]
    pub fn le(&self, i: usize, j: usize) -> bool {
        self.above[i].contains(j)
    }

    /// Indices `j` with `K_i ≤ K_j`, ascending.
    pub fn above(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.above[i].iter()
    }

    /// Indices `j` with `K_j ≤ K_i`, ascending.
    pub fn below(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        (0..=i).filter(move |&j| self.le(j, i))
    }

    pub fn find(&self, set: &ElementSet) -> Option<usize> {
        self.lookup.get(set).copied()
    }

    /// Index of the subgroup with exactly these elements, if any.
    pub fn find_elements(&self, elements: &[Permutation]) -> Option<usize> {
        let mut set = ElementSet::empty(self.group.order());
        for g in elements {
            set.insert(self.group.index_of(g)?);
        }
        self.find(&set)
    }

    pub fn intersection(&self, i: usize, j: usize) -> usize {
        let set = self.subgroups[i]
            .elements
            .intersection(&self.subgroups[j].elements);
        self.lookup[&set]
    }

    /// `|K_i K_j| = |K_i| |K_j| / |K_i ∩ K_j|`.
    pub fn product_order(&self, i: usize, j: usize) -> usize {
        let meet = self.subgroups[i]
            .elements
            .intersection_len(&self.subgroups[j].elements);
        self.order(i) * self.order(j) / meet
    }

    /// `g⁻¹ K_i g` for the element with index `g`.
    pub fn conjugate(&self, i: usize, g: usize) -> usize {
        let set = ElementSet::from_indices(
            self.table.len(),
            self.subgroups[i]
                .elements
                .iter()
                .map(|x| self.table.conjugate(x, g)),
        );
        self.lookup[&set]
    }

    pub fn normal_subgroups(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.is_normal(i)).collect()
    }

    pub fn cyclic_subgroups(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.is_cyclic(i)).collect()
    }

    /// Proper subgroups not contained in any larger proper subgroup.
    pub fn maximal_subgroups(&self) -> Vec<usize> {
        let top = self.top();
        (0..top)
            .filter(|&i| self.above(i).all(|j| j == i || j == top))
            .collect()
    }

    /// Normal subgroups `N ≠ 1` containing no normal subgroup strictly
    /// between `1` and `N`.
    pub fn minimal_normal_subgroups(&self) -> Vec<usize> {
        let normals: Vec<usize> = self
            .normal_subgroups()
            .into_iter()
            .filter(|&i| i != 0)
            .collect();
        normals
            .iter()
            .copied()
            .filter(|&n| !normals.iter().any(|&m| m != n && self.le(m, n)))
            .collect()
    }

    /// Whether `|G : K_i|` is prime.
    pub fn has_prime_index(&self, i: usize) -> bool {
        is_prime(self.group.order() / self.order(i))
    }

    /// Element permutations of `K_i`.
    pub fn elements_of(&self, i: usize) -> Vec<Permutation> {
        self.subgroups[i]
            .elements
            .iter()
            .map(|x| self.group.element(x).clone())
            .collect()
    }

    /// A small generating set of `K_i`, chosen greedily from elements of
    /// largest order.
    pub fn generators_of(&self, i: usize) -> Vec<Permutation> {
        let mut members: Vec<usize> = self.subgroups[i].elements.iter().collect();
        members.sort_by_key(|&x| (std::cmp::Reverse(self.table.element_order(x)), x));
        let mut gens = Vec::new();
        let mut current = generate(&self.table, &gens);
        for x in members {
            if current.len() == self.order(i) {
                break;
            }
            if !current.contains(x) {
                gens.push(x);
                current = generate(&self.table, &gens);
            }
        }
        gens.into_iter()
            .map(|x| self.group.element(x).clone())
            .collect()
    }

    /// `K_i` as a standalone permutation group on the parent's points.
    pub fn subgroup_as_group(&self, i: usize) -> Result<FiniteGroup> {
        closure(&self.generators_of(i), self.group.degree())
    }

    /// Realises `G / K_n` through the action of `G` on right cosets `K_n x`.
    pub fn quotient(&self, n: usize) -> Result<QuotientPresentation> {
        if !self.is_normal(n) {
            return Err(Error::Precondition(format!(
                "subgroup {n} of {} is not normal",
                self.group.name()
            )));
        }
        let size = self.table.len();
        let normal = &self.subgroups[n].elements;
        let index = size / normal.len();

        let mut coset_map = vec![usize::MAX; size];
        let mut reps = Vec::with_capacity(index);
        for x in 0..size {
            if coset_map[x] != usize::MAX {
                continue;
            }
            let c = reps.len();
            reps.push(x);
            for h in normal.iter() {
                coset_map[self.table.mul(h, x)] = c;
            }
        }
        if reps.len() != index {
            return Err(Error::Consistency(format!(
                "found {} cosets, expected {index}",
                reps.len()
            )));
        }

        // Nx ↦ Nxg⁻¹, which composes as a homomorphism with the
        // right-factor-first convention.
        let action = |g: usize| -> Permutation {
            let g_inv = self.table.inv(g);
            let images = reps
                .iter()
                .map(|&r| coset_map[self.table.mul(r, g_inv)])
                .collect();
            Permutation::from_images(images).expect("coset action is a bijection")
        };
        let gens: Vec<Permutation> = self
            .group
            .generators()
            .iter()
            .map(|g| action(self.group.index_of(g).expect("generator lies in group")))
            .collect();
        let quotient =
            closure(&gens, index)?.with_name(format!("{}/{}", self.group.name(), self.label(n)));
        if quotient.order() != index {
            return Err(Error::Consistency(format!(
                "coset action has image of order {}, expected {index}",
                quotient.order()
            )));
        }
        let element_map = (0..size)
            .map(|g| {
                quotient
                    .index_of(&action(g))
                    .expect("image lies in quotient")
            })
            .collect();
        Ok(QuotientPresentation {
            normal: n,
            group: quotient,
            coset_map,
            element_map,
        })
    }

    /// Short human label, e.g. `K12(|K|=6)`; the whole group keeps its name.
    pub fn label(&self, i: usize) -> String {
        if i == self.top() {
            self.group.name().to_string()
        } else if i == 0 {
            "1".to_string()
        } else {
            format!("K{i}")
        }
    }
}

/// The quotient `G/N` as a permutation group on the cosets of `N`.
#[derive(Debug, Clone)]
pub struct QuotientPresentation {
    pub normal: usize,
    pub group: FiniteGroup,
    /// Parent element index to coset index.
    pub coset_map: Vec<usize>,
    /// Parent element index to the index of its image in `group`.
    pub element_map: Vec<usize>,
}

impl QuotientPresentation {
    /// Image of a parent subgroup as a set of quotient elements.
    pub fn image(&self, lattice: &SubgroupLattice, i: usize) -> ElementSet {
        ElementSet::from_indices(
            self.group.order(),
            lattice
                .subgroup(i)
                .elements
                .iter()
                .map(|x| self.element_map[x]),
        )
    }
}

pub fn is_prime(n: usize) -> bool {
    n >= 2
        && (2..)
            .take_while(|d| d * d <= n)
            .all(|d| !n.is_multiple_of(d))
}
