//! Subgroup enumeration and lattice queries over a fixed parent group.

use crate::bitset::BitSet;
use crate::group::{GroupError, GroupTable};
use std::collections::HashSet;

/// A subgroup of a parent table, stored as a bitset of element indices.
/// Bit 0 (the identity) is always set.
#[derive(Clone)]
pub struct SubgroupSet<'g> {
    parent: &'g GroupTable,
    members: BitSet,
    size: usize,
}

impl std::fmt::Debug for SubgroupSet<'_> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "SubgroupSet(size {}, {:?})", self.size, self.members)
    }
}

impl PartialEq for SubgroupSet<'_> {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self.parent, other.parent) && self.members == other.members
    }
}
impl Eq for SubgroupSet<'_> {}

impl<'g> SubgroupSet<'g> {
    pub fn parent(&self) -> &'g GroupTable {
        self.parent
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn members(&self) -> &BitSet {
        &self.members
    }

    pub fn contains(&self, i: usize) -> bool {
        self.members.contains(i)
    }

    pub fn elements(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter_ones()
    }

    pub fn is_trivial(&self) -> bool {
        self.size == 1
    }

    pub fn is_whole(&self) -> bool {
        self.size == self.parent.order()
    }

    pub fn is_proper(&self) -> bool {
        !self.is_whole()
    }

    /// |G| / |H|.
    pub fn index_in_parent(&self) -> usize {
        self.parent.order() / self.size
    }

    pub fn to_hex(&self) -> String {
        self.members.to_hex()
    }

    fn assert_same_parent(&self, other: &SubgroupSet<'_>) {
        assert!(
            std::ptr::eq(self.parent, other.parent),
            "subgroup parents differ"
        );
    }

    /// Intersection of two subgroups of the same parent (a subgroup again).
    pub fn intersect(&self, other: &SubgroupSet<'g>) -> SubgroupSet<'g> {
        self.assert_same_parent(other);
        let members = self.members.intersection(&other.members);
        let size = members.len();
        SubgroupSet {
            parent: self.parent,
            members,
            size,
        }
    }

    pub fn is_subset_of(&self, other: &SubgroupSet<'_>) -> bool {
        self.assert_same_parent(other);
        self.members.is_subset_of(&other.members)
    }

    /// True iff x h x^-1 stays inside for every x in the parent.
    pub fn is_normal(&self) -> bool {
        let g = self.parent;
        (0..g.order()).all(|x| {
            let xi = g.inv(x);
            self.elements().all(|h| self.contains(g.mul(g.mul(x, h), xi)))
        })
    }

    /// True iff some member generates the whole subgroup.
    pub fn is_cyclic(&self) -> bool {
        self.elements()
            .any(|x| self.parent.element_order(x) == self.size)
    }
}

/// Least subgroup containing the given elements.
pub fn closure<'g>(g: &'g GroupTable, generators: &[usize]) -> SubgroupSet<'g> {
    let mut members = BitSet::new(g.order());
    members.insert(0);
    let mut elems = vec![0usize];
    for &x in generators {
        if members.insert(x) {
            elems.push(x);
        }
    }
    grow_closure(g, &mut members, &mut elems, 1);
    let size = elems.len();
    SubgroupSet {
        parent: g,
        members,
        size,
    }
}

/// Extends a closed base by one element. The base's internal products are
/// skipped: exploration starts at the first new position.
fn join_with_element<'g>(
    g: &'g GroupTable,
    base: &SubgroupSet<'g>,
    x: usize,
) -> SubgroupSet<'g> {
    let mut members = base.members.clone();
    let mut elems: Vec<usize> = base.elements().collect();
    let start = elems.len();
    members.insert(x);
    elems.push(x);
    grow_closure(g, &mut members, &mut elems, start);
    let size = elems.len();
    SubgroupSet {
        parent: g,
        members,
        size,
    }
}

/// Worklist closure: each element from position `start` on is multiplied
/// against everything known, both ways, until no new element appears.
/// Elements before `start` must already be mutually closed.
fn grow_closure(g: &GroupTable, members: &mut BitSet, elems: &mut Vec<usize>, start: usize) {
    let mut i = start;
    while i < elems.len() {
        let a = elems[i];
        let mut j = 0;
        while j < elems.len() {
            let b = elems[j];
            for p in [g.mul(a, b), g.mul(b, a)] {
                if members.insert(p) {
                    elems.push(p);
                }
            }
            j += 1;
        }
        let ai = g.inv(a);
        if members.insert(ai) {
            elems.push(ai);
        }
        i += 1;
    }
}

/// The complete subgroup lattice: all subgroups in canonical order
/// (ascending size, then ascending bitset value) with maximality and
/// normality flags.
pub struct SubgroupLattice<'g> {
    parent: &'g GroupTable,
    subgroups: Vec<SubgroupSet<'g>>,
    maximal_flags: Vec<bool>,
    normal_flags: Vec<bool>,
}

/// Enumerates every subgroup by seeding with cyclic subgroups and joining
/// existing subgroups with outside elements until a fixpoint.
pub fn all_subgroups(g: &GroupTable) -> SubgroupLattice<'_> {
    let mut seen: HashSet<BitSet> = HashSet::new();
    let mut found: Vec<SubgroupSet> = Vec::new();
    for x in 0..g.order() {
        let h = closure(g, &[x]);
        if seen.insert(h.members.clone()) {
            found.push(h);
        }
    }
    let mut i = 0;
    while i < found.len() {
        if !found[i].is_whole() {
            let base = found[i].clone();
            for x in 0..g.order() {
                if !base.contains(x) {
                    let h = join_with_element(g, &base, x);
                    if seen.insert(h.members.clone()) {
                        found.push(h);
                    }
                }
            }
        }
        i += 1;
    }

    found.sort_by(|a, b| a.size.cmp(&b.size).then_with(|| a.members.cmp(&b.members)));

    let n = found.len();
    let mut maximal_flags = vec![false; n];
    for i in 0..n {
        if !found[i].is_proper() {
            continue;
        }
        let covered = (i + 1..n).any(|j| {
            found[j].is_proper()
                && found[j].size > found[i].size
                && found[j].size % found[i].size == 0
                && found[i].members.is_subset_of(&found[j].members)
        });
        maximal_flags[i] = !covered;
    }

    let abelian = g.is_abelian();
    let normal_flags = found
        .iter()
        .map(|h| abelian || h.is_normal())
        .collect();

    SubgroupLattice {
        parent: g,
        subgroups: found,
        maximal_flags,
        normal_flags,
    }
}

impl<'g> SubgroupLattice<'g> {
    pub fn parent(&self) -> &'g GroupTable {
        self.parent
    }

    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        false // always holds the trivial and whole subgroups
    }

    pub fn subgroups(&self) -> &[SubgroupSet<'g>] {
        &self.subgroups
    }

    pub fn get(&self, i: usize) -> &SubgroupSet<'g> {
        &self.subgroups[i]
    }

    pub fn is_maximal(&self, i: usize) -> bool {
        self.maximal_flags[i]
    }

    pub fn is_normal_flag(&self, i: usize) -> bool {
        self.normal_flags[i]
    }

    pub fn maximal_indices(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.maximal_flags[i]).collect()
    }

    pub fn maximal_subgroups(&self) -> Vec<&SubgroupSet<'g>> {
        self.maximal_indices().into_iter().map(|i| self.get(i)).collect()
    }

    pub fn proper_indices(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.get(i).is_proper()).collect()
    }

    pub fn proper_subgroups(&self) -> Vec<&SubgroupSet<'g>> {
        self.proper_indices().into_iter().map(|i| self.get(i)).collect()
    }

    /// Proper subgroups other than the trivial one: the candidate pool for
    /// covering enumerations.
    pub fn nontrivial_proper_indices(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| {
                let h = self.get(i);
                h.is_proper() && !h.is_trivial()
            })
            .collect()
    }

    pub fn normal_indices(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.normal_flags[i]).collect()
    }

    pub fn subgroups_of_order(&self, m: usize) -> Vec<&SubgroupSet<'g>> {
        self.subgroups.iter().filter(|h| h.size() == m).collect()
    }

    /// Intersection of all maximal subgroups; the whole group when there
    /// are none (only the trivial group).
    pub fn frattini(&self) -> SubgroupSet<'g> {
        let mut members = BitSet::full(self.parent.order());
        for i in self.maximal_indices() {
            members = members.intersection(&self.get(i).members);
        }
        let size = members.len();
        SubgroupSet {
            parent: self.parent,
            members,
            size,
        }
    }

    /// log2 of the Frattini index: the minimal generator count of a group
    /// of 2-power order.
    pub fn min_generators_2group(&self) -> Result<usize, GroupError> {
        let n = self.parent.order();
        if !n.is_power_of_two() {
            return Err(GroupError::BadParameter(format!(
                "order {n} is not a power of 2"
            )));
        }
        let idx = n / self.frattini().size();
        Ok(idx.trailing_zeros() as usize)
    }
}
