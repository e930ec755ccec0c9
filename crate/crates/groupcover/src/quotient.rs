//! Quotient groups, small-order isomorphism testing, and recognition of
//! elementary abelian quotient targets.

use crate::group::{GroupError, GroupTable};
use crate::lattice::{closure, SubgroupLattice, SubgroupSet};

/// Largest order the backtracking isomorphism search accepts.
pub const ISO_CAP: usize = 24;

/// A normal subgroup together with its coset partition and the induced
/// group structure on the cosets.
pub struct QuotientDescriptor<'g> {
    parent: &'g GroupTable,
    kernel: SubgroupSet<'g>,
    coset_of: Vec<usize>,
    quotient: GroupTable,
}

impl<'g> QuotientDescriptor<'g> {
    pub fn parent(&self) -> &'g GroupTable {
        self.parent
    }

    pub fn kernel(&self) -> &SubgroupSet<'g> {
        &self.kernel
    }

    pub fn coset_of(&self, x: usize) -> usize {
        self.coset_of[x]
    }

    pub fn quotient(&self) -> &GroupTable {
        &self.quotient
    }
}

/// Builds G/N. The kernel must be normal; the coset table is rebuilt from
/// scratch and checked for representative independence over all pairs.
pub fn quotient<'g>(
    g: &'g GroupTable,
    n: &SubgroupSet<'g>,
) -> Result<QuotientDescriptor<'g>, GroupError> {
    assert!(
        std::ptr::eq(n.parent(), g),
        "kernel belongs to a different table"
    );
    if !n.is_normal() {
        return Err(GroupError::BadParameter(
            "quotient kernel is not normal".into(),
        ));
    }
    let order = g.order() / n.size();
    let mut coset_of = vec![usize::MAX; g.order()];
    let mut reps = Vec::with_capacity(order);
    for x in 0..g.order() {
        if coset_of[x] != usize::MAX {
            continue;
        }
        let c = reps.len();
        reps.push(x);
        let mut block = 0;
        for k in n.elements() {
            let m = g.mul(x, k);
            debug_assert_eq!(coset_of[m], usize::MAX);
            coset_of[m] = c;
            block += 1;
        }
        debug_assert_eq!(block, n.size());
    }

    let mut product = Vec::with_capacity(order * order);
    for &a in &reps {
        for &b in &reps {
            product.push(coset_of[g.mul(a, b)] as u16);
        }
    }
    // well-definedness: representatives must not matter
    for x in 0..g.order() {
        for y in 0..g.order() {
            if coset_of[g.mul(x, y)] != product[coset_of[x] * order + coset_of[y]] as usize {
                return Err(GroupError::BadTable(
                    "quotient product depends on representatives".into(),
                ));
            }
        }
    }
    let labels = reps.iter().map(|&r| format!("[{}]", g.label(r))).collect();
    let spec = format!("{} / {}", g.spec(), n.to_hex());
    let quotient = GroupTable::checked(order, product, labels, spec)?;
    Ok(QuotientDescriptor {
        parent: g,
        kernel: n.clone(),
        coset_of,
        quotient,
    })
}

/// Order 4 and exponent 2.
pub fn is_klein_four(q: &GroupTable) -> bool {
    q.order() == 4 && q.exponent() == 2
}

/// Order 8 and exponent 2.
pub fn is_elem_abelian_8(q: &GroupTable) -> bool {
    q.order() == 8 && q.exponent() == 2
}

/// Order p^2 and exponent p: recognizes C_p x C_p without a table search.
pub fn is_elem_abelian_square(q: &GroupTable, p: usize) -> bool {
    q.order() == p * p && q.exponent() == p
}

/// Lattice indices of normal subgroups N of index 4 with every square in N,
/// i.e. kernels of Klein four-group quotients.
pub fn klein_kernel_indices(l: &SubgroupLattice<'_>) -> Vec<usize> {
    kernel_indices_of_exponent2_quotient(l, 4)
}

/// Number of quotients of G isomorphic to the Klein four-group.
pub fn count_klein_quotients(l: &SubgroupLattice<'_>) -> usize {
    klein_kernel_indices(l).len()
}

/// True iff G has a quotient isomorphic to C2 x C2 x C2.
pub fn has_elem_abelian_8_quotient(l: &SubgroupLattice<'_>) -> bool {
    !kernel_indices_of_exponent2_quotient(l, 8).is_empty()
}

/// Kernels of quotients of the given index whose exponent divides 2.
/// For index 4 the quotient is then exactly C2 x C2, for index 8 exactly
/// C2 x C2 x C2 (an order-2^k group of exponent 2 is elementary abelian).
fn kernel_indices_of_exponent2_quotient(l: &SubgroupLattice<'_>, index: usize) -> Vec<usize> {
    let g = l.parent();
    if g.order() % index != 0 {
        return Vec::new();
    }
    let size = g.order() / index;
    (0..l.len())
        .filter(|&i| {
            let h = l.get(i);
            h.size() == size
                && l.is_normal_flag(i)
                && (0..g.order()).all(|x| h.contains(g.mul(x, x)))
        })
        .collect()
}

/// All quotients of the given index, one per normal kernel, in lattice order.
pub fn quotients_of_index<'g>(
    l: &SubgroupLattice<'g>,
    index: usize,
) -> Vec<QuotientDescriptor<'g>> {
    let g = l.parent();
    if g.order() % index != 0 {
        return Vec::new();
    }
    let size = g.order() / index;
    l.normal_indices()
        .into_iter()
        .filter(|&i| l.get(i).size() == size)
        .map(|i| quotient(g, l.get(i)).expect("normal kernel"))
        .collect()
}

/// Backtracking isomorphism test for groups of order at most ISO_CAP.
/// Unequal orders answer false outright; equal orders over the cap error.
pub fn is_isomorphic_small(a: &GroupTable, b: &GroupTable) -> Result<bool, GroupError> {
    if a.order() != b.order() {
        return Ok(false);
    }
    let n = a.order();
    if n > ISO_CAP {
        return Err(GroupError::TooLarge {
            what: "isomorphism search".into(),
            needed: n,
            cap: ISO_CAP,
        });
    }
    if a.is_abelian() != b.is_abelian() {
        return Ok(false);
    }
    let orders_a: Vec<usize> = (0..n).map(|i| a.element_order(i)).collect();
    let orders_b: Vec<usize> = (0..n).map(|i| b.element_order(i)).collect();
    {
        let mut sa = orders_a.clone();
        let mut sb = orders_b.clone();
        sa.sort_unstable();
        sb.sort_unstable();
        if sa != sb {
            return Ok(false);
        }
    }

    let gens = greedy_generators(a);
    if gens.is_empty() {
        return Ok(true); // both trivial
    }
    // closure sizes of each generator prefix; images must match them
    let prefix_sizes: Vec<usize> = (1..=gens.len())
        .map(|k| closure(a, &gens[..k]).size())
        .collect();

    let mut images = Vec::with_capacity(gens.len());
    Ok(assign(
        a,
        b,
        &gens,
        &orders_a,
        &orders_b,
        &prefix_sizes,
        &mut images,
    ))
}

/// Greedy generating sequence: repeatedly the largest-order element outside
/// the running closure (smallest index on ties).
fn greedy_generators(g: &GroupTable) -> Vec<usize> {
    let mut gens: Vec<usize> = Vec::new();
    let mut cl = closure(g, &[]);
    while cl.size() < g.order() {
        let next = (0..g.order())
            .filter(|&x| !cl.contains(x))
            .max_by(|&x, &y| {
                g.element_order(x)
                    .cmp(&g.element_order(y))
                    .then(y.cmp(&x))
            })
            .unwrap();
        gens.push(next);
        cl = closure(g, &gens);
    }
    gens
}

fn assign(
    a: &GroupTable,
    b: &GroupTable,
    gens: &[usize],
    orders_a: &[usize],
    orders_b: &[usize],
    prefix_sizes: &[usize],
    images: &mut Vec<usize>,
) -> bool {
    if images.len() == gens.len() {
        return extends_to_isomorphism(a, b, gens, images);
    }
    let i = images.len();
    let want = orders_a[gens[i]];
    for cand in 0..b.order() {
        if orders_b[cand] != want {
            continue;
        }
        images.push(cand);
        if closure(b, images).size() == prefix_sizes[i]
            && assign(a, b, gens, orders_a, orders_b, prefix_sizes, images)
        {
            return true;
        }
        images.pop();
    }
    false
}

/// Tries to extend gens -> images to a full isomorphism by breadth-first
/// word building, then verifies the product law over every pair.
fn extends_to_isomorphism(
    a: &GroupTable,
    b: &GroupTable,
    gens: &[usize],
    images: &[usize],
) -> bool {
    let n = a.order();
    let mut map = vec![usize::MAX; n];
    map[0] = 0;
    let mut queue = vec![0usize];
    let mut qi = 0;
    while qi < queue.len() {
        let x = queue[qi];
        qi += 1;
        for (&g_i, &m_i) in gens.iter().zip(images) {
            let xa = a.mul(x, g_i);
            let xb = b.mul(map[x], m_i);
            if map[xa] == usize::MAX {
                map[xa] = xb;
                queue.push(xa);
            } else if map[xa] != xb {
                return false;
            }
        }
    }
    if queue.len() != n {
        return false; // gens did not generate; prefix sizes should prevent this
    }
    let mut hit = vec![false; n];
    for &m in &map {
        if hit[m] {
            return false;
        }
        hit[m] = true;
    }
    for x in 0..n {
        for y in 0..n {
            if map[a.mul(x, y)] != b.mul(map[x], map[y]) {
                return false;
            }
        }
    }
    true
}

/// True iff some normal subgroup of g yields a quotient isomorphic to the
/// target (the trivial kernel counts, so g itself qualifies).
pub fn has_quotient_isomorphic_to(
    l: &SubgroupLattice<'_>,
    target: &GroupTable,
) -> Result<bool, GroupError> {
    let g = l.parent();
    if target.order() == 0 || g.order() % target.order() != 0 {
        return Ok(false);
    }
    let index = target.order();
    for q in quotients_of_index(l, index) {
        if is_isomorphic_small(q.quotient(), target)? {
            return Ok(true);
        }
    }
    Ok(false)
}
