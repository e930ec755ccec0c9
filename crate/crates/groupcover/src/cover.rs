//! Covering invariants: three-subgroup covers, the covering number sigma,
//! and the predicates behind the census checks.

use crate::bitset::BitSet;
use crate::group::{gcd, GroupError, GroupTable};
use crate::lattice::{SubgroupLattice, SubgroupSet};
use crate::quotient::{count_klein_quotients, has_elem_abelian_8_quotient};
use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Default ceiling for the sigma search.
pub const DEFAULT_SIGMA_CAP: usize = 12;

/// An unordered triple of distinct proper subgroups, held as ascending
/// indices into the canonical lattice order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CoverTriple {
    pub indices: [usize; 3],
}

impl CoverTriple {
    pub fn members<'a, 'g>(&self, l: &'a SubgroupLattice<'g>) -> [&'a SubgroupSet<'g>; 3] {
        [
            l.get(self.indices[0]),
            l.get(self.indices[1]),
            l.get(self.indices[2]),
        ]
    }

    /// Intersection of the three members.
    pub fn meet<'g>(&self, l: &SubgroupLattice<'g>) -> SubgroupSet<'g> {
        let [a, b, c] = self.members(l);
        a.intersect(b).intersect(c)
    }
}

/// True iff the union of the parts is the whole parent group.
pub fn is_cover(g: &GroupTable, parts: &[&SubgroupSet<'_>]) -> bool {
    let mut union = BitSet::new(g.order());
    for p in parts {
        assert!(
            std::ptr::eq(p.parent(), g),
            "cover part belongs to a different table"
        );
        union.union_with(p.members());
    }
    union.is_full()
}

/// True iff no member lies inside the union of the other two.
pub fn is_irredundant_triple(
    h1: &SubgroupSet<'_>,
    h2: &SubgroupSet<'_>,
    h3: &SubgroupSet<'_>,
) -> bool {
    h1.members().escapes_union(h2.members(), h3.members())
        && h2.members().escapes_union(h1.members(), h3.members())
        && h3.members().escapes_union(h1.members(), h2.members())
}

/// True iff every one of g's squares lies in h.
pub fn all_squares_in(g: &GroupTable, h: &SubgroupSet<'_>) -> bool {
    (0..g.order()).all(|x| h.contains(g.mul(x, x)))
}

/// All coverings of the parent by three distinct proper subgroups, in
/// canonical (ascending index) order. Candidates are the nontrivial proper
/// subgroups: the trivial subgroup adds nothing to any union. A triple can
/// only cover when its sizes sum to at least n + 2, because the three
/// pairwise intersections all contain the identity.
pub fn enumerate_three_covers(l: &SubgroupLattice<'_>) -> Vec<CoverTriple> {
    let g = l.parent();
    let n = g.order();
    let pool = l.nontrivial_proper_indices();
    let sizes: Vec<usize> = pool.iter().map(|&i| l.get(i).size()).collect();
    let mut out = Vec::new();
    if pool.len() < 3 {
        return out;
    }
    let max_size = *sizes.last().unwrap();
    let need_total = n + 2;
    for a in 0..pool.len() {
        if sizes[a] + 2 * max_size < need_total {
            continue;
        }
        for b in a + 1..pool.len() {
            let have = sizes[a] + sizes[b];
            if have + max_size < need_total {
                continue;
            }
            let need = need_total.saturating_sub(have);
            // sizes ascend with the lattice order: binary search the first
            // viable third index
            let c0 = b + 1 + sizes[b + 1..].partition_point(|&s| s < need);
            for c in c0..pool.len() {
                let (ha, hb, hc) = (l.get(pool[a]), l.get(pool[b]), l.get(pool[c]));
                if BitSet::union3_is_full(ha.members(), hb.members(), hc.members()) {
                    out.push(CoverTriple {
                        indices: [pool[a], pool[b], pool[c]],
                    });
                }
            }
        }
    }
    out
}

/// How c3 is computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum C3Method {
    /// Count coverings by exhaustive triple enumeration.
    Enumeration,
    /// Count normal subgroups of index 4 whose quotient has exponent 2.
    QuotientCount,
}

/// The number of coverings by three proper subgroups. The two methods
/// agree on every group; `analyze` asserts that.
pub fn c3(l: &SubgroupLattice<'_>, method: C3Method) -> usize {
    match method {
        C3Method::Enumeration => enumerate_three_covers(l).len(),
        C3Method::QuotientCount => count_klein_quotients(l),
    }
}

/// Outcome of the sigma search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SigmaValue {
    Finite(usize),
    /// The group is cyclic: no set of proper subgroups covers it.
    NoCover,
    /// The minimum exceeds the search cap.
    ExceedsCap,
}

impl SigmaValue {
    pub fn finite(&self) -> Option<usize> {
        match self {
            SigmaValue::Finite(k) => Some(*k),
            _ => None,
        }
    }
}

impl std::fmt::Display for SigmaValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SigmaValue::Finite(k) => write!(f, "{k}"),
            SigmaValue::NoCover => write!(f, "no-cover"),
            SigmaValue::ExceedsCap => write!(f, "exceeds-cap"),
        }
    }
}

impl Serialize for SigmaValue {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            SigmaValue::Finite(k) => s.serialize_u64(*k as u64),
            SigmaValue::NoCover => s.serialize_str("no-cover"),
            SigmaValue::ExceedsCap => s.serialize_str("exceeds-cap"),
        }
    }
}

impl<'de> Deserialize<'de> for SigmaValue {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct V;
        impl Visitor<'_> for V {
            type Value = SigmaValue;
            fn expecting(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
                f.write_str("an integer, \"no-cover\", or \"exceeds-cap\"")
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> Result<SigmaValue, E> {
                Ok(SigmaValue::Finite(v as usize))
            }
            fn visit_i64<E: de::Error>(self, v: i64) -> Result<SigmaValue, E> {
                usize::try_from(v)
                    .map(SigmaValue::Finite)
                    .map_err(|_| E::custom("sigma cannot be negative"))
            }
            fn visit_str<E: de::Error>(self, v: &str) -> Result<SigmaValue, E> {
                match v {
                    "no-cover" => Ok(SigmaValue::NoCover),
                    "exceeds-cap" => Ok(SigmaValue::ExceedsCap),
                    other => Err(E::custom(format!("unknown sigma value {other:?}"))),
                }
            }
        }
        d.deserialize_any(V)
    }
}

/// Minimal covering number plus a witness. The witness lists lattice
/// indices of maximal subgroups, is lexicographically least among the
/// minimal covers, and is empty unless the value is finite.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SigmaResult {
    pub value: SigmaValue,
    pub witness: Vec<usize>,
}

/// Minimal number of proper subgroups covering the parent, searched over
/// maximal subgroups only: any cover member can be replaced by a maximal
/// subgroup above it without changing the count. Cyclic groups have no
/// cover at all (a generator lies in no proper subgroup).
pub fn sigma(l: &SubgroupLattice<'_>, cap: usize) -> SigmaResult {
    let g = l.parent();
    if g.is_cyclic() {
        return SigmaResult {
            value: SigmaValue::NoCover,
            witness: Vec::new(),
        };
    }
    let maximals = l.maximal_indices();
    let n = g.order();
    // per element: which maximals (positions into `maximals`) contain it
    let mut containing: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (pos, &mi) in maximals.iter().enumerate() {
        for e in l.get(mi).elements() {
            containing[e].push(pos);
        }
    }
    let max_size = maximals.iter().map(|&mi| l.get(mi).size()).max().unwrap();

    let mut start = BitSet::new(n);
    start.insert(0); // the identity is in every subgroup

    let mut found_k = None;
    for k in 1..=cap.min(maximals.len()) {
        if cover_exists(l, &maximals, &containing, max_size, &start, k) {
            found_k = Some(k);
            break;
        }
    }
    let Some(k) = found_k else {
        return SigmaResult {
            value: SigmaValue::ExceedsCap,
            witness: Vec::new(),
        };
    };

    let mut chosen = Vec::with_capacity(k);
    let witness = lex_least_cover(l, &maximals, max_size, &start, k, 0, &mut chosen)
        .expect("a cover of the found size exists");
    SigmaResult {
        value: SigmaValue::Finite(k),
        witness,
    }
}

/// Budgeted search: branch on an uncovered element with the fewest
/// containing maximals.
fn cover_exists(
    l: &SubgroupLattice<'_>,
    maximals: &[usize],
    containing: &[Vec<usize>],
    max_size: usize,
    covered: &BitSet,
    budget: usize,
) -> bool {
    if covered.is_full() {
        return true;
    }
    if budget == 0 {
        return false;
    }
    let n = covered.capacity();
    let uncovered = n - covered.len();
    if uncovered > budget * (max_size - 1) {
        return false;
    }
    let branch = (0..n)
        .filter(|&e| !covered.contains(e))
        .min_by_key(|&e| containing[e].len())
        .unwrap();
    for &pos in &containing[branch] {
        let mut next = covered.clone();
        next.union_with(l.get(maximals[pos]).members());
        if cover_exists(l, maximals, containing, max_size, &next, budget - 1) {
            return true;
        }
    }
    false
}

/// First cover found in lexicographic order over ascending maximal
/// positions. Every chosen member must add a new element: in a cover of
/// minimal size none is redundant.
fn lex_least_cover(
    l: &SubgroupLattice<'_>,
    maximals: &[usize],
    max_size: usize,
    covered: &BitSet,
    k: usize,
    from: usize,
    chosen: &mut Vec<usize>,
) -> Option<Vec<usize>> {
    if covered.is_full() {
        return Some(chosen.iter().map(|&pos| maximals[pos]).collect());
    }
    let remaining = k - chosen.len();
    if remaining == 0 {
        return None;
    }
    let uncovered = covered.capacity() - covered.len();
    if uncovered > remaining * (max_size - 1) {
        return None;
    }
    for pos in from..maximals.len() {
        if maximals.len() - pos < remaining {
            return None;
        }
        let members = l.get(maximals[pos]).members();
        if members.is_subset_of(covered) {
            continue;
        }
        let mut next = covered.clone();
        next.union_with(members);
        chosen.push(pos);
        if let Some(w) = lex_least_cover(l, maximals, max_size, &next, k, pos + 1, chosen) {
            return Some(w);
        }
        chosen.pop();
    }
    None
}

/// True iff at least one irredundant triple of proper subgroups exists and
/// every one of them covers the group.
pub fn any_three_irredundant_cover(l: &SubgroupLattice<'_>) -> bool {
    let pool = l.nontrivial_proper_indices();
    let mut found_irredundant = false;
    for a in 0..pool.len() {
        for b in a + 1..pool.len() {
            for c in b + 1..pool.len() {
                let (ha, hb, hc) = (l.get(pool[a]), l.get(pool[b]), l.get(pool[c]));
                if is_irredundant_triple(ha, hb, hc) {
                    found_irredundant = true;
                    if !BitSet::union3_is_full(ha.members(), hb.members(), hc.members()) {
                        return false;
                    }
                }
            }
        }
    }
    found_irredundant
}

/// The first irredundant triple that fails to cover, if any: the witness
/// behind a false `any_three_irredundant_cover`.
pub fn first_irredundant_noncover(l: &SubgroupLattice<'_>) -> Option<CoverTriple> {
    let pool = l.nontrivial_proper_indices();
    for a in 0..pool.len() {
        for b in a + 1..pool.len() {
            for c in b + 1..pool.len() {
                let (ha, hb, hc) = (l.get(pool[a]), l.get(pool[b]), l.get(pool[c]));
                if is_irredundant_triple(ha, hb, hc)
                    && !BitSet::union3_is_full(ha.members(), hb.members(), hc.members())
                {
                    return Some(CoverTriple {
                        indices: [pool[a], pool[b], pool[c]],
                    });
                }
            }
        }
    }
    None
}

/// True iff the group has at least three nontrivial proper subgroups and
/// every triple of distinct ones covers it. Quantifying over nontrivial
/// subgroups is deliberate: a triple containing the trivial subgroup never
/// covers anything.
pub fn any_three_distinct_cover(l: &SubgroupLattice<'_>) -> bool {
    let pool = l.nontrivial_proper_indices();
    if pool.len() < 3 {
        return false;
    }
    for a in 0..pool.len() {
        for b in a + 1..pool.len() {
            for c in b + 1..pool.len() {
                let (ha, hb, hc) = (l.get(pool[a]), l.get(pool[b]), l.get(pool[c]));
                if !BitSet::union3_is_full(ha.members(), hb.members(), hc.members()) {
                    return false;
                }
            }
        }
    }
    true
}

/// Three equivalent readings of "G is uniquely a union of three proper
/// subgroups". All three booleans must always agree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct UniqueCoverEquivalence {
    /// Exactly one covering by three proper subgroups exists.
    pub unique_enumerated_cover: bool,
    /// Exactly one quotient is a Klein four-group.
    pub unique_klein_quotient: bool,
    /// Some quotient is Klein four, and none is C2 x C2 x C2.
    pub klein_but_no_triple_klein: bool,
}

impl UniqueCoverEquivalence {
    pub fn as_array(&self) -> [bool; 3] {
        [
            self.unique_enumerated_cover,
            self.unique_klein_quotient,
            self.klein_but_no_triple_klein,
        ]
    }

    pub fn all_agree(&self) -> bool {
        let [a, b, c] = self.as_array();
        a == b && b == c
    }
}

pub fn unique_three_cover_equivalence(l: &SubgroupLattice<'_>) -> UniqueCoverEquivalence {
    let klein = count_klein_quotients(l);
    UniqueCoverEquivalence {
        unique_enumerated_cover: c3(l, C3Method::Enumeration) == 1,
        unique_klein_quotient: klein == 1,
        klein_but_no_triple_klein: klein >= 1 && !has_elem_abelian_8_quotient(l),
    }
}

/// For a direct product of nilpotent parts with pairwise coprime orders
/// (such a product is itself nilpotent): predicts a unique three-cover iff
/// the smallest prime divisor is 2 and a Sylow 2-subgroup needs exactly two
/// generators, and compares the prediction with the computed covering count
/// of the product.
pub struct CoprimePartsCheck {
    pub prediction: bool,
    pub actual: bool,
}

pub fn corollary_e_check(parts: &[&GroupTable]) -> Result<CoprimePartsCheck, GroupError> {
    if parts.is_empty() {
        return Err(GroupError::BadParameter("no parts given".into()));
    }
    for part in parts {
        if part.order() < 2 {
            return Err(GroupError::BadParameter(
                "a trivial part has no prime factors".into(),
            ));
        }
    }
    for (i, a) in parts.iter().enumerate() {
        for b in &parts[i + 1..] {
            let d = gcd(a.order(), b.order());
            if d != 1 {
                return Err(GroupError::BadParameter(format!(
                    "two parts share the factor {d}"
                )));
            }
        }
    }

    // Coprime orders make the product nilpotent exactly when every part is;
    // a finite group is nilpotent iff each maximal subgroup is normal.
    let lattices: Vec<_> = parts
        .iter()
        .map(|part| crate::lattice::all_subgroups(part))
        .collect();
    for (part, l) in parts.iter().zip(&lattices) {
        let nilpotent = l.maximal_indices().iter().all(|&i| l.is_normal_flag(i));
        if !nilpotent {
            return Err(GroupError::BadParameter(format!(
                "part of order {} is not nilpotent",
                part.order()
            )));
        }
    }

    let smallest = parts
        .iter()
        .map(|part| smallest_prime_factor(part.order()))
        .min()
        .unwrap();
    let prediction = smallest == 2 && {
        let pos = parts.iter().position(|p| p.order() % 2 == 0).unwrap();
        sylow_two_generator_count(parts[pos], &lattices[pos]) == 2
    };

    let mut product = parts[0].clone();
    for part in &parts[1..] {
        product = crate::group::build_direct_product(&product, part)?;
    }
    let lattice = crate::lattice::all_subgroups(&product);
    let actual = c3(&lattice, C3Method::Enumeration) == 1;
    Ok(CoprimePartsCheck { prediction, actual })
}

/// Minimal generator count of a Sylow 2-subgroup of the part. For a 2-group
/// S the squares generate the Frattini subgroup (S modulo its squares has
/// exponent 2, hence is abelian, so the commutators are already inside), and
/// the generator count is the 2-logarithm of the Frattini index.
fn sylow_two_generator_count(part: &GroupTable, l: &SubgroupLattice<'_>) -> u32 {
    let two_power = 1 << part.order().trailing_zeros();
    let sylow = l.subgroups_of_order(two_power)[0];
    let squares: Vec<usize> = sylow.elements().map(|e| part.mul(e, e)).collect();
    let frattini = crate::lattice::closure(part, &squares);
    (sylow.size() / frattini.size()).trailing_zeros()
}

fn smallest_prime_factor(n: usize) -> usize {
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            return p;
        }
        p += 1;
    }
    n
}
