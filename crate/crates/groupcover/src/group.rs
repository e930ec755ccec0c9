//! Multiplication-table groups and constructors for the built-in families.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use std::sync::OnceLock;
use thiserror::Error;

/// Default ceiling on table order. `GCOVER_MAX_ORDER` overrides it.
pub const DEFAULT_TABLE_CAP: usize = 4096;

/// Orders up to this bound get the full cubic associativity scan.
const EXHAUSTIVE_ASSOC_LIMIT: usize = 256;
/// Above the exhaustive bound, this many seeded random triples are checked.
const SAMPLED_ASSOC_TRIPLES: usize = 1_000_000;
const ASSOC_SAMPLE_SEED: u64 = 0x6a5e_55ed_0001;

/// Largest order any constructor accepts. Reads `GCOVER_MAX_ORDER` once;
/// values are clamped to 65536 because element indices are stored as u16.
pub fn table_cap() -> usize {
    static CAP: OnceLock<usize> = OnceLock::new();
    *CAP.get_or_init(|| {
        std::env::var("GCOVER_MAX_ORDER")
            .ok()
            .and_then(|v| v.trim().parse::<usize>().ok())
            .unwrap_or(DEFAULT_TABLE_CAP)
            .min(1 << 16)
    })
}

#[derive(Debug, Error)]
pub enum GroupError {
    #[error("{what} has order {needed}, over the table cap {cap}")]
    TooLarge {
        what: String,
        needed: usize,
        cap: usize,
    },
    #[error("{0}")]
    BadParameter(String),
    #[error("invalid multiplication table: {0}")]
    BadTable(String),
}

/// A finite group as an explicit multiplication table.
///
/// Element 0 is the identity. The table is validated at construction:
/// identity row and column, Latin-square rows and columns, two-sided
/// inverses, and associativity (exhaustive up to order 256, seeded random
/// sampling above).
#[derive(Clone, PartialEq, Eq)]
pub struct GroupTable {
    order: usize,
    product: Vec<u16>,
    inverse: Vec<u16>,
    labels: Vec<String>,
    spec: String,
}

impl std::fmt::Debug for GroupTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "GroupTable({}, order {})", self.spec, self.order)
    }
}

impl GroupTable {
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.product[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a] as usize
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// The normalized group description this table was built from.
    pub fn spec(&self) -> &str {
        &self.spec
    }

    pub(crate) fn with_spec(mut self, spec: String) -> Self {
        self.spec = spec;
        self
    }

    pub fn pow(&self, a: usize, e: usize) -> usize {
        let mut acc = 0;
        for _ in 0..e {
            acc = self.mul(acc, a);
        }
        acc
    }

    /// Least k >= 1 with a^k = identity.
    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// Lcm of all element orders.
    pub fn exponent(&self) -> usize {
        (0..self.order).fold(1, |acc, a| lcm(acc, self.element_order(a)))
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (a + 1..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// True iff some element generates the whole group.
    pub fn is_cyclic(&self) -> bool {
        (0..self.order).any(|a| self.element_order(a) == self.order)
    }

    /// Elements commuting with everything, ascending.
    pub fn center(&self) -> Vec<usize> {
        (0..self.order)
            .filter(|&a| (0..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
            .collect()
    }

    /// Builds a table from explicit rows; all four table invariants are
    /// checked, so this is the entry point for hand-made or permuted tables.
    pub fn from_product(
        rows: Vec<Vec<usize>>,
        labels: Vec<String>,
        spec: &str,
    ) -> Result<GroupTable, GroupError> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(GroupError::BadTable("table is not square".into()));
        }
        let mut flat = Vec::with_capacity(n * n);
        for row in &rows {
            for &v in row {
                if v >= n {
                    return Err(GroupError::BadTable(format!(
                        "entry {v} out of range for order {n}"
                    )));
                }
                flat.push(v as u16);
            }
        }
        GroupTable::checked(n, flat, labels, spec.to_string())
    }

    /// Internal constructor: computes inverses and validates everything.
    pub(crate) fn checked(
        order: usize,
        product: Vec<u16>,
        labels: Vec<String>,
        spec: String,
    ) -> Result<GroupTable, GroupError> {
        if order == 0 {
            return Err(GroupError::BadTable("empty table".into()));
        }
        let cap = table_cap();
        if order > cap {
            return Err(GroupError::TooLarge {
                what: spec,
                needed: order,
                cap,
            });
        }
        if product.len() != order * order {
            return Err(GroupError::BadTable("table size mismatch".into()));
        }
        if labels.len() != order {
            return Err(GroupError::BadTable("label count mismatch".into()));
        }
        if product.iter().any(|&v| v as usize >= order) {
            return Err(GroupError::BadTable("entry out of range".into()));
        }

        let n = order;
        let at = |a: usize, b: usize| product[a * n + b] as usize;

        for i in 0..n {
            if at(0, i) != i || at(i, 0) != i {
                return Err(GroupError::BadTable(format!(
                    "element 0 is not a two-sided identity at index {i}"
                )));
            }
        }

        let mut seen = vec![false; n];
        for i in 0..n {
            seen.iter_mut().for_each(|s| *s = false);
            for j in 0..n {
                let v = at(i, j);
                if seen[v] {
                    return Err(GroupError::BadTable(format!("row {i} repeats {v}")));
                }
                seen[v] = true;
            }
            seen.iter_mut().for_each(|s| *s = false);
            for j in 0..n {
                let v = at(j, i);
                if seen[v] {
                    return Err(GroupError::BadTable(format!("column {i} repeats {v}")));
                }
                seen[v] = true;
            }
        }

        let mut inverse = vec![0u16; n];
        for i in 0..n {
            // Latin rows guarantee exactly one hit.
            let j = (0..n).find(|&j| at(i, j) == 0).unwrap();
            if at(j, i) != 0 {
                return Err(GroupError::BadTable(format!(
                    "element {i} has no two-sided inverse"
                )));
            }
            inverse[i] = j as u16;
        }

        if n <= EXHAUSTIVE_ASSOC_LIMIT {
            for a in 0..n {
                for b in 0..n {
                    let ab = at(a, b);
                    for c in 0..n {
                        if at(ab, c) != at(a, at(b, c)) {
                            return Err(GroupError::BadTable(format!(
                                "associativity fails at ({a},{b},{c})"
                            )));
                        }
                    }
                }
            }
        } else {
            let mut rng = StdRng::seed_from_u64(ASSOC_SAMPLE_SEED);
            for _ in 0..SAMPLED_ASSOC_TRIPLES {
                let a = rng.random_range(0..n);
                let b = rng.random_range(0..n);
                let c = rng.random_range(0..n);
                if at(at(a, b), c) != at(a, at(b, c)) {
                    return Err(GroupError::BadTable(format!(
                        "associativity fails at ({a},{b},{c})"
                    )));
                }
            }
        }

        Ok(GroupTable {
            order,
            product,
            inverse,
            labels,
            spec,
        })
    }
}

pub(crate) fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

fn is_prime(p: usize) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn check_cap(what: &str, needed: usize) -> Result<(), GroupError> {
    let cap = table_cap();
    if needed > cap {
        Err(GroupError::TooLarge {
            what: what.to_string(),
            needed,
            cap,
        })
    } else {
        Ok(())
    }
}

fn fill(n: usize, f: impl Fn(usize, usize) -> usize) -> Vec<u16> {
    let mut t = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            t.push(f(a, b) as u16);
        }
    }
    t
}

/// "e" for the identity, otherwise concatenated power terms like "x^2y".
fn two_letter_label(x: &str, i: usize, y: &str, j: usize) -> String {
    let mut s = String::new();
    match i {
        0 => {}
        1 => s.push_str(x),
        _ => s.push_str(&format!("{x}^{i}")),
    }
    match j {
        0 => {}
        1 => s.push_str(y),
        _ => s.push_str(&format!("{y}^{j}")),
    }
    if s.is_empty() {
        s.push('e');
    }
    s
}

/// Z/nZ under addition.
pub fn build_cyclic(n: usize) -> Result<GroupTable, GroupError> {
    if n == 0 {
        return Err(GroupError::BadParameter(
            "cyclic group order must be at least 1".into(),
        ));
    }
    check_cap("cyclic group", n)?;
    let product = fill(n, |a, b| (a + b) % n);
    let labels = (0..n).map(|i| i.to_string()).collect();
    GroupTable::checked(n, product, labels, format!("C{n}"))
}

/// Dihedral group of the given ORDER 2n: x of order n, y of order 2,
/// yxy = x^-1. Elements x^i y^j with index i + n*j.
pub fn build_dihedral(order: usize) -> Result<GroupTable, GroupError> {
    if order < 4 || order % 2 != 0 {
        return Err(GroupError::BadParameter(format!(
            "dihedral order must be even and at least 4, got {order}"
        )));
    }
    check_cap("dihedral group", order)?;
    let n = order / 2;
    let product = fill(order, |p, q| {
        let (i1, j1) = (p % n, p / n);
        let (i2, j2) = (q % n, q / n);
        let i2 = if j1 == 1 { (n - i2) % n } else { i2 };
        (i1 + i2) % n + n * ((j1 + j2) % 2)
    });
    let labels = (0..order)
        .map(|p| two_letter_label("x", p % n, "y", p / n))
        .collect();
    GroupTable::checked(order, product, labels, format!("D{order}"))
}

/// Generalized quaternion (dicyclic 2-group) of order 2^m, m >= 3:
/// a of order 2^(m-1), b^2 = a^(2^(m-2)), bab^-1 = a^-1.
/// Elements a^i b^j, j in {0,1}, index i + 2^(m-1)*j.
pub fn build_generalized_quaternion(order: usize) -> Result<GroupTable, GroupError> {
    if order < 8 || !order.is_power_of_two() {
        return Err(GroupError::BadParameter(format!(
            "generalized quaternion order must be a power of 2, at least 8, got {order}"
        )));
    }
    check_cap("generalized quaternion group", order)?;
    let half = order / 2; // order of a
    let quarter = order / 4; // exponent of a equal to b^2
    let product = fill(order, |p, q| {
        let (i1, j1) = (p % half, p / half);
        let (i2, j2) = (q % half, q / half);
        let i2 = if j1 == 1 { (half - i2) % half } else { i2 };
        let extra = if j1 == 1 && j2 == 1 { quarter } else { 0 };
        (i1 + i2 + extra) % half + half * (j1 ^ j2)
    });
    let labels = (0..order)
        .map(|p| two_letter_label("a", p % half, "b", p / half))
        .collect();
    GroupTable::checked(order, product, labels, format!("Q{order}"))
}

/// C_p^k: vectors of k digits mod p under componentwise addition.
/// Digit 0 varies fastest in the index encoding.
pub fn build_elementary_abelian(p: usize, k: usize) -> Result<GroupTable, GroupError> {
    if !is_prime(p) {
        return Err(GroupError::BadParameter(format!("{p} is not prime")));
    }
    if k == 0 {
        return Err(GroupError::BadParameter(
            "elementary abelian rank must be at least 1".into(),
        ));
    }
    let order = p.checked_pow(k as u32).unwrap_or(usize::MAX);
    check_cap(&format!("E({p},{k})"), order)?;
    let digits: Vec<Vec<usize>> = (0..order)
        .map(|mut v| {
            (0..k)
                .map(|_| {
                    let d = v % p;
                    v /= p;
                    d
                })
                .collect()
        })
        .collect();
    let product = fill(order, |a, b| {
        digits[a]
            .iter()
            .zip(&digits[b])
            .rev()
            .fold(0, |acc, (x, y)| acc * p + (x + y) % p)
    });
    let labels = (0..order)
        .map(|i| {
            if k == 1 {
                digits[i][0].to_string()
            } else {
                let parts: Vec<String> = digits[i].iter().map(|d| d.to_string()).collect();
                format!("({})", parts.join(","))
            }
        })
        .collect();
    GroupTable::checked(order, product, labels, format!("E({p},{k})"))
}

/// Componentwise product on index pairs; pair (i, j) has index i*|b| + j.
pub fn build_direct_product(a: &GroupTable, b: &GroupTable) -> Result<GroupTable, GroupError> {
    let order = a.order().checked_mul(b.order()).unwrap_or(usize::MAX);
    check_cap("direct product", order)?;
    let nb = b.order();
    let product = fill(order, |p, q| {
        a.mul(p / nb, q / nb) * nb + b.mul(p % nb, q % nb)
    });
    let labels = (0..order)
        .map(|p| format!("({},{})", a.label(p / nb), b.label(p % nb)))
        .collect();
    let rhs = if b.spec().contains(" x ") {
        format!("({})", b.spec())
    } else {
        b.spec().to_string()
    };
    GroupTable::checked(order, product, labels, format!("{} x {}", a.spec(), rhs))
}

/// C_n semidirect C_m where b a b^-1 = a^k; requires gcd(k, n) = 1 and
/// k^m = 1 mod n. Elements a^i b^j with index i + n*j.
pub fn build_semidirect_cyclic(n: usize, m: usize, k: usize) -> Result<GroupTable, GroupError> {
    if n == 0 || m == 0 {
        return Err(GroupError::BadParameter(
            "semidirect factors must have order at least 1".into(),
        ));
    }
    if n > 1 && gcd(k % n, n) != 1 {
        return Err(GroupError::BadParameter(format!(
            "action parameter {k} is not a unit mod {n}"
        )));
    }
    // Requires k^m = 1 mod n: conjugation by b^m must be trivial.
    let mut kpow = vec![1 % n; m];
    for j in 1..m {
        kpow[j] = kpow[j - 1] * (k % n) % n;
    }
    if (kpow[m - 1] * (k % n)) % n != 1 % n {
        return Err(GroupError::BadParameter(format!(
            "{k}^{m} is not 1 mod {n}, so the action does not close"
        )));
    }
    let order = n.checked_mul(m).unwrap_or(usize::MAX);
    check_cap(&format!("SD({n},{m},{k})"), order)?;
    let product = fill(order, |p, q| {
        let (i1, j1) = (p % n, p / n);
        let (i2, j2) = (q % n, q / n);
        (i1 + i2 * kpow[j1]) % n + n * ((j1 + j2) % m)
    });
    let labels = (0..order)
        .map(|p| two_letter_label("a", p % n, "b", p / n))
        .collect();
    GroupTable::checked(order, product, labels, format!("SD({n},{m},{k})"))
}

/// All permutations of 0..n in lexicographic order; identity comes first.
fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    let mut used = vec![false; n];
    fn rec(
        n: usize,
        depth: usize,
        cur: &mut Vec<usize>,
        used: &mut Vec<bool>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if depth == n {
            out.push(cur.clone());
            return;
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                cur[depth] = v;
                rec(n, depth + 1, cur, used, out);
                used[v] = false;
            }
        }
    }
    rec(n, 0, &mut cur, &mut used, &mut out);
    out
}

fn is_even_permutation(p: &[usize]) -> bool {
    let mut inversions = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inversions += 1;
            }
        }
    }
    inversions % 2 == 0
}

/// Cycle notation on 1-based points, fixed points omitted; "e" for identity.
fn cycle_label(p: &[usize]) -> String {
    let n = p.len();
    let mut seen = vec![false; n];
    let mut out = String::new();
    for start in 0..n {
        if seen[start] || p[start] == start {
            seen[start] = true;
            continue;
        }
        let mut cycle = vec![start];
        seen[start] = true;
        let mut x = p[start];
        while x != start {
            seen[x] = true;
            cycle.push(x);
            x = p[x];
        }
        out.push('(');
        out.push_str(
            &cycle
                .iter()
                .map(|v| (v + 1).to_string())
                .collect::<Vec<_>>()
                .join(" "),
        );
        out.push(')');
    }
    if out.is_empty() {
        out.push('e');
    }
    out
}

fn permutation_table(
    perms: Vec<Vec<usize>>,
    spec: String,
) -> Result<GroupTable, GroupError> {
    let order = perms.len();
    let index: std::collections::HashMap<&[usize], usize> = perms
        .iter()
        .enumerate()
        .map(|(i, p)| (p.as_slice(), i))
        .collect();
    let product = fill(order, |a, b| {
        // (p q)(x) = p(q(x)): right factor acts first.
        let composed: Vec<usize> = perms[b].iter().map(|&x| perms[a][x]).collect();
        index[composed.as_slice()]
    });
    let labels = perms.iter().map(|p| cycle_label(p)).collect();
    GroupTable::checked(order, product, labels, spec)
}

/// Symmetric group on n points, 2 <= n <= 5.
pub fn build_symmetric(n: usize) -> Result<GroupTable, GroupError> {
    if !(2..=5).contains(&n) {
        return Err(GroupError::BadParameter(format!(
            "symmetric group degree must be 2..5, got {n}"
        )));
    }
    permutation_table(permutations(n), format!("S{n}"))
}

/// Alternating group on n points, 3 <= n <= 5.
pub fn build_alternating(n: usize) -> Result<GroupTable, GroupError> {
    if !(3..=5).contains(&n) {
        return Err(GroupError::BadParameter(format!(
            "alternating group degree must be 3..5, got {n}"
        )));
    }
    let perms: Vec<Vec<usize>> = permutations(n)
        .into_iter()
        .filter(|p| is_even_permutation(p))
        .collect();
    permutation_table(perms, format!("A{n}"))
}
