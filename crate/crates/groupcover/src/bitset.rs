//! Fixed-width bitsets over element indices of a single group.

const LIMB_BITS: usize = 64;

/// A set of element indices `0..nbits`, packed into 64-bit limbs.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitSet {
    nbits: usize,
    limbs: Vec<u64>,
}

impl BitSet {
    pub fn new(nbits: usize) -> Self {
        let words = nbits.div_ceil(LIMB_BITS);
        BitSet {
            nbits,
            limbs: vec![0; words.max(1)],
        }
    }

    /// The set `{0, 1, .., nbits-1}`.
    pub fn full(nbits: usize) -> Self {
        let mut s = Self::new(nbits);
        for limb in s.limbs.iter_mut() {
            *limb = u64::MAX;
        }
        s.clear_tail();
        s
    }

    fn clear_tail(&mut self) {
        let tail = self.nbits % LIMB_BITS;
        if tail != 0 {
            if let Some(last) = self.limbs.last_mut() {
                *last &= (1u64 << tail) - 1;
            }
        }
    }

    pub fn capacity(&self) -> usize {
        self.nbits
    }

    pub fn insert(&mut self, i: usize) -> bool {
        debug_assert!(i < self.nbits);
        let limb = &mut self.limbs[i / LIMB_BITS];
        let mask = 1u64 << (i % LIMB_BITS);
        let fresh = *limb & mask == 0;
        *limb |= mask;
        fresh
    }

    pub fn contains(&self, i: usize) -> bool {
        debug_assert!(i < self.nbits);
        self.limbs[i / LIMB_BITS] & (1u64 << (i % LIMB_BITS)) != 0
    }

    pub fn len(&self) -> usize {
        self.limbs.iter().map(|l| l.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.limbs.iter().all(|&l| l == 0)
    }

    pub fn is_full(&self) -> bool {
        self.len() == self.nbits
    }

    pub fn union_with(&mut self, other: &BitSet) {
        debug_assert_eq!(self.nbits, other.nbits);
        for (a, b) in self.limbs.iter_mut().zip(&other.limbs) {
            *a |= b;
        }
    }

    pub fn intersection(&self, other: &BitSet) -> BitSet {
        debug_assert_eq!(self.nbits, other.nbits);
        BitSet {
            nbits: self.nbits,
            limbs: self
                .limbs
                .iter()
                .zip(&other.limbs)
                .map(|(a, b)| a & b)
                .collect(),
        }
    }

    pub fn is_subset_of(&self, other: &BitSet) -> bool {
        debug_assert_eq!(self.nbits, other.nbits);
        self.limbs.iter().zip(&other.limbs).all(|(a, b)| a & !b == 0)
    }

    /// True iff some member of `self` lies outside `a ∪ b`.
    pub fn escapes_union(&self, a: &BitSet, b: &BitSet) -> bool {
        self.limbs
            .iter()
            .zip(&a.limbs)
            .zip(&b.limbs)
            .any(|((s, x), y)| s & !(x | y) != 0)
    }

    /// True iff a, b, c together contain every index below the width.
    pub fn union3_is_full(a: &BitSet, b: &BitSet, c: &BitSet) -> bool {
        debug_assert!(a.nbits == b.nbits && b.nbits == c.nbits);
        let tail = a.nbits % LIMB_BITS;
        let last = a.limbs.len() - 1;
        for i in 0..a.limbs.len() {
            let want = if i == last && tail != 0 {
                (1u64 << tail) - 1
            } else {
                u64::MAX
            };
            if a.limbs[i] | b.limbs[i] | c.limbs[i] != want {
                return false;
            }
        }
        true
    }

    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.limbs.iter().enumerate().flat_map(|(w, &limb)| {
            let mut rest = limb;
            std::iter::from_fn(move || {
                if rest == 0 {
                    None
                } else {
                    let bit = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    Some(w * LIMB_BITS + bit)
                }
            })
        })
    }

    /// Hex rendering of the set read as an integer (bit i = element i),
    /// most significant nibble first.
    pub fn to_hex(&self) -> String {
        let mut out = String::new();
        for &limb in self.limbs.iter().rev() {
            if out.is_empty() {
                if limb != 0 {
                    out = format!("{limb:x}");
                }
            } else {
                out.push_str(&format!("{limb:016x}"));
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

impl PartialOrd for BitSet {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for BitSet {
    /// Numeric order of the sets read as integers.
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        debug_assert_eq!(self.nbits, other.nbits);
        self.limbs.iter().rev().cmp(other.limbs.iter().rev())
    }
}

impl std::fmt::Debug for BitSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.iter_ones()).finish()
    }
}
