//! Ground sets, subset bitmasks, set families, and reduced fractions.
//!
//! Every other module builds on the representation fixed here: the ground
//! set is `[n] = {1, …, n}`, element `i` lives at bit `i - 1`, and a family
//! is a sorted, duplicate-free list of masks over one ground set. Families
//! are value-like: operations return new families instead of mutating.

use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Hard cap on the ground-set size. Masks are `u32`, products of family
/// sizes stay below 2^48, and every exhaustive loop in the crate is sized
/// against this bound.
pub const MAX_GROUND_SIZE: u32 = 24;

/// Size of the ground set `[n]`, restricted to `1..=MAX_GROUND_SIZE`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct GroundSize(u32);

impl GroundSize {
    pub fn new(n: u32) -> Result<Self> {
        if (1..=MAX_GROUND_SIZE).contains(&n) {
            Ok(GroundSize(n))
        } else {
            Err(Error::GroundSizeOutOfRange(n))
        }
    }

    #[must_use]
    pub fn get(self) -> u32 {
        self.0
    }

    /// Mask with all `n` ground-set bits on.
    #[must_use]
    pub fn full_mask(self) -> SubsetMask {
        SubsetMask((1u32 << self.0) - 1)
    }

    /// Number of subsets of `[n]`, i.e. `2^n`.
    #[must_use]
    pub fn subset_count(self) -> u64 {
        1u64 << self.0
    }
}

impl fmt::Display for GroundSize {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// A subset of the ground set, element `i` at bit `i - 1`.
///
/// The mask itself does not remember its ground size; operations that need
/// one take it as a parameter or read it off an enclosing [`Family`].
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct SubsetMask(u32);

impl SubsetMask {
    pub const EMPTY: SubsetMask = SubsetMask(0);

    /// Wraps raw bits. Validity against a ground size is the caller's
    /// concern; use [`SubsetMask::is_valid_for`] to check.
    #[must_use]
    pub fn from_bits(bits: u32) -> Self {
        SubsetMask(bits)
    }

    #[must_use]
    pub fn bits(self) -> u32 {
        self.0
    }

    /// Builds a mask from 1-indexed elements, rejecting anything outside
    /// `1..=n`. Duplicates collapse silently.
    pub fn from_elements(n: GroundSize, elements: &[u32]) -> Result<Self> {
        let mut bits = 0u32;
        for &e in elements {
            if e == 0 || e > n.get() {
                return Err(Error::ElementOutOfRange { element: e, n: n.get() });
            }
            bits |= 1 << (e - 1);
        }
        Ok(SubsetMask(bits))
    }

    /// The 1-indexed elements, ascending.
    #[must_use]
    pub fn elements(self) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.len() as usize);
        let mut bits = self.0;
        while bits != 0 {
            out.push(bits.trailing_zeros() + 1);
            bits &= bits - 1;
        }
        out
    }

    /// Cardinality of the subset.
    #[must_use]
    pub fn len(self) -> u32 {
        self.0.count_ones()
    }

    #[must_use]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[must_use]
    pub fn contains(self, element: u32) -> bool {
        (1..=32).contains(&element) && self.0 & (1 << (element - 1)) != 0
    }

    #[must_use]
    pub fn is_valid_for(self, n: GroundSize) -> bool {
        self.0 & !n.full_mask().0 == 0
    }

    #[must_use]
    pub fn union(self, other: SubsetMask) -> SubsetMask {
        SubsetMask(self.0 | other.0)
    }

    #[must_use]
    pub fn intersection(self, other: SubsetMask) -> SubsetMask {
        SubsetMask(self.0 & other.0)
    }

    #[must_use]
    pub fn is_subset_of(self, other: SubsetMask) -> bool {
        self.0 & !other.0 == 0
    }
}

impl fmt::Display for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "{{}}");
        }
        write!(f, "{{")?;
        for (i, e) in self.elements().iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

/// `|a ∩ b|` via popcount on the AND.
#[must_use]
pub fn intersection_size(a: SubsetMask, b: SubsetMask) -> u32 {
    (a.0 & b.0).count_ones()
}

/// `a Δ b`, the symmetric difference, via XOR. This is both the set
/// operation and GF(2) vector addition on characteristic vectors.
#[must_use]
pub fn symmetric_difference(a: SubsetMask, b: SubsetMask) -> SubsetMask {
    SubsetMask(a.0 ^ b.0)
}

/// A finite family of subsets of one ground set.
///
/// Invariants: every member is valid for `n`, and `members` is strictly
/// increasing by mask value (sorted, duplicate-free). Construction
/// enforces both, so two families over the same ground set compare equal
/// exactly when they contain the same subsets.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Family {
    n: GroundSize,
    members: Vec<SubsetMask>,
}

impl Family {
    /// Sorts, deduplicates, and validates the members against `n`.
    pub fn new(n: GroundSize, members: impl IntoIterator<Item = SubsetMask>) -> Result<Self> {
        let mut members: Vec<SubsetMask> = members.into_iter().collect();
        for &m in &members {
            if !m.is_valid_for(n) {
                return Err(Error::MaskOutOfRange { mask: m.bits(), n: n.get() });
            }
        }
        members.sort_unstable();
        members.dedup();
        Ok(Family { n, members })
    }

    /// The family with no members (distinct from `{∅}`, which has one).
    #[must_use]
    pub fn empty(n: GroundSize) -> Self {
        Family { n, members: Vec::new() }
    }

    /// All `2^n` subsets of the ground set.
    #[must_use]
    pub fn power_set(n: GroundSize) -> Self {
        let members = (0..n.subset_count()).map(|bits| SubsetMask(bits as u32)).collect();
        Family { n, members }
    }

    #[must_use]
    pub fn n(&self) -> GroundSize {
        self.n
    }

    #[must_use]
    pub fn members(&self) -> &[SubsetMask] {
        &self.members
    }

    #[must_use]
    pub fn len(&self) -> usize {
        self.members.len()
    }

    #[must_use]
    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    #[must_use]
    pub fn contains(&self, m: SubsetMask) -> bool {
        self.members.binary_search(&m).is_ok()
    }

    /// Members as 1-indexed element lists, in member order.
    #[must_use]
    pub fn element_lists(&self) -> Vec<Vec<u32>> {
        self.members.iter().map(|m| m.elements()).collect()
    }
}

/// Serialized shape shared by [`Family`]'s Serialize and Deserialize.
#[derive(Serialize, Deserialize)]
struct FamilyRepr {
    n: u32,
    sets: Vec<Vec<u32>>,
}

impl Serialize for Family {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        FamilyRepr { n: self.n.get(), sets: self.element_lists() }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Family {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = FamilyRepr::deserialize(deserializer)?;
        make_family(repr.n, &repr.sets).map_err(D::Error::custom)
    }
}

/// Builds a [`Family`] from 1-indexed element lists, validating every
/// element against the ground size. Out-of-order elements, repeated
/// elements, and repeated sets all normalize away.
pub fn make_family(n: u32, sets: &[Vec<u32>]) -> Result<Family> {
    let n = GroundSize::new(n)?;
    let masks = sets
        .iter()
        .map(|s| SubsetMask::from_elements(n, s))
        .collect::<Result<Vec<_>>>()?;
    Family::new(n, masks)
}

/// A fraction `c/d` held in lowest terms with `0 <= c <= d`, `d >= 1`.
///
/// The endpoints 0/1 and 1/1 are legal; both numerator and denominator
/// are used in cross-multiplied integer comparisons, never as floats.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Frac {
    c: u64,
    d: u64,
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl Frac {
    /// Reduces `c/d` by their gcd. Rejects `d = 0` and `c > d`.
    pub fn new(c: u64, d: u64) -> Result<Self> {
        if d == 0 || c > d {
            return Err(Error::InvalidFraction { c, d });
        }
        let g = gcd(c, d).max(1);
        Ok(Frac { c: c / g, d: d / g })
    }

    #[must_use]
    pub fn c(self) -> u64 {
        self.c
    }

    #[must_use]
    pub fn d(self) -> u64 {
        self.d
    }

    #[must_use]
    pub fn is_zero(self) -> bool {
        self.c == 0
    }

    #[must_use]
    pub fn is_one(self) -> bool {
        self.c == self.d
    }

    #[must_use]
    pub fn is_half(self) -> bool {
        self.c == 1 && self.d == 2
    }
}

impl fmt::Display for Frac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.c, self.d)
    }
}

/// A candidate pair of families (A, B) over a shared ground set, tagged
/// with the fraction the pair is judged against.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PairInstance {
    n: GroundSize,
    frac: Frac,
    a: Family,
    b: Family,
}

impl PairInstance {
    /// Requires both families to live over the same ground set.
    pub fn new(frac: Frac, a: Family, b: Family) -> Result<Self> {
        if a.n() != b.n() {
            return Err(Error::GroundSizeMismatch { a: a.n().get(), b: b.n().get() });
        }
        Ok(PairInstance { n: a.n(), frac, a, b })
    }

    #[must_use]
    pub fn n(&self) -> GroundSize {
        self.n
    }

    #[must_use]
    pub fn frac(&self) -> Frac {
        self.frac
    }

    #[must_use]
    pub fn a(&self) -> &Family {
        &self.a
    }

    #[must_use]
    pub fn b(&self) -> &Family {
        &self.b
    }

    /// `|A|·|B|`, the quantity the searches maximize.
    #[must_use]
    pub fn product(&self) -> u64 {
        self.a.len() as u64 * self.b.len() as u64
    }
}
