//! Cross-intersection predicates and the structure of maximal B-sides.
//!
//! The central condition on a pair (A, B) with fraction c/d is
//! `d·|A∩B| = c·|B|` for every A in A and B in B, kept in cross-multiplied
//! integers throughout. For a fixed B-side the A-side can always be grown
//! to the unique maximal family satisfying the condition, `a_max`; the
//! searches enumerate B-sides only and read the A-side off that closure.
//!
//! The remaining operations make the structural facts about maximal
//! B-sides checkable one by one: the parity partition by `|B| mod 2d`, the
//! Δ/∩ closure flags, primitive members, and the factorization of a closed
//! family into disjoint blocks with its predicted product.

use crate::error::{Error, Result};
use crate::gf2::inner_product_mod2;
use crate::numtheory::binomial;
use crate::sets::{intersection_size, symmetric_difference, Family, Frac, PairInstance, SubsetMask};

/// First (A, B) pair violating `d·|A∩B| = c·|B|`, in member order.
#[must_use]
pub fn first_violation(p: &PairInstance) -> Option<(SubsetMask, SubsetMask)> {
    let (c, d) = (p.frac().c(), p.frac().d());
    for &b in p.b().members() {
        let rhs = c * b.len() as u64;
        for &a in p.a().members() {
            if d * intersection_size(a, b) as u64 != rhs {
                return Some((a, b));
            }
        }
    }
    None
}

/// Whether the pair satisfies the cross-intersecting condition. Vacuously
/// true when either side is empty.
#[must_use]
pub fn is_cross_intersecting(p: &PairInstance) -> bool {
    first_violation(p).is_none()
}

/// The symmetric variant: every pair must satisfy
/// `d·|A∩B| ∈ {c·|A|, c·|B|}`, where the fraction plays the role a/b.
#[must_use]
pub fn is_symmetric_cross(p: &PairInstance) -> bool {
    let (c, d) = (p.frac().c(), p.frac().d());
    p.a().members().iter().all(|&a| {
        p.b().members().iter().all(|&b| {
            let lhs = d * intersection_size(a, b) as u64;
            lhs == c * a.len() as u64 || lhs == c * b.len() as u64
        })
    })
}

/// The two parity classes of a B-side family: members with `|B| ≡ 0` and
/// `|B| ≡ d` modulo `2d`. For sizes divisible by `d` no third residue
/// exists.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ParityClasses {
    pub b1: Family,
    pub b2: Family,
}

/// Splits `b` by `|B| mod 2d`. Errors on the first member whose size is
/// not divisible by `d`.
pub fn partition_parity(b: &Family, frac: Frac) -> Result<ParityClasses> {
    let d = frac.d();
    let mut b1 = Vec::new();
    let mut b2 = Vec::new();
    for &m in b.members() {
        let size = m.len() as u64;
        if !size.is_multiple_of(d) {
            return Err(Error::SizeNotDivisible { member: m.to_string(), size: m.len(), d });
        }
        if (size / d).is_multiple_of(2) {
            b1.push(m);
        } else {
            b2.push(m);
        }
    }
    Ok(ParityClasses {
        b1: Family::new(b.n(), b1).expect("members already validated"),
        b2: Family::new(b.n(), b2).expect("members already validated"),
    })
}

/// Checks the parity identity on a valid pair: the GF(2) inner product of
/// characteristic vectors equals 1 exactly for B in the odd class when the
/// numerator is odd, and 0 in every other case.
///
/// Errors when the pair is not cross-intersecting. For valid pairs with a
/// nonempty A-side every `|B|` is divisible by `d`, so the class of each
/// member is well defined.
pub fn parity_identity_check(p: &PairInstance) -> Result<bool> {
    if let Some((a, b)) = first_violation(p) {
        let frac = p.frac();
        return Err(Error::NotCrossIntersecting {
            c: frac.c(),
            d: frac.d(),
            a: a.to_string(),
            b: b.to_string(),
        });
    }
    if p.a().is_empty() {
        return Ok(true);
    }
    let (c, d) = (p.frac().c(), p.frac().d());
    for &b in p.b().members() {
        let size = b.len() as u64;
        debug_assert_eq!(size % d, 0, "valid pair with nonempty A forces d | |B|");
        let expected = ((size / d) % 2 == 1 && c % 2 == 1) as u8;
        for &a in p.a().members() {
            if inner_product_mod2(a, b) != expected {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The unique maximal A-side for a fixed B-side: every subset of the
/// ground set compatible with all members of `b`.
///
/// Any family A makes (A, b) cross-intersecting iff A ⊆ a_max(b), so the
/// returned family is a closure, not just one witness.
#[must_use]
pub fn a_max(b: &Family, frac: Frac) -> Family {
    let n = b.n();
    let (c, d) = (frac.c(), frac.d());
    let targets: Vec<(SubsetMask, u64)> =
        b.members().iter().map(|&m| (m, c * m.len() as u64)).collect();
    let members = (0..n.subset_count())
        .map(|bits| SubsetMask::from_bits(bits as u32))
        .filter(|&cand| {
            targets.iter().all(|&(m, rhs)| d * intersection_size(cand, m) as u64 == rhs)
        });
    Family::new(n, members).expect("masks are enumerated within the ground set")
}

/// Incremental form of [`a_max`] for the search: members of `b` arrive one
/// at a time, each push filters the surviving candidate masks, and each
/// pop restores the previous level exactly.
///
/// One worker owns one tracker; levels are snapshots, so `pop` is O(1).
pub struct IncrementalAMax {
    frac: Frac,
    levels: Vec<Vec<SubsetMask>>,
}

impl IncrementalAMax {
    /// Starts at the empty B-side, where every mask is compatible.
    #[must_use]
    pub fn new(n: crate::sets::GroundSize, frac: Frac) -> Self {
        let all = (0..n.subset_count()).map(|bits| SubsetMask::from_bits(bits as u32)).collect();
        IncrementalAMax { frac, levels: vec![all] }
    }

    /// Filters the current candidates by the single new constraint.
    pub fn push(&mut self, b: SubsetMask) {
        let (c, d) = (self.frac.c(), self.frac.d());
        let rhs = c * b.len() as u64;
        let next = self
            .current()
            .iter()
            .copied()
            .filter(|&cand| d * intersection_size(cand, b) as u64 == rhs)
            .collect();
        self.levels.push(next);
    }

    /// Undoes the most recent push.
    ///
    /// # Panics
    ///
    /// Panics if called at the root level.
    pub fn pop(&mut self) {
        assert!(self.levels.len() > 1, "pop below the root level");
        self.levels.pop();
    }

    #[must_use]
    pub fn current(&self) -> &[SubsetMask] {
        self.levels.last().expect("at least the root level exists")
    }

    #[must_use]
    pub fn depth(&self) -> usize {
        self.levels.len() - 1
    }
}

/// Closure diagnostics for a candidate B-side. Each flag is evaluated
/// independently so a report never hides one failure behind another.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct ClosureReport {
    /// `∅ ∈ b` and `b` closed under symmetric difference.
    pub delta_closed: bool,
    /// `b` closed under pairwise intersection.
    pub intersection_closed: bool,
    /// Every member size divisible by `d`; prerequisite for the parity
    /// table. Reported as its own flag instead of failing the call.
    pub sizes_divisible: bool,
    /// `B₁ Δ B₂` lands in the even class exactly when the two members
    /// share a class. False whenever `sizes_divisible` is false.
    pub parity_table_ok: bool,
    /// `d` divides `|B₁ ∩ B₂|` for every pair of members.
    pub pairwise_mod_d_ok: bool,
}

fn first_delta_violation(b: &Family) -> Option<SubsetMask> {
    if !b.contains(SubsetMask::EMPTY) {
        return Some(SubsetMask::EMPTY);
    }
    let ms = b.members();
    for (i, &x) in ms.iter().enumerate() {
        for &y in &ms[i + 1..] {
            let delta = symmetric_difference(x, y);
            if !b.contains(delta) {
                return Some(delta);
            }
        }
    }
    None
}

fn first_intersection_violation(b: &Family) -> Option<SubsetMask> {
    let ms = b.members();
    for (i, &x) in ms.iter().enumerate() {
        for &y in &ms[i + 1..] {
            let meet = x.intersection(y);
            if !b.contains(meet) {
                return Some(meet);
            }
        }
    }
    None
}

/// Evaluates all closure diagnostics for `b` against `frac`.
#[must_use]
pub fn closure_report(b: &Family, frac: Frac) -> ClosureReport {
    let d = frac.d();
    let delta_closed = first_delta_violation(b).is_none();
    let intersection_closed = first_intersection_violation(b).is_none();
    let sizes_divisible = b.members().iter().all(|m| (m.len() as u64).is_multiple_of(d));

    let class_of = |m: SubsetMask| (m.len() as u64 / d) % 2;
    let parity_table_ok = sizes_divisible
        && b.members().iter().enumerate().all(|(i, &x)| {
            b.members()[i..].iter().all(|&y| {
                let delta = symmetric_difference(x, y);
                let size = delta.len() as u64;
                size.is_multiple_of(d) && class_of(x) ^ class_of(y) == (size / d) % 2
            })
        });

    let pairwise_mod_d_ok = b.members().iter().enumerate().all(|(i, &x)| {
        b.members()[i..].iter().all(|&y| (intersection_size(x, y) as u64).is_multiple_of(d))
    });

    ClosureReport { delta_closed, intersection_closed, sizes_divisible, parity_table_ok, pairwise_mod_d_ok }
}

/// Nonempty members that every other member either contains entirely or
/// misses entirely: `B' ∩ B ∈ {∅, B}` for all `B'` in `b`. Distinct
/// primitive members are automatically disjoint.
#[must_use]
pub fn primitive_sets(b: &Family) -> Vec<SubsetMask> {
    b.members()
        .iter()
        .copied()
        .filter(|&m| !m.is_empty())
        .filter(|&m| {
            b.members().iter().all(|&other| {
                let meet = other.intersection(m);
                meet.is_empty() || meet == m
            })
        })
        .collect()
}

/// A closed B-side factored into its primitive blocks.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StructureDecomposition {
    /// Pairwise disjoint primitive members, ascending by mask value.
    pub blocks: Vec<SubsetMask>,
    /// Number of blocks; the family has exactly `2^k` members.
    pub k: usize,
    /// Ground-set elements touched by no block.
    pub n0: u32,
    /// `|block| / d` per block when a fraction was supplied.
    pub block_multipliers: Option<Vec<u64>>,
}

/// Factors a Δ-closed, intersection-closed family into disjoint primitive
/// blocks and verifies the family is exactly all unions of them.
///
/// With a fraction supplied, also divides each block size by `d`,
/// rejecting blocks that are not divisible. Every failure names its first
/// witness.
pub fn structure_decompose(b: &Family, frac: Option<Frac>) -> Result<StructureDecomposition> {
    if let Some(w) = first_delta_violation(b) {
        return Err(Error::NotDeltaClosed { witness: w.to_string() });
    }
    if let Some(w) = first_intersection_violation(b) {
        return Err(Error::NotIntersectionClosed { witness: w.to_string() });
    }

    let blocks = primitive_sets(b);
    let k = blocks.len();
    debug_assert!(
        blocks.iter().enumerate().all(|(i, &x)| {
            blocks[i + 1..].iter().all(|&y| x.intersection(y).is_empty())
        }),
        "distinct primitive members must be disjoint"
    );

    // Each member must be exactly the union of the blocks inside it.
    for &m in b.members() {
        let covered = blocks
            .iter()
            .filter(|&&blk| blk.is_subset_of(m))
            .fold(SubsetMask::EMPTY, |acc, &blk| acc.union(blk));
        if covered != m {
            return Err(Error::NotUnionOfBlocks { member: m.to_string() });
        }
    }

    // Distinct block subsets give distinct unions, so after the loop above
    // the family equals all unions iff the counts agree; otherwise name
    // the first union that is missing.
    if (b.len() as u64) < (1u64 << k) {
        for choice in 0u32..(1 << k) {
            let union = blocks
                .iter()
                .enumerate()
                .filter(|&(i, _)| choice & (1 << i) != 0)
                .fold(SubsetMask::EMPTY, |acc, (_, &blk)| acc.union(blk));
            if !b.contains(union) {
                return Err(Error::MissingUnion { union: union.to_string() });
            }
        }
        unreachable!("a deficient count guarantees a missing union");
    }

    let support: u32 = blocks.iter().map(|blk| blk.len()).sum();
    let n0 = b.n().get() - support;

    let block_multipliers = match frac {
        None => None,
        Some(f) => {
            let d = f.d();
            let mut ls = Vec::with_capacity(k);
            for &blk in &blocks {
                let size = blk.len() as u64;
                if !size.is_multiple_of(d) {
                    return Err(Error::BlockNotDivisible {
                        block: blk.to_string(),
                        size: blk.len(),
                        d,
                    });
                }
                ls.push(size / d);
            }
            Some(ls)
        }
    };

    Ok(StructureDecomposition { blocks, k, n0, block_multipliers })
}

/// The product the decomposition predicts for a maximal pair over this
/// B-side: `2^n0 · Π C(d·ℓᵢ, c·ℓᵢ) · 2^k`.
///
/// Multipliers are recomputed from the block sizes against the supplied
/// fraction, so a decomposition made without one still works here.
pub fn predicted_product(dec: &StructureDecomposition, frac: Frac) -> Result<u64> {
    let (c, d) = (frac.c(), frac.d());
    let mut acc: u128 = 1u128 << dec.n0;
    for &blk in &dec.blocks {
        let size = blk.len() as u64;
        if !size.is_multiple_of(d) {
            return Err(Error::BlockNotDivisible { block: blk.to_string(), size: blk.len(), d });
        }
        let l = size / d;
        acc = acc.checked_mul(binomial(d * l, c * l)?).ok_or(Error::Overflow)?;
    }
    acc = acc.checked_mul(1u128 << dec.k).ok_or(Error::Overflow)?;
    u64::try_from(acc).map_err(|_| Error::Overflow)
}
