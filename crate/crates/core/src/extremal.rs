//! Generators for the known maximal pairs at each fraction.
//!
//! Every generator returns a pair with product exactly `2^n`. For
//! fractions strictly between 0 and 1 other than 1/2 the trivial pair is
//! the only shape; 0, 1, and 1/2 each carry a one-parameter family of
//! shapes indexed by `k`.

use crate::error::{Error, Result};
use crate::sets::{Family, Frac, GroundSize, PairInstance, SubsetMask};

/// The pair (all subsets, `{∅}`), valid for every fraction.
#[must_use]
pub fn gen_trivial(n: GroundSize, frac: Frac) -> PairInstance {
    let a = Family::power_set(n);
    let b = Family::new(n, [SubsetMask::EMPTY]).expect("the empty set is always valid");
    PairInstance::new(frac, a, b).expect("families share the ground set")
}

fn class_index_error(k: u32, frac: Frac, n: GroundSize, hint: &'static str) -> Error {
    Error::ClassIndexOutOfRange { k, c: frac.c(), d: frac.d(), n: n.get(), hint }
}

/// Fraction 0/1, shape `k`: A is all subsets of `[k]`, B all subsets of
/// the complementary tail `{k+1, …, n}`. Disjoint supports force every
/// intersection empty.
pub fn gen_zero(n: GroundSize, k: u32) -> Result<PairInstance> {
    let frac = Frac::new(0, 1).expect("0/1 is a valid fraction");
    if k > n.get() {
        return Err(class_index_error(k, frac, n, "k ranges over 0..=n"));
    }
    let a = (0u32..1 << k).map(SubsetMask::from_bits);
    let b = (0u32..1 << (n.get() - k)).map(|bits| SubsetMask::from_bits(bits << k));
    PairInstance::new(
        frac,
        Family::new(n, a).expect("prefix masks fit"),
        Family::new(n, b).expect("tail masks fit"),
    )
}

/// Fraction 1/1, shape `k`: A is every set containing `[k]`, B is all
/// subsets of `[k]`, so each B lies inside each A.
pub fn gen_one(n: GroundSize, k: u32) -> Result<PairInstance> {
    let frac = Frac::new(1, 1).expect("1/1 is a valid fraction");
    if k > n.get() {
        return Err(class_index_error(k, frac, n, "k ranges over 0..=n"));
    }
    let base = (1u32 << k) - 1;
    let a = (0u32..1 << (n.get() - k)).map(|t| SubsetMask::from_bits(base | (t << k)));
    let b = (0u32..1 << k).map(SubsetMask::from_bits);
    PairInstance::new(
        frac,
        Family::new(n, a).expect("masks fit"),
        Family::new(n, b).expect("masks fit"),
    )
}

/// Fraction 1/2, shape `k`: over the `k` designated pairs
/// `{2i-1, 2i}`, each A-member picks exactly one element per pair (and is
/// free beyond them), each B-member picks whole pairs only and nothing
/// beyond the designated ones. At `k = 0` this degenerates to the trivial
/// pair.
pub fn gen_half(n: GroundSize, k: u32) -> Result<PairInstance> {
    let frac = Frac::new(1, 2).expect("1/2 is a valid fraction");
    if 2 * k > n.get() {
        return Err(class_index_error(k, frac, n, "k ranges over 0..=n/2"));
    }
    let pair_mask = |i: u32| -> u32 { 0b11 << (2 * i) };
    let a = (0..n.subset_count()).map(|bits| SubsetMask::from_bits(bits as u32)).filter(|m| {
        (0..k).all(|i| (m.bits() & pair_mask(i)).count_ones() == 1)
    });
    let beyond = !((1u32 << (2 * k)) - 1);
    let b = (0..n.subset_count()).map(|bits| SubsetMask::from_bits(bits as u32)).filter(|m| {
        m.bits() & beyond == 0 && (0..k).all(|i| (m.bits() & pair_mask(i)).count_ones() % 2 == 0)
    });
    PairInstance::new(
        frac,
        Family::new(n, a).expect("masks fit"),
        Family::new(n, b).expect("masks fit"),
    )
}

/// Every maximal shape the fraction admits, one representative per class:
/// `n+1` shapes for 0/1 and 1/1, `⌊n/2⌋+1` for 1/2, and the trivial pair
/// alone for everything else.
#[must_use]
pub fn predicted_classes(n: GroundSize, frac: Frac) -> Vec<PairInstance> {
    if frac.is_zero() {
        (0..=n.get()).map(|k| gen_zero(n, k).expect("k in range")).collect()
    } else if frac.is_one() {
        (0..=n.get()).map(|k| gen_one(n, k).expect("k in range")).collect()
    } else if frac.is_half() {
        (0..=n.get() / 2).map(|k| gen_half(n, k).expect("k in range")).collect()
    } else {
        vec![gen_trivial(n, frac)]
    }
}
