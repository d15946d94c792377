//! GF(2) linear algebra on subset masks.
//!
//! A subset of `[n]` doubles as a vector in `GF(2)^n` through its
//! characteristic vector, symmetric difference doubles as vector addition,
//! and parity of intersection size is the standard bilinear form. This
//! module keeps both readings available: families go in, and the linear
//! structure (span, basis, dual, column balance) comes out as ordinary
//! families again, so every algebraic fact stays checkable by direct
//! enumeration.
//!
//! Row reduction works on `u32` rows with bit `j` as column `j`. Bases are
//! returned in reduced row echelon form, which makes them canonical per
//! subspace: two families with the same span report identical bases.

use crate::error::{Error, Result};
use crate::sets::{Family, GroundSize, PairInstance, SubsetMask, MAX_GROUND_SIZE};

/// Parity of `|a ∩ b|`: the GF(2) inner product of characteristic vectors.
#[must_use]
pub fn inner_product_mod2(a: SubsetMask, b: SubsetMask) -> u8 {
    ((a.bits() & b.bits()).count_ones() & 1) as u8
}

/// A basis in reduced row echelon form together with its size.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BasisInfo {
    /// Pivot rows, ascending by mask value. Each pivot column appears in
    /// exactly one row, so the list is canonical for the spanned subspace.
    pub basis: Vec<SubsetMask>,
    pub dim: usize,
}

/// Echelon state keyed by pivot bit: `rows[b]` is the unique row whose
/// highest set bit is `b`, or 0 when that pivot is unused.
struct Echelon {
    rows: [u32; MAX_GROUND_SIZE as usize],
}

impl Echelon {
    fn new() -> Self {
        Echelon { rows: [0; MAX_GROUND_SIZE as usize] }
    }

    /// Inserts a vector, returning true when it enlarged the span.
    fn insert(&mut self, mut v: u32) -> bool {
        while v != 0 {
            let b = (31 - v.leading_zeros()) as usize;
            if self.rows[b] == 0 {
                self.rows[b] = v;
                return true;
            }
            v ^= self.rows[b];
        }
        false
    }

    /// Back-substitutes so every pivot column is zero outside its own row.
    fn reduce_fully(&mut self) {
        for b in 0..self.rows.len() {
            if self.rows[b] == 0 {
                continue;
            }
            for b2 in (b + 1)..self.rows.len() {
                if self.rows[b2] & (1 << b) != 0 {
                    self.rows[b2] ^= self.rows[b];
                }
            }
        }
    }

    fn pivot_rows(&self) -> Vec<u32> {
        self.rows.iter().copied().filter(|&r| r != 0).collect()
    }
}

fn echelon_of(v: &Family) -> Echelon {
    let mut e = Echelon::new();
    for &m in v.members() {
        e.insert(m.bits());
    }
    e
}

/// Reduced-echelon basis and dimension of the span of `v`.
///
/// The empty family (and the family `{∅}`) has the zero span: empty basis,
/// dimension 0.
#[must_use]
pub fn basis_and_dim(v: &Family) -> BasisInfo {
    let mut e = echelon_of(v);
    e.reduce_fully();
    let mut basis: Vec<SubsetMask> = e.pivot_rows().into_iter().map(SubsetMask::from_bits).collect();
    basis.sort_unstable();
    let dim = basis.len();
    BasisInfo { basis, dim }
}

/// Whether `v` is a linear code: contains `∅` and is closed under `Δ`.
///
/// Decided by counting instead of by pairwise closure: `v ⊆ span(v)`
/// always, so `v` equals its span exactly when `|v| = 2^dim(v)`, and the
/// span always contains `∅`.
#[must_use]
pub fn is_linear_code(v: &Family) -> bool {
    if !v.contains(SubsetMask::EMPTY) {
        return false;
    }
    let dim = basis_and_dim(v).dim;
    v.len() as u64 == 1u64 << dim
}

/// A family known to be a linear code (`Δ`-closed, containing `∅`).
///
/// [`Code::new`] is the validating gate; [`Code::from_family_unchecked`]
/// exists for construction sites where closure holds by construction and
/// for tests that exercise the contract errors downstream operations
/// raise on a non-code.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Code {
    family: Family,
}

impl Code {
    pub fn new(family: Family) -> Result<Self> {
        if is_linear_code(&family) {
            Ok(Code { family })
        } else {
            Err(Error::NotACode)
        }
    }

    /// Wraps without validating. The caller vouches for closure.
    #[must_use]
    pub fn from_family_unchecked(family: Family) -> Self {
        Code { family }
    }

    #[must_use]
    pub fn family(&self) -> &Family {
        &self.family
    }

    #[must_use]
    pub fn into_family(self) -> Family {
        self.family
    }

    #[must_use]
    pub fn n(&self) -> GroundSize {
        self.family.n()
    }

    #[must_use]
    pub fn len(&self) -> usize {
        self.family.len()
    }

    #[must_use]
    pub fn is_empty(&self) -> bool {
        self.family.is_empty()
    }

    #[must_use]
    pub fn dim(&self) -> usize {
        basis_and_dim(&self.family).dim
    }
}

/// The span of `v` as a fully materialized code: all `2^dim` subset sums.
///
/// Materialization is exponential in the dimension; the ground-size cap
/// keeps it at or below `2^24` members.
#[must_use]
pub fn span(v: &Family) -> Code {
    let info = basis_and_dim(v);
    let mut members: Vec<SubsetMask> = Vec::with_capacity(1 << info.dim);
    members.push(SubsetMask::EMPTY);
    for &b in &info.basis {
        for i in 0..members.len() {
            members.push(crate::sets::symmetric_difference(members[i], b));
        }
    }
    // Basis vectors are independent, so the 2^dim sums are distinct.
    let family = Family::new(v.n(), members).expect("span members stay inside the ground set");
    Code::from_family_unchecked(family)
}

/// The dual code `{ x : ⟨x, v⟩₂ = 0 for all v in c }`, materialized.
///
/// Computed as the null space of a reduced-echelon basis of `c`, so
/// `dim(dual(c)) = n - dim(c)` by construction.
#[must_use]
pub fn dual(c: &Code) -> Code {
    let n = c.n().get();
    let mut e = echelon_of(c.family());
    e.reduce_fully();
    let rows = e.pivot_rows();
    let pivot_of_row: Vec<u32> = rows.iter().map(|r| 31 - r.leading_zeros()).collect();
    let pivot_mask: u32 = rows.iter().fold(0, |acc, r| acc | (1 << (31 - r.leading_zeros())));

    // One null-space generator per free column f: put 1 at f, then copy
    // each row's f-entry into that row's pivot position. Row · generator
    // then sums the f-entry twice, i.e. to zero.
    let mut null_basis = Vec::with_capacity((n as usize) - rows.len());
    for f in 0..n {
        if pivot_mask & (1 << f) != 0 {
            continue;
        }
        let mut v = 1u32 << f;
        for (row, &p) in rows.iter().zip(&pivot_of_row) {
            if row & (1 << f) != 0 {
                v |= 1 << p;
            }
        }
        null_basis.push(SubsetMask::from_bits(v));
    }

    let generators = Family::new(c.n(), null_basis).expect("null basis stays inside the ground set");
    let out = span(&generators);
    debug_assert_eq!(out.dim(), n as usize - rows.len());
    out
}

/// Per-column classification of a code's members.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ColumnTag {
    /// No member contains the column's element.
    AllZero,
    /// Exactly half the members contain it.
    Balanced,
}

/// Classifies every column of `c` as all-zero or balanced.
///
/// For a genuine linear code no third case exists: the members containing
/// a given element, if any, form a coset of an index-2 subcode. A column
/// count that is neither 0 nor `|c|/2` therefore convicts the input of not
/// being a code, and comes back as an error naming the column.
pub fn column_profile(c: &Code) -> Result<Vec<ColumnTag>> {
    let size = c.len();
    let n = c.n().get();
    let mut tags = Vec::with_capacity(n as usize);
    for col in 0..n {
        let ones = c.family().members().iter().filter(|m| m.bits() & (1 << col) != 0).count();
        if ones == 0 {
            tags.push(ColumnTag::AllZero);
        } else if ones * 2 == size {
            tags.push(ColumnTag::Balanced);
        } else {
            return Err(Error::UnbalancedColumn { column: col + 1, ones, size });
        }
    }
    Ok(tags)
}

/// Whether every member of `a` is orthogonal to every member of `b`.
///
/// Orthogonality is bilinear, so the check runs on the two echelon bases
/// instead of the full member-by-member product.
///
/// # Panics
///
/// Panics if the families live over different ground sets.
#[must_use]
pub fn orthogonal_families(a: &Family, b: &Family) -> bool {
    assert_eq!(a.n(), b.n(), "orthogonality needs a shared ground set");
    let ba = basis_and_dim(a).basis;
    let bb = basis_and_dim(b).basis;
    ba.iter().all(|&x| bb.iter().all(|&y| inner_product_mod2(x, y) == 0))
}

/// Lifts a valid pair to `[n+1]` so the two sides become orthogonal.
///
/// The appended element `n+1` goes into every A-member. On the B side it
/// goes into exactly the members of odd `|B|/d` when the numerator is odd,
/// and into none of them when the numerator is even; either way each
/// lifted inner product picks up the parity needed to cancel.
///
/// Errors when the pair is not cross-intersecting, when some `|B|` is not
/// divisible by `d`, or when the ground set is already at the cap.
pub fn lift_pair(p: &PairInstance) -> Result<(Family, Family)> {
    if let Some((a, b)) = crate::crossing::first_violation(p) {
        let frac = p.frac();
        return Err(Error::NotCrossIntersecting {
            c: frac.c(),
            d: frac.d(),
            a: a.to_string(),
            b: b.to_string(),
        });
    }
    let n = p.n().get();
    if n >= MAX_GROUND_SIZE {
        return Err(Error::LiftPastCap(n));
    }
    let lifted = GroundSize::new(n + 1).expect("n+1 stays within the cap");
    let new_bit = 1u32 << n;
    let frac = p.frac();

    let a_members = p.a().members().iter().map(|m| SubsetMask::from_bits(m.bits() | new_bit));
    let b_members: Vec<SubsetMask> = if frac.c() % 2 == 1 {
        let classes = crate::crossing::partition_parity(p.b(), frac)?;
        classes
            .b1
            .members()
            .iter()
            .copied()
            .chain(
                classes
                    .b2
                    .members()
                    .iter()
                    .map(|m| SubsetMask::from_bits(m.bits() | new_bit)),
            )
            .collect()
    } else {
        p.b().members().to_vec()
    };

    let a_lifted = Family::new(lifted, a_members).expect("lifted A stays inside [n+1]");
    let b_lifted = Family::new(lifted, b_members).expect("lifted B stays inside [n+1]");
    debug_assert!(orthogonal_families(&a_lifted, &b_lifted));
    Ok((a_lifted, b_lifted))
}

/// Checks `|span(a′)| >= 2·|a′|` for a lifted A-side family.
///
/// Precondition: every member carries the appended coordinate, i.e. the
/// last element of the (already extended) ground set. Violations come back
/// as errors naming the offending member. The inequality itself needs no
/// materialization: `|span| = 2^dim`.
pub fn span_doubling_check(a_prime: &Family) -> Result<bool> {
    let coordinate = a_prime.n().get();
    for &m in a_prime.members() {
        if !m.contains(coordinate) {
            return Err(Error::MissingAppendedCoordinate {
                member: m.to_string(),
                coordinate,
            });
        }
    }
    let dim = basis_and_dim(a_prime).dim;
    Ok(1u64 << dim >= 2 * a_prime.len() as u64)
}
