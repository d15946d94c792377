use thiserror::Error;

/// Unified error type for every fallible operation in this crate.
///
/// Variants are grouped by the kind of contract they report: malformed
/// inputs (ranges, fractions, element bounds), violated preconditions
/// (non-codes, invalid pairs), and structural findings that name the
/// first witness so a caller can display it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ground size {0} outside supported range 1..={max}", max = crate::sets::MAX_GROUND_SIZE)]
    GroundSizeOutOfRange(u32),

    #[error("element {element} outside ground set 1..={n}")]
    ElementOutOfRange { element: u32, n: u32 },

    #[error("mask {mask:#b} has bits above ground size {n}")]
    MaskOutOfRange { mask: u32, n: u32 },

    #[error("fraction {c}/{d} invalid: need d >= 1 and 0 <= c <= d")]
    InvalidFraction { c: u64, d: u64 },

    #[error("families live over different ground sets: n={a} vs n={b}")]
    GroundSizeMismatch { a: u32, b: u32 },

    #[error("family is not a linear code (not the span of any basis)")]
    NotACode,

    #[error("column {column} has {ones} ones in a family of {size}: neither all-zero nor balanced")]
    UnbalancedColumn { column: u32, ones: usize, size: usize },

    #[error("pair is not {c}/{d}-cross-intersecting: |A∩B| != ({c}/{d})·|B| for A={a}, B={b}")]
    NotCrossIntersecting { c: u64, d: u64, a: String, b: String },

    #[error("member {member} has size {size} not divisible by d={d}")]
    SizeNotDivisible { member: String, size: u32, d: u64 },

    #[error("lifting past the ground-size cap: {0}+1 exceeds {max}", max = crate::sets::MAX_GROUND_SIZE)]
    LiftPastCap(u32),

    #[error("member {member} of the lifted family lacks the appended coordinate {coordinate}")]
    MissingAppendedCoordinate { member: String, coordinate: u32 },

    #[error("family is not Δ-closed with ∅ present (witness: {witness})")]
    NotDeltaClosed { witness: String },

    #[error("family is not intersection-closed (witness: {witness})")]
    NotIntersectionClosed { witness: String },

    #[error("member {member} is not a union of primitive blocks")]
    NotUnionOfBlocks { member: String },

    #[error("union {union} of primitive blocks is missing from the family")]
    MissingUnion { union: String },

    #[error("block {block} has size {size} not divisible by d={d}")]
    BlockNotDivisible { block: String, size: u32, d: u64 },

    #[error("decomposition carries no block multipliers: decompose with the fraction first")]
    MissingMultipliers,

    #[error("product formula overflowed 64-bit arithmetic")]
    Overflow,

    #[error("binomial arguments out of range: k={k} > n={n}")]
    BinomialRange { n: u64, k: u64 },

    #[error("class index k={k} invalid for {c}/{d} at n={n}: {hint}")]
    ClassIndexOutOfRange { k: u32, c: u64, d: u64, n: u32, hint: &'static str },

    #[error("canonicalization supports n <= {max}, got n={n}: disable canonicalization for larger n", max = crate::search::MAX_CANONICAL_GROUND_SIZE)]
    CanonicalCap { n: u32 },

    #[error("symmetric search supports n <= {max}, got n={n}", max = crate::search::MAX_SYMMETRIC_GROUND_SIZE)]
    SymmetricCap { n: u32 },

    #[error("search config invalid: max_nodes must be >= 1")]
    ZeroNodeBudget,

    #[error("search result is not exhausted: comparison against predictions needs a complete run")]
    NotExhausted,

    #[error("search result carries no canonical classes: rerun with canonicalization enabled")]
    NotCanonicalized,
}

pub type Result<T> = std::result::Result<T, Error>;
