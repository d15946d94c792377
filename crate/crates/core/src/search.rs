//! Exhaustive searches for maximal pairs at desk scale.
//!
//! The main search sweeps B-sides only: every subset of the divisible
//! universe is a candidate B, and the A-side is read off as the closure
//! `a_max(B)`. The sweep is sound without assuming any result about the
//! maximum: a maximal pair (A, B) has `A ⊆ a_max(B)`, so its product is at
//! most `|a_max(B)|·|B|`, and `(a_max(B), B)` is itself a valid pair, so
//! the sweep's running maximum can never overshoot the true one. Equality
//! of the two forces `A = a_max(B)`, which is why recording ties captures
//! every maximal pair exactly once.
//!
//! Parallel runs split the DFS at the root over the first included
//! candidate. Each subtree prunes against its own best, seeded with the
//! product of the B-side `{∅}` computed before the split, so pruning
//! decisions do not depend on scheduling and two runs with different
//! thread counts report identical results and identical counters. Only
//! the node budget is shared; a run that exhausts it comes back partial
//! and says so.

use std::collections::BTreeMap;
use std::sync::atomic::{AtomicU64, Ordering};

use itertools::Itertools;

use crate::crossing::{a_max, IncrementalAMax};
use crate::error::{Error, Result};
use crate::extremal::predicted_classes;
use crate::sets::{intersection_size, Family, Frac, GroundSize, PairInstance, SubsetMask};

/// Cap for the factorial canonicalization sweep.
pub const MAX_CANONICAL_GROUND_SIZE: u32 = 8;
/// Cap for the symmetric pair search, which has no a_max reduction.
pub const MAX_SYMMETRIC_GROUND_SIZE: u32 = 4;

/// Tuning knobs for the searches. `thread_hint` is a worker-count request,
/// not a determinism hazard: results and counters are identical for every
/// value of it.
#[derive(Clone, Debug)]
pub struct SearchConfig {
    /// Upper bound on visited nodes; the run aborts (exhausted = false)
    /// once the shared counter passes it. Must be at least 1.
    pub max_nodes: u64,
    /// Requested worker count for the root split; 0 and 1 both mean
    /// sequential.
    pub thread_hint: usize,
    /// Whether to group the maximal pairs into canonical classes
    /// (requires n within the canonicalization cap).
    pub canonicalize: bool,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig { max_nodes: 100_000_000, thread_hint: 1, canonicalize: false }
    }
}

/// All subsets of `[n]` whose size `d` divides, ascending by mask value.
/// In any pair with a nonempty A-side these are the only possible
/// B-members: `d·|A∩B| = c·|B|` with gcd(c, d) = 1 forces `d | |B|`.
#[must_use]
pub fn divisible_universe(n: GroundSize, frac: Frac) -> Vec<SubsetMask> {
    let d = frac.d();
    (0..n.subset_count())
        .map(|bits| SubsetMask::from_bits(bits as u32))
        .filter(|m| (m.len() as u64).is_multiple_of(d))
        .collect()
}

/// Canonical key of a pair under simultaneous ground-set permutation:
/// the minimum over all `n!` relabelings of the serialized pair. Byte
/// comparison of keys equals the semantic ordering.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CanonicalKey(Vec<u8>);

impl CanonicalKey {
    #[must_use]
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }
}

fn apply_perm(perm: &[u32], m: SubsetMask) -> u32 {
    let mut out = 0u32;
    let mut bits = m.bits();
    while bits != 0 {
        let i = bits.trailing_zeros();
        out |= 1 << perm[i as usize];
        bits &= bits - 1;
    }
    out
}

/// Minimum serialization of `p` over all ground-set permutations.
///
/// Two pairs get equal keys exactly when one is a relabeling of the
/// other. The sweep is factorial, hence the cap; callers beyond it should
/// skip canonicalization instead.
pub fn canonical_form(p: &PairInstance) -> Result<CanonicalKey> {
    let n = p.n().get();
    if n > MAX_CANONICAL_GROUND_SIZE {
        return Err(Error::CanonicalCap { n });
    }
    let mut best: Option<(Vec<u32>, Vec<u32>)> = None;
    for perm in (0..n).permutations(n as usize) {
        let mut a: Vec<u32> = p.a().members().iter().map(|&m| apply_perm(&perm, m)).collect();
        let mut b: Vec<u32> = p.b().members().iter().map(|&m| apply_perm(&perm, m)).collect();
        a.sort_unstable();
        b.sort_unstable();
        let cand = (a, b);
        if best.as_ref().is_none_or(|cur| cand < *cur) {
            best = Some(cand);
        }
    }
    let (a, b) = best.expect("n >= 1 admits at least the identity permutation");

    // Big-endian words keep byte order aligned with numeric order.
    let mut bytes = Vec::with_capacity(1 + 8 + 4 * (a.len() + b.len()));
    bytes.push(n as u8);
    bytes.extend_from_slice(&(a.len() as u32).to_be_bytes());
    for m in a {
        bytes.extend_from_slice(&m.to_be_bytes());
    }
    bytes.extend_from_slice(&(b.len() as u32).to_be_bytes());
    for m in b {
        bytes.extend_from_slice(&m.to_be_bytes());
    }
    Ok(CanonicalKey(bytes))
}

/// One canonical class of maximal pairs found by a search.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ClassEntry {
    /// Lexicographically smallest witness in the class.
    pub representative: PairInstance,
    pub key: CanonicalKey,
    /// Number of witnesses that canonicalize to this key.
    pub count: u64,
}

/// Outcome of [`enumerate_maximal`]. All listed pairs are normalized:
/// sorted by B-side then A-side members, classes sorted by key.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SearchResult {
    pub n: GroundSize,
    pub frac: Frac,
    pub max_product: u64,
    /// Every pair achieving `max_product`, each of the form (a_max(B), B).
    pub maximal_pairs: Vec<PairInstance>,
    /// Canonical classes of `maximal_pairs`; empty unless canonicalized.
    pub classes: Vec<ClassEntry>,
    pub canonicalized: bool,
    pub nodes_visited: u64,
    pub pruned: u64,
    /// False when the node budget cut the run short; partial results.
    pub exhausted: bool,
    /// Set when some product exceeded `2^n`. Never expected.
    pub bound_exceeded: bool,
}

struct SubtreeOutcome {
    best: u64,
    witnesses: Vec<PairInstance>,
    nodes: u64,
    pruned: u64,
    aborted: bool,
}

/// Explores all B-sides whose first (lowest-index) member is
/// `universe[j0]`, pruning against a subtree-local best seeded from the
/// precomputed trivial product. Ticket accounting against the shared
/// counter enforces the global node budget.
fn explore_subtree(
    universe: &[SubsetMask],
    j0: usize,
    n: GroundSize,
    frac: Frac,
    seed: u64,
    tickets: &AtomicU64,
    max_nodes: u64,
) -> SubtreeOutcome {
    let mut out = SubtreeOutcome { best: seed, witnesses: Vec::new(), nodes: 0, pruned: 0, aborted: false };
    let mut tracker = IncrementalAMax::new(n, frac);
    let mut chosen: Vec<SubsetMask> = Vec::new();

    // `frames[depth]` holds the next candidate index to try as a child of
    // the current node; tracker and chosen always mirror the frame stack.
    let mut frames: Vec<usize> = Vec::new();

    let visit = |tracker: &IncrementalAMax, chosen: &[SubsetMask], out: &mut SubtreeOutcome| {
        let product = tracker.current().len() as u64 * chosen.len() as u64;
        if product > out.best {
            out.best = product;
            out.witnesses.clear();
        }
        if product == out.best {
            let a = Family::new(n, tracker.current().iter().copied()).expect("masks fit");
            let b = Family::new(n, chosen.iter().copied()).expect("masks fit");
            out.witnesses.push(PairInstance::new(frac, a, b).expect("shared ground set"));
        }
    };

    if tickets.fetch_add(1, Ordering::Relaxed) >= max_nodes {
        out.aborted = true;
        return out;
    }
    tracker.push(universe[j0]);
    chosen.push(universe[j0]);
    out.nodes += 1;
    visit(&tracker, &chosen, &mut out);
    frames.push(j0 + 1);

    while let Some(frame) = frames.last_mut() {
        let j = *frame;
        if j >= universe.len() {
            frames.pop();
            chosen.pop();
            tracker.pop();
            continue;
        }
        // Any extension uses candidates from index j on, so its product is
        // bounded by the current closure size times the largest reachable
        // B-side. Below the subtree best nothing can even tie.
        let remaining = (universe.len() - j) as u64;
        let bound = tracker.current().len() as u64 * (chosen.len() as u64 + remaining);
        if bound < out.best {
            out.pruned += 1;
            frames.pop();
            chosen.pop();
            tracker.pop();
            continue;
        }
        *frame = j + 1;
        if tickets.fetch_add(1, Ordering::Relaxed) >= max_nodes {
            out.aborted = true;
            break;
        }
        tracker.push(universe[j]);
        chosen.push(universe[j]);
        out.nodes += 1;
        visit(&tracker, &chosen, &mut out);
        frames.push(j + 1);
    }
    out
}

/// Sweeps every nonempty B-side inside the divisible universe, returning
/// the maximum product, all pairs achieving it, and (optionally) their
/// canonical classes.
pub fn enumerate_maximal(n: GroundSize, frac: Frac, cfg: &SearchConfig) -> Result<SearchResult> {
    if cfg.max_nodes == 0 {
        return Err(Error::ZeroNodeBudget);
    }
    let universe = divisible_universe(n, frac);

    // Honest pruning seed: the product of the concrete B-side {∅},
    // computed rather than assumed. Its witness is re-found by the sweep.
    let seed_b = Family::new(n, [SubsetMask::EMPTY]).expect("∅ fits any ground set");
    let seed = a_max(&seed_b, frac).len() as u64;

    let tickets = AtomicU64::new(0);
    let mut slots: Vec<Option<SubtreeOutcome>> = Vec::with_capacity(universe.len());
    slots.resize_with(universe.len(), || None);

    let workers = cfg.thread_hint.clamp(1, universe.len().max(1));
    if workers <= 1 {
        for (j0, slot) in slots.iter_mut().enumerate() {
            *slot = Some(explore_subtree(&universe, j0, n, frac, seed, &tickets, cfg.max_nodes));
        }
    } else {
        let universe_ref = &universe;
        let tickets_ref = &tickets;
        let outcomes: Vec<Vec<(usize, SubtreeOutcome)>> = std::thread::scope(|scope| {
            let handles: Vec<_> = (0..workers)
                .map(|w| {
                    scope.spawn(move || {
                        let mut got = Vec::new();
                        let mut j0 = w;
                        while j0 < universe_ref.len() {
                            got.push((
                                j0,
                                explore_subtree(
                                    universe_ref,
                                    j0,
                                    n,
                                    frac,
                                    seed,
                                    tickets_ref,
                                    cfg.max_nodes,
                                ),
                            ));
                            j0 += workers;
                        }
                        got
                    })
                })
                .collect();
            handles.into_iter().map(|h| h.join().expect("worker panicked")).collect()
        });
        for bucket in outcomes {
            for (j0, o) in bucket {
                slots[j0] = Some(o);
            }
        }
    }

    let outcomes: Vec<SubtreeOutcome> = slots.into_iter().map(|s| s.expect("every subtree ran")).collect();
    let exhausted = !outcomes.iter().any(|o| o.aborted);
    let max_product = outcomes.iter().map(|o| o.best).max().unwrap_or(seed).max(seed);
    let nodes_visited: u64 = outcomes.iter().map(|o| o.nodes).sum();
    let pruned: u64 = outcomes.iter().map(|o| o.pruned).sum();

    let mut maximal_pairs: Vec<PairInstance> = outcomes
        .into_iter()
        .filter(|o| o.best == max_product)
        .flat_map(|o| o.witnesses)
        .collect();
    maximal_pairs.sort_by(|p, q| {
        p.b().members().cmp(q.b().members()).then_with(|| p.a().members().cmp(q.a().members()))
    });

    let mut classes = Vec::new();
    if cfg.canonicalize {
        let mut grouped: BTreeMap<CanonicalKey, (PairInstance, u64)> = BTreeMap::new();
        for p in &maximal_pairs {
            let key = canonical_form(p)?;
            grouped
                .entry(key)
                .and_modify(|(_, count)| *count += 1)
                .or_insert_with(|| (p.clone(), 1));
        }
        classes = grouped
            .into_iter()
            .map(|(key, (representative, count))| ClassEntry { representative, key, count })
            .collect();
    }

    Ok(SearchResult {
        n,
        frac,
        max_product,
        maximal_pairs,
        classes,
        canonicalized: cfg.canonicalize,
        nodes_visited,
        pruned,
        exhausted,
        bound_exceeded: max_product > n.subset_count(),
    })
}

/// Diff between the classes a search found and the generator predictions.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MatchReport {
    pub matched: bool,
    /// Predicted classes no witness realized, by representative.
    pub missing: Vec<PairInstance>,
    /// Found classes no generator predicts, by representative.
    pub extra: Vec<PairInstance>,
}

/// Set-compares the canonical classes of an exhausted, canonicalized run
/// against the generator predictions for the same `(n, frac)`.
pub fn compare_with_predicted(r: &SearchResult) -> Result<MatchReport> {
    if !r.exhausted {
        return Err(Error::NotExhausted);
    }
    if !r.canonicalized {
        return Err(Error::NotCanonicalized);
    }
    let mut predicted: BTreeMap<CanonicalKey, PairInstance> = BTreeMap::new();
    for p in predicted_classes(r.n, r.frac) {
        let key = canonical_form(&p)?;
        predicted.entry(key).or_insert(p);
    }
    let missing: Vec<PairInstance> = predicted
        .iter()
        .filter(|(key, _)| !r.classes.iter().any(|c| c.key == **key))
        .map(|(_, p)| p.clone())
        .collect();
    let extra: Vec<PairInstance> = r
        .classes
        .iter()
        .filter(|c| !predicted.contains_key(&c.key))
        .map(|c| c.representative.clone())
        .collect();
    Ok(MatchReport { matched: missing.is_empty() && extra.is_empty(), missing, extra })
}

/// Outcome of the exploratory symmetric search. No extremal claim is
/// attached to these numbers: the underlying question is open, and the
/// report exists to make small instances inspectable.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SymmetricReport {
    pub n: GroundSize,
    pub frac: Frac,
    pub best_product: u64,
    /// All pairs (A, B_max(A)) achieving the best product, sorted.
    pub witnesses: Vec<PairInstance>,
    /// A-families examined.
    pub examined: u64,
    pub exhausted: bool,
}

/// Exhausts all pairs under the symmetric predicate at very small `n`.
///
/// The symmetric condition is still pairwise between members, so for a
/// fixed A-family the compatible B-masks are independent of one another
/// and the best B-side is the set of all of them. The sweep therefore
/// enumerates A-families only, against a precomputed compatibility table.
pub fn symmetric_max_search(n: GroundSize, frac: Frac, cfg: &SearchConfig) -> Result<SymmetricReport> {
    if n.get() > MAX_SYMMETRIC_GROUND_SIZE {
        return Err(Error::SymmetricCap { n: n.get() });
    }
    if cfg.max_nodes == 0 {
        return Err(Error::ZeroNodeBudget);
    }
    let m = n.subset_count() as u32; // masks per side, at most 16
    let (c, d) = (frac.c(), frac.d());

    let compatible = |a: u32, b: u32| -> bool {
        let (a, b) = (SubsetMask::from_bits(a), SubsetMask::from_bits(b));
        let lhs = d * intersection_size(a, b) as u64;
        lhs == c * a.len() as u64 || lhs == c * b.len() as u64
    };
    // compat[a] = bitset over b-mask indices acceptable next to a.
    let compat: Vec<u32> = (0..m)
        .map(|a| (0..m).filter(|&b| compatible(a, b)).fold(0u32, |acc, b| acc | (1 << b)))
        .collect();

    let full = if m == 32 { u32::MAX } else { (1u32 << m) - 1 };
    let mut best = 0u64;
    let mut winners: Vec<u32> = Vec::new();
    let mut examined = 0u64;
    let mut exhausted = true;
    for a_bits in 1..=full {
        if examined >= cfg.max_nodes {
            exhausted = false;
            break;
        }
        examined += 1;
        let mut b_bits = full;
        let mut rest = a_bits;
        while rest != 0 && b_bits != 0 {
            b_bits &= compat[rest.trailing_zeros() as usize];
            rest &= rest - 1;
        }
        let product = u64::from(a_bits.count_ones()) * u64::from(b_bits.count_ones());
        if product > best {
            best = product;
            winners.clear();
        }
        if product == best && product > 0 {
            winners.push(a_bits);
        }
    }

    let family_from_bits = |bits: u32| -> Family {
        let members = (0..m).filter(|&i| bits & (1 << i) != 0).map(SubsetMask::from_bits);
        Family::new(n, members).expect("indices are masks over [n]")
    };
    let mut witnesses: Vec<PairInstance> = winners
        .into_iter()
        .map(|a_bits| {
            let a = family_from_bits(a_bits);
            let b_bits = a
                .members()
                .iter()
                .fold(full, |acc, mask| acc & compat[mask.bits() as usize]);
            PairInstance::new(frac, a, family_from_bits(b_bits)).expect("shared ground set")
        })
        .collect();
    witnesses.sort_by(|p, q| {
        p.a().members().cmp(q.a().members()).then_with(|| p.b().members().cmp(q.b().members()))
    });

    Ok(SymmetricReport { n, frac, best_product: best, witnesses, examined, exhausted })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crossing::{is_cross_intersecting, is_symmetric_cross};
    use crate::extremal::{gen_half, gen_trivial};
    use crate::sets::make_family;

    fn g(n: u32) -> GroundSize {
        GroundSize::new(n).unwrap()
    }

    fn fr(c: u64, d: u64) -> Frac {
        Frac::new(c, d).unwrap()
    }

    #[test]
    fn universe_filters_by_divisibility() {
        let u = divisible_universe(g(3), fr(1, 3));
        assert_eq!(u, vec![SubsetMask::EMPTY, SubsetMask::from_bits(0b111)]);

        assert_eq!(divisible_universe(g(4), fr(1, 2)).len(), 8);
        assert_eq!(divisible_universe(g(4), fr(1, 1)).len(), 16);
    }

    #[test]
    fn search_one_third_on_three_elements() {
        let r = enumerate_maximal(g(3), fr(1, 3), &SearchConfig::default()).unwrap();
        assert!(r.exhausted);
        assert_eq!(r.max_product, 8);
        assert!(!r.bound_exceeded);
        assert_eq!(r.maximal_pairs.len(), 1);
        let p = &r.maximal_pairs[0];
        assert_eq!(p.a(), &Family::power_set(g(3)));
        assert_eq!(p.b().members(), &[SubsetMask::EMPTY]);
    }

    #[test]
    fn search_half_on_two_elements_finds_both_shapes() {
        let cfg = SearchConfig { canonicalize: true, ..SearchConfig::default() };
        let r = enumerate_maximal(g(2), fr(1, 2), &cfg).unwrap();
        assert_eq!(r.max_product, 4);
        assert_eq!(r.maximal_pairs.len(), 2);
        assert_eq!(r.classes.len(), 2);
        let b_sizes: Vec<usize> = r.maximal_pairs.iter().map(|p| p.b().len()).collect();
        assert_eq!(b_sizes, vec![1, 2]);
    }

    #[test]
    fn every_maximal_pair_is_a_closure_fixed_point() {
        for (c, d, n_raw) in [(1u64, 3u64, 4u32), (1, 2, 4), (0, 1, 3), (1, 1, 3)] {
            let r = enumerate_maximal(g(n_raw), fr(c, d), &SearchConfig::default()).unwrap();
            for p in &r.maximal_pairs {
                assert!(is_cross_intersecting(p));
                assert!(is_symmetric_cross(p));
                assert_eq!(p.a(), &a_max(p.b(), p.frac()));
                assert_eq!(p.product(), r.max_product);
            }
        }
    }

    #[test]
    fn thread_hint_does_not_change_the_result() {
        for (c, d, n_raw) in [(1u64, 3u64, 5u32), (1, 2, 4), (0, 1, 4)] {
            let mut sequential = None;
            for threads in [1usize, 2, 4, 7] {
                let cfg = SearchConfig {
                    thread_hint: threads,
                    canonicalize: true,
                    ..SearchConfig::default()
                };
                let r = enumerate_maximal(g(n_raw), fr(c, d), &cfg).unwrap();
                match &sequential {
                    None => sequential = Some(r),
                    Some(first) => assert_eq!(&r, first, "threads={threads}"),
                }
            }
        }
    }

    #[test]
    fn node_budget_marks_partial_runs() {
        let cfg = SearchConfig { max_nodes: 2, ..SearchConfig::default() };
        let r = enumerate_maximal(g(3), fr(0, 1), &cfg).unwrap();
        assert!(!r.exhausted);
        assert!(r.nodes_visited <= 2);

        let zero = SearchConfig { max_nodes: 0, ..SearchConfig::default() };
        assert!(matches!(enumerate_maximal(g(3), fr(0, 1), &zero), Err(Error::ZeroNodeBudget)));
    }

    #[test]
    fn canonical_form_identifies_swapped_pairs() {
        let p1 = PairInstance::new(
            fr(1, 2),
            make_family(2, &[vec![1]]).unwrap(),
            make_family(2, &[vec![2]]).unwrap(),
        )
        .unwrap();
        let p2 = PairInstance::new(
            fr(1, 2),
            make_family(2, &[vec![2]]).unwrap(),
            make_family(2, &[vec![1]]).unwrap(),
        )
        .unwrap();
        assert_eq!(canonical_form(&p1).unwrap(), canonical_form(&p2).unwrap());
    }

    #[test]
    fn canonical_form_is_permutation_invariant() {
        let p = gen_half(g(5), 2).unwrap();
        let base = canonical_form(&p).unwrap();
        // Relabel by the cycle (1 2 3 4 5).
        let relabel = |f: &Family| {
            Family::new(
                f.n(),
                f.members().iter().map(|&m| {
                    let mut out = 0u32;
                    for e in m.elements() {
                        let img = if e == 5 { 1 } else { e + 1 };
                        out |= 1 << (img - 1);
                    }
                    SubsetMask::from_bits(out)
                }),
            )
            .unwrap()
        };
        let q = PairInstance::new(p.frac(), relabel(p.a()), relabel(p.b())).unwrap();
        assert_eq!(canonical_form(&q).unwrap(), base);
    }

    #[test]
    fn canonical_form_separates_different_shapes() {
        let k1 = canonical_form(&gen_half(g(4), 1).unwrap()).unwrap();
        let k2 = canonical_form(&gen_half(g(4), 2).unwrap()).unwrap();
        assert_ne!(k1, k2);
    }

    #[test]
    fn canonical_cap_is_enforced() {
        let p = gen_trivial(g(9), fr(1, 3));
        assert!(matches!(canonical_form(&p), Err(Error::CanonicalCap { n: 9 })));
    }

    #[test]
    fn comparison_requires_exhaustion_and_classes() {
        let r = enumerate_maximal(g(3), fr(1, 3), &SearchConfig::default()).unwrap();
        assert!(matches!(compare_with_predicted(&r), Err(Error::NotCanonicalized)));

        let cfg = SearchConfig { canonicalize: true, ..SearchConfig::default() };
        let r = enumerate_maximal(g(3), fr(1, 3), &cfg).unwrap();
        let report = compare_with_predicted(&r).unwrap();
        assert!(report.matched);
        assert!(report.missing.is_empty() && report.extra.is_empty());
    }

    #[test]
    fn comparison_matches_the_half_classes_at_n4() {
        let cfg = SearchConfig { canonicalize: true, ..SearchConfig::default() };
        let r = enumerate_maximal(g(4), fr(1, 2), &cfg).unwrap();
        assert_eq!(r.classes.len(), 3);
        assert!(compare_with_predicted(&r).unwrap().matched);
    }

    #[test]
    fn symmetric_search_beats_the_plain_maximum_at_n2() {
        // Exhaustive ground truth: the per-pair disjunction admits
        // ({∅,{1,2}}, {∅,{1},{2}}) with product 6 > 2².
        let r = symmetric_max_search(g(2), fr(1, 2), &SearchConfig::default()).unwrap();
        assert!(r.exhausted);
        assert_eq!(r.best_product, 6);
        assert_eq!(r.witnesses.len(), 2);
        for w in &r.witnesses {
            assert!(is_symmetric_cross(w));
        }
        let shapes: Vec<(usize, usize)> =
            r.witnesses.iter().map(|w| (w.a().len(), w.b().len())).collect();
        assert!(shapes.contains(&(2, 3)) && shapes.contains(&(3, 2)));
    }

    #[test]
    fn symmetric_search_matches_brute_force_over_pairs() {
        // Independent oracle: enumerate both families directly.
        for (n_raw, c, d) in [(2u32, 1u64, 2u64), (2, 1, 3), (3, 1, 2), (3, 1, 1)] {
            let n = g(n_raw);
            let frac = fr(c, d);
            let m = n.subset_count() as u32;
            let mut brute = 0u64;
            for a_bits in 1u32..(1 << m) {
                for b_bits in 1u32..(1 << m) {
                    let fam = |bits: u32| {
                        Family::new(
                            n,
                            (0..m).filter(|&i| bits & (1 << i) != 0).map(SubsetMask::from_bits),
                        )
                        .unwrap()
                    };
                    let p = PairInstance::new(frac, fam(a_bits), fam(b_bits)).unwrap();
                    if is_symmetric_cross(&p) {
                        brute = brute.max(p.product());
                    }
                }
            }
            let r = symmetric_max_search(n, frac, &SearchConfig::default()).unwrap();
            assert_eq!(r.best_product, brute, "n={n_raw} {c}/{d}");
        }
    }

    #[test]
    fn symmetric_cap_is_enforced() {
        let r = symmetric_max_search(g(5), fr(1, 2), &SearchConfig::default());
        assert!(matches!(r, Err(Error::SymmetricCap { n: 5 })));
    }
}
