//! Acceptance gate: one test per criterion, each printing a single
//! PASS/FAIL line. A FAIL line is followed by the first few violations and
//! a panic, so `cargo test` reports it honestly.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use xifam_core::crossing::{
    a_max, closure_report, is_cross_intersecting, is_symmetric_cross, parity_identity_check,
    predicted_product, structure_decompose,
};
use xifam_core::extremal::{gen_half, gen_one, gen_trivial, gen_zero};
use xifam_core::gf2::{column_profile, dual, lift_pair, orthogonal_families, span, ColumnTag};
use xifam_core::search::{
    canonical_form, compare_with_predicted, divisible_universe, enumerate_maximal,
    symmetric_max_search, SearchConfig,
};
use xifam_core::{Family, Frac, GroundSize, PairInstance, SubsetMask};

fn g(n: u32) -> GroundSize {
    GroundSize::new(n).unwrap()
}

fn fr(c: u64, d: u64) -> Frac {
    Frac::new(c, d).unwrap()
}

/// The fraction/size grid the exhaustive criteria sweep.
fn desk_grid() -> Vec<(Frac, u32)> {
    vec![
        (fr(1, 3), 6),
        (fr(2, 3), 6),
        (fr(1, 4), 6),
        (fr(3, 4), 6),
        (fr(1, 2), 5),
        (fr(0, 1), 4),
        (fr(1, 1), 4),
    ]
}

fn all_fracs() -> Vec<Frac> {
    desk_grid().into_iter().map(|(f, _)| f).collect()
}

fn report(criterion: &str, failures: Vec<String>) {
    if failures.is_empty() {
        println!("{criterion}: PASS");
    } else {
        println!("{criterion}: FAIL ({} violations)", failures.len());
        for f in failures.iter().take(10) {
            println!("  {f}");
        }
        panic!("{criterion} failed");
    }
}

fn canonical_search(n: GroundSize, frac: Frac) -> xifam_core::search::SearchResult {
    let cfg = SearchConfig { canonicalize: true, ..SearchConfig::default() };
    enumerate_maximal(n, frac, &cfg).unwrap()
}

#[test]
fn criterion_01_max_product_is_two_to_the_n_at_desk_scale() {
    let started = Instant::now();
    let mut failures = Vec::new();
    for (frac, n_max) in desk_grid() {
        for n_raw in 1..=n_max {
            let n = g(n_raw);
            let r = enumerate_maximal(n, frac, &SearchConfig::default()).unwrap();
            if !r.exhausted {
                failures.push(format!("{frac} n={n_raw}: budget exhausted before completion"));
            }
            if r.max_product != n.subset_count() {
                failures.push(format!(
                    "{frac} n={n_raw}: max product {} != {}",
                    r.max_product,
                    n.subset_count()
                ));
            }
            if r.bound_exceeded {
                failures.push(format!("{frac} n={n_raw}: product above 2^n reported"));
            }
        }
    }
    let elapsed = started.elapsed();
    if elapsed.as_secs() >= 300 {
        failures.push(format!("sweep took {elapsed:?}, budget is 5 minutes"));
    }
    report("criterion 1 (exhaustive max product equals 2^n)", failures);
}

#[test]
fn criterion_02_generic_fractions_have_only_the_trivial_class() {
    let mut failures = Vec::new();
    for frac in [fr(1, 3), fr(2, 3), fr(1, 4), fr(3, 4)] {
        for n_raw in 1..=6 {
            let n = g(n_raw);
            let r = canonical_search(n, frac);
            if !r.exhausted {
                failures.push(format!("{frac} n={n_raw}: not exhausted"));
                continue;
            }
            let trivial_key = canonical_form(&gen_trivial(n, frac)).unwrap();
            if r.classes.len() != 1 {
                failures.push(format!("{frac} n={n_raw}: {} classes, expected 1", r.classes.len()));
            } else if r.classes[0].key != trivial_key {
                failures.push(format!("{frac} n={n_raw}: unique class is not the trivial pair"));
            }
            if !compare_with_predicted(&r).unwrap().matched {
                failures.push(format!("{frac} n={n_raw}: prediction diff non-empty"));
            }
        }
    }
    report("criterion 2 (unique trivial class at generic fractions)", failures);
}

#[test]
fn criterion_03_half_fraction_class_census() {
    let mut failures = Vec::new();
    for n_raw in 2..=5u32 {
        let n = g(n_raw);
        let r = canonical_search(n, fr(1, 2));
        if !r.exhausted {
            failures.push(format!("n={n_raw}: not exhausted"));
            continue;
        }
        let expected = (n_raw / 2 + 1) as usize;
        if r.classes.len() != expected {
            failures.push(format!("n={n_raw}: {} classes, expected {expected}", r.classes.len()));
        }
        let diff = compare_with_predicted(&r).unwrap();
        if !diff.matched {
            failures.push(format!(
                "n={n_raw}: classes differ from generators ({} missing, {} extra)",
                diff.missing.len(),
                diff.extra.len()
            ));
        }
    }
    report("criterion 3 (half-fraction class census)", failures);
}

#[test]
fn criterion_04_integer_fraction_class_census() {
    let mut failures = Vec::new();
    for frac in [fr(0, 1), fr(1, 1)] {
        for n_raw in 1..=4u32 {
            let n = g(n_raw);
            let r = canonical_search(n, frac);
            if !r.exhausted {
                failures.push(format!("{frac} n={n_raw}: not exhausted"));
                continue;
            }
            let expected = (n_raw + 1) as usize;
            if r.classes.len() != expected {
                failures.push(format!(
                    "{frac} n={n_raw}: {} classes, expected {expected}",
                    r.classes.len()
                ));
            }
            let diff = compare_with_predicted(&r).unwrap();
            if !diff.matched {
                failures.push(format!(
                    "{frac} n={n_raw}: classes differ from generators ({} missing, {} extra)",
                    diff.missing.len(),
                    diff.extra.len()
                ));
            }
        }
    }
    report("criterion 4 (integer-fraction class census)", failures);
}

#[test]
fn criterion_05_binomial_power_of_two_characterization() {
    use xifam_core::numtheory::{characterize_pow2, is_pow2_binom};
    let started = Instant::now();
    let mut failures = Vec::new();
    let mut checked = 0u64;
    for n in 0..=512u64 {
        for k in 0..=n {
            checked += 1;
            let direct = is_pow2_binom(n, k).unwrap();
            let shape = characterize_pow2(n, k);
            if direct != shape {
                failures.push(format!("C({n},{k}): valuation says {direct}, shape says {shape}"));
            }
        }
    }
    assert_eq!(checked, 131_841);
    let elapsed = started.elapsed();
    if elapsed.as_secs() >= 10 {
        failures.push(format!("sweep took {elapsed:?}, budget is 10 seconds"));
    }
    report("criterion 5 (binomial power-of-two characterization, 131841 pairs)", failures);
}

#[test]
fn criterion_06_span_columns_are_all_zero_or_balanced() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0006);
    let mut failures = Vec::new();
    for trial in 0..1000 {
        let n_raw = rng.gen_range(1..=16u32);
        let n = g(n_raw);
        let gens = rng.gen_range(0..=n_raw);
        let members = (0..gens).map(|_| {
            SubsetMask::from_bits(rng.gen_range(0..n.subset_count()) as u32)
        });
        let code = span(&Family::new(n, members).unwrap());
        match column_profile(&code) {
            Ok(tags) => {
                // The error path already convicts unbalanced columns; the
                // tags only need to cover every coordinate.
                if tags.len() != n_raw as usize {
                    failures.push(format!("trial {trial}: {} tags for n={n_raw}", tags.len()));
                }
                for (i, tag) in tags.iter().enumerate() {
                    let ones = code
                        .family()
                        .members()
                        .iter()
                        .filter(|m| m.contains((i + 1) as u32))
                        .count();
                    let lawful = match tag {
                        ColumnTag::AllZero => ones == 0,
                        ColumnTag::Balanced => 2 * ones == code.len(),
                    };
                    if !lawful {
                        failures.push(format!(
                            "trial {trial}: column {} tagged {tag:?} with {ones}/{} ones",
                            i + 1,
                            code.len()
                        ));
                    }
                }
            }
            Err(e) => failures.push(format!("trial {trial}: profile rejected a span: {e}")),
        }
    }
    report("criterion 6 (span columns all-zero or balanced, 1000 spans)", failures);
}

#[test]
fn criterion_07_dual_code_laws() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0007);
    let mut failures = Vec::new();
    for trial in 0..200 {
        let n_raw = rng.gen_range(1..=10u32);
        let n = g(n_raw);
        let gens = rng.gen_range(0..=n_raw);
        let members = (0..gens).map(|_| {
            SubsetMask::from_bits(rng.gen_range(0..n.subset_count()) as u32)
        });
        let code = span(&Family::new(n, members).unwrap());
        let d = dual(&code);

        if !d.family().contains(SubsetMask::EMPTY) {
            failures.push(format!("trial {trial}: dual misses the empty set"));
        }
        let dm = d.family().members();
        let closed = dm.iter().all(|&x| dm.iter().all(|&y| {
            d.family().contains(SubsetMask::from_bits(x.bits() ^ y.bits()))
        }));
        if !closed {
            failures.push(format!("trial {trial}: dual is not difference-closed"));
        }
        if d.dim() + code.dim() != n_raw as usize {
            failures.push(format!(
                "trial {trial}: dim {} + dual dim {} != n {n_raw}",
                code.dim(),
                d.dim()
            ));
        }
        if dual(&d) != code {
            failures.push(format!("trial {trial}: double dual differs from the code"));
        }
    }
    report("criterion 7 (dual code laws, 200 codes)", failures);
}

/// Every pair the generators emit at desk scale, for criteria 8 and 11.
fn generator_outputs() -> Vec<PairInstance> {
    let mut out = Vec::new();
    for n_raw in 1..=6u32 {
        let n = g(n_raw);
        for frac in all_fracs() {
            out.push(gen_trivial(n, frac));
        }
        for k in 0..=n_raw {
            out.push(gen_zero(n, k).unwrap());
            out.push(gen_one(n, k).unwrap());
        }
        for k in 0..=n_raw / 2 {
            out.push(gen_half(n, k).unwrap());
        }
    }
    out
}

#[test]
fn criterion_08_parity_identity_and_lift_orthogonality() {
    let mut failures = Vec::new();
    let mut check = |label: String, p: &PairInstance| {
        if !is_cross_intersecting(p) {
            failures.push(format!("{label}: pair is not valid"));
            return;
        }
        match parity_identity_check(p) {
            Ok(true) => {}
            Ok(false) => failures.push(format!("{label}: parity identity fails")),
            Err(e) => failures.push(format!("{label}: parity check rejected the pair: {e}")),
        }
        match lift_pair(p) {
            Ok((a_lift, b_lift)) => {
                if !orthogonal_families(&a_lift, &b_lift) {
                    failures.push(format!("{label}: lifted families are not orthogonal"));
                }
            }
            Err(e) => failures.push(format!("{label}: lift rejected the pair: {e}")),
        }
    };

    for (i, p) in generator_outputs().iter().enumerate() {
        check(format!("generator output {i} ({} n={})", p.frac(), p.n()), p);
    }

    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0008);
    let fracs = all_fracs();
    for trial in 0..1000 {
        let n = g(rng.gen_range(1..=8u32));
        let frac = fracs[rng.gen_range(0..fracs.len())];
        let b_members: Vec<SubsetMask> = divisible_universe(n, frac)
            .into_iter()
            .filter(|_| rng.gen_bool(0.5))
            .collect();
        let b = Family::new(n, b_members).unwrap();
        let a_members: Vec<SubsetMask> = a_max(&b, frac)
            .members()
            .iter()
            .copied()
            .filter(|_| rng.gen_bool(0.5))
            .collect();
        let a = Family::new(n, a_members).unwrap();
        let p = PairInstance::new(frac, a, b).unwrap();
        check(format!("random pair {trial} ({frac} n={})", p.n()), &p);
    }
    report("criterion 8 (parity identity and lift orthogonality)", failures);
}

/// All collections of pairwise disjoint nonempty blocks inside [n], each
/// collection listed once (blocks ordered by minimum element).
fn disjoint_block_collections(n: u32) -> Vec<Vec<SubsetMask>> {
    fn extend(n: u32, min_elem: u32, current: &mut Vec<SubsetMask>, out: &mut Vec<Vec<SubsetMask>>) {
        out.push(current.clone());
        let used: u32 = current.iter().map(|b| b.bits()).fold(0, |acc, b| acc | b);
        for e in min_elem..=n {
            if used & (1 << (e - 1)) != 0 {
                continue;
            }
            // Blocks whose minimum element is e: bit e-1 plus any free
            // higher bits.
            let higher: Vec<u32> =
                (e + 1..=n).filter(|&h| used & (1 << (h - 1)) == 0).collect();
            for sub in 0u32..(1 << higher.len()) {
                let mut mask = 1 << (e - 1);
                for (i, &h) in higher.iter().enumerate() {
                    if sub & (1 << i) != 0 {
                        mask |= 1 << (h - 1);
                    }
                }
                current.push(SubsetMask::from_bits(mask));
                extend(n, e + 1, current, out);
                current.pop();
            }
        }
    }
    let mut out = Vec::new();
    extend(n, 1, &mut Vec::new(), &mut out);
    out
}

/// The family of all unions of subsets of the given disjoint blocks.
fn unions_of_blocks(n: GroundSize, blocks: &[SubsetMask]) -> Family {
    let members = (0u32..(1 << blocks.len())).map(|pick| {
        let mut mask = 0u32;
        for (i, b) in blocks.iter().enumerate() {
            if pick & (1 << i) != 0 {
                mask |= b.bits();
            }
        }
        SubsetMask::from_bits(mask)
    });
    Family::new(n, members).unwrap()
}

#[test]
fn criterion_09_block_structure_and_product_identity() {
    let mut failures = Vec::new();

    for n_raw in 2..=6u32 {
        let n = g(n_raw);
        for k in 0..=(n_raw / 2).min(3) {
            let pair = gen_half(n, k).unwrap();
            let rep = closure_report(pair.b(), pair.frac());
            if !(rep.delta_closed
                && rep.intersection_closed
                && rep.sizes_divisible
                && rep.parity_table_ok
                && rep.pairwise_mod_d_ok)
            {
                failures.push(format!("n={n_raw} k={k}: closure report has a false flag: {rep:?}"));
            }
            match structure_decompose(pair.b(), Some(pair.frac())) {
                Ok(dec) => {
                    let expected: Vec<SubsetMask> =
                        (0..k).map(|i| SubsetMask::from_bits(0b11 << (2 * i))).collect();
                    if dec.blocks != expected {
                        failures.push(format!(
                            "n={n_raw} k={k}: blocks {:?} differ from adjacent pairs",
                            dec.blocks
                        ));
                    }
                    if dec.n0 != n_raw - 2 * k {
                        failures.push(format!("n={n_raw} k={k}: n0 = {}", dec.n0));
                    }
                }
                Err(e) => failures.push(format!("n={n_raw} k={k}: decompose failed: {e}")),
            }
        }
    }

    for n_raw in 1..=6u32 {
        let n = g(n_raw);
        for blocks in disjoint_block_collections(n_raw) {
            for frac in all_fracs() {
                let d = frac.d();
                if blocks.iter().any(|b| !(b.len() as u64).is_multiple_of(d)) {
                    continue;
                }
                let fam = unions_of_blocks(n, &blocks);
                let dec = match structure_decompose(&fam, Some(frac)) {
                    Ok(dec) => dec,
                    Err(e) => {
                        failures.push(format!(
                            "n={n_raw} {frac} blocks {blocks:?}: decompose failed: {e}"
                        ));
                        continue;
                    }
                };
                let predicted = match predicted_product(&dec, frac) {
                    Ok(v) => v,
                    Err(e) => {
                        failures.push(format!(
                            "n={n_raw} {frac} blocks {blocks:?}: prediction failed: {e}"
                        ));
                        continue;
                    }
                };
                let actual = a_max(&fam, frac).len() as u64 * fam.len() as u64;
                if predicted != actual {
                    failures.push(format!(
                        "n={n_raw} {frac} blocks {blocks:?}: predicted {predicted}, actual {actual}"
                    ));
                }
            }
        }
    }
    report("criterion 9 (block structure and product identity)", failures);
}

/// Pruning-free reference: every nonempty subset of the divisible
/// universe as a B-side, paired with its closure.
fn brute_force_maximal(n: GroundSize, frac: Frac) -> (u64, Vec<PairInstance>) {
    let universe = divisible_universe(n, frac);
    let trivial_b = Family::new(n, [SubsetMask::EMPTY]).unwrap();
    let mut best = a_max(&trivial_b, frac).len() as u64;
    let mut winners = Vec::new();
    for pick in 1u64..(1 << universe.len()) {
        let members = universe
            .iter()
            .enumerate()
            .filter(|(i, _)| pick & (1 << i) != 0)
            .map(|(_, &m)| m);
        let b = Family::new(n, members).unwrap();
        let a = a_max(&b, frac);
        let product = a.len() as u64 * b.len() as u64;
        if product > best {
            best = product;
            winners.clear();
        }
        if product == best {
            winners.push(PairInstance::new(frac, a, b).unwrap());
        }
    }
    winners.sort_by(|p, q| {
        p.b().members().cmp(q.b().members()).then_with(|| p.a().members().cmp(q.a().members()))
    });
    (best, winners)
}

fn render_pairs(max_product: u64, pairs: &[PairInstance]) -> String {
    let listed: Vec<serde_json::Value> = pairs
        .iter()
        .map(|p| {
            serde_json::json!({
                "A": p.a().element_lists(),
                "B": p.b().element_lists(),
            })
        })
        .collect();
    serde_json::json!({ "max_product": max_product, "pairs": listed }).to_string()
}

#[test]
fn criterion_10_search_agrees_with_pruning_free_oracle() {
    let mut failures = Vec::new();
    for frac in all_fracs() {
        for n_raw in 1..=3u32 {
            let n = g(n_raw);
            let (brute_best, brute_pairs) = brute_force_maximal(n, frac);
            let r = enumerate_maximal(n, frac, &SearchConfig::default()).unwrap();
            if !r.exhausted {
                failures.push(format!("{frac} n={n_raw}: search not exhausted"));
                continue;
            }
            let ours = render_pairs(r.max_product, &r.maximal_pairs);
            let reference = render_pairs(brute_best, &brute_pairs);
            if ours != reference {
                failures.push(format!(
                    "{frac} n={n_raw}: search {ours} differs from oracle {reference}"
                ));
            }
        }
    }
    report("criterion 10 (search agrees with pruning-free oracle)", failures);
}

#[test]
fn criterion_11_symmetric_search_sanity() {
    let mut failures = Vec::new();
    for frac in all_fracs() {
        for n_raw in 1..=3u32 {
            let n = g(n_raw);
            let r = symmetric_max_search(n, frac, &SearchConfig::default()).unwrap();
            if !r.exhausted {
                failures.push(format!("{frac} n={n_raw}: not exhausted"));
            }
            if r.best_product < n.subset_count() {
                failures.push(format!(
                    "{frac} n={n_raw}: best {} below 2^n = {}",
                    r.best_product,
                    n.subset_count()
                ));
            }
            for w in &r.witnesses {
                if !is_symmetric_cross(w) {
                    failures.push(format!("{frac} n={n_raw}: witness fails the predicate"));
                }
            }
        }
    }
    report("criterion 11 (symmetric search sanity)", failures);
}
