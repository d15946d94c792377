//! Command-line surface for the cross-intersecting family toolkit.
//!
//! Exit codes are uniform across subcommands: 0 for a passing check or a
//! clean run, 1 for a failing check (invalid pair, class mismatch, or a
//! product above the 2^n bound), 2 for input errors, 3 for a run cut
//! short by the node budget. Reports are key-sorted JSON, so identical
//! inputs produce byte-identical output.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Deserialize;
use serde_json::json;

use xifam_core::crossing::{
    closure_report, is_cross_intersecting, parity_identity_check, predicted_product,
    structure_decompose, StructureDecomposition,
};
use xifam_core::extremal::{gen_half, gen_one, gen_trivial, gen_zero};
use xifam_core::numtheory::{characterize_pow2, is_pow2_binom, nu2_binom};
use xifam_core::search::{
    compare_with_predicted, enumerate_maximal, symmetric_max_search, SearchConfig, SearchResult,
};
use xifam_core::sets::make_family;
use xifam_core::{Family, Frac, GroundSize, PairInstance};

#[derive(Parser)]
#[command(name = "xifam", version, about = "Cross-intersecting set family toolkit")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Validate a pair file and report product, parity, and structure
    CheckPair {
        /// JSON file with fields n, c, d, A, B
        path: PathBuf,
    },
    /// Enumerate all maximal pairs for a fraction at one ground size
    Search {
        #[arg(long)]
        n: u32,
        /// Fraction as a literal, e.g. 1/2
        #[arg(long, value_parser = parse_frac_spec)]
        frac: FracSpec,
        /// Group maximal pairs into relabeling classes and diff them
        /// against the known constructions
        #[arg(long)]
        canonicalize: bool,
        /// Node budget for the sweep
        #[arg(long)]
        max_nodes: Option<u64>,
        /// Worker count (default: XIFAM_THREADS or 1)
        #[arg(long)]
        threads: Option<usize>,
        /// Write the report here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Emit one known maximal pair as a pair file
    Gen {
        #[arg(long)]
        n: u32,
        #[arg(long, value_parser = parse_frac_spec)]
        frac: FracSpec,
        /// Class parameter of the construction
        #[arg(long)]
        k: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Tabulate which binomials are powers of two (CSV)
    BinomPow2 {
        #[arg(long)]
        max_n: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exhaust the symmetric variant at very small n (exploratory)
    SymSearch {
        #[arg(long)]
        n: u32,
        #[arg(long, value_parser = parse_frac_spec)]
        frac: FracSpec,
        #[arg(long)]
        max_nodes: Option<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Fraction as typed on the command line, before reduction.
#[derive(Clone, Copy, Debug)]
struct FracSpec {
    c: u64,
    d: u64,
}

fn parse_frac_spec(s: &str) -> Result<FracSpec, String> {
    let (c, d) = s
        .split_once('/')
        .ok_or_else(|| format!("expected c/d, got {s:?}"))?;
    let c: u64 = c.trim().parse().map_err(|_| format!("numerator {c:?} is not an integer"))?;
    let d: u64 = d.trim().parse().map_err(|_| format!("denominator {d:?} is not an integer"))?;
    Ok(FracSpec { c, d })
}

impl FracSpec {
    /// Reduces to lowest terms, warning when that changed anything: the
    /// arithmetic downstream assumes gcd(c, d) = 1.
    fn resolve(self) -> Result<Frac, String> {
        let frac = Frac::new(self.c, self.d).map_err(|e| e.to_string())?;
        if (frac.c(), frac.d()) != (self.c, self.d) {
            eprintln!("warning: fraction {}/{} reduced to {frac}", self.c, self.d);
        }
        Ok(frac)
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

/// Ok carries the process exit code; Err means an input error (exit 2).
fn run(cli: Cli) -> Result<u8, String> {
    match cli.cmd {
        Cmd::CheckPair { path } => cmd_check_pair(&path),
        Cmd::Search { n, frac, canonicalize, max_nodes, threads, out } => {
            cmd_search(n, frac, canonicalize, max_nodes, threads, out.as_deref())
        }
        Cmd::Gen { n, frac, k, out } => cmd_gen(n, frac, k, out.as_deref()),
        Cmd::BinomPow2 { max_n, out } => cmd_binom_pow2(max_n, out.as_deref()),
        Cmd::SymSearch { n, frac, max_nodes, out } => {
            cmd_sym_search(n, frac, max_nodes, out.as_deref())
        }
    }
}

fn emit(out: Option<&std::path::Path>, text: &str) -> Result<(), String> {
    match out {
        Some(path) => fs::write(path, text)
            .map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn render(value: &serde_json::Value) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("report serializes");
    text.push('\n');
    text
}

/// On-disk pair format. Unknown or missing fields are schema violations,
/// reported by name.
#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PairFile {
    n: u32,
    c: u64,
    d: u64,
    #[serde(rename = "A")]
    a: Vec<Vec<u32>>,
    #[serde(rename = "B")]
    b: Vec<Vec<u32>>,
}

fn load_pair(path: &std::path::Path) -> Result<PairInstance, String> {
    let text = fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    let file: PairFile =
        serde_json::from_str(&text).map_err(|e| format!("{}: {e}", path.display()))?;
    let frac = FracSpec { c: file.c, d: file.d }.resolve()?;
    let a = make_family(file.n, &file.a).map_err(|e| format!("field A: {e}"))?;
    let b = make_family(file.n, &file.b).map_err(|e| format!("field B: {e}"))?;
    PairInstance::new(frac, a, b).map_err(|e| e.to_string())
}

fn family_lists(f: &Family) -> serde_json::Value {
    json!(f.element_lists())
}

fn decomposition_json(dec: &StructureDecomposition, frac: Frac) -> serde_json::Value {
    json!({
        "blocks": dec.blocks.iter().map(|b| b.elements()).collect::<Vec<_>>(),
        "block_count": dec.k,
        "free_elements": dec.n0,
        "block_multipliers": dec.block_multipliers,
        "predicted_product": predicted_product(dec, frac).ok(),
    })
}

fn cmd_check_pair(path: &std::path::Path) -> Result<u8, String> {
    let pair = load_pair(path)?;
    let n = pair.n();
    let frac = pair.frac();

    let valid = is_cross_intersecting(&pair);
    // Err here means the pair is invalid; the report shows null rather
    // than hiding the field.
    let parity = parity_identity_check(&pair).ok();
    let closure = closure_report(pair.b(), frac);
    let decomposition = if closure.delta_closed && closure.intersection_closed {
        structure_decompose(pair.b(), Some(frac))
            .ok()
            .map(|dec| decomposition_json(&dec, frac))
    } else {
        None
    };

    let report = json!({
        "n": n.get(),
        "c": frac.c(),
        "d": frac.d(),
        "valid": valid,
        "product": pair.product(),
        "is_maximal_product": pair.product() == n.subset_count(),
        "parity_identity": parity,
        "closure": {
            "delta_closed": closure.delta_closed,
            "intersection_closed": closure.intersection_closed,
            "sizes_divisible": closure.sizes_divisible,
            "parity_table_ok": closure.parity_table_ok,
            "pairwise_mod_d_ok": closure.pairwise_mod_d_ok,
        },
        "decomposition": decomposition,
    });
    emit(None, &render(&report))?;
    Ok(if valid { 0 } else { 1 })
}

fn thread_default(flag: Option<usize>) -> Result<usize, String> {
    if let Some(t) = flag {
        return Ok(t);
    }
    match std::env::var("XIFAM_THREADS") {
        Ok(raw) => raw
            .trim()
            .parse()
            .map_err(|_| format!("XIFAM_THREADS={raw:?} is not a thread count")),
        Err(_) => Ok(1),
    }
}

fn search_report(r: &SearchResult, comparison: Option<&serde_json::Value>) -> serde_json::Value {
    let classes: Vec<serde_json::Value> = if r.canonicalized {
        r.classes
            .iter()
            .map(|c| {
                json!({
                    "A": family_lists(c.representative.a()),
                    "B": family_lists(c.representative.b()),
                    "count": c.count,
                })
            })
            .collect()
    } else {
        r.maximal_pairs
            .iter()
            .map(|p| json!({ "A": family_lists(p.a()), "B": family_lists(p.b()), "count": 1 }))
            .collect()
    };
    json!({
        "n": r.n.get(),
        "c": r.frac.c(),
        "d": r.frac.d(),
        "max_product": r.max_product,
        "exhausted": r.exhausted,
        "classes": classes,
        "nodes": r.nodes_visited,
        "pruned": r.pruned,
        "canonicalized": r.canonicalized,
        "bound_exceeded": r.bound_exceeded,
        "comparison": comparison,
    })
}

fn cmd_search(
    n: u32,
    frac: FracSpec,
    canonicalize: bool,
    max_nodes: Option<u64>,
    threads: Option<usize>,
    out: Option<&std::path::Path>,
) -> Result<u8, String> {
    let n = GroundSize::new(n).map_err(|e| e.to_string())?;
    let frac = frac.resolve()?;
    let cfg = SearchConfig {
        max_nodes: max_nodes.unwrap_or_else(|| SearchConfig::default().max_nodes),
        thread_hint: thread_default(threads)?,
        canonicalize,
    };
    let r = enumerate_maximal(n, frac, &cfg).map_err(|e| e.to_string())?;

    let comparison = if r.canonicalized && r.exhausted {
        let diff = compare_with_predicted(&r).map_err(|e| e.to_string())?;
        Some(json!({
            "matched": diff.matched,
            "missing": diff.missing.iter().map(|p| json!({
                "A": family_lists(p.a()), "B": family_lists(p.b()),
            })).collect::<Vec<_>>(),
            "extra": diff.extra.iter().map(|p| json!({
                "A": family_lists(p.a()), "B": family_lists(p.b()),
            })).collect::<Vec<_>>(),
        }))
    } else {
        None
    };
    let matched = comparison
        .as_ref()
        .map(|c| c["matched"].as_bool().unwrap_or(false));

    emit(out, &render(&search_report(&r, comparison.as_ref())))?;

    if r.bound_exceeded {
        return Ok(1);
    }
    if !r.exhausted {
        return Ok(3);
    }
    Ok(match matched {
        Some(false) => 1,
        _ => 0,
    })
}

fn cmd_gen(n: u32, frac: FracSpec, k: u32, out: Option<&std::path::Path>) -> Result<u8, String> {
    let n = GroundSize::new(n).map_err(|e| e.to_string())?;
    let frac = frac.resolve()?;
    let pair = if frac.is_zero() {
        gen_zero(n, k).map_err(|e| e.to_string())?
    } else if frac.is_one() {
        gen_one(n, k).map_err(|e| e.to_string())?
    } else if frac.is_half() {
        gen_half(n, k).map_err(|e| e.to_string())?
    } else if k == 0 {
        gen_trivial(n, frac)
    } else {
        return Err(format!(
            "k={k} is out of range for {frac}: only the k=0 class exists for this fraction"
        ));
    };
    let file = json!({
        "n": n.get(),
        "c": frac.c(),
        "d": frac.d(),
        "A": family_lists(pair.a()),
        "B": family_lists(pair.b()),
    });
    emit(out, &render(&file))?;
    Ok(0)
}

fn cmd_binom_pow2(max_n: u64, out: Option<&std::path::Path>) -> Result<u8, String> {
    let mut rows = String::from("n,k,nu2,is_pow2,characterized\n");
    for n in 0..=max_n {
        for k in 0..=n {
            let nu2 = nu2_binom(n, k).map_err(|e| e.to_string())?;
            let direct = is_pow2_binom(n, k).map_err(|e| e.to_string())?;
            let shape = characterize_pow2(n, k);
            rows.push_str(&format!("{n},{k},{nu2},{direct},{shape}\n"));
        }
    }
    emit(out, &rows)?;
    Ok(0)
}

fn cmd_sym_search(
    n: u32,
    frac: FracSpec,
    max_nodes: Option<u64>,
    out: Option<&std::path::Path>,
) -> Result<u8, String> {
    let n = GroundSize::new(n).map_err(|e| e.to_string())?;
    let frac = frac.resolve()?;
    let cfg = SearchConfig {
        max_nodes: max_nodes.unwrap_or_else(|| SearchConfig::default().max_nodes),
        ..SearchConfig::default()
    };
    let r = symmetric_max_search(n, frac, &cfg).map_err(|e| e.to_string())?;
    let report = json!({
        "n": r.n.get(),
        "c": r.frac.c(),
        "d": r.frac.d(),
        "best_product": r.best_product,
        "examined": r.examined,
        "exhausted": r.exhausted,
        // No extremal claim attaches to these numbers; the report is a
        // desk-scale observation, nothing more.
        "exploratory": true,
        "witnesses": r.witnesses.iter().map(|p| json!({
            "A": family_lists(p.a()), "B": family_lists(p.b()),
        })).collect::<Vec<_>>(),
    });
    emit(out, &render(&report))?;
    Ok(if r.exhausted { 0 } else { 3 })
}
