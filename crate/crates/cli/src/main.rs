//! `palgroup`: word operations, palindromic length, verification suites and
//! experiments. Exit status 0 on success, 1 when a verification finds a
//! counterexample, 2 on bad usage or unparsable input.

use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use palgroup::forms::{group_pl_detailed, k4_experiment, verify_theorem2, verify_theorem3};
use palgroup::lemmas::{lemma, verify_all_lemmas, verify_lemma};
use palgroup::palfact::{semigroup_pl, semigroup_pl_fast};
use palgroup::report::VerificationReport;
use palgroup::{parse_word, Letter, Word};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

#[derive(Parser)]
#[command(name = "palgroup", version, about = "Palindromic length in free semigroups and free groups")]
struct Cli {
    #[command(flatten)]
    config: RunConfig,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Debug)]
struct RunConfig {
    /// Alphabet size: number of generators
    #[arg(short = 'm', long = "alphabet", global = true, value_parser = clap::value_parser!(u32).range(1..))]
    alphabet: Option<u32>,
    /// Length bound for suites and experiments
    #[arg(short = 'L', long = "bound", global = true)]
    bound: Option<usize>,
    /// Print JSON instead of text
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads (output does not depend on it)
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    jobs: Option<u64>,
    /// Seed for randomized commands
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Leave the runtime out of reports, for byte-stable output
    #[arg(long, global = true)]
    no_timing: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Free reduction, mirror image, inverse, palindrome test
    Word { op: WordOp, word: String },
    /// Semigroup or group palindromic length with a witness
    Pl { mode: PlMode, word: String },
    /// Exhaustive bounded verification; exit 1 on any counterexample
    Verify {
        #[command(subcommand)]
        target: VerifyTarget,
    },
    /// Experiments report findings and always exit 0
    Experiment { name: ExperimentName },
    /// Dynamic program against the palindromic tree on random words
    Bench {
        #[arg(short = 'n', default_value_t = 100_000)]
        n: usize,
        #[arg(long, default_value_t = 3)]
        trials: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum WordOp {
    Reduce,
    Mirror,
    Invert,
    Ispal,
}

#[derive(Clone, Copy, ValueEnum)]
enum PlMode {
    Semigroup,
    Group,
}

#[derive(Subcommand)]
enum VerifyTarget {
    /// Products of two palindromes (default L = 7)
    Thm2,
    /// Products of three palindromes (default L = 5)
    Thm3,
    /// One lemma of the catalog (default L = 6)
    Lemma { id: String },
    /// The whole lemma catalog (default L = 6)
    Lemmas,
}

#[derive(Clone, Copy, ValueEnum)]
enum ExperimentName {
    K4,
}

fn emit_report(mut r: VerificationReport, cfg: &RunConfig) {
    if cfg.no_timing {
        r.runtime_ms = None;
    }
    if cfg.json {
        println!("{}", r.to_json());
    } else {
        print!("{}", r.to_text());
    }
}

fn cmd_word(op: WordOp, text: &str, cfg: &RunConfig) -> palgroup::Result<ExitCode> {
    let w = parse_word(text, cfg.alphabet.unwrap_or(26))?;
    let (name, out) = match op {
        WordOp::Reduce => ("reduce", json!(w.reduce().to_string())),
        WordOp::Mirror => ("mirror", json!(w.mirror().to_string())),
        WordOp::Invert => ("invert", json!(w.invert().to_string())),
        WordOp::Ispal => ("ispal", json!(w.is_palindrome())),
    };
    if cfg.json {
        println!("{}", json!({ "op": name, "input": w.to_string(), "result": out }));
    } else {
        match out {
            serde_json::Value::String(s) => println!("{s}"),
            other => println!("{other}"),
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_pl(mode: PlMode, text: &str, cfg: &RunConfig) -> palgroup::Result<ExitCode> {
    let w = parse_word(text, cfg.alphabet.unwrap_or(26))?;
    match mode {
        PlMode::Semigroup => {
            let r = semigroup_pl(&w);
            if cfg.json {
                let factors: Vec<String> = r.witness.factors.iter().map(|f| f.to_string()).collect();
                println!("{}", json!({ "word": w.to_string(), "k": r.k, "factors": factors }));
            } else {
                println!("{}", r.k);
                println!("{}", r.witness);
            }
        }
        PlMode::Group => {
            let reduced = w.reduce();
            if reduced.as_word() != &w {
                eprintln!("note: {w} is not reduced, using {reduced}");
            }
            let d = group_pl_detailed(&reduced);
            if cfg.json {
                let mut v = serde_json::to_value(&d).expect("plain data");
                v["word"] = json!(reduced.to_string());
                println!("{v}");
            } else {
                println!("{}", d.value);
                match &d.form {
                    palgroup::forms::GroupForm::Pl2(wit) => println!("form: APQ!A {wit}"),
                    palgroup::forms::GroupForm::Pl3(wit) => println!("form: {wit}"),
                    _ => {}
                }
                if !d.factors.is_empty() {
                    let f: Vec<String> = d.factors.iter().map(|f| f.to_string()).collect();
                    println!("factors: {}", f.join(" "));
                }
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(target: &VerifyTarget, cfg: &RunConfig) -> palgroup::Result<ExitCode> {
    let m = cfg.alphabet.unwrap_or(2);
    let r = match target {
        VerifyTarget::Thm2 => verify_theorem2(m, cfg.bound.unwrap_or(7))?,
        VerifyTarget::Thm3 => verify_theorem3(m, cfg.bound.unwrap_or(5))?,
        VerifyTarget::Lemma { id } => verify_lemma(&lemma(id)?, m, cfg.bound.unwrap_or(6))?,
        VerifyTarget::Lemmas => verify_all_lemmas(m, cfg.bound.unwrap_or(6))?,
    };
    let passed = r.passed();
    emit_report(r, cfg);
    Ok(if passed { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn cmd_experiment(name: ExperimentName, cfg: &RunConfig) -> palgroup::Result<ExitCode> {
    let m = cfg.alphabet.unwrap_or(2);
    match name {
        ExperimentName::K4 => emit_report(k4_experiment(m, cfg.bound.unwrap_or(3))?, cfg),
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_bench(n: usize, trials: usize, cfg: &RunConfig) -> ExitCode {
    let m = cfg.alphabet.unwrap_or(2);
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut rows = Vec::new();
    let mut all_agree = true;
    for trial in 0..trials {
        let w = Word::from_letters((0..n).map(|_| Letter::from_code(rng.gen_range(0..2 * m))).collect());
        let t = Instant::now();
        let dp = semigroup_pl(&w).k;
        let dp_ms = t.elapsed().as_secs_f64() * 1e3;
        let t = Instant::now();
        let fast = semigroup_pl_fast(&w);
        let fast_ms = t.elapsed().as_secs_f64() * 1e3;
        all_agree &= dp == fast;
        rows.push((trial, dp, fast, dp_ms, fast_ms));
    }
    if cfg.json {
        let v: Vec<_> = rows
            .iter()
            .map(|&(trial, dp, fast, dp_ms, fast_ms)| {
                let mut row = json!({ "trial": trial, "n": n, "pl": dp, "agree": dp == fast });
                if !cfg.no_timing {
                    row["dp_ms"] = json!(dp_ms);
                    row["fast_ms"] = json!(fast_ms);
                }
                row
            })
            .collect();
        println!("{}", serde_json::to_string_pretty(&v).expect("plain data"));
    } else {
        println!("{:>5} {:>8} {:>6} {:>12} {:>12} {:>6}", "trial", "n", "pl", "dp_ms", "fast_ms", "agree");
        for (trial, dp, fast, dp_ms, fast_ms) in rows {
            println!("{trial:>5} {n:>8} {dp:>6} {dp_ms:>12.3} {fast_ms:>12.3} {:>6}", dp == fast);
        }
    }
    if all_agree {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cfg = &cli.config;
    if let Some(jobs) = cfg.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs as usize).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let result = match &cli.command {
        Command::Word { op, word } => cmd_word(*op, word, cfg),
        Command::Pl { mode, word } => cmd_pl(*mode, word, cfg),
        Command::Verify { target } => cmd_verify(target, cfg),
        Command::Experiment { name } => cmd_experiment(*name, cfg),
        Command::Bench { n, trials } => Ok(cmd_bench(*n, *trials, cfg)),
    };
    result.unwrap_or_else(|e| {
        eprintln!("error: {e}");
        ExitCode::from(2)
    })
}
