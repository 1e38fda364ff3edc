//! Command-line surface over the library: deterministic text/JSON output,
//! exit 0 on success, 1 on domain errors, 2 on usage errors.

use clap::{Parser, Subcommand};
use rankvar::bridge::{rank_of, rich, roundtrip_rank_set, RichardsonDatum};
use rankvar::enumerate::{
    adjudicate_bracket_convention, all_rank_sets, g_poly_direct, verify_stirling_identity,
};
use rankvar::error::Error;
use rankvar::io::{paper_notation, parse_permutation, render_report};
use rankvar::oracle::exhaustive_suite;
use rankvar::perm::FlagShape;
use rankvar::rankset::{assign_colors, RankSet};
use rankvar::singular::{
    rank_singular_locus, richardson_singular_locus, segre_decomposition, smooth_tfixed_points,
    tfixed_points,
};
use serde_json::json;
use std::io::Read;

#[derive(Parser)]
#[command(
    name = "rankvar",
    version,
    about = "Rank sets, projection varieties, and Richardson varieties in type-A Grassmannians"
)]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Render rank sets in the compact table notation.
    #[arg(long, global = true)]
    paper_notation: bool,
    /// Worker threads for enumerate and oracle --suite.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a rank set (--m) or a partial permutation (--shape with --p).
    Validate {
        #[arg(long)]
        m: Option<String>,
        #[arg(long)]
        shape: Option<String>,
        #[arg(long)]
        p: Option<String>,
    },
    /// Dimension of a rank variety.
    Dim {
        #[arg(long)]
        m: String,
    },
    /// Chain-depth colors of a rank set.
    Colors {
        #[arg(long)]
        m: String,
    },
    /// Minimal Richardson variety of a rank set.
    Rich {
        #[arg(long)]
        m: String,
    },
    /// Rank set of a Richardson variety.
    Rank {
        #[arg(long)]
        shape: String,
        #[arg(long)]
        u: String,
        #[arg(long)]
        v: String,
    },
    /// rank(rich(M)); must return M itself.
    Roundtrip {
        #[arg(long)]
        m: String,
    },
    /// Singular locus of a rank variety (--m) or Richardson variety
    /// (--shape --u --v).
    Singular {
        #[arg(long)]
        m: Option<String>,
        #[arg(long)]
        shape: Option<String>,
        #[arg(long)]
        u: Option<String>,
        #[arg(long)]
        v: Option<String>,
    },
    /// Smoothness classification of a rank variety.
    Smooth {
        #[arg(long)]
        m: String,
    },
    /// T-fixed points of a rank variety; --smooth restricts to the smooth
    /// locus (all-color-one rank sets only).
    Tfixed {
        #[arg(long)]
        m: String,
        #[arg(long)]
        smooth: bool,
    },
    /// List all rank sets of G(k,n), optionally grouped by dimension.
    Enumerate {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        by_dim: bool,
    },
    /// Generating polynomial g[k,n] of rank sets by dimension.
    Gpoly {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
    },
    /// Verify g[k,n] = S[n+1,n-k+1] q^{-C(n-k+1,2)} for all k <= n <= max-n.
    StirlingCheck {
        #[arg(long, default_value_t = 10)]
        max_n: usize,
    },
    /// Brute-force cross-check suite.
    Oracle {
        #[arg(long)]
        suite: bool,
        #[arg(long, default_value_t = 3)]
        kmax: usize,
        #[arg(long, default_value_t = 7)]
        nmax: usize,
    },
}

fn main() {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global();
    }
    match run(&cli) {
        Ok(output) => {
            print!("{output}");
        }
        Err(err) => {
            eprintln!("error: {err}");
            let code = match err {
                Error::Parse(_) => 2,
                _ => 1,
            };
            std::process::exit(code);
        }
    }
}

/// Values may be inline, `@path` for a file, or `-` for standard input.
fn resolve(value: &str) -> Result<String, Error> {
    if value == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Error::Parse(format!("stdin: {e}")))?;
        Ok(buf)
    } else if let Some(path) = value.strip_prefix('@') {
        std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{path}: {e}")))
    } else {
        Ok(value.to_string())
    }
}

fn parse_rank_set(value: &str) -> Result<RankSet, Error> {
    resolve(value)?.parse()
}

fn parse_richardson(shape: &str, u: &str, v: &str) -> Result<RichardsonDatum, Error> {
    let shape: FlagShape = resolve(shape)?.parse()?;
    let u = parse_permutation(&shape, &resolve(u)?)?;
    let v = parse_permutation(&shape, &resolve(v)?)?;
    RichardsonDatum::new(u, v)
}

fn show_set(set: &RankSet, paper: bool) -> String {
    if paper {
        format!("n={} {}", set.n(), paper_notation(set))
    } else {
        set.to_string()
    }
}

fn run(cli: &Cli) -> Result<String, Error> {
    match &cli.command {
        Command::Validate { m, shape, p } => match (m, shape, p) {
            (Some(m), None, None) => {
                let set = parse_rank_set(m)?;
                if cli.json {
                    Ok(format!("{}\n", json!({"valid": true, "rank_set": set})))
                } else {
                    Ok(format!("valid: {}\n", set))
                }
            }
            (None, Some(shape), Some(p)) => {
                let shape: FlagShape = resolve(shape)?.parse()?;
                let perm = parse_permutation(&shape, &resolve(p)?)?;
                if cli.json {
                    Ok(format!("{}\n", json!({"valid": true, "permutation": perm})))
                } else {
                    Ok(format!("valid: {perm} on {shape}\n"))
                }
            }
            _ => Err(Error::Parse("pass either --m, or --shape with --p".into())),
        },
        Command::Dim { m } => {
            let set = parse_rank_set(m)?;
            let dim = set.dimension();
            if cli.json {
                Ok(format!(
                    "{}\n",
                    json!({"n": set.n(), "k": set.k(), "dim": dim})
                ))
            } else {
                Ok(format!("{dim}\n"))
            }
        }
        Command::Colors { m } => {
            let set = parse_rank_set(m)?;
            let colored = assign_colors(&set);
            if cli.json {
                Ok(format!(
                    "{}\n",
                    json!({
                        "n": set.n(),
                        "intervals": set.intervals().iter().map(|iv| (iv.l, iv.r)).collect::<Vec<_>>(),
                        "colors": colored.colors(),
                        "m": colored.m(),
                    })
                ))
            } else {
                let decorated = set
                    .intervals()
                    .iter()
                    .zip(colored.colors())
                    .map(|(iv, c)| format!("{iv}^{c}"))
                    .collect::<Vec<_>>()
                    .join(" ");
                Ok(format!("m={} : {decorated}\n", colored.m()))
            }
        }
        Command::Rich { m } => {
            let set = parse_rank_set(m)?;
            let datum = rich(&set);
            if cli.json {
                Ok(format!("{}\n", serde_json::to_string(&datum).unwrap()))
            } else {
                Ok(format!(
                    "shape: {}\nu: {}\nv: {}\n",
                    datum.shape(),
                    datum.u(),
                    datum.v()
                ))
            }
        }
        Command::Rank { shape, u, v } => {
            let datum = parse_richardson(shape, u, v)?;
            let set = rank_of(&datum)?;
            if cli.json {
                Ok(format!("{}\n", serde_json::to_string(&set).unwrap()))
            } else {
                Ok(format!("{}\n", show_set(&set, cli.paper_notation)))
            }
        }
        Command::Roundtrip { m } => {
            let set = parse_rank_set(m)?;
            let back = roundtrip_rank_set(&set)?;
            let output = if cli.json {
                format!("{}\n", json!({"rank_set": back, "identity": back == set}))
            } else {
                format!("{}\n", show_set(&back, cli.paper_notation))
            };
            if back != set {
                eprintln!("error: roundtrip failed to recover the input rank set");
                print!("{output}");
                std::process::exit(1);
            }
            Ok(output)
        }
        Command::Singular { m, shape, u, v } => {
            let report = match (m, shape, u, v) {
                (Some(m), None, None, None) => rank_singular_locus(&parse_rank_set(m)?)?,
                (None, Some(shape), Some(u), Some(v)) => {
                    richardson_singular_locus(&parse_richardson(shape, u, v)?)?
                }
                _ => {
                    return Err(Error::Parse(
                        "pass either --m, or --shape with --u and --v".into(),
                    ))
                }
            };
            if cli.json {
                Ok(format!("{}\n", serde_json::to_string(&report).unwrap()))
            } else {
                Ok(render_report(&report, cli.paper_notation))
            }
        }
        Command::Smooth { m } => {
            let set = parse_rank_set(m)?;
            let decomposition = segre_decomposition(&set);
            if cli.json {
                let value = match &decomposition {
                    None => json!({"smooth": false, "decomposition": null}),
                    Some(d) => json!({
                        "smooth": true,
                        "decomposition": {
                            "singletons": d.quotient_singletons.iter().map(|iv| (iv.l, iv.r)).collect::<Vec<_>>(),
                            "blocks": d.blocks.iter().map(|b| json!({
                                "range": (b.range.l, b.range.r),
                                "grassmannian": (b.j, b.m),
                            })).collect::<Vec<_>>(),
                        },
                    }),
                };
                Ok(format!("{value}\n"))
            } else {
                match decomposition {
                    None => Ok("smooth: false (NONE)\n".to_string()),
                    Some(d) => {
                        let blocks = d
                            .blocks
                            .iter()
                            .map(|b| format!("G({},{}) on {}", b.j, b.m, b.range))
                            .collect::<Vec<_>>()
                            .join(" x ");
                        let singles = d
                            .quotient_singletons
                            .iter()
                            .map(|iv| iv.to_string())
                            .collect::<Vec<_>>()
                            .join(" ");
                        let mut out = String::from("smooth: true\n");
                        if !blocks.is_empty() {
                            out.push_str(&format!("blocks: {blocks}\n"));
                        }
                        if !singles.is_empty() {
                            out.push_str(&format!("singletons: {singles}\n"));
                        }
                        Ok(out)
                    }
                }
            }
        }
        Command::Tfixed { m, smooth } => {
            let set = parse_rank_set(m)?;
            let points = if *smooth {
                smooth_tfixed_points(&set)?
            } else {
                tfixed_points(&set)?
            };
            if cli.json {
                Ok(format!("{}\n", json!({"subsets": points})))
            } else {
                let mut out = String::new();
                for p in &points {
                    out.push_str(
                        &p.iter()
                            .map(|i| i.to_string())
                            .collect::<Vec<_>>()
                            .join(" "),
                    );
                    out.push('\n');
                }
                Ok(out)
            }
        }
        Command::Enumerate { k, n, by_dim } => {
            let sets = all_rank_sets(*k, *n)?;
            if cli.json {
                let items: Vec<_> = sets
                    .iter()
                    .map(|s| {
                        json!({
                            "intervals": s.intervals().iter().map(|iv| (iv.l, iv.r)).collect::<Vec<_>>(),
                            "dim": s.dimension(),
                        })
                    })
                    .collect();
                return Ok(format!(
                    "{}\n",
                    json!({"k": k, "n": n, "total": sets.len(), "rank_sets": items})
                ));
            }
            if *by_dim {
                let max_dim = sets.iter().map(|s| s.dimension()).max().unwrap_or(0);
                let mut out = String::new();
                for d in 0..=max_dim {
                    let row: Vec<String> = sets
                        .iter()
                        .filter(|s| s.dimension() == d)
                        .map(|s| {
                            if cli.paper_notation {
                                paper_notation(s)
                            } else {
                                s.intervals()
                                    .iter()
                                    .map(|iv| iv.to_string())
                                    .collect::<Vec<_>>()
                                    .join(" ")
                            }
                        })
                        .collect();
                    out.push_str(&format!("{d}: {}\n", row.join(", ")));
                }
                Ok(out)
            } else {
                let mut out = String::new();
                for s in &sets {
                    out.push_str(&format!("{}\n", show_set(s, cli.paper_notation)));
                }
                Ok(out)
            }
        }
        Command::Gpoly { k, n } => {
            let poly = g_poly_direct(*k, *n)?;
            if cli.json {
                let coeffs: Vec<String> = poly.coeffs().iter().map(|c| c.to_string()).collect();
                Ok(format!(
                    "{}\n",
                    json!({"k": k, "n": n, "coefficients": coeffs})
                ))
            } else {
                Ok(format!("{poly}\n"))
            }
        }
        Command::StirlingCheck { max_n } => {
            let mut failures = Vec::new();
            for n in 1..=*max_n {
                for k in 1..=n {
                    if !verify_stirling_identity(k, n)? {
                        failures.push((k, n));
                    }
                }
            }
            let adjudication = adjudicate_bracket_convention((*max_n).min(6));
            if cli.json {
                let adj: Vec<_> = adjudication
                    .iter()
                    .map(|e| {
                        json!({
                            "convention": e.description,
                            "agrees_with_direct": e.agrees,
                            "first_mismatch": e.first_mismatch,
                        })
                    })
                    .collect();
                let value = json!({
                    "max_n": max_n,
                    "all_pass": failures.is_empty(),
                    "failures": failures,
                    "bracket_adjudication": adj,
                });
                if failures.is_empty() {
                    Ok(format!("{value}\n"))
                } else {
                    eprintln!("error: q-Stirling identity failed at {failures:?}");
                    print!("{value}\n");
                    std::process::exit(1);
                }
            } else {
                let mut out = String::new();
                out.push_str("bracket adjudication (recurrence vs direct count, n <= 6):\n");
                for e in &adjudication {
                    out.push_str(&format!(
                        "  {}: {}\n",
                        e.description,
                        if e.agrees { "agrees" } else { "disagrees" }
                    ));
                }
                for n in 1..=*max_n {
                    let row: Vec<String> = (1..=n)
                        .map(|k| {
                            if failures.contains(&(k, n)) {
                                "FAIL".to_string()
                            } else {
                                "ok".to_string()
                            }
                        })
                        .collect();
                    out.push_str(&format!("n={n:>2}: {}\n", row.join(" ")));
                }
                if failures.is_empty() {
                    out.push_str(&format!("all identities hold for 1 <= k <= n <= {max_n}\n"));
                    Ok(out)
                } else {
                    eprintln!("error: q-Stirling identity failed at {failures:?}");
                    print!("{out}");
                    std::process::exit(1);
                }
            }
        }
        Command::Oracle { suite, kmax, nmax } => {
            if !*suite {
                return Err(Error::Parse("the oracle command requires --suite".into()));
            }
            let report = exhaustive_suite(*kmax, *nmax)?;
            if cli.json {
                Ok(format!("{}\n", serde_json::to_string(&report).unwrap()))
            } else {
                let mut out = String::new();
                for c in &report.checks {
                    out.push_str(&format!(
                        "{} [{}] {} ({} cases)\n",
                        if c.pass { "PASS" } else { "FAIL" },
                        c.name,
                        c.scope,
                        c.checked
                    ));
                    if let Some(ce) = &c.counterexample {
                        out.push_str(&format!("  counterexample: {ce}\n"));
                    }
                }
                if report.pass {
                    out.push_str("suite: all checks passed\n");
                    Ok(out)
                } else {
                    eprintln!("error: oracle suite found counterexamples");
                    print!("{out}");
                    std::process::exit(1);
                }
            }
        }
    }
}
