//! Command-line front end: constructions, verifications, and the full
//! check battery.

use std::collections::BTreeMap;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use sporadica::catalog::{self, Family};
use sporadica::codes::{self, golay};
use sporadica::gfq::make_field;
use sporadica::leech;
use sporadica::mathieu;
use sporadica::moonshine;
use sporadica::permgrp::{
    format_gen_file, parse_gen_file, transitivity_degree, GroupBsgs, Permutation,
};
use sporadica::report::{self, Config, Status};
use sporadica::reps;

#[derive(Parser)]
#[command(name = "sporadica", about = "exact computations around the sporadic groups")]
struct Cli {
    /// Emit JSON instead of human-readable text
    #[arg(long, global = true)]
    json: bool,
    /// Node budget for backtrack searches (env: SPORADICA_BUDGET)
    #[arg(long, global = true)]
    budget: Option<u64>,
    /// Seed for randomized subroutines (accepted for interface
    /// stability; every command is deterministic)
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a finite field and print its parameters
    Field { p: u64, f: u32 },
    /// Group-order computations
    Group {
        #[command(subcommand)]
        sub: GroupCmd,
    },
    /// Permutation groups from generator files
    Perm {
        #[command(subcommand)]
        sub: PermCmd,
    },
    /// Mathieu group constructions
    Mathieu {
        #[command(subcommand)]
        sub: MathieuCmd,
    },
    /// Error-correcting codes
    Codes {
        #[command(subcommand)]
        sub: CodesCmd,
    },
    /// Leech lattice computations
    Leech {
        #[command(subcommand)]
        sub: LeechCmd,
    },
    /// The sporadic-group catalog
    Catalog {
        #[command(subcommand)]
        sub: CatalogCmd,
    },
    /// Character tables
    Reps {
        #[command(subcommand)]
        sub: RepsCmd,
    },
    /// j-function and related computations
    Moonshine {
        #[command(subcommand)]
        sub: MoonshineCmd,
    },
    /// Run the full check battery
    RunAll {
        /// key=value config file (keys: budget, seed, terms)
        #[arg(long)]
        config: Option<String>,
    },
}

#[derive(Subcommand)]
enum GroupCmd {
    /// Formula order of a classical family member
    Order {
        family: String,
        n: usize,
        q: u64,
    },
}

#[derive(Subcommand)]
enum PermCmd {
    /// Order of the group generated by a generator file
    Order { file: String },
    /// Transitivity analysis of the natural action
    Transitivity { file: String },
}

#[derive(Subcommand)]
enum MathieuCmd {
    /// Construct M24, M12, or both stabilizer chains
    Build {
        #[arg(value_parser = ["m24", "m12", "chains"])]
        which: String,
        /// Write generators to a file
        #[arg(long)]
        export: Option<String>,
    },
}

#[derive(Subcommand)]
enum CodesCmd {
    /// Construct the binary Golay lexicode
    Golay,
}

#[derive(Subcommand)]
enum LeechCmd {
    /// Count the minimal vectors by shape
    Census,
}

#[derive(Subcommand)]
enum CatalogCmd {
    /// Print all 26 sporadic entries
    Dump {
        #[arg(long, value_parser = ["text", "json"], default_value = "text")]
        format: String,
    },
}

#[derive(Subcommand)]
enum RepsCmd {
    /// Character table of the group in a generator file
    Table { file: String },
}

#[derive(Args)]
struct TermsArg {
    /// Truncation order
    #[arg(long, default_value_t = 20)]
    terms: i64,
}

#[derive(Subcommand)]
enum MoonshineCmd {
    /// Print j-function coefficients
    J {
        #[command(flatten)]
        terms: TermsArg,
    },
    /// Verify the first-coefficient decompositions
    Check,
    /// Evaluate exp(pi sqrt 163)
    Ramanujan {
        #[arg(long, default_value_t = 32)]
        digits: usize,
    },
}

fn budget_from(cli: &Cli) -> u64 {
    cli.budget
        .or_else(|| {
            std::env::var("SPORADICA_BUDGET")
                .ok()
                .and_then(|v| v.parse().ok())
        })
        .unwrap_or(mathieu::DEFAULT_BUDGET)
}

fn load_group(file: &str) -> Result<GroupBsgs, String> {
    let text = std::fs::read_to_string(file).map_err(|e| format!("{file}: {e}"))?;
    let (degree, gens): (usize, Vec<Permutation>) =
        parse_gen_file(&text).map_err(|e| e.to_string())?;
    GroupBsgs::new_with_degree(&gens, degree).map_err(|e| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(&cli) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
    }
}

fn dispatch(cli: &Cli) -> Result<ExitCode, String> {
    match &cli.command {
        Command::Field { p, f } => {
            let field = make_field(*p, *f).map_err(|e| e.to_string())?;
            if cli.json {
                println!(
                    "{}",
                    json!({
                        "p": field.p(),
                        "f": field.f(),
                        "q": field.q(),
                        "descriptor": field.descriptor(),
                        "modulus": field.modulus_polynomial(),
                    })
                );
            } else {
                println!(
                    "{}: modulus {:?}, generator g with g^{} = 1",
                    field.descriptor(),
                    field.modulus_polynomial(),
                    field.q() - 1
                );
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Group { sub } => {
            let GroupCmd::Order { family, n, q } = sub;
            let family: Family = family.parse().map_err(|e: catalog::CatalogError| e.to_string())?;
            let order = catalog::family_order(family, *n, *q).map_err(|e| e.to_string())?;
            if cli.json {
                println!(
                    "{}",
                    json!({"order": order.value.to_string(), "factorization": order.factorization_string()})
                );
            } else {
                println!("{}", order.value);
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Perm { sub } => {
            match sub {
                PermCmd::Order { file } => {
                    let g = load_group(file)?;
                    if cli.json {
                        println!(
                            "{}",
                            json!({"degree": g.degree(), "order": g.order_u128().to_string()})
                        );
                    } else {
                        println!("{}", g.order_u128());
                    }
                }
                PermCmd::Transitivity { file } => {
                    let g = load_group(file)?;
                    let r = transitivity_degree(&g).map_err(|e| e.to_string())?;
                    if cli.json {
                        println!(
                            "{}",
                            json!({
                                "orbit_count": r.orbit_count,
                                "transitivity_degree": r.transitivity_degree,
                                "sharp": r.sharp,
                                "order": g.order_u128().to_string(),
                            })
                        );
                    } else {
                        println!(
                            "k={}{}, order {}",
                            r.transitivity_degree,
                            if r.sharp { " sharp" } else { "" },
                            g.order_u128()
                        );
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Mathieu { sub } => {
            let MathieuCmd::Build { which, export } = sub;
            let budget = budget_from(cli);
            let m24 = mathieu::m24_build(budget).map_err(|e| e.to_string())?;
            let built: Vec<(String, GroupBsgs)> = match which.as_str() {
                "m24" => vec![("M24".to_string(), m24)],
                "m12" => {
                    let m12 = mathieu::m12_build(&m24).map_err(|e| e.to_string())?;
                    vec![("M12".to_string(), m12)]
                }
                "chains" => {
                    let mut all = Vec::new();
                    let chain = mathieu::chain_m24(&m24).map_err(|e| e.to_string())?;
                    for link in chain.links {
                        all.push((link.name.to_string(), link.group));
                    }
                    let m12 = mathieu::m12_build(&m24).map_err(|e| e.to_string())?;
                    let chain = mathieu::chain_m12(&m12).map_err(|e| e.to_string())?;
                    for link in chain.links {
                        all.push((link.name.to_string(), link.group));
                    }
                    all
                }
                _ => unreachable!("clap validates"),
            };
            if let Some(path) = export {
                for (name, g) in &built {
                    let target = if built.len() == 1 {
                        path.clone()
                    } else {
                        format!("{path}.{name}")
                    };
                    let mut text = format!("# {name}, order {}\n", g.order_u128());
                    text.push_str(&format_gen_file(g.degree(), g.generators()));
                    std::fs::write(&target, text).map_err(|e| format!("{target}: {e}"))?;
                }
            }
            if cli.json {
                let rows: Vec<_> = built
                    .iter()
                    .map(|(name, g)| {
                        json!({"name": name, "degree": g.degree(), "order": g.order_u128().to_string()})
                    })
                    .collect();
                println!("{}", json!(rows));
            } else {
                for (name, g) in &built {
                    println!("{name}: degree {}, order {}", g.degree(), g.order_u128());
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Codes { sub: CodesCmd::Golay } => {
            let c = golay();
            if cli.json {
                println!(
                    "{}",
                    json!({
                        "length": 24,
                        "dimension": c.basis().len(),
                        "min_distance": c.min_distance(),
                        "weights": c.weight_distribution(),
                        "basis": c.basis().iter().map(|&w| codes::format_word(w)).collect::<Vec<_>>(),
                    })
                );
            } else {
                println!(
                    "[24, {}, {}] lexicode; weights {:?}",
                    c.basis().len(),
                    c.min_distance(),
                    c.weight_distribution()
                );
                print!("{}", codes::format_basis(c));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Leech { sub: LeechCmd::Census } => {
            let census = leech::minimal_vector_census();
            if cli.json {
                println!(
                    "{}",
                    json!({
                        "octad_type": census.octad_type,
                        "pair_type": census.pair_type,
                        "odd_type": census.odd_type,
                        "total": census.total,
                        "norm16": leech::norm16_vector_count(),
                    })
                );
            } else {
                println!(
                    "minimal vectors: {} + {} + {} = {}; norm-16 vectors: {}",
                    census.octad_type,
                    census.pair_type,
                    census.odd_type,
                    census.total,
                    leech::norm16_vector_count()
                );
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Catalog { sub: CatalogCmd::Dump { format } } => {
            let table = catalog::sporadic_table();
            if cli.json || format == "json" {
                println!("{}", serde_json::to_string_pretty(&table).unwrap());
            } else {
                for e in &table {
                    println!("{:<6} {:?}: {}", e.name, e.level, e.order_display());
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Reps { sub: RepsCmd::Table { file } } => {
            let g = load_group(file)?;
            let t = reps::dixon_table(&g).map_err(|e| e.to_string())?;
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&t).unwrap());
            } else {
                println!("group order {}, {} classes", t.group_order, t.class_count());
                print!("{}", t.render());
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Moonshine { sub } => {
            match sub {
                MoonshineCmd::J { terms } => {
                    let j = moonshine::j_expansion(terms.terms).map_err(|e| e.to_string())?;
                    if cli.json {
                        let coeffs: BTreeMap<i64, String> = (-1..=terms.terms)
                            .map(|n| (n, j.coeff(n).to_string()))
                            .collect();
                        println!("{}", json!(coeffs));
                    } else {
                        for n in -1..=terms.terms {
                            println!("q^{n}: {}", j.coeff(n));
                        }
                    }
                }
                MoonshineCmd::Check => {
                    let mut all_ok = true;
                    for coeff in [196_884u64, 21_493_760] {
                        match moonshine::moonshine_decompose(coeff) {
                            Ok(m) => {
                                let parts: Vec<String> =
                                    m.iter().map(|(d, k)| format!("{k}*{d}")).collect();
                                println!("pass: {coeff} = {}", parts.join(" + "));
                            }
                            Err(e) => {
                                all_ok = false;
                                println!("fail: {coeff}: {e}");
                            }
                        }
                    }
                    if !all_ok {
                        return Ok(ExitCode::from(1));
                    }
                }
                MoonshineCmd::Ramanujan { digits } => {
                    let v = moonshine::ramanujan_constant(*digits).map_err(|e| e.to_string())?;
                    if cli.json {
                        println!("{}", json!({"digits": digits, "value": v}));
                    } else {
                        println!("{v}");
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::RunAll { config } => {
            let mut cfg = match config {
                Some(path) => {
                    let text =
                        std::fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))?;
                    report::parse_config(&text).map_err(|e| e.to_string())?
                }
                None => Config::default(),
            };
            if let Some(b) = cli.budget {
                cfg.budget = b;
            } else if let Ok(v) = std::env::var("SPORADICA_BUDGET") {
                cfg.budget = v.parse().map_err(|_| "bad SPORADICA_BUDGET".to_string())?;
            }
            if let Some(seed) = cli.seed {
                cfg.seed = seed;
            }
            let results = report::run_all(&cfg);
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&results).unwrap());
            } else {
                print!("{}", report::render(&results));
            }
            let failed = results.iter().any(|r| r.status == Status::Fail);
            Ok(if failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            })
        }
    }
}
