use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use tqft_cli::corpus;
use tqft_cli::formats::{
    self, canonical_string, marked_to_value, parse_group_arg, CliError,
};
use tqft_cli::verify;

use tqft_core::gluing::{check_conditions, glue};
use tqft_core::homology::{betti, euler_relative};
use tqft_core::quinn::{z_value, EulerTheoryParams};
use tqft_core::rational::parse_rational;
use tqft_core::statesum::{
    apply_random_moves, naive_partition_function, partition_function, Move,
};
use tqft_core::vect::{cap, circle_invariant, cup, snake_identity_holds};

/// Exact computations for finite-complex field theories: Euler
/// characteristics, homology ranks, gluing morphisms, Euler-characteristic
/// theories, finite-group state sums, and the dimension-zero vector theory.
#[derive(Parser)]
#[command(name = "tqft", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Combinatorial Euler characteristic of a complex file.
    Euler { file: PathBuf },
    /// Betti numbers (absolute or relative to boundary components).
    Homology {
        file: PathBuf,
        /// Comma-separated boundary component names for relative homology.
        #[arg(long)]
        rel: Option<String>,
    },
    /// Perform the gluing described by a complex-plus-phi file.
    Glue {
        file: PathBuf,
        /// Write the glued complex here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Euler-characteristic theory values and functoriality checks.
    Quinn(QuinnArgs),
    /// Finite-group state sums on closed surfaces.
    #[command(subcommand)]
    Statesum(StatesumCommand),
    /// The dimension-zero vector-space theory.
    #[command(subcommand)]
    Vect(VectCommand),
    /// Run the full verification suite over the bundled or a given corpus.
    CorpusVerify {
        /// Corpus directory (defaults to the bundled corpus).
        #[arg(long)]
        corpus: Option<PathBuf>,
        /// Seed for all randomized checks.
        #[arg(long, default_value_t = verify::DEFAULT_SEED)]
        seed: u64,
        /// Emit a machine-readable JSON report.
        #[arg(long)]
        json: bool,
    },
    /// Write the bundled corpus to a directory (canonical JSON).
    GenCorpus { dir: PathBuf },
}

#[derive(Args)]
struct QuinnArgs {
    /// Theory constant c1 as an exact rational, e.g. "1" or "-1/2".
    #[arg(long, allow_hyphen_values = true)]
    c1: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    c2: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    c3: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    c4: Option<String>,
    /// Preset theory: euler, skew, or balanced.
    #[arg(long, conflicts_with_all = ["c1", "c2", "c3", "c4"])]
    preset: Option<String>,
    #[command(subcommand)]
    command: QuinnCommand,
}

#[derive(Subcommand)]
enum QuinnCommand {
    /// Evaluate Z_M on a complex file.
    Eval { file: PathBuf },
    /// Check the functor equation on every gluing file in a directory.
    CheckFunctor { dir: PathBuf },
    /// Report whether c1 + c2 + c3 + c4 = 0.
    Constraint,
}

#[derive(Subcommand)]
enum StatesumCommand {
    /// Exact partition function of a surface.
    Z {
        file: PathBuf,
        /// Group: cyclic:N, s3, or a group JSON file.
        #[arg(long)]
        group: String,
        /// Cross-check against brute-force enumeration.
        #[arg(long)]
        naive: bool,
    },
    /// Apply random Pachner moves and assert Z stays constant.
    PachnerCheck {
        file: PathBuf,
        #[arg(long)]
        group: String,
        #[arg(long, default_value_t = 20)]
        moves: usize,
        #[arg(long, default_value_t = verify::DEFAULT_SEED)]
        seed: u64,
    },
}

#[derive(Subcommand)]
enum VectCommand {
    /// The circle invariant at a given dimension.
    Circle {
        #[arg(long)]
        dim: usize,
    },
    /// Verify the snake identity at a given dimension.
    Snake {
        #[arg(long)]
        dim: usize,
    },
}

fn quinn_params(args: &QuinnArgs) -> Result<EulerTheoryParams, CliError> {
    if let Some(p) = &args.preset {
        return corpus::preset_by_name(p)
            .ok_or_else(|| CliError::input(format!("unknown preset `{p}`")));
    }
    let parse = |name: &str, v: &Option<String>| -> Result<_, CliError> {
        let s = v
            .as_deref()
            .ok_or_else(|| CliError::input(format!("--{name} is required without --preset")))?;
        parse_rational(s).map_err(|e| CliError::input(format!("--{name}: {e}")))
    };
    Ok(EulerTheoryParams::new(
        parse("c1", &args.c1)?,
        parse("c2", &args.c2)?,
        parse("c3", &args.c3)?,
        parse("c4", &args.c4)?,
    ))
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Euler { file } => {
            let m = formats::load_marked(&file)?;
            println!("chi = {}", m.complex.euler_characteristic());
            Ok(())
        }
        Command::Homology { file, rel } => {
            let m = formats::load_marked(&file)?;
            match rel {
                None => {
                    let b = betti(&m.complex, None)
                        .map_err(|e| CliError::input(e.to_string()))?;
                    println!("betti = {b}");
                    println!("chi = {}", b.euler_characteristic());
                }
                Some(names) => {
                    let names: Vec<String> =
                        names.split(',').map(|s| s.trim().to_string()).collect();
                    let chi = euler_relative(&m, &names)
                        .map_err(|e| CliError::input(e.to_string()))?;
                    let sub = m
                        .named_union(&names)
                        .map_err(|n| CliError::input(format!("unknown component `{n}`")))?;
                    let b = betti(&m.complex, Some(&sub))
                        .map_err(|e| CliError::input(e.to_string()))?;
                    println!("betti = {b}");
                    println!("chi = {chi}");
                }
            }
            Ok(())
        }
        Command::Glue { file, out } => {
            let spec = formats::load_gluing(&file)?;
            let g = glue(&spec).map_err(|e| CliError::input(e.to_string()))?;
            check_conditions(&g.map, &g.spec)
                .map_err(|f| CliError::violation(f.to_string()))?;
            eprintln!(
                "glued: chi {} -> {}; conditions 1-5 hold",
                g.source().euler_characteristic(),
                g.target.complex.euler_characteristic()
            );
            let rendered = canonical_string(&marked_to_value(&g.target));
            match out {
                Some(path) => std::fs::write(&path, rendered)
                    .map_err(|e| CliError::input(format!("cannot write {}: {e}", path.display())))?,
                None => print!("{rendered}"),
            }
            Ok(())
        }
        Command::Quinn(args) => {
            let p = quinn_params(&args)?;
            match &args.command {
                QuinnCommand::Eval { file } => {
                    let m = formats::load_marked(file)?;
                    println!("Z = {}", z_value(&m, &p));
                    Ok(())
                }
                QuinnCommand::Constraint => {
                    println!(
                        "c1+c2+c3+c4 = 0: {}",
                        if p.check_constraint() { "true" } else { "false" }
                    );
                    Ok(())
                }
                QuinnCommand::CheckFunctor { dir } => {
                    let mut paths: Vec<PathBuf> = std::fs::read_dir(dir)
                        .map_err(|e| CliError::input(format!("cannot read {}: {e}", dir.display())))?
                        .filter_map(|entry| entry.ok().map(|e| e.path()))
                        .filter(|p| p.extension().is_some_and(|x| x == "json"))
                        .collect();
                    paths.sort();
                    let mut morphisms = Vec::new();
                    for path in &paths {
                        let spec = formats::load_gluing(path)?;
                        match glue(&spec) {
                            Ok(g) => morphisms.push(g),
                            Err(e) => eprintln!("skipping {}: {e}", path.display()),
                        }
                    }
                    if morphisms.is_empty() {
                        return Err(CliError::input("no usable gluing files in directory"));
                    }
                    let report = verify::functor_report(&morphisms, &p)?;
                    println!("{report}");
                    Ok(())
                }
            }
        }
        Command::Statesum(cmd) => match cmd {
            StatesumCommand::Z { file, group, naive } => {
                let s = formats::load_surface(&file)?;
                let g = parse_group_arg(&group)?;
                let z = partition_function(&s, &g);
                println!("Z = {z}");
                if naive {
                    let nz = naive_partition_function(&s, &g);
                    if nz != z {
                        return Err(CliError::violation(format!(
                            "backtracking Z = {z} but naive enumeration gives {nz}"
                        )));
                    }
                    eprintln!("naive enumeration agrees");
                }
                Ok(())
            }
            StatesumCommand::PachnerCheck { file, group, moves, seed } => {
                let s = formats::load_surface(&file)?;
                let g = parse_group_arg(&group)?;
                let reference = partition_function(&s, &g);
                let sequence = apply_random_moves(&s, moves, seed);
                for (i, (mv, surface)) in sequence.iter().enumerate() {
                    let z = partition_function(surface, &g);
                    let desc = match mv {
                        Move::Subdivide(t) => format!("1-3 on triangle {t}"),
                        Move::Flip(e) => format!("2-2 on edge {e}"),
                    };
                    if z != reference {
                        return Err(CliError::violation(format!(
                            "Z changed after move {} ({desc}): {z} vs {reference}",
                            i + 1
                        )));
                    }
                    println!(
                        "move {:>2} ({desc}): V={} E={} F={} Z = {z}",
                        i + 1,
                        surface.vertex_count,
                        surface.edges.len(),
                        surface.triangles.len()
                    );
                }
                println!("Z = {reference} is invariant across {moves} moves");
                Ok(())
            }
        },
        Command::Vect(cmd) => match cmd {
            VectCommand::Circle { dim } => {
                if dim == 0 {
                    return Err(CliError::input("--dim must be at least 1"));
                }
                println!("Z_S1 = {}", circle_invariant(dim));
                Ok(())
            }
            VectCommand::Snake { dim } => {
                if dim == 0 {
                    return Err(CliError::input("--dim must be at least 1"));
                }
                if snake_identity_holds(dim) {
                    println!("snake identity: pass (dim {dim})");
                    Ok(())
                } else {
                    // Print the offending matrices to aid debugging.
                    eprintln!("cup = {:?}", cup(dim));
                    eprintln!("cap = {:?}", cap(dim));
                    Err(CliError::violation(format!("snake identity fails at dim {dim}")))
                }
            }
        },
        Command::CorpusVerify { corpus: dir, seed, json } => {
            let corpus = match dir {
                Some(d) => corpus::load_from_dir(&d)?,
                None => corpus::bundled(),
            };
            verify::run_and_print(&corpus, seed, json)
        }
        Command::GenCorpus { dir } => {
            let corpus = corpus::bundled();
            corpus::write_to_dir(&corpus, &dir)
                .map_err(|e| CliError::input(format!("cannot write corpus: {e}")))?;
            eprintln!("corpus written to {}", dir.display());
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
