use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use priordan_core::balanced::{
    count_closed_walks_formula, count_closed_walks_matrix, eta, eta_inv, BalancedWord,
};
use priordan_core::perm::{phi, phi_inv, Permutation};
use priordan_core::verify::{first_failure, run_all};
use priordan_core::word::{xi, xi_inv, PRiordanWord};
use priordan_core::{
    adjacency, canonicalize, classify, count_graphs, enumerate_graphs, parse_poly, CanonicalPair,
    Error, GraphClass, Modulus,
};
use serde_json::json;

#[derive(Parser)]
#[command(
    name = "priordan",
    version,
    about = "p-Riordan graphs and their encodings"
)]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the adjacency matrix of G_n(g, f) mod p.
    Build(PairArgs),
    /// Encode a graph as a word, permutation or balanced word.
    Encode {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long, value_enum)]
        to: Encoding,
    },
    /// Recover the canonical pair from an encoding.
    Decode {
        /// Modulus; implied by --from perm (2) and --from balanced (3).
        #[arg(long)]
        p: Option<u64>,
        #[arg(long, value_enum)]
        from: Encoding,
        #[arg(long)]
        input: String,
    },
    /// List every graph of order n, or count them.
    Enumerate {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = parse_class)]
        class: Option<GraphClass>,
        #[arg(long)]
        count_only: bool,
    },
    /// Print the classes a graph belongs to.
    Classify(PairArgs),
    /// Run the exhaustive checks up to the given size.
    Verify {
        #[arg(long, default_value_t = 10)]
        max_n: usize,
    },
    /// Count closed walks at the origin of the dim-cube.
    Walks {
        #[arg(long)]
        dim: usize,
        #[arg(long)]
        length: usize,
    },
}

#[derive(Args)]
struct PairArgs {
    #[arg(long)]
    p: u64,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    g: String,
    #[arg(long)]
    f: String,
}

#[derive(Clone, Copy, ValueEnum)]
enum Encoding {
    Word,
    Perm,
    Balanced,
}

fn parse_class(name: &str) -> Result<GraphClass, String> {
    GraphClass::from_cli_name(name)
        .ok_or_else(|| format!("expected one of {}", GraphClass::all().names().join(", ")))
}

enum Failure {
    Input(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_internal() {
            Failure::Internal(e.to_string())
        } else {
            Failure::Input(e.to_string())
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Internal(e.to_string())
    }
}

fn modulus(p: u64) -> Result<Modulus, Failure> {
    let p = u32::try_from(p).map_err(|_| Error::InvalidModulus(p))?;
    Ok(Modulus::new(p)?)
}

impl PairArgs {
    fn canonical(&self) -> Result<CanonicalPair, Failure> {
        let m = modulus(self.p)?;
        let g = parse_poly(&self.g, m)?;
        let f = parse_poly(&self.f, m)?;
        Ok(canonicalize(&g, &f, self.n)?)
    }
}

fn pair_json(pair: &CanonicalPair) -> String {
    serde_json::to_string(pair).expect("pair serializes")
}

fn run(cli: Cli) -> Result<(), Failure> {
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    match cli.command {
        Command::Build(args) => {
            let matrix = adjacency(&args.canonical()?);
            if cli.json {
                writeln!(
                    out,
                    "{}",
                    serde_json::to_string(&matrix).expect("matrix serializes")
                )?;
            } else {
                write!(out, "{matrix}")?;
            }
        }
        Command::Encode { pair, to } => {
            let pair = pair.canonical()?;
            let encoded = match to {
                Encoding::Word => xi(&pair)?.to_string(),
                Encoding::Perm => phi(&pair)?.to_string(),
                Encoding::Balanced => eta(&pair)?.to_string(),
            };
            if cli.json {
                let to = ["word", "perm", "balanced"][to as usize];
                let value = json!({"pair": pair, "to": to, "encoding": encoded});
                writeln!(out, "{value}")?;
            } else {
                writeln!(out, "{encoded}")?;
            }
        }
        Command::Decode { p, from, input } => {
            let implied = match from {
                Encoding::Word => None,
                Encoding::Perm => Some(2),
                Encoding::Balanced => Some(3),
            };
            let p = match (p, implied) {
                (Some(p), Some(q)) if p != q => {
                    return Err(Failure::Input(format!(
                        "--p {p} conflicts with --from (needs p = {q})"
                    )))
                }
                (Some(p), _) | (None, Some(p)) => p,
                (None, None) => return Err(Failure::Input("--from word needs --p".into())),
            };
            let m = modulus(p)?;
            let pair = match from {
                Encoding::Word => xi_inv(&PRiordanWord::parse(&input, m)?)?,
                Encoding::Perm => {
                    let perm: Permutation = input.parse()?;
                    phi_inv(&perm)?
                }
                Encoding::Balanced => eta_inv(&BalancedWord::parse(&input)?)?,
            };
            writeln!(out, "{}", pair_json(&pair))?;
        }
        Command::Enumerate {
            p,
            n,
            class,
            count_only,
        } => {
            let m = modulus(p)?;
            let graphs = enumerate_graphs(n, m)?;
            if count_only {
                let count = match class {
                    None => count_graphs(n, m)?,
                    Some(c) => graphs.filter(|g| classify(g).contains(c)).count().into(),
                };
                if cli.json {
                    writeln!(out, "{}", json!({"count": count.to_string()}))?;
                } else {
                    writeln!(out, "{count}")?;
                }
            } else {
                for pair in graphs.filter(|g| class.is_none_or(|c| classify(g).contains(c))) {
                    if cli.json {
                        writeln!(out, "{}", pair_json(&pair))?;
                    } else {
                        writeln!(out, "{pair}")?;
                    }
                }
            }
        }
        Command::Classify(args) => {
            let classes = classify(&args.canonical()?);
            if cli.json {
                writeln!(out, "{}", json!({"classes": classes.names()}))?;
            } else if classes.is_empty() {
                writeln!(out, "none")?;
            } else {
                writeln!(out, "{classes}")?;
            }
        }
        Command::Verify { max_n } => {
            let reports = run_all(max_n);
            if cli.json {
                writeln!(
                    out,
                    "{}",
                    serde_json::to_string(&reports).expect("reports serialize")
                )?;
            } else {
                for r in &reports {
                    let status = if r.passed { "PASS" } else { "FAIL" };
                    writeln!(out, "{status} {}: {}", r.name, r.detail)?;
                }
            }
            out.flush()?;
            if let Some(r) = first_failure(&reports) {
                let ce = r.counterexample.clone().unwrap_or_default();
                return Err(Failure::Internal(format!(
                    "{} failed; counterexample {ce}",
                    r.name
                )));
            }
        }
        Command::Walks { dim, length } => {
            let matrix = count_closed_walks_matrix(dim, length)?;
            let formula = count_closed_walks_formula(dim, length)?;
            if cli.json {
                let value = json!({
                    "dim": dim,
                    "length": length,
                    "matrix": matrix.to_string(),
                    "formula": formula.to_string(),
                });
                writeln!(out, "{value}")?;
            } else {
                writeln!(out, "matrix {matrix}\nformula {formula}")?;
            }
            out.flush()?;
            if matrix != formula {
                return Err(Failure::Internal(format!(
                    "matrix {matrix} != formula {formula}"
                )));
            }
        }
    }
    out.flush()?;
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("internal error: {msg}");
            ExitCode::from(2)
        }
    }
}
