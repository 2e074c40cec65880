use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use schurcalc::audit::{self, AuditBounds};
use schurcalc::normal_bundle::{wedge2_middle, wedge_nprime};
use schurcalc::*;

#[derive(Parser)]
#[command(name = "schurcalc", version, about = "Schur functor and Borel-Weil-Bott calculator")]
struct Cli {
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Arithmetic in the representation ring of GL_r
    Schur {
        #[command(subcommand)]
        op: SchurOp,
    },
    /// Cohomology of Σ^γ K ⊗ Σ^δ Q^∨ on G(k, d)
    Bwb {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        k: usize,
        /// δ, a weight of rank k
        #[arg(long, allow_hyphen_values = true)]
        q_weight: Weight,
        /// γ, a weight of rank d - k (default trivial)
        #[arg(long, allow_hyphen_values = true)]
        k_weight: Option<Weight>,
    },
    /// Exterior powers of the normal bundle model
    Wedge {
        /// Λ^q N′ for q in 0..=4
        #[arg(long, conflicts_with = "middle", required_unless_present = "middle")]
        q: Option<usize>,
        /// Λ²(S²Q^∨ ⊗ Q)
        #[arg(long)]
        middle: bool,
    },
    /// Exceptionality of Σ^α Q^∨ on G(2, d)
    CheckExc {
        #[arg(long)]
        d: usize,
        #[arg(long, allow_hyphen_values = true)]
        alpha: Weight,
    },
    /// Full faithfulness of the Fourier-Mukai functor labelled by α
    CheckFf {
        #[arg(long)]
        d: usize,
        #[arg(long, allow_hyphen_values = true)]
        alpha: Weight,
    },
    /// Semi-orthogonality of the images labelled by α ≺ β
    CheckSo {
        #[arg(long)]
        d: usize,
        #[arg(long, allow_hyphen_values = true)]
        alpha: Weight,
        #[arg(long, allow_hyphen_values = true)]
        beta: Weight,
    },
    /// End(Ω) on G(k, d)
    CheckCotangent {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        k: usize,
    },
    /// List labels of fully faithful functors, or of the semi-orthogonal sequence
    Enumerate {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        sos: bool,
    },
    /// Number of pieces in the induced decomposition
    Kummer {
        #[arg(long)]
        d: usize,
    },
    /// Run every built-in check
    #[command(alias = "verify-paper")]
    Audit {
        #[arg(long, default_value_t = 12)]
        d_max: usize,
    },
}

#[derive(Args)]
struct RankArg {
    /// Rank r of GL_r; shorter weights are padded with zeros
    #[arg(long)]
    rank: Option<usize>,
}

#[derive(Subcommand)]
enum SchurOp {
    Tensor {
        #[command(flatten)]
        rank: RankArg,
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    Dual {
        #[command(flatten)]
        rank: RankArg,
        #[arg(allow_hyphen_values = true)]
        a: String,
    },
    Twist {
        #[command(flatten)]
        rank: RankArg,
        #[arg(long, allow_hyphen_values = true)]
        m: i64,
        #[arg(allow_hyphen_values = true)]
        a: String,
    },
    Sym {
        #[command(flatten)]
        rank: RankArg,
        #[arg(long)]
        m: usize,
        #[arg(allow_hyphen_values = true)]
        a: String,
    },
    Ext {
        #[command(flatten)]
        rank: RankArg,
        #[arg(long)]
        m: usize,
        #[arg(allow_hyphen_values = true)]
        a: String,
    },
    Dim {
        #[command(flatten)]
        rank: RankArg,
        #[arg(allow_hyphen_values = true)]
        a: String,
    },
    Char {
        #[command(flatten)]
        rank: RankArg,
        #[arg(allow_hyphen_values = true)]
        a: String,
    },
}

enum Failure {
    Usage(String),
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = std::result::Result<(), Failure>;

struct Out {
    format: Format,
}

impl Out {
    fn emit(&self, text: impl std::fmt::Display, value: impl FnOnce() -> Value) {
        match self.format {
            Format::Text => println!("{text}"),
            Format::Json => println!("{}", value()),
        }
    }
}

fn weight(s: &str, rank: &RankArg) -> Result<Weight> {
    let w: Weight = s.parse()?;
    match rank.rank {
        None => Ok(w),
        Some(r) => w.padded(r).ok_or(Error::RankMismatch {
            left: w.rank(),
            right: r,
        }),
    }
}

fn element(s: &str, rank: &RankArg) -> Result<RepElement> {
    weight(s, rank).map(RepElement::irreducible)
}

fn schur(op: SchurOp, out: &Out) -> Outcome {
    let rep = |e: RepElement| {
        out.emit(&e, || json!(e));
    };
    match op {
        SchurOp::Tensor { rank, a, b } => rep(element(&a, &rank)?.tensor(&element(&b, &rank)?)?),
        SchurOp::Dual { rank, a } => rep(element(&a, &rank)?.dual()),
        SchurOp::Twist { rank, m, a } => rep(element(&a, &rank)?.det_twist(m)),
        SchurOp::Sym { rank, m, a } => rep(sym_power(&element(&a, &rank)?, m)?),
        SchurOp::Ext { rank, m, a } => rep(ext_power(&element(&a, &rank)?, m)?),
        SchurOp::Dim { rank, a } => {
            let w = weight(&a, &rank)?;
            let d = weyl_dim(&w);
            out.emit(d, || json!({"weight": w, "dim": d}));
        }
        SchurOp::Char { rank, a } => {
            let w = weight(&a, &rank)?;
            let chi = char_of(&RepElement::irreducible(w.clone()));
            let terms: Vec<String> = chi
                .terms()
                .iter()
                .rev()
                .map(|(exp, c)| {
                    let mono = exp.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(",");
                    if *c == 1 {
                        format!("x^({mono})")
                    } else {
                        format!("{c}·x^({mono})")
                    }
                })
                .collect();
            let json_terms: Vec<Value> = chi
                .terms()
                .iter()
                .rev()
                .map(|(exp, c)| json!({"exponent": exp, "coeff": c}))
                .collect();
            out.emit(terms.join(" + "), || json!({"weight": w, "terms": json_terms}));
        }
    }
    Ok(())
}

fn verdict(passed: bool) -> Outcome {
    if passed {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn run(cli: Cli) -> Outcome {
    let out = Out { format: cli.format };
    match cli.command {
        Command::Schur { op } => schur(op, &out),
        Command::Bwb {
            d,
            k,
            q_weight,
            k_weight,
        } => {
            if k == 0 || k >= d {
                return Err(Error::InvalidGrassmannian { k, d }.into());
            }
            let gamma = k_weight.unwrap_or_else(|| Weight::zero(d - k));
            let r = bwb_single(d, k, &gamma, &q_weight)?;
            out.emit(&r, || json!(r));
            Ok(())
        }
        Command::Wedge { q, middle } => {
            let (label, e) = if middle {
                ("Λ²(S²Q^∨ ⊗ Q)".to_string(), wedge2_middle()?)
            } else {
                let q = q.expect("clap enforces one of --q, --middle");
                (format!("Λ^{q} N′"), wedge_nprime(q)?)
            };
            out.emit(format!("{label} = {e}"), || json!(e));
            Ok(())
        }
        Command::CheckExc { d, alpha } => {
            let r = check_exceptional(&alpha, d)?;
            out.emit(&r, || r.to_json());
            verdict(r.passed())
        }
        Command::CheckFf { d, alpha } => {
            let r = check_fully_faithful(&alpha, d)?;
            out.emit(&r, || r.to_json());
            verdict(r.passed())
        }
        Command::CheckSo { d, alpha, beta } => {
            let r = check_semiorthogonal(&alpha, &beta, d)?;
            out.emit(&r, || r.to_json());
            verdict(r.passed())
        }
        Command::CheckCotangent { d, k } => {
            let r = check_cotangent_simple(k, d)?;
            out.emit(&r, || r.to_json());
            verdict(r.passed())
        }
        Command::Enumerate { d, sos } => {
            let labels = if sos { enumerate_sos(d)? } else { enumerate_ff(d)? };
            let text = labels
                .iter()
                .map(|l| l.alpha.to_string())
                .collect::<Vec<_>>()
                .join("\n");
            out.emit(text, || json!(labels.iter().map(|l| &l.alpha).collect::<Vec<_>>()));
            Ok(())
        }
        Command::Kummer { d } => {
            let n = kummer_count(d)?;
            out.emit(&n, || json!({"d": d, "count": n.to_string()}));
            Ok(())
        }
        Command::Audit { d_max } => {
            let results = audit::run_all(AuditBounds { d_max })?;
            let text = results
                .iter()
                .map(|r| {
                    let mut line = format!(
                        "{:>2} {:<24} {} ({} cases)",
                        r.id,
                        r.name,
                        if r.passed { "PASS" } else { "FAIL" },
                        r.cases
                    );
                    if let Some(detail) = &r.detail {
                        line.push_str(&format!("\n   {}", detail.replace('\n', "\n   ")));
                    }
                    line
                })
                .collect::<Vec<_>>()
                .join("\n");
            out.emit(text, || json!(results));
            verdict(results.iter().all(|r| r.passed))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
