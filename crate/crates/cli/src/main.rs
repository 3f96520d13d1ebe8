//! `leibniz-lab`: command-line front end for `leibniz-core`.
//!
//! Exit codes: 0 when the command ran (a failed certificate is still data),
//! 1 for usage, I/O and invalid-input errors, 2 when the oracle refuses a
//! subspace count over budget.

mod report;

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

use leibniz_core::classify::{construct_chain, construct_cyclic, construct_standard};
use leibniz_core::exactmath::{FieldDescriptor, Scalar, Subspace, Vector};
use leibniz_core::format::{load_algebra, parse_rows, save_algebra, AlgebraFile};
use leibniz_core::leibcore::LeibnizAlgebra;
use leibniz_core::oracle::{self, EnumerationBudget};
use leibniz_core::structure::core_of;
use leibniz_core::{Error, Result};

use report::{analyze, oracle_section, subspace_rows};

#[derive(Debug, Parser)]
#[command(name = "leibniz-lab", version, about = "Exact computations with finite-dimensional Leibniz algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check the left Leibniz identity on every basis triple.
    Validate { file: PathBuf },
    /// Series, kernel and the structure certificate.
    Analyze {
        file: PathBuf,
        /// Also write the report as JSON.
        #[arg(long)]
        json: Option<PathBuf>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Run the brute-force oracle as well (finite fields only).
        #[arg(long)]
        oracle: bool,
        #[arg(long)]
        budget: Option<u128>,
        /// Add elapsed time to the report (makes it nondeterministic).
        #[arg(long)]
        timing: bool,
    },
    /// Build an algebra from one of the families.
    Construct {
        #[command(subcommand)]
        family: Family,
    },
    /// Write L/I for an ideal I given by spanning rows.
    Quotient {
        file: PathBuf,
        #[arg(long)]
        ideal: String,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Subalgebra (or ideal) generated by some elements.
    Closure {
        file: PathBuf,
        #[arg(long)]
        elements: String,
        #[arg(long)]
        ideal: bool,
    },
    /// Brute-force checks by subspace enumeration.
    Oracle {
        #[arg(value_enum)]
        check: OracleCheck,
        file: PathBuf,
        #[arg(long)]
        budget: Option<u128>,
        /// Subalgebra for `core`, as spanning rows.
        #[arg(long)]
        subalgebra: Option<String>,
    },
    /// Reduce the structure constants modulo a prime.
    Transplant {
        file: PathBuf,
        #[arg(long = "to-gf")]
        to_gf: u64,
        #[arg(short, long)]
        output: PathBuf,
    },
}

#[derive(Debug, Args)]
struct Target {
    /// Q, Q(i) or GF(p).
    #[arg(long, default_value = "Q")]
    field: String,
    #[arg(short, long)]
    output: PathBuf,
}

#[derive(Debug, Subcommand)]
enum Family {
    /// xa_i = a_{i+1}, xa_k = c0 a0 + ... + ck ak, so p = λ^{k+1} - ck λ^k - ... - c0.
    Standard {
        #[arg(long)]
        coeffs: String,
        #[command(flatten)]
        target: Target,
    },
    Chain {
        #[arg(long)]
        j: usize,
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        target: Target,
    },
    /// z z^d = t1 z^2 + ... + td z^{d+1}.
    Cyclic {
        #[arg(long)]
        dim: usize,
        #[arg(long)]
        top: String,
        #[command(flatten)]
        target: Target,
    },
}

#[derive(Clone, Copy, Debug, clap::ValueEnum)]
enum OracleCheck {
    Minimality,
    Nilradical,
    Frattini,
    Core,
    MinimalIdeals,
}

fn budget_from(flag: Option<u128>) -> Result<EnumerationBudget> {
    match flag {
        Some(n) => Ok(EnumerationBudget::new(n)),
        None => EnumerationBudget::from_env(),
    }
}

fn scalar_list(field: FieldDescriptor, text: &str) -> Result<Vec<Scalar>> {
    text.split(',').map(|t| Scalar::parse(field, t)).collect()
}

fn read_input(path: &Path) -> Result<(Vec<u8>, LeibnizAlgebra)> {
    let bytes = std::fs::read(path)?;
    let text = String::from_utf8(bytes.clone()).map_err(|_| Error::Parse("input is not UTF-8".into()))?;
    Ok((bytes, leibniz_core::format::parse_algebra_json(&text)?))
}

fn rows(a: &LeibnizAlgebra, text: &str) -> Result<Vec<Vector>> {
    parse_rows(a.field(), a.dim(), text)
}

fn show(label: &str, s: &Subspace) -> String {
    let rows = subspace_rows(s);
    if rows.is_empty() {
        format!("{label}: 0 (dim 0)")
    } else {
        format!("{label}: dim {} span{{{}}}", s.dim(), rows.iter().map(|r| format!("({r})")).collect::<Vec<_>>().join(", "))
    }
}

fn write_algebra(a: &LeibnizAlgebra, path: &Path) -> Result<String> {
    save_algebra(a, path)?;
    Ok(format!("Wrote {}-dimensional algebra over {} to {}\n", a.dim(), a.field(), path.display()))
}

fn run(cli: Cli) -> Result<String> {
    match cli.command {
        Command::Validate { file } => {
            let text = std::fs::read_to_string(&file)?;
            let parsed: AlgebraFile = serde_json::from_str(&text)?;
            let a = parsed.to_unvalidated()?;
            match a.validate_leibniz() {
                Ok(()) => Ok(format!("{}-dimensional algebra over {}\nLeibniz identity: PASS\n", a.dim(), a.field())),
                Err(w) => Err(Error::NotLeibniz(w)),
            }
        }
        Command::Analyze {
            file,
            json,
            seed,
            oracle,
            budget,
            timing,
        } => {
            let start = Instant::now();
            let (bytes, a) = read_input(&file)?;
            let budget = if oracle { Some(budget_from(budget)?) } else { None };
            let mut report = analyze(&a, &bytes, seed, budget)?;
            if timing {
                report.timing_ms = Some(start.elapsed().as_millis());
            }
            if let Some(path) = json {
                std::fs::write(path, report.to_json())?;
            }
            Ok(report.to_text())
        }
        Command::Construct { family } => match family {
            Family::Standard { coeffs, target } => {
                let field = FieldDescriptor::parse(&target.field)?;
                let s = construct_standard(field, &scalar_list(field, &coeffs)?)?;
                write_algebra(&s.algebra, &target.output)
            }
            Family::Chain { j, k, target } => {
                let field = FieldDescriptor::parse(&target.field)?;
                write_algebra(&construct_chain(field, j, k)?, &target.output)
            }
            Family::Cyclic { dim, top, target } => {
                let field = FieldDescriptor::parse(&target.field)?;
                write_algebra(&construct_cyclic(field, dim, &scalar_list(field, &top)?)?, &target.output)
            }
        },
        Command::Quotient { file, ideal, output } => {
            let a = load_algebra(&file)?;
            let i = Subspace::span(a.field(), a.dim(), &rows(&a, &ideal)?)?;
            let q = a.quotient(&i)?;
            let mut out = show("Ideal", &i);
            out.push('\n');
            out.push_str(&write_algebra(&q.algebra, &output)?);
            Ok(out)
        }
        Command::Closure { file, elements, ideal } => {
            let a = load_algebra(&file)?;
            let gens = rows(&a, &elements)?;
            let (label, s) = if ideal {
                ("Ideal closure", a.ideal_closure(&gens)?)
            } else {
                ("Subalgebra closure", a.subalgebra_closure(&gens)?)
            };
            Ok(show(label, &s) + "\n")
        }
        Command::Oracle {
            check,
            file,
            budget,
            subalgebra,
        } => {
            let a = load_algebra(&file)?;
            let budget = budget_from(budget)?;
            oracle_command(check, &a, budget, subalgebra.as_deref())
        }
        Command::Transplant { file, to_gf, output } => {
            let a = load_algebra(&file)?;
            let b = a.transplant(FieldDescriptor::prime_field(to_gf)?)?;
            b.validate_leibniz().map_err(Error::NotLeibniz)?;
            write_algebra(&b, &output)
        }
    }
}

fn oracle_command(check: OracleCheck, a: &LeibnizAlgebra, budget: EnumerationBudget, subalgebra: Option<&str>) -> Result<String> {
    let mut out = Vec::new();
    match check {
        OracleCheck::Minimality => {
            let section = oracle_section(a, budget)?;
            out.push(format!("Minimality: {}", section.minimality.to_uppercase()));
            if let Some(reason) = &section.hypothesis_failure {
                out.push(format!("Hypothesis: {reason}"));
            }
            if let Some(c) = &section.census {
                out.push(format!("Subspaces enumerated: {}", c.subspaces));
                out.push(format!("Subalgebras: {} ({} proper, {} nilpotent proper)", c.subalgebras, c.proper_subalgebras, c.nilpotent_proper_subalgebras));
                for (d, n) in c.by_dimension.iter().enumerate() {
                    out.push(format!("  proper of dim {d}: {n}"));
                }
            }
            if let Some(w) = &section.witness {
                out.push(format!("Nonnilpotent proper subalgebra: span{{{}}}", w.iter().map(|r| format!("({r})")).collect::<Vec<_>>().join(", ")));
            }
        }
        OracleCheck::Nilradical => out.push(show("Nilradical", &oracle::bruteforce_nilradical(a, budget)?)),
        OracleCheck::Frattini => {
            let f = oracle::frattini(a, budget)?;
            out.push(format!("Maximal subalgebras: {}", f.maximal_subalgebras.len()));
            out.push(show("Frattini subalgebra", &f.frattini_subalgebra));
            out.push(show("Frattini ideal", &f.frattini_ideal));
        }
        OracleCheck::Core => {
            let text = subalgebra.ok_or_else(|| Error::InvalidParameter("oracle core needs --subalgebra ROWS".into()))?;
            let m = Subspace::span(a.field(), a.dim(), &rows(a, text)?)?;
            let brute = oracle::bruteforce_largest_ideal(a, &m, budget)?;
            let fixed = core_of(a, &m)?;
            out.push(show("Core (enumeration)", &brute));
            out.push(show("Core (fixed point)", &fixed));
            out.push(format!("Agreement: {}", if brute == fixed { "PASS" } else { "FAIL" }));
        }
        OracleCheck::MinimalIdeals => {
            let ideals = oracle::minimal_ideals(a, budget)?;
            out.push(format!("Minimal ideals: {}", ideals.len()));
            for (n, i) in ideals.iter().enumerate() {
                out.push(show(&format!("  I{n}"), i));
            }
        }
    }
    Ok(out.join("\n") + "\n")
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
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            if let Error::NotLeibniz(_) = e {
                println!("Leibniz identity: FAIL");
            }
            eprintln!("error: {e}");
            ExitCode::from(if matches!(e, Error::BudgetExceeded { .. }) { 2 } else { 1 })
        }
    }
}
