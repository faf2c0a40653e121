use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use mfkit::json::{read_factorizations, CertificateDoc, FactorizationDoc};
use mfkit::{
    block_family_of, catalog, det_certificate, orbit, rotations, standard_method,
    transpose_reversal, CertificateOptions, Error, Factorization, OrbitLimits, TermList, Variables,
    DEFAULT_DET_CAP,
};

/// Construct, transform, verify and count matrix factorizations of polynomials.
#[derive(Parser)]
#[command(name = "mfkit", version)]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Input {
    /// Factorization JSON (one or more documents); stdin when omitted.
    #[arg(long, short)]
    file: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Run the standard method on f = g1*h1 + ... + gk*hk.
    Factor {
        /// Comma-separated variable names.
        #[arg(long)]
        vars: String,
        /// Pairs `g1:h1,g2:h2,...`.
        #[arg(long)]
        terms: String,
    },
    /// Check that each factorization multiplies to its target.
    Verify(Input),
    /// Emit every cyclic rotation of each factorization.
    Rotate(Input),
    /// Emit the transposed factors in reverse order.
    Reverse(Input),
    /// Emit the fourteen block rearrangements of a 2-factor factorization.
    Blockgen(Input),
    /// Determinant certificate: each det divides f^m and they multiply to f^m.
    Certify {
        #[command(flatten)]
        input: Input,
        /// Treat the target as irreducible and express each det as c * f^k.
        #[arg(long)]
        irreducible: bool,
    },
    /// Count the closure under rotation, reversal and block rearrangement.
    Orbit {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = OrbitLimits::default().depth)]
        depth: usize,
        /// Maximum number of members.
        #[arg(long, default_value_t = OrbitLimits::default().set_size)]
        cap: usize,
        /// Also emit every member.
        #[arg(long)]
        members: bool,
    },
    /// Print built-in factorizations (JSON unless --text).
    Catalog {
        #[arg(long, conflicts_with = "list")]
        name: Option<String>,
        #[arg(long)]
        list: bool,
        #[arg(long)]
        text: bool,
    },
}

/// Failure classes: `Domain` exits 1, `Usage` exits 2.
enum Failure {
    Domain(String),
    Usage(String),
}

impl Failure {
    fn from_error(err: Error, vars: &Variables) -> Self {
        match err {
            Error::Verify(e) => {
                Failure::Domain(format!("verification failed: {}", e.describe(vars)))
            }
            Error::BlockItem { item, source } => Failure::Domain(format!(
                "block rearrangement {item} failed verification: {}",
                source.describe(vars)
            )),
            e @ (Error::Hypothesis(_)
            | Error::CrossPairs(_)
            | Error::ZeroDeterminant { .. }
            | Error::NotDivisible { .. }
            | Error::DeterminantProduct { .. }) => Failure::Domain(e.to_string()),
            e => Failure::Usage(e.to_string()),
        }
    }
}

type Outcome = Result<(), Failure>;

struct Output {
    json: bool,
    out: io::StdoutLock<'static>,
}

impl Output {
    fn line(&mut self, text: impl AsRef<str>) {
        let _ = writeln!(self.out, "{}", text.as_ref());
    }

    fn factorization(&mut self, label: &str, fac: &Factorization, vars: &Variables) {
        if self.json {
            let doc = FactorizationDoc::from_factorization(fac, vars);
            self.line(serde_json::to_string(&doc).expect("serializable"));
            return;
        }
        self.line(format!("{label}f = {}", fac.target().to_text(vars)));
        for (i, m) in fac.factors().iter().enumerate() {
            self.line(format!("A{} =", i + 1));
            self.line(m.display(vars).to_string());
        }
    }
}

fn read_input(input: &Input) -> Result<Vec<(Factorization, Variables)>, Failure> {
    let text = match &input.file {
        Some(path) => std::fs::read_to_string(path)
            .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?,
        None => {
            let mut buf = String::new();
            io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| Failure::Usage(format!("cannot read stdin: {e}")))?;
            buf
        }
    };
    let docs = read_factorizations(&text).map_err(|e| Failure::Usage(e.to_string()))?;
    if docs.is_empty() {
        return Err(Failure::Usage("no factorization found in input".into()));
    }
    Ok(docs)
}

/// Loaded documents are never trusted; verify before any transformation.
fn verified(input: &Input) -> Result<Vec<(Factorization, Variables)>, Failure> {
    let mut docs = read_input(input)?;
    for (i, (fac, vars)) in docs.iter_mut().enumerate() {
        fac.verify().map_err(|e| {
            Failure::Domain(format!(
                "document {}: verification failed: {}",
                i + 1,
                e.describe(vars)
            ))
        })?;
    }
    Ok(docs)
}

fn det_cap() -> Result<usize, Failure> {
    match std::env::var("MFKIT_DET_CAP") {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Failure::Usage(format!("MFKIT_DET_CAP must be a size, got `{v}`"))),
        Err(_) => Ok(DEFAULT_DET_CAP),
    }
}

fn run(cli: Cli, out: &mut Output) -> Outcome {
    match cli.command {
        Command::Factor { vars, terms } => {
            let vars = Variables::parse_list(&vars).map_err(|e| Failure::Usage(e.to_string()))?;
            let terms =
                TermList::parse(&terms, &vars).map_err(|e| Failure::Usage(e.to_string()))?;
            let fac = standard_method(&terms).map_err(|e| Failure::from_error(e, &vars))?;
            out.factorization("", &fac, &vars);
        }
        Command::Verify(input) => {
            for (i, (fac, vars)) in verified(&input)?.iter().enumerate() {
                if out.json {
                    out.line(format!(
                        r#"{{"document":{},"verified":true,"target":{}}}"#,
                        i + 1,
                        serde_json::Value::String(fac.target().to_text(vars))
                    ));
                } else {
                    out.line(format!(
                        "document {}: ok, {} factors of size {} multiply to ({}) I",
                        i + 1,
                        fac.len(),
                        fac.size(),
                        fac.target().to_text(vars)
                    ));
                }
            }
        }
        Command::Rotate(input) => {
            for (fac, vars) in verified(&input)? {
                let all = rotations(&fac).map_err(|e| Failure::from_error(e, &vars))?;
                for (k, r) in all.iter().enumerate() {
                    out.factorization(&format!("rotation {k}: "), r, &vars);
                }
            }
        }
        Command::Reverse(input) => {
            for (fac, vars) in verified(&input)? {
                let r = transpose_reversal(&fac).map_err(|e| Failure::from_error(e, &vars))?;
                out.factorization("reversed: ", &r, &vars);
            }
        }
        Command::Blockgen(input) => {
            for (fac, vars) in verified(&input)? {
                let family = block_family_of(&fac).map_err(|e| Failure::from_error(e, &vars))?;
                if !out.json {
                    out.line(format!(
                        "hypothesis holds (variant {:?}: {})",
                        family.hypothesis.variant, family.hypothesis.pattern
                    ));
                }
                for (i, item) in family.items.iter().enumerate() {
                    out.factorization(&format!("item {}: ", i + 1), item, &vars);
                }
            }
        }
        Command::Certify { input, irreducible } => {
            let options = CertificateOptions {
                irreducible_hint: irreducible,
                det_cap: det_cap()?,
            };
            for (fac, vars) in verified(&input)? {
                let report =
                    det_certificate(&fac, options).map_err(|e| Failure::from_error(e, &vars))?;
                if out.json {
                    let doc = CertificateDoc::from_report(&report, &vars);
                    out.line(serde_json::to_string(&doc).expect("serializable"));
                } else {
                    let _ = write!(out.out, "{}", report.describe(&vars));
                }
                if irreducible && report.factors.iter().any(|c| c.power.is_none()) {
                    return Err(Failure::Domain(
                        "a determinant is not a unit times a power of f".into(),
                    ));
                }
            }
        }
        Command::Orbit {
            input,
            depth,
            cap,
            members,
        } => {
            let limits = OrbitLimits {
                depth,
                set_size: cap,
            };
            for (fac, vars) in verified(&input)? {
                let report = orbit(&fac, limits).map_err(|e| Failure::from_error(e, &vars))?;
                if out.json {
                    out.line(format!(
                        r#"{{"count":{},"complete":{},"rounds":{}}}"#,
                        report.count(),
                        report.complete,
                        report.rounds
                    ));
                } else {
                    let bound = if report.complete {
                        "closed"
                    } else {
                        "truncated by limits; lower bound"
                    };
                    out.line(format!(
                        "orbit size {} ({bound}, {} rounds)",
                        report.count(),
                        report.rounds
                    ));
                }
                if members {
                    for (i, m) in report.members.iter().enumerate() {
                        out.factorization(&format!("member {}: ", i + 1), m, &vars);
                    }
                }
            }
        }
        Command::Catalog { name, list, text } => {
            let entries = match &name {
                Some(n) => vec![catalog::lookup(n).map_err(|e| Failure::Usage(e.to_string()))?],
                None => catalog::entries().map_err(|e| Failure::Usage(e.to_string()))?,
            };
            out.json = !text;
            for e in &entries {
                if list {
                    out.line(format!("{:<12} {}", e.name, e.provenance));
                } else {
                    out.factorization(&format!("{}: ", e.name), &e.factorization, &e.variables);
                }
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let mut out = Output {
        json: cli.json,
        out: io::stdout().lock(),
    };
    match run(cli, &mut out) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
