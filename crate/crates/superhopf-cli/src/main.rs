use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use superhopf::analysis::{self, SuperDatum};
use superhopf::bosonize;
use superhopf::catalog::{self, TableId};
use superhopf::classify;
use superhopf::duality;
use superhopf::hopfcore::verify_axioms;
use superhopf::json::{self as sj, JsonError};
use superhopf::{Hopf, Scalar};

#[derive(Parser)]
#[command(name = "superhopf", version, about = "Exact computations with finite-dimensional Hopf superalgebras")]
struct Cli {
    /// Work over ℚ(ζ_N) for this N instead of the conductor stored in the input.
    #[arg(long, global = true)]
    conductor: Option<u64>,
    /// Write the result here instead of stdout.
    #[arg(short, long, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum CatalogCmd {
    /// Names of every catalog entry.
    List,
    /// Build a catalog entry in the structure-constant format.
    Build {
        name: String,
        #[arg(long)]
        p: Option<u64>,
    },
}

#[derive(Subcommand)]
enum Cmd {
    #[command(subcommand)]
    Catalog(CatalogCmd),
    /// Check every Hopf superalgebra axiom; exit 1 on failure.
    Verify { input: PathBuf },
    Grouplikes { input: PathBuf },
    Characters { input: PathBuf },
    /// Admissible pairs (g, α) of an ordinary Hopf algebra.
    Admissible { input: PathBuf },
    /// Super-data among the admissible pairs.
    Superdata { input: PathBuf },
    /// Skew-primitive spaces P_{γ,1} per group-like and parity.
    Skewprim {
        input: PathBuf,
        /// Restrict to this group-like label.
        #[arg(long)]
        g: Option<String>,
    },
    /// Coinvariants of a super-datum as a Hopf superalgebra.
    Coinv {
        input: PathBuf,
        #[arg(long)]
        g: String,
        #[arg(long)]
        alpha: usize,
    },
    Bosonize { input: PathBuf },
    /// Bosonize the coinvariants again and check the result is the input.
    Roundtrip {
        input: PathBuf,
        #[arg(long)]
        g: String,
        #[arg(long)]
        alpha: usize,
    },
    Dual { input: PathBuf },
    /// Check a pairing matrix M[i][j] = ⟨left_i, right_j⟩; exit 1 unless it is a Hopf pairing.
    Pair {
        left: PathBuf,
        right: PathBuf,
        #[arg(long)]
        matrix: PathBuf,
    },
    /// The pairing between bosonize(H) and bosonize(H^*).
    Bosondual { input: PathBuf },
    Fingerprint { input: PathBuf },
    Pointed { input: PathBuf },
    Semisimple { input: PathBuf },
    /// Run a classification table; exit 1 on any mismatch with the expected data.
    Classify {
        #[arg(long)]
        table: TableId,
        #[arg(long)]
        p: Option<u64>,
    },
}

/// Error classes with their own exit codes.
#[derive(Debug, thiserror::Error)]
enum Failure {
    #[error("{0:#}")]
    Io(anyhow::Error),
    #[error("{0:#}")]
    Schema(anyhow::Error),
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Failure::Io(anyhow!(e).context(format!("reading {}", path.display()))).into())
}

fn load(path: &Path, conductor: Option<u64>) -> Result<Hopf> {
    let text = read(path)?;
    let h: Hopf = sj::deserialize(&text).map_err(|e: JsonError| Failure::Schema(anyhow!(e).context(path.display().to_string())))?;
    Ok(match conductor {
        Some(n) => with_conductor(h, n)?,
        None => h,
    })
}

fn with_conductor(h: Hopf, n: u64) -> Result<Hopf> {
    let mut parts = h.parts();
    if n == 0 || !n.is_multiple_of(parts.conductor.max(1)) {
        bail!("conductor {} is not a multiple of {}", n, parts.conductor);
    }
    parts.conductor = n;
    Ok(Hopf::from_parts(parts)?)
}

fn emit_text(text: &str, out: Option<&Path>) -> Result<()> {
    match out {
        Some(p) => std::fs::write(p, format!("{}\n", text))
            .map_err(|e| Failure::Io(anyhow!(e).context(format!("writing {}", p.display())))),
        None => {
            use std::io::Write;
            match writeln!(std::io::stdout().lock(), "{}", text) {
                Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(Failure::Io(anyhow!(e))),
                _ => Ok(()),
            }
        }
    }?;
    Ok(())
}

fn emit<T: Serialize>(v: &T, out: Option<&Path>) -> Result<()> {
    emit_text(&serde_json::to_string_pretty(v)?, out)
}

fn find_datum(h: &Hopf, g: &str, alpha: usize) -> Result<SuperDatum<Scalar>> {
    let sd = analysis::super_data(h, None)?;
    sd.into_iter().find(|d| d.g_label == g && d.alpha == alpha).ok_or_else(|| {
        anyhow!("({}, character #{}) is not a super-datum; see the `superdata` verb for the list", g, alpha)
    })
}

/// Ok(true) when every check passed.
fn run(cli: Cli) -> Result<bool> {
    let out = cli.output.as_deref();
    let c = cli.conductor;
    match cli.cmd {
        Cmd::Catalog(CatalogCmd::List) => emit(&catalog::catalog_list(), out)?,
        Cmd::Catalog(CatalogCmd::Build { name, p }) => {
            let mut h = catalog::build_named::<Scalar>(&name, p)?.hopf;
            if let Some(n) = c {
                h = with_conductor(h, n)?;
            }
            emit_text(&sj::serialize(&h), out)?
        }
        Cmd::Verify { input } => {
            let r = verify_axioms(&load(&input, c)?);
            emit(&r, out)?;
            return Ok(r.passed());
        }
        Cmd::Grouplikes { input } => emit(&analysis::grouplikes(&load(&input, c)?)?, out)?,
        Cmd::Characters { input } => emit(&analysis::characters(&load(&input, c)?, None)?, out)?,
        Cmd::Admissible { input } => emit(&analysis::admissible_data(&load(&input, c)?, None)?, out)?,
        Cmd::Superdata { input } => emit(&analysis::super_data(&load(&input, c)?, None)?, out)?,
        Cmd::Skewprim { input, g } => {
            let h = load(&input, c)?;
            let gl = analysis::grouplikes(&h)?;
            if let Some(g) = &g {
                if !gl.labels.contains(g) {
                    bail!("'{}' is not a group-like; have {:?}", g, gl.labels);
                }
            }
            let mut rows = vec![];
            for (label, v) in gl.labels.iter().zip(&gl.elements) {
                if g.as_ref().is_some_and(|g| g != label) {
                    continue;
                }
                for eps in 0..2u8 {
                    let s = analysis::skew_primitives(&h, v, eps);
                    let basis: Vec<String> = s.basis().iter().map(|b| h.format_vec(b)).collect();
                    rows.push(json!({ "g": label, "parity": eps, "dim": s.dim(), "basis": basis }));
                }
            }
            emit(&rows, out)?
        }
        Cmd::Coinv { input, g, alpha } => {
            let h = load(&input, c)?;
            let co = bosonize::coinvariants(&h, &find_datum(&h, &g, alpha)?)?;
            emit_text(&sj::serialize(&co.hopf), out)?
        }
        Cmd::Bosonize { input } => emit_text(&sj::serialize(&bosonize::bosonize(&load(&input, c)?).result), out)?,
        Cmd::Roundtrip { input, g, alpha } => {
            let h = load(&input, c)?;
            let d = find_datum(&h, &g, alpha)?;
            let (ok, failure, dim) = match bosonize::roundtrip_iso(&h, &d) {
                Ok((_, co)) => (true, None, Some(co.hopf.dim())),
                Err(e) => (false, Some(e.to_string()), None),
            };
            emit(&json!({ "g": g, "alpha": alpha, "isomorphism": ok, "coinvariant_dim": dim, "failure": failure }), out)?;
            return Ok(ok);
        }
        Cmd::Dual { input } => emit_text(&sj::serialize(&duality::dual(&load(&input, c)?)), out)?,
        Cmd::Pair { left, right, matrix } => {
            let m = sj::deserialize_matrix::<Scalar>(&read(&matrix)?)
                .map_err(|e| Failure::Schema(anyhow!(e).context(matrix.display().to_string())))?;
            let p = duality::HopfPairing::new(load(&left, c)?, load(&right, c)?, m)?;
            emit(&p.status, out)?;
            return Ok(p.status.hopf_pairing);
        }
        Cmd::Bosondual { input } => {
            let p = duality::bosonization_duality(&load(&input, c)?);
            emit(&json!({ "status": p.status, "matrix": sj::matrix_to_rows(&p.matrix) }), out)?;
            return Ok(p.status.hopf_pairing && p.status.non_degenerate);
        }
        Cmd::Fingerprint { input } => emit(&analysis::fingerprint(&load(&input, c)?)?, out)?,
        Cmd::Pointed { input } => emit(&analysis::pointed_report(&load(&input, c)?), out)?,
        Cmd::Semisimple { input } => {
            let r = analysis::pointed_report(&load(&input, c)?);
            emit(&json!({ "semisimple": r.semisimple, "radical_dim": r.radical_dim }), out)?
        }
        Cmd::Classify { table, p } => {
            let r = classify::run_classification(table, p)?;
            println!("{}", classify::render_report(&r));
            if let Some(path) = out {
                emit(&r, Some(path)).context("writing the report")?;
            }
            return Ok(r.passed);
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {:#}", e);
            match e.downcast_ref::<Failure>() {
                Some(Failure::Io(_)) => ExitCode::from(3),
                Some(Failure::Schema(_)) => ExitCode::from(4),
                None => ExitCode::from(5),
            }
        }
    }
}
