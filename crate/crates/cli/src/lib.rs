//! Command-line front end for `klr_core`.

pub mod output;

use std::io::Write;

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use serde::Serialize;

use klr_core::crystal::is_kleshchev;
use klr_core::graded::{gdim_block, gdim_specht, gdim_specht_weight};
use klr_core::morita::{c_blocks, from_type_c, verify_bridge, BlockBridge, BridgeReport, Check};
use klr_core::partitions::{blocks_of_size, content, enumerate_block};
use klr_core::tableaux::{degree, for_each_standard, residue_sequence, ResidueFilter, StandardTableau};
use klr_core::{bridge, CartanType, DominantWeight, Error, MultiPartition, Partition, Residue, RootVector};

use output::{Emitter, Format};

#[derive(Debug, Parser)]
#[command(name = "klr", version, about = "Tableau, crystal and graded-dimension combinatorics for KLR algebras")]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct WeightArgs {
    /// Cartan type: a or c.
    #[arg(long = "type", default_value = "c")]
    pub cartan: CartanType,

    /// Comma-separated charge, one entry per component.
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    pub charge: String,
}

impl WeightArgs {
    fn weight(&self) -> Result<DominantWeight, Error> {
        let charge = parse_list::<Residue>(&self.charge)?;
        DominantWeight::new(self.cartan, charge)
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List the shapes of one block, or of every block of a given size.
    Block {
        #[command(flatten)]
        weight: WeightArgs,
        #[arg(long, conflicts_with = "beta", required_unless_present = "beta")]
        n: Option<usize>,
        #[arg(long)]
        beta: Option<RootVector>,
    },
    /// Stream the standard tableaux of a shape.
    Tableaux {
        #[command(flatten)]
        weight: WeightArgs,
        #[arg(long)]
        shape: MultiPartition,
        /// Only tableaux with this residue sequence.
        #[arg(long, allow_hyphen_values = true)]
        residues: Option<String>,
        #[arg(long)]
        with_degrees: bool,
    },
    /// Test one shape for the Kleshchev property, or count/list them by size.
    Kleshchev {
        #[command(flatten)]
        weight: WeightArgs,
        #[arg(long, conflicts_with = "n", required_unless_present = "n")]
        shape: Option<MultiPartition>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, requires = "n")]
        list: bool,
    },
    /// Graded dimension of a Specht module, a weight space, or a block.
    Gdim {
        #[command(flatten)]
        weight: WeightArgs,
        #[arg(long, conflicts_with = "beta", required_unless_present = "beta")]
        shape: Option<MultiPartition>,
        /// Residue sequence of the weight space.
        #[arg(long = "weight", requires = "shape", allow_hyphen_values = true)]
        weight_seq: Option<String>,
        #[arg(long)]
        beta: Option<RootVector>,
        /// Truncate the block by the idempotent of this content (type C).
        #[arg(long, requires = "beta")]
        omega: Option<RootVector>,
    },
    /// Block data of the bridge for a type C shape and its bipartition image.
    Bridge {
        #[arg(long)]
        kappa_c: Residue,
        #[arg(long)]
        shape: Partition,
    },
    /// Run the bridge checks on every type C block up to a given height.
    Verify {
        #[arg(long)]
        kappa_c: Residue,
        #[arg(long)]
        max_n: usize,
        #[arg(long, value_delimiter = ',', default_value = "count,graded,kleshchev,goodpath")]
        checks: Vec<Check>,
    },
}

fn parse_list<T: std::str::FromStr>(s: &str) -> Result<Vec<T>, Error> {
    s.split(',')
        .map(str::trim)
        .filter(|p| !p.is_empty())
        .map(|p| p.parse().map_err(|_| Error::Parse(format!("bad list entry {p:?} in {s:?}"))))
        .collect()
}

fn check_level(shape: &MultiPartition, weight: &DominantWeight) -> Result<(), Error> {
    if shape.level() != weight.level() {
        return Err(Error::LevelMismatch { expected: weight.level(), found: shape.level() });
    }
    Ok(())
}

/// Failure modes of a run, mapped to exit codes by the binary.
#[derive(Debug)]
pub enum Failure {
    /// Bad input: exit 2.
    Usage(String),
    /// A verification check failed: exit 1.
    CheckFailed,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

#[derive(Serialize)]
struct ShapeRecord {
    shape: MultiPartition,
    content: RootVector,
}

#[derive(Serialize)]
struct TableauRecord {
    tableau: StandardTableau,
    residues: Vec<Residue>,
    #[serde(skip_serializing_if = "Option::is_none")]
    degree: Option<i64>,
}

#[derive(Serialize)]
struct BridgeRecord {
    bridge: BlockBridge,
    shape: Partition,
    bipartition: MultiPartition,
}

#[derive(Serialize)]
struct VerifyRecord<'a> {
    beta: &'a RootVector,
    pass: bool,
    report: &'a BridgeReport,
}

fn join<T: ToString>(items: &[T]) -> String {
    items.iter().map(T::to_string).collect::<Vec<_>>().join(",")
}

/// Thread count from `KLR_THREADS`, if set to a positive integer.
pub fn thread_limit() -> Option<usize> {
    std::env::var("KLR_THREADS").ok()?.parse().ok().filter(|&n| n > 0)
}

pub fn run(cli: &Cli, out: impl Write) -> Result<(), Failure> {
    let mut em = Emitter::new(cli.format, out);
    match &cli.command {
        Command::Block { weight, n, beta } => {
            let weight = weight.weight()?;
            let blocks = match (n, beta) {
                (Some(n), _) => blocks_of_size(&weight, *n),
                (None, Some(beta)) => [(beta.clone(), enumerate_block(&weight, beta))].into_iter().collect(),
                (None, None) => unreachable!("clap requires one of --n and --beta"),
            };
            for (beta, shapes) in blocks {
                for shape in shapes {
                    let rec = ShapeRecord { shape, content: beta.clone() };
                    em.emit(&rec, || format!("{}  {}", rec.shape, rec.content))?;
                }
            }
        }
        Command::Tableaux { weight, shape, residues, with_degrees } => {
            let weight = weight.weight()?;
            check_level(shape, &weight)?;
            let residues = residues.as_deref().map(parse_list::<Residue>).transpose()?;
            let filter = residues.as_deref().map(|residues| ResidueFilter { weight: &weight, residues });
            let mut result = Ok(());
            for_each_standard(shape, filter, |nodes| {
                if result.is_err() {
                    return;
                }
                let t = StandardTableau::from_nodes(shape.clone(), nodes.to_vec()).expect("standard by construction");
                let rec = TableauRecord {
                    residues: residue_sequence(&t, &weight),
                    degree: with_degrees.then(|| degree(&t, &weight)),
                    tableau: t,
                };
                result = em.emit(&rec, || {
                    let rows: Vec<String> =
                        rec.tableau.rows().iter().map(|comp| comp.iter().map(|r| join(r)).collect::<Vec<_>>().join("|")).collect();
                    let mut line = format!("{}  res={}", rows.join(" / "), join(&rec.residues));
                    if let Some(d) = rec.degree {
                        line.push_str(&format!("  deg={d}"));
                    }
                    line
                });
            });
            result?;
        }
        Command::Kleshchev { weight, shape, n, list } => {
            let weight = weight.weight()?;
            match (shape, n) {
                (Some(shape), _) => {
                    check_level(shape, &weight)?;
                    let k = is_kleshchev(shape, &weight);
                    em.emit(&k, || k.to_string())?;
                }
                (None, Some(n)) => {
                    let shapes: Vec<MultiPartition> = MultiPartition::all_of_size(*n, weight.level())
                        .into_iter()
                        .filter(|mp| is_kleshchev(mp, &weight))
                        .collect();
                    if *list {
                        for shape in &shapes {
                            em.emit(shape, || shape.to_string())?;
                        }
                    } else {
                        em.emit(&shapes.len(), || shapes.len().to_string())?;
                    }
                }
                (None, None) => unreachable!("clap requires one of --shape and --n"),
            }
        }
        Command::Gdim { weight, shape, weight_seq, beta, omega } => {
            let weight = weight.weight()?;
            let poly = match (shape, beta) {
                (Some(shape), _) => {
                    check_level(shape, &weight)?;
                    match weight_seq {
                        Some(seq) => gdim_specht_weight(shape, &weight, &parse_list::<Residue>(seq)?),
                        None => gdim_specht(shape, &weight),
                    }
                }
                (None, Some(beta)) => gdim_block(&weight, beta, omega.as_ref())?,
                (None, None) => unreachable!("clap requires one of --shape and --beta"),
            };
            em.emit(&poly, || poly.to_string())?;
        }
        Command::Bridge { kappa_c, shape } => {
            let weight = DominantWeight::type_c(*kappa_c)?;
            let beta = content(&weight, &MultiPartition::single(shape.clone()));
            let b = bridge(*kappa_c, &beta)?;
            let bipartition = from_type_c(shape, &b)?;
            let rec = BridgeRecord { bridge: b, shape: shape.clone(), bipartition };
            em.emit(&rec, || {
                let b = &rec.bridge;
                format!(
                    "{} = {} + {}  (a0={}, omega={}, charges ({},{}))",
                    rec.shape, b.rho, rec.bipartition, b.a0, b.omega, b.kappa1, b.kappa2
                )
            })?;
        }
        Command::Verify { kappa_c, max_n, checks } => {
            let bridges = c_blocks(*kappa_c, *max_n)?;
            let mut builder = rayon::ThreadPoolBuilder::new();
            if let Some(n) = thread_limit() {
                builder = builder.num_threads(n);
            }
            let pool = builder.build().map_err(|e| Failure::Usage(e.to_string()))?;
            let reports: Vec<BridgeReport> = pool.install(|| bridges.par_iter().map(|b| verify_bridge(b, checks)).collect());
            let mut all_pass = true;
            for report in &reports {
                let pass = report.pass();
                all_pass &= pass;
                let rec = VerifyRecord { beta: &report.bridge.beta, pass, report };
                em.emit(&rec, || pretty_verify(report, checks))?;
            }
            em.finish()?;
            return if all_pass { Ok(()) } else { Err(Failure::CheckFailed) };
        }
    }
    em.finish()?;
    Ok(())
}

fn pretty_verify(report: &BridgeReport, checks: &[Check]) -> String {
    let c = &report.checks;
    let status = |check: &Check| -> bool {
        match check {
            Check::Count => c.count.as_ref().is_some_and(|r| r.pass),
            Check::Graded => c.graded.as_ref().is_some_and(|r| r.pass),
            Check::Dominance => c.dominance.as_ref().is_some_and(|r| r.pass),
            Check::Kleshchev => c.kleshchev.as_ref().is_some_and(|r| r.pass),
            Check::Goodpath => c.goodpath.as_ref().is_some_and(|r| r.pass),
        }
    };
    let parts: Vec<String> =
        checks.iter().map(|check| format!("{check}={}", if status(check) { "ok" } else { "FAIL" })).collect();
    format!("{} beta={} rho={}  {}", if report.pass() { "PASS" } else { "FAIL" }, report.bridge.beta, report.bridge.rho, parts.join(" "))
}

/// Type C charges must be non-negative; caught here so the error is a usage error.
pub fn validate(cli: &Cli) -> Result<(), Failure> {
    let weight = match &cli.command {
        Command::Block { weight, .. }
        | Command::Tableaux { weight, .. }
        | Command::Kleshchev { weight, .. }
        | Command::Gdim { weight, .. } => Some(weight),
        _ => None,
    };
    if let Some(w) = weight {
        w.weight()?;
    }
    if let Command::Bridge { kappa_c, .. } | Command::Verify { kappa_c, .. } = &cli.command {
        if *kappa_c < 0 {
            return Err(Failure::Usage(format!("--kappa-c must be non-negative, got {kappa_c}")));
        }
    }
    Ok(())
}
