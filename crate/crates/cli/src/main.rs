//! `ybrace` — construct, validate and analyze finite weak braces and the
//! Yang-Baxter solutions they induce.
//!
//! Exit codes: 0 when the requested property holds (or a document was
//! produced), 1 when a property fails with a counterexample, 2 on malformed
//! input or usage errors.

mod report;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};

use ybrace_core::brace::{check_semibrace_form, structural_report};
use ybrace_core::construct;
use ybrace_core::doc::{
    emit_document, parse_document, Body, Document, PairMapPayload, TablePayload, WeakBracePayload,
};
use ybrace_core::enumerate;
use ybrace_core::error::Error as CoreError;
use ybrace_core::factor;
use ybrace_core::inverse::{as_inverse_semigroup, ActionFamily};
use ybrace_core::ybe;
use ybrace_core::{CayleyTable, PairMap, WeakBrace};

#[derive(Parser)]
#[command(name = "ybrace", version, about)]
struct Cli {
    /// Emit machine-readable JSON reports instead of aligned text.
    #[arg(long, global = true)]
    json: bool,

    /// Override the order/carrier cap of the subcommand.
    #[arg(long, global = true, value_name = "N")]
    max_order: Option<usize>,

    /// Size of the worker pool for parallel scans.
    #[arg(long, global = true, value_name = "K")]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a weak-brace document and print the full identity checklist.
    Verify { file: PathBuf },
    /// Compute the solution r(a,b) = (lambda_a(b), rho_b(a)) of a weak brace.
    Solve { file: PathBuf },
    /// Check the braid relation on a pair-map document.
    Ybe { file: PathBuf },
    /// Classify a pair map: braid, involutive, idempotent, cubic, bijective.
    Classify { file: PathBuf },
    /// Search for a bijection intertwining two pair maps.
    Equiv { first: PathBuf, second: PathBuf },
    /// Compose a pair map with itself k times.
    Power {
        #[arg(long, short)]
        k: usize,
        file: PathBuf,
    },
    /// Build weak braces from semigroups and systems.
    #[command(subcommand)]
    Construct(ConstructCommand),
    /// Enumerate exact factorizations and build the induced braces.
    Factorize(FactorizeArgs),
    /// Enumerate inverse semigroups or weak braces of a small order.
    Enumerate(EnumerateArgs),
    /// Run a named worked example.
    Demo {
        #[arg(value_enum)]
        name: DemoName,
    },
}

#[derive(Subcommand)]
enum ConstructCommand {
    /// Trivial weak brace (a + b = a o b) on a Clifford semigroup.
    Trivial { file: PathBuf },
    /// Almost-trivial weak brace (a + b = b o a) on a Clifford semigroup.
    AlmostTrivial { file: PathBuf },
    /// Twisted direct product of two semigroup documents.
    Product {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
        kind: u8,
        s: PathBuf,
        t: PathBuf,
        /// JSON array of permutations of the T carrier, indexed by S.
        #[arg(long)]
        hom: Option<PathBuf>,
    },
    /// Matched product of a matched-system document.
    Matched { file: PathBuf },
    /// Matched product with the beta action required trivial.
    Semidirect { file: PathBuf },
    /// Double semidirect product of a double-system document.
    Double { file: PathBuf },
}

#[derive(Args)]
struct FactorizeArgs {
    file: PathBuf,
    /// Build the brace of the factorization at this index instead of
    /// listing all of them.
    #[arg(long)]
    pick: Option<usize>,
    #[arg(long, value_enum, default_value_t = Variant::Circ)]
    variant: Variant,
}

#[derive(Clone, Copy, ValueEnum)]
enum Variant {
    Circ,
    Bullet,
}

#[derive(Args)]
struct EnumerateArgs {
    #[arg(long)]
    order: usize,
    #[arg(long, value_enum)]
    kind: EnumKind,
    /// Emit every labeled structure instead of one per isomorphism class.
    #[arg(long)]
    labeled: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum EnumKind {
    InverseSemigroup,
    WeakBrace,
}

#[derive(Clone, Copy, ValueEnum)]
enum DemoName {
    Trivial,
    #[value(name = "semidirect-3x3")]
    Semidirect3x3,
    Sym3,
}

/// Outcome of a subcommand that ran to completion.
enum Outcome {
    Holds,
    Fails,
}

impl Outcome {
    fn code(self) -> ExitCode {
        match self {
            Outcome::Holds => ExitCode::SUCCESS,
            Outcome::Fails => ExitCode::from(1),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(k) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(k).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(&cli) {
        Ok(outcome) => outcome.code(),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> anyhow::Result<Outcome> {
    match &cli.command {
        Command::Verify { file } => verify(cli, file),
        Command::Solve { file } => {
            let wb = load_weak_brace(file)?;
            print_doc(Body::PairMap(PairMapPayload::from_pair_map(&ybe::solution_of(
                &wb,
            ))));
            Ok(Outcome::Holds)
        }
        Command::Ybe { file } => {
            let p = load_pair_map(file)?;
            match ybe::braid_counterexample(&p) {
                None => {
                    report::line(cli.json, "braid", true, None);
                    Ok(Outcome::Holds)
                }
                Some((a, b, c)) => {
                    report::line(cli.json, "braid", false, Some(format!("({a}, {b}, {c})")));
                    Ok(Outcome::Fails)
                }
            }
        }
        Command::Classify { file } => {
            let p = load_pair_map(file)?;
            report::profile(cli.json, &ybe::classify(&p));
            Ok(Outcome::Holds)
        }
        Command::Equiv { first, second } => {
            let p = load_pair_map(first)?;
            let q = load_pair_map(second)?;
            let cap = cli.max_order.unwrap_or(ybe::DEFAULT_EQUIV_CAP);
            match ybe::are_equivalent(&p, &q, cap).map_err(core_err)? {
                Some(f) => {
                    report::equivalence(cli.json, Some(&f));
                    Ok(Outcome::Holds)
                }
                None => {
                    let total: usize = (1..=p.order()).product();
                    if cli.json {
                        report::equivalence(cli.json, None);
                    } else if p.order() == q.order() {
                        println!("no equivalence among {total} bijections");
                    } else {
                        println!("no equivalence: orders differ");
                    }
                    Ok(Outcome::Fails)
                }
            }
        }
        Command::Power { k, file } => {
            let p = load_pair_map(file)?;
            print_doc(Body::PairMap(PairMapPayload::from_pair_map(&ybe::power(
                &p, *k,
            ))));
            Ok(Outcome::Holds)
        }
        Command::Construct(cmd) => construct_cmd(cli, cmd),
        Command::Factorize(args) => factorize(cli, args),
        Command::Enumerate(args) => enumerate_cmd(cli, args),
        Command::Demo { name } => {
            demo(cli, *name)?;
            Ok(Outcome::Holds)
        }
    }
}

/// Property-style core failures carry counterexamples and exit 1; they are
/// reported through `Outcome::Fails` by the callers. Everything reaching
/// this helper is treated as malformed input instead.
fn core_err(e: CoreError) -> anyhow::Error {
    anyhow!(e)
}

fn read(file: &PathBuf) -> anyhow::Result<String> {
    fs::read_to_string(file).with_context(|| format!("reading {}", file.display()))
}

fn load_doc(file: &PathBuf) -> anyhow::Result<Document> {
    parse_document(&read(file)?).map_err(core_err)
}

fn load_pair_map(file: &PathBuf) -> anyhow::Result<PairMap> {
    match load_doc(file)?.body {
        Body::PairMap(p) => p.to_pair_map().map_err(core_err),
        other => bail!("expected a pair-map document, found {}", kind_of(&other)),
    }
}

fn load_weak_brace(file: &PathBuf) -> anyhow::Result<WeakBrace> {
    match load_doc(file)?.body {
        Body::WeakBrace(p) => p.to_weak_brace().map_err(core_err),
        other => bail!("expected a weak-brace document, found {}", kind_of(&other)),
    }
}

fn load_table(file: &PathBuf) -> anyhow::Result<CayleyTable> {
    match load_doc(file)?.body {
        Body::Semigroup(p) => p.to_table().map_err(core_err),
        other => bail!("expected a semigroup document, found {}", kind_of(&other)),
    }
}

fn kind_of(body: &Body) -> &'static str {
    Document::new(body.clone()).kind()
}

fn print_doc(body: Body) {
    println!("{}", emit_document(&Document::new(body)));
}

fn verify(cli: &Cli, file: &PathBuf) -> anyhow::Result<Outcome> {
    let payload = match load_doc(file)?.body {
        Body::WeakBrace(p) => p,
        other => bail!("expected a weak-brace document, found {}", kind_of(&other)),
    };
    match payload.to_weak_brace() {
        Err(e) => {
            report::line(cli.json, "weak-brace axioms", false, Some(e.to_string()));
            Ok(Outcome::Fails)
        }
        Ok(wb) => {
            let semibrace = check_semibrace_form(&wb);
            let structural = structural_report(&wb);
            let componentwise = ybe::check_componentwise(&wb);
            let regularity = ybe::regularity_report(&wb).map_err(core_err)?;
            report::verify(
                cli.json,
                &wb,
                &semibrace,
                &structural,
                &componentwise,
                &regularity,
            );
            let all = semibrace.all_hold()
                && structural.all_hold()
                && componentwise.all_hold()
                && regularity.all_hold();
            Ok(if all { Outcome::Holds } else { Outcome::Fails })
        }
    }
}

fn construct_cmd(cli: &Cli, cmd: &ConstructCommand) -> anyhow::Result<Outcome> {
    let cap = cli.max_order.unwrap_or(construct::DEFAULT_PRODUCT_CAP);
    let built: Result<WeakBrace, CoreError> = match cmd {
        ConstructCommand::Trivial { file } => as_inverse_semigroup(&load_table(file)?)
            .and_then(|v| construct::trivial_wb(&v)),
        ConstructCommand::AlmostTrivial { file } => as_inverse_semigroup(&load_table(file)?)
            .and_then(|v| construct::almost_trivial_wb(&v)),
        ConstructCommand::Product { kind, s, t, hom } => {
            let sv = as_inverse_semigroup(&load_table(s)?);
            let tv = as_inverse_semigroup(&load_table(t)?);
            match (sv, tv) {
                (Ok(sv), Ok(tv)) => {
                    let family = match hom {
                        Some(path) => {
                            let maps: Vec<Vec<usize>> = serde_json::from_str(&read(path)?)
                                .context("homomorphism file must be a JSON array of permutations")?;
                            Some(ActionFamily::raw(maps, tv.order()))
                        }
                        None => None,
                    };
                    construct::example_product(*kind, &sv, &tv, family.as_ref())
                }
                (Err(e), _) | (_, Err(e)) => Err(e),
            }
        }
        ConstructCommand::Matched { file } => match load_doc(file)?.body {
            Body::MatchedSystem(p) => p.to_system(cap).map(|s| construct::matched_product(&s)),
            other => bail!("expected a matched-system document, found {}", kind_of(&other)),
        },
        ConstructCommand::Semidirect { file } => match load_doc(file)?.body {
            Body::MatchedSystem(p) => {
                if p.beta.is_some() {
                    bail!("semidirect systems must omit beta");
                }
                p.to_system(cap).map(|s| construct::matched_product(&s))
            }
            other => bail!("expected a matched-system document, found {}", kind_of(&other)),
        },
        ConstructCommand::Double { file } => match load_doc(file)?.body {
            Body::DoubleSystem(p) => p.to_system(cap).map(|s| construct::double_semidirect(&s)),
            other => bail!("expected a double-system document, found {}", kind_of(&other)),
        },
    };
    match built {
        Ok(wb) => {
            print_doc(Body::WeakBrace(WeakBracePayload::from_weak_brace(&wb)));
            Ok(Outcome::Holds)
        }
        Err(e @ (CoreError::Malformed(_) | CoreError::CarrierTooLarge { .. })) => Err(anyhow!(e)),
        Err(e) => {
            report::line(cli.json, "construction", false, Some(e.to_string()));
            Ok(Outcome::Fails)
        }
    }
}

fn factorize(cli: &Cli, args: &FactorizeArgs) -> anyhow::Result<Outcome> {
    let cap = cli.max_order.unwrap_or(factor::DEFAULT_FACTOR_CAP);
    let view = as_inverse_semigroup(&load_table(&args.file)?).map_err(core_err)?;
    let factorizations = factor::find_exact_factorizations(&view, cap).map_err(core_err)?;
    match args.pick {
        None => {
            report::factorizations(cli.json, view.base(), &factorizations);
            Ok(Outcome::Holds)
        }
        Some(i) => {
            let f = factorizations.get(i).ok_or_else(|| {
                anyhow!(CoreError::NoSuchFactorization {
                    index: i,
                    count: factorizations.len(),
                })
            })?;
            let wb = match args.variant {
                Variant::Circ => factor::circ_brace(f),
                Variant::Bullet => factor::bullet_brace(f),
            };
            match wb {
                Ok(wb) => {
                    print_doc(Body::WeakBrace(WeakBracePayload::from_weak_brace(&wb)));
                    Ok(Outcome::Holds)
                }
                Err(e) => {
                    report::line(cli.json, "factorization brace", false, Some(e.to_string()));
                    Ok(Outcome::Fails)
                }
            }
        }
    }
}

fn enumerate_cmd(cli: &Cli, args: &EnumerateArgs) -> anyhow::Result<Outcome> {
    let cap = cli.max_order.unwrap_or(enumerate::DEFAULT_ENUM_CAP);
    let (docs, labeled, upto) = match args.kind {
        EnumKind::InverseSemigroup => {
            let e = enumerate::enumerate_inverse_semigroups(args.order, cap).map_err(core_err)?;
            let picked = if args.labeled { &e.labeled } else { &e.reps };
            let docs: Vec<Document> = picked
                .iter()
                .map(|t| Document::new(Body::Semigroup(TablePayload::from_table(t))))
                .collect();
            (docs, e.labeled.len(), e.reps.len())
        }
        EnumKind::WeakBrace => {
            let e = enumerate::enumerate_weak_braces(args.order, cap).map_err(core_err)?;
            let picked = if args.labeled { &e.labeled } else { &e.reps };
            let docs: Vec<Document> = picked
                .iter()
                .map(|wb| Document::new(Body::WeakBrace(WeakBracePayload::from_weak_brace(wb))))
                .collect();
            (docs, e.labeled.len(), e.reps.len())
        }
    };
    println!(
        "{}",
        serde_json::to_string_pretty(&docs).expect("documents serialize")
    );
    println!("order={} labeled={} upto-iso={}", args.order, labeled, upto);
    Ok(Outcome::Holds)
}

fn demo(cli: &Cli, name: DemoName) -> anyhow::Result<()> {
    match name {
        DemoName::Trivial => {
            report::demo_trivial(cli.json);
            Ok(())
        }
        DemoName::Semidirect3x3 => report::demo_semidirect(cli.json).map_err(core_err),
        DemoName::Sym3 => report::demo_sym3(cli.json).map_err(core_err),
    }
}
