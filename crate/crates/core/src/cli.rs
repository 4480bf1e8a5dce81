//! The `isg` command line. Exit codes: 0 success, 1 a checked property or
//! verification failed, 2 usage, parse, cap or budget errors.

use std::ffi::OsString;
use std::io::{Read as _, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::action;
use crate::classification::{
    check_min_semitransitive_structure, classify_min_semitransitive,
    enumerate_minimal_transitive_subsemigroups_with_cap, group_oracle_cap,
};
use crate::constructions::{
    build_brandt, build_gt, recognize_brandt, BrandtPresentation, GtPresentation,
};
use crate::error::Error;
use crate::partial_perm::{PartialPerm, PointSet};
use crate::perm_group::PermGroup;
use crate::search::{self, enumerate_subsemigroups, Dedupe, SearchConfig, SearchStatus, Target};
use crate::semigroup::Semigroup;
use crate::text::{self, Presentation};
use crate::verify::{self, VerifyConfig};

#[derive(Parser, Debug)]
#[command(
    name = "isg",
    version,
    about = "Transitive and semitransitive subsemigroups of IS_n"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Parse one element and report its canonical form, domain, range and rank.
    Parse {
        #[arg(short = 'n', long = "degree")]
        degree: usize,
        expr: String,
    },
    /// Close a set of elements under composition and print the semigroup file.
    Close {
        #[command(flatten)]
        input: Input,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Check properties of a semigroup; exit 1 unless all hold.
    Check {
        #[command(flatten)]
        input: Input,
        /// Properties to check (all when omitted).
        #[arg(short, long = "property", value_enum)]
        property: Vec<Property>,
    },
    /// Build a semigroup from presentation data.
    Build {
        #[command(subcommand)]
        kind: BuildKind,
    },
    /// Run one of the two classifications.
    Classify {
        #[command(subcommand)]
        kind: ClassifyKind,
    },
    /// Enumerate subsemigroups of IS_n.
    Search {
        #[arg(short = 'n', long = "degree")]
        degree: usize,
        /// Largest cardinality to visit.
        #[arg(long)]
        cap: Option<usize>,
        #[arg(long, value_enum, default_value_t = TargetArg::Any)]
        target: TargetArg,
        #[arg(long, value_enum, default_value_t = DedupeArg::None)]
        dedupe: DedupeArg,
        /// Largest number of closed sets to visit.
        #[arg(long, default_value_t = 5_000_000)]
        budget: u64,
        /// Keep only results containing no relabeled copy of another result.
        #[arg(long)]
        minimal: bool,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Run the acceptance checks and print one line per criterion.
    Verify {
        /// Largest degree used by the enumerative checks.
        #[arg(long, default_value_t = 6)]
        n_max: usize,
        /// Randomized cases per property suite.
        #[arg(long, default_value_t = verify::PROPERTY_CASES)]
        cases: usize,
        #[arg(long, default_value_t = verify::PROPERTY_SEED)]
        seed: u64,
    },
}

/// Elements come from a semigroup file, or inline with a degree.
#[derive(Args, Debug)]
struct Input {
    /// Semigroup file (`-` for standard input).
    #[arg(long = "in")]
    file: Option<PathBuf>,
    #[arg(short = 'n', long = "degree")]
    degree: Option<usize>,
    /// Inline elements in cycle-chain notation; closed under composition.
    exprs: Vec<String>,
}

#[derive(Subcommand, Debug)]
enum BuildKind {
    /// B(G; n/d blocks), blocks {1..d}, {d+1..2d}, ...; G given on {1..d}.
    Brandt {
        #[command(flatten)]
        group: GroupArgs,
        /// Read presentations from a file instead.
        #[arg(long = "in", conflicts_with = "generators")]
        file: Option<PathBuf>,
        /// Print the presentation instead of the elements.
        #[arg(long)]
        presentation: bool,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// (G x T^1)/I with k consecutive blocks; G given on {1..n/k}.
    Gt {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(short, long)]
        k: Option<usize>,
        #[arg(long = "in", conflicts_with = "generators")]
        file: Option<PathBuf>,
        #[arg(long)]
        presentation: bool,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args, Debug)]
struct GroupArgs {
    #[arg(short = 'n', long = "degree")]
    degree: Option<usize>,
    /// Block size; defaults to the largest point the generators move or n/k.
    #[arg(short = 'd', long)]
    block_size: Option<usize>,
    /// Group generators on {1..d}; none means the trivial group.
    #[arg(short = 'g', long = "generator")]
    generators: Vec<String>,
}

#[derive(Subcommand, Debug)]
enum ClassifyKind {
    /// Catalog of minimal transitive subsemigroups of IS_n.
    MinimalTransitive {
        #[arg(short = 'n', long = "degree")]
        degree: usize,
        /// Largest symmetric group degree to scan (default: the
        /// ISG_GROUP_ORACLE_CAP variable, else 6).
        #[arg(long)]
        cap: Option<usize>,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Recover the (G x T^1)/I presentation of a least-size semitransitive semigroup.
    MinSemitransitive {
        #[command(flatten)]
        input: Input,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum, PartialEq, Eq)]
enum Property {
    Transitive,
    Semitransitive,
    Inverse,
    Regular,
    Group,
    Brandt,
    ZeroSimple,
    Simple,
    MinimalTransitive,
    MinimalSemitransitive,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum TargetArg {
    Any,
    Transitive,
    Semitransitive,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum DedupeArg {
    None,
    Conjugation,
}

enum Failure {
    /// Exit 1.
    Property(String),
    /// Exit 2.
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Precondition(_) | Error::Structure(_) | Error::NotSemitransitive(..) | Error::NotBrandt(_) => {
                Failure::Property(e.to_string())
            }
            Error::BudgetExhausted { budget, found } => Failure::Usage(format!(
                "search incomplete: budget of {budget} closed sets exhausted after {found} matches; raise --budget"
            )),
            other => Failure::Usage(other.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type CmdResult = Result<u8, Failure>;

fn read_input_file(path: &PathBuf) -> Result<String, Failure> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        std::fs::read_to_string(path)
            .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
    }
}

fn emit(out: &mut dyn Write, path: &Option<PathBuf>, text: &str) -> Result<(), Failure> {
    match path {
        Some(p) => {
            std::fs::write(p, text).map_err(|e| Failure::Usage(format!("{}: {e}", p.display())))
        }
        None => out.write_all(text.as_bytes()).map_err(Failure::from),
    }
}

fn parse_expr(text: &str, degree: usize) -> Result<PartialPerm, Failure> {
    PartialPerm::parse(text, degree).map_err(|e| Failure::Usage(format!("'{text}': {e}")))
}

/// Elements from the input, unclosed.
fn input_elements(input: &Input) -> Result<(usize, Vec<PartialPerm>), Failure> {
    match (&input.file, input.exprs.is_empty()) {
        (Some(path), true) => Ok(text::read_elements(&read_input_file(path)?)?),
        (Some(_), false) => Err(Failure::Usage(
            "give either --in or inline elements, not both".into(),
        )),
        (None, true) => Err(Failure::Usage("no elements given".into())),
        (None, false) => {
            let degree = input
                .degree
                .ok_or_else(|| Failure::Usage("inline elements need -n/--degree".into()))?;
            let elements = input
                .exprs
                .iter()
                .map(|e| parse_expr(e, degree))
                .collect::<Result<_, _>>()?;
            Ok((degree, elements))
        }
    }
}

/// A file must already be closed; inline elements are closed first.
fn input_semigroup(input: &Input) -> Result<Semigroup, Failure> {
    let (_, elements) = input_elements(input)?;
    if input.file.is_some() {
        Ok(Semigroup::from_elements(elements)?)
    } else {
        Ok(Semigroup::closure(elements)?)
    }
}

fn point_list(set: &PointSet) -> String {
    let inner: Vec<String> = set.iter().map(|p| p.to_string()).collect();
    format!("{{{}}}", inner.join(","))
}

fn cmd_parse(out: &mut dyn Write, degree: usize, expr: &str) -> CmdResult {
    let f = parse_expr(expr, degree)?;
    writeln!(out, "canonical: {f}")?;
    writeln!(out, "dom: {}", point_list(&f.dom()))?;
    writeln!(out, "ran: {}", point_list(&f.ran()))?;
    writeln!(out, "rank: {}", f.rank())?;
    Ok(0)
}

fn cmd_close(out: &mut dyn Write, input: &Input, path: &Option<PathBuf>) -> CmdResult {
    let (_, elements) = input_elements(input)?;
    let s = Semigroup::closure(elements)?;
    emit(out, path, &text::write_semigroup(&s))?;
    Ok(0)
}

fn check_property(s: &Semigroup, p: Property) -> Result<bool, Failure> {
    Ok(match p {
        Property::Transitive => action::is_transitive(s),
        Property::Semitransitive => action::is_semitransitive(s),
        Property::Inverse => s.is_inverse_semigroup(),
        Property::Regular => s.is_regular(),
        Property::Group => s.is_group(),
        Property::Brandt => recognize_brandt(s).is_ok(),
        Property::ZeroSimple => s.is_zero_simple(),
        Property::Simple => s.is_simple(),
        Property::MinimalTransitive => {
            action::is_transitive(s)
                && search::certify_minimal_transitive(s)
                    .map_err(|e| Failure::Usage(e.to_string()))?
        }
        Property::MinimalSemitransitive => {
            action::is_semitransitive(s)
                && search::certify_minimal_semitransitive(s)
                    .map_err(|e| Failure::Usage(e.to_string()))?
        }
    })
}

fn cmd_check(out: &mut dyn Write, input: &Input, properties: &[Property]) -> CmdResult {
    let s = input_semigroup(input)?;
    let all = [
        Property::Transitive,
        Property::Semitransitive,
        Property::Inverse,
        Property::Regular,
        Property::Group,
        Property::Brandt,
        Property::ZeroSimple,
        Property::Simple,
    ];
    let list: &[Property] = if properties.is_empty() {
        &all
    } else {
        properties
    };
    writeln!(out, "size: {}", s.len())?;
    let mut ok = true;
    for &p in list {
        let holds = check_property(&s, p)?;
        ok &= holds;
        let name = p
            .to_possible_value()
            .expect("named variant")
            .get_name()
            .to_string();
        writeln!(out, "{name}: {}", if holds { "yes" } else { "no" })?;
    }
    Ok(if ok { 0 } else { 1 })
}

/// The group on `{1..d}` in degree `n`, plus `d`.
fn group_from_args(
    args: &GroupArgs,
    degree: usize,
    default_block: Option<usize>,
) -> Result<PermGroup, Failure> {
    let parsed: Vec<PartialPerm> = args
        .generators
        .iter()
        .map(|g| parse_expr(g, degree))
        .collect::<Result<_, _>>()?;
    let moved = parsed.iter().flat_map(|g| g.dom()).max();
    let d = args
        .block_size
        .or(default_block)
        .or(moved)
        .ok_or_else(|| Failure::Usage("give --block-size or a generator".into()))?;
    if d == 0 || d > degree {
        return Err(Failure::Usage(format!(
            "block size {d} out of range for degree {degree}"
        )));
    }
    let block: PointSet = (1..=d).collect();
    let gens = parsed
        .iter()
        .map(|g| {
            let fixed = block
                .iter()
                .filter(|p| g.apply(**p).is_none())
                .map(|&p| (p, p));
            let moved = g.arrows().filter(|(x, _)| block.contains(x));
            PartialPerm::from_pairs(degree, moved.chain(fixed))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(PermGroup::generate(degree, block, gens)?)
}

fn build_output(built: &[(Presentation, Semigroup)], presentation: bool) -> String {
    let mut text = String::new();
    for (i, (p, s)) in built.iter().enumerate() {
        if presentation {
            text.push_str(&text::write_presentation(p));
        } else {
            if i > 0 {
                text.push_str("---\n");
            }
            text.push_str(&text::write_semigroup(s));
        }
    }
    text
}

fn presentations_from_file(path: &PathBuf) -> Result<Vec<Presentation>, Failure> {
    let list = text::read_presentations(&read_input_file(path)?)?;
    if list.is_empty() {
        return Err(Failure::Usage(format!(
            "{}: no presentation blocks",
            path.display()
        )));
    }
    Ok(list)
}

fn cmd_build(out: &mut dyn Write, kind: &BuildKind) -> CmdResult {
    let (list, presentation, path) = match kind {
        BuildKind::Brandt {
            group,
            file,
            presentation,
            out,
        } => {
            let list = match file {
                Some(f) => presentations_from_file(f)?,
                None => {
                    let n = group
                        .degree
                        .ok_or_else(|| Failure::Usage("-n/--degree is required".into()))?;
                    let g = group_from_args(group, n, None)?;
                    let d = g.points().len();
                    let small = PermGroup::generate(
                        d,
                        g.points().clone(),
                        g.generators()
                            .iter()
                            .map(|x| PartialPerm::from_pairs(d, x.arrows()).expect("on the block")),
                    )?;
                    vec![Presentation::Brandt(BrandtPresentation::standard(
                        n, small,
                    )?)]
                }
            };
            (list, *presentation, out)
        }
        BuildKind::Gt {
            group,
            k,
            file,
            presentation,
            out,
        } => {
            let list = match file {
                Some(f) => presentations_from_file(f)?,
                None => {
                    let n = group
                        .degree
                        .ok_or_else(|| Failure::Usage("-n/--degree is required".into()))?;
                    let k = k.ok_or_else(|| Failure::Usage("-k is required".into()))?;
                    if k == 0 || n % k != 0 {
                        return Err(Failure::Usage(format!("k = {k} does not divide n = {n}")));
                    }
                    let g = group_from_args(group, n, Some(n / k))?;
                    vec![Presentation::Gt(GtPresentation::standard(n, k, g)?)]
                }
            };
            (list, *presentation, out)
        }
    };
    let built: Vec<(Presentation, Semigroup)> = list
        .into_iter()
        .map(|p| {
            let s = match &p {
                Presentation::Brandt(b) => build_brandt(b),
                Presentation::Gt(g) => build_gt(g),
                Presentation::Group(g) => g.to_semigroup(),
            };
            (p, s)
        })
        .collect();
    emit(out, path, &build_output(&built, presentation))?;
    Ok(0)
}

fn cmd_classify(out: &mut dyn Write, kind: &ClassifyKind) -> CmdResult {
    match kind {
        ClassifyKind::MinimalTransitive {
            degree,
            cap,
            out: path,
        } => {
            let cap = cap.unwrap_or_else(group_oracle_cap);
            let catalog = enumerate_minimal_transitive_subsemigroups_with_cap(*degree, cap)?;
            emit(out, path, &catalog.to_text())?;
            Ok(if catalog.len() == catalog.expected_count() {
                0
            } else {
                1
            })
        }
        ClassifyKind::MinSemitransitive { input, out: path } => {
            let s = input_semigroup(input)?;
            let report = check_min_semitransitive_structure(&s)?;
            if !report.passed() {
                writeln!(out, "structure: {report}")?;
                return Ok(1);
            }
            let p = classify_min_semitransitive(&s)?;
            let mut text = format!("# k {} |G| {}\n", p.k(), p.group().order());
            text.push_str(&text::write_presentation(&Presentation::Gt(p)));
            emit(out, path, &text)?;
            Ok(0)
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_search(
    out: &mut dyn Write,
    degree: usize,
    cap: Option<usize>,
    target: TargetArg,
    dedupe: DedupeArg,
    budget: u64,
    minimal: bool,
    path: &Option<PathBuf>,
) -> CmdResult {
    let mut cfg = SearchConfig::new(degree)
        .target(match target {
            TargetArg::Any => Target::Any,
            TargetArg::Transitive => Target::Transitive,
            TargetArg::Semitransitive => Target::SemitransitiveNotTransitive,
        })
        .dedupe(match dedupe {
            DedupeArg::None => Dedupe::None,
            DedupeArg::Conjugation => Dedupe::Conjugation,
        })
        .node_budget(budget);
    if let Some(c) = cap {
        cfg = cfg.max_cardinality(c);
    }
    let outcome = enumerate_subsemigroups(&cfg)?;
    let list = if minimal {
        search::inclusion_minimal(&outcome.semigroups)
    } else {
        outcome.semigroups
    };
    // Everything within the cap was visited, so the listing is complete for
    // the question asked.
    let complete = outcome.status != SearchStatus::BudgetTruncated;
    emit(out, path, &text::write_stream(&list, complete))?;
    Ok(0)
}

fn cmd_verify(out: &mut dyn Write, n_max: usize, cases: usize, seed: u64) -> CmdResult {
    let mut cfg = VerifyConfig::up_to(n_max);
    cfg.cases = cases;
    cfg.seed = seed;
    let results = verify::run(&cfg);
    for c in &results {
        writeln!(out, "{c}")?;
    }
    let failed = results.iter().filter(|c| !c.passed).count();
    writeln!(
        out,
        "{} of {} criteria passed",
        results.len() - failed,
        results.len()
    )?;
    Ok(if failed == 0 { 0 } else { 1 })
}

/// Runs one invocation, writing normal output to `out` and diagnostics to
/// `err`; returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{e}");
                return 2;
            }
            let _ = write!(out, "{e}");
            return 0;
        }
    };
    let result = match &cli.command {
        Command::Parse { degree, expr } => cmd_parse(out, *degree, expr),
        Command::Close { input, out: path } => cmd_close(out, input, path),
        Command::Check { input, property } => cmd_check(out, input, property),
        Command::Build { kind } => cmd_build(out, kind),
        Command::Classify { kind } => cmd_classify(out, kind),
        Command::Search {
            degree,
            cap,
            target,
            dedupe,
            budget,
            minimal,
            out: path,
        } => cmd_search(
            out, *degree, *cap, *target, *dedupe, *budget, *minimal, path,
        ),
        Command::Verify { n_max, cases, seed } => cmd_verify(out, *n_max, *cases, *seed),
    };
    match result {
        Ok(code) => code,
        Err(Failure::Property(msg)) => {
            let _ = writeln!(err, "isg: {msg}");
            1
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "isg: {msg}");
            2
        }
    }
}
