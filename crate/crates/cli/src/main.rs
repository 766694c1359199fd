//! Command-line front end for positroid computations.
//!
//! Subcommands: `convert` maps between representations of a positroid
//! (decorated permutation, Grassmann interval, Grassmann necklace, basis
//! list, realizing matrix) and can render a chord-diagram SVG; `analyze`
//! reports alignments, crossed alignments, codimension, and the stabilized
//! interval-free decomposition; `smooth` decides smoothness with a witness
//! when singular; `johnson` exports the Johnson graph as DOT; `transform`
//! applies the rigid transformations; `census` prints the refined counting
//! tables; `ratio` prints growth ratios of the total count.
//!
//! Exit status: 0 on success, 1 on a domain error (e.g. the input is not a
//! positroid), 2 on a usage error (bad flags or malformed JSON).

use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use decorated_perm::{
    chord_diagram_svg, DecoratedPermutation, GrassmannInterval, GrassmannNecklace, Transform,
};
use perm_core::{KSubset, Permutation};
use positroid_core::{codimension, JohnsonGraph, Positroid, RationalMatrix};

#[derive(Parser)]
#[command(name = "positroid", version, about = "Positroid variety computations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Convert between representations of a positroid.
    Convert {
        #[command(flatten)]
        input: Input,
        /// Target representation.
        #[arg(long, value_enum)]
        to: Target,
        #[arg(long)]
        pretty: bool,
        /// Permit Bruhat-interval enumeration for interval input (n ≤ 8).
        #[arg(long)]
        allow_factorial: bool,
    },
    /// Report alignments, crossed alignments, codimension, and the
    /// stabilized interval-free decomposition.
    Analyze {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        pretty: bool,
        #[arg(long)]
        allow_factorial: bool,
    },
    /// Decide smoothness of the positroid variety.
    Smooth {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        pretty: bool,
        /// Also evaluate the Bruhat-interval criterion C2 (n ≤ 8).
        #[arg(long)]
        allow_factorial: bool,
    },
    /// Export the Johnson graph on bases as DOT.
    Johnson {
        #[command(flatten)]
        input: Input,
        /// Direct each edge from the basis losing the smaller element.
        #[arg(long)]
        oriented: bool,
        #[arg(long)]
        allow_factorial: bool,
    },
    /// Apply a rigid transformation, keeping the input representation.
    Transform {
        #[command(flatten)]
        input: Input,
        /// One of: reverse, reflect, rotate, dual, shift, reversal.
        #[arg(long, value_enum)]
        op: Op,
        /// Rotation amount for rotate/shift; may be negative.
        #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
        amount: i64,
        #[arg(long)]
        pretty: bool,
        #[arg(long)]
        allow_factorial: bool,
    },
    /// Print the refined census of smooth positroid varieties at n.
    Census {
        #[arg(long)]
        n: usize,
        /// Print a single table row as CSV instead of the full JSON.
        #[arg(long, value_enum)]
        table: Option<TableId>,
        #[arg(long)]
        pretty: bool,
    },
    /// Print the growth ratio s(n+1)/s(n) to a number of significant digits.
    Ratio {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 8)]
        digits: usize,
    },
}

/// Exactly one input representation, given as inline JSON, a file path, or
/// `-` for standard input.
#[derive(Args)]
#[group(required = true, multiple = false)]
struct Input {
    /// Decorated permutation {"n":…,"w":[…],"cw":[…],"ccw":[…]}.
    #[arg(long)]
    decorated: Option<String>,
    /// Grassmann interval {"u":[…],"v":[…],"k":…}.
    #[arg(long)]
    interval: Option<String>,
    /// Grassmann necklace [[…],[…],…] of n sorted k-subsets.
    #[arg(long)]
    necklace: Option<String>,
    /// Positroid {"n":…,"k":…,"bases":[[…],…]}.
    #[arg(long)]
    positroid: Option<String>,
    /// Rational matrix [[…],…] with integer or "p/q" entries.
    #[arg(long)]
    matrix: Option<String>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Target {
    Decorated,
    Interval,
    Necklace,
    Positroid,
    Svg,
}

#[derive(Clone, Copy, ValueEnum)]
enum Op {
    /// Reverse all arcs (w ↦ w⁻¹); the positroid dual.
    Reverse,
    /// Reflect the diagram (w ↦ w₀ww₀).
    Reflect,
    /// Rotate labels by the given amount.
    Rotate,
    /// Alias of reverse, named for the matroid operation.
    Dual,
    /// Alias of rotate, named for the cyclic shift of bases.
    Shift,
    /// Ground-set reversal (reverse then reflect).
    Reversal,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableId {
    S1,
    S2,
    S3,
}

/// A failure with its intended exit status: usage errors exit 2, domain
/// errors exit 1.
enum Failure {
    Usage(String),
    Domain(String),
}

impl Failure {
    fn usage(msg: impl ToString) -> Failure {
        Failure::Usage(msg.to_string())
    }

    fn domain(msg: impl ToString) -> Failure {
        Failure::Domain(msg.to_string())
    }
}

type CliResult<T> = Result<T, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            println!("{out}");
            ExitCode::SUCCESS
        }
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

fn run(cli: Cli) -> CliResult<String> {
    match cli.command {
        Command::Convert { input, to, pretty, allow_factorial } => {
            let parsed = parse_input(&input, allow_factorial)?;
            render_target(&parsed, to, pretty)
        }
        Command::Analyze { input, pretty, allow_factorial } => {
            let w = parse_input(&input, allow_factorial)?.decorated;
            let (partition, components) = w.sif_decomposition();
            let report = AnalyzeReport {
                n: w.n(),
                k: w.k(),
                codimension: codimension(&w),
                alignments: w.alignments(),
                crossed_alignments: w.crossed_alignments(),
                sif: SifReport { blocks: partition.blocks().to_vec(), components },
            };
            Ok(render_json(&report, pretty))
        }
        Command::Smooth { input, pretty, allow_factorial } => {
            let w = parse_input(&input, allow_factorial)?.decorated;
            if allow_factorial && w.n() > 8 {
                return Err(Failure::usage("--allow-factorial is capped at n ≤ 8"));
            }
            let report = smoothness::smoothness_report(&w, allow_factorial)
                .map_err(Failure::domain)?;
            Ok(render_json(&report, pretty))
        }
        Command::Johnson { input, oriented, allow_factorial } => {
            let m = parse_input(&input, allow_factorial)?.positroid;
            Ok(JohnsonGraph::from_positroid(&m, oriented).to_dot())
        }
        Command::Transform { input, op, amount, pretty, allow_factorial } => {
            let parsed = parse_input(&input, allow_factorial)?;
            let w = &parsed.decorated;
            let z = match op {
                Op::Reverse | Op::Dual => w.transform(Transform::ReverseArcs),
                Op::Reflect => w.transform(Transform::Reflect),
                Op::Rotate | Op::Shift => w.transform(Transform::Rotate(amount)),
                Op::Reversal => {
                    w.transform(Transform::ReverseArcs).transform(Transform::Reflect)
                }
            };
            let m = Positroid::from_decorated(&z);
            let out = Parsed { decorated: z, positroid: m, tnn: None };
            render_target(&out, parsed.kind_target(&input), pretty)
        }
        Command::Census { n, table, pretty } => {
            if n == 0 {
                return Err(Failure::usage("census requires n ≥ 1"));
            }
            let c = enumeration::census(n).map_err(Failure::domain)?;
            match table {
                Some(TableId::S1) => Ok(c.s1.csv()),
                Some(TableId::S2) => Ok(c.s2.csv()),
                Some(TableId::S3) => Ok(c.s3.csv()),
                None => {
                    let coeffs = |p: &enumeration::IntPolynomial| -> Vec<String> {
                        p.coeffs().iter().map(|c| c.to_string()).collect()
                    };
                    let value = serde_json::json!({
                        "n": n,
                        "s": enumeration::smooth_count_bell(n).map_err(Failure::domain)?.to_string(),
                        "s1": c.s1.csv(),
                        "s2": c.s2.csv(),
                        "s3": c.s3.csv(),
                        "q1": coeffs(&c.s1.q_polynomial()),
                        "q2": coeffs(&c.s2.q_polynomial()),
                        "q3": coeffs(&c.s3.q_polynomial()),
                    });
                    Ok(render_json(&value, pretty))
                }
            }
        }
        Command::Ratio { n, digits } => {
            if n == 0 || digits == 0 {
                return Err(Failure::usage("ratio requires n ≥ 1 and digits ≥ 1"));
            }
            enumeration::growth_ratio(n, digits).map_err(Failure::domain)
        }
    }
}

/// The canonicalized input: always a decorated permutation and its
/// positroid, plus the total-nonnegativity flag when the input was a
/// matrix.
struct Parsed {
    decorated: DecoratedPermutation,
    positroid: Positroid,
    tnn: Option<bool>,
}

impl Parsed {
    fn kind_target(&self, input: &Input) -> Target {
        if input.interval.is_some() {
            Target::Interval
        } else if input.necklace.is_some() {
            Target::Necklace
        } else if input.positroid.is_some() || input.matrix.is_some() {
            Target::Positroid
        } else {
            Target::Decorated
        }
    }
}

fn read_source(value: &str) -> CliResult<String> {
    if value == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Failure::usage(format!("cannot read stdin: {e}")))?;
        Ok(buf)
    } else if value.trim_start().starts_with(['{', '[']) {
        Ok(value.to_string())
    } else {
        std::fs::read_to_string(value)
            .map_err(|e| Failure::usage(format!("cannot read file {value}: {e}")))
    }
}

fn parse_json(text: &str) -> CliResult<serde_json::Value> {
    serde_json::from_str(text).map_err(|e| Failure::usage(format!("malformed JSON: {e}")))
}

fn parse_subsets(value: &serde_json::Value, n: usize) -> CliResult<Vec<KSubset>> {
    let arr = value.as_array().ok_or_else(|| Failure::usage("expected an array of sets"))?;
    arr.iter()
        .map(|s| {
            let elems: Vec<usize> = serde_json::from_value(s.clone())
                .map_err(|e| Failure::usage(format!("malformed set: {e}")))?;
            KSubset::new(n, elems).map_err(Failure::usage)
        })
        .collect()
}

fn parse_perm(value: &serde_json::Value) -> CliResult<Permutation> {
    let vals: Vec<usize> = serde_json::from_value(value.clone())
        .map_err(|e| Failure::usage(format!("malformed permutation: {e}")))?;
    Permutation::from_one_line(vals).map_err(Failure::usage)
}

fn parse_input(input: &Input, allow_factorial: bool) -> CliResult<Parsed> {
    if let Some(src) = &input.decorated {
        let text = read_source(src)?;
        let w: DecoratedPermutation =
            serde_json::from_str(&text).map_err(|e| Failure::usage(format!("bad decorated permutation: {e}")))?;
        let m = Positroid::from_decorated(&w);
        return Ok(Parsed { decorated: w, positroid: m, tnn: None });
    }
    if let Some(src) = &input.interval {
        let value = parse_json(&read_source(src)?)?;
        let obj = value.as_object().ok_or_else(|| Failure::usage("interval must be an object"))?;
        let u = parse_perm(obj.get("u").ok_or_else(|| Failure::usage("interval needs \"u\""))?)?;
        let v = parse_perm(obj.get("v").ok_or_else(|| Failure::usage("interval needs \"v\""))?)?;
        let k = obj
            .get("k")
            .and_then(|k| k.as_u64())
            .ok_or_else(|| Failure::usage("interval needs integer \"k\""))? as usize;
        let iv = GrassmannInterval::new(u, v, k).map_err(Failure::domain)?;
        let w = DecoratedPermutation::from_grassmann_interval(&iv).map_err(Failure::domain)?;
        let m = if allow_factorial && iv.n() <= 8 {
            Positroid::from_interval(&iv).map_err(Failure::domain)?
        } else {
            Positroid::from_decorated(&w)
        };
        return Ok(Parsed { decorated: w, positroid: m, tnn: None });
    }
    if let Some(src) = &input.necklace {
        let value = parse_json(&read_source(src)?)?;
        let n = value.as_array().map_or(0, |a| a.len());
        let sets = parse_subsets(&value, n)?;
        let necklace = GrassmannNecklace::from_sets(sets).map_err(Failure::domain)?;
        let w = DecoratedPermutation::from_necklace(&necklace).map_err(Failure::domain)?;
        let m = Positroid::from_decorated(&w);
        return Ok(Parsed { decorated: w, positroid: m, tnn: None });
    }
    if let Some(src) = &input.positroid {
        let value = parse_json(&read_source(src)?)?;
        let obj = value.as_object().ok_or_else(|| Failure::usage("positroid must be an object"))?;
        let n = obj
            .get("n")
            .and_then(|x| x.as_u64())
            .ok_or_else(|| Failure::usage("positroid needs integer \"n\""))? as usize;
        let k = obj
            .get("k")
            .and_then(|x| x.as_u64())
            .ok_or_else(|| Failure::usage("positroid needs integer \"k\""))? as usize;
        let bases =
            parse_subsets(obj.get("bases").ok_or_else(|| Failure::usage("positroid needs \"bases\""))?, n)?;
        let m = Positroid::from_bases(n, k, &bases).map_err(Failure::domain)?;
        let w = m.decorated_permutation().map_err(Failure::domain)?;
        return Ok(Parsed { decorated: w, positroid: m, tnn: None });
    }
    if let Some(src) = &input.matrix {
        let value = parse_json(&read_source(src)?)?;
        let a = RationalMatrix::from_json(&value).map_err(Failure::usage)?;
        let (m, tnn) = a.matroid().map_err(Failure::domain)?;
        let w = m.decorated_permutation().map_err(Failure::domain)?;
        return Ok(Parsed { decorated: w, positroid: m, tnn: Some(tnn) });
    }
    Err(Failure::usage("exactly one input representation is required"))
}

fn render_json<T: Serialize>(value: &T, pretty: bool) -> String {
    if pretty {
        serde_json::to_string_pretty(value).expect("serializable")
    } else {
        serde_json::to_string(value).expect("serializable")
    }
}

/// The `analyze` output shape.
#[derive(Serialize)]
struct AnalyzeReport {
    n: usize,
    k: usize,
    codimension: usize,
    alignments: Vec<decorated_perm::Alignment>,
    crossed_alignments: Vec<decorated_perm::CrossedAlignment>,
    sif: SifReport,
}

#[derive(Serialize)]
struct SifReport {
    blocks: Vec<KSubset>,
    components: Vec<DecoratedPermutation>,
}

/// A positroid plus, for matrix input, whether the realizing matrix was
/// totally nonnegative.
#[derive(Serialize)]
struct PositroidOut<'a> {
    n: usize,
    k: usize,
    bases: Vec<KSubset>,
    #[serde(skip_serializing_if = "Option::is_none")]
    tnn: &'a Option<bool>,
}

fn render_target(parsed: &Parsed, to: Target, pretty: bool) -> CliResult<String> {
    let w = &parsed.decorated;
    Ok(match to {
        Target::Decorated => render_json(w, pretty),
        Target::Interval => render_json(&w.to_grassmann_interval(), pretty),
        Target::Necklace => render_json(&w.grassmann_necklace().sets(), pretty),
        Target::Positroid => {
            let m = &parsed.positroid;
            let out =
                PositroidOut { n: m.n(), k: m.k(), bases: m.bases(), tnn: &parsed.tnn };
            render_json(&out, pretty)
        }
        Target::Svg => chord_diagram_svg(w),
    })
}
