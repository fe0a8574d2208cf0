//! Command-line front end: one subcommand per invocation, JSON in and out.
//!
//! Success writes a single JSON document to stdout and exits 0. Input
//! validation failures exit 2 with `{"error": code, "detail": text}` on
//! stderr; an unknown subcommand exits 64, an unknown fixture 65, a missing
//! file 66.

use crate::chance::NeutrosophicProbability;
use crate::error::Error;
use crate::expr::Expr;
use crate::fixtures;
use crate::fusion::{self, CombineScheme, FusionMode, SubjectiveNP, TNormConfig};
use crate::json;
use crate::markov::OperatorConfig;
use crate::montecarlo::{self, SimConfig};
use crate::product;
use crate::refined;
use crate::space::{NeutrosophicEvent, NeutrosophicSampleSpace};
use crate::value::Value;
use serde_json::{json, Value as Json};
use std::collections::{BTreeMap, BTreeSet};
use std::io::Write;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID_INPUT: i32 = 2;
pub const EXIT_UNKNOWN_SUBCOMMAND: i32 = 64;
pub const EXIT_UNKNOWN_FIXTURE: i32 = 65;
pub const EXIT_FILE_NOT_FOUND: i32 = 66;

/// Environment variable that overrides `--seed` for `simulate`.
pub const SEED_ENV: &str = "NEUTRO_SEED";

const USAGE: &str = "\
neutroprob <subcommand> [flags]

Subcommands:
  eval       --space FILE|--fixture NAME --event L1,L2 [--echo-space] [--exact]
  union      --space FILE|--fixture NAME --a L1,L2 --b L3,L4 [--exact]
  joint      --spaces F1,F2,..|--fixture NAME (--events \"L1;L2\" | --predicate sum=N) [--exact]
  condition  --space FILE|--fixture NAME --remove LABEL --event L1,L2 [--exact]
             | --space FILE|--fixture NAME --sequence FIRST,SECOND [--exact]
  expect     --space FILE|--fixture NAME --payoffs FILE [--exact]
  fuse       --method pcr5|scheme:<variant>|tnorm:<pair>:<mode> T,I,F T,I,F
             [--fixture NAME] [--batch FILE] [--normalize] [--exact]
  markov     --matrix FILE|--fixture NAME [--power M] [--operators eq209|eq211|eq212]
             [--normalize] [--exact]
  simulate   --space FILE|--fixture NAME --trials N --seed S [--event L1,L2] [--exact]
  integrate  --g EXPR --h EXPR --from A --to B [--panels N]
             | --f EXPR --from A1 --eps E --to B [--panels N]
  refine     --triple T,I,F --t-weights W,.. --i-weights W,.. --f-weights W,.. [--exact]
             | --coarsen (--refined FILE | --fixture NAME) [--exact]
  classify   T,I,F | --fixture NAME

Standalone flags:
  --fixtures      list the named example inputs
  --typo-ledger   print the ledger of source-material inconsistencies

scheme variants: very-pessimistic less-pessimistic less-optimistic very-optimistic
tnorm pairs: min-max product-sum lukasiewicz; modes: pessimistic optimistic
NEUTRO_SEED overrides --seed.
";

struct Failure {
    exit_code: i32,
    code: String,
    detail: String,
}

impl Failure {
    fn new(exit_code: i32, code: &str, detail: impl Into<String>) -> Failure {
        Failure {
            exit_code,
            code: code.into(),
            detail: detail.into(),
        }
    }

    fn usage(detail: impl Into<String>) -> Failure {
        Failure::new(EXIT_INVALID_INPUT, "usage", detail)
    }

    fn unknown_fixture(name: &str) -> Failure {
        Failure::new(
            EXIT_UNKNOWN_FIXTURE,
            "unknown-fixture",
            format!("no fixture named {name:?} for this subcommand"),
        )
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure::new(EXIT_INVALID_INPUT, e.code(), e.to_string())
    }
}

type CliResult = Result<Json, Failure>;

const BOOL_FLAGS: [&str; 7] = [
    "exact",
    "normalize",
    "echo-space",
    "coarsen",
    "fixtures",
    "typo-ledger",
    "help",
];

struct Args {
    values: BTreeMap<String, String>,
    switches: BTreeSet<String>,
    positionals: Vec<String>,
}

impl Args {
    fn parse(raw: &[String]) -> Result<Args, Failure> {
        let mut values = BTreeMap::new();
        let mut switches = BTreeSet::new();
        let mut positionals = Vec::new();
        let mut iter = raw.iter();
        while let Some(arg) = iter.next() {
            if let Some(name) = arg.strip_prefix("--") {
                if BOOL_FLAGS.contains(&name) {
                    switches.insert(name.to_string());
                } else {
                    let value = iter
                        .next()
                        .ok_or_else(|| Failure::usage(format!("flag --{name} needs a value")))?;
                    values.insert(name.to_string(), value.clone());
                }
            } else {
                positionals.push(arg.clone());
            }
        }
        Ok(Args {
            values,
            switches,
            positionals,
        })
    }

    fn get(&self, name: &str) -> Option<&str> {
        self.values.get(name).map(String::as_str)
    }

    fn require(&self, name: &str) -> Result<&str, Failure> {
        self.get(name)
            .ok_or_else(|| Failure::usage(format!("missing required flag --{name}")))
    }

    fn switch(&self, name: &str) -> bool {
        self.switches.contains(name)
    }

    fn parse_num<T: std::str::FromStr>(&self, name: &str) -> Result<T, Failure> {
        self.require(name)?
            .parse()
            .map_err(|_| Failure::usage(format!("flag --{name} has a malformed value")))
    }
}

fn read_file(path: &str) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| {
        if e.kind() == std::io::ErrorKind::NotFound {
            Failure::new(
                EXIT_FILE_NOT_FOUND,
                "file-not-found",
                format!("cannot open {path:?}"),
            )
        } else {
            Failure::new(EXIT_INVALID_INPUT, "io-error", format!("{path:?}: {e}"))
        }
    })
}

fn read_json(path: &str) -> Result<Json, Failure> {
    serde_json::from_str(&read_file(path)?).map_err(|e| {
        Failure::new(
            EXIT_INVALID_INPUT,
            "parse-error",
            format!("{path:?} is not valid JSON: {e}"),
        )
    })
}

fn load_space(args: &Args) -> Result<NeutrosophicSampleSpace, Failure> {
    if let Some(name) = args.get("fixture") {
        return fixtures::fixture_space(name).ok_or_else(|| Failure::unknown_fixture(name));
    }
    let path = args.require("space")?;
    Ok(json::space_from_json(&read_json(path)?)?)
}

fn parse_labels(text: &str) -> NeutrosophicEvent {
    NeutrosophicEvent::new(
        text.split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(str::to_string),
    )
}

fn parse_scalar_triple(text: &str) -> Result<(Value, Value, Value), Failure> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    if parts.len() != 3 {
        return Err(Failure::usage(format!(
            "a triple is three comma-separated chances, got {text:?}"
        )));
    }
    let parse = |s: &str| {
        Value::parse(s).ok_or_else(|| Failure::usage(format!("bad chance {s:?} in triple")))
    };
    Ok((parse(parts[0])?, parse(parts[1])?, parse(parts[2])?))
}

fn parse_subjective(text: &str) -> Result<SubjectiveNP, Failure> {
    let (t, i, f) = parse_scalar_triple(text)?;
    Ok(SubjectiveNP::new(
        crate::chance::Chance::new(t)?,
        crate::chance::Chance::new(i)?,
        crate::chance::Chance::new(f)?,
    ))
}

fn with_class(np: &SubjectiveNP, exact: bool) -> CliResult {
    let mut out = json::subjective_to_json(np, exact);
    let class = np.to_probability().classify()?;
    out.as_object_mut()
        .expect("triple object")
        .insert("class".into(), json!(class.as_str()));
    Ok(out)
}

fn cmd_eval(args: &Args) -> CliResult {
    let space = load_space(args)?;
    let exact = args.switch("exact");
    if args.switch("echo-space") {
        return Ok(json::space_to_json(&space, exact));
    }
    let event = parse_labels(args.require("event")?);
    Ok(json::probability_to_json(&space.probability(&event)?, exact))
}

fn cmd_union(args: &Args) -> CliResult {
    let space = load_space(args)?;
    let a = parse_labels(args.require("a")?);
    let b = parse_labels(args.require("b")?);
    Ok(json::probability_to_json(
        &space.union(&a, &b)?,
        args.switch("exact"),
    ))
}

fn cmd_joint(args: &Args) -> CliResult {
    let spaces: Vec<NeutrosophicSampleSpace> = if let Some(name) = args.get("fixture") {
        fixtures::fixture_space_list(name).ok_or_else(|| Failure::unknown_fixture(name))?
    } else {
        args.require("spaces")?
            .split(',')
            .map(|path| Ok(json::space_from_json(&read_json(path.trim())?)?))
            .collect::<Result<_, Failure>>()?
    };
    let exact = args.switch("exact");
    if let Some(events_text) = args.get("events") {
        let events: Vec<NeutrosophicEvent> =
            events_text.split(';').map(parse_labels).collect();
        return Ok(json::probability_to_json(
            &product::joint(&spaces, &events)?,
            exact,
        ));
    }
    let predicate = args.require("predicate")?;
    let target: i64 = predicate
        .strip_prefix("sum=")
        .and_then(|n| n.parse().ok())
        .ok_or_else(|| {
            Failure::usage(format!("predicate must look like sum=N, got {predicate:?}"))
        })?;
    let np = product::joint_predicate(&spaces, |labels| {
        labels
            .iter()
            .map(|l| l.parse::<i64>())
            .try_fold(0i64, |acc, v| v.map(|v| acc + v))
            .map(|sum| sum == target)
            .unwrap_or(false)
    })?;
    Ok(json::probability_to_json(&np, exact))
}

fn cmd_condition(args: &Args) -> CliResult {
    let space = load_space(args)?;
    let exact = args.switch("exact");
    if let Some(sequence) = args.get("sequence") {
        // multiplication rule: draw `first` then `second` without replacement
        let (first, second) = sequence.split_once(',').ok_or_else(|| {
            Failure::usage("--sequence takes two comma-separated labels")
        })?;
        return Ok(json::probability_to_json(
            &space.multiplicative_rule(first.trim(), second.trim())?,
            exact,
        ));
    }
    let event = parse_labels(args.require("event")?);
    let removed = args.require("remove")?;
    Ok(json::probability_to_json(
        &space.conditional(&event, removed)?,
        exact,
    ))
}

fn cmd_expect(args: &Args) -> CliResult {
    let space = load_space(args)?;
    let payoffs = json::payoffs_from_json(&read_json(args.require("payoffs")?)?)?;
    let value = space.expected_value(&payoffs)?;
    Ok(json!({ "expected_value": json::value_to_json(value, args.switch("exact")) }))
}

type FuseFn = Box<dyn Fn(&SubjectiveNP, &SubjectiveNP, bool) -> Result<SubjectiveNP, Error>>;

fn parse_method(method: &str) -> Result<FuseFn, Failure> {
    if method == "pcr5" {
        return Ok(Box::new(|a, b, _| Ok(fusion::pcr5(a, b))));
    }
    if let Some(variant) = method.strip_prefix("scheme:") {
        let scheme = CombineScheme::parse(variant).ok_or_else(|| {
            Failure::usage(format!("unknown scheme variant {variant:?}"))
        })?;
        return Ok(Box::new(move |a, b, _| fusion::combine_scheme(a, b, scheme)));
    }
    if let Some(rest) = method.strip_prefix("tnorm:") {
        let (pair, mode) = rest.split_once(':').ok_or_else(|| {
            Failure::usage("tnorm method must look like tnorm:<pair>:<mode>")
        })?;
        let cfg = match pair {
            "min-max" => TNormConfig::MIN_MAX,
            "product-sum" => TNormConfig::PRODUCT_SUM,
            "lukasiewicz" => TNormConfig::LUKASIEWICZ,
            other => {
                return Err(Failure::usage(format!("unknown t-norm pair {other:?}")));
            }
        };
        let mode = match mode {
            "pessimistic" => FusionMode::Pessimistic,
            "optimistic" => FusionMode::Optimistic,
            other => {
                return Err(Failure::usage(format!("unknown fusion mode {other:?}")));
            }
        };
        return Ok(Box::new(move |a, b, normalize| {
            fusion::tnorm_fuse(a, b, &cfg, mode, normalize)
        }));
    }
    Err(Failure::usage(format!("unknown fusion method {method:?}")))
}

fn cmd_fuse(args: &Args) -> CliResult {
    let method = parse_method(args.require("method")?)?;
    let exact = args.switch("exact");
    let normalize = args.switch("normalize");
    if let Some(path) = args.get("batch") {
        let batch = read_json(path)?;
        let items = batch
            .as_array()
            .ok_or_else(|| Failure::usage("batch file must hold a JSON array"))?;
        let mut results = Vec::new();
        for item in items {
            let a = json::subjective_from_json(
                item.get("a")
                    .ok_or_else(|| Failure::usage("batch entry is missing \"a\""))?,
            )?;
            let b = json::subjective_from_json(
                item.get("b")
                    .ok_or_else(|| Failure::usage("batch entry is missing \"b\""))?,
            )?;
            results.push(with_class(&method(&a, &b, normalize)?, exact)?);
        }
        return Ok(Json::Array(results));
    }
    let (a, b) = if let Some(name) = args.get("fixture") {
        fixtures::fixture_triple_pair(name).ok_or_else(|| Failure::unknown_fixture(name))?
    } else {
        if args.positionals.len() != 2 {
            return Err(Failure::usage(
                "fuse needs two positional triples T,I,F T,I,F (or --fixture / --batch)",
            ));
        }
        (
            parse_subjective(&args.positionals[0])?,
            parse_subjective(&args.positionals[1])?,
        )
    };
    with_class(&method(&a, &b, normalize)?, exact)
}

fn cmd_markov(args: &Args) -> CliResult {
    let matrix = if let Some(name) = args.get("fixture") {
        fixtures::fixture_matrix(name).ok_or_else(|| Failure::unknown_fixture(name))?
    } else {
        json::matrix_from_json(&read_json(args.require("matrix")?)?)?
    };
    let cfg = match args.get("operators") {
        None => OperatorConfig::default(),
        Some(name) => OperatorConfig::parse(name)
            .ok_or_else(|| Failure::usage(format!("unknown operator preset {name:?}")))?,
    };
    let power: u32 = match args.get("power") {
        None => 1,
        Some(_) => args.parse_num("power")?,
    };
    let mut result = matrix.power(power, &cfg)?;
    if args.switch("normalize") {
        result = result.row_normalized()?;
    }
    Ok(json::matrix_to_json(&result, args.switch("exact")))
}

fn cmd_simulate(args: &Args) -> CliResult {
    let space = load_space(args)?;
    let trials: u64 = args.parse_num("trials")?;
    let seed: u64 = match std::env::var(SEED_ENV) {
        Ok(text) => text
            .parse()
            .map_err(|_| Failure::usage(format!("{SEED_ENV} must be a 64-bit integer")))?,
        Err(_) => args.parse_num("seed")?,
    };
    let log = montecarlo::simulate(&space, &SimConfig { seed, trials })?;
    let mut out = json!({ "log": json::log_to_json(&log) });
    if let Some(event_text) = args.get("event") {
        let event = parse_labels(event_text);
        let np = montecarlo::frequentist_np(&log, &event)?;
        out.as_object_mut()
            .expect("object")
            .insert("frequentist".into(), json::probability_to_json(&np, args.switch("exact")));
    }
    Ok(out)
}

fn cmd_integrate(args: &Args) -> CliResult {
    let panels: usize = match args.get("panels") {
        None => 1000,
        Some(_) => args.parse_num("panels")?,
    };
    if let Some(f_text) = args.get("f") {
        let f = Expr::parse(f_text)?;
        let a1: f64 = args.parse_num("from")?;
        let eps: f64 = args.parse_num("eps")?;
        let b: f64 = args.parse_num("to")?;
        let result =
            crate::integral::integrate_uncertain_lower(|x| f.eval(x), a1, eps, b, panels)?;
        let form = |e: crate::integral::IntegralEstimate| {
            json!({ "value": e.value, "indeterminacy": [0.0, e.indeterminacy_width] })
        };
        return Ok(json!({
            "minus_form": form(result.minus_form),
            "plus_form": form(result.plus_form),
        }));
    }
    let g = Expr::parse(args.require("g")?)?;
    let h = Expr::parse(args.require("h")?)?;
    let a: f64 = args.parse_num("from")?;
    let b: f64 = args.parse_num("to")?;
    let band = crate::integral::BandFunction::new(|x| g.eval(x), |x| h.eval(x));
    let result = crate::integral::integrate_band(&band, a, b, panels)?;
    Ok(json!({
        "determinate": result.determinate,
        "indeterminacy": [0.0, result.indeterminacy_width],
    }))
}

fn cmd_refine(args: &Args) -> CliResult {
    let exact = args.switch("exact");
    if args.switch("coarsen") {
        let refined = if let Some(name) = args.get("fixture") {
            fixtures::fixture_refined(name).ok_or_else(|| Failure::unknown_fixture(name))?
        } else {
            json::refined_from_json(&read_json(args.require("refined")?)?)?
        };
        return Ok(json::probability_to_json(&refined.coarsen(), exact));
    }
    let (t, i, f) = parse_scalar_triple(args.require("triple")?)?;
    let np = NeutrosophicProbability::scalar(t, i, f)?;
    let weights = |name: &str| -> Result<Vec<Value>, Failure> {
        args.require(name)?
            .split(',')
            .map(str::trim)
            .map(|s| Value::parse(s).ok_or_else(|| Failure::usage(format!("bad weight {s:?}"))))
            .collect()
    };
    let refined = refined::refine(
        &np,
        &weights("t-weights")?,
        &weights("i-weights")?,
        &weights("f-weights")?,
    )?;
    Ok(json::refined_to_json(&refined, exact))
}

fn cmd_classify(args: &Args) -> CliResult {
    let np = if let Some(name) = args.get("fixture") {
        fixtures::fixture_triple(name).ok_or_else(|| Failure::unknown_fixture(name))?
    } else {
        let text = args
            .positionals
            .first()
            .ok_or_else(|| Failure::usage("classify needs a positional triple T,I,F"))?;
        let (t, i, f) = parse_scalar_triple(text)?;
        NeutrosophicProbability::scalar(t, i, f)?
    };
    Ok(json!({ "class": np.classify()?.as_str() }))
}

fn fixtures_listing() -> Json {
    Json::Array(
        fixtures::fixtures()
            .iter()
            .map(|e| {
                json!({
                    "name": e.name,
                    "kind": e.kind.as_str(),
                    "description": e.description,
                })
            })
            .collect(),
    )
}

fn typo_ledger_listing() -> Json {
    Json::Array(
        fixtures::typo_ledger()
            .iter()
            .map(|t| {
                json!({
                    "location": t.location,
                    "printed": t.printed,
                    "recomputed": t.recomputed,
                    "note": t.note,
                })
            })
            .collect(),
    )
}

/// Runs the CLI against explicit argument and output streams; returns the
/// process exit code.
pub fn run<W: Write, E: Write>(raw_args: &[String], out: &mut W, err: &mut E) -> i32 {
    let result: CliResult = (|| {
        let args = Args::parse(raw_args)?;
        if args.switch("help") {
            return Ok(json!({ "usage": USAGE }));
        }
        if args.switch("fixtures") && args.positionals.is_empty() {
            return Ok(fixtures_listing());
        }
        if args.switch("typo-ledger") && args.positionals.is_empty() {
            return Ok(typo_ledger_listing());
        }
        let mut positionals = args.positionals.clone();
        if positionals.is_empty() {
            return Err(Failure::usage("no subcommand given; try --help"));
        }
        let subcommand = positionals.remove(0);
        let args = Args {
            values: args.values,
            switches: args.switches,
            positionals,
        };
        match subcommand.as_str() {
            "eval" => cmd_eval(&args),
            "union" => cmd_union(&args),
            "joint" => cmd_joint(&args),
            "condition" => cmd_condition(&args),
            "expect" => cmd_expect(&args),
            "fuse" => cmd_fuse(&args),
            "markov" => cmd_markov(&args),
            "simulate" => cmd_simulate(&args),
            "integrate" => cmd_integrate(&args),
            "refine" => cmd_refine(&args),
            "classify" => cmd_classify(&args),
            other => Err(Failure::new(
                EXIT_UNKNOWN_SUBCOMMAND,
                "unknown-subcommand",
                format!("unknown subcommand {other:?}; try --help"),
            )),
        }
    })();
    match result {
        Ok(doc) => {
            let text = serde_json::to_string_pretty(&doc).expect("serializable output");
            let _ = writeln!(out, "{text}");
            EXIT_OK
        }
        Err(failure) => {
            let doc = json!({ "error": failure.code, "detail": failure.detail });
            let _ = writeln!(err, "{doc}");
            failure.exit_code
        }
    }
}

/// Entry point for the binary: reads `std::env::args`, writes to the real
/// stdout/stderr.
pub fn run_from_env() -> i32 {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(&args, &mut stdout.lock(), &mut stderr.lock())
}
