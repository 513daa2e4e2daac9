//! `hypo`: insertion, congruence queries, component exploration and counting.
//!
//! Exit codes: 0 success, 1 usage or parse error, 2 enumeration guard
//! exceeded, 3 brute-force or self-check mismatch.

use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use hypoplactic::enumeration::{
    count_iso_plac_components_brute, count_iso_plac_components_with_qrw, count_qrt,
    hypo_class_size, hypo_class_size_brute, ClassSizeQuery,
};
use hypoplactic::graph::{crystal_overlay, explore_component, highest_weight_word, GraphKind};
use hypoplactic::ribbon::{highest_weight_qrw, hypo_rsk_inverse, quasi_ribbon_tableaux};
use hypoplactic::verify;
use hypoplactic::young::plactic_congruent;
use hypoplactic::{
    hypo_congruent, hypo_rsk, rsk, BigUint, Composition, Error, Execution, Partition,
    QuasiRibbonTableau, RecordingRibbon, Word,
};

#[derive(Parser, Debug)]
#[command(
    name = "hypo",
    version,
    about = "Plactic and hypoplactic monoids, crystals and quasi-crystals"
)]
struct Cli {
    /// Alphabet bound; defaults to the largest symbol or number of parts in the input
    #[arg(short = 'n', global = true)]
    n: Option<u32>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Also compute the value by enumeration and compare
    #[arg(long, global = true)]
    brute: bool,

    /// Show the crystal component with edges that are not quasi-crystal edges dotted
    #[arg(long, global = true)]
    overlay: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Insertion {
    Plactic,
    Hypoplactic,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Kind {
    Crystal,
    Quasi,
}

impl From<Kind> for GraphKind {
    fn from(k: Kind) -> Self {
        match k {
            Kind::Crystal => GraphKind::Crystal,
            Kind::Quasi => GraphKind::QuasiCrystal,
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Relation {
    Plac,
    Hypo,
    Sim,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Insert a word, printing the tableau and its recording tableau or ribbon
    Insert {
        word: String,
        #[arg(long, value_enum, default_value_t = Insertion::Hypoplactic)]
        kind: Insertion,
    },
    /// Both correspondences for a word, or the word of a (tableau, ribbon) JSON pair
    Rsk {
        word: Option<String>,
        /// Quasi-ribbon tableau JSON, used with --recording
        #[arg(long, requires = "recording", conflicts_with = "word")]
        tableau: Option<String>,
        /// Recording ribbon JSON, used with --tableau
        #[arg(long, requires = "tableau")]
        recording: Option<String>,
    },
    /// Explore the connected component of a word
    Component {
        word: String,
        #[arg(long, value_enum, default_value_t = Kind::Quasi)]
        kind: Kind,
    },
    /// Decide a congruence or the relation of sharing a position in isomorphic components
    Congruent {
        u: String,
        v: String,
        #[arg(long, value_enum, default_value_t = Relation::Hypo)]
        relation: Relation,
    },
    /// Highest-weight word of a component, or of the quasi-ribbon words of a shape
    HighestWeight {
        word: Option<String>,
        #[arg(long, conflicts_with = "word")]
        shape: Option<String>,
        #[arg(long, value_enum, default_value_t = Kind::Quasi)]
        kind: Kind,
    },
    /// Size of a hypoplactic class with quasi-ribbon tableau of the given shape
    Classsize { shape: String },
    /// Number of quasi-ribbon tableaux of a shape
    CountQrt { shape: String },
    /// Number of crystal components of a partition shape holding a quasi-ribbon word
    CountComponents { partition: String },
    /// Run the bounded exhaustive self-checks
    Verify {
        /// Only this criterion (1-12)
        #[arg(long)]
        criterion: Option<usize>,
        #[arg(long)]
        sequential: bool,
    },
}

#[derive(Debug)]
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: 1,
            message: message.into(),
        }
    }

    fn mismatch(message: impl Into<String>) -> Self {
        Failure {
            code: 3,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::TooLarge { .. } => 2,
            _ => 1,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

/// Largest tableau count `count-qrt --brute` will enumerate.
const QRT_ENUMERATION_LIMIT: usize = 1_000_000;

type Outcome = Result<String, Failure>;

fn parse_word(s: &str) -> Result<Word, Failure> {
    Ok(s.parse::<Word>()?)
}

fn alphabet(n: Option<u32>, words: &[&Word]) -> u32 {
    n.unwrap_or_else(|| {
        words
            .iter()
            .filter_map(|w| w.max_symbol())
            .max()
            .unwrap_or(1)
    })
}

fn or_empty(s: String) -> String {
    if s.is_empty() {
        "(empty)".into()
    } else {
        s
    }
}

/// Exact integers as JSON numbers when they fit in `u64`, strings otherwise.
fn big_json(x: &BigUint) -> Value {
    let s = x.to_string();
    s.parse::<u64>()
        .map(Value::from)
        .unwrap_or(Value::String(s))
}

fn no_dot(cmd: &str) -> Failure {
    Failure::usage(format!(
        "--format dot is only available for `component`, not `{cmd}`"
    ))
}

fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Insert { word, kind } => insert(cli, word, *kind),
        Command::Rsk {
            word,
            tableau,
            recording,
        } => rsk_cmd(
            cli,
            word.as_deref(),
            tableau.as_deref(),
            recording.as_deref(),
        ),
        Command::Component { word, kind } => component(cli, word, *kind),
        Command::Congruent { u, v, relation } => congruent(cli, u, v, *relation),
        Command::HighestWeight { word, shape, kind } => {
            highest_weight(cli, word.as_deref(), shape.as_deref(), *kind)
        }
        Command::Classsize { shape } => classsize(cli, shape),
        Command::CountQrt { shape } => count_qrt_cmd(cli, shape),
        Command::CountComponents { partition } => count_components(cli, partition),
        Command::Verify {
            criterion,
            sequential,
        } => verify_cmd(cli, *criterion, *sequential),
    }
}

fn insert(cli: &Cli, word: &str, kind: Insertion) -> Outcome {
    let w = parse_word(word)?;
    match (kind, cli.format) {
        (_, Format::Dot) => Err(no_dot("insert")),
        (Insertion::Plactic, Format::Text) => {
            let (p, q) = rsk(&w);
            Ok(format!(
                "P:\n{}\nQ:\n{}\n",
                or_empty(p.to_string()),
                or_empty(q.to_string())
            ))
        }
        (Insertion::Plactic, Format::Json) => {
            let (p, q) = rsk(&w);
            Ok(json!({"kind": "plactic", "word": w, "P": p, "Q": q}).to_string() + "\n")
        }
        (Insertion::Hypoplactic, Format::Text) => {
            let (t, r) = hypo_rsk(&w);
            Ok(format!(
                "QRT:\n{}\nR:\n{}\n",
                or_empty(t.to_string()),
                or_empty(r.to_string())
            ))
        }
        (Insertion::Hypoplactic, Format::Json) => {
            let (t, r) = hypo_rsk(&w);
            Ok(json!({"kind": "hypoplactic", "word": w, "QRT": t, "R": r}).to_string() + "\n")
        }
    }
}

fn rsk_cmd(
    cli: &Cli,
    word: Option<&str>,
    tableau: Option<&str>,
    recording: Option<&str>,
) -> Outcome {
    if cli.format == Format::Dot {
        return Err(no_dot("rsk"));
    }
    if let (Some(t), Some(r)) = (tableau, recording) {
        let t: QuasiRibbonTableau =
            serde_json::from_str(t).map_err(|e| Failure::usage(format!("tableau: {e}")))?;
        let r: RecordingRibbon = serde_json::from_str(r)
            .map_err(|e| Failure::usage(format!("recording ribbon: {e}")))?;
        let w = hypo_rsk_inverse(&t, &r)?;
        return Ok(match cli.format {
            Format::Json => json!({ "word": w }).to_string() + "\n",
            _ => format!("{w}\n"),
        });
    }
    let w = parse_word(
        word.ok_or_else(|| Failure::usage("expected a word or --tableau/--recording"))?,
    )?;
    let (p, q) = rsk(&w);
    let (t, r) = hypo_rsk(&w);
    Ok(match cli.format {
        Format::Json => json!({"word": w, "P": p, "Q": q, "QRT": t, "R": r}).to_string() + "\n",
        _ => format!(
            "P:\n{}\nQ:\n{}\nQRT:\n{}\nR:\n{}\n",
            or_empty(p.to_string()),
            or_empty(q.to_string()),
            or_empty(t.to_string()),
            or_empty(r.to_string())
        ),
    })
}

fn component(cli: &Cli, word: &str, kind: Kind) -> Outcome {
    let w = parse_word(word)?;
    let n = alphabet(cli.n, &[&w]);
    let (c, quasi_roots) = if cli.overlay {
        let o = crystal_overlay(&w, n)?;
        let roots: Vec<Word> = o.quasi_roots().into_iter().cloned().collect();
        (o.crystal().clone(), Some(roots))
    } else {
        (explore_component(&w, n, kind.into())?, None)
    };
    Ok(match cli.format {
        Format::Dot => c.to_dot(cli.overlay),
        Format::Json => serde_json::to_string(&c).expect("component serializes") + "\n",
        Format::Text => {
            let mut out = String::new();
            let _ = writeln!(out, "kind: {}", c.kind());
            let _ = writeln!(out, "n: {}", c.n());
            let _ = writeln!(out, "root: {}", c.root());
            let _ = writeln!(out, "vertices: {}", c.len());
            if let Some(roots) = quasi_roots {
                let roots: Vec<String> = roots.iter().map(Word::to_string).collect();
                let _ = writeln!(out, "quasi-crystal roots: {}", roots.join(" "));
            }
            for e in c.edges() {
                let mark = if cli.overlay && !e.quasi {
                    " (crystal only)"
                } else {
                    ""
                };
                let _ = writeln!(out, "{} -{}-> {}{mark}", e.from, e.label, e.to);
            }
            out
        }
    })
}

fn congruent(cli: &Cli, u: &str, v: &str, relation: Relation) -> Outcome {
    if cli.format == Format::Dot {
        return Err(no_dot("congruent"));
    }
    let (u, v) = (parse_word(u)?, parse_word(v)?);
    let n = alphabet(cli.n, &[&u, &v]);
    let (verdict, roots) = match relation {
        Relation::Plac => (plactic_congruent(&u, &v), None),
        Relation::Hypo => (hypo_congruent(&u, &v), None),
        Relation::Sim => {
            let verdict = hypoplactic::graph::sim_related(&u, &v, n)?;
            let ru = highest_weight_word(&u, n, GraphKind::QuasiCrystal)?;
            let rv = highest_weight_word(&v, n, GraphKind::QuasiCrystal)?;
            (verdict, Some((ru, rv)))
        }
    };
    Ok(match cli.format {
        Format::Json => {
            let mut obj = json!({"relation": format!("{relation:?}").to_lowercase(), "u": u, "v": v, "congruent": verdict});
            if let Some((ru, rv)) = roots {
                obj["highest_weight"] = json!([ru, rv]);
            }
            obj.to_string() + "\n"
        }
        _ => {
            let mut out = format!("{verdict}\n");
            if let Some((ru, rv)) = roots {
                let _ = writeln!(out, "highest-weight: {ru} {rv}");
            }
            out
        }
    })
}

fn highest_weight(cli: &Cli, word: Option<&str>, shape: Option<&str>, kind: Kind) -> Outcome {
    if cli.format == Format::Dot {
        return Err(no_dot("highest-weight"));
    }
    let hw = match (word, shape) {
        (_, Some(s)) => highest_weight_qrw(&s.parse::<Composition>()?),
        (Some(word), None) => {
            let w = parse_word(word)?;
            highest_weight_word(&w, alphabet(cli.n, &[&w]), kind.into())?
        }
        (None, None) => return Err(Failure::usage("expected a word or --shape")),
    };
    Ok(match cli.format {
        Format::Json => json!({ "word": hw }).to_string() + "\n",
        _ => format!("{hw}\n"),
    })
}

/// Prints a formula value, with the enumerated value when `--brute` is given.
fn report_count(
    cli: &Cli,
    what: &str,
    input: Value,
    n: u32,
    formula: BigUint,
    brute: Option<BigUint>,
) -> Outcome {
    if let Some(b) = &brute {
        if *b != formula {
            return Err(Failure::mismatch(format!(
                "{what}: formula gives {formula} but enumeration gives {b}"
            )));
        }
    }
    Ok(match cli.format {
        Format::Dot => return Err(no_dot(what)),
        Format::Json => {
            let mut obj = json!({"input": input, "n": n, "formula": big_json(&formula)});
            if let Some(b) = &brute {
                obj["brute"] = big_json(b);
            }
            obj.to_string() + "\n"
        }
        Format::Text => match brute {
            Some(b) => format!("formula: {formula}\nbrute: {b}\n"),
            None => format!("{formula}\n"),
        },
    })
}

fn shape_alphabet(n: Option<u32>, parts: usize) -> u32 {
    n.unwrap_or(parts.max(1) as u32)
}

fn classsize(cli: &Cli, shape: &str) -> Outcome {
    let alpha: Composition = shape.parse()?;
    let n = shape_alphabet(cli.n, alpha.len());
    let q = ClassSizeQuery::new(alpha.clone(), n);
    let brute = if cli.brute {
        Some(hypo_class_size_brute(&q)?)
    } else {
        None
    };
    report_count(
        cli,
        "classsize",
        json!(alpha),
        n,
        hypo_class_size(&q),
        brute,
    )
}

fn count_qrt_cmd(cli: &Cli, shape: &str) -> Outcome {
    let alpha: Composition = shape.parse()?;
    let n = shape_alphabet(cli.n, alpha.len());
    let formula = count_qrt(&alpha, n);
    let brute = if cli.brute {
        let size = formula.to_string().parse::<usize>().unwrap_or(usize::MAX);
        if size > QRT_ENUMERATION_LIMIT {
            return Err(Error::TooLarge {
                what: "tableau count",
                size,
                limit: QRT_ENUMERATION_LIMIT,
            }
            .into());
        }
        Some(quasi_ribbon_tableaux(&alpha, n).len().into())
    } else {
        None
    };
    report_count(cli, "count-qrt", json!(alpha), n, formula, brute)
}

fn count_components(cli: &Cli, partition: &str) -> Outcome {
    let lambda: Partition = partition.parse()?;
    let n = cli.n.unwrap_or_else(|| {
        let first = lambda.parts().first().copied().unwrap_or(0);
        (lambda.weight() - first + 1) as u32
    });
    let brute = if cli.brute {
        Some(count_iso_plac_components_brute(&lambda, n)?)
    } else {
        None
    };
    report_count(
        cli,
        "count-components",
        json!(lambda),
        n,
        count_iso_plac_components_with_qrw(&lambda, n),
        brute,
    )
}

fn verify_cmd(cli: &Cli, criterion: Option<usize>, sequential: bool) -> Outcome {
    let exec = if sequential {
        Execution::Sequential
    } else {
        Execution::Parallel
    };
    let reports = match criterion {
        Some(id) if (1..=verify::CRITERIA.len()).contains(&id) => vec![verify::run(id, exec)],
        Some(id) => return Err(Failure::usage(format!("no criterion {id}; expected 1-12"))),
        None => verify::run_all(exec),
    };
    let out = match cli.format {
        Format::Dot => return Err(no_dot("verify")),
        Format::Json => {
            let items: Vec<Value> = reports
                .iter()
                .map(
                    |r| json!({"id": r.id, "name": r.name, "passed": r.passed, "detail": r.detail}),
                )
                .collect();
            Value::Array(items).to_string() + "\n"
        }
        Format::Text => reports.iter().map(|r| format!("{r}\n")).collect(),
    };
    if reports.iter().all(|r| r.passed) {
        Ok(out)
    } else {
        print!("{out}");
        Err(Failure::mismatch("self-check failed"))
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
