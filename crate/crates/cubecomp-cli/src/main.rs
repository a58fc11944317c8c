//! `cubecomp` — exact computations on cubes, forms and alternating pairs.
//!
//! Every subcommand prints one JSON document (default) or CSV (`--format
//! csv`). Integers are exact decimal JSON numbers; rationals are `"p/q"`
//! strings. Negative arguments may be written with a leading `-` or with an
//! `m` prefix (`m23` is −23) to sidestep flag parsing.

mod output;
mod verify;

use clap::{Parser, Subcommand, ValueEnum};
use cubecomp::altpair::{self, Sign};
use cubecomp::arith::Int;
use cubecomp::bqf;
use cubecomp::cube::{self, Cube};
use cubecomp::localcount;
use cubecomp::zeta::CoeffTable;
use cubecomp::Rational;
use num_traits::Zero;
use output::{json_int, json_rational, rational_str, Format, Output};
use serde_json::{json, Value};
use std::process::ExitCode;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
}

#[derive(Parser)]
#[command(
    name = "cubecomp",
    about = "Exact arithmetic on 2x2x2 cubes, quadratic form class groups, alternating pairs, and local orbit counts",
    long_about = None,
    after_help = "\
Numbers: integers accept a leading '-' or an 'm' prefix (m23 = -23);\n\
rationals look like 1/2, m1/2 or plain integers.\n\
\n\
CSV columns per subcommand:\n\
  classgroup   index,a,b,c\n\
  heegner      index,re,im_sq,a,b,c\n\
  cube qforms  slice,qa,qb,qc (plus invariant,P,,)\n\
  cube frompair / fuse / canonw   labelled entry rows\n\
  cube triplecheck  holds,<bool>\n\
  pfaffian     pfaffian,<value>\n\
  stabcheck    fixes,<bool>\n\
  localcount   count,<value>\n\
  zeta coeffs  n,c\n\
  zeta exponent  exponent,<value>\n\
  tabulate     d,h\n\
  verify all   name,pass,detail\n\
\n\
Environment: CUBECOMP_THREADS caps worker parallelism (default: all cores)."
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Json)]
    format: FormatArg,
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Reduced primitive forms and composition table of a discriminant.
    Classgroup {
        #[arg(allow_hyphen_values = true)]
        d: String,
    },
    /// Heegner points of a fundamental negative discriminant.
    Heegner {
        #[arg(allow_hyphen_values = true)]
        d: String,
    },
    /// Cube operations.
    #[command(subcommand)]
    Cube(CubeCmd),
    /// Fuse a cube (8 entries) into a pair of alternating forms.
    Fuse {
        #[arg(allow_hyphen_values = true, num_args = 8)]
        entries: Vec<String>,
    },
    /// Pfaffian of the alternating matrix with upper triangle r a b c d l.
    Pfaffian {
        #[arg(allow_hyphen_values = true, num_args = 6)]
        entries: Vec<String>,
    },
    /// Canonical orbit representative of a discriminant.
    Canonw {
        #[arg(allow_hyphen_values = true)]
        d: String,
    },
    /// Build the stabilizer element (a3, b3, sign) and check it fixes the
    /// canonical representative.
    Stabcheck {
        #[arg(allow_hyphen_values = true)]
        d: String,
        #[arg(allow_hyphen_values = true)]
        a3: String,
        #[arg(allow_hyphen_values = true)]
        b3: String,
        /// + or - (m1 and -1 also accepted).
        #[arg(allow_hyphen_values = true)]
        sign: String,
    },
    /// Square roots of d modulo 4·p^k.
    Localcount {
        #[arg(allow_hyphen_values = true)]
        d: String,
        p: String,
        k: u32,
    },
    /// Counting series.
    #[command(subcommand)]
    Zeta(ZetaCmd),
    /// Class numbers for fundamental discriminants in [dmin, dmax].
    Tabulate {
        #[arg(allow_hyphen_values = true)]
        dmin: String,
        #[arg(allow_hyphen_values = true)]
        dmax: String,
    },
    /// Run property suites.
    Verify {
        /// Which suite; only "all" is defined.
        what: String,
    },
}

#[derive(Subcommand)]
enum CubeCmd {
    /// The three slice forms and the invariant of a cube (8 entries).
    Qforms {
        #[arg(allow_hyphen_values = true, num_args = 8)]
        entries: Vec<String>,
    },
    /// Cube whose slice-2 and slice-3 classes are reps i and j of
    /// classgroup(d).
    Frompair {
        #[arg(allow_hyphen_values = true)]
        d: String,
        i: usize,
        j: usize,
    },
    /// Triple composition law check on a cube (8 entries).
    Triplecheck {
        #[arg(allow_hyphen_values = true, num_args = 8)]
        entries: Vec<String>,
    },
}

#[derive(Subcommand)]
enum ZetaCmd {
    /// Nonzero coefficients c(n) for n <= limit.
    Coeffs { limit: u64 },
    /// Fitted growth exponent of the partial sums up to the limit.
    Exponent { limit: u64 },
}

enum CliError {
    Parse(String),
    Domain(cubecomp::Error),
    Failed(String),
    /// The verify report still gets printed; the exit code carries the
    /// failure.
    VerifyFailed(Box<Output>),
}

impl From<cubecomp::Error> for CliError {
    fn from(e: cubecomp::Error) -> Self {
        CliError::Domain(e)
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Parse(m) => write!(f, "{m}"),
            CliError::Domain(e) => write!(f, "{e}"),
            CliError::Failed(m) => write!(f, "{m}"),
            CliError::VerifyFailed(_) => write!(f, "verification failed"),
        }
    }
}

/// Integer with optional `m` prefix for the sign.
fn parse_int(s: &str) -> Result<Int, CliError> {
    let (neg, body) = match s.strip_prefix('m') {
        Some(rest) => (true, rest),
        None => (false, s),
    };
    let v: Int = body
        .parse()
        .map_err(|_| CliError::Parse(format!("cannot parse integer '{s}'")))?;
    Ok(if neg { -v } else { v })
}

fn parse_rational(s: &str) -> Result<Rational, CliError> {
    match s.split_once('/') {
        Some((n, d)) => {
            let den = parse_int(d)?;
            if den.is_zero() {
                return Err(CliError::Parse(format!("zero denominator in '{s}'")));
            }
            Ok(Rational::new(parse_int(n)?, den))
        }
        None => Ok(Rational::from_integer(parse_int(s)?)),
    }
}

fn parse_entries<const N: usize>(items: &[String]) -> Result<[Int; N], CliError> {
    if items.len() != N {
        return Err(CliError::Parse(format!(
            "expected {N} integers, got {}",
            items.len()
        )));
    }
    let mut out: Vec<Int> = Vec::with_capacity(N);
    for s in items {
        out.push(parse_int(s)?);
    }
    Ok(out.try_into().unwrap())
}

fn form_value(f: &bqf::Bqf) -> Value {
    Value::Array(vec![json_int(&f.a), json_int(&f.b), json_int(&f.c)])
}

fn cube_value(c: &Cube) -> Value {
    Value::Array(c.entries().iter().map(|x| json_int(x)).collect())
}

fn alt4_value(m: &altpair::Alt4<Int>) -> Value {
    json!({
        "r": json_int(&m.r),
        "a": json_int(&m.a),
        "b": json_int(&m.b),
        "c": json_int(&m.c),
        "d": json_int(&m.d),
        "l": json_int(&m.l),
    })
}

fn alt4_csv(prefix: &str, m: &altpair::Alt4<Int>) -> String {
    format!(
        "{prefix},{},{},{},{},{},{}",
        m.r, m.a, m.b, m.c, m.d, m.l
    )
}

fn run(cmd: &Command) -> Result<Output, CliError> {
    match cmd {
        Command::Classgroup { d } => {
            let d = parse_int(d)?;
            let group = bqf::class_group(&d)?;
            let json = json!({
                "d": json_int(&d),
                "h": group.h(),
                "reps": Value::Array(group.reps.iter().map(form_value).collect()),
                "table": group.table,
            });
            let rows = group
                .reps
                .iter()
                .enumerate()
                .map(|(i, f)| format!("{i},{},{},{}", f.a, f.b, f.c))
                .collect();
            Ok(Output {
                json,
                csv_header: "index,a,b,c".into(),
                csv_rows: rows,
            })
        }
        Command::Heegner { d } => {
            let d = parse_int(d)?;
            let pts = bqf::heegner_points(&d)?;
            let json = json!({
                "d": json_int(&d),
                "count": pts.len(),
                "points": Value::Array(
                    pts.iter()
                        .map(|p| json!({
                            "re": json_rational(&p.re),
                            "im_sq": json_rational(&p.im_sq),
                            "form": form_value(&p.form),
                        }))
                        .collect()
                ),
            });
            let rows = pts
                .iter()
                .enumerate()
                .map(|(i, p)| {
                    format!(
                        "{i},{},{},{},{},{}",
                        rational_str(&p.re),
                        rational_str(&p.im_sq),
                        p.form.a,
                        p.form.b,
                        p.form.c
                    )
                })
                .collect();
            Ok(Output {
                json,
                csv_header: "index,re,im_sq,a,b,c".into(),
                csv_rows: rows,
            })
        }
        Command::Cube(CubeCmd::Qforms { entries }) => {
            let cube = Cube::from_entries(parse_entries::<8>(entries)?);
            let qs: Vec<bqf::Bqf> = (1..=3u8).map(|i| cube.qform(i).unwrap()).collect();
            let p = cube.invariant();
            let json = json!({
                "cube": cube_value(&cube),
                "qforms": Value::Array(qs.iter().map(form_value).collect()),
                "invariant": json_int(&p),
            });
            let mut rows: Vec<String> = qs
                .iter()
                .enumerate()
                .map(|(i, q)| format!("{},{},{},{}", i + 1, q.a, q.b, q.c))
                .collect();
            rows.push(format!("invariant,{p},,"));
            Ok(Output {
                json,
                csv_header: "slice,qa,qb,qc".into(),
                csv_rows: rows,
            })
        }
        Command::Cube(CubeCmd::Frompair { d, i, j }) => {
            let d = parse_int(d)?;
            let group = bqf::class_group(&d)?;
            let get = |k: usize| -> Result<&bqf::Bqf, CliError> {
                group.reps.get(k).ok_or_else(|| {
                    CliError::Failed(format!(
                        "class index {k} out of range (h = {})",
                        group.h()
                    ))
                })
            };
            let cube = cube::cube_from_pair(get(*i)?, get(*j)?)?;
            let json = json!({
                "d": json_int(&d),
                "i": i,
                "j": j,
                "cube": cube_value(&cube),
            });
            let row = cube
                .entries()
                .iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",");
            Ok(Output {
                json,
                csv_header: "a,b,c,d,e,f,g,h".into(),
                csv_rows: vec![row],
            })
        }
        Command::Cube(CubeCmd::Triplecheck { entries }) => {
            let cube = Cube::from_entries(parse_entries::<8>(entries)?);
            let holds = cube::triple_law_check(&cube)?;
            Ok(Output {
                json: json!({ "cube": cube_value(&cube), "holds": holds }),
                csv_header: "holds".into(),
                csv_rows: vec![holds.to_string()],
            })
        }
        Command::Fuse { entries } => {
            let cube = Cube::from_entries(parse_entries::<8>(entries)?);
            let pair = altpair::fuse(&cube);
            let q = pair.qform_pair();
            let json = json!({
                "cube": cube_value(&cube),
                "first": alt4_value(&pair.first),
                "second": alt4_value(&pair.second),
                "qform": form_value(&q),
            });
            Ok(Output {
                json,
                csv_header: "matrix,r,a,b,c,d,l".into(),
                csv_rows: vec![
                    alt4_csv("first", &pair.first),
                    alt4_csv("second", &pair.second),
                ],
            })
        }
        Command::Pfaffian { entries } => {
            let [r, a, b, c, d, l] = parse_entries::<6>(entries)?;
            let m = altpair::Alt4::new(r, a, b, c, d, l);
            let pf = m.pfaffian();
            Ok(Output {
                json: json!({ "pfaffian": json_int(&pf) }),
                csv_header: "pfaffian".into(),
                csv_rows: vec![pf.to_string()],
            })
        }
        Command::Canonw { d } => {
            let d = parse_int(d)?;
            let w = altpair::canonical_w(&d)?;
            let (disc, p0, p1) = w.invariants_h();
            let json = json!({
                "d": json_int(&d),
                "first": alt4_value(&w.first),
                "second": alt4_value(&w.second),
                "disc": json_int(&disc),
                "p0": json_int(&p0),
                "p1": json_int(&p1),
            });
            Ok(Output {
                json,
                csv_header: "matrix,r,a,b,c,d,l".into(),
                csv_rows: vec![alt4_csv("first", &w.first), alt4_csv("second", &w.second)],
            })
        }
        Command::Stabcheck { d, a3, b3, sign } => {
            let d = parse_int(d)?;
            let a3 = parse_rational(a3)?;
            let b3 = parse_rational(b3)?;
            let sign = match sign.as_str() {
                "+" | "1" | "+1" => Sign::Plus,
                "-" | "-1" | "m1" => Sign::Minus,
                other => {
                    return Err(CliError::Parse(format!(
                        "sign must be +/-/1/-1/m1, got '{other}'"
                    )))
                }
            };
            // Construction verifies the fix by exact action.
            let elem = altpair::stabilizer_element(&d, &a3, &b3, sign)?;
            let w = altpair::canonical_w(&d)?;
            let fixes = elem.act_on(&w) == w.to_rational();
            let json = json!({
                "d": json_int(&d),
                "a3": json_rational(&a3),
                "b3": json_rational(&b3),
                "sign": if sign == Sign::Plus { "+" } else { "-" },
                "fixes": fixes,
                "g1": matrix2_value(&elem.g1),
                "p": matrix4_value(&elem.p),
            });
            Ok(Output {
                json,
                csv_header: "fixes".into(),
                csv_rows: vec![fixes.to_string()],
            })
        }
        Command::Localcount { d, p, k } => {
            let d = parse_int(d)?;
            let p = parse_int(p)?;
            let count = localcount::local_orbit_count(&d, &p, *k)?;
            Ok(Output {
                json: json!({
                    "d": json_int(&d),
                    "p": json_int(&p),
                    "k": k,
                    "count": json_int(&count),
                }),
                csv_header: "count".into(),
                csv_rows: vec![count.to_string()],
            })
        }
        Command::Zeta(ZetaCmd::Coeffs { limit }) => {
            let table = CoeffTable::build(*limit);
            let mut entries = Vec::new();
            let mut rows = Vec::new();
            for n in 1..=*limit {
                let c = table.coeff(n);
                if !c.is_zero() {
                    entries.push(json!([n, json_rational(&c)]));
                    rows.push(format!("{n},{}", rational_str(&c)));
                }
            }
            Ok(Output {
                json: json!({ "limit": limit, "coeffs": Value::Array(entries) }),
                csv_header: "n,c".into(),
                csv_rows: rows,
            })
        }
        Command::Zeta(ZetaCmd::Exponent { limit }) => {
            let table = CoeffTable::build(*limit);
            let e = table.growth_exponent()?;
            let text = format!("{e:.6}");
            Ok(Output {
                json: json!({ "limit": limit, "exponent": text }),
                csv_header: "exponent".into(),
                csv_rows: vec![text],
            })
        }
        Command::Tabulate { dmin, dmax } => {
            let lo = parse_int(dmin)?;
            let hi = parse_int(dmax)?;
            if lo > hi {
                return Err(CliError::Parse("dmin must be <= dmax".into()));
            }
            let mut ds = Vec::new();
            let mut d = lo.clone();
            while d <= hi {
                if d < Int::from(0) && bqf::is_fundamental(&d) {
                    ds.push(d.clone());
                }
                d += 1;
            }
            use rayon::prelude::*;
            let hs: Vec<usize> = ds
                .par_iter()
                .map(|d| bqf::class_group(d).unwrap().h())
                .collect();
            let json = json!({
                "entries": Value::Array(
                    ds.iter()
                        .zip(&hs)
                        .map(|(d, h)| json!([json_int(d), h]))
                        .collect()
                ),
            });
            let rows = ds
                .iter()
                .zip(&hs)
                .map(|(d, h)| format!("{d},{h}"))
                .collect();
            Ok(Output {
                json,
                csv_header: "d,h".into(),
                csv_rows: rows,
            })
        }
        Command::Verify { what } => {
            if what != "all" {
                return Err(CliError::Parse(format!(
                    "unknown verify target '{what}' (expected 'all')"
                )));
            }
            let results = verify::run_all();
            let all_pass = results.iter().all(|r| r.pass);
            let json = json!({
                "all_pass": all_pass,
                "results": Value::Array(
                    results
                        .iter()
                        .map(|r| json!({
                            "name": r.name,
                            "pass": r.pass,
                            "detail": r.detail,
                        }))
                        .collect()
                ),
            });
            let rows = results
                .iter()
                .map(|r| format!("{},{},{}", r.name, r.pass, r.detail))
                .collect();
            let out = Output {
                json,
                csv_header: "name,pass,detail".into(),
                csv_rows: rows,
            };
            if !all_pass {
                // Print the report, then report failure via the exit code.
                return Err(CliError::VerifyFailed(Box::new(out)));
            }
            Ok(out)
        }
    }
}

fn matrix2_value(m: &cubecomp::QMat2) -> Value {
    Value::Array(
        (0..2)
            .map(|i| Value::Array((0..2).map(|j| json_rational(&m.e[i][j])).collect()))
            .collect(),
    )
}

fn matrix4_value(m: &cubecomp::QMat4) -> Value {
    Value::Array(
        (0..4)
            .map(|i| Value::Array((0..4).map(|j| json_rational(&m.e[i][j])).collect()))
            .collect(),
    )
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Ok(threads) = std::env::var("CUBECOMP_THREADS") {
        match threads.parse::<usize>() {
            Ok(n) if n >= 1 => {
                rayon::ThreadPoolBuilder::new()
                    .num_threads(n)
                    .build_global()
                    .ok();
            }
            _ => {
                eprintln!("CUBECOMP_THREADS must be a positive integer");
                return ExitCode::from(1);
            }
        }
    }
    let format = match cli.format {
        FormatArg::Json => Format::Json,
        FormatArg::Csv => Format::Csv,
    };
    match run(&cli.cmd) {
        Ok(out) => {
            out.print(format);
            ExitCode::SUCCESS
        }
        Err(CliError::VerifyFailed(out)) => {
            out.print(format);
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
