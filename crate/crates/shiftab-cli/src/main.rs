//! `shiftab`: enumerate tableaux, run the bijections, convert to matrices and check identities.
//!
//! Exit codes: 0 success or verified equal, 1 verified unequal, 2 usage or
//! input error, 3 enumeration ceiling exceeded.

use std::fs;
use std::io::{self, Read, Write};
use std::ops::ControlFlow;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use shiftab::asm::{asm_to_st, compass, count_asm, ice_edges, render_ice, row_counts, st_to_asm, AsmMatrix};
use shiftab::core_types::{mu_from_lambda, Entry, Mode, Partition, Shape, ShapeKind, StrictPartition};
use shiftab::identities::{verify_with, IdentityId, Params};
use shiftab::jdt_gl::{staircase_family, theta, theta_inv};
use shiftab::jdt_sp::{phi, phi_inv};
use shiftab::suite::{render_summary, run_suite, Depth};
use shiftab::tableau::{for_each, validate, Family, Tableau, TableauDoc, DEFAULT_CEILING};
use shiftab::tableaux_gl::{stats_gl, weight};
use shiftab::tableaux_sp::{stats_sp, weight_sp};
use shiftab::Error;

#[derive(Parser)]
#[command(
    name = "shiftab",
    version,
    about = "Shifted tableaux, jeu de taquin bijections and alternating sign matrices"
)]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Enumeration ceiling per side.
    #[arg(long, global = true, default_value_t = DEFAULT_CEILING)]
    ceiling: u64,
}

#[derive(Clone, Copy, ValueEnum)]
enum Group {
    Gl,
    Sp,
}

impl From<Group> for Mode {
    fn from(g: Group) -> Mode {
        match g {
            Group::Gl => Mode::Gl,
            Group::Sp => Mode::Sp,
        }
    }
}

#[derive(clap::Args)]
struct ShapeArgs {
    /// Number of letters.
    #[arg(long)]
    n: usize,
    /// Partition `lambda`, comma separated; shifted families use `lambda + delta`.
    #[arg(long, value_parser = parse_parts, conflicts_with = "mu")]
    lambda: Option<Parts>,
    /// Strict partition giving the shifted shape directly.
    #[arg(long, value_parser = parse_parts)]
    mu: Option<Parts>,
}

#[derive(Subcommand)]
enum Verb {
    /// List the tableaux of a family.
    Enumerate {
        #[command(flatten)]
        shape: ShapeArgs,
        #[arg(long, default_value = "ST")]
        family: String,
        #[arg(long, value_enum, default_value = "gl")]
        mode: Group,
        /// Stop after this many tableaux.
        #[arg(long)]
        limit: Option<u64>,
    },
    /// Weight and statistics of a tableau.
    Stats {
        #[arg(long = "in")]
        input: Option<String>,
        #[arg(long, value_enum, default_value = "gl")]
        mode: Group,
        #[arg(long)]
        n: Option<usize>,
    },
    /// Split a primed shifted tableau into a staircase part and an ordinary part.
    Biject {
        #[arg(value_enum)]
        group: Group,
        #[arg(long = "in")]
        input: Option<String>,
        #[arg(long)]
        n: Option<usize>,
        /// Include the list of elementary moves.
        #[arg(long)]
        trace: bool,
    },
    /// Rebuild the primed shifted tableau from a staircase part and an ordinary part.
    Invert {
        #[arg(value_enum)]
        group: Group,
        #[arg(long = "in")]
        input: Option<String>,
        #[arg(long)]
        n: Option<usize>,
    },
    /// Alternating sign matrix of an unprimed shifted tableau.
    ToAsm {
        #[arg(long = "in")]
        input: Option<String>,
        #[arg(long, value_enum, default_value = "gl")]
        mode: Group,
    },
    /// Unprimed shifted tableau of an alternating sign matrix.
    FromAsm {
        #[arg(long = "in")]
        input: Option<String>,
        /// Read the rows as a U-turn matrix.
        #[arg(long, value_enum, default_value = "gl")]
        mode: Group,
    },
    /// Compass-point matrix of a matrix or tableau.
    Compass {
        #[arg(long = "in")]
        input: Option<String>,
        #[arg(long, value_enum, default_value = "gl")]
        mode: Group,
    },
    /// Square ice picture of a matrix or tableau.
    Ice {
        #[arg(long = "in")]
        input: Option<String>,
        #[arg(long, value_enum, default_value = "gl")]
        mode: Group,
    },
    /// Number of n x n alternating sign matrices, by formula and by enumeration.
    CountAsm {
        #[arg(long)]
        n: usize,
    },
    /// Check one identity exactly.
    Verify {
        #[arg(long)]
        id: String,
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = parse_parts)]
        lambda: Option<Parts>,
        /// Matrix size for the split identity.
        #[arg(long)]
        m: Option<usize>,
    },
    /// Run the worked examples and the exhaustive checks.
    Suite {
        #[arg(long, default_value = "smoke")]
        depth: String,
    },
}

/// Comma separated parts; `0`, `()` and the empty string mean the empty partition.
#[derive(Clone, Debug)]
struct Parts(Vec<usize>);

fn parse_parts(s: &str) -> Result<Parts, String> {
    let s = s.trim().trim_start_matches('(').trim_end_matches(')');
    if s.is_empty() || s == "0" {
        return Ok(Parts(Vec::new()));
    }
    s.split(',')
        .map(|p| p.trim().parse::<usize>().map_err(|e| format!("{p:?}: {e}")))
        .collect::<Result<_, _>>()
        .map(Parts)
}

/// Failure modes mapped onto exit codes.
enum Fail {
    Unequal,
    Usage(String),
    Lib(Error),
}

impl From<Error> for Fail {
    fn from(e: Error) -> Fail {
        Fail::Lib(e)
    }
}

impl From<serde_json::Error> for Fail {
    fn from(e: serde_json::Error) -> Fail {
        Fail::Usage(format!("bad JSON: {e}"))
    }
}

type Out = Result<(), Fail>;

fn read_input(path: &Option<String>) -> Result<String, Fail> {
    match path.as_deref() {
        None | Some("-") => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s).map_err(|e| Fail::Usage(format!("stdin: {e}")))?;
            Ok(s)
        }
        Some(p) => fs::read_to_string(p).map_err(|e| Fail::Usage(format!("{p}: {e}"))),
    }
}

/// A tableau given either as a full document or as bare rows (read as shifted).
fn tableau_from(v: &Value, default_kind: ShapeKind) -> Result<(Tableau, Option<usize>), Fail> {
    if v.get("shape").is_some() {
        let doc: TableauDoc = serde_json::from_value(v.clone())?;
        return Ok((doc.tableau()?, Some(doc.n)));
    }
    let rows_value = v.get("rows").unwrap_or(v);
    let rows: Vec<Vec<Entry>> = serde_json::from_value(rows_value.clone())?;
    let kind = match v.get("shifted").and_then(Value::as_bool) {
        Some(true) => ShapeKind::Shifted,
        Some(false) => ShapeKind::Ordinary,
        None => default_kind,
    };
    if rows.is_empty() {
        return Ok((Tableau::empty(kind), v.get("n").and_then(Value::as_u64).map(|n| n as usize)));
    }
    Ok((Tableau::from_rows(kind, rows)?, v.get("n").and_then(Value::as_u64).map(|n| n as usize)))
}

fn largest_letter(t: &Tableau) -> usize {
    t.cells().map(|(_, e)| e.letter as usize).max().unwrap_or(0)
}

fn letters(t: &Tableau, given: Option<usize>, from_doc: Option<usize>) -> usize {
    given.or(from_doc).unwrap_or_else(|| largest_letter(t).max(t.shape.num_rows()))
}

fn doc(t: &Tableau, family: Family, mode: Mode, n: usize) -> Value {
    serde_json::to_value(TableauDoc::new(t, family, mode, n)).expect("tableau serializes")
}

fn print_json(v: &impl serde::Serialize) -> Out {
    // A closed pipe (e.g. `| head`) is not an error worth reporting.
    let _ = writeln!(io::stdout().lock(), "{}", serde_json::to_string_pretty(v)?);
    Ok(())
}

/// A matrix given as `{rows, mu, uturn}`, as bare integer rows, or a tableau to convert.
fn matrix_from(v: &Value, mode: Mode) -> Result<AsmMatrix, Fail> {
    let is_matrix = |v: &Value| {
        v.as_array().is_some_and(|rows| rows.iter().all(|r| r.as_array().is_some_and(|r| r.iter().all(Value::is_i64))))
    };
    if v.get("mu").is_some() && v.get("rows").is_some_and(is_matrix) {
        let a: AsmMatrix = serde_json::from_value(v.clone())?;
        a.check()?;
        return Ok(a);
    }
    if is_matrix(v) {
        let rows: Vec<Vec<i8>> = serde_json::from_value(v.clone())?;
        return Ok(AsmMatrix::infer(rows, mode == Mode::Sp)?);
    }
    let (t, _) = tableau_from(v, ShapeKind::Shifted)?;
    Ok(st_to_asm(&t, mode)?)
}

fn run(cli: Cli) -> Out {
    let json = cli.json;
    let ceiling = cli.ceiling;
    match cli.verb {
        Verb::Enumerate { shape, family, mode, limit } => {
            let family: Family = family.parse()?;
            let mode = Mode::from(mode);
            let n = shape.n;
            let sh = match (&shape.lambda, &shape.mu) {
                (_, Some(mu)) => Shape::shifted(&StrictPartition::new(mu.0.clone())?),
                (Some(l), None) => {
                    let l = Partition::new(l.0.clone())?;
                    if family.is_shifted() {
                        Shape::shifted(&mu_from_lambda(&l, n)?)
                    } else {
                        Shape::ordinary(&l)
                    }
                }
                (None, None) => return Err(Fail::Usage("give --lambda or --mu".into())),
            };
            if family.is_shifted() != sh.is_shifted() {
                return Err(Fail::Usage(format!(
                    "{family} needs a {} shape",
                    if family.is_shifted() { "shifted" } else { "ordinary" }
                )));
            }
            let cap = limit.unwrap_or(u64::MAX);
            let mut docs = Vec::new();
            let mut shown = 0u64;
            let mut exceeded = false;
            let stdout = io::stdout();
            let mut out = stdout.lock();
            for_each(&sh, family, mode, n, |t| {
                if shown >= cap {
                    return ControlFlow::Break(());
                }
                if limit.is_none() && shown >= ceiling {
                    exceeded = true;
                    return ControlFlow::Break(());
                }
                shown += 1;
                if json {
                    docs.push(TableauDoc::new(t, family, mode, n));
                } else {
                    let _ = writeln!(out, "{t}");
                }
                ControlFlow::Continue(())
            })?;
            if exceeded {
                return Err(Error::CeilingExceeded(ceiling).into());
            }
            if json {
                drop(out);
                print_json(&docs)?;
            } else {
                let _ = writeln!(out, "{shown} tableaux");
            }
            Ok(())
        }
        Verb::Stats { input, mode, n } => {
            let v: Value = serde_json::from_str(&read_input(&input)?)?;
            let (t, doc_n) = tableau_from(&v, ShapeKind::Shifted)?;
            let n = letters(&t, n, doc_n);
            let out = match Mode::from(mode) {
                Mode::Gl => {
                    let w = weight(&t, n);
                    let has_primes = t.cells().any(|(_, e)| e.primed);
                    if t.shape.is_shifted() && !has_primes {
                        json!({"weight": w, "stats": stats_gl(&t, n)?})
                    } else {
                        json!({"weight": w})
                    }
                }
                Mode::Sp => {
                    let w = weight_sp(&t, n);
                    let has_primes = t.cells().any(|(_, e)| e.primed);
                    if t.shape.is_shifted() && !has_primes {
                        json!({"weight": w, "stats": stats_sp(&t, n)?})
                    } else {
                        json!({"weight": w})
                    }
                }
            };
            if json {
                print_json(&out)
            } else {
                for (k, v) in out.as_object().expect("object") {
                    for (name, value) in v.as_object().expect("object") {
                        println!("{k}.{name} = {value}");
                    }
                }
                Ok(())
            }
        }
        Verb::Biject { group, input, n, trace } => {
            let v: Value = serde_json::from_str(&read_input(&input)?)?;
            let (p, doc_n) = tableau_from(&v, ShapeKind::Shifted)?;
            let n = n.or(doc_n).unwrap_or(p.shape.num_rows());
            let mode = Mode::from(group);
            let (stair, t, steps) = match mode {
                Mode::Gl => {
                    let r = theta(&p, n, trace)?;
                    (r.pd, r.t, r.trace)
                }
                Mode::Sp => {
                    let r = phi(&p, n, trace)?;
                    (r.qd, r.t, r.trace)
                }
            };
            let fam = staircase_family(&stair);
            let key = if fam == Family::QD { "qd" } else { "pd" };
            if json {
                let mut out = json!({ key: doc(&stair, fam, mode, n), "t": doc(&t, Family::T, mode, n) });
                if let Some(steps) = steps {
                    out["trace"] = serde_json::to_value(steps)?;
                }
                print_json(&out)
            } else {
                println!("{}:\n{stair}\nT:\n{t}", key.to_uppercase());
                if let Some(steps) = steps {
                    for s in steps {
                        println!("{}", serde_json::to_string(&s)?);
                    }
                }
                Ok(())
            }
        }
        Verb::Invert { group, input, n } => {
            let v: Value = serde_json::from_str(&read_input(&input)?)?;
            let stair_v = v
                .get("pd")
                .or_else(|| v.get("qd"))
                .ok_or_else(|| Fail::Usage("input needs \"pd\" or \"qd\"".into()))?;
            let t_v = v.get("t").ok_or_else(|| Fail::Usage("input needs \"t\"".into()))?;
            let (stair, n1) = tableau_from(stair_v, ShapeKind::Shifted)?;
            let (t, n2) = tableau_from(t_v, ShapeKind::Ordinary)?;
            let n = n.or(n1).or(n2).unwrap_or(stair.shape.num_rows());
            let mode = Mode::from(group);
            let p = match mode {
                Mode::Gl => theta_inv(&stair, &t, n)?,
                Mode::Sp => phi_inv(&stair, &t, n)?,
            };
            let fam = if staircase_family(&p) == Family::QD { Family::QST } else { Family::PST };
            if json {
                print_json(&doc(&p, fam, mode, n))
            } else {
                print!("{p}");
                Ok(())
            }
        }
        Verb::ToAsm { input, mode } => {
            let v: Value = serde_json::from_str(&read_input(&input)?)?;
            let (st, _) = tableau_from(&v, ShapeKind::Shifted)?;
            let a = st_to_asm(&st, mode.into())?;
            if json {
                print_json(&a)
            } else {
                print!("{a}");
                Ok(())
            }
        }
        Verb::FromAsm { input, mode } => {
            let v: Value = serde_json::from_str(&read_input(&input)?)?;
            let a = matrix_from(&v, mode.into())?;
            let st = asm_to_st(&a)?;
            let mode = if a.uturn { Mode::Sp } else { Mode::Gl };
            validate(&st, Family::ST, mode, a.rank())?;
            if json {
                print_json(&doc(&st, Family::ST, mode, a.rank()))
            } else {
                print!("{st}");
                Ok(())
            }
        }
        Verb::Compass { input, mode } => {
            let v: Value = serde_json::from_str(&read_input(&input)?)?;
            let a = matrix_from(&v, mode.into())?;
            let cm = compass(&a);
            if json {
                print_json(&json!({"compass": cm.rows, "row_counts": row_counts(&cm)}))
            } else {
                print!("{cm}");
                Ok(())
            }
        }
        Verb::Ice { input, mode } => {
            let v: Value = serde_json::from_str(&read_input(&input)?)?;
            let a = matrix_from(&v, mode.into())?;
            if json {
                let e = ice_edges(&a);
                let strings = |m: &Vec<Vec<char>>| {
                    m.iter().map(|r| r.iter().map(char::to_string).collect()).collect::<Vec<Vec<String>>>()
                };
                print_json(&json!({"horizontal": strings(&e.horizontal), "vertical": strings(&e.vertical)}))
            } else {
                print!("{}", render_ice(&compass(&a)));
                Ok(())
            }
        }
        Verb::CountAsm { n } => {
            if n == 0 || n > 7 {
                return Err(Fail::Usage("count-asm enumerates; use 1 <= n <= 7".into()));
            }
            let (formula, enumerated) = count_asm(n);
            if json {
                print_json(&json!({"n": n, "formula": formula.to_string(), "enumeration": enumerated}))?;
            } else {
                println!("{formula}\n{enumerated}");
            }
            if formula == enumerated.into() {
                Ok(())
            } else {
                Err(Fail::Unequal)
            }
        }
        Verb::Verify { id, n, lambda, m } => {
            let id: IdentityId = id.parse()?;
            let params = Params { n, lambda: Partition::new(lambda.map(|p| p.0).unwrap_or_default())?, m };
            let r = verify_with(id, &params, ceiling)?;
            if json {
                print_json(&r)?;
            } else {
                println!("{id} {}: {}", r.params, if r.equal { "equal" } else { "NOT equal" });
                println!("  {}", id.statement());
                println!("  lhs has {} terms, rhs has {} terms", r.lhs.num_terms(), r.rhs.num_terms());
                if let Some(d) = &r.discrepancy {
                    println!("  first difference at {}: lhs {} rhs {}", d.monomial, d.lhs, d.rhs);
                }
                if let Some(note) = &r.note {
                    println!("  {note}");
                }
            }
            if r.equal {
                Ok(())
            } else {
                Err(Fail::Unequal)
            }
        }
        Verb::Suite { depth } => {
            let depth: Depth = depth.parse()?;
            let results = run_suite(depth, ceiling)?;
            if json {
                print_json(&results)?;
            } else {
                print!("{}", render_summary(&results));
            }
            if results.iter().all(|r| r.passed) {
                Ok(())
            } else {
                Err(Fail::Unequal)
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Fail::Unequal) => ExitCode::from(1),
        Err(Fail::Usage(msg)) => {
            eprintln!("shiftab: {msg}");
            ExitCode::from(2)
        }
        Err(Fail::Lib(e @ Error::CeilingExceeded(_))) => {
            eprintln!("shiftab: {e}");
            ExitCode::from(3)
        }
        Err(Fail::Lib(e)) => {
            eprintln!("shiftab: {e}");
            ExitCode::from(2)
        }
    }
}
