//! Command-line front end. [`run`] parses arguments, dispatches, writes the
//! report and returns the process exit code:
//! 0 success, 1 usage or validation error, 2 inapplicable parameters or an
//! empty search, 3 an integrality failure.

use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exact_arith::{PrimeSieve, DEFAULT_SIEVE_LIMIT};
use crate::float::BigFloat;
use crate::forms::Family;
use crate::measures::{
    compute_bound, default_n_list, extended_n_list, predicted_decay, search_params, table_rows,
    BoundKind, BoundResult, TableRow, VerificationRow, TABLE_KS,
};
use crate::omega::{compute_omega, n_constants, Interval};

#[derive(Parser, Debug)]
#[command(
    name = "irrmeasure",
    version,
    about = "Bounds on irrationality measures of sqrt(2k+1)*ln((sqrt(2k+1)-1)/(sqrt(2k+1)+1))"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Irrationality (or, with --quadratic, non-quadraticity) bound for one (k, a, b)
    Bound(BoundArgs),
    /// Bounds for a list of k with the standard (a, b) choices
    Table(TableArgs),
    /// Exact integrality and decay of the linear forms for a list of n
    Verify(VerifyArgs),
    /// The set Omega for (a, b) and the constants N1, N2
    Omega(OmegaArgs),
    /// Rank all (a, b) on a small grid by the bound they give
    Search(SearchArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Args, Debug)]
struct Output {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Significant digits printed for real numbers
    #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u32).range(1..=200))]
    digits: u32,
    /// Working precision in decimal digits
    #[arg(long, default_value_t = 60, value_parser = clap::value_parser!(u32).range(20..=2000))]
    precision: u32,
}

#[derive(Args, Debug)]
struct BoundArgs {
    #[arg(long)]
    k: u64,
    #[arg(long)]
    a: u64,
    #[arg(long)]
    b: u64,
    #[arg(long)]
    quadratic: bool,
    #[command(flatten)]
    out: Output,
}

#[derive(Args, Debug)]
struct TableArgs {
    /// The published k values 3, 5..12
    #[arg(long, conflicts_with = "k")]
    paper: bool,
    #[arg(long, value_delimiter = ',')]
    k: Vec<u64>,
    #[command(flatten)]
    out: Output,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long)]
    k: u64,
    #[arg(long)]
    a: u64,
    #[arg(long)]
    b: u64,
    /// Odd n values; defaults to 1,3,..,15
    #[arg(long, value_delimiter = ',', conflicts_with = "extended")]
    n: Vec<u64>,
    /// Use n = 1,3,..,51
    #[arg(long)]
    extended: bool,
    /// Also report X, Y, Z and the quadratic form
    #[arg(long)]
    quadratic: bool,
    #[arg(long, default_value_t = DEFAULT_SIEVE_LIMIT)]
    sieve_limit: u64,
    #[command(flatten)]
    out: Output,
}

#[derive(Args, Debug)]
struct OmegaArgs {
    #[arg(long)]
    a: u64,
    #[arg(long)]
    b: u64,
    #[command(flatten)]
    out: Output,
}

#[derive(Args, Debug)]
struct SearchArgs {
    #[arg(long)]
    k: u64,
    #[arg(long, default_value_t = 2)]
    a_max: u64,
    #[arg(long, default_value_t = 15)]
    b_max: u64,
    #[arg(long)]
    quadratic: bool,
    #[command(flatten)]
    out: Output,
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let help = matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion);
            let text = e.render().to_string();
            if help {
                let _ = out.write_all(text.as_bytes());
                return 0;
            }
            let _ = err.write_all(text.as_bytes());
            return 1;
        }
    };
    let result = match cli.command {
        Command::Bound(a) => cmd_bound(&a, out),
        Command::Table(a) => cmd_table(&a, out),
        Command::Verify(a) => cmd_verify(&a, out),
        Command::Omega(a) => cmd_omega(&a, out),
        Command::Search(a) => cmd_search(&a, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

/// The exit code an error maps to.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::NotApplicable(_) => 2,
        Error::NonInteger { .. } => 3,
        _ => 1,
    }
}

fn io(e: impl std::fmt::Display) -> Error {
    Error::Domain(format!("output failed: {e}"))
}

fn sig(v: &BigFloat, digits: u32) -> String {
    v.to_sig_string(digits as usize)
}

/// A rendered number as a JSON number, falling back to a string if the
/// text does not parse as one.
fn json_num(s: &str) -> Value {
    s.parse::<serde_json::Number>()
        .map(Value::Number)
        .unwrap_or_else(|_| Value::String(s.to_string()))
}

fn check_precision(o: &Output) -> Result<()> {
    if o.precision < o.digits + 10 {
        return Err(Error::InvalidParams(format!(
            "--precision {} must exceed --digits {} by at least 10",
            o.precision, o.digits
        )));
    }
    Ok(())
}

fn kind_of(quadratic: bool) -> BoundKind {
    if quadratic {
        BoundKind::NonQuadraticity
    } else {
        BoundKind::Irrationality
    }
}

fn constant_names(kind: BoundKind) -> (&'static str, &'static str) {
    match kind {
        BoundKind::Irrationality => ("K1", "N1"),
        BoundKind::NonQuadraticity => ("K2", "N2"),
    }
}

fn write_csv(out: &mut dyn Write, header: &[&str], rows: &[Vec<String>]) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(header).map_err(io)?;
    for r in rows {
        w.write_record(r).map_err(io)?;
    }
    w.flush().map_err(io)?;
    Ok(())
}

fn write_json(out: &mut dyn Write, v: &Value) -> Result<()> {
    serde_json::to_writer_pretty(&mut *out, v).map_err(io)?;
    writeln!(out).map_err(io)
}

fn write_text_table(out: &mut dyn Write, header: &[&str], rows: &[Vec<String>]) -> Result<()> {
    let mut width: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for r in rows {
        for (w, c) in width.iter_mut().zip(r) {
            *w = (*w).max(c.chars().count());
        }
    }
    let line = |cells: Vec<&str>| {
        let last = cells.len() - 1;
        let padded: Vec<String> = cells
            .iter()
            .zip(&width)
            .enumerate()
            .map(|(i, (c, w))| {
                if i == last && header.last() == Some(&"note") {
                    c.to_string()
                } else {
                    format!("{c:>w$}", w = *w)
                }
            })
            .collect();
        padded.join("  ").trim_end().to_string()
    };
    writeln!(out, "{}", line(header.to_vec())).map_err(io)?;
    for r in rows {
        writeln!(out, "{}", line(r.iter().map(String::as_str).collect())).map_err(io)?;
    }
    Ok(())
}

fn bound_fields(r: &BoundResult, digits: u32) -> Vec<(&'static str, String)> {
    let (kn, nn) = constant_names(r.kind);
    vec![
        ("M1", sig(&r.m1, digits)),
        ("M2", sig(&r.m2, digits)),
        (kn, sig(&r.k_const, digits)),
        (nn, sig(&r.n_const, digits)),
        ("decay", sig(&r.decay, digits)),
        (
            "bound",
            r.bound.as_ref().map_or("-".to_string(), |b| sig(b, digits)),
        ),
    ]
}

fn cmd_bound(args: &BoundArgs, out: &mut dyn Write) -> Result<i32> {
    check_precision(&args.out)?;
    let family = Family::new(args.a, args.b)?;
    let kind = kind_of(args.quadratic);
    let r = compute_bound(args.k, family, kind, args.out.precision)?;
    let d = args.out.digits;
    let fields = bound_fields(&r, d);
    match args.out.format {
        Format::Text => {
            writeln!(
                out,
                "k = {}, a = {}, b = {} ({} measure)",
                r.k, family.a, family.b, r.kind
            )
            .map_err(io)?;
            if r.degenerate {
                writeln!(out, "degenerate: 2k+1 is a perfect square").map_err(io)?;
            }
            for (name, v) in &fields[..5] {
                let label = if *name == "decay" {
                    format!("M2+{}+{}", constant_names(kind).0, constant_names(kind).1)
                } else {
                    name.to_string()
                };
                writeln!(out, "  {label:<10} = {v}").map_err(io)?;
            }
            match &r.bound {
                Some(b) => writeln!(out, "bound: {}", sig(b, d)).map_err(io)?,
                None => writeln!(out, "not applicable: M2+K+N >= 0").map_err(io)?,
            }
            if !r.ladder_ok {
                writeln!(out, "warning: precision ladder disagreement").map_err(io)?;
            }
        }
        Format::Csv => {
            let mut header = vec!["k", "a", "b", "kind"];
            header.extend(fields.iter().map(|(n, _)| *n));
            header.extend(["applicable", "degenerate"]);
            let mut row = vec![
                r.k.to_string(),
                family.a.to_string(),
                family.b.to_string(),
                r.kind.to_string(),
            ];
            row.extend(fields.iter().map(|(_, v)| v.clone()));
            row.extend([r.applicable().to_string(), r.degenerate.to_string()]);
            write_csv(out, &header, &[row])?;
        }
        Format::Json => {
            let mut obj = serde_json::Map::new();
            obj.insert("k".into(), json!(r.k));
            obj.insert("a".into(), json!(family.a));
            obj.insert("b".into(), json!(family.b));
            obj.insert("kind".into(), json!(r.kind));
            for (n, v) in &fields {
                let val = if v == "-" { Value::Null } else { json_num(v) };
                obj.insert((*n).into(), val);
            }
            obj.insert("applicable".into(), json!(r.applicable()));
            obj.insert("degenerate".into(), json!(r.degenerate));
            obj.insert("ladder_ok".into(), json!(r.ladder_ok));
            write_json(out, &Value::Object(obj))?;
        }
    }
    Ok(if r.applicable() { 0 } else { 2 })
}

fn table_cells(row: &TableRow, digits: u32) -> (String, String) {
    let fmt = |r: &BoundResult| r.bound.as_ref().map_or("-".to_string(), |b| sig(b, digits));
    (fmt(&row.mu), row.mu2.as_ref().map_or("-".to_string(), fmt))
}

fn cmd_table(args: &TableArgs, out: &mut dyn Write) -> Result<i32> {
    check_precision(&args.out)?;
    let ks: Vec<u64> = if args.k.is_empty() {
        TABLE_KS.to_vec()
    } else {
        args.k.clone()
    };
    let rows = table_rows(&ks, args.out.precision)?;
    let d = args.out.digits;
    let fam_cells = |row: &TableRow| {
        let m2 = row.mu2.as_ref().map(|r| r.family);
        (
            row.mu.family.a.to_string(),
            row.mu.family.b.to_string(),
            m2.map_or(String::new(), |f| f.a.to_string()),
            m2.map_or(String::new(), |f| f.b.to_string()),
        )
    };
    let note = |row: &TableRow| {
        if row.degenerate() {
            "degenerate: 2k+1 is a perfect square".to_string()
        } else {
            String::new()
        }
    };
    match args.out.format {
        Format::Text | Format::Csv => {
            let header = ["k", "mu", "mu2", "a_mu", "b_mu", "a_mu2", "b_mu2", "note"];
            let body: Vec<Vec<String>> = rows
                .iter()
                .map(|row| {
                    let (mu, mu2) = table_cells(row, d);
                    let (a1, b1, a2, b2) = fam_cells(row);
                    vec![row.k.to_string(), mu, mu2, a1, b1, a2, b2, note(row)]
                })
                .collect();
            if args.out.format == Format::Csv {
                write_csv(out, &header, &body)?;
            } else {
                write_text_table(out, &header, &body)?;
            }
        }
        Format::Json => {
            let arr: Vec<Value> = rows
                .iter()
                .map(|row| {
                    let (mu, mu2) = table_cells(row, d);
                    let num = |s: &str| if s == "-" { Value::Null } else { json_num(s) };
                    let m2 = row.mu2.as_ref().map(|r| r.family);
                    json!({
                        "k": row.k,
                        "mu": num(&mu),
                        "mu2": num(&mu2),
                        "a_mu": row.mu.family.a,
                        "b_mu": row.mu.family.b,
                        "a_mu2": m2.map(|f| f.a),
                        "b_mu2": m2.map(|f| f.b),
                    })
                })
                .collect();
            write_json(out, &Value::Array(arr))?;
        }
    }
    Ok(0)
}

/// Long integers in text output: leading and trailing digits plus a count.
fn abbreviate(s: String) -> String {
    let digits = s.trim_start_matches('-').len();
    if digits <= 24 {
        return s;
    }
    let neg = if s.starts_with('-') { "-" } else { "" };
    let body = s.trim_start_matches('-');
    format!(
        "{neg}{}...{} ({digits} digits)",
        &body[..8],
        &body[body.len() - 8..]
    )
}

fn cmd_verify(args: &VerifyArgs, out: &mut dyn Write) -> Result<i32> {
    check_precision(&args.out)?;
    let family = Family::new(args.a, args.b)?;
    let ns = if args.extended {
        extended_n_list()
    } else if args.n.is_empty() {
        default_n_list()
    } else {
        args.n.clone()
    };
    for &n in &ns {
        crate::forms::Params::with_family(args.k, family, n)?;
    }
    let sieve = PrimeSieve::new(args.sieve_limit);
    let rows = crate::measures::verify_forms(args.k, family, &ns, args.out.precision, &sieve)?;
    let (pl, pq) = predicted_decay(args.k, family, args.out.precision)?;
    let d = args.out.digits;
    let q = args.quadratic;
    let mut header = vec!["n", "P", "Q", "ell", "ell_decay"];
    if q {
        header.extend(["X", "Y", "Z", "m", "m_decay"]);
    }
    header.push("dual_path");
    let cells = |r: &VerificationRow, short: bool| {
        let int = |v: &num_bigint::BigInt| {
            if short {
                abbreviate(v.to_string())
            } else {
                v.to_string()
            }
        };
        let f = &r.forms;
        let mut c = vec![
            r.n.to_string(),
            int(&f.p),
            int(&f.q),
            sig(&r.ell, d),
            format!("{:.*}", d as usize, r.ell_decay),
        ];
        if q {
            c.extend([
                int(&f.x),
                int(&f.y),
                int(&f.z),
                sig(&r.quad, d),
                format!("{:.*}", d as usize, r.quad_decay),
            ]);
        }
        c.push(if r.dual_path_agrees { "ok" } else { "MISMATCH" }.to_string());
        c
    };
    match args.out.format {
        Format::Text => {
            writeln!(
                out,
                "k = {}, a = {}, b = {}: all scaled quantities integral for n = {}",
                args.k,
                family.a,
                family.b,
                ns.iter().map(u64::to_string).collect::<Vec<_>>().join(",")
            )
            .map_err(io)?;
            writeln!(out, "predicted ell decay M2+K1+N1 = {}", sig(&pl, d)).map_err(io)?;
            if q {
                writeln!(out, "predicted m decay   M2+K2+N2 = {}", sig(&pq, d)).map_err(io)?;
            }
            let body: Vec<Vec<String>> = rows.iter().map(|r| cells(r, true)).collect();
            write_text_table(out, &header, &body)?;
        }
        Format::Csv => {
            let body: Vec<Vec<String>> = rows.iter().map(|r| cells(r, false)).collect();
            write_csv(out, &header, &body)?;
        }
        Format::Json => {
            let arr: Vec<Value> = rows
                .iter()
                .map(|r| {
                    let c = cells(r, false);
                    let mut obj = serde_json::Map::new();
                    for (h, v) in header.iter().zip(c) {
                        let val = match *h {
                            "n" => json!(r.n),
                            "ell" | "m" | "ell_decay" | "m_decay" => json_num(&v),
                            "dual_path" => json!(r.dual_path_agrees),
                            _ => Value::String(v),
                        };
                        obj.insert((*h).into(), val);
                    }
                    Value::Object(obj)
                })
                .collect();
            write_json(
                out,
                &json!({
                    "k": args.k,
                    "a": family.a,
                    "b": family.b,
                    "predicted_ell_decay": json_num(&sig(&pl, d)),
                    "predicted_m_decay": json_num(&sig(&pq, d)),
                    "rows": arr,
                }),
            )?;
        }
    }
    Ok(if rows.iter().all(|r| r.dual_path_agrees) {
        0
    } else {
        3
    })
}

fn interval_json(i: &Interval) -> Value {
    json!({
        "lo": i.lo.to_string(),
        "hi": i.hi.to_string(),
        "lo_closed": i.lo_closed,
        "hi_closed": i.hi_closed,
    })
}

fn cmd_omega(args: &OmegaArgs, out: &mut dyn Write) -> Result<i32> {
    check_precision(&args.out)?;
    let family = Family::new(args.a, args.b)?;
    let rep = compute_omega(family);
    let (n1, n2) = n_constants(family, &rep.omega, args.out.precision)?;
    let psi_sum = BigFloat::from_i64(family.b as i64, n1.precision()) - &n1;
    let d = args.out.digits;
    let measure = rep.omega.measure();
    match args.out.format {
        Format::Text => {
            writeln!(
                out,
                "Omega(a = {}, b = {}) = {}",
                family.a, family.b, rep.omega
            )
            .map_err(io)?;
            writeln!(out, "measure   = {measure}").map_err(io)?;
            writeln!(out, "psi sum   = {}", sig(&psi_sum, d)).map_err(io)?;
            writeln!(out, "N1        = {}", sig(&n1, d)).map_err(io)?;
            writeln!(out, "N2        = {}", sig(&n2, d)).map_err(io)?;
        }
        Format::Csv => {
            let body: Vec<Vec<String>> = rep
                .omega
                .intervals()
                .iter()
                .map(|i| {
                    vec![
                        i.lo.to_string(),
                        i.hi.to_string(),
                        i.lo_closed.to_string(),
                        i.hi_closed.to_string(),
                    ]
                })
                .collect();
            write_csv(out, &["lo", "hi", "lo_closed", "hi_closed"], &body)?;
        }
        Format::Json => {
            let parts: Vec<Value> = rep.omega.intervals().iter().map(interval_json).collect();
            write_json(
                out,
                &json!({
                    "a": family.a,
                    "b": family.b,
                    "intervals": parts,
                    "measure": measure.to_string(),
                    "psi_sum": json_num(&sig(&psi_sum, d)),
                    "N1": json_num(&sig(&n1, d)),
                    "N2": json_num(&sig(&n2, d)),
                    "denominator_bound": rep.denominator_bound,
                }),
            )?;
        }
    }
    Ok(0)
}

fn cmd_search(args: &SearchArgs, out: &mut dyn Write) -> Result<i32> {
    check_precision(&args.out)?;
    if args.k == 0 {
        return Err(Error::InvalidParams("k must be a positive integer".into()));
    }
    let kind = kind_of(args.quadratic);
    let found = search_params(args.k, args.a_max, args.b_max, kind, args.out.precision)?;
    let d = args.out.digits;
    let header = ["rank", "a", "b", "bound", "decay"];
    let body: Vec<Vec<String>> = found
        .iter()
        .enumerate()
        .map(|(i, r)| {
            vec![
                (i + 1).to_string(),
                r.family.a.to_string(),
                r.family.b.to_string(),
                sig(r.bound.as_ref().expect("applicable"), d),
                sig(&r.decay, d),
            ]
        })
        .collect();
    match args.out.format {
        Format::Text => {
            if found.is_empty() {
                writeln!(
                    out,
                    "no applicable (a, b) with a <= {}, b <= {}",
                    args.a_max, args.b_max
                )
                .map_err(io)?;
            } else {
                write_text_table(out, &header, &body)?;
            }
        }
        Format::Csv => write_csv(out, &header, &body)?,
        Format::Json => {
            let arr: Vec<Value> = body
                .iter()
                .map(|c| {
                    json!({
                        "rank": c[0].parse::<u64>().expect("rank"),
                        "a": c[1].parse::<u64>().expect("a"),
                        "b": c[2].parse::<u64>().expect("b"),
                        "bound": json_num(&c[3]),
                        "decay": json_num(&c[4]),
                    })
                })
                .collect();
            write_json(out, &Value::Array(arr))?;
        }
    }
    Ok(if found.is_empty() { 2 } else { 0 })
}
