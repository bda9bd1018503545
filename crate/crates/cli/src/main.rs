use std::fmt::Write as _;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use ringhull::analysis::{self, Rat};
use ringhull::codes_ring::{parse_r_generator, span_of_r_generator, CyclicCodeR, GrayLayout};
use ringhull::codes_z4::{CyclicCodeZ4, DEFAULT_MAX_CODEWORDS};
use ringhull::cyclotomic::{factor_xn_minus_1, FactorTable};
use ringhull::tables::{self, RowStatus};
use ringhull::{Error, Z4Poly};

#[derive(Parser)]
#[command(name = "ringhull", version, about = "Hulls of cyclic codes over Z4 and Z4[v]/(v^2 - v)")]
struct Cli {
    /// Emit a single JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Largest number of codewords any enumeration may visit.
    #[arg(long, global = true, env = "RINGHULL_MAX_CODEWORDS", default_value_t = DEFAULT_MAX_CODEWORDS)]
    max_codewords: u64,

    /// Worker threads for enumeration (default: available cores).
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Factor x^n - 1 over Z4.
    Factor {
        #[arg(long)]
        n: u64,
    },
    /// Hull of the code v<p1 q1, 2 p1> + (1 - v)<p2 q2, 2 p2>.
    Hull(CodeArgs),
    /// Achievable hull types at length n.
    Types {
        #[arg(long)]
        n: u64,
    },
    /// Average 2-dimension of hulls over all codes of length n.
    Avg(AvgArgs),
    /// Gray image and Lee weight of one word over R.
    Gray {
        /// Word as "(digits)+v(digits)".
        #[arg(long)]
        word: String,
        #[arg(long, value_enum, default_value_t = Layout::Block)]
        layout: Layout,
    },
    /// Gray image parameters of a code, or of the cyclic span of one word.
    Params(ParamsArgs),
    /// Recompute a published table from the shipped golden file.
    VerifyTables {
        #[arg(long)]
        table: u8,
        /// Comma-separated 1-based row numbers.
        #[arg(long, value_delimiter = ',')]
        rows: Option<Vec<usize>>,
    },
}

#[derive(Args)]
struct CodeArgs {
    #[arg(long)]
    n: u64,
    #[arg(long)]
    p1: String,
    #[arg(long)]
    q1: String,
    #[arg(long)]
    p2: String,
    #[arg(long)]
    q2: String,
}

#[derive(Args)]
struct AvgArgs {
    #[arg(long, conflicts_with_all = ["from", "to"], required_unless_present_all = ["from", "to"])]
    n: Option<u64>,
    #[arg(long, requires = "to")]
    from: Option<u64>,
    #[arg(long, requires = "from")]
    to: Option<u64>,
    /// Also show the mean over cyclic codes over Z4.
    #[arg(long)]
    z4: bool,
    /// Also average by sweeping every code (small n only).
    #[arg(long)]
    bruteforce: bool,
}

#[derive(Args)]
struct ParamsArgs {
    #[arg(long)]
    n: u64,
    /// Generator word "(digits)+v(digits)"; replaces the p/q options.
    #[arg(long, conflicts_with_all = ["p1", "q1", "p2", "q2"])]
    generator: Option<String>,
    #[arg(long, required_unless_present = "generator")]
    p1: Option<String>,
    #[arg(long, required_unless_present = "generator")]
    q1: Option<String>,
    #[arg(long, required_unless_present = "generator")]
    p2: Option<String>,
    #[arg(long, required_unless_present = "generator")]
    q2: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Layout {
    Block,
    Interleaved,
}

impl From<Layout> for GrayLayout {
    fn from(l: Layout) -> Self {
        match l {
            Layout::Block => GrayLayout::Block,
            Layout::Interleaved => GrayLayout::Interleaved,
        }
    }
}

// Output of a subcommand: text, its JSON twin, and whether a check failed.
struct Output {
    text: String,
    json: Value,
    mismatch: bool,
}

impl Output {
    fn ok(text: String, json: Value) -> Self {
        Self { text, json, mismatch: false }
    }
}

struct Ctx {
    cap: u64,
    workers: usize,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let ctx = Ctx {
        cap: cli.max_codewords,
        workers: cli
            .threads
            .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
            .max(1),
    };
    let result = match cli.command {
        Command::Factor { n } => cmd_factor(n),
        Command::Hull(args) => cmd_hull(&ctx, &args),
        Command::Types { n } => cmd_types(n),
        Command::Avg(args) => cmd_avg(&args),
        Command::Gray { word, layout } => cmd_gray(&word, layout.into()),
        Command::Params(args) => cmd_params(&ctx, &args),
        Command::VerifyTables { table, rows } => cmd_verify(&ctx, table, rows.as_deref()),
    };
    match result {
        Ok(out) => {
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&out.json).expect("serializable"));
            } else {
                print!("{}", out.text);
            }
            if out.mismatch {
                ExitCode::from(3)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

type CmdResult = Result<Output, Error>;

fn table(n: u64) -> Result<Arc<FactorTable>, Error> {
    Ok(Arc::new(factor_xn_minus_1(n)?))
}

fn cmd_factor(n: u64) -> CmdResult {
    let t = factor_xn_minus_1(n)?;
    let json = serde_json::to_value(&t).expect("serializable");
    Ok(Output::ok(format!("{t}\n"), json))
}

fn component(t: &Arc<FactorTable>, p: &str, q: &str) -> Result<CyclicCodeZ4, Error> {
    CyclicCodeZ4::from_polys(t, &Z4Poly::parse(p)?, &Z4Poly::parse(q)?)
}

fn code_from(t: &Arc<FactorTable>, a: &CodeArgs) -> Result<CyclicCodeR, Error> {
    CyclicCodeR::new(component(t, &a.p1, &a.q1)?, component(t, &a.p2, &a.q2)?)
}

fn pqr_json(c: &CyclicCodeR) -> Value {
    json!({
        "p1": c.c1.f_poly(), "q1": c.c1.g_poly(), "r1": c.c1.h_poly(),
        "p2": c.c2.f_poly(), "q2": c.c2.g_poly(), "r2": c.c2.h_poly(),
    })
}

// Gray parameters, or the reason they were not computed.
fn gray_section(ctx: &Ctx, c: &CyclicCodeR, text: &mut String) -> Result<Value, Error> {
    match c.gray_params(ctx.cap, ctx.workers) {
        Ok(p) => {
            writeln!(text, "Gray image: {p}").unwrap();
            Ok(serde_json::to_value(p).expect("serializable"))
        }
        Err(e @ (Error::CodeTooLarge { .. } | Error::LengthTooLong(_))) => {
            let t = c.gray_type();
            writeln!(text, "Gray image: ({}, {t}, not computed: {e})", 2 * c.length()).unwrap();
            Ok(json!({ "length": 2 * c.length(), "k1": t.k1, "k2": t.k2, "distance": null, "note": e.to_string() }))
        }
        Err(e) => Err(e),
    }
}

fn cmd_hull(ctx: &Ctx, a: &CodeArgs) -> CmdResult {
    let t = table(a.n)?;
    let code = code_from(&t, a)?;
    let (hull, ty) = code.hull();
    let gens = hull.format_generators();
    let mut text = String::new();
    writeln!(
        text,
        "code: p1={} q1={} r1={} | p2={} q2={} r2={}",
        code.c1.f_poly(),
        code.c1.g_poly(),
        code.c1.h_poly(),
        code.c2.f_poly(),
        code.c2.g_poly(),
        code.c2.h_poly()
    )
    .unwrap();
    writeln!(text, "hull generators:").unwrap();
    for g in &gens {
        writeln!(text, "  {g}").unwrap();
    }
    writeln!(text, "hull type: {ty} (dim2 {})", ty.dim2()).unwrap();
    let gray = gray_section(ctx, &hull, &mut text)?;
    let json = json!({
        "n": a.n,
        "code": pqr_json(&code),
        "hull": {
            "components": pqr_json(&hull),
            "generators": gens,
            "type": ty,
            "dim2": ty.dim2(),
        },
        "gray": gray,
    });
    Ok(Output::ok(text, json))
}

fn cmd_types(n: u64) -> CmdResult {
    let e = analysis::enumerate_hull_types(n)?;
    let json = serde_json::to_value(&e).expect("serializable");
    Ok(Output::ok(e.to_string(), json))
}

fn round_odd(v: u64, up: bool, what: &str) -> u64 {
    if v % 2 == 1 {
        return v;
    }
    let r = if up { v + 1 } else { v.saturating_sub(1) };
    eprintln!("note: --{what} {v} rounded to odd {r}");
    r
}

fn cmd_avg(a: &AvgArgs) -> CmdResult {
    let ns: Vec<u64> = match (a.n, a.from, a.to) {
        (Some(n), _, _) => vec![n],
        (None, Some(from), Some(to)) => {
            let (from, to) = (round_odd(from, true, "from"), round_odd(to, false, "to"));
            (from..=to).step_by(2).collect()
        }
        _ => unreachable!("clap enforces --n or --from/--to"),
    };
    let mut text = String::new();
    let mut rows = Vec::new();
    for n in ns {
        let row = analysis::table1_row(n)?;
        let mut line = row.to_string();
        let mut value = serde_json::to_value(&row).expect("serializable");
        let mut extra = |key: &str, r: Rat| {
            write!(line, " {key}={r}").unwrap();
            value[key] = json!(r);
        };
        if a.z4 {
            extra("E_z4", analysis::average_dim2_formula_z4(n)?);
        }
        if a.bruteforce {
            extra("E_bruteforce", analysis::average_dim2_bruteforce(n, analysis::DEFAULT_MAX_CODES, 1)?);
        }
        writeln!(text, "{line}").unwrap();
        rows.push(value);
    }
    Ok(Output::ok(text, Value::Array(rows)))
}

fn digits(v: &[u8]) -> String {
    v.iter().map(|d| char::from(b'0' + d)).collect()
}

fn cmd_gray(word: &str, layout: GrayLayout) -> CmdResult {
    let w = parse_r_generator(word)?;
    let image = w.gray_map(layout);
    let lee = w.lee_weight();
    let text = format!("{}\nLee weight {lee}\n", digits(&image));
    let json = json!({ "word": w.to_string(), "layout": layout, "gray": digits(&image), "lee_weight": lee });
    Ok(Output::ok(text, json))
}

fn cmd_params(ctx: &Ctx, a: &ParamsArgs) -> CmdResult {
    let t = table(a.n)?;
    let code = match &a.generator {
        Some(g) => {
            let w = parse_r_generator(g)?;
            if w.len() != t.length() {
                return Err(Error::LengthMismatch { expected: t.length(), got: w.len() });
            }
            span_of_r_generator(&t, &w)?.code
        }
        None => {
            let get = |o: &Option<String>| o.clone().expect("clap enforces the p/q options");
            code_from(
                &t,
                &CodeArgs { n: a.n, p1: get(&a.p1), q1: get(&a.q1), p2: get(&a.p2), q2: get(&a.q2) },
            )?
        }
    };
    let ty = code.code_type();
    let mut text = String::new();
    writeln!(
        text,
        "code: p1={} q1={} r1={} | p2={} q2={} r2={}",
        code.c1.f_poly(),
        code.c1.g_poly(),
        code.c1.h_poly(),
        code.c2.f_poly(),
        code.c2.g_poly(),
        code.c2.h_poly()
    )
    .unwrap();
    writeln!(text, "type: {ty} (dim2 {})", ty.dim2()).unwrap();
    let gray = gray_section(ctx, &code, &mut text)?;
    let json = json!({ "n": a.n, "code": pqr_json(&code), "type": ty, "dim2": ty.dim2(), "gray": gray });
    Ok(Output::ok(text, json))
}

fn cmd_verify(ctx: &Ctx, id: u8, rows: Option<&[usize]>) -> CmdResult {
    let mut text = String::new();
    let (json, statuses): (Value, Vec<RowStatus>) = match id {
        1 => {
            let reports = tables::verify_table1(rows)?;
            for r in &reports {
                write!(text, "row n={:<3} {:<4} printed {}", r.printed.n, r.status, r.printed).unwrap();
                if r.status != RowStatus::Pass {
                    write!(text, " | recomputed {}", r.computed).unwrap();
                }
                writeln!(text).unwrap();
                for note in &r.notes {
                    writeln!(text, "    {note}").unwrap();
                }
            }
            let statuses = reports.iter().map(|r| r.status.clone()).collect();
            (serde_json::to_value(&reports).expect("serializable"), statuses)
        }
        2 | 3 => {
            let t = tables::code_table(id)?;
            let reports = tables::verify_code_table(&t, rows, ctx.cap, ctx.workers)?;
            for r in &reports {
                write!(text, "row {:<2} {} printed {}", r.row, r.status, r.printed).unwrap();
                match &r.computed {
                    Some(c) => write!(text, " | recomputed {c}").unwrap(),
                    None => write!(text, " | recomputed -").unwrap(),
                }
                writeln!(text).unwrap();
                if let Some(g) = &r.printed_generator {
                    let spans = if r.generator_spans_hull == Some(true) { "equals" } else { "differs from" };
                    writeln!(text, "    printed generator spans {g}, which {spans} the hull").unwrap();
                }
                for note in &r.notes {
                    writeln!(text, "    {note}").unwrap();
                }
            }
            let statuses = reports.iter().map(|r| r.status.clone()).collect();
            (serde_json::to_value(&reports).expect("serializable"), statuses)
        }
        _ => return Err(Error::MalformedRow(format!("unknown table {id} (expected 1, 2 or 3)"))),
    };
    let count = |s: RowStatus| statuses.iter().filter(|x| **x == s).count();
    let failed = count(RowStatus::Fail) + count(RowStatus::Error);
    writeln!(
        text,
        "summary: {}/{} PASS, {} FAIL, {} ERROR, {} EXPECTED-DISCREPANCY, {} SKIPPED",
        count(RowStatus::Pass),
        statuses.len(),
        count(RowStatus::Fail),
        count(RowStatus::Error),
        count(RowStatus::ExpectedDiscrepancy),
        count(RowStatus::Skipped)
    )
    .unwrap();
    let summary = json!({
        "total": statuses.len(),
        "pass": count(RowStatus::Pass),
        "fail": count(RowStatus::Fail),
        "error": count(RowStatus::Error),
        "expected_discrepancy": count(RowStatus::ExpectedDiscrepancy),
        "skipped": count(RowStatus::Skipped),
    });
    Ok(Output { text, json: json!({ "table": id, "rows": json, "summary": summary }), mismatch: failed > 0 })
}
