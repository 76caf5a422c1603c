mod report;
mod suites;

use std::collections::BTreeMap;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rook_harmonics::cache::CharacterTableCache;
use rook_harmonics::characters::{check_log_concavity_with, frobenius_from_fixed_points_with, graded_frobenius_of_model};
use rook_harmonics::combinatorics::Partition;
use rook_harmonics::ideal::{hilbert_series_oracle, hilbert_series_via_lis, shadow_monomial, standard_monomials, GradedQuotientModel};
use rook_harmonics::linalg::Rational;
use rook_harmonics::poly::{DiagonalDirection, Monomial, MonomialOrderSpec, TieBreak};
use rook_harmonics::rook::{enumerate_upper_locus, extend_to_permutation, extended_shadow_set, LocusParams, RookPlacement};
use rook_harmonics::symfunc::{grfrob_main, DoublySchurVector, GradedDoublySchurSeries};
use serde_json::{json, Value};

use report::{series_terms, ReportDocument};
use suites::{run_suite, Scale, SuiteContext, SuiteName};

#[derive(Parser)]
#[command(name = "rookharm", version, about = "Orbit harmonics of rook placement loci")]
struct Cli {
    #[command(flatten)]
    global: GlobalArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct GlobalArgs {
    /// Diagonal order direction.
    #[arg(long, global = true, value_enum, default_value_t = OrderArg::Example)]
    order: OrderArg,
    /// Order within an antidiagonal.
    #[arg(long, global = true, value_enum, default_value_t = TieBreakArg::HighRowFirst)]
    tiebreak: TieBreakArg,
    /// Verification bounds.
    #[arg(long, global = true, value_enum, default_value_t = Scale::Quick)]
    scale: Scale,
    /// Character table cache directory.
    #[arg(long, global = true, env = "CACHE_DIR")]
    cache_dir: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Clone, Copy, ValueEnum)]
enum OrderArg {
    Example,
    Definition,
}

#[derive(Clone, Copy, ValueEnum)]
enum TieBreakArg {
    HighRowFirst,
    LowRowFirst,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Args, Clone, Copy)]
struct Board {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    m: usize,
    #[arg(long)]
    r: usize,
}

#[derive(Subcommand)]
enum Command {
    /// List the placements of UZ(n, m, r).
    Enumerate {
        #[command(flatten)]
        board: Board,
        /// Only placements with exactly this many rooks.
        #[arg(long)]
        size: Option<usize>,
    },
    /// Extended shadow basis of the graded quotient.
    Basis {
        #[command(flatten)]
        board: Board,
        /// A single placement, e.g. "2,3;3,4;5,2;8,5".
        #[arg(long)]
        placement: Option<String>,
        /// Also compute standard monomials directly and compare.
        #[arg(long)]
        verify: bool,
        #[arg(long, default_value_t = 20_000)]
        max_locus: u128,
    },
    /// Hilbert series by every available route.
    Hilbert {
        #[command(flatten)]
        board: Board,
        /// Largest locus handed to the linear-algebra oracle.
        #[arg(long, default_value_t = 600)]
        oracle_max_locus: u128,
    },
    /// Graded Frobenius image as (degree, λ, μ, coefficient) tuples.
    Frobenius {
        #[command(flatten)]
        board: Board,
        /// Cross-check against fixed-point and normal-form oracles.
        #[arg(long)]
        verify: bool,
    },
    /// Equivariant log-concavity over a rectangle of parameters.
    Logconcave {
        /// Largest n (default 5, or 8 at full scale).
        #[arg(long)]
        n: Option<usize>,
        /// Largest m (default 6, or 10 at full scale).
        #[arg(long)]
        m: Option<usize>,
        /// Only this r instead of every r.
        #[arg(long)]
        r: Option<usize>,
        /// Check a series read from a JSON file instead.
        #[arg(long, conflicts_with_all = ["n", "m", "r"])]
        series: Option<PathBuf>,
    },
    /// Run verification suites.
    Verify {
        /// Suites to run (repeatable); all when omitted.
        #[arg(long, value_enum)]
        suite: Vec<SuiteName>,
    },
}

struct CommandOutput {
    report: ReportDocument,
    table: String,
}

type CommandResult = Result<CommandOutput, String>;

fn progress(msg: &str) {
    eprintln!("{msg}");
}

impl GlobalArgs {
    fn spec(&self) -> MonomialOrderSpec {
        let direction = match self.order {
            OrderArg::Example => DiagonalDirection::Example,
            OrderArg::Definition => DiagonalDirection::Definition,
        };
        let tie = match self.tiebreak {
            TieBreakArg::HighRowFirst => TieBreak::HighRowFirst,
            TieBreakArg::LowRowFirst => TieBreak::LowRowFirst,
        };
        MonomialOrderSpec::new(direction, tie, true)
    }

    fn cache(&self) -> Result<CharacterTableCache, String> {
        let dir = self.cache_dir.clone().unwrap_or_else(|| match std::env::var_os("HOME") {
            Some(home) => PathBuf::from(home).join(".cache").join("rookharm"),
            None => std::env::temp_dir().join("rookharm-cache"),
        });
        CharacterTableCache::new(dir).map_err(|e| e.to_string())
    }
}

impl Board {
    fn params(self) -> Result<LocusParams, String> {
        LocusParams::new(self.n, self.m, self.r).map_err(|e| e.to_string())
    }
}

fn inputs(params: LocusParams, extra: Value) -> Value {
    let mut v = json!({ "n": params.n, "m": params.m, "r": params.r });
    if let (Value::Object(base), Value::Object(more)) = (&mut v, extra) {
        base.extend(more);
    }
    v
}

fn cells_value(p: &RookPlacement) -> Value {
    json!(p.cells())
}

fn cmd_enumerate(board: Board, size: Option<usize>) -> CommandResult {
    let start = Instant::now();
    let params = board.params()?;
    if let Some(d) = size {
        if d < params.r || d > params.max_rooks() {
            return Err(format!("size {d} outside {}..={} for {params}", params.r, params.max_rooks()));
        }
    }
    let locus: Vec<RookPlacement> =
        enumerate_upper_locus(params).into_iter().filter(|p| size.is_none_or(|d| p.size() == d)).collect();
    let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
    for p in &locus {
        *counts.entry(p.size()).or_default() += 1;
    }
    let table = locus.iter().map(|p| format!("{p}\n")).collect::<String>() + &format!("{} placements\n", locus.len());
    let results = json!({
        "count": locus.len(),
        "counts_by_size": counts.iter().map(|(d, c)| json!({ "size": d, "count": c })).collect::<Vec<_>>(),
        "placements": locus.iter().map(cells_value).collect::<Vec<_>>(),
    });
    let report = ReportDocument::new("enumerate", inputs(params, json!({ "size": size })), true, results, start.elapsed());
    Ok(CommandOutput { report, table })
}

fn parse_placement(text: &str, params: LocusParams) -> Result<RookPlacement, String> {
    let mut cells = Vec::new();
    for cell in text.split(';').map(str::trim).filter(|s| !s.is_empty()) {
        let (i, j) = cell.split_once(',').ok_or_else(|| format!("cell {cell:?} is not i,j"))?;
        let parse = |s: &str| s.trim().parse::<usize>().map_err(|e| format!("cell {cell:?}: {e}"));
        cells.push((parse(i)?, parse(j)?));
    }
    RookPlacement::new(params.n, params.m, cells).map_err(|e| e.to_string())
}

fn cmd_basis(board: Board, placement: Option<String>, verify: bool, max_locus: u128, g: &GlobalArgs) -> CommandResult {
    let start = Instant::now();
    let params = board.params()?;
    let spec = g.spec();
    let single = placement.as_deref().map(|p| parse_placement(p, params)).transpose()?;
    if single.is_none() && params.locus_size() > max_locus {
        return Err(format!("locus has {} placements, above --max-locus {max_locus}", params.locus_size()));
    }
    let locus = match &single {
        Some(p) => vec![p.clone()],
        None => enumerate_upper_locus(params),
    };
    let mut rows = Vec::new();
    let mut table = String::new();
    let mut monomials: Vec<Monomial> = Vec::new();
    for r in &locus {
        let w = extend_to_permutation(r, params).map_err(|e| e.to_string())?;
        let es = extended_shadow_set(r, params).map_err(|e| e.to_string())?;
        let mono = shadow_monomial(r, params).map_err(|e| e.to_string())?;
        table.push_str(&format!("{r}  EX = {w}  ES = {es}  es = {mono}\n"));
        rows.push(json!({
            "placement": cells_value(r),
            "extension": w.images(),
            "shadow_cells": cells_value(&es),
            "monomial": mono,
            "degree": mono.degree(),
        }));
        monomials.push(mono);
    }
    let top = monomials.iter().map(|x| x.degree() as usize).max().unwrap_or(0);
    let mut histogram = vec![0usize; top + 1];
    for x in &monomials {
        histogram[x.degree() as usize] += 1;
    }
    let mut passed = true;
    let mut results = json!({ "count": rows.len(), "degree_histogram": histogram, "basis": rows });
    if verify && single.is_none() {
        let oracle = standard_monomials(&locus, &spec).map_err(|e| e.to_string())?;
        let mut a = oracle.clone();
        let mut b = monomials.clone();
        a.sort();
        b.sort();
        passed = a == b;
        results["oracle_agrees"] = json!(passed);
        table.push_str(&format!("oracle agrees: {passed}\n"));
    }
    table.push_str(&format!("{} basis monomials, degrees {histogram:?}\n", rows.len()));
    let echo = json!({ "order": spec, "placement": single.as_ref().map(cells_value), "verify": verify });
    let report = ReportDocument::new("basis", inputs(params, echo), passed, results, start.elapsed());
    Ok(CommandOutput { report, table })
}

fn cmd_hilbert(board: Board, oracle_max_locus: u128, g: &GlobalArgs) -> CommandResult {
    let start = Instant::now();
    let params = board.params()?;
    let via_lis = hilbert_series_via_lis(params);
    let dims = grfrob_main(params).dimensions().map_err(|e| e.to_string())?;
    let mut agree = dims.iter().copied().eq(via_lis.iter().map(|&x| x as i128));
    let oracle = if params.locus_size() <= oracle_max_locus {
        progress(&format!("oracle on {} placements", params.locus_size()));
        let o = hilbert_series_oracle(&enumerate_upper_locus(params), &g.spec()).map_err(|e| e.to_string())?;
        agree &= o == via_lis;
        Some(o)
    } else {
        None
    };
    let table = format!(
        "via lis:        {via_lis:?}\nvia frobenius:  {dims:?}\noracle:         {}\nagree: {agree}\n",
        oracle.as_ref().map_or("skipped".to_owned(), |o| format!("{o:?}"))
    );
    let results = json!({ "via_lis": via_lis, "via_frobenius": dims, "oracle": oracle, "agree": agree });
    let echo = json!({ "order": g.spec(), "oracle_max_locus": oracle_max_locus });
    let report = ReportDocument::new("hilbert", inputs(params, echo), agree, results, start.elapsed());
    Ok(CommandOutput { report, table })
}

fn cmd_frobenius(board: Board, verify: bool, g: &GlobalArgs) -> CommandResult {
    let start = Instant::now();
    let params = board.params()?;
    let series = grfrob_main(params);
    let terms = series_terms(&series);
    let mut table = String::new();
    for (d, layer) in series.layers().iter().enumerate() {
        table.push_str(&format!("degree {d}: {layer}\n"));
    }
    let mut results = json!({ "n": params.n, "m": params.m, "layers": series.layers().len(), "terms": terms });
    let mut passed = true;
    if verify {
        let cache = g.cache()?;
        let left = cache.get(params.n).map_err(|e| e.to_string())?;
        let right = cache.get(params.m).map_err(|e| e.to_string())?;
        let fixed = frobenius_from_fixed_points_with(&enumerate_upper_locus(params), &left, &right)
            .map_err(|e| e.to_string())?;
        let fixed_ok = fixed == series.ungraded();
        progress("graded oracle");
        let model = GradedQuotientModel::for_params(params, &g.spec()).map_err(|e| e.to_string())?;
        let graded_ok = graded_frobenius_of_model(&model).map_err(|e| e.to_string())? == series;
        passed = fixed_ok && graded_ok;
        results["fixed_point_agrees"] = json!(fixed_ok);
        results["graded_oracle_agrees"] = json!(graded_ok);
        table.push_str(&format!("fixed points agree: {fixed_ok}\ngraded oracle agrees: {graded_ok}\n"));
    }
    let echo = json!({ "order": g.spec(), "verify": verify });
    let report = ReportDocument::new("frobenius", inputs(params, echo), passed, results, start.elapsed());
    Ok(CommandOutput { report, table })
}

/// A series file holds `n`, `m` and `terms` as printed by `frobenius`,
/// either bare or inside a report's `results`.
fn read_series(path: &PathBuf) -> Result<GradedDoublySchurSeries, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let mut doc: Value = serde_json::from_str(&text).map_err(|e| format!("{}: {e}", path.display()))?;
    if let Some(inner) = doc.get_mut("results") {
        doc = inner.take();
    }
    let field = |k: &str| doc.get(k).and_then(Value::as_u64).map(|x| x as usize).ok_or(format!("series needs {k:?}"));
    let (n, m) = (field("n")?, field("m")?);
    let terms = doc.get("terms").and_then(Value::as_array).ok_or("series needs \"terms\"")?;
    let mut layers: Vec<DoublySchurVector> = Vec::new();
    for t in terms {
        let degree = t["degree"].as_u64().ok_or("term without degree")? as usize;
        let part = |k: &str| serde_json::from_value::<Partition>(t[k].clone()).map_err(|e| format!("{k}: {e}"));
        let (lambda, mu) = (part("lambda")?, part("mu")?);
        if lambda.size() != n || mu.size() != m {
            return Err(format!("term ({lambda}, {mu}) is not of bidegree ({n}, {m})"));
        }
        let c = t["coefficient"].as_i64().ok_or("coefficients must be integers")?;
        if c < 0 {
            return Err(format!("negative multiplicity {c}"));
        }
        if layers.len() <= degree {
            layers.resize(degree + 1, DoublySchurVector::zero());
        }
        layers[degree].add_term(lambda, mu, Rational::from_integer(c.into()));
    }
    Ok(GradedDoublySchurSeries::new(n, m, layers))
}

fn cmd_logconcave(n: Option<usize>, m: Option<usize>, r: Option<usize>, series: Option<PathBuf>, g: &GlobalArgs) -> CommandResult {
    let start = Instant::now();
    let cache = g.cache()?;
    let mut entries = Vec::new();
    let mut table = String::new();
    let mut record = |s: &GradedDoublySchurSeries, label: Value, text: String| -> Result<bool, String> {
        let left = cache.get(s.n).map_err(|e| e.to_string())?;
        let right = cache.get(s.m).map_err(|e| e.to_string())?;
        let rep = check_log_concavity_with(s, &left, &right, 0).map_err(|e| e.to_string())?;
        table.push_str(&format!("{text}: {}\n", if rep.passed() { "pass" } else { "FAIL" }));
        for v in &rep.violations {
            table.push_str(&format!("  degree {} ({}, {}): {} < {}\n", v.degree, v.alpha, v.beta, v.square_multiplicity, v.neighbour_multiplicity));
        }
        let passed = rep.passed();
        let mut entry = label;
        entry["passed"] = json!(passed);
        entry["checked_degrees"] = json!(rep.checked_degrees);
        entry["violations"] = json!(rep
            .violations
            .iter()
            .map(|v| json!({
                "degree": v.degree,
                "alpha": v.alpha,
                "beta": v.beta,
                "square_multiplicity": v.square_multiplicity.to_string(),
                "neighbour_multiplicity": v.neighbour_multiplicity.to_string(),
            }))
            .collect::<Vec<_>>());
        entries.push(entry);
        Ok(passed)
    };
    let mut all_passed = true;
    let echo;
    if let Some(path) = &series {
        let s = read_series(path)?;
        all_passed &= record(&s, json!({ "n": s.n, "m": s.m }), format!("series {}", path.display()))?;
        echo = json!({ "series": path.display().to_string() });
    } else {
        let full = g.scale == Scale::Full;
        let n_max = n.unwrap_or(if full { 8 } else { 5 });
        let m_max = m.unwrap_or(if full { 10 } else { 6 });
        for n in 1..=n_max {
            progress(&format!("n = {n}"));
            for m in 1..=m_max {
                let rs: Vec<usize> = match r {
                    Some(r) if r <= n.min(m) => vec![r],
                    Some(_) => Vec::new(),
                    None => (0..=n.min(m)).collect(),
                };
                for r in rs {
                    let params = LocusParams::new(n, m, r).map_err(|e| e.to_string())?;
                    all_passed &= record(&grfrob_main(params), json!({ "n": n, "m": m, "r": r }), params.to_string())?;
                }
            }
        }
        echo = json!({ "n_max": n_max, "m_max": m_max, "r": r });
    }
    let results = json!({ "triples": entries.len(), "all_passed": all_passed, "entries": entries });
    let report = ReportDocument::new("logconcave", echo, all_passed, results, start.elapsed());
    Ok(CommandOutput { report, table })
}

fn cmd_verify(selected: Vec<SuiteName>, g: &GlobalArgs) -> CommandResult {
    let start = Instant::now();
    let cache = g.cache()?;
    let names = if selected.is_empty() { SuiteName::value_variants().to_vec() } else { selected };
    let ctx = SuiteContext { scale: g.scale, spec: g.spec(), cache: &cache, progress: &progress };
    let results: Vec<_> = names.iter().map(|&name| run_suite(name, &ctx)).collect();
    let passed = results.iter().all(|r| r.passed);
    let mut table = String::new();
    for r in &results {
        table.push_str(&format!("{:<15} {} ({} checks)\n", r.suite, if r.passed { "pass" } else { "FAIL" }, r.checks));
        for f in &r.failures {
            table.push_str(&format!("  {f}\n"));
        }
    }
    let echo = json!({
        "suites": names.iter().map(|s| s.label()).collect::<Vec<_>>(),
        "scale": g.scale,
        "order": g.spec(),
        "cache_dir": cache.dir().display().to_string(),
    });
    let report = ReportDocument::new("verify", echo, passed, json!({ "suites": results }), start.elapsed());
    Ok(CommandOutput { report, table })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let g = &cli.global;
    let outcome = match cli.command {
        Command::Enumerate { board, size } => cmd_enumerate(board, size),
        Command::Basis { board, placement, verify, max_locus } => cmd_basis(board, placement, verify, max_locus, g),
        Command::Hilbert { board, oracle_max_locus } => cmd_hilbert(board, oracle_max_locus, g),
        Command::Frobenius { board, verify } => cmd_frobenius(board, verify, g),
        Command::Logconcave { n, m, r, series } => cmd_logconcave(n, m, r, series, g),
        Command::Verify { suite } => cmd_verify(suite, g),
    };
    match outcome {
        Ok(out) => {
            let text = match g.format {
                Format::Json => serde_json::to_string_pretty(&out.report).expect("report serializes") + "\n",
                Format::Table => out.table,
            };
            // a closed pipe downstream is not our failure
            let _ = std::io::stdout().lock().write_all(text.as_bytes());
            if out.report.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
