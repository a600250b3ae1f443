//! Command-line front end.
//!
//! Exit status: 0 on success, 1 when an input or a hypothesis is rejected,
//! 2 when an identity that should always hold fails (including a failed
//! `verify` check), 3 when `--timeout-sec` expires.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::Deserialize;
use serde_json::{json, Value};

use crate::cancel::CancelToken;
use crate::cayley::{build_cayley, check_term_bound, mixed_resultant_with, product_formula_check};
use crate::chow::bezout::BezoutFile;
use crate::chow::{bezout_chow_form, chow_form_with, row_names, BezoutInput};
use crate::discriminant::{
    a_discriminant_with, dual_full_discriminant_from_chow, dual_full_discriminant_with, full_discriminant_with,
    horn::horn_implicitize_with,
};
use crate::error::{Error, Result};
use crate::lattice::{BConfig, ConfigFile, Row};
use crate::poly::{parse_polynomial, substitute, IntPolynomial, Monomial, VariableContext};
use crate::polygon::{
    build_pb, build_qb, chow_polygon, degree_da, dehomog_newton, is_centrally_symmetric, mu_vector, newton_polygon_da,
    nu_vector, secondary_polygon, svg::to_svg, LatticePolygon,
};

#[derive(Parser, Debug)]
#[command(name = "codim2", version, about = "Chow forms and discriminants of codimension-2 toric varieties")]
struct Cli {
    /// Abort long eliminations after this many seconds.
    #[arg(long, global = true)]
    timeout_sec: Option<u64>,
    /// Comma-separated row names, overriding the input file.
    #[arg(long, global = true)]
    vars: Option<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check a configuration and print its invariants.
    Validate(InputArgs),
    /// Chow form as resultant over brackets, or through a Bezout matrix.
    Chow {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        bezout: Option<PathBuf>,
    },
    /// Chow form through the Bezout matrix of a 2x3 monomial presentation.
    Bezout {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        matrix: PathBuf,
    },
    /// Polygons, degree formulas and optional SVG drawings.
    Polygons {
        #[command(flatten)]
        input: InputArgs,
        /// Directory receiving one SVG file per polygon.
        #[arg(long)]
        emit_svg: Option<PathBuf>,
    },
    /// Full discriminant E_A, or the dual one with `--dual`.
    FullDisc {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        dual: bool,
    },
    /// A-discriminant.
    #[command(alias = "discriminant")]
    Disc {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value_t = Pipeline::Residual)]
        pipeline: Pipeline,
        /// Write the full bundle as JSON.
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// Implicit equation of the Horn curve and its lift.
    Horn(InputArgs),
    /// Mixed resultant of a Cayley configuration.
    Cayley {
        /// Vectors b_1..b_r, e.g. "(-1,0),(0,-1),(1,1)".
        #[arg(long, allow_hyphen_values = true)]
        b: String,
        /// Vectors c_1, c_2.
        #[arg(long, allow_hyphen_values = true)]
        c: String,
        #[arg(long, default_value_t = 20)]
        trials: usize,
        #[arg(long)]
        emit_json: Option<PathBuf>,
    },
    /// Replay the golden fixtures.
    Verify {
        /// Directory of fixture files; the shipped set when omitted.
        #[arg(long)]
        fixtures: Option<PathBuf>,
    },
}

#[derive(clap::Args, Debug)]
struct InputArgs {
    /// JSON file `{"B": [[..],..]}` or `{"A": [[..],..]}`.
    #[arg(long)]
    input: PathBuf,
    /// Write the result as JSON.
    #[arg(long)]
    emit_json: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Pipeline {
    Residual,
    Horn,
    Both,
}

#[derive(Debug)]
enum Failure {
    Error(Error),
    Verify(usize),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Error(e)
    }
}

type CliResult = std::result::Result<(), Failure>;

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(args, &mut stdout.lock(), &mut stderr.lock())
}

pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = write!(err, "{e}");
            return if e.use_stderr() { 1 } else { 0 };
        }
    };
    let cancel = match cli.timeout_sec {
        Some(s) => CancelToken::with_timeout(Duration::from_secs(s)),
        None => CancelToken::new(),
    };
    let vars: Option<Vec<String>> = cli.vars.as_deref().map(|v| v.split(',').map(|s| s.trim().to_string()).collect());
    let ctx = Context { vars, cancel };
    match dispatch(&cli.command, &ctx, out, err) {
        Ok(()) => 0,
        Err(Failure::Verify(n)) => {
            let _ = writeln!(err, "{n} check(s) failed");
            2
        }
        Err(Failure::Error(e)) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::Cancelled => 3,
                e if e.is_internal() => 2,
                _ => 1,
            }
        }
    }
}

struct Context {
    vars: Option<Vec<String>>,
    cancel: CancelToken,
}

fn io_err(path: &Path, e: std::io::Error) -> Error {
    Error::Input(format!("{}: {e}", path.display()))
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| io_err(path, e))
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).map_err(|e| io_err(path, e))
}

fn emit(path: &Option<PathBuf>, v: &Value) -> Result<()> {
    match path {
        Some(p) => write_file(p, &(serde_json::to_string_pretty(v).expect("JSON value") + "\n")),
        None => Ok(()),
    }
}

fn load(args: &InputArgs, ctx: &Context) -> Result<(BConfig, Vec<String>)> {
    let file = ConfigFile::from_json(&read(&args.input)?)?;
    let b = file.to_bconfig()?;
    let names = row_names(b.n(), ctx.vars.as_deref().or(file.vars.as_deref()))?;
    Ok((b, names))
}

fn io(e: std::io::Error) -> Failure {
    Failure::Error(Error::Input(format!("write failed: {e}")))
}

fn polygon_json(p: &LatticePolygon) -> Value {
    json!({
        "vertices": p.vertices(),
        "edges": p.edges().iter().map(|e| json!({"vector": e.vector, "rows": e.rows.iter().map(|i| i + 1).collect::<Vec<_>>()})).collect::<Vec<_>>(),
        "boundary_points": p.boundary_point_count(),
        "lattice_points": p.lattice_point_count(),
    })
}

fn dispatch(cmd: &Command, ctx: &Context, out: &mut dyn Write, err: &mut dyn Write) -> CliResult {
    match cmd {
        Command::Validate(args) => {
            let (b, names) = load(args, ctx)?;
            let stats = b.stats();
            let v = json!({
                "rows": b.rows(),
                "vars": names,
                "prime": b.is_prime(),
                "minor_gcd": b.minor_gcd(),
                "beta": stats.beta,
                "nu": stats.nu.iter().map(|&(r, s, v)| [r as i64 + 1, s as i64 + 1, v]).collect::<Vec<_>>(),
                "degree": stats.degree,
                "relevant_lines": b.relevant_lines(),
                "centrally_symmetric": is_centrally_symmetric(&b),
                "A": b.gale_dual().ok().map(|a| a.rows().to_vec()),
            });
            writeln!(out, "{}", serde_json::to_string_pretty(&v).expect("JSON value")).map_err(io)?;
            emit(&args.emit_json, &v)?;
        }
        Command::Chow { input, bezout } => {
            let (b, names) = load(input, ctx)?;
            let form = match bezout {
                None => chow_form_with(&b, Some(&names), &ctx.cancel)?,
                Some(path) => {
                    let file: BezoutFile =
                        serde_json::from_str(&read(path)?).map_err(|e| Error::Input(e.to_string()))?;
                    let bi = BezoutInput::parse(&file, &names)?;
                    bezout_chow_form(&b, &bi, Some(&names), &ctx.cancel)?
                }
            };
            writeln!(err, "degree {}, {} terms", form.degree, form.polynomial.len()).map_err(io)?;
            writeln!(out, "{}", form.polynomial).map_err(io)?;
            emit(&input.emit_json, &serde_json::to_value(form.polynomial.to_json()).expect("JSON value"))?;
        }
        Command::Bezout { input, matrix } => {
            let (b, names) = load(input, ctx)?;
            let file: BezoutFile = serde_json::from_str(&read(matrix)?).map_err(|e| Error::Input(e.to_string()))?;
            let bi = BezoutInput::parse(&file, &names)?;
            let form = bezout_chow_form(&b, &bi, Some(&names), &ctx.cancel)?;
            writeln!(err, "degree {}, {} terms", form.degree, form.polynomial.len()).map_err(io)?;
            writeln!(out, "{}", form.polynomial).map_err(io)?;
            emit(&input.emit_json, &serde_json::to_value(form.polynomial.to_json()).expect("JSON value"))?;
        }
        Command::Polygons { input, emit_svg } => {
            let (b, _) = load(input, ctx)?;
            let pb = build_pb(&b);
            let mut v = json!({
                "P_B": polygon_json(&pb),
                "degree": b.degree(),
                "mu": mu_vector(&b),
                "chow_polygon": chow_polygon(&b),
                "secondary_polygon": secondary_polygon(&b),
                "centrally_symmetric": is_centrally_symmetric(&b),
            });
            let mut drawings = vec![("P_B", pb)];
            if b.require_nonzero_rows().is_ok() {
                let qb = build_qb(&b)?;
                let perp = dehomog_newton(&b)?;
                v["Q_B"] = polygon_json(&qb);
                v["nu"] = json!(nu_vector(&b)?);
                v["degree_D_A"] = json!(degree_da(&b)?);
                v["newton_polygon_D_A"] = json!(newton_polygon_da(&b)?);
                v["Q_B_perp"] = polygon_json(&perp);
                drawings.push(("Q_B", qb));
                drawings.push(("Q_B_perp", perp));
            }
            writeln!(out, "{}", serde_json::to_string_pretty(&v).expect("JSON value")).map_err(io)?;
            emit(&input.emit_json, &v)?;
            if let Some(dir) = emit_svg {
                fs::create_dir_all(dir).map_err(|e| io_err(dir, e))?;
                for (name, p) in &drawings {
                    write_file(&dir.join(format!("{name}.svg")), &to_svg(p, name))?;
                }
            }
        }
        Command::FullDisc { input, dual } => {
            let (b, names) = load(input, ctx)?;
            let f = if *dual {
                dual_full_discriminant_with(&b, Some(&names), &ctx.cancel)?
            } else {
                full_discriminant_with(&b, Some(&names), &ctx.cancel)?
            };
            writeln!(out, "{f}").map_err(io)?;
            emit(&input.emit_json, &serde_json::to_value(f.to_json()).expect("JSON value"))?;
        }
        Command::Disc { input, pipeline, emit: bundle_path } => {
            let (b, names) = load(input, ctx)?;
            let (d_a, bundle) = match pipeline {
                Pipeline::Horn => (horn_implicitize_with(&b, &ctx.cancel)?.lift(&b, Some(&names))?, None),
                Pipeline::Residual | Pipeline::Both => {
                    let bundle = a_discriminant_with(&b, Some(&names), &ctx.cancel)?;
                    bundle.check_factorization()?;
                    if *pipeline == Pipeline::Both {
                        let h = horn_implicitize_with(&b, &ctx.cancel)?.lift(&b, Some(&names))?;
                        if h != bundle.d_a {
                            return Err(Error::Internal("Horn lift differs from the residual resultant".into()).into());
                        }
                    }
                    (bundle.d_a.clone(), Some(bundle))
                }
            };
            writeln!(err, "degree {}, {} terms", d_a.total_degree().unwrap_or(0), d_a.len()).map_err(io)?;
            writeln!(out, "{d_a}").map_err(io)?;
            emit(&input.emit_json, &serde_json::to_value(d_a.to_json()).expect("JSON value"))?;
            if let (Some(path), Some(bundle)) = (bundle_path, &bundle) {
                emit(&Some(path.clone()), &bundle.to_json())?;
            }
        }
        Command::Horn(input) => {
            let (b, names) = load(input, ctx)?;
            let curve = horn_implicitize_with(&b, &ctx.cancel)?;
            let lifted = curve.lift(&b, Some(&names))?;
            writeln!(out, "{}", curve.implicit).map_err(io)?;
            writeln!(out, "{lifted}").map_err(io)?;
            emit(
                &input.emit_json,
                &json!({"delta": curve.implicit.to_json(), "lifted": lifted.to_json()}),
            )?;
        }
        Command::Cayley { b, c, trials, emit_json } => {
            let bs = parse_vectors(b)?;
            let cs = parse_vectors(c)?;
            let [c1, c2] = <[Row; 2]>::try_from(cs)
                .map_err(|_| Error::Input("--c needs exactly two vectors".into()))?;
            let cfg = build_cayley(&bs, [c1, c2])?;
            let res = mixed_resultant_with(&cfg, &ctx.cancel)?;
            let bound = check_term_bound(&cfg, &res);
            let product = product_formula_check(&cfg, &res, *trials, 0);
            writeln!(out, "{res}").map_err(io)?;
            let report = json!({
                "gammas": cfg.gammas,
                "exponents": cfg.exponents,
                "term_bound": bound,
                "product_formula": product,
            });
            writeln!(err, "{}", serde_json::to_string_pretty(&report).expect("JSON value")).map_err(io)?;
            let mut v = report.clone();
            v["resultant"] = serde_json::to_value(res.to_json()).expect("JSON value");
            emit(emit_json, &v)?;
            if !bound.holds {
                return Err(Error::Internal(format!("{} terms exceed the bound {}", bound.terms, bound.bound)).into());
            }
            if !product.passed {
                return Err(Error::Internal(format!(
                    "product formula deviates by {:e}",
                    product.max_relative_deviation
                ))
                .into());
            }
        }
        Command::Verify { fixtures } => {
            let files = match fixtures {
                None => shipped_fixtures(),
                Some(dir) => {
                    let mut v = Vec::new();
                    let mut entries: Vec<PathBuf> = fs::read_dir(dir)
                        .map_err(|e| io_err(dir, e))?
                        .filter_map(|e| e.ok().map(|e| e.path()))
                        .filter(|p| p.extension().is_some_and(|x| x == "json"))
                        .collect();
                    entries.sort();
                    for p in entries {
                        let name = p.file_name().expect("file").to_string_lossy().into_owned();
                        v.push((name, read(&p)?));
                    }
                    v
                }
            };
            let mut failed = 0;
            for (name, text) in &files {
                for check in verify_fixture(text, &ctx.cancel) {
                    let (label, ok) = match check {
                        Ok((label, ok)) => (label, ok),
                        Err(e) => (format!("error: {e}"), None),
                    };
                    let status = match ok {
                        Some(true) => "PASS",
                        Some(false) => "FAIL",
                        None => "FAIL",
                    };
                    if status == "FAIL" {
                        failed += 1;
                    }
                    writeln!(out, "{status}  {name:<20} {label}").map_err(io)?;
                }
            }
            if failed > 0 {
                return Err(Failure::Verify(failed));
            }
        }
    }
    Ok(())
}

/// Pairs of integers from text like `(-1,0),(0,-1)` or `-1,0;0,-1`.
fn parse_vectors(s: &str) -> Result<Vec<Row>> {
    let nums: Vec<i64> = s
        .split(|c: char| !(c.is_ascii_digit() || c == '-'))
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<i64>().map_err(|_| Error::Input(format!("bad integer `{t}`"))))
        .collect::<Result<_>>()?;
    if nums.len() % 2 != 0 || nums.is_empty() {
        return Err(Error::Input(format!("`{s}` is not a list of integer pairs")));
    }
    Ok(nums.chunks(2).map(|p| [p[0], p[1]]).collect())
}

fn shipped_fixtures() -> Vec<(String, String)> {
    [
        ("intro.json", include_str!("../fixtures/intro.json")),
        ("six_row.json", include_str!("../fixtures/six_row.json")),
        ("twisted_cubic.json", include_str!("../fixtures/twisted_cubic.json")),
        ("symmetric.json", include_str!("../fixtures/symmetric.json")),
        ("cayley_intro.json", include_str!("../fixtures/cayley_intro.json")),
    ]
    .into_iter()
    .map(|(n, t)| (n.to_string(), t.to_string()))
    .collect()
}

#[derive(Deserialize, Default)]
struct Expect {
    degree: Option<i64>,
    boundary_points: Option<i64>,
    lattice_points: Option<i64>,
    relevant_lines: Option<usize>,
    chow_terms: Option<usize>,
    chow_degree: Option<i64>,
    bezout: Option<BezoutFile>,
    dual_terms: Option<usize>,
    dual_factorization: Option<Factorization>,
    da_terms: Option<usize>,
    da_degree: Option<i64>,
    da: Option<String>,
    #[serde(default)]
    da_up_to_sign: bool,
    da_reciprocal_of: Option<String>,
    da_coefficients: Option<Vec<(String, String)>>,
    da_is_one: Option<bool>,
    symmetric: Option<bool>,
    gamma: Option<i64>,
    terms: Option<usize>,
    bound: Option<i64>,
    relabel: Option<BTreeMap<String, String>>,
}

#[derive(Deserialize)]
struct Factorization {
    scalar: String,
    factors: Vec<String>,
}

#[derive(Deserialize)]
struct Fixture {
    #[serde(flatten)]
    config: ConfigFile,
    b: Option<Vec<Row>>,
    c: Option<Vec<Row>>,
    #[serde(default)]
    expect: Expect,
}

type Check = Result<(String, Option<bool>)>;

fn check(label: impl Into<String>, ok: bool) -> Check {
    Ok((label.into(), Some(ok)))
}

/// `D_A` as the reciprocal of `f`, monomial cleared, primitive, sign
/// normalised.
fn reciprocal_clear(f: &IntPolynomial) -> Result<IntPolynomial> {
    Ok(f.reciprocal().clear_monomial().0.content_and_primitive()?.2)
}

fn verify_fixture(text: &str, cancel: &CancelToken) -> Vec<Check> {
    // Auxiliary inputs such as Bezout matrices carry no expectations.
    if serde_json::from_str::<Value>(text).is_ok_and(|v| v.get("expect").is_none()) {
        return Vec::new();
    }
    let fx: Fixture = match serde_json::from_str(text) {
        Ok(f) => f,
        Err(e) => return vec![Err(Error::Input(e.to_string()))],
    };
    let mut out = Vec::new();
    if let (Some(b), Some(c)) = (&fx.b, &fx.c) {
        verify_cayley(b, c, &fx.expect, cancel, &mut out);
    } else {
        verify_config(&fx, cancel, &mut out);
    }
    out
}

fn verify_cayley(b: &[Row], c: &[Row], e: &Expect, cancel: &CancelToken, out: &mut Vec<Check>) {
    let run = |out: &mut Vec<Check>| -> Result<()> {
        let [c1, c2] = <[Row; 2]>::try_from(c.to_vec()).map_err(|_| Error::Input("two c vectors expected".into()))?;
        let cfg = build_cayley(b, [c1, c2])?;
        let res = mixed_resultant_with(&cfg, cancel)?;
        let bound = check_term_bound(&cfg, &res);
        if let Some(g) = e.gamma {
            out.push(check(format!("Gamma = {g}"), cfg.gamma_total == g));
        }
        if let Some(t) = e.terms {
            out.push(check(format!("mixed resultant has {t} terms"), res.len() == t));
        }
        if let Some(bd) = e.bound {
            out.push(check(format!("term bound {bd} holds"), bound.bound == bd && bound.holds));
        }
        if let (Some(map), Some(src)) = (&e.relabel, &e.da_reciprocal_of) {
            let names: Vec<String> = res.ctx().names().iter().map(|n| map.get(n).cloned().unwrap_or(n.clone())).collect();
            let mut sorted = names.clone();
            sorted.sort();
            let target = VariableContext::new(sorted)?;
            let images: Vec<Option<IntPolynomial>> = names
                .iter()
                .map(|n| Some(IntPolynomial::var(&target, target.position(n).expect("listed"))))
                .collect();
            let moved = substitute(&res, &images, &target, true)?.with_positive_lead();
            let want = reciprocal_clear(&parse_polynomial(src, &target)?)?;
            out.push(check("mixed resultant equals the A-discriminant of the 9-row example", moved == want));
        }
        let pf = product_formula_check(&cfg, &res, 20, 0);
        out.push(check(
            format!("product formula, deviation {:.1e} over {} trials", pf.max_relative_deviation, pf.trials),
            pf.passed,
        ));
        Ok(())
    };
    if let Err(err) = run(out) {
        out.push(Err(err));
    }
}

fn verify_config(fx: &Fixture, cancel: &CancelToken, out: &mut Vec<Check>) {
    let e = &fx.expect;
    let run = |out: &mut Vec<Check>| -> Result<()> {
        let b = fx.config.to_bconfig()?;
        let names = row_names(b.n(), fx.config.vars.as_deref())?;
        let ctx = VariableContext::new(names.clone())?;
        if let Some(d) = e.degree {
            out.push(check(format!("degree {d}"), b.degree() == d));
        }
        if let Some(n) = e.boundary_points {
            out.push(check(format!("{n} boundary points"), build_pb(&b).boundary_point_count() == n));
        }
        if let Some(n) = e.lattice_points {
            out.push(check(format!("{n} lattice points"), build_pb(&b).lattice_point_count() == n));
        }
        if let Some(n) = e.relevant_lines {
            out.push(check(format!("{n} relevant lines"), b.relevant_lines().len() == n));
        }
        if let Some(s) = e.symmetric {
            out.push(check("central symmetry", is_centrally_symmetric(&b) == s));
        }
        let mut chow = None;
        if e.chow_terms.is_some() || e.dual_factorization.is_some() || e.bezout.is_some() {
            let form = chow_form_with(&b, Some(&names), cancel)?;
            if let Some(t) = e.chow_terms {
                out.push(check(format!("{t} terms"), form.polynomial.len() == t));
            }
            if let Some(d) = e.chow_degree {
                out.push(check(
                    format!("Chow form homogeneous of degree {d}"),
                    form.polynomial.is_homogeneous() && form.polynomial.total_degree() == Some(d),
                ));
            }
            if let Some(bf) = &e.bezout {
                let bi = BezoutInput::parse(bf, &names)?;
                let bz = bezout_chow_form(&b, &bi, Some(&names), cancel)?;
                out.push(check("Bezout determinant equals the Chow form", bz.polynomial == form.polynomial));
            }
            chow = Some(form);
        }
        if e.dual_terms.is_some() || e.dual_factorization.is_some() {
            let dual = match &chow {
                Some(form) => dual_full_discriminant_from_chow(&b, form, Some(&names))?,
                None => dual_full_discriminant_with(&b, Some(&names), cancel)?,
            };
            if let Some(t) = e.dual_terms {
                out.push(check(format!("dual full discriminant has {t} terms"), dual.len() == t));
            }
            if let Some(fac) = &e.dual_factorization {
                let scalar: BigInt = fac.scalar.parse().map_err(|_| Error::Input("bad scalar".into()))?;
                let mut q = dual.clone();
                let mut exact = true;
                for f in &fac.factors {
                    match q.exact_divide(&parse_polynomial(f, &ctx)?) {
                        Ok(r) => q = r,
                        Err(_) => exact = false,
                    }
                }
                let label = format!("dual full discriminant = {} * {} factors", fac.scalar, fac.factors.len());
                out.push(check(label, exact && q == IntPolynomial::constant(&ctx, scalar)));
            }
        }
        let needs_da = e.da_terms.is_some()
            || e.da.is_some()
            || e.da_coefficients.is_some()
            || e.da_is_one.is_some()
            || e.da_reciprocal_of.is_some();
        if needs_da {
            let bundle = a_discriminant_with(&b, Some(&names), cancel)?;
            out.push(check("E_A = nu' x^u' D_A prod D_v^delta_v", bundle.check_factorization().is_ok()));
            let d = &bundle.d_a;
            if let Some(t) = e.da_terms {
                out.push(check(format!("D_A has {t} terms"), d.len() == t));
            }
            if let Some(deg) = e.da_degree {
                out.push(check(format!("D_A has degree {deg}"), d.total_degree() == Some(deg)));
            }
            if let Some(one) = e.da_is_one {
                out.push(check("D_A = 1 exactly when P_B is centrally symmetric", d.is_one() == one));
            }
            if let Some(src) = &e.da {
                let want = parse_polynomial(src, &ctx)?;
                let ok = *d == want || (e.da_up_to_sign && *d == -&want);
                out.push(check("D_A matches", ok));
            }
            if let Some(src) = &e.da_reciprocal_of {
                let want = reciprocal_clear(&parse_polynomial(src, &ctx)?)?;
                out.push(check("D_A is the reciprocal of the dual factor", *d == want));
            }
            if let Some(coeffs) = &e.da_coefficients {
                for (m, c) in coeffs {
                    let mono = parse_polynomial(m, &ctx)?;
                    let key: Monomial = mono.leading_term().map(|(m, _)| m.clone()).unwrap_or_else(|| Monomial::one(b.n()));
                    let want: BigInt = c.parse().map_err(|_| Error::Input(format!("bad coefficient {c}")))?;
                    out.push(check(format!("coefficient of {m}"), d.coefficient(&key) == want));
                }
            }
            let h = horn_implicitize_with(&b, cancel)?.lift(&b, Some(&names))?;
            out.push(check("Horn lift agrees with the residual resultant", h == *d));
        }
        Ok(())
    };
    if let Err(err) = run(out) {
        out.push(Err(err));
    }
}
