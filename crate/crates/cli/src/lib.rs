//! `lorentz-eig` command-line front end.
//!
//! Exit codes: 0 on success or agreement, 1 on a mathematical disagreement,
//! a falsified preserver or a map that is not a preserver, 2 on usage and
//! parse errors.

use std::ffi::OsString;
use std::io::Write;

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use lorentz_core::preserver::{
    classify_preserver_detailed, classify_preserver_s2_detailed, make_preserver,
    sample_test_preserver, AnyLinMap, PreserverForm, PreserverKind, Verdict,
};
use lorentz_core::verify::{agreement_sweep, cross_check, Agreement, SweepReport};
use lorentz_core::{l_spectrum, Execution, LEigenvalue, LSpectrum, Mat2, OracleConfig, Tolerance};

pub const TOL_ENV: &str = "LORENTZ_EIG_TOL";

pub const EXIT_OK: i32 = 0;
pub const EXIT_DISAGREE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "lorentz-eig",
    version,
    about = "Lorentz-cone eigenvalues of 2x2 matrices"
)]
struct Cli {
    /// Scalar equality tolerance (overrides LORENTZ_EIG_TOL)
    #[arg(long, global = true)]
    tol: Option<f64>,

    /// Emit JSON
    #[arg(long, global = true, conflicts_with = "table")]
    json: bool,

    /// Emit a plain-text table (default)
    #[arg(long, global = true)]
    table: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Closed-form L-spectrum with nature flags
    Spectrum {
        /// Matrix as '{"a":..,"b":..,"c":..,"d":..}', 'a,b;c,d', @file or - for stdin
        #[arg(allow_hyphen_values = true)]
        matrix: String,
    },
    /// Cross-check closed form, oracle and Pareto spectra
    Verify(VerifyArgs),
    /// Build, test and recognize spectrum-preserving maps
    #[command(subcommand)]
    Preserver(PreserverCmd),
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Matrix to verify (omit with --random)
    #[arg(allow_hyphen_values = true)]
    matrix: Option<String>,

    /// Oracle grid resolution (odd, >= 101)
    #[arg(long, default_value_t = OracleConfig::DEFAULT_GRID)]
    grid: usize,

    /// Seed for --random
    #[arg(long, default_value_t = 0)]
    seed: u64,

    /// Verify this many seeded random matrices instead of one input
    #[arg(long, conflicts_with = "matrix")]
    random: Option<usize>,

    /// Half-width of the entry range for --random
    #[arg(long, default_value_t = 5.0)]
    range: f64,
}

#[derive(Subcommand, Debug)]
enum PreserverCmd {
    /// Print the coordinate matrix of a preserver
    Make {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long, allow_hyphen_values = true)]
        beta: f64,
        #[arg(long, value_enum, default_value_t = Space::M2)]
        space: Space,
    },
    /// Randomized falsification test of a linear map
    Check {
        /// Map JSON, @file or - for stdin
        map: String,
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Structural recognition of a linear map
    Classify {
        /// Map JSON, @file or - for stdin
        map: String,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum KindArg {
    #[value(name = "P", alias = "p")]
    P,
    #[value(name = "Q", alias = "q")]
    Q,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq)]
enum Space {
    #[value(name = "M2", alias = "m2")]
    M2,
    #[value(name = "S2", alias = "s2")]
    S2,
}

/// Round to 12 significant digits; also folds `-0` into `0`.
pub fn round12(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return if x == 0.0 { 0.0 } else { x };
    }
    format!("{x:.11e}").parse().unwrap_or(x)
}

fn read_arg(raw: &str) -> anyhow::Result<String> {
    if raw == "-" {
        let mut buf = String::new();
        std::io::Read::read_to_string(&mut std::io::stdin(), &mut buf).context("reading stdin")?;
        return Ok(buf);
    }
    match raw.strip_prefix('@') {
        Some(path) => std::fs::read_to_string(path).with_context(|| format!("reading {path}")),
        None => Ok(raw.to_string()),
    }
}

/// Parses the JSON object form or the compact `a,b;c,d` form.
pub fn parse_matrix(raw: &str) -> anyhow::Result<Mat2> {
    let text = read_arg(raw)?;
    let text = text.trim();
    if text.starts_with('{') {
        return serde_json::from_str(text).context("malformed matrix JSON");
    }
    let rows: Vec<&str> = text.split(';').collect();
    if rows.len() != 2 {
        bail!("expected a JSON object or 'a,b;c,d', got {text:?}");
    }
    let mut entries = Vec::with_capacity(4);
    for row in rows {
        let cells: Vec<&str> = row.split(',').collect();
        if cells.len() != 2 {
            bail!("each row needs two comma-separated entries, got {row:?}");
        }
        for cell in cells {
            let v: f64 = cell
                .trim()
                .parse()
                .with_context(|| format!("bad number {cell:?}"))?;
            entries.push(v);
        }
    }
    Ok(Mat2::new(entries[0], entries[1], entries[2], entries[3])?)
}

pub fn parse_map(raw: &str) -> anyhow::Result<AnyLinMap> {
    let text = read_arg(raw)?;
    serde_json::from_str(text.trim()).map_err(|e| anyhow!("malformed linear map JSON: {e}"))
}

fn tolerance_from(flag: Option<f64>, env: Option<String>) -> anyhow::Result<Tolerance> {
    let eq = match (flag, env) {
        (Some(t), _) => Some(t),
        (None, Some(s)) => Some(
            s.trim()
                .parse::<f64>()
                .with_context(|| format!("{TOL_ENV}={s:?}"))?,
        ),
        (None, None) => None,
    };
    Ok(match eq {
        Some(t) => Tolerance::with_eq_tol(t)?,
        None => Tolerance::default(),
    })
}

#[derive(Serialize)]
struct MatOut {
    a: f64,
    b: f64,
    c: f64,
    d: f64,
}

impl From<&Mat2> for MatOut {
    fn from(m: &Mat2) -> Self {
        MatOut {
            a: round12(m.a()),
            b: round12(m.b()),
            c: round12(m.c()),
            d: round12(m.d()),
        }
    }
}

#[derive(Serialize)]
struct EigenOut {
    value: f64,
    interior: bool,
    boundary_plus: bool,
    boundary_minus: bool,
    strict_boundary: bool,
}

impl From<&LEigenvalue> for EigenOut {
    fn from(e: &LEigenvalue) -> Self {
        EigenOut {
            value: round12(e.value()),
            interior: e.is_interior(),
            boundary_plus: e.is_boundary_plus(),
            boundary_minus: e.is_boundary_minus(),
            strict_boundary: e.is_strict_boundary(),
        }
    }
}

fn spectrum_out(s: &LSpectrum) -> Vec<EigenOut> {
    s.iter().map(EigenOut::from).collect()
}

fn values_out(v: &[f64]) -> Vec<f64> {
    v.iter().copied().map(round12).collect()
}

fn nature(e: &LEigenvalue) -> String {
    let mut parts = Vec::new();
    if e.is_interior() {
        parts.push("interior");
    }
    match (e.is_boundary_plus(), e.is_boundary_minus()) {
        (true, true) => parts.push("boundary +/-"),
        (true, false) => parts.push("boundary +"),
        (false, true) => parts.push("boundary -"),
        (false, false) => {}
    }
    if e.is_boundary() {
        parts.push(if e.is_strict_boundary() {
            "strict"
        } else {
            "non-strict"
        });
    }
    parts.join(", ")
}

fn spectrum_table(s: &LSpectrum) -> String {
    let mut out = format!("{:<20} {}\n", "value", "nature");
    for e in s.iter() {
        out.push_str(&format!("{:<20} {}\n", round12(e.value()), nature(e)));
    }
    out
}

fn fmt_matrix(m: &Mat2) -> String {
    let r = |x: f64| round12(x);
    format!(
        "[[{}, {}], [{}, {}]]",
        r(m.a()),
        r(m.b()),
        r(m.c()),
        r(m.d())
    )
}

fn fmt_values(v: &[f64]) -> String {
    let items: Vec<String> = v.iter().map(|x| round12(*x).to_string()).collect();
    format!("{{{}}}", items.join(", "))
}

#[derive(Serialize)]
struct AgreementOut {
    oracle_values: bool,
    oracle_flags: bool,
    pareto_values: bool,
    all: bool,
}

/// Per-matrix verification report.
#[derive(Serialize)]
pub struct Report {
    input: MatOut,
    closed_form: Vec<EigenOut>,
    oracle: Vec<EigenOut>,
    pareto: Vec<f64>,
    agreement: AgreementOut,
}

impl From<&Agreement> for Report {
    fn from(a: &Agreement) -> Self {
        Report {
            input: (&a.matrix).into(),
            closed_form: spectrum_out(&a.closed_form),
            oracle: spectrum_out(&a.oracle),
            pareto: values_out(&a.pareto),
            agreement: AgreementOut {
                oracle_values: a.oracle_values,
                oracle_flags: a.oracle_flags,
                pareto_values: a.pareto_values,
                all: a.all(),
            },
        }
    }
}

#[derive(Serialize)]
struct Settings {
    tolerance: Tolerance,
    grid_points: usize,
    seed: Option<u64>,
}

#[derive(Serialize)]
struct SingleVerifyOut {
    #[serde(flatten)]
    settings: Settings,
    #[serde(flatten)]
    report: Report,
}

#[derive(Serialize)]
struct BatchVerifyOut {
    #[serde(flatten)]
    settings: Settings,
    count: usize,
    half_width: f64,
    all_agree: bool,
    failures: Vec<IndexedReport>,
}

#[derive(Serialize)]
struct IndexedReport {
    index: usize,
    #[serde(flatten)]
    report: Report,
}

fn agreement_table(a: &Agreement) -> String {
    let yes = |b: bool| if b { "yes" } else { "NO" };
    let mut out = format!("matrix: {}\n", fmt_matrix(&a.matrix));
    out.push_str(&format!(
        "closed form: {}\n",
        fmt_values(&a.closed_form.values())
    ));
    out.push_str(&format!(
        "oracle:      {}\n",
        fmt_values(&a.oracle.values())
    ));
    out.push_str(&format!("pareto:      {}\n", fmt_values(&a.pareto)));
    out.push_str(&format!(
        "agreement: oracle values {}, oracle flags {}, pareto {}\n",
        yes(a.oracle_values),
        yes(a.oracle_flags),
        yes(a.pareto_values)
    ));
    if !a.oracle_flags {
        out.push_str(&format!(
            "  closed-form interior {} boundary {}; oracle interior {} boundary {}\n",
            fmt_values(&a.closed_form.interior_values()),
            fmt_values(&a.closed_form.boundary_values()),
            fmt_values(&a.oracle.interior_values()),
            fmt_values(&a.oracle.boundary_values())
        ));
    }
    out
}

#[derive(Serialize)]
struct FormOut {
    preserver: bool,
    kind: PreserverKind,
    beta: f64,
    alpha: f64,
}

impl From<&PreserverForm> for FormOut {
    fn from(f: &PreserverForm) -> Self {
        FormOut {
            preserver: true,
            kind: f.kind(),
            beta: round12(f.beta()),
            alpha: round12(f.alpha()),
        }
    }
}

#[derive(Serialize)]
struct RejectOut {
    preserver: bool,
    reason: String,
}

#[derive(Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
enum VerdictOut {
    Consistent {
        trials: usize,
        seed: u64,
    },
    Falsified {
        trial: usize,
        seed: u64,
        witness: MatOut,
        image: MatOut,
        witness_spectrum: Vec<EigenOut>,
        image_spectrum: Vec<EigenOut>,
    },
}

impl From<&Verdict> for VerdictOut {
    fn from(v: &Verdict) -> Self {
        match v {
            Verdict::Consistent { trials, seed } => VerdictOut::Consistent {
                trials: *trials,
                seed: *seed,
            },
            Verdict::Falsified {
                trial,
                seed,
                witness,
                image,
                witness_spectrum,
                image_spectrum,
            } => VerdictOut::Falsified {
                trial: *trial,
                seed: *seed,
                witness: witness.into(),
                image: image.into(),
                witness_spectrum: spectrum_out(witness_spectrum),
                image_spectrum: spectrum_out(image_spectrum),
            },
        }
    }
}

#[derive(Serialize)]
struct CoeffOut<const N: usize> {
    basis: &'static str,
    coeffs: Vec<Vec<f64>>,
}

fn coeff_out<const N: usize>(basis: &'static str, coeffs: &[[f64; N]; N]) -> CoeffOut<N> {
    CoeffOut {
        basis,
        coeffs: coeffs
            .iter()
            .map(|r| r.iter().copied().map(round12).collect())
            .collect(),
    }
}

struct Output {
    code: i32,
    text: String,
}

fn json<T: Serialize>(v: &T) -> anyhow::Result<String> {
    Ok(serde_json::to_string_pretty(v)? + "\n")
}

fn cmd_spectrum(raw: &str, tol: &Tolerance, as_json: bool) -> anyhow::Result<Output> {
    let m = parse_matrix(raw)?;
    let s = l_spectrum(&m, tol)?;
    let text = if as_json {
        #[derive(Serialize)]
        struct Out<'a> {
            input: MatOut,
            tolerance: &'a Tolerance,
            spectrum: Vec<EigenOut>,
        }
        json(&Out {
            input: (&m).into(),
            tolerance: tol,
            spectrum: spectrum_out(&s),
        })?
    } else {
        spectrum_table(&s)
    };
    Ok(Output {
        code: EXIT_OK,
        text,
    })
}

fn cmd_verify(args: &VerifyArgs, tol: &Tolerance, as_json: bool) -> anyhow::Result<Output> {
    let cfg = OracleConfig::new(
        args.grid,
        OracleConfig::DEFAULT_PAD,
        OracleConfig::DEFAULT_RESIDUAL,
    )?;
    if let Some(count) = args.random {
        if !(args.range.is_finite() && args.range > 0.0) {
            bail!("--range must be positive");
        }
        let sweep = agreement_sweep(
            count,
            args.seed,
            args.range,
            &cfg,
            tol,
            Execution::default(),
        )?;
        return batch_output(&sweep, &cfg, tol, as_json);
    }
    let raw = args
        .matrix
        .as_deref()
        .ok_or_else(|| anyhow!("a matrix or --random N is required"))?;
    let m = parse_matrix(raw)?;
    let a = cross_check(&m, &cfg, tol)?;
    let code = if a.all() { EXIT_OK } else { EXIT_DISAGREE };
    let text = if as_json {
        json(&SingleVerifyOut {
            settings: Settings {
                tolerance: *tol,
                grid_points: cfg.grid_points(),
                seed: None,
            },
            report: (&a).into(),
        })?
    } else {
        agreement_table(&a)
    };
    Ok(Output { code, text })
}

fn batch_output(
    sweep: &SweepReport,
    cfg: &OracleConfig,
    tol: &Tolerance,
    as_json: bool,
) -> anyhow::Result<Output> {
    let code = if sweep.passed() {
        EXIT_OK
    } else {
        EXIT_DISAGREE
    };
    let text = if as_json {
        json(&BatchVerifyOut {
            settings: Settings {
                tolerance: *tol,
                grid_points: cfg.grid_points(),
                seed: Some(sweep.seed),
            },
            count: sweep.count,
            half_width: sweep.half_width,
            all_agree: sweep.passed(),
            failures: sweep
                .failures
                .iter()
                .map(|(i, a)| IndexedReport {
                    index: *i,
                    report: a.into(),
                })
                .collect(),
        })?
    } else {
        let mut out = format!(
            "verified {} random matrices (seed {}, entries in [-{}, {})): {} disagreement(s)\n",
            sweep.count,
            sweep.seed,
            sweep.half_width,
            sweep.half_width,
            sweep.failures.len()
        );
        for (i, a) in &sweep.failures {
            out.push_str(&format!("--- #{i}\n{}", agreement_table(a)));
        }
        out
    };
    Ok(Output { code, text })
}

fn cmd_preserver(cmd: &PreserverCmd, tol: &Tolerance, as_json: bool) -> anyhow::Result<Output> {
    match cmd {
        PreserverCmd::Make { kind, beta, space } => {
            let kind = match kind {
                KindArg::P => PreserverKind::PForm,
                KindArg::Q => PreserverKind::QForm,
            };
            let form = make_preserver(kind, *beta)?;
            let text = match space {
                Space::M2 => json(&coeff_out("E11,E12,E21,E22", form.to_linmap().coeffs()))?,
                Space::S2 => json(&coeff_out(
                    "E11,E22,E12+E21",
                    form.to_linmap_s2(tol.eq_tol)?.coeffs(),
                ))?,
            };
            Ok(Output {
                code: EXIT_OK,
                text,
            })
        }
        PreserverCmd::Check { map, trials, seed } => {
            if *trials == 0 {
                bail!("--trials must be at least 1");
            }
            let map = parse_map(map)?;
            let verdict = sample_test_preserver(&map, *trials, tol, *seed, Execution::default());
            let code = if verdict.is_falsified() {
                EXIT_DISAGREE
            } else {
                EXIT_OK
            };
            let text = if as_json {
                json(&VerdictOut::from(&verdict))?
            } else {
                match &verdict {
                    Verdict::Consistent { trials, seed } => {
                        format!("consistent: no counterexample in {trials} trials (seed {seed})\n")
                    }
                    Verdict::Falsified {
                        trial,
                        seed,
                        witness,
                        image,
                        witness_spectrum,
                        image_spectrum,
                    } => {
                        format!(
                            "falsified at trial {trial} (seed {seed})\nwitness: {}\n  spectrum {}\nimage:   {}\n  spectrum {}\n",
                            fmt_matrix(witness),
                            fmt_values(&witness_spectrum.values()),
                            fmt_matrix(image),
                            fmt_values(&image_spectrum.values())
                        )
                    }
                }
            };
            Ok(Output { code, text })
        }
        PreserverCmd::Classify { map } => {
            let map = parse_map(map)?;
            let result = match &map {
                AnyLinMap::M2(m) => classify_preserver_detailed(m, tol),
                AnyLinMap::S2(m) => classify_preserver_s2_detailed(m, tol),
            };
            let (code, text) = match result {
                Ok(form) => {
                    let text = if as_json {
                        json(&FormOut::from(&form))?
                    } else {
                        format!(
                            "{}, beta={}, alpha={}\n",
                            form.kind(),
                            round12(form.beta()),
                            round12(form.alpha())
                        )
                    };
                    (EXIT_OK, text)
                }
                Err(reason) => {
                    let text = if as_json {
                        json(&RejectOut {
                            preserver: false,
                            reason: reason.to_string(),
                        })?
                    } else {
                        format!("not a preserver ({reason})\n")
                    };
                    (EXIT_DISAGREE, text)
                }
            };
            Ok(Output { code, text })
        }
    }
}

/// Runs the CLI on `argv` (including the program name), writing results to
/// `out` and diagnostics to `err`. Returns the process exit code.
pub fn run<I, T>(argv: I, env_tol: Option<String>, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            let _ = if code == 0 {
                write!(out, "{rendered}")
            } else {
                write!(err, "{rendered}")
            };
            return if code == 0 { EXIT_OK } else { EXIT_USAGE };
        }
    };

    let result = tolerance_from(cli.tol, env_tol).and_then(|tol| match &cli.command {
        Command::Spectrum { matrix } => cmd_spectrum(matrix, &tol, cli.json),
        Command::Verify(args) => cmd_verify(args, &tol, cli.json),
        Command::Preserver(cmd) => cmd_preserver(cmd, &tol, cli.json),
    });
    match result {
        Ok(o) => {
            let _ = out.write_all(o.text.as_bytes());
            o.code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e:#}");
            EXIT_USAGE
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rounding() {
        assert_eq!(round12(0.5), 0.5);
        assert_eq!(round12(-0.0).to_bits(), 0.0_f64.to_bits());
        assert_eq!(round12(1.0 / 3.0), 0.333333333333);
        assert_eq!(round12(0.49999999999999994), 0.5);
        assert_eq!(round12(123456.7890123456), 123456.789012);
    }

    #[test]
    fn matrix_forms() {
        let m = Mat2::new(1.0, -2.0, 0.5, 4.0).unwrap();
        assert_eq!(parse_matrix("1,-2;0.5,4").unwrap(), m);
        assert_eq!(parse_matrix(" 1 , -2 ; 0.5 , 4 ").unwrap(), m);
        assert_eq!(parse_matrix(r#"{"a":1,"b":-2,"c":0.5,"d":4}"#).unwrap(), m);
        assert!(parse_matrix("1,2,3,4").is_err());
        assert!(parse_matrix("1,2;3").is_err());
        assert!(parse_matrix("1,x;3,4").is_err());
        assert!(parse_matrix("1,inf;3,4").is_err());
        assert!(parse_matrix("NaN,0;0,0").is_err());
        assert!(parse_matrix(r#"{"a":1,"b":2}"#).is_err());
    }

    #[test]
    fn tolerance_precedence() {
        assert_eq!(tolerance_from(None, None).unwrap(), Tolerance::default());
        assert_eq!(
            tolerance_from(None, Some("1e-10".into())).unwrap().eq_tol,
            1e-10
        );
        assert_eq!(
            tolerance_from(Some(1e-8), Some("1e-10".into()))
                .unwrap()
                .eq_tol,
            1e-8
        );
        assert!(tolerance_from(None, Some("abc".into())).is_err());
        assert!(tolerance_from(Some(1e-3), None).is_err());
    }
}
