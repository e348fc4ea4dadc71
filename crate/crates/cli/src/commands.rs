//! Subcommand implementations. Each returns the bytes for stdout and whether
//! every check passed.

use std::path::Path;
use std::time::Instant;

use num_integer::Integer;
use qtwist::affine::{affine_crossing_check, affine_twist_check, baxterize, check_ybe_spectral, z_zero_check};
use qtwist::freealgebra::{root_vector, twisted_bracket_suite, AlgebraElement, Params, Side};
use qtwist::hopfpairing::{pairing_constant, r_hat_from_theta, theta_cutoff, theta_truncated, PairingContext};
use qtwist::lyndon::lyndon_table;
use qtwist::report::CheckReport;
use qtwist::reps::{
    check_graded, check_intertwiner, check_relations, check_weights, fundamental_rep, psi_conjugation_check, rho_tilde,
};
use qtwist::rmatrix::{
    check_braid, check_ybe, crossing_check, r_from_rhat, rhat, rhat_xi_conjugated, twist_identity_check, ybe_twist_lemma_check,
};
use qtwist::rootsystem::{height, q_coords, Family, RSType, RVec};
use qtwist::scalars::{BigRational, NumericPoint, RatFunc};
use qtwist::sparse::SparseOperator;
use rayon::prelude::*;
use serde_json::json;

use crate::config::{Cli, Command, Format, ParamMode, RunConfig, Suite};
use crate::emit::{self, MatrixDoc, Table, CONVENTION};
use crate::CliError;

/// Largest Θ truncation height accepted on the command line.
pub const MAX_THETA_HEIGHT: usize = 6;

pub struct Outcome {
    pub stdout: String,
    pub ok: bool,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { stdout, ok: true }
    }
}

pub fn run(cli: Cli) -> Result<Outcome, CliError> {
    match cli.command {
        Command::Rmatrix { target, params, spectral, z, format } => {
            cmd_rmatrix(&RunConfig::new(&target, &params)?, spectral, z.as_deref(), format)
        }
        Command::Verify { suite, target, params, order, max_height, seed, instances, golden, no_timing, format } => {
            let cfg = RunConfig::new(&target, &params)?;
            let opts = VerifyOptions { order, max_height, seed, instances, timing: !no_timing };
            cmd_verify(&cfg, suite, &opts, golden.as_deref(), format)
        }
        Command::Pbw { target, params, max_height, format } => cmd_pbw(&RunConfig::new(&target, &params)?, max_height, format),
        Command::Pairing { target, params, oracle, max_height, format } => {
            let cfg = RunConfig::new(&target, &params)?;
            let table = pairing_table(&cfg, oracle, max_height)?;
            Ok(Outcome { ok: table_matches(&table), stdout: render_table(&table, format, &cfg, "pairing")? })
        }
        Command::Theta { target, params, height, check_against_rmatrix, format } => {
            cmd_theta(&RunConfig::new(&target, &params)?, height, check_against_rmatrix, format)
        }
        Command::Lyndon { target, format } => {
            let t = RSType::new(target.family, target.rank).map_err(|e| CliError::Usage(e.to_string()))?;
            let table = lyndon_rows(t)?;
            let cfg = RunConfig { rstype: t, mode: ParamMode::Two, numeric: None };
            Ok(Outcome::ok(render_table(&table, format, &cfg, "lyndon")?))
        }
    }
}

/// `a1+2a2` for `α_1 + 2α_2`.
pub fn root_label(t: RSType, g: &RVec) -> Result<String, CliError> {
    let c = q_coords(t, g)?;
    let parts: Vec<String> = c
        .iter()
        .enumerate()
        .filter(|(_, &x)| x != 0)
        .map(|(i, &x)| if x == 1 { format!("a{}", i + 1) } else { format!("{x}a{}", i + 1) })
        .collect();
    Ok(parts.join("+"))
}

fn root_order_of(x: &RatFunc) -> u32 {
    x.num().terms().iter().chain(x.den().terms()).fold(1i64, |acc, (e, _)| acc.lcm(e.a.denom()).lcm(e.b.denom())) as u32
}

fn numeric_point(cfg: &RunConfig, x: &RatFunc, z: Option<&BigRational>) -> Result<Option<NumericPoint>, CliError> {
    let Some((r, s)) = &cfg.numeric else { return Ok(None) };
    let zero = BigRational::from_integer(0.into());
    let z = z.cloned().unwrap_or_else(|| zero.clone());
    Ok(Some(NumericPoint::new(r.clone(), s.clone(), z, zero, root_order_of(x))?))
}

/// The printed form of a scalar: canonical symbolic string, or its value in numeric mode.
fn render_value(cfg: &RunConfig, x: &RatFunc, z: Option<&BigRational>) -> Result<String, CliError> {
    match numeric_point(cfg, x, z)? {
        None => Ok(x.to_string()),
        Some(pt) => Ok(pt.eval(x).map_err(|e| CliError::Usage(format!("cannot evaluate {x}: {e}")))?.to_string()),
    }
}

fn render_element(cfg: &RunConfig, x: &AlgebraElement) -> Result<String, CliError> {
    if cfg.numeric.is_none() {
        return Ok(x.to_string());
    }
    let mapped = x.map_coeffs(|c| {
        let pt = numeric_point(cfg, c, None).map_err(|e| qtwist::Error::Invalid(e.to_string()))?.expect("numeric");
        Ok(RatFunc::from_rational(pt.eval(c)?))
    })?;
    Ok(mapped.to_string())
}

fn cmd_rmatrix(cfg: &RunConfig, spectral: bool, z: Option<&str>, format: Format) -> Result<Outcome, CliError> {
    let t = cfg.rstype;
    let z = match (spectral, z, cfg.mode) {
        (true, Some(z), ParamMode::Numeric) => Some(crate::config::parse_rational("z", z)?),
        (true, None, ParamMode::Numeric) => return Err(CliError::Usage("numeric --spectral needs --z".into())),
        (_, Some(_), _) => return Err(CliError::Usage("--z applies only to numeric --spectral".into())),
        _ => None,
    };
    let m = if spectral { baxterize(t, cfg.symbolic())? } else { rhat(t, cfg.symbolic())? };
    let entries = emit::entries_of(&m, |x| render_value(cfg, x, z.as_ref()))?;
    let doc = MatrixDoc {
        rstype: t.family.letter().to_string(),
        rank: t.rank,
        params: cfg.mode_name().into(),
        dim: m.dim(),
        convention: CONVENTION.into(),
        spectral,
        r: cfg.numeric.as_ref().map(|(r, _)| r.to_string()),
        s: cfg.numeric.as_ref().map(|(_, s)| s.to_string()),
        z: z.map(|z| z.to_string()),
        entries,
    };
    let out = match format {
        Format::Json => emit::to_json(&doc),
        Format::Csv => emit::to_csv(&doc.entries)?,
        Format::Latex => emit::to_latex(&doc.entries, doc.dim)?,
        Format::Text => emit::to_text(&doc.entries),
    };
    Ok(Outcome::ok(out))
}

pub struct VerifyOptions {
    pub order: usize,
    pub max_height: Option<usize>,
    pub seed: u64,
    pub instances: usize,
    pub timing: bool,
}

type Group = Box<dyn Fn() -> qtwist::Result<Vec<CheckReport>> + Send + Sync>;

fn group<F>(f: F) -> Group
where
    F: Fn() -> qtwist::Result<Vec<CheckReport>> + Send + Sync + 'static,
{
    Box::new(f)
}

fn one<F>(f: F) -> Group
where
    F: Fn() -> qtwist::Result<CheckReport> + Send + Sync + 'static,
{
    Box::new(move || Ok(vec![f()?]))
}

fn needs_bcd(t: RSType, suite: &str) -> Result<(), CliError> {
    if t.family == Family::A {
        return Err(CliError::Usage(format!("the {suite} suite is defined for types B, C and D")));
    }
    Ok(())
}

fn suite_groups(cfg: &RunConfig, suite: Suite, opts: &VerifyOptions) -> Result<Vec<Group>, CliError> {
    let t = cfg.rstype;
    let p = cfg.require_symbolic()?;
    let two = p == Params::TwoParam;
    Ok(match suite {
        Suite::Braid => vec![one(move || check_braid(&rhat(t, p)?))],
        Suite::Ybe => vec![one(move || check_ybe(&r_from_rhat(&rhat(t, p)?)?))],
        Suite::YbeAffine => vec![one(move || check_ybe_spectral(t, p)), one(move || z_zero_check(t, p))],
        Suite::Crossing => {
            needs_bcd(t, "crossing")?;
            vec![group(move || crossing_check(t, p))]
        }
        Suite::CrossingAffine => {
            needs_bcd(t, "crossing-affine")?;
            if opts.order == 0 {
                return Err(CliError::Usage("--order must be positive".into()));
            }
            let order = opts.order;
            vec![group(move || affine_crossing_check(t, order))]
        }
        Suite::Relations => {
            let mut g = vec![
                group(move || check_relations(&fundamental_rep(t, p)?)),
                one(move || check_weights(&fundamental_rep(t, p)?)),
                one(move || Ok(check_graded(&fundamental_rep(t, p)?))),
            ];
            if two {
                g.push(group(move || {
                    let tilde = rho_tilde(t)?;
                    let mut out = check_relations(&tilde)?;
                    out.iter_mut().for_each(|r| r.name = format!("ρ̃ {}", r.name));
                    Ok(out)
                }));
                g.push(one(move || psi_conjugation_check(t)));
            }
            g
        }
        Suite::Intertwiner => {
            let mut g = vec![group(move || check_intertwiner(&rhat(t, p)?, &fundamental_rep(t, p)?))];
            if two {
                g.push(group(move || {
                    let mut out = check_intertwiner(&rhat_xi_conjugated(t)?, &rho_tilde(t)?)?;
                    out.iter_mut().for_each(|r| r.name = format!("ρ̃ with ξR̂_qξ^-1: {}", r.name));
                    Ok(out)
                }));
            }
            g
        }
        Suite::Twist => {
            let (seed, n) = (opts.seed, opts.instances);
            vec![
                one(move || twist_identity_check(t)),
                group(move || affine_twist_check(t)),
                group(move || ybe_twist_lemma_check(t)),
                group(move || twisted_bracket_suite(t, n, seed)),
            ]
        }
        Suite::Pairing | Suite::Theta => unreachable!("handled by table-producing suites"),
    })
}

struct Timed {
    report: CheckReport,
    millis: f64,
}

fn run_groups(groups: &[Group]) -> Result<Vec<Timed>, CliError> {
    let results: Vec<qtwist::Result<(Vec<CheckReport>, f64)>> = groups
        .par_iter()
        .map(|g| {
            let start = Instant::now();
            let reports = g()?;
            Ok((reports, start.elapsed().as_secs_f64() * 1e3))
        })
        .collect();
    let mut out = Vec::new();
    for r in results {
        let (reports, ms) = r?;
        let each = ms / reports.len().max(1) as f64;
        out.extend(reports.into_iter().map(|report| Timed { report, millis: each }));
    }
    Ok(out)
}

fn golden_report(cfg: &RunConfig, path: &Path) -> Result<CheckReport, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    let t = cfg.rstype;
    let p = cfg.require_symbolic()?;
    let is_json = text.trim_start().starts_with('{');
    let (spectral, found) = if is_json {
        let (doc, m) = emit::parse_json(&text)?;
        let same = doc.rstype == t.family.letter().to_string() && doc.rank == t.rank && doc.params == cfg.mode_name();
        if !same {
            return Err(CliError::Usage(format!(
                "golden file is for {}{} params {}, not {t} params {}",
                doc.rstype,
                doc.rank,
                doc.params,
                cfg.mode_name()
            )));
        }
        (doc.spectral, m)
    } else {
        (false, emit::parse_csv(&text, t.vec_dim())?)
    };
    let expected = if spectral { baxterize(t, p)? } else { rhat(t, p)? };
    Ok(CheckReport::compare(format!("golden {}", path.display()), &found, &expected))
}

fn cmd_verify(
    cfg: &RunConfig,
    suite: Suite,
    opts: &VerifyOptions,
    golden: Option<&Path>,
    format: Format,
) -> Result<Outcome, CliError> {
    let t = cfg.rstype;
    let mut timed = Vec::new();
    if let Some(path) = golden {
        let start = Instant::now();
        let report = golden_report(cfg, path)?;
        timed.push(Timed { report, millis: start.elapsed().as_secs_f64() * 1e3 });
    }
    let mut preface = None;
    match suite {
        Suite::Pairing => {
            cfg.require_symbolic()?;
            let start = Instant::now();
            let table = pairing_table(cfg, true, opts.max_height)?;
            let each = start.elapsed().as_secs_f64() * 1e3 / table.rows.len().max(1) as f64;
            for row in &table.rows {
                let name = format!("pairing {}", row[0]);
                let report = CheckReport::from_bool(name, row[4] == "yes", format!("recursion {} vs oracle {}", row[2], row[3]));
                timed.push(Timed { report, millis: each });
            }
            preface = Some(table);
        }
        Suite::Theta => {
            let p = cfg.require_symbolic()?;
            let start = Instant::now();
            let report = theta_check(t, p, opts.max_height)?;
            timed.push(Timed { report, millis: start.elapsed().as_secs_f64() * 1e3 });
        }
        _ => timed.extend(run_groups(&suite_groups(cfg, suite, opts)?)?),
    }
    let ok = timed.iter().all(|x| x.report.passed);
    let suite_name = suite_label(suite);
    let passed = timed.iter().filter(|x| x.report.passed).count();
    // The affine crossing identities are stated for the one-parameter matrix.
    let mode = if suite == Suite::CrossingAffine { "one" } else { cfg.mode_name() };
    let summary = format!("{} {t} params={mode}: {passed}/{} passed", suite_name, timed.len());
    let stdout = match format {
        Format::Json => {
            let reports: Vec<serde_json::Value> = timed
                .iter()
                .map(|x| {
                    let mut v = json!({ "name": x.report.name, "passed": x.report.passed, "detail": x.report.detail });
                    if opts.timing {
                        v["millis"] = json!((x.millis * 1e3).round() / 1e3);
                    }
                    v
                })
                .collect();
            let mut doc = json!({
                "suite": suite_name,
                "type": t.family.letter().to_string(),
                "rank": t.rank,
                "params": mode,
                "passed": ok,
                "reports": reports,
            });
            if let Some(tab) = &preface {
                doc["table"] = tab.to_json_value();
            }
            serde_json::to_string_pretty(&doc).expect("serializable") + "\n"
        }
        Format::Text => {
            let mut s = preface.as_ref().map(Table::to_text).unwrap_or_default();
            for x in &timed {
                s.push_str(&x.report.to_string());
                if opts.timing {
                    s.push_str(&format!(" [{:.1} ms]", x.millis));
                }
                s.push('\n');
            }
            s + &summary + "\n"
        }
        Format::Csv | Format::Latex => {
            let mut cols = vec!["identity", "result", "detail"];
            if opts.timing {
                cols.push("ms");
            }
            let mut tab = Table::new(&cols);
            for x in &timed {
                let mut row = vec![
                    x.report.name.clone(),
                    if x.report.passed { "PASS" } else { "FAIL" }.to_string(),
                    x.report.detail.clone().unwrap_or_default(),
                ];
                if opts.timing {
                    row.push(format!("{:.1}", x.millis));
                }
                tab.push(row);
            }
            if format == Format::Csv {
                tab.to_csv()?
            } else {
                tab.to_latex()
            }
        }
    };
    Ok(Outcome { stdout, ok })
}

fn suite_label(s: Suite) -> &'static str {
    match s {
        Suite::Braid => "braid",
        Suite::Ybe => "ybe",
        Suite::YbeAffine => "ybe-affine",
        Suite::Crossing => "crossing",
        Suite::CrossingAffine => "crossing-affine",
        Suite::Relations => "relations",
        Suite::Intertwiner => "intertwiner",
        Suite::Twist => "twist",
        Suite::Pairing => "pairing",
        Suite::Theta => "theta",
    }
}

fn roots_up_to(t: RSType, max_height: Option<usize>) -> Result<Vec<(usize, RVec)>, CliError> {
    let tab = lyndon_table(t);
    let mut out = Vec::new();
    for (k, g) in tab.roots.iter().enumerate() {
        if max_height.is_none_or(|h| height(t, g).map(|x| x as usize <= h).unwrap_or(false)) {
            out.push((k, g.clone()));
        }
    }
    Ok(out)
}

fn split_label(t: RSType, k: usize) -> Result<String, CliError> {
    let tab = lyndon_table(t);
    Ok(match tab.costandard[k] {
        None => "-".into(),
        Some((a, b)) => format!("{} | {}", root_label(t, &tab.roots[a])?, root_label(t, &tab.roots[b])?),
    })
}

fn cmd_pbw(cfg: &RunConfig, max_height: Option<usize>, format: Format) -> Result<Outcome, CliError> {
    let t = cfg.rstype;
    let p = cfg.symbolic();
    let tab = lyndon_table(t);
    let rows = roots_up_to(t, max_height)?;
    let built: Vec<Result<Vec<String>, CliError>> = rows
        .par_iter()
        .map(|(k, g)| {
            let e = root_vector(t, g, Side::Plus, p)?;
            let c = pairing_constant(t, g, p)?;
            Ok(vec![
                root_label(t, g)?,
                tab.words[*k].to_string(),
                split_label(t, *k)?,
                render_element(cfg, &e)?,
                render_value(cfg, &c, None)?,
            ])
        })
        .collect();
    let mut table = Table::new(&["gamma", "word", "split", "e_gamma", "pairing"]);
    for r in built {
        table.push(r?);
    }
    Ok(Outcome::ok(render_table(&table, format, cfg, "pbw")?))
}

fn pairing_table(cfg: &RunConfig, oracle: bool, max_height: Option<usize>) -> Result<Table, CliError> {
    let t = cfg.rstype;
    let p = cfg.symbolic();
    let tab = lyndon_table(t);
    let ctx = PairingContext::new(t, p);
    let rows = roots_up_to(t, max_height)?;
    let built: Vec<Result<Vec<String>, CliError>> = rows
        .par_iter()
        .map(|(k, g)| {
            let rec = pairing_constant(t, g, p)?;
            let (orc, flag) = if oracle {
                let f = root_vector(t, g, Side::Minus, p)?;
                let e = root_vector(t, g, Side::Plus, p)?;
                let v = ctx.pair(&f, &e)?;
                let same = v == rec;
                (render_value(cfg, &v, None)?, if same { "yes" } else { "no" }.to_string())
            } else {
                ("-".into(), "-".into())
            };
            Ok(vec![root_label(t, g)?, tab.words[*k].to_string(), render_value(cfg, &rec, None)?, orc, flag])
        })
        .collect();
    let mut table = Table::new(&["gamma", "word", "recursion", "oracle", "match"]);
    for r in built {
        table.push(r?);
    }
    Ok(table)
}

fn table_matches(t: &Table) -> bool {
    t.rows.iter().all(|r| r[4] != "no")
}

fn lyndon_rows(t: RSType) -> Result<Table, CliError> {
    let tab = lyndon_table(t);
    let mut table = Table::new(&["gamma", "word", "split", "split_words"]);
    for (k, g) in tab.roots.iter().enumerate() {
        let words = match tab.costandard[k] {
            None => "-".into(),
            Some((a, b)) => format!("{} {}", tab.words[a], tab.words[b]),
        };
        table.push(vec![root_label(t, g)?, tab.words[k].to_string(), split_label(t, k)?, words]);
    }
    Ok(table)
}

fn render_table(table: &Table, format: Format, cfg: &RunConfig, what: &str) -> Result<String, CliError> {
    let t = cfg.rstype;
    Ok(match format {
        Format::Text => table.to_text(),
        Format::Csv => table.to_csv()?,
        Format::Latex => table.to_latex(),
        Format::Json => {
            let doc = json!({
                "table": what,
                "type": t.family.letter().to_string(),
                "rank": t.rank,
                "params": cfg.mode_name(),
                "rows": table.to_json_value(),
            });
            serde_json::to_string_pretty(&doc).expect("serializable") + "\n"
        }
    })
}

fn theta_height(t: RSType, p: Params, height: Option<usize>) -> Result<usize, CliError> {
    let needed = theta_cutoff(&fundamental_rep(t, p)?).iter().map(|c| c.iter().sum::<i64>() as usize).max().unwrap_or(0);
    let h = height.unwrap_or(needed);
    if h > MAX_THETA_HEIGHT {
        return Err(CliError::Usage(format!("height cutoff {h} exceeds the maximum {MAX_THETA_HEIGHT}")));
    }
    Ok(h)
}

/// `R̂` rebuilt from the truncated `Θ` on `V ⊗ V`, against the closed form.
fn theta_check(t: RSType, p: Params, height: Option<usize>) -> Result<CheckReport, CliError> {
    let h = theta_height(t, p, height)?;
    let ctx = PairingContext::new(t, p);
    let rebuilt: SparseOperator = r_hat_from_theta(&ctx, &fundamental_rep(t, p)?, h)?;
    Ok(CheckReport::compare(format!("R̂ from Θ (height ≤ {h})"), &rebuilt, &rhat(t, p)?))
}

fn cmd_theta(cfg: &RunConfig, height: Option<usize>, check: bool, format: Format) -> Result<Outcome, CliError> {
    let t = cfg.rstype;
    let p = cfg.symbolic();
    let h = theta_height(t, p, height)?;
    let ctx = PairingContext::with_max_height(t, p, h);
    let comps = theta_truncated(&ctx, h)?;
    let word = |w: &[qtwist::freealgebra::Gen]| {
        if w.is_empty() {
            "1".to_string()
        } else {
            w.iter().map(|g| g.to_string()).collect::<Vec<_>>().join("*")
        }
    };
    let mut table = Table::new(&["mu", "left", "right", "coefficient"]);
    for comp in &comps {
        let mu: Vec<String> = comp.mu.iter().map(|x| x.to_string()).collect();
        for ((l, r), c) in comp.tensor() {
            table.push(vec![format!("[{}]", mu.join(",")), word(&l), word(&r), render_value(cfg, &c, None)?]);
        }
    }
    let verdict = if check {
        cfg.require_symbolic()?;
        Some(theta_check(t, p, Some(h))?)
    } else {
        None
    };
    let ok = verdict.as_ref().is_none_or(|v| v.passed);
    let stdout = match format {
        Format::Json => {
            let mut doc = json!({
                "type": t.family.letter().to_string(),
                "rank": t.rank,
                "params": cfg.mode_name(),
                "height": h,
                "components": table.to_json_value(),
            });
            if let Some(v) = &verdict {
                doc["check"] = json!(if v.passed { "MATCH" } else { "MISMATCH" });
                doc["detail"] = json!(v.detail);
            }
            serde_json::to_string_pretty(&doc).expect("serializable") + "\n"
        }
        _ => {
            let mut s = render_table(&table, format, cfg, "theta")?;
            if let Some(v) = &verdict {
                match &v.detail {
                    _ if v.passed => s.push_str("MATCH\n"),
                    Some(d) => s.push_str(&format!("MISMATCH {d}\n")),
                    None => s.push_str("MISMATCH\n"),
                }
            }
            s
        }
    };
    Ok(Outcome { stdout, ok })
}
