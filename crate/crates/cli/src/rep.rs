use std::fmt::Write as _;
use std::path::Path;

use anyhow::Context;
use num_complex::Complex64;
use qhe_cyclic::cyclic::solve_generic_coefficients;
use qhe_cyclic::ladder::{build_ladder, intertwiner, solve_ladder_magnitudes};
use qhe_cyclic::rep::AnyRep;
use qhe_cyclic::{cyclicity_check, CyclicityReport, LadderRep, PrimitiveRoot, RelationReport, Representation};
use serde_json::{json, Value};

use crate::args::{BaseArgs, InputArgs, LadderCmd, LambdaArgs, RepCmd, RootArgs};
use crate::report::Report;

fn root(args: &RootArgs) -> anyhow::Result<PrimitiveRoot> {
    Ok(PrimitiveRoot::new(args.p, args.k)?)
}

fn lambda(q: &PrimitiveRoot, args: &LambdaArgs) -> Complex64 {
    match (args.s, args.phase) {
        (Some(s), _) => q.pow(s),
        (None, Some(phase)) => Complex64::from_polar(1.0, phase),
        (None, None) => Complex64::new(1.0, 0.0),
    }
}

/// Reads a representation from a bare document or from the `result` of a
/// report written by this tool.
fn read_rep(path: &Path) -> anyhow::Result<AnyRep> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let value: Value = serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))?;
    let doc = match value.get("result") {
        Some(inner) if value.get("tool").is_some() => inner.clone(),
        _ => value,
    };
    Ok(AnyRep::from_json(&doc.to_string())?)
}

/// The ladder representation and the base it was built with.
fn ladder(root_args: &RootArgs, base: &BaseArgs, phases: Option<&[f64]>) -> anyhow::Result<(LadderRep, f64)> {
    let q = root(root_args)?;
    let sol = solve_ladder_magnitudes(&q, base.base)?;
    Ok((build_ladder(&q, &sol, phases)?, sol.base))
}

fn ladder_or_input(input: &InputArgs, root_args: &RootArgs, base: &BaseArgs) -> anyhow::Result<(AnyRep, Option<f64>)> {
    match &input.input {
        Some(path) => Ok((read_rep(path)?, None)),
        None => ladder(root_args, base, None).map(|(rep, c)| (AnyRep::Ladder(rep), Some(c))),
    }
}

/// Names every residual above tolerance.
fn relation_failure(r: &RelationReport) -> Option<String> {
    if r.pass {
        return None;
    }
    let mut msg = String::new();
    let tol = r.tolerance;
    if r.commutator_residual > tol {
        let _ = writeln!(msg, "commutator_residual = {:e} exceeds {tol:e}", r.commutator_residual);
    }
    let conj = r.conjugation_residual_plus.min(r.conjugation_residual_minus);
    if conj > tol {
        let _ = writeln!(
            msg,
            "conjugation_residual_plus = {:e}, conjugation_residual_minus = {:e} both exceed {tol:e}",
            r.conjugation_residual_plus, r.conjugation_residual_minus
        );
    }
    for (i, u) in r.unitarity_residuals.iter().enumerate() {
        if *u > tol {
            let _ = writeln!(msg, "unitarity_residuals[{i}] = {u:e} exceeds {tol:e}");
        }
    }
    Some(msg)
}

fn cyclicity_failure(c: &CyclicityReport) -> Option<String> {
    if c.is_cyclic {
        return None;
    }
    let mut msg = format!(
        "not cyclic: raising_residual = {:e}, lowering_residual = {:e}, epow_scalar = {}\n",
        c.raising_residual, c.lowering_residual, c.epow_scalar
    );
    for (op, col) in &c.zero_columns {
        let _ = writeln!(msg, "E{op} annihilates basis state {}", col + 1);
    }
    Some(msg)
}

fn verify(command: &'static str, rep: &dyn Representation, tol: f64, with_cyclicity: bool) -> anyhow::Result<Report> {
    let relations = rep.verify(tol)?;
    let cyclicity = cyclicity_check(rep);
    let mut failure = relation_failure(&relations);
    if with_cyclicity {
        if let Some(c) = cyclicity_failure(&cyclicity) {
            failure = Some(failure.unwrap_or_default() + &c);
        }
    }
    let mut report = Report::new(command, &json!({ "relations": relations, "cyclicity": cyclicity }))?;
    report.failure = failure;
    Ok(report)
}

pub fn run_rep(cmd: &RepCmd, tol: f64) -> anyhow::Result<Report> {
    match cmd {
        RepCmd::Solve { root: r, lambda: l, base } => {
            let q = root(r)?;
            let rep = solve_generic_coefficients(&q, lambda(&q, l), base.base, None)?;
            let offsets = qhe_cyclic::cyclic::generic_magnitude_offsets(&q, rep.lambda())?;
            let result = json!({
                "p": q.p(),
                "k": q.k(),
                "lambda": rep.lambda(),
                "infimum_base": offsets.infimum_base,
                "base": rep.g()[0].norm_sqr(),
                "g": rep.g(),
                "f": rep.f(),
                "magnitudes": rep.g().iter().map(|g| g.norm_sqr()).collect::<Vec<_>>(),
            });
            Report::new("rep solve", &result)?.resolve("lambda", rep.lambda())?.resolve("base", rep.g()[0].norm_sqr())
        }
        RepCmd::Build { root: r, lambda: l, base, phases } => {
            let q = root(r)?;
            let rep = solve_generic_coefficients(&q, lambda(&q, l), base.base, phases.as_deref())?;
            let doc: Value = serde_json::from_str(&rep.to_json()?)?;
            Report::new("rep build", &doc)?.resolve("lambda", rep.lambda())?.resolve("base", rep.g()[0].norm_sqr())
        }
        RepCmd::Verify { input } => {
            let path = input.input.as_deref().context("--input is required")?;
            let rep = read_rep(path)?;
            verify("rep verify", rep.as_rep(), tol, true)
        }
        RepCmd::Intertwine { root: r, base, s } => {
            let (rep, c) = ladder(r, base, None)?;
            let tw = intertwiner(&rep, *s)?;
            let mut report = Report::new("rep intertwine", &tw)?.resolve("base", c)?;
            if tw.residual > tol * rep.dim() as f64 {
                report.failure = Some(format!("intertwiner residual = {:e} exceeds {:e}", tw.residual, tol * rep.dim() as f64));
            }
            Ok(report)
        }
    }
}

pub fn run_ladder(cmd: &LadderCmd, tol: f64) -> anyhow::Result<Report> {
    match cmd {
        LadderCmd::Magnitudes { root: r, base } => {
            let q = root(r)?;
            let sol = solve_ladder_magnitudes(&q, base.base)?;
            let table = sol.magnitudes.iter().map(|m| m.to_string()).collect::<Vec<_>>().join(" ") + "\n";
            let csv = sol.magnitudes.iter().enumerate().fold(String::from("i,magnitude\n"), |mut s, (i, m)| {
                let _ = writeln!(s, "{},{m:e}", i + 1);
                s
            });
            Ok(Report::new("ladder magnitudes", &sol)?.table(table).csv(csv).resolve("base", sol.base)?)
        }
        LadderCmd::Build { root: r, base, phases } => {
            let (rep, c) = ladder(r, base, phases.as_deref())?;
            let doc: Value = serde_json::from_str(&rep.to_json()?)?;
            Report::new("ladder build", &doc)?.resolve("base", c)
        }
        LadderCmd::Verify { input, root: r, base } => {
            let (rep, c) = ladder_or_input(input, r, base)?;
            verify("ladder verify", rep.as_rep(), tol, false)?.resolve("base", c)
        }
        LadderCmd::Cyclicity { input, root: r, base, zero } => {
            let (rep, c) = ladder_or_input(input, r, base)?;
            let mut rep = match rep {
                AnyRep::Ladder(rep) => rep,
                AnyRep::Generic(_) => anyhow::bail!("--input must hold a ladder representation"),
            };
            for i in zero {
                rep = rep.with_coefficient(*i, Complex64::default())?;
            }
            let cyc = cyclicity_check(&rep);
            let mut report = Report::new("ladder cyclicity", &cyc)?.resolve("base", c)?;
            report.failure = cyclicity_failure(&cyc);
            Ok(report)
        }
    }
}
