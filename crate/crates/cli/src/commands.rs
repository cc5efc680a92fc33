use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use loghankel::families::{extremal_coeffs, sharp_bound};
use loghankel::hankel::{h21_paths, log_coeffs};
use loghankel::search::{sweep, SearchReport, SweepFamily};
use loghankel::ymax::{y_certify_batch, YInput, CERT_ANGULAR, CERT_RADIAL};
use loghankel::{global_max, CoeffTriple, FamilySpec};

use crate::args::{FamilyArgs, FamilyName, GammaSource, GridArgs};
use crate::report::{cx, Report, Row};

/// Gap below zero tolerated as rounding in `verify`.
const GAP_FLOOR: f64 = -1e-9;

/// Tables list every row up to this many, then only notable ones.
const TABLE_LIMIT: usize = 20;

pub type CmdResult = Result<Report, String>;

fn row(value: Value) -> Row {
    match value {
        Value::Object(map) => map,
        _ => unreachable!("rows are built from object literals"),
    }
}

fn family_spec(
    name: FamilyName,
    alpha: f64,
    beta: f64,
    nu: Option<f64>,
    lambda: Option<f64>,
) -> Result<FamilySpec, String> {
    let spec = match name {
        FamilyName::Spirallike => FamilySpec::spirallike(alpha, beta),
        FamilyName::Ozaki => FamilySpec::ozaki(nu.ok_or("--nu is required for ozaki")?),
        FamilyName::Robertson => {
            FamilySpec::robertson(lambda.ok_or("--lambda is required for robertson")?)
        }
    };
    spec.map_err(|e| e.to_string())
}

fn spec_from(args: &FamilyArgs) -> Result<FamilySpec, String> {
    family_spec(args.family, args.alpha, args.beta, args.nu, args.lambda)
}

fn spec_config(spec: &FamilySpec) -> Row {
    row(match *spec {
        FamilySpec::Spirallike { alpha, beta } => {
            json!({ "family": "spirallike", "alpha": alpha, "beta": beta })
        }
        FamilySpec::Ozaki { nu } => json!({ "family": "ozaki", "nu": nu }),
        FamilySpec::Robertson { lambda } => json!({ "family": "robertson", "lambda": lambda }),
    })
}

fn search_row(r: &SearchReport) -> Row {
    row(json!({
        "family": r.family.to_string(),
        "bound": r.bound,
        "max_abs_h21": r.max_abs_h21,
        "gap": r.gap,
        "argmax": {
            "p1": r.argmax.p1,
            "p2": cx(r.argmax.p2),
            "p3": cx(r.argmax.p3),
            "phase": r.argmax_phase,
        },
        "evaluations": r.grid.evaluations,
    }))
}

fn gap_ok(gap: f64, tol: f64) -> bool {
    (GAP_FLOOR..=tol).contains(&gap)
}

pub fn verify(family: &FamilyArgs, grid: &GridArgs, tol: f64) -> CmdResult {
    let spec = spec_from(family)?;
    let report = global_max(&spec, grid.coarse, grid.refine_rounds).map_err(|e| e.to_string())?;
    let mut config = spec_config(&spec);
    config.insert("coarse".into(), grid.coarse.into());
    config.insert("refine_rounds".into(), grid.refine_rounds.into());
    config.insert("tol".into(), tol.into());
    Ok(Report {
        command: "verify",
        config,
        pass: gap_ok(report.gap, tol),
        worst_residual: report.gap.abs(),
        results: vec![search_row(&report)],
        summary: Row::new(),
        table_rows: None,
    })
}

pub fn sweep_cmd(
    family: FamilyName,
    values: &[f64],
    beta: f64,
    grid: &GridArgs,
    tol: f64,
) -> CmdResult {
    let (sweep_family, name, swept) = match family {
        FamilyName::Spirallike => (SweepFamily::Spirallike { beta }, "spirallike", "alpha"),
        FamilyName::Ozaki => (SweepFamily::Ozaki, "ozaki", "nu"),
        FamilyName::Robertson => (SweepFamily::Robertson, "robertson", "lambda"),
    };
    let out =
        sweep(sweep_family, values, grid.coarse, grid.refine_rounds).map_err(|e| e.to_string())?;
    let mut config = row(json!({ "family": name, "swept": swept, "values": values }));
    if family == FamilyName::Spirallike {
        config.insert("beta".into(), beta.into());
    }
    config.insert("coarse".into(), grid.coarse.into());
    config.insert("refine_rounds".into(), grid.refine_rounds.into());
    config.insert("tol".into(), tol.into());

    let results: Vec<Row> = values
        .iter()
        .zip(&out.reports)
        .map(|(&v, r)| {
            let mut row = Row::new();
            row.insert(swept.into(), v.into());
            row.extend(search_row(r));
            row
        })
        .collect();
    Ok(Report {
        command: "sweep",
        config,
        pass: out.reports.iter().all(|r| gap_ok(r.gap, tol)),
        worst_residual: out.reports.iter().map(|r| r.gap.abs()).fold(0.0, f64::max),
        results,
        summary: row(json!({ "bound_trend": out.bound_trend.name() })),
        table_rows: None,
    })
}

pub fn ymax_certify(n: usize, seed: u64, tol: f64, inject: &[[f64; 3]]) -> CmdResult {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut inputs = Vec::with_capacity(inject.len() + n);
    for &[a, b, c] in inject {
        inputs.push(YInput::new(a, b, c).map_err(|e| e.to_string())?);
    }
    for _ in 0..n {
        let mut draw = || rng.gen_range(-5.0..=5.0);
        let (a, b, c) = (draw(), draw(), draw());
        inputs.push(YInput::new(a, b, c).expect("finite draw"));
    }
    let certs = y_certify_batch(&inputs, tol);

    let results: Vec<Row> = certs
        .iter()
        .enumerate()
        .map(|(i, cert)| {
            row(json!({
                "index": i,
                "source": if i < inject.len() { "injected" } else { "random" },
                "a": cert.input.a,
                "b": cert.input.b,
                "c": cert.input.c,
                "case": cert.closed.case.label(),
                "closed": cert.closed.value,
                "oracle": cert.oracle,
                "discrepancy": cert.discrepancy,
                "allowance": cert.allowance,
                "pass": cert.pass,
            }))
        })
        .collect();
    let passed = certs.iter().filter(|c| c.pass).count();
    let worst = certs
        .iter()
        .enumerate()
        .max_by(|(_, x), (_, y)| x.discrepancy.total_cmp(&y.discrepancy));
    let table_rows = (certs.len() > TABLE_LIMIT).then(|| {
        let mut idx: Vec<usize> = (0..certs.len())
            .filter(|&i| i < inject.len() || !certs[i].pass)
            .collect();
        if let Some((w, _)) = worst {
            if !idx.contains(&w) {
                idx.push(w);
                idx.sort_unstable();
            }
        }
        idx
    });
    Ok(Report {
        command: "ymax-certify",
        config: row(json!({
            "n": n,
            "seed": seed,
            "tol": tol,
            "radial": CERT_RADIAL,
            "angular": CERT_ANGULAR,
            "inject": inject,
        })),
        pass: passed == certs.len(),
        worst_residual: worst.map_or(0.0, |(_, c)| c.discrepancy),
        results,
        summary: row(json!({ "passed": passed, "total": certs.len() })),
        table_rows,
    })
}

pub fn extremal(family: &FamilyArgs, tol: f64) -> CmdResult {
    let spec = spec_from(family)?;
    let coeffs = extremal_coeffs(&spec).map_err(|e| e.to_string())?;
    let bound = sharp_bound(&spec).map_err(|e| e.to_string())?;
    let abs_h21 = loghankel::h21(&coeffs).norm();
    let residual = (abs_h21 - bound).abs();
    let mut config = spec_config(&spec);
    config.insert("tol".into(), tol.into());
    Ok(Report {
        command: "extremal",
        config,
        pass: residual <= tol,
        worst_residual: residual,
        results: vec![row(json!({
            "family": spec.to_string(),
            "a2": cx(coeffs.a2),
            "a3": cx(coeffs.a3),
            "a4": cx(coeffs.a4),
            "abs_h21": abs_h21,
            "bound": bound,
            "residual": residual,
        }))],
        summary: Row::new(),
        table_rows: None,
    })
}

pub fn gamma(source: &GammaSource, tol: f64) -> CmdResult {
    let (coeffs, mut config) = if source.koebe {
        (CoeffTriple::koebe(), row(json!({ "source": "koebe" })))
    } else if let Some(name) = source.family {
        let spec = family_spec(name, source.alpha, source.beta, source.nu, source.lambda)?;
        let mut config = row(json!({ "source": "extremal" }));
        config.extend(spec_config(&spec));
        (extremal_coeffs(&spec).map_err(|e| e.to_string())?, config)
    } else {
        let (Some(a2), Some(a3), Some(a4)) = (source.a2, source.a3, source.a4) else {
            return Err("give --koebe, --family, or all of --a2 --a3 --a4".into());
        };
        (
            CoeffTriple::new(a2, a3, a4),
            row(json!({ "source": "coefficients" })),
        )
    };
    config.insert("tol".into(), tol.into());

    let g = log_coeffs(&coeffs);
    let (gamma_path, monomial_path) = h21_paths(&coeffs);
    let scale = gamma_path.norm().max(monomial_path.norm()).max(1.0);
    let residual = (gamma_path - monomial_path).norm() / scale;
    let finite = gamma_path.is_finite() && monomial_path.is_finite();
    Ok(Report {
        command: "gamma",
        config,
        pass: finite && residual <= tol,
        worst_residual: residual,
        results: vec![row(json!({
            "a2": cx(coeffs.a2),
            "a3": cx(coeffs.a3),
            "a4": cx(coeffs.a4),
            "gamma1": cx(g.g1),
            "gamma2": cx(g.g2),
            "gamma3": cx(g.g3),
            "h21_gamma": cx(gamma_path),
            "h21_monomial": cx(monomial_path),
            "residual": residual,
        }))],
        summary: Row::new(),
        table_rows: None,
    })
}
