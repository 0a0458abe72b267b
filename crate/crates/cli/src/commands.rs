use graphene_cs::basis::quadrature::support_half_width;
use graphene_cs::observables::{mean_energy, uncertainty_product, OscillatorGrid};
use graphene_cs::verify::{self, density_window_integral, VerifyOptions};
use graphene_cs::{CoherentState64, LadderFamily64, PhysicsConfig64, N_MAX};
use num_complex::Complex64;
use rayon::prelude::*;

use crate::args::{DensityArgs, Family, Format, OutputArgs, PlaneArgs, VerifyArgs};
use crate::error::{core_exit_code, CliError, EXIT_INVARIANT, EXIT_NONCONVERGENCE, EXIT_OK};
use crate::table::{Cell, ConfigMeta, GridResult, RowError, TruncationMeta};

/// Default alpha-plane sweep on each axis.
pub const DEFAULT_PLANE: (f64, f64, usize) = (-3.0, 3.0, 31);
/// Default number of x points when the range is chosen automatically.
pub const DEFAULT_X_POINTS: usize = 401;

/// Bytes to emit plus diagnostics for standard error.
#[derive(Debug)]
pub struct Outcome {
    pub bytes: Vec<u8>,
    pub diagnostics: Vec<String>,
    pub exit_code: i32,
}

fn family_name(f: Family) -> &'static str {
    match f {
        Family::One => "one",
        Family::Shifted => "shifted",
        Family::Cubic => "cubic",
    }
}

fn config(b0: f64, k: f64) -> Result<PhysicsConfig64, CliError> {
    if !b0.is_finite() || !k.is_finite() {
        return Err(CliError::Invalid("b0 and k must be finite".into()));
    }
    Ok(PhysicsConfig64::new(b0, k)?)
}

fn check_tol(tol: f64) -> Result<(), CliError> {
    if tol > 0.0 && tol <= 1e-8 {
        Ok(())
    } else {
        Err(CliError::Invalid(format!(
            "--tol must lie in (0, 1e-8], got {tol}"
        )))
    }
}

fn grid_format(out: &OutputArgs) -> Format {
    out.format.unwrap_or(Format::Csv)
}

fn encode(result: &GridResult, format: Format) -> Result<Outcome, CliError> {
    let bytes = match format {
        Format::Csv => result.to_csv()?,
        Format::Json => result.to_json()?,
    };
    let exit_code = result
        .errors
        .iter()
        .map(|e| e.exit_code)
        .max()
        .unwrap_or(EXIT_OK);
    let diagnostics = result
        .errors
        .iter()
        .map(|e| format!("{}: {}", e.point, e.message))
        .collect();
    Ok(Outcome {
        bytes,
        diagnostics,
        exit_code,
    })
}

/// Alpha values requested by a plane command, row-major with Re fastest.
pub fn plane_points(a: &PlaneArgs, default_grid: bool) -> Result<Vec<Complex64>, CliError> {
    if a.r.is_some() || a.theta.is_some() {
        let r = a.r.unwrap_or(0.0);
        if !(r >= 0.0) || !r.is_finite() {
            return Err(CliError::Invalid(format!(
                "--r must be a finite nonnegative number, got {r}"
            )));
        }
        return Ok(vec![Complex64::from_polar(r, a.theta.unwrap_or(0.0))]);
    }
    let explicit =
        a.grid_re.is_some() || a.grid_im.is_some() || a.alpha_re.is_some() || a.alpha_im.is_some();
    let axis = |grid: Option<crate::parse::Range>, single: Option<f64>| -> Vec<f64> {
        match (grid, single) {
            (Some(g), _) => g.points(),
            (None, Some(v)) => vec![v],
            (None, None) if !explicit && default_grid => {
                let (lo, hi, n) = DEFAULT_PLANE;
                crate::parse::Range { lo, hi, n }.points()
            }
            (None, None) => vec![0.0],
        }
    };
    let res = axis(a.grid_re, a.alpha_re);
    let ims = axis(a.grid_im, a.alpha_im);
    Ok(ims
        .iter()
        .flat_map(|&im| res.iter().map(move |&re| Complex64::new(re, im)))
        .collect())
}

fn point_label(alpha: Complex64) -> String {
    format!("alpha=({}, {})", alpha.re, alpha.im)
}

fn row_error(point: String, e: &graphene_cs::Error) -> RowError {
    RowError {
        point,
        message: e.to_string(),
        exit_code: core_exit_code(e),
    }
}

fn non_finite(point: String) -> RowError {
    RowError {
        point,
        message: "non-finite value in output row".into(),
        exit_code: EXIT_NONCONVERGENCE,
    }
}

struct Sweep {
    rows: Vec<Vec<Cell>>,
    errors: Vec<RowError>,
    truncation: TruncationMeta,
}

// Evaluates every alpha in parallel; rows come back in input order.
fn sweep<F>(
    points: &[Complex64],
    family: &LadderFamily64,
    cfg: PhysicsConfig64,
    tol: f64,
    eval: F,
) -> Sweep
where
    F: Fn(&CoherentState64) -> graphene_cs::Result<Vec<Vec<Cell>>> + Sync,
{
    let results: Vec<_> = points
        .par_iter()
        .map(|&alpha| {
            let state = CoherentState64::new(family.clone(), alpha, cfg, tol)?;
            let rows = eval(&state)?;
            Ok::<_, graphene_cs::Error>((state.trunc_order(), state.tail_bound(), rows))
        })
        .collect();
    let mut out = Sweep {
        rows: Vec::new(),
        errors: Vec::new(),
        truncation: TruncationMeta::default(),
    };
    for (&alpha, r) in points.iter().zip(results) {
        match r {
            Ok((order, tail, rows)) => {
                out.truncation.record(order, tail);
                if rows.iter().flatten().all(Cell::is_finite) {
                    out.rows.extend(rows);
                } else {
                    out.errors.push(non_finite(point_label(alpha)));
                }
            }
            Err(e) => out.errors.push(row_error(point_label(alpha), &e)),
        }
    }
    out
}

fn plane_command<F>(
    command: &'static str,
    a: &PlaneArgs,
    default_grid: bool,
    columns: Vec<&'static str>,
    eval: F,
) -> Result<GridResult, CliError>
where
    F: Fn(&CoherentState64) -> graphene_cs::Result<Vec<Vec<Cell>>> + Sync,
{
    check_tol(a.field.tol)?;
    let cfg = config(a.field.b0, a.field.k)?;
    let points = plane_points(a, default_grid)?;
    let s = sweep(&points, &a.family.ladder(), cfg, a.field.tol, eval);
    Ok(GridResult {
        command,
        family: family_name(a.family),
        config: ConfigMeta {
            b0: cfg.b0(),
            k: cfg.k(),
            omega: cfg.omega(),
        },
        tol: a.field.tol,
        truncation: s.truncation,
        columns,
        rows: s.rows,
        errors: s.errors,
    })
}

/// Rows `(re_alpha, im_alpha, var_z, var_p, product)`.
pub fn run_uncertainty(a: &PlaneArgs) -> Result<GridResult, CliError> {
    plane_command(
        "uncertainty",
        a,
        true,
        vec!["re_alpha", "im_alpha", "var_z", "var_p", "product"],
        |s| {
            let mv = uncertainty_product(s)?;
            let al = s.alpha();
            Ok(vec![vec![
                Cell::Num(al.re),
                Cell::Num(al.im),
                Cell::Num(mv.var_z),
                Cell::Num(mv.var_p),
                Cell::Num(mv.product),
            ]])
        },
    )
}

/// Rows `(re_alpha, im_alpha, mean_energy)` in units of `hbar v_F`.
pub fn run_energy(a: &PlaneArgs) -> Result<GridResult, CliError> {
    plane_command(
        "energy",
        a,
        true,
        vec!["re_alpha", "im_alpha", "mean_energy"],
        |s| {
            let al = s.alpha();
            Ok(vec![vec![
                Cell::Num(al.re),
                Cell::Num(al.im),
                Cell::Num(mean_energy(s)?),
            ]])
        },
    )
}

/// One row per kept coefficient, with the truncation order and tail bound.
pub fn run_coeffs(a: &PlaneArgs) -> Result<GridResult, CliError> {
    plane_command(
        "coeffs",
        a,
        false,
        vec![
            "re_alpha",
            "im_alpha",
            "n",
            "re_a",
            "im_a",
            "abs2",
            "trunc_order",
            "tail_bound",
        ],
        |s| {
            let al = s.alpha();
            Ok(s.coeffs()
                .iter()
                .enumerate()
                .map(|(n, c)| {
                    vec![
                        Cell::Num(al.re),
                        Cell::Num(al.im),
                        Cell::Int(n),
                        Cell::Num(c.re),
                        Cell::Num(c.im),
                        Cell::Num(c.norm_sqr()),
                        Cell::Int(s.trunc_order()),
                        Cell::Num(s.tail_bound()),
                    ]
                })
                .collect())
        },
    )
}

/// Long-format rows `(x, r, theta, rho)`; each `(r, theta)` block ends with
/// a row whose `x` is `integral` holding the quadrature of `rho` over the
/// x-range.
pub fn run_density(a: &DensityArgs) -> Result<GridResult, CliError> {
    check_tol(a.field.tol)?;
    let cfg = config(a.field.b0, a.field.k)?;
    let family = a.family.ladder();
    let radii = match (&a.r_list, a.r) {
        (Some(l), _) => l.0.clone(),
        (None, Some(r)) => vec![r],
        (None, None) => verify::figure_radii(&family).to_vec(),
    };
    if let Some(r) = radii.iter().find(|r| !(**r >= 0.0)) {
        return Err(CliError::Invalid(format!(
            "radii must be nonnegative, got {r}"
        )));
    }
    let thetas = match (&a.theta_list, a.theta) {
        (Some(l), _) => l.0.clone(),
        (None, Some(t)) => vec![t],
        (None, None) => verify::FIGURE_THETAS.to_vec(),
    };
    let pairs: Vec<(f64, f64)> = radii
        .iter()
        .flat_map(|&r| thetas.iter().map(move |&t| (r, t)))
        .collect();
    let states: Vec<_> = pairs
        .par_iter()
        .map(|&(r, t)| {
            CoherentState64::new(
                family.clone(),
                Complex64::from_polar(r, t),
                cfg,
                a.field.tol,
            )
        })
        .collect();

    let max_order = states
        .iter()
        .filter_map(|s| s.as_ref().ok().map(|s| s.trunc_order()))
        .max()
        .unwrap_or(0);
    let xs = match a.x {
        Some(range) => range.points(),
        None => {
            let half = support_half_width::<f64>(max_order);
            crate::parse::Range {
                lo: cfg.x_of_z(-half),
                hi: cfg.x_of_z(half),
                n: DEFAULT_X_POINTS,
            }
            .points()
        }
    };
    let (lo, hi) = (xs[0], xs[xs.len() - 1]);
    let grid = OscillatorGrid::new(cfg, xs.clone(), max_order.min(N_MAX))?;

    let blocks: Vec<_> = states
        .par_iter()
        .map(|s| {
            let s = s.as_ref().map_err(Clone::clone)?;
            let rho = grid.density(s)?;
            let integral = density_window_integral(s, lo, hi)?;
            Ok::<_, graphene_cs::Error>((s.trunc_order(), s.tail_bound(), rho, integral))
        })
        .collect();

    let mut rows = Vec::new();
    let mut errors = Vec::new();
    let mut truncation = TruncationMeta::default();
    for (&(r, t), block) in pairs.iter().zip(blocks) {
        let label = format!("r={r}, theta={t}");
        match block {
            Ok((order, tail, rho, integral)) => {
                truncation.record(order, tail);
                if !integral.is_finite() || rho.iter().any(|v| !v.is_finite()) {
                    errors.push(non_finite(label));
                    continue;
                }
                for (&x, &v) in xs.iter().zip(&rho) {
                    rows.push(vec![Cell::Num(x), Cell::Num(r), Cell::Num(t), Cell::Num(v)]);
                }
                rows.push(vec![
                    Cell::Text("integral"),
                    Cell::Num(r),
                    Cell::Num(t),
                    Cell::Num(integral),
                ]);
            }
            Err(e) => errors.push(row_error(label, &e)),
        }
    }
    Ok(GridResult {
        command: "density",
        family: family_name(a.family),
        config: ConfigMeta {
            b0: cfg.b0(),
            k: cfg.k(),
            omega: cfg.omega(),
        },
        tol: a.field.tol,
        truncation,
        columns: vec!["x", "r", "theta", "rho"],
        rows,
        errors,
    })
}

pub fn grid_outcome(
    result: Result<GridResult, CliError>,
    out: &OutputArgs,
) -> Result<Outcome, CliError> {
    encode(&result?, grid_format(out))
}

/// Runs the invariant suite; exit code 1 when any case fails.
pub fn run_verify(a: &VerifyArgs) -> Result<Outcome, CliError> {
    if a.out.format == Some(Format::Csv) {
        return Err(CliError::Invalid("verify writes a JSON report only".into()));
    }
    check_tol(a.field.tol)?;
    config(a.field.b0, a.field.k)?;
    let report = verify::run(&VerifyOptions {
        b0: a.field.b0,
        k: a.field.k,
        tol: a.field.tol,
    })?;
    let mut bytes = serde_json::to_vec_pretty(&report)?;
    bytes.push(b'\n');
    let failed: Vec<_> = report.failures().collect();
    let mut diagnostics: Vec<String> = failed
        .iter()
        .map(|c| {
            format!(
                "FAIL {}: residual {:e} > tolerance {:e} {}",
                c.name, c.residual, c.tolerance, c.params
            )
        })
        .collect();
    diagnostics.push(format!(
        "{} cases, {} failed, {} errata",
        report.cases.len(),
        failed.len(),
        report.errata.len()
    ));
    Ok(Outcome {
        bytes,
        diagnostics,
        exit_code: if failed.is_empty() {
            EXIT_OK
        } else {
            EXIT_INVARIANT
        },
    })
}
