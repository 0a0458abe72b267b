//! Self-check suite over the invariants of the library.
//!
//! Every check produces one or more [`Case`] rows with a residual and the
//! tolerance it is held to. Closed-form series are evaluated in both their
//! literal and corrected forms; the corrected form is a case, literal
//! mismatches against the index-space values are reported as [`Erratum`]
//! entries and never fail the suite.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::basis::quadrature::support_half_width;
use crate::basis::{
    ho_table, ho_table_into, landau_component, lower_partner_eigenvalue, quadrature_many,
    upper_partner_eigenvalue, PhysicsConfig,
};
use crate::coherent::{
    apply_annihilation, apply_block_annihilation, c_n, CoherentState, LadderFamily,
    SpinorComponents,
};
use crate::error::Result;
use crate::observables::{
    density_closed_form, density_integral, expectation_closed_form, expectation_generic,
    mean_energy, probability_density, uncertainty_product, Observable, SeriesForm,
};

pub const SUITE_NAME: &str = "graphene-cs invariants";

/// One checked property.
#[derive(Debug, Clone, Serialize)]
pub struct Case {
    pub name: String,
    pub params: Value,
    pub residual: f64,
    pub tolerance: f64,
    pub pass: bool,
}

impl Case {
    pub fn new(name: impl Into<String>, params: Value, residual: f64, tolerance: f64) -> Self {
        Self {
            name: name.into(),
            params,
            residual,
            tolerance,
            // NaN residuals fail
            pass: residual <= tolerance,
        }
    }
}

/// A printed series that disagrees with the index-space value.
#[derive(Debug, Clone, Serialize)]
pub struct Erratum {
    pub family: String,
    pub observable: String,
    pub form: SeriesForm,
    pub points_checked: usize,
    pub points_mismatched: usize,
    pub worst_relative_difference: f64,
    pub worst_alpha: [f64; 2],
    pub series_value: f64,
    pub generic_value: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub suite: String,
    pub cases: Vec<Case>,
    pub errata: Vec<Erratum>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.cases.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Case> {
        self.cases.iter().filter(|c| !c.pass)
    }
}

/// Field configuration and truncation tolerance for the state-based checks.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct VerifyOptions {
    pub b0: f64,
    pub k: f64,
    pub tol: f64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            b0: 2.0,
            k: 1.0,
            tol: 1e-15,
        }
    }
}

impl VerifyOptions {
    fn cfg(&self) -> Result<PhysicsConfig<f64>> {
        PhysicsConfig::new(self.b0, self.k)
    }

    fn state(&self, family: &LadderFamily<f64>, alpha: Complex64) -> Result<CoherentState<f64>> {
        CoherentState::new(family.clone(), alpha, self.cfg()?, self.tol)
    }
}

pub fn builtin_families() -> [LadderFamily<f64>; 3] {
    [
        LadderFamily::One,
        LadderFamily::Shifted,
        LadderFamily::Cubic,
    ]
}

/// Radii used by figure captions for each built-in family.
pub fn figure_radii(family: &LadderFamily<f64>) -> [f64; 3] {
    match family {
        LadderFamily::Shifted => [1.0, 3.0, 5.0],
        LadderFamily::Cubic => [1.0, 50.0, 100.0],
        _ => [1.0, 4.0, 5.0],
    }
}

pub const FIGURE_B0: [f64; 2] = [0.125, 2.0];
pub const FIGURE_THETAS: [f64; 3] = [0.0, FRAC_PI_4, FRAC_PI_2];

const EIGEN_RADII: [f64; 4] = [0.5, 1.0, 2.0, 3.0];
const CLOSED_FORM_RADII: [f64; 3] = [0.5, 1.5, 3.0];
const CLOSED_FORM_THETAS: [f64; 4] = [0.0, FRAC_PI_4, FRAC_PI_2, 4.0 * PI / 3.0];

fn alpha_json(a: Complex64) -> Value {
    json!([a.re, a.im])
}

fn rel_diff(value: f64, reference: f64) -> f64 {
    (value - reference).abs() / reference.abs().max(1.0)
}

/// Uncertainty products at `alpha = 0`: 1/4, 1 and 4.
pub fn alpha_zero_limits(opts: &VerifyOptions) -> Result<Vec<Case>> {
    builtin_families()
        .iter()
        .zip([0.25, 1.0, 4.0])
        .map(|(family, expected)| {
            let mv = uncertainty_product(&opts.state(family, Complex64::new(0.0, 0.0))?)?;
            Ok(Case::new(
                "alpha_zero_limit",
                json!({"family": family.name(), "product": mv.product, "expected": expected}),
                (mv.product - expected).abs(),
                1e-9,
            ))
        })
        .collect()
}

fn eigen_alphas() -> Vec<Complex64> {
    EIGEN_RADII
        .iter()
        .flat_map(|&r| {
            FIGURE_THETAS
                .iter()
                .map(move |&t| Complex64::from_polar(r, t))
        })
        .collect()
}

/// `|| A^- Psi - alpha Psi ||` for every family and eigen-grid point.
pub fn eigen_residuals(opts: &VerifyOptions) -> Result<Vec<Case>> {
    let mut cases = Vec::new();
    for family in builtin_families() {
        for alpha in eigen_alphas() {
            let s = opts.state(&family, alpha)?;
            cases.push(Case::new(
                "eigen_residual",
                json!({"family": family.name(), "alpha": alpha_json(alpha), "trunc_order": s.trunc_order()}),
                s.eigen_residual(),
                1e-8,
            ));
        }
    }
    Ok(cases)
}

/// Unit norm, vanishing coefficients below the support start, and the
/// coefficient ratio recursion for the `f = 1` family.
pub fn coefficient_structure(opts: &VerifyOptions) -> Result<Vec<Case>> {
    let mut cases = Vec::new();
    for family in builtin_families() {
        let mut worst_norm = 0.0f64;
        let mut worst_support = 0.0f64;
        let mut worst_tail = 0.0f64;
        for alpha in eigen_alphas() {
            let s = opts.state(&family, alpha)?;
            worst_norm = worst_norm.max((s.norm_sqr() - 1.0).abs());
            worst_tail = worst_tail.max(s.tail_bound());
            for a in &s.coeffs()[..family.support_start()] {
                worst_support = worst_support.max(a.norm());
            }
        }
        let p = json!({"family": family.name(), "states": eigen_alphas().len()});
        cases.push(Case::new("normalization", p.clone(), worst_norm, 1e-12));
        cases.push(Case::new("tail_bound", p.clone(), worst_tail, opts.tol));
        cases.push(Case::new("support", p, worst_support, 0.0));
    }

    let mut worst = 0.0f64;
    for alpha in eigen_alphas() {
        let s = opts.state(&LadderFamily::One, alpha)?;
        let a = s.coeffs();
        let f = |n: usize| LadderFamily::<f64>::One.f(n);
        worst = worst.max((a[1] / a[0] - alpha * (2f64.sqrt() / f(1))).norm() / alpha.norm());
        for n in 1..a.len() - 1 {
            if a[n].norm() < 1e-280 {
                break;
            }
            let expected = alpha / ((n as f64 + 1.0).sqrt() * f(n + 1));
            worst = worst.max((a[n + 1] / a[n] - expected).norm() / expected.norm());
        }
    }
    cases.push(Case::new(
        "coefficient_recursion",
        json!({"family": "one", "states": eigen_alphas().len()}),
        worst,
        1e-12,
    ));
    Ok(cases)
}

/// The component-wise block operator against the Landau-index operator on
/// basis vectors `e_n`, `n <= 20`.
pub fn block_equivalence() -> Vec<Case> {
    const N: usize = 20;
    builtin_families()
        .iter()
        .map(|family| {
            let mut worst = 0.0f64;
            for n in 0..=N {
                let mut e = vec![Complex64::new(0.0, 0.0); N + 2];
                e[n] = Complex64::new(1.0, 0.0);
                let direct = SpinorComponents::from_landau(&apply_annihilation(family, &e));
                let block = apply_block_annihilation(family, &SpinorComponents::from_landau(&e));
                for (x, y) in direct
                    .upper
                    .iter()
                    .zip(&block.upper)
                    .chain(direct.lower.iter().zip(&block.lower))
                {
                    worst = worst.max((x - y).norm() / c_n(family, n).abs().max(1.0));
                }
            }
            Case::new(
                "block_equivalence",
                json!({"family": family.name(), "max_index": N}),
                worst,
                1e-14,
            )
        })
        .collect()
}

/// Gram matrix of `phi_0..phi_60` by quadrature.
pub fn orthonormality() -> Result<Case> {
    const N: usize = 60;
    let pairs: Vec<(usize, usize)> = (0..=N).flat_map(|m| (m..=N).map(move |n| (m, n))).collect();
    let mut phi = vec![0.0; N + 1];
    let gram = quadrature_many(
        |z: f64, out: &mut [f64]| {
            ho_table_into(z, &mut phi).expect("fixed order");
            for (o, &(m, n)) in out.iter_mut().zip(&pairs) {
                *o = phi[m] * phi[n];
            }
        },
        pairs.len(),
        N,
    )?;
    let worst = gram
        .iter()
        .zip(&pairs)
        .map(|(&g, &(m, n))| (g - if m == n { 1.0 } else { 0.0 }).abs())
        .fold(0.0, f64::max);
    Ok(Case::new(
        "orthonormality",
        json!({"max_index": N}),
        worst,
        1e-10,
    ))
}

/// `(z phi_n + phi_n') / sqrt 2 = sqrt n phi_{n-1}` pointwise, with the
/// derivative from central differences.
pub fn ladder_action() -> Result<Case> {
    const N: usize = 30;
    const H: f64 = 1e-5;
    let mut worst = 0.0f64;
    for j in 0..=1600 {
        let z = -8.0 + 0.01 * j as f64;
        let (p, plus, minus) = (ho_table(N, z)?, ho_table(N, z + H)?, ho_table(N, z - H)?);
        for n in 0..=N {
            let lowered = (z * p[n] + (plus[n] - minus[n]) / (2.0 * H)) / 2f64.sqrt();
            let expected = if n == 0 {
                0.0
            } else {
                (n as f64).sqrt() * p[n - 1]
            };
            worst = worst.max((lowered - expected).abs());
        }
    }
    Ok(Case::new(
        "ladder_action",
        json!({"max_index": N, "z_range": [-8.0, 8.0], "points": 1601, "step": H}),
        worst,
        1e-8,
    ))
}

/// Partner spectra `nω` and x-space normalization of the Landau functions.
pub fn basis_bookkeeping() -> Result<Vec<Case>> {
    let mut cases = Vec::new();
    for b0 in FIGURE_B0 {
        let cfg = PhysicsConfig::new(b0, 1.0)?;
        let mut worst = lower_partner_eigenvalue(0, &cfg).abs();
        for n in 1..=60 {
            worst = worst
                .max(
                    (lower_partner_eigenvalue(n, &cfg) - upper_partner_eigenvalue(n - 1, &cfg))
                        .abs(),
                )
                .max((lower_partner_eigenvalue(n, &cfg) - n as f64 * cfg.omega()).abs());
        }
        cases.push(Case::new(
            "energy_ladder",
            json!({"b0": b0, "max_index": 60}),
            worst,
            0.0,
        ));

        let mut worst = 0.0f64;
        for n in [0, 1, 5, 20, 60] {
            let half = support_half_width::<f64>(n) * (2.0 / cfg.omega()).sqrt();
            let norm = crate::basis::integrate_interval(
                |x: f64| landau_component(&cfg, n, x).expect("fixed order").powi(2),
                cfg.center() - half,
                cfg.center() + half,
            )?;
            worst = worst.max((norm - 1.0).abs());
        }
        cases.push(Case::new(
            "x_space_normalization",
            json!({"b0": b0, "k": 1.0}),
            worst,
            1e-10,
        ));
    }
    Ok(cases)
}

/// Corrected closed-form series against the index-space values, plus the
/// errata found by evaluating the literal series at the same points.
pub fn closed_form_agreement(opts: &VerifyOptions) -> Result<(Vec<Case>, Vec<Erratum>)> {
    let cfg = opts.cfg()?;
    let alphas: Vec<Complex64> = CLOSED_FORM_RADII
        .iter()
        .flat_map(|&r| {
            CLOSED_FORM_THETAS
                .iter()
                .map(move |&t| Complex64::from_polar(r, t))
        })
        .collect();
    let mut cases = Vec::new();
    let mut errata = Vec::new();
    for family in builtin_families() {
        let states = alphas
            .iter()
            .map(|&a| opts.state(&family, a))
            .collect::<Result<Vec<_>>>()?;
        for obs in Observable::ALL {
            let mut worst = (0.0f64, Complex64::new(0.0, 0.0));
            let mut lit = Erratum {
                family: family.name(),
                observable: obs.name().into(),
                form: SeriesForm::Literal,
                points_checked: alphas.len(),
                points_mismatched: 0,
                worst_relative_difference: 0.0,
                worst_alpha: [0.0, 0.0],
                series_value: 0.0,
                generic_value: 0.0,
            };
            for s in &states {
                let generic = expectation_generic(s, obs)?;
                let corrected =
                    expectation_closed_form(&family, s.alpha(), &cfg, obs, SeriesForm::Corrected)?;
                let d = rel_diff(corrected, generic);
                if !(d <= worst.0) {
                    worst = (d, s.alpha());
                }
                let literal =
                    expectation_closed_form(&family, s.alpha(), &cfg, obs, SeriesForm::Literal)?;
                let d = rel_diff(literal, generic);
                if !(d <= 1e-8) {
                    lit.points_mismatched += 1;
                }
                if !(d <= lit.worst_relative_difference) {
                    lit.worst_relative_difference = d;
                    lit.worst_alpha = [s.alpha().re, s.alpha().im];
                    lit.series_value = literal;
                    lit.generic_value = generic;
                }
            }
            cases.push(Case::new(
                "closed_form_agreement",
                json!({
                    "family": family.name(),
                    "observable": obs.name(),
                    "radii": CLOSED_FORM_RADII,
                    "thetas": CLOSED_FORM_THETAS,
                    "worst_alpha": alpha_json(worst.1),
                }),
                worst.0,
                1e-8,
            ));
            if lit.points_mismatched > 0 {
                errata.push(lit);
            }
        }
    }
    Ok((cases, errata))
}

/// `var_z var_p >= 1/4` over the limit, eigen and closed-form points and an
/// α-plane sweep on `[-3, 3]^2`.
pub fn uncertainty_floor(opts: &VerifyOptions) -> Result<Vec<Case>> {
    let sweep: Vec<f64> = (0..13).map(|i| -3.0 + 0.5 * i as f64).collect();
    let mut alphas: Vec<Complex64> = vec![Complex64::new(0.0, 0.0)];
    alphas.extend(eigen_alphas());
    alphas.extend(CLOSED_FORM_RADII.iter().flat_map(|&r| {
        CLOSED_FORM_THETAS
            .iter()
            .map(move |&t| Complex64::from_polar(r, t))
    }));
    alphas.extend(
        sweep
            .iter()
            .flat_map(|&im| sweep.iter().map(move |&re| Complex64::new(re, im))),
    );
    builtin_families()
        .iter()
        .map(|family| {
            let mut min_product = f64::INFINITY;
            let mut violations = 0usize;
            for &a in &alphas {
                let mv = uncertainty_product(&opts.state(family, a)?)?;
                if mv.product < 0.25 - 1e-12 || mv.var_z < 0.0 || mv.var_p < 0.0 {
                    violations += 1;
                }
                min_product = min_product.min(mv.product);
            }
            Ok(Case::new(
                "uncertainty_floor",
                json!({"family": family.name(), "states": alphas.len(), "min_product": min_product, "violations": violations}),
                (0.25 - min_product).max(0.0),
                1e-12,
            ))
        })
        .collect()
}

/// `<p> = 0` for real α and `<z> = 0` for imaginary α, exactly.
pub fn exact_zero_means(opts: &VerifyOptions) -> Result<Vec<Case>> {
    let mut cases = Vec::new();
    for family in builtin_families() {
        let (mut p_worst, mut z_worst) = (0.0f64, 0.0f64);
        for r in [-3.0, -1.0, 0.5, 2.0, 3.0] {
            let s = opts.state(&family, Complex64::new(r, 0.0))?;
            p_worst = p_worst.max(expectation_generic(&s, Observable::P)?.abs());
            let s = opts.state(&family, Complex64::new(0.0, r))?;
            z_worst = z_worst.max(expectation_generic(&s, Observable::Z)?.abs());
        }
        cases.push(Case::new(
            "p_mean_zero_for_real_alpha",
            json!({"family": family.name()}),
            p_worst,
            0.0,
        ));
        cases.push(Case::new(
            "z_mean_zero_for_imaginary_alpha",
            json!({"family": family.name()}),
            z_worst,
            0.0,
        ));
    }
    Ok(cases)
}

fn x_grid(cfg: &PhysicsConfig<f64>, order: usize, points: usize) -> Vec<f64> {
    let half = support_half_width::<f64>(order);
    let (lo, hi) = (cfg.x_of_z(-half), cfg.x_of_z(half));
    (0..points)
        .map(|i| lo + (hi - lo) * i as f64 / (points - 1) as f64)
        .collect()
}

/// Density symmetry under `θ -> -θ`, positivity, and the double-sum
/// density formulas against the amplitude form.
pub fn density_checks(opts: &VerifyOptions) -> Result<Vec<Case>> {
    let cfg = opts.cfg()?;
    let mut cases = Vec::new();
    for family in builtin_families() {
        let (mut parity, mut min_rho, mut double_sum) = (0.0f64, f64::INFINITY, 0.0f64);
        for r in [1.0, 3.0] {
            for theta in [FRAC_PI_4, 1.0, FRAC_PI_2, 2.5] {
                let plus = opts.state(&family, Complex64::from_polar(r, theta))?;
                let minus = opts.state(&family, Complex64::from_polar(r, -theta))?;
                for x in x_grid(&cfg, plus.trunc_order(), 101) {
                    let rho = probability_density(&plus, x)?;
                    parity = parity.max((rho - probability_density(&minus, x)?).abs());
                    min_rho = min_rho.min(rho);
                    let ds =
                        density_closed_form(&family, plus.alpha(), &cfg, x, plus.trunc_order())?;
                    double_sum = double_sum.max((ds - rho).abs());
                }
            }
        }
        let p = json!({"family": family.name(), "radii": [1.0, 3.0], "thetas": [FRAC_PI_4, 1.0, FRAC_PI_2, 2.5]});
        cases.push(Case::new("density_theta_parity", p.clone(), parity, 1e-12));
        cases.push(Case::new(
            "density_positivity",
            p.clone(),
            (-min_rho).max(0.0),
            1e-12,
        ));
        cases.push(Case::new("density_double_sum", p, double_sum, 1e-10));
    }
    Ok(cases)
}

/// `integral rho dx = 1` on the figure parameter sets.
pub fn density_normalization(tol: f64) -> Result<Vec<Case>> {
    let mut cases = Vec::new();
    for family in builtin_families() {
        for b0 in FIGURE_B0 {
            let cfg = PhysicsConfig::new(b0, 1.0)?;
            for r in figure_radii(&family) {
                for theta in FIGURE_THETAS {
                    let s = CoherentState::new(
                        family.clone(),
                        Complex64::from_polar(r, theta),
                        cfg,
                        tol,
                    )?;
                    let integral = density_integral(&s)?;
                    cases.push(Case::new(
                        "density_normalization",
                        json!({"family": family.name(), "b0": b0, "k": 1.0, "r": r, "theta": theta, "trunc_order": s.trunc_order()}),
                        (integral - 1.0).abs(),
                        1e-6,
                    ));
                }
            }
        }
    }
    Ok(cases)
}

/// `E(α, 4 B0) = 2 E(α, B0)` for ten seeded random α with `|α| <= 3`.
pub fn energy_scaling(opts: &VerifyOptions) -> Result<Vec<Case>> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let quad = PhysicsConfig::new(4.0 * opts.b0, opts.k)?;
    (0..10)
        .map(|_| {
            let alpha = Complex64::from_polar(3.0 * rng.gen::<f64>().sqrt(), 2.0 * PI * rng.gen::<f64>());
            let s = opts.state(&LadderFamily::One, alpha)?;
            let e1 = mean_energy(&s)?;
            let e4 = mean_energy(&s.with_config(quad))?;
            Ok(Case::new(
                "energy_scaling",
                json!({"family": "one", "alpha": alpha_json(alpha), "b0": opts.b0, "energy": e1, "energy_4b0": e4}),
                rel_diff(e4, 2.0 * e1),
                1e-12,
            ))
        })
        .collect()
}

/// Location of the largest density value, from a grid scan refined by
/// golden-section search.
pub fn density_argmax(state: &CoherentState<f64>) -> Result<f64> {
    let xs = x_grid(state.cfg(), state.trunc_order(), 4001);
    let rho = xs
        .iter()
        .map(|&x| probability_density(state, x))
        .collect::<Result<Vec<_>>>()?;
    let i = rho
        .iter()
        .enumerate()
        .fold(0, |best, (i, &v)| if v > rho[best] { i } else { best });
    let (mut a, mut b) = (xs[i.saturating_sub(1)], xs[(i + 1).min(xs.len() - 1)]);
    let g = (5f64.sqrt() - 1.0) / 2.0;
    let f = |x: f64| probability_density(state, x);
    let (mut c, mut d) = (b - g * (b - a), a + g * (b - a));
    let (mut fc, mut fd) = (f(c)?, f(d)?);
    while b - a > 1e-12 {
        if fc > fd {
            b = d;
            (d, fd) = (c, fc);
            c = b - g * (b - a);
            fc = f(c)?;
        } else {
            a = c;
            (c, fc) = (d, fd);
            d = a + g * (b - a);
            fd = f(d)?;
        }
    }
    Ok(0.5 * (a + b))
}

/// For `f = 1`, `B0 = 2`, `k = 1`, `r = 4`: the density peak moves
/// monotonically as θ runs over `0, π/4, π/2`. The direction is reported.
pub fn argmax_displacement(tol: f64) -> Result<Case> {
    let cfg = PhysicsConfig::new(2.0, 1.0)?;
    let peaks = FIGURE_THETAS
        .iter()
        .map(|&t| {
            density_argmax(&CoherentState::new(
                LadderFamily::One,
                Complex64::from_polar(4.0, t),
                cfg,
                tol,
            )?)
        })
        .collect::<Result<Vec<_>>>()?;
    let steps: Vec<f64> = peaks.windows(2).map(|w| w[1] - w[0]).collect();
    let direction = if steps.iter().all(|&s| s > 0.0) {
        "increasing"
    } else if steps.iter().all(|&s| s < 0.0) {
        "decreasing"
    } else {
        "not monotone"
    };
    let violations = if direction == "not monotone" {
        1.0
    } else {
        0.0
    };
    Ok(Case::new(
        "density_argmax_monotone",
        json!({"family": "one", "b0": 2.0, "k": 1.0, "r": 4.0, "thetas": FIGURE_THETAS, "argmax_x": peaks, "direction": direction}),
        violations,
        0.0,
    ))
}

/// Runs every check.
pub fn run(opts: &VerifyOptions) -> Result<Report> {
    let mut cases = alpha_zero_limits(opts)?;
    cases.extend(eigen_residuals(opts)?);
    cases.extend(coefficient_structure(opts)?);
    cases.extend(block_equivalence());
    cases.push(orthonormality()?);
    cases.push(ladder_action()?);
    cases.extend(basis_bookkeeping()?);
    let (cf, errata) = closed_form_agreement(opts)?;
    cases.extend(cf);
    cases.extend(uncertainty_floor(opts)?);
    cases.extend(exact_zero_means(opts)?);
    cases.extend(density_checks(opts)?);
    cases.extend(density_normalization(opts.tol)?);
    cases.extend(energy_scaling(opts)?);
    cases.push(argmax_displacement(opts.tol)?);
    Ok(Report {
        suite: SUITE_NAME.into(),
        cases,
        errata,
    })
}

/// Quadrature of `rho` over a finite x-window, as used for grid summaries.
pub fn density_window_integral(state: &CoherentState<f64>, lo: f64, hi: f64) -> Result<f64> {
    crate::basis::integrate_interval(
        |x: f64| probability_density(state, x).expect("table sized to the state"),
        lo,
        hi,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn case_pass_rule() {
        assert!(Case::new("a", Value::Null, 0.0, 0.0).pass);
        assert!(!Case::new("a", Value::Null, 1e-7, 1e-8).pass);
        assert!(!Case::new("a", Value::Null, f64::NAN, 1.0).pass);
    }

    #[test]
    fn limits_and_block_form() {
        let opts = VerifyOptions::default();
        assert!(alpha_zero_limits(&opts).unwrap().iter().all(|c| c.pass));
        assert!(block_equivalence().iter().all(|c| c.pass));
    }

    #[test]
    fn window_integral_of_ground_state() {
        let cfg = PhysicsConfig::new(2.0, 1.0).unwrap();
        let s =
            CoherentState::new(LadderFamily::One, Complex64::new(0.0, 0.0), cfg, 1e-15).unwrap();
        let v = density_window_integral(&s, -12.0, 12.0).unwrap();
        assert!((v - 1.0).abs() < 1e-10);
    }
}
