//! Randomized exact checks of the invariance laws and exact Jacobian rank
//! certificates for the generating sets.
//!
//! Every check is reproducible from its seed. Each trial derives its own
//! sub-seed, so reports do not depend on evaluation order. In exact mode
//! a single failure disproves the law being checked; float mode records
//! the worst residual instead.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::{gradient_line, triples, Configuration, GradientSample, Homography};
use crate::imaging::{
    pullback_field, sample_config, signature_deviation, signature_extract, AnalyticField,
    GaussianBump, KeypointSet, ScalarField,
};
use crate::invariants::{delta_lines, generating_set, z_invariant, zeta, zn_exponents};
use crate::linalg::rank;
use crate::scalar::{rational, rational_to_string, Dual, Rational, Scalar};

/// Tolerance for float-mode absolute invariance (relative).
pub const FLOAT_INVARIANCE_TOL: f64 = 1e-9;
/// Tolerance for the float-mode `z_n` law, on `log|·|`.
pub const FLOAT_LOG_LAW_TOL: f64 = 1e-8;
/// Tolerance for prolongation against finite differences (relative).
pub const PROLONGATION_FD_TOL: f64 = 1e-6;
/// Tolerance for analytic pullback signatures (relative, per generator).
pub const ANALYTIC_SIGNATURE_TOL: f64 = 1e-8;

const MAX_DRAWS: usize = 10_000;

/// Arithmetic used by a check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Exact,
    Float,
}

/// Mixes `(seed, stream, index)` into an independent 64-bit seed
/// (splitmix64 finalizer).
pub fn sub_seed(seed: u64, stream: u64, index: u64) -> u64 {
    let mut z = seed
        .wrapping_add(stream.wrapping_mul(0xD1B5_4A32_D192_ED03))
        .wrapping_add(index.wrapping_mul(0x9E37_79B9_7F4A_7C15));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Small rational with numerator in `[-20, 20]` and denominator in `[1, 5]`.
fn small_rational(rng: &mut impl Rng) -> Rational {
    rational(rng.gen_range(-20..=20), rng.gen_range(1..=5))
}

/// Genericity conditions enforced by [`random_config`].
fn sampling_violation(c: &Configuration<Rational>) -> Option<String> {
    if let Some(v) = c.genericity_violations().into_iter().next() {
        return Some(v);
    }
    let n = c.len();
    if n < 3 {
        return None;
    }
    if let Some(t) = triples(n).find(|&[i, j, k]| Scalar::is_zero(&c.delta(i, j, k).unwrap())) {
        return Some(format!("points {t:?} are collinear"));
    }
    let zn = zn_exponents(n).ok()?;
    zn.exponents
        .iter()
        .filter(|(_, &m)| m < 0)
        .find(|(s, _)| {
            let [i, j, k] = s.0;
            Scalar::is_zero(&delta_lines(c, i, j, k).unwrap())
        })
        .map(|(s, _)| format!("Δ{s} vanishes"))
}

/// A random rational configuration in general position.
///
/// Deterministic in `(n, seed)`. Draws are rejected until points are
/// distinct, gradients nonzero, every `δ_ijk ≠ 0` and every `Δ_S` in the
/// denominator of `z_n` is nonzero.
pub fn random_config(n: usize, seed: u64) -> Result<Configuration<Rational>> {
    if n < 2 {
        return Err(Error::ConfigTooSmall { needed: 2, got: n });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..MAX_DRAWS {
        let samples = (0..n)
            .map(|_| {
                let mut v = || small_rational(&mut rng);
                GradientSample::new(v(), v(), v(), v())
            })
            .collect();
        let c = Configuration::new(samples)?;
        if sampling_violation(&c).is_none() {
            return Ok(c);
        }
    }
    Err(Error::GenericityFailure(MAX_DRAWS))
}

/// A random rational homography, invertible and finite on every sample
/// of `c`. Deterministic in `(seed, c)`.
pub fn random_homography(seed: u64, c: &Configuration<Rational>) -> Result<Homography<Rational>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..MAX_DRAWS {
        let m = std::array::from_fn(|_| std::array::from_fn(|_| small_rational(&mut rng)));
        let Ok(h) = Homography::new(m) else {
            continue;
        };
        if c.samples().iter().all(|s| !Scalar::is_zero(&h.lambda(&s.x, &s.y))) {
            return Ok(h);
        }
    }
    Err(Error::GenericityFailure(MAX_DRAWS))
}

/// Outcome of one randomized law check.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TrialReport {
    pub name: String,
    pub mode: Mode,
    pub trials: usize,
    pub failures: usize,
    /// Trials whose draw was singular for this law and had to be redrawn.
    pub redraws: usize,
    /// Largest residual seen (float mode only).
    pub worst_residual: Option<f64>,
    /// Seeds of the failing trials' configurations.
    pub failing_seeds: Vec<u64>,
}

impl TrialReport {
    fn new(name: impl Into<String>, mode: Mode) -> Self {
        TrialReport {
            name: name.into(),
            mode,
            trials: 0,
            failures: 0,
            redraws: 0,
            worst_residual: None,
            failing_seeds: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }

    fn record(&mut self, ok: bool, residual: Option<f64>, seed: u64) {
        self.trials += 1;
        if let Some(r) = residual {
            let worst = self.worst_residual.get_or_insert(0.0);
            if r > *worst || r.is_nan() {
                *worst = r;
            }
        }
        if !ok {
            self.failures += 1;
            self.failing_seeds.push(seed);
        }
    }
}

/// `|a - b| / max(|a|, |b|)`, zero when both vanish.
pub fn relative_residual(a: f64, b: f64) -> f64 {
    let scale = a.abs().max(b.abs());
    if scale == 0.0 {
        0.0
    } else {
        (a - b).abs() / scale
    }
}

fn check_positive(name: &str, v: usize) -> Result<()> {
    if v == 0 {
        Err(Error::InvalidArgument(format!("{name} must be at least 1")))
    } else {
        Ok(())
    }
}

/// Checks `F(T·c) = F(c)` for every generator `F` of the `n`-point field,
/// one fresh `(c, T)` per trial. One report per generator.
pub fn check_absolute(n: usize, trials: usize, seed: u64, mode: Mode) -> Result<Vec<TrialReport>> {
    check_absolute_grid(n, trials, 1, seed, mode)
}

/// Like [`check_absolute`] with `homographies` transforms applied to each
/// of `configs` configurations.
pub fn check_absolute_grid(
    n: usize,
    configs: usize,
    homographies: usize,
    seed: u64,
    mode: Mode,
) -> Result<Vec<TrialReport>> {
    check_positive("trials", configs)?;
    check_positive("homographies", homographies)?;
    let descs = generating_set(n)?;
    let mut reports: Vec<TrialReport> =
        descs.iter().map(|d| TrialReport::new(d.to_string(), mode)).collect();
    for t in 0..configs as u64 {
        let cs = sub_seed(seed, 0, t);
        let c = random_config(n, cs)?;
        for k in 0..homographies as u64 {
            let h = random_homography(sub_seed(cs, 1, k), &c)?;
            match mode {
                Mode::Exact => {
                    let tc = h.transform_config(&c)?;
                    for (d, rep) in descs.iter().zip(reports.iter_mut()) {
                        let ok = d.eval(&tc)? == d.eval(&c)?;
                        rep.record(ok, None, cs);
                    }
                }
                Mode::Float => {
                    let cf = c.to_f64();
                    let tc = h.map(Scalar::to_f64).transform_config(&cf)?;
                    for (d, rep) in descs.iter().zip(reports.iter_mut()) {
                        let res = relative_residual(d.eval(&tc)?, d.eval(&cf)?);
                        rep.record(res <= FLOAT_INVARIANCE_TOL, Some(res), cs);
                    }
                }
            }
        }
    }
    Ok(reports)
}

/// Checks the per-factor laws on random triples of random `n`-point
/// configurations:
///
/// - `Δ_S(T·c) · D = λ_i λ_j λ_k · Δ_S(c)`
/// - `δ_S(T·c) · λ_i λ_j λ_k = D · δ_S(c)`
/// - `δ_S · Δ_S` is absolutely invariant.
pub fn check_relative_factors(n: usize, trials: usize, seed: u64) -> Result<Vec<TrialReport>> {
    check_positive("trials", trials)?;
    if n < 3 {
        return Err(Error::ConfigTooSmall { needed: 3, got: n });
    }
    let mut reports = vec![
        TrialReport::new("delta_lines law", Mode::Exact),
        TrialReport::new("delta_points law", Mode::Exact),
        TrialReport::new("abs_product invariance", Mode::Exact),
    ];
    let all: Vec<[usize; 3]> = triples(n).collect();
    for t in 0..trials as u64 {
        let cs = sub_seed(seed, 0, t);
        let c = random_config(n, cs)?;
        let h = random_homography(sub_seed(cs, 1, 0), &c)?;
        let tc = h.transform_config(&c)?;
        let mut rng = ChaCha8Rng::seed_from_u64(sub_seed(cs, 2, 0));
        let [i, j, k] = all[rng.gen_range(0..all.len())];
        let lam = [i, j, k].iter().fold(Rational::from_i64(1), |acc, &s| {
            let s = c.sample(s).unwrap();
            acc * h.lambda(&s.x, &s.y)
        });
        let d = h.det().clone();
        let big = (delta_lines(&tc, i, j, k)?, delta_lines(&c, i, j, k)?);
        let small = (tc.delta(i, j, k)?, c.delta(i, j, k)?);
        reports[0].record(big.0.clone() * d.clone() == lam.clone() * big.1.clone(), None, cs);
        reports[1].record(small.0.clone() * lam == d * small.1.clone(), None, cs);
        reports[2].record(big.0 * small.0 == big.1 * small.1, None, cs);
    }
    Ok(reports)
}

/// Checks `z(T·c)^g · J(T) = z(c)^g` with `g = gcd(n, 3)`, the
/// fraction-free form of `wt(z_n) = -1/g`.
pub fn check_zn_weight(n: usize, trials: usize, seed: u64, mode: Mode) -> Result<TrialReport> {
    check_positive("trials", trials)?;
    let g = if n % 3 == 0 { 3 } else { 1 };
    zn_exponents(n)?;
    let mut rep = TrialReport::new(format!("zn weight law (n = {n}, g = {g})"), mode);
    let mut t = 0u64;
    while rep.trials < trials {
        let cs = sub_seed(seed, 0, t);
        t += 1;
        let c = random_config(n, cs)?;
        let h = random_homography(sub_seed(cs, 1, 0), &c)?;
        match mode {
            Mode::Exact => {
                let tc = h.transform_config(&c)?;
                let (Ok(z0), Ok(z1)) = (z_invariant(&c), z_invariant(&tc)) else {
                    rep.redraws += 1;
                    continue;
                };
                let jac = h.total_jacobian(&c)?;
                rep.record(z1.powi(g) * jac == z0.powi(g), None, cs);
            }
            Mode::Float => {
                let cf = c.to_f64();
                let hf = h.map(Scalar::to_f64);
                let tc = hf.transform_config(&cf)?;
                let (Ok(z0), Ok(z1)) = (z_invariant(&cf), z_invariant(&tc)) else {
                    rep.redraws += 1;
                    continue;
                };
                let jac = hf.total_jacobian(&cf)?;
                let gf = g as f64;
                let res = (gf * z1.abs().ln() + jac.abs().ln() - gf * z0.abs().ln()).abs();
                let sign_ok = (z1.powi(g as i32) * jac).signum() == z0.powi(g as i32).signum();
                rep.record(sign_ok && res <= FLOAT_LOG_LAW_TOL, Some(res), cs);
            }
        }
    }
    Ok(rep)
}

/// Checks `gradient_line(prolong(H, s)) = λ(s) · pushforward_line(H, ℓ(s))`
/// exactly on random samples and homographies.
pub fn prolongation_consistency(trials: usize, seed: u64) -> Result<TrialReport> {
    check_positive("trials", trials)?;
    let mut rep = TrialReport::new("prolongation consistency", Mode::Exact);
    for t in 0..trials as u64 {
        let cs = sub_seed(seed, 0, t);
        let c = random_config(2, cs)?;
        let h = random_homography(sub_seed(cs, 1, 0), &c)?;
        let s = c.sample(1)?;
        let lhs = gradient_line(&h.prolong(s)?);
        let rhs = h
            .pushforward_line(&gradient_line(s))
            .scale(&h.lambda(&s.x, &s.y));
        rep.record(lhs == rhs, None, cs);
    }
    Ok(rep)
}

/// `4n - 8` for `n ≥ 3`, and `1` for `n = 2`.
pub fn expected_rank(n: usize) -> usize {
    if n == 2 {
        1
    } else {
        4 * n - 8
    }
}

fn variable_name(col: usize) -> String {
    let names = ["x", "y", "p", "q"];
    format!("{}{}", names[col % 4], col / 4 + 1)
}

/// Exact Jacobian of the generators of `G_n` with respect to all `4n`
/// coordinates `(x1, y1, p1, q1, x2, ...)`, one row per generator.
pub fn invariant_jacobian(c: &Configuration<Rational>) -> Result<Vec<Vec<Rational>>> {
    let n = c.len();
    let dim = 4 * n;
    let lifted = Configuration::new(
        c.samples()
            .iter()
            .enumerate()
            .map(|(i, s)| {
                let var = |v: &Rational, k: usize| Dual::variable(v.clone(), 4 * i + k, dim);
                GradientSample::new(var(&s.x, 0), var(&s.y, 1), var(&s.p, 2), var(&s.q, 3))
            })
            .collect(),
    )?;
    generating_set(n)?
        .iter()
        .map(|d| {
            let v = d.eval(&lifted)?;
            Ok((0..dim).map(|k| v.partial(k)).collect())
        })
        .collect()
}

/// One rank evaluation.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RankAttempt {
    /// `None` for preset configurations.
    pub seed: Option<u64>,
    pub rank: usize,
}

/// Exact rank of the generator Jacobian at a rational configuration.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RankCertificate {
    pub n: usize,
    pub generators: Vec<String>,
    /// Configuration of the final attempt, as `[x, y, p, q]` rationals.
    pub configuration: Vec<[String; 4]>,
    pub rank: usize,
    pub expected_rank: usize,
    pub pivot_columns: Vec<String>,
    pub attempts: Vec<RankAttempt>,
}

impl RankCertificate {
    pub fn passed(&self) -> bool {
        self.rank == self.expected_rank
    }
}

fn certify(c: &Configuration<Rational>, attempts: Vec<RankAttempt>) -> Result<RankCertificate> {
    let n = c.len();
    let profile = rank(&invariant_jacobian(c)?);
    let mut attempts = attempts;
    if let Some(last) = attempts.last_mut() {
        last.rank = profile.rank;
    }
    Ok(RankCertificate {
        n,
        generators: generating_set(n)?.iter().map(ToString::to_string).collect(),
        configuration: c
            .samples()
            .iter()
            .map(|s| [&s.x, &s.y, &s.p, &s.q].map(rational_to_string))
            .collect(),
        rank: profile.rank,
        expected_rank: expected_rank(n),
        pivot_columns: profile.pivot_columns.into_iter().map(variable_name).collect(),
        attempts,
    })
}

/// Rank certificate at `random_config(n, seed)`. A rank below the
/// expected value triggers one reseed; both attempts are recorded.
pub fn invariant_jacobian_rank(n: usize, seed: u64) -> Result<RankCertificate> {
    let first = certify(
        &random_config(n, seed)?,
        vec![RankAttempt { seed: Some(seed), rank: 0 }],
    )?;
    if first.passed() {
        return Ok(first);
    }
    let reseed = sub_seed(seed, 3, 1);
    let mut attempts = first.attempts;
    attempts.push(RankAttempt { seed: Some(reseed), rank: 0 });
    certify(&random_config(n, reseed)?, attempts)
}

/// Rank certificate at a given configuration.
pub fn jacobian_rank_at(c: &Configuration<Rational>) -> Result<RankCertificate> {
    certify(c, vec![RankAttempt { seed: None, rank: 0 }])
}

/// The seven-point specialization used to exhibit a full-rank minor:
/// points `(0,0), (1,0), (0,1), (4,0), (5,0), (6,0), (7,1)`, all
/// `q_i = 1`, `p_i = (x4 - 2)·q_i / x4 = 1/2` for `i ∈ {1, 2, 5, 6}`,
/// `p3 = q3`, `p4 = -1/2`, and `p7 = 0`.
pub fn seven_point_witness() -> Configuration<Rational> {
    let rows: [(i64, i64, (i64, i64)); 7] = [
        (0, 0, (1, 2)),
        (1, 0, (1, 2)),
        (0, 1, (1, 1)),
        (4, 0, (-1, 2)),
        (5, 0, (1, 2)),
        (6, 0, (1, 2)),
        (7, 1, (0, 1)),
    ];
    Configuration::new(
        rows.iter()
            .map(|&(x, y, (pn, pd))| {
                GradientSample::new(
                    Rational::from_i64(x),
                    Rational::from_i64(y),
                    rational(pn, pd),
                    Rational::from_i64(1),
                )
            })
            .collect(),
    )
    .expect("seven samples")
}

/// Float evaluation of every generator against its exact value on the same
/// rational configuration, relative residual per generator.
///
/// Configurations where some generator is within `1e-6` of zero are
/// redrawn.
pub fn check_float_agreement(n: usize, trials: usize, seed: u64) -> Result<TrialReport> {
    check_positive("trials", trials)?;
    let descs = generating_set(n)?;
    let mut rep = TrialReport::new(format!("float/exact agreement (n = {n})"), Mode::Float);
    let mut t = 0u64;
    while rep.trials < trials {
        let cs = sub_seed(seed, 0, t);
        t += 1;
        let c = random_config(n, cs)?;
        let exact = descs
            .iter()
            .map(|d| d.eval(&c).map(|v| v.to_f64()))
            .collect::<Result<Vec<f64>>>()?;
        // a generator that vanishes exactly has no meaningful relative error
        if exact.iter().any(|v| v.abs() < 1e-6) {
            rep.redraws += 1;
            continue;
        }
        let cf = c.to_f64();
        let mut worst = 0.0_f64;
        for (d, e) in descs.iter().zip(&exact) {
            worst = worst.max(relative_residual(d.eval(&cf)?, *e));
        }
        rep.record(worst <= FLOAT_INVARIANCE_TOL, Some(worst), cs);
    }
    Ok(rep)
}

/// A Gaussian mixture of 2 to 4 bumps centred in `[-2, 2]²`.
pub fn random_mixture(seed: u64) -> AnalyticField {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let k = rng.gen_range(2..=4);
    let bumps = (0..k)
        .map(|_| GaussianBump {
            amplitude: rng.gen_range(0.5..1.5) * if rng.gen_bool(0.5) { 1.0 } else { -1.0 },
            cx: rng.gen_range(-2.0..2.0),
            cy: rng.gen_range(-2.0..2.0),
            width: rng.gen_range(1.0..3.0),
        })
        .collect();
    AnalyticField::new(bumps).expect("positive widths")
}

/// A float homography `I + E` with `|E_ij| ≤ 0.3` in the affine part and
/// `≤ 0.1` in the projective row.
pub fn random_float_homography(seed: u64) -> Homography<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let m = std::array::from_fn(|i| {
            std::array::from_fn(|j| {
                let bound = if i == 2 { 0.1 } else { 0.3 };
                let id = if i == j { 1.0 } else { 0.0 };
                id + rng.gen_range(-bound..bound)
            })
        });
        if let Ok(h) = Homography::new(m) {
            if h.det().abs() > 0.1 {
                return h;
            }
        }
    }
}

/// Random keypoints in `[-2, 2]²`.
pub fn random_keypoints(n: usize, seed: u64) -> KeypointSet {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    KeypointSet::new(
        (0..n)
            .map(|_| (rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0)))
            .collect(),
    )
}

/// Fourth-order central difference of `f` along `(dx, dy)`.
fn fd_derivative(f: &impl ScalarField, x: f64, y: f64, dx: f64, dy: f64) -> Result<f64> {
    let h = 1e-3;
    let at = |k: f64| f.value(x + k * h * dx, y + k * h * dy);
    Ok((-at(2.0)? + 8.0 * at(1.0)? - 8.0 * at(-1.0)? + at(-2.0)?) / (12.0 * h))
}

/// Compares [`Homography::prolong`] on an analytic field's gradient with
/// finite differences of the pulled-back field at the image point.
///
/// The residual is `‖g - g_fd‖ / max(‖g‖, ‖g_fd‖)`. Samples whose
/// gradient is nearly zero are redrawn.
pub fn prolongation_vs_finite_differences(trials: usize, seed: u64) -> Result<TrialReport> {
    check_positive("trials", trials)?;
    let mut rep = TrialReport::new("prolongation vs finite differences", Mode::Float);
    let mut t = 0u64;
    while rep.trials < trials {
        let cs = sub_seed(seed, 4, t);
        t += 1;
        let field = random_mixture(sub_seed(cs, 0, 0));
        let h = random_float_homography(sub_seed(cs, 1, 0));
        let (x, y) = random_keypoints(1, sub_seed(cs, 2, 0)).points[0];
        let (p, q) = field.gradient(x, y)?;
        if p.hypot(q) < 1e-3 || h.lambda(&x, &y).abs() < 1e-2 {
            rep.redraws += 1;
            continue;
        }
        let s = h.prolong(&GradientSample::new(x, y, p, q))?;
        let pulled = pullback_field(&h, field);
        let fp = fd_derivative(&pulled, s.x, s.y, 1.0, 0.0)?;
        let fq = fd_derivative(&pulled, s.x, s.y, 0.0, 1.0)?;
        let scale = s.p.hypot(s.q).max(fp.hypot(fq));
        let res = (s.p - fp).hypot(s.q - fq) / scale;
        rep.record(res <= PROLONGATION_FD_TOL, Some(res), cs);
    }
    Ok(rep)
}

/// Signatures of a random Gaussian mixture before and after an analytic
/// pullback by a random homography, with `n` keypoints. Each trial draws a
/// new field, keypoint set and homography; the residual is the worst
/// per-generator relative deviation.
pub fn analytic_signature_experiment(n: usize, trials: usize, seed: u64) -> Result<TrialReport> {
    check_positive("trials", trials)?;
    let mut rep = TrialReport::new(format!("analytic pullback signatures (n = {n})"), Mode::Float);
    let mut t = 0u64;
    while rep.trials < trials {
        let cs = sub_seed(seed, 5, t);
        t += 1;
        if t > MAX_DRAWS as u64 {
            return Err(Error::GenericityFailure(MAX_DRAWS));
        }
        let field = random_mixture(sub_seed(cs, 0, 0));
        let h = random_float_homography(sub_seed(cs, 1, 0));
        let pts = random_keypoints(n, sub_seed(cs, 2, 0));
        let before = match signature_extract(&field, &pts) {
            Ok(s) if well_conditioned(&sample_config(&field, &pts)?) => s,
            _ => {
                rep.redraws += 1;
                continue;
            }
        };
        let moved = pts.transform(&h)?;
        let after = signature_extract(&pullback_field(&h, field), &moved)?;
        let worst = signature_deviation(&before, &after)
            .into_iter()
            .map(|(_, r)| r)
            .fold(0.0, f64::max);
        rep.record(worst <= ANALYTIC_SIGNATURE_TOL, Some(worst), cs);
    }
    Ok(rep)
}

/// Rejects float configurations whose generators are close to cancellation:
/// gradients of norm below `1e-3`, or any `|δ|`, `|Δ|` below `1e-3`.
fn well_conditioned(c: &Configuration<f64>) -> bool {
    let n = c.len();
    c.samples().iter().all(|s| s.p.hypot(s.q) >= 1e-3)
        && (n < 3
            || triples(n).all(|[i, j, k]| {
                c.delta(i, j, k).is_ok_and(|d| d.abs() >= 1e-3)
                    && delta_lines(c, i, j, k).is_ok_and(|d| d.abs() >= 1e-3)
            }))
        && (1..=n).all(|i| {
            (i + 1..=n).all(|j| zeta(c, i, j).is_ok_and(|z| z.abs() >= 1e-3))
        })
}
