//! Image functions, their gradients, and homography-robust signatures.
//!
//! Analytic Gaussian mixtures give exact gradients and exact pullbacks, so
//! signatures before and after a homography agree to rounding. Rasters
//! (binary PGM) go through bilinear interpolation and finite differences,
//! and only agree approximately.

use crate::error::{Error, Result};
use crate::geometry::{Configuration, GradientSample, Homography};
use crate::invariants::{evaluate, generating_set, InvariantDescriptor, Signature};
use crate::verification::relative_residual;

/// A differentiable image function `u(x, y)`.
pub trait ScalarField {
    fn value(&self, x: f64, y: f64) -> Result<f64>;
    fn gradient(&self, x: f64, y: f64) -> Result<(f64, f64)>;
    /// Whether `(x, y)` is a valid sampling location.
    fn contains(&self, x: f64, y: f64) -> bool;
}

/// `a · exp(-((x - cx)² + (y - cy)²) / s²)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GaussianBump {
    pub amplitude: f64,
    pub cx: f64,
    pub cy: f64,
    pub width: f64,
}

/// Sum of Gaussian bumps, defined on the whole plane.
#[derive(Clone, Debug, PartialEq)]
pub struct AnalyticField {
    bumps: Vec<GaussianBump>,
}

impl AnalyticField {
    pub fn new(bumps: Vec<GaussianBump>) -> Result<Self> {
        if let Some(b) = bumps.iter().find(|b| b.width.is_nan() || b.width <= 0.0) {
            return Err(Error::InvalidArgument(format!(
                "bump width must be positive, got {}",
                b.width
            )));
        }
        Ok(AnalyticField { bumps })
    }

    pub fn bumps(&self) -> &[GaussianBump] {
        &self.bumps
    }
}

impl ScalarField for AnalyticField {
    fn value(&self, x: f64, y: f64) -> Result<f64> {
        Ok(self
            .bumps
            .iter()
            .map(|b| {
                let (dx, dy) = (x - b.cx, y - b.cy);
                b.amplitude * (-(dx * dx + dy * dy) / (b.width * b.width)).exp()
            })
            .sum())
    }

    fn gradient(&self, x: f64, y: f64) -> Result<(f64, f64)> {
        Ok(self.bumps.iter().fold((0.0, 0.0), |(gx, gy), b| {
            let (dx, dy) = (x - b.cx, y - b.cy);
            let s2 = b.width * b.width;
            let e = b.amplitude * (-(dx * dx + dy * dy) / s2).exp();
            (gx - 2.0 * dx / s2 * e, gy - 2.0 * dy / s2 * e)
        }))
    }

    fn contains(&self, x: f64, y: f64) -> bool {
        x.is_finite() && y.is_finite()
    }
}

/// Jacobian `[[∂x̃/∂x, ∂x̃/∂y], [∂ỹ/∂x, ∂ỹ/∂y]]` of a homography at `(x, y)`.
fn map_jacobian(h: &Homography<f64>, x: f64, y: f64) -> Result<[[f64; 2]; 2]> {
    let [a, b, c] = h.matrix();
    let w = c[0] * x + c[1] * y + c[2];
    if w == 0.0 {
        return Err(Error::DegenerateTransform { index: None });
    }
    let u = a[0] * x + a[1] * y + a[2];
    let v = b[0] * x + b[1] * y + b[2];
    let w2 = w * w;
    Ok([
        [(a[0] * w - u * c[0]) / w2, (a[1] * w - u * c[1]) / w2],
        [(b[0] * w - v * c[0]) / w2, (b[1] * w - v * c[1]) / w2],
    ])
}

/// `ũ = u ∘ H⁻¹`, so that `ũ(H(x, y)) = u(x, y)`.
///
/// Gradients are computed by the chain rule through `H⁻¹`, independently
/// of [`Homography::prolong`].
#[derive(Clone, Debug)]
pub struct PulledBackField<F> {
    field: F,
    inverse: Homography<f64>,
}

/// Transports `field` along `h`.
pub fn pullback_field<F: ScalarField>(h: &Homography<f64>, field: F) -> PulledBackField<F> {
    PulledBackField {
        field,
        inverse: h.inverse(),
    }
}

impl<F: ScalarField> ScalarField for PulledBackField<F> {
    fn value(&self, x: f64, y: f64) -> Result<f64> {
        let (sx, sy) = self.inverse.apply_point(&x, &y)?;
        self.field.value(sx, sy)
    }

    fn gradient(&self, x: f64, y: f64) -> Result<(f64, f64)> {
        let (sx, sy) = self.inverse.apply_point(&x, &y)?;
        let (gx, gy) = self.field.gradient(sx, sy)?;
        let j = map_jacobian(&self.inverse, x, y)?;
        Ok((gx * j[0][0] + gy * j[1][0], gx * j[0][1] + gy * j[1][1]))
    }

    fn contains(&self, x: f64, y: f64) -> bool {
        match self.inverse.apply_point(&x, &y) {
            Ok((sx, sy)) => self.field.contains(sx, sy),
            Err(_) => false,
        }
    }
}

/// Row-major intensity grid sampled bilinearly. Pixel `(i, j)` sits at
/// `x = i`, `y = j`.
#[derive(Clone, Debug, PartialEq)]
pub struct RasterField {
    width: usize,
    height: usize,
    data: Vec<f64>,
}

impl RasterField {
    pub fn new(width: usize, height: usize, data: Vec<f64>) -> Result<Self> {
        if width == 0 || height == 0 || data.len() != width * height {
            return Err(Error::InvalidArgument(format!(
                "raster of {width}x{height} needs {} samples, got {}",
                width * height,
                data.len()
            )));
        }
        Ok(RasterField {
            width,
            height,
            data,
        })
    }

    /// Rasterizes `f` at integer pixel positions.
    pub fn from_fn(width: usize, height: usize, f: impl Fn(f64, f64) -> f64) -> Result<Self> {
        let data = (0..height)
            .flat_map(|j| (0..width).map(move |i| (i, j)))
            .map(|(i, j)| f(i as f64, j as f64))
            .collect();
        RasterField::new(width, height, data)
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn data(&self) -> &[f64] {
        &self.data
    }

    pub fn pixel(&self, i: usize, j: usize) -> f64 {
        self.data[j * self.width + i]
    }

    fn in_bounds(&self, x: f64, y: f64) -> bool {
        x >= 0.0 && y >= 0.0 && x <= (self.width - 1) as f64 && y <= (self.height - 1) as f64
    }

    /// Bilinear interpolation; `None` outside `[0, w-1] × [0, h-1]`.
    pub fn sample(&self, x: f64, y: f64) -> Option<f64> {
        if !self.in_bounds(x, y) {
            return None;
        }
        let x0 = (x.floor() as usize).min(self.width.saturating_sub(2));
        let y0 = (y.floor() as usize).min(self.height.saturating_sub(2));
        let x1 = (x0 + 1).min(self.width - 1);
        let y1 = (y0 + 1).min(self.height - 1);
        let (fx, fy) = (x - x0 as f64, y - y0 as f64);
        let top = self.pixel(x0, y0) * (1.0 - fx) + self.pixel(x1, y0) * fx;
        let bottom = self.pixel(x0, y1) * (1.0 - fx) + self.pixel(x1, y1) * fx;
        Some(top * (1.0 - fy) + bottom * fy)
    }

    /// Central difference with unit spacing along one axis, one-sided
    /// where the stencil leaves the grid.
    fn difference(&self, x: f64, y: f64, dx: f64, dy: f64) -> f64 {
        let at = |x, y| self.sample(x, y);
        match (at(x - dx, y - dy), at(x + dx, y + dy)) {
            (Some(m), Some(p)) => (p - m) / 2.0,
            (None, Some(p)) => p - at(x, y).unwrap_or(p),
            (Some(m), None) => at(x, y).unwrap_or(m) - m,
            (None, None) => 0.0,
        }
    }
}

impl ScalarField for RasterField {
    fn value(&self, x: f64, y: f64) -> Result<f64> {
        self.sample(x, y).ok_or(Error::OutOfDomain(0))
    }

    fn gradient(&self, x: f64, y: f64) -> Result<(f64, f64)> {
        if !self.in_bounds(x, y) {
            return Err(Error::OutOfDomain(0));
        }
        Ok((self.difference(x, y, 1.0, 0.0), self.difference(x, y, 0.0, 1.0)))
    }

    /// Keypoints need a one-pixel margin so the central stencil fits.
    fn contains(&self, x: f64, y: f64) -> bool {
        x >= 1.0 && y >= 1.0 && x <= self.width as f64 - 2.0 && y <= self.height as f64 - 2.0
    }
}

/// Sample locations in field coordinates.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct KeypointSet {
    pub points: Vec<(f64, f64)>,
}

impl KeypointSet {
    pub fn new(points: Vec<(f64, f64)>) -> Self {
        KeypointSet { points }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Maps every keypoint through `h`; fails on the first (1-based) index
    /// sent to infinity.
    pub fn transform(&self, h: &Homography<f64>) -> Result<KeypointSet> {
        self.points
            .iter()
            .enumerate()
            .map(|(i, (x, y))| {
                h.apply_point(x, y)
                    .map_err(|_| Error::DegenerateTransform { index: Some(i + 1) })
            })
            .collect::<Result<Vec<_>>>()
            .map(KeypointSet::new)
    }
}

/// One gradient sample per keypoint.
pub fn sample_config<F: ScalarField + ?Sized>(
    field: &F,
    pts: &KeypointSet,
) -> Result<Configuration<f64>> {
    let samples = pts
        .points
        .iter()
        .enumerate()
        .map(|(i, &(x, y))| {
            if !field.contains(x, y) {
                return Err(Error::OutOfDomain(i + 1));
            }
            let (p, q) = field.gradient(x, y).map_err(|e| match e {
                Error::OutOfDomain(_) => Error::OutOfDomain(i + 1),
                other => other,
            })?;
            Ok(GradientSample::new(x, y, p, q))
        })
        .collect::<Result<Vec<_>>>()?;
    Configuration::new(samples)
}

/// Signature over the generating set for `|pts|` points.
///
/// Fails with [`Error::NonGeneric`] listing every violation when the
/// sampled configuration is degenerate.
pub fn signature_extract<F: ScalarField + ?Sized>(
    field: &F,
    pts: &KeypointSet,
) -> Result<Signature<f64>> {
    let c = sample_config(field, pts)?;
    let violations = c.genericity_violations();
    if !violations.is_empty() {
        return Err(Error::NonGeneric(violations));
    }
    evaluate(&c, &generating_set(c.len())?)
}

/// Per-descriptor relative deviation between two signatures.
pub fn signature_deviation(
    a: &Signature<f64>,
    b: &Signature<f64>,
) -> Vec<(InvariantDescriptor, f64)> {
    a.entries()
        .iter()
        .filter_map(|(d, va)| b.get(d).map(|vb| (*d, relative_residual(*va, *vb))))
        .collect()
}

/// Inverse-mapped bilinear warp: output pixel `X` takes the source value
/// at `H⁻¹(X)`, or 0 when that falls outside the source.
pub fn warp_raster(h: &Homography<f64>, r: &RasterField) -> RasterField {
    let inv = h.inverse();
    let data = (0..r.height)
        .flat_map(|j| (0..r.width).map(move |i| (i, j)))
        .map(|(i, j)| {
            inv.apply_point(&(i as f64), &(j as f64))
                .ok()
                .and_then(|(x, y)| r.sample(x, y))
                .unwrap_or(0.0)
        })
        .collect();
    RasterField {
        width: r.width,
        height: r.height,
        data,
    }
}

/// Mean absolute difference of two equally sized rasters.
pub fn mean_abs_error(a: &RasterField, b: &RasterField) -> Option<f64> {
    if a.width != b.width || a.height != b.height {
        return None;
    }
    let sum: f64 = a.data.iter().zip(&b.data).map(|(u, v)| (u - v).abs()).sum();
    Some(sum / a.data.len() as f64)
}

/// Decodes a binary PGM (`P5`, maxval ≤ 255), normalizing to `[0, 1]`.
pub fn load_pgm(bytes: &[u8]) -> Result<RasterField> {
    let bad = |m: &str| Error::MalformedImage(m.to_string());
    let mut pos = 0;
    let mut token = || -> Result<String> {
        loop {
            while pos < bytes.len() && bytes[pos].is_ascii_whitespace() {
                pos += 1;
            }
            if pos < bytes.len() && bytes[pos] == b'#' {
                while pos < bytes.len() && bytes[pos] != b'\n' {
                    pos += 1;
                }
                continue;
            }
            break;
        }
        let start = pos;
        while pos < bytes.len() && !bytes[pos].is_ascii_whitespace() && bytes[pos] != b'#' {
            pos += 1;
        }
        if start == pos {
            return Err(bad("truncated header"));
        }
        Ok(String::from_utf8_lossy(&bytes[start..pos]).into_owned())
    };
    if token()? != "P5" {
        return Err(bad("expected magic P5"));
    }
    let mut number = |what: &str| -> Result<usize> {
        token()?
            .parse::<usize>()
            .map_err(|_| bad(&format!("invalid {what}")))
    };
    let width = number("width")?;
    let height = number("height")?;
    let maxval = number("maxval")?;
    if width == 0 || height == 0 {
        return Err(bad("zero dimension"));
    }
    if maxval == 0 || maxval > 255 {
        return Err(bad("maxval must be in 1..=255"));
    }
    // exactly one whitespace byte separates the header from the raster
    if pos >= bytes.len() || !bytes[pos].is_ascii_whitespace() {
        return Err(bad("missing raster separator"));
    }
    let body = &bytes[pos + 1..];
    let len = width
        .checked_mul(height)
        .ok_or_else(|| bad("dimensions overflow"))?;
    if body.len() < len {
        return Err(bad("truncated raster"));
    }
    let data = body[..len]
        .iter()
        .map(|&b| b as f64 / maxval as f64)
        .collect();
    RasterField::new(width, height, data)
}

/// Encodes a raster as binary PGM with maxval 255 (values clamped to
/// `[0, 1]` and rounded).
pub fn save_pgm(r: &RasterField) -> Vec<u8> {
    let mut out = format!("P5\n{} {}\n255\n", r.width, r.height).into_bytes();
    out.extend(
        r.data
            .iter()
            .map(|v| (v.clamp(0.0, 1.0) * 255.0).round() as u8),
    );
    out
}
