//! Homogeneous points and lines of the projective plane, the action of a
//! homography on them, and its prolongation to first derivatives.
//!
//! Everything is generic over [`Scalar`] so the same code runs in float,
//! exact rational and dual-number arithmetic. Indices that reach the
//! caller are 1-based.

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// 3×3 determinant of three row vectors.
pub fn det3<S: Scalar>(r0: &[S; 3], r1: &[S; 3], r2: &[S; 3]) -> S {
    let m0 = r1[1].clone() * r2[2].clone() - r1[2].clone() * r2[1].clone();
    let m1 = r1[0].clone() * r2[2].clone() - r1[2].clone() * r2[0].clone();
    let m2 = r1[0].clone() * r2[1].clone() - r1[1].clone() * r2[0].clone();
    r0[0].clone() * m0 - r0[1].clone() * m1 + r0[2].clone() * m2
}

fn cross<S: Scalar>(a: &[S; 3], b: &[S; 3]) -> [S; 3] {
    [
        a[1].clone() * b[2].clone() - a[2].clone() * b[1].clone(),
        a[2].clone() * b[0].clone() - a[0].clone() * b[2].clone(),
        a[0].clone() * b[1].clone() - a[1].clone() * b[0].clone(),
    ]
}

fn dot<S: Scalar>(a: &[S; 3], b: &[S; 3]) -> S {
    a[0].clone() * b[0].clone() + a[1].clone() * b[1].clone() + a[2].clone() * b[2].clone()
}

/// Homogeneous point `(X : Y : Z)`.
#[derive(Clone, Debug, PartialEq)]
pub struct ProjPoint<S>(pub [S; 3]);

/// Homogeneous line `(p : q : r)`, the covector of `pX + qY + rZ = 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct ProjLine<S>(pub [S; 3]);

impl<S: Scalar> ProjPoint<S> {
    /// Embeds the affine point `(x, y)` as `(x : y : 1)`.
    pub fn affine(x: S, y: S) -> Self {
        ProjPoint([x, y, S::one()])
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Scalar::is_zero)
    }
}

impl<S: Scalar> ProjLine<S> {
    /// Evaluates `ℓ·A`; zero exactly when `A` lies on the line.
    pub fn incidence(&self, a: &ProjPoint<S>) -> S {
        dot(&self.0, &a.0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Scalar::is_zero)
    }

    pub fn scale(&self, k: &S) -> Self {
        ProjLine(self.0.clone().map(|v| v * k.clone()))
    }
}

/// Line through two points. Proportional inputs give the zero covector.
pub fn join<S: Scalar>(a: &ProjPoint<S>, b: &ProjPoint<S>) -> ProjLine<S> {
    ProjLine(cross(&a.0, &b.0))
}

/// Intersection of two lines. Identical lines give the zero vector.
pub fn meet<S: Scalar>(l1: &ProjLine<S>, l2: &ProjLine<S>) -> ProjPoint<S> {
    ProjPoint(cross(&l1.0, &l2.0))
}

/// A point `(x, y)` carrying the gradient `(p, q)` of an image function.
#[derive(Clone, Debug, PartialEq)]
pub struct GradientSample<S> {
    pub x: S,
    pub y: S,
    pub p: S,
    pub q: S,
}

impl<S: Scalar> GradientSample<S> {
    pub fn new(x: S, y: S, p: S, q: S) -> Self {
        GradientSample { x, y, p, q }
    }

    pub fn point(&self) -> ProjPoint<S> {
        ProjPoint::affine(self.x.clone(), self.y.clone())
    }

    pub fn has_zero_gradient(&self) -> bool {
        self.p.is_zero() && self.q.is_zero()
    }

    pub fn map<T>(&self, f: impl Fn(&S) -> T) -> GradientSample<T> {
        GradientSample {
            x: f(&self.x),
            y: f(&self.y),
            p: f(&self.p),
            q: f(&self.q),
        }
    }
}

/// Line through the sample orthogonal to its gradient:
/// `(p, q, -p·x - q·y)`.
pub fn gradient_line<S: Scalar>(s: &GradientSample<S>) -> ProjLine<S> {
    let c = -(s.p.clone() * s.x.clone()) - s.q.clone() * s.y.clone();
    ProjLine([s.p.clone(), s.q.clone(), c])
}

/// Ordered list of `n ≥ 2` gradient samples.
#[derive(Clone, Debug, PartialEq)]
pub struct Configuration<S> {
    samples: Vec<GradientSample<S>>,
}

impl<S: Scalar> Configuration<S> {
    pub fn new(samples: Vec<GradientSample<S>>) -> Result<Self> {
        if samples.len() < 2 {
            return Err(Error::ConfigTooSmall {
                needed: 2,
                got: samples.len(),
            });
        }
        Ok(Configuration { samples })
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    pub fn samples(&self) -> &[GradientSample<S>] {
        &self.samples
    }

    /// Sample `i`, 1-based.
    pub fn sample(&self, i: usize) -> Result<&GradientSample<S>> {
        self.check_index(i)?;
        Ok(&self.samples[i - 1])
    }

    pub fn point(&self, i: usize) -> Result<ProjPoint<S>> {
        Ok(self.sample(i)?.point())
    }

    pub fn gradient_line(&self, i: usize) -> Result<ProjLine<S>> {
        Ok(gradient_line(self.sample(i)?))
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.len() {
            Err(Error::IndexOutOfRange { index: i, n: self.len() })
        } else {
            Ok(())
        }
    }

    /// Validates 1-based indices: in range and pairwise distinct.
    pub fn check_indices(&self, idx: &[usize]) -> Result<()> {
        for &i in idx {
            self.check_index(i)?;
        }
        for (a, &i) in idx.iter().enumerate() {
            if idx[a + 1..].contains(&i) {
                return Err(Error::RepeatedIndex(idx.to_vec()));
            }
        }
        Ok(())
    }

    /// `δ_ijk = det(A_i, A_j, A_k)`, twice the signed area of the triangle.
    pub fn delta(&self, i: usize, j: usize, k: usize) -> Result<S> {
        self.check_indices(&[i, j, k])?;
        Ok(det3(&self.point(i)?.0, &self.point(j)?.0, &self.point(k)?.0))
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> Configuration<T> {
        Configuration {
            samples: self.samples.iter().map(|s| s.map(&f)).collect(),
        }
    }

    pub fn to_f64(&self) -> Configuration<f64> {
        self.map(Scalar::to_f64)
    }

    /// Lists the reasons this configuration is not generic: coincident
    /// points, zero gradients, or (for `n ≥ 3`) all point triples
    /// collinear. Empty means generic.
    pub fn genericity_violations(&self) -> Vec<String> {
        let n = self.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let (a, b) = (&self.samples[i], &self.samples[j]);
                if (a.x.clone() - b.x.clone()).is_zero() && (a.y.clone() - b.y.clone()).is_zero() {
                    out.push(format!("points {} and {} coincide", i + 1, j + 1));
                }
            }
        }
        for (i, s) in self.samples.iter().enumerate() {
            if s.has_zero_gradient() {
                out.push(format!("gradient of sample {} is zero", i + 1));
            }
        }
        if n >= 3 {
            let witness = triples(n).any(|[i, j, k]| {
                !self
                    .delta(i, j, k)
                    .map(|d| d.is_zero())
                    .unwrap_or(true)
            });
            if !witness {
                out.push("all points are collinear".to_string());
            }
        }
        out
    }

    pub fn is_generic(&self) -> bool {
        self.genericity_violations().is_empty()
    }
}

/// Sorted 1-based index triples `i < j < k ≤ n` in lexicographic order.
pub fn triples(n: usize) -> impl Iterator<Item = [usize; 3]> {
    (1..=n).flat_map(move |i| {
        (i + 1..=n).flat_map(move |j| (j + 1..=n).map(move |k| [i, j, k]))
    })
}

/// Invertible 3×3 matrix acting on the plane as
/// `(x, y) ↦ ((a·X)/(c·X), (b·X)/(c·X))` with `X = (x, y, 1)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Homography<S> {
    m: [[S; 3]; 3],
    det: S,
}

impl<S: Scalar> Homography<S> {
    pub fn new(m: [[S; 3]; 3]) -> Result<Self> {
        let det = det3(&m[0], &m[1], &m[2]);
        if det.is_zero() {
            return Err(Error::SingularHomography);
        }
        Ok(Homography { m, det })
    }

    pub fn identity() -> Self {
        let (o, z) = (S::one, S::zero);
        Homography {
            m: [[o(), z(), z()], [z(), o(), z()], [z(), z(), o()]],
            det: o(),
        }
    }

    pub fn matrix(&self) -> &[[S; 3]; 3] {
        &self.m
    }

    /// `D = det(A)`.
    pub fn det(&self) -> &S {
        &self.det
    }

    /// `λ = c1·x + c2·y + c3`, the denominator of the rational map.
    pub fn lambda(&self, x: &S, y: &S) -> S {
        let c = &self.m[2];
        c[0].clone() * x.clone() + c[1].clone() * y.clone() + c[2].clone()
    }

    fn nonzero_lambda(&self, x: &S, y: &S) -> Result<S> {
        let lam = self.lambda(x, y);
        if lam.is_zero() {
            Err(Error::DegenerateTransform { index: None })
        } else {
            Ok(lam)
        }
    }

    /// The same projective map represented by `k·A`.
    pub fn scaled(&self, k: &S) -> Result<Self> {
        Homography::new(self.m.clone().map(|row| row.map(|v| v * k.clone())))
    }

    /// Matrix product `self · other`: apply `other` first.
    pub fn compose(&self, other: &Homography<S>) -> Self {
        let m = std::array::from_fn(|i| {
            std::array::from_fn(|j| {
                (0..3).fold(S::zero(), |acc, k| {
                    acc + self.m[i][k].clone() * other.m[k][j].clone()
                })
            })
        });
        let det = self.det.clone() * other.det.clone();
        Homography { m, det }
    }

    /// Classical adjugate, `adj(A) = D·A⁻¹`.
    pub fn adjugate(&self) -> [[S; 3]; 3] {
        let a = &self.m;
        let cof = |r0: usize, r1: usize, c0: usize, c1: usize| {
            a[r0][c0].clone() * a[r1][c1].clone() - a[r0][c1].clone() * a[r1][c0].clone()
        };
        // adj[i][j] = cofactor(j, i)
        [
            [cof(1, 2, 1, 2), -cof(0, 2, 1, 2), cof(0, 1, 1, 2)],
            [-cof(1, 2, 0, 2), cof(0, 2, 0, 2), -cof(0, 1, 0, 2)],
            [cof(1, 2, 0, 1), -cof(0, 2, 0, 1), cof(0, 1, 0, 1)],
        ]
    }

    /// The inverse map, represented by the adjugate.
    pub fn inverse(&self) -> Self {
        let m = self.adjugate();
        let det = self.det.clone() * self.det.clone();
        Homography { m, det }
    }

    /// `A·X` on homogeneous coordinates.
    pub fn apply_homogeneous(&self, a: &ProjPoint<S>) -> ProjPoint<S> {
        ProjPoint(self.m.clone().map(|row| dot(&row, &a.0)))
    }

    /// Affine image of `(x, y)`.
    pub fn apply_point(&self, x: &S, y: &S) -> Result<(S, S)> {
        let lam = self.nonzero_lambda(x, y)?;
        let [a, b, _] = &self.m;
        let u = a[0].clone() * x.clone() + a[1].clone() * y.clone() + a[2].clone();
        let v = b[0].clone() * x.clone() + b[1].clone() * y.clone() + b[2].clone();
        Ok((u / lam.clone(), v / lam))
    }

    /// Pointwise Jacobian determinant `D / λ³`.
    pub fn local_jacobian(&self, x: &S, y: &S) -> Result<S> {
        let lam = self.nonzero_lambda(x, y)?;
        Ok(self.det.clone() / lam.powi(3))
    }

    /// Transforms a point together with its gradient.
    ///
    /// With `ũ(x̃, ỹ) = u(x, y)` the chain rule gives, for `λ` and `D` as
    /// above and `w = p·x + q·y`,
    ///
    /// ```text
    /// p̃ = λ/D · (-|b1 b2; c1 c2|·w + |b2 b3; c2 c3|·p - |b1 b3; c1 c3|·q)
    /// q̃ = λ/D · ( |a1 a2; c1 c2|·w - |a2 a3; c2 c3|·p + |a1 a3; c1 c3|·q)
    /// ```
    pub fn prolong(&self, s: &GradientSample<S>) -> Result<GradientSample<S>> {
        let (x, y) = self.apply_point(&s.x, &s.y)?;
        let lam = self.lambda(&s.x, &s.y);
        let [a, b, c] = &self.m;
        let minor = |r: &[S; 3], i: usize, j: usize| {
            r[i].clone() * c[j].clone() - r[j].clone() * c[i].clone()
        };
        let w = s.p.clone() * s.x.clone() + s.q.clone() * s.y.clone();
        let scale = lam / self.det.clone();
        let p = scale.clone()
            * (-(minor(b, 0, 1) * w.clone()) + minor(b, 1, 2) * s.p.clone()
                - minor(b, 0, 2) * s.q.clone());
        let q = scale
            * (minor(a, 0, 1) * w - minor(a, 1, 2) * s.p.clone() + minor(a, 0, 2) * s.q.clone());
        Ok(GradientSample { x, y, p, q })
    }

    /// Line image `ℓ ↦ ℓ·A⁻¹`, computed as `ℓ·adj(A) / D`.
    pub fn pushforward_line(&self, l: &ProjLine<S>) -> ProjLine<S> {
        let adj = self.adjugate();
        ProjLine(std::array::from_fn(|j| {
            (0..3).fold(S::zero(), |acc, i| acc + l.0[i].clone() * adj[i][j].clone())
                / self.det.clone()
        }))
    }

    /// Applies [`Homography::prolong`] to every sample.
    pub fn transform_config(&self, c: &Configuration<S>) -> Result<Configuration<S>> {
        let samples = c
            .samples()
            .iter()
            .enumerate()
            .map(|(i, s)| {
                self.prolong(s)
                    .map_err(|_| Error::DegenerateTransform { index: Some(i + 1) })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Configuration { samples })
    }

    /// `Dⁿ / ∏ λᵢ³`, the Jacobian of the diagonal action on `n` points.
    pub fn total_jacobian(&self, c: &Configuration<S>) -> Result<S> {
        c.samples()
            .iter()
            .enumerate()
            .try_fold(S::one(), |acc, (i, s)| {
                self.local_jacobian(&s.x, &s.y)
                    .map(|j| acc * j)
                    .map_err(|_| Error::DegenerateTransform { index: Some(i + 1) })
            })
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> Homography<T> {
        Homography {
            m: std::array::from_fn(|i| std::array::from_fn(|j| f(&self.m[i][j]))),
            det: f(&self.det),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rational, Rational};

    fn r(v: i64) -> Rational {
        Rational::from_i64(v)
    }

    fn sample(x: i64, y: i64, p: i64, q: i64) -> GradientSample<Rational> {
        GradientSample::new(r(x), r(y), r(p), r(q))
    }

    fn hom(m: [[i64; 3]; 3]) -> Homography<Rational> {
        Homography::new(m.map(|row| row.map(r))).unwrap()
    }

    #[test]
    fn gradient_line_examples() {
        assert_eq!(gradient_line(&sample(0, 0, 1, 0)).0, [r(1), r(0), r(0)]);
        assert_eq!(gradient_line(&sample(1, 0, 0, 1)).0, [r(0), r(1), r(0)]);
        assert_eq!(gradient_line(&sample(0, 1, 1, 1)).0, [r(1), r(1), r(-1)]);
        let s = sample(3, -2, 5, 7);
        assert!(gradient_line(&s).incidence(&s.point()).is_zero());
    }

    #[test]
    fn join_and_meet() {
        let a = ProjPoint([r(0), r(0), r(1)]);
        let b = ProjPoint([r(1), r(0), r(1)]);
        let l = join(&a, &b);
        assert_eq!(l.0, [r(0), r(1), r(0)]);
        assert!(l.incidence(&a).is_zero() && l.incidence(&b).is_zero());
        let o = meet(&ProjLine([r(1), r(0), r(0)]), &ProjLine([r(0), r(1), r(0)]));
        assert_eq!(o.0, [r(0), r(0), r(1)]);
        assert!(join(&a, &a).is_zero());
    }

    #[test]
    fn delta_examples() {
        let c = Configuration::new(vec![
            sample(0, 0, 1, 0),
            sample(1, 0, 0, 1),
            sample(0, 1, 1, 1),
            sample(1, 0, 2, 2),
        ])
        .unwrap();
        assert_eq!(c.delta(1, 2, 3).unwrap(), r(1));
        assert_eq!(c.delta(1, 3, 2).unwrap(), r(-1));
        assert_eq!(c.delta(1, 2, 4).unwrap(), r(0));
        assert_eq!(
            c.delta(1, 2, 5),
            Err(Error::IndexOutOfRange { index: 5, n: 4 })
        );
        assert_eq!(c.delta(1, 1, 2), Err(Error::RepeatedIndex(vec![1, 1, 2])));
        assert_eq!(c.delta(0, 1, 2), Err(Error::IndexOutOfRange { index: 0, n: 4 }));
    }

    #[test]
    fn apply_point_examples() {
        let id = Homography::<Rational>::identity();
        assert_eq!(id.apply_point(&r(3), &r(-4)).unwrap(), (r(3), r(-4)));
        let d = hom([[2, 0, 0], [0, 1, 0], [0, 0, 1]]);
        assert_eq!(d.apply_point(&r(3), &r(5)).unwrap(), (r(6), r(5)));
        let h = hom([[0, 1, 0], [0, 0, 1], [1, 0, 0]]);
        assert_eq!(
            h.apply_point(&r(0), &r(7)),
            Err(Error::DegenerateTransform { index: None })
        );
        assert_eq!(
            h.local_jacobian(&r(0), &r(7)),
            Err(Error::DegenerateTransform { index: None })
        );
    }

    #[test]
    fn apply_point_matches_homogeneous_normalization() {
        let h = hom([[2, 1, -3], [0, 5, 1], [1, 2, 7]]);
        let (x, y) = h.apply_point(&r(2), &r(-1)).unwrap();
        let img = h.apply_homogeneous(&ProjPoint::affine(r(2), r(-1)));
        assert_eq!(x, img.0[0].clone() / img.0[2].clone());
        assert_eq!(y, img.0[1].clone() / img.0[2].clone());
    }

    #[test]
    fn local_jacobian_examples() {
        let id = Homography::<Rational>::identity();
        assert_eq!(id.local_jacobian(&r(4), &r(9)).unwrap(), r(1));
        let d = hom([[2, 0, 0], [0, 1, 0], [0, 0, 1]]);
        assert_eq!(d.local_jacobian(&r(-7), &r(2)).unwrap(), r(2));
    }

    #[test]
    fn local_jacobian_matches_finite_differences() {
        let h: Homography<f64> = hom([[2, 1, -3], [0, 5, 1], [1, 2, 7]]).map(Scalar::to_f64);
        let (x, y) = (0.7, -0.3);
        let e = 1e-6;
        let f = |x: f64, y: f64| h.apply_point(&x, &y).unwrap();
        let (xp, yp) = f(x + e, y);
        let (xm, ym) = f(x - e, y);
        let (xq, yq) = f(x, y + e);
        let (xn, yn) = f(x, y - e);
        let dxx = (xp - xm) / (2.0 * e);
        let dyx = (yp - ym) / (2.0 * e);
        let dxy = (xq - xn) / (2.0 * e);
        let dyy = (yq - yn) / (2.0 * e);
        let fd = dxx * dyy - dxy * dyx;
        let exact = h.local_jacobian(&x, &y).unwrap();
        assert!((fd - exact).abs() <= 1e-6 * exact.abs(), "{fd} vs {exact}");
    }

    #[test]
    fn prolong_examples() {
        let s = sample(3, -2, 5, 7);
        assert_eq!(Homography::identity().prolong(&s).unwrap(), s);
        let d = hom([[2, 0, 0], [0, 1, 0], [0, 0, 1]]);
        let t = d.prolong(&s).unwrap();
        assert_eq!((t.x, t.y, t.p, t.q), (r(6), r(-2), rational(5, 2), r(7)));
    }

    #[test]
    fn prolong_under_shear() {
        // x̃ = x, ỹ = y + x, so u = ũ(x, x + y): p = p̃ + q̃, q = q̃.
        let h = hom([[1, 0, 0], [1, 1, 0], [0, 0, 1]]);
        let t = h.prolong(&sample(2, 3, 5, 7)).unwrap();
        assert_eq!((t.p, t.q), (r(-2), r(7)));
    }

    #[test]
    fn prolong_under_translation() {
        let h = hom([[1, 0, 4], [0, 1, -3], [0, 0, 1]]);
        let s = sample(2, 3, 5, 7);
        let t = h.prolong(&s).unwrap();
        assert_eq!((t.x.clone(), t.y.clone(), t.p.clone(), t.q.clone()), (r(6), r(0), r(5), r(7)));
        // c̃ = c - 4p + 3q
        let c = gradient_line(&s).0[2].clone();
        assert_eq!(gradient_line(&t).0[2], c - r(20) + r(21));
    }

    #[test]
    fn pushforward_preserves_incidence() {
        let h = hom([[2, 1, -3], [0, 5, 1], [1, 2, 7]]);
        let a = ProjPoint::affine(r(1), r(2));
        let l = join(&a, &ProjPoint::affine(r(-4), r(3)));
        assert!(l.incidence(&a).is_zero());
        let l2 = h.pushforward_line(&l);
        assert!(l2.incidence(&h.apply_homogeneous(&a)).is_zero());
        assert_eq!(Homography::identity().pushforward_line(&l), l);
    }

    #[test]
    fn pushforward_is_scale_covariant() {
        let h = hom([[2, 1, -3], [0, 5, 1], [1, 2, 7]]);
        let k = rational(-3, 2);
        let l = ProjLine([r(1), r(-2), r(5)]);
        let a = h.pushforward_line(&l);
        let b = h.scaled(&k).unwrap().pushforward_line(&l);
        assert_eq!(a.scale(&(Rational::from_i64(1) / k)), b);
    }

    #[test]
    fn inverse_round_trips() {
        let h = hom([[2, 1, -3], [0, 5, 1], [1, 2, 7]]);
        let (x, y) = h.apply_point(&r(1), &r(1)).unwrap();
        assert_eq!(h.inverse().apply_point(&x, &y).unwrap(), (r(1), r(1)));
    }

    #[test]
    fn transform_config_reports_index() {
        let c = Configuration::new(vec![
            sample(1, 1, 1, 0),
            sample(2, 1, 0, 1),
            sample(0, 3, 1, 1),
        ])
        .unwrap();
        // λ = x, zero at sample 3
        let h = hom([[0, 1, 0], [0, 0, 1], [1, 0, 0]]);
        assert_eq!(
            h.transform_config(&c),
            Err(Error::DegenerateTransform { index: Some(3) })
        );
        assert_eq!(Homography::identity().transform_config(&c).unwrap(), c);
    }

    #[test]
    fn total_jacobian_examples() {
        let c = Configuration::new(vec![
            sample(1, 1, 1, 0),
            sample(2, 1, 0, 1),
            sample(0, 3, 1, 1),
            sample(5, 3, 1, 2),
        ])
        .unwrap();
        assert_eq!(Homography::identity().total_jacobian(&c).unwrap(), r(1));
        let d = hom([[2, 0, 0], [0, 1, 0], [0, 0, 1]]);
        assert_eq!(d.total_jacobian(&c).unwrap(), r(16));
    }

    #[test]
    fn config_requires_two_points() {
        assert_eq!(
            Configuration::new(vec![sample(0, 0, 1, 0)]),
            Err(Error::ConfigTooSmall { needed: 2, got: 1 })
        );
    }

    #[test]
    fn genericity_diagnostics() {
        let c = Configuration::new(vec![
            sample(0, 0, 0, 0),
            sample(1, 1, 0, 1),
            sample(1, 1, 1, 1),
        ])
        .unwrap();
        let v = c.genericity_violations();
        assert!(v.iter().any(|m| m.contains("points 2 and 3")));
        assert!(v.iter().any(|m| m.contains("sample 1")));
        assert!(v.iter().any(|m| m.contains("collinear")));
        assert!(!c.is_generic());
    }

    #[test]
    fn singular_matrix_rejected() {
        let m = [[1, 2, 3], [2, 4, 6], [0, 0, 1]].map(|row| row.map(r));
        assert_eq!(Homography::new(m), Err(Error::SingularHomography));
    }

    #[test]
    fn triple_enumeration() {
        let t: Vec<_> = triples(4).collect();
        assert_eq!(t, vec![[1, 2, 3], [1, 2, 4], [1, 3, 4], [2, 3, 4]]);
        assert_eq!(triples(7).count(), 35);
    }
}
