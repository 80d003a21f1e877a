//! Joint first-order invariants of point/gradient configurations.
//!
//! Absolute generators are the mixed determinants `ζ_ij`, `τ` and `σ`;
//! relative ones are products of `Δ_ijk` (gradient-line determinants)
//! and `δ_ijk` (point determinants). The primitive relative invariant
//! `z_n` is described by an [`ExponentVector`] over index triples.

use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;
use num_traits::ToPrimitive;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::geometry::{det3, join, triples, Configuration};
use crate::linalg::{solve_free_zero, LinearSolution};
use crate::scalar::{Rational, Scalar};

/// Sorted 1-based index triple `i < j < k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Triple(pub [usize; 3]);

impl Triple {
    /// Sorts the indices; rejects repeated ones and index 0.
    pub fn new(mut idx: [usize; 3]) -> Result<Self> {
        idx.sort_unstable();
        if idx[0] == 0 || idx[0] == idx[1] || idx[1] == idx[2] {
            return Err(Error::RepeatedIndex(idx.to_vec()));
        }
        Ok(Triple(idx))
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0.contains(&i)
    }

    /// Key used in JSON output, e.g. `"1,2,5"`.
    pub fn key(&self) -> String {
        format!("{},{},{}", self.0[0], self.0[1], self.0[2])
    }
}

impl fmt::Display for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.key())
    }
}

impl Serialize for Triple {
    fn serialize<Se: Serializer>(&self, s: Se) -> std::result::Result<Se::Ok, Se::Error> {
        s.serialize_str(&self.key())
    }
}

/// Names one invariant together with the (1-based) indices it reads.
///
/// The derived ordering is the canonical one: by kind in declaration
/// order, then lexicographically by indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum InvariantDescriptor {
    /// `det(ℓ_i, ℓ_j, A_i × A_j)`.
    Zeta(usize, usize),
    /// `Δ_ijk · δ_ijk`.
    Tau(usize, usize, usize),
    /// Product of `δ·Δ` over the four triples of four points.
    Sigma(usize, usize, usize, usize),
    /// `Δ_ijk = det(ℓ_i, ℓ_j, ℓ_k)`, weight `-1/3`.
    DeltaLines(usize, usize, usize),
    /// `δ_ijk = det(A_i, A_j, A_k)`, weight `1/3`.
    DeltaPoints(usize, usize, usize),
    /// `δ_ijk · Δ_ijk`, absolute.
    AbsProduct(usize, usize, usize),
    /// Primitive relative invariant `z_n`.
    Zn(usize),
}

impl InvariantDescriptor {
    pub fn name(&self) -> &'static str {
        match self {
            Self::Zeta(..) => "zeta",
            Self::Tau(..) => "tau",
            Self::Sigma(..) => "sigma",
            Self::DeltaLines(..) => "delta_lines",
            Self::DeltaPoints(..) => "delta_points",
            Self::AbsProduct(..) => "abs_product",
            Self::Zn(..) => "zn",
        }
    }

    pub fn indices(&self) -> Vec<usize> {
        match *self {
            Self::Zeta(i, j) => vec![i, j],
            Self::Tau(i, j, k)
            | Self::DeltaLines(i, j, k)
            | Self::DeltaPoints(i, j, k)
            | Self::AbsProduct(i, j, k) => vec![i, j, k],
            Self::Sigma(i, j, k, l) => vec![i, j, k, l],
            Self::Zn(n) => vec![n],
        }
    }

    /// Weight `ω` in `F(T·c) = J(T)^ω · F(c)`.
    pub fn weight(&self) -> Rational {
        match *self {
            Self::Zeta(..) | Self::Tau(..) | Self::Sigma(..) | Self::AbsProduct(..) => {
                <Rational as Scalar>::zero()
            }
            Self::DeltaLines(..) => Rational::new((-1).into(), 3.into()),
            Self::DeltaPoints(..) => Rational::new(1.into(), 3.into()),
            Self::Zn(n) => zn_weight(n),
        }
    }

    /// Checks the descriptor against a configuration of `n` points.
    pub fn validate(&self, n: usize) -> Result<()> {
        if let Self::Zn(m) = *self {
            return if m == n && n >= 3 {
                Ok(())
            } else {
                Err(Error::InvalidArgument(format!(
                    "{self} does not apply to a configuration of {n} points"
                )))
            };
        }
        let idx = self.indices();
        if let Some(&i) = idx.iter().find(|&&i| i == 0 || i > n) {
            return Err(Error::IndexOutOfRange { index: i, n });
        }
        for (a, i) in idx.iter().enumerate() {
            if idx[a + 1..].contains(i) {
                return Err(Error::RepeatedIndex(idx));
            }
        }
        Ok(())
    }

    /// Evaluates the descriptor at `c`.
    pub fn eval<S: Scalar>(&self, c: &Configuration<S>) -> Result<S> {
        self.validate(c.len())?;
        match *self {
            Self::Zeta(i, j) => zeta(c, i, j),
            Self::Tau(i, j, k) => tau(c, i, j, k),
            Self::Sigma(i, j, k, l) => sigma_at(c, [i, j, k, l]),
            Self::DeltaLines(i, j, k) => delta_lines(c, i, j, k),
            Self::DeltaPoints(i, j, k) => c.delta(i, j, k),
            Self::AbsProduct(i, j, k) => abs_product(c, i, j, k),
            Self::Zn(_) => z_invariant(c),
        }
    }
}

impl fmt::Display for InvariantDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let idx: Vec<String> = self.indices().iter().map(ToString::to_string).collect();
        write!(f, "{}({})", self.name(), idx.join(","))
    }
}

/// `Δ_ijk`: determinant of the gradient lines of samples `i, j, k`,
/// rows in argument order.
pub fn delta_lines<S: Scalar>(c: &Configuration<S>, i: usize, j: usize, k: usize) -> Result<S> {
    c.check_indices(&[i, j, k])?;
    Ok(det3(
        &c.gradient_line(i)?.0,
        &c.gradient_line(j)?.0,
        &c.gradient_line(k)?.0,
    ))
}

/// `ζ_ij = det(ℓ_i, ℓ_j, A_i × A_j)`.
///
/// With this row order the value equals
/// `(p_i·Δx + q_i·Δy)(p_j·Δx + q_j·Δy)` for `Δx = x_i - x_j`,
/// `Δy = y_i - y_j`, and is symmetric in `i, j`.
pub fn zeta<S: Scalar>(c: &Configuration<S>, i: usize, j: usize) -> Result<S> {
    c.check_indices(&[i, j])?;
    let side = join(&c.point(i)?, &c.point(j)?);
    Ok(det3(&c.gradient_line(i)?.0, &c.gradient_line(j)?.0, &side.0))
}

/// `δ_ijk · Δ_ijk`.
pub fn abs_product<S: Scalar>(c: &Configuration<S>, i: usize, j: usize, k: usize) -> Result<S> {
    Ok(delta_lines(c, i, j, k)? * c.delta(i, j, k)?)
}

/// `τ = Δ_ijk · δ_ijk`; the generating sets use `(1, 2, 3)`.
pub fn tau<S: Scalar>(c: &Configuration<S>, i: usize, j: usize, k: usize) -> Result<S> {
    abs_product(c, i, j, k)
}

/// `σ` on samples `1..4`.
pub fn sigma<S: Scalar>(c: &Configuration<S>) -> Result<S> {
    if c.len() < 4 {
        return Err(Error::ConfigTooSmall {
            needed: 4,
            got: c.len(),
        });
    }
    sigma_at(c, [1, 2, 3, 4])
}

/// `σ` on four arbitrary samples: the product of `δ_S · Δ_S` over the
/// four 3-subsets `S` of `idx`.
pub fn sigma_at<S: Scalar>(c: &Configuration<S>, idx: [usize; 4]) -> Result<S> {
    c.check_indices(&idx)?;
    let [a, b, d, e] = idx;
    [[a, b, d], [a, b, e], [a, d, e], [b, d, e]]
        .iter()
        .try_fold(S::one(), |acc, &[i, j, k]| Ok(acc * abs_product(c, i, j, k)?))
}

/// The generators of the absolute invariant field, canonically ordered.
///
/// `n = 2` has the single invariant `ζ12`; for `n ≥ 3` the set has
/// `4n - 8` elements.
pub fn generating_set(n: usize) -> Result<Vec<InvariantDescriptor>> {
    use InvariantDescriptor::*;
    let all_zetas = |n: usize| -> Vec<InvariantDescriptor> {
        (1..=n)
            .flat_map(|i| (i + 1..=n).map(move |j| Zeta(i, j)))
            .collect()
    };
    let mut set = match n {
        0 | 1 => {
            return Err(Error::ConfigTooSmall { needed: 2, got: n });
        }
        2 => vec![Zeta(1, 2)],
        3 => {
            let mut s = all_zetas(3);
            s.push(Tau(1, 2, 3));
            s
        }
        4 | 5 => {
            let mut s = all_zetas(n);
            s.push(Tau(1, 2, 3));
            s.push(Sigma(1, 2, 3, 4));
            s
        }
        6 => {
            let mut s = all_zetas(6);
            s.push(Tau(1, 2, 3));
            s
        }
        _ => {
            // Blocks Z_2 = {ζ12}, Z_3 = {ζ13, ζ23}, Z_4 = {ζ14, ζ24, ζ34},
            // Z_k = {ζ1k..ζ4k} for 5 ≤ k < n, Z_n = {ζ1n..ζ6n}.
            let mut s = Vec::with_capacity(4 * n - 8);
            for k in 2..=n {
                let upto = match k {
                    2..=4 => k - 1,
                    _ if k == n => 6,
                    _ => 4,
                };
                s.extend((1..=upto).map(|i| Zeta(i, k)));
            }
            s
        }
    };
    set.sort();
    Ok(set)
}

/// Values of a list of invariants at one configuration.
#[derive(Clone, Debug, PartialEq)]
pub struct Signature<S> {
    entries: Vec<(InvariantDescriptor, S)>,
}

impl<S> Signature<S> {
    pub fn entries(&self) -> &[(InvariantDescriptor, S)] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, d: &InvariantDescriptor) -> Option<&S> {
        self.entries
            .binary_search_by(|(e, _)| e.cmp(d))
            .ok()
            .map(|i| &self.entries[i].1)
    }

    pub fn values(&self) -> impl Iterator<Item = &S> {
        self.entries.iter().map(|(_, v)| v)
    }

    pub fn map<T>(&self, f: impl Fn(&S) -> T) -> Signature<T> {
        Signature {
            entries: self.entries.iter().map(|(d, v)| (*d, f(v))).collect(),
        }
    }
}

/// Evaluates every descriptor at `c`, returning them in canonical order.
///
/// Descriptors are validated in the order given; the first invalid one
/// is reported. Duplicates are rejected.
pub fn evaluate<S: Scalar>(
    c: &Configuration<S>,
    descs: &[InvariantDescriptor],
) -> Result<Signature<S>> {
    for d in descs {
        d.validate(c.len())?;
    }
    let mut sorted = descs.to_vec();
    sorted.sort();
    if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
        return Err(Error::InvalidArgument(format!("duplicate descriptor {}", w[0])));
    }
    let entries = sorted
        .into_iter()
        .map(|d| Ok((d, d.eval(c)?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(Signature { entries })
}

/// `-1 / gcd(n, 3)`, the weight of `z_n`.
pub fn zn_weight(n: usize) -> Rational {
    let g = n.gcd(&3) as i64;
    Rational::new((-1).into(), g.into())
}

/// Integer exponents `m_S` over index triples together with the weight
/// `ω` they are meant to realize.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ExponentVector {
    pub n: usize,
    pub exponents: BTreeMap<Triple, i64>,
    #[serde(serialize_with = "ser_rational")]
    pub omega: Rational,
}

fn ser_rational<Se: Serializer>(r: &Rational, s: Se) -> std::result::Result<Se::Ok, Se::Error> {
    s.serialize_str(&crate::scalar::rational_to_string(r))
}

impl ExponentVector {
    /// Per-point exponent sums `e_i = Σ_{S ∋ i} m_S`, for `i = 1..n`.
    pub fn point_sums(&self) -> Vec<i64> {
        (1..=self.n)
            .map(|i| {
                self.exponents
                    .iter()
                    .filter(|(s, _)| s.contains(i))
                    .map(|(_, m)| m)
                    .sum()
            })
            .collect()
    }

    pub fn total(&self) -> i64 {
        self.exponents.values().sum()
    }
}

/// Exponents of the primitive relative invariant `z_n`, `n ≥ 3`.
///
/// `z_3 = Δ123` and `z_4` is the product of all four `Δ`. For `n ≥ 5`
/// with `g = gcd(n, 3)`:
///
/// ```text
/// g = 1:  (∏_{i=5..n} Δ12i)³ · (Δ134·Δ234)^(n-3) / (Δ123·Δ124)^(2n-9)
/// g = 3:  (∏_{i=5..n} Δ12i)  · (Δ134·Δ234)^(n/3-1) / (Δ123·Δ124)^(2n/3-3)
/// ```
pub fn zn_exponents(n: usize) -> Result<ExponentVector> {
    if n < 3 {
        return Err(Error::ConfigTooSmall { needed: 3, got: n });
    }
    let t = |i, j, k| Triple([i, j, k]);
    let mut e = BTreeMap::new();
    match n {
        3 => {
            e.insert(t(1, 2, 3), 1);
        }
        4 => {
            for s in triples(4) {
                e.insert(Triple(s), 1);
            }
        }
        _ => {
            let ni = n as i64;
            let (outer, mid, den) = if n % 3 == 0 {
                (1, ni / 3 - 1, 2 * ni / 3 - 3)
            } else {
                (3, ni - 3, 2 * ni - 9)
            };
            for i in 5..=n {
                e.insert(t(1, 2, i), outer);
            }
            e.insert(t(1, 3, 4), mid);
            e.insert(t(2, 3, 4), mid);
            e.insert(t(1, 2, 3), -den);
            e.insert(t(1, 2, 4), -den);
            e.retain(|_, m| *m != 0);
        }
    }
    Ok(ExponentVector {
        n,
        exponents: e,
        omega: zn_weight(n),
    })
}

/// `z_n(c) = ∏ Δ_S^{m_S}`.
///
/// Fails with [`Error::SingularConfiguration`] naming the first triple
/// with a negative exponent whose `Δ` vanishes.
pub fn z_invariant<S: Scalar>(c: &Configuration<S>) -> Result<S> {
    let e = zn_exponents(c.len())?;
    let mut num = S::one();
    let mut den = S::one();
    for (s, &m) in &e.exponents {
        let [i, j, k] = s.0;
        let d = delta_lines(c, i, j, k)?;
        if m < 0 {
            if d.is_zero() {
                return Err(Error::SingularConfiguration(*s));
            }
            den = den * d.powi(-m);
        } else {
            num = num * d.powi(m);
        }
    }
    Ok(num / den)
}

/// Checks the weight equations exactly:
/// `Σ_{S∋i} m_S = -3ω` for each point and `Σ_S m_S = -nω`.
pub fn verify_exponents(n: usize, e: &ExponentVector) -> bool {
    if e.n != n || e.exponents.keys().any(|s| s.0[2] > n) {
        return false;
    }
    let three = Rational::from_i64(3);
    let per_point = -(three * e.omega.clone());
    let total = -(Rational::from_i64(n as i64) * e.omega.clone());
    e.point_sums()
        .into_iter()
        .all(|s| Rational::from_i64(s) == per_point)
        && Rational::from_i64(e.total()) == total
}

/// Particular solution of the weight equations for a given `ω`.
#[derive(Clone, Debug, PartialEq)]
pub struct WeightSolution {
    pub n: usize,
    pub omega: Rational,
    /// Every triple of `1..n`, free ones at zero.
    pub exponents: BTreeMap<Triple, Rational>,
    /// Triples solved for (pivots); the rest are free.
    pub pivots: Vec<Triple>,
    pub integral: bool,
}

impl WeightSolution {
    /// The integral exponent vector, when every exponent is an integer.
    pub fn to_exponent_vector(&self) -> Option<ExponentVector> {
        let exponents = self
            .exponents
            .iter()
            .map(|(s, m)| {
                if m.is_integer() {
                    m.to_integer().to_i64().map(|v| (*s, v))
                } else {
                    None
                }
            })
            .collect::<Option<BTreeMap<_, _>>>()?;
        Some(ExponentVector {
            n: self.n,
            exponents,
            omega: self.omega.clone(),
        })
    }
}

impl WeightSolution {
    /// Checks the weight equations exactly on the (possibly fractional)
    /// exponents.
    pub fn satisfies_system(&self) -> bool {
        let per_point = -(Rational::from_i64(3) * self.omega.clone());
        let total = -(Rational::from_i64(self.n as i64) * self.omega.clone());
        let sum = |f: &dyn Fn(&Triple) -> bool| {
            self.exponents
                .iter()
                .filter(|(s, _)| f(s))
                .fold(<Rational as Scalar>::zero(), |acc, (_, m)| acc + m.clone())
        };
        (1..=self.n).all(|i| sum(&|s| s.contains(i)) == per_point) && sum(&|_| true) == total
    }
}

/// Solves the `(n+1) × C(n,3)` weight system exactly, with unknowns in
/// lexicographic triple order and every free unknown set to zero.
pub fn solve_weight_system(n: usize, omega: &Rational) -> Result<WeightSolution> {
    if n < 3 {
        return Err(Error::ConfigTooSmall { needed: 3, got: n });
    }
    let cols: Vec<Triple> = triples(n).map(Triple).collect();
    let one = Rational::from_i64(1);
    let zero = <Rational as Scalar>::zero();
    let mut a: Vec<Vec<Rational>> = (1..=n)
        .map(|i| {
            cols.iter()
                .map(|s| if s.contains(i) { one.clone() } else { zero.clone() })
                .collect()
        })
        .collect();
    a.push(vec![one.clone(); cols.len()]);
    let mut b = vec![-(Rational::from_i64(3) * omega.clone()); n];
    b.push(-(Rational::from_i64(n as i64) * omega.clone()));
    match solve_free_zero(&a, &b) {
        LinearSolution::Inconsistent => Err(Error::Infeasible),
        LinearSolution::Solved {
            values,
            pivot_columns,
        } => {
            let integral = values.iter().all(|v| v.is_integer());
            Ok(WeightSolution {
                n,
                omega: omega.clone(),
                exponents: cols.iter().copied().zip(values).collect(),
                pivots: pivot_columns.iter().map(|&k| cols[k]).collect(),
                integral,
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::GradientSample;
    use crate::scalar::rational;
    use InvariantDescriptor::*;

    fn r(v: i64) -> Rational {
        Rational::from_i64(v)
    }

    fn config(rows: &[[i64; 4]]) -> Configuration<Rational> {
        Configuration::new(
            rows.iter()
                .map(|&[x, y, p, q]| GradientSample::new(r(x), r(y), r(p), r(q)))
                .collect(),
        )
        .unwrap()
    }

    /// Points (0,0),(1,0),(0,1) with gradients (1,0),(0,1),(1,1).
    fn tau_example() -> Configuration<Rational> {
        config(&[[0, 0, 1, 0], [1, 0, 0, 1], [0, 1, 1, 1]])
    }

    fn zeta_product_formula(c: &Configuration<Rational>, i: usize, j: usize) -> Rational {
        let (a, b) = (c.sample(i).unwrap(), c.sample(j).unwrap());
        let dx = a.x.clone() - b.x.clone();
        let dy = a.y.clone() - b.y.clone();
        (a.p.clone() * dx.clone() + a.q.clone() * dy.clone()) * (b.p.clone() * dx + b.q.clone() * dy)
    }

    #[test]
    fn delta_lines_examples() {
        let c = tau_example();
        assert_eq!(delta_lines(&c, 1, 2, 3).unwrap(), r(-1));
        assert_eq!(delta_lines(&c, 2, 1, 3).unwrap(), r(1));
        // sample 4 has the same gradient line as sample 1
        let c = config(&[[0, 0, 1, 0], [1, 0, 0, 1], [0, 1, 1, 1], [0, 5, 2, 0]]);
        assert_eq!(delta_lines(&c, 1, 2, 4).unwrap(), r(0));
    }

    #[test]
    fn zeta_examples() {
        let c = config(&[[0, 0, 1, 0], [1, 0, 1, 1]]);
        assert_eq!(zeta(&c, 1, 2).unwrap(), r(1));
        assert_eq!(zeta_product_formula(&c, 1, 2), r(1));
        let c = config(&[[0, 0, 1, 0], [1, 0, 0, 1]]);
        assert_eq!(zeta(&c, 1, 2).unwrap(), r(0));
    }

    #[test]
    fn zeta_matches_product_formula_and_is_symmetric() {
        let c = config(&[[3, -1, 2, 5], [-4, 2, 7, -3], [1, 6, -2, 1], [0, -5, 4, 4]]);
        for i in 1..=4 {
            for j in 1..=4 {
                if i != j {
                    let z = zeta(&c, i, j).unwrap();
                    assert_eq!(z, zeta_product_formula(&c, i, j));
                    assert_eq!(z, zeta(&c, j, i).unwrap());
                }
            }
        }
    }

    #[test]
    fn tau_examples() {
        let c = tau_example();
        assert_eq!(tau(&c, 1, 2, 3).unwrap(), r(-1));
        let c = config(&[[0, 0, 1, 0], [1, 0, 0, 1], [2, 0, 1, 1]]);
        assert_eq!(tau(&c, 1, 2, 3).unwrap(), r(0));
    }

    #[test]
    fn tau_matches_explicit_determinants() {
        // τ = det[p q p·x+q·y] · det[x y 1] (rows per sample)
        let c = config(&[[3, -1, 2, 5], [-4, 2, 7, -3], [1, 6, -2, 1]]);
        let rows = |f: &dyn Fn(&GradientSample<Rational>) -> [Rational; 3]| -> Vec<[Rational; 3]> {
            c.samples().iter().map(f).collect()
        };
        let l = rows(&|s| {
            [
                s.p.clone(),
                s.q.clone(),
                s.p.clone() * s.x.clone() + s.q.clone() * s.y.clone(),
            ]
        });
        let a = rows(&|s| [s.x.clone(), s.y.clone(), r(1)]);
        let expected = det3(&l[0], &l[1], &l[2]) * det3(&a[0], &a[1], &a[2]);
        // negating the third column flips the sign of the line determinant
        assert_eq!(tau(&c, 1, 2, 3).unwrap(), -expected);
    }

    #[test]
    fn sigma_factors() {
        let c = config(&[[3, -1, 2, 5], [-4, 2, 7, -3], [1, 6, -2, 1], [0, -5, 4, 4]]);
        let mut prod = r(1);
        for [i, j, k] in [[1, 2, 3], [1, 2, 4], [1, 3, 4], [2, 3, 4]] {
            prod = prod * delta_lines(&c, i, j, k).unwrap() * c.delta(i, j, k).unwrap();
        }
        assert_eq!(sigma(&c).unwrap(), prod);
        let collinear = config(&[[0, 0, 2, 5], [1, 1, 7, -3], [2, 2, -2, 1], [0, -5, 4, 4]]);
        assert_eq!(sigma(&collinear).unwrap(), r(0));
        assert_eq!(
            sigma(&tau_example()),
            Err(Error::ConfigTooSmall { needed: 4, got: 3 })
        );
    }

    #[test]
    fn generating_set_sizes_and_listings() {
        assert_eq!(generating_set(2).unwrap(), vec![Zeta(1, 2)]);
        assert_eq!(
            generating_set(3).unwrap(),
            vec![Zeta(1, 2), Zeta(1, 3), Zeta(2, 3), Tau(1, 2, 3)]
        );
        for n in 3..=12 {
            assert_eq!(generating_set(n).unwrap().len(), 4 * n - 8, "n = {n}");
        }
        let g4 = generating_set(4).unwrap();
        assert!(g4.contains(&Sigma(1, 2, 3, 4)) && g4.contains(&Zeta(3, 4)));
        let g6 = generating_set(6).unwrap();
        assert!(g6.contains(&Tau(1, 2, 3)) && !g6.iter().any(|d| matches!(d, Sigma(..))));
        let mut g7 = vec![Zeta(1, 2), Zeta(1, 3), Zeta(2, 3), Zeta(1, 4), Zeta(2, 4), Zeta(3, 4)];
        for k in 5..=6 {
            g7.extend((1..=4).map(|i| Zeta(i, k)));
        }
        g7.extend((1..=6).map(|i| Zeta(i, 7)));
        g7.sort();
        assert_eq!(generating_set(7).unwrap(), g7);
        assert!(generating_set(1).is_err());
    }

    #[test]
    fn evaluate_signature() {
        let c = tau_example();
        assert!(evaluate(&c, &[]).unwrap().is_empty());
        let sig = evaluate(&c, &generating_set(3).unwrap()).unwrap();
        assert_eq!(sig.len(), 4);
        assert_eq!(sig.entries()[3], (Tau(1, 2, 3), r(-1)));
        assert_eq!(sig.get(&Tau(1, 2, 3)), Some(&r(-1)));
        assert_eq!(
            evaluate(&c, &[Zeta(1, 2), Zeta(1, 4), Zeta(1, 1)]),
            Err(Error::IndexOutOfRange { index: 4, n: 3 })
        );
        assert!(evaluate(&c, &[Zeta(1, 2), Zeta(1, 2)]).is_err());
        assert!(evaluate(&c, &[Sigma(1, 2, 3, 4)]).is_err());
    }

    #[test]
    fn descriptor_order_is_canonical() {
        let mut v = vec![Zn(4), AbsProduct(1, 2, 3), Tau(1, 2, 3), Zeta(2, 3), Zeta(1, 4)];
        v.sort();
        assert_eq!(v, vec![Zeta(1, 4), Zeta(2, 3), Tau(1, 2, 3), AbsProduct(1, 2, 3), Zn(4)]);
        assert_eq!(Zeta(1, 2).to_string(), "zeta(1,2)");
        assert_eq!(Zn(6).weight(), rational(-1, 3));
    }

    #[test]
    fn zn_exponents_small_cases() {
        let e3 = zn_exponents(3).unwrap();
        assert_eq!(e3.exponents, BTreeMap::from([(Triple([1, 2, 3]), 1)]));
        assert_eq!(e3.omega, rational(-1, 3));
        let e4 = zn_exponents(4).unwrap();
        assert_eq!(e4.exponents.len(), 4);
        assert!(e4.exponents.values().all(|&m| m == 1));
        assert_eq!(e4.omega, r(-1));
        let e5 = zn_exponents(5).unwrap();
        assert_eq!(
            e5.exponents,
            BTreeMap::from([
                (Triple([1, 2, 5]), 3),
                (Triple([1, 3, 4]), 2),
                (Triple([2, 3, 4]), 2),
                (Triple([1, 2, 3]), -1),
                (Triple([1, 2, 4]), -1),
            ])
        );
        let e6 = zn_exponents(6).unwrap();
        assert_eq!(
            e6.exponents,
            BTreeMap::from([
                (Triple([1, 2, 5]), 1),
                (Triple([1, 2, 6]), 1),
                (Triple([1, 3, 4]), 1),
                (Triple([2, 3, 4]), 1),
                (Triple([1, 2, 3]), -1),
                (Triple([1, 2, 4]), -1),
            ])
        );
        assert_eq!(e6.omega, rational(-1, 3));
        let e9 = zn_exponents(9).unwrap();
        for i in 5..=9 {
            assert_eq!(e9.exponents[&Triple([1, 2, i])], 1);
        }
        assert_eq!(e9.exponents[&Triple([1, 3, 4])], 2);
        assert_eq!(e9.exponents[&Triple([2, 3, 4])], 2);
        assert_eq!(e9.exponents[&Triple([1, 2, 3])], -3);
        assert_eq!(e9.exponents[&Triple([1, 2, 4])], -3);
        assert!(zn_exponents(2).is_err());
    }

    #[test]
    fn verify_exponent_examples() {
        let e6 = zn_exponents(6).unwrap();
        assert_eq!(e6.point_sums(), vec![1; 6]);
        assert_eq!(e6.total(), 2);
        assert!(verify_exponents(6, &e6));
        let e7 = zn_exponents(7).unwrap();
        assert_eq!(e7.point_sums(), vec![3; 7]);
        assert_eq!(e7.total(), 7);
        assert!(verify_exponents(7, &e7));
        let zero = ExponentVector {
            n: 5,
            exponents: BTreeMap::new(),
            omega: r(0),
        };
        assert!(verify_exponents(5, &zero));
        let mut bad = e6.clone();
        *bad.exponents.get_mut(&Triple([1, 2, 5])).unwrap() = 2;
        assert!(!verify_exponents(6, &bad));
        assert!(!verify_exponents(7, &e6));
    }

    #[test]
    fn zn_exponents_always_verify() {
        for n in 3..=30 {
            assert!(verify_exponents(n, &zn_exponents(n).unwrap()), "n = {n}");
        }
    }

    #[test]
    fn z_invariant_examples() {
        let c = config(&[[3, -1, 2, 5], [-4, 2, 7, -3], [1, 6, -2, 1]]);
        assert_eq!(z_invariant(&c).unwrap(), delta_lines(&c, 1, 2, 3).unwrap());
        // samples 1, 2, 3 share a common point on their gradient lines
        let c = config(&[
            [1, 0, 1, 0],
            [0, 1, 0, 1],
            [1, 1, 1, 1],
            [3, -2, 1, 4],
            [-2, 5, 3, 1],
        ]);
        assert_eq!(delta_lines(&c, 1, 2, 3).unwrap(), r(0));
        assert_eq!(
            z_invariant(&c),
            Err(Error::SingularConfiguration(Triple([1, 2, 3])))
        );
    }

    #[test]
    fn weight_system_small_cases() {
        let s4 = solve_weight_system(4, &r(-1)).unwrap();
        assert!(s4.integral);
        assert!(s4.exponents.values().all(|m| *m == r(1)));
        let s5 = solve_weight_system(5, &r(-1)).unwrap();
        // unknowns m1..m10 are the triples in lexicographic order; the
        // pivots are m1, m2, m3, m4, m7
        assert_eq!(
            s5.pivots,
            vec![
                Triple([1, 2, 3]),
                Triple([1, 2, 4]),
                Triple([1, 2, 5]),
                Triple([1, 3, 4]),
                Triple([2, 3, 4]),
            ]
        );
        assert_eq!(s5.to_exponent_vector().unwrap(), {
            let mut z5 = zn_exponents(5).unwrap();
            for s in triples(5) {
                z5.exponents.entry(Triple(s)).or_insert(0);
            }
            z5
        });
        let s3 = solve_weight_system(3, &rational(-1, 3)).unwrap();
        assert_eq!(s3.exponents[&Triple([1, 2, 3])], r(1));
        let half = solve_weight_system(5, &rational(-1, 2)).unwrap();
        assert!(!half.integral);
        assert!(half.to_exponent_vector().is_none());
        assert!(half.satisfies_system());
        assert_eq!(half.exponents[&Triple([1, 2, 5])], rational(3, 2));
        assert!(solve_weight_system(2, &r(-1)).is_err());
    }

    #[test]
    fn weight_system_solutions_verify() {
        for n in 3..=9 {
            let s = solve_weight_system(n, &zn_weight(n)).unwrap();
            assert!(s.satisfies_system());
            if let Some(e) = s.to_exponent_vector() {
                assert!(verify_exponents(n, &e), "n = {n}");
            }
        }
    }
}
