//! JSON input files and scalar literals.

use std::path::Path;

use anyhow::{anyhow, bail, Context, Result};
use serde::Deserialize;
use serde_json::Value;

use projinv_core::imaging::KeypointSet;
use projinv_core::scalar::{self, Rational, Scalar};
use projinv_core::{Configuration, GradientSample, Homography};

pub fn parse_rational(s: &str) -> Result<Rational> {
    Ok(scalar::parse_rational(s)?)
}

/// A scalar type that can be read from a JSON number or string.
pub trait FromJson: Scalar {
    fn from_json(v: &Value) -> Result<Self>;
}

impl FromJson for Rational {
    fn from_json(v: &Value) -> Result<Self> {
        match v {
            Value::String(s) => parse_rational(s),
            // the shortest round-trip text of the number, read exactly
            Value::Number(n) => parse_rational(&n.to_string()),
            other => bail!("expected a number or rational string, got {other}"),
        }
    }
}

impl FromJson for f64 {
    fn from_json(v: &Value) -> Result<Self> {
        match v {
            Value::Number(n) => n.as_f64().ok_or_else(|| anyhow!("number out of range: {n}")),
            Value::String(s) => Ok(parse_rational(s)?.to_f64()),
            other => bail!("expected a number or rational string, got {other}"),
        }
    }
}

#[derive(Deserialize)]
struct RawPoint {
    x: Value,
    y: Value,
    p: Value,
    q: Value,
}

#[derive(Deserialize)]
struct RawConfig {
    points: Vec<RawPoint>,
}

#[derive(Deserialize)]
struct RawHomography {
    matrix: Vec<Vec<Value>>,
}

#[derive(Deserialize)]
struct RawKeypoint {
    x: f64,
    y: f64,
}

#[derive(Deserialize)]
struct RawKeypoints {
    points: Vec<RawKeypoint>,
}

fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("malformed JSON in {}", path.display()))
}

pub fn parse_config<S: FromJson>(text: &str) -> Result<Configuration<S>> {
    let raw: RawConfig = serde_json::from_str(text).context("malformed configuration")?;
    let samples = raw
        .points
        .iter()
        .enumerate()
        .map(|(i, pt)| {
            let get = |v: &Value| S::from_json(v).with_context(|| format!("point {}", i + 1));
            Ok(GradientSample::new(get(&pt.x)?, get(&pt.y)?, get(&pt.p)?, get(&pt.q)?))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Configuration::new(samples)?)
}

pub fn load_config<S: FromJson>(path: &Path) -> Result<Configuration<S>> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    parse_config(&text)
}

pub fn load_homography<S: FromJson>(path: &Path) -> Result<Homography<S>> {
    let raw: RawHomography = read_json(path)?;
    if raw.matrix.len() != 3 || raw.matrix.iter().any(|r| r.len() != 3) {
        bail!("homography matrix must be 3x3");
    }
    let mut m: [[S; 3]; 3] = std::array::from_fn(|_| std::array::from_fn(|_| S::zero()));
    for (i, row) in raw.matrix.iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            m[i][j] = S::from_json(v).with_context(|| format!("matrix entry ({}, {})", i + 1, j + 1))?;
        }
    }
    Ok(Homography::new(m)?)
}

pub fn load_keypoints(path: &Path) -> Result<KeypointSet> {
    let raw: RawKeypoints = read_json(path)?;
    Ok(KeypointSet::new(raw.points.iter().map(|k| (k.x, k.y)).collect()))
}

/// Parses an `--omega` style literal.
pub fn parse_omega(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;
    use projinv_core::scalar::rational;

    #[test]
    fn rational_literals() {
        assert_eq!(parse_rational("-1/3").unwrap(), rational(-1, 3));
        assert_eq!(parse_rational("4/6").unwrap(), rational(2, 3));
        assert_eq!(parse_rational("7").unwrap(), rational(7, 1));
        assert_eq!(parse_rational("0.25").unwrap(), rational(1, 4));
        assert_eq!(parse_rational("-1.5e2").unwrap(), rational(-150, 1));
        assert_eq!(parse_rational("2.5E-1").unwrap(), rational(1, 4));
        assert_eq!(parse_rational(".5").unwrap(), rational(1, 2));
        for bad in ["1/0", "abc", "", "1/2/3", "1.2.3", "-"] {
            assert!(parse_rational(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn json_scalars() {
        let v: Value = serde_json::from_str("[0.1, \"1/3\", 2]").unwrap();
        let Value::Array(a) = v else { unreachable!() };
        assert_eq!(Rational::from_json(&a[0]).unwrap(), rational(1, 10));
        assert_eq!(Rational::from_json(&a[1]).unwrap(), rational(1, 3));
        assert_eq!(f64::from_json(&a[1]).unwrap(), 1.0 / 3.0);
        assert!(f64::from_json(&Value::Null).is_err());
    }

    #[test]
    fn config_parsing() {
        let c: Configuration<Rational> = parse_config(
            r#"{"points": [{"x": 0, "y": 0, "p": 1, "q": 0}, {"x": "1/2", "y": 1, "p": 0, "q": 1}]}"#,
        )
        .unwrap();
        assert_eq!(c.len(), 2);
        assert_eq!(c.sample(2).unwrap().x, rational(1, 2));
        assert!(parse_config::<f64>(r#"{"points": [{"x": 0, "y": 0, "p": 1, "q": 0}]}"#).is_err());
        assert!(parse_config::<f64>(r#"{"points": [{"x": 0}]}"#).is_err());
    }
}
