//! Parameter points: the default grid, grid files and complex literals.

use std::fs;

use anyhow::{bail, Context, Result};
use xitheta::Complex64;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridPoint {
    pub alpha: f64,
    pub z: Complex64,
}

pub fn default_grid() -> Vec<GridPoint> {
    let zs = [
        Complex64::new(0.0, 0.0),
        Complex64::new(1.0, 0.0),
        Complex64::new(0.0, 2.0),
        Complex64::new(1.0, 0.5),
    ];
    [0.5, 0.8, 1.0, 1.25, 2.0]
        .iter()
        .flat_map(|&alpha| zs.iter().map(move |&z| GridPoint { alpha, z }))
        .collect()
}

/// Parses `re+imi`, `re-imi`, `imi` or `re`, e.g. `1+0.5i`, `-2i`, `0.3`.
pub fn parse_complex(text: &str) -> Result<Complex64> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        bail!("empty complex number");
    }
    let Some(body) = s.strip_suffix('i') else {
        return Ok(Complex64::new(parse_real(&s)?, 0.0));
    };
    // the sign that separates the parts: not leading and not an exponent sign
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| matches!(bytes[k], b'+' | b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    let (re, im) = match split {
        Some(k) => (parse_real(&body[..k])?, parse_imag(&body[k..])?),
        None => (0.0, parse_imag(body)?),
    };
    Ok(Complex64::new(re, im))
}

fn parse_real(s: &str) -> Result<f64> {
    let v: f64 = s.parse().with_context(|| format!("invalid number {s:?}"))?;
    if !v.is_finite() {
        bail!("non-finite number {s:?}");
    }
    Ok(v)
}

fn parse_imag(s: &str) -> Result<f64> {
    match s {
        "" | "+" => Ok(1.0),
        "-" => Ok(-1.0),
        _ => parse_real(s),
    }
}

/// One point per line: `alpha z`, with `#` comments and blank lines ignored.
pub fn parse_grid(text: &str) -> Result<Vec<GridPoint>> {
    let mut points = Vec::new();
    for (n, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut fields = line.split_whitespace();
        let (Some(a), Some(z), None) = (fields.next(), fields.next(), fields.next()) else {
            bail!("line {}: expected `alpha z`", n + 1);
        };
        let alpha = parse_real(a).with_context(|| format!("line {}", n + 1))?;
        let z = parse_complex(z).with_context(|| format!("line {}", n + 1))?;
        points.push(GridPoint { alpha, z });
    }
    if points.is_empty() {
        bail!("grid has no points");
    }
    Ok(points)
}

/// `default` or `file:<path>`.
pub fn load_grid(spec: &str) -> Result<Vec<GridPoint>> {
    if spec == "default" {
        return Ok(default_grid());
    }
    let Some(path) = spec.strip_prefix("file:") else {
        bail!("--grid must be `default` or `file:<path>`, got {spec:?}");
    };
    let text = fs::read_to_string(path).with_context(|| format!("reading grid {path}"))?;
    parse_grid(&text).with_context(|| format!("grid {path}"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn complex_literals() {
        assert_eq!(parse_complex("1+0i").unwrap(), c(1.0, 0.0));
        assert_eq!(parse_complex("1+0.5i").unwrap(), c(1.0, 0.5));
        assert_eq!(parse_complex("-1.5-2i").unwrap(), c(-1.5, -2.0));
        assert_eq!(parse_complex("2i").unwrap(), c(0.0, 2.0));
        assert_eq!(parse_complex("-i").unwrap(), c(0.0, -1.0));
        assert_eq!(parse_complex("3+i").unwrap(), c(3.0, 1.0));
        assert_eq!(parse_complex("0.3").unwrap(), c(0.3, 0.0));
        assert_eq!(parse_complex("1e-3+2E+1i").unwrap(), c(1e-3, 20.0));
        assert_eq!(parse_complex(" 1 + 2i ").unwrap(), c(1.0, 2.0));
        for bad in ["", "i1", "1+2j", "abc", "1++2i", "nan", "inf+1i"] {
            assert!(parse_complex(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn default_grid_order() {
        let g = default_grid();
        assert_eq!(g.len(), 20);
        assert_eq!(g[0], GridPoint { alpha: 0.5, z: c(0.0, 0.0) });
        assert_eq!(g[3], GridPoint { alpha: 0.5, z: c(1.0, 0.5) });
        assert_eq!(g[19], GridPoint { alpha: 2.0, z: c(1.0, 0.5) });
    }

    #[test]
    fn grid_files() {
        let g = parse_grid("# alpha z\n2 1+0i\n\n0.5 2i  # twin\n").unwrap();
        assert_eq!(g, vec![GridPoint { alpha: 2.0, z: c(1.0, 0.0) }, GridPoint { alpha: 0.5, z: c(0.0, 2.0) }]);
        assert!(parse_grid("").is_err());
        assert!(parse_grid("2\n").is_err());
        assert!(parse_grid("2 1 3\n").is_err());
        assert!(load_grid("elsewhere").is_err());
    }
}
