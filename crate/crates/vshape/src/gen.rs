//! Seeded instance generators.
//!
//! Every generator draws from `ChaCha8Rng::seed_from_u64(seed)` (the
//! `rand_chacha` crate), so a seed names the same point set on every
//! platform.

use std::f64::consts::{PI, TAU};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};
use thiserror::Error;
use vshape_core::{Point, UnitDir};

use crate::io::Metadata;

#[derive(Debug, Error, PartialEq)]
#[error("invalid generator parameter: {0}")]
pub struct GenError(pub String);

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

#[derive(Clone, Debug, PartialEq)]
pub enum GenSpec {
    /// `n` points uniform in the unit square.
    Uniform { n: usize },
    /// `n` points alternating between the rays at angles 0 and `opening`
    /// from the origin, at uniform distance in [0, 1), moved off their ray
    /// by N(0, sigma^2).
    NoisyCorner { n: usize, opening: f64, sigma: f64 },
    /// Two regular `k`-gons of circumradius 1 centred at `(-spacing/2, 0)`
    /// and `(spacing/2, 0)`, plus one guard above and one below each centre
    /// at `guard` times the k-gon width. `jitter` moves every point
    /// uniformly within a square of that half-side.
    TwoKgon {
        k: usize,
        spacing: f64,
        guard: f64,
        jitter: f64,
    },
}

impl GenSpec {
    pub fn name(&self) -> &'static str {
        match self {
            GenSpec::Uniform { .. } => "uniform",
            GenSpec::NoisyCorner { .. } => "noisy_corner",
            GenSpec::TwoKgon { .. } => "two_kgon",
        }
    }

    pub fn metadata(&self, seed: u64) -> Metadata {
        let mut params = serde_json::Map::new();
        let mut put = |k: &str, v: serde_json::Value| {
            params.insert(k.to_string(), v);
        };
        match *self {
            GenSpec::Uniform { n } => put("n", n.into()),
            GenSpec::NoisyCorner { n, opening, sigma } => {
                put("n", n.into());
                put("opening", opening.into());
                put("sigma", sigma.into());
            }
            GenSpec::TwoKgon {
                k,
                spacing,
                guard,
                jitter,
            } => {
                put("k", k.into());
                put("spacing", spacing.into());
                put("guard", guard.into());
                put("jitter", jitter.into());
            }
        }
        Metadata {
            name: None,
            seed: Some(seed),
            generator: Some(self.name().to_string()),
            params,
        }
    }

    pub fn generate(&self, seed: u64) -> Result<Vec<Point>, GenError> {
        match *self {
            GenSpec::Uniform { n } => uniform(n, seed),
            GenSpec::NoisyCorner { n, opening, sigma } => noisy_corner(n, opening, sigma, seed),
            GenSpec::TwoKgon {
                k,
                spacing,
                guard,
                jitter,
            } => two_kgon(k, spacing, guard, jitter, seed),
        }
    }
}

fn need(ok: bool, msg: &str) -> Result<(), GenError> {
    if ok {
        Ok(())
    } else {
        Err(GenError(msg.to_string()))
    }
}

pub fn uniform(n: usize, seed: u64) -> Result<Vec<Point>, GenError> {
    need(n >= 1, "n must be at least 1")?;
    let mut r = rng(seed);
    Ok((0..n)
        .map(|_| Point::new(r.random::<f64>(), r.random::<f64>()))
        .collect())
}

pub fn noisy_corner(n: usize, opening: f64, sigma: f64, seed: u64) -> Result<Vec<Point>, GenError> {
    need(n >= 1, "n must be at least 1")?;
    need(
        opening > 0.0 && opening < PI,
        "opening must lie in (0, pi)",
    )?;
    need(sigma >= 0.0 && sigma.is_finite(), "sigma must be finite and nonnegative")?;
    let noise = Normal::new(0.0, sigma).map_err(|e| GenError(e.to_string()))?;
    let rays = [UnitDir::from_angle(0.0), UnitDir::from_angle(opening)];
    let mut r = rng(seed);
    Ok((0..n)
        .map(|i| {
            let d = rays[i % 2];
            let t: f64 = r.random();
            let e = noise.sample(&mut r);
            d.v() * t + d.perp().v() * e
        })
        .collect())
}

/// Minimum width of a regular `k`-gon of circumradius 1.
pub fn kgon_width(k: usize) -> f64 {
    if k % 2 == 0 {
        2.0 * (PI / k as f64).cos()
    } else {
        1.0 + (PI / k as f64).cos()
    }
}

pub fn two_kgon(k: usize, spacing: f64, guard: f64, jitter: f64, seed: u64) -> Result<Vec<Point>, GenError> {
    need(k >= 3, "k must be at least 3")?;
    need(spacing > 2.0 && spacing.is_finite(), "spacing must exceed 2 so the polygons are disjoint")?;
    need(guard >= 0.0 && guard.is_finite(), "guard must be finite and nonnegative")?;
    need(jitter >= 0.0 && jitter.is_finite(), "jitter must be finite and nonnegative")?;
    let w = kgon_width(k);
    let mut pts = Vec::with_capacity(2 * k + 4);
    for cx in [-spacing / 2.0, spacing / 2.0] {
        for i in 0..k {
            let t = TAU * i as f64 / k as f64;
            pts.push(Point::new(cx + t.cos(), t.sin()));
        }
        if guard > 0.0 {
            pts.push(Point::new(cx, guard * w));
            pts.push(Point::new(cx, -guard * w));
        }
    }
    if jitter > 0.0 {
        let mut r = rng(seed);
        for p in &mut pts {
            *p = *p + Point::new(r.random_range(-jitter..=jitter), r.random_range(-jitter..=jitter));
        }
    }
    Ok(pts)
}
