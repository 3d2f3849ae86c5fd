//! Run configuration shared by all subcommands.

use std::path::PathBuf;

use anyhow::{bail, Context};
use clap::{Args, ValueEnum};
use num_complex::Complex64;
use qhdeform::NumericContext;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

/// Environment variable naming the default directory for report files.
pub const OUT_DIR_ENV: &str = "QHDEFORM_OUT_DIR";

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ModeArg {
    Exact,
    Numeric,
    Both,
}

impl ModeArg {
    pub fn exact(self) -> bool {
        matches!(self, ModeArg::Exact | ModeArg::Both)
    }

    pub fn numeric(self) -> bool {
        matches!(self, ModeArg::Numeric | ModeArg::Both)
    }
}

/// Parses `RE,IM` or a bare real number.
pub fn parse_complex(s: &str) -> Result<Complex64, String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    let num = |p: &str| p.parse::<f64>().map_err(|e| format!("{p:?}: {e}"));
    match parts.as_slice() {
        [re] => Ok(Complex64::new(num(re)?, 0.0)),
        [re, im] => Ok(Complex64::new(num(re)?, num(im)?)),
        _ => Err(format!("expected RE,IM, got {s:?}")),
    }
}

/// Numeric evaluation options.
#[derive(Args, Clone, Debug)]
pub struct NumericArgs {
    /// Evaluate at this q (RE,IM) instead of sampled points.
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    pub numeric_q: Option<Complex64>,
    /// Evaluate at this h (RE,IM); defaults to 0.5 when --numeric-q is given.
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    pub numeric_h: Option<Complex64>,
    /// Absolute tolerance on scaled residuals.
    #[arg(long, default_value_t = 1e-10)]
    pub tol: f64,
    /// Number of sampled generic points when no explicit q is given.
    #[arg(long, default_value_t = 3)]
    pub points: usize,
    /// Seed for sampled points.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

/// One numeric evaluation point, plus the real q used for symmetric-basis
/// formulas (which need real positive q).
#[derive(Clone, Copy, Debug, Serialize)]
pub struct NumericPoint {
    pub q: Complex64,
    pub h: Complex64,
    pub real_q: f64,
    pub tol_abs: f64,
    pub tol_rel: f64,
}

impl NumericPoint {
    pub fn ctx(&self) -> NumericContext {
        NumericContext { q: self.q, h: self.h, tol_abs: self.tol_abs, tol_rel: self.tol_rel }
    }

    pub fn real_ctx(&self) -> NumericContext {
        NumericContext { q: Complex64::new(self.real_q, 0.0), ..self.ctx() }
    }
}

impl NumericArgs {
    /// The evaluation points: the explicit one, or `points` seeded samples.
    /// `max_index` bounds the q-integers that must not vanish.
    pub fn resolve(&self, max_index: i64) -> anyhow::Result<Vec<NumericPoint>> {
        if self.tol.is_nan() || self.tol <= 0.0 {
            bail!("--tol must be positive");
        }
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        let points: Vec<NumericPoint> = match self.numeric_q {
            Some(q) => {
                let real_q = if q.im == 0.0 && q.re > 0.0 { q.re } else { qhdeform::sampling::sample_real_q(&mut rng) };
                let h = self.numeric_h.unwrap_or(Complex64::new(0.5, 0.0));
                vec![NumericPoint { q, h, real_q, tol_abs: self.tol, tol_rel: 1e-8 }]
            }
            None => {
                if self.points == 0 {
                    bail!("--points must be at least 1");
                }
                (0..self.points)
                    .map(|_| {
                        let ctx = qhdeform::sampling::sample_point(&mut rng);
                        let real_q = qhdeform::sampling::sample_real_q(&mut rng);
                        let h = self.numeric_h.unwrap_or(ctx.h);
                        NumericPoint { q: ctx.q, h, real_q, tol_abs: self.tol, tol_rel: ctx.tol_rel }
                    })
                    .collect()
            }
        };
        for p in &points {
            p.ctx().check_generic(max_index).with_context(|| format!("rejected q = {}", p.q))?;
        }
        Ok(points)
    }
}

/// Where the report goes.
#[derive(Args, Clone, Debug)]
pub struct OutputArgs {
    /// Report file. Defaults to `$QHDEFORM_OUT_DIR/<command>.json` when that
    /// variable is set, otherwise the report is printed to stdout.
    #[arg(long)]
    pub report: Option<PathBuf>,
}

impl OutputArgs {
    pub fn target(&self, command: &str) -> Option<PathBuf> {
        self.report
            .clone()
            .or_else(|| std::env::var_os(OUT_DIR_ENV).map(|d| PathBuf::from(d).join(format!("{command}.json"))))
    }
}

/// Validates a `twoJ` upper bound.
pub fn check_two_j_max(n: u32, limit: u32) -> anyhow::Result<()> {
    if n > limit {
        bail!("--two-j-max {n} exceeds the supported maximum {limit}");
    }
    Ok(())
}
