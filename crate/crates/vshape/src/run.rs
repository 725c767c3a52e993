//! Solver selection shared by the command line and the acceptance tests.

use std::time::Instant;

use thiserror::Error;
use vshape_core::exact_solver::IndexTier;
use vshape_core::{
    approx_vshape, candidate_anchor_pairs, solve_exact, solve_ptas_with_anchors, AnchorMode, CoresetMode, Error,
    PtasOptions, PtasReport, SolveOptions, Tolerance, TwoStripMode, VShape,
};

use crate::io::PointSet;
use crate::record::{canonical_name, Algorithm, ResultRecord};

/// Above this many points the approximation uses the heuristic two-strip
/// plug instead of enumerating every direction pair.
pub const EXACT_PLUG_MAX_N: usize = 40;
/// Above this many points the PTAS uses diametral anchors.
pub const ALL_PAIRS_MAX_N: usize = 60;

#[derive(Debug, Error)]
pub enum RunError {
    /// Bad input or parameters; exit code 2.
    #[error("{0}")]
    Input(String),
    /// A solver broke an invariant; exit code 3.
    #[error("internal error: {0}")]
    Internal(String),
}

impl RunError {
    pub fn exit_code(&self) -> i32 {
        match self {
            RunError::Input(_) => 2,
            RunError::Internal(_) => 3,
        }
    }
}

impl From<Error> for RunError {
    fn from(e: Error) -> Self {
        match e {
            Error::Internal(_) => RunError::Internal(e.to_string()),
            _ => RunError::Input(e.to_string()),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SolveConfig {
    pub algorithm: Algorithm,
    pub eps: f64,
    pub balanced: bool,
    pub all_optima: bool,
    pub index_tier: IndexTier,
    /// `None` picks by input size.
    pub anchor_mode: Option<AnchorMode>,
    pub coreset: CoresetMode,
    /// `None` picks by input size.
    pub plug: Option<TwoStripMode>,
    pub threads: usize,
}

impl Default for SolveConfig {
    fn default() -> Self {
        SolveConfig {
            algorithm: Algorithm::Exact,
            eps: 0.1,
            balanced: false,
            all_optima: false,
            index_tier: IndexTier::Scan,
            anchor_mode: None,
            coreset: CoresetMode::Exact,
            plug: None,
            threads: 1,
        }
    }
}

pub struct Solved {
    pub record: ResultRecord,
    pub vshape: VShape,
}

fn plug_for(n: usize, cfg: &SolveConfig) -> TwoStripMode {
    cfg.plug.unwrap_or(if n <= EXACT_PLUG_MAX_N {
        TwoStripMode::ExactSmall
    } else {
        TwoStripMode::Heuristic
    })
}

/// Tolerance for re-checking coverage in input coordinates.
pub fn world_tol(pts: &[vshape_core::Point]) -> Tolerance {
    let ext = pts.iter().fold(0.0f64, |m, p| m.max(p.x.abs()).max(p.y.abs()));
    Tolerance::new(1e-9 * ext.max(1.0))
}

/// PTAS over `threads` workers, each taking a share of the anchor pairs.
pub fn ptas_parallel(
    pts: &[vshape_core::Point],
    eps: f64,
    w_apx: f64,
    opts: &PtasOptions,
    threads: usize,
) -> Result<PtasReport, Error> {
    if threads <= 1 {
        return solve_ptas_with_anchors(pts, eps, w_apx, opts, None);
    }
    let anchors = candidate_anchor_pairs(pts, opts.anchor_mode);
    if anchors.len() < 2 {
        return solve_ptas_with_anchors(pts, eps, w_apx, opts, None);
    }
    let chunk = anchors.len().div_ceil(threads);
    let results: Vec<Result<PtasReport, Error>> = std::thread::scope(|s| {
        let handles: Vec<_> = anchors
            .chunks(chunk)
            .map(|part| s.spawn(move || solve_ptas_with_anchors(pts, eps, w_apx, opts, Some(part))))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().unwrap_or(Err(Error::Internal("worker panicked"))))
            .collect()
    });
    let mut best: Option<PtasReport> = None;
    let mut last_err = None;
    let (mut dirs, mut sweeps, mut examined) = (0, 0, 0);
    for r in results {
        match r {
            Ok(r) => {
                dirs += r.directions;
                sweeps += r.sweeps;
                examined += r.report.candidates_examined;
                if best.as_ref().is_none_or(|b| r.report.width < b.report.width) {
                    best = Some(r);
                }
            }
            Err(e) => last_err = Some(e),
        }
    }
    let mut best = best.ok_or(last_err.unwrap_or(Error::NoCandidate))?;
    best.anchors = anchors.len();
    best.directions = dirs;
    best.sweeps = sweeps;
    best.report.candidates_examined = examined;
    Ok(best)
}

pub fn solve(ps: &PointSet, cfg: &SolveConfig) -> Result<Solved, RunError> {
    let pts = &ps.points;
    if pts.is_empty() {
        return Err(RunError::Input("no points in input".into()));
    }
    if !(cfg.eps > 0.0 && cfg.eps.is_finite()) {
        return Err(RunError::Input("epsilon must be positive".into()));
    }
    let t0 = Instant::now();
    let n = pts.len();
    let mut rec;
    let v;
    match cfg.algorithm {
        Algorithm::Exact => {
            let opts = SolveOptions {
                balanced: cfg.balanced,
                enumerate_optima: cfg.all_optima,
                index_tier: cfg.index_tier,
            };
            let r = solve_exact(pts, &opts)?;
            v = r.best;
            rec = ResultRecord::new(Algorithm::Exact, &v, cfg.balanced);
            rec.width = r.width;
            rec.canonical_type = Some(canonical_name(r.canonical_type).into());
            rec.degenerate = r.degenerate;
            rec.candidates_examined = r.candidates_examined;
            rec.optima = r.optima.map(|o| o.iter().map(Into::into).collect());
        }
        Algorithm::Approx | Algorithm::Ptas if n < 5 => {
            // Too few points for the two-strip reduction; the exact answer
            // is cheap and meets any guarantee.
            let r = solve_exact(pts, &SolveOptions::default())?;
            v = if cfg.balanced { r.best.balance() } else { r.best };
            rec = ResultRecord::new(cfg.algorithm, &v, cfg.balanced);
            rec.canonical_type = Some(canonical_name(r.canonical_type).into());
            rec.degenerate = r.degenerate;
            rec.guarantee = Some(match cfg.algorithm {
                Algorithm::Ptas => 1.0 + cfg.eps,
                _ => 1.0,
            });
            rec.candidates_examined = r.candidates_examined;
        }
        Algorithm::Approx => {
            let a = approx_vshape(pts, plug_for(n, cfg))?;
            v = if cfg.balanced { a.vshape.balance() } else { a.vshape };
            rec = ResultRecord::new(Algorithm::Approx, &v, cfg.balanced);
            rec.guarantee = Some(a.guarantee);
        }
        Algorithm::Ptas => {
            let a = approx_vshape(pts, plug_for(n, cfg))?;
            let anchor_mode = cfg.anchor_mode.unwrap_or(if n <= ALL_PAIRS_MAX_N {
                AnchorMode::AllPairs
            } else {
                AnchorMode::Diametral
            });
            let opts = PtasOptions {
                anchor_mode,
                coreset: cfg.coreset,
                apx_guarantee: a.guarantee,
                ..Default::default()
            };
            let r = ptas_parallel(pts, cfg.eps, a.vshape.width(), &opts, cfg.threads)?;
            // The fan only searches below the approximate width.
            let best = if r.report.width <= a.vshape.width() {
                r.report.best
            } else {
                a.vshape
            };
            v = if cfg.balanced { best.balance() } else { best };
            rec = ResultRecord::new(Algorithm::Ptas, &v, cfg.balanced);
            rec.canonical_type = Some(canonical_name(r.report.canonical_type).into());
            rec.degenerate = r.report.degenerate;
            rec.guarantee = Some(1.0 + cfg.eps);
            rec.candidates_examined = r.report.candidates_examined;
        }
        Algorithm::Oracle => {
            let o = vshape_core::brute_force_optimum(pts)?;
            v = *o
                .witnesses
                .first()
                .ok_or(RunError::Internal("oracle returned no witness".into()))?;
            rec = ResultRecord::new(Algorithm::Oracle, &v, false);
            rec.width = o.width;
        }
    }
    // Independent containment pass in input coordinates.
    if !v.covers(pts, world_tol(pts)) {
        return Err(RunError::Internal("result does not cover the input".into()));
    }
    rec.n_points = n;
    rec.duplicates_removed = ps.duplicates;
    rec.elapsed_ms = t0.elapsed().as_secs_f64() * 1e3;
    Ok(Solved { record: rec, vshape: v })
}
