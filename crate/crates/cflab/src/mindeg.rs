//! CFON coloring for dense graphs via neighborhood sampling.
//!
//! When every vertex's degree is large relative to the maximum degree, a
//! random vertex subset `A` (each vertex kept independently with probability
//! `144 ln^{1+eps}(2Δ) / (cΔ)`) concentrates so that every vertex has
//! between `108 ln(2Δ)` and `(180/c) ln^{1+eps}(2Δ)` sampled neighbors.
//! The traces `{N(v) ∩ A : v}` then form a near-uniform hypergraph — the
//! window endpoints are exactly the `r` and `ell*r` of the near-uniform
//! colorer with `r = 108 ln(2Δ)` and `ell = (5/(3c)) ln^eps(2Δ)` — so the
//! randomized colorer finishes the job with `ceil(e*ell*r)` colors, and one
//! extra color covers everything outside `A`.  The total stays within
//! `ceil((490/c) ln^{1+eps}(2Δ)) + 1`.
//!
//! The expectation window is checked per vertex up front (too-sparse
//! vertices are named), except when the sampling probability clamps to one:
//! then `A = V` deterministically and the sampler's own count check is the
//! same inequality, reported with full diagnostics instead.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::coloring::Coloring;
use crate::graph::Graph;
use crate::hypergraph::{cf_color_bounded, Hypergraph};
use crate::lll::{color_near_uniform, LllError, LllParams};
use crate::oracle::{verify, VerifyMode};

#[derive(Debug, thiserror::Error)]
pub enum MinDegError {
    #[error("invalid parameter: {0}")]
    InvalidParams(String),
    #[error("maximum degree {0} is too small; need at least 2")]
    DegreeTooSmall(usize),
    #[error(
        "vertex {vertex} (degree {degree}) has expected sampled-neighbor count {expected:.2} \
         outside the window ({lo:.2}, {hi:.2})"
    )]
    WindowPrecondition {
        vertex: usize,
        degree: usize,
        expected: f64,
        lo: f64,
        hi: f64,
    },
    #[error(
        "sampling cap hit after {rounds_used} rounds; {} vertices violate the window{}",
        violating.len(),
        violating
            .first()
            .map(|&(v, c)| format!(" (first: vertex {v} with count {c})"))
            .unwrap_or_default()
    )]
    RetryExhausted {
        rounds_used: usize,
        /// `(vertex, sampled-neighbor count)` for each violating vertex.
        violating: Vec<(usize, usize)>,
    },
    #[error("near-uniform coloring stage failed: {0}")]
    Stage(String),
}

/// Parameters for the sampling pipeline.  All thresholds derive from `c`,
/// `eps`, and the graph's maximum degree via the methods below.
#[derive(Debug, Clone)]
pub struct MinDegParams {
    pub c: f64,
    pub eps: f64,
    /// Cap on local resampling rounds; `None` selects `64 * max(n, 1)`.
    pub max_resample_rounds: Option<usize>,
    pub seed: u64,
}

impl MinDegParams {
    pub fn new(c: f64, eps: f64, seed: u64) -> Result<Self, MinDegError> {
        if !c.is_finite() || c <= 0.0 {
            return Err(MinDegError::InvalidParams(format!(
                "c must be a finite real > 0, got {c}"
            )));
        }
        if !eps.is_finite() || !(0.0..=1.0).contains(&eps) {
            return Err(MinDegError::InvalidParams(format!(
                "eps must lie in [0, 1], got {eps}"
            )));
        }
        Ok(MinDegParams {
            c,
            eps,
            max_resample_rounds: None,
            seed,
        })
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    /// `ln^{1+eps}(2Δ)`.
    fn log_pow(&self, delta: usize) -> f64 {
        (2.0 * delta as f64).ln().powf(1.0 + self.eps)
    }

    /// Sampling probability `144 ln^{1+eps}(2Δ) / (cΔ)`, clamped to `(0, 1]`.
    pub fn sample_prob(&self, delta: usize) -> f64 {
        (144.0 * self.log_pow(delta) / (self.c * delta as f64)).min(1.0)
    }

    /// Lower window endpoint `108 ln(2Δ)`.
    pub fn window_lo(&self, delta: usize) -> f64 {
        108.0 * (2.0 * delta as f64).ln()
    }

    /// Upper window endpoint `(180/c) ln^{1+eps}(2Δ)`.
    pub fn window_hi(&self, delta: usize) -> f64 {
        180.0 / self.c * self.log_pow(delta)
    }

    /// `ell` handed to the near-uniform colorer: `(5/(3c)) ln^eps(2Δ)`.
    /// Note `ell * window_lo == window_hi` exactly.
    pub fn ell(&self, delta: usize) -> f64 {
        5.0 / (3.0 * self.c) * (2.0 * delta as f64).ln().powf(self.eps)
    }
}

/// Draws a subset `A` with every vertex's sampled-neighbor count strictly
/// inside the window.
///
/// Indicators are independent Bernoulli draws in vertex order.  While some
/// vertex violates the window, the lowest violator's neighborhood indicators
/// are redrawn (one round each); halfway to the cap the whole sample
/// restarts once from fresh randomness.
pub fn sample_window_set(g: &Graph, p: &MinDegParams) -> Result<Vec<usize>, MinDegError> {
    let n = g.n();
    let delta = g.max_degree();
    if delta < 2 {
        return Err(MinDegError::DegreeTooSmall(delta));
    }
    let prob = p.sample_prob(delta);
    let lo = p.window_lo(delta);
    let hi = p.window_hi(delta);
    if lo >= hi {
        return Err(MinDegError::InvalidParams(format!(
            "window is empty: lo {lo:.2} >= hi {hi:.2} (c too large?)"
        )));
    }
    if prob < 1.0 {
        for v in 0..n {
            let expected = prob * g.degree(v) as f64;
            if expected <= lo || expected >= hi {
                return Err(MinDegError::WindowPrecondition {
                    vertex: v,
                    degree: g.degree(v),
                    expected,
                    lo,
                    hi,
                });
            }
        }
    }
    // With prob == 1 the sample is deterministically A = V and the count
    // check below is the precondition; let it produce the diagnostics.

    let cap = p.max_resample_rounds.unwrap_or(64 * n.max(1));
    let mut rng = ChaCha8Rng::seed_from_u64(p.seed);
    let mut in_a = vec![false; n];
    let mut count = vec![0usize; n];
    let mut violating = std::collections::BTreeSet::new();

    let draw_all = |in_a: &mut [bool],
                    count: &mut [usize],
                    violating: &mut std::collections::BTreeSet<usize>,
                    rng: &mut ChaCha8Rng| {
        for cell in in_a.iter_mut() {
            *cell = rng.random::<f64>() < prob;
        }
        for (v, c) in count.iter_mut().enumerate() {
            *c = g.neighbors(v).iter().filter(|&&u| in_a[u]).count();
        }
        violating.clear();
        for (v, &c) in count.iter().enumerate() {
            let c = c as f64;
            if c <= lo || c >= hi {
                violating.insert(v);
            }
        }
    };

    draw_all(&mut in_a, &mut count, &mut violating, &mut rng);
    let mut rounds = 0usize;
    let mut restarted = false;
    while let Some(&v) = violating.iter().next() {
        if rounds >= cap {
            return Err(MinDegError::RetryExhausted {
                rounds_used: rounds,
                violating: violating.into_iter().map(|v| (v, count[v])).collect(),
            });
        }
        if !restarted && rounds >= cap / 2 {
            restarted = true;
            draw_all(&mut in_a, &mut count, &mut violating, &mut rng);
            rounds += 1;
            continue;
        }
        rounds += 1;
        // Redraw the indicators this vertex's count depends on; counts can
        // change only for vertices adjacent to a flipped indicator.
        let mut touched = Vec::new();
        for &u in g.neighbors(v) {
            let fresh = rng.random::<f64>() < prob;
            if fresh != in_a[u] {
                in_a[u] = fresh;
                let delta_c: isize = if fresh { 1 } else { -1 };
                for &w in g.neighbors(u) {
                    count[w] = (count[w] as isize + delta_c) as usize;
                    touched.push(w);
                }
            }
        }
        touched.push(v);
        for w in touched {
            let c = count[w] as f64;
            if c <= lo || c >= hi {
                violating.insert(w);
            } else {
                violating.remove(&w);
            }
        }
    }
    Ok((0..n).filter(|&v| in_a[v]).collect())
}

#[derive(Debug, Clone)]
pub struct MinDegOutcome {
    pub coloring: Coloring,
    /// The sampled window set (sorted).
    pub a: Vec<usize>,
    /// Colors available to the trace hypergraph stage.
    pub palette_size: usize,
    /// The single extra color carried by vertices outside `a`.
    pub leftover_color: usize,
    /// Distinct colors actually present in the coloring.
    pub colors_used: usize,
    /// True when the randomized stage hit its round cap and the exact
    /// bounded search colored the traces instead (possible only on small
    /// degenerate instances).
    pub used_fallback: bool,
}

/// Full pipeline: sample `A`, CF-color the trace hypergraph
/// `{N(v) ∩ A : v ∈ V}`, and give `V ∖ A` one unused color.  The result is
/// a total coloring passing the open-neighborhood check (asserted).
pub fn color_mindeg_cfon(g: &Graph, p: &MinDegParams) -> Result<MinDegOutcome, MinDegError> {
    let n = g.n();
    let delta = g.max_degree();
    let a = sample_window_set(g, p)?;

    let mut pos: Vec<Option<usize>> = vec![None; n];
    for (i, &v) in a.iter().enumerate() {
        pos[v] = Some(i);
    }
    let edges: Vec<Vec<usize>> = (0..n)
        .map(|v| g.neighbors(v).iter().filter_map(|&u| pos[u]).collect())
        .collect();
    debug_assert!(edges.iter().all(|e: &Vec<usize>| !e.is_empty()));
    let h = Hypergraph::new(a.len(), edges).expect("window counts are positive");

    let ell = p.ell(delta);
    let r = p.window_lo(delta);
    let params = LllParams::new(ell, r, h.max_edge_intersections(), p.seed)
        .map_err(|e| MinDegError::InvalidParams(e.to_string()))?;
    let (trace_coloring, palette_size, used_fallback) = match color_near_uniform(&h, &params) {
        Ok(f) => (f, params.palette_size, false),
        Err(LllError::RetryExhausted { .. }) => {
            let f = cf_color_bounded(&h, h.max_degree() + 1)
                .expect("bounded search is guaranteed at max degree + 1");
            let used = f.max_color();
            (f, used, true)
        }
        Err(other) => return Err(MinDegError::Stage(other.to_string())),
    };

    let leftover_color = palette_size + 1;
    let mut f = Coloring::blank(n);
    for (i, &v) in a.iter().enumerate() {
        f.set(v, trace_coloring.get(i).expect("trace colorings are total"));
    }
    for v in 0..n {
        if f.get(v).is_none() {
            f.set(v, leftover_color);
        }
    }

    let report = verify(g, &f, VerifyMode::Open)
        .expect("window counts are positive, so no vertex is isolated");
    assert!(
        report.ok,
        "trace coloring left open-neighborhood violations {:?}",
        report.violating
    );
    let colors_used = f.num_distinct();
    Ok(MinDegOutcome {
        coloring: f,
        a,
        palette_size,
        leftover_color,
        colors_used,
        used_fallback,
    })
}
