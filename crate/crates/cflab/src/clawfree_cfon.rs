//! Structured CFON coloring for claw-free graphs.
//!
//! A graph with no induced `K_{1,k}` (so every vertex's neighborhood has
//! independence number below `k`) admits a conflict-free open-neighborhood
//! coloring whose size depends only on `k` and the maximum degree, never on
//! `n`.  The pipeline here realizes that bound constructively:
//!
//! 1. [`decompose`] splits the vertex set around a greedy maximal independent
//!    set `A` into `A1` (low-degree members), `A2`, the neighborhood union
//!    `X` of `A1`, and proper color classes of the remaining induced graph,
//!    normalized so that every vertex in a class has a neighbor in each
//!    earlier class; the first `ceil(12 ln Δ)` classes form `B`, the rest `C`.
//! 2. [`build_hypergraphs`] derives five stage hypergraphs; a conflict-free
//!    coloring of each guarantees a uniquely colored neighbor for one slice
//!    of the graph (`H1` serves `C`, `H2` serves `B`, `H3` serves `X`, `H4`
//!    serves the members of `A` with a neighbor in `X`, `H5` the rest of
//!    `A`).
//! 3. [`color_clawfree_cfon`] colors `H1` with the randomized near-uniform
//!    colorer when its preconditions hold (falling back to exact search
//!    otherwise), the small stages by exact bounded search, merges everything
//!    with disjoint palettes, and repairs the handful of vertices that small
//!    graphs can leave unserved.  The returned [`PaletteCertificate`]
//!    accounts for every color and states whether the
//!    `46k·lnΔ + 2k + 3` budget claim applies.

use serde::Serialize;

use crate::coloring::Coloring;
use crate::graph::Graph;
use crate::hypergraph::{cf_color_bounded, Hypergraph};
use crate::lll::{check_preconditions, color_near_uniform, LllParams};
use crate::oracle::{verify, VerifyMode};

#[derive(Debug, thiserror::Error)]
pub enum CfonError {
    #[error("vertex {0} is isolated; open neighborhoods must be nonempty")]
    IsolatedVertex(usize),
    #[error("maximum degree {0} is too small; the decomposition needs max degree >= 2")]
    DegreeTooSmall(usize),
    #[error("k must be at least 2, got {0}")]
    InvalidK(usize),
    #[error("vertices {0:?} are served by no stage and repairs are disabled")]
    UnservedVertices(Vec<usize>),
}

/// The vertex-set decomposition driving the five-stage coloring.
///
/// All vertex lists are sorted ascending and hold original graph ids.  The
/// sets `A1`, `A2`, `X`, `B`, `C` partition the vertex set.
#[derive(Debug, Clone)]
pub struct Decomposition {
    /// Greedy maximal independent set.
    pub a: Vec<usize>,
    /// Members of `a` with degree at most `threshold`.
    pub a1: Vec<usize>,
    /// Members of `a` with degree above `threshold`.
    pub a2: Vec<usize>,
    /// Union of the neighborhoods of `a1` (disjoint from `a` since `a` is
    /// independent).
    pub x: Vec<usize>,
    /// Vertices outside `a` and `x`; the class structure lives on the
    /// subgraph they induce.
    pub gprime: Vec<usize>,
    /// Independent classes partitioning `gprime`, normalized so each vertex
    /// of class `i` has a neighbor in every class `j < i`.
    pub classes: Vec<Vec<usize>>,
    /// Degree threshold `k * ln(max_degree)` separating `a1` from `a2`.
    pub threshold: f64,
    /// Number of leading classes kept in `b`: `min(#classes, ceil(12 ln Δ))`.
    pub t: usize,
    /// Union of the first `t` classes.
    pub b: Vec<usize>,
    /// Union of the remaining classes.
    pub c: Vec<usize>,
    /// Members of `a` with at least one neighbor in `x`.
    pub ax: Vec<usize>,
    /// Members of `a` with no neighbor in `x`.
    pub axbar: Vec<usize>,
}

/// One derived stage hypergraph together with the bookkeeping needed to
/// transfer its coloring back to the graph.
#[derive(Debug, Clone)]
pub struct Stage {
    pub name: &'static str,
    /// Sorted global ids forming the hypergraph universe; local vertex `i`
    /// of the hypergraph is `universe[i]`.
    pub universe: Vec<usize>,
    /// Global source vertex of each retained edge, parallel to the
    /// hypergraph's edge list.  Edge `i` is the source's neighborhood
    /// intersected with the universe.
    pub sources: Vec<usize>,
    /// Sources whose intersection with the universe was empty; they
    /// contribute no edge and cannot be served by this stage.
    pub dropped_sources: Vec<usize>,
    pub hypergraph: Hypergraph,
}

/// Per-stage slice of the final palette.
#[derive(Debug, Clone, Serialize)]
pub struct StageReport {
    pub name: String,
    pub universe_size: usize,
    pub edge_count: usize,
    pub dropped_sources: Vec<usize>,
    /// Colors reserved by this stage; its vertices use colors
    /// `offset+1 ..= offset+colors_reserved`.
    pub colors_reserved: usize,
    pub offset: usize,
    /// Whether the randomized near-uniform colorer produced this stage (as
    /// opposed to the exact bounded search).
    pub used_lll: bool,
}

/// A single post-hoc repair: `vertex` lacked a uniquely colored neighbor, so
/// `recolored_neighbor` received the globally fresh `color`.
#[derive(Debug, Clone, Serialize)]
pub struct RepairRecord {
    pub vertex: usize,
    pub recolored_neighbor: usize,
    pub color: usize,
}

/// Full accounting of where every color went.
#[derive(Debug, Clone, Serialize)]
pub struct PaletteCertificate {
    /// The star-freeness parameter used by the pipeline.
    pub k: usize,
    /// Whether `k` was supplied by the caller (otherwise claw number + 1).
    pub k_supplied: bool,
    /// Size of the largest induced star's leaf set, always computed so the
    /// certificate can state whether the input is genuinely K_{1,k}-free.
    pub claw_number: usize,
    pub max_degree: usize,
    pub stages: Vec<StageReport>,
    /// The shared fresh color given to vertices no stage colored, if any.
    pub leftover_color: Option<usize>,
    pub repairs: Vec<RepairRecord>,
    /// Total palette consumption: stage reservations plus leftover plus one
    /// fresh color per repair.
    pub total_colors: usize,
    /// The budget `46k·ln(Δ) + 2k + 3`.
    pub budget: f64,
    /// The budget claim covers runs with `Δ >= 3` and no repairs; outside
    /// that regime `total_colors` is still reported but not bounded by
    /// `budget`.
    pub budget_applies: bool,
}

fn first_isolated(g: &Graph) -> Option<usize> {
    g.isolated_vertices().into_iter().next()
}

/// Splits the vertex set as described in the module docs.
///
/// Requires maximum degree at least 2 and no isolated vertices; `k >= 2` is
/// the star parameter (not verified against the actual claw number here —
/// validity never needs it, only the budget claim does).
pub fn decompose(g: &Graph, k: usize) -> Result<Decomposition, CfonError> {
    if let Some(v) = first_isolated(g) {
        return Err(CfonError::IsolatedVertex(v));
    }
    let delta = g.max_degree();
    if delta < 2 {
        return Err(CfonError::DegreeTooSmall(delta));
    }
    if k < 2 {
        return Err(CfonError::InvalidK(k));
    }
    let n = g.n();
    let ln_delta = (delta as f64).ln();
    let threshold = k as f64 * ln_delta;

    let a = g.greedy_maximal_independent_set();
    let mut in_a = vec![false; n];
    for &v in &a {
        in_a[v] = true;
    }
    let (a1, a2): (Vec<usize>, Vec<usize>) =
        a.iter().partition(|&&v| g.degree(v) as f64 <= threshold);

    let mut in_x = vec![false; n];
    for &v in &a1 {
        for &u in g.neighbors(v) {
            in_x[u] = true;
        }
    }
    let x: Vec<usize> = (0..n).filter(|&v| in_x[v]).collect();
    let gprime: Vec<usize> = (0..n).filter(|&v| !in_a[v] && !in_x[v]).collect();

    let (gp, to_global) = g.induced(&gprime);
    let classes = normalized_classes(&gp)
        .into_iter()
        .map(|class| {
            let mut c: Vec<usize> = class.into_iter().map(|v| to_global[v]).collect();
            c.sort_unstable();
            c
        })
        .collect::<Vec<_>>();

    let t = classes.len().min((12.0 * ln_delta).ceil() as usize);
    let mut b: Vec<usize> = classes[..t].iter().flatten().copied().collect();
    b.sort_unstable();
    let mut c: Vec<usize> = classes[t..].iter().flatten().copied().collect();
    c.sort_unstable();

    let (ax, axbar): (Vec<usize>, Vec<usize>) = a
        .iter()
        .partition(|&&v| g.neighbors(v).iter().any(|&u| in_x[u]));

    Ok(Decomposition {
        a,
        a1,
        a2,
        x,
        gprime,
        classes,
        threshold,
        t,
        b,
        c,
        ax,
        axbar,
    })
}

/// Greedy proper classes of `gp`, then repeatedly move each vertex down to
/// the smallest earlier class where it has no neighbor, until no move
/// applies.  At the fixed point every vertex of class `i` has a neighbor in
/// every class `j < i`; empty classes can then only be trailing and are
/// dropped.  Each move strictly decreases the sum of class indices, so the
/// sweep terminates.
fn normalized_classes(gp: &Graph) -> Vec<Vec<usize>> {
    let f = gp.greedy_proper_coloring();
    let s = f.max_color();
    let mut class_of: Vec<usize> = (0..gp.n()).map(|v| f.get(v).unwrap() - 1).collect();
    let mut classes: Vec<Vec<usize>> = vec![Vec::new(); s];
    for (v, &i) in class_of.iter().enumerate() {
        classes[i].push(v);
    }
    loop {
        let mut moved = false;
        for i in 1..classes.len() {
            let snapshot = classes[i].clone();
            for v in snapshot {
                if class_of[v] != i {
                    continue;
                }
                let dest = (0..i)
                    .find(|&j| !gp.neighbors(v).iter().any(|&u| class_of[u] == j));
                if let Some(j) = dest {
                    classes[i].retain(|&u| u != v);
                    let at = classes[j].binary_search(&v).unwrap_err();
                    classes[j].insert(at, v);
                    class_of[v] = j;
                    moved = true;
                }
            }
        }
        if !moved {
            break;
        }
    }
    while classes.last().is_some_and(Vec::is_empty) {
        classes.pop();
    }
    debug_assert!(classes.iter().all(|c| !c.is_empty()));
    classes
}

fn make_stage(name: &'static str, g: &Graph, universe: &[usize], sources: &[usize]) -> Stage {
    let mut pos: Vec<Option<usize>> = vec![None; g.n()];
    for (i, &v) in universe.iter().enumerate() {
        pos[v] = Some(i);
    }
    let mut edges = Vec::new();
    let mut kept = Vec::new();
    let mut dropped = Vec::new();
    for &v in sources {
        let e: Vec<usize> = g.neighbors(v).iter().filter_map(|&u| pos[u]).collect();
        if e.is_empty() {
            dropped.push(v);
        } else {
            edges.push(e);
            kept.push(v);
        }
    }
    let hypergraph = Hypergraph::new(universe.len(), edges)
        .expect("stage edges are nonempty and within the universe by construction");
    Stage {
        name,
        universe: universe.to_vec(),
        sources: kept,
        dropped_sources: dropped,
        hypergraph,
    }
}

/// Builds the five stage hypergraphs.  Each stage is `(target universe,
/// one edge per source vertex)`; conflict-freeness of a stage coloring hands
/// every source with a retained edge a uniquely colored neighbor.
///
/// `H1`'s edges are neighborhoods inside the induced subgraph on
/// `b ∪ c`, but since both endpoints then lie in that subgraph they coincide
/// with plain neighborhoods intersected with `b`.
pub fn build_hypergraphs(g: &Graph, d: &Decomposition) -> [Stage; 5] {
    [
        make_stage("H1", g, &d.b, &d.c),
        make_stage("H2", g, &d.a2, &d.b),
        make_stage("H3", g, &d.a1, &d.x),
        make_stage("H4", g, &d.x, &d.ax),
        make_stage("H5", g, &d.c, &d.axbar),
    ]
}

/// Definitional recheck of the decomposition's structural guarantees.
///
/// Errors describe the first violated property.  The `k`-dependent checks
/// (at most `k-1` neighbors in any class; stage degree bounds) are theorems
/// only for genuinely K_{1,k}-free inputs, so call this with `k >`
/// claw number.
pub fn check_observations(g: &Graph, k: usize, d: &Decomposition) -> Result<(), String> {
    let n = g.n();
    // The five universes partition V.
    let mut tag = vec![0u8; n];
    for (bit, set) in [(1u8, &d.a1), (2, &d.a2), (4, &d.x), (8, &d.b), (16, &d.c)] {
        for &v in set {
            if tag[v] != 0 {
                return Err(format!("vertex {v} appears in two universes"));
            }
            tag[v] = bit;
        }
    }
    if let Some(v) = (0..n).find(|&v| tag[v] == 0) {
        return Err(format!("vertex {v} appears in no universe"));
    }

    // A is independent and maximal.
    let mut in_a = vec![false; n];
    for &v in &d.a {
        in_a[v] = true;
    }
    for &v in &d.a {
        if g.neighbors(v).iter().any(|&u| in_a[u]) {
            return Err(format!("A is not independent at {v}"));
        }
    }
    for v in 0..n {
        if !in_a[v] && !g.neighbors(v).iter().any(|&u| in_a[u]) {
            return Err(format!("A is not maximal: {v} could join"));
        }
    }

    // Classes: independent, and the fixed-point property.
    let mut class_of = vec![usize::MAX; n];
    for (i, class) in d.classes.iter().enumerate() {
        for &v in class {
            class_of[v] = i;
        }
    }
    for (i, class) in d.classes.iter().enumerate() {
        for &v in class {
            if g.neighbors(v).iter().any(|&u| class_of[u] == i) {
                return Err(format!("class {i} is not independent at {v}"));
            }
            for j in 0..i {
                if !g.neighbors(v).iter().any(|&u| class_of[u] == j) {
                    return Err(format!(
                        "vertex {v} of class {i} has no neighbor in class {j}"
                    ));
                }
            }
        }
    }

    // K_{1,k}-freeness consequence: at most k-1 neighbors in any class.
    for v in 0..n {
        let mut per_class = vec![0usize; d.classes.len()];
        for &u in g.neighbors(v) {
            if class_of[u] != usize::MAX {
                per_class[class_of[u]] += 1;
            }
        }
        if let Some((i, &cnt)) = per_class.iter().enumerate().find(|&(_, &c)| c >= k) {
            return Err(format!(
                "vertex {v} has {cnt} >= k neighbors in class {i}"
            ));
        }
    }

    // Stage degree bounds.
    let stages = build_hypergraphs(g, d);
    let h3 = &stages[2].hypergraph;
    if h3.edge_count() > 0 && h3.max_degree() as f64 > d.threshold {
        return Err(format!(
            "H3 max degree {} exceeds threshold {}",
            h3.max_degree(),
            d.threshold
        ));
    }
    for stage in [&stages[3], &stages[4]] {
        if stage.hypergraph.edge_count() > 0 && stage.hypergraph.max_degree() > k - 1 {
            return Err(format!(
                "{} max degree {} exceeds k-1 = {}",
                stage.name,
                stage.hypergraph.max_degree(),
                k - 1
            ));
        }
    }
    Ok(())
}

struct StageColoring {
    reserved: usize,
    used_lll: bool,
    /// `(global vertex, color within the stage palette)` for vertices
    /// appearing in at least one retained edge.  Universe members in no edge
    /// are left to the shared leftover color.
    assignment: Vec<(usize, usize)>,
}

fn color_stage_exact(stage: &Stage) -> StageColoring {
    color_stage_with(stage, None)
}

/// Colors one stage.  When `lll` parameters are given and their
/// preconditions hold, the randomized near-uniform colorer runs first; exact
/// bounded search (guaranteed to succeed with `Δ_H + 1` colors) covers the
/// remaining cases.
fn color_stage_with(stage: &Stage, lll: Option<&LllParams>) -> StageColoring {
    let h = &stage.hypergraph;
    if h.edge_count() == 0 {
        return StageColoring {
            reserved: 0,
            used_lll: false,
            assignment: Vec::new(),
        };
    }
    let mut featured = vec![false; h.universe()];
    for edge in h.edges() {
        for &v in edge {
            featured[v] = true;
        }
    }
    if let Some(params) = lll {
        if check_preconditions(h, params).ok {
            if let Ok(f) = color_near_uniform(h, params) {
                let assignment = featured_assignment(stage, &featured, &f);
                // The randomized stage reserves its full palette: the bound
                // is about the palette offered, not the colors that happened
                // to be drawn.
                return StageColoring {
                    reserved: params.palette_size,
                    used_lll: true,
                    assignment,
                };
            }
        }
    }
    let f = cf_color_bounded(h, h.max_degree() + 1)
        .expect("bounded search is guaranteed to succeed with max degree + 1 colors");
    let assignment = featured_assignment(stage, &featured, &f);
    let reserved = assignment.iter().map(|&(_, c)| c).max().unwrap_or(0);
    StageColoring {
        reserved,
        used_lll: false,
        assignment,
    }
}

fn featured_assignment(
    stage: &Stage,
    featured: &[bool],
    f: &Coloring,
) -> Vec<(usize, usize)> {
    (0..stage.universe.len())
        .filter(|&v| featured[v])
        .map(|v| (stage.universe[v], f.get(v).expect("stage colorings are total")))
        .collect()
}

/// Produces a total CFON coloring of a claw-free graph together with a
/// palette certificate.
///
/// When `k` is `None` it defaults to the claw number plus one, making the
/// input K_{1,k}-free by construction.  `seed` drives only the randomized
/// `H1` stage.  With `fallback` enabled, vertices that the stages fail to
/// serve (possible on small graphs where the logarithmic thresholds
/// degenerate) are repaired by giving their lowest-id neighbor a globally
/// fresh color; disabled, such vertices surface as
/// [`CfonError::UnservedVertices`].
pub fn color_clawfree_cfon(
    g: &Graph,
    k: Option<usize>,
    seed: u64,
    fallback: bool,
) -> Result<(Coloring, PaletteCertificate), CfonError> {
    if let Some(v) = first_isolated(g) {
        return Err(CfonError::IsolatedVertex(v));
    }
    let n = g.n();
    let delta = g.max_degree();
    let claw = g.claw_number();
    let k_supplied = k.is_some();
    let k = match k {
        Some(k) if k < 2 => return Err(CfonError::InvalidK(k)),
        Some(k) => k,
        None => claw + 1,
    };
    let budget = 46.0 * k as f64 * (delta.max(1) as f64).ln() + 2.0 * k as f64 + 3.0;

    // Maximum degree 1 means every open neighborhood is a singleton, so any
    // total coloring is conflict-free; one shared color does it.
    if delta < 2 {
        let mut f = Coloring::blank(n);
        for v in 0..n {
            f.set(v, 1);
        }
        let cert = PaletteCertificate {
            k,
            k_supplied,
            claw_number: claw,
            max_degree: delta,
            stages: Vec::new(),
            leftover_color: Some(1),
            repairs: Vec::new(),
            total_colors: if n == 0 { 0 } else { 1 },
            budget,
            budget_applies: false,
        };
        return Ok((f, cert));
    }

    let d = decompose(g, k)?;
    if claw < k {
        // The input is genuinely K_{1,k}-free, so the structural guarantees
        // are theorems; a failure here is an implementation bug.
        if let Err(msg) = check_observations(g, k, &d) {
            panic!("decomposition invariant violated on K_{{1,{k}}}-free input: {msg}");
        }
    }
    let stages = build_hypergraphs(g, &d);

    let ln_delta = (delta as f64).ln();
    let h1_params = LllParams::new((k - 1) as f64, 12.0 * ln_delta, 0, seed)
        .map(|p| LllParams {
            gamma: stages[0].hypergraph.max_edge_intersections(),
            ..p
        })
        .ok();
    let colored: Vec<StageColoring> = stages
        .iter()
        .enumerate()
        .map(|(i, stage)| {
            if i == 0 {
                color_stage_with(stage, h1_params.as_ref())
            } else {
                color_stage_exact(stage)
            }
        })
        .collect();

    let mut f = Coloring::blank(n);
    let mut offset = 0usize;
    let mut reports = Vec::new();
    for (stage, sc) in stages.iter().zip(&colored) {
        for &(v, c) in &sc.assignment {
            f.set(v, offset + c);
        }
        reports.push(StageReport {
            name: stage.name.to_string(),
            universe_size: stage.universe.len(),
            edge_count: stage.hypergraph.edge_count(),
            dropped_sources: stage.dropped_sources.clone(),
            colors_reserved: sc.reserved,
            offset,
            used_lll: sc.used_lll,
        });
        offset += sc.reserved;
    }

    let mut leftover_color = None;
    if (0..n).any(|v| f.get(v).is_none()) {
        let c = offset + 1;
        for v in 0..n {
            if f.get(v).is_none() {
                f.set(v, c);
            }
        }
        leftover_color = Some(c);
        offset += 1;
    }

    // Every source with a retained edge is served: its stage guarantees a
    // color unique among its universe-neighbors, all of which carry stage
    // colors, and other neighbors use disjoint palettes.  So violations can
    // only be dropped sources.
    let report = verify(g, &f, VerifyMode::Open).expect("isolation checked above");
    let mut repairs = Vec::new();
    if !report.ok {
        let dropped: Vec<usize> = stages
            .iter()
            .flat_map(|s| s.dropped_sources.iter().copied())
            .collect();
        for v in &report.violating {
            assert!(
                dropped.contains(v),
                "vertex {v} violates CFON but was served by a stage — internal bug"
            );
        }
        if !fallback {
            return Err(CfonError::UnservedVertices(report.violating));
        }
        for &v in &report.violating {
            let u = g.neighbors(v)[0];
            offset += 1;
            f.set(u, offset);
            repairs.push(RepairRecord {
                vertex: v,
                recolored_neighbor: u,
                color: offset,
            });
        }
        // A globally fresh color on a neighbor satisfies the repaired vertex
        // and every other vertex adjacent to the recolored one, so a single
        // pass leaves nothing violating.
        let after = verify(g, &f, VerifyMode::Open).expect("isolation checked above");
        assert!(
            after.ok,
            "repair pass left violations {:?} — internal bug",
            after.violating
        );
    }

    let total_colors = offset;
    let budget_applies = delta >= 3 && repairs.is_empty();
    if budget_applies {
        assert!(
            (total_colors as f64) <= budget,
            "palette budget exceeded: {total_colors} colors against budget {budget}"
        );
    }
    let cert = PaletteCertificate {
        k,
        k_supplied,
        claw_number: claw,
        max_degree: delta,
        stages: reports,
        leftover_color,
        repairs,
        total_colors,
        budget,
        budget_applies,
    };
    Ok((f, cert))
}
