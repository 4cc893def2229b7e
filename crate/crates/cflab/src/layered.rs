//! A layered weighted random graph and its diagnostics.
//!
//! The model partitions `n` vertices into `floor(ln n)` layers; a vertex in
//! layer `i` carries weight `w = (1 - eps0)^i` (with `eps0 = eps/3`), and
//! every pair `{x, y}` — same layer or not — is an edge independently with
//! probability `w_x * w_y`.  At astronomical `n` this construction forces
//! closed-neighborhood conflict-free colorings to use many colors; at desk
//! scale those lower-bound lemmas are asymptotic statements that no finite
//! run can certify, so this module keeps the *exact* finite quantities
//! (weights, set weights, unique-neighbor sets, heavy/light classification,
//! expected degrees) as checkable formulas and ships everything asymptotic
//! as informational report fields.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::coloring::Coloring;
use crate::graph::Graph;
use crate::oracle::chi_cn_exact;

#[derive(Debug, thiserror::Error)]
pub enum LayeredError {
    #[error("invalid parameter: {0}")]
    InvalidParams(String),
}

/// Model parameters.  `eps` must lie strictly inside `(0, 0.003)`.
#[derive(Debug, Clone)]
pub struct LayeredParams {
    pub n: usize,
    pub eps: f64,
    pub seed: u64,
}

impl LayeredParams {
    pub fn new(n: usize, eps: f64, seed: u64) -> Result<Self, LayeredError> {
        if n < 3 {
            return Err(LayeredError::InvalidParams(format!(
                "n must be at least 3, got {n}"
            )));
        }
        if !eps.is_finite() || eps <= 0.0 || eps >= 0.003 {
            return Err(LayeredError::InvalidParams(format!(
                "eps must lie strictly in (0, 0.003), got {eps}"
            )));
        }
        Ok(LayeredParams { n, eps, seed })
    }
}

/// Frozen model data for a generated instance: who sits in which layer and
/// with what weight.
#[derive(Debug, Clone, Serialize)]
pub struct LayerMeta {
    pub n: usize,
    pub eps: f64,
    /// `eps / 3`.
    pub eps0: f64,
    /// Per-vertex 1-based layer index.
    pub layer: Vec<usize>,
    pub layer_sizes: Vec<usize>,
    /// Per-vertex weight `(1 - eps0)^layer`.
    pub weight: Vec<f64>,
    /// Reference color count `floor(eps0^3 * ln^2 n)` from the asymptotic
    /// analysis; zero at desk scale.
    pub r_colors: usize,
}

impl LayerMeta {
    pub fn layer_count(&self) -> usize {
        self.layer_sizes.len()
    }

    /// Weight shared by all vertices of 1-based layer `i`.
    pub fn layer_weight(&self, i: usize) -> f64 {
        (1.0 - self.eps0).powi(i as i32)
    }
}

/// Samples the layered graph.  Layers get `floor(n / L)` vertices each with
/// the remainder joining the last (lightest) layer; edge coins are flipped
/// for every pair in lexicographic order, so a seed pins the exact graph.
pub fn generate_layered(p: &LayeredParams) -> Result<(Graph, LayerMeta), LayeredError> {
    let n = p.n;
    let eps0 = p.eps / 3.0;
    let layers = (n as f64).ln().floor() as usize;
    debug_assert!(layers >= 1);
    let base = n / layers;
    let mut layer_sizes = vec![base; layers];
    *layer_sizes.last_mut().unwrap() += n - base * layers;

    let mut layer = Vec::with_capacity(n);
    for (i, &size) in layer_sizes.iter().enumerate() {
        layer.extend(std::iter::repeat_n(i + 1, size));
    }
    let weight: Vec<f64> = layer
        .iter()
        .map(|&i| (1.0 - eps0).powi(i as i32))
        .collect();
    let ln_n = (n as f64).ln();
    let r_colors = (eps0.powi(3) * ln_n * ln_n).floor() as usize;

    let mut rng = ChaCha8Rng::seed_from_u64(p.seed);
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.random::<f64>() < weight[u] * weight[v] {
                g.add_edge(u, v).expect("indices in range, u < v");
            }
        }
    }
    let meta = LayerMeta {
        n,
        eps: p.eps,
        eps0,
        layer,
        layer_sizes,
        weight,
        r_colors,
    };
    Ok((g, meta))
}

/// Total model weight of a vertex set.
pub fn set_weight(meta: &LayerMeta, s: &[usize]) -> f64 {
    s.iter().map(|&v| meta.weight[v]).sum()
}

/// Vertices outside `s` with exactly one neighbor inside `s`.
pub fn unique_neighbor_set(g: &Graph, s: &[usize]) -> Vec<usize> {
    let mut in_s = vec![false; g.n()];
    for &v in s {
        in_s[v] = true;
    }
    (0..g.n())
        .filter(|&v| {
            !in_s[v] && g.neighbors(v).iter().filter(|&&u| in_s[u]).count() == 1
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SetClass {
    Heavy,
    Light,
}

/// Heavy means total weight strictly above `sqrt(n)`; the boundary itself is
/// light.
pub fn classify_set(meta: &LayerMeta, s: &[usize]) -> SetClass {
    if set_weight(meta, s) > (meta.n as f64).sqrt() {
        SetClass::Heavy
    } else {
        SetClass::Light
    }
}

/// Exact expected degree of `x` under the model:
/// `sum_j (|L_j| - [j = layer(x)]) * w_x * w_j`.
pub fn expected_degree(meta: &LayerMeta, x: usize) -> f64 {
    let wx = meta.weight[x];
    (1..=meta.layer_count())
        .map(|j| {
            let count = meta.layer_sizes[j - 1] - usize::from(meta.layer[x] == j);
            count as f64 * wx * meta.layer_weight(j)
        })
        .sum()
}

/// Model-side probability that `x` (not in `s`) is adjacent to exactly one
/// member of the class `s`:
/// `sum_{m in s} w_m w_x * prod_{y in s, y != m} (1 - w_y w_x)`.
pub fn takecare_probability(meta: &LayerMeta, x: usize, s: &[usize]) -> f64 {
    debug_assert!(!s.contains(&x));
    let wx = meta.weight[x];
    s.iter()
        .map(|&m| {
            let hit = meta.weight[m] * wx;
            let miss: f64 = s
                .iter()
                .filter(|&&y| y != m)
                .map(|&y| 1.0 - meta.weight[y] * wx)
                .product();
            hit * miss
        })
        .sum()
}

/// The analysis constant `e^{eps0} * ln(1 / (1 - e^{-eps0}))` governing how
/// often light classes take care of a vertex.  Documented and exposed for
/// reports; no algorithm consumes it.
pub fn light_rate_constant(eps0: f64) -> f64 {
    eps0.exp() * (1.0 / (1.0 - (-eps0).exp())).ln()
}

/// Per-layer degree concentration against the exact model expectation.
#[derive(Debug, Clone, Serialize)]
pub struct DegreeReport {
    pub alpha: f64,
    /// Expected degree of a vertex in each layer (all members share it).
    pub mu_by_layer: Vec<f64>,
    /// Vertices with `|d - mu| >= alpha * mu`.
    pub flagged: Vec<usize>,
    pub flags_per_layer: Vec<usize>,
    pub max_degree: usize,
    pub max_degree_vertex: usize,
    /// Layer of the maximum-degree vertex (ties to the smallest vertex id).
    pub max_degree_layer: usize,
    pub min_degree: usize,
    pub min_degree_vertex: usize,
    pub min_degree_layer: usize,
    /// `min_degree / max_degree^{1 - eps}`.
    pub degree_ratio: f64,
}

pub fn degree_report(g: &Graph, meta: &LayerMeta, alpha: f64) -> DegreeReport {
    let n = g.n();
    let mu_by_layer: Vec<f64> = (1..=meta.layer_count())
        .map(|i| {
            // Any vertex of the layer has the same expectation; evaluate on
            // the first one.
            let x = meta.layer.iter().position(|&l| l == i).expect("nonempty layer");
            expected_degree(meta, x)
        })
        .collect();
    let mut flagged = Vec::new();
    let mut flags_per_layer = vec![0usize; meta.layer_count()];
    let mut max_v = 0;
    let mut min_v = 0;
    for v in 0..n {
        let d = g.degree(v) as f64;
        let mu = mu_by_layer[meta.layer[v] - 1];
        if (d - mu).abs() >= alpha * mu {
            flagged.push(v);
            flags_per_layer[meta.layer[v] - 1] += 1;
        }
        if g.degree(v) > g.degree(max_v) {
            max_v = v;
        }
        if g.degree(v) < g.degree(min_v) {
            min_v = v;
        }
    }
    let max_degree = g.degree(max_v);
    let min_degree = g.degree(min_v);
    let degree_ratio = if max_degree == 0 {
        0.0
    } else {
        min_degree as f64 / (max_degree as f64).powf(1.0 - meta.eps)
    };
    DegreeReport {
        alpha,
        mu_by_layer,
        flagged,
        flags_per_layer,
        max_degree,
        max_degree_vertex: max_v,
        max_degree_layer: meta.layer[max_v],
        min_degree,
        min_degree_vertex: min_v,
        min_degree_layer: meta.layer[min_v],
        degree_ratio,
    }
}

/// Vertices whose closed neighborhood contains no color of multiplicity
/// exactly one under `f` (blank slots carry no color).
pub fn uncovered_vertices(g: &Graph, f: &Coloring) -> Vec<usize> {
    assert_eq!(f.len(), g.n(), "coloring length must match the graph");
    (0..g.n())
        .filter(|&v| {
            let mut colors: Vec<usize> = g
                .neighbors(v)
                .iter()
                .chain(std::iter::once(&v))
                .filter_map(|&u| f.get(u))
                .collect();
            colors.sort_unstable();
            let mut covered = false;
            let mut i = 0;
            while i < colors.len() {
                let mut j = i;
                while j < colors.len() && colors[j] == colors[i] {
                    j += 1;
                }
                if j - i == 1 {
                    covered = true;
                    break;
                }
                i = j;
            }
            !covered
        })
        .collect()
}

/// Uniform random `r`-colorings and how many vertices they leave uncovered.
#[derive(Debug, Clone, Serialize)]
pub struct ProbeReport {
    pub r: usize,
    pub trials: usize,
    pub min_uncovered: usize,
    pub mean_uncovered: f64,
    /// Exact closed-neighborhood chromatic number when `n <= 14`.
    pub exact_chi_cn: Option<usize>,
    /// Reference value `floor(eps0^3 ln^2 n)` when model data is supplied.
    pub r_colors_reference: Option<usize>,
}

/// Colors all vertices uniformly from `{1..r}` `trials` times and records
/// the minimum and mean number of uncovered vertices.
pub fn takecare_probe(
    g: &Graph,
    r: usize,
    trials: usize,
    seed: u64,
    meta: Option<&LayerMeta>,
) -> ProbeReport {
    assert!(r >= 1 && trials >= 1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = g.n();
    let mut min_uncovered = usize::MAX;
    let mut total = 0usize;
    for _ in 0..trials {
        let mut f = Coloring::blank(n);
        for v in 0..n {
            f.set(v, rng.random_range(1..=r));
        }
        let uncovered = uncovered_vertices(g, &f).len();
        min_uncovered = min_uncovered.min(uncovered);
        total += uncovered;
    }
    let exact_chi_cn = (n <= 14).then(|| chi_cn_exact(g));
    ProbeReport {
        r,
        trials,
        min_uncovered,
        mean_uncovered: total as f64 / trials as f64,
        exact_chi_cn,
        r_colors_reference: meta.map(|m| m.r_colors),
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct LayerStat {
    pub index: usize,
    pub size: usize,
    pub weight: f64,
}

/// Diagnostic for one sampled vertex set: its exact data plus the asymptotic
/// reference value it would be compared against at scale.
#[derive(Debug, Clone, Serialize)]
pub struct SetDiagnostic {
    pub size: usize,
    pub weight: f64,
    pub classification: SetClass,
    pub unique_neighbor_count: usize,
    /// `n^{0.6}` for heavy sets, `n - n^{0.7}` for light unions.
    pub reference: f64,
}

/// Everything the lab emits for one generated instance.  Asymptotic
/// quantities (independence reference, heavy/light diagnostics) are
/// informational; the exact formulas (weights, windows, unique-neighbor
/// sets) are separately asserted in tests.
#[derive(Debug, Clone, Serialize)]
pub struct LabReport {
    pub n: usize,
    pub eps: f64,
    pub eps0: f64,
    pub seed: u64,
    pub layers: Vec<LayerStat>,
    pub r_colors: usize,
    pub light_rate: f64,
    pub edge_count: usize,
    pub degree: DegreeReport,
    pub heavy_sample: SetDiagnostic,
    /// Largest random prefix staying light; its size obeys the exact bound
    /// `|S| < n^{0.5 + 2 eps0}`.
    pub light_sample: SetDiagnostic,
    pub light_sample_size_bound: f64,
    /// Union of unique-neighbor sets over several disjoint light sets,
    /// against the `n - n^{0.7}` reference.
    pub light_union: SetDiagnostic,
    /// Exact independence number for `n <= 60`, with the asymptotic
    /// `n^{0.003}` reference it dwarfs at desk scale.
    pub independence_number: Option<usize>,
    pub independence_reference: f64,
    pub probes: Vec<ProbeReport>,
}

/// Generates an instance and assembles the full diagnostic report.
/// `probe_rs` lists the palette sizes to probe with `trials` random
/// colorings each.
pub fn run_lab(
    p: &LayeredParams,
    alpha: f64,
    probe_rs: &[usize],
    trials: usize,
) -> Result<LabReport, LayeredError> {
    if !alpha.is_finite() || alpha <= 0.0 || alpha >= 1.0 {
        return Err(LayeredError::InvalidParams(format!(
            "alpha must lie in (0, 1), got {alpha}"
        )));
    }
    let (g, meta) = generate_layered(p)?;
    let n = p.n;
    let nf = n as f64;
    let degree = degree_report(&g, &meta, alpha);

    let mut rng = ChaCha8Rng::seed_from_u64(p.seed ^ 0x9e3779b97f4a7c15);
    let mut order: Vec<usize> = (0..n).collect();
    // Fisher-Yates to get a seeded random vertex order for the set samples.
    for i in (1..n).rev() {
        let j = rng.random_range(0..=i);
        order.swap(i, j);
    }
    let sqrt_n = nf.sqrt();
    let mut heavy = Vec::new();
    for &v in &order {
        heavy.push(v);
        if set_weight(&meta, &heavy) > sqrt_n {
            break;
        }
    }
    let mut light = Vec::new();
    for &v in &order {
        light.push(v);
        if set_weight(&meta, &light) > sqrt_n {
            light.pop();
            break;
        }
    }
    let heavy_sample = diagnose(&g, &meta, heavy, nf.powf(0.6));
    let light_sample = diagnose(&g, &meta, light, nf.powf(0.6));

    // Several disjoint light sets: chop the shuffled order into chunks that
    // each stay light.
    let union_sets = meta.r_colors.max(3);
    let mut chunks: Vec<Vec<usize>> = Vec::new();
    let mut current: Vec<usize> = Vec::new();
    for &v in &order {
        if chunks.len() == union_sets {
            break;
        }
        current.push(v);
        if set_weight(&meta, &current) > sqrt_n {
            let last = current.pop().unwrap();
            chunks.push(std::mem::take(&mut current));
            current.push(last);
        }
    }
    if chunks.len() < union_sets && !current.is_empty() {
        chunks.push(current);
    }
    let mut union_covered = vec![false; n];
    let mut union_members = 0usize;
    let mut union_weight = 0.0;
    for s in &chunks {
        union_members += s.len();
        union_weight += set_weight(&meta, s);
        for v in unique_neighbor_set(&g, s) {
            union_covered[v] = true;
        }
    }
    let light_union = SetDiagnostic {
        size: union_members,
        weight: union_weight,
        classification: SetClass::Light,
        unique_neighbor_count: union_covered.iter().filter(|&&b| b).count(),
        reference: nf - nf.powf(0.7),
    };

    let independence_number = (n <= 60).then(|| g.independence_number());
    let probes = probe_rs
        .iter()
        .map(|&r| takecare_probe(&g, r, trials, p.seed.wrapping_add(r as u64), Some(&meta)))
        .collect();

    Ok(LabReport {
        n,
        eps: p.eps,
        eps0: meta.eps0,
        seed: p.seed,
        layers: (1..=meta.layer_count())
            .map(|i| LayerStat {
                index: i,
                size: meta.layer_sizes[i - 1],
                weight: meta.layer_weight(i),
            })
            .collect(),
        r_colors: meta.r_colors,
        light_rate: light_rate_constant(meta.eps0),
        edge_count: g.edge_count(),
        degree,
        heavy_sample,
        light_sample,
        light_sample_size_bound: nf.powf(0.5 + 2.0 * meta.eps0),
        light_union,
        independence_number,
        independence_reference: nf.powf(0.003),
        probes,
    })
}

fn diagnose(g: &Graph, meta: &LayerMeta, s: Vec<usize>, reference: f64) -> SetDiagnostic {
    SetDiagnostic {
        size: s.len(),
        weight: set_weight(meta, &s),
        classification: classify_set(meta, &s),
        unique_neighbor_count: unique_neighbor_set(g, &s).len(),
        reference,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::GraphFamily;

    fn meta_with_weights(n: usize, weights: &[f64]) -> LayerMeta {
        LayerMeta {
            n,
            eps: 0.0,
            eps0: 0.0,
            layer: vec![1; weights.len()],
            layer_sizes: vec![weights.len()],
            weight: weights.to_vec(),
            r_colors: 0,
        }
    }

    #[test]
    fn params_validation() {
        assert!(LayeredParams::new(2, 0.001, 0).is_err());
        assert!(LayeredParams::new(20, 0.0, 0).is_err());
        assert!(LayeredParams::new(20, 0.003, 0).is_err()); // boundary excluded
        assert!(LayeredParams::new(20, 0.0029, 0).is_ok());
    }

    #[test]
    fn twenty_vertices_make_two_layers_of_ten() {
        let p = LayeredParams::new(20, 0.002, 1).unwrap();
        let (_, meta) = generate_layered(&p).unwrap();
        assert_eq!(meta.layer_sizes, vec![10, 10]);
        assert_eq!(meta.layer[0], 1);
        assert_eq!(meta.layer[10], 2);
        let e0 = 0.002 / 3.0;
        assert!((meta.weight[0] - (1.0 - e0)).abs() < 1e-15);
        assert!((meta.weight[10] - (1.0 - e0) * (1.0 - e0)).abs() < 1e-15);
        assert_eq!(meta.r_colors, 0); // eps0^3 ln^2 20 is far below 1
    }

    #[test]
    fn remainder_joins_last_layer() {
        let p = LayeredParams::new(4096, 0.002, 5).unwrap();
        let (_, meta) = generate_layered(&p).unwrap();
        // ln 4096 = 8.317..., so 8 layers of exactly 512.
        assert_eq!(meta.layer_sizes, vec![512; 8]);
        let p = LayeredParams::new(100, 0.002, 5).unwrap();
        let (_, meta) = generate_layered(&p).unwrap();
        // ln 100 = 4.6: 4 layers, 25 each, no remainder; 103 gives 25+3.
        assert_eq!(meta.layer_sizes, vec![25, 25, 25, 25]);
        let p = LayeredParams::new(103, 0.002, 5).unwrap();
        let (_, meta) = generate_layered(&p).unwrap();
        assert_eq!(meta.layer_sizes, vec![25, 25, 25, 28]);
    }

    #[test]
    fn set_weight_formula() {
        let meta = meta_with_weights(4, &[0.999, 0.999, 0.5, 0.25]);
        assert_eq!(set_weight(&meta, &[]), 0.0);
        assert!((set_weight(&meta, &[0, 1]) - 1.998).abs() < 1e-12);
        // Whole-set weight agrees with the per-layer aggregate.
        let p = LayeredParams::new(50, 0.0015, 3).unwrap();
        let (_, meta) = generate_layered(&p).unwrap();
        let all: Vec<usize> = (0..50).collect();
        let direct = set_weight(&meta, &all);
        let by_layer: f64 = (1..=meta.layer_count())
            .map(|i| meta.layer_sizes[i - 1] as f64 * meta.layer_weight(i))
            .sum();
        assert!((direct - by_layer).abs() < 1e-9);
    }

    #[test]
    fn unique_neighbor_examples() {
        let star = GraphFamily::Star { leaves: 3 }.generate().unwrap();
        assert_eq!(unique_neighbor_set(&star, &[0]), vec![1, 2, 3]);
        let k4 = GraphFamily::Complete { n: 4 }.generate().unwrap();
        assert!(unique_neighbor_set(&k4, &[0, 1]).is_empty());
        let p4 = GraphFamily::Path { n: 4 }.generate().unwrap();
        assert_eq!(unique_neighbor_set(&p4, &[1]), vec![0, 2]);
    }

    #[test]
    fn classification_boundary_is_light() {
        let meta = meta_with_weights(4, &[2.0, 1.0, 0.5, 0.25]);
        assert_eq!(classify_set(&meta, &[]), SetClass::Light);
        // sqrt(4) = 2 exactly: not strictly above, so light.
        assert_eq!(classify_set(&meta, &[0]), SetClass::Light);
        assert_eq!(classify_set(&meta, &[0, 1]), SetClass::Heavy);
    }

    #[test]
    fn near_zero_eps_approaches_complete() {
        let p = LayeredParams::new(100, 3e-9, 7).unwrap();
        let (g, _) = generate_layered(&p).unwrap();
        let density = g.edge_count() as f64 / (100.0 * 99.0 / 2.0);
        assert!(density >= 0.999, "density {density}");
    }

    #[test]
    fn generation_is_deterministic() {
        let p = LayeredParams::new(64, 0.002, 11).unwrap();
        let (g1, m1) = generate_layered(&p).unwrap();
        let (g2, m2) = generate_layered(&p).unwrap();
        assert_eq!(g1.edges(), g2.edges());
        assert_eq!(m1.weight, m2.weight);
    }

    #[test]
    fn every_weight_beats_the_exact_bound() {
        let p = LayeredParams::new(4096, 0.0025, 5).unwrap();
        let (_, meta) = generate_layered(&p).unwrap();
        let bound = (4096.0f64).powf(-2.0 * meta.eps0);
        for &w in &meta.weight {
            assert!(w > bound, "{w} <= {bound}");
        }
    }

    #[test]
    fn expected_degree_matches_direct_sum() {
        let p = LayeredParams::new(60, 0.002, 2).unwrap();
        let (_, meta) = generate_layered(&p).unwrap();
        for x in [0usize, 30, 59] {
            let direct: f64 = (0..60)
                .filter(|&y| y != x)
                .map(|y| meta.weight[x] * meta.weight[y])
                .sum();
            assert!((expected_degree(&meta, x) - direct).abs() < 1e-9);
        }
    }

    #[test]
    fn takecare_probability_small_cases() {
        let meta = meta_with_weights(3, &[0.5, 0.4, 0.8]);
        // Single-member class: just the edge probability.
        assert!((takecare_probability(&meta, 0, &[2]) - 0.4).abs() < 1e-12);
        // Two members: inclusion of one, exclusion of the other, both ways.
        let expect = 0.4 * 0.5 * (1.0 - 0.8 * 0.5) + 0.8 * 0.5 * (1.0 - 0.4 * 0.5);
        assert!((takecare_probability(&meta, 0, &[1, 2]) - expect).abs() < 1e-12);
    }

    #[test]
    fn light_rate_constant_value() {
        let v = light_rate_constant(0.001);
        assert!(v > 6.9 && v < 6.93, "{v}");
    }

    #[test]
    fn degree_report_concentrates_at_scale() {
        let p = LayeredParams::new(4096, 0.002, 5).unwrap();
        let (g, meta) = generate_layered(&p).unwrap();
        let report = degree_report(&g, &meta, 0.25);
        // mu ~ 4090 per vertex; a quarter of that is ~1000, about 15 standard
        // deviations, so zero flags is a certainty rather than luck.
        assert!(report.flagged.is_empty(), "flagged {:?}", report.flagged);
        assert!(report.max_degree >= report.min_degree);
        assert!(report.degree_ratio > 0.0);
    }

    #[test]
    fn uncovered_examples() {
        let k3 = GraphFamily::Complete { n: 3 }.generate().unwrap();
        let mut all_distinct = Coloring::blank(3);
        for v in 0..3 {
            all_distinct.set(v, v + 1);
        }
        assert!(uncovered_vertices(&k3, &all_distinct).is_empty());
        let mut all_same = Coloring::blank(3);
        for v in 0..3 {
            all_same.set(v, 1);
        }
        assert_eq!(uncovered_vertices(&k3, &all_same), vec![0, 1, 2]);
    }

    #[test]
    fn probe_monotone_in_r_and_matches_oracle() {
        let p = LayeredParams::new(12, 0.002, 9).unwrap();
        let (g, meta) = generate_layered(&p).unwrap();
        let mut last_min = usize::MAX;
        for r in 1..=4 {
            let probe = takecare_probe(&g, r, 500, 9, Some(&meta));
            assert!(probe.min_uncovered <= last_min);
            last_min = probe.min_uncovered;
            assert_eq!(probe.exact_chi_cn, Some(chi_cn_exact(&g)));
            assert_eq!(probe.r_colors_reference, Some(0));
        }
        // Enough colors cover everything in at least one trial.
        let probe = takecare_probe(&g, 12, 200, 9, Some(&meta));
        assert_eq!(probe.min_uncovered, 0);
    }

    #[test]
    fn lab_report_smoke() {
        let p = LayeredParams::new(256, 0.002, 4).unwrap();
        let report = run_lab(&p, 0.3, &[1, 2], 20).unwrap();
        assert_eq!(report.layers.len(), 5); // ln 256 = 5.54
        assert_eq!(report.heavy_sample.classification, SetClass::Heavy);
        assert_eq!(report.light_sample.classification, SetClass::Light);
        assert!((report.light_sample.size as f64) < report.light_sample_size_bound);
        assert!(report.independence_number.is_none()); // 256 > 60
        assert_eq!(report.probes.len(), 2);
        let json = serde_json::to_string(&report).unwrap();
        assert!(json.contains("\"light_union\""));
    }

    #[test]
    fn small_lab_reports_independence() {
        let p = LayeredParams::new(50, 0.002, 4).unwrap();
        let report = run_lab(&p, 0.5, &[2], 10).unwrap();
        let alpha = report.independence_number.unwrap();
        // Nearly complete at this eps, so a couple of vertices at most.
        assert!((1..=4).contains(&alpha), "{alpha}");
        assert!(report.independence_reference < 2.0);
    }
}
