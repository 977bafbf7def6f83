//! Independent reference implementations used by the test suites.
//!
//! Everything here is deliberately naive: plain summation instead of
//! Euler-Maclaurin, Floyd-Warshall instead of per-source BFS, O(N^3) triangle
//! enumeration, per-pair path counting instead of dependency accumulation.
//! These serve as oracles for the fast implementations and must not share
//! code with them.

use rand::Rng;

use crate::graph::{NodeId, TradingNetwork};

// ---------------------------------------------------------------------------
// Reference zeta and power-law samplers
// ---------------------------------------------------------------------------

/// Hurwitz zeta by direct summation with an integral tail correction.
pub fn zeta_direct(s: f64, a: f64) -> f64 {
    let cutoff = 2_000_000u64;
    let mut sum = 0.0f64;
    let mut k = a;
    let mut i = 0u64;
    while i < cutoff {
        sum += k.powf(-s);
        k += 1.0;
        i += 1;
    }
    // midpoint integral bound for the remainder
    sum + (k - 0.5).powf(1.0 - s) / (s - 1.0)
}

/// Exact inverse-CDF sampler for the discrete power law
/// P(X = k) ∝ k^-lambda, k >= x_min.
pub struct DiscretePowerLawSampler {
    x_min: u64,
    lambda: f64,
    norm: f64,
    cdf: Vec<f64>, // cdf[i] = P(X <= x_min + i)
}

impl DiscretePowerLawSampler {
    pub fn new(lambda: f64, x_min: u64) -> Self {
        assert!(lambda > 1.0 && x_min >= 1);
        let norm = zeta_direct(lambda, x_min as f64);
        let mut cdf = Vec::new();
        let mut acc = 0.0;
        let mut k = x_min as f64;
        // table out to survival ~1e-9, capped to keep memory sane
        while acc < 1.0 - 1e-9 && cdf.len() < 8_000_000 {
            acc += k.powf(-lambda) / norm;
            cdf.push(acc);
            k += 1.0;
        }
        DiscretePowerLawSampler { x_min, lambda, norm, cdf }
    }

    pub fn sample<R: Rng>(&self, rng: &mut R) -> u64 {
        let u: f64 = rng.gen();
        match self.cdf.binary_search_by(|p| p.partial_cmp(&u).unwrap()) {
            Ok(i) | Err(i) if i < self.cdf.len() => self.x_min + i as u64,
            _ => self.far_tail(u),
        }
    }

    // u beyond the table: binary search on the survival function
    fn far_tail(&self, u: f64) -> u64 {
        let target = 1.0 - u; // want smallest k with P(X > k) < target, i.e. S(k+1) <= target < S(k)
        let mut lo = self.x_min + self.cdf.len() as u64;
        let mut hi = lo * 2;
        while zeta_direct(self.lambda, (hi + 1) as f64) / self.norm > target {
            lo = hi;
            hi *= 2;
        }
        while lo < hi {
            let mid = lo + (hi - lo) / 2;
            if zeta_direct(self.lambda, (mid + 1) as f64) / self.norm > target {
                lo = mid + 1;
            } else {
                hi = mid;
            }
        }
        lo
    }

    pub fn sample_n<R: Rng>(&self, rng: &mut R, n: usize) -> Vec<f64> {
        (0..n).map(|_| self.sample(rng) as f64).collect()
    }
}

/// Exact inverse-CDF sampler for the continuous power law with density
/// ∝ x^-lambda on [x_min, ∞).
pub fn sample_continuous_power_law<R: Rng>(
    rng: &mut R,
    lambda: f64,
    x_min: f64,
    n: usize,
) -> Vec<f64> {
    (0..n)
        .map(|_| {
            let u: f64 = rng.gen();
            x_min * (1.0 - u).powf(-1.0 / (lambda - 1.0))
        })
        .collect()
}

/// Exponential sample, rate `rate`, shifted to be >= 1 so log-based fits are
/// well defined.
pub fn sample_exponential<R: Rng>(rng: &mut R, rate: f64, n: usize) -> Vec<f64> {
    (0..n)
        .map(|_| {
            let u: f64 = rng.gen();
            1.0 - (1.0 - u).ln() / rate
        })
        .collect()
}

// ---------------------------------------------------------------------------
// Brute-force graph metrics
// ---------------------------------------------------------------------------

pub const UNREACHABLE: i64 = i64::MAX / 4;

/// All-pairs hop distances by Floyd-Warshall. Unreachable pairs hold a
/// large sentinel (compare against [`UNREACHABLE`]).
pub fn floyd_warshall(net: &TradingNetwork) -> Vec<Vec<i64>> {
    let n = net.node_count();
    let mut d = vec![vec![UNREACHABLE; n]; n];
    for v in 0..n {
        d[v][v] = 0;
        for &w in net.neighbors(v as NodeId) {
            d[v][w as usize] = 1;
        }
    }
    for k in 0..n {
        for i in 0..n {
            let dik = d[i][k];
            if dik >= UNREACHABLE {
                continue;
            }
            for j in 0..n {
                if dik + d[k][j] < d[i][j] {
                    d[i][j] = dik + d[k][j];
                }
            }
        }
    }
    d
}

/// (average path length, diameter, histogram over path length 1..=D)
/// across all connected distinct pairs.
pub fn path_stats_oracle(net: &TradingNetwork) -> (f64, usize, Vec<f64>) {
    let d = floyd_warshall(net);
    let n = net.node_count();
    let mut sum = 0i64;
    let mut count = 0i64;
    let mut max = 0i64;
    let mut hist_counts: Vec<i64> = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            let dij = d[i][j];
            if dij >= UNREACHABLE {
                continue;
            }
            sum += dij;
            count += 1;
            max = max.max(dij);
            if hist_counts.len() < dij as usize {
                hist_counts.resize(dij as usize, 0);
            }
            hist_counts[dij as usize - 1] += 1;
        }
    }
    let hist = hist_counts.iter().map(|&c| c as f64 / count as f64).collect();
    (sum as f64 / count as f64, max as usize, hist)
}

/// Local clustering coefficient by triple enumeration.
pub fn clustering_local_oracle(net: &TradingNetwork, v: NodeId) -> f64 {
    let nbrs = net.neighbors(v);
    let k = nbrs.len();
    if k < 2 {
        return 0.0;
    }
    let mut links = 0usize;
    for i in 0..k {
        for j in (i + 1)..k {
            if net.neighbors(nbrs[i]).contains(&nbrs[j]) {
                links += 1;
            }
        }
    }
    2.0 * links as f64 / (k * (k - 1)) as f64
}

pub fn clustering_global_oracle(net: &TradingNetwork) -> f64 {
    let n = net.node_count();
    if n == 0 {
        return 0.0;
    }
    (0..n as NodeId).map(|v| clustering_local_oracle(net, v)).sum::<f64>() / n as f64
}

/// Betweenness by per-pair shortest-path counting over the Floyd-Warshall
/// distance matrix. Endpoints excluded; each unordered pair counted once.
pub fn betweenness_oracle(net: &TradingNetwork) -> Vec<f64> {
    let n = net.node_count();
    let d = floyd_warshall(net);
    // sigma[s][t] = number of shortest s-t paths, by DP over distance layers
    let mut sigma = vec![vec![0f64; n]; n];
    for s in 0..n {
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| d[s][v]);
        sigma[s][s] = 1.0;
        for &t in &order {
            if t == s || d[s][t] >= UNREACHABLE {
                continue;
            }
            let mut paths = 0.0;
            for &u in net.neighbors(t as NodeId) {
                if d[s][u as usize] + 1 == d[s][t] {
                    paths += sigma[s][u as usize];
                }
            }
            sigma[s][t] = paths;
        }
    }
    let mut b = vec![0f64; n];
    for s in 0..n {
        for t in (s + 1)..n {
            if d[s][t] >= UNREACHABLE || d[s][t] < 2 {
                continue;
            }
            for v in 0..n {
                if v == s || v == t {
                    continue;
                }
                if d[s][v] + d[v][t] == d[s][t] {
                    b[v] += sigma[s][v] * sigma[v][t] / sigma[s][t];
                }
            }
        }
    }
    b
}

/// Assortativity as the plain Pearson correlation over the symmetrized
/// endpoint-degree list (each edge contributes (deg u, deg v) and
/// (deg v, deg u)). Returns None when degenerate.
pub fn assortativity_pearson_oracle(net: &TradingNetwork) -> Option<f64> {
    let mut xs = Vec::new();
    let mut ys = Vec::new();
    for (u, v, _) in net.edges() {
        let du = net.neighbors(u).len() as f64;
        let dv = net.neighbors(v).len() as f64;
        xs.push(du);
        ys.push(dv);
        xs.push(dv);
        ys.push(du);
    }
    let m = xs.len() as f64;
    if m == 0.0 {
        return None;
    }
    let mx = xs.iter().sum::<f64>() / m;
    let my = ys.iter().sum::<f64>() / m;
    let mut sxy = 0.0;
    let mut sxx = 0.0;
    let mut syy = 0.0;
    for i in 0..xs.len() {
        sxy += (xs[i] - mx) * (ys[i] - my);
        sxx += (xs[i] - mx) * (xs[i] - mx);
        syy += (ys[i] - my) * (ys[i] - my);
    }
    if sxx == 0.0 || syy == 0.0 {
        return None;
    }
    Some(sxy / (sxx * syy).sqrt())
}

/// Mean neighbor degree per node, directly.
pub fn knn_oracle(net: &TradingNetwork) -> Vec<Option<f64>> {
    (0..net.node_count() as NodeId)
        .map(|v| {
            let nbrs = net.neighbors(v);
            if nbrs.is_empty() {
                None
            } else {
                Some(
                    nbrs.iter().map(|&u| net.neighbors(u).len() as f64).sum::<f64>()
                        / nbrs.len() as f64,
                )
            }
        })
        .collect()
}

// ---------------------------------------------------------------------------
// Random graphs and rank statistics
// ---------------------------------------------------------------------------

/// Network from a list of (buyer, seller) pairs; repetition accumulates
/// edge weight exactly as repeated trades would.
pub fn pairs_net(pairs: &[(&str, &str)]) -> TradingNetwork {
    use crate::graph::{GraphBuilder, GraphDelta};
    let mut b = GraphBuilder::new();
    let mut delta = GraphDelta::default();
    for (buyer, seller) in pairs {
        b.add_pair(buyer, seller, &mut delta);
    }
    b.finalize()
}

/// Small random simple graph with `n` nodes and roughly `m` distinct edges,
/// built through the public builder. Not necessarily connected.
pub fn random_graph<R: Rng>(rng: &mut R, n: usize, m: usize) -> TradingNetwork {
    use crate::graph::{GraphBuilder, GraphDelta};
    let mut b = GraphBuilder::new();
    let ids: Vec<String> = (0..n).map(|i| format!("v{i:03}")).collect();
    for id in &ids {
        b.ensure_node(id);
    }
    let mut delta = GraphDelta::default();
    for _ in 0..m {
        let u = rng.gen_range(0..n);
        let mut v = rng.gen_range(0..n);
        while v == u {
            v = rng.gen_range(0..n);
        }
        b.add_pair(&ids[u], &ids[v], &mut delta);
    }
    b.finalize()
}

/// Kendall rank correlation (tau-a) between two equal-length score slices.
pub fn kendall_tau(a: &[f64], b: &[f64]) -> f64 {
    assert_eq!(a.len(), b.len());
    let n = a.len();
    assert!(n >= 2);
    let mut concordant = 0i64;
    let mut discordant = 0i64;
    for i in 0..n {
        for j in (i + 1)..n {
            let x = (a[i] - a[j]).signum();
            let y = (b[i] - b[j]).signum();
            let prod = x * y;
            if prod > 0.0 {
                concordant += 1;
            } else if prod < 0.0 {
                discordant += 1;
            }
        }
    }
    (concordant - discordant) as f64 / (n * (n - 1) / 2) as f64
}
