//! Normalized Laplacian spectra and the spectral-gap criterion for the
//! barycentric subdivision of B(n).

use std::time::Instant;

use nalgebra::DMatrix;
use rayon::prelude::*;
use serde::Serialize;

use crate::complex::{link_graph, Capacity};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::polygon;

pub const EIGEN_CAPACITY: usize = 3000;
pub const TOL_ZERO: f64 = 1e-8;
/// Slack allowed when checking that eigenvalues lie in `[0, 2]`.
pub const EIGEN_TOL: f64 = 1e-9;
pub const MONOTONE_TOL: f64 = 1e-9;
pub const CONJECTURE_THRESHOLD: f64 = 0.5;
/// Exact link sizes are solved up to this n before switching to the constant.
const EDGE_LINK_CHECK_MAX_N: usize = 10;

/// `I − D^{-1/2} A D^{-1/2}`.
pub fn normalized_laplacian(g: &Graph) -> Result<DMatrix<f64>> {
    let n = g.vertex_count();
    if let Some(v) = (0..n).find(|&v| g.degree(v) == 0) {
        return Err(Error::domain(format!("vertex {v} is isolated")));
    }
    let inv_sqrt: Vec<f64> = (0..n).map(|v| 1.0 / (g.degree(v) as f64).sqrt()).collect();
    let mut m = DMatrix::<f64>::identity(n, n);
    for &(u, v) in g.edges() {
        let (u, v) = (u as usize, v as usize);
        let x = -inv_sqrt[u] * inv_sqrt[v];
        m[(u, v)] = x;
        m[(v, u)] = x;
    }
    Ok(m)
}

/// Ascending normalized-Laplacian spectrum.
pub fn spectrum(g: &Graph) -> Result<Vec<f64>> {
    if g.vertex_count() > EIGEN_CAPACITY {
        return Err(Error::Capacity {
            what: "dense eigensolve (vertices)",
            n: g.vertex_count(),
            limit: EIGEN_CAPACITY,
        });
    }
    let m = normalized_laplacian(g)?;
    let mut ev: Vec<f64> = m.symmetric_eigenvalues().iter().copied().collect();
    ev.sort_by(f64::total_cmp);
    if let Some(x) = ev.iter().find(|&&x| !(-EIGEN_TOL..=2.0 + EIGEN_TOL).contains(&x)) {
        return Err(Error::Consistency(format!("eigenvalue {x} outside [0, 2]")));
    }
    Ok(ev)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SpectralReport {
    pub graph_id: String,
    pub vertex_count: usize,
    pub lambda1: f64,
    pub zero_multiplicity: usize,
    pub tol_zero: f64,
    pub method: &'static str,
    pub operator: &'static str,
}

pub fn smallest_positive_eigenvalue(g: &Graph, graph_id: &str, tol_zero: f64) -> Result<SpectralReport> {
    let ev = spectrum(g)?;
    let zero_multiplicity = ev.iter().filter(|&&x| x <= tol_zero).count();
    let components = g.component_count();
    if zero_multiplicity != components {
        return Err(Error::Consistency(format!(
            "{graph_id}: {zero_multiplicity} zero eigenvalues but {components} components"
        )));
    }
    let lambda1 = ev
        .iter()
        .copied()
        .find(|&x| x > tol_zero)
        .ok_or_else(|| Error::domain(format!("{graph_id} has no positive eigenvalue")))?;
    Ok(SpectralReport {
        graph_id: graph_id.into(),
        vertex_count: g.vertex_count(),
        lambda1,
        zero_multiplicity,
        tol_zero,
        method: "dense symmetric eigensolve (Householder tridiagonalization, implicit QR)",
        operator: "I - D^-1/2 A D^-1/2",
    })
}

/// Gap of the subdivision of a graph whose own gap is `mu`.
pub fn subdivision_gap(mu: f64) -> f64 {
    1.0 - (1.0 - mu / 2.0).sqrt()
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LinkLambda {
    pub n: usize,
    /// λ(n): gap of the link of a vertex of the barycentric subdivision,
    /// i.e. of the subdivided L(n).
    pub lambda: f64,
    /// Gap of L(n) itself.
    pub link_gap: f64,
    pub vertices: usize,
    pub seconds: f64,
}

/// λ(n) from the spectrum of L(n) via the subdivision identity
/// `λ = 1 − sqrt(1 − μ/2)`.
pub fn link_lambda(n: usize, capacity: &Capacity) -> Result<LinkLambda> {
    let start = Instant::now();
    let g = link_graph(n, capacity)?;
    let rep = smallest_positive_eigenvalue(&g, &format!("L({n})"), TOL_ZERO)?;
    Ok(LinkLambda {
        n,
        lambda: subdivision_gap(rep.lambda1),
        link_gap: rep.lambda1,
        vertices: g.vertex_count(),
        seconds: start.elapsed().as_secs_f64(),
    })
}

/// λ(n) by a direct solve on the subdivided link (small n only).
pub fn link_lambda_direct(n: usize, capacity: &Capacity) -> Result<f64> {
    let g = link_graph(n, capacity)?.subdivision();
    Ok(smallest_positive_eigenvalue(&g, &format!("sd L({n})"), TOL_ZERO)?.lambda1)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LambdaSeries {
    pub rows: Vec<LinkLambda>,
    /// Values of n where λ(n) < λ(n − 1) − tolerance.
    pub decreases: Vec<usize>,
    pub non_decreasing: bool,
}

pub fn lambda_series(from: usize, to: usize, capacity: &Capacity) -> Result<LambdaSeries> {
    if !(6 <= from && from <= to && to <= 200) {
        return Err(Error::domain(format!("series needs 6 <= from <= to <= 200, got {from}..{to}")));
    }
    let rows: Vec<LinkLambda> = (from..=to)
        .into_par_iter()
        .map(|n| link_lambda(n, capacity))
        .collect::<Result<_>>()?;
    let decreases: Vec<usize> = rows
        .windows(2)
        .filter(|w| w[1].lambda < w[0].lambda - MONOTONE_TOL)
        .map(|w| w[1].n)
        .collect();
    Ok(LambdaSeries {
        non_decreasing: decreases.is_empty(),
        rows,
        decreases,
    })
}

/// `√2/2 − 1/2`: the vertex gap at which the triangle average reaches 1/2.
pub fn vertex_threshold() -> f64 {
    std::f64::consts::FRAC_1_SQRT_2 - 0.5
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ConjectureReport {
    pub n: usize,
    pub lambda_face: f64,
    pub lambda_edge: f64,
    pub lambda_vertex: f64,
    pub average: f64,
    pub threshold: f64,
    pub holds: bool,
    /// Whether `lambda_edge` came from solving the actual K_{2,m} links.
    pub edge_link_solved: bool,
}

/// Gap of the link of an edge center: K_{2,m}, m the number of faces on the
/// edge. Every size occurring for the n-gon is solved.
fn edge_link_gap(n: usize) -> Result<f64> {
    let ds = polygon::diagonals(n)?;
    let mut sizes: Vec<usize> = ds
        .iter()
        .map(|e| ds.iter().filter(|f| *f != e && !e.crosses_unchecked(f)).count())
        .collect();
    sizes.sort_unstable();
    sizes.dedup();
    let mut gap = None::<f64>;
    for m in sizes {
        let g = Graph::complete_bipartite(2, m);
        let x = smallest_positive_eigenvalue(&g, &format!("K(2,{m})"), TOL_ZERO)?.lambda1;
        if let Some(prev) = gap {
            if (prev - x).abs() > EIGEN_TOL {
                return Err(Error::Consistency(format!(
                    "edge links of the {n}-gon have different gaps {prev} and {x}"
                )));
            }
        }
        gap = Some(x);
    }
    gap.ok_or_else(|| Error::domain(format!("the {n}-gon has no diagonals")))
}

pub fn conjecture_check(n: usize, capacity: &Capacity) -> Result<ConjectureReport> {
    if !(6..=200).contains(&n) {
        return Err(Error::domain(format!("conjecture check needs 6 <= n <= 200, got {n}")));
    }
    let lambda_face = smallest_positive_eigenvalue(&Graph::cycle(8), "C8", TOL_ZERO)?.lambda1;
    let edge_link_solved = n <= EDGE_LINK_CHECK_MAX_N;
    let lambda_edge = if edge_link_solved { edge_link_gap(n)? } else { 1.0 };
    let lambda_vertex = link_lambda(n, capacity)?.lambda;
    let average = (lambda_face + lambda_edge + lambda_vertex) / 3.0;
    Ok(ConjectureReport {
        n,
        lambda_face,
        lambda_edge,
        lambda_vertex,
        average,
        threshold: CONJECTURE_THRESHOLD,
        holds: average > CONJECTURE_THRESHOLD,
        edge_link_solved,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CounterexampleReport {
    pub conjecture: ConjectureReport,
    pub m_value: u64,
    pub counterexample: bool,
    pub computed: Vec<String>,
    pub cited: Vec<String>,
}

pub fn counterexample_report(n: usize, capacity: &Capacity) -> Result<CounterexampleReport> {
    let conjecture = conjecture_check(n, capacity)?;
    let m_value = polygon::m_formula(n)?.value;
    Ok(CounterexampleReport {
        counterexample: conjecture.holds && m_value > 0,
        computed: vec![
            format!("spectral gaps and their average for n = {n}"),
            format!("M({n}) = {m_value} from the counting formula"),
        ],
        cited: vec![
            "rank H1(B(n)) >= M(n) via the ball theorems (not recomputed at this n; they fail \
             the desk-scale audit, see audit-t3)"
                .into(),
        ],
        conjecture,
        m_value,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CoveringReport {
    pub n: usize,
    pub spectrum_link: Vec<String>,
    pub spectrum_complete: Vec<String>,
    pub spectrum_next_link: Vec<String>,
    pub tolerance: f64,
    /// Fraction of the eigenvalues of L(n+1) within tolerance of some μ + ν.
    pub containment_fraction: f64,
}

fn six_decimals(v: &[f64]) -> Vec<String> {
    v.iter()
        .map(|&x| format!("{:.6}", if x.abs() < 5e-7 { 0.0 } else { x }))
        .collect()
}

/// Fraction of `target` within `tol` of the sum-set `a + b`.
pub fn sumset_containment(a: &[f64], b: &[f64], target: &[f64], tol: f64) -> f64 {
    if target.is_empty() {
        return 1.0;
    }
    let mut sums: Vec<f64> = a.iter().flat_map(|x| b.iter().map(move |y| x + y)).collect();
    sums.sort_by(f64::total_cmp);
    let hit = target
        .iter()
        .filter(|&&t| {
            let i = sums.partition_point(|&s| s < t - tol);
            i < sums.len() && sums[i] <= t + tol
        })
        .count();
    hit as f64 / target.len() as f64
}

/// Compares spec(L(n+1)) with the sum-set spec(L(n)) + spec(K_{n+1}).
pub fn covering_consistency(n: usize, capacity: &Capacity) -> Result<CoveringReport> {
    if !(5..=20).contains(&n) {
        return Err(Error::domain(format!("covering report needs 5 <= n <= 20, got {n}")));
    }
    let a = spectrum(&link_graph(n, capacity)?)?;
    let b = spectrum(&Graph::complete(n + 1))?;
    let t = spectrum(&link_graph(n + 1, capacity)?)?;
    let tolerance = 1e-6;
    Ok(CoveringReport {
        n,
        containment_fraction: sumset_containment(&a, &b, &t, tolerance),
        spectrum_link: six_decimals(&a),
        spectrum_complete: six_decimals(&b),
        spectrum_next_link: six_decimals(&t),
        tolerance,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn cap() -> Capacity {
        Capacity::default()
    }

    #[test]
    fn k2_spectrum() {
        let ev = spectrum(&Graph::complete(2)).unwrap();
        assert!(ev[0].abs() < 1e-12 && (ev[1] - 2.0).abs() < 1e-12);
    }

    #[test]
    fn isolated_vertex_rejected() {
        let g = Graph::from_edges(3, [(0, 1)]).unwrap();
        assert!(normalized_laplacian(&g).is_err());
    }

    #[test]
    fn cycles_match_closed_form() {
        for m in 3..=64 {
            let r = smallest_positive_eigenvalue(&Graph::cycle(m), "C", TOL_ZERO).unwrap();
            assert!((r.lambda1 - (1.0 - (2.0 * PI / m as f64).cos())).abs() < 1e-9, "m = {m}");
        }
        let c8 = smallest_positive_eigenvalue(&Graph::cycle(8), "C8", TOL_ZERO).unwrap();
        assert!((c8.lambda1 - (1.0 - (PI / 4.0).sin())).abs() < 1e-9);
    }

    #[test]
    fn bipartite_gap_is_one() {
        for a in 1..=10 {
            for b in 1..=10 {
                let r = smallest_positive_eigenvalue(&Graph::complete_bipartite(a, b), "K", TOL_ZERO)
                    .unwrap();
                let expected = if a == 1 && b == 1 { 2.0 } else { 1.0 };
                assert!((r.lambda1 - expected).abs() < 1e-9, "K({a},{b})");
            }
        }
    }

    #[test]
    fn zero_multiplicity_counts_components() {
        let g = Graph::from_edges(5, [(0, 1), (2, 3), (3, 4)]).unwrap();
        let r = smallest_positive_eigenvalue(&g, "two", TOL_ZERO).unwrap();
        assert_eq!(r.zero_multiplicity, 2);
    }

    #[test]
    fn subdivision_identity_matches_direct_solve() {
        for n in 5..=9 {
            let via = link_lambda(n, &cap()).unwrap().lambda;
            let direct = link_lambda_direct(n, &cap()).unwrap();
            assert!((via - direct).abs() < 1e-9, "n = {n}: {via} vs {direct}");
        }
    }

    #[test]
    fn small_lambda_values() {
        let l6 = link_lambda(6, &cap()).unwrap();
        assert!((l6.lambda - 0.1888).abs() < 2e-3);
        let l7 = link_lambda(7, &cap()).unwrap();
        assert!((l7.lambda - 0.1891).abs() < 2e-3);
    }

    #[test]
    fn conjecture_at_six() {
        let r = conjecture_check(6, &cap()).unwrap();
        assert!(r.edge_link_solved);
        assert!((r.lambda_edge - 1.0).abs() < 1e-9);
        assert!((r.average - (r.lambda_face + r.lambda_edge + r.lambda_vertex) / 3.0).abs() < 1e-15);
        assert!(!r.holds);
        assert!((vertex_threshold() - 0.207107).abs() < 1e-6);
    }

    #[test]
    fn sumset_contains_own_spectrum() {
        let a = spectrum(&Graph::cycle(6)).unwrap();
        assert_eq!(sumset_containment(&a, &[0.0], &a, 1e-6), 1.0);
    }

    #[test]
    fn covering_report_formats() {
        let r = covering_consistency(5, &cap()).unwrap();
        assert_eq!(r.spectrum_link.len(), 5);
        assert_eq!(r.spectrum_complete.len(), 6);
        assert!(r.spectrum_link.iter().all(|s| s.split('.').nth(1).unwrap().len() == 6));
        assert!((0.0..=1.0).contains(&r.containment_fraction));
    }
}
