//! WebAssembly bindings behind the static demo page in `www/`.
//!
//! Each exported function has a plain Rust twin that returns `String` errors,
//! so the numerics can be unit tested natively.

use hyperpa::analysis::{analytic_beta, ccdf, fit_power_law, project, DegreeHistogram, KMin};
use hyperpa::generator::{evolve, evolve_graph_baseline, BaselineConfig, GeneratorConfig};
use hyperpa::EdgeSizeDistribution;
use wasm_bindgen::prelude::*;

/// Largest run the page will request; keeps the tab responsive.
pub const MAX_STEPS: u64 = 500_000;

/// A degree CCDF together with its power-law fit.
#[wasm_bindgen]
#[derive(Debug, Clone)]
pub struct Curve {
    degrees: Vec<f64>,
    ccdf: Vec<f64>,
    beta_hat: f64,
    k_min: u64,
    beta_analytic: f64,
}

#[wasm_bindgen]
impl Curve {
    #[wasm_bindgen(getter)]
    pub fn degrees(&self) -> Vec<f64> {
        self.degrees.clone()
    }

    #[wasm_bindgen(getter)]
    pub fn ccdf(&self) -> Vec<f64> {
        self.ccdf.clone()
    }

    #[wasm_bindgen(getter, js_name = betaHat)]
    pub fn beta_hat(&self) -> f64 {
        self.beta_hat
    }

    #[wasm_bindgen(getter, js_name = kMin)]
    pub fn k_min(&self) -> f64 {
        self.k_min as f64
    }

    #[wasm_bindgen(getter, js_name = betaAnalytic)]
    pub fn beta_analytic(&self) -> f64 {
        self.beta_analytic
    }
}

/// Hypergraph-side and baseline curves from one comparison run.
#[wasm_bindgen]
#[derive(Debug, Clone)]
pub struct Comparison {
    hypergraph: Curve,
    baseline: Curve,
}

#[wasm_bindgen]
impl Comparison {
    #[wasm_bindgen(getter)]
    pub fn hypergraph(&self) -> Curve {
        self.hypergraph.clone()
    }

    #[wasm_bindgen(getter)]
    pub fn baseline(&self) -> Curve {
        self.baseline.clone()
    }
}

fn parse_kmin(k_min: u32) -> KMin {
    if k_min == 0 {
        KMin::Auto
    } else {
        KMin::Fixed(k_min.into())
    }
}

fn check_steps(steps: u32) -> Result<u64, String> {
    let steps = u64::from(steps);
    if steps > MAX_STEPS {
        return Err(format!("at most {MAX_STEPS} steps in the browser"));
    }
    Ok(steps)
}

fn curve(hist: &DegreeHistogram, k_min: KMin, beta_analytic: f64) -> Result<Curve, String> {
    let report = fit_power_law(hist, k_min).map_err(|e| e.to_string())?;
    let points = ccdf(hist).map_err(|e| e.to_string())?;
    Ok(Curve {
        degrees: points.iter().map(|&(k, _)| k as f64).collect(),
        ccdf: points.iter().map(|&(_, c)| c).collect(),
        beta_hat: report.beta_hat,
        k_min: report.k_min,
        beta_analytic,
    })
}

/// Rows `p, beta_graph, beta_hypergraph` flattened, for p = 1/n, 2/n, ..., 1.
pub fn beta_curve_rows(mu: f64, n: u32) -> Result<Vec<f64>, String> {
    if n == 0 {
        return Err("need at least one point".into());
    }
    let mut rows = Vec::with_capacity(3 * n as usize);
    for i in 1..=n {
        let p = f64::from(i) / f64::from(n);
        rows.push(p);
        rows.push(analytic_beta(p, 2.0).map_err(|e| e.to_string())?);
        rows.push(analytic_beta(p, mu).map_err(|e| e.to_string())?);
    }
    Ok(rows)
}

/// Grows H(p, sizes) and fits its vertex degree distribution.
/// `k_min = 0` selects the cutoff automatically.
pub fn simulate_curve(p: f64, sizes: &str, steps: u32, seed: u32, k_min: u32) -> Result<Curve, String> {
    let dist: EdgeSizeDistribution = sizes
        .parse()
        .map_err(|e: hyperpa::sizes::SizeDistError| e.to_string())?;
    let config = GeneratorConfig::new(p, check_steps(steps)?, dist.clone()).seed(seed.into());
    let h = evolve(&config).map_err(|e| e.to_string())?;
    let beta = analytic_beta(p, dist.mean()).map_err(|e| e.to_string())?;
    curve(&h.degree_histogram(), parse_kmin(k_min), beta)
}

/// Projects a d-uniform hypergraph and grows the baseline graph with the same p.
pub fn compare_curves(p: f64, d: u32, steps: u32, seed: u32, k_min: u32) -> Result<Comparison, String> {
    if d < 2 {
        return Err("d must be at least 2".into());
    }
    let steps = check_steps(steps)?;
    let config = GeneratorConfig::new(p, steps, EdgeSizeDistribution::Constant(d as usize)).seed(seed.into());
    let h = evolve(&config).map_err(|e| e.to_string())?;
    let observed = project(&h, false);
    let g = evolve_graph_baseline(&BaselineConfig::new(p, 1, steps, seed.into())).map_err(|e| e.to_string())?;
    let k_min = parse_kmin(k_min);
    Ok(Comparison {
        hypergraph: curve(
            &observed.degree_histogram(),
            k_min,
            analytic_beta(p, f64::from(d)).map_err(|e| e.to_string())?,
        )?,
        baseline: curve(
            &g.degree_histogram(),
            k_min,
            analytic_beta(p, 2.0).map_err(|e| e.to_string())?,
        )?,
    })
}

#[wasm_bindgen(js_name = betaCurve)]
pub fn beta_curve(mu: f64, n: u32) -> Result<Vec<f64>, JsError> {
    beta_curve_rows(mu, n).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn simulate(p: f64, sizes: &str, steps: u32, seed: u32, k_min: u32) -> Result<Curve, JsError> {
    simulate_curve(p, sizes, steps, seed, k_min).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn compare(p: f64, d: u32, steps: u32, seed: u32, k_min: u32) -> Result<Comparison, JsError> {
    compare_curves(p, d, steps, seed, k_min).map_err(|e| JsError::new(&e))
}
