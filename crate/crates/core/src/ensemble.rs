//! Degree distributions and layered ensembles.
//!
//! An irregular LDPC ensemble is described by two edge-perspective degree
//! polynomials: `lambda(x)` on the variable side and `rho(x)` on the check
//! side, where the coefficient at `x^(d-1)` is the fraction of edges attached
//! to degree-`d` nodes. A *layered* ensemble additionally pairs the k-th
//! highest variable degree with the k-th lowest check degree and records, per
//! degree class, where its edge mass lands on the opposite side (the cross
//! polynomials). Variables may connect only to checks in the same layer or in
//! layers below it.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// Tolerance accepted on the sum of input edge fractions before renormalizing.
const INPUT_SUM_TOL: f64 = 1e-3;
/// Post-normalization invariant tolerance.
const SUM_TOL: f64 = 1e-9;

/// Edge-perspective degree distribution: variable and check degree polynomials.
///
/// Terms are kept sorted by degree and the fractions of each side renormalized
/// to sum exactly to one.
#[derive(Debug, Clone, PartialEq)]
pub struct DegreeDistribution {
    variable: Vec<(usize, f64)>,
    check: Vec<(usize, f64)>,
}

/// Per-degree node fractions derived from a [`DegreeDistribution`].
#[derive(Debug, Clone)]
pub struct NodeFractions {
    pub variable: Vec<(usize, f64)>,
    pub check: Vec<(usize, f64)>,
}

fn validate_side(side: &str, terms: &[(usize, f64)]) -> Result<Vec<(usize, f64)>> {
    if terms.is_empty() {
        return Err(Error::InvalidDistribution(format!("{side} side is empty")));
    }
    let mut sorted = terms.to_vec();
    sorted.sort_by_key(|&(d, _)| d);
    for window in sorted.windows(2) {
        if window[0].0 == window[1].0 {
            return Err(Error::InvalidDistribution(format!(
                "{side} side repeats degree {}",
                window[0].0
            )));
        }
    }
    for &(d, f) in &sorted {
        if d < 2 {
            return Err(Error::InvalidDistribution(format!(
                "{side} degree {d} below 2"
            )));
        }
        if !(f > 0.0) || f > 1.0 + INPUT_SUM_TOL {
            return Err(Error::InvalidDistribution(format!(
                "{side} fraction {f} for degree {d} outside (0, 1]"
            )));
        }
    }
    let sum: f64 = sorted.iter().map(|&(_, f)| f).sum();
    if (sum - 1.0).abs() > INPUT_SUM_TOL {
        return Err(Error::InvalidDistribution(format!(
            "{side} fractions sum to {sum}, expected 1"
        )));
    }
    for term in &mut sorted {
        term.1 /= sum;
    }
    Ok(sorted)
}

impl DegreeDistribution {
    /// Builds a distribution from `(degree, edge_fraction)` terms for both
    /// sides. Terms may come in any order; fractions must be positive and sum
    /// to one within `1e-3` per side (they are renormalized to sum exactly).
    pub fn new(variable: Vec<(usize, f64)>, check: Vec<(usize, f64)>) -> Result<Self> {
        let variable = validate_side("variable", &variable)?;
        let check = validate_side("check", &check)?;
        debug_assert!((variable.iter().map(|t| t.1).sum::<f64>() - 1.0).abs() < SUM_TOL);
        debug_assert!((check.iter().map(|t| t.1).sum::<f64>() - 1.0).abs() < SUM_TOL);
        Ok(Self { variable, check })
    }

    /// Variable-side terms, sorted by degree.
    pub fn variable_terms(&self) -> &[(usize, f64)] {
        &self.variable
    }

    /// Check-side terms, sorted by degree.
    pub fn check_terms(&self) -> &[(usize, f64)] {
        &self.check
    }

    /// Edge fraction attached to degree-`d` variable nodes (zero if absent).
    pub fn lambda(&self, d: usize) -> f64 {
        self.variable
            .iter()
            .find(|&&(deg, _)| deg == d)
            .map_or(0.0, |&(_, f)| f)
    }

    /// Edge fraction attached to degree-`d` check nodes (zero if absent).
    pub fn rho(&self, d: usize) -> f64 {
        self.check
            .iter()
            .find(|&&(deg, _)| deg == d)
            .map_or(0.0, |&(_, f)| f)
    }

    /// Design rate `1 - (sum rho_j / j) / (sum lambda_i / i)`.
    ///
    /// Returns an error when the rate is negative (more check sockets than the
    /// variable side can supply); a rate of exactly zero is the degenerate
    /// equal-degree case and is returned as `0.0`.
    pub fn design_rate(&self) -> Result<f64> {
        let var_nodes: f64 = self.variable.iter().map(|&(d, f)| f / d as f64).sum();
        let check_nodes: f64 = self.check.iter().map(|&(d, f)| f / d as f64).sum();
        let rate = 1.0 - check_nodes / var_nodes;
        if rate < 0.0 {
            return Err(Error::InfeasibleEnsemble(format!(
                "design rate {rate} is negative"
            )));
        }
        Ok(rate)
    }

    /// Converts edge fractions into node fractions `(f_d / d) / sum(f_k / k)`
    /// on each side.
    pub fn node_fractions(&self) -> NodeFractions {
        let convert = |terms: &[(usize, f64)]| {
            let total: f64 = terms.iter().map(|&(d, f)| f / d as f64).sum();
            terms
                .iter()
                .map(|&(d, f)| (d, (f / d as f64) / total))
                .collect()
        };
        NodeFractions {
            variable: convert(&self.variable),
            check: convert(&self.check),
        }
    }

    /// Pairs the k-th highest variable degree with the k-th lowest check
    /// degree and allocates the cross polynomials by top-down water-filling:
    /// a layer's variable edge budget first saturates its own layer's check
    /// sockets, and overflow spills into the next layer down.
    ///
    /// Fails when the two sides carry different numbers of degrees, or when
    /// some layer's check sockets cannot be reached by variables at or above
    /// it (water-filling infeasibility).
    pub fn build_layers(&self) -> Result<LayeredEnsemble> {
        if self.variable.len() != self.check.len() {
            return Err(Error::CardinalityMismatch {
                variable: self.variable.len(),
                check: self.check.len(),
            });
        }
        let k = self.variable.len();
        // Top layer: highest variable degree, lowest check degree.
        let layers: Vec<(usize, usize)> = (0..k)
            .map(|l| (self.variable[k - 1 - l].0, self.check[l].0))
            .collect();
        let budgets: Vec<f64> = (0..k).map(|l| self.variable[k - 1 - l].1).collect();
        let capacities: Vec<f64> = (0..k).map(|l| self.check[l].1).collect();

        let mut cross_rho = vec![vec![0.0; k]; k];
        let mut remaining = capacities.clone();
        for layer in 0..k {
            let mut budget = budgets[layer];
            for target in layer..k {
                if budget <= 0.0 {
                    break;
                }
                let take = budget.min(remaining[target]);
                cross_rho[layer][target] = take / budgets[layer];
                remaining[target] -= take;
                budget -= take;
            }
            if remaining[layer] > SUM_TOL {
                return Err(Error::InfeasibleEnsemble(format!(
                    "layer {layer} check sockets unreachable \
                     ({:.6} of edge mass unfilled)",
                    remaining[layer]
                )));
            }
        }
        for row in &mut cross_rho {
            let sum: f64 = row.iter().sum();
            for v in row.iter_mut() {
                *v /= sum;
            }
        }

        // Edge balance lambda_i rho_ij = rho_j lambda_ji determines the
        // reverse cross polynomials.
        let mut cross_lambda = vec![vec![0.0; k]; k];
        for (j, row) in cross_lambda.iter_mut().enumerate() {
            for (i, entry) in row.iter_mut().enumerate() {
                *entry = budgets[i] * cross_rho[i][j] / capacities[j];
            }
            let sum: f64 = row.iter().sum();
            for v in row.iter_mut() {
                *v /= sum;
            }
        }

        Ok(LayeredEnsemble {
            layers,
            cross_rho,
            cross_lambda,
            base: self.clone(),
        })
    }
}

/// A degree distribution whose classes have been paired into layers, plus the
/// per-class cross polynomials.
///
/// Layer 0 is the top layer (highest variable degree, lowest check degree).
/// `cross_rho[i][j]` is the probability that an edge of a layer-`i` variable
/// class lands on the layer-`j` check class; `cross_lambda[j][i]` is the
/// probability that an edge of a layer-`j` check class comes from the
/// layer-`i` variable class.
#[derive(Debug, Clone, PartialEq)]
pub struct LayeredEnsemble {
    layers: Vec<(usize, usize)>,
    cross_rho: Vec<Vec<f64>>,
    cross_lambda: Vec<Vec<f64>>,
    base: DegreeDistribution,
}

impl LayeredEnsemble {
    /// `(variable_degree, check_degree)` pairs, top layer first.
    pub fn layers(&self) -> &[(usize, usize)] {
        &self.layers
    }

    pub fn num_layers(&self) -> usize {
        self.layers.len()
    }

    pub fn cross_rho(&self) -> &[Vec<f64>] {
        &self.cross_rho
    }

    pub fn cross_lambda(&self) -> &[Vec<f64>] {
        &self.cross_lambda
    }

    pub fn base(&self) -> &DegreeDistribution {
        &self.base
    }

    /// Cross-rho entry by layer indices.
    pub fn rho_entry(&self, var_layer: usize, check_layer: usize) -> f64 {
        self.cross_rho[var_layer][check_layer]
    }

    /// Cross-lambda entry by layer indices.
    pub fn lambda_entry(&self, check_layer: usize, var_layer: usize) -> f64 {
        self.cross_lambda[check_layer][var_layer]
    }

    /// Layer index of a variable degree, if the degree belongs to the ensemble.
    pub fn var_layer_of_degree(&self, degree: usize) -> Option<usize> {
        self.layers.iter().position(|&(d, _)| d == degree)
    }

    /// Layer index of a check degree, if the degree belongs to the ensemble.
    pub fn check_layer_of_degree(&self, degree: usize) -> Option<usize> {
        self.layers.iter().position(|&(_, d)| d == degree)
    }

    /// Test-only constructor that accepts explicit cross matrices without the
    /// layer-reachability mask (used to degrade the polarized analysis into
    /// the standard one).
    #[doc(hidden)]
    pub fn from_parts(
        base: DegreeDistribution,
        layers: Vec<(usize, usize)>,
        cross_rho: Vec<Vec<f64>>,
        cross_lambda: Vec<Vec<f64>>,
    ) -> Self {
        Self {
            layers,
            cross_rho,
            cross_lambda,
            base,
        }
    }
}

/// On-disk ensemble spec: `{"variable": [[degree, fraction], ...], "check": ...}`.
#[derive(Debug, Serialize, Deserialize)]
struct EnsembleFile {
    variable: Vec<(usize, f64)>,
    check: Vec<(usize, f64)>,
}

impl DegreeDistribution {
    /// Parses the JSON ensemble spec format.
    pub fn from_json(text: &str) -> Result<Self> {
        let file: EnsembleFile = serde_json::from_str(text)?;
        Self::new(file.variable, file.check)
    }

    /// Serializes to the JSON ensemble spec format.
    pub fn to_json(&self) -> String {
        let file = EnsembleFile {
            variable: self.variable.clone(),
            check: self.check.clone(),
        };
        serde_json::to_string_pretty(&file).expect("ensemble serialization cannot fail")
    }
}

/// Bundled ensemble specs.
pub mod presets {
    use super::DegreeDistribution;

    macro_rules! preset {
        ($fn_name:ident, $file:literal, $doc:literal) => {
            #[doc = $doc]
            pub fn $fn_name() -> DegreeDistribution {
                DegreeDistribution::from_json(include_str!(concat!(
                    "../ensembles/",
                    $file
                )))
                .expect("bundled ensemble is valid")
            }
        };
    }

    preset!(code_a, "codeA.json", "Rate-5/6 three-class code A.");
    preset!(code_b, "codeB.json", "Rate-5/6 three-class code B.");
    preset!(code_c, "codeC.json", "Rate-5/6 three-class code C.");
    preset!(code_d, "codeD.json", "Rate-5/6 three-class code D.");
    preset!(layers3, "layers3.json", "Four-class ensemble with three layers above degree 2.");
    preset!(layers4, "layers4.json", "Five-class ensemble with four layers above degree 2.");

    /// Resolves a preset by name (`codeA` ... `codeD`, `layers3`, `layers4`).
    pub fn by_name(name: &str) -> Option<DegreeDistribution> {
        match name {
            "codeA" => Some(code_a()),
            "codeB" => Some(code_b()),
            "codeC" => Some(code_c()),
            "codeD" => Some(code_d()),
            "layers3" => Some(layers3()),
            "layers4" => Some(layers4()),
            _ => None,
        }
    }

    pub const NAMES: [&str; 6] = ["codeA", "codeB", "codeC", "codeD", "layers3", "layers4"];
}
