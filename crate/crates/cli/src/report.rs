//! Serializable report records. Floats pass through [`Sig`] so every file
//! carries the same number of significant digits.

use serde::{Serialize, Serializer};

use maxcut_qaoa_core::{
    AugmentedMatrix, GammaPeriod, GridSpec, IsingModel, Provenance, RoughnessReport, SymmetryReport,
};

use crate::format::{rational_to_decimal, round_sig};
use crate::input::LabeledGraph;

/// A float written at the shared significant-digit precision.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Sig(pub f64);

impl Serialize for Sig {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_f64(round_sig(self.0))
    }
}

#[derive(Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct GraphInfo {
    pub experiment: Option<u32>,
    pub source: String,
    pub graph6: String,
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

impl From<&LabeledGraph> for GraphInfo {
    fn from(g: &LabeledGraph) -> Self {
        Self {
            experiment: g.experiment,
            source: g.source.clone(),
            graph6: g.graph6.clone(),
            n: g.graph.vertex_count(),
            edges: g.graph.edges().to_vec(),
        }
    }
}

#[derive(Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Symmetry {
    pub beta_period: Sig,
    /// `None` when the landscape does not depend on `γ`.
    pub gamma_period: Option<Sig>,
    pub gamma_constant: bool,
    pub delta: u64,
}

impl From<SymmetryReport> for Symmetry {
    fn from(s: SymmetryReport) -> Self {
        let gamma_period = match s.gamma_period {
            GammaPeriod::Period(p) => Some(Sig(p)),
            GammaPeriod::Constant => None,
        };
        Self {
            beta_period: Sig(s.beta_period),
            gamma_constant: gamma_period.is_none(),
            gamma_period,
            delta: s.delta,
        }
    }
}

#[derive(Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct HamiltonianReport {
    #[serde(flatten)]
    pub graph: GraphInfo,
    pub h: Vec<String>,
    #[serde(rename = "J")]
    pub j: Vec<(usize, usize, String)>,
    pub offset: String,
    pub augmented_matrix: Vec<Vec<String>>,
    pub sparsity: String,
    pub symmetry: Symmetry,
}

impl HamiltonianReport {
    pub fn new(
        g: &LabeledGraph,
        model: &IsingModel,
        aug: &AugmentedMatrix,
        sym: SymmetryReport,
    ) -> Self {
        let d = aug.dimension();
        Self {
            graph: g.into(),
            h: model.fields().iter().map(rational_to_decimal).collect(),
            j: model
                .couplings()
                .iter()
                .map(|c| (c.j, c.k, rational_to_decimal(&c.value)))
                .collect(),
            offset: rational_to_decimal(&model.offset()),
            augmented_matrix: (0..d)
                .map(|r| {
                    (0..d)
                        .map(|c| rational_to_decimal(&aug.get(r, c)))
                        .collect()
                })
                .collect(),
            sparsity: rational_to_decimal(&aug.sparsity_exact()),
            symmetry: sym.into(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct GridMeta {
    pub beta_range: [Sig; 2],
    pub gamma_range: [Sig; 2],
    pub rows: usize,
    pub cols: usize,
}

impl From<&GridSpec> for GridMeta {
    fn from(g: &GridSpec) -> Self {
        Self {
            beta_range: [Sig(g.beta.start), Sig(g.beta.end)],
            gamma_range: [Sig(g.gamma.start), Sig(g.gamma.end)],
            rows: g.rows,
            cols: g.cols,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ProvenanceMeta {
    pub mode: &'static str,
    pub shots: Option<u32>,
    pub seed: Option<u64>,
}

impl From<Provenance> for ProvenanceMeta {
    fn from(p: Provenance) -> Self {
        match p {
            Provenance::Analytic => Self {
                mode: "analytic",
                shots: None,
                seed: None,
            },
            Provenance::ExactSimulation => Self {
                mode: "exact-sim",
                shots: None,
                seed: None,
            },
            Provenance::SampledSimulation { shots, seed } => Self {
                mode: "sampled",
                shots: Some(shots),
                seed: Some(seed),
            },
        }
    }
}

#[derive(Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct LandscapeMeta {
    #[serde(flatten)]
    pub graph: GraphInfo,
    pub provenance: ProvenanceMeta,
    pub grid: GridMeta,
    pub basis_order: &'static str,
    pub min_energy: Sig,
    pub max_energy: Sig,
}

#[derive(Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct MetricsRow {
    pub experiment: Option<u32>,
    pub source: String,
    pub graph6: String,
    pub sparsity: Sig,
    pub total_variation: Sig,
    pub fourier_density: Sig,
    pub fourier_density_constant: bool,
    pub periodic_closure: bool,
    pub beta_period: Sig,
    pub gamma_period: Option<Sig>,
    pub delta: u64,
    pub provenance: ProvenanceMeta,
    pub grid: GridMeta,
}

impl MetricsRow {
    pub fn new(
        g: &LabeledGraph,
        sparsity: f64,
        r: &RoughnessReport,
        sym: SymmetryReport,
        provenance: Provenance,
    ) -> Self {
        let sym = Symmetry::from(sym);
        Self {
            experiment: g.experiment,
            source: g.source.clone(),
            graph6: g.graph6.clone(),
            sparsity: Sig(sparsity),
            total_variation: Sig(r.total_variation),
            fourier_density: Sig(r.fourier_density.value),
            fourier_density_constant: r.fourier_density.constant,
            periodic_closure: r.periodic_closure,
            beta_period: sym.beta_period,
            gamma_period: sym.gamma_period,
            delta: sym.delta,
            provenance: provenance.into(),
            grid: (&r.grid).into(),
        }
    }
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct Point {
    pub beta: Sig,
    pub gamma: Sig,
}

#[derive(Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Hyperparameters {
    pub max_iter: usize,
    pub a: Sig,
    pub c: Sig,
    pub stability: Sig,
    pub alpha: Sig,
    pub gamma: Sig,
}

#[derive(Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct TraceRow {
    pub iter: usize,
    pub beta: Sig,
    pub gamma: Sig,
    pub estimate: Sig,
}

#[derive(Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct OptimizeReport {
    #[serde(flatten)]
    pub graph: GraphInfo,
    pub objective: ProvenanceMeta,
    pub seed: u64,
    pub init: &'static str,
    pub hyperparameters: Hyperparameters,
    pub initial_params: Point,
    pub best_params: Point,
    pub best_expectation: Sig,
    /// Closed-form energy at `best_params`, free of shot noise.
    pub best_exact_expectation: Sig,
    pub brute_force_optimum: i64,
    pub max_cut: usize,
    pub evaluations: usize,
    pub trace: Vec<TraceRow>,
}
