//! Subcommand implementations.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use serde::Serialize;

use maxcut_qaoa_core::rng::{self, STREAM_SHOTS};
use maxcut_qaoa_core::{
    analytic_expectation, augmented_matrix, brute_force_maxcut, measure_landscape, spsa_optimize,
    symmetry_report, AnalyticModel, AxisRange, GridSpec, InitialPoint, IsingModel, Landscape,
    Provenance, Simulator, SpsaConfig, FIXTURE_IDS,
};

use crate::cli::{Cli, Command, Format, Init, Mode, OptimizeArgs};
use crate::format::fmt_sig;
use crate::input::{load, read_graph6_file, InputSource, LabeledGraph};
use crate::report::{
    GraphInfo, HamiltonianReport, Hyperparameters, LandscapeMeta, MetricsRow, OptimizeReport,
    Point, Sig, TraceRow,
};

/// Shots per evaluation when sampled mode is chosen without `--shots`.
pub const DEFAULT_SHOTS: u32 = 2048;
pub const DEFAULT_MAX_ITER: usize = 1000;

/// Bad flag combination; reported with exit code 2.
#[derive(Debug, thiserror::Error)]
#[error("{0}")]
pub struct UsageError(pub String);

fn usage<T>(msg: impl Into<String>) -> Result<T> {
    Err(UsageError(msg.into()).into())
}

/// Fully resolved energy evaluator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Evaluator {
    Analytic,
    Exact,
    Sampled { shots: u32, seed: u64 },
}

impl Evaluator {
    fn provenance(self) -> Provenance {
        match self {
            Self::Analytic => Provenance::Analytic,
            Self::Exact => Provenance::ExactSimulation,
            Self::Sampled { shots, seed } => Provenance::SampledSimulation { shots, seed },
        }
    }
}

/// Resolves `--mode`, `--exact`, `--shots` and `--seed` against each other.
pub fn resolve_evaluator(cli: &Cli) -> Result<Evaluator> {
    let e = &cli.eval;
    let mode = match (e.exact, e.mode) {
        (true, Some(m)) if m != Mode::ExactSim => return usage("--exact conflicts with --mode"),
        (true, _) => Mode::ExactSim,
        (false, Some(m)) => m,
        (false, None) if e.shots.is_some() => Mode::Sampled,
        (false, None) => Mode::Analytic,
    };
    match mode {
        Mode::Sampled => {
            let Some(seed) = e.seed else {
                return usage("sampled evaluation requires --seed");
            };
            let shots = e.shots.unwrap_or(DEFAULT_SHOTS);
            if shots == 0 {
                return usage("--shots must be positive");
            }
            Ok(Evaluator::Sampled { shots, seed })
        }
        _ if e.shots.is_some() => usage("--shots only applies to sampled evaluation"),
        Mode::Analytic => Ok(Evaluator::Analytic),
        Mode::ExactSim => Ok(Evaluator::Exact),
    }
}

fn resolve_source(cli: &Cli, optional: bool) -> Result<Option<InputSource>> {
    let i = &cli.input;
    let given = [
        i.fixture.is_some(),
        i.graph6.is_some(),
        i.graph6_file.is_some(),
        i.all_fixtures,
    ];
    if given.iter().filter(|&&b| b).count() > 1 {
        return usage("give only one of --fixture, --graph6, --graph6-file, --all-fixtures");
    }
    if i.record.is_some() && i.graph6_file.is_none() {
        return usage("--record requires --graph6-file");
    }
    let source = if let Some(id) = i.fixture {
        if !FIXTURE_IDS.contains(&id) {
            return usage(format!(
                "unknown fixture {id}; expected one of {FIXTURE_IDS:?}"
            ));
        }
        InputSource::Fixture(id)
    } else if let Some(text) = &i.graph6 {
        InputSource::Graph6(text.clone())
    } else if let Some(path) = &i.graph6_file {
        InputSource::Graph6File {
            path: path.clone(),
            record: i.record.unwrap_or(0),
        }
    } else if i.all_fixtures {
        InputSource::AllFixtures
    } else if optional {
        return Ok(None);
    } else {
        return usage("no graph given: use --fixture, --graph6, --graph6-file or --all-fixtures");
    };
    Ok(Some(source))
}

fn single_graph(cli: &Cli) -> Result<LabeledGraph> {
    if cli.input.all_fixtures {
        return usage("--all-fixtures only applies to metrics and graphs");
    }
    let source = resolve_source(cli, false)?.expect("source is required");
    Ok(load(&source)?.remove(0))
}

fn resolve_grid(cli: &Cli, default: GridSpec) -> Result<GridSpec> {
    let a = &cli.grid;
    let mut grid = default;
    if let Some(n) = a.beta_steps {
        grid.rows = n;
    }
    if let Some(n) = a.gamma_steps {
        grid.cols = n;
    }
    if let Some(end) = a.beta_max {
        grid.beta = AxisRange::new(0.0, end);
    }
    if let Some(end) = a.gamma_max {
        grid.gamma = AxisRange::new(0.0, end);
    }
    if let Err(e) = grid.validate() {
        return usage(format!("bad grid: {e}"));
    }
    Ok(grid)
}

fn format_or(cli: &Cli, default: Format, allowed: &[Format], command: &str) -> Result<Format> {
    let f = cli.output.format.unwrap_or(default);
    if !allowed.contains(&f) {
        return usage(format!("{command} does not support --format {f:?}").to_lowercase());
    }
    Ok(f)
}

fn reject_optimizer_flags(cli: &Cli, command: &str) -> Result<()> {
    if cli.eval.max_iter.is_some() {
        return usage(format!("--max-iter does not apply to {command}"));
    }
    Ok(())
}

/// Landscape of `g` on `grid` under `eval`. Sampled grids draw every point's
/// shots from one stream in row-major order.
pub fn evaluate_landscape(g: &LabeledGraph, grid: GridSpec, eval: Evaluator) -> Result<Landscape> {
    let provenance = eval.provenance();
    let landscape = match eval {
        Evaluator::Analytic => {
            let m = AnalyticModel::new(&g.graph);
            Landscape::from_fn(grid, provenance, |b, c| Ok(m.expectation(b, c)))
        }
        Evaluator::Exact => {
            let sim = Simulator::new(&IsingModel::from_maxcut(&g.graph))?;
            Landscape::from_fn(grid, provenance, |b, c| Ok(sim.exact(b, c)))
        }
        Evaluator::Sampled { shots, seed } => {
            let sim = Simulator::new(&IsingModel::from_maxcut(&g.graph))?;
            let mut rng = rng::stream(seed, STREAM_SHOTS);
            Landscape::from_fn(grid, provenance, |b, c| sim.sampled(b, c, shots, &mut rng))
        }
    };
    Ok(landscape?)
}

fn json_bytes<T: Serialize>(value: &T) -> Result<Vec<u8>> {
    let mut bytes = serde_json::to_vec_pretty(value)?;
    bytes.push(b'\n');
    Ok(bytes)
}

fn emit(out: Option<&Path>, stdout: &mut dyn Write, bytes: &[u8]) -> Result<()> {
    match out {
        Some(path) => fs::write(path, bytes).with_context(|| format!("writing {}", path.display())),
        None => stdout.write_all(bytes).context("writing standard output"),
    }
}

fn csv_bytes<R: IntoIterator<Item = Vec<String>>>(header: &[&str], rows: R) -> Result<Vec<u8>> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header)?;
    for row in rows {
        w.write_record(&row)?;
    }
    Ok(w.into_inner().map_err(|e| e.into_error())?)
}

fn sidecar_path(out: &Path) -> PathBuf {
    let mut name = out.as_os_str().to_owned();
    name.push(".meta.json");
    PathBuf::from(name)
}

/// Runs the parsed command, writing results to `--out` or `stdout` and the
/// optimizer summary to `stderr`.
pub fn execute(cli: &Cli, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<()> {
    match &cli.command {
        Command::Hamiltonian => hamiltonian(cli, stdout),
        Command::Landscape => landscape(cli, stdout),
        Command::Metrics => metrics(cli, stdout),
        Command::Optimize(args) => optimize(cli, args, stdout, stderr),
        Command::Graphs => graphs(cli, stdout),
    }
}

fn hamiltonian(cli: &Cli, stdout: &mut dyn Write) -> Result<()> {
    format_or(cli, Format::Json, &[Format::Json], "hamiltonian")?;
    reject_optimizer_flags(cli, "hamiltonian")?;
    let g = single_graph(cli)?;
    let model = IsingModel::from_maxcut(&g.graph);
    let aug = augmented_matrix(&model);
    let report = HamiltonianReport::new(&g, &model, &aug, symmetry_report(&g.graph)?);
    emit(cli.output.out.as_deref(), stdout, &json_bytes(&report)?)
}

fn landscape(cli: &Cli, stdout: &mut dyn Write) -> Result<()> {
    let format = format_or(cli, Format::Csv, &[Format::Csv, Format::Json], "landscape")?;
    reject_optimizer_flags(cli, "landscape")?;
    let eval = resolve_evaluator(cli)?;
    let grid = resolve_grid(cli, GridSpec::landscape_default())?;
    let g = single_graph(cli)?;
    let l = evaluate_landscape(&g, grid, eval)?;
    let meta = LandscapeMeta {
        graph: (&g).into(),
        provenance: eval.provenance().into(),
        grid: (&grid).into(),
        basis_order: "little-endian",
        min_energy: Sig(l.min()),
        max_energy: Sig(l.max()),
    };
    let bytes = match format {
        Format::Csv => csv_bytes(
            &["beta", "gamma", "energy"],
            (0..grid.rows).flat_map(|r| {
                let l = &l;
                (0..grid.cols).map(move |c| {
                    vec![
                        fmt_sig(grid.beta_at(r)),
                        fmt_sig(grid.gamma_at(c)),
                        fmt_sig(l.get(r, c)),
                    ]
                })
            }),
        )?,
        Format::Json => {
            #[derive(Serialize)]
            struct Doc<'a> {
                meta: &'a LandscapeMeta,
                energy: Vec<Vec<Sig>>,
            }
            json_bytes(&Doc {
                meta: &meta,
                energy: (0..grid.rows)
                    .map(|r| l.row(r).iter().map(|&v| Sig(v)).collect())
                    .collect(),
            })?
        }
    };
    let out = cli.output.out.as_deref();
    emit(out, stdout, &bytes)?;
    if let (Some(out), Format::Csv) = (out, format) {
        let path = sidecar_path(out);
        fs::write(&path, json_bytes(&meta)?)
            .with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(())
}

fn metrics(cli: &Cli, stdout: &mut dyn Write) -> Result<()> {
    let format = format_or(cli, Format::Json, &[Format::Csv, Format::Json], "metrics")?;
    reject_optimizer_flags(cli, "metrics")?;
    let eval = resolve_evaluator(cli)?;
    let grid = resolve_grid(cli, GridSpec::metrics_default())?;
    let source = resolve_source(cli, false)?.expect("source is required");
    let graphs = load(&source)?;
    let rows = graphs
        .iter()
        .map(|g| {
            let l = evaluate_landscape(g, grid, eval)?;
            let report = measure_landscape(&g.graph, &l)?;
            let sparsity = augmented_matrix(&IsingModel::from_maxcut(&g.graph)).sparsity();
            Ok(MetricsRow::new(
                g,
                sparsity,
                &report,
                symmetry_report(&g.graph)?,
                eval.provenance(),
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    let bytes = match format {
        Format::Json if source == InputSource::AllFixtures => json_bytes(&rows)?,
        Format::Json => json_bytes(&rows[0])?,
        Format::Csv => csv_bytes(
            &[
                "experiment",
                "graph6",
                "sparsity",
                "totalVariation",
                "fourierDensity",
                "betaPeriod",
                "gammaPeriod",
                "delta",
            ],
            rows.iter().map(|r| {
                vec![
                    r.experiment.map(|e| e.to_string()).unwrap_or_default(),
                    r.graph6.clone(),
                    fmt_sig(r.sparsity.0),
                    fmt_sig(r.total_variation.0),
                    fmt_sig(r.fourier_density.0),
                    fmt_sig(r.beta_period.0),
                    r.gamma_period.map(|p| fmt_sig(p.0)).unwrap_or_default(),
                    r.delta.to_string(),
                ]
            }),
        )?,
    };
    emit(cli.output.out.as_deref(), stdout, &bytes)
}

fn optimize(
    cli: &Cli,
    args: &OptimizeArgs,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> Result<()> {
    format_or(cli, Format::Json, &[Format::Json], "optimize")?;
    let eval = resolve_evaluator(cli)?;
    let g = single_graph(cli)?;
    let defaults = SpsaConfig::default();
    let config = SpsaConfig {
        max_iter: cli.eval.max_iter.unwrap_or(DEFAULT_MAX_ITER),
        a: args.spsa_a.unwrap_or(defaults.a),
        c: args.spsa_c.unwrap_or(defaults.c),
        stability: args.spsa_stability.unwrap_or(defaults.stability),
        ..defaults
    };
    if config.max_iter == 0 {
        return usage("--max-iter must be at least 1");
    }
    let seed = cli.eval.seed.unwrap_or(0);
    let init = match args.init {
        Init::Random => InitialPoint::Random,
        Init::Center => InitialPoint::Center,
    };

    let result = match eval {
        Evaluator::Analytic => {
            let m = AnalyticModel::new(&g.graph);
            spsa_optimize(
                |p| Ok(m.expectation(p.beta(), p.gamma())),
                config,
                seed,
                init,
            )
        }
        Evaluator::Exact => {
            let sim = Simulator::new(&IsingModel::from_maxcut(&g.graph))?;
            spsa_optimize(|p| Ok(sim.exact(p.beta(), p.gamma())), config, seed, init)
        }
        Evaluator::Sampled { shots, seed: s } => {
            let sim = Simulator::new(&IsingModel::from_maxcut(&g.graph))?;
            let mut rng = rng::stream(s, STREAM_SHOTS);
            spsa_optimize(
                |p| sim.sampled(p.beta(), p.gamma(), shots, &mut rng),
                config,
                seed,
                init,
            )
        }
    }?;
    let cut = brute_force_maxcut(&g.graph)?;
    let optimum = -(cut.best_value as i64);
    let point = |p: maxcut_qaoa_core::QaoaParams| Point {
        beta: Sig(p.beta()),
        gamma: Sig(p.gamma()),
    };
    let report = OptimizeReport {
        graph: GraphInfo::from(&g),
        objective: eval.provenance().into(),
        seed,
        init: match args.init {
            Init::Random => "random",
            Init::Center => "center",
        },
        hyperparameters: Hyperparameters {
            max_iter: config.max_iter,
            a: Sig(config.a),
            c: Sig(config.c),
            stability: Sig(config.stability),
            alpha: Sig(config.alpha),
            gamma: Sig(config.gamma),
        },
        initial_params: point(result.initial),
        best_params: point(result.best_params),
        best_expectation: Sig(result.best_expectation),
        best_exact_expectation: Sig(analytic_expectation(
            &g.graph,
            result.best_params.beta(),
            result.best_params.gamma(),
        )),
        brute_force_optimum: optimum,
        max_cut: cut.best_value,
        evaluations: result.evaluations,
        trace: result
            .trace
            .iter()
            .map(|t| TraceRow {
                iter: t.iteration,
                beta: Sig(t.params.beta()),
                gamma: Sig(t.params.gamma()),
                estimate: Sig(t.estimate),
            })
            .collect(),
    };
    emit(cli.output.out.as_deref(), stdout, &json_bytes(&report)?)?;
    if let Some(path) = &args.trace {
        let bytes = csv_bytes(
            &["iter", "beta", "gamma", "estimate"],
            result.trace.iter().map(|t| {
                vec![
                    t.iteration.to_string(),
                    fmt_sig(t.params.beta()),
                    fmt_sig(t.params.gamma()),
                    fmt_sig(t.estimate),
                ]
            }),
        )?;
        fs::write(path, bytes).with_context(|| format!("writing {}", path.display()))?;
    }
    writeln!(
        stderr,
        "{}: best expectation {} at beta={} gamma={} | brute-force optimum {} (max cut {})",
        g.source,
        fmt_sig(result.best_expectation),
        fmt_sig(result.best_params.beta()),
        fmt_sig(result.best_params.gamma()),
        optimum,
        cut.best_value
    )?;
    Ok(())
}

fn graphs(cli: &Cli, stdout: &mut dyn Write) -> Result<()> {
    let format = format_or(cli, Format::Json, &[Format::Csv, Format::Json], "graphs")?;
    reject_optimizer_flags(cli, "graphs")?;
    let source = resolve_source(cli, true)?.unwrap_or(InputSource::AllFixtures);
    let graphs = match &source {
        InputSource::Graph6File { path, .. } if cli.input.record.is_none() => {
            let origin = path.display().to_string();
            read_graph6_file(path)?
                .into_iter()
                .map(|r| LabeledGraph::from_graph(None, format!("{origin}:{}", r.line), r.graph))
                .collect::<Result<Vec<_>>>()?
        }
        _ => load(&source)?,
    };
    let infos: Vec<GraphInfo> = graphs.iter().map(GraphInfo::from).collect();
    let bytes = match format {
        Format::Json => json_bytes(&infos)?,
        Format::Csv => csv_bytes(
            &["experiment", "source", "graph6", "n", "edgeCount"],
            infos.iter().map(|i| {
                vec![
                    i.experiment.map(|e| e.to_string()).unwrap_or_default(),
                    i.source.clone(),
                    i.graph6.clone(),
                    i.n.to_string(),
                    i.edges.len().to_string(),
                ]
            }),
        )?,
    };
    emit(cli.output.out.as_deref(), stdout, &bytes)
}
