//! Graph sources: fixtures, graph6 literals and graph6 dataset files.

use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use maxcut_qaoa_core::{encode_graph6, fixture_graph, parse_graph6, Graph, FIXTURE_IDS};

/// Where a command's graph comes from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InputSource {
    /// One of the built-in experiment graphs.
    Fixture(u32),
    /// A graph6 record given on the command line.
    Graph6(String),
    /// Record `record` (0-based, blank lines skipped) of a graph6 file.
    Graph6File { path: PathBuf, record: usize },
    /// All built-in experiment graphs.
    AllFixtures,
}

/// A graph with the labels reports carry alongside it.
#[derive(Debug, Clone)]
pub struct LabeledGraph {
    pub experiment: Option<u32>,
    pub source: String,
    pub graph6: String,
    pub graph: Graph,
}

impl LabeledGraph {
    pub fn from_graph(experiment: Option<u32>, source: String, graph: Graph) -> Result<Self> {
        let graph6 = encode_graph6(&graph)?;
        Ok(Self {
            experiment,
            source,
            graph6,
            graph,
        })
    }

    pub fn fixture(id: u32) -> Result<Self> {
        Self::from_graph(Some(id), format!("exp-{id}"), fixture_graph(id)?)
    }
}

/// One record of a graph6 file with its 1-based line number.
#[derive(Debug, Clone)]
pub struct Graph6Record {
    pub line: usize,
    pub graph: Graph,
}

/// Parses every non-blank line of a graph6 file. A `>>graph6<<` header on
/// any line is stripped.
pub fn read_graph6_file(path: &Path) -> Result<Vec<Graph6Record>> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_graph6_lines(&text, &path.display().to_string())
}

pub fn parse_graph6_lines(text: &str, origin: &str) -> Result<Vec<Graph6Record>> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| {
            let graph = parse_graph6(l).with_context(|| format!("{origin}:{}", i + 1))?;
            Ok(Graph6Record { line: i + 1, graph })
        })
        .collect()
}

/// Resolves a source into labeled graphs.
pub fn load(source: &InputSource) -> Result<Vec<LabeledGraph>> {
    match source {
        InputSource::Fixture(id) => Ok(vec![LabeledGraph::fixture(*id)?]),
        InputSource::AllFixtures => FIXTURE_IDS
            .iter()
            .map(|&id| LabeledGraph::fixture(id))
            .collect(),
        InputSource::Graph6(text) => {
            let g = parse_graph6(text).with_context(|| format!("graph6 literal {text:?}"))?;
            Ok(vec![LabeledGraph::from_graph(
                None,
                format!("graph6:{}", text.trim()),
                g,
            )?])
        }
        InputSource::Graph6File { path, record } => {
            let records = read_graph6_file(path)?;
            let Some(r) = records.get(*record) else {
                bail!(
                    "{} has {} records; record {record} requested",
                    path.display(),
                    records.len()
                );
            };
            Ok(vec![LabeledGraph::from_graph(
                None,
                format!("{}:{}", path.display(), r.line),
                r.graph.clone(),
            )?])
        }
    }
}
