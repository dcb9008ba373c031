use std::error::Error;
use std::fs;
use std::io::Write;
use std::path::Path;

use graphlim::graph::LabeledMultigraph;
use graphlim::graphon::StepGraphon;
use graphlim::reduce::BlockPartition;

pub type Failure = Box<dyn Error + Send + Sync>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()).into())
}

fn located<E: std::fmt::Display>(path: &Path) -> impl FnOnce(E) -> Failure + '_ {
    move |e| format!("{}: {e}", path.display()).into()
}

pub fn graph(path: &Path) -> Result<LabeledMultigraph, Failure> {
    read(path)?.parse().map_err(located(path))
}

/// A JSON graphon file, or a graph file read as the step graphon of its
/// adjacency matrix.
pub fn graphon(path: &Path) -> Result<StepGraphon, Failure> {
    let text = read(path)?;
    if text.trim_start().starts_with('{') {
        return StepGraphon::from_json(&text).map_err(located(path));
    }
    let g: LabeledMultigraph = text.parse().map_err(located(path))?;
    StepGraphon::from_graph(&g).map_err(located(path))
}

/// Whitespace-separated class ids, one per block.
pub fn partition(path: &Path) -> Result<BlockPartition, Failure> {
    let ids = read(path)?
        .split_whitespace()
        .map(str::parse::<usize>)
        .collect::<Result<Vec<_>, _>>()
        .map_err(located(path))?;
    BlockPartition::new(ids).map_err(located(path))
}

pub fn emit(target: Option<&Path>, text: &str) -> Result<(), Failure> {
    match target {
        Some(path) => fs::write(path, text).map_err(located(path)),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())?;
            out.flush()?;
            Ok(())
        }
    }
}
