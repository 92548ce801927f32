use std::path::{Path, PathBuf};
use std::str::FromStr;

use anyhow::{bail, Context, Result};
use hyperlayer::{h_graph, hypercube, l_graph, layer_graph, Graph};

/// Graph selector given on the command line as `family:params`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphSpec {
    Hypercube(usize),
    Layer { n: usize, layer: usize },
    H(usize),
    L(usize),
    File(PathBuf),
}

fn parse_int(s: &str) -> Result<usize> {
    s.trim()
        .parse()
        .with_context(|| format!("expected a non-negative integer, got {s:?}"))
}

impl FromStr for GraphSpec {
    type Err = anyhow::Error;

    fn from_str(s: &str) -> Result<GraphSpec> {
        let Some((family, params)) = s.split_once(':') else {
            bail!("graph spec {s:?} is not of the form family:params");
        };
        Ok(match family {
            "q" => GraphSpec::Hypercube(parse_int(params)?),
            "q-layer" => {
                let Some((n, layer)) = params.split_once(',') else {
                    bail!("q-layer expects n,i");
                };
                GraphSpec::Layer {
                    n: parse_int(n)?,
                    layer: parse_int(layer)?,
                }
            }
            "h" => GraphSpec::H(parse_int(params)?),
            "l" => GraphSpec::L(parse_int(params)?),
            "file" if !params.is_empty() => GraphSpec::File(PathBuf::from(params)),
            _ => bail!("unknown graph family {family:?} (expected q, q-layer, h, l or file)"),
        })
    }
}

/// Sidecar path holding vertex labels for an edge-list file.
pub fn labels_path(edge_list: &Path) -> PathBuf {
    let mut name = edge_list.as_os_str().to_owned();
    name.push(".labels.json");
    PathBuf::from(name)
}

impl GraphSpec {
    pub fn build(&self) -> Result<Graph> {
        Ok(match self {
            GraphSpec::Hypercube(n) => hypercube(*n)?,
            GraphSpec::Layer { n, layer } => layer_graph(*n, *layer)?,
            GraphSpec::H(n) => h_graph(*n)?,
            GraphSpec::L(n) => l_graph(*n)?,
            GraphSpec::File(path) => {
                let text = std::fs::read_to_string(path)
                    .with_context(|| format!("reading {}", path.display()))?;
                let graph = Graph::from_edge_list(&text)?;
                let sidecar = labels_path(path);
                if sidecar.exists() {
                    let json = std::fs::read_to_string(&sidecar)
                        .with_context(|| format!("reading {}", sidecar.display()))?;
                    graph.with_labels_json(&json)?
                } else {
                    graph
                }
            }
        })
    }

    /// Ground-set size when the graph is `L(n)`.
    pub fn l_order(&self) -> Option<usize> {
        match self {
            GraphSpec::L(n) => Some(*n),
            _ => None,
        }
    }
}

/// Parses a comma-separated list of 1-based ground points. `∅`, `none`
/// and the empty string all mean no fixed points.
pub fn parse_fix(s: &str) -> Result<Vec<usize>> {
    let s = s.trim();
    if s.is_empty() || s == "∅" || s.eq_ignore_ascii_case("none") || s == "{}" {
        return Ok(Vec::new());
    }
    s.trim_matches(|c| c == '{' || c == '}')
        .split(',')
        .map(parse_int)
        .collect()
}

pub fn parse_pair(s: &str) -> Result<(usize, usize)> {
    let Some((u, v)) = s.split_once(',') else {
        bail!("expected u,v");
    };
    Ok((parse_int(u)?, parse_int(v)?))
}
