//! Degree, bipartiteness, diameter and girth.

use std::collections::VecDeque;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::exec::Execution;
use crate::graph::Graph;

/// A path or cycle length that may not exist.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Extent {
    Finite(usize),
    /// Disconnected graph (diameter) or forest (girth).
    Infinite,
}

impl Extent {
    pub fn finite(self) -> Option<usize> {
        match self {
            Extent::Finite(k) => Some(k),
            Extent::Infinite => None,
        }
    }
}

impl fmt::Display for Extent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Extent::Finite(k) => write!(f, "{k}"),
            Extent::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for Extent {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Extent::Finite(k) => s.serialize_u64(*k as u64),
            Extent::Infinite => s.serialize_str("inf"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Metrics {
    pub degrees: Vec<usize>,
    pub is_regular: bool,
    pub is_bipartite: bool,
    pub is_connected: bool,
    pub diameter: Extent,
    pub girth: Extent,
}

/// Result of one breadth-first search: eccentricity of the root (None if
/// some vertex is unreachable) and the shortest cycle seen through it.
struct RootScan {
    eccentricity: Option<usize>,
    shortest_cycle: Option<usize>,
}

fn scan_from(g: &Graph, root: usize) -> RootScan {
    let n = g.vertex_count();
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    dist[root] = 0;
    queue.push_back(root);
    let mut reached = 1;
    let mut far = 0;
    let mut shortest: Option<usize> = None;
    while let Some(u) = queue.pop_front() {
        far = far.max(dist[u]);
        for &w in g.neighbors(u) {
            if dist[w] == usize::MAX {
                dist[w] = dist[u] + 1;
                parent[w] = u;
                reached += 1;
                queue.push_back(w);
            } else if parent[u] != w {
                // non-tree edge closes a cycle through the root's BFS tree
                let len = dist[u] + dist[w] + 1;
                shortest = Some(shortest.map_or(len, |s| s.min(len)));
            }
        }
    }
    RootScan {
        eccentricity: (reached == n).then_some(far),
        shortest_cycle: shortest,
    }
}

pub fn is_bipartite(g: &Graph) -> bool {
    let n = g.vertex_count();
    let mut color: Vec<Option<bool>> = vec![None; n];
    let mut queue = VecDeque::new();
    for start in 0..n {
        if color[start].is_some() {
            continue;
        }
        color[start] = Some(false);
        queue.push_back(start);
        while let Some(u) = queue.pop_front() {
            let cu = color[u].unwrap();
            for &w in g.neighbors(u) {
                match color[w] {
                    None => {
                        color[w] = Some(!cu);
                        queue.push_back(w);
                    }
                    Some(cw) if cw == cu => return false,
                    Some(_) => {}
                }
            }
        }
    }
    true
}

pub fn metrics(g: &Graph) -> Metrics {
    metrics_with(g, Execution::default())
}

/// [`metrics`] with an explicit schedule for the per-root searches.
pub fn metrics_with(g: &Graph, exec: Execution) -> Metrics {
    let degrees = g.degrees();
    let is_regular = degrees.windows(2).all(|w| w[0] == w[1]);
    let scans = exec.map_indexed(g.vertex_count(), |v| scan_from(g, v));
    let is_connected = scans.iter().all(|s| s.eccentricity.is_some());
    let diameter = if is_connected {
        Extent::Finite(
            scans
                .iter()
                .filter_map(|s| s.eccentricity)
                .max()
                .unwrap_or(0),
        )
    } else {
        Extent::Infinite
    };
    let girth = scans
        .iter()
        .filter_map(|s| s.shortest_cycle)
        .min()
        .map_or(Extent::Infinite, Extent::Finite);
    Metrics {
        degrees,
        is_regular,
        is_bipartite: is_bipartite(g),
        is_connected,
        diameter,
        girth,
    }
}
