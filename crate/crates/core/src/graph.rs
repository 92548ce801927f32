//! Undirected simple graphs and the hypercube-layer families built on them.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Largest hypercube dimension [`hypercube`] will build.
pub const MAX_HYPERCUBE_DIM: usize = 20;

/// Vertex label for the named graph families.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    /// Coordinates of a hypercube vertex, most significant first.
    BitString(Vec<bool>),
    /// A one- or two-element subset of the 1-based ground set.
    SubsetPair(Vec<usize>),
    /// The line-graph vertex `[i,ij]`: the edge joining `{i}` to `{i,j}`.
    EdgeLabel { single: usize, other: usize },
}

impl Label {
    pub fn subset(elems: &[usize]) -> Label {
        let mut v = elems.to_vec();
        v.sort_unstable();
        Label::SubsetPair(v)
    }

    pub fn edge(single: usize, other: usize) -> Label {
        Label::EdgeLabel { single, other }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::BitString(bits) => {
                for &b in bits {
                    f.write_str(if b { "1" } else { "0" })?;
                }
                Ok(())
            }
            Label::SubsetPair(set) => {
                let parts: Vec<String> = set.iter().map(|e| e.to_string()).collect();
                write!(f, "{{{}}}", parts.join(","))
            }
            Label::EdgeLabel { single, other } => {
                if *single < 10 && *other < 10 {
                    write!(f, "[{single},{single}{other}]")
                } else {
                    // multi-digit ground points need a separator to stay unambiguous
                    write!(f, "[{single},{single}-{other}]")
                }
            }
        }
    }
}

impl FromStr for Label {
    type Err = Error;

    fn from_str(s: &str) -> Result<Label> {
        let s = s.trim();
        let bad = || Error::Parse(format!("unrecognized label {s:?}"));
        if let Some(inner) = s.strip_prefix('{').and_then(|r| r.strip_suffix('}')) {
            let elems = inner
                .split(',')
                .map(|p| p.trim().parse::<usize>().map_err(|_| bad()))
                .collect::<Result<Vec<_>>>()?;
            if elems.is_empty() || elems.len() > 2 || elems.contains(&0) {
                return Err(bad());
            }
            return Ok(Label::subset(&elems));
        }
        if let Some(inner) = s.strip_prefix('[').and_then(|r| r.strip_suffix(']')) {
            let (first, pair) = inner.split_once(',').ok_or_else(bad)?;
            let single: usize = first.trim().parse().map_err(|_| bad())?;
            let pair = pair.trim();
            let (a, b) = match pair.split_once('-') {
                Some((a, b)) => (a.to_string(), b.to_string()),
                None if pair.len() == 2 => (pair[..1].to_string(), pair[1..].to_string()),
                None => return Err(bad()),
            };
            let a: usize = a.parse().map_err(|_| bad())?;
            let b: usize = b.parse().map_err(|_| bad())?;
            let other = if a == single {
                b
            } else if b == single {
                a
            } else {
                return Err(bad());
            };
            if single == other || single == 0 || other == 0 {
                return Err(bad());
            }
            return Ok(Label::edge(single, other));
        }
        if !s.is_empty() && s.chars().all(|c| c == '0' || c == '1') {
            return Ok(Label::BitString(s.chars().map(|c| c == '1').collect()));
        }
        Err(bad())
    }
}

/// Immutable undirected simple graph with sorted adjacency lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    labels: Option<Vec<Label>>,
}

impl Graph {
    /// Builds a graph from an edge list; rejects loops, duplicates and
    /// out-of-range endpoints.
    pub fn from_edges(vertex_count: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut adjacency = vec![Vec::new(); vertex_count];
        for &(u, v) in edges {
            if u >= vertex_count || v >= vertex_count {
                return Err(Error::MalformedGraph(format!(
                    "edge ({u},{v}) out of range for {vertex_count} vertices"
                )));
            }
            if u == v {
                return Err(Error::MalformedGraph(format!("self-loop at {u}")));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for (v, nbrs) in adjacency.iter_mut().enumerate() {
            nbrs.sort_unstable();
            if nbrs.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::MalformedGraph(format!(
                    "duplicate edge at vertex {v}"
                )));
            }
        }
        Ok(Graph {
            adjacency,
            labels: None,
        })
    }

    // Adjacency must already be symmetric, sorted and loop-free.
    fn from_sorted_adjacency(adjacency: Vec<Vec<usize>>, labels: Option<Vec<Label>>) -> Graph {
        debug_assert!(adjacency.iter().all(|n| n.windows(2).all(|w| w[0] < w[1])));
        Graph { adjacency, labels }
    }

    /// Attaches vertex labels, which must be pairwise distinct.
    pub fn with_labels(mut self, labels: Vec<Label>) -> Result<Graph> {
        if labels.len() != self.vertex_count() {
            return Err(Error::MalformedGraph(format!(
                "{} labels for {} vertices",
                labels.len(),
                self.vertex_count()
            )));
        }
        let distinct: BTreeSet<&Label> = labels.iter().collect();
        if distinct.len() != labels.len() {
            return Err(Error::MalformedGraph("labels are not distinct".into()));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.vertex_count() && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency.iter().enumerate().flat_map(|(u, nbrs)| {
            nbrs.iter()
                .copied()
                .filter(move |&v| u < v)
                .map(move |v| (u, v))
        })
    }

    pub fn labels(&self) -> Option<&[Label]> {
        self.labels.as_deref()
    }

    pub fn label(&self, v: usize) -> Option<&Label> {
        self.labels.as_ref().map(|l| &l[v])
    }

    /// Index of the vertex carrying `label`, if labelled.
    pub fn find_label(&self, label: &Label) -> Option<usize> {
        self.labels.as_ref()?.iter().position(|l| l == label)
    }

    /// Subgraph induced by `vertices`, renumbered in the given order.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<Graph> {
        let mut position = HashMap::with_capacity(vertices.len());
        for (k, &v) in vertices.iter().enumerate() {
            if v >= self.vertex_count() {
                return Err(Error::MalformedGraph(format!("vertex {v} out of range")));
            }
            if position.insert(v, k).is_some() {
                return Err(Error::MalformedGraph(format!("vertex {v} repeated")));
            }
        }
        let adjacency = vertices
            .iter()
            .map(|&v| {
                let mut nbrs: Vec<usize> = self.adjacency[v]
                    .iter()
                    .filter_map(|w| position.get(w).copied())
                    .collect();
                nbrs.sort_unstable();
                nbrs
            })
            .collect();
        let labels = self
            .labels
            .as_ref()
            .map(|l| vertices.iter().map(|&v| l[v].clone()).collect());
        Ok(Graph::from_sorted_adjacency(adjacency, labels))
    }

    /// Copy of the graph with the edge `{u, v}` added if absent or removed
    /// if present.
    pub fn toggle_edge(&self, u: usize, v: usize) -> Result<Graph> {
        let n = self.vertex_count();
        if u >= n || v >= n || u == v {
            return Err(Error::MalformedGraph(format!(
                "cannot toggle edge ({u},{v})"
            )));
        }
        let mut adjacency = self.adjacency.clone();
        for (a, b) in [(u, v), (v, u)] {
            match adjacency[a].binary_search(&b) {
                Ok(pos) => {
                    adjacency[a].remove(pos);
                }
                Err(pos) => adjacency[a].insert(pos, b),
            }
        }
        Ok(Graph::from_sorted_adjacency(adjacency, self.labels.clone()))
    }

    /// Renders the `p <vertices> <edges>` / `e u v` edge-list text format.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("p {} {}\n", self.vertex_count(), self.edge_count());
        for (u, v) in self.edges() {
            out.push_str(&format!("e {u} {v}\n"));
        }
        out
    }

    /// Parses the edge-list text format. Blank lines and lines starting
    /// with `c` are ignored.
    pub fn from_edge_list(text: &str) -> Result<Graph> {
        let mut header: Option<(usize, usize)> = None;
        let mut edges = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('c') {
                continue;
            }
            let bad = || Error::Parse(format!("line {}: {line:?}", lineno + 1));
            let fields: Vec<&str> = line.split_whitespace().collect();
            match fields.as_slice() {
                ["p", v, e] if header.is_none() => {
                    header = Some((v.parse().map_err(|_| bad())?, e.parse().map_err(|_| bad())?));
                }
                ["e", u, v] if header.is_some() => {
                    edges.push((u.parse().map_err(|_| bad())?, v.parse().map_err(|_| bad())?));
                }
                _ => return Err(bad()),
            }
        }
        let (vertex_count, edge_count) =
            header.ok_or_else(|| Error::Parse("missing 'p' header".into()))?;
        if edges.len() != edge_count {
            return Err(Error::Parse(format!(
                "header declares {edge_count} edges, found {}",
                edges.len()
            )));
        }
        Graph::from_edges(vertex_count, &edges)
    }

    /// Label sidecar: JSON array of label strings indexed by vertex.
    pub fn labels_json(&self) -> Option<String> {
        let strings: Vec<String> = self
            .labels
            .as_ref()?
            .iter()
            .map(|l| l.to_string())
            .collect();
        Some(serde_json::to_string(&strings).expect("string array serializes"))
    }

    /// Attaches labels read from a JSON sidecar.
    pub fn with_labels_json(self, json: &str) -> Result<Graph> {
        let strings: Vec<String> =
            serde_json::from_str(json).map_err(|e| Error::Parse(e.to_string()))?;
        let labels = strings
            .iter()
            .map(|s| s.parse())
            .collect::<Result<Vec<Label>>>()?;
        self.with_labels(labels)
    }
}

fn bits_of(value: usize, n: usize) -> Vec<bool> {
    (0..n).map(|k| value >> (n - 1 - k) & 1 == 1).collect()
}

/// The hypercube `Q_n`, vertices ordered by the integer value of their bit
/// string.
pub fn hypercube(n: usize) -> Result<Graph> {
    if !(1..=MAX_HYPERCUBE_DIM).contains(&n) {
        return Err(Error::SizeLimit {
            what: "hypercube dimension",
            value: n,
            min: 1,
            max: MAX_HYPERCUBE_DIM,
        });
    }
    let count = 1usize << n;
    let adjacency = (0..count)
        .map(|v| {
            let mut nbrs: Vec<usize> = (0..n).map(|b| v ^ (1 << b)).collect();
            nbrs.sort_unstable();
            nbrs
        })
        .collect();
    let labels = (0..count)
        .map(|v| Label::BitString(bits_of(v, n)))
        .collect();
    Ok(Graph::from_sorted_adjacency(adjacency, Some(labels)))
}

// k-subsets of 0..n in lexicographic order.
fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in start..n {
            cur.push(x);
            go(x + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Subgraph of `Q_n` induced by the weight-`layer` and weight-`layer + 1`
/// strings. Within each layer vertices follow the lexicographic order of
/// their support sets, so coordinate `k` (1-based, from the left) plays
/// the role of ground element `k`.
pub fn layer_graph(n: usize, layer: usize) -> Result<Graph> {
    if n == 0 || n > MAX_HYPERCUBE_DIM {
        return Err(Error::SizeLimit {
            what: "hypercube dimension",
            value: n,
            min: 1,
            max: MAX_HYPERCUBE_DIM,
        });
    }
    if layer >= n {
        return Err(Error::InvalidLayer { n, layer });
    }
    let lower = subsets(n, layer);
    let upper = subsets(n, layer + 1);
    let upper_index: HashMap<&[usize], usize> = upper
        .iter()
        .enumerate()
        .map(|(k, s)| (s.as_slice(), lower.len() + k))
        .collect();
    let mut edges = Vec::new();
    for (a, set) in lower.iter().enumerate() {
        for x in (0..n).filter(|x| !set.contains(x)) {
            let mut bigger = set.clone();
            bigger.push(x);
            bigger.sort_unstable();
            edges.push((a, upper_index[bigger.as_slice()]));
        }
    }
    let labels = lower
        .iter()
        .chain(upper.iter())
        .map(|set| Label::BitString((0..n).map(|k| set.contains(&k)).collect()))
        .collect();
    Graph::from_edges(lower.len() + upper.len(), &edges)?.with_labels(labels)
}

/// Index of the 2-set `{a, b}` (1-based, `a < b`) among the 2-set vertices
/// of `H(n)`, offset past the `n` singletons.
fn pair_index(n: usize, a: usize, b: usize) -> usize {
    debug_assert!(1 <= a && a < b && b <= n);
    // pairs starting with 1..a-1 come first
    let before: usize = (1..a).map(|x| n - x).sum();
    n + before + (b - a - 1)
}

/// `H(n)`: singletons and 2-subsets of `[n]` joined by containment.
/// Singletons come first in ascending order, then 2-sets lexicographically.
pub fn h_graph(n: usize) -> Result<Graph> {
    if n < 2 {
        return Err(Error::Domain(format!("H(n) needs n >= 2, got {n}")));
    }
    let mut labels: Vec<Label> = (1..=n).map(|i| Label::subset(&[i])).collect();
    let mut edges = Vec::with_capacity(n * (n - 1));
    for a in 1..=n {
        for b in a + 1..=n {
            let idx = pair_index(n, a, b);
            debug_assert_eq!(idx, labels.len());
            labels.push(Label::subset(&[a, b]));
            edges.push((a - 1, idx));
            edges.push((b - 1, idx));
        }
    }
    Graph::from_edges(labels.len(), &edges)?.with_labels(labels)
}

/// Line graph: one vertex per edge of `g` (in [`Graph::edges`] order), two
/// adjacent when the edges share an endpoint.
pub fn line_graph(g: &Graph) -> Graph {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); g.vertex_count()];
    for (k, &(u, v)) in edges.iter().enumerate() {
        incident[u].push(k);
        incident[v].push(k);
    }
    let mut adjacency: Vec<Vec<usize>> = vec![Vec::new(); edges.len()];
    for inc in &incident {
        for (x, &e) in inc.iter().enumerate() {
            for &f in &inc[x + 1..] {
                adjacency[e].push(f);
                adjacency[f].push(e);
            }
        }
    }
    for nbrs in &mut adjacency {
        nbrs.sort_unstable();
    }
    Graph::from_sorted_adjacency(adjacency, None)
}

/// Index of the vertex `[i,ij]` in [`l_graph`]`(n)`; `i`, `j` are 1-based.
pub fn l_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i != j && (1..=n).contains(&i) && (1..=n).contains(&j));
    (i - 1) * (n - 1) + if j < i { j - 1 } else { j - 2 }
}

/// `L(n)`, the line graph of `H(n)`, built directly: `[i,ij]` is adjacent
/// to every `[i,ik]` and to `[j,ij]`.
pub fn l_graph(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::Domain(format!("L(n) needs n >= 3, got {n}")));
    }
    let mut labels = Vec::with_capacity(n * (n - 1));
    let mut adjacency = Vec::with_capacity(n * (n - 1));
    for i in 1..=n {
        for j in (1..=n).filter(|&j| j != i) {
            debug_assert_eq!(l_index(n, i, j), labels.len());
            labels.push(Label::edge(i, j));
            let mut nbrs: Vec<usize> = (1..=n)
                .filter(|&k| k != i && k != j)
                .map(|k| l_index(n, i, k))
                .collect();
            nbrs.push(l_index(n, j, i));
            nbrs.sort_unstable();
            adjacency.push(nbrs);
        }
    }
    Ok(Graph::from_sorted_adjacency(adjacency, Some(labels)))
}

/// Checks that sending each edge `{{i}, {i,j}}` of `H(n)` to `[i,ij]` is an
/// isomorphism from `line_graph(h_graph(n))` onto `l_graph(n)`.
pub fn natural_line_map_check(n: usize) -> Result<bool> {
    let h = h_graph(n)?;
    let l = l_graph(n)?;
    Ok(natural_line_map_agrees(&h, &l))
}

/// The natural-map comparison against a supplied `L(n)` candidate.
pub fn natural_line_map_agrees(h: &Graph, l: &Graph) -> bool {
    let lg = line_graph(h);
    if lg.vertex_count() != l.vertex_count() || lg.edge_count() != l.edge_count() {
        return false;
    }
    let mut map = Vec::with_capacity(lg.vertex_count());
    for (u, v) in h.edges() {
        let (Some(Label::SubsetPair(small)), Some(Label::SubsetPair(big))) =
            (h.label(u), h.label(v))
        else {
            return false;
        };
        if small.len() != 1 || big.len() != 2 || !big.contains(&small[0]) {
            return false;
        }
        let single = small[0];
        let other = if big[0] == single { big[1] } else { big[0] };
        match l.find_label(&Label::edge(single, other)) {
            Some(idx) => map.push(idx),
            None => return false,
        }
    }
    let mut seen = vec![false; l.vertex_count()];
    for &m in &map {
        if std::mem::replace(&mut seen[m], true) {
            return false;
        }
    }
    let preserved = lg.edges().all(|(a, b)| l.has_edge(map[a], map[b]));
    preserved
}
