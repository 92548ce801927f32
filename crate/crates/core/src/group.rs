//! Permutations, lifting ground-set permutations to `L(n)`, and orbit
//! partitions of groups given by generators.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{l_index, Graph};
use crate::partition::Partition;

/// A bijection on `0..degree`; `images[k]` is the image of `k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Permutation> {
        let mut hit = vec![false; images.len()];
        for &x in &images {
            if x >= images.len() || std::mem::replace(&mut hit[x], true) {
                return Err(Error::InvalidPermutation(format!(
                    "{images:?} is not a bijection"
                )));
            }
        }
        Ok(Permutation { images })
    }

    pub fn identity(degree: usize) -> Permutation {
        Permutation {
            images: (0..degree).collect(),
        }
    }

    /// Builds a permutation of `0..degree` from 1-based cycles.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Permutation> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut used = vec![false; degree];
        for cycle in cycles {
            for (k, &p) in cycle.iter().enumerate() {
                if p == 0 || p > degree {
                    return Err(Error::InvalidPermutation(format!(
                        "point {p} outside 1..={degree}"
                    )));
                }
                if std::mem::replace(&mut used[p - 1], true) {
                    return Err(Error::InvalidPermutation(format!("point {p} repeated")));
                }
                images[p - 1] = cycle[(k + 1) % cycle.len()] - 1;
            }
        }
        Ok(Permutation { images })
    }

    /// Parses 1-based cycle notation such as `"(2 3)(4 5)"`; `"()"` is the
    /// identity.
    pub fn parse_cycles(text: &str, degree: usize) -> Result<Permutation> {
        let bad = || Error::Parse(format!("bad cycle notation {text:?}"));
        let mut cycles = Vec::new();
        let mut rest = text.trim();
        while !rest.is_empty() {
            let body = rest.strip_prefix('(').ok_or_else(bad)?;
            let close = body.find(')').ok_or_else(bad)?;
            let points = body[..close]
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|t| !t.is_empty())
                .map(|t| t.parse::<usize>().map_err(|_| bad()))
                .collect::<Result<Vec<_>>>()?;
            if !points.is_empty() {
                cycles.push(points);
            }
            rest = body[close + 1..].trim_start();
        }
        Permutation::from_cycles(degree, &cycles)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, k: usize) -> usize {
        self.images[k]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(k, &x)| k == x)
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.images.len()];
        for (k, &x) in self.images.iter().enumerate() {
            inv[x] = k;
        }
        Permutation { images: inv }
    }

    /// Nontrivial cycles, each starting at its smallest point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] || self.images[start] == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut k = start;
            while !seen[k] {
                seen[k] = true;
                cycle.push(k);
                k = self.images[k];
            }
            out.push(cycle);
        }
        out
    }
}

impl fmt::Display for Permutation {
    /// 1-based cycle notation.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for cycle in cycles {
            let parts: Vec<String> = cycle.iter().map(|k| (k + 1).to_string()).collect();
            write!(f, "({})", parts.join(" "))?;
        }
        Ok(())
    }
}

/// `p ∘ q`: the permutation `k ↦ p(q(k))`.
pub fn compose(p: &Permutation, q: &Permutation) -> Result<Permutation> {
    if p.degree() != q.degree() {
        return Err(Error::DegreeMismatch {
            expected: p.degree(),
            actual: q.degree(),
        });
    }
    Ok(Permutation {
        images: q.images.iter().map(|&k| p.images[k]).collect(),
    })
}

/// Generators of a permutation group of a fixed degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorSet {
    degree: usize,
    generators: Vec<Permutation>,
}

impl GeneratorSet {
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<GeneratorSet> {
        if let Some(g) = generators.iter().find(|g| g.degree() != degree) {
            return Err(Error::DegreeMismatch {
                expected: degree,
                actual: g.degree(),
            });
        }
        Ok(GeneratorSet { degree, generators })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }
}

/// Sends `[i,ij]` to `[θ(i), θ(i)θ(j)]` on the vertices of `l_graph(n)`.
pub fn lift_to_l_graph(theta: &Permutation, n: usize) -> Result<Permutation> {
    if n < 3 {
        return Err(Error::Domain(format!("L(n) needs n >= 3, got {n}")));
    }
    if theta.degree() != n {
        return Err(Error::DegreeMismatch {
            expected: n,
            actual: theta.degree(),
        });
    }
    let mut images = vec![0; n * (n - 1)];
    for i in 1..=n {
        for j in (1..=n).filter(|&j| j != i) {
            let (ti, tj) = (theta.apply(i - 1) + 1, theta.apply(j - 1) + 1);
            images[l_index(n, i, j)] = l_index(n, ti, tj);
        }
    }
    Ok(Permutation { images })
}

/// True iff `p` maps edges of `g` onto edges (and hence non-edges onto
/// non-edges, being a bijection).
pub fn is_automorphism(g: &Graph, p: &Permutation) -> Result<bool> {
    if p.degree() != g.vertex_count() {
        return Err(Error::DegreeMismatch {
            expected: g.vertex_count(),
            actual: p.degree(),
        });
    }
    Ok(g.edges().all(|(u, v)| g.has_edge(p.apply(u), p.apply(v))))
}

struct DisjointSets {
    parent: Vec<usize>,
}

impl DisjointSets {
    fn new(n: usize) -> Self {
        DisjointSets {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    // keeps the smaller index as root
    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }
}

/// Orbits of the group generated by `gens`, ordered by minimal member.
///
/// Orbits of `⟨S⟩` are the connected components of the union of the
/// generators' functional graphs, so a union-find pass suffices.
pub fn orbit_partition(gens: &GeneratorSet) -> Partition {
    let mut sets = DisjointSets::new(gens.degree());
    for g in gens.generators() {
        for (k, &x) in g.images().iter().enumerate() {
            sets.union(k, x);
        }
    }
    let mut slot = vec![usize::MAX; gens.degree()];
    let mut cells: Vec<Vec<usize>> = Vec::new();
    for v in 0..gens.degree() {
        let root = sets.find(v);
        if slot[root] == usize::MAX {
            slot[root] = cells.len();
            cells.push(Vec::new());
        }
        cells[slot[root]].push(v);
    }
    Partition::new(cells, gens.degree()).expect("union-find classes form a partition")
}

/// Adjacent transpositions of the points of `[n]` outside `fixed`, lifted
/// to `l_graph(n)`. They generate the lifted pointwise stabilizer of
/// `fixed`.
pub fn stabilizer_generators(n: usize, fixed: &[usize]) -> Result<GeneratorSet> {
    if n < 3 {
        return Err(Error::Domain(format!("L(n) needs n >= 3, got {n}")));
    }
    if let Some(&p) = fixed.iter().find(|&&p| p == 0 || p > n) {
        return Err(Error::Domain(format!("fixed point {p} outside 1..={n}")));
    }
    let free: Vec<usize> = (1..=n).filter(|p| !fixed.contains(p)).collect();
    let generators = free
        .windows(2)
        .map(|w| {
            let theta = Permutation::from_cycles(n, &[vec![w[0], w[1]]])?;
            lift_to_l_graph(&theta, n)
        })
        .collect::<Result<Vec<_>>>()?;
    GeneratorSet::new(n * (n - 1), generators)
}
