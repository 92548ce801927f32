//! Vertex partitions, the equitable-partition test, colour refinement and
//! quotient matrices.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::linalg::IntMatrix;

/// Ordered list of disjoint, nonempty cells covering `0..universe`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    cells: Vec<Vec<usize>>,
    universe: usize,
}

impl Partition {
    /// Validates and builds a partition. Each cell is sorted; cell order is
    /// preserved.
    pub fn new(cells: Vec<Vec<usize>>, universe: usize) -> Result<Partition> {
        let mut seen = vec![false; universe];
        let mut cells = cells;
        for cell in &mut cells {
            if cell.is_empty() {
                return Err(Error::MalformedPartition("empty cell".into()));
            }
            cell.sort_unstable();
            for &v in cell.iter() {
                if v >= universe {
                    return Err(Error::MalformedPartition(format!(
                        "vertex {v} outside universe of {universe}"
                    )));
                }
                if std::mem::replace(&mut seen[v], true) {
                    return Err(Error::MalformedPartition(format!(
                        "vertex {v} in two cells"
                    )));
                }
            }
        }
        if let Some(v) = seen.iter().position(|s| !s) {
            return Err(Error::MalformedPartition(format!("vertex {v} not covered")));
        }
        Ok(Partition { cells, universe })
    }

    /// The one-cell partition (empty when `universe == 0`).
    pub fn unit(universe: usize) -> Partition {
        let cells = if universe == 0 {
            Vec::new()
        } else {
            vec![(0..universe).collect()]
        };
        Partition { cells, universe }
    }

    pub fn discrete(universe: usize) -> Partition {
        Partition {
            cells: (0..universe).map(|v| vec![v]).collect(),
            universe,
        }
    }

    pub fn cells(&self) -> &[Vec<usize>] {
        &self.cells
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn cell_sizes(&self) -> Vec<usize> {
        self.cells.iter().map(Vec::len).collect()
    }

    /// `cell_of()[v]` is the index of the cell holding `v`.
    pub fn cell_of(&self) -> Vec<usize> {
        let mut owner = vec![0; self.universe];
        for (c, cell) in self.cells.iter().enumerate() {
            for &v in cell {
                owner[v] = c;
            }
        }
        owner
    }

    /// True if every cell of `self` lies inside a cell of `coarser`.
    pub fn refines(&self, coarser: &Partition) -> bool {
        if self.universe != coarser.universe {
            return false;
        }
        let owner = coarser.cell_of();
        self.cells
            .iter()
            .all(|cell| cell.iter().all(|&v| owner[v] == owner[cell[0]]))
    }

    /// Same cells, listed in the order given by `order` (a permutation of
    /// cell indices).
    pub fn reordered(&self, order: &[usize]) -> Result<Partition> {
        let cells = order
            .iter()
            .map(|&k| {
                self.cells
                    .get(k)
                    .cloned()
                    .ok_or_else(|| Error::MalformedPartition(format!("no cell {k}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(cells, self.universe)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.cells).expect("nested usize arrays serialize")
    }

    pub fn from_json(json: &str, universe: usize) -> Result<Partition> {
        let cells: Vec<Vec<usize>> =
            serde_json::from_str(json).map_err(|e| Error::Parse(e.to_string()))?;
        Partition::new(cells, universe)
    }
}

impl Serialize for Partition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.cells.serialize(s)
    }
}

/// Outcome of [`is_equitable`]. On failure the witness holds two vertices
/// of one cell and the target cell where their neighbor counts differ.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct EquitableCheck {
    pub ok: bool,
    pub witness: Option<(usize, usize, usize)>,
}

fn check_universe(g: &Graph, pi: &Partition) -> Result<()> {
    if pi.universe() != g.vertex_count() {
        return Err(Error::MalformedPartition(format!(
            "partition covers {} vertices, graph has {}",
            pi.universe(),
            g.vertex_count()
        )));
    }
    Ok(())
}

fn counts_into_cells(g: &Graph, v: usize, owner: &[usize], cells: usize) -> Vec<usize> {
    let mut counts = vec![0; cells];
    for &w in g.neighbors(v) {
        counts[owner[w]] += 1;
    }
    counts
}

pub fn is_equitable(g: &Graph, pi: &Partition) -> Result<EquitableCheck> {
    check_universe(g, pi)?;
    let owner = pi.cell_of();
    for cell in pi.cells() {
        let reference = counts_into_cells(g, cell[0], &owner, pi.len());
        for &v in &cell[1..] {
            let counts = counts_into_cells(g, v, &owner, pi.len());
            if let Some(j) = (0..pi.len()).find(|&j| counts[j] != reference[j]) {
                return Ok(EquitableCheck {
                    ok: false,
                    witness: Some((cell[0], v, j)),
                });
            }
        }
    }
    Ok(EquitableCheck {
        ok: true,
        witness: None,
    })
}

/// Coarsest equitable partition refining `seed`.
///
/// Repeatedly splits the lowest-indexed cell whose vertices disagree on
/// their neighbor-count vector; the pieces replace it in place, ordered by
/// minimal vertex.
pub fn coarsest_equitable_refinement(g: &Graph, seed: &Partition) -> Result<Partition> {
    check_universe(g, seed)?;
    let mut cells: Vec<Vec<usize>> = seed.cells().to_vec();
    loop {
        let mut owner = vec![0; g.vertex_count()];
        for (c, cell) in cells.iter().enumerate() {
            for &v in cell {
                owner[v] = c;
            }
        }
        let split = cells.iter().enumerate().find_map(|(c, cell)| {
            let mut groups: Vec<(Vec<usize>, Vec<usize>)> = Vec::new();
            for &v in cell {
                let sig = counts_into_cells(g, v, &owner, cells.len());
                match groups.iter_mut().find(|(s, _)| *s == sig) {
                    Some((_, members)) => members.push(v),
                    None => groups.push((sig, vec![v])),
                }
            }
            // cells are sorted, so groups already appear by minimal vertex
            (groups.len() > 1).then(|| (c, groups.into_iter().map(|(_, m)| m).collect::<Vec<_>>()))
        });
        match split {
            Some((c, pieces)) => {
                cells.splice(c..=c, pieces);
            }
            None => return Partition::new(cells, g.vertex_count()),
        }
    }
}

/// Quotient matrix of an equitable partition together with its cell sizes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuotientMatrix {
    #[serde(rename = "cells")]
    pub cell_sizes: Vec<usize>,
    #[serde(rename = "p")]
    pub entries: Vec<Vec<usize>>,
}

impl QuotientMatrix {
    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn to_int_matrix(&self) -> IntMatrix {
        IntMatrix::from_rows(
            self.entries
                .iter()
                .map(|row| row.iter().map(|&x| x as i64).collect())
                .collect(),
        )
        .expect("quotient matrices are square")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("quotient matrix serializes")
    }
}

/// Quotient of `g` over `pi`; fails with the equitability witness if `pi`
/// is not equitable.
pub fn quotient_matrix(g: &Graph, pi: &Partition) -> Result<QuotientMatrix> {
    let check = is_equitable(g, pi)?;
    if let Some((first, second, cell)) = check.witness {
        return Err(Error::NotEquitable {
            first,
            second,
            cell,
        });
    }
    let owner = pi.cell_of();
    let entries = pi
        .cells()
        .iter()
        .map(|cell| counts_into_cells(g, cell[0], &owner, pi.len()))
        .collect();
    Ok(QuotientMatrix {
        cell_sizes: pi.cell_sizes(),
        entries,
    })
}
