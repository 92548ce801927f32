//! Runnable checks of the structural and spectral claims about `H(n)` and
//! `L(n)`, reported as JSON-serializable data.

use std::collections::BTreeSet;
use std::ops::RangeInclusive;
use std::sync::OnceLock;

use num_bigint::BigInt;
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::graph::{h_graph, l_graph, natural_line_map_agrees, Graph, Label};
use crate::group::{is_automorphism, orbit_partition, stabilizer_generators};
use crate::linalg::{
    char_poly, divides, quotient_spectrum, spectrum_with, IntPolynomial, SpectrumReport,
};
use crate::metrics::{metrics_with, Extent};
use crate::partition::{quotient_matrix, Partition, QuotientMatrix};

/// Smallest `n` the claims cover.
pub const MIN_N: usize = 4;
/// Default upper end of a sweep.
pub const DEFAULT_CAP: usize = 12;

/// The six-vertex set `[1,12] [1,13] [3,13] [3,32] [2,32] [2,21]`.
pub const HEXAGON: [(usize, usize); 6] = [(1, 2), (1, 3), (3, 1), (3, 2), (2, 3), (2, 1)];

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub paper_ref: String,
    pub pass: bool,
    pub details: Value,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub n: usize,
    pub checks: Vec<Check>,
    pub overall: bool,
}

impl VerificationReport {
    fn new(n: usize, checks: Vec<Check>) -> Self {
        let overall = checks.iter().all(|c| c.pass);
        VerificationReport { n, checks, overall }
    }

    /// Concatenates the checks of several reports for the same `n`.
    pub fn merge(n: usize, reports: impl IntoIterator<Item = VerificationReport>) -> Self {
        VerificationReport::new(n, reports.into_iter().flat_map(|r| r.checks).collect())
    }

    pub fn failed(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

fn check(name: &str, anchor: &str, pass: bool, details: Value) -> Check {
    Check {
        name: name.to_string(),
        paper_ref: anchor.to_string(),
        pass,
        details,
    }
}

fn failed_check(name: &str, anchor: &str, err: impl std::fmt::Display) -> Check {
    check(name, anchor, false, json!({ "error": err.to_string() }))
}

/// Membership predicates on `[i,ij]` for the three orbits of the stabilizer
/// of 1, in the order `{[1,1i]}`, `{[i,1i]}`, `{[i,ij] : i,j >= 2}`.
pub const THREE_CELL_PREDICATES: [fn(usize, usize) -> bool; 3] =
    [|i, _| i == 1, |_, j| j == 1, |i, j| i >= 2 && j >= 2];

/// Membership predicates for the seven orbits of the stabilizer of 1 and 2:
/// `[1,12]`, `[1,1i]`, `[2,12]`, `[2,2i]`, `[i,1i]`, `[i,2i]`, `[i,ij]`
/// with `i, j >= 3`.
pub const SEVEN_CELL_PREDICATES: [fn(usize, usize) -> bool; 7] = [
    |i, j| i == 1 && j == 2,
    |i, j| i == 1 && j >= 3,
    |i, j| i == 2 && j == 1,
    |i, j| i == 2 && j >= 3,
    |i, j| i >= 3 && j == 1,
    |i, j| i >= 3 && j == 2,
    |i, j| i >= 3 && j >= 3,
];

pub fn expected_three_cell_matrix(n: usize) -> Vec<Vec<usize>> {
    vec![vec![n - 2, 1, 0], vec![1, 0, n - 2], vec![0, 1, n - 2]]
}

pub fn expected_seven_cell_matrix(n: usize) -> Vec<Vec<usize>> {
    let (a, b) = (n - 2, n - 3);
    vec![
        vec![0, a, 1, 0, 0, 0, 0],
        vec![1, b, 0, 0, 1, 0, 0],
        vec![1, 0, 0, a, 0, 0, 0],
        vec![0, 0, 1, b, 0, 1, 0],
        vec![0, 1, 0, 0, 0, 1, b],
        vec![0, 0, 0, 1, 1, 0, b],
        vec![0, 0, 0, 0, 1, 1, b],
    ]
}

/// Reorders the cells of `pi` so that cell `k` is exactly the set of
/// vertices `[i,ij]` satisfying `predicates[k]`.
pub fn order_cells_by_predicates(
    l: &Graph,
    pi: &Partition,
    predicates: &[fn(usize, usize) -> bool],
) -> std::result::Result<Partition, String> {
    let labels = l.labels().ok_or("graph has no labels")?;
    let mut order = Vec::with_capacity(predicates.len());
    for (k, pred) in predicates.iter().enumerate() {
        let members: Vec<usize> = labels
            .iter()
            .enumerate()
            .filter(|(_, lab)| matches!(lab, Label::EdgeLabel { single, other } if pred(*single, *other)))
            .map(|(v, _)| v)
            .collect();
        let cell = pi
            .cells()
            .iter()
            .position(|c| *c == members)
            .ok_or_else(|| format!("no orbit equals the member set of cell {}", k + 1))?;
        order.push(cell);
    }
    if order.len() != pi.len() {
        return Err(format!(
            "{} orbits, expected {}",
            pi.len(),
            predicates.len()
        ));
    }
    pi.reordered(&order).map_err(|e| e.to_string())
}

/// Which graph a verification runs against: the true `L(n)` or a copy
/// with one adjacency toggled (negative control).
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct VerifyOptions {
    pub mutate_edge: Option<(usize, usize)>,
    pub exec: Option<Execution>,
}

/// Holds `H(n)` and `L(n)` and caches the exact spectrum of `L(n)` across
/// checks.
pub struct Verifier {
    n: usize,
    h: Graph,
    l: Graph,
    exec: Execution,
    spectrum: OnceLock<Result<SpectrumReport>>,
}

impl Verifier {
    pub fn new(n: usize) -> Result<Verifier> {
        Verifier::with_options(n, VerifyOptions::default())
    }

    pub fn with_options(n: usize, opts: VerifyOptions) -> Result<Verifier> {
        if n < MIN_N {
            return Err(Error::Domain(format!(
                "claims require n >= {MIN_N}, got {n}"
            )));
        }
        let h = h_graph(n)?;
        let mut l = l_graph(n)?;
        if let Some((u, v)) = opts.mutate_edge {
            l = l.toggle_edge(u, v)?;
        }
        Ok(Verifier {
            n,
            h,
            l,
            exec: opts.exec.unwrap_or_default(),
            spectrum: OnceLock::new(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn l(&self) -> &Graph {
        &self.l
    }

    pub fn h(&self) -> &Graph {
        &self.h
    }

    /// Exact spectrum of the (possibly mutated) `L(n)`.
    pub fn spectrum(&self) -> Result<&SpectrumReport> {
        self.spectrum
            .get_or_init(|| spectrum_with(&self.l, self.exec))
            .as_ref()
            .map_err(Clone::clone)
    }

    fn l_vertex(&self, i: usize, j: usize) -> Option<usize> {
        self.l.find_label(&Label::edge(i, j))
    }

    pub fn structure(&self) -> VerificationReport {
        let n = self.n;
        let hm = metrics_with(&self.h, self.exec);
        let lm = metrics_with(&self.l, self.exec);
        let h_edges = self.h.edge_count();
        let valency_ok = lm.degrees.iter().all(|&d| d == n - 1);
        let checks = vec![
            check(
                "h_edge_count",
                "H(n) has n(n-1) edges",
                h_edges == n * (n - 1),
                json!({ "edges": h_edges, "expected": n * (n - 1) }),
            ),
            check(
                "h_bipartite",
                "H(n) is bipartite",
                hm.is_bipartite,
                json!({ "bipartite": hm.is_bipartite }),
            ),
            check(
                "h_diameter",
                "H(n) is connected with diameter 4",
                hm.is_connected && hm.diameter == Extent::Finite(4),
                json!({ "connected": hm.is_connected, "diameter": hm.diameter }),
            ),
            check(
                "h_not_regular",
                "H(n) is not regular",
                !hm.is_regular,
                json!({ "regular": hm.is_regular }),
            ),
            check(
                "l_regular",
                "L(n) is regular of valency n-1",
                valency_ok,
                json!({
                    "min_degree": lm.degrees.iter().min(),
                    "max_degree": lm.degrees.iter().max(),
                    "expected": n - 1,
                }),
            ),
            check(
                "l_diameter",
                "L(n) is connected with diameter 3",
                lm.is_connected && lm.diameter == Extent::Finite(3),
                json!({ "connected": lm.is_connected, "diameter": lm.diameter }),
            ),
            check(
                "l_girth",
                "L(n) has girth 3",
                lm.girth == Extent::Finite(3),
                json!({ "girth": lm.girth }),
            ),
            check(
                "l_not_bipartite",
                "L(n) is not bipartite",
                !lm.is_bipartite,
                json!({ "bipartite": lm.is_bipartite }),
            ),
            check(
                "natural_line_map",
                "L(n) is the line graph of H(n)",
                natural_line_map_agrees(&self.h, &self.l),
                json!({ "vertices": self.l.vertex_count(), "edges": self.l.edge_count() }),
            ),
        ];
        VerificationReport::new(n, checks)
    }

    pub fn vertex_transitive(&self) -> VerificationReport {
        let anchor = "L(n) is vertex-transitive";
        let gens = match stabilizer_generators(self.n, &[]) {
            Ok(g) => g,
            Err(e) => {
                return VerificationReport::new(
                    self.n,
                    vec![failed_check("single_orbit", anchor, e)],
                )
            }
        };
        let non_auto: Vec<usize> = gens
            .generators()
            .iter()
            .enumerate()
            .filter(|(_, p)| !matches!(is_automorphism(&self.l, p), Ok(true)))
            .map(|(k, _)| k)
            .collect();
        let orbits = orbit_partition(&gens);
        let checks = vec![
            check(
                "lifted_generators_are_automorphisms",
                "lifts of Sym([n]) act as automorphisms of L(n)",
                non_auto.is_empty(),
                json!({ "generators": gens.generators().len(), "failing": non_auto }),
            ),
            check(
                "single_orbit",
                anchor,
                orbits.len() == 1,
                json!({ "orbit_sizes": orbits.cell_sizes() }),
            ),
        ];
        VerificationReport::new(self.n, checks)
    }

    pub fn min_eigenvalue(&self) -> VerificationReport {
        let mut checks = Vec::new();
        let hexagon: Option<Vec<usize>> =
            HEXAGON.iter().map(|&(i, j)| self.l_vertex(i, j)).collect();
        let cycle_anchor =
            "the six vertices [1,12],[1,13],[3,13],[3,32],[2,32],[2,21] induce a 6-cycle";
        match hexagon.map(|vs| self.l.induced_subgraph(&vs)) {
            Some(Ok(sub)) => {
                let m = metrics_with(&sub, Execution::Sequential);
                let ok = sub.vertex_count() == 6
                    && sub.edge_count() == 6
                    && m.degrees.iter().all(|&d| d == 2)
                    && m.is_connected;
                checks.push(check(
                    "hexagon_induced",
                    cycle_anchor,
                    ok,
                    json!({
                        "vertices": sub.vertex_count(),
                        "edges": sub.edge_count(),
                        "connected": m.is_connected,
                        "degrees": m.degrees,
                    }),
                ));
            }
            Some(Err(e)) => checks.push(failed_check("hexagon_induced", cycle_anchor, e)),
            None => checks.push(failed_check(
                "hexagon_induced",
                cycle_anchor,
                "missing vertex label",
            )),
        }
        let anchor = "-2 is the least eigenvalue of L(n)";
        checks.push(match self.spectrum() {
            Ok(s) => {
                let min = s.min_root().cloned();
                check(
                    "min_eigenvalue",
                    anchor,
                    s.is_integral() && min == Some(BigInt::from(-2)),
                    json!({ "min": min.map(|m| m.to_string()), "integral": s.is_integral() }),
                )
            }
            Err(e) => failed_check("min_eigenvalue", anchor, e),
        });
        VerificationReport::new(self.n, checks)
    }

    fn ordered_quotient(
        &self,
        fixed: &[usize],
        predicates: &[fn(usize, usize) -> bool],
    ) -> std::result::Result<(Partition, QuotientMatrix), String> {
        let gens = stabilizer_generators(self.n, fixed).map_err(|e| e.to_string())?;
        let orbits = orbit_partition(&gens);
        let ordered = order_cells_by_predicates(&self.l, &orbits, predicates)?;
        let q = quotient_matrix(&self.l, &ordered).map_err(|e| e.to_string())?;
        Ok((ordered, q))
    }

    pub fn three_cell(&self) -> VerificationReport {
        let n = self.n;
        let orbit_anchor = "orbits of the stabilizer of 1: {[1,1i]}, {[i,1i]}, {[i,ij]}";
        let (pi, q) = match self.ordered_quotient(&[1], &THREE_CELL_PREDICATES) {
            Ok(x) => x,
            Err(e) => {
                return VerificationReport::new(
                    n,
                    vec![failed_check("three_cell_orbits", orbit_anchor, e)],
                )
            }
        };
        let mut checks = vec![check(
            "three_cell_orbits",
            orbit_anchor,
            pi.cell_sizes() == vec![n - 1, n - 1, (n - 1) * (n - 2)],
            json!({ "cell_sizes": pi.cell_sizes() }),
        )];
        checks.push(check(
            "three_cell_quotient",
            "quotient P = [[n-2,1,0],[1,0,n-2],[0,1,n-2]]",
            q.entries == expected_three_cell_matrix(n),
            json!({ "p": q.entries }),
        ));
        let expected_poly = IntPolynomial::from_roots(&[
            (BigInt::from(n - 2), 1),
            (BigInt::from(n - 1), 1),
            (BigInt::from(-1), 1),
        ]);
        let anchor = "det(xI - P) = (x-(n-2))(x-(n-1))(x+1)";
        checks.push(match char_poly(&q.to_int_matrix()) {
            Ok(p) => check(
                "three_cell_char_poly",
                anchor,
                p == expected_poly,
                json!({ "char_poly": p.to_string(), "expected": expected_poly.to_string() }),
            ),
            Err(e) => failed_check("three_cell_char_poly", anchor, e),
        });
        let anchor = "-1 and n-2 (and n-1) are eigenvalues of L(n)";
        checks.push(match self.spectrum() {
            Ok(s) => {
                let wanted = [n as i64 - 1, n as i64 - 2, -1];
                let missing: Vec<i64> = wanted
                    .iter()
                    .copied()
                    .filter(|&v| s.multiplicity(v) == 0)
                    .collect();
                check(
                    "three_cell_eigenvalues_in_spectrum",
                    anchor,
                    missing.is_empty(),
                    json!({ "wanted": wanted, "missing": missing }),
                )
            }
            Err(e) => failed_check("three_cell_eigenvalues_in_spectrum", anchor, e),
        });
        VerificationReport::new(n, checks)
    }

    fn expected_seven_cell_roots(&self) -> Vec<(i64, usize)> {
        let n = self.n as i64;
        vec![(n - 1, 1), (n - 2, 2), (0, 1), (-1, 2), (-2, 1)]
    }

    pub fn seven_cell(&self) -> VerificationReport {
        let n = self.n;
        let orbit_anchor = "orbits O1..O7 of the stabilizer of 1 and 2";
        let (pi, q) = match self.ordered_quotient(&[1, 2], &SEVEN_CELL_PREDICATES) {
            Ok(x) => x,
            Err(e) => {
                return VerificationReport::new(
                    n,
                    vec![failed_check("seven_cell_orbits", orbit_anchor, e)],
                )
            }
        };
        let sizes = pi.cell_sizes();
        let expected_sizes = vec![1, n - 2, 1, n - 2, n - 2, n - 2, (n - 2) * (n - 3)];
        let singletons = sizes.iter().filter(|&&s| s == 1).count();
        let mut checks = vec![
            check(
                "seven_cell_orbits",
                orbit_anchor,
                sizes == expected_sizes,
                json!({ "cell_sizes": sizes, "expected": expected_sizes }),
            ),
            check(
                "seven_cell_singletons",
                "the orbit partition has a singleton cell",
                singletons == 2,
                json!({ "singleton_cells": singletons }),
            ),
            check(
                "seven_cell_quotient",
                "displayed 7x7 quotient matrix P",
                q.entries == expected_seven_cell_matrix(n),
                json!({ "p": q.entries }),
            ),
        ];
        let anchor = "eigenvalues of P: -2, -1, -1, 0, n-2, n-2, n-1";
        checks.push(match quotient_spectrum(&q) {
            Ok(s) => {
                let expected = self.expected_seven_cell_roots();
                check(
                    "seven_cell_spectrum",
                    anchor,
                    s.is_integral() && s.roots_i64() == expected,
                    json!({ "roots": s.roots_i64(), "expected": expected }),
                )
            }
            Err(e) => failed_check("seven_cell_spectrum", anchor, e),
        });
        VerificationReport::new(n, checks)
    }

    pub fn theorem(&self) -> VerificationReport {
        let n = self.n;
        let anchor = "L(n) is integral with distinct eigenvalues -2, -1, 0, n-2, n-1";
        let s = match self.spectrum() {
            Ok(s) => s,
            Err(e) => return VerificationReport::new(n, vec![failed_check("integral", anchor, e)]),
        };
        let mut checks = Vec::new();
        checks.push(check(
            "integral",
            anchor,
            s.is_integral(),
            json!({ "residual": s.residual.to_decimal_strings() }),
        ));
        let expected: BTreeSet<i64> = [-2, -1, 0, n as i64 - 2, n as i64 - 1].into();
        let distinct: BTreeSet<i64> = s.distinct_i64().into_iter().collect();
        checks.push(check(
            "distinct_eigenvalues",
            anchor,
            distinct == expected,
            json!({ "distinct": distinct, "multiplicities": s.roots_i64() }),
        ));

        let (m0, m1, m2) = s
            .roots_i64()
            .iter()
            .fold((0i64, 0i64, 0i64), |acc, &(v, m)| {
                let m = m as i64;
                (acc.0 + m, acc.1 + v * m, acc.2 + v * v * m)
            });
        let nn = n as i64;
        checks.push(check(
            "power_sums",
            "multiplicities account for n(n-1) vertices, trace 0 and n(n-1)(n-1) closed 2-walks",
            s.is_integral() && m0 == nn * (nn - 1) && m1 == 0 && m2 == nn * (nn - 1) * (nn - 1),
            json!({ "sum_m": m0, "sum_lambda_m": m1, "sum_lambda2_m": m2 }),
        ));

        match self.ordered_quotient(&[1, 2], &SEVEN_CELL_PREDICATES) {
            Ok((_, q)) => match quotient_spectrum(&q) {
                Ok(qs) => {
                    let quotient_distinct: BTreeSet<i64> = qs.distinct_i64().into_iter().collect();
                    checks.push(check(
                        "quotient_captures_spectrum",
                        "with a singleton cell, every eigenvalue of X is an eigenvalue of X/pi",
                        qs.is_integral() && quotient_distinct == distinct,
                        json!({ "quotient": quotient_distinct, "graph": distinct }),
                    ));
                    let anchor = "each eigenvalue of P is an eigenvalue of A";
                    checks.push(match divides(&qs.char_poly, &s.char_poly) {
                        Ok(ok) => check(
                            "quotient_char_poly_divides",
                            anchor,
                            ok,
                            json!({ "quotient_char_poly": qs.char_poly.to_string() }),
                        ),
                        Err(e) => failed_check("quotient_char_poly_divides", anchor, e),
                    });
                }
                Err(e) => checks.push(failed_check("quotient_captures_spectrum", anchor, e)),
            },
            Err(e) => checks.push(failed_check("quotient_captures_spectrum", anchor, e)),
        }
        VerificationReport::new(n, checks)
    }

    /// Every check, in the order structure, vertex-transitivity, minimum
    /// eigenvalue, three-cell, seven-cell, theorem.
    pub fn all(&self) -> VerificationReport {
        VerificationReport::merge(
            self.n,
            [
                self.structure(),
                self.vertex_transitive(),
                self.min_eigenvalue(),
                self.three_cell(),
                self.seven_cell(),
                self.theorem(),
            ],
        )
    }
}

pub fn verify_structure(n: usize) -> Result<VerificationReport> {
    Ok(Verifier::new(n)?.structure())
}

pub fn verify_vertex_transitive(n: usize) -> Result<VerificationReport> {
    Ok(Verifier::new(n)?.vertex_transitive())
}

pub fn verify_min_eigenvalue(n: usize) -> Result<VerificationReport> {
    Ok(Verifier::new(n)?.min_eigenvalue())
}

pub fn verify_three_cell(n: usize) -> Result<VerificationReport> {
    Ok(Verifier::new(n)?.three_cell())
}

pub fn verify_seven_cell(n: usize) -> Result<VerificationReport> {
    Ok(Verifier::new(n)?.seven_cell())
}

pub fn verify_theorem(n: usize) -> Result<VerificationReport> {
    Ok(Verifier::new(n)?.theorem())
}

/// Runs [`Verifier::all`] for every `n` in `range`; reports come back in
/// ascending `n`. Distinct `n` run concurrently under
/// [`Execution::Parallel`].
pub fn verify_sweep(
    range: RangeInclusive<usize>,
    opts: VerifyOptions,
) -> Result<Vec<VerificationReport>> {
    let ns: Vec<usize> = range.collect();
    let exec = opts.exec.unwrap_or_default();
    exec.map_slice(&ns, |&n| Verifier::with_options(n, opts).map(|v| v.all()))
        .into_iter()
        .collect()
}
