use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use super::matrix::{adjacency_matrix, char_poly_with, IntMatrix};
use super::poly::{integer_roots, IntPolynomial};
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::graph::Graph;
use crate::partition::QuotientMatrix;

/// Integer eigenvalues with multiplicities plus the integer-rootless part
/// of the characteristic polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectrumReport {
    /// Sorted descending by eigenvalue.
    pub roots: Vec<(BigInt, usize)>,
    /// Equal to 1 when the spectrum is entirely integral.
    pub residual: IntPolynomial,
    pub dim: usize,
    pub char_poly: IntPolynomial,
}

impl SpectrumReport {
    pub fn is_integral(&self) -> bool {
        self.residual.degree() == Some(0)
    }

    /// Distinct integer eigenvalues, ascending.
    pub fn distinct(&self) -> BTreeSet<BigInt> {
        self.roots.iter().map(|(v, _)| v.clone()).collect()
    }

    /// Distinct integer eigenvalues as `i64`, ascending. Panics only if an
    /// eigenvalue exceeds `i64`, which cannot happen for graph inputs.
    pub fn distinct_i64(&self) -> Vec<i64> {
        self.distinct()
            .iter()
            .map(|v| v.to_i64().expect("eigenvalue fits in i64"))
            .collect()
    }

    pub fn multiplicity(&self, value: i64) -> usize {
        let value = BigInt::from(value);
        self.roots
            .iter()
            .find(|(v, _)| *v == value)
            .map_or(0, |(_, m)| *m)
    }

    pub fn min_root(&self) -> Option<&BigInt> {
        self.roots.last().map(|(v, _)| v)
    }

    /// Roots as `(value, multiplicity)` pairs of machine integers.
    pub fn roots_i64(&self) -> Vec<(i64, usize)> {
        self.roots
            .iter()
            .map(|(v, m)| (v.to_i64().expect("eigenvalue fits in i64"), *m))
            .collect()
    }
}

impl Serialize for SpectrumReport {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let roots: Vec<(serde_json::Value, usize)> = self
            .roots
            .iter()
            .map(|(v, m)| {
                let value = match v.to_i64() {
                    Some(x) => serde_json::Value::from(x),
                    None => serde_json::Value::from(v.to_string()),
                };
                (value, *m)
            })
            .collect();
        let mut st = s.serialize_struct("SpectrumReport", 4)?;
        st.serialize_field("roots", &roots)?;
        st.serialize_field("residual", &self.residual)?;
        st.serialize_field("integral", &self.is_integral())?;
        st.serialize_field("dim", &self.dim)?;
        st.end()
    }
}

/// Spectrum of an arbitrary square integer matrix (symmetry not required).
pub fn matrix_spectrum(m: &IntMatrix, exec: Execution) -> Result<SpectrumReport> {
    let poly = char_poly_with(m, exec)?;
    let found = integer_roots(&poly)?;
    let report = SpectrumReport {
        roots: found.roots,
        residual: found.residual,
        dim: m.dim(),
        char_poly: poly,
    };
    check_report(&report, &m.trace())?;
    Ok(report)
}

// Multiplicity count, exact reconstruction and trace identity.
fn check_report(report: &SpectrumReport, trace: &BigInt) -> Result<()> {
    let mult: usize = report.roots.iter().map(|(_, m)| m).sum();
    let residual_deg = report.residual.degree().unwrap_or(0);
    if mult + residual_deg != report.dim {
        return Err(Error::Internal(format!(
            "{mult} integer roots + residual degree {residual_deg} != {}",
            report.dim
        )));
    }
    let rebuilt = IntPolynomial::from_roots(&report.roots).mul(&report.residual);
    if rebuilt != report.char_poly {
        return Err(Error::Internal(
            "root factorization does not reproduce the characteristic polynomial".into(),
        ));
    }
    let root_sum: BigInt = report.roots.iter().map(|(v, m)| v * BigInt::from(*m)).sum();
    // residual is monic here, so its root sum is minus its subleading coefficient
    let residual_sum = if residual_deg > 0 {
        -report.residual.coeff(residual_deg - 1)
    } else {
        BigInt::zero()
    };
    if root_sum + residual_sum != *trace {
        return Err(Error::Internal(
            "eigenvalue sum differs from the trace".into(),
        ));
    }
    Ok(())
}

pub fn spectrum(g: &Graph) -> Result<SpectrumReport> {
    spectrum_with(g, Execution::default())
}

pub fn spectrum_with(g: &Graph, exec: Execution) -> Result<SpectrumReport> {
    if g.vertex_count() == 0 {
        return Err(Error::Domain("spectrum of the empty graph".into()));
    }
    matrix_spectrum(&adjacency_matrix(g), exec)
}

pub fn quotient_spectrum(q: &QuotientMatrix) -> Result<SpectrumReport> {
    matrix_spectrum(&q.to_int_matrix(), Execution::Sequential)
}

pub fn is_integral(g: &Graph) -> Result<bool> {
    Ok(spectrum(g)?.is_integral())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::l_graph;

    fn cycle(k: usize) -> Graph {
        let edges: Vec<_> = (0..k).map(|i| (i, (i + 1) % k)).collect();
        Graph::from_edges(k, &edges).unwrap()
    }

    #[test]
    fn small_graph_spectra() {
        let edge = Graph::from_edges(2, &[(0, 1)]).unwrap();
        let s = spectrum(&edge).unwrap();
        assert_eq!(s.roots_i64(), vec![(1, 1), (-1, 1)]);
        assert!(s.is_integral());

        let s = spectrum(&cycle(6)).unwrap();
        assert_eq!(s.roots_i64(), vec![(2, 1), (1, 2), (-1, 2), (-2, 1)]);

        let path = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let s = spectrum(&path).unwrap();
        assert_eq!(s.roots_i64(), vec![(0, 1)]);
        assert_eq!(s.residual, IntPolynomial::from_i64(&[-2, 0, 1]));
        assert!(!is_integral(&path).unwrap());
    }

    #[test]
    fn l4_spectrum() {
        let s = spectrum(&l_graph(4).unwrap()).unwrap();
        assert_eq!(
            s.roots_i64(),
            vec![(3, 1), (2, 3), (0, 2), (-1, 3), (-2, 3)]
        );
        assert_eq!(s.residual, IntPolynomial::one());
    }

    #[test]
    fn quotient_spectra() {
        let q = QuotientMatrix {
            cell_sizes: vec![3, 3, 6],
            entries: vec![vec![2, 1, 0], vec![1, 0, 2], vec![0, 1, 2]],
        };
        assert_eq!(
            quotient_spectrum(&q).unwrap().roots_i64(),
            vec![(3, 1), (2, 1), (-1, 1)]
        );
        let q = QuotientMatrix {
            cell_sizes: vec![5, 10],
            entries: vec![vec![0, 4], vec![2, 0]],
        };
        let s = quotient_spectrum(&q).unwrap();
        assert!(s.roots.is_empty());
        assert_eq!(s.residual, IntPolynomial::from_i64(&[-8, 0, 1]));
    }

    #[test]
    fn report_json() {
        let s = spectrum(&l_graph(4).unwrap()).unwrap();
        assert_eq!(
            serde_json::to_string(&s).unwrap(),
            r#"{"roots":[[3,1],[2,3],[0,2],[-1,3],[-2,3]],"residual":["1"],"integral":true,"dim":12}"#
        );
    }

    #[test]
    fn empty_graph_rejected() {
        assert!(spectrum(&Graph::from_edges(0, &[]).unwrap()).is_err());
    }
}
