use hyperlayer::linalg::{bareiss_determinant, matrix_spectrum};
use hyperlayer::verify::{
    expected_seven_cell_matrix, order_cells_by_predicates, SEVEN_CELL_PREDICATES,
};
use hyperlayer::{
    adjacency_matrix, char_poly, coarsest_equitable_refinement, divides, integer_roots, l_graph,
    orbit_partition, quotient_matrix, quotient_spectrum, spectrum, stabilizer_generators,
    Execution, Graph, IntMatrix, IntPolynomial, Partition, QuotientMatrix,
};
use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;

// Oracle: determinant by cofactor expansion along the first row.
fn cofactor_det(m: &[Vec<i64>]) -> BigInt {
    let d = m.len();
    if d == 0 {
        return BigInt::from(1);
    }
    let mut total = BigInt::zero();
    for col in 0..d {
        if m[0][col] == 0 {
            continue;
        }
        let minor: Vec<Vec<i64>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(j, _)| *j != col)
                    .map(|(_, &x)| x)
                    .collect()
            })
            .collect();
        let term = BigInt::from(m[0][col]) * cofactor_det(&minor);
        if col % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

fn small_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..=6)
        .prop_flat_map(|d| proptest::collection::vec(proptest::collection::vec(-4i64..=4, d), d))
}

fn random_graph(max_vertices: usize) -> impl Strategy<Value = Graph> {
    (1..=max_vertices).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        proptest::collection::vec(any::<bool>(), pairs.len()).prop_map(move |keep| {
            let edges: Vec<(usize, usize)> = pairs
                .iter()
                .zip(&keep)
                .filter(|(_, &k)| k)
                .map(|(&e, _)| e)
                .collect();
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn char_poly_matches_cofactor_oracle(rows in small_matrix()) {
        let d = rows.len();
        let m = IntMatrix::from_rows(rows.clone()).unwrap();
        let p = char_poly(&m).unwrap();
        prop_assert!(p.is_monic());
        prop_assert_eq!(p.degree(), Some(d));
        prop_assert_eq!(p.coeff(d - 1), -m.trace());
        let det = cofactor_det(&rows);
        prop_assert_eq!(bareiss_determinant(&m), det.clone());
        let sign = if d % 2 == 0 { BigInt::from(1) } else { BigInt::from(-1) };
        prop_assert_eq!(p.coeff(0), sign * det);
        // det(tI - M) at d+1 points pins the polynomial down completely
        for t in -(d as i64)..=1 {
            let shifted: Vec<Vec<i64>> = rows
                .iter()
                .enumerate()
                .map(|(i, row)| {
                    row.iter()
                        .enumerate()
                        .map(|(j, &x)| if i == j { t - x } else { -x })
                        .collect()
                })
                .collect();
            prop_assert_eq!(p.eval(&BigInt::from(t)), cofactor_det(&shifted));
        }
    }

    #[test]
    fn integer_roots_reconstruct_their_input(
        linear in proptest::collection::vec((-25i64..=25, 1usize..=3), 0..5),
        quadratics in proptest::collection::vec((-6i64..=6, 1i64..=12), 0..3),
        scale in prop::sample::select(vec![1i64, 1, 1, 2, -3]),
    ) {
        let mut p = IntPolynomial::from_i64(&[scale]);
        for &(r, m) in &linear {
            for _ in 0..m {
                p = p.mul(&IntPolynomial::from_i64(&[-r, 1]));
            }
        }
        for &(b, c) in &quadratics {
            // x^2 + bx + c with c > 0 and b^2 - 4c never a square, or x^2 - c with c not square
            let disc = b * b - 4 * c;
            let is_square = disc >= 0 && (disc as f64).sqrt().round().powi(2) as i64 == disc;
            let q = if is_square { [c * c + 1, 0, 1] } else { [c, b, 1] };
            p = p.mul(&IntPolynomial::from_i64(&q));
        }
        let found = integer_roots(&p).unwrap();
        let rebuilt = IntPolynomial::from_roots(&found.roots).mul(&found.residual);
        prop_assert_eq!(rebuilt, p);
        let planted: Vec<(i64, usize)> = {
            let mut acc: std::collections::BTreeMap<i64, usize> = Default::default();
            for &(r, m) in &linear {
                *acc.entry(r).or_default() += m;
            }
            acc.into_iter().rev().collect()
        };
        let got: Vec<(i64, usize)> = found
            .roots
            .iter()
            .map(|(v, m)| (i64::try_from(v).unwrap(), *m))
            .collect();
        prop_assert_eq!(got, planted);
        prop_assert!(integer_roots(&found.residual).unwrap().roots.is_empty());
    }

    #[test]
    fn graph_spectrum_invariants(g in random_graph(10)) {
        let s = spectrum(&g).unwrap();
        let mult: usize = s.roots.iter().map(|(_, m)| m).sum();
        prop_assert_eq!(mult + s.residual.degree().unwrap(), g.vertex_count());
        let root_sum: BigInt = s.roots.iter().map(|(v, m)| v * BigInt::from(*m)).sum();
        let rd = s.residual.degree().unwrap();
        let residual_sum = if rd > 0 { -s.residual.coeff(rd - 1) } else { BigInt::zero() };
        prop_assert!((root_sum + residual_sum).is_zero());
    }

    #[test]
    fn equitable_quotients_share_eigenvalues(g in random_graph(12), cut in 0usize..12) {
        let n = g.vertex_count();
        let cut = cut % n;
        let seed = if cut == 0 {
            Partition::unit(n)
        } else {
            Partition::new(vec![(0..cut).collect(), (cut..n).collect()], n).unwrap()
        };
        let pi = coarsest_equitable_refinement(&g, &seed).unwrap();
        let q = quotient_matrix(&g, &pi).unwrap();
        let qs = quotient_spectrum(&q).unwrap();
        let gs = spectrum(&g).unwrap();
        for (v, _) in &qs.roots {
            prop_assert!(gs.roots.iter().any(|(w, _)| w == v), "eigenvalue {} missing", v);
        }
        prop_assert!(divides(&qs.char_poly, &gs.char_poly).unwrap());
    }
}

#[test]
fn seven_cell_char_poly_divides_l5() {
    let l = l_graph(5).unwrap();
    let orbits = orbit_partition(&stabilizer_generators(5, &[1, 2]).unwrap());
    let ordered = order_cells_by_predicates(&l, &orbits, &SEVEN_CELL_PREDICATES).unwrap();
    let q = quotient_matrix(&l, &ordered).unwrap();
    assert_eq!(q.entries, expected_seven_cell_matrix(5));
    let pq = char_poly(&q.to_int_matrix()).unwrap();
    let pa = char_poly(&adjacency_matrix(&l)).unwrap();
    assert!(divides(&pq, &pa).unwrap());
}

#[test]
fn seven_cell_spectrum_for_each_n() {
    for n in 4..=12i64 {
        let q = QuotientMatrix {
            cell_sizes: vec![],
            entries: expected_seven_cell_matrix(n as usize),
        };
        let s = quotient_spectrum(&q).unwrap();
        assert!(s.is_integral());
        assert_eq!(
            s.roots_i64(),
            vec![(n - 1, 1), (n - 2, 2), (0, 1), (-1, 2), (-2, 1)]
        );
    }
}

#[test]
fn residual_parity_is_not_forced() {
    // the paw (triangle plus pendant edge): (x + 1)(x^3 - x^2 - 3x + 1)
    let paw = Graph::from_edges(4, &[(0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
    let s = spectrum(&paw).unwrap();
    assert_eq!(s.roots_i64(), vec![(-1, 1)]);
    assert_eq!(s.residual, IntPolynomial::from_i64(&[1, -3, -1, 1]));
}

#[test]
fn h_graph_spectrum_has_irrational_pair() {
    let s = spectrum(&hyperlayer::h_graph(4).unwrap()).unwrap();
    assert!(!s.is_integral());
    assert!(divides(&IntPolynomial::from_i64(&[-6, 0, 1]), &s.residual).unwrap());
}

#[test]
fn sequential_and_parallel_spectra_agree() {
    let a = adjacency_matrix(&l_graph(7).unwrap());
    assert_eq!(
        matrix_spectrum(&a, Execution::Sequential).unwrap(),
        matrix_spectrum(&a, Execution::Parallel).unwrap()
    );
}
