use crate::algebra::{solve_linear, LinearSolution, Matrix, SparseTensor};
use crate::scalar::Field;

use super::HeisenbergAlgebra;

/// Where the right inverse `Y` (`x·Y = 1`) and the left inverse `Z`
/// (`Z·x = 1`) first differ: `ratio = Z[index] / Y[index]`.
#[derive(Clone, Debug, PartialEq)]
pub struct Obstruction<E> {
    pub index: Vec<usize>,
    pub ratio: E,
}

/// Outcome of solving `x·Y = 1`, `Z·x = 1` and both at once.
#[derive(Clone, Debug, PartialEq)]
pub enum InvertibilityProbe<E> {
    /// A verified two-sided inverse.
    TwoSided { inverse: SparseTensor<E> },
    /// Both one-sided systems are solvable but no common solution exists.
    /// `certificate` is the inconsistent row of the combined system.
    OneSidedPair {
        right: SparseTensor<E>,
        left: SparseTensor<E>,
        unique: bool,
        obstruction: Option<Obstruction<E>>,
        certificate: (usize, E),
    },
    RightOnly { right: SparseTensor<E>, certificate: (usize, E) },
    LeftOnly { left: SparseTensor<E>, certificate: (usize, E) },
    /// Neither system is solvable; the certificate is from `x·Y = 1`.
    NoInverse { certificate: (usize, E) },
}

impl<E> InvertibilityProbe<E> {
    pub fn is_invertible(&self) -> bool {
        matches!(self, InvertibilityProbe::TwoSided { .. })
    }

    pub fn verdict(&self) -> &'static str {
        match self {
            InvertibilityProbe::TwoSided { .. } => "two-sided inverse",
            InvertibilityProbe::OneSidedPair { .. } => "one-sided inverses only",
            InvertibilityProbe::RightOnly { .. } => "right inverse only",
            InvertibilityProbe::LeftOnly { .. } => "left inverse only",
            InvertibilityProbe::NoInverse { .. } => "no one-sided inverse",
        }
    }
}

/// Left- and right-multiplication operators of `x` on the degree-2 tensor
/// power, as sparse matrices indexed by tensor keys.
fn operators<F: Field>(ha: &HeisenbergAlgebra<F>, x: &SparseTensor<F::Elem>) -> (Matrix<F::Elem>, Matrix<F::Elem>) {
    let field = ha.field();
    let m = ha.dim();
    let size = m * m;
    let mut left = Matrix::zero(size, size);
    let mut right = Matrix::zero(size, size);
    for col in 0..size {
        let e = SparseTensor::basis(field, m, &[col / m, col % m]);
        let xe = ha.mult().multiply(field, x, &e).expect("degree-2 operands");
        for k in xe.keys() {
            left.add_entry(field, k as usize, col, xe.get(&xe.decode(k)).unwrap().clone());
        }
        let ex = ha.mult().multiply(field, &e, x).expect("degree-2 operands");
        for k in ex.keys() {
            right.add_entry(field, k as usize, col, ex.get(&ex.decode(k)).unwrap().clone());
        }
    }
    (left, right)
}

fn to_tensor<F: Field>(field: &F, m: usize, v: &[F::Elem]) -> SparseTensor<F::Elem> {
    let mut t = SparseTensor::zero(m, 2);
    for (k, c) in v.iter().enumerate() {
        t.add_term(field, &[k / m, k % m], c.clone());
    }
    t
}

/// Decides whether `x ∈ HA^{⊗2}` has a two-sided inverse by exact linear
/// algebra on the `m²`-dimensional space.
pub fn probe_invertibility<F: Field>(ha: &HeisenbergAlgebra<F>, x: &SparseTensor<F::Elem>) -> InvertibilityProbe<F::Elem> {
    let field = ha.field();
    let m = ha.dim();
    assert_eq!((x.dim(), x.degree()), (m, 2), "probe expects an element of HA⊗HA");
    let (left, right) = operators(ha, x);
    let unit = SparseTensor::power(field, ha.unit(), 2);
    let mut b = vec![field.zero(); m * m];
    for (idx, c) in unit.iter() {
        b[idx[0] * m + idx[1]] = c.clone();
    }
    let solve = |a: &Matrix<F::Elem>, rhs: &[F::Elem]| solve_linear(field, a, rhs).expect("square system");
    let stacked_rhs: Vec<F::Elem> = b.iter().chain(b.iter()).cloned().collect();
    let certificate = match solve(&left.stack(&right), &stacked_rhs) {
        LinearSolution::Solved { x: v, .. } => {
            let inverse = to_tensor(field, m, &v);
            let sc = ha.mult();
            debug_assert!(sc.multiply(field, x, &inverse).unwrap().approx_eq(field, &unit));
            debug_assert!(sc.multiply(field, &inverse, x).unwrap().approx_eq(field, &unit));
            return InvertibilityProbe::TwoSided { inverse };
        }
        LinearSolution::Inconsistent { row, rhs } => (row, rhs),
    };
    match (solve(&left, &b), solve(&right, &b)) {
        (LinearSolution::Solved { x: y, nullity: ny }, LinearSolution::Solved { x: z, nullity: nz }) => {
            let unique = ny == 0 && nz == 0;
            let obstruction = if unique {
                (0..m * m)
                    .find(|&k| !field.eq(&y[k], &z[k]) && !field.is_zero(&y[k]) && !field.is_zero(&z[k]))
                    .map(|k| Obstruction {
                        index: vec![k / m, k % m],
                        ratio: field.mul(&z[k], &field.inv(&y[k]).expect("nonzero")),
                    })
            } else {
                None
            };
            InvertibilityProbe::OneSidedPair {
                right: to_tensor(field, m, &y),
                left: to_tensor(field, m, &z),
                unique,
                obstruction,
                certificate,
            }
        }
        (LinearSolution::Solved { x: y, .. }, LinearSolution::Inconsistent { .. }) => InvertibilityProbe::RightOnly {
            right: to_tensor(field, m, &y),
            certificate,
        },
        (LinearSolution::Inconsistent { .. }, LinearSolution::Solved { x: z, .. }) => InvertibilityProbe::LeftOnly {
            left: to_tensor(field, m, &z),
            certificate,
        },
        (LinearSolution::Inconsistent { row, rhs }, LinearSolution::Inconsistent { .. }) => {
            InvertibilityProbe::NoInverse { certificate: (row, rhs) }
        }
    }
}
