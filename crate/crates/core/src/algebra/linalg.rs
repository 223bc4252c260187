use std::collections::BTreeMap;

use crate::scalar::Field;

use super::structure::{accumulate, mul_coef, SparseVec};
use super::AlgebraError;

/// A linear endomorphism of a `dim`-dimensional space, stored by columns:
/// `map(e_j) = Σ column(j)`.
#[derive(Clone, Debug, PartialEq)]
pub struct LinearMap<E> {
    dim: usize,
    columns: Vec<SparseVec<E>>,
}

impl<E: Clone> LinearMap<E> {
    pub fn from_columns<F: Field<Elem = E>>(field: &F, columns: Vec<SparseVec<E>>) -> Self {
        let dim = columns.len();
        let columns = columns
            .into_iter()
            .map(|col| {
                let mut v = Vec::new();
                for (i, c) in col {
                    assert!(i < dim, "column entry out of range");
                    accumulate(field, &mut v, i, c);
                }
                v.sort_by_key(|(i, _)| *i);
                v
            })
            .collect();
        LinearMap { dim, columns }
    }

    pub fn identity<F: Field<Elem = E>>(field: &F, dim: usize) -> Self {
        LinearMap {
            dim,
            columns: (0..dim).map(|j| vec![(j, field.one())]).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn column(&self, j: usize) -> &[(usize, E)] {
        &self.columns[j]
    }

    pub fn apply<F: Field<Elem = E>>(&self, field: &F, v: &[(usize, E)]) -> SparseVec<E> {
        let mut out = Vec::new();
        for (j, c) in v {
            for (i, m) in &self.columns[*j] {
                accumulate(field, &mut out, *i, mul_coef(field, c, m));
            }
        }
        out.sort_by_key(|(i, _)| *i);
        out
    }

    /// `self ∘ other`.
    pub fn compose<F: Field<Elem = E>>(&self, field: &F, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim);
        LinearMap {
            dim: self.dim,
            columns: other.columns.iter().map(|c| self.apply(field, c)).collect(),
        }
    }

    pub fn to_matrix(&self) -> Matrix<E> {
        let mut m = Matrix::zero(self.dim, self.dim);
        for (j, col) in self.columns.iter().enumerate() {
            for (i, c) in col {
                m.rows[*i].insert(j, c.clone());
            }
        }
        m
    }
}

/// Sparse row-major matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<E> {
    cols: usize,
    rows: Vec<BTreeMap<usize, E>>,
}

impl<E: Clone> Matrix<E> {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix {
            cols,
            rows: vec![BTreeMap::new(); rows],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> Option<&E> {
        self.rows[r].get(&c)
    }

    pub fn add_entry<F: Field<Elem = E>>(&mut self, field: &F, r: usize, c: usize, v: E) {
        assert!(c < self.cols, "column {c} out of range");
        if field.is_zero(&v) {
            return;
        }
        let row = &mut self.rows[r];
        match row.get_mut(&c) {
            Some(e) => {
                field.add_assign(e, &v);
                if field.is_zero(e) {
                    row.remove(&c);
                }
            }
            None => {
                row.insert(c, v);
            }
        }
    }

    /// Rows of `self` followed by rows of `other`.
    pub fn stack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols);
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().cloned());
        Matrix {
            cols: self.cols,
            rows,
        }
    }
}

/// Outcome of solving `A x = b` exactly.
#[derive(Clone, Debug, PartialEq)]
pub enum LinearSolution<E> {
    /// A particular solution (free variables set to zero) and the dimension
    /// of the solution space.
    Solved { x: Vec<E>, nullity: usize },
    /// Certificate of inconsistency: after elimination, the original row
    /// `row` reduced to `0 = rhs` with `rhs ≠ 0`.
    Inconsistent { row: usize, rhs: E },
}

/// Gauss–Jordan elimination. Pivots are taken column by column, using the
/// first remaining row (in original order) with a nonzero entry.
pub fn solve_linear<F: Field>(
    field: &F,
    a: &Matrix<F::Elem>,
    b: &[F::Elem],
) -> Result<LinearSolution<F::Elem>, AlgebraError> {
    if b.len() != a.rows() {
        return Err(AlgebraError::DimensionMismatch {
            expected: a.rows(),
            found: b.len(),
        });
    }
    let mut rows: Vec<(usize, BTreeMap<usize, F::Elem>, F::Elem)> = a
        .rows
        .iter()
        .cloned()
        .zip(b.iter().cloned())
        .enumerate()
        .map(|(i, (r, v))| (i, r, v))
        .collect();
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..a.cols() {
        let Some(p) = (rank..rows.len()).find(|&r| rows[r].1.contains_key(&col)) else {
            continue;
        };
        rows.swap(rank, p);
        let inv = field
            .inv(&rows[rank].1[&col])
            .expect("pivot entries are nonzero");
        {
            let (_, row, rhs) = &mut rows[rank];
            for v in row.values_mut() {
                *v = mul_coef(field, v, &inv);
            }
            *rhs = mul_coef(field, rhs, &inv);
        }
        let (pivot_row, pivot_rhs) = (rows[rank].1.clone(), rows[rank].2.clone());
        for (r, (_, row, rhs)) in rows.iter_mut().enumerate() {
            if r == rank {
                continue;
            }
            let Some(factor) = row.get(&col).cloned() else {
                continue;
            };
            for (c, v) in &pivot_row {
                let delta = field.neg(&mul_coef(field, &factor, v));
                match row.get_mut(c) {
                    Some(e) => {
                        field.add_assign(e, &delta);
                        if field.is_zero(e) {
                            row.remove(c);
                        }
                    }
                    None => {
                        row.insert(*c, delta);
                    }
                }
            }
            *rhs = field.sub(rhs, &mul_coef(field, &factor, &pivot_rhs));
        }
        pivots.push(col);
        rank += 1;
    }
    if let Some((orig, _, rhs)) = rows[rank..].iter().find(|(_, _, rhs)| !field.is_zero(rhs)) {
        return Ok(LinearSolution::Inconsistent {
            row: *orig,
            rhs: rhs.clone(),
        });
    }
    let mut x = vec![field.zero(); a.cols()];
    for (r, &col) in pivots.iter().enumerate() {
        x[col] = rows[r].2.clone();
    }
    Ok(LinearSolution::Solved {
        x,
        nullity: a.cols() - rank,
    })
}

/// Inverse of a bijective linear map.
pub fn invert_map<F: Field>(
    field: &F,
    map: &LinearMap<F::Elem>,
) -> Result<LinearMap<F::Elem>, AlgebraError> {
    let dim = map.dim();
    let m = map.to_matrix();
    let mut columns = Vec::with_capacity(dim);
    for j in 0..dim {
        let mut b = vec![field.zero(); dim];
        b[j] = field.one();
        match solve_linear(field, &m, &b)? {
            LinearSolution::Solved { x, nullity: 0 } => {
                columns.push(super::to_sparse(field, &x));
            }
            LinearSolution::Solved { nullity, .. } => {
                return Err(AlgebraError::NotInvertible {
                    rank: dim - nullity,
                    dim,
                })
            }
            LinearSolution::Inconsistent { .. } => {
                return Err(AlgebraError::NotInvertible {
                    rank: rank_of(field, &m),
                    dim,
                })
            }
        }
    }
    Ok(LinearMap::from_columns(field, columns))
}

fn rank_of<F: Field>(field: &F, m: &Matrix<F::Elem>) -> usize {
    let zero = vec![field.zero(); m.rows()];
    match solve_linear(field, m, &zero) {
        Ok(LinearSolution::Solved { nullity, .. }) => m.cols() - nullity,
        _ => unreachable!("homogeneous systems are consistent"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{CycScalar, Cyclotomic};

    fn q(f: &Cyclotomic, n: i64) -> CycScalar {
        f.from_int(n)
    }

    #[test]
    fn solves_square_system() {
        let f = Cyclotomic::new(1);
        // [[2,1],[1,3]] x = [3,5]  →  x = [4/5, 7/5]
        let mut a = Matrix::zero(2, 2);
        a.add_entry(&f, 0, 0, q(&f, 2));
        a.add_entry(&f, 0, 1, q(&f, 1));
        a.add_entry(&f, 1, 0, q(&f, 1));
        a.add_entry(&f, 1, 1, q(&f, 3));
        let sol = solve_linear(&f, &a, &[q(&f, 3), q(&f, 5)]).unwrap();
        let LinearSolution::Solved { x, nullity } = sol else {
            panic!("expected a solution")
        };
        assert_eq!(nullity, 0);
        let five_inv = f.inv(&q(&f, 5)).unwrap();
        assert_eq!(x[0], f.mul(&q(&f, 4), &five_inv));
        assert_eq!(x[1], f.mul(&q(&f, 7), &five_inv));
    }

    #[test]
    fn reports_inconsistency_certificate() {
        let f = Cyclotomic::new(3);
        let z = f.root_of_unity(1);
        // x + y = 1 ; ζ x + ζ y = 1  (inconsistent since ζ ≠ 1)
        let mut a = Matrix::zero(2, 2);
        for c in 0..2 {
            a.add_entry(&f, 0, c, f.one());
            a.add_entry(&f, 1, c, z.clone());
        }
        let sol = solve_linear(&f, &a, &[f.one(), f.one()]).unwrap();
        let LinearSolution::Inconsistent { row, rhs } = sol else {
            panic!("expected inconsistency")
        };
        assert_eq!(row, 1);
        assert_eq!(rhs, f.sub(&f.one(), &z));
    }

    #[test]
    fn nullity_counts_free_variables() {
        let f = Cyclotomic::new(1);
        let mut a = Matrix::zero(1, 3);
        a.add_entry(&f, 0, 1, f.one());
        let sol = solve_linear(&f, &a, &[q(&f, 2)]).unwrap();
        assert_eq!(
            sol,
            LinearSolution::Solved {
                x: vec![f.zero(), q(&f, 2), f.zero()],
                nullity: 2
            }
        );
    }

    #[test]
    fn inverse_of_permutation_with_phases() {
        let f = Cyclotomic::new(4);
        let i = f.root_of_unity(1);
        let m = LinearMap::from_columns(&f, vec![vec![(1, i.clone())], vec![(0, f.one())]]);
        let inv = invert_map(&f, &m).unwrap();
        assert_eq!(inv.compose(&f, &m), LinearMap::identity(&f, 2));
        assert_eq!(m.compose(&f, &inv), LinearMap::identity(&f, 2));
    }

    #[test]
    fn singular_map_is_rejected() {
        let f = Cyclotomic::new(1);
        let m = LinearMap::from_columns(&f, vec![vec![(0, f.one())], vec![(0, f.one())]]);
        assert_eq!(
            invert_map(&f, &m),
            Err(AlgebraError::NotInvertible { rank: 1, dim: 2 })
        );
    }
}
