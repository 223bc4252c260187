use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("empty group table")]
    Empty,
    #[error("row {row} has {len} entries, expected {expected}")]
    NotSquare { row: usize, len: usize, expected: usize },
    #[error("entry {value} at row {row}, column {col} is out of range")]
    OutOfRange { row: usize, col: usize, value: usize },
    #[error("row {row} repeats element {value}")]
    RowRepeat { row: usize, value: usize },
    #[error("column {col} repeats element {value}")]
    ColumnRepeat { col: usize, value: usize },
    #[error("no two-sided identity element")]
    NoIdentity,
    #[error("not associative at ({a}, {b}, {c})")]
    NotAssociative { a: usize, b: usize, c: usize },
}

/// A finite group given by its Cayley table on `0..order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    cayley: Vec<Vec<usize>>,
    inverse: Vec<usize>,
    identity: usize,
}

impl FiniteGroup {
    /// Validates a Cayley table: square, Latin, with identity, associative.
    pub fn from_table(cayley: Vec<Vec<usize>>) -> Result<Self, GroupError> {
        let n = cayley.len();
        if n == 0 {
            return Err(GroupError::Empty);
        }
        for (row, r) in cayley.iter().enumerate() {
            if r.len() != n {
                return Err(GroupError::NotSquare {
                    row,
                    len: r.len(),
                    expected: n,
                });
            }
            if let Some((col, &value)) = r.iter().enumerate().find(|(_, &v)| v >= n) {
                return Err(GroupError::OutOfRange { row, col, value });
            }
        }
        for row in 0..n {
            let mut seen = vec![false; n];
            for &v in &cayley[row] {
                if std::mem::replace(&mut seen[v], true) {
                    return Err(GroupError::RowRepeat { row, value: v });
                }
            }
        }
        for col in 0..n {
            let mut seen = vec![false; n];
            for r in &cayley {
                let v = r[col];
                if std::mem::replace(&mut seen[v], true) {
                    return Err(GroupError::ColumnRepeat { col, value: v });
                }
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|a| cayley[e][a] == a && cayley[a][e] == a))
            .ok_or(GroupError::NoIdentity)?;
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if cayley[cayley[a][b]][c] != cayley[a][cayley[b][c]] {
                        return Err(GroupError::NotAssociative { a, b, c });
                    }
                }
            }
        }
        // Latin rows guarantee a unique right inverse, which is two-sided in a
        // finite associative loop.
        let inverse = (0..n)
            .map(|a| (0..n).find(|&b| cayley[a][b] == identity).unwrap())
            .collect();
        Ok(FiniteGroup {
            cayley,
            inverse,
            identity,
        })
    }

    /// ℤ/n with elements `0..n`.
    pub fn cyclic(n: usize) -> Self {
        assert!(n >= 1, "cyclic group of order 0");
        let cayley = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        FiniteGroup {
            cayley,
            inverse: (0..n).map(|a| (n - a) % n).collect(),
            identity: 0,
        }
    }

    /// `G1 × G2`, with `(a1, a2)` at index `a1 * |G2| + a2`.
    pub fn direct_product(g1: &FiniteGroup, g2: &FiniteGroup) -> Self {
        let (n1, n2) = (g1.order(), g2.order());
        let pair = |i: usize| (i / n2, i % n2);
        let cayley = (0..n1 * n2)
            .map(|i| {
                (0..n1 * n2)
                    .map(|j| {
                        let ((a1, a2), (b1, b2)) = (pair(i), pair(j));
                        g1.mul(a1, b1) * n2 + g2.mul(a2, b2)
                    })
                    .collect()
            })
            .collect();
        let inverse = (0..n1 * n2)
            .map(|i| {
                let (a1, a2) = pair(i);
                g1.inv(a1) * n2 + g2.inv(a2)
            })
            .collect();
        FiniteGroup {
            cayley,
            inverse,
            identity: g1.identity() * n2 + g2.identity(),
        }
    }

    pub fn order(&self) -> usize {
        self.cayley.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.cayley[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn cayley(&self) -> &[Vec<usize>] {
        &self.cayley
    }

    /// A bijection `self → other` that is a homomorphism, if one exists.
    /// Brute force; intended for groups of order ≤ 8.
    pub fn find_isomorphism(&self, other: &FiniteGroup) -> Option<Vec<usize>> {
        let n = self.order();
        if n != other.order() {
            return None;
        }
        let mut map = vec![usize::MAX; n];
        let mut used = vec![false; n];
        self.extend_iso(other, 0, &mut map, &mut used).then_some(map)
    }

    fn extend_iso(&self, other: &FiniteGroup, a: usize, map: &mut [usize], used: &mut [bool]) -> bool {
        let n = self.order();
        if a == n {
            return (0..n).all(|x| (0..n).all(|y| map[self.mul(x, y)] == other.mul(map[x], map[y])));
        }
        for b in 0..n {
            if used[b] {
                continue;
            }
            map[a] = b;
            used[b] = true;
            // prune on products of already-mapped elements
            let consistent = (0..=a).all(|x| {
                (0..=a).all(|y| {
                    let xy = self.mul(x, y);
                    xy > a || map[xy] == other.mul(map[x], map[y])
                })
            });
            if consistent && self.extend_iso(other, a + 1, map, used) {
                return true;
            }
            used[b] = false;
        }
        map[a] = usize::MAX;
        false
    }
}
