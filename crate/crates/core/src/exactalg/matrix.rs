use super::{ExactAlgError, Field, Rational};

/// Dense row-major matrix over an exact field.
#[derive(Clone, Debug, PartialEq)]
pub struct ExactMatrix<F> {
    rows: usize,
    cols: usize,
    entries: Vec<F>,
}

impl<F: Field> ExactMatrix<F> {
    pub fn new(rows: usize, cols: usize, entries: Vec<F>) -> Result<Self, ExactAlgError> {
        if entries.len() != rows * cols {
            return Err(ExactAlgError::Shape {
                rows,
                cols,
                entries: entries.len(),
            });
        }
        Ok(ExactMatrix { rows, cols, entries })
    }

    /// All rows must have the same length. An empty row list gives a 0x0 matrix.
    pub fn from_rows(rows: Vec<Vec<F>>) -> Result<Self, ExactAlgError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(ExactAlgError::RaggedRows);
        }
        Self::new(r, c, rows.into_iter().flatten().collect())
    }

    pub fn identity(n: usize) -> Self {
        let entries = (0..n * n)
            .map(|k| if k / n == k % n { F::one() } else { F::zero() })
            .collect();
        ExactMatrix {
            rows: n,
            cols: n,
            entries,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &F {
        &self.entries[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[F] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    fn row_vecs(&self) -> Vec<Vec<F>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    /// Rank by fraction-free (Bareiss) elimination.
    #[allow(clippy::needless_range_loop)]
    pub fn rank(&self) -> usize {
        let mut a = self.row_vecs();
        let mut prev = F::one();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !a[i][c].is_zero()) else {
                continue;
            };
            a.swap(r, p);
            let prev_inv = prev.inv().expect("Bareiss pivots are nonzero");
            let pivot = a[r][c].clone();
            for i in r + 1..self.rows {
                let lead = a[i][c].clone();
                for j in c + 1..self.cols {
                    let num = pivot.clone() * a[i][j].clone() - lead.clone() * a[r][j].clone();
                    a[i][j] = num * prev_inv.clone();
                }
                a[i][c] = F::zero();
            }
            prev = pivot;
            r += 1;
        }
        r
    }

    /// Reduced row echelon form and the pivot columns, by Gauss-Jordan
    /// elimination with field division.
    #[allow(clippy::needless_range_loop)]
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut a = self.row_vecs();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !a[i][c].is_zero()) else {
                continue;
            };
            a.swap(r, p);
            let inv = a[r][c].inv().expect("nonzero pivot");
            for x in a[r].iter_mut() {
                *x = x.clone() * inv.clone();
            }
            for i in 0..self.rows {
                if i == r || a[i][c].is_zero() {
                    continue;
                }
                let factor = a[i][c].clone();
                for j in 0..self.cols {
                    let sub = factor.clone() * a[r][j].clone();
                    a[i][j] = a[i][j].clone() - sub;
                }
            }
            pivots.push(c);
            r += 1;
        }
        let m = ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: a.into_iter().flatten().collect(),
        };
        (m, pivots)
    }

    /// Basis of the right nullspace. One vector per free column `f`, with a 1
    /// in position `f`, zeros in the other free positions and the negated RREF
    /// entries in the pivot positions.
    pub fn nullspace(&self) -> Vec<Vec<F>> {
        let (rref, pivots) = self.rref();
        let free = (0..self.cols).filter(|c| !pivots.contains(c));
        free.map(|f| {
            let mut v = vec![F::zero(); self.cols];
            v[f] = F::one();
            for (k, &p) in pivots.iter().enumerate() {
                v[p] = -rref.get(k, f).clone();
            }
            v
        })
        .collect()
    }
}

pub fn exact_matrix_rank<F: Field>(m: &ExactMatrix<F>) -> usize {
    m.rank()
}

pub fn exact_matrix_nullspace<F: Field>(m: &ExactMatrix<F>) -> Vec<Vec<F>> {
    m.nullspace()
}

/// A point of the projective line: a finite parameter or the point at infinity.
#[derive(Clone, Debug, PartialEq)]
pub enum LinePoint {
    Finite(Rational),
    Infinity,
}

/// Whether the given points of the degree-`n` rational normal curve
/// `t -> (1, t, ..., t^n)` are linearly independent.
pub fn vandermonde_general_position(n: usize, params: &[LinePoint]) -> Result<bool, ExactAlgError> {
    if params.len() > n + 1 {
        return Err(ExactAlgError::TooManyPoints {
            points: params.len(),
            limit: n + 1,
        });
    }
    let rows = params
        .iter()
        .map(|p| match p {
            LinePoint::Finite(t) => (0..=n as u32).map(|k| t.pow(k)).collect(),
            LinePoint::Infinity => {
                let mut row = vec![Rational::zero(); n + 1];
                row[n] = Rational::one();
                row
            }
        })
        .collect();
    let m = ExactMatrix::from_rows(rows)?;
    Ok(m.rank() == params.len())
}
