//! Small exact matrices over the rationals: rank by fraction-free (Bareiss)
//! elimination on integer-scaled rows, kernels and solves by rational
//! reduction. No floating point anywhere.

use num_rational::Ratio;
use num_traits::{One, Zero};
use std::fmt;

pub type Rat = Ratio<i128>;

pub fn rat(v: i128) -> Rat {
    Ratio::from_integer(v)
}

/// Dense row-major matrix. All the oracle's matrices are tiny (dimensions
/// bounded by the quiver size), so no sparsity is attempted.
#[derive(Clone, PartialEq, Eq)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat { rows, cols, data: vec![Rat::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rat::one());
        }
        m
    }

    pub fn from_columns(rows: usize, columns: &[Vec<Rat>]) -> Self {
        let mut m = Mat::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows);
            for (i, v) in col.iter().enumerate() {
                m.set(i, j, *v);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> Rat {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rat) {
        self.data[r * self.cols + c] = v;
    }

    pub fn column(&self, c: usize) -> Vec<Rat> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Rat::is_zero)
    }

    pub fn mul(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows, "shape mismatch in matrix product");
        let mut out = Mat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let v = self.get(i, k);
                if v.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let cur = out.get(i, j);
                    out.set(i, j, cur + v * other.get(k, j));
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j) * v[j]).fold(Rat::zero(), |a, b| a + b))
            .collect()
    }

    /// Rank by one-step Bareiss elimination after clearing denominators
    /// row-wise; every division is exact.
    pub fn rank(&self) -> usize {
        let mut m: Vec<Vec<i128>> = (0..self.rows)
            .map(|i| {
                let row: Vec<Rat> = (0..self.cols).map(|j| self.get(i, j)).collect();
                let scale = row.iter().fold(1i128, |acc, v| lcm(acc, *v.denom()));
                row.iter().map(|v| v.numer() * (scale / v.denom())).collect()
            })
            .collect();
        let mut prev: i128 = 1;
        let mut rank = 0;
        let mut r = 0;
        for c in 0..self.cols {
            if r >= self.rows {
                break;
            }
            let Some(pivot) = (r..self.rows).find(|&i| m[i][c] != 0) else { continue };
            m.swap(r, pivot);
            for i in r + 1..self.rows {
                for j in c + 1..self.cols {
                    let num = m[r][c].checked_mul(m[i][j]).expect("overflow")
                        - m[i][c].checked_mul(m[r][j]).expect("overflow");
                    debug_assert_eq!(num % prev, 0, "Bareiss division must be exact");
                    m[i][j] = num / prev;
                }
                m[i][c] = 0;
            }
            prev = m[r][c];
            r += 1;
            rank += 1;
        }
        rank
    }

    /// Reduced row echelon form; returns the pivot column per pivot row.
    fn rref(&self) -> (Mat, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r >= m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else { continue };
            for j in 0..m.cols {
                let (a, b) = (m.get(r, j), m.get(p, j));
                m.set(r, j, b);
                m.set(p, j, a);
            }
            let inv = m.get(r, c).recip();
            for j in 0..m.cols {
                let v = m.get(r, j) * inv;
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r || m.get(i, c).is_zero() {
                    continue;
                }
                let f = m.get(i, c);
                for j in 0..m.cols {
                    let v = m.get(i, j) - f * m.get(r, j);
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    /// Basis of the right null space, one vector per free column.
    pub fn kernel_basis(&self) -> Vec<Vec<Rat>> {
        let (rref, pivots) = self.rref();
        let mut basis = Vec::new();
        let mut pivot_iter = pivots.iter().copied().peekable();
        let free: Vec<usize> = (0..self.cols)
            .filter(|&c| {
                if pivot_iter.peek() == Some(&c) {
                    pivot_iter.next();
                    false
                } else {
                    true
                }
            })
            .collect();
        for f in free {
            let mut v = vec![Rat::zero(); self.cols];
            v[f] = Rat::one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -rref.get(row, f);
            }
            basis.push(v);
        }
        basis
    }

    /// Solve `A x = b` for a matrix with full column rank; `None` when
    /// inconsistent.
    pub fn solve(&self, b: &[Rat]) -> Option<Vec<Rat>> {
        assert_eq!(b.len(), self.rows);
        let mut aug = Mat::zeros(self.rows, self.cols + 1);
        for (i, rhs) in b.iter().enumerate() {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j));
            }
            aug.set(i, self.cols, *rhs);
        }
        let (rref, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return None;
        }
        let mut x = vec![Rat::zero(); self.cols];
        for (row, &p) in pivots.iter().enumerate() {
            x[p] = rref.get(row, self.cols);
        }
        Some(x)
    }
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Mat {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "  {}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

fn lcm(a: i128, b: i128) -> i128 {
    let g = gcd(a.abs(), b.abs());
    if g == 0 {
        0
    } else {
        a.abs() / g * b.abs()
    }
}

fn gcd(mut a: i128, mut b: i128) -> i128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}
