//! Smith normal form over the integers, with big-integer entries.
//!
//! Pivoting always picks the entry of least absolute value in the remaining
//! block, so every elementary operation is unimodular.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type IntMatrix = Vec<Vec<BigInt>>;

/// `u * m * v = d` with `u`, `v` unimodular and `d` diagonal with `d_i | d_{i+1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Smith {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
}

impl Smith {
    /// Diagonal entries of `d` up to `min(rows, cols)`, zeros included.
    pub fn diagonal(&self) -> Vec<BigInt> {
        let k = self.d.len().min(self.d.first().map_or(0, |r| r.len()));
        (0..k).map(|i| self.d[i][i].clone()).collect()
    }

    pub fn rank(&self) -> usize {
        self.diagonal().iter().filter(|x| !x.is_zero()).count()
    }
}

pub fn from_i64(m: &[Vec<i64>]) -> IntMatrix {
    m.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
}

pub fn identity(n: usize) -> IntMatrix {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect()
}

pub fn matmul(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    let inner = b.len();
    let cols = b.first().map_or(0, |r| r.len());
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| (0..inner).fold(BigInt::zero(), |acc, k| acc + &row[k] * &b[k][j]))
                .collect()
        })
        .collect()
}

/// Determinant by fraction-free elimination (Bareiss).
pub fn determinant(m: &IntMatrix) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a = m.clone();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(i, k);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = t / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * a[n - 1][n - 1].clone()
}

/// Row/column reduction state. Row operations are mirrored on `left`
/// (any width), column operations on `right` and, inversely, on `right_inv`.
pub(crate) struct Reducer {
    pub a: IntMatrix,
    pub left: Option<IntMatrix>,
    pub right: Option<IntMatrix>,
    pub right_inv: Option<IntMatrix>,
    rows: usize,
    cols: usize,
}

impl Reducer {
    pub fn new(a: IntMatrix, cols: usize) -> Reducer {
        let rows = a.len();
        Reducer { a, left: None, right: None, right_inv: None, rows, cols }
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap(i, j);
        if let Some(l) = self.left.as_mut() {
            l.swap(i, j);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        for r in self.a.iter_mut() {
            r.swap(i, j);
        }
        if let Some(v) = self.right.as_mut() {
            for r in v.iter_mut() {
                r.swap(i, j);
            }
        }
        if let Some(w) = self.right_inv.as_mut() {
            w.swap(i, j);
        }
    }

    /// row_i -= q * row_k
    fn row_axpy(&mut self, i: usize, k: usize, q: &BigInt) {
        let (src, dst) = pair_mut(&mut self.a, k, i);
        for (d, s) in dst.iter_mut().zip(src.iter()) {
            if !s.is_zero() {
                *d -= q * s;
            }
        }
        if let Some(l) = self.left.as_mut() {
            let (src, dst) = pair_mut(l, k, i);
            for (d, s) in dst.iter_mut().zip(src.iter()) {
                if !s.is_zero() {
                    *d -= q * s;
                }
            }
        }
    }

    /// col_j -= q * col_k
    fn col_axpy(&mut self, j: usize, k: usize, q: &BigInt) {
        for r in self.a.iter_mut() {
            if !r[k].is_zero() {
                let t = q * &r[k];
                r[j] -= t;
            }
        }
        if let Some(v) = self.right.as_mut() {
            for r in v.iter_mut() {
                if !r[k].is_zero() {
                    let t = q * &r[k];
                    r[j] -= t;
                }
            }
        }
        // inverse: row_k += q * row_j
        if let Some(w) = self.right_inv.as_mut() {
            let (src, dst) = pair_mut(w, j, k);
            for (d, s) in dst.iter_mut().zip(src.iter()) {
                if !s.is_zero() {
                    *d += q * s;
                }
            }
        }
    }

    fn negate_row(&mut self, i: usize) {
        for x in self.a[i].iter_mut() {
            *x = -std::mem::take(x);
        }
        if let Some(l) = self.left.as_mut() {
            for x in l[i].iter_mut() {
                *x = -std::mem::take(x);
            }
        }
    }

    fn min_pivot(&self, k: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for i in k..self.rows {
            for j in k..self.cols {
                let x = &self.a[i][j];
                if x.is_zero() {
                    continue;
                }
                let better = match best {
                    None => true,
                    Some((bi, bj)) => x.abs() < self.a[bi][bj].abs(),
                };
                if better {
                    best = Some((i, j));
                    if x.abs().is_one() {
                        return best;
                    }
                }
            }
        }
        best
    }

    pub fn run(&mut self) {
        let n = self.rows.min(self.cols);
        for k in 0..n {
            loop {
                let Some((pi, pj)) = self.min_pivot(k) else { return };
                if pi != k {
                    self.swap_rows(pi, k);
                }
                if pj != k {
                    self.swap_cols(pj, k);
                }
                let p = self.a[k][k].clone();
                let mut dirty = false;
                for i in k + 1..self.rows {
                    if self.a[i][k].is_zero() {
                        continue;
                    }
                    let q = self.a[i][k].div_floor(&p);
                    self.row_axpy(i, k, &q);
                    dirty |= !self.a[i][k].is_zero();
                }
                for j in k + 1..self.cols {
                    if self.a[k][j].is_zero() {
                        continue;
                    }
                    let q = self.a[k][j].div_floor(&p);
                    self.col_axpy(j, k, &q);
                    dirty |= !self.a[k][j].is_zero();
                }
                if dirty {
                    continue;
                }
                // divisibility: fold an offending row into row k and go again
                let offender = (k + 1..self.rows)
                    .find(|&i| (k + 1..self.cols).any(|j| !self.a[i][j].is_multiple_of(&p)));
                match offender {
                    Some(i) => {
                        let minus_one = -BigInt::one();
                        self.row_axpy(k, i, &minus_one);
                    }
                    None => break,
                }
            }
            if self.a[k][k].is_negative() {
                self.negate_row(k);
            }
        }
    }
}

fn pair_mut<T>(v: &mut [T], src: usize, dst: usize) -> (&T, &mut T) {
    assert_ne!(src, dst);
    if src < dst {
        let (a, b) = v.split_at_mut(dst);
        (&a[src], &mut b[0])
    } else {
        let (a, b) = v.split_at_mut(src);
        (&b[0], &mut a[dst])
    }
}

pub fn smith_normal_form(m: &IntMatrix) -> Smith {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut r = Reducer::new(m.clone(), cols);
    r.left = Some(identity(rows));
    r.right = Some(identity(cols));
    r.run();
    Smith { u: r.left.unwrap(), d: r.a, v: r.right.unwrap() }
}

/// Solve `a * u ≡ b (mod n)`; returns one solution with entries in `0..n`.
pub fn solve_mod(a: &[Vec<i64>], b: &[i64], n: u64) -> Option<Vec<i64>> {
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let nb = BigInt::from(n);
    let mut red = Reducer::new(from_i64(a), cols);
    red.left = Some(b.iter().map(|&x| vec![BigInt::from(x)]).collect());
    red.right = Some(identity(cols));
    red.run();
    let c: Vec<BigInt> = red.left.unwrap().into_iter().map(|r| r[0].mod_floor(&nb)).collect();
    let mut y = vec![BigInt::zero(); cols];
    for i in 0..rows {
        let d = if i < cols { red.a[i][i].clone() } else { BigInt::zero() };
        let ci = &c[i];
        if d.is_zero() {
            if !ci.is_zero() {
                return None;
            }
            continue;
        }
        let g = d.gcd(&nb);
        if !ci.is_multiple_of(&g) {
            return None;
        }
        let m = &nb / &g;
        let dd = (&d / &g).mod_floor(&m);
        let inv = mod_inverse(&dd, &m)?;
        y[i] = ((ci / &g) * inv).mod_floor(&m);
    }
    let v = red.right.unwrap();
    let u = (0..cols)
        .map(|i| {
            let s = (0..cols).fold(BigInt::zero(), |acc, j| acc + &v[i][j] * &y[j]);
            s.mod_floor(&nb).to_i64().expect("small residue")
        })
        .collect();
    Some(u)
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    if m.is_one() {
        return Some(BigInt::zero());
    }
    let e = a.extended_gcd(m);
    if e.gcd.is_one() {
        Some(e.x.mod_floor(m))
    } else {
        None
    }
}

/// Presentation of `Z^k / L` for a lattice `L` spanned by the rows of `rel`.
/// `factors` are the nontrivial invariant factors (0 would mean a free part);
/// `coords` sends a standard basis vector `e_i` to its coordinates against
/// the cyclic generators; `lift` gives, per cyclic generator, an integer
/// combination of the `e_i` representing it.
#[derive(Debug, Clone)]
pub struct Quotient {
    pub factors: Vec<BigInt>,
    pub coords: Vec<Vec<BigInt>>,
    pub lift: Vec<Vec<BigInt>>,
}

pub fn quotient(rel: &IntMatrix, k: usize) -> Quotient {
    let mut red = Reducer::new(rel.clone(), k);
    red.right = Some(identity(k));
    red.right_inv = Some(identity(k));
    red.run();
    let rank_rows = red.a.len();
    let diag: Vec<BigInt> = (0..k)
        .map(|i| if i < rank_rows { red.a[i][i].clone() } else { BigInt::zero() })
        .collect();
    let keep: Vec<usize> = (0..k).filter(|&i| !diag[i].is_one()).collect();
    let v = red.right.unwrap();
    let w = red.right_inv.unwrap();
    let factors = keep.iter().map(|&i| diag[i].clone()).collect::<Vec<_>>();
    let coords = (0..k)
        .map(|e| {
            keep.iter()
                .zip(&factors)
                .map(|(&i, d)| if d.is_zero() { v[e][i].clone() } else { v[e][i].mod_floor(d) })
                .collect()
        })
        .collect();
    let lift = keep.iter().map(|&i| w[i].clone()).collect();
    Quotient { factors, coords, lift }
}
