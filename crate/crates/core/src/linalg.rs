//! Small exact linear algebra: column-sparse matrices for operator identities
//! and dense kernels over fields and fraction-free over integral domains.

use std::collections::BTreeMap;

use crate::algebra::{Field, Ring};

/// Column-major sparse matrix over a ring.
#[derive(Clone, Debug)]
pub struct SparseMat<R> {
    rows: usize,
    cols: Vec<BTreeMap<usize, R>>,
    zero: R,
}

impl<R: Ring> SparseMat<R> {
    pub fn zero(rows: usize, cols: usize, zero: R) -> Self {
        SparseMat { rows, cols: vec![BTreeMap::new(); cols], zero }
    }

    pub fn identity(n: usize, zero: R) -> Self {
        let mut m = SparseMat::zero(n, n, zero.clone());
        for k in 0..n {
            m.add_entry(k, k, zero.one_like());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols.len()
    }

    pub fn add_entry(&mut self, r: usize, c: usize, v: R) {
        let col = &mut self.cols[c];
        let new = match col.get(&r) {
            Some(x) => x.plus(&v),
            None => v,
        };
        if new.is_zero() {
            col.remove(&r);
        } else {
            col.insert(r, new);
        }
    }

    pub fn get(&self, r: usize, c: usize) -> R {
        self.cols[c].get(&r).cloned().unwrap_or_else(|| self.zero.clone())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols(), rhs.rows);
        let mut out = SparseMat::zero(self.rows, rhs.cols(), self.zero.clone());
        for (c, col) in rhs.cols.iter().enumerate() {
            for (k, b) in col {
                for (r, a) in &self.cols[*k] {
                    out.add_entry(*r, c, a.times(b));
                }
            }
        }
        out
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (c, col) in rhs.cols.iter().enumerate() {
            for (r, v) in col {
                out.add_entry(*r, c, v.clone());
            }
        }
        out
    }

    pub fn scale(&self, s: &R) -> Self {
        let mut out = SparseMat::zero(self.rows, self.cols(), self.zero.clone());
        for (c, col) in self.cols.iter().enumerate() {
            for (r, v) in col {
                out.add_entry(*r, c, v.times(s));
            }
        }
        out
    }

    pub fn to_dense(&self) -> Vec<Vec<R>> {
        (0..self.rows).map(|r| (0..self.cols()).map(|c| self.get(r, c)).collect()).collect()
    }

    pub fn column_sums(&self) -> Vec<R> {
        self.cols.iter().map(|col| col.values().fold(self.zero.clone(), |acc, v| acc.plus(v))).collect()
    }
}

impl<R: Ring> PartialEq for SparseMat<R> {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows && self.cols == other.cols
    }
}

/// Row echelon data of a dense matrix over a field.
fn rref<F: Field>(mut m: Vec<Vec<F>>, ncols: usize) -> (Vec<Vec<F>>, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        let Some(p) = (row..m.len()).find(|&r| !m[r][col].is_zero()) else { continue };
        m.swap(row, p);
        let inv = m[row][col].inv().unwrap();
        for x in m[row].iter_mut() {
            *x = x.times(&inv);
        }
        for r in 0..m.len() {
            if r != row && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in col..ncols {
                    let t = m[row][c].times(&f);
                    m[r][c] = m[r][c].minus(&t);
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == m.len() {
            break;
        }
    }
    (m, pivots)
}

/// Basis of the right kernel of a dense matrix over a field.
pub fn kernel<F: Field>(m: &[Vec<F>], ncols: usize) -> Vec<Vec<F>> {
    let (r, pivots) = rref(m.to_vec(), ncols);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![F::zero(); ncols];
            v[fc] = F::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = r[row][fc].negate();
            }
            v
        })
        .collect()
}

/// Right kernel over an integral domain by fraction-free (Bareiss)
/// elimination. Kernel vectors have entries in the ring itself: for each
/// free column the vector is built from the final pivot and the reduced
/// column, so no division leaves the ring.
pub fn kernel_fraction_free<R: Ring>(m: &[Vec<R>], ncols: usize) -> Vec<Vec<R>> {
    let mut a: Vec<Vec<R>> = m.to_vec();
    let nrows = a.len();
    let zero = a[0][0].zero_like();
    let one = zero.one_like();
    let mut prev = one.clone();
    let mut pivots: Vec<usize> = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        if row == nrows {
            break;
        }
        let Some(p) = (row..nrows).find(|&r| !a[r][col].is_zero()) else { continue };
        a.swap(row, p);
        let piv = a[row][col].clone();
        for r in 0..nrows {
            if r == row {
                continue;
            }
            let f = a[r][col].clone();
            for c in 0..ncols {
                if c == col {
                    continue;
                }
                // same update above and below the pivot; earlier pivot
                // entries become `piv`, everything stays in the ring
                let t = a[r][c].times(&piv).minus(&a[row][c].times(&f));
                a[r][c] = t.try_div(&prev).expect("Bareiss division is exact");
            }
            a[r][col] = zero.clone();
        }
        prev = piv;
        pivots.push(col);
        row += 1;
    }
    // After full fraction-free Gauss–Jordan, every pivot row k reads
    // d·x_{p_k} + Σ_free a[k][f] x_f = 0 with the common pivot d = prev.
    let d = prev;
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![zero.clone(); ncols];
            v[fc] = d.clone();
            for (k, &pc) in pivots.iter().enumerate() {
                v[pc] = a[k][fc].negate();
            }
            v
        })
        .collect()
}

/// Determinant over a field by elimination.
pub fn det<F: Field>(m: &[Vec<F>]) -> F {
    let n = m.len();
    let mut a = m.to_vec();
    let mut acc = F::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !a[r][col].is_zero()) else { return F::zero() };
        if p != col {
            a.swap(p, col);
            acc = acc.negate();
        }
        let piv = a[col][col].clone();
        acc = acc.times(&piv);
        let inv = piv.inv().unwrap();
        for r in col + 1..n {
            if a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].times(&inv);
            for c in col..n {
                let t = a[col][c].times(&f);
                a[r][c] = a[r][c].minus(&t);
            }
        }
    }
    acc
}

/// Determinant over an integral domain by Bareiss elimination.
pub fn det_fraction_free<R: Ring>(m: &[Vec<R>]) -> R {
    let n = m.len();
    let mut a = m.to_vec();
    let one = a[0][0].one_like();
    let mut prev = one.clone();
    let mut sign = false;
    for k in 0..n {
        let Some(p) = (k..n).find(|&r| !a[r][k].is_zero()) else { return one.zero_like() };
        if p != k {
            a.swap(p, k);
            sign = !sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = a[i][j].times(&a[k][k]).minus(&a[i][k].times(&a[k][j]));
                a[i][j] = t.try_div(&prev).expect("Bareiss division is exact");
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if sign {
        d.negate()
    } else {
        d
    }
}

pub fn mat_vec<R: Ring>(m: &[Vec<R>], v: &[R]) -> Vec<R> {
    m.iter()
        .map(|row| row.iter().zip(v).fold(v[0].zero_like(), |acc, (a, b)| acc.plus(&a.times(b))))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{UPoly, Q};

    fn qm(rows: &[&[i64]]) -> Vec<Vec<Q>> {
        rows.iter().map(|r| r.iter().map(|&x| Q::from_int(x)).collect()).collect()
    }

    #[test]
    fn determinants_agree() {
        let m = qm(&[&[2, -1, 0], &[1, 3, -2], &[0, 5, 4]]);
        assert_eq!(det(&m), Q::from_int(48));
        assert_eq!(det_fraction_free(&m), Q::from_int(48));
        let p = vec![vec![UPoly::x(), UPoly::one()], vec![UPoly::one(), UPoly::x()]];
        assert_eq!(det_fraction_free(&p), UPoly::from_ints(&[-1, 0, 1]));
    }

    #[test]
    fn field_kernel() {
        let m = qm(&[&[1, 2, 3], &[2, 4, 6]]);
        let k = kernel(&m, 3);
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(mat_vec(&m, v).iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn fraction_free_kernel_over_polynomials() {
        // H - (1 + a) I for the size-two Hamiltonian [[a, a], [1, 1]]
        let a = UPoly::x();
        let one = UPoly::one();
        let lam = a.add(&one);
        let m = vec![vec![a.sub(&lam), a.clone()], vec![one.clone(), one.sub(&lam)]];
        let k = kernel_fraction_free(&m, 2);
        assert_eq!(k.len(), 1);
        assert!(mat_vec(&m, &k[0]).iter().all(|x| x.is_zero()));
        // proportional to (a, 1)
        assert!(k[0][0].mul(&one).sub(&k[0][1].mul(&a)).is_zero());
    }

    #[test]
    fn fraction_free_matches_field_kernel() {
        let m = qm(&[&[2, -1, 0, 1], &[1, 3, -2, 0], &[3, 2, -2, 1]]);
        let k = kernel_fraction_free(&m, 4);
        assert_eq!(k.len(), kernel(&m, 4).len());
        for v in &k {
            assert!(mat_vec(&m, v).iter().all(|x| x.is_zero()));
            assert!(v.iter().any(|x| !x.is_zero()));
        }
    }
}
