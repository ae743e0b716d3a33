//! Exact integer matrices, Smith and Hermite normal forms.
//!
//! Entries are arbitrary precision; intermediate growth during the
//! reductions is unbounded for fixed-width types.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> IntMatrix {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> IntMatrix {
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<i64>>) -> IntMatrix {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut m = IntMatrix::zeros(r, c);
        for (i, row) in rows.into_iter().enumerate() {
            assert_eq!(row.len(), c);
            for (j, v) in row.into_iter().enumerate() {
                m[(i, j)] = BigInt::from(v);
            }
        }
        m
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn from_columns(rows: usize, cols: Vec<Vec<BigInt>>) -> IntMatrix {
        let mut m = IntMatrix::zeros(rows, cols.len());
        for (j, col) in cols.into_iter().enumerate() {
            assert_eq!(col.len(), rows);
            for (i, v) in col.into_iter().enumerate() {
                m[(i, j)] = v;
            }
        }
        m
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self[(i, k)].is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let p = &self[(i, k)] * &other[(k, j)];
                    out[(i, j)] += p;
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| &self[(i, j)] * &v[j]).sum())
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[a] += q * row[b]
    fn add_row(&mut self, a: usize, b: usize, q: &BigInt) {
        for j in 0..self.cols {
            let p = q * &self[(b, j)];
            self[(a, j)] += p;
        }
    }

    /// col[a] += q * col[b]
    fn add_col(&mut self, a: usize, b: usize, q: &BigInt) {
        for i in 0..self.rows {
            let p = q * &self[(i, b)];
            self[(i, a)] += p;
        }
    }

    fn negate_row(&mut self, a: usize) {
        for j in 0..self.cols {
            let v = -self[(a, j)].clone();
            self[(a, j)] = v;
        }
    }

    fn negate_col(&mut self, a: usize) {
        for i in 0..self.rows {
            let v = -self[(i, a)].clone();
            self[(i, a)] = v;
        }
    }

    /// Fraction-free Bareiss determinant.
    pub fn det(&self) -> BigInt {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut m = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m[(k, k)].is_zero() {
                match (k + 1..n).find(|&i| !m[(i, k)].is_zero()) {
                    Some(i) => {
                        m.swap_rows(k, i);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (&m[(k, k)] * &m[(i, j)] - &m[(i, k)] * &m[(k, j)]) / &prev;
                    m[(i, j)] = v;
                }
                m[(i, k)] = BigInt::zero();
            }
            prev = m[(k, k)].clone();
        }
        sign * m[(n - 1, n - 1)].clone()
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }
}

/// `u * a * v = s` with `u`, `v` unimodular and `s` diagonal with a
/// divisibility chain of nonnegative entries. The inverses are tracked
/// alongside so callers can change basis in both directions.
#[derive(Debug, Clone)]
pub struct Snf {
    pub u: IntMatrix,
    pub uinv: IntMatrix,
    pub s: IntMatrix,
    pub v: IntMatrix,
    pub vinv: IntMatrix,
}

impl Snf {
    pub fn rank(&self) -> usize {
        (0..self.s.rows.min(self.s.cols))
            .take_while(|&i| !self.s[(i, i)].is_zero())
            .count()
    }

    /// Diagonal entries, including trailing zeros up to min(rows, cols).
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.s.rows.min(self.s.cols))
            .map(|i| self.s[(i, i)].clone())
            .collect()
    }

    /// Nontrivial invariant factors (entries > 1).
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        self.diagonal()
            .into_iter()
            .filter(|d| !d.is_zero() && !d.is_one())
            .collect()
    }
}

pub fn smith_normal_form(a: &IntMatrix) -> Snf {
    let mut s = a.clone();
    let mut u = IntMatrix::identity(a.rows);
    let mut uinv = IntMatrix::identity(a.rows);
    let mut v = IntMatrix::identity(a.cols);
    let mut vinv = IntMatrix::identity(a.cols);
    let limit = a.rows.min(a.cols);
    let mut t = 0;
    while t < limit {
        // Bring the submatrix entry of least magnitude to the pivot.
        let mut pivot: Option<(usize, usize)> = None;
        for i in t..a.rows {
            for j in t..a.cols {
                if s[(i, j)].is_zero() {
                    continue;
                }
                if pivot.map_or(true, |(pi, pj)| s[(i, j)].abs() < s[(pi, pj)].abs()) {
                    pivot = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        s.swap_rows(t, pi);
        u.swap_rows(t, pi);
        uinv.swap_cols(t, pi);
        s.swap_cols(t, pj);
        v.swap_cols(t, pj);
        vinv.swap_rows(t, pj);

        'reduce: loop {
            for i in t + 1..a.rows {
                if s[(i, t)].is_zero() {
                    continue;
                }
                let q = -(&s[(i, t)] / &s[(t, t)]);
                s.add_row(i, t, &q);
                u.add_row(i, t, &q);
                uinv.add_col(t, i, &-&q);
                if !s[(i, t)].is_zero() {
                    s.swap_rows(t, i);
                    u.swap_rows(t, i);
                    uinv.swap_cols(t, i);
                    continue 'reduce;
                }
            }
            for j in t + 1..a.cols {
                if s[(t, j)].is_zero() {
                    continue;
                }
                let q = -(&s[(t, j)] / &s[(t, t)]);
                s.add_col(j, t, &q);
                v.add_col(j, t, &q);
                vinv.add_row(t, j, &-&q);
                if !s[(t, j)].is_zero() {
                    s.swap_cols(t, j);
                    v.swap_cols(t, j);
                    vinv.swap_rows(t, j);
                    continue 'reduce;
                }
            }
            // Pivot must divide the rest of the submatrix for the
            // divisibility chain; fold a bad row into the pivot row.
            for i in t + 1..a.rows {
                for j in t + 1..a.cols {
                    if !(&s[(i, j)] % &s[(t, t)]).is_zero() {
                        let one = BigInt::one();
                        s.add_row(t, i, &one);
                        u.add_row(t, i, &one);
                        uinv.add_col(i, t, &-&one);
                        continue 'reduce;
                    }
                }
            }
            break;
        }
        if s[(t, t)].is_negative() {
            s.negate_row(t);
            u.negate_row(t);
            uinv.negate_col(t);
        }
        t += 1;
    }
    Snf { u, uinv, s, v, vinv }
}

/// Canonical column Hermite normal form of the column lattice of `a`:
/// column echelon with positive pivots, entries left of a pivot reduced
/// to `[0, pivot)`, zero columns dropped.
pub fn column_hnf(a: &IntMatrix) -> IntMatrix {
    let mut h = a.clone();
    let mut next_col = 0usize;
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    for r in 0..h.rows {
        if next_col >= h.cols {
            break;
        }
        // Gcd-eliminate row r across columns next_col.. into one entry.
        loop {
            let mut nz: Vec<usize> = (next_col..h.cols)
                .filter(|&j| !h[(r, j)].is_zero())
                .collect();
            if nz.len() <= 1 {
                break;
            }
            nz.sort_by_key(|&j| h[(r, j)].abs());
            let (ja, jb) = (nz[0], nz[1]);
            let q = -(&h[(r, jb)] / &h[(r, ja)]);
            h.add_col(jb, ja, &q);
        }
        let Some(j) = (next_col..h.cols).find(|&j| !h[(r, j)].is_zero()) else {
            continue;
        };
        h.swap_cols(next_col, j);
        if h[(r, next_col)].is_negative() {
            for i in 0..h.rows {
                let v = -h[(i, next_col)].clone();
                h[(i, next_col)] = v;
            }
        }
        // Reduce earlier columns' entries in this row into [0, pivot).
        let pivot = h[(r, next_col)].clone();
        for jl in 0..next_col {
            let v = &h[(r, jl)];
            let mut q = v / &pivot;
            if (v - &q * &pivot).is_negative() {
                q -= BigInt::one();
            }
            let q = -q;
            if !q.is_zero() {
                h.add_col(jl, next_col, &q);
            }
        }
        pivots.push((r, next_col));
        next_col += 1;
    }
    // Drop the all-zero columns beyond the echelon.
    let cols: Vec<Vec<BigInt>> = (0..next_col).map(|j| h.column(j)).collect();
    IntMatrix::from_columns(h.rows, cols)
}

/// True iff `x` lies in the integer column span of the HNF `h`.
pub fn hnf_contains(h: &IntMatrix, x: &[BigInt]) -> bool {
    assert_eq!(h.rows, x.len());
    let mut residual: Vec<BigInt> = x.to_vec();
    let mut col = 0usize;
    for r in 0..h.rows {
        if col < h.cols && !h[(r, col)].is_zero() {
            let q = &residual[r] / &h[(r, col)];
            if !(&residual[r] - &q * &h[(r, col)]).is_zero() {
                return false;
            }
            for i in 0..h.rows {
                let p = &q * &h[(i, col)];
                residual[i] -= p;
            }
            col += 1;
        } else if !residual[r].is_zero() {
            return false;
        }
    }
    residual.iter().all(|v| v.is_zero())
}

/// A basis of the integer kernel of `a`, as columns.
pub fn kernel(a: &IntMatrix) -> IntMatrix {
    let snf = smith_normal_form(a);
    let rank = snf.rank();
    let cols: Vec<Vec<BigInt>> = (rank..a.cols).map(|j| snf.v.column(j)).collect();
    IntMatrix::from_columns(a.cols, cols)
}

/// One integer solution of `a x = b`, if any.
pub fn solve(a: &IntMatrix, b: &[BigInt]) -> Option<Vec<BigInt>> {
    assert_eq!(a.rows, b.len());
    let snf = smith_normal_form(a);
    let ub = snf.u.mul_vec(b);
    let mut y = vec![BigInt::zero(); a.cols];
    let limit = a.rows.min(a.cols);
    for i in 0..a.rows {
        if i < limit && !snf.s[(i, i)].is_zero() {
            let q = &ub[i] / &snf.s[(i, i)];
            if !(&ub[i] - &q * &snf.s[(i, i)]).is_zero() {
                return None;
            }
            y[i] = q;
        } else if !ub[i].is_zero() {
            return None;
        }
    }
    Some(snf.v.mul_vec(&y))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    fn check_snf(a: &IntMatrix) {
        let snf = smith_normal_form(a);
        assert_eq!(snf.u.mul(a).mul(&snf.v), snf.s, "U A V != S");
        assert_eq!(snf.u.det().abs(), BigInt::one());
        assert_eq!(snf.v.det().abs(), BigInt::one());
        assert_eq!(snf.u.mul(&snf.uinv), IntMatrix::identity(a.rows));
        assert_eq!(snf.v.mul(&snf.vinv), IntMatrix::identity(a.cols));
        let d = snf.diagonal();
        for w in d.windows(2) {
            assert!(!w[0].is_negative());
            if w[0].is_zero() {
                assert!(w[1].is_zero());
            } else {
                assert!((&w[1] % &w[0]).is_zero(), "chain broken: {d:?}");
            }
        }
        for i in 0..snf.s.rows {
            for j in 0..snf.s.cols {
                if i != j {
                    assert!(snf.s[(i, j)].is_zero());
                }
            }
        }
    }

    #[test]
    fn snf_small_example() {
        let a = IntMatrix::from_rows(vec![vec![1, 2], vec![3, 4]]);
        let snf = smith_normal_form(&a);
        check_snf(&a);
        let d: Vec<i64> = snf.diagonal().iter().map(|x| x.to_i64().unwrap()).collect();
        assert_eq!(d, vec![1, 2]); // gcd of entries 1, |det| = 2
    }

    #[test]
    fn snf_zero_and_identity() {
        let z = IntMatrix::zeros(3, 2);
        assert!(smith_normal_form(&z).s.is_zero());
        let id = IntMatrix::identity(4);
        assert_eq!(smith_normal_form(&id).s, id);
        check_snf(&z);
        check_snf(&id);
    }

    #[test]
    fn snf_fuzz_small() {
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for _ in 0..200 {
            let rows = (next() % 5 + 1) as usize;
            let cols = (next() % 5 + 1) as usize;
            let mut a = IntMatrix::zeros(rows, cols);
            for i in 0..rows {
                for j in 0..cols {
                    a[(i, j)] = BigInt::from((next() % 19) as i64 - 9);
                }
            }
            check_snf(&a);
        }
    }

    #[test]
    fn hnf_canonical_for_equal_lattices() {
        // Column spans {(2,0),(0,3)} and {(2,3),(2,-3),(0,3)} as lattices:
        // (2,3) - (0,3) = (2,0), so the second set spans the first.
        let a = IntMatrix::from_rows(vec![vec![2, 0, 0], vec![0, 3, 3]]);
        let b = IntMatrix::from_rows(vec![vec![2, 2, 0], vec![3, -3, 3]]);
        let ha = column_hnf(&a);
        let hb = column_hnf(&b);
        for j in 0..ha.cols {
            assert!(hnf_contains(&hb, &ha.column(j)));
        }
        for j in 0..hb.cols {
            assert!(hnf_contains(&ha, &hb.column(j)));
        }
        assert_eq!(ha, hb);
    }

    #[test]
    fn hnf_same_lattice_same_form() {
        let a = IntMatrix::from_rows(vec![vec![1, 0], vec![1, 2]]);
        let b = IntMatrix::from_rows(vec![vec![1, 2, 3], vec![3, 4, 1]]);
        // b's columns: (1,3),(2,4),(3,1): det of first two = -2; lattice?
        let ha = column_hnf(&a);
        let hb = column_hnf(&b);
        let mutual = (0..ha.cols).all(|j| hnf_contains(&hb, &ha.column(j)))
            && (0..hb.cols).all(|j| hnf_contains(&ha, &hb.column(j)));
        if mutual {
            assert_eq!(ha, hb);
        }
    }

    #[test]
    fn membership_in_2z() {
        let a = IntMatrix::from_rows(vec![vec![2]]);
        let h = column_hnf(&a);
        assert!(hnf_contains(&h, &[BigInt::from(4)]));
        assert!(!hnf_contains(&h, &[BigInt::from(3)]));
    }

    #[test]
    fn kernel_and_solve() {
        let a = IntMatrix::from_rows(vec![vec![1, 2, 3], vec![2, 4, 6]]);
        let k = kernel(&a);
        assert_eq!(k.cols, 2);
        for j in 0..k.cols {
            let prod = a.mul_vec(&k.column(j));
            assert!(prod.iter().all(|v| v.is_zero()));
        }
        let b = vec![BigInt::from(6), BigInt::from(12)];
        let x = solve(&a, &b).unwrap();
        assert_eq!(a.mul_vec(&x), b);
        assert!(solve(&a, &[BigInt::from(1), BigInt::from(1)]).is_none());
    }
}
