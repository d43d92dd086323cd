use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Dense integer matrix, row major.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    /// Build from rows; every row must have length `cols`.
    pub fn from_rows<T: Into<BigInt> + Clone>(cols: usize, rows: &[Vec<T>]) -> Self {
        let mut m = Self::zeros(rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged matrix row {i}");
            for (j, x) in row.iter().enumerate() {
                m[(i, j)] = x.clone().into();
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

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let prod = a * &other[(k, j)];
                    out[(i, j)] += prod;
                }
            }
        }
        out
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut a = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[(k, k)].is_zero() {
                match (k + 1..n).find(|&i| !a[(i, k)].is_zero()) {
                    Some(i) => {
                        a.swap_rows(k, i);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (&a[(i, j)] * &a[(k, k)] - &a[(i, k)] * &a[(k, j)]) / &prev;
                    a[(i, j)] = v;
                }
            }
            prev = a[(k, k)].clone();
        }
        sign * &a[(n - 1, n - 1)]
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[dst] += factor * row[src]
    fn add_row_multiple(&mut self, dst: usize, src: usize, factor: &BigInt) {
        if factor.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let v = &self[(src, j)] * factor;
            self[(dst, j)] += v;
        }
    }

    /// col[dst] += factor * col[src]
    fn add_col_multiple(&mut self, dst: usize, src: usize, factor: &BigInt) {
        if factor.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let v = &self[(i, src)] * factor;
            self[(i, dst)] += v;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = -&self[(i, j)];
            self[(i, j)] = v;
        }
    }

    /// Replace rows `a`, `b` by `(p*a + q*b, r*a + s*b)`. The 2x2 block must
    /// be unimodular for the operation to preserve the row lattice.
    fn combine_rows(&mut self, a: usize, b: usize, p: &BigInt, q: &BigInt, r: &BigInt, s: &BigInt) {
        for j in 0..self.cols {
            let x = self[(a, j)].clone();
            let y = self[(b, j)].clone();
            self[(a, j)] = p * &x + q * &y;
            self[(b, j)] = r * &x + s * &y;
        }
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

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Result of a Smith normal form computation: `left * input * right = diagonal`.
#[derive(Debug, Clone)]
pub struct SmithForm {
    /// Invariant factors, nonnegative, each dividing the next. Length
    /// `min(rows, cols)`; trailing entries are zero past the rank.
    pub diagonal: Vec<BigInt>,
    pub left: IntMatrix,
    pub right: IntMatrix,
    pub rank: usize,
}

impl SmithForm {
    /// The full diagonal matrix `left * input * right`.
    pub fn diagonal_matrix(&self) -> IntMatrix {
        let mut d = IntMatrix::zeros(self.left.rows(), self.right.cols());
        for (i, x) in self.diagonal.iter().enumerate() {
            d[(i, i)] = x.clone();
        }
        d
    }
}

/// Smith normal form with unimodular transformations.
pub fn smith_normal_form(input: &IntMatrix) -> SmithForm {
    let (m, n) = (input.rows(), input.cols());
    let mut a = input.clone();
    let mut left = IntMatrix::identity(m);
    let mut right = IntMatrix::identity(n);
    let mut rank = 0;

    for t in 0..m.min(n) {
        // pivot: smallest nonzero magnitude in the trailing block
        let Some((pi, pj)) = smallest_nonzero(&a, t) else {
            break;
        };
        a.swap_rows(t, pi);
        left.swap_rows(t, pi);
        a.swap_cols(t, pj);
        right.swap_cols(t, pj);

        loop {
            let mut dirty = false;
            for i in t + 1..m {
                if a[(i, t)].is_zero() {
                    continue;
                }
                let q = -a[(i, t)].div_floor(&a[(t, t)]);
                a.add_row_multiple(i, t, &q);
                left.add_row_multiple(i, t, &q);
                if !a[(i, t)].is_zero() {
                    dirty = true;
                }
            }
            for j in t + 1..n {
                if a[(t, j)].is_zero() {
                    continue;
                }
                let q = -a[(t, j)].div_floor(&a[(t, t)]);
                a.add_col_multiple(j, t, &q);
                right.add_col_multiple(j, t, &q);
                if !a[(t, j)].is_zero() {
                    dirty = true;
                }
            }
            if dirty {
                // a remainder is now smaller than the pivot; move it in
                let (pi, pj) = smallest_in_cross(&a, t);
                a.swap_rows(t, pi);
                left.swap_rows(t, pi);
                a.swap_cols(t, pj);
                right.swap_cols(t, pj);
                continue;
            }
            // row and column cleared; enforce divisibility of the rest
            let bad = (t + 1..m)
                .flat_map(|i| (t + 1..n).map(move |j| (i, j)))
                .find(|&(i, j)| !(&a[(i, j)] % &a[(t, t)]).is_zero());
            match bad {
                Some((i, _)) => {
                    let one = BigInt::one();
                    a.add_row_multiple(t, i, &one);
                    left.add_row_multiple(t, i, &one);
                }
                None => break,
            }
        }

        if a[(t, t)].is_negative() {
            a.negate_row(t);
            left.negate_row(t);
        }
        rank += 1;
    }

    let diagonal = (0..m.min(n)).map(|i| a[(i, i)].clone()).collect();
    SmithForm {
        diagonal,
        left,
        right,
        rank,
    }
}

fn smallest_nonzero(a: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in t..a.rows() {
        for j in t..a.cols() {
            let x = &a[(i, j)];
            if x.is_zero() {
                continue;
            }
            if best.map_or(true, |(bi, bj)| x.magnitude() < a[(bi, bj)].magnitude()) {
                best = Some((i, j));
            }
        }
    }
    best
}

fn smallest_in_cross(a: &IntMatrix, t: usize) -> (usize, usize) {
    let mut best = (t, t);
    let cells = (t..a.rows())
        .map(|i| (i, t))
        .chain((t + 1..a.cols()).map(|j| (t, j)));
    for (i, j) in cells {
        let x = &a[(i, j)];
        if x.is_zero() {
            continue;
        }
        if a[best].is_zero() || x.magnitude() < a[best].magnitude() {
            best = (i, j);
        }
    }
    best
}

/// Row-style Hermite normal form of the row lattice of `input`.
///
/// Zero rows are dropped. Pivots are positive and strictly increase in
/// column index; entries above a pivot lie in `[0, pivot)`.
pub fn hermite_normal_form(input: &IntMatrix) -> IntMatrix {
    let mut a = input.clone();
    let (m, n) = (a.rows(), a.cols());
    let mut r = 0;
    for c in 0..n {
        if r == m {
            break;
        }
        // fold every row below r into row r via extended gcd on column c
        for i in r + 1..m {
            if a[(i, c)].is_zero() {
                continue;
            }
            if a[(r, c)].is_zero() {
                a.swap_rows(r, i);
                continue;
            }
            let x = a[(r, c)].clone();
            let y = a[(i, c)].clone();
            let eg = x.extended_gcd(&y);
            let (g, s, t) = (eg.gcd, eg.x, eg.y);
            let u = -(&y / &g);
            let v = &x / &g;
            a.combine_rows(r, i, &s, &t, &u, &v);
        }
        if a[(r, c)].is_zero() {
            continue;
        }
        if a[(r, c)].is_negative() {
            a.negate_row(r);
        }
        let pivot = a[(r, c)].clone();
        for i in 0..r {
            let q = -a[(i, c)].div_floor(&pivot);
            a.add_row_multiple(i, r, &q);
        }
        r += 1;
    }
    let rows: Vec<Vec<BigInt>> = (0..r).map(|i| a.row(i).to_vec()).collect();
    IntMatrix::from_rows(n, &rows)
}

/// Basis of the integer kernel `{x : input * x = 0}`, as rows.
pub fn integer_kernel(input: &IntMatrix) -> Vec<Vec<BigInt>> {
    let snf = smith_normal_form(input);
    (snf.rank..input.cols())
        .map(|j| snf.right.column(j))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[Vec<i64>]) -> IntMatrix {
        IntMatrix::from_rows(rows.first().map_or(0, Vec::len), rows)
    }

    fn check_smith(input: &IntMatrix) -> SmithForm {
        let s = smith_normal_form(input);
        assert_eq!(s.left.mul(input).mul(&s.right), s.diagonal_matrix());
        assert!(s.left.determinant().abs().is_one());
        assert!(s.right.determinant().abs().is_one());
        for w in s.diagonal.windows(2) {
            if w[0].is_zero() {
                assert!(w[1].is_zero());
            } else {
                assert!((&w[1] % &w[0]).is_zero(), "{:?}", s.diagonal);
            }
        }
        assert!(s.diagonal.iter().all(|d| !d.is_negative()));
        s
    }

    #[test]
    fn smith_two_three() {
        let s = check_smith(&m(&[vec![2, 0], vec![0, 3]]));
        assert_eq!(s.diagonal, vec![BigInt::from(1), BigInt::from(6)]);
    }

    #[test]
    fn smith_zero_and_identity() {
        let s = check_smith(&IntMatrix::zeros(2, 3));
        assert!(s.diagonal.iter().all(Zero::is_zero));
        assert_eq!(s.rank, 0);
        let s = check_smith(&IntMatrix::identity(3));
        assert!(s.diagonal.iter().all(One::is_one));
    }

    #[test]
    fn smith_rectangular() {
        let s = check_smith(&m(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]));
        assert_eq!(
            s.diagonal,
            vec![BigInt::from(2), BigInt::from(6), BigInt::from(12)]
        );
        check_smith(&m(&[vec![1, 1, 0, 0], vec![0, 3, -4, 0]]));
        check_smith(&m(&[vec![0, 0], vec![0, 5], vec![7, 0]]));
    }

    #[test]
    fn hermite_examples() {
        let h = hermite_normal_form(&m(&[vec![-1, 1]]));
        assert_eq!(h, m(&[vec![1, -1]]));
        let h = hermite_normal_form(&m(&[vec![2, 0], vec![0, 3], vec![4, 6]]));
        assert_eq!(h, m(&[vec![2, 0], vec![0, 3]]));
        let h = hermite_normal_form(&m(&[vec![3, 5], vec![1, 2]]));
        assert_eq!(h, m(&[vec![1, 0], vec![0, 1]]));
    }

    #[test]
    fn kernel_of_sum() {
        let k = integer_kernel(&m(&[vec![1, 1]]));
        assert_eq!(k.len(), 1);
        assert_eq!(&k[0][0] + &k[0][1], BigInt::zero());
        assert!(k[0][0].abs().is_one());
    }

    #[test]
    fn determinant_small() {
        assert_eq!(m(&[vec![2, 1], vec![7, 4]]).determinant(), BigInt::from(1));
        assert_eq!(
            m(&[vec![0, 1, 2], vec![3, 0, 1], vec![1, 1, 0]]).determinant(),
            BigInt::from(7)
        );
    }
}
