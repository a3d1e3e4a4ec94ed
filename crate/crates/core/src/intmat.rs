//! Exact integer linear algebra: dense arbitrary-precision matrices,
//! Smith normal form with recorded unimodular transforms, determinants,
//! and symmetric-form invariants (signature, parity, classification of
//! even indefinite unimodular forms).
//!
//! Everything here is exact; no floating point anywhere.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Errors from symmetric-form analysis.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FormError {
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("form is degenerate")]
    Degenerate,
    #[error("form is odd (some self-pairing is odd)")]
    OddForm,
    #[error("form is definite; classification applies to indefinite forms only")]
    Definite,
    #[error("form is not unimodular (|det| = {0})")]
    NotUnimodular(BigInt),
}

/// Errors from the matrix literal parser.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MatrixParseError {
    #[error("line {0}: malformed entry {1:?}")]
    BadEntry(usize, String),
    #[error("line {0}: expected {1} columns, found {2}")]
    RaggedRow(usize, usize, usize),
    #[error("empty matrix")]
    Empty,
}

/// A dense matrix of arbitrary-precision integers, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntegerMatrix {
    pub fn zero(rows: usize, cols: usize) -> IntegerMatrix {
        IntegerMatrix {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> IntegerMatrix {
        let mut m = IntegerMatrix::zero(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    /// Builds a matrix from rows of primitive integers.
    pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> IntegerMatrix {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(
            rows.iter().all(|row| row.len() == c),
            "ragged rows in matrix literal"
        );
        IntegerMatrix {
            rows: r,
            cols: c,
            entries: rows
                .iter()
                .flat_map(|row| row.iter().cloned().map(Into::into))
                .collect(),
        }
    }

    /// The rank-2 hyperbolic block `[[0, 1], [1, 0]]`.
    pub fn hyperbolic_block() -> IntegerMatrix {
        IntegerMatrix::from_rows(&[vec![0, 1], vec![1, 0]])
    }

    /// Orthogonal sum of `k` hyperbolic blocks (a 2k x 2k matrix).
    pub fn hyperbolic(k: usize) -> IntegerMatrix {
        let mut m = IntegerMatrix::zero(2 * k, 2 * k);
        for i in 0..k {
            m[(2 * i, 2 * i + 1)] = BigInt::one();
            m[(2 * i + 1, 2 * i)] = BigInt::one();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    pub fn transpose(&self) -> IntegerMatrix {
        let mut t = IntegerMatrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &IntegerMatrix) -> IntegerMatrix {
        assert_eq!(
            self.cols, other.rows,
            "dimension mismatch in matrix product"
        );
        let mut out = IntegerMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self[(i, k)].is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let term = &self[(i, k)] * &other[(k, j)];
                    out[(i, j)] += term;
                }
            }
        }
        out
    }

    /// Applies the quadratic form: `v^T M v`.
    pub fn quadratic(&self, v: &[BigInt]) -> BigInt {
        self.pair(v, v)
    }

    /// Matrix-vector product `M v`.
    pub fn apply(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| &self[(i, j)] * &v[j]).sum())
            .collect()
    }

    /// Applies the bilinear form: `u^T M v`.
    pub fn pair(&self, u: &[BigInt], v: &[BigInt]) -> BigInt {
        assert_eq!(u.len(), self.rows);
        assert_eq!(v.len(), self.cols);
        let mut acc = BigInt::zero();
        for i in 0..self.rows {
            if u[i].is_zero() {
                continue;
            }
            for j in 0..self.cols {
                acc += &u[i] * &self[(i, j)] * &v[j];
            }
        }
        acc
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.entries.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[i] -= q * row[k]
    fn row_sub_mul(&mut self, i: usize, k: usize, q: &BigInt) {
        for j in 0..self.cols {
            let t = q * &self[(k, j)];
            self[(i, j)] -= t;
        }
    }

    /// col[j] -= q * col[k]
    fn col_sub_mul(&mut self, j: usize, k: usize, q: &BigInt) {
        for i in 0..self.rows {
            let t = q * &self[(i, k)];
            self[(i, j)] -= t;
        }
    }

    /// row[k] += row[i]
    fn row_add(&mut self, k: usize, i: usize) {
        for j in 0..self.cols {
            let t = self[(i, j)].clone();
            self[(k, j)] += t;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let t = -self[(i, j)].clone();
            self[(i, j)] = t;
        }
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> BigInt {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut a: Vec<Vec<BigInt>> = (0..n)
            .map(|i| (0..n).map(|j| self[(i, j)].clone()).collect())
            .collect();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                    Some(i) => {
                        a.swap(k, i);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    a[i][j] = num / &prev; // exact by Bareiss
                }
                a[i][k] = BigInt::zero();
            }
            prev = a[k][k].clone();
        }
        sign * a[n - 1][n - 1].clone()
    }

    /// Parses the matrix literal format: one row per line, `[a, b, ...]`.
    /// Brackets are optional; blank lines are skipped.
    pub fn parse_literal(text: &str) -> Result<IntegerMatrix, MatrixParseError> {
        let mut rows: Vec<Vec<BigInt>> = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let inner = line
                .strip_prefix('[')
                .unwrap_or(line)
                .strip_suffix(']')
                .unwrap_or_else(|| line.strip_prefix('[').unwrap_or(line))
                .trim_end_matches(',');
            let mut row = Vec::new();
            for tok in inner.split(',') {
                let tok = tok.trim();
                if tok.is_empty() {
                    continue;
                }
                let v: BigInt = tok
                    .parse()
                    .map_err(|_| MatrixParseError::BadEntry(lineno + 1, tok.to_string()))?;
                row.push(v);
            }
            if let Some(first) = rows.first() {
                if row.len() != first.len() {
                    return Err(MatrixParseError::RaggedRow(
                        lineno + 1,
                        first.len(),
                        row.len(),
                    ));
                }
            }
            rows.push(row);
        }
        if rows.is_empty() || rows[0].is_empty() {
            return Err(MatrixParseError::Empty);
        }
        let cols = rows[0].len();
        Ok(IntegerMatrix {
            rows: rows.len(),
            cols,
            entries: rows.into_iter().flatten().collect(),
        })
    }
}

impl std::ops::Index<(usize, usize)> for IntegerMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.entries[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntegerMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.entries[i * self.cols + j]
    }
}

impl fmt::Display for IntegerMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self[(i, j)])?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

impl fmt::Debug for IntegerMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntegerMatrix {}x{}\n{}", self.rows, self.cols, self)
    }
}

/// Smith normal form `left * input * right = diag(d_1, ..., d_r, 0, ...)`
/// with `d_1 | d_2 | ...` and `left`, `right` unimodular.
#[derive(Clone, Debug)]
pub struct SmithDecomposition {
    pub diagonal: Vec<BigInt>,
    pub left: IntegerMatrix,
    pub right: IntegerMatrix,
}

impl SmithDecomposition {
    /// Invariant factors: the nonzero, non-unit diagonal entries.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        self.diagonal
            .iter()
            .filter(|d| !d.is_zero() && !d.is_one())
            .cloned()
            .collect()
    }

    /// Number of nonzero diagonal entries.
    pub fn rank(&self) -> usize {
        self.diagonal.iter().filter(|d| !d.is_zero()).count()
    }

    /// The rectangular diagonal matrix the transforms produce.
    pub fn diagonal_matrix(&self, rows: usize, cols: usize) -> IntegerMatrix {
        let mut m = IntegerMatrix::zero(rows, cols);
        for (i, d) in self.diagonal.iter().enumerate() {
            m[(i, i)] = d.clone();
        }
        m
    }
}

fn find_pivot(a: &IntegerMatrix, k: usize) -> Option<(usize, usize)> {
    // smallest nonzero absolute value, ties broken by row-major position
    let mut best: Option<(usize, usize)> = None;
    for i in k..a.rows() {
        for j in k..a.cols() {
            if a[(i, j)].is_zero() {
                continue;
            }
            match best {
                None => best = Some((i, j)),
                Some((bi, bj)) => {
                    if a[(i, j)].magnitude() < a[(bi, bj)].magnitude() {
                        best = Some((i, j));
                    }
                }
            }
        }
    }
    best
}

/// Computes the Smith normal form of an arbitrary integer matrix.
///
/// Deterministic: pivots are chosen by smallest nonzero absolute value,
/// ties resolved in row-major order.
pub fn smith_normal_form(m: &IntegerMatrix) -> SmithDecomposition {
    let mut a = m.clone();
    let mut left = IntegerMatrix::identity(m.rows());
    let mut right = IntegerMatrix::identity(m.cols());
    let n = m.rows().min(m.cols());

    'positions: for k in 0..n {
        loop {
            let Some((pi, pj)) = find_pivot(&a, k) else {
                break 'positions; // trailing block is zero
            };
            a.swap_rows(k, pi);
            left.swap_rows(k, pi);
            a.swap_cols(k, pj);
            right.swap_cols(k, pj);

            let mut retry = false;
            for i in k + 1..a.rows() {
                if a[(i, k)].is_zero() {
                    continue;
                }
                let q = &a[(i, k)] / &a[(k, k)];
                if !q.is_zero() {
                    a.row_sub_mul(i, k, &q);
                    left.row_sub_mul(i, k, &q);
                }
                if !a[(i, k)].is_zero() {
                    retry = true; // remainder is strictly smaller; reselect pivot
                }
            }
            if retry {
                continue;
            }
            for j in k + 1..a.cols() {
                if a[(k, j)].is_zero() {
                    continue;
                }
                let q = &a[(k, j)] / &a[(k, k)];
                if !q.is_zero() {
                    a.col_sub_mul(j, k, &q);
                    right.col_sub_mul(j, k, &q);
                }
                if !a[(k, j)].is_zero() {
                    retry = true;
                }
            }
            if retry {
                continue;
            }
            // pivot divides its row and column; force divisibility of the block
            let offender = (k + 1..a.rows())
                .find(|&i| (k + 1..a.cols()).any(|j| !(&a[(i, j)] % &a[(k, k)]).is_zero()));
            match offender {
                Some(i) => {
                    a.row_add(k, i);
                    left.row_add(k, i);
                }
                None => break,
            }
        }
    }

    for k in 0..n {
        if a[(k, k)].is_negative() {
            a.negate_row(k);
            left.negate_row(k);
        }
    }

    SmithDecomposition {
        diagonal: (0..n).map(|k| a[(k, k)].clone()).collect(),
        left,
        right,
    }
}

/// Signature of a nondegenerate symmetric integer matrix: the number of
/// positive minus the number of negative eigenvalues, computed exactly by
/// congruence diagonalization over the rationals.
#[allow(clippy::needless_range_loop)] // paired row/column updates read clearer indexed
pub fn signature(m: &IntegerMatrix) -> Result<i64, FormError> {
    if !m.is_symmetric() {
        return Err(FormError::NotSymmetric);
    }
    let n = m.rows();
    let mut a: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| BigRational::from_integer(m[(i, j)].clone()))
                .collect()
        })
        .collect();

    let sym_swap = |a: &mut Vec<Vec<BigRational>>, x: usize, y: usize| {
        a.swap(x, y);
        for row in a.iter_mut() {
            row.swap(x, y);
        }
    };

    let mut positive = 0i64;
    let mut negative = 0i64;
    for k in 0..n {
        if a[k][k].is_zero() {
            if let Some(i) = (k + 1..n).find(|&i| !a[i][i].is_zero()) {
                sym_swap(&mut a, k, i);
            } else {
                // all trailing diagonal entries vanish; find an off-diagonal entry
                let mut found = None;
                'search: for i in k..n {
                    for j in i + 1..n {
                        if !a[i][j].is_zero() {
                            found = Some((i, j));
                            break 'search;
                        }
                    }
                }
                let Some((i, j)) = found else {
                    return Err(FormError::Degenerate);
                };
                // row/col i += row/col j makes a[i][i] = 2 a[i][j] != 0
                for t in 0..n {
                    let add = a[j][t].clone();
                    a[i][t] += add;
                }
                for row in a.iter_mut() {
                    let add = row[j].clone();
                    row[i] += add;
                }
                sym_swap(&mut a, k, i);
            }
        }
        let pivot = a[k][k].clone();
        for i in k + 1..n {
            if a[i][k].is_zero() {
                continue;
            }
            let f = &a[i][k] / &pivot;
            for t in 0..n {
                let sub = &f * &a[k][t];
                a[i][t] -= sub;
            }
            for row in a.iter_mut() {
                let sub = &f * &row[k];
                row[i] -= sub;
            }
        }
        if pivot.is_positive() {
            positive += 1;
        } else {
            negative += 1;
        }
    }
    Ok(positive - negative)
}

/// True iff every self-pairing `Q(v, v)` is even; for a symmetric integer
/// matrix this is equivalent to all diagonal entries being even.
pub fn is_even(m: &IntegerMatrix) -> bool {
    assert!(m.is_symmetric(), "parity is defined for symmetric forms");
    (0..m.rows()).all(|i| (&m[(i, i)] % 2u8).is_zero())
}

/// Isomorphism class of an even indefinite unimodular form:
/// `hyperbolic` copies of H plus `e8` copies of (sign) E8.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct FormClass {
    pub hyperbolic: usize,
    pub e8: usize,
    /// Sign of the E8 summands: -1, 0 (when e8 = 0), or +1.
    pub e8_sign: i8,
}

impl fmt::Display for FormClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.hyperbolic, self.e8) {
            (0, 0) => write!(f, "0"),
            (1, 0) => write!(f, "H"),
            (k, 0) => write!(f, "{k}H"),
            (0, l) => write!(f, "{}{}E8", if self.e8_sign < 0 { "-" } else { "" }, l),
            (k, l) => write!(
                f,
                "{}H + {}{}E8",
                k,
                if self.e8_sign < 0 { "-" } else { "" },
                l
            ),
        }
    }
}

/// Classifies an even, nondegenerate, indefinite unimodular form as
/// `kH + lE8` from its rank and signature. Signature-zero forms come out
/// as `(rank/2) H`.
pub fn classify_even_indefinite(m: &IntegerMatrix) -> Result<FormClass, FormError> {
    if !m.is_symmetric() {
        return Err(FormError::NotSymmetric);
    }
    if !is_even(m) {
        return Err(FormError::OddForm);
    }
    let sig = signature(m)?;
    let rank = m.rows() as i64;
    if sig.unsigned_abs() as i64 == rank {
        return Err(FormError::Definite);
    }
    let det = m.determinant();
    if !det.magnitude().is_one() {
        return Err(FormError::NotUnimodular(det));
    }
    // even unimodular forms have signature divisible by 8
    assert!(sig % 8 == 0, "even unimodular form with signature {sig}");
    let l = (sig.unsigned_abs() / 8) as usize;
    let k = ((rank - sig.abs()) / 2) as usize;
    Ok(FormClass {
        hyperbolic: k,
        e8: l,
        e8_sign: sig.signum() as i8,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_decomposition(m: &IntegerMatrix, snf: &SmithDecomposition) {
        let product = snf.left.mul(m).mul(&snf.right);
        assert_eq!(product, snf.diagonal_matrix(m.rows(), m.cols()));
        assert!(snf.left.determinant().magnitude().is_one());
        assert!(snf.right.determinant().magnitude().is_one());
        // divisibility chain, zeros trailing
        for w in snf.diagonal.windows(2) {
            if w[1].is_zero() {
                continue;
            }
            assert!(!w[0].is_zero(), "zero before nonzero in SNF diagonal");
            assert!((&w[1] % &w[0]).is_zero(), "divisibility chain broken");
        }
    }

    #[test]
    fn snf_identity() {
        let m = IntegerMatrix::identity(3);
        let snf = smith_normal_form(&m);
        assert_eq!(snf.diagonal, vec![1.into(), 1.into(), 1.into()]);
        check_decomposition(&m, &snf);
    }

    #[test]
    fn snf_hyperbolic_block() {
        let m = IntegerMatrix::hyperbolic_block();
        let snf = smith_normal_form(&m);
        assert_eq!(snf.diagonal, vec![1.into(), 1.into()]);
        check_decomposition(&m, &snf);
    }

    #[test]
    fn snf_two_three() {
        // gcd chain: d1 = gcd of entries = 1, d1 d2 = |det| = 6
        let m = IntegerMatrix::from_rows(&[vec![2, 0], vec![0, 3]]);
        let snf = smith_normal_form(&m);
        assert_eq!(snf.diagonal, vec![1.into(), 6.into()]);
        check_decomposition(&m, &snf);
    }

    #[test]
    fn snf_rectangular_and_rank_deficient() {
        let m = IntegerMatrix::from_rows(&[vec![2, 4, 6], vec![4, 8, 12]]);
        let snf = smith_normal_form(&m);
        assert_eq!(snf.diagonal, vec![2.into(), 0.into()]);
        check_decomposition(&m, &snf);
        assert_eq!(snf.rank(), 1);
        assert_eq!(snf.invariant_factors(), vec![BigInt::from(2)]);
    }

    #[test]
    fn determinant_examples() {
        let m = IntegerMatrix::from_rows(&[vec![3, 1, 0], vec![1, 4, 2], vec![7, 0, 5]]);
        assert_eq!(m.determinant(), BigInt::from(69));
        assert_eq!(IntegerMatrix::hyperbolic(7).determinant(), BigInt::from(-1));
        assert_eq!(IntegerMatrix::zero(2, 2).determinant(), BigInt::zero());
        // Bareiss needs a row swap here
        let m = IntegerMatrix::from_rows(&[vec![0, 1], vec![1, 0]]);
        assert_eq!(m.determinant(), BigInt::from(-1));
    }

    #[test]
    fn signature_examples() {
        let diag_pos = IntegerMatrix::from_rows(&[vec![1, 0], vec![0, 1]]);
        assert_eq!(signature(&diag_pos).unwrap(), 2);
        assert_eq!(signature(&IntegerMatrix::hyperbolic_block()).unwrap(), 0);
        assert_eq!(signature(&IntegerMatrix::hyperbolic(7)).unwrap(), 0);
        let mixed = IntegerMatrix::from_rows(&[vec![1, 0], vec![0, -1]]);
        assert_eq!(signature(&mixed).unwrap(), 0);
        let degenerate = IntegerMatrix::from_rows(&[vec![1, 0], vec![0, 0]]);
        assert_eq!(signature(&degenerate).unwrap_err(), FormError::Degenerate);
        let asym = IntegerMatrix::from_rows(&[vec![0, 1], vec![2, 0]]);
        assert_eq!(signature(&asym).unwrap_err(), FormError::NotSymmetric);
    }

    #[test]
    fn evenness() {
        assert!(is_even(&IntegerMatrix::hyperbolic_block()));
        assert!(is_even(&IntegerMatrix::hyperbolic(2)));
        let odd = IntegerMatrix::from_rows(&[vec![1, 0], vec![0, -1]]);
        assert!(!is_even(&odd));
    }

    #[test]
    fn classification() {
        let h = classify_even_indefinite(&IntegerMatrix::hyperbolic_block()).unwrap();
        assert_eq!(
            h,
            FormClass {
                hyperbolic: 1,
                e8: 0,
                e8_sign: 0
            }
        );
        assert_eq!(h.to_string(), "H");
        let seven = classify_even_indefinite(&IntegerMatrix::hyperbolic(7)).unwrap();
        assert_eq!(seven.hyperbolic, 7);
        assert_eq!(seven.to_string(), "7H");
        let two = classify_even_indefinite(&IntegerMatrix::hyperbolic(2)).unwrap();
        assert_eq!(two.hyperbolic, 2);

        let odd = IntegerMatrix::from_rows(&[vec![1, 0], vec![0, -1]]);
        assert_eq!(
            classify_even_indefinite(&odd).unwrap_err(),
            FormError::OddForm
        );
        let definite = IntegerMatrix::from_rows(&[vec![2, 1], vec![1, 2]]);
        assert_eq!(
            classify_even_indefinite(&definite).unwrap_err(),
            FormError::Definite
        );
        let scaled = IntegerMatrix::from_rows(&[vec![0, 2], vec![2, 0]]);
        assert!(matches!(
            classify_even_indefinite(&scaled).unwrap_err(),
            FormError::NotUnimodular(_)
        ));
    }

    #[test]
    fn literal_round_trip() {
        let text = "[0, 1]\n[1, 0]\n";
        let m = IntegerMatrix::parse_literal(text).unwrap();
        assert_eq!(m, IntegerMatrix::hyperbolic_block());
        assert_eq!(m.to_string(), text);
        assert!(IntegerMatrix::parse_literal("").is_err());
        assert!(IntegerMatrix::parse_literal("[1, 2]\n[3]").is_err());
        assert!(IntegerMatrix::parse_literal("[1, x]").is_err());
    }
}
