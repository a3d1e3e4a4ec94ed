//! Basic-class candidate enumeration for the Seiberg-Witten invariant.
//!
//! Candidates are the even classes allowed by the adjunction inequality
//! `2g - 2 >= [S]^2 + |L.[S]|` over the given square-nonnegative surfaces
//! of genus >= 1, intersected with the moduli-dimension constraint
//! `L^2 >= 2e + 3s`. No gauge theory is computed here: the value
//! transferred by the multiplicity-n surgery is the cited linear rule
//! applied to the base value 1.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::intmat::IntegerMatrix;
use crate::surgery::{ManifoldModel, SurfaceClass};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SwError {
    #[error(
        "surface {0:?} unusable for adjunction (need genus >= 1, square >= 0, 2g - 2 >= square)"
    )]
    AdjunctionUnusable(String),
    #[error("intersection form is degenerate")]
    DegenerateForm,
    #[error("surface constraints do not bound the candidate set")]
    Unbounded,
    #[error("moduli dimension is not integral (class is not characteristic)")]
    NonIntegralDimension,
    #[error("surface vector has length {got}, form rank is {expected}")]
    VectorLength { expected: usize, got: usize },
}

/// A candidate basic class in coordinates over the dual basis, with its
/// square and formal moduli-space dimension `(L^2 - 2e - 3s) / 4`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct CandidateClass {
    pub coefficients: Vec<BigInt>,
    pub square: BigInt,
    pub dimension: BigInt,
}

fn dimension_from_square(square: &BigInt, euler: i64, signature: i64) -> Result<BigInt, SwError> {
    let numerator = square - BigInt::from(2 * euler + 3 * signature);
    if !(&numerator % BigInt::from(4)).is_zero() {
        return Err(SwError::NonIntegralDimension);
    }
    Ok(numerator / BigInt::from(4))
}

/// Builds a candidate class over a model's form from raw coefficients.
pub fn candidate(coefficients: Vec<BigInt>, m: &ManifoldModel) -> Result<CandidateClass, SwError> {
    if coefficients.len() != m.form.rows() {
        return Err(SwError::VectorLength {
            expected: m.form.rows(),
            got: coefficients.len(),
        });
    }
    let square = m.form.quadratic(&coefficients);
    let dimension = dimension_from_square(&square, m.euler, m.signature)?;
    Ok(CandidateClass {
        coefficients,
        square,
        dimension,
    })
}

/// Dimension of the formal Seiberg-Witten moduli space for `l` on `m`.
/// Negative dimensions are returned as-is; callers filter on `>= 0`.
pub fn moduli_dimension(l: &CandidateClass, m: &ManifoldModel) -> Result<BigInt, SwError> {
    let square = m.form.quadratic(&l.coefficients);
    dimension_from_square(&square, m.euler, m.signature)
}

/// Gauss-Jordan inverse over the rationals; `None` when singular.
fn rational_inverse(rows: &[Vec<BigRational>]) -> Option<Vec<Vec<BigRational>>> {
    let n = rows.len();
    let mut a: Vec<Vec<BigRational>> = rows.to_vec();
    let mut inv: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        BigRational::one()
                    } else {
                        BigRational::zero()
                    }
                })
                .collect()
        })
        .collect();
    for k in 0..n {
        let pivot_row = (k..n).find(|&i| !a[i][k].is_zero())?;
        a.swap(k, pivot_row);
        inv.swap(k, pivot_row);
        let pivot = a[k][k].clone();
        for j in 0..n {
            a[k][j] /= &pivot;
            inv[k][j] /= &pivot;
        }
        for i in 0..n {
            if i == k || a[i][k].is_zero() {
                continue;
            }
            let factor = a[i][k].clone();
            for j in 0..n {
                let t = &factor * &a[k][j];
                a[i][j] -= t;
                let t = &factor * &inv[k][j];
                inv[i][j] -= t;
            }
        }
    }
    Some(inv)
}

/// Picks a maximal linearly independent prefix-greedy subset of the
/// constraint vectors; returns their indices, or `None` if they do not
/// span.
fn spanning_subset(vectors: &[Vec<BigInt>], dim: usize) -> Option<Vec<usize>> {
    let mut echelon: Vec<Vec<BigRational>> = Vec::new();
    let mut selected = Vec::new();
    for (index, v) in vectors.iter().enumerate() {
        let mut row: Vec<BigRational> = v
            .iter()
            .map(|x| BigRational::from_integer(x.clone()))
            .collect();
        for e in &echelon {
            let pivot_col = e.iter().position(|x| !x.is_zero()).unwrap();
            if row[pivot_col].is_zero() {
                continue;
            }
            let factor = &row[pivot_col] / &e[pivot_col];
            for j in 0..dim {
                let t = &factor * &e[j];
                row[j] -= t;
            }
        }
        if row.iter().any(|x| !x.is_zero()) {
            echelon.push(row);
            selected.push(index);
            if selected.len() == dim {
                return Some(selected);
            }
        }
    }
    None
}

/// Enumerates candidate basic classes directly against a form and the
/// characteristic numbers, without a full manifold model.
pub fn enumerate_in_form(
    form: &IntegerMatrix,
    euler: i64,
    signature: i64,
    surfaces: &[SurfaceClass],
) -> Result<Vec<CandidateClass>, SwError> {
    let dim = form.rows();
    if form.determinant().is_zero() {
        return Err(SwError::DegenerateForm);
    }

    // adjunction constraints |<Qv, c>| <= 2g - 2 - v^T Q v
    let mut constraint_vectors: Vec<Vec<BigInt>> = Vec::new();
    let mut constraint_bounds: Vec<BigInt> = Vec::new();
    for s in surfaces {
        if s.vector.len() != dim {
            return Err(SwError::VectorLength {
                expected: dim,
                got: s.vector.len(),
            });
        }
        let square = form.quadratic(&s.vector);
        let bound = BigInt::from(2 * i64::from(s.genus) - 2) - &square;
        if s.genus < 1 || square.is_negative() || bound.is_negative() {
            return Err(SwError::AdjunctionUnusable(s.label.clone()));
        }
        constraint_vectors.push(form.apply(&s.vector));
        constraint_bounds.push(bound);
    }

    let selected = spanning_subset(&constraint_vectors, dim).ok_or(SwError::Unbounded)?;
    let w_rows: Vec<Vec<BigRational>> = selected
        .iter()
        .map(|&i| {
            constraint_vectors[i]
                .iter()
                .map(|x| BigRational::from_integer(x.clone()))
                .collect()
        })
        .collect();
    let inv = rational_inverse(&w_rows).ok_or(SwError::Unbounded)?;

    // |c_j| <= sum_i |inv[j][i]| * bound_i, shrunk to the even lattice
    let mut box_bounds: Vec<i64> = Vec::with_capacity(dim);
    for row in &inv {
        let mut total = BigRational::zero();
        for (i, &sel) in selected.iter().enumerate() {
            total += row[i].abs() * BigRational::from_integer(constraint_bounds[sel].clone());
        }
        let b = total.floor().to_integer();
        let b = b.to_i64().ok_or(SwError::Unbounded)?;
        box_bounds.push(b - b.rem_euclid(2));
    }

    let min_square = BigInt::from(2 * euler + 3 * signature);
    let mut out = Vec::new();
    let mut point: Vec<i64> = box_bounds.iter().map(|b| -b).collect();
    'odometer: loop {
        let coefficients: Vec<BigInt> = point.iter().map(|&x| BigInt::from(x)).collect();
        let admissible = constraint_vectors
            .iter()
            .zip(&constraint_bounds)
            .all(|(w, b)| {
                let pairing: BigInt = w.iter().zip(&coefficients).map(|(wi, ci)| wi * ci).sum();
                pairing.abs() <= *b
            });
        if admissible {
            let square = form.quadratic(&coefficients);
            if square >= min_square {
                let dimension = dimension_from_square(&square, euler, signature)?;
                out.push(CandidateClass {
                    coefficients,
                    square,
                    dimension,
                });
            }
        }
        // advance by 2 in the last coordinate, with carry
        for j in (0..dim).rev() {
            if point[j] + 2 <= box_bounds[j] {
                point[j] += 2;
                continue 'odometer;
            }
            point[j] = -box_bounds[j];
        }
        break;
    }
    out.sort();
    Ok(out)
}

/// Enumerates candidate basic classes for a model against a surface
/// list. The set is closed under negation and sorted lexicographically
/// by coefficient vector.
pub fn enumerate_candidates(
    m: &ManifoldModel,
    surfaces: &[SurfaceClass],
) -> Result<Vec<CandidateClass>, SwError> {
    enumerate_in_form(&m.form, m.euler, m.signature, surfaces)
}

/// Value of the invariant on the surviving classes after the
/// multiplicity-n surgery: the base value 1 times n.
pub fn sw_value_after_surgery(n: u64) -> u64 {
    assert!(n >= 1, "surgery multiplicity must be at least 1");
    n
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum IrreducibilityVerdict {
    Irreducible,
    Unknown,
}

/// Sufficient condition for irreducibility: closed, simply connected,
/// spin, with nontrivial Seiberg-Witten invariant. Anything less is
/// `Unknown`, not reducible.
pub fn irreducibility_verdict(
    simply_connected: bool,
    spin: bool,
    sw_nontrivial: bool,
) -> IrreducibilityVerdict {
    if simply_connected && spin && sw_nontrivial {
        IrreducibilityVerdict::Irreducible
    } else {
        IrreducibilityVerdict::Unknown
    }
}

/// Renders a coefficient vector against dual-basis labels, e.g. `2A+2B`.
pub fn render_candidate(coefficients: &[BigInt], dual_labels: &[String]) -> String {
    let mut out = String::new();
    for (c, label) in coefficients.iter().zip(dual_labels) {
        if c.is_zero() {
            continue;
        }
        if c.is_negative() {
            out.push('-');
        } else if !out.is_empty() {
            out.push('+');
        }
        if !c.magnitude().is_one() {
            out.push_str(&c.magnitude().to_string());
        }
        out.push_str(label);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
