use num_bigint::BigInt;

use super::{cyclotomic_order, Multinomials};
use crate::error::{Error, Result};
use crate::exactnum::{zeta_power, CyclotomicNumber};
use crate::monomial::{waring_rank, CanonicalMonomial};

/// Solves `A x = rhs` over `Q(ζ_N)` by Gaussian elimination with the first
/// nonzero pivot in each column. Fails on a singular or malformed system.
pub fn solve_linear_system(
    mut a: Vec<Vec<CyclotomicNumber>>,
    mut rhs: Vec<CyclotomicNumber>,
) -> Result<Vec<CyclotomicNumber>> {
    let n = rhs.len();
    if a.len() != n || a.iter().any(|row| row.len() != n) {
        return Err(Error::Precondition("linear system is not square".into()));
    }
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .ok_or_else(|| Error::Internal(format!("singular system at column {col}")))?;
        a.swap(col, pivot);
        rhs.swap(col, pivot);
        let inv = a[col][col].inverse()?;
        for entry in &mut a[col][col..] {
            *entry = &*entry * &inv;
        }
        rhs[col] = &rhs[col] * &inv;
        let (upper, lower) = a.split_at_mut(col + 1);
        let pivot_row = &upper[col];
        for (offset, row) in lower.iter_mut().enumerate() {
            let factor = row[col].clone();
            if factor.is_zero() {
                continue;
            }
            for k in col..n {
                row[k] = &row[k] - &(&factor * &pivot_row[k]);
            }
            let r = col + 1 + offset;
            rhs[r] = &rhs[r] - &(&factor * &rhs[col]);
        }
    }
    for col in (0..n).rev() {
        for r in 0..col {
            let factor = a[r][col].clone();
            if !factor.is_zero() {
                rhs[r] = &rhs[r] - &(&factor * &rhs[col]);
            }
        }
    }
    Ok(rhs)
}

/// Determines the scalars of the decomposition at `points` by matching the
/// coefficients of the `R` monomials `x_1^{d-|β|} ∏_{i>=2} x_i^{β_i}`,
/// `0 <= β_i <= b_i`, against `x^b`.
///
/// Row `β`, column `j` holds `(d; d-|β|, β) ∏_{i>=2} ε_j(i)^{β_i}`: a tensor
/// product of Vandermonde matrices, one per variable `i >= 2`, so the system
/// is invertible for the standard point set.
pub fn solve_gamma_system(
    c: &CanonicalMonomial,
    points: &[Vec<u64>],
) -> Result<Vec<CyclotomicNumber>> {
    let order = cyclotomic_order(c);
    let b = c.exponents();
    let n = b.len();
    let d = c.degree();
    if BigInt::from(points.len()) != BigInt::from(waring_rank(c)) {
        return Err(Error::Precondition(format!(
            "expected {} points, got {}",
            waring_rank(c),
            points.len()
        )));
    }
    if points.iter().any(|p| p.len() != n) {
        return Err(Error::Precondition("point dimension mismatch".into()));
    }
    let mut mult = Multinomials::new(d);
    // β enumerated in the same mixed-radix order as the points.
    let mut betas = vec![Vec::new()];
    for &bi in &b[1..] {
        betas = betas
            .into_iter()
            .flat_map(|prefix: Vec<u32>| {
                (0..=bi).map(move |k| {
                    let mut v = prefix.clone();
                    v.push(k);
                    v
                })
            })
            .collect();
    }
    let mut matrix = Vec::with_capacity(betas.len());
    let mut rhs = Vec::with_capacity(betas.len());
    for beta in &betas {
        let lead = d - beta.iter().sum::<u32>();
        let mut alpha = vec![lead];
        alpha.extend_from_slice(beta);
        let m = CyclotomicNumber::from_integer(order, BigInt::from(mult.get(&alpha)));
        let row = points
            .iter()
            .map(|p| {
                let e = p[1..]
                    .iter()
                    .zip(beta)
                    .fold(0u64, |acc, (&pi, &bi)| (acc + pi * u64::from(bi)) % order);
                &m * &zeta_power(order, e as i64)
            })
            .collect();
        matrix.push(row);
        let target = beta.as_slice() == &b[1..];
        rhs.push(CyclotomicNumber::from_integer(order, i32::from(target)));
    }
    solve_linear_system(matrix, rhs)
}
