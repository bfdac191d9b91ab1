//! Hilbert functions of quotients by monomial complete intersections
//! `(y_1^{a_1}, ..., y_c^{a_c})` in `n >= c` variables.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, ToPrimitive};

use crate::error::{precondition, Result};
use crate::exactnum::IntegerPolynomial;
use crate::monomial::binomial;

/// A pure-power complete intersection: generator `y_j^{gen_degrees[j]}` on
/// each of the first `gen_degrees.len()` variables.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CIData {
    num_vars: usize,
    gen_degrees: Vec<u32>,
}

impl CIData {
    pub fn new(num_vars: usize, gen_degrees: Vec<u32>) -> Result<Self> {
        if gen_degrees.is_empty() {
            return precondition("complete intersection needs at least one generator");
        }
        if gen_degrees.contains(&0) {
            return precondition("generator degrees must be positive");
        }
        if gen_degrees.len() > num_vars {
            return precondition(format!(
                "{} generators cannot form a complete intersection in {num_vars} variables",
                gen_degrees.len()
            ));
        }
        Ok(Self {
            num_vars,
            gen_degrees,
        })
    }

    /// `J = (y_1, y_2^{a_2}, ..., y_n^{a_n})` with `n = a.len() + 1`.
    pub fn with_linear_generator(a: &[u32]) -> Result<Self> {
        let mut gens = Vec::with_capacity(a.len() + 1);
        gens.push(1);
        gens.extend_from_slice(a);
        Self::new(a.len() + 1, gens)
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn gen_degrees(&self) -> &[u32] {
        &self.gen_degrees
    }

    pub fn is_artinian(&self) -> bool {
        self.gen_degrees.len() == self.num_vars
    }

    /// Top nonzero degree `Σ (a_j - 1)`, defined only in the Artinian case.
    pub fn socle_degree(&self) -> Option<u64> {
        self.is_artinian()
            .then(|| self.gen_degrees.iter().map(|&a| u64::from(a) - 1).sum())
    }
}

/// The Hilbert series `∏_j (1 - t^{a_j}) / (1 - t)^n` truncated after
/// degree `max_degree`.
///
/// Expanded as `∏_j (1 + t + ... + t^{a_j - 1})`, followed by one prefix-sum
/// pass per free variable.
pub fn hilbert_series(ci: &CIData, max_degree: usize) -> IntegerPolynomial {
    let mut series = IntegerPolynomial::one();
    for &a in &ci.gen_degrees {
        let block = IntegerPolynomial::new(vec![BigInt::one(); a as usize]);
        series = series.mul_truncated(&block, max_degree);
    }
    for _ in ci.gen_degrees.len()..ci.num_vars {
        series = series.prefix_sums(max_degree);
    }
    series
}

/// `HF(T/I, i)`.
pub fn hilbert_function(ci: &CIData, i: usize) -> BigUint {
    hilbert_series(ci, i)
        .coeff(i)
        .to_biguint()
        .expect("Hilbert function values are non-negative")
}

/// Counts degree-`i` monomials in `n` variables divisible by no generator.
pub fn hilbert_function_bruteforce(ci: &CIData, i: u32) -> u64 {
    fn go(bounds: &[Option<u32>], left: u32) -> u64 {
        match bounds.split_first() {
            None => u64::from(left == 0),
            Some((&bound, rest)) => {
                let top = bound.map_or(left, |a| left.min(a - 1));
                (0..=top).map(|e| go(rest, left - e)).sum()
            }
        }
    }
    let bounds: Vec<Option<u32>> = (0..ci.num_vars)
        .map(|j| ci.gen_degrees.get(j).copied())
        .collect();
    go(&bounds, i)
}

fn check_lemma_degrees(a: &[u32]) -> Result<()> {
    if a.is_empty() {
        return precondition("need at least one degree a_2");
    }
    if a.iter().any(|&x| x < 2) {
        return precondition("degrees must be at least 2");
    }
    if a.windows(2).any(|w| w[0] > w[1]) {
        return precondition("degrees must be non-decreasing");
    }
    Ok(())
}

/// `τ = (a_2 + ... + a_n) - (n - 1)` for `J = (y_1, y_2^{a_2}, ..., y_n^{a_n})`,
/// where `a` holds `a_2..a_n`.
pub fn socle_degree(a: &[u32]) -> Result<u64> {
    check_lemma_degrees(a)?;
    Ok(a.iter().map(|&x| u64::from(x)).sum::<u64>() - a.len() as u64)
}

/// Both sides of the identity
/// `Σ_{i=a_2}^{τ} HF(T/J, i) = ∏ a_i - C(a_2 + n - 2, n - 1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WindowIdentityReport {
    pub lhs: BigInt,
    pub rhs: BigInt,
    pub holds: bool,
}

/// Evaluates both sides of the complete-intersection window identity for
/// `J = (y_1, y_2^{a_2}, ..., y_n^{a_n})`. An empty window (`a_2 > τ`) sums
/// to zero.
pub fn window_identity_check(a: &[u32]) -> Result<WindowIdentityReport> {
    let tau = socle_degree(a)?;
    let ci = CIData::with_linear_generator(a)?;
    let n = ci.num_vars() as u64;
    let a2 = u64::from(a[0]);
    let tau_idx = tau
        .to_usize()
        .ok_or_else(|| crate::Error::Precondition("socle degree too large".into()))?;
    let series = hilbert_series(&ci, tau_idx);
    let lhs: BigInt = (a2..=tau).map(|i| series.coeff(i as usize)).sum();
    let product: BigInt = a.iter().map(|&x| BigInt::from(x)).product();
    let rhs = product - BigInt::from(binomial(a2 + n - 2, n - 1));
    debug_assert!(!rhs.is_negative());
    Ok(WindowIdentityReport {
        holds: lhs == rhs,
        lhs,
        rhs,
    })
}
