//! Sum-of-powers decompositions of monomials over cyclotomic fields.
//!
//! For a canonical monomial `x_1^{b_1} ... x_n^{b_n}` (`b_1 <= ... <= b_n`)
//! the decomposition uses the `R = ∏_{i>=2} (b_i + 1)` points
//! `[1 : ε(2) : ... : ε(n)]`, `ε(i)` ranging over the `(b_i + 1)`-th roots of
//! unity. Everything is expressed in `Q(ζ_N)` with `N = lcm_{i>=2}(b_i + 1)`.
//!
//! The scalar in front of the power attached to point `ε` is
//!
//! ```text
//! γ(ε) = ∏_{i>=2} ε(i)^{-b_i} / (R · d! / ∏ b_i!)
//! ```
//!
//! Summing `γ(ε) (x_1 + Σ ε(i) x_i)^d` over all points kills every monomial
//! except `x^b`: a surviving exponent `α` needs `α_i ≡ b_i (mod b_i + 1)` for
//! all `i >= 2`, and anything above `b_i` would push the `x_1` exponent below
//! zero since `b_1` is the smallest exponent. [`solve_gamma_system`] derives
//! the same scalars independently from a linear system.

mod expand;
pub mod json;
mod linear;
mod system;

use num_bigint::BigUint;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{precondition, Error, Result};
use crate::exactnum::{zeta_power, CyclotomicNumber};
use crate::monomial::{normalize, waring_rank, CanonicalMonomial, Monomial};

pub use expand::{expand_power_sum, expand_power_sum_parallel, MultiCycloPoly, Multinomials};
pub use linear::{
    decompose_linear_product, integer_rank, LinearProductDecomposition, LinearProductTerm,
};
pub use system::{solve_gamma_system, solve_linear_system};

/// One summand `γ (x_1 + ζ^{e_2} x_2 + ... + ζ^{e_n} x_n)^d` with
/// `γ = gamma_rational · ζ^{gamma_zeta_exp}`, all exponents taken mod `N`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DecompositionTerm {
    pub gamma_rational: BigRational,
    pub gamma_zeta_exp: u64,
    pub form_exponents: Vec<u64>,
}

impl DecompositionTerm {
    pub fn gamma(&self, order: u64) -> CyclotomicNumber {
        zeta_power(order, self.gamma_zeta_exp as i64).scale(&self.gamma_rational)
    }
}

/// A decomposition of a monomial in canonical variable order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub monomial: CanonicalMonomial,
    pub cyclotomic_order: u64,
    pub terms: Vec<DecompositionTerm>,
}

impl Decomposition {
    /// Canonical position `k` holds user variable `raw_variable_map()[k]` (0-based).
    pub fn raw_variable_map(&self) -> &[usize] {
        self.monomial.permutation()
    }

    pub fn degree(&self) -> u32 {
        self.monomial.degree()
    }

    pub fn rank(&self) -> usize {
        self.terms.len()
    }
}

/// `N = lcm_{i >= 2}(b_i + 1)`, or 1 for a pure power.
pub fn cyclotomic_order(c: &CanonicalMonomial) -> u64 {
    c.exponents()
        .iter()
        .skip(1)
        .fold(1u64, |acc, &b| acc.lcm(&(u64::from(b) + 1)))
}

fn rank_as_usize(c: &CanonicalMonomial) -> Result<usize> {
    waring_rank(c)
        .to_usize()
        .filter(|&r| r <= 1 << 24)
        .ok_or_else(|| Error::Precondition("decomposition too large to materialize".into()))
}

/// All `[1 : ε(2) : ... : ε(n)]` as `ζ_N` exponents, mixed-radix with
/// coordinate 2 varying slowest.
pub fn decomposition_points(c: &CanonicalMonomial) -> Vec<Vec<u64>> {
    let order = cyclotomic_order(c);
    let b = c.exponents();
    let n = b.len();
    let radices: Vec<u64> = b.iter().skip(1).map(|&x| u64::from(x) + 1).collect();
    let total: u64 = radices.iter().product();
    let mut points = Vec::with_capacity(total as usize);
    let mut digits = vec![0u64; n - 1];
    for _ in 0..total {
        let mut p = Vec::with_capacity(n);
        p.push(0);
        p.extend(digits.iter().zip(&radices).map(|(&k, &r)| k * (order / r)));
        points.push(p);
        // increment, last coordinate fastest
        for pos in (0..digits.len()).rev() {
            digits[pos] += 1;
            if digits[pos] < radices[pos] {
                break;
            }
            digits[pos] = 0;
        }
    }
    points
}

fn check_point(c: &CanonicalMonomial, order: u64, point: &[u64]) -> Result<()> {
    let b = c.exponents();
    if point.len() != b.len() {
        return Err(Error::Domain(format!(
            "point has {} coordinates, monomial has {} variables",
            point.len(),
            b.len()
        )));
    }
    if point[0] != 0 {
        return Err(Error::Domain("first point coordinate must be ζ^0".into()));
    }
    for (i, (&e, &bi)) in point.iter().zip(b).enumerate().skip(1) {
        if e >= order || (e * (u64::from(bi) + 1)) % order != 0 {
            return Err(Error::Domain(format!(
                "coordinate {} is not a {}-th root of unity in Q(ζ_{order})",
                i + 1,
                bi + 1
            )));
        }
    }
    Ok(())
}

/// Closed-form scalar for the summand at `point`: returns the rational part
/// `1 / (R · d!/∏ b_i!)` and the `ζ_N` exponent `-Σ_{i>=2} b_i e_i mod N`.
pub fn gamma_closed_form(c: &CanonicalMonomial, point: &[u64]) -> Result<(BigRational, u64)> {
    let order = cyclotomic_order(c);
    check_point(c, order, point)?;
    let b = c.exponents();
    let shift = b.iter().zip(point).skip(1).fold(0u64, |acc, (&bi, &e)| {
        (acc + u64::from(bi) % order * e) % order
    });
    let zeta_exp = (order - shift) % order;
    let multinomial = Multinomials::new(c.degree()).get(b);
    let denom = waring_rank(c) * multinomial;
    let rational = BigRational::new(One::one(), denom.into());
    Ok((rational, zeta_exp))
}

/// Certified decomposition of `m` into `rk(m)` powers of linear forms.
pub fn decompose(m: &Monomial) -> Result<Decomposition> {
    let c = normalize(m)?;
    decompose_canonical(&c)
}

pub fn decompose_canonical(c: &CanonicalMonomial) -> Result<Decomposition> {
    if c.num_vars() == 1 {
        return Ok(Decomposition {
            monomial: c.clone(),
            cyclotomic_order: 1,
            terms: vec![DecompositionTerm {
                gamma_rational: One::one(),
                gamma_zeta_exp: 0,
                form_exponents: vec![0],
            }],
        });
    }
    rank_as_usize(c)?;
    let terms = decomposition_points(c)
        .into_iter()
        .map(|p| {
            let (gamma_rational, gamma_zeta_exp) = gamma_closed_form(c, &p)?;
            Ok(DecompositionTerm {
                gamma_rational,
                gamma_zeta_exp,
                form_exponents: p,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Decomposition {
        monomial: c.clone(),
        cyclotomic_order: cyclotomic_order(c),
        terms,
    })
}

/// `true` iff the decomposition expands to exactly the canonical monomial.
pub fn verify(dec: &Decomposition) -> bool {
    expand_power_sum(dec).is_unit_monomial(dec.monomial.exponents())
}

/// `∂^α x^β`: `None` when some `α_i > β_i`, otherwise the coefficient
/// `∏ β_i! / (β_i - α_i)!` and the exponent `β - α`.
pub fn apply_differential(alpha: &[u32], target: &[u32]) -> Result<Option<(BigUint, Vec<u32>)>> {
    if alpha.len() != target.len() {
        return precondition("operator and monomial have different variable counts");
    }
    if alpha.iter().zip(target).any(|(a, b)| a > b) {
        return Ok(None);
    }
    let mut coeff = BigUint::one();
    let mut result = Vec::with_capacity(target.len());
    for (&a, &b) in alpha.iter().zip(target) {
        for k in (b - a + 1)..=b {
            coeff *= k;
        }
        result.push(b - a);
    }
    debug_assert!(!coeff.is_zero());
    Ok(Some((coeff, result)))
}
