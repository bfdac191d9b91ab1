use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{decompose, Decomposition, MultiCycloPoly};
use crate::error::{precondition, Result};
use crate::exactnum::{zeta_power, CyclotomicNumber};
use crate::monomial::Monomial;

/// Rank of an integer matrix by fraction-free (Bareiss) elimination.
pub fn integer_rank(rows: &[Vec<BigInt>]) -> usize {
    let mut m: Vec<Vec<BigInt>> = rows.to_vec();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    let mut prev = BigInt::one();
    for col in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        for r in rank + 1..m.len() {
            for k in col + 1..cols {
                let v = &m[rank][col] * &m[r][k] - &m[r][col] * &m[rank][k];
                m[r][k] = v / &prev;
            }
            m[r][col] = BigInt::zero();
        }
        prev = m[rank][col].clone();
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    rank
}

/// Row scaled by the lcm of its denominators.
fn clear_denominators(row: &[BigRational]) -> Vec<BigInt> {
    let l = row.iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
    row.iter().map(|r| r.numer() * (&l / r.denom())).collect()
}

/// One summand `γ (Σ_k ζ^{e_k} L_{σ(k)})^d` written out in the ambient
/// variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearProductTerm {
    pub gamma: CyclotomicNumber,
    pub form: Vec<CyclotomicNumber>,
}

/// Decomposition of `L_1^{b_1} ... L_n^{b_n}` for linearly independent
/// rational linear forms, obtained by substituting `x_i -> L_i` into the
/// monomial decomposition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearProductDecomposition {
    pub forms: Vec<Vec<BigRational>>,
    pub exponents: Vec<u32>,
    pub base: Decomposition,
    pub terms: Vec<LinearProductTerm>,
}

impl LinearProductDecomposition {
    pub fn rank(&self) -> usize {
        self.terms.len()
    }

    fn ambient_vars(&self) -> usize {
        self.forms[0].len()
    }

    fn order(&self) -> u64 {
        self.base.cyclotomic_order
    }

    /// `Σ γ_j M_j^d` in the ambient variables.
    pub fn expand(&self) -> MultiCycloPoly {
        let d = self.base.degree();
        let order = self.order();
        let mut acc = MultiCycloPoly::zero(self.ambient_vars(), order);
        for t in &self.terms {
            let power = MultiCycloPoly::linear_power(&t.form, d, order);
            acc = acc.add(&power.scale(&t.gamma));
        }
        acc
    }

    /// `∏ L_i^{b_i}` expanded directly.
    pub fn target(&self) -> MultiCycloPoly {
        let order = self.order();
        let n = self.ambient_vars();
        let mut acc = MultiCycloPoly::monomial(vec![0; n], CyclotomicNumber::one(order));
        for (form, &b) in self.forms.iter().zip(&self.exponents) {
            if b == 0 {
                continue;
            }
            let coeffs: Vec<CyclotomicNumber> = form
                .iter()
                .map(|r| CyclotomicNumber::from_rational(order, r.clone()))
                .collect();
            acc = acc.mul(&MultiCycloPoly::linear_power(&coeffs, b, order));
        }
        acc
    }

    pub fn verify(&self) -> bool {
        self.expand() == self.target()
    }
}

/// Sum-of-powers decomposition of `∏ L_i^{b_i}` with `rk = ∏_{i>=2}(b_i + 1)`
/// over the sorted exponents.
pub fn decompose_linear_product(
    forms: &[Vec<BigRational>],
    b: &[u32],
) -> Result<LinearProductDecomposition> {
    if forms.is_empty() {
        return precondition("no linear forms given");
    }
    if forms.len() != b.len() {
        return precondition(format!("{} forms but {} exponents", forms.len(), b.len()));
    }
    let m = forms[0].len();
    if m == 0 || forms.iter().any(|f| f.len() != m) {
        return precondition("linear forms must share a positive variable count");
    }
    let rows: Vec<Vec<BigInt>> = forms.iter().map(|f| clear_denominators(f)).collect();
    if integer_rank(&rows) != forms.len() {
        return precondition("linear forms are linearly dependent");
    }
    let base = decompose(&Monomial::new(b.to_vec())?)?;
    let order = base.cyclotomic_order;
    let terms = base
        .terms
        .iter()
        .map(|t| {
            let mut form = vec![CyclotomicNumber::zero(order); m];
            for (&e, &var) in t.form_exponents.iter().zip(base.raw_variable_map()) {
                let root = zeta_power(order, e as i64);
                for (slot, coeff) in form.iter_mut().zip(&forms[var]) {
                    if !coeff.is_zero() {
                        *slot = &*slot + &root.scale(coeff);
                    }
                }
            }
            LinearProductTerm {
                gamma: t.gamma(order),
                form,
            }
        })
        .collect();
    Ok(LinearProductDecomposition {
        forms: forms.to_vec(),
        exponents: b.to_vec(),
        base,
        terms,
    })
}
