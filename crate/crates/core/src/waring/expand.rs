use std::collections::{BTreeMap, HashMap};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;

use super::Decomposition;
use crate::exactnum::CyclotomicNumber;

/// Multinomial coefficients `d! / ∏ α_i!` for a fixed `d`, memoized on the
/// sorted exponent multiset.
#[derive(Debug, Clone)]
pub struct Multinomials {
    factorials: Vec<BigUint>,
    memo: HashMap<Vec<u32>, BigUint>,
}

impl Multinomials {
    pub fn new(d: u32) -> Self {
        let mut factorials = Vec::with_capacity(d as usize + 1);
        factorials.push(BigUint::one());
        for k in 1..=d {
            let next = &factorials[k as usize - 1] * k;
            factorials.push(next);
        }
        Self {
            factorials,
            memo: HashMap::new(),
        }
    }

    /// Panics if `Σ α_i` differs from `d`.
    pub fn get(&mut self, alpha: &[u32]) -> BigUint {
        let d = self.factorials.len() - 1;
        assert_eq!(
            alpha.iter().map(|&a| a as usize).sum::<usize>(),
            d,
            "multinomial exponents must sum to the degree"
        );
        let mut key = alpha.to_vec();
        key.sort_unstable();
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let denom: BigUint = key.iter().map(|&a| &self.factorials[a as usize]).product();
        let v = &self.factorials[d] / denom;
        self.memo.insert(key, v.clone());
        v
    }
}

/// All exponent vectors of total degree `d` in `n` variables, lexicographic.
pub(crate) fn compositions(d: u32, n: usize) -> Vec<Vec<u32>> {
    fn go(left: u32, slots: usize, buf: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if slots == 1 {
            buf.push(left);
            out.push(buf.clone());
            buf.pop();
            return;
        }
        for e in 0..=left {
            buf.push(e);
            go(left - e, slots - 1, buf, out);
            buf.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        go(d, n, &mut Vec::with_capacity(n), &mut out);
    }
    out
}

/// Homogeneous polynomial over `Q(ζ_N)`: exponent vector to coefficient,
/// zero coefficients never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiCycloPoly {
    num_vars: usize,
    order: u64,
    terms: BTreeMap<Vec<u32>, CyclotomicNumber>,
}

impl MultiCycloPoly {
    pub fn zero(num_vars: usize, order: u64) -> Self {
        Self {
            num_vars,
            order,
            terms: BTreeMap::new(),
        }
    }

    /// Single term `coeff · x^exponents`.
    pub fn monomial(exponents: Vec<u32>, coeff: CyclotomicNumber) -> Self {
        let mut p = Self::zero(exponents.len(), coeff.order());
        p.add_term(exponents, coeff);
        p
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn get(&self, exponents: &[u32]) -> Option<&CyclotomicNumber> {
        self.terms.get(exponents)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<u32>, &CyclotomicNumber)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, exponents: Vec<u32>, coeff: CyclotomicNumber) {
        assert_eq!(exponents.len(), self.num_vars, "variable count mismatch");
        if coeff.is_zero() {
            return;
        }
        let coeff = if coeff.order() == self.order {
            coeff
        } else {
            let target = num_integer::lcm(self.order, coeff.order());
            self.lift(target);
            coeff.embed_order(target).expect("lcm is a multiple")
        };
        match self.terms.entry(exponents) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + &coeff;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    fn lift(&mut self, target: u64) {
        if target == self.order {
            return;
        }
        for c in self.terms.values_mut() {
            *c = c.embed_order(target).expect("lcm is a multiple");
        }
        self.order = target;
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.num_vars, other.num_vars, "variable count mismatch");
        let mut out = Self::zero(self.num_vars, num_integer::lcm(self.order, other.order));
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }

    /// `(Σ c_i x_i)^d` by the multinomial theorem.
    pub fn linear_power(coeffs: &[CyclotomicNumber], d: u32, order: u64) -> Self {
        let n = coeffs.len();
        let mut mult = Multinomials::new(d);
        let powers: Vec<Vec<CyclotomicNumber>> = coeffs
            .iter()
            .map(|c| {
                let c = c
                    .embed_order(order)
                    .expect("coefficient order divides target");
                let mut row = vec![CyclotomicNumber::one(order)];
                for k in 1..=d as usize {
                    let next = &row[k - 1] * &c;
                    row.push(next);
                }
                row
            })
            .collect();
        let mut out = Self::zero(n, order);
        for alpha in compositions(d, n) {
            let mut coeff = CyclotomicNumber::from_integer(order, BigInt::from(mult.get(&alpha)));
            for (i, &a) in alpha.iter().enumerate() {
                coeff = &coeff * &powers[i][a as usize];
            }
            out.add_term(alpha, coeff);
        }
        out
    }

    pub fn scale(&self, c: &CyclotomicNumber) -> Self {
        let mut out = Self::zero(self.num_vars, num_integer::lcm(self.order, c.order()));
        for (e, v) in &self.terms {
            out.add_term(e.clone(), v * c);
        }
        out
    }

    /// `true` iff the polynomial is exactly `1 · x^exponents`.
    pub fn is_unit_monomial(&self, exponents: &[u32]) -> bool {
        self.terms.len() == 1 && self.terms.get(exponents).is_some_and(|c| c.is_one())
    }
}

/// Coefficient of `x^α` in `Σ_j γ_j L_j^d`, where every `γ_j` and every
/// coefficient of `L_j` is a rational multiple of a power of `ζ_N`.
///
/// The sum is collected in `Q[x]/(x^N - 1)` by exponent bucket and reduced
/// once at the end.
fn coefficient_at(dec: &Decomposition, alpha: &[u32], multinomial: &BigUint) -> CyclotomicNumber {
    let order = dec.cyclotomic_order;
    let mut buckets = vec![BigRational::zero(); order as usize];
    for t in &dec.terms {
        let mut e = t.gamma_zeta_exp % order;
        for (&fi, &ai) in t.form_exponents.iter().zip(alpha) {
            e = (e + (fi % order) * (u64::from(ai) % order)) % order;
        }
        buckets[e as usize] += &t.gamma_rational;
    }
    if buckets.iter().all(Zero::is_zero) {
        return CyclotomicNumber::zero(order);
    }
    CyclotomicNumber::from_power_coeffs(order, buckets)
        .scale(&BigRational::from_integer(multinomial.clone().into()))
}

/// `Σ_j γ_j L_j^d` expanded exactly, one output monomial at a time.
pub fn expand_power_sum(dec: &Decomposition) -> MultiCycloPoly {
    let n = dec.monomial.num_vars();
    let d = dec.degree();
    let mut mult = Multinomials::new(d);
    let mut out = MultiCycloPoly::zero(n, dec.cyclotomic_order);
    for alpha in compositions(d, n) {
        let m = mult.get(&alpha);
        let c = coefficient_at(dec, &alpha, &m);
        out.add_term(alpha, c);
    }
    out
}

/// Same result as [`expand_power_sum`], with output monomials distributed over
/// the rayon thread pool.
pub fn expand_power_sum_parallel(dec: &Decomposition) -> MultiCycloPoly {
    let n = dec.monomial.num_vars();
    let d = dec.degree();
    let alphas = compositions(d, n);
    let coeffs: Vec<(Vec<u32>, CyclotomicNumber)> = alphas
        .into_par_iter()
        .map_init(
            || Multinomials::new(d),
            |mult, alpha| {
                let m = mult.get(&alpha);
                let c = coefficient_at(dec, &alpha, &m);
                (alpha, c)
            },
        )
        .collect();
    let mut out = MultiCycloPoly::zero(n, dec.cyclotomic_order);
    for (alpha, c) in coeffs {
        out.add_term(alpha, c);
    }
    out
}
