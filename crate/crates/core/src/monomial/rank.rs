use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{normalize, CanonicalMonomial, Monomial};
use crate::error::{precondition, Result};

/// Waring rank of a monomial: `∏_{i >= 2} (b_i + 1)` over the sorted
/// exponents; the smallest exponent does not contribute.
pub fn waring_rank(c: &CanonicalMonomial) -> BigUint {
    c.exponents()
        .iter()
        .skip(1)
        .map(|&b| BigUint::from(b) + 1u32)
        .product()
}

/// Lower bound `∏_{i >= 2} a_i` on the number of points of a reduced
/// one-dimensional scheme inside `(y_1^{a_1}, ..., y_n^{a_n})`.
pub fn multiplicity_lower_bound(a: &[u32]) -> Result<BigUint> {
    if a.len() < 2 {
        return precondition("need at least two generator degrees");
    }
    if a.iter().any(|&x| x < 2) {
        return precondition("generator degrees must be at least 2");
    }
    if a.windows(2).any(|w| w[0] > w[1]) {
        return precondition("generator degrees must be non-decreasing");
    }
    Ok(a.iter().skip(1).map(|&x| BigUint::from(x)).product())
}

/// Multiplicity of a monomial complete intersection: the product of the
/// generator degrees.
pub fn ci_multiplicity(degrees: &[u32]) -> Result<BigUint> {
    if degrees.is_empty() {
        return precondition("no generator degrees given");
    }
    if degrees.contains(&0) {
        return precondition("generator degrees must be positive");
    }
    Ok(degrees.iter().map(|&x| BigUint::from(x)).product())
}

/// Bounds `max rk(M_i) <= rk(ΣM_i) <= rk(∏M_i)` for pairwise coprime
/// monomials of a common degree.
pub fn coprime_rank_bounds(ms: &[Monomial]) -> Result<(BigUint, BigUint)> {
    let Some(first) = ms.first() else {
        return precondition("no monomials given");
    };
    let d = first.degree();
    if d == 0 {
        return precondition("monomials must have positive degree");
    }
    if ms.iter().any(|m| m.degree() != d) {
        return precondition("all monomials must have the same degree");
    }
    let n = ms.iter().map(Monomial::num_vars).max().unwrap_or(0);
    let padded: Vec<Monomial> = ms.iter().map(|m| m.padded(n)).collect();
    for (i, a) in padded.iter().enumerate() {
        for b in &padded[i + 1..] {
            if !a.is_coprime_to(b) {
                return precondition(format!("{a} and {b} share a variable"));
            }
        }
    }
    let mut lower = BigUint::zero();
    for m in &padded {
        lower = lower.max(waring_rank(&normalize(m)?));
    }
    let product = padded
        .iter()
        .skip(1)
        .fold(padded[0].clone(), |acc, m| acc.mul(m));
    let upper = waring_rank(&normalize(&product)?);
    Ok((lower, upper))
}

pub(crate) fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// `⌈C(d + n - 1, d) / n⌉` for forms of degree `d` in `n = num_vars`
/// variables. Exceptional cases are not special-cased.
pub fn generic_rank_naive(num_vars: u32, d: u32) -> Result<BigUint> {
    if num_vars == 0 {
        return precondition("need at least one variable");
    }
    if d == 0 {
        return precondition("degree must be positive");
    }
    let dim = binomial(u64::from(d) + u64::from(num_vars) - 1, u64::from(d));
    Ok(Integer::div_ceil(&dim, &BigUint::from(num_vars)))
}

/// The largest rank of a degree-`d` monomial in three variables, with the
/// monomial attaining it.
pub fn extremal_rank_ternary(d: u32) -> Result<(BigUint, CanonicalMonomial)> {
    if d < 3 {
        return precondition("ternary extremal formula needs degree >= 3");
    }
    let (value, exps) = if d % 2 == 1 {
        let h = BigUint::from(d.div_ceil(2));
        (&h * &h, vec![1, (d - 1) / 2, (d - 1) / 2])
    } else {
        let h = BigUint::from(d / 2);
        (&h * (&h + 1u32), vec![1, d / 2 - 1, d / 2])
    };
    Ok((value, CanonicalMonomial::from_sorted(exps)?))
}

/// Calls `visit` with every partition of `total` into exactly `parts`
/// positive parts, non-decreasing, in lexicographic order.
fn for_each_partition(total: u32, parts: usize, visit: &mut impl FnMut(&[u32])) {
    fn go(rest: u32, slots: usize, min: u32, buf: &mut Vec<u32>, visit: &mut impl FnMut(&[u32])) {
        if slots == 0 {
            if rest == 0 {
                visit(buf);
            }
            return;
        }
        // Every remaining part is at least `part`.
        let mut part = min;
        while part as u64 * slots as u64 <= rest as u64 {
            buf.push(part);
            go(rest - part, slots - 1, part, buf, visit);
            buf.pop();
            part += 1;
        }
    }
    go(total, parts, 1, &mut Vec::with_capacity(parts), visit);
}

/// Exhaustive maximum of the Waring rank over all degree-`d` monomials
/// involving exactly `n` variables. Ties go to the lexicographically
/// smallest exponent sequence.
pub fn extremal_rank_bruteforce(n: u32, d: u32) -> Result<(BigUint, CanonicalMonomial)> {
    if n == 0 {
        return precondition("need at least one variable");
    }
    if d < n {
        return precondition(format!("no partition of {d} into {n} positive parts"));
    }
    let mut best: Option<(BigUint, Vec<u32>)> = None;
    for_each_partition(d, n as usize, &mut |parts| {
        let r: BigUint = parts
            .iter()
            .skip(1)
            .map(|&b| BigUint::from(b) + 1u32)
            .product();
        if best.as_ref().is_none_or(|(v, _)| r > *v) {
            best = Some((r, parts.to_vec()));
        }
    });
    let (value, exps) = best.expect("d >= n guarantees a partition");
    Ok((value, CanonicalMonomial::from_sorted(exps)?))
}

/// All partitions of `total` into exactly `parts` positive parts.
pub fn partitions(total: u32, parts: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    for_each_partition(total, parts, &mut |p| out.push(p.to_vec()));
    out
}

/// A partition `d_1 <= ... <= d_r` of `d = Σ d_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Parts are sorted on construction; zero parts are rejected.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.is_empty() {
            return precondition("partition needs at least one part");
        }
        if parts.contains(&0) {
            return precondition("partition parts must be positive");
        }
        parts.sort_unstable();
        Ok(Self { parts })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn total(&self) -> u32 {
        self.parts.iter().sum()
    }
}

/// Secant index `r = ∏_{i >= 2} (d_i + 1)` with
/// `X_λ ⊂ σ_r(V_{n,d})`.
pub fn secant_bound(lambda: &Partition, n: usize) -> Result<BigUint> {
    if lambda.parts.len() != n {
        return precondition(format!(
            "partition has {} parts, expected {n}",
            lambda.parts.len()
        ));
    }
    Ok(lambda
        .parts
        .iter()
        .skip(1)
        .map(|&x| BigUint::from(x) + 1u32)
        .product())
}

/// Coefficients of `∏_i (1 + t + ... + t^{b_i})`: entry `a` counts the
/// exponent vectors `α <= b` with `|α| = a`.
pub fn catalecticant_ranks(c: &CanonicalMonomial) -> Vec<BigUint> {
    let mut counts = vec![BigUint::one()];
    for &b in c.exponents() {
        let mut next = vec![BigUint::zero(); counts.len() + b as usize];
        for (i, v) in counts.iter().enumerate() {
            for slot in &mut next[i..=i + b as usize] {
                *slot += v;
            }
        }
        counts = next;
    }
    counts
}

/// Rank of the degree-`(a, d - a)` catalecticant of a monomial.
pub fn catalecticant_rank(c: &CanonicalMonomial, a: u32) -> Result<BigUint> {
    if a > c.degree() {
        return precondition(format!(
            "catalecticant degree {a} exceeds monomial degree {}",
            c.degree()
        ));
    }
    Ok(catalecticant_ranks(c).swap_remove(a as usize))
}
