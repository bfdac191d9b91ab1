//! Monomials, their canonical form, closed-form rank formulas and bounds,
//! perp ideals and monomial ideal intersection.

mod ideal;
mod rank;

use std::fmt;
use std::str::FromStr;

use crate::error::{precondition, Error, Result};

pub use ideal::{ideal_intersect, perp_generators, MonomialIdeal};
pub(crate) use rank::binomial;
pub use rank::{
    catalecticant_rank, catalecticant_ranks, ci_multiplicity, coprime_rank_bounds,
    extremal_rank_bruteforce, extremal_rank_ternary, generic_rank_naive, multiplicity_lower_bound,
    partitions, secant_bound, waring_rank, Partition,
};

/// A monomial `x_1^{e_1} ... x_n^{e_n}` in the user's variable order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exponents: Vec<u32>,
}

impl Monomial {
    /// Requires at least one variable; the constant monomial is representable
    /// but rejected by [`normalize`].
    pub fn new(exponents: Vec<u32>) -> Result<Self> {
        if exponents.is_empty() {
            return precondition("monomial needs at least one variable");
        }
        Ok(Self { exponents })
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn num_vars(&self) -> usize {
        self.exponents.len()
    }

    pub fn degree(&self) -> u32 {
        self.exponents.iter().sum()
    }

    /// Indices of variables with positive exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exponents
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
    }

    /// Same monomial in `n >= num_vars` variables.
    pub fn padded(&self, n: usize) -> Self {
        let mut exponents = self.exponents.clone();
        if n > exponents.len() {
            exponents.resize(n, 0);
        }
        Self { exponents }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.num_vars().max(other.num_vars());
        let exponents = (0..n)
            .map(|i| {
                self.exponents.get(i).copied().unwrap_or(0)
                    + other.exponents.get(i).copied().unwrap_or(0)
            })
            .collect();
        Self { exponents }
    }

    /// `true` when no variable occurs in both monomials.
    pub fn is_coprime_to(&self, other: &Self) -> bool {
        self.exponents
            .iter()
            .zip(&other.exponents)
            .all(|(&a, &b)| a == 0 || b == 0)
    }

    /// Perp ideal in the ambient variable count: `(y_i^{e_i + 1})` for every
    /// variable, including `y_i` itself where `e_i = 0`.
    pub fn perp_ideal(&self) -> MonomialIdeal {
        let n = self.num_vars();
        let gens = (0..n)
            .map(|i| {
                let mut g = vec![0; n];
                g[i] = self.exponents[i] + 1;
                g
            })
            .collect();
        MonomialIdeal::new(n, gens).expect("pure powers share the variable count")
    }
}

impl FromStr for Monomial {
    type Err = Error;

    /// Parses `x1^2*x3`: factors `x<k>` or `x<k>^<e>` joined by `*`,
    /// 1-indexed, whitespace ignored, repeated variables accumulate.
    fn from_str(s: &str) -> Result<Self> {
        let text: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if text.is_empty() {
            return Err(Error::Parse("empty monomial expression".into()));
        }
        let mut exponents: Vec<u32> = Vec::new();
        for factor in text.split('*') {
            let bad = || Error::Parse(format!("invalid factor {factor:?} in {s:?}"));
            let rest = factor.strip_prefix('x').ok_or_else(bad)?;
            let (var, exp) = match rest.split_once('^') {
                Some((v, e)) => (v, e.parse::<u32>().map_err(|_| bad())?),
                None => (rest, 1),
            };
            if var.is_empty() || !var.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            let idx: usize = var.parse().map_err(|_| bad())?;
            if idx == 0 {
                return Err(Error::Parse(format!(
                    "variables are 1-indexed, found x0 in {s:?}"
                )));
            }
            if idx > exponents.len() {
                exponents.resize(idx, 0);
            }
            exponents[idx - 1] = exponents[idx - 1]
                .checked_add(exp)
                .ok_or_else(|| Error::Parse(format!("exponent overflow in {s:?}")))?;
        }
        Ok(Self { exponents })
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.exponents.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            match e {
                1 => write!(f, "x{}", i + 1)?,
                _ => write!(f, "x{}^{e}", i + 1)?,
            }
        }
        if first {
            write!(f, "1")?;
        }
        Ok(())
    }
}

/// Monomial restricted to its support, exponents sorted non-decreasing.
///
/// `permutation[k]` is the (0-based) user variable carrying the `k`-th
/// canonical exponent.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CanonicalMonomial {
    exponents: Vec<u32>,
    permutation: Vec<usize>,
}

impl CanonicalMonomial {
    /// Builds a canonical monomial from exponents that are already positive
    /// and sorted, with the identity permutation.
    pub fn from_sorted(exponents: Vec<u32>) -> Result<Self> {
        if exponents.is_empty() {
            return precondition("canonical monomial needs at least one variable");
        }
        if exponents.contains(&0) {
            return precondition("canonical exponents must be positive");
        }
        if exponents.windows(2).any(|w| w[0] > w[1]) {
            return precondition("canonical exponents must be non-decreasing");
        }
        let permutation = (0..exponents.len()).collect();
        Ok(Self {
            exponents,
            permutation,
        })
    }

    /// Canonical exponents with an explicit variable map. The map must be
    /// injective; the exponents must satisfy the canonical ordering.
    pub fn with_permutation(exponents: Vec<u32>, permutation: Vec<usize>) -> Result<Self> {
        let mut c = Self::from_sorted(exponents)?;
        if permutation.len() != c.exponents.len() {
            return precondition("variable map length differs from exponent count");
        }
        let mut seen = permutation.clone();
        seen.sort_unstable();
        if seen.windows(2).any(|w| w[0] == w[1]) {
            return precondition("variable map is not injective");
        }
        c.permutation = permutation;
        Ok(c)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn permutation(&self) -> &[usize] {
        &self.permutation
    }

    pub fn num_vars(&self) -> usize {
        self.exponents.len()
    }

    pub fn degree(&self) -> u32 {
        self.exponents.iter().sum()
    }

    /// The monomial in user variables, over `max(permutation) + 1` variables.
    pub fn to_raw(&self) -> Monomial {
        let n = self.permutation.iter().max().map_or(0, |m| m + 1);
        let mut exponents = vec![0; n];
        for (&e, &p) in self.exponents.iter().zip(&self.permutation) {
            exponents[p] = e;
        }
        Monomial { exponents }
    }

    /// The canonical exponents as a monomial in `num_vars` variables.
    pub fn as_monomial(&self) -> Monomial {
        Monomial {
            exponents: self.exponents.clone(),
        }
    }
}

/// Drop zero exponents, sort the rest non-decreasing (stable on ties) and
/// record where each canonical exponent came from.
pub fn normalize(m: &Monomial) -> Result<CanonicalMonomial> {
    if m.degree() == 0 {
        return Err(Error::Domain(
            "constant has no Waring decomposition target".into(),
        ));
    }
    let mut idx: Vec<usize> = m.support().collect();
    idx.sort_by_key(|&i| m.exponents[i]);
    Ok(CanonicalMonomial {
        exponents: idx.iter().map(|&i| m.exponents[i]).collect(),
        permutation: idx,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn mono(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec()).unwrap()
    }

    #[test]
    fn normalize_examples() {
        let c = normalize(&mono(&[3, 0, 1])).unwrap();
        assert_eq!(c.exponents(), &[1, 3]);
        assert_eq!(c.permutation(), &[2, 0]);

        let c = normalize(&mono(&[1, 1, 1])).unwrap();
        assert_eq!(c.exponents(), &[1, 1, 1]);
        assert_eq!(c.permutation(), &[0, 1, 2]);

        assert_eq!(normalize(&mono(&[0, 5])).unwrap().exponents(), &[5]);
    }

    #[test]
    fn constant_is_rejected() {
        let err = normalize(&mono(&[0, 0])).unwrap_err();
        assert_eq!(
            err,
            Error::Domain("constant has no Waring decomposition target".into())
        );
        assert!(Monomial::new(vec![]).is_err());
    }

    #[test]
    fn stable_tie_break() {
        let c = normalize(&mono(&[2, 1, 2, 1])).unwrap();
        assert_eq!(c.exponents(), &[1, 1, 2, 2]);
        assert_eq!(c.permutation(), &[1, 3, 0, 2]);
        assert_eq!(c.to_raw(), mono(&[2, 1, 2, 1]));
    }

    #[test]
    fn parse_grammar() {
        assert_eq!("x1^2*x3".parse::<Monomial>().unwrap(), mono(&[2, 0, 1]));
        assert_eq!(" x2 * x2 ^3 ".parse::<Monomial>().unwrap(), mono(&[0, 4]));
        assert_eq!("x1*x2*x3".parse::<Monomial>().unwrap(), mono(&[1, 1, 1]));
        for bad in [
            "", "y1", "x", "x0", "x1^", "x1^-2", "x1**x2", "x1+x2", "2*x1",
        ] {
            assert!(
                matches!(bad.parse::<Monomial>(), Err(Error::Parse(_))),
                "{bad:?} should not parse"
            );
        }
    }

    #[test]
    fn display_roundtrip() {
        let m = mono(&[2, 0, 1]);
        assert_eq!(m.to_string(), "x1^2*x3");
        assert_eq!(m.to_string().parse::<Monomial>().unwrap(), m);
    }

    #[test]
    fn canonical_constructor_checks() {
        assert!(CanonicalMonomial::from_sorted(vec![2, 1]).is_err());
        assert!(CanonicalMonomial::from_sorted(vec![0, 1]).is_err());
        assert!(CanonicalMonomial::with_permutation(vec![1, 2], vec![3, 3]).is_err());
        let c = CanonicalMonomial::with_permutation(vec![1, 2], vec![4, 0]).unwrap();
        assert_eq!(c.to_raw(), mono(&[2, 0, 0, 0, 1]));
    }

    proptest! {
        #[test]
        fn normalize_is_idempotent(e in prop::collection::vec(0u32..6, 1..7)) {
            let m = mono(&e);
            prop_assume!(m.degree() > 0);
            let c = normalize(&m).unwrap();
            let again = normalize(&c.as_monomial()).unwrap();
            prop_assert_eq!(again.exponents(), c.exponents());
            let raw = normalize(&c.to_raw()).unwrap();
            prop_assert_eq!(raw.exponents(), c.exponents());
        }
    }
}
