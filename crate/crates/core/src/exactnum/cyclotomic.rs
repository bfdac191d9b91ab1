use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::intpoly::IntegerPolynomial;
use crate::error::{Error, Result};

/// Euler's totient function.
pub fn euler_totient(n: u64) -> u64 {
    let mut n = n;
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

fn phi_cache() -> &'static RwLock<HashMap<u64, Arc<IntegerPolynomial>>> {
    static CACHE: OnceLock<RwLock<HashMap<u64, Arc<IntegerPolynomial>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Memoized `Φ_n`. Computed as `(x^n - 1) / ∏_{d | n, d < n} Φ_d`.
pub(crate) fn phi(n: u64) -> Arc<IntegerPolynomial> {
    assert!(n >= 1, "cyclotomic polynomial of order 0");
    if let Some(p) = phi_cache().read().unwrap().get(&n) {
        return Arc::clone(p);
    }
    let mut quotient = IntegerPolynomial::x_pow_minus_one(n as usize);
    for d in divisors(n) {
        if d == n {
            break;
        }
        quotient = quotient
            .exact_div(&phi(d))
            .expect("Φ_d divides x^n - 1 for every d | n");
    }
    let p = Arc::new(quotient);
    phi_cache()
        .write()
        .unwrap()
        .entry(n)
        .or_insert_with(|| Arc::clone(&p));
    p
}

/// The `n`-th cyclotomic polynomial `Φ_n`, monic of degree `φ(n)`.
///
/// Panics if `n == 0`.
pub fn cyclotomic_polynomial(n: u64) -> IntegerPolynomial {
    (*phi(n)).clone()
}

/// Reduce `Σ c_i x^i` modulo the monic polynomial `modulus`, returning exactly
/// `deg(modulus)` coefficients.
fn reduce_mod(mut coeffs: Vec<BigRational>, modulus: &IntegerPolynomial) -> Vec<BigRational> {
    let deg = modulus.degree().expect("nonzero modulus");
    debug_assert!(modulus.is_monic());
    let m = modulus.coeffs();
    for k in (deg..coeffs.len()).rev() {
        if coeffs[k].is_zero() {
            continue;
        }
        let top = std::mem::take(&mut coeffs[k]);
        for (j, mj) in m.iter().enumerate().take(deg) {
            if !mj.is_zero() {
                coeffs[k - deg + j] -= &top * BigRational::from_integer(mj.clone());
            }
        }
    }
    coeffs.resize(deg, BigRational::zero());
    coeffs
}

fn trim(mut p: Vec<BigRational>) -> Vec<BigRational> {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    out
}

fn poly_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let len = a.len().max(b.len());
    let zero = BigRational::zero();
    trim(
        (0..len)
            .map(|i| a.get(i).unwrap_or(&zero) - b.get(i).unwrap_or(&zero))
            .collect(),
    )
}

/// Division with remainder in `Q[x]`; `b` must be nonzero and trimmed.
fn poly_div_rem(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let db = b.len() - 1;
    let mut rem = trim(a.to_vec());
    if rem.len() <= db {
        return (Vec::new(), rem);
    }
    let lead_inv = b[db].recip();
    let mut quot = vec![BigRational::zero(); rem.len() - db];
    while rem.len() > db {
        let k = rem.len() - 1 - db;
        let q = &rem[rem.len() - 1] * &lead_inv;
        for (j, bj) in b.iter().enumerate() {
            rem[k + j] -= &q * bj;
        }
        quot[k] = q;
        rem = trim(rem);
    }
    (trim(quot), rem)
}

/// An exact element of the cyclotomic field `Q(ζ_N)`.
///
/// Stored as the unique residue `Σ c_i ζ^i`, `0 <= i < φ(N)`, modulo `Φ_N`,
/// so structural equality is field equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CyclotomicNumber {
    order: u64,
    coeffs: Vec<BigRational>,
}

/// Root of unity `ζ_N^k` in reduced form.
///
/// Panics if `order == 0`.
pub fn zeta_power(order: u64, k: i64) -> CyclotomicNumber {
    CyclotomicNumber::zeta_power(order, k)
}

impl CyclotomicNumber {
    pub fn zero(order: u64) -> Self {
        assert!(order >= 1, "cyclotomic order must be positive");
        Self {
            order,
            coeffs: vec![BigRational::zero(); euler_totient(order) as usize],
        }
    }

    pub fn one(order: u64) -> Self {
        Self::from_rational(order, BigRational::one())
    }

    pub fn from_rational(order: u64, r: BigRational) -> Self {
        let mut z = Self::zero(order);
        z.coeffs[0] = r;
        z
    }

    pub fn from_integer(order: u64, n: impl Into<BigInt>) -> Self {
        Self::from_rational(order, BigRational::from_integer(n.into()))
    }

    /// Element `Σ c_i ζ_N^i` for an arbitrary-length coefficient vector.
    /// Coefficients at `i >= N` are allowed and reduced.
    pub fn from_power_coeffs(order: u64, coeffs: Vec<BigRational>) -> Self {
        assert!(order >= 1, "cyclotomic order must be positive");
        Self {
            order,
            coeffs: reduce_mod(coeffs, &phi(order)),
        }
    }

    pub fn zeta_power(order: u64, k: i64) -> Self {
        assert!(order >= 1, "cyclotomic order must be positive");
        let e = k.rem_euclid(order as i64) as usize;
        let mut coeffs = vec![BigRational::zero(); e + 1];
        coeffs[e] = BigRational::one();
        Self::from_power_coeffs(order, coeffs)
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    /// Reduced coefficients; length is `φ(order)`.
    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// The rational value if the element lies in `Q`.
    pub fn as_rational(&self) -> Option<&BigRational> {
        self.coeffs[1..]
            .iter()
            .all(Zero::is_zero)
            .then(|| &self.coeffs[0])
    }

    pub fn is_one(&self) -> bool {
        self.as_rational().is_some_and(One::is_one)
    }

    /// Same element viewed in `Q(ζ_M)`, using `ζ_N = ζ_M^{M/N}`.
    pub fn embed_order(&self, target: u64) -> Result<Self> {
        if target == 0 || !target.is_multiple_of(self.order) {
            return Err(Error::Domain(format!(
                "cannot embed Q(zeta_{}) into Q(zeta_{target}): order does not divide",
                self.order
            )));
        }
        if target == self.order {
            return Ok(self.clone());
        }
        let step = (target / self.order) as usize;
        let mut coeffs = vec![BigRational::zero(); (self.coeffs.len().max(1) - 1) * step + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * step] = c.clone();
        }
        Ok(Self::from_power_coeffs(target, coeffs))
    }

    /// Bring two operands to their common (lcm) order.
    fn lift_pair<'a>(
        a: &'a Self,
        b: &'a Self,
    ) -> (std::borrow::Cow<'a, Self>, std::borrow::Cow<'a, Self>) {
        use std::borrow::Cow;
        if a.order == b.order {
            return (Cow::Borrowed(a), Cow::Borrowed(b));
        }
        let l = a.order.lcm(&b.order);
        (
            Cow::Owned(a.embed_order(l).expect("lcm is a multiple")),
            Cow::Owned(b.embed_order(l).expect("lcm is a multiple")),
        )
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        Self {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    /// Multiply by `ζ_N^k`.
    pub fn mul_zeta(&self, k: i64) -> Self {
        let e = k.rem_euclid(self.order as i64) as usize;
        if e == 0 {
            return self.clone();
        }
        let mut coeffs = vec![BigRational::zero(); e];
        coeffs.extend(self.coeffs.iter().cloned());
        Self::from_power_coeffs(self.order, coeffs)
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut result = Self::one(self.order);
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Multiplicative inverse by the extended Euclidean algorithm against `Φ_N`.
    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::Domain("inversion of zero".into()));
        }
        if let Some(r) = self.as_rational() {
            return Ok(Self::from_rational(self.order, r.recip()));
        }
        let modulus: Vec<BigRational> = phi(self.order)
            .coeffs()
            .iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect();
        // Invariant: s_i * a ≡ r_i (mod Φ_N).
        let (mut r0, mut r1) = (modulus, trim(self.coeffs.clone()));
        let (mut s0, mut s1): (Vec<BigRational>, Vec<BigRational>) =
            (Vec::new(), vec![BigRational::one()]);
        while r1.len() > 1 {
            let (q, r) = poly_div_rem(&r0, &r1);
            let s = poly_sub(&s0, &poly_mul(&q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
        }
        // Φ_N is irreducible, so the final remainder is a nonzero constant.
        let g = r1
            .first()
            .cloned()
            .ok_or_else(|| Error::Internal("gcd with cyclotomic polynomial vanished".into()))?;
        let inv = Self::from_power_coeffs(self.order, s1).scale(&g.recip());
        Ok(inv)
    }

    /// If the element equals `r·ζ_N^e` for a rational `r`, returns `(r, e)` with
    /// the smallest such `e` in `0..N`.
    pub fn as_scaled_root(&self) -> Option<(BigRational, u64)> {
        if self.is_zero() {
            return Some((BigRational::zero(), 0));
        }
        let mut cur = self.clone();
        for e in 0..self.order {
            if let Some(r) = cur.as_rational() {
                return Some((r.clone(), e));
            }
            cur = cur.mul_zeta(-1);
        }
        None
    }

    pub fn to_repr(&self) -> CyclotomicRepr {
        match self.as_scaled_root() {
            Some((r, e)) => CyclotomicRepr::Compact {
                rational: rational_to_string(&r),
                zeta_exp: e as i64,
            },
            None => self.to_full_repr(),
        }
    }

    pub fn to_full_repr(&self) -> CyclotomicRepr {
        CyclotomicRepr::Full {
            order: self.order,
            coeffs: self.coeffs.iter().map(rational_to_string).collect(),
        }
    }

    /// Decode a JSON representation. Compact forms need the ambient `order`.
    pub fn from_repr(repr: &CyclotomicRepr, order: u64) -> Result<Self> {
        match repr {
            CyclotomicRepr::Compact { rational, zeta_exp } => {
                if order == 0 {
                    return Err(Error::Parse("cyclotomic order must be positive".into()));
                }
                let r = parse_rational(rational)?;
                Ok(Self::zeta_power(order, *zeta_exp).scale(&r))
            }
            CyclotomicRepr::Full { order: o, coeffs } => {
                if *o == 0 {
                    return Err(Error::Parse("cyclotomic order must be positive".into()));
                }
                if coeffs.len() as u64 != euler_totient(*o) {
                    return Err(Error::Parse(format!(
                        "expected {} coefficients for order {o}, found {}",
                        euler_totient(*o),
                        coeffs.len()
                    )));
                }
                let coeffs = coeffs
                    .iter()
                    .map(|s| parse_rational(s))
                    .collect::<Result<Vec<_>>>()?;
                let x = Self::from_power_coeffs(*o, coeffs);
                if order > 0 && order.is_multiple_of(*o) {
                    x.embed_order(order)
                } else {
                    Ok(x)
                }
            }
        }
    }
}

/// `p/q` with the denominator always spelled out.
pub fn rational_to_string(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses `p/q` or a bare integer `p`.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let t = s.trim();
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let num: BigInt = num
        .parse()
        .map_err(|_| Error::Parse(format!("invalid rational {s:?}")))?;
    let den: BigInt = den
        .parse()
        .map_err(|_| Error::Parse(format!("invalid rational {s:?}")))?;
    if den.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(BigRational::new(num, den))
}

/// JSON shape of a cyclotomic number.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CyclotomicRepr {
    Compact { rational: String, zeta_exp: i64 },
    Full { order: u64, coeffs: Vec<String> },
}

impl Add for &CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn add(self, rhs: &CyclotomicNumber) -> CyclotomicNumber {
        let (a, b) = CyclotomicNumber::lift_pair(self, rhs);
        CyclotomicNumber {
            order: a.order,
            coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect(),
        }
    }
}

impl Sub for &CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn sub(self, rhs: &CyclotomicNumber) -> CyclotomicNumber {
        let (a, b) = CyclotomicNumber::lift_pair(self, rhs);
        CyclotomicNumber {
            order: a.order,
            coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x - y).collect(),
        }
    }
}

impl Neg for &CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn neg(self) -> CyclotomicNumber {
        CyclotomicNumber {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn mul(self, rhs: &CyclotomicNumber) -> CyclotomicNumber {
        let (a, b) = CyclotomicNumber::lift_pair(self, rhs);
        if let Some(r) = a.as_rational() {
            return b.scale(r);
        }
        if let Some(r) = b.as_rational() {
            return a.scale(r);
        }
        CyclotomicNumber::from_power_coeffs(a.order, poly_mul(&a.coeffs, &b.coeffs))
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for CyclotomicNumber {
            type Output = CyclotomicNumber;
            fn $m(self, rhs: CyclotomicNumber) -> CyclotomicNumber {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl fmt::Display for CyclotomicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            }
            first = false;
            let mag = c.abs();
            match i {
                0 => write!(f, "{mag}")?,
                _ if mag.is_one() => write!(f, "zeta_{}^{i}", self.order)?,
                _ => write!(f, "{mag}*zeta_{}^{i}", self.order)?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}
