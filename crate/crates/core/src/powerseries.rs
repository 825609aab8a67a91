//! Truncated exponential generating series with exact rational coefficients.
//!
//! A series stores the coefficients `F[n]` of `x^n/n!` up to a fixed
//! truncation order. All binary operations require equal truncation orders;
//! mixed orders are an error rather than a silent re-truncation.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use serde_json::json;

use crate::error::{Error, Result};

/// Exact rational scalar used throughout the crate.
pub type Rat = BigRational;

/// Integer-valued rational.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Rational from numerator and denominator.
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// Binomial coefficient as an exact integer.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// n! as an exact integer.
pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// Renders a rational as "p/q", or "p" when the denominator is one.
pub fn rat_to_string(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses "p/q" or "p" into an exact rational.
pub fn rat_from_string(s: &str) -> Result<Rat> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let num: BigInt = num
        .parse()
        .map_err(|_| Error::Invalid(format!("bad rational: {s}")))?;
    let den: BigInt = den
        .parse()
        .map_err(|_| Error::Invalid(format!("bad rational: {s}")))?;
    if den.is_zero() {
        return Err(Error::Invalid(format!("zero denominator: {s}")));
    }
    Ok(Rat::new(num, den))
}

/// Classification of a series by its low-order coefficients.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesClass {
    Arbitrary,
    ZeroConstantTerm,
    Delta,
    MultiplicativelyInvertible,
}

/// Truncated exponential generating series. `coeff(n)` is the coefficient
/// of `x^n/n!`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactSeries {
    coeffs: Vec<Rat>,
}

impl ExactSeries {
    /// Builds a series from EGF coefficients; the truncation order is
    /// `coeffs.len() - 1`.
    pub fn from_coeffs(coeffs: Vec<Rat>) -> Self {
        assert!(!coeffs.is_empty(), "series needs at least the constant term");
        ExactSeries { coeffs }
    }

    pub fn from_fn(trunc: usize, f: impl Fn(usize) -> Rat) -> Self {
        ExactSeries {
            coeffs: (0..=trunc).map(f).collect(),
        }
    }

    pub fn zero(trunc: usize) -> Self {
        Self::from_fn(trunc, |_| Rat::zero())
    }

    /// The multiplicative identity 1.
    pub fn one(trunc: usize) -> Self {
        Self::from_fn(trunc, |n| if n == 0 { Rat::one() } else { Rat::zero() })
    }

    /// The series x, identity for substitution.
    pub fn x(trunc: usize) -> Self {
        Self::from_fn(trunc, |n| if n == 1 { Rat::one() } else { Rat::zero() })
    }

    /// e^x: all EGF coefficients 1.
    pub fn exp(trunc: usize) -> Self {
        Self::from_fn(trunc, |_| Rat::one())
    }

    /// e^x - 1.
    pub fn exp_minus_one(trunc: usize) -> Self {
        Self::from_fn(trunc, |n| if n == 0 { Rat::zero() } else { Rat::one() })
    }

    /// e^{cx} for an integer c.
    pub fn exp_c(trunc: usize, c: i64) -> Self {
        Self::from_fn(trunc, |n| {
            Rat::from_integer(BigInt::from(c).pow(n as u32))
        })
    }

    pub fn cosh(trunc: usize) -> Self {
        Self::from_fn(trunc, |n| if n % 2 == 0 { Rat::one() } else { Rat::zero() })
    }

    pub fn sinh(trunc: usize) -> Self {
        Self::from_fn(trunc, |n| if n % 2 == 1 { Rat::one() } else { Rat::zero() })
    }

    /// 1/(1-x) as an EGF: coefficient n!.
    pub fn geometric(trunc: usize) -> Self {
        Self::from_fn(trunc, |n| Rat::from_integer(factorial(n)))
    }

    pub fn trunc_order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> &Rat {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn classify(&self) -> SeriesClass {
        if !self.coeffs[0].is_zero() {
            SeriesClass::MultiplicativelyInvertible
        } else if self.coeffs.len() > 1 && !self.coeffs[1].is_zero() {
            SeriesClass::Delta
        } else if self.coeffs[0].is_zero() {
            SeriesClass::ZeroConstantTerm
        } else {
            SeriesClass::Arbitrary
        }
    }

    pub fn is_delta(&self) -> bool {
        self.coeffs[0].is_zero() && self.coeffs.len() > 1 && !self.coeffs[1].is_zero()
    }

    fn check_same_order(&self, other: &ExactSeries) -> Result<()> {
        if self.trunc_order() != other.trunc_order() {
            Err(Error::TruncationMismatch(
                self.trunc_order(),
                other.trunc_order(),
            ))
        } else {
            Ok(())
        }
    }

    pub fn add(&self, other: &ExactSeries) -> Result<ExactSeries> {
        self.check_same_order(other)?;
        Ok(ExactSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &ExactSeries) -> Result<ExactSeries> {
        self.check_same_order(other)?;
        Ok(ExactSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn scale(&self, c: &Rat) -> ExactSeries {
        ExactSeries {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// EGF product: result[n] = sum_k binom(n,k) F[k] G[n-k].
    pub fn mul(&self, other: &ExactSeries) -> Result<ExactSeries> {
        self.check_same_order(other)?;
        let n_max = self.trunc_order();
        let mut coeffs = vec![Rat::zero(); n_max + 1];
        for (n, c) in coeffs.iter_mut().enumerate() {
            let mut acc = Rat::zero();
            for k in 0..=n {
                let term = &self.coeffs[k] * &other.coeffs[n - k];
                if !term.is_zero() {
                    acc += term * Rat::from_integer(binomial(n, k));
                }
            }
            *c = acc;
        }
        Ok(ExactSeries { coeffs })
    }

    /// Divided power F^k / k!. Requires F[0] = 0.
    pub fn divided_power(&self, k: usize) -> Result<ExactSeries> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        let mut acc = ExactSeries::one(self.trunc_order());
        for i in 1..=k {
            acc = acc.mul(self)?.scale(&Rat::new(BigInt::one(), BigInt::from(i)));
            // F^i has valuation >= i; once it truncates to zero, stop.
            if acc.coeffs.iter().all(|c| c.is_zero()) {
                break;
            }
        }
        Ok(acc)
    }

    /// Substitution G(F) = sum_k G[k] gamma_k(F). `self` is G. Requires F[0] = 0.
    pub fn substitute(&self, inner: &ExactSeries) -> Result<ExactSeries> {
        self.check_same_order(inner)?;
        if !inner.coeffs[0].is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        let n_max = self.trunc_order();
        let mut result = ExactSeries::zero(n_max);
        let mut power = ExactSeries::one(n_max); // gamma_k(F), running
        for k in 0..=n_max {
            if k > 0 {
                power = power
                    .mul(inner)?
                    .scale(&Rat::new(BigInt::one(), BigInt::from(k)));
            }
            if !self.coeffs[k].is_zero() {
                result = result.add(&power.scale(&self.coeffs[k]))?;
            }
            if k > 0 && power.coeffs.iter().all(|c| c.is_zero()) {
                break;
            }
        }
        Ok(result)
    }

    /// Multiplicative inverse by triangular recursion. Requires F[0] != 0.
    pub fn mul_inverse(&self) -> Result<ExactSeries> {
        if self.coeffs[0].is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        let n_max = self.trunc_order();
        let mut inv = vec![Rat::zero(); n_max + 1];
        let lead = self.coeffs[0].recip();
        inv[0] = lead.clone();
        for n in 1..=n_max {
            let mut acc = Rat::zero();
            for k in 1..=n {
                let term = &self.coeffs[k] * &inv[n - k];
                if !term.is_zero() {
                    acc += term * Rat::from_integer(binomial(n, k));
                }
            }
            inv[n] = -acc * &lead;
        }
        Ok(ExactSeries { coeffs: inv })
    }

    /// Compositional inverse of a delta series: the unique delta H with
    /// G(H) = x, found degree by degree.
    pub fn comp_inverse(&self) -> Result<ExactSeries> {
        if !self.is_delta() {
            return Err(Error::NotDelta);
        }
        let n_max = self.trunc_order();
        let g1_inv = self.coeffs[1].recip();
        let mut h = ExactSeries::zero(n_max);
        if n_max >= 1 {
            h.coeffs[1] = g1_inv.clone();
        }
        for n in 2..=n_max {
            // With H known below degree n, G(H)[n] = G[1] H[n] + (terms in H[<n]).
            let partial = self.substitute(&h)?;
            h.coeffs[n] = -&partial.coeffs[n] * &g1_inv;
        }
        Ok(h)
    }

    /// Serializes as {"trunc": N, "egf_coeffs": ["p/q", ...]}.
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "trunc": self.trunc_order(),
            "egf_coeffs": self.coeffs.iter().map(rat_to_string).collect::<Vec<_>>(),
        })
    }

    pub fn from_json(v: &serde_json::Value) -> Result<ExactSeries> {
        let trunc = v["trunc"]
            .as_u64()
            .ok_or_else(|| Error::Invalid("missing trunc".into()))? as usize;
        let arr = v["egf_coeffs"]
            .as_array()
            .ok_or_else(|| Error::Invalid("missing egf_coeffs".into()))?;
        if arr.len() != trunc + 1 {
            return Err(Error::Invalid("egf_coeffs length mismatch".into()));
        }
        let coeffs = arr
            .iter()
            .map(|c| {
                c.as_str()
                    .ok_or_else(|| Error::Invalid("coefficient must be a string".into()))
                    .and_then(rat_from_string)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(ExactSeries::from_coeffs(coeffs))
    }
}

impl std::fmt::Display for ExactSeries {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(rat_to_string).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

/// Signed integer coefficient, asserting integrality. Panics on
/// non-integer input; used where counting data is expected.
pub fn rat_to_bigint(r: &Rat) -> BigInt {
    assert!(r.denom().is_one(), "expected integer, got {}", r);
    r.numer().clone()
}

/// |r| as usize; panics unless r is a small nonnegative integer.
pub fn rat_to_usize(r: &Rat) -> usize {
    let i = rat_to_bigint(r);
    assert!(!i.is_negative());
    let (_, digits) = i.to_u64_digits();
    match digits.len() {
        0 => 0,
        1 => digits[0] as usize,
        _ => panic!("integer too large for usize"),
    }
}
