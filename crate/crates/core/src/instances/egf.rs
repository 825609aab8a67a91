//! Closed-form exponential generating series for the cataloged species.

use num::{BigInt, One, Zero};

use crate::powerseries::{binomial, factorial, ExactSeries, Rat};

/// x/(1-x): nonempty lists, coefficient n! at n >= 1.
pub fn lists_plus(trunc: usize) -> ExactSeries {
    ExactSeries::from_fn(trunc, |n| {
        if n == 0 {
            Rat::zero()
        } else {
            Rat::from(factorial(n))
        }
    })
}

/// (1/(1-x))^r: r-tuples of lists, coefficient binom(n+r-1, r-1) n!.
pub fn lists_tuple(trunc: usize, r: usize) -> ExactSeries {
    ExactSeries::from_fn(trunc, |n| {
        Rat::from(binomial(n + r - 1, r - 1) * factorial(n))
    })
}

/// log(1/(1-x)): cycles, coefficient (n-1)! at n >= 1.
pub fn cycles(trunc: usize) -> ExactSeries {
    ExactSeries::from_fn(trunc, |n| {
        if n == 0 {
            Rat::zero()
        } else {
            Rat::from(factorial(n - 1))
        }
    })
}

/// e^{e^x - 1}: set partitions (Bell numbers).
pub fn bell(trunc: usize) -> ExactSeries {
    ExactSeries::exp(trunc)
        .substitute(&ExactSeries::exp_minus_one(trunc))
        .expect("composition of matching truncations")
}

/// e^{x^2/2}: perfect matchings, coefficient (n-1)!! at even n.
pub fn pairings(trunc: usize) -> ExactSeries {
    let half_square = ExactSeries::from_fn(trunc, |n| {
        if n == 2 {
            Rat::one()
        } else {
            Rat::zero()
        }
    });
    ExactSeries::exp(trunc)
        .substitute(&half_square)
        .expect("composition of matching truncations")
}

/// (e^{mx} - 1)/m: unital G-colorations for |G| = m, coefficient m^{n-1}.
pub fn dowling(trunc: usize, m: usize) -> ExactSeries {
    ExactSeries::from_fn(trunc, |n| {
        if n == 0 {
            Rat::zero()
        } else {
            Rat::from(BigInt::from(m).pow(n as u32 - 1))
        }
    })
}

/// All simple graphs: coefficient 2^binom(n,2).
pub fn graphs(trunc: usize) -> ExactSeries {
    ExactSeries::from_fn(trunc, |n| {
        Rat::from(BigInt::from(2).pow((n * n.saturating_sub(1) / 2) as u32))
    })
}

/// Formal logarithm: log(F) for F with constant term 1.
pub fn formal_log(f: &ExactSeries) -> ExactSeries {
    let trunc = f.trunc_order();
    // log(1+u) has EGF coefficients (-1)^{n-1} (n-1)!
    let log1p = ExactSeries::from_fn(trunc, |n| {
        if n == 0 {
            Rat::zero()
        } else {
            let sign = if n % 2 == 1 { 1 } else { -1 };
            Rat::from(factorial(n - 1) * BigInt::from(sign))
        }
    });
    let shifted = f
        .sub(&ExactSeries::one(trunc))
        .expect("matching truncations");
    log1p.substitute(&shifted).expect("delta substitution")
}

/// Connected simple graphs: log of the graph series.
pub fn graphs_connected(trunc: usize) -> ExactSeries {
    formal_log(&graphs(trunc))
}

/// 1 - sqrt(1-2x): commutative binary trees, inverse of x - x^2/2.
pub fn bessel(trunc: usize) -> ExactSeries {
    let g = ExactSeries::from_fn(trunc, |n| match n {
        1 => Rat::one(),
        2 => -Rat::one(),
        _ => Rat::zero(),
    });
    g.comp_inverse().expect("delta series")
}
