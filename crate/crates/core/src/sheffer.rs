//! Exact polynomials and Sheffer-type polynomial sequences: binomial, Appel,
//! and general Riordan-conjugate families, with umbral substitution,
//! umbral inversion, and delta-operator application.

use num::{One, Zero};
use serde_json::json;

use crate::error::{Error, Result};
use crate::powerseries::{binomial, factorial, rat_to_string, ExactSeries, Rat};
use crate::riordan::{AdmissiblePair, LowerTriangular};

/// Dense exact polynomial; coeffs[k] is the coefficient of x^k, trailing
/// zeros trimmed so the representation is canonical. Zero is the empty list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactPoly {
    coeffs: Vec<Rat>,
}

impl ExactPoly {
    pub fn from_coeffs(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        ExactPoly { coeffs }
    }

    pub fn zero() -> Self {
        ExactPoly { coeffs: vec![] }
    }

    pub fn constant(c: Rat) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn x_pow(k: usize) -> Self {
        let mut coeffs = vec![Rat::zero(); k + 1];
        coeffs[k] = Rat::one();
        ExactPoly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree of the zero polynomial is reported as 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn add(&self, other: &ExactPoly) -> ExactPoly {
        let len = self.coeffs.len().max(other.coeffs.len());
        Self::from_coeffs((0..len).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }

    pub fn sub(&self, other: &ExactPoly) -> ExactPoly {
        let len = self.coeffs.len().max(other.coeffs.len());
        Self::from_coeffs((0..len).map(|k| self.coeff(k) - other.coeff(k)).collect())
    }

    pub fn scale(&self, c: &Rat) -> ExactPoly {
        Self::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn mul(&self, other: &ExactPoly) -> ExactPoly {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Self::from_coeffs(coeffs)
    }

    pub fn derivative(&self) -> ExactPoly {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * Rat::from(num::BigInt::from(k)))
                .collect(),
        )
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// q(x + c) by binomial expansion.
    pub fn shift(&self, c: &Rat) -> ExactPoly {
        let n = self.coeffs.len();
        let mut coeffs = vec![Rat::zero(); n];
        for (k, a) in self.coeffs.iter().enumerate() {
            let mut pow = Rat::one(); // c^{k-i}
            for i in (0..=k).rev() {
                coeffs[i] += a * Rat::from(binomial(k, i)) * &pow;
                pow *= c;
            }
        }
        Self::from_coeffs(coeffs)
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!(self.coeffs.iter().map(rat_to_string).collect::<Vec<_>>())
    }
}

impl std::fmt::Display for ExactPoly {
    /// Plain text, highest degree first: "x^3 + 3x^2 + x", "x^2 - 1/2 x".
    fn fmt(&self, out: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(out, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = if c < &Rat::zero() { -c.clone() } else { c.clone() };
            if first {
                if c < &Rat::zero() {
                    write!(out, "-")?;
                }
                first = false;
            } else if c < &Rat::zero() {
                write!(out, " - ")?;
            } else {
                write!(out, " + ")?;
            }
            let unit = mag.is_one();
            if !unit || k == 0 {
                write!(out, "{}", rat_to_string(&mag))?;
            }
            if k > 0 {
                if !unit && !mag.is_integer() {
                    write!(out, " ")?;
                }
                if k == 1 {
                    write!(out, "x")?;
                } else {
                    write!(out, "x^{k}")?;
                }
            }
        }
        Ok(())
    }
}

/// A sequence of exact polynomials indexed 0..=n_max, optionally tagged with
/// the admissible pair whose Riordan matrix holds its connection coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolySeq {
    polys: Vec<ExactPoly>,
    origin: Option<AdmissiblePair>,
}

impl PolySeq {
    pub fn from_polys(polys: Vec<ExactPoly>, origin: Option<AdmissiblePair>) -> Self {
        PolySeq { polys, origin }
    }

    /// Row n of the matrix becomes the coefficients of polys[n].
    pub fn from_matrix(m: &LowerTriangular, origin: Option<AdmissiblePair>) -> Self {
        let polys = (0..=m.n_max())
            .map(|n| ExactPoly::from_coeffs(m.row(n).to_vec()))
            .collect();
        PolySeq { polys, origin }
    }

    /// The sequence {x^n}.
    pub fn powers(n_max: usize) -> Self {
        PolySeq {
            polys: (0..=n_max).map(ExactPoly::x_pow).collect(),
            origin: None,
        }
    }

    pub fn n_max(&self) -> usize {
        self.polys.len() - 1
    }

    pub fn poly(&self, n: usize) -> &ExactPoly {
        &self.polys[n]
    }

    pub fn polys(&self) -> &[ExactPoly] {
        &self.polys
    }

    pub fn origin(&self) -> Option<&AdmissiblePair> {
        self.origin.as_ref()
    }

    pub fn matrix(&self) -> LowerTriangular {
        LowerTriangular::from_fn(self.n_max(), |n, k| self.polys[n].coeff(k))
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "n_max": self.n_max(),
            "polys": self.polys.iter().map(|p| p.to_json()).collect::<Vec<_>>(),
            "text": self.polys.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
        })
    }
}

/// Binomial-type family of a delta series: p_n(x) = Σ_k γ_k(G)[n] x^k.
pub fn binomial_conjugate(g: &ExactSeries, n_max: usize) -> Result<PolySeq> {
    if !g.is_delta() {
        return Err(Error::NotDelta);
    }
    let pair = AdmissiblePair::new(ExactSeries::one(g.trunc_order()), g.clone())?;
    Ok(PolySeq::from_matrix(&pair.matrix(n_max)?, Some(pair)))
}

/// Sheffer family of a Riordan pair: s_n(x) = Σ_k (F·γ_k(G))[n] x^k.
pub fn sheffer_conjugate(p: &AdmissiblePair, n_max: usize) -> Result<PolySeq> {
    if !p.is_riordan() {
        return Err(Error::NotRiordan);
    }
    Ok(PolySeq::from_matrix(&p.matrix(n_max)?, Some(p.clone())))
}

/// Appel family of an invertible series: a_n(x) = Σ_k binom(n,k) F[n−k] x^k.
pub fn appel_conjugate(f: &ExactSeries, n_max: usize) -> Result<PolySeq> {
    if f.coeff(0).is_zero() {
        return Err(Error::ZeroConstantTerm);
    }
    let pair = AdmissiblePair::new(f.clone(), ExactSeries::x(f.trunc_order()))?;
    Ok(PolySeq::from_matrix(&pair.matrix(n_max)?, Some(pair)))
}

/// Umbral substitution s_n(r): replace x^k by r_k(x) in s_n; the coefficient
/// matrix of the result is matrix(s)·matrix(r).
pub fn umbral_substitute(s: &PolySeq, r: &PolySeq) -> Result<PolySeq> {
    if s.n_max() != r.n_max() {
        return Err(Error::SizeMismatch(s.n_max(), r.n_max()));
    }
    let m = s.matrix().mul(&r.matrix())?;
    let origin = match (s.origin(), r.origin()) {
        (Some(a), Some(b)) if a.trunc_order() == b.trunc_order() => a.product(b).ok(),
        _ => None,
    };
    Ok(PolySeq::from_matrix(&m, origin))
}

/// The family ŝ with s_n(ŝ) = x^n; its matrix is the triangular inverse.
pub fn umbral_inverse(s: &PolySeq) -> Result<PolySeq> {
    let m = s.matrix().inverse().map_err(|e| match e {
        Error::ZeroDiagonal(_) => Error::SingularMatrix,
        other => other,
    })?;
    let origin = s.origin().and_then(|p| p.inverse().ok());
    Ok(PolySeq::from_matrix(&m, origin))
}

/// Apply the operator P(D) = Σ_{n≥1} P[n] D^n/n! to a polynomial.
pub fn apply_delta_series(p: &ExactSeries, q: &ExactPoly) -> Result<ExactPoly> {
    if !p.coeff(0).is_zero() {
        return Err(Error::NonzeroConstantTerm);
    }
    if !q.is_zero() && q.degree() > p.trunc_order() {
        return Err(Error::DegreeOverflow(q.degree(), p.trunc_order()));
    }
    let mut acc = ExactPoly::zero();
    let mut deriv = q.clone();
    for n in 1..=p.trunc_order() {
        deriv = deriv.derivative();
        if deriv.is_zero() {
            break;
        }
        let c = p.coeff(n) / Rat::from(factorial(n));
        if !c.is_zero() {
            acc = acc.add(&deriv.scale(&c));
        }
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::powerseries::{rat, rat_int};

    fn ipoly(coeffs: &[i64]) -> ExactPoly {
        ExactPoly::from_coeffs(coeffs.iter().map(|&c| rat_int(c)).collect())
    }

    /// Dense bivariate polynomial, grid[i][j] is the coefficient of x^i y^j.
    struct Poly2 {
        grid: Vec<Vec<Rat>>,
    }

    impl Poly2 {
        fn zero(n: usize) -> Self {
            Poly2 {
                grid: vec![vec![Rat::zero(); n + 1]; n + 1],
            }
        }

        fn in_x(p: &ExactPoly, n: usize) -> Self {
            let mut out = Self::zero(n);
            for k in 0..=p.degree() {
                out.grid[k][0] = p.coeff(k);
            }
            out
        }

        fn in_y(p: &ExactPoly, n: usize) -> Self {
            let mut out = Self::zero(n);
            for k in 0..=p.degree() {
                out.grid[0][k] = p.coeff(k);
            }
            out
        }

        /// p evaluated at x + y.
        fn of_sum(p: &ExactPoly, n: usize) -> Self {
            let mut out = Self::zero(n);
            for k in 0..=p.degree() {
                let c = p.coeff(k);
                for i in 0..=k {
                    out.grid[i][k - i] += &c * Rat::from(binomial(k, i));
                }
            }
            out
        }

        fn add_scaled_product(&mut self, c: &Rat, a: &Poly2, b: &Poly2) {
            let n = self.grid.len() - 1;
            for i1 in 0..=n {
                for j1 in 0..=n {
                    if a.grid[i1][j1].is_zero() {
                        continue;
                    }
                    for i2 in 0..=(n - i1) {
                        for j2 in 0..=(n - j1) {
                            if b.grid[i2][j2].is_zero() {
                                continue;
                            }
                            self.grid[i1 + i2][j1 + j2] +=
                                c * &a.grid[i1][j1] * &b.grid[i2][j2];
                        }
                    }
                }
            }
        }

        fn eq(&self, other: &Poly2) -> bool {
            self.grid == other.grid
        }
    }

    /// s_n(x+y) = Σ_k binom(n,k) s_k(x) p_{n−k}(y), exactly, for all n.
    fn sheffer_identity_holds(s: &PolySeq, p: &PolySeq) -> bool {
        let n_max = s.n_max();
        for n in 0..=n_max {
            let lhs = Poly2::of_sum(s.poly(n), n_max);
            let mut rhs = Poly2::zero(n_max);
            for k in 0..=n {
                rhs.add_scaled_product(
                    &Rat::from(binomial(n, k)),
                    &Poly2::in_x(s.poly(k), n_max),
                    &Poly2::in_y(p.poly(n - k), n_max),
                );
            }
            if !lhs.eq(&rhs) {
                return false;
            }
        }
        true
    }

    fn log_geometric(trunc: usize) -> ExactSeries {
        // log(1/(1-x)) as an EGF: coefficient (n-1)! at n >= 1
        ExactSeries::from_fn(trunc, |n| {
            if n == 0 {
                Rat::zero()
            } else {
                Rat::from(factorial(n - 1))
            }
        })
    }

    #[test]
    fn poly_display() {
        assert_eq!(ipoly(&[0, 1, 3, 1]).to_string(), "x^3 + 3x^2 + x");
        assert_eq!(ipoly(&[3, 0, 6, 0, 1]).to_string(), "x^4 + 6x^2 + 3");
        assert_eq!(ipoly(&[-1, 2]).to_string(), "2x - 1");
        assert_eq!(ipoly(&[0, -1]).to_string(), "-x");
        assert_eq!(ExactPoly::zero().to_string(), "0");
        let half = ExactPoly::from_coeffs(vec![rat_int(0), rat(-1, 2), rat_int(1)]);
        assert_eq!(half.to_string(), "x^2 - 1/2 x");
    }

    #[test]
    fn poly_canonical_and_arith() {
        assert_eq!(ipoly(&[1, 2, 0, 0]).coeffs().len(), 2);
        assert_eq!(ipoly(&[0, 0, 1]).degree(), 2);
        assert_eq!(ipoly(&[1, 1]).mul(&ipoly(&[-1, 1])), ipoly(&[-1, 0, 1]));
        assert_eq!(ipoly(&[0, 0, 0, 1]).derivative(), ipoly(&[0, 0, 3]));
        assert_eq!(ipoly(&[0, -1, 1]).shift(&rat_int(1)), ipoly(&[0, 1, 1]));
        assert_eq!(ipoly(&[2, 3, 1]).eval(&rat_int(-1)), rat_int(0));
        assert_eq!(ipoly(&[1, 1]).sub(&ipoly(&[1, 1])), ExactPoly::zero());
    }

    #[test]
    fn touchard_family() {
        let p = binomial_conjugate(&ExactSeries::exp_minus_one(6), 3).unwrap();
        assert_eq!(p.poly(0), &ipoly(&[1]));
        assert_eq!(p.poly(3), &ipoly(&[0, 1, 3, 1]));
    }

    #[test]
    fn binomial_of_x_is_powers() {
        let p = binomial_conjugate(&ExactSeries::x(5), 5).unwrap();
        assert_eq!(p.matrix(), PolySeq::powers(5).matrix());
    }

    #[test]
    fn increasing_factorial_family() {
        let p = binomial_conjugate(&log_geometric(6), 3).unwrap();
        assert_eq!(p.poly(3), &ipoly(&[0, 2, 3, 1]));
    }

    #[test]
    fn binomial_requires_delta() {
        assert!(matches!(
            binomial_conjugate(&ExactSeries::exp(4), 4),
            Err(Error::NotDelta)
        ));
    }

    #[test]
    fn shifted_powers_and_reduction() {
        let t = 5;
        let pair = AdmissiblePair::new(ExactSeries::exp(t), ExactSeries::x(t)).unwrap();
        let s = sheffer_conjugate(&pair, 2).unwrap();
        assert_eq!(s.poly(2), &ipoly(&[1, 2, 1]));
        let g = ExactSeries::exp_minus_one(t);
        let pure = AdmissiblePair::new(ExactSeries::one(t), g.clone()).unwrap();
        assert_eq!(
            sheffer_conjugate(&pure, 4).unwrap().matrix(),
            binomial_conjugate(&g, 4).unwrap().matrix()
        );
    }

    #[test]
    fn shifted_touchard() {
        // Bell-number pair (e^{e^x-1}, e^x-1): s_n(x) = T_n(x+1)
        let t = 5;
        let g = ExactSeries::exp_minus_one(t);
        let bell = ExactSeries::exp(t).substitute(&g).unwrap();
        let pair = AdmissiblePair::new(bell, g.clone()).unwrap();
        let s = sheffer_conjugate(&pair, 3).unwrap();
        assert_eq!(s.poly(2), &ipoly(&[2, 3, 1]));
        let touchard = binomial_conjugate(&g, 3).unwrap();
        for n in 0..=3 {
            assert_eq!(s.poly(n), &touchard.poly(n).shift(&rat_int(1)));
        }
    }

    #[test]
    fn sheffer_requires_riordan() {
        let t = 4;
        let pair = AdmissiblePair::new(ExactSeries::sinh(t), ExactSeries::sinh(t)).unwrap();
        assert!(matches!(sheffer_conjugate(&pair, 3), Err(Error::NotRiordan)));
    }

    #[test]
    fn appel_families() {
        let a = appel_conjugate(&ExactSeries::cosh(6), 4).unwrap();
        assert_eq!(a.poly(4), &ipoly(&[1, 0, 6, 0, 1]));
        let one = appel_conjugate(&ExactSeries::one(4), 4).unwrap();
        assert_eq!(one.matrix(), PolySeq::powers(4).matrix());
        let lists = appel_conjugate(&ExactSeries::geometric(4), 2).unwrap();
        assert_eq!(lists.poly(2), &ipoly(&[2, 2, 1]));
        assert!(matches!(
            appel_conjugate(&ExactSeries::x(4), 4),
            Err(Error::ZeroConstantTerm)
        ));
    }

    #[test]
    fn appel_equals_sheffer_with_trivial_delta() {
        let t = 5;
        let f = ExactSeries::cosh(t);
        let pair = AdmissiblePair::new(f.clone(), ExactSeries::x(t)).unwrap();
        assert_eq!(
            appel_conjugate(&f, t).unwrap().matrix(),
            sheffer_conjugate(&pair, t).unwrap().matrix()
        );
    }

    #[test]
    fn umbral_substitution_identity_and_product() {
        let t = 5;
        let g = ExactSeries::exp_minus_one(t);
        let p = binomial_conjugate(&g, t).unwrap();
        let id = PolySeq::powers(t);
        assert_eq!(umbral_substitute(&id, &p).unwrap().matrix(), p.matrix());

        // a_n(p) for the Appel family of e^x gives the shifted Touchard family
        let a = appel_conjugate(&ExactSeries::exp(t), t).unwrap();
        let s = umbral_substitute(&a, &p).unwrap();
        let pair = AdmissiblePair::new(ExactSeries::exp(t), g).unwrap();
        let direct = sheffer_conjugate(&pair, t).unwrap();
        assert_eq!(s.matrix(), direct.matrix());
        assert_eq!(s.origin(), Some(&pair));
    }

    #[test]
    fn umbral_inverse_round_trips() {
        let t = 6;
        let g = ExactSeries::exp_minus_one(t);
        let touchard = binomial_conjugate(&g, t).unwrap();
        let falling = umbral_inverse(&touchard).unwrap();
        assert_eq!(falling.poly(3), &ipoly(&[0, 2, -3, 1])); // (x)_3
        assert_eq!(
            umbral_substitute(&touchard, &falling).unwrap().matrix(),
            PolySeq::powers(t).matrix()
        );

        let shifted = appel_conjugate(&ExactSeries::exp(t), 3).unwrap(); // (x+1)^n
        let inv = umbral_inverse(&shifted).unwrap(); // (x-1)^n
        assert_eq!(inv.poly(3), &ipoly(&[-1, 3, -3, 1]));

        let powers = PolySeq::powers(4);
        assert_eq!(umbral_inverse(&powers).unwrap().matrix(), powers.matrix());
    }

    #[test]
    fn umbral_inverse_rejects_singular() {
        let s = PolySeq::from_polys(vec![ipoly(&[1]), ipoly(&[5])], None);
        assert_eq!(umbral_inverse(&s), Err(Error::SingularMatrix));
    }

    #[test]
    fn delta_operator_application() {
        // D on x^3
        let d = apply_delta_series(&ExactSeries::x(5), &ipoly(&[0, 0, 0, 1])).unwrap();
        assert_eq!(d, ipoly(&[0, 0, 3]));
        // forward difference on (x)_2
        let fd = apply_delta_series(&ExactSeries::exp_minus_one(5), &ipoly(&[0, -1, 1])).unwrap();
        assert_eq!(fd, ipoly(&[0, 2]));
        // central difference on x^2
        let cd = apply_delta_series(&ExactSeries::sinh(5), &ipoly(&[0, 0, 1])).unwrap();
        assert_eq!(cd, ipoly(&[0, 2]));

        assert!(matches!(
            apply_delta_series(&ExactSeries::exp(5), &ipoly(&[1])),
            Err(Error::NonzeroConstantTerm)
        ));
        assert!(matches!(
            apply_delta_series(&ExactSeries::x(2), &ipoly(&[0, 0, 0, 1])),
            Err(Error::DegreeOverflow(3, 2))
        ));
    }

    #[test]
    fn delta_operator_lowers_its_binomial_family() {
        // P(D) p_n = n p_{n-1} where p is binomial of the inverse of P
        for p_series in [
            ExactSeries::exp_minus_one(8),
            ExactSeries::sinh(8),
            log_geometric(8),
        ] {
            let fam = binomial_conjugate(&p_series.comp_inverse().unwrap(), 8).unwrap();
            for n in 1..=8usize {
                let lowered = apply_delta_series(&p_series, fam.poly(n)).unwrap();
                assert_eq!(lowered, fam.poly(n - 1).scale(&rat_int(n as i64)));
            }
        }
    }

    #[test]
    fn binomial_identity_bivariate() {
        for g in [
            ExactSeries::exp_minus_one(8),
            log_geometric(8),
            ExactSeries::sinh(8),
        ] {
            let p = binomial_conjugate(&g, 8).unwrap();
            assert!(sheffer_identity_holds(&p, &p));
        }
    }

    #[test]
    fn sheffer_identity_bivariate() {
        let t = 8;
        for (f, g) in [
            (ExactSeries::exp(t), ExactSeries::exp_minus_one(t)),
            (ExactSeries::cosh(t), ExactSeries::sinh(t)),
            (ExactSeries::geometric(t), log_geometric(t)),
        ] {
            let pair = AdmissiblePair::new(f, g.clone()).unwrap();
            let s = sheffer_conjugate(&pair, t).unwrap();
            let p = binomial_conjugate(&g, t).unwrap();
            assert!(sheffer_identity_holds(&s, &p));
        }
    }

    #[test]
    fn sequence_json_shape() {
        let s = binomial_conjugate(&ExactSeries::exp_minus_one(4), 3).unwrap();
        let v = s.to_json();
        assert_eq!(v["text"][3], "x^3 + 3x^2 + x");
        assert_eq!(v["polys"][2][2], "1");
    }
}
