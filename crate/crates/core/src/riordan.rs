//! Admissible and Riordan pairs of series, the Riordan group operations,
//! and the associated exact lower-triangular matrices.

use num::{One, Zero};
use serde_json::json;

use crate::error::{Error, Result};
use crate::powerseries::{rat_from_string, rat_to_string, ExactSeries, Rat};

/// A pair (F, G) with G[0] = 0. Riordan when additionally F[0] != 0 and G
/// is a delta series.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdmissiblePair {
    f: ExactSeries,
    g: ExactSeries,
}

impl AdmissiblePair {
    pub fn new(f: ExactSeries, g: ExactSeries) -> Result<Self> {
        if f.trunc_order() != g.trunc_order() {
            return Err(Error::TruncationMismatch(f.trunc_order(), g.trunc_order()));
        }
        if !g.coeff(0).is_zero() {
            return Err(Error::NotAdmissible);
        }
        Ok(AdmissiblePair { f, g })
    }

    /// The identity pair (1, x).
    pub fn identity(trunc: usize) -> Self {
        AdmissiblePair {
            f: ExactSeries::one(trunc),
            g: ExactSeries::x(trunc),
        }
    }

    pub fn f(&self) -> &ExactSeries {
        &self.f
    }

    pub fn g(&self) -> &ExactSeries {
        &self.g
    }

    pub fn trunc_order(&self) -> usize {
        self.f.trunc_order()
    }

    pub fn is_riordan(&self) -> bool {
        !self.f.coeff(0).is_zero() && self.g.is_delta()
    }

    /// Riordan product (F1, G1) * (F2, G2) = (F1 . F2(G1), G2(G1)).
    pub fn product(&self, other: &AdmissiblePair) -> Result<AdmissiblePair> {
        if self.trunc_order() != other.trunc_order() {
            return Err(Error::TruncationMismatch(
                self.trunc_order(),
                other.trunc_order(),
            ));
        }
        let f = self.f.mul(&other.f.substitute(&self.g)?)?;
        let g = other.g.substitute(&self.g)?;
        Ok(AdmissiblePair { f, g })
    }

    /// Group inverse (F^{-1}(G^{<-1>}), G^{<-1>}). Requires a Riordan pair.
    pub fn inverse(&self) -> Result<AdmissiblePair> {
        if !self.is_riordan() {
            return Err(Error::NotRiordan);
        }
        let g_inv = self.g.comp_inverse()?;
        let f = self.f.mul_inverse()?.substitute(&g_inv)?;
        Ok(AdmissiblePair { f, g: g_inv })
    }

    /// The associated lower-triangular matrix with entries
    /// C_{n,k} = (F . gamma_k(G))[n].
    pub fn matrix(&self, n_max: usize) -> Result<LowerTriangular> {
        if n_max > self.trunc_order() {
            return Err(Error::OrderTooLarge(n_max, self.trunc_order()));
        }
        let mut entries: Vec<Vec<Rat>> =
            (0..=n_max).map(|n| vec![Rat::zero(); n + 1]).collect();
        let mut h = self.f.clone(); // F . gamma_k(G), running in k
        for k in 0..=n_max {
            if k > 0 {
                h = h
                    .mul(&self.g)?
                    .scale(&Rat::new(num::BigInt::one(), num::BigInt::from(k)));
            }
            for n in k..=n_max {
                entries[n][k] = h.coeff(n).clone();
            }
        }
        Ok(LowerTriangular { entries })
    }
}

/// Exact lower-triangular matrix; row n holds entries for k = 0..=n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LowerTriangular {
    entries: Vec<Vec<Rat>>,
}

impl LowerTriangular {
    pub fn from_rows(entries: Vec<Vec<Rat>>) -> Self {
        for (n, row) in entries.iter().enumerate() {
            assert_eq!(row.len(), n + 1, "row {n} must have {} entries", n + 1);
        }
        LowerTriangular { entries }
    }

    pub fn from_fn(n_max: usize, f: impl Fn(usize, usize) -> Rat) -> Self {
        LowerTriangular {
            entries: (0..=n_max)
                .map(|n| (0..=n).map(|k| f(n, k)).collect())
                .collect(),
        }
    }

    pub fn identity(n_max: usize) -> Self {
        Self::from_fn(n_max, |n, k| if n == k { Rat::one() } else { Rat::zero() })
    }

    pub fn n_max(&self) -> usize {
        self.entries.len() - 1
    }

    pub fn entry(&self, n: usize, k: usize) -> Rat {
        if k > n {
            Rat::zero()
        } else {
            self.entries[n][k].clone()
        }
    }

    pub fn row(&self, n: usize) -> &[Rat] {
        &self.entries[n]
    }

    pub fn is_identity(&self) -> bool {
        self == &Self::identity(self.n_max())
    }

    pub fn mul(&self, other: &LowerTriangular) -> Result<LowerTriangular> {
        if self.n_max() != other.n_max() {
            return Err(Error::SizeMismatch(self.n_max(), other.n_max()));
        }
        let n_max = self.n_max();
        Ok(Self::from_fn(n_max, |n, k| {
            let mut acc = Rat::zero();
            for j in k..=n {
                let term = &self.entries[n][j] * &other.entries[j][k];
                if !term.is_zero() {
                    acc += term;
                }
            }
            acc
        }))
    }

    /// Inverse by forward substitution; requires every diagonal entry nonzero.
    pub fn inverse(&self) -> Result<LowerTriangular> {
        let n_max = self.n_max();
        for n in 0..=n_max {
            if self.entries[n][n].is_zero() {
                return Err(Error::ZeroDiagonal(n));
            }
        }
        let mut inv: Vec<Vec<Rat>> = (0..=n_max).map(|n| vec![Rat::zero(); n + 1]).collect();
        for k in 0..=n_max {
            inv[k][k] = self.entries[k][k].recip();
            for n in (k + 1)..=n_max {
                let mut acc = Rat::zero();
                for j in k..n {
                    let term = &self.entries[n][j] * &inv[j][k];
                    if !term.is_zero() {
                        acc += term;
                    }
                }
                inv[n][k] = -acc / &self.entries[n][n];
            }
        }
        Ok(LowerTriangular { entries: inv })
    }

    /// CSV rows: entries joined by commas, then one semicolon per missing
    /// column so every line has n_max + 1 fields.
    pub fn to_csv(&self) -> String {
        let n_max = self.n_max();
        self.entries
            .iter()
            .enumerate()
            .map(|(n, row)| {
                let body: Vec<String> = row.iter().map(rat_to_string).collect();
                format!("{}{}", body.join(","), ";".repeat(n_max - n))
            })
            .collect::<Vec<_>>()
            .join("\n")
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "n_max": self.n_max(),
            "rows": self
                .entries
                .iter()
                .map(|row| row.iter().map(rat_to_string).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
        })
    }

    pub fn from_json(v: &serde_json::Value) -> Result<LowerTriangular> {
        let rows = v["rows"]
            .as_array()
            .ok_or_else(|| Error::Invalid("missing rows".into()))?;
        let entries = rows
            .iter()
            .map(|row| {
                row.as_array()
                    .ok_or_else(|| Error::Invalid("row must be an array".into()))?
                    .iter()
                    .map(|c| {
                        c.as_str()
                            .ok_or_else(|| Error::Invalid("entry must be a string".into()))
                            .and_then(rat_from_string)
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        for (n, row) in entries.iter().enumerate() {
            if row.len() != n + 1 {
                return Err(Error::Invalid(format!("row {n} has wrong length")));
            }
        }
        Ok(LowerTriangular { entries })
    }
}
