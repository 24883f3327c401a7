use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::laurent::LaurentPolyZ;
use crate::ring::Multidegree;

use super::{MixedMultTable, Route};

/// The multigraded Hilbert polynomial `P(X_1, ..., X_r)` with exact rational
/// coefficients, together with a bound beyond which it computes lengths.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertPolynomialRep {
    nvars: usize,
    coefficients: BTreeMap<Vec<u32>, BigRational>,
    validity_threshold: Multidegree,
}

impl HilbertPolynomialRep {
    /// `P(X) = Σ_a c_a ∏_i C(X_i - a_i + D_i - 1, D_i - 1)` over the terms
    /// `c_a t^a` of the numerator.
    pub(crate) fn from_numerator(numerator: &LaurentPolyZ, denominators: &[u32]) -> Self {
        let r = denominators.len();
        let mut coefficients: BTreeMap<Vec<u32>, BigRational> = BTreeMap::new();
        for (a, c) in numerator.terms() {
            let factors: Vec<Vec<BigRational>> = a
                .iter()
                .zip(denominators)
                .map(|(&ai, &di)| shifted_binomial(-ai, di))
                .collect();
            let mut partial: Vec<(Vec<u32>, BigRational)> =
                vec![(Vec::new(), BigRational::from_integer(c.clone()))];
            for f in &factors {
                let mut next = Vec::with_capacity(partial.len() * f.len());
                for (e, v) in &partial {
                    for (k, fk) in f.iter().enumerate() {
                        if fk.is_zero() {
                            continue;
                        }
                        let mut e2 = e.clone();
                        e2.push(k as u32);
                        next.push((e2, v * fk));
                    }
                }
                partial = next;
            }
            for (e, v) in partial {
                let slot = coefficients.entry(e).or_insert_with(BigRational::zero);
                *slot += v;
            }
        }
        coefficients.retain(|_, v| !v.is_zero());
        HilbertPolynomialRep {
            nvars: r,
            coefficients,
            validity_threshold: Multidegree(numerator.max_exponents()),
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn coefficients(&self) -> &BTreeMap<Vec<u32>, BigRational> {
        &self.coefficients
    }

    pub fn coefficient(&self, exps: &[u32]) -> BigRational {
        self.coefficients
            .get(exps)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn validity_threshold(&self) -> &Multidegree {
        &self.validity_threshold
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coefficients
            .keys()
            .map(|e| e.iter().map(|&x| x as usize).sum())
            .max()
    }

    pub fn evaluate(&self, point: &[i64]) -> BigRational {
        assert_eq!(point.len(), self.nvars);
        let mut acc = BigRational::zero();
        for (e, c) in &self.coefficients {
            let mut term = c.clone();
            for (&x, &k) in point.iter().zip(e) {
                term *= BigRational::from_integer(BigInt::from(x).pow(k));
            }
            acc += term;
        }
        acc
    }

    /// `e(n) = n! * [X^n] P` for every `n` with `|n| = deg P`.
    pub fn leading_table(&self) -> Result<MixedMultTable> {
        let Some(deg) = self.degree() else {
            return Ok(MixedMultTable::new(
                None,
                Route::Polynomial,
                BTreeMap::new(),
            ));
        };
        let mut entries = BTreeMap::new();
        for (e, c) in &self.coefficients {
            if e.iter().map(|&x| x as usize).sum::<usize>() != deg {
                continue;
            }
            let fact: BigInt = e.iter().map(|&k| factorial(k)).product();
            let v = c * BigRational::from_integer(fact);
            if !v.is_integer() || v.is_negative() {
                return Err(Error::Invariant(format!(
                    "leading coefficient of the Hilbert polynomial at {e:?} gives {v}"
                )));
            }
            let v = v.to_integer().to_biguint().unwrap();
            if !v.is_zero() {
                entries.insert(e.iter().map(|&x| x as i64).collect(), v);
            }
        }
        Ok(MixedMultTable::new(Some(deg), Route::Polynomial, entries))
    }

    /// Render with `X1, ..., Xr`, highest degree first.
    pub fn render(&self) -> String {
        if self.coefficients.is_empty() {
            return "0".into();
        }
        let mut keys: Vec<&Vec<u32>> = self.coefficients.keys().collect();
        keys.sort_by(|a, b| {
            let da: u32 = a.iter().sum();
            let db: u32 = b.iter().sum();
            db.cmp(&da).then_with(|| b.cmp(a))
        });
        let mut out = String::new();
        for (k, e) in keys.into_iter().enumerate() {
            let c = &self.coefficients[e];
            let neg = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let vars: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &x)| x > 0)
                .map(|(i, &x)| {
                    if x == 1 {
                        format!("X{}", i + 1)
                    } else {
                        format!("X{}^{}", i + 1, x)
                    }
                })
                .collect();
            if vars.is_empty() {
                out.push_str(&abs.to_string());
            } else {
                if !abs.is_one() {
                    out.push_str(&format!("{abs}*"));
                }
                out.push_str(&vars.join("*"));
            }
        }
        out
    }
}

/// Coefficients (constant term first) of `C(X + b + D - 1, D - 1)`.
fn shifted_binomial(b: i64, d: u32) -> Vec<BigRational> {
    let mut poly = vec![BigRational::one()];
    for j in 1..d as i64 {
        // multiply by (X + b + j)
        let s = BigRational::from_integer(BigInt::from(b + j));
        let mut next = vec![BigRational::zero(); poly.len() + 1];
        for (k, c) in poly.iter().enumerate() {
            next[k] += c * &s;
            next[k + 1] += c;
        }
        poly = next;
    }
    let denom = BigRational::from_integer(factorial(d.saturating_sub(1)));
    poly.into_iter().map(|c| c / &denom).collect()
}

pub(crate) fn factorial(n: u32) -> BigInt {
    (1..=n).map(BigInt::from).product()
}
