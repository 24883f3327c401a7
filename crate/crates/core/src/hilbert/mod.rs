//! Multigraded Hilbert series and polynomials of cyclic modules `B/J(-ν)`,
//! and the mixed multiplicities read off from either.

mod monomial_ideal;
mod polynomial;

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, Zero};

pub use monomial_ideal::{PivotRule, DIMENSION_GUARD, ENUMERATION_GUARD};
pub use polynomial::HilbertPolynomialRep;

pub(crate) use monomial_ideal::{dimension_of_monomials, minimalize};

use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::laurent::LaurentPolyZ;
use crate::monomial::Monomial;
use crate::ring::{Multidegree, RingSpec};
use monomial_ideal::{count_standard_monomials, k_polynomial_of_monomials, Grading};

/// `Hilb(t) = numerator / ∏ (1 - t_i)^{D_i}` with `D_i` the size of block `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertSeriesRep {
    pub numerator: LaurentPolyZ,
    pub denominator_exponents: Vec<u32>,
    pub ring: RingSpec,
    pub shift: Multidegree,
    /// Krull dimension of `B/J`; `None` for the zero module.
    pub dimension: Option<usize>,
}

impl HilbertSeriesRep {
    /// The coefficient of `t^ν`, i.e. the length of the graded piece at `ν`.
    pub fn coefficient(&self, nu: &[i64]) -> BigInt {
        let mut acc = BigInt::zero();
        for (a, c) in self.numerator.terms() {
            let mut term = c.clone();
            for ((&ni, &ai), &di) in nu.iter().zip(a).zip(&self.denominator_exponents) {
                let m = ni - ai;
                if m < 0 {
                    term = BigInt::zero();
                    break;
                }
                term *= binomial(m as u64 + di as u64 - 1, di as u64 - 1);
            }
            acc += term;
        }
        acc
    }

    /// The series table `e_n`, `|n + 1| = d`.
    pub fn mixed_mult_table(&self) -> Result<MixedMultTable> {
        series_table(&self.numerator, &self.denominator_exponents, self.dimension)
    }

    pub fn hilbert_polynomial(&self) -> HilbertPolynomialRep {
        HilbertPolynomialRep::from_numerator(&self.numerator, &self.denominator_exponents)
    }
}

/// Which definition of mixed multiplicity a table holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Route {
    /// From the Hilbert series; types `n >= -1` with `|n + 1| = dim`.
    Series,
    /// From the Hilbert polynomial; types `n >= 0` with `|n| = deg P`.
    Polynomial,
}

/// Nonzero mixed multiplicities indexed by type vector; absent keys are 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MixedMultTable {
    pub dimension: Option<usize>,
    pub route: Route,
    entries: BTreeMap<Vec<i64>, BigUint>,
}

impl MixedMultTable {
    pub fn new(
        dimension: Option<usize>,
        route: Route,
        entries: BTreeMap<Vec<i64>, BigUint>,
    ) -> Self {
        let entries = entries.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        MixedMultTable {
            dimension,
            route,
            entries,
        }
    }

    pub fn get(&self, n: &[i64]) -> BigUint {
        self.entries.get(n).cloned().unwrap_or_default()
    }

    pub fn entries(&self) -> &BTreeMap<Vec<i64>, BigUint> {
        &self.entries
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn sum(&self) -> BigUint {
        self.entries.values().sum()
    }

    /// Entries restricted to types with no negative component.
    pub fn nonnegative_part(&self) -> BTreeMap<Vec<i64>, BigUint> {
        self.entries
            .iter()
            .filter(|(k, _)| k.iter().all(|&x| x >= 0))
            .map(|(k, v)| (k.clone(), v.clone()))
            .collect()
    }
}

/// Krull dimension of `k[x]/I` for a monomial ideal; `None` when `I = (1)`.
pub fn monomial_dimension(ideal: &Ideal) -> Result<Option<usize>> {
    let gens = ideal
        .generators()
        .iter()
        .map(|g| {
            if g.is_monomial() {
                Ok(g.terms()[0].1.clone())
            } else {
                Err(Error::InvalidArgument(format!(
                    "not a monomial: {}",
                    g.render(&ideal.ring().var_names())
                )))
            }
        })
        .collect::<Result<Vec<_>>>()?;
    dimension_of_monomials(ideal.ring().nvars(), &gens)
}

/// Minimal generators of the degrevlex leading-term ideal.
pub fn leading_monomials(ideal: &Ideal) -> Result<Vec<Monomial>> {
    let gb = ideal.groebner()?;
    Ok(minimalize(gb.leading_terms().to_vec()))
}

/// Krull dimension of `B/J`; `None` for `J = (1)`.
pub fn krull_dimension(ideal: &Ideal) -> Result<Option<usize>> {
    dimension_of_monomials(ideal.ring().nvars(), &leading_monomials(ideal)?)
}

pub fn k_polynomial(ideal: &Ideal) -> Result<HilbertSeriesRep> {
    k_polynomial_with(ideal, PivotRule::default())
}

pub fn k_polynomial_with(ideal: &Ideal, rule: PivotRule) -> Result<HilbertSeriesRep> {
    ideal.require_homogeneous()?;
    let ring = ideal.ring();
    let lts = leading_monomials(ideal)?;
    let block_of: Vec<usize> = (0..ring.nvars()).map(|v| ring.block_of(v)).collect();
    let grading = Grading {
        block_of: &block_of,
        r: ring.r(),
    };
    let shift = ideal.shift_or_zero();
    let numerator = k_polynomial_of_monomials(&lts, &grading, rule).shifted(shift.as_slice());
    Ok(HilbertSeriesRep {
        numerator,
        denominator_exponents: ring.block_sizes().iter().map(|&n| n as u32).collect(),
        ring: ring.clone(),
        shift,
        dimension: dimension_of_monomials(ring.nvars(), &lts)?,
    })
}

/// Mixed multiplicities defined through the Hilbert series.
pub fn mixed_mult_series(ideal: &Ideal) -> Result<MixedMultTable> {
    k_polynomial(ideal)?.mixed_mult_table()
}

/// Read `e_n` off `K(1 - s)`: its lowest nonzero homogeneous part has degree
/// `|D| - d` and equals `Σ e_n s^{D - (n + 1)}`.
pub fn series_table(
    numerator: &LaurentPolyZ,
    denominators: &[u32],
    dimension: Option<usize>,
) -> Result<MixedMultTable> {
    let Some(d) = dimension else {
        if !numerator.is_zero() {
            return Err(Error::Invariant(
                "zero module with a nonzero numerator".into(),
            ));
        }
        return Ok(MixedMultTable::new(None, Route::Series, BTreeMap::new()));
    };
    let total: usize = denominators.iter().map(|&x| x as usize).sum();
    if d > total {
        return Err(Error::Invariant(format!("dimension {d} exceeds {total}")));
    }
    let low = total - d;
    let expansion = substitute_one_minus(numerator, low);
    let mut entries = BTreeMap::new();
    for (k, c) in expansion {
        let deg: usize = k.iter().map(|&x| x as usize).sum();
        if deg < low {
            return Err(Error::Invariant(format!(
                "K(1-s) has a nonzero term {c}*s^{k:?} below degree {low}"
            )));
        }
        if k.iter().zip(denominators).any(|(&ki, &di)| ki > di) {
            return Err(Error::Invariant(format!(
                "K(1-s) has a term s^{k:?} outside the admissible types"
            )));
        }
        if c.is_negative() {
            return Err(Error::Invariant(format!(
                "negative mixed multiplicity {c} at s^{k:?}"
            )));
        }
        let n: Vec<i64> = k
            .iter()
            .zip(denominators)
            .map(|(&ki, &di)| di as i64 - 1 - ki as i64)
            .collect();
        entries.insert(n, c.to_biguint().unwrap());
    }
    if entries.is_empty() {
        return Err(Error::Invariant(format!(
            "K(1-s) has no term in degree {low}; dimension is wrong"
        )));
    }
    Ok(MixedMultTable::new(Some(d), Route::Series, entries))
}

/// Terms of `K(1 - s)` of total degree at most `max_deg`, after clearing
/// negative exponents; only nonzero coefficients are returned.
fn substitute_one_minus(numerator: &LaurentPolyZ, max_deg: usize) -> BTreeMap<Vec<u32>, BigInt> {
    let r = numerator.nvars();
    let cleared = numerator.shifted(
        &numerator
            .min_exponents()
            .iter()
            .map(|x| -x)
            .collect::<Vec<_>>(),
    );
    let mut out: BTreeMap<Vec<u32>, BigInt> = BTreeMap::new();
    for (a, c) in cleared.terms() {
        // ∏_i (1 - s_i)^{a_i} = ∏_i Σ_k C(a_i, k) (-1)^k s_i^k
        let mut partial: Vec<(Vec<u32>, usize, BigInt)> =
            vec![(Vec::with_capacity(r), 0, c.clone())];
        for &ai in a {
            let mut next = Vec::new();
            for (e, deg, v) in &partial {
                let kmax = (ai as usize).min(max_deg - deg);
                for k in 0..=kmax {
                    let mut b = binomial(ai as u64, k as u64);
                    if k % 2 == 1 {
                        b = -b;
                    }
                    let mut e2 = e.clone();
                    e2.push(k as u32);
                    next.push((e2, deg + k, v * b));
                }
            }
            partial = next;
        }
        for (e, _, v) in partial {
            *out.entry(e).or_insert_with(BigInt::zero) += v;
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

/// Multiplicity of the singly graded module obtained by `t_i -> t`.
pub fn coarsened_multiplicity(ideal: &Ideal) -> Result<BigUint> {
    let hs = k_polynomial(ideal)?;
    coarsened_from_series(&hs.numerator, &hs.denominator_exponents, hs.dimension)
}

pub(crate) fn coarsened_from_series(
    numerator: &LaurentPolyZ,
    denominators: &[u32],
    dimension: Option<usize>,
) -> Result<BigUint> {
    let Some(d) = dimension else {
        return Ok(BigUint::zero());
    };
    let total: usize = denominators.iter().map(|&x| x as usize).sum();
    let low = total - d;
    let coarse = numerator.coarsened();
    let expansion = substitute_one_minus(&coarse, low);
    let mut value = BigInt::zero();
    for (k, c) in expansion {
        if (k[0] as usize) < low {
            return Err(Error::Invariant(format!(
                "coarsened K(1-s) has a nonzero term in degree {} < {low}",
                k[0]
            )));
        }
        value = c;
    }
    value
        .to_biguint()
        .filter(|v| !v.is_zero())
        .ok_or_else(|| Error::Invariant(format!("coarsened multiplicity {value} is not positive")))
}

pub fn hilbert_polynomial(ideal: &Ideal) -> Result<HilbertPolynomialRep> {
    Ok(k_polynomial(ideal)?.hilbert_polynomial())
}

/// Number of standard monomials of `B/J(-shift)` in degree `ν`.
pub fn graded_piece_dim(ideal: &Ideal, nu: &Multidegree) -> Result<u64> {
    let ring = ideal.ring();
    if nu.len() != ring.r() {
        return Err(Error::InvalidArgument(format!(
            "degree {nu} has {} entries, ring has {} blocks",
            nu.len(),
            ring.r()
        )));
    }
    let target = nu - &ideal.shift_or_zero();
    let lts = leading_monomials(ideal)?;
    count_standard_monomials(&lts, &ring.block_sizes(), target.as_slice())
}

fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::from(1);
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}
