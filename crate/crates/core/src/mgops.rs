//! Operations specific to the multigraded setting: saturation by the
//! irrelevant ideal, mixed multiplicities through the Hilbert polynomial,
//! filter-regular elements and multidegrees by slicing.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::Zero;
use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::Xoshiro256StarStar;

use crate::error::{Error, Result};
use crate::groebner::{ideal_intersection, ideal_quotient, saturate_by_variables, Ideal};
use crate::hilbert::{
    coarsened_multiplicity, graded_piece_dim, hilbert_polynomial, krull_dimension,
    mixed_mult_series, MixedMultTable, Route,
};
use crate::monomial::{Monomial, TermOrder};
use crate::poly::Polynomial;
use crate::ring::{Multidegree, RingSpec};

/// Generator behind every randomized operation: xoshiro256** seeded through
/// splitmix64, so a seed reproduces the same stream on every platform.
pub type Prng = Xoshiro256StarStar;

pub fn prng(seed: u64) -> Prng {
    Prng::seed_from_u64(seed)
}

/// Number of resamples allowed per hyperplane before a trial is abandoned.
pub const MAX_RESAMPLES: usize = 10;

/// `𝔑 = 𝔐_1 ∩ ... ∩ 𝔐_r`.
pub fn irrelevant_ideal(ring: &RingSpec) -> Result<Ideal> {
    let mut acc = Ideal::block_ideal(ring, 0);
    for i in 1..ring.r() {
        acc = ideal_intersection(&acc, &Ideal::block_ideal(ring, i))?;
    }
    Ok(acc)
}

/// `(J : 𝔑^∞)`, computed as `(...((J : 𝔐_1^∞) : 𝔐_2^∞) ...) : 𝔐_r^∞`
/// since `𝔑` and `𝔐_1 ⋯ 𝔐_r` have the same radical.
pub fn irrelevant_saturation(ideal: &Ideal) -> Result<Ideal> {
    ideal.require_homogeneous()?;
    let ring = ideal.ring();
    let budget = ideal.pair_budget();
    let mut gens = ideal.generators().to_vec();
    for i in 0..ring.r() {
        let vars: Vec<usize> = ring.block_range(i).collect();
        let parts = vars
            .iter()
            .map(|&v| saturate_by_variables(&gens, &[v], budget))
            .collect::<Result<Vec<_>>>()?;
        gens = crate::groebner::intersect_all(parts, budget)?;
    }
    let out = ideal.derived(gens);
    Ok(match ideal.shift() {
        Some(s) => out.with_shift(s.clone()),
        None => out,
    })
}

/// Mixed multiplicities through the Hilbert polynomial, computed both from
/// the series of the saturation and from the polynomial's top coefficients.
pub fn mixed_mult_polynomial(ideal: &Ideal) -> Result<MixedMultTable> {
    let sat = irrelevant_saturation(ideal)?;
    let r = ideal.ring().r();
    let series = mixed_mult_series(&sat)?;
    if series.entries().keys().any(|k| k.iter().any(|&x| x < 0)) {
        return Err(Error::Invariant(
            "saturated module has a positive negative-type multiplicity".into(),
        ));
    }
    let via_series = MixedMultTable::new(
        series.dimension.map(|d| d - r),
        Route::Polynomial,
        series.nonnegative_part(),
    );
    let via_poly = hilbert_polynomial(ideal)?.leading_table()?;
    if via_series != via_poly {
        return Err(Error::Invariant(format!(
            "mixed multiplicity routes disagree: series {:?} vs polynomial {:?}",
            via_series, via_poly
        )));
    }
    Ok(via_poly)
}

/// `deg^n(X) = e(n; B/J)`; 0 when `|n|` differs from `dim Supp_{++}`.
pub fn multidegree(ideal: &Ideal, n: &[i64]) -> Result<BigUint> {
    check_type_vector(ideal.ring(), n)?;
    Ok(mixed_mult_polynomial(ideal)?.get(n))
}

fn check_type_vector(ring: &RingSpec, n: &[i64]) -> Result<()> {
    if n.len() != ring.r() || n.iter().any(|&x| x < 0) {
        return Err(Error::InvalidArgument(format!(
            "type vector {n:?} must have {} nonnegative entries",
            ring.r()
        )));
    }
    Ok(())
}

/// Outcome of the colon test `(J : h) ⊆ (J : 𝔑^∞)`.
#[derive(Debug, Clone)]
pub struct FilterRegularWitness {
    pub element: Polynomial,
    pub block: usize,
    pub passed: bool,
    /// `(J : h)`.
    pub colon: Ideal,
    /// `(J : 𝔑^∞)`.
    pub saturation: Ideal,
}

/// Block of a nonzero linear form involving the variables of one block only.
fn linear_block(ring: &RingSpec, h: &Polynomial) -> Option<usize> {
    let mut block = None;
    for (_, m) in h.terms() {
        if m.degree() != 1 {
            return None;
        }
        let v = m.support().next()?;
        let b = ring.block_of(v);
        if *block.get_or_insert(b) != b {
            return None;
        }
    }
    block
}

pub fn is_filter_regular(ideal: &Ideal, h: &Polynomial) -> Result<FilterRegularWitness> {
    let saturation = irrelevant_saturation(ideal)?;
    filter_regular_against(ideal, &saturation, h)
}

fn filter_regular_against(
    ideal: &Ideal,
    saturation: &Ideal,
    h: &Polynomial,
) -> Result<FilterRegularWitness> {
    let ring = ideal.ring();
    let block = linear_block(ring, h).ok_or_else(|| {
        Error::InvalidArgument(format!(
            "{} is not a linear form in a single block",
            h.render(&ring.var_names())
        ))
    })?;
    let colon = ideal_quotient(ideal, h)?;
    let passed = colon.is_contained_in(saturation)?;
    Ok(FilterRegularWitness {
        element: h.clone(),
        block,
        passed,
        colon,
        saturation: saturation.clone(),
    })
}

/// Uniform element of `[0, p)` by rejection sampling.
fn uniform_below(rng: &mut Prng, p: u64) -> u64 {
    let zone = u64::MAX - u64::MAX % p;
    loop {
        let v = rng.next_u64();
        if v < zone {
            return v % p;
        }
    }
}

/// A linear form in the variables of `block` with uniform coefficients;
/// the zero form is rejected and redrawn.
pub fn random_block_form(ring: &RingSpec, block: usize, rng: &mut Prng) -> Polynomial {
    let p = ring.characteristic() as u64;
    let n = ring.nvars();
    loop {
        let terms: Vec<(u32, Monomial)> = ring
            .block_range(block)
            .map(|v| (uniform_below(rng, p) as u32, Monomial::var(n, v, 1)))
            .collect();
        let f = Polynomial::from_terms(ring.field(), n, TermOrder::DegRevLex, terms);
        if !f.is_zero() {
            return f;
        }
    }
}

/// Result of one slicing trial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SliceTrial {
    pub seed: u64,
    /// Forms rejected by the filter-regularity test before all were accepted.
    pub resamples: usize,
    /// The accepted hyperplanes, rendered.
    pub hyperplanes: Vec<String>,
    /// `None` when a hyperplane could not be verified within the resample limit.
    pub count: Option<u64>,
    pub failed_block: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SliceReport {
    pub type_vector: Vec<i64>,
    pub seed: u64,
    /// Most frequent count among verified trials (smallest on ties).
    pub point_count: Option<u64>,
    pub trials: Vec<SliceTrial>,
}

impl SliceReport {
    pub fn verified(&self) -> usize {
        self.trials.iter().filter(|t| t.count.is_some()).count()
    }

    /// Number of verified trials whose count equals `value`.
    pub fn agreeing(&self, value: u64) -> usize {
        self.trials
            .iter()
            .filter(|t| t.count == Some(value))
            .count()
    }

    /// Whether at least `min_agree` verified trials report `expected`.
    pub fn passes(&self, expected: u64, min_agree: usize) -> bool {
        self.agreeing(expected) >= min_agree
    }
}

/// Seeds for `trials` independent streams derived from a master seed.
fn trial_seeds(seed: u64, trials: usize) -> Vec<u64> {
    let mut master = prng(seed);
    (0..trials).map(|_| master.next_u64()).collect()
}

/// Cut by `n_i` verified filter-regular hyperplanes from each block.
/// Returns the sliced ideal, or the failing block.
fn slice(
    ideal: &Ideal,
    n: &[i64],
    rng: &mut Prng,
    resamples: &mut usize,
    accepted: &mut Vec<Polynomial>,
) -> Result<std::result::Result<Ideal, usize>> {
    let ring = ideal.ring();
    let mut current = ideal.clone();
    for (block, &count) in n.iter().enumerate() {
        for _ in 0..count {
            let saturation = irrelevant_saturation(&current)?;
            let mut found = None;
            for _ in 0..MAX_RESAMPLES {
                let h = random_block_form(ring, block, rng);
                if filter_regular_against(&current, &saturation, &h)?.passed {
                    found = Some(h);
                    break;
                }
                *resamples += 1;
            }
            let Some(h) = found else {
                return Ok(Err(block));
            };
            current = current.plus(std::slice::from_ref(&h));
            accepted.push(h);
        }
    }
    Ok(Ok(current))
}

/// Number of points of `multProj(B/J)` cut out by `n_i` general hyperplanes
/// from each block, over `trials` seeded samples.
pub fn slice_degree(ideal: &Ideal, n: &[i64], seed: u64, trials: usize) -> Result<SliceReport> {
    let ring = ideal.ring();
    check_type_vector(ring, n)?;
    let dim = supp_dimension(ideal)?;
    if dim != Some(n.iter().sum::<i64>() as usize) {
        return Err(Error::InvalidArgument(format!(
            "type vector {n:?} does not have |n| = dim Supp_++ = {dim:?}"
        )));
    }
    let names = ring.var_names();
    let mut out = Vec::with_capacity(trials);
    for s in trial_seeds(seed, trials) {
        let mut rng = prng(s);
        let mut resamples = 0;
        let mut accepted = Vec::new();
        let sliced = slice(ideal, n, &mut rng, &mut resamples, &mut accepted)?;
        let hyperplanes = accepted.iter().map(|h| h.render(&names)).collect();
        let (count, failed_block) = match sliced {
            Ok(sliced) => (Some(point_count(&sliced)?), None),
            Err(block) => (None, Some(block)),
        };
        out.push(SliceTrial {
            seed: s,
            resamples,
            hyperplanes,
            count,
            failed_block,
        });
    }
    let mut tally: BTreeMap<u64, usize> = BTreeMap::new();
    for t in &out {
        if let Some(c) = t.count {
            *tally.entry(c).or_default() += 1;
        }
    }
    let point_count = tally
        .iter()
        .max_by(|a, b| a.1.cmp(b.1).then_with(|| b.0.cmp(a.0)))
        .map(|(c, _)| *c);
    Ok(SliceReport {
        type_vector: n.to_vec(),
        seed,
        point_count,
        trials: out,
    })
}

/// `dim Supp_{++}(B/J) = dim B/(J : 𝔑^∞) - r`; `None` when empty.
pub fn supp_dimension(ideal: &Ideal) -> Result<Option<usize>> {
    let sat = irrelevant_saturation(ideal)?;
    let r = ideal.ring().r();
    Ok(krull_dimension(&sat)?.map(|d| {
        debug_assert!(d >= r);
        d - r
    }))
}

/// Stable graded dimension of the saturated slice, read past the Hilbert
/// polynomial's validity threshold.
fn point_count(sliced: &Ideal) -> Result<u64> {
    let sat = irrelevant_saturation(sliced)?;
    let threshold = hilbert_polynomial(&sat)?.validity_threshold().clone();
    let nu = Multidegree(threshold.0.iter().map(|&t| t.max(0) + 2).collect());
    graded_piece_dim(&sat, &nu)
}

/// `e(n; B/J)` as the multiplicity of the coarsened module
/// `E = (B/(z)B / H^0_𝔑)^gr` when `dim E = r`, and 0 otherwise.
pub fn mixed_mult_via_slicing(ideal: &Ideal, n: &[i64], seed: u64) -> Result<BigUint> {
    let ring = ideal.ring();
    check_type_vector(ring, n)?;
    let mut rng = prng(seed);
    let mut resamples = 0;
    let mut accepted = Vec::new();
    let sliced = match slice(ideal, n, &mut rng, &mut resamples, &mut accepted)? {
        Ok(s) => s,
        Err(block) => {
            return Err(Error::ResamplingExhausted {
                block,
                attempts: MAX_RESAMPLES,
            })
        }
    };
    let sat = irrelevant_saturation(&sliced)?;
    if krull_dimension(&sat)? != Some(ring.r()) {
        return Ok(BigUint::zero());
    }
    coarsened_multiplicity(&sat)
}
