//! Combinatorics of monomial ideals: Krull dimension, the multigraded
//! K-polynomial recursion and standard-monomial counts.

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::laurent::LaurentPolyZ;
use crate::monomial::{Monomial, TermOrder};

/// Largest number of variables accepted by the exhaustive dimension search.
pub const DIMENSION_GUARD: usize = 16;

/// Largest graded piece `graded_piece_dim` will enumerate.
pub const ENUMERATION_GUARD: u128 = 10_000_000;

/// How the K-polynomial recursion picks its pivot `p` in
/// `K(I) = K(I + (p)) + t^{deg p} K(I : p)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PivotRule {
    /// The variable occurring in the most non-pure-power generators, raised to
    /// its exponent in a generator of least total degree containing it.
    #[default]
    MostFrequent,
    /// The first variable occurring in a non-pure-power generator, to the
    /// first power.
    FirstVariable,
}

/// Minimal generators, sorted by degree then degrevlex.
pub(crate) fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by(|a, b| TermOrder::DegRevLex.compare(a, b));
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !out.iter().any(|m| m.divides(&g)) {
            out.push(g);
        }
    }
    out
}

/// Krull dimension of `k[x]/I` for a monomial ideal `I`: the largest set of
/// variables containing the support of no generator. `None` when `I = (1)`.
pub(crate) fn dimension_of_monomials(nvars: usize, gens: &[Monomial]) -> Result<Option<usize>> {
    if gens.iter().any(|g| g.is_one()) {
        return Ok(None);
    }
    if gens.is_empty() {
        return Ok(Some(nvars));
    }
    if nvars > DIMENSION_GUARD {
        return Err(Error::DimensionGuard {
            nvars,
            guard: DIMENSION_GUARD,
        });
    }
    let supports: Vec<u32> = minimalize(gens.to_vec())
        .iter()
        .map(|g| g.support().fold(0u32, |acc, v| acc | (1 << v)))
        .collect();
    let mut best = 0;
    for set in 0u32..(1u32 << nvars) {
        let size = set.count_ones() as usize;
        if size > best && supports.iter().all(|s| s & !set != 0) {
            best = size;
        }
    }
    Ok(Some(best))
}

/// Multidegree bookkeeping for the recursion.
pub(crate) struct Grading<'a> {
    /// Block of each variable.
    pub block_of: &'a [usize],
    pub r: usize,
}

impl Grading<'_> {
    fn degree(&self, m: &Monomial) -> Vec<i64> {
        let mut d = vec![0i64; self.r];
        for (v, &e) in m.exponents().iter().enumerate() {
            d[self.block_of[v]] += e as i64;
        }
        d
    }
}

/// Numerator of the Hilbert series of `k[x]/I` over `∏ (1 - t_i)^{n_i}`.
pub(crate) fn k_polynomial_of_monomials(
    gens: &[Monomial],
    grading: &Grading<'_>,
    rule: PivotRule,
) -> LaurentPolyZ {
    recurse(minimalize(gens.to_vec()), grading, rule)
}

fn recurse(gens: Vec<Monomial>, grading: &Grading<'_>, rule: PivotRule) -> LaurentPolyZ {
    let r = grading.r;
    if gens.is_empty() {
        return LaurentPolyZ::one(r);
    }
    if gens.iter().any(|g| g.is_one()) {
        return LaurentPolyZ::zero(r);
    }
    let mixed: Vec<&Monomial> = gens
        .iter()
        .filter(|g| g.support().nth(1).is_some())
        .collect();
    if mixed.is_empty() {
        // a complete intersection of pure powers
        let mut acc = LaurentPolyZ::one(r);
        for g in &gens {
            let factor = LaurentPolyZ::one(r).sub(&LaurentPolyZ::monomial(
                r,
                BigInt::one(),
                grading.degree(g),
            ));
            acc = acc.mul(&factor);
        }
        return acc;
    }
    let nvars = gens[0].nvars();
    let (var, exp) = match rule {
        PivotRule::MostFrequent => {
            let mut counts = vec![0usize; nvars];
            for g in &mixed {
                for v in g.support() {
                    counts[v] += 1;
                }
            }
            let var = (0..nvars)
                .max_by_key(|&v| (counts[v], std::cmp::Reverse(v)))
                .unwrap();
            // mixed is sorted by degree then degrevlex, so the first hit is canonical
            let g = mixed.iter().find(|g| g.exponents()[var] > 0).unwrap();
            (var, g.exponents()[var])
        }
        PivotRule::FirstVariable => {
            let var = mixed.iter().flat_map(|g| g.support()).min().unwrap();
            (var, 1)
        }
    };
    let p = Monomial::var(nvars, var, exp);

    let colon: Vec<Monomial> = gens.iter().map(|g| g.gcd(&p).quotient_of(g)).collect();
    let mut plus = gens;
    plus.push(p.clone());

    let a = recurse(minimalize(plus), grading, rule);
    let b = recurse(minimalize(colon), grading, rule);
    a.add(&b.shifted(&grading.degree(&p)))
}

/// Number of monomials of multidegree `target` (per block) divisible by no
/// element of `gens`.
pub(crate) fn count_standard_monomials(
    gens: &[Monomial],
    block_sizes: &[usize],
    target: &[i64],
) -> Result<u64> {
    if target.iter().any(|&t| t < 0) {
        return Ok(0);
    }
    let mut total: u128 = 1;
    for (&n, &t) in block_sizes.iter().zip(target) {
        total = total.saturating_mul(binomial_u128(t as u128 + n as u128 - 1, n as u128 - 1));
    }
    if total > ENUMERATION_GUARD {
        return Err(Error::EnumerationGuard {
            count: total,
            guard: ENUMERATION_GUARD,
        });
    }
    let nvars: usize = block_sizes.iter().sum();
    let mut offsets = Vec::with_capacity(block_sizes.len());
    let mut acc = 0;
    for &n in block_sizes {
        offsets.push(acc);
        acc += n;
    }
    // only generators of degree <= target can divide a standard candidate
    let relevant: Vec<&Monomial> = gens
        .iter()
        .filter(|g| {
            block_sizes.iter().enumerate().all(|(i, &n)| {
                let d: u64 = g.exponents()[offsets[i]..offsets[i] + n]
                    .iter()
                    .map(|&e| e as u64)
                    .sum();
                d <= target[i] as u64
            })
        })
        .collect();
    let pieces: Vec<Vec<Vec<u32>>> = block_sizes
        .iter()
        .zip(target)
        .map(|(&n, &t)| compositions(t as u32, n))
        .collect();
    let mut exps = vec![0u32; nvars];
    let mut count = 0u64;
    walk(&pieces, &offsets, 0, &mut exps, &relevant, &mut count);
    Ok(count)
}

fn walk(
    pieces: &[Vec<Vec<u32>>],
    offsets: &[usize],
    block: usize,
    exps: &mut [u32],
    gens: &[&Monomial],
    count: &mut u64,
) {
    if block == pieces.len() {
        let standard = !gens
            .iter()
            .any(|g| g.exponents().iter().zip(exps.iter()).all(|(a, b)| a <= b));
        if standard {
            *count += 1;
        }
        return;
    }
    for piece in &pieces[block] {
        exps[offsets[block]..offsets[block] + piece.len()].copy_from_slice(piece);
        walk(pieces, offsets, block + 1, exps, gens, count);
    }
}

/// All vectors of `parts` nonnegative integers summing to `total`.
pub(crate) fn compositions(total: u32, parts: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; parts];
    fn go(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i + 1 == cur.len() {
            cur[i] = left;
            out.push(cur.clone());
            return;
        }
        for e in (0..=left).rev() {
            cur[i] = e;
            go(i + 1, left - e, cur, out);
        }
    }
    if parts > 0 {
        go(0, total, &mut cur, &mut out);
    } else if total == 0 {
        out.push(Vec::new());
    }
    out
}

pub(crate) fn binomial_u128(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = match acc.checked_mul(n - i) {
            Some(v) => v / (i + 1),
            None => return u128::MAX,
        };
    }
    acc
}
