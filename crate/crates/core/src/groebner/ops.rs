use super::buchberger::{reduce_with, reduced_basis};
use super::{GroebnerBasis, Ideal};
use crate::error::{Error, Result};
use crate::monomial::{Monomial, TermOrder};
use crate::poly::Polynomial;

pub fn groebner_basis(ideal: &Ideal, order: TermOrder) -> Result<GroebnerBasis> {
    let gens: Vec<Polynomial> = ideal
        .generators()
        .iter()
        .map(|g| g.with_order(order))
        .collect();
    let elems = reduced_basis(&gens, order, ideal.pair_budget())?;
    Ok(GroebnerBasis::from_reduced(order, elems))
}

/// Remainder of `p` on full division by `basis`.
pub fn normal_form(p: &Polynomial, basis: &GroebnerBasis) -> Polynomial {
    let order = basis.order();
    let p = p.with_order(order);
    let (field, nvars) = (p.field(), p.nvars());
    let lms: Vec<(u64, &Monomial)> = basis
        .leading_terms()
        .iter()
        .map(|m| (m.divmask(), m))
        .collect();
    let out = reduce_with(
        p,
        |m| {
            let mask = m.divmask();
            lms.iter()
                .position(|(lmask, lm)| lmask & !mask == 0 && lm.divides(m))
                .map(|k| &basis.elements()[k])
        },
        field,
        nvars,
        order,
    )
    // reducers are elements of the basis, whose products never exceed the
    // exponents already present in p and the basis
    .expect("exponent overflow during normal form");
    out.with_order(TermOrder::DegRevLex)
}

/// `J ∩ k[vars not in drop]`; `drop` must be the leading variables `0..k`.
pub fn elimination_ideal(ideal: &Ideal, drop: &[usize]) -> Result<Ideal> {
    let mut sorted = drop.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.iter().enumerate().any(|(i, &v)| i != v) {
        return Err(Error::InvalidArgument(
            "eliminated variables must form a leading block x_0..x_{k-1}".into(),
        ));
    }
    let k = sorted.len();
    if k == 0 {
        return Ok(ideal.clone());
    }
    let order = TermOrder::BlockElimination { block: k };
    let gens: Vec<Polynomial> = ideal
        .generators()
        .iter()
        .map(|g| g.with_order(order))
        .collect();
    let basis = reduced_basis(&gens, order, ideal.pair_budget())?;
    let kept = basis
        .into_iter()
        .filter(|g| g.free_of_prefix(k))
        .map(|g| g.with_order(TermOrder::DegRevLex))
        .collect();
    Ok(ideal.derived(kept))
}

/// Eliminate the first `k` variables of polynomials living in an auxiliary
/// ring and return the survivors moved back to the ring without them.
pub(crate) fn eliminate_prefix(
    polys: &[Polynomial],
    k: usize,
    budget: usize,
) -> Result<Vec<Polynomial>> {
    let order = TermOrder::BlockElimination { block: k };
    let gens: Vec<Polynomial> = polys.iter().map(|g| g.with_order(order)).collect();
    let basis = reduced_basis(&gens, order, budget)?;
    Ok(basis
        .into_iter()
        .filter(|g| g.free_of_prefix(k))
        .map(|g| g.lowered(k, TermOrder::DegRevLex))
        .collect())
}

/// `J1 ∩ J2`, eliminating `w` from `w*J1 + (1-w)*J2`.
pub fn ideal_intersection(a: &Ideal, b: &Ideal) -> Result<Ideal> {
    assert_eq!(
        a.ring(),
        b.ring(),
        "intersection of ideals in different rings"
    );
    let gens = intersect_polys(a.generators(), b.generators(), a.pair_budget())?;
    Ok(a.derived(gens))
}

pub(crate) fn intersect_polys(
    a: &[Polynomial],
    b: &[Polynomial],
    budget: usize,
) -> Result<Vec<Polynomial>> {
    if a.is_empty() || b.is_empty() {
        return Ok(Vec::new());
    }
    if a.iter().any(|g| g.is_unit()) {
        return reduced_basis(b, TermOrder::DegRevLex, budget);
    }
    if b.iter().any(|g| g.is_unit()) {
        return reduced_basis(a, TermOrder::DegRevLex, budget);
    }
    let order = TermOrder::BlockElimination { block: 1 };
    let first = &a[0];
    let (field, n) = (first.field(), first.nvars() + 1);
    let w = Polynomial::term(field, order, 1, Monomial::var(n, 0, 1));
    let one_minus_w = &Polynomial::constant(field, n, order, 1) - &w;
    let mut gens = Vec::with_capacity(a.len() + b.len());
    for g in a {
        gens.push(g.lifted(1, order).try_mul(&w)?);
    }
    for g in b {
        gens.push(g.lifted(1, order).try_mul(&one_minus_w)?);
    }
    eliminate_prefix(&gens, 1, budget)
}

pub(crate) fn intersect_all(
    ideals: Vec<Vec<Polynomial>>,
    budget: usize,
) -> Result<Vec<Polynomial>> {
    let mut iter = ideals.into_iter();
    let Some(mut acc) = iter.next() else {
        return Err(Error::InvalidArgument("empty intersection".into()));
    };
    for next in iter {
        acc = intersect_polys(&acc, &next, budget)?;
    }
    Ok(acc)
}

/// `(J : f) = {g : g f ∈ J}`, computed as `(J ∩ (f)) / f`.
pub fn ideal_quotient(ideal: &Ideal, f: &Polynomial) -> Result<Ideal> {
    if f.is_zero() {
        return Err(Error::InvalidArgument(
            "colon by the zero polynomial".into(),
        ));
    }
    let f = f.with_order(TermOrder::DegRevLex);
    if f.is_unit() || ideal.is_zero() {
        return Ok(ideal.derived(ideal.generators().to_vec()));
    }
    let inter = intersect_polys(
        ideal.generators(),
        std::slice::from_ref(&f),
        ideal.pair_budget(),
    )?;
    let quotients = inter
        .iter()
        .map(|g| {
            divide_exact(g, &f)
                .ok_or_else(|| Error::Invariant("element of J ∩ (f) not divisible by f".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    let basis = reduced_basis(&quotients, TermOrder::DegRevLex, ideal.pair_budget())?;
    Ok(ideal.derived(basis))
}

/// `(J : K^∞) = ∩_k (J : k^∞)` over the generators `k` of `K`.
pub fn saturation(ideal: &Ideal, by: &Ideal) -> Result<Ideal> {
    if by.is_zero() {
        return Err(Error::InvalidArgument(
            "saturation by the zero ideal".into(),
        ));
    }
    let budget = ideal.pair_budget();
    let homogeneous = ideal.generators().iter().all(is_standard_homogeneous);
    let mut parts = Vec::with_capacity(by.generators().len());
    for k in by.generators() {
        let part = if k.is_unit() {
            reduced_basis(ideal.generators(), TermOrder::DegRevLex, budget)?
        } else if homogeneous && k.is_monomial() {
            let vars: Vec<usize> = k.terms()[0].1.support().collect();
            saturate_by_variables(ideal.generators(), &vars, budget)?
        } else {
            saturate_by_poly(ideal.generators(), k, budget)?
        };
        parts.push(part);
    }
    let gens = intersect_all(parts, budget)?;
    let basis = reduced_basis(&gens, TermOrder::DegRevLex, budget)?;
    Ok(ideal.derived(basis))
}

/// `(J : (x_{v1} ... x_{vk})^∞)` for a homogeneous `J`, one variable at a time.
///
/// Each step puts the variable last in degrevlex, where the saturation is
/// obtained by dividing every basis element by its largest power of it.
pub(crate) fn saturate_by_variables(
    gens: &[Polynomial],
    vars: &[usize],
    budget: usize,
) -> Result<Vec<Polynomial>> {
    let mut current: Vec<Polynomial> = gens.to_vec();
    for &v in vars {
        if current.is_empty() || current.iter().any(|g| g.is_unit()) {
            break;
        }
        let n = current[0].nvars();
        let mut perm: Vec<usize> = (0..n).collect();
        perm.swap(v, n - 1);
        let permuted: Vec<Polynomial> = current.iter().map(|g| g.permuted(&perm)).collect();
        let basis = reduced_basis(&permuted, TermOrder::DegRevLex, budget)?;
        current = basis
            .iter()
            .map(|g| strip_variable(g, n - 1).permuted(&perm))
            .collect();
    }
    reduced_basis(&current, TermOrder::DegRevLex, budget)
}

/// `(J : f^∞)` by eliminating `w` from `J + (1 - w f)`.
fn saturate_by_poly(gens: &[Polynomial], f: &Polynomial, budget: usize) -> Result<Vec<Polynomial>> {
    if gens.is_empty() {
        return Ok(Vec::new());
    }
    let order = TermOrder::BlockElimination { block: 1 };
    let (field, n) = (f.field(), f.nvars() + 1);
    let w = Polynomial::term(field, order, 1, Monomial::var(n, 0, 1));
    let one = Polynomial::constant(field, n, order, 1);
    let mut lifted: Vec<Polynomial> = gens.iter().map(|g| g.lifted(1, order)).collect();
    lifted.push(&one - &w.try_mul(&f.lifted(1, order))?);
    eliminate_prefix(&lifted, 1, budget)
}

fn strip_variable(g: &Polynomial, v: usize) -> Polynomial {
    let e = g
        .terms()
        .iter()
        .map(|(_, m)| m.exponents()[v])
        .min()
        .unwrap_or(0);
    if e == 0 {
        return g.clone();
    }
    let d = Monomial::var(g.nvars(), v, e);
    let terms = g
        .terms()
        .iter()
        .map(|(c, m)| (*c, d.quotient_of(m)))
        .collect();
    Polynomial::from_terms(g.field(), g.nvars(), g.order(), terms)
}

fn is_standard_homogeneous(g: &Polynomial) -> bool {
    let mut degs = g.terms().iter().map(|(_, m)| m.degree());
    match degs.next() {
        Some(d) => degs.all(|e| e == d),
        None => true,
    }
}

/// Exact quotient `a / b`, or `None` when `b` does not divide `a`.
pub(crate) fn divide_exact(a: &Polynomial, b: &Polynomial) -> Option<Polynomial> {
    let order = a.order();
    let b = b.with_order(order);
    let field = a.field();
    let (blc, blm) = (b.leading_coeff()?, b.leading_monomial()?.clone());
    let inv = field.inv(blc);
    let mut rest = a.clone();
    let mut quotient = Vec::new();
    while let Some((c, m)) = rest.terms().first().cloned() {
        if !blm.divides(&m) {
            return None;
        }
        let q = blm.quotient_of(&m);
        let coeff = field.mul(c, inv);
        rest = rest.add_scaled(field.neg(coeff), &b.mul_term(1, &q).ok()?);
        quotient.push((coeff, q));
    }
    Some(Polynomial::from_terms(field, a.nvars(), order, quotient))
}
