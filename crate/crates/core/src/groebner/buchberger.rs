//! Buchberger's algorithm with the Gebauer–Möller criteria and the sugar
//! selection strategy.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::field::Fp;
use crate::monomial::{Monomial, TermOrder};
use crate::poly::Polynomial;

/// Default number of S-pairs that may be reduced before giving up.
pub const DEFAULT_PAIR_BUDGET: usize = 200_000;

struct Elem {
    poly: Polynomial,
    lm: Monomial,
    mask: u64,
    sugar: u64,
    active: bool,
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u64,
}

struct Engine {
    field: Fp,
    nvars: usize,
    order: TermOrder,
    elems: Vec<Elem>,
    pairs: Vec<Pair>,
    budget: usize,
    processed: usize,
}

/// Reduced, monic Gröbner basis of the given generators, sorted by
/// increasing leading monomial.
pub(crate) fn reduced_basis(
    gens: &[Polynomial],
    order: TermOrder,
    budget: usize,
) -> Result<Vec<Polynomial>> {
    let Some(first) = gens.first() else {
        return Ok(Vec::new());
    };
    let (field, nvars) = (first.field(), first.nvars());
    let mut inputs: Vec<Polynomial> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| g.with_order(order).monic())
        .collect();
    if inputs.iter().any(|g| g.is_unit()) {
        return Ok(vec![Polynomial::constant(field, nvars, order, 1)]);
    }
    inputs.sort_by(|a, b| {
        order
            .compare(a.leading_monomial().unwrap(), b.leading_monomial().unwrap())
            .then_with(|| a.len().cmp(&b.len()))
    });
    inputs.dedup();

    let mut engine = Engine {
        field,
        nvars,
        order,
        elems: Vec::new(),
        pairs: Vec::new(),
        budget,
        processed: 0,
    };
    for g in inputs {
        let sugar = g.total_degree().unwrap_or(0);
        let h = engine.reduce_full(g)?;
        if h.is_zero() {
            continue;
        }
        if h.is_unit() {
            return Ok(vec![Polynomial::constant(field, nvars, order, 1)]);
        }
        engine.insert(h.monic(), sugar);
    }
    while let Some(pair) = engine.select_pair() {
        engine.processed += 1;
        if engine.processed > engine.budget {
            return Err(Error::BudgetExceeded {
                budget: engine.budget,
                pairs: engine.processed - 1,
                basis_len: engine.elems.iter().filter(|e| e.active).count(),
            });
        }
        let s = engine.spoly(&pair)?;
        let h = engine.reduce_full(s)?;
        if h.is_zero() {
            continue;
        }
        if h.is_unit() {
            return Ok(vec![Polynomial::constant(field, nvars, order, 1)]);
        }
        engine.insert(h.monic(), pair.sugar);
    }
    engine.finish()
}

impl Engine {
    fn select_pair(&mut self) -> Option<Pair> {
        if self.pairs.is_empty() {
            return None;
        }
        let order = self.order;
        let mut best = 0;
        for k in 1..self.pairs.len() {
            let (a, b) = (&self.pairs[k], &self.pairs[best]);
            let better = match a.sugar.cmp(&b.sugar) {
                Ordering::Less => true,
                Ordering::Greater => false,
                Ordering::Equal => match order.compare(&a.lcm, &b.lcm) {
                    Ordering::Less => true,
                    Ordering::Greater => false,
                    Ordering::Equal => (a.j, a.i) < (b.j, b.i),
                },
            };
            if better {
                best = k;
            }
        }
        Some(self.pairs.swap_remove(best))
    }

    fn spoly(&self, pair: &Pair) -> Result<Polynomial> {
        let (f, g) = (&self.elems[pair.i], &self.elems[pair.j]);
        let a = f.lm.quotient_of(&pair.lcm);
        let b = g.lm.quotient_of(&pair.lcm);
        // both monic: S = a*f - b*g
        let af = f.poly.mul_term(1, &a)?;
        let bg = g.poly.mul_term(1, &b)?;
        Ok(&af - &bg)
    }

    fn find_reducer(&self, m: &Monomial) -> Option<usize> {
        let mask = m.divmask();
        self.elems
            .iter()
            .position(|e| e.active && e.mask & !mask == 0 && e.lm.divides(m))
    }

    /// Full reduction (leading and tail terms) against the active elements.
    fn reduce_full(&self, p: Polynomial) -> Result<Polynomial> {
        reduce_with(
            p,
            |m| self.find_reducer(m).map(|k| &self.elems[k].poly),
            self.field,
            self.nvars,
            self.order,
        )
    }

    fn insert(&mut self, h: Polynomial, sugar: u64) {
        let lm = h.leading_monomial().unwrap().clone();
        let mask = lm.divmask();
        let sugar = sugar.max(h.total_degree().unwrap_or(0));
        let hidx = self.elems.len();

        // pairs (h, g) for active g, pruned by the chain and product criteria
        let cands: Vec<(usize, Monomial, bool)> = self
            .elems
            .iter()
            .enumerate()
            .filter(|(_, e)| e.active)
            .map(|(g, e)| (g, lm.lcm(&e.lm), lm.is_coprime(&e.lm)))
            .collect();
        let mut keep = vec![false; cands.len()];
        for k in 0..cands.len() {
            let (_, ref l, coprime) = cands[k];
            if coprime {
                keep[k] = true;
                continue;
            }
            let dominated =
                (0..cands.len()).any(|o| o != k && (o > k || keep[o]) && cands[o].1.divides(l));
            keep[k] = !dominated;
        }

        // drop old pairs made redundant by h
        let elems = &self.elems;
        self.pairs.retain(|p| {
            if !lm.divides(&p.lcm) {
                return true;
            }
            let l1 = lm.lcm(&elems[p.i].lm);
            let l2 = lm.lcm(&elems[p.j].lm);
            l1 == p.lcm || l2 == p.lcm
        });

        let h_shift = sugar.saturating_sub(lm.degree());
        for (k, (g, l, coprime)) in cands.into_iter().enumerate() {
            if keep[k] && !coprime {
                let e = &self.elems[g];
                let s = l.degree() + h_shift.max(e.sugar.saturating_sub(e.lm.degree()));
                self.pairs.push(Pair {
                    i: g,
                    j: hidx,
                    lcm: l,
                    sugar: s,
                });
            }
        }

        for e in self.elems.iter_mut() {
            if e.active && lm.divides(&e.lm) {
                e.active = false;
            }
        }
        self.elems.push(Elem {
            poly: h,
            lm,
            mask,
            sugar,
            active: true,
        });
    }

    fn finish(self) -> Result<Vec<Polynomial>> {
        let mut basis: Vec<Polynomial> = self
            .elems
            .into_iter()
            .filter(|e| e.active)
            .map(|e| e.poly)
            .collect();
        basis.sort_by(|a, b| {
            self.order
                .compare(a.leading_monomial().unwrap(), b.leading_monomial().unwrap())
        });
        interreduce(basis, self.field, self.nvars, self.order)
    }
}

/// Tail-reduce a minimal basis (sorted by leading monomial) into the reduced one.
fn interreduce(
    basis: Vec<Polynomial>,
    field: Fp,
    nvars: usize,
    order: TermOrder,
) -> Result<Vec<Polynomial>> {
    let lms: Vec<(Monomial, u64)> = basis
        .iter()
        .map(|g| {
            let m = g.leading_monomial().unwrap().clone();
            let mask = m.divmask();
            (m, mask)
        })
        .collect();
    let mut out = Vec::with_capacity(basis.len());
    for (i, g) in basis.iter().enumerate() {
        let mut terms = g.terms().to_vec();
        let head = terms.remove(0);
        let tail = Polynomial::from_sorted_unchecked(field, nvars, order, terms);
        let reduced_tail = reduce_with(
            tail,
            |m| {
                let mask = m.divmask();
                lms.iter()
                    .enumerate()
                    .position(|(k, (lm, lmask))| k != i && lmask & !mask == 0 && lm.divides(m))
                    .map(|k| &basis[k])
            },
            field,
            nvars,
            order,
        )?;
        let mut terms = vec![head];
        terms.extend(reduced_tail.into_terms());
        out.push(Polynomial::from_sorted_unchecked(
            field, nvars, order, terms,
        ));
    }
    Ok(out)
}

/// Generic full reduction; `reducer(m)` returns a polynomial whose leading
/// monomial divides `m`, if any.
pub(crate) fn reduce_with<'a, F>(
    p: Polynomial,
    reducer: F,
    field: Fp,
    nvars: usize,
    order: TermOrder,
) -> Result<Polynomial>
where
    F: Fn(&Monomial) -> Option<&'a Polynomial>,
{
    let mut rest = p.into_terms();
    let mut pos = 0;
    let mut done: Vec<(u32, Monomial)> = Vec::new();
    while pos < rest.len() {
        let (c, m) = &rest[pos];
        match reducer(m) {
            Some(g) => {
                let lc = g.leading_coeff().unwrap();
                let factor = field.neg(field.mul(*c, field.inv(lc)));
                let q = g.leading_monomial().unwrap().quotient_of(m);
                rest = merge_scaled(&rest[pos + 1..], factor, &q, &g.terms()[1..], field, order)?;
                pos = 0;
            }
            None => {
                done.push((*c, m.clone()));
                pos += 1;
            }
        }
    }
    Ok(Polynomial::from_sorted_unchecked(field, nvars, order, done))
}

/// `a + c * q * b` for sorted term slices.
fn merge_scaled(
    a: &[(u32, Monomial)],
    c: u32,
    q: &Monomial,
    b: &[(u32, Monomial)],
    field: Fp,
    order: TermOrder,
) -> Result<Vec<(u32, Monomial)>> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut i = 0;
    let mut bi = b.iter().peekable();
    let mut next_b = || -> Result<Option<(u32, Monomial)>> {
        match bi.next() {
            Some((bc, bm)) => Ok(Some((field.mul(c, *bc), bm.checked_mul(q)?))),
            None => Ok(None),
        }
    };
    let mut cur_b = next_b()?;
    while let Some((bc, bm)) = cur_b.take() {
        while i < a.len() && order.compare(&a[i].1, &bm) == Ordering::Greater {
            out.push(a[i].clone());
            i += 1;
        }
        if i < a.len() && a[i].1 == bm {
            let v = field.add(a[i].0, bc);
            if v != 0 {
                out.push((v, bm));
            }
            i += 1;
        } else if bc != 0 {
            out.push((bc, bm));
        }
        cur_b = next_b()?;
    }
    out.extend_from_slice(&a[i..]);
    Ok(out)
}
