//! Sparse multivariate polynomials over `F_p`.

use std::cmp::Ordering;
use std::fmt::Write as _;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::Result;
use crate::field::Fp;
use crate::monomial::{Monomial, TermOrder};
use crate::ring::{Multidegree, RingSpec};

/// A polynomial as a list of `(coefficient, monomial)` pairs, strictly
/// decreasing under its term order, with no zero coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    field: Fp,
    nvars: usize,
    order: TermOrder,
    terms: Vec<(u32, Monomial)>,
}

/// Result of [`is_multihomogeneous`] for a homogeneous input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HomogeneousDegree {
    /// The zero polynomial lies in every graded piece.
    Any,
    Exactly(Multidegree),
}

impl Polynomial {
    pub fn zero(field: Fp, nvars: usize, order: TermOrder) -> Self {
        Polynomial {
            field,
            nvars,
            order,
            terms: Vec::new(),
        }
    }

    /// Zero polynomial in the default (degrevlex) order of a ring.
    pub fn zero_in(ring: &RingSpec) -> Self {
        Polynomial::zero(ring.field(), ring.nvars(), TermOrder::DegRevLex)
    }

    pub fn constant(field: Fp, nvars: usize, order: TermOrder, c: u32) -> Self {
        Polynomial::from_terms(field, nvars, order, vec![(c, Monomial::one(nvars))])
    }

    pub fn term(field: Fp, order: TermOrder, c: u32, m: Monomial) -> Self {
        let nvars = m.nvars();
        Polynomial::from_terms(field, nvars, order, vec![(c, m)])
    }

    /// The variable `x_i` as a polynomial.
    pub fn var(ring: &RingSpec, i: usize) -> Self {
        Polynomial::term(
            ring.field(),
            TermOrder::DegRevLex,
            1,
            Monomial::var(ring.nvars(), i, 1),
        )
    }

    /// Canonicalize an arbitrary list of terms: reduce, sort, merge duplicates.
    pub fn from_terms(
        field: Fp,
        nvars: usize,
        order: TermOrder,
        mut terms: Vec<(u32, Monomial)>,
    ) -> Self {
        let p = field.characteristic();
        terms.iter_mut().for_each(|t| t.0 %= p);
        terms.sort_by(|a, b| order.compare(&b.1, &a.1));
        let mut out: Vec<(u32, Monomial)> = Vec::with_capacity(terms.len());
        for (c, m) in terms {
            match out.last_mut() {
                Some(last) if last.1 == m => last.0 = field.add(last.0, c),
                _ => {
                    if let Some(last) = out.last() {
                        if last.0 == 0 {
                            out.pop();
                        }
                    }
                    out.push((c, m));
                }
            }
        }
        if out.last().is_some_and(|t| t.0 == 0) {
            out.pop();
        }
        Polynomial {
            field,
            nvars,
            order,
            terms: out,
        }
    }

    /// Build from terms already sorted, merged and nonzero.
    pub(crate) fn from_sorted_unchecked(
        field: Fp,
        nvars: usize,
        order: TermOrder,
        terms: Vec<(u32, Monomial)>,
    ) -> Self {
        debug_assert!(terms.iter().all(|t| t.0 != 0));
        debug_assert!(terms
            .windows(2)
            .all(|w| order.compare(&w[0].1, &w[1].1) == Ordering::Greater));
        Polynomial {
            field,
            nvars,
            order,
            terms,
        }
    }

    pub fn field(&self) -> Fp {
        self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn order(&self) -> TermOrder {
        self.order
    }

    pub fn terms(&self) -> &[(u32, Monomial)] {
        &self.terms
    }

    pub(crate) fn into_terms(self) -> Vec<(u32, Monomial)> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Nonzero constant.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].1.is_one()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.1)
    }

    pub fn leading_coeff(&self) -> Option<u32> {
        self.terms.first().map(|t| t.0)
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.iter().map(|t| t.1.degree()).max()
    }

    pub fn with_order(&self, order: TermOrder) -> Polynomial {
        if order == self.order {
            return self.clone();
        }
        let mut terms = self.terms.clone();
        terms.sort_by(|a, b| order.compare(&b.1, &a.1));
        Polynomial {
            field: self.field,
            nvars: self.nvars,
            order,
            terms,
        }
    }

    /// Scale so the leading coefficient is 1; zero stays zero.
    pub fn monic(&self) -> Polynomial {
        match self.leading_coeff() {
            None | Some(1) => self.clone(),
            Some(c) => self.scale(self.field.inv(c)),
        }
    }

    pub fn scale(&self, c: u32) -> Polynomial {
        if c.is_multiple_of(self.field.characteristic()) {
            return Polynomial::zero(self.field, self.nvars, self.order);
        }
        let terms = self
            .terms
            .iter()
            .map(|(a, m)| (self.field.mul(*a, c), m.clone()))
            .collect();
        Polynomial {
            terms,
            ..self.header()
        }
    }

    /// `c * m * self`.
    pub fn mul_term(&self, c: u32, m: &Monomial) -> Result<Polynomial> {
        if c.is_multiple_of(self.field.characteristic()) {
            return Ok(Polynomial::zero(self.field, self.nvars, self.order));
        }
        let mut terms = Vec::with_capacity(self.terms.len());
        for (a, t) in &self.terms {
            terms.push((self.field.mul(*a, c), t.checked_mul(m)?));
        }
        // multiplication by a monomial preserves the order of terms
        Ok(Polynomial {
            terms,
            ..self.header()
        })
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_compatible(other);
        if self.is_zero() || other.is_zero() {
            return Ok(Polynomial::zero(self.field, self.nvars, self.order));
        }
        let (short, long) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut acc = Polynomial::zero(self.field, self.nvars, self.order);
        for (c, m) in &short.terms {
            acc = &acc + &long.mul_term(*c, m)?;
        }
        Ok(acc)
    }

    pub fn try_pow(&self, e: u32) -> Result<Polynomial> {
        let mut acc = Polynomial::constant(self.field, self.nvars, self.order, 1);
        for _ in 0..e {
            acc = acc.try_mul(self)?;
        }
        Ok(acc)
    }

    /// `self + c * other`, by a linear merge of the two term lists.
    pub fn add_scaled(&self, c: u32, other: &Polynomial) -> Polynomial {
        self.check_compatible(other);
        let f = self.field;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() && j < b.len() {
            match self.order.compare(&a[i].1, &b[j].1) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let v = f.mul(c, b[j].0);
                    if v != 0 {
                        out.push((v, b[j].1.clone()));
                    }
                    j += 1;
                }
                Ordering::Equal => {
                    let v = f.add(a[i].0, f.mul(c, b[j].0));
                    if v != 0 {
                        out.push((v, a[i].1.clone()));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        for t in &b[j..] {
            let v = f.mul(c, t.0);
            if v != 0 {
                out.push((v, t.1.clone()));
            }
        }
        Polynomial {
            terms: out,
            ..self.header()
        }
    }

    /// Evaluate with every variable replaced by a polynomial of a target ring.
    pub fn substitute(&self, images: &[Polynomial]) -> Result<Polynomial> {
        assert_eq!(images.len(), self.nvars, "one image per variable");
        let target = images
            .first()
            .map(|p| (p.field, p.nvars, p.order))
            .unwrap_or((self.field, 0, self.order));
        let mut acc = Polynomial::zero(target.0, target.1, target.2);
        // cache powers per variable
        let mut powers: Vec<Vec<Polynomial>> = images
            .iter()
            .map(|p| {
                vec![
                    Polynomial::constant(target.0, target.1, target.2, 1),
                    p.clone(),
                ]
            })
            .collect();
        for (c, m) in &self.terms {
            let mut t = Polynomial::constant(target.0, target.1, target.2, *c);
            for (v, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[v].len() <= e as usize {
                    let next = powers[v].last().unwrap().try_mul(&images[v])?;
                    powers[v].push(next);
                }
                t = t.try_mul(&powers[v][e as usize])?;
            }
            acc = &acc + &t;
        }
        Ok(acc)
    }

    /// Move to a ring with `k` new leading variables.
    pub(crate) fn lifted(&self, k: usize, order: TermOrder) -> Polynomial {
        let terms = self.terms.iter().map(|(c, m)| (*c, m.lifted(k))).collect();
        Polynomial::from_terms(self.field, self.nvars + k, order, terms)
    }

    /// Inverse of [`Polynomial::lifted`]; the first `k` variables must not occur.
    pub(crate) fn lowered(&self, k: usize, order: TermOrder) -> Polynomial {
        let terms = self.terms.iter().map(|(c, m)| (*c, m.lowered(k))).collect();
        Polynomial::from_terms(self.field, self.nvars - k, order, terms)
    }

    pub(crate) fn permuted(&self, perm: &[usize]) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .map(|(c, m)| (*c, m.permuted(perm)))
            .collect();
        Polynomial::from_terms(self.field, self.nvars, self.order, terms)
    }

    /// Whether the variables `0..k` all have exponent zero in every term.
    pub(crate) fn free_of_prefix(&self, k: usize) -> bool {
        self.terms
            .iter()
            .all(|(_, m)| m.exponents()[..k].iter().all(|&e| e == 0))
    }

    /// Canonical text form: descending terms, `*` and `^`, symmetric coefficients.
    pub fn render(&self, names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut s = String::new();
        for (k, (c, m)) in self.terms.iter().enumerate() {
            let v = self.field.signed(*c);
            let mag = v.unsigned_abs();
            if k == 0 {
                if v < 0 {
                    s.push('-');
                }
            } else if v < 0 {
                s.push_str(" - ");
            } else {
                s.push_str(" + ");
            }
            let mut factors: Vec<String> = Vec::new();
            if mag != 1 || m.is_one() {
                factors.push(mag.to_string());
            }
            for (i, &e) in m.exponents().iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(names[i].clone()),
                    _ => factors.push(format!("{}^{}", names[i], e)),
                }
            }
            let _ = write!(s, "{}", factors.join("*"));
        }
        s
    }

    fn header(&self) -> Polynomial {
        Polynomial {
            field: self.field,
            nvars: self.nvars,
            order: self.order,
            terms: Vec::new(),
        }
    }

    fn check_compatible(&self, other: &Polynomial) {
        assert_eq!(self.field, other.field, "polynomials over different fields");
        assert_eq!(self.nvars, other.nvars, "polynomials in different rings");
        assert_eq!(
            self.order, other.order,
            "polynomials under different term orders"
        );
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.add_scaled(1, rhs)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.add_scaled(self.field.neg(1), rhs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(self.field.neg(1))
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    /// Panics on exponent overflow; use [`Polynomial::try_mul`] to handle it.
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.try_mul(rhs)
            .expect("exponent overflow in polynomial product")
    }
}

/// Common multidegree of all terms, if there is one.
pub fn is_multihomogeneous(p: &Polynomial, ring: &RingSpec) -> Option<HomogeneousDegree> {
    let mut terms = p.terms().iter();
    let Some((_, first)) = terms.next() else {
        return Some(HomogeneousDegree::Any);
    };
    let deg = ring.degree_of(first.exponents());
    if terms.all(|(_, m)| ring.degree_of(m.exponents()) == deg) {
        Some(HomogeneousDegree::Exactly(deg))
    } else {
        None
    }
}

/// Product of linear-or-not factors `∏ p_i`.
pub fn product(
    field: Fp,
    nvars: usize,
    order: TermOrder,
    factors: &[Polynomial],
) -> Result<Polynomial> {
    let mut acc = Polynomial::constant(field, nvars, order, 1);
    for f in factors {
        acc = acc.try_mul(f)?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring() -> RingSpec {
        RingSpec::with_block_sizes(32003, &[2, 2]).unwrap()
    }

    fn mono(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e).unwrap()
    }

    #[test]
    fn canonical_form_merges_and_drops_zeros() {
        let f = Fp::default();
        let p = Polynomial::from_terms(
            f,
            2,
            TermOrder::DegRevLex,
            vec![
                (1, mono(&[1, 0])),
                (5, mono(&[0, 1])),
                (32002, mono(&[1, 0])),
            ],
        );
        assert_eq!(p.terms(), &[(5, mono(&[0, 1]))]);
        let z = &p - &p;
        assert!(z.is_zero());
    }

    #[test]
    fn homogeneity() {
        let r = ring();
        let x0 = Polynomial::var(&r, 0);
        let x1 = Polynomial::var(&r, 1);
        let y0 = Polynomial::var(&r, 2);
        let y1 = Polynomial::var(&r, 3);
        let diag = &(&x0 * &y1) - &(&x1 * &y0);
        assert_eq!(
            is_multihomogeneous(&diag, &r),
            Some(HomogeneousDegree::Exactly(Multidegree(vec![1, 1])))
        );
        assert_eq!(is_multihomogeneous(&(&x0 + &y0), &r), None);
        assert_eq!(
            is_multihomogeneous(&Polynomial::zero_in(&r), &r),
            Some(HomogeneousDegree::Any)
        );
    }

    #[test]
    fn render_is_canonical() {
        let r = ring();
        let names = r.var_names();
        let x0 = Polynomial::var(&r, 0);
        let y1 = Polynomial::var(&r, 3);
        let p = &(&(&x0 * &x0) - &y1.scale(3))
            + &Polynomial::constant(r.field(), 4, TermOrder::DegRevLex, 32002);
        assert_eq!(p.render(&names), "x0^2 - 3*y1 - 1");
        assert_eq!((-&x0).render(&names), "-x0");
        assert_eq!(Polynomial::zero_in(&r).render(&names), "0");
    }

    #[test]
    fn substitution() {
        let r = ring();
        let x0 = Polynomial::var(&r, 0);
        let x1 = Polynomial::var(&r, 1);
        // p(a, b, c, d) = a*d - b*c evaluated at (x0, x1, x0, x1) is zero
        let p = &(&Polynomial::var(&r, 0) * &Polynomial::var(&r, 3))
            - &(&Polynomial::var(&r, 1) * &Polynomial::var(&r, 2));
        let images = vec![x0.clone(), x1.clone(), x0.clone(), x1.clone()];
        assert!(p.substitute(&images).unwrap().is_zero());
    }
}
