//! Laurent polynomials in `r` variables with arbitrary-precision integer
//! coefficients.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// `Σ c_a t^a` with `a ∈ Z^r`; zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LaurentPolyZ {
    nvars: usize,
    terms: BTreeMap<Vec<i64>, BigInt>,
}

impl LaurentPolyZ {
    pub fn zero(nvars: usize) -> Self {
        LaurentPolyZ {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::monomial(nvars, BigInt::one(), vec![0; nvars])
    }

    pub fn monomial(nvars: usize, c: BigInt, exps: Vec<i64>) -> Self {
        assert_eq!(exps.len(), nvars);
        let mut p = Self::zero(nvars);
        p.add_term(exps, c);
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
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

    /// Terms in increasing lexicographic order of exponent vectors.
    pub fn terms(&self) -> impl Iterator<Item = (&[i64], &BigInt)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn coefficient(&self, exps: &[i64]) -> BigInt {
        self.terms.get(exps).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, exps: Vec<i64>, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exps);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &LaurentPolyZ) -> LaurentPolyZ {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &LaurentPolyZ) -> LaurentPolyZ {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c);
        }
        out
    }

    pub fn mul(&self, other: &LaurentPolyZ) -> LaurentPolyZ {
        assert_eq!(self.nvars, other.nvars);
        let mut out = Self::zero(self.nvars);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let e = a.iter().zip(b).map(|(x, y)| x + y).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }

    /// Multiply by the monomial `t^shift`.
    pub fn shifted(&self, shift: &[i64]) -> LaurentPolyZ {
        assert_eq!(shift.len(), self.nvars);
        LaurentPolyZ {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().zip(shift).map(|(x, s)| x + s).collect(), c.clone()))
                .collect(),
        }
    }

    /// Componentwise minimum exponent over the support (zero vector if empty).
    pub fn min_exponents(&self) -> Vec<i64> {
        self.fold_exponents(i64::min)
    }

    /// Componentwise maximum exponent over the support (zero vector if empty).
    pub fn max_exponents(&self) -> Vec<i64> {
        self.fold_exponents(i64::max)
    }

    fn fold_exponents(&self, f: fn(i64, i64) -> i64) -> Vec<i64> {
        let mut it = self.terms.keys();
        let Some(first) = it.next() else {
            return vec![0; self.nvars];
        };
        let mut acc = first.clone();
        for e in it {
            for (a, x) in acc.iter_mut().zip(e) {
                *a = f(*a, *x);
            }
        }
        acc
    }

    /// Substitute every variable by a single one: `t_i -> t`.
    pub fn coarsened(&self) -> LaurentPolyZ {
        let mut out = Self::zero(1);
        for (e, c) in &self.terms {
            out.add_term(vec![e.iter().sum()], c.clone());
        }
        out
    }

    /// Value at `t = (1, ..., 1)`.
    pub fn value_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }
}

impl fmt::Display for LaurentPolyZ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // highest exponents first
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.sign() == num_bigint::Sign::Minus;
            let abs = if neg { -c } else { c.clone() };
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let vars: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &x)| x != 0)
                .map(|(i, &x)| {
                    if x == 1 {
                        format!("t{}", i + 1)
                    } else {
                        format!("t{}^{}", i + 1, x)
                    }
                })
                .collect();
            if vars.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", vars.join("*"))?;
            } else {
                write!(f, "{abs}*{}", vars.join("*"))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(nvars: usize, c: i64, e: &[i64]) -> LaurentPolyZ {
        LaurentPolyZ::monomial(nvars, BigInt::from(c), e.to_vec())
    }

    #[test]
    fn arithmetic_and_cancellation() {
        let a = t(2, 1, &[0, 0]).sub(&t(2, 1, &[1, 1]));
        let b = t(2, 1, &[0, 0]).add(&t(2, 1, &[1, 1]));
        let p = a.mul(&b);
        assert_eq!(p, t(2, 1, &[0, 0]).sub(&t(2, 1, &[2, 2])));
        assert!(a.sub(&a).is_zero());
        assert_eq!(p.to_string(), "-t1^2*t2^2 + 1");
    }

    #[test]
    fn shifts_and_extremes() {
        let p = t(2, 3, &[-1, 2]).add(&t(2, -1, &[4, 0]));
        assert_eq!(p.min_exponents(), vec![-1, 0]);
        assert_eq!(p.max_exponents(), vec![4, 2]);
        assert_eq!(p.shifted(&[1, 0]).min_exponents(), vec![0, 0]);
        assert_eq!(p.coarsened(), t(1, 3, &[1]).add(&t(1, -1, &[4])));
        assert_eq!(p.value_at_one(), BigInt::from(2));
    }
}
