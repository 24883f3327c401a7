//! Exponent vectors and the two term orders used throughout the crate.

use std::cmp::Ordering;

use smallvec::SmallVec;

use crate::error::{Error, Result};

/// Largest admissible exponent.
pub const MAX_EXPONENT: u32 = i32::MAX as u32;

pub(crate) type Exps = SmallVec<[u32; 12]>;

/// A monomial, stored as its exponent vector together with the total degree.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Exps,
    deg: u64,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: SmallVec::from_elem(0, nvars),
            deg: 0,
        }
    }

    pub fn from_exponents(exps: &[u32]) -> Result<Self> {
        if exps.iter().any(|&e| e > MAX_EXPONENT) {
            return Err(Error::ExponentOverflow);
        }
        Ok(Monomial {
            deg: exps.iter().map(|&e| e as u64).sum(),
            exps: SmallVec::from_slice(exps),
        })
    }

    pub fn var(nvars: usize, i: usize, e: u32) -> Self {
        let mut m = Monomial::one(nvars);
        m.exps[i] = e;
        m.deg = e as u64;
        m
    }

    #[inline]
    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    #[inline]
    pub fn degree(&self) -> u64 {
        self.deg
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    pub fn checked_mul(&self, other: &Monomial) -> Result<Monomial> {
        debug_assert_eq!(self.nvars(), other.nvars());
        let mut exps = Exps::with_capacity(self.exps.len());
        for (a, b) in self.exps.iter().zip(&other.exps) {
            let s = a + b; // both ≤ 2^31-1, cannot wrap u32
            if s > MAX_EXPONENT {
                return Err(Error::ExponentOverflow);
            }
            exps.push(s);
        }
        Ok(Monomial {
            exps,
            deg: self.deg + other.deg,
        })
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        self.deg <= other.deg && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        debug_assert!(self.divides(other));
        Monomial {
            exps: other
                .exps
                .iter()
                .zip(&self.exps)
                .map(|(a, b)| a - b)
                .collect(),
            deg: other.deg - self.deg,
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let exps: Exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| *a.max(b))
            .collect();
        Monomial {
            deg: exps.iter().map(|&e| e as u64).sum(),
            exps,
        }
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let exps: Exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| *a.min(b))
            .collect();
        Monomial {
            deg: exps.iter().map(|&e| e as u64).sum(),
            exps,
        }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(&other.exps)
            .all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Indices of variables with positive exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
    }

    /// Reorder variables: new variable `perm[i]` receives old exponent `i`.
    pub(crate) fn permuted(&self, perm: &[usize]) -> Monomial {
        let mut exps = Exps::from_elem(0, self.exps.len());
        for (i, &e) in self.exps.iter().enumerate() {
            exps[perm[i]] = e;
        }
        Monomial {
            exps,
            deg: self.deg,
        }
    }

    /// Insert `k` leading zero exponents (auxiliary variables in front).
    pub(crate) fn lifted(&self, k: usize) -> Monomial {
        let mut exps = Exps::from_elem(0, k);
        exps.extend_from_slice(&self.exps);
        Monomial {
            exps,
            deg: self.deg,
        }
    }

    /// Drop the first `k` exponents, which must be zero.
    pub(crate) fn lowered(&self, k: usize) -> Monomial {
        debug_assert!(self.exps[..k].iter().all(|&e| e == 0));
        Monomial {
            exps: SmallVec::from_slice(&self.exps[k..]),
            deg: self.deg,
        }
    }

    /// Bitmask with bit `i mod 64` set when variable `i` occurs.
    #[inline]
    pub(crate) fn divmask(&self) -> u64 {
        let mut m = 0u64;
        for (i, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                m |= 1 << (i % 64);
            }
        }
        m
    }
}

/// Global monomial orders.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum TermOrder {
    /// Graded reverse lexicographic order with `x_0 > x_1 > ... > x_{n-1}`.
    #[default]
    DegRevLex,
    /// Product order eliminating the first `block` variables: degrevlex on
    /// the block decides, ties go to degrevlex on the remaining variables.
    BlockElimination { block: usize },
}

impl TermOrder {
    pub fn compare(self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            TermOrder::DegRevLex => a.deg.cmp(&b.deg).then_with(|| revlex(&a.exps, &b.exps)),
            TermOrder::BlockElimination { block } => {
                let (a1, a2) = a.exps.split_at(block.min(a.exps.len()));
                let (b1, b2) = b.exps.split_at(block.min(b.exps.len()));
                let da: u64 = a1.iter().map(|&e| e as u64).sum();
                let db: u64 = b1.iter().map(|&e| e as u64).sum();
                da.cmp(&db)
                    .then_with(|| revlex(a1, b1))
                    .then_with(|| (a.deg - da).cmp(&(b.deg - db)))
                    .then_with(|| revlex(a2, b2))
            }
        }
    }
}

/// Tie-break of degrevlex among equal-degree exponent vectors: the vector
/// with the smaller exponent in the last differing variable is larger.
#[inline]
fn revlex(a: &[u32], b: &[u32]) -> Ordering {
    for (x, y) in a.iter().rev().zip(b.iter().rev()) {
        if x != y {
            return y.cmp(x);
        }
    }
    Ordering::Equal
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e).unwrap()
    }

    #[test]
    fn degrevlex_examples() {
        let o = TermOrder::DegRevLex;
        // x0^2 vs x0*x1
        assert_eq!(o.compare(&m(&[2, 0]), &m(&[1, 1])), Ordering::Greater);
        assert_eq!(o.compare(&m(&[1, 1]), &m(&[1, 1])), Ordering::Equal);
        // x0*x2 < x1^2 in degrevlex (the classic tie-break that differs from lex)
        assert_eq!(o.compare(&m(&[1, 0, 1]), &m(&[0, 2, 0])), Ordering::Less);
        assert_eq!(o.compare(&m(&[0, 0, 3]), &m(&[1, 0, 0])), Ordering::Greater);
    }

    #[test]
    fn elimination_block_dominates() {
        let o = TermOrder::BlockElimination { block: 1 };
        // t vs x0^5
        assert_eq!(o.compare(&m(&[1, 0]), &m(&[0, 5])), Ordering::Greater);
        assert_eq!(o.compare(&m(&[1, 1]), &m(&[1, 0])), Ordering::Greater);
    }

    #[test]
    fn exponent_cap() {
        assert_eq!(
            Monomial::from_exponents(&[MAX_EXPONENT + 1]).unwrap_err(),
            Error::ExponentOverflow
        );
        let a = m(&[MAX_EXPONENT]);
        assert_eq!(
            a.checked_mul(&m(&[1])).unwrap_err(),
            Error::ExponentOverflow
        );
    }

    #[test]
    fn lcm_gcd_divides() {
        let a = m(&[2, 0, 1]);
        let b = m(&[1, 3, 0]);
        assert_eq!(a.lcm(&b), m(&[2, 3, 1]));
        assert_eq!(a.gcd(&b), m(&[1, 0, 0]));
        assert!(a.divides(&a.lcm(&b)));
        assert!(!a.divides(&b));
        assert_eq!(a.quotient_of(&m(&[3, 1, 1])), m(&[1, 1, 0]));
        assert!(m(&[1, 0]).is_coprime(&m(&[0, 4])));
    }
}
