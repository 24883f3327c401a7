//! Ideals, reduced Gröbner bases and the ideal-theoretic primitives built
//! from them (elimination, colon ideals, saturation, intersection).

mod buchberger;
mod ops;

pub use buchberger::DEFAULT_PAIR_BUDGET;
pub(crate) use ops::{eliminate_prefix, intersect_all, saturate_by_variables};
pub use ops::{
    elimination_ideal, groebner_basis, ideal_intersection, ideal_quotient, normal_form, saturation,
};

use crate::error::{Error, Result};
use crate::monomial::{Monomial, TermOrder};
use crate::parse::parse_polynomial;
use crate::poly::{is_multihomogeneous, Polynomial};
use crate::ring::{Multidegree, RingSpec};

/// An ideal `J` of a multigraded ring, optionally carrying a degree shift so
/// that it stands for the cyclic module `B/J(-shift)`.
#[derive(Debug, Clone)]
pub struct Ideal {
    ring: RingSpec,
    generators: Vec<Polynomial>,
    shift: Option<Multidegree>,
    pair_budget: usize,
}

impl Ideal {
    pub fn new(ring: &RingSpec, generators: Vec<Polynomial>) -> Self {
        let generators = generators
            .into_iter()
            .filter(|g| !g.is_zero())
            .map(|g| {
                assert_eq!(g.nvars(), ring.nvars(), "generator from a different ring");
                g.with_order(TermOrder::DegRevLex)
            })
            .collect();
        Ideal {
            ring: ring.clone(),
            generators,
            shift: None,
            pair_budget: DEFAULT_PAIR_BUDGET,
        }
    }

    pub fn parse(ring: &RingSpec, exprs: &[&str]) -> Result<Self> {
        let gens = exprs
            .iter()
            .map(|e| parse_polynomial(e, ring))
            .collect::<Result<Vec<_>>>()?;
        Ok(Ideal::new(ring, gens))
    }

    pub fn zero(ring: &RingSpec) -> Self {
        Ideal::new(ring, Vec::new())
    }

    pub fn unit(ring: &RingSpec) -> Self {
        let one = Polynomial::constant(ring.field(), ring.nvars(), TermOrder::DegRevLex, 1);
        Ideal::new(ring, vec![one])
    }

    /// The block ideal `M_i` generated by the variables of block `i`.
    pub fn block_ideal(ring: &RingSpec, i: usize) -> Self {
        let gens = ring
            .block_range(i)
            .map(|v| Polynomial::var(ring, v))
            .collect();
        Ideal::new(ring, gens)
    }

    pub fn with_shift(mut self, shift: Multidegree) -> Self {
        assert_eq!(
            shift.len(),
            self.ring.r(),
            "shift must have one entry per block"
        );
        self.shift = Some(shift);
        self
    }

    pub fn with_pair_budget(mut self, budget: usize) -> Self {
        self.pair_budget = budget;
        self
    }

    pub fn ring(&self) -> &RingSpec {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn shift(&self) -> Option<&Multidegree> {
        self.shift.as_ref()
    }

    pub fn shift_or_zero(&self) -> Multidegree {
        self.shift
            .clone()
            .unwrap_or_else(|| Multidegree::zero(self.ring.r()))
    }

    pub fn pair_budget(&self) -> usize {
        self.pair_budget
    }

    /// A new ideal in the same ring with the same budget and no shift.
    pub fn derived(&self, generators: Vec<Polynomial>) -> Ideal {
        Ideal::new(&self.ring, generators).with_pair_budget(self.pair_budget)
    }

    /// `J + (extra)`; keeps the shift.
    pub fn plus(&self, extra: &[Polynomial]) -> Ideal {
        let mut gens = self.generators.clone();
        gens.extend(extra.iter().cloned());
        let mut out = self.derived(gens);
        out.shift = self.shift.clone();
        out
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.generators
            .iter()
            .all(|g| is_multihomogeneous(g, &self.ring).is_some())
    }

    pub fn require_homogeneous(&self) -> Result<()> {
        let names = self.ring.var_names();
        match self
            .generators
            .iter()
            .find(|g| is_multihomogeneous(g, &self.ring).is_none())
        {
            Some(g) => Err(Error::NotHomogeneous(g.render(&names))),
            None => Ok(()),
        }
    }

    /// Reduced degrevlex Gröbner basis.
    pub fn groebner(&self) -> Result<GroebnerBasis> {
        groebner_basis(self, TermOrder::DegRevLex)
    }

    pub fn contains(&self, p: &Polynomial) -> Result<bool> {
        Ok(normal_form(p, &self.groebner()?).is_zero())
    }

    pub fn is_unit(&self) -> Result<bool> {
        Ok(self.groebner()?.is_unit())
    }

    /// Equality as ideals, via reduced Gröbner bases.
    pub fn same_ideal(&self, other: &Ideal) -> Result<bool> {
        Ok(self.groebner()?.elements() == other.groebner()?.elements())
    }

    /// `self ⊆ other`.
    pub fn is_contained_in(&self, other: &Ideal) -> Result<bool> {
        let g = other.groebner()?;
        Ok(self.generators.iter().all(|p| normal_form(p, &g).is_zero()))
    }

    pub fn render(&self) -> Vec<String> {
        let names = self.ring.var_names();
        self.generators.iter().map(|g| g.render(&names)).collect()
    }
}

/// A reduced Gröbner basis: monic elements sorted by increasing leading monomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    order: TermOrder,
    elements: Vec<Polynomial>,
    leading: Vec<Monomial>,
}

impl GroebnerBasis {
    pub(crate) fn from_reduced(order: TermOrder, elements: Vec<Polynomial>) -> Self {
        let leading = elements
            .iter()
            .map(|g| g.leading_monomial().unwrap().clone())
            .collect();
        GroebnerBasis {
            order,
            elements,
            leading,
        }
    }

    pub fn order(&self) -> TermOrder {
        self.order
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn leading_terms(&self) -> &[Monomial] {
        &self.leading
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.elements.len() == 1 && self.elements[0].is_unit()
    }

    /// Check the defining properties: monic, autoreduced, and every
    /// S-polynomial reduces to zero.
    pub fn verify(&self) -> Result<bool> {
        for (i, g) in self.elements.iter().enumerate() {
            if g.leading_coeff() != Some(1) {
                return Ok(false);
            }
            for (j, lm) in self.leading.iter().enumerate() {
                if i != j && g.terms().iter().any(|(_, m)| lm.divides(m)) {
                    return Ok(false);
                }
            }
        }
        for i in 0..self.elements.len() {
            for j in i + 1..self.elements.len() {
                let l = self.leading[i].lcm(&self.leading[j]);
                let a = self.elements[i].mul_term(1, &self.leading[i].quotient_of(&l))?;
                let b = self.elements[j].mul_term(1, &self.leading[j].quotient_of(&l))?;
                if !normal_form(&(&a - &b), self).is_zero() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

#[cfg(test)]
mod tests;
