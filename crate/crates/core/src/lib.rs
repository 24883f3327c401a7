//! Multidegrees, mixed multiplicities and projective degrees of rational
//! maps, computed over a prime field with Gröbner bases.

pub mod error;
pub mod field;
pub mod groebner;
pub mod hilbert;
pub mod laurent;
pub mod mgops;
pub mod monomial;
pub mod parse;
pub mod poly;
pub mod ratmap;
pub mod ring;

pub use error::{Error, Result};
pub use field::{Fp, DEFAULT_CHARACTERISTIC};
pub use groebner::{
    elimination_ideal, groebner_basis, ideal_intersection, ideal_quotient, normal_form, saturation,
    GroebnerBasis, Ideal, DEFAULT_PAIR_BUDGET,
};
pub use hilbert::{HilbertPolynomialRep, HilbertSeriesRep, MixedMultTable, PivotRule, Route};
pub use laurent::LaurentPolyZ;
pub use mgops::{FilterRegularWitness, SliceReport, SliceTrial};
pub use monomial::{Monomial, TermOrder, MAX_EXPONENT};
pub use parse::parse_polynomial;
pub use poly::{is_multihomogeneous, HomogeneousDegree, Polynomial};
pub use ratmap::{
    DegreeMethod, MatrixKind, PresentationMatrix, ProjectiveDegreeVector, RationalMapSpec,
};
pub use ring::{Block, Multidegree, RingSpec};
