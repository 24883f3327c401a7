//! Fixed inputs shared by the benchmarks.

use multideg::ratmap::random_linear_alternating;
use multideg::{Ideal, RationalMapSpec, RingSpec};

pub const CHARACTERISTIC: u64 = 32003;

pub fn cremona() -> RationalMapSpec {
    RationalMapSpec::parse(
        CHARACTERISTIC,
        &["x0", "x1", "x2"],
        &["x1*x2", "x0*x2", "x0*x1"],
    )
    .expect("valid map")
}

pub fn twisted_cubic() -> RationalMapSpec {
    RationalMapSpec::parse(
        CHARACTERISTIC,
        &["x0", "x1"],
        &["x0^3", "x0^2*x1", "x0*x1^2", "x1^3"],
    )
    .expect("valid map")
}

/// Submaximal pfaffians of a seeded 5×5 linear alternating matrix on `P^3`.
pub fn gorenstein(seed: u64) -> RationalMapSpec {
    let ring =
        RingSpec::from_names(CHARACTERISTIC, &[&["x0", "x1", "x2", "x3"]]).expect("valid ring");
    let m = random_linear_alternating(&ring, 5, seed).expect("alternating");
    RationalMapSpec::new(&ring, m.generators().expect("pfaffians")).expect("valid map")
}

/// A bigraded monomial ideal in `k[x0..x2, y0..y2]` with a deep pivot tree.
pub fn monomial_ideal() -> Ideal {
    let ring = RingSpec::with_block_sizes(CHARACTERISTIC, &[3, 3]).expect("valid ring");
    Ideal::parse(
        &ring,
        &[
            "x0^3*y1",
            "x1^2*y0^2",
            "x2^3*y2",
            "x0*x1*y1^2",
            "x1*x2^2*y0",
            "x0^2*y2^3",
            "x2*y0*y1*y2",
            "x0*x1*x2*y0",
        ],
    )
    .expect("valid ideal")
}
