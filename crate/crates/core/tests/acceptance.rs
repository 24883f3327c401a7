//! End-to-end acceptance checks. Each criterion prints one PASS/FAIL line
//! with its wall time against a pinned limit; the test fails if any does.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand_core::RngCore;

use multideg::hilbert::{
    coarsened_multiplicity, graded_piece_dim, hilbert_polynomial, k_polynomial, k_polynomial_with,
    mixed_mult_series,
};
use multideg::mgops::{
    irrelevant_ideal, irrelevant_saturation, is_filter_regular, mixed_mult_polynomial, multidegree,
    prng, random_block_form, slice_degree, supp_dimension,
};
use multideg::ratmap::{
    check_g_condition, formula_gorenstein_ht3, formula_perfect_ht2, projective_degrees,
    random_linear_alternating, rees_ideal, satfiber_d0_check,
};
use multideg::{
    Ideal, LaurentPolyZ, Monomial, Multidegree, PivotRule, Polynomial, RationalMapSpec, RingSpec,
    TermOrder,
};

const P: u64 = 32003;

type Outcome = std::result::Result<(), String>;

struct Gate {
    failures: Vec<String>,
}

impl Gate {
    fn run(&mut self, id: usize, name: &str, limit: Duration, f: impl FnOnce() -> Outcome) {
        let start = Instant::now();
        let outcome = f();
        let elapsed = start.elapsed();
        let verdict = match (&outcome, elapsed <= limit) {
            (Ok(()), true) => "PASS".to_string(),
            (Ok(()), false) => format!("FAIL (over the {limit:?} limit)"),
            (Err(e), _) => format!("FAIL ({e})"),
        };
        println!("[{id:>2}] {verdict:<6} {name} in {elapsed:.2?} (limit {limit:?})");
        if !verdict.starts_with("PASS") {
            self.failures.push(format!("{id}: {name}"));
        }
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err(e: multideg::Error) -> String {
    e.to_string()
}

fn map(vars: &[&str], forms: &[&str]) -> RationalMapSpec {
    RationalMapSpec::parse(P, vars, forms).unwrap()
}

fn cremona() -> RationalMapSpec {
    map(&["x0", "x1", "x2"], &["x1*x2", "x0*x2", "x0*x1"])
}

fn twisted_cubic() -> RationalMapSpec {
    map(&["x0", "x1"], &["x0^3", "x0^2*x1", "x0*x1^2", "x1^3"])
}

fn u(xs: &[u64]) -> Vec<BigUint> {
    xs.iter().map(|&x| BigUint::from(x)).collect()
}

fn table(pairs: &[(&[i64], u64)]) -> BTreeMap<Vec<i64>, BigUint> {
    pairs
        .iter()
        .map(|(k, v)| (k.to_vec(), BigUint::from(*v)))
        .collect()
}

fn binomial(n: i64, k: i64) -> BigRational {
    // C(n, k) as a polynomial in n: n(n-1)...(n-k+1)/k!
    let mut acc = BigRational::one();
    for i in 0..k {
        acc *= BigRational::new(BigInt::from(n - i), BigInt::from(i + 1));
    }
    acc
}

fn criterion_cremona() -> Outcome {
    let v = projective_degrees(&cremona()).map_err(err)?;
    let f = formula_perfect_ht2(2, &[1, 1]);
    ensure(v.degrees == u(&[1, 2, 1]) && f.same_degrees(&v), || {
        format!("elimination {:?}, formula {:?}", v.degrees, f.degrees)
    })
}

fn criterion_twisted_cubic() -> Outcome {
    let v = projective_degrees(&twisted_cubic()).map_err(err)?;
    let f = formula_perfect_ht2(1, &[1, 1, 1]);
    ensure(v.degrees == u(&[3, 1]) && f.same_degrees(&v), || {
        format!("elimination {:?}, formula {:?}", v.degrees, f.degrees)
    })
}

fn criterion_gorenstein(per_seed: Duration) -> Outcome {
    let ring = RingSpec::from_names(P, &[&["x0", "x1", "x2", "x3"]]).unwrap();
    let expected = formula_gorenstein_ht3(3, 4, 1, 2).map_err(err)?;
    ensure(expected.degrees == u(&[3, 4, 2, 1]), || {
        format!("formula gives {:?}", expected.degrees)
    })?;
    let mut accepted = 0;
    for seed in 0..50 {
        if accepted == 5 {
            break;
        }
        let start = Instant::now();
        let m = random_linear_alternating(&ring, 5, seed).map_err(err)?;
        let gens = m.generators().map_err(err)?;
        if !check_g_condition(&ring, &gens, &m, 4).map_err(err)?.holds {
            continue;
        }
        let f = RationalMapSpec::new(&ring, gens).map_err(err)?;
        let v = projective_degrees(&f).map_err(err)?;
        ensure(v.same_degrees(&expected), || {
            format!("seed {seed}: elimination gives {:?}", v.degrees)
        })?;
        ensure(start.elapsed() <= per_seed, || {
            format!("seed {seed} took {:?}", start.elapsed())
        })?;
        accepted += 1;
    }
    ensure(accepted == 5, || {
        format!("only {accepted} seeds satisfied G_4")
    })
}

fn criterion_full_ring() -> Outcome {
    for (n, m) in [(2usize, 2usize), (3, 2)] {
        let ring = RingSpec::with_block_sizes(P, &[n, m]).unwrap();
        let zero = Ideal::zero(&ring);
        let series = k_polynomial(&zero).map_err(err)?;
        ensure(
            series.numerator == LaurentPolyZ::one(2)
                && series.denominator_exponents == vec![n as u32, m as u32],
            || format!("({n},{m}): numerator {}", series.numerator),
        )?;
        let hp = hilbert_polynomial(&zero).map_err(err)?;
        // both sides have degree < 3 in each variable; a 4x4 grid determines them
        for a in -2..2i64 {
            for b in -2..2i64 {
                let want = binomial(a + n as i64 - 1, n as i64 - 1)
                    * binomial(b + m as i64 - 1, m as i64 - 1);
                ensure(hp.evaluate(&[a, b]) == want, || {
                    format!("({n},{m}): P({a},{b}) = {}", hp.evaluate(&[a, b]))
                })?;
            }
        }
    }
    Ok(())
}

fn p1xp1() -> RingSpec {
    RingSpec::with_block_sizes(P, &[2, 2]).unwrap()
}

fn criterion_diagonal() -> Outcome {
    let ring = p1xp1();
    let diag = Ideal::parse(&ring, &["x0*y1 - x1*y0"]).unwrap();
    let want = table(&[(&[1, 0], 1), (&[0, 1], 1)]);
    let series = mixed_mult_series(&diag).map_err(err)?;
    let poly = mixed_mult_polynomial(&diag).map_err(err)?;
    let coarse = coarsened_multiplicity(&diag).map_err(err)?;
    ensure(series.entries() == &want, || {
        format!("series {:?}", series.entries())
    })?;
    ensure(poly.entries() == &want, || {
        format!("polynomial {:?}", poly.entries())
    })?;
    ensure(
        coarse == BigUint::from(2u32) && coarse == series.sum(),
        || format!("coarsened {coarse}, table sum {}", series.sum()),
    )
}

fn criterion_irrelevant() -> Outcome {
    let ring = p1xp1();
    let n = irrelevant_ideal(&ring).map_err(err)?;
    let series = mixed_mult_series(&n).map_err(err)?;
    let poly = mixed_mult_polynomial(&n).map_err(err)?;
    let coarse = coarsened_multiplicity(&n).map_err(err)?;
    ensure(
        series.get(&[1, -1]) == BigUint::one() && series.get(&[-1, 1]) == BigUint::one(),
        || format!("series {:?}", series.entries()),
    )?;
    ensure(poly.is_empty(), || {
        format!("polynomial {:?}", poly.entries())
    })?;
    ensure(coarse == BigUint::from(2u32), || {
        format!("coarsened {coarse}")
    })
}

fn random_monomial_ideal(seed: u64) -> Ideal {
    let mut rng = prng(seed);
    let n = 1 + (rng.next_u64() % 3) as usize;
    let m = 1 + (rng.next_u64() % 3) as usize;
    let ring = RingSpec::with_block_sizes(P, &[n, m]).unwrap();
    let count = 1 + (rng.next_u64() % 4) as usize;
    let gens = (0..count)
        .map(|_| {
            let exps: Vec<u32> = (0..n + m).map(|_| (rng.next_u64() % 3) as u32).collect();
            Polynomial::term(
                ring.field(),
                TermOrder::DegRevLex,
                1,
                Monomial::from_exponents(&exps).unwrap(),
            )
        })
        .collect();
    Ideal::new(&ring, gens)
}

/// Coefficients of `K(1 - s)` of total degree below `|D| - dim`.
fn low_degree_violations(ideal: &Ideal) -> multideg::Result<Vec<Vec<i64>>> {
    let rep = k_polynomial(ideal)?;
    let r = rep.denominator_exponents.len();
    let total: i64 = rep.denominator_exponents.iter().map(|&x| x as i64).sum();
    let Some(dim) = rep.dimension else {
        return Ok(Vec::new());
    };
    let mut one_minus = Vec::new();
    for i in 0..r {
        let mut p = LaurentPolyZ::one(r);
        let mut e = vec![0; r];
        e[i] = 1;
        p.add_term(e, BigInt::from(-1));
        one_minus.push(p);
    }
    let mut acc = LaurentPolyZ::zero(r);
    for (a, c) in rep.numerator.terms() {
        let mut term = LaurentPolyZ::monomial(r, c.clone(), vec![0; r]);
        for (i, &ai) in a.iter().enumerate() {
            for _ in 0..ai {
                term = term.mul(&one_minus[i]);
            }
        }
        acc = acc.add(&term);
    }
    Ok(acc
        .terms()
        .filter(|(e, c)| e.iter().sum::<i64>() < total - dim as i64 && !c.is_zero())
        .map(|(e, _)| e.to_vec())
        .collect())
}

fn property_suite(seed: u64) -> Outcome {
    let j = random_monomial_ideal(seed);
    let ctx = |what: &str| format!("seed {seed}, {what} on {:?}", j.render());

    // (a)
    let bad = low_degree_violations(&j).map_err(err)?;
    ensure(bad.is_empty(), || {
        ctx(&format!("K(1-s) has low terms {bad:?}"))
    })?;

    // (b)
    let base = mixed_mult_series(&j).map_err(err)?;
    let shifted =
        mixed_mult_series(&j.clone().with_shift(Multidegree(vec![2, -3]))).map_err(err)?;
    ensure(base.entries() == shifted.entries(), || {
        ctx("shift changes the series table")
    })?;

    // (c)
    let a = k_polynomial_with(&j, PivotRule::MostFrequent).map_err(err)?;
    let b = k_polynomial_with(&j, PivotRule::FirstVariable).map_err(err)?;
    ensure(a.numerator == b.numerator, || ctx("pivot rules disagree"))?;

    // (d)
    let hp = hilbert_polynomial(&j).map_err(err)?;
    let t = hp.validity_threshold().as_slice().to_vec();
    for di in 0..4 {
        for dj in 0..4 {
            let nu = vec![t[0].max(0) + di, t[1].max(0) + dj];
            let count = graded_piece_dim(&j, &Multidegree(nu.clone())).map_err(err)?;
            ensure(
                hp.evaluate(&nu) == BigRational::from_integer(BigInt::from(count)),
                || {
                    ctx(&format!(
                        "P{nu:?} = {} but the piece has dimension {count}",
                        hp.evaluate(&nu)
                    ))
                },
            )?;
        }
    }

    // (e)
    let sat = irrelevant_saturation(&j).map_err(err)?;
    let series = mixed_mult_series(&sat).map_err(err)?;
    let lead = hp.leading_table().map_err(err)?;
    ensure(series.nonnegative_part() == *lead.entries(), || {
        ctx(&format!(
            "saturated series {:?} vs polynomial {:?}",
            series.entries(),
            lead.entries()
        ))
    })?;
    Ok(())
}

fn criterion_properties() -> Outcome {
    for seed in 0..24 {
        property_suite(seed)?;
    }
    Ok(())
}

fn slicing_passes(ideal: &Ideal, label: &str, seed: u64) -> Outcome {
    let r = ideal.ring().r();
    let dim = supp_dimension(ideal)
        .map_err(err)?
        .ok_or_else(|| format!("{label}: empty support"))?;
    assert_eq!(r, 2);
    for i in 0..=dim as i64 {
        let n = [i, dim as i64 - i];
        let want = multidegree(ideal, &n).map_err(err)?;
        let want: u64 = (&want)
            .try_into()
            .map_err(|_| format!("{label}: degree too large"))?;
        let report = slice_degree(ideal, &n, seed, 10).map_err(err)?;
        ensure(report.passes(want, 9), || {
            format!(
                "{label} at {n:?}: expected {want}, {} of {} verified trials agree",
                report.agreeing(want),
                report.verified()
            )
        })?;
    }
    Ok(())
}

fn criterion_slicing() -> Outcome {
    let diag = Ideal::parse(&p1xp1(), &["x0*y1 - x1*y0"]).unwrap();
    slicing_passes(&diag, "diagonal", 11)?;
    let cremona_graph = rees_ideal(&cremona()).map_err(err)?;
    slicing_passes(&cremona_graph, "Cremona graph", 12)?;
    let conic = map(&["x0", "x1"], &["x0^2", "x0*x1", "x1^2"]);
    let conic_graph = rees_ideal(&conic).map_err(err)?;
    slicing_passes(&conic_graph, "conic graph", 13)
}

fn criterion_drop() -> Outcome {
    let rees = rees_ideal(&cremona()).map_err(err)?;
    let ring = rees.ring().clone();
    let base = mixed_mult_polynomial(&rees).map_err(err)?;
    let mut rng = prng(2024);
    let mut verified = 0;
    let mut attempts = 0;
    while verified < 5 {
        attempts += 1;
        if attempts > 20 {
            return Err(format!("only {verified} filter-regular forms in 20 draws"));
        }
        let block = verified % 2;
        let h = random_block_form(&ring, block, &mut rng);
        if !is_filter_regular(&rees, &h).map_err(err)?.passed {
            continue;
        }
        let cut = mixed_mult_polynomial(&rees.plus(&[h])).map_err(err)?;
        for (k, v) in base.entries() {
            if k[block] < 1 {
                continue;
            }
            let mut lowered = k.clone();
            lowered[block] -= 1;
            ensure(&cut.get(&lowered) == v, || {
                format!(
                    "block {block}: e({k:?}) = {v} but the cut gives {}",
                    cut.get(&lowered)
                )
            })?;
        }
        verified += 1;
    }
    Ok(())
}

fn criterion_satfiber() -> Outcome {
    let identity = map(&["x0", "x1"], &["x0", "x1"]);
    for (label, f, d0) in [
        ("Cremona", cremona(), 1u32),
        ("twisted cubic", twisted_cubic(), 3),
        ("identity", identity, 1),
    ] {
        let c = satfiber_d0_check(&f, 6).map_err(err)?;
        ensure(
            c.stabilized && c.agree && c.inferred_e == Some(BigInt::from(d0)),
            || {
                format!(
                    "{label}: dims {:?}, inferred {:?}, d_0 {}",
                    c.table.dims, c.inferred_e, c.d0_elimination
                )
            },
        )?;
    }
    Ok(())
}

#[test]
fn acceptance() {
    let total = Instant::now();
    let mut gate = Gate {
        failures: Vec::new(),
    };
    let s = Duration::from_secs;
    gate.run(
        1,
        "Cremona projective degrees (1,2,1)",
        s(5),
        criterion_cremona,
    );
    gate.run(
        2,
        "twisted cubic projective degrees (3,1)",
        s(2),
        criterion_twisted_cubic,
    );
    gate.run(
        3,
        "Gorenstein height 3 degrees (3,4,2,1) on 5 seeds",
        s(300),
        || criterion_gorenstein(s(60)),
    );
    gate.run(
        4,
        "full-ring series and Hilbert polynomial",
        s(1),
        criterion_full_ring,
    );
    gate.run(5, "diagonal of P1xP1 tables", s(1), criterion_diagonal);
    gate.run(
        6,
        "irrelevant ideal negative types",
        s(1),
        criterion_irrelevant,
    );
    gate.run(
        7,
        "property suite on 24 random monomial ideals",
        s(60),
        criterion_properties,
    );
    gate.run(8, "slicing point counts", s(120), criterion_slicing);
    gate.run(
        9,
        "slicing drop by filter-regular forms",
        s(60),
        criterion_drop,
    );
    gate.run(
        10,
        "saturated fiber multiplicity equals d_0",
        s(120),
        criterion_satfiber,
    );
    let elapsed = total.elapsed();
    let within = elapsed <= s(480);
    println!(
        "[all] {} full run in {elapsed:.2?} (limit 480s)",
        if within { "PASS" } else { "FAIL" }
    );
    assert!(within, "acceptance run exceeded 8 minutes");
    assert!(
        gate.failures.is_empty(),
        "failed criteria: {:?}",
        gate.failures
    );
}
