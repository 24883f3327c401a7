//! Rational maps `P^d --> P^n`: Rees ideals, projective degrees, closed
//! formulas for perfect height-2 and Gorenstein height-3 base ideals, and
//! the saturated special fiber ring.

mod matrix;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

pub use matrix::{
    check_g_condition, height, maximal_minors, minors_ideal, submaximal_pfaffians, DegreeData,
    FittingHeight, GConditionReport, MatrixKind, PresentationMatrix,
};

use crate::error::{Error, Result};
use crate::groebner::{eliminate_prefix, Ideal, DEFAULT_PAIR_BUDGET};
use crate::hilbert::graded_piece_dim;
use crate::mgops::{
    irrelevant_saturation, mixed_mult_polynomial, prng, random_block_form, slice_degree,
    SliceReport,
};
use crate::monomial::{Monomial, TermOrder};
use crate::parse::parse_polynomial;
use crate::poly::Polynomial;
use crate::ring::{Block, Multidegree, RingSpec};

/// `F = (f_0 : ... : f_n) : P^d --> P^n` given by forms of a common degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMapSpec {
    source: RingSpec,
    generators: Vec<Polynomial>,
    delta: u64,
    pair_budget: usize,
}

impl RationalMapSpec {
    /// `source` must have a single block.
    pub fn new(source: &RingSpec, generators: Vec<Polynomial>) -> Result<Self> {
        if source.r() != 1 {
            return Err(Error::InvalidArgument(
                "the source of a map is a single projective space".into(),
            ));
        }
        let names = source.var_names();
        let mut delta = None;
        for f in &generators {
            assert_eq!(f.nvars(), source.nvars(), "generator from a different ring");
            for (_, m) in f.terms() {
                if *delta.get_or_insert(m.degree()) != m.degree() {
                    return Err(Error::NotHomogeneous(format!(
                        "{} (all forms must share one degree)",
                        f.render(&names)
                    )));
                }
            }
        }
        let Some(delta) = delta else {
            return Err(Error::InvalidArgument(
                "all forms of the map are zero".into(),
            ));
        };
        if generators.len() < source.nvars() {
            return Err(Error::InvalidArgument(format!(
                "need n >= d, got {} forms on P^{}",
                generators.len(),
                source.nvars() - 1
            )));
        }
        Ok(RationalMapSpec {
            source: source.clone(),
            generators: generators
                .into_iter()
                .map(|g| g.with_order(TermOrder::DegRevLex))
                .collect(),
            delta,
            pair_budget: DEFAULT_PAIR_BUDGET,
        })
    }

    pub fn parse(characteristic: u64, vars: &[&str], forms: &[&str]) -> Result<Self> {
        let source = RingSpec::from_names(characteristic, &[vars])?;
        let gens = forms
            .iter()
            .map(|f| parse_polynomial(f, &source))
            .collect::<Result<Vec<_>>>()?;
        RationalMapSpec::new(&source, gens)
    }

    pub fn with_pair_budget(mut self, budget: usize) -> Self {
        self.pair_budget = budget;
        self
    }

    pub fn source(&self) -> &RingSpec {
        &self.source
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    /// Dimension `d` of the source `P^d`.
    pub fn d(&self) -> usize {
        self.source.nvars() - 1
    }

    /// Dimension `n` of the target `P^n`.
    pub fn n(&self) -> usize {
        self.generators.len() - 1
    }

    pub fn delta(&self) -> u64 {
        self.delta
    }

    pub fn pair_budget(&self) -> usize {
        self.pair_budget
    }

    /// `k[x_0..x_d] ⊗ k[y_0..y_n]`, with target names chosen to avoid the
    /// source names.
    pub fn graph_ring(&self) -> RingSpec {
        let src = self.source.var_names();
        let prefix = ["y", "z", "w", "u", "v", "T", "Y"]
            .into_iter()
            .map(String::from)
            .chain((0..).map(|k| format!("y{k}_")))
            .find(|p| (0..=self.n()).all(|i| !src.contains(&format!("{p}{i}"))))
            .unwrap();
        let source_block = self.source.blocks()[0].clone();
        let target = Block {
            name: "target".into(),
            vars: (0..=self.n()).map(|i| format!("{prefix}{i}")).collect(),
        };
        RingSpec::new(
            self.source.characteristic() as u64,
            vec![source_block, target],
        )
        .expect("graph ring names are distinct")
    }
}

/// Kernel of `k[x][y] -> k[x][t]`, `y_i -> f_i t`, obtained by eliminating
/// `t` from `(y_i - t f_i)`.
pub fn rees_ideal(map: &RationalMapSpec) -> Result<Ideal> {
    let graph = map.graph_ring();
    let field = graph.field();
    let (nx, ny) = (map.d() + 1, map.n() + 1);
    let aux_n = 1 + nx + ny;
    let order = TermOrder::BlockElimination { block: 1 };
    let t = Polynomial::term(field, order, 1, Monomial::var(aux_n, 0, 1));
    // f_i embedded after t, before the y block
    let embed = |f: &Polynomial| -> Polynomial {
        let terms = f
            .terms()
            .iter()
            .map(|(c, m)| {
                let mut e = vec![0u32; aux_n];
                e[1..1 + nx].copy_from_slice(m.exponents());
                (*c, Monomial::from_exponents(&e).unwrap())
            })
            .collect();
        Polynomial::from_terms(field, aux_n, order, terms)
    };
    let t_f: Vec<Polynomial> = map
        .generators
        .iter()
        .map(|f| t.try_mul(&embed(f)))
        .collect::<Result<_>>()?;
    let gens: Vec<Polynomial> = (0..ny)
        .map(|i| {
            let y = Polynomial::term(field, order, 1, Monomial::var(aux_n, 1 + nx + i, 1));
            &y - &t_f[i]
        })
        .collect();
    let kernel = eliminate_prefix(&gens, 1, map.pair_budget)?;

    // every generator must vanish under y_i -> t f_i
    let images: Vec<Polynomial> = (0..nx)
        .map(|j| Polynomial::term(field, order, 1, Monomial::var(aux_n, 1 + j, 1)))
        .chain(t_f.iter().cloned())
        .collect();
    let names = graph.var_names();
    for g in &kernel {
        if !g.substitute(&images)?.is_zero() {
            return Err(Error::Invariant(format!(
                "Rees generator {} does not vanish on the graph",
                g.render(&names)
            )));
        }
    }
    Ok(Ideal::new(&graph, kernel).with_pair_budget(map.pair_budget))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DegreeMethod {
    Elimination,
    Slicing,
    Formula,
}

/// `(d_0, ..., d_d)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProjectiveDegreeVector {
    pub degrees: Vec<BigUint>,
    pub method: DegreeMethod,
}

impl ProjectiveDegreeVector {
    pub fn new(degrees: Vec<BigUint>, method: DegreeMethod) -> Self {
        ProjectiveDegreeVector { degrees, method }
    }

    pub fn from_u64(degrees: &[u64], method: DegreeMethod) -> Self {
        Self::new(degrees.iter().map(|&x| BigUint::from(x)).collect(), method)
    }

    pub fn same_degrees(&self, other: &ProjectiveDegreeVector) -> bool {
        self.degrees == other.degrees
    }
}

/// `d_i = deg^{(i, d-i)}` of the graph, read from the Rees ideal.
pub fn projective_degrees(map: &RationalMapSpec) -> Result<ProjectiveDegreeVector> {
    let rees = rees_ideal(map)?;
    degrees_from_rees(&rees, map.d())
}

pub fn degrees_from_rees(rees: &Ideal, d: usize) -> Result<ProjectiveDegreeVector> {
    let table = mixed_mult_polynomial(rees)?;
    let degrees = (0..=d)
        .map(|i| table.get(&[i as i64, (d - i) as i64]))
        .collect();
    Ok(ProjectiveDegreeVector::new(
        degrees,
        DegreeMethod::Elimination,
    ))
}

/// Projective degrees by cutting the graph with random hyperplanes; a degree
/// is the majority count over verified trials (0 when none verified).
pub fn projective_degrees_by_slicing(
    map: &RationalMapSpec,
    seed: u64,
    trials: usize,
) -> Result<(ProjectiveDegreeVector, Vec<SliceReport>)> {
    let rees = rees_ideal(map)?;
    let d = map.d();
    let mut reports = Vec::with_capacity(d + 1);
    for i in 0..=d {
        let n = [i as i64, (d - i) as i64];
        let trial_seed = seed.wrapping_add(i as u64);
        reports.push(slice_degree(&rees, &n, trial_seed, trials)?);
    }
    let degrees = reports
        .iter()
        .map(|r| BigUint::from(r.point_count.unwrap_or(0)))
        .collect();
    Ok((
        ProjectiveDegreeVector::new(degrees, DegreeMethod::Slicing),
        reports,
    ))
}

/// Elementary symmetric polynomial `e_k(μ)`.
pub fn elementary_symmetric(k: usize, mu: &[u64]) -> BigUint {
    // e_0..e_k by the usual recurrence over the arguments
    let mut e = vec![BigUint::zero(); k + 1];
    e[0] = BigUint::one();
    for &m in mu {
        for j in (1..=k).rev() {
            let prev = e[j - 1].clone();
            e[j] += prev * m;
        }
    }
    e[k].clone()
}

/// Perfect height-2 base ideal with column degrees `μ`:
/// `d_i = e_{d-i}(μ_1, ..., μ_n)`.
pub fn formula_perfect_ht2(d: usize, mu: &[u64]) -> ProjectiveDegreeVector {
    let degrees = (0..=d).map(|i| elementary_symmetric(d - i, mu)).collect();
    ProjectiveDegreeVector::new(degrees, DegreeMethod::Formula)
}

/// Gorenstein height-3 base ideal with `n + 1` pfaffians of an alternating
/// matrix whose entries have degree `entry_degree`:
/// `d_i = D^{d-i} Σ_{k=0}^{⌊(n-d+i)/2⌋} C(n-1-2k, d-i-1)` for `i <= d-3`,
/// and `δ^{d-i}` otherwise.
pub fn formula_gorenstein_ht3(
    d: usize,
    n: usize,
    entry_degree: u64,
    delta: u64,
) -> Result<ProjectiveDegreeVector> {
    if n % 2 == 1 {
        return Err(Error::InvalidArgument(format!(
            "n + 1 = {} must be odd",
            n + 1
        )));
    }
    if 2 * delta != entry_degree * n as u64 {
        return Err(Error::InvalidArgument(format!(
            "delta = {delta} is not D*n/2 = {}*{n}/2",
            entry_degree
        )));
    }
    let mut degrees = Vec::with_capacity(d + 1);
    for i in 0..=d {
        let value = if i + 3 <= d {
            let top = n as i64 - d as i64 + i as i64;
            let mut sum = BigUint::zero();
            if top >= 0 {
                for k in 0..=(top / 2) {
                    sum += binomial_signed(n as i64 - 1 - 2 * k, (d - i) as i64 - 1);
                }
            }
            BigUint::from(entry_degree).pow((d - i) as u32) * sum
        } else {
            BigUint::from(delta).pow((d - i) as u32)
        };
        degrees.push(value);
    }
    Ok(ProjectiveDegreeVector::new(degrees, DegreeMethod::Formula))
}

/// `C(a, b)`, zero when `a < 0`, `b < 0` or `b > a`.
fn binomial_signed(a: i64, b: i64) -> BigUint {
    if a < 0 || b < 0 || b > a {
        return BigUint::zero();
    }
    let mut acc = BigUint::one();
    for i in 0..b as u64 {
        acc = acc * BigUint::from(a as u64 - i) / BigUint::from(i + 1);
    }
    acc
}

/// Alternating `size × size` matrix whose entries above the diagonal are
/// random linear forms in all variables of the (single-block) ring.
pub fn random_linear_alternating(
    ring: &RingSpec,
    size: usize,
    seed: u64,
) -> Result<PresentationMatrix> {
    let mut rng = prng(seed);
    let zero = Polynomial::zero_in(ring);
    let mut entries = vec![vec![zero; size]; size];
    for i in 0..size {
        for j in i + 1..size {
            let mut form = Polynomial::zero_in(ring);
            for b in 0..ring.r() {
                form = &form + &random_block_form(ring, b, &mut rng);
            }
            entries[j][i] = -&form;
            entries[i][j] = form;
        }
    }
    PresentationMatrix::new(entries, MatrixKind::Alternating)
}

/// `dims[q] = dim_k [(I^q : 𝔪^∞)]_{qδ}` for `q = 0..=q_max`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SatFiberTable {
    pub dims: Vec<u64>,
    /// `difference_profile[k]` is the `k`-th finite difference of `dims`.
    pub difference_profile: Vec<Vec<i64>>,
}

pub fn satfiber_dims(map: &RationalMapSpec, q_max: usize) -> Result<SatFiberTable> {
    if q_max == 0 {
        return Err(Error::InvalidArgument("q_max must be at least 1".into()));
    }
    let ring = map.source();
    let mut dims = vec![1u64];
    let mut power: Vec<Polynomial> = vec![Polynomial::constant(
        ring.field(),
        ring.nvars(),
        TermOrder::DegRevLex,
        1,
    )];
    for q in 1..=q_max {
        let mut next: Vec<Polynomial> = Vec::new();
        for g in &power {
            for f in &map.generators {
                let p = g.try_mul(f)?;
                if !p.is_zero() && !next.contains(&p) {
                    next.push(p);
                }
            }
        }
        power = next;
        let ideal = Ideal::new(ring, power.clone()).with_pair_budget(map.pair_budget);
        let sat = irrelevant_saturation(&ideal)?;
        let deg = q as u64 * map.delta;
        let quotient = graded_piece_dim(&sat, &Multidegree(vec![deg as i64]))?;
        let ambient = binomial_u64(deg + map.d() as u64, map.d() as u64)?;
        dims.push(ambient - quotient);
    }
    let mut difference_profile = vec![dims.iter().map(|&x| x as i64).collect::<Vec<_>>()];
    for _ in 0..=map.d() {
        let last = difference_profile.last().unwrap();
        let next: Vec<i64> = last.windows(2).map(|w| w[1] - w[0]).collect();
        difference_profile.push(next);
    }
    Ok(SatFiberTable {
        dims,
        difference_profile,
    })
}

fn binomial_u64(n: u64, k: u64) -> Result<u64> {
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return Err(Error::InvalidArgument(format!(
                "C({n}, {k}) exceeds 64 bits"
            )));
        }
    }
    Ok(acc as u64)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SatFiberCheck {
    pub table: SatFiberTable,
    /// Whether the `d`-th differences are constant over the window.
    pub stabilized: bool,
    pub window: usize,
    pub inferred_e: Option<BigInt>,
    pub d0_elimination: BigUint,
    pub agree: bool,
}

/// Compare `d_0` with the multiplicity of the saturated special fiber ring,
/// read as the stable value of the `d`-th differences of `satfiber_dims`
/// over the last `⌈q_max/2⌉` entries.
pub fn satfiber_d0_check(map: &RationalMapSpec, q_max: usize) -> Result<SatFiberCheck> {
    let d = map.d();
    if q_max < d + 2 {
        return Err(Error::InvalidArgument(format!(
            "q_max = {q_max} must be at least d + 2 = {}",
            d + 2
        )));
    }
    let table = satfiber_dims(map, q_max)?;
    let diffs = &table.difference_profile[d];
    let window = q_max.div_ceil(2).min(diffs.len());
    let tail = &diffs[diffs.len() - window..];
    let stabilized = tail.windows(2).all(|w| w[0] == w[1]);
    let inferred_e = stabilized.then(|| BigInt::from(tail[0]));
    let d0_elimination = projective_degrees(map)?.degrees[0].clone();
    let agree = inferred_e
        .as_ref()
        .is_some_and(|e| *e == BigInt::from(d0_elimination.clone()));
    Ok(SatFiberCheck {
        table,
        stabilized,
        window,
        inferred_e,
        d0_elimination,
        agree,
    })
}
