//! Presentation matrices: signed maximal minors of Hilbert–Burch matrices,
//! submaximal pfaffians of alternating ones, and Fitting-ideal heights.

use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::hilbert::{dimension_of_monomials, leading_monomials};
use crate::poly::Polynomial;
use crate::ring::RingSpec;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatrixKind {
    /// `(n+1) × n`, generators are the signed maximal minors.
    HilbertBurch,
    /// Odd square alternating, generators are the submaximal pfaffians.
    Alternating,
}

/// Column degrees `μ_j` of a Hilbert–Burch matrix, or the common entry
/// degree `D` of an alternating one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DegreeData {
    ColumnDegrees(Vec<u64>),
    EntryDegree(u64),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PresentationMatrix {
    entries: Vec<Vec<Polynomial>>,
    kind: MatrixKind,
    degree_data: DegreeData,
}

impl PresentationMatrix {
    pub fn new(entries: Vec<Vec<Polynomial>>, kind: MatrixKind) -> Result<Self> {
        let rows = entries.len();
        let cols = entries.first().map_or(0, |r| r.len());
        if rows == 0 || entries.iter().any(|r| r.len() != cols) {
            return Err(Error::InvalidArgument(
                "matrix rows must be nonempty and of equal length".into(),
            ));
        }
        let degree_data = match kind {
            MatrixKind::HilbertBurch => {
                if rows != cols + 1 {
                    return Err(Error::InvalidArgument(format!(
                        "a Hilbert-Burch matrix is (n+1) x n, got {rows} x {cols}"
                    )));
                }
                let mut mus = Vec::with_capacity(cols);
                for j in 0..cols {
                    let column: Vec<&Polynomial> = entries.iter().map(|r| &r[j]).collect();
                    mus.push(common_degree(&column).ok_or_else(|| {
                        Error::InvalidArgument(format!(
                            "column {j} is not homogeneous of one degree"
                        ))
                    })?);
                }
                DegreeData::ColumnDegrees(mus)
            }
            MatrixKind::Alternating => {
                if rows != cols || rows.is_multiple_of(2) {
                    return Err(Error::NotAlternating(format!(
                        "an alternating presentation is odd square, got {rows} x {cols}"
                    )));
                }
                for i in 0..rows {
                    if !entries[i][i].is_zero() {
                        return Err(Error::NotAlternating(format!(
                            "diagonal entry {i} is nonzero"
                        )));
                    }
                    for j in i + 1..rows {
                        if entries[i][j] != -&entries[j][i] {
                            return Err(Error::NotAlternating(format!(
                                "entries ({i},{j}) and ({j},{i}) are not opposite"
                            )));
                        }
                    }
                }
                let all: Vec<&Polynomial> = entries.iter().flatten().collect();
                DegreeData::EntryDegree(common_degree(&all).ok_or_else(|| {
                    Error::InvalidArgument("entries are not homogeneous of one degree".into())
                })?)
            }
        };
        Ok(PresentationMatrix {
            entries,
            kind,
            degree_data,
        })
    }

    pub fn entries(&self) -> &[Vec<Polynomial>] {
        &self.entries
    }

    pub fn kind(&self) -> MatrixKind {
        self.kind
    }

    pub fn degree_data(&self) -> &DegreeData {
        &self.degree_data
    }

    pub fn rows(&self) -> usize {
        self.entries.len()
    }

    pub fn cols(&self) -> usize {
        self.entries[0].len()
    }

    /// The generators this matrix presents.
    pub fn generators(&self) -> Result<Vec<Polynomial>> {
        match self.kind {
            MatrixKind::HilbertBurch => maximal_minors(self),
            MatrixKind::Alternating => submaximal_pfaffians(self),
        }
    }
}

/// Common total degree of the nonzero entries; `None` if they disagree or
/// all vanish.
fn common_degree(polys: &[&Polynomial]) -> Option<u64> {
    let mut deg = None;
    for p in polys {
        for (_, m) in p.terms() {
            if *deg.get_or_insert(m.degree()) != m.degree() {
                return None;
            }
        }
    }
    deg
}

fn zero_like(p: &Polynomial) -> Polynomial {
    Polynomial::zero(p.field(), p.nvars(), p.order())
}

fn one_like(p: &Polynomial) -> Polynomial {
    Polynomial::constant(p.field(), p.nvars(), p.order(), 1)
}

/// Determinant by cofactor expansion along the first row.
pub(crate) fn determinant(m: &[Vec<&Polynomial>]) -> Result<Polynomial> {
    let n = m.len();
    match n {
        0 => unreachable!("determinant of an empty matrix"),
        1 => return Ok(m[0][0].clone()),
        2 => return Ok(&m[0][0].try_mul(m[1][1])? - &m[0][1].try_mul(m[1][0])?),
        _ => {}
    }
    let mut acc = zero_like(m[0][0]);
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<&Polynomial>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(k, _)| *k != j)
                    .map(|(_, p)| *p)
                    .collect()
            })
            .collect();
        let term = m[0][j].try_mul(&determinant(&minor)?)?;
        acc = if j % 2 == 0 {
            &acc + &term
        } else {
            &acc - &term
        };
    }
    Ok(acc)
}

/// `f_i = (-1)^i det(M without row i)`.
pub fn maximal_minors(m: &PresentationMatrix) -> Result<Vec<Polynomial>> {
    if m.kind != MatrixKind::HilbertBurch {
        return Err(Error::InvalidArgument(
            "maximal minors need a Hilbert-Burch matrix".into(),
        ));
    }
    (0..m.rows())
        .map(|i| {
            let sub: Vec<Vec<&Polynomial>> = m
                .entries
                .iter()
                .enumerate()
                .filter(|(k, _)| *k != i)
                .map(|(_, row)| row.iter().collect())
                .collect();
            let d = determinant(&sub)?;
            Ok(if i % 2 == 0 { d } else { -&d })
        })
        .collect()
}

/// Pfaffian by expansion along the first row:
/// `Pf(A) = Σ_{j>0} (-1)^{j+1} a_{0j} Pf(A without rows/columns 0, j)`.
pub(crate) fn pfaffian(m: &[Vec<&Polynomial>], unit: &Polynomial) -> Result<Polynomial> {
    let n = m.len();
    if n == 0 {
        return Ok(unit.clone());
    }
    if n % 2 == 1 {
        return Ok(zero_like(unit));
    }
    let mut acc = zero_like(unit);
    for j in 1..n {
        if m[0][j].is_zero() {
            continue;
        }
        let keep: Vec<usize> = (1..n).filter(|&k| k != j).collect();
        let sub: Vec<Vec<&Polynomial>> = keep
            .iter()
            .map(|&r| keep.iter().map(|&c| m[r][c]).collect())
            .collect();
        let term = m[0][j].try_mul(&pfaffian(&sub, unit)?)?;
        acc = if j % 2 == 1 {
            &acc + &term
        } else {
            &acc - &term
        };
    }
    Ok(acc)
}

/// `f_i = (-1)^i Pf(M without row and column i)`.
pub fn submaximal_pfaffians(m: &PresentationMatrix) -> Result<Vec<Polynomial>> {
    if m.kind != MatrixKind::Alternating {
        return Err(Error::NotAlternating(
            "submaximal pfaffians need an alternating matrix".into(),
        ));
    }
    let n = m.rows();
    let unit = one_like(&m.entries[0][0]);
    (0..n)
        .map(|i| {
            let keep: Vec<usize> = (0..n).filter(|&k| k != i).collect();
            let sub: Vec<Vec<&Polynomial>> = keep
                .iter()
                .map(|&r| keep.iter().map(|&c| &m.entries[r][c]).collect())
                .collect();
            let p = pfaffian(&sub, &unit)?;
            Ok(if i % 2 == 0 { p } else { -&p })
        })
        .collect()
}

/// Ideal of all `k × k` minors; the unit ideal for `k <= 0`.
pub fn minors_ideal(ring: &RingSpec, m: &PresentationMatrix, k: i64) -> Result<Ideal> {
    if k <= 0 {
        return Ok(Ideal::unit(ring));
    }
    let k = k as usize;
    let (rows, cols) = (m.rows(), m.cols());
    if k > rows.min(cols) {
        return Ok(Ideal::zero(ring));
    }
    let mut gens = Vec::new();
    for rs in subsets(rows, k) {
        for cs in subsets(cols, k) {
            let sub: Vec<Vec<&Polynomial>> = rs
                .iter()
                .map(|&r| cs.iter().map(|&c| &m.entries[r][c]).collect())
                .collect();
            let d = determinant(&sub)?;
            if !d.is_zero() {
                gens.push(d);
            }
        }
    }
    Ok(Ideal::new(ring, gens))
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    go(0, n, k, &mut cur, &mut out);
    out
}

/// Height of an ideal of a polynomial ring: `nvars - dim`. `None` for the
/// unit ideal (infinite height).
pub fn height(ideal: &Ideal) -> Result<Option<usize>> {
    let n = ideal.ring().nvars();
    Ok(dimension_of_monomials(n, &leading_monomials(ideal)?)?.map(|d| n - d))
}

/// Height of `Fitt_i(I) = I_{n+1-i}(M)` for one `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FittingHeight {
    pub i: usize,
    pub minor_size: i64,
    /// `None` when the Fitting ideal is the whole ring.
    pub height: Option<usize>,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GConditionReport {
    pub s: usize,
    pub fitting: Vec<FittingHeight>,
    pub holds: bool,
}

/// Whether `ht Fitt_i(I) > i` for `1 <= i < s`, where `M` presents the
/// ideal generated by `generators` (checked up to nonzero scalars).
pub fn check_g_condition(
    ring: &RingSpec,
    generators: &[Polynomial],
    m: &PresentationMatrix,
    s: usize,
) -> Result<GConditionReport> {
    let regenerated = m.generators()?;
    if regenerated.len() != generators.len() {
        return Err(Error::PresentationMismatch(format!(
            "matrix presents {} generators, map has {}",
            regenerated.len(),
            generators.len()
        )));
    }
    let names = ring.var_names();
    for (i, (a, b)) in regenerated.iter().zip(generators).enumerate() {
        if !same_up_to_scalar(a, b) {
            return Err(Error::PresentationMismatch(format!(
                "generator {i}: matrix gives {}, map has {}",
                a.render(&names),
                b.render(&names)
            )));
        }
    }
    let n_plus_1 = generators.len() as i64;
    let mut fitting = Vec::new();
    for i in 1..s {
        let minor_size = n_plus_1 - i as i64;
        let height = height(&minors_ideal(ring, m, minor_size)?)?;
        let passed = height.is_none_or(|h| h > i);
        fitting.push(FittingHeight {
            i,
            minor_size,
            height,
            passed,
        });
    }
    let holds = fitting.iter().all(|f| f.passed);
    Ok(GConditionReport { s, fitting, holds })
}

fn same_up_to_scalar(a: &Polynomial, b: &Polynomial) -> bool {
    if a.is_zero() || b.is_zero() {
        return a.is_zero() && b.is_zero();
    }
    a.monic() == b.with_order(a.order()).monic()
}
