//! Standard multigraded polynomial rings `k[x_{1,*}] ⊗ ... ⊗ k[x_{r,*}]`.

use std::collections::HashSet;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::error::{Error, Result};
use crate::field::Fp;

/// An integer vector of length `r` (one entry per grading block).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Multidegree(pub Vec<i64>);

impl Multidegree {
    pub fn zero(r: usize) -> Self {
        Multidegree(vec![0; r])
    }

    /// The unit vector `e_i`.
    pub fn unit(r: usize, i: usize) -> Self {
        let mut v = vec![0; r];
        v[i] = 1;
        Multidegree(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }

    /// Componentwise `self >= other`.
    pub fn dominates(&self, other: &Multidegree) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a >= b)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&a| a >= 0)
    }
}

impl From<Vec<i64>> for Multidegree {
    fn from(v: Vec<i64>) -> Self {
        Multidegree(v)
    }
}

impl Add for &Multidegree {
    type Output = Multidegree;
    fn add(self, rhs: &Multidegree) -> Multidegree {
        Multidegree(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Multidegree {
    type Output = Multidegree;
    fn sub(self, rhs: &Multidegree) -> Multidegree {
        Multidegree(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Multidegree {
    type Output = Multidegree;
    fn neg(self) -> Multidegree {
        Multidegree(self.0.iter().map(|a| -a).collect())
    }
}

impl fmt::Display for Multidegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, ")")
    }
}

/// One grading block: the coordinates of a single projective factor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    pub name: String,
    pub vars: Vec<String>,
}

/// A standard `N^r`-graded polynomial ring over `F_p`.
///
/// Variables are numbered globally in block order; variable `0` is the
/// largest one for every term order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingSpec {
    field: Fp,
    blocks: Vec<Block>,
    block_of: Vec<usize>,
    starts: Vec<usize>,
}

impl RingSpec {
    pub fn new(characteristic: u64, blocks: Vec<Block>) -> Result<Self> {
        let field = Fp::new(characteristic)?;
        if blocks.is_empty() {
            return Err(Error::InvalidRing("at least one block is required".into()));
        }
        let mut seen = HashSet::new();
        let mut block_of = Vec::new();
        let mut starts = Vec::new();
        for (i, b) in blocks.iter().enumerate() {
            if b.vars.is_empty() {
                return Err(Error::InvalidRing(format!("block `{}` is empty", b.name)));
            }
            starts.push(block_of.len());
            for v in &b.vars {
                if !is_identifier(v) {
                    return Err(Error::InvalidRing(format!(
                        "`{v}` is not a valid variable name"
                    )));
                }
                if !seen.insert(v.clone()) {
                    return Err(Error::InvalidRing(format!("variable `{v}` declared twice")));
                }
                block_of.push(i);
            }
        }
        Ok(RingSpec {
            field,
            blocks,
            block_of,
            starts,
        })
    }

    /// Convenience constructor: blocks named `b0, b1, ...`.
    pub fn from_names(characteristic: u64, blocks: &[&[&str]]) -> Result<Self> {
        let blocks = blocks
            .iter()
            .enumerate()
            .map(|(i, vs)| Block {
                name: format!("b{i}"),
                vars: vs.iter().map(|s| s.to_string()).collect(),
            })
            .collect();
        RingSpec::new(characteristic, blocks)
    }

    /// `k[x0..x{sizes[0]-1}] ⊗ k[y0..] ⊗ k[z0..] ...` with the conventional names.
    pub fn with_block_sizes(characteristic: u64, sizes: &[usize]) -> Result<Self> {
        const PREFIXES: [&str; 6] = ["x", "y", "z", "u", "v", "w"];
        let blocks = sizes
            .iter()
            .enumerate()
            .map(|(i, &n)| {
                let prefix = PREFIXES
                    .get(i)
                    .map(|s| s.to_string())
                    .unwrap_or_else(|| format!("v{i}_"));
                Block {
                    name: prefix.clone(),
                    vars: (0..n).map(|j| format!("{prefix}{j}")).collect(),
                }
            })
            .collect();
        RingSpec::new(characteristic, blocks)
    }

    pub fn field(&self) -> Fp {
        self.field
    }

    pub fn characteristic(&self) -> u32 {
        self.field.characteristic()
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    /// Number of grading blocks `r`.
    pub fn r(&self) -> usize {
        self.blocks.len()
    }

    pub fn nvars(&self) -> usize {
        self.block_of.len()
    }

    pub fn block_of(&self, var: usize) -> usize {
        self.block_of[var]
    }

    /// Global variable indices of block `i`.
    pub fn block_range(&self, i: usize) -> std::ops::Range<usize> {
        let start = self.starts[i];
        start..start + self.blocks[i].vars.len()
    }

    /// Block sizes `D_i = d_i + 1`.
    pub fn block_sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(|b| b.vars.len()).collect()
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.blocks
            .iter()
            .flat_map(|b| b.vars.iter())
            .position(|v| v == name)
    }

    pub fn var_name(&self, i: usize) -> &str {
        let b = self.block_of[i];
        &self.blocks[b].vars[i - self.starts[b]]
    }

    pub fn var_names(&self) -> Vec<String> {
        self.blocks
            .iter()
            .flat_map(|b| b.vars.iter().cloned())
            .collect()
    }

    /// Per-block exponent sums of an exponent vector.
    pub fn degree_of(&self, exps: &[u32]) -> Multidegree {
        let mut d = vec![0i64; self.r()];
        for (v, &e) in exps.iter().enumerate() {
            d[self.block_of[v]] += e as i64;
        }
        Multidegree(d)
    }
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}
