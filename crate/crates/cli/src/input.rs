use serde::Deserialize;

use multideg::{
    parse_polynomial, Block, Ideal, MatrixKind, Multidegree, Polynomial, PresentationMatrix,
    RationalMapSpec, RingSpec,
};

use crate::Failure;

/// `{"characteristic", "blocks": [{"name", "vars"}], "ideal", "shift"?}`.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IdealInput {
    pub characteristic: u64,
    pub blocks: Vec<BlockInput>,
    pub ideal: Vec<String>,
    #[serde(default)]
    pub shift: Option<Vec<i64>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BlockInput {
    pub name: String,
    pub vars: Vec<String>,
}

/// `{"characteristic", "vars", "map", "matrix"?: {"entries", "kind"}}`.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapInput {
    pub characteristic: u64,
    pub vars: Vec<String>,
    pub map: Vec<String>,
    #[serde(default)]
    pub matrix: Option<MatrixInput>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixInput {
    pub entries: Vec<Vec<String>>,
    pub kind: MatrixKindInput,
}

#[derive(Debug, Clone, Copy, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum MatrixKindInput {
    HilbertBurch,
    Alternating,
}

pub fn parse_json<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T, Failure> {
    serde_json::from_str(text).map_err(|e| Failure::Usage(format!("malformed input: {e}")))
}

impl IdealInput {
    pub fn build(&self, pair_budget: Option<usize>) -> Result<Ideal, Failure> {
        let blocks = self
            .blocks
            .iter()
            .map(|b| Block {
                name: b.name.clone(),
                vars: b.vars.clone(),
            })
            .collect();
        let ring = RingSpec::new(self.characteristic, blocks)?;
        let gens = self
            .ideal
            .iter()
            .map(|g| parse_polynomial(g, &ring))
            .collect::<multideg::Result<Vec<_>>>()?;
        let mut ideal = Ideal::new(&ring, gens);
        if let Some(shift) = &self.shift {
            if shift.len() != ring.r() {
                return Err(Failure::Usage(format!(
                    "shift has {} entries, ring has {} blocks",
                    shift.len(),
                    ring.r()
                )));
            }
            ideal = ideal.with_shift(Multidegree(shift.clone()));
        }
        if let Some(b) = pair_budget {
            ideal = ideal.with_pair_budget(b);
        }
        Ok(ideal)
    }
}

impl MapInput {
    /// The source ring and the forms, without the constraints of a map.
    pub fn build_forms(&self) -> Result<(RingSpec, Vec<Polynomial>), Failure> {
        let vars: Vec<&str> = self.vars.iter().map(String::as_str).collect();
        let ring = RingSpec::from_names(self.characteristic, &[&vars])?;
        let forms = self
            .map
            .iter()
            .map(|f| parse_polynomial(f, &ring))
            .collect::<multideg::Result<Vec<_>>>()?;
        Ok((ring, forms))
    }

    pub fn build(&self, pair_budget: Option<usize>) -> Result<RationalMapSpec, Failure> {
        let vars: Vec<&str> = self.vars.iter().map(String::as_str).collect();
        let forms: Vec<&str> = self.map.iter().map(String::as_str).collect();
        let map = RationalMapSpec::parse(self.characteristic, &vars, &forms)?;
        Ok(match pair_budget {
            Some(b) => map.with_pair_budget(b),
            None => map,
        })
    }

    pub fn build_matrix(&self, ring: &RingSpec) -> Result<Option<PresentationMatrix>, Failure> {
        let Some(m) = &self.matrix else {
            return Ok(None);
        };
        let entries = m
            .entries
            .iter()
            .map(|row| {
                row.iter()
                    .map(|e| parse_polynomial(e, ring))
                    .collect::<multideg::Result<Vec<_>>>()
            })
            .collect::<multideg::Result<Vec<_>>>()?;
        let kind = match m.kind {
            MatrixKindInput::HilbertBurch => MatrixKind::HilbertBurch,
            MatrixKindInput::Alternating => MatrixKind::Alternating,
        };
        Ok(Some(PresentationMatrix::new(entries, kind)?))
    }
}
