//! JSON schemas for models, chains, and reports.
//!
//! All exact values travel as decimal strings `p/q` (or `p`); reports are
//! deterministic given the same seed and inputs, with the elapsed time as
//! the single wall-clock field.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::Rat;
use crate::fock::{build_monodromy, ChainSpec};
use crate::scalar::{AlphaOracle, AlphaTable, ChainAlpha, DrinfeldAlpha};

/// One chain site.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SiteJson {
    pub xi: String,
}

/// Chain specification: `{"rank": n, "c": "p/q", "sites": [{"xi": "p/q"}]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ChainJson {
    pub rank: usize,
    pub c: String,
    pub sites: Vec<SiteJson>,
}

impl ChainJson {
    pub fn to_spec(&self, cap: usize) -> Result<ChainSpec> {
        let c = Rat::parse(&self.c)?;
        let xi = self
            .sites
            .iter()
            .map(|s| Rat::parse(&s.xi))
            .collect::<Result<Vec<_>>>()?;
        Ok(ChainSpec::new(self.rank, c, xi).with_cap(cap))
    }
}

/// Per-color alpha data of a generalized model.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum AlphaJson {
    /// Point-to-value table; optional logarithmic-derivative values.
    Table {
        values: Vec<(String, String)>,
        #[serde(default, skip_serializing_if = "Vec::is_empty")]
        x: Vec<(String, String)>,
    },
    /// Roots of the monic classifying polynomial for this color.
    Drinfeld { roots: Vec<String> },
    /// Eigenvalue ratios of a concrete chain.
    Chain { sites: Vec<SiteJson> },
}

/// Model schema:
/// `{"rank": n, "c": "p/q", "alphas": [{"kind": "table"|"drinfeld"|"chain", ...}]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ModelJson {
    pub rank: usize,
    pub c: String,
    pub alphas: Vec<AlphaJson>,
}

/// Runtime alpha source assembled from a model file.
pub struct MixedAlpha {
    colors: Vec<ColorAlpha>,
}

enum ColorAlpha {
    Table(AlphaTable<Rat>),
    Drinfeld(DrinfeldAlpha),
    Chain(ChainAlpha),
}

impl MixedAlpha {
    /// The declared X values (tables only), as `(color, point, value)`.
    pub fn x_values(model: &ModelJson) -> Result<Vec<(usize, Rat, Rat)>> {
        let mut out = Vec::new();
        for (s, alpha) in model.alphas.iter().enumerate() {
            if let AlphaJson::Table { x, .. } = alpha {
                for (point, value) in x {
                    out.push((s, Rat::parse(point)?, Rat::parse(value)?));
                }
            }
        }
        Ok(out)
    }
}

impl ModelJson {
    pub fn build(&self, cap: usize) -> Result<MixedAlpha> {
        if self.alphas.len() != self.rank {
            return Err(Error::Parse(format!(
                "model declares {} alpha entries for rank {}",
                self.alphas.len(),
                self.rank
            )));
        }
        let c = Rat::parse(&self.c)?;
        let mut colors = Vec::with_capacity(self.rank);
        for (s, alpha) in self.alphas.iter().enumerate() {
            let color = match alpha {
                AlphaJson::Table { values, .. } => {
                    let mut table = AlphaTable::new(vec![Vec::new(); self.rank]);
                    for (point, value) in values {
                        table.insert(s, Rat::parse(point)?, Rat::parse(value)?);
                    }
                    ColorAlpha::Table(table)
                }
                AlphaJson::Drinfeld { roots } => {
                    let roots = roots.iter().map(|r| Rat::parse(r)).collect::<Result<Vec<_>>>()?;
                    let mut all = vec![Vec::new(); self.rank];
                    all[s] = roots;
                    ColorAlpha::Drinfeld(DrinfeldAlpha::new(c.clone(), all))
                }
                AlphaJson::Chain { sites } => {
                    let chain = ChainJson { rank: self.rank, c: self.c.clone(), sites: sites.clone() };
                    let monodromy = build_monodromy(&chain.to_spec(cap)?)?;
                    ColorAlpha::Chain(monodromy.chain_alpha())
                }
            };
            colors.push(color);
        }
        Ok(MixedAlpha { colors })
    }
}

impl AlphaOracle<Rat> for MixedAlpha {
    fn alpha(&self, color: usize, point: &Rat) -> Result<Rat> {
        match self.colors.get(color) {
            None => Err(Error::IndexOutOfRange(format!("alpha color {color}"))),
            Some(ColorAlpha::Table(t)) => t.alpha(color, point),
            Some(ColorAlpha::Drinfeld(d)) => d.alpha(color, point),
            Some(ColorAlpha::Chain(ch)) => ch.alpha(color, point),
        }
    }
}

/// One line of a report.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ResultJson {
    pub name: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pass: Option<bool>,
    pub details: String,
}

/// Machine-readable run report.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ReportJson {
    pub command: String,
    pub inputs_digest: String,
    pub results: Vec<ResultJson>,
    pub elapsed_ms: u64,
}

/// Norm-command input: collection, X values, on-shell flag, optional
/// float direction.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct NormInputJson {
    pub rank: usize,
    pub c: String,
    pub u: Vec<Vec<String>>,
    pub x: Vec<Vec<String>>,
    #[serde(default = "default_true")]
    pub onshell: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub direction: Option<Vec<Vec<String>>>,
}

fn default_true() -> bool {
    true
}

pub fn parse_rat_matrix(m: &[Vec<String>]) -> Result<Vec<Vec<Rat>>> {
    m.iter()
        .map(|row| row.iter().map(|v| Rat::parse(v)).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{rat, ri};

    #[test]
    fn model_round_trip() {
        let text = r#"{
            "rank": 2,
            "c": "1",
            "alphas": [
                {"kind": "table", "values": [["0", "2"], ["1/2", "5"]]},
                {"kind": "drinfeld", "roots": ["3", "-1/2"]}
            ]
        }"#;
        let model: ModelJson = serde_json::from_str(text).unwrap();
        let alpha = model.build(3125).unwrap();
        assert_eq!(alpha.alpha(0, &rat(1, 2)).unwrap(), ri(5));
        assert!(alpha.alpha(1, &ri(0)).is_ok());
        assert!(alpha.alpha(0, &ri(9)).is_err());
    }

    #[test]
    fn chain_model() {
        let text = r#"{
            "rank": 1,
            "c": "1",
            "alphas": [
                {"kind": "chain", "sites": [{"xi": "0"}]}
            ]
        }"#;
        let model: ModelJson = serde_json::from_str(text).unwrap();
        let alpha = model.build(3125).unwrap();
        // alpha_0(2) = (2 + 1/2)/(2 - 1/2) = 5/3
        assert_eq!(alpha.alpha(0, &ri(2)).unwrap(), rat(5, 3));
    }
}
