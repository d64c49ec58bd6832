//! JSON formats for ideals and experiment configurations.
//!
//! An ideal is `{"vars": 3, "gens": ["x0*x2 - x1^2"]}`. A configuration
//! wraps one as `variety` and adds the polynomials, `N`, the place set and
//! the harness parameters; everything except `variety` and `polys` has a
//! default.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::harness::{BoundMode, ExperimentConfig};
use crate::ideals::{PolyIdeal, VarietySpec};
use crate::polyring::HomPoly;
use crate::qarith::{parse_rat, PlaceSet, Rat};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IdealJson {
    pub vars: usize,
    #[serde(default)]
    pub gens: Vec<String>,
}

impl IdealJson {
    pub fn to_ideal(&self) -> Result<PolyIdeal> {
        let gens: Vec<&str> = self.gens.iter().map(String::as_str).collect();
        PolyIdeal::parse(self.vars, &gens)
    }

    pub fn from_ideal(ideal: &PolyIdeal) -> Self {
        IdealJson {
            vars: ideal.num_vars(),
            gens: ideal.generators().iter().map(|g| g.to_string()).collect(),
        }
    }
}

/// A rational written either as a string (`"1/10"`) or as an integer.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RatJson {
    Text(String),
    Int(i64),
}

impl RatJson {
    fn to_rat(&self) -> Result<Rat> {
        match self {
            RatJson::Text(s) => parse_rat(s),
            RatJson::Int(n) => Ok(Rat::from_integer((*n).into())),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigJson {
    pub variety: IdealJson,
    pub polys: Vec<String>,
    /// Subgeneral-position index; defaults to `dim V`.
    #[serde(rename = "N", default, skip_serializing_if = "Option::is_none")]
    pub n_big: Option<usize>,
    /// Comma-separated places, default `inf,2,3,5`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub places: Option<String>,
    /// Default `1/10`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub epsilon: Option<RatJson>,
    /// Default 50.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub height_bound: Option<u64>,
    /// Default `main`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mode: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub description: Option<String>,
}

impl ConfigJson {
    pub fn polys(&self) -> Result<Vec<HomPoly>> {
        self.polys
            .iter()
            .map(|p| HomPoly::parse(p, self.variety.vars))
            .collect()
    }

    /// Builds the configuration without validating it.
    pub fn to_config(&self) -> Result<ExperimentConfig> {
        let variety = VarietySpec::new(self.variety.to_ideal()?)?;
        let n_big = self.n_big.unwrap_or(variety.dim());
        Ok(ExperimentConfig {
            polys: self.polys()?,
            places: match &self.places {
                Some(s) => PlaceSet::parse_list(s)?,
                None => PlaceSet::default_s(),
            },
            n_big,
            epsilon: match &self.epsilon {
                Some(e) => e.to_rat()?,
                None => Rat::new(1.into(), 10.into()),
            },
            height_bound: self.height_bound.unwrap_or(50),
            mode: match &self.mode {
                Some(m) => m.parse()?,
                None => BoundMode::Main,
            },
            seed: self.seed.unwrap_or(0),
            variety,
        })
    }
}

fn parse_json<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

pub fn parse_ideal_json(text: &str) -> Result<PolyIdeal> {
    parse_json::<IdealJson>(text)?.to_ideal()
}

pub fn parse_config_json(text: &str) -> Result<ConfigJson> {
    parse_json(text)
}

pub fn ideal_to_json(ideal: &PolyIdeal) -> String {
    serde_json::to_string(&IdealJson::from_ideal(ideal)).expect("plain data serializes")
}
