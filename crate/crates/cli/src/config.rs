//! Instance descriptions: JSON files, command-line overrides, and the
//! conversion into core data.

use std::path::Path;

use kisin_core::group::{Cochar, GroupShape, Perm, WeylElt};
use kisin_core::normal_form::alcove_reduce;
use kisin_core::{Error, FrobeniusDatum};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{CliError, CliResult};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CarusoSpec {
    pub m: i64,
}

/// Either Caruso's normal form or an explicit `u^tau w` with 1-based permutations.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum BSpec {
    Caruso { caruso: CarusoSpec },
    Explicit { tau: Vec<Vec<i64>>, w: Vec<Vec<usize>> },
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceConfig {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub f: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub eps: Option<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub b: Option<BSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mu: Option<Vec<Vec<i64>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub field_deg: Option<u32>,
    #[serde(default, rename = "box", skip_serializing_if = "Option::is_none")]
    pub box_bound: Option<i64>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub alcove_reduce: bool,
    /// Chain endpoints for `chain-gl3`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub from: Option<Vec<Vec<i64>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub to: Option<Vec<Vec<i64>>>,
}

/// Reads a config file. A report produced by this tool is accepted too; its
/// embedded `config` is used.
pub fn load(path: &Path) -> CliResult<InstanceConfig> {
    let text = std::fs::read_to_string(path)?;
    let value: Value = serde_json::from_str(&text)?;
    let inner = match value {
        Value::Object(ref map) if map.contains_key("schema") => {
            map.get("config").cloned().ok_or_else(|| CliError::Config("report has no config".into()))?
        }
        other => other,
    };
    Ok(serde_json::from_value(inner)?)
}

/// Parses `5,3,3,1`, `1,0,0;0,0,1`, or a JSON nested array.
pub fn parse_blocks<T: std::str::FromStr + serde::de::DeserializeOwned>(s: &str) -> CliResult<Vec<Vec<T>>> {
    let s = s.trim();
    if s.starts_with('[') {
        let v: Value = serde_json::from_str(s)?;
        return match v {
            Value::Array(ref items) if items.iter().all(Value::is_array) => Ok(serde_json::from_value(v)?),
            _ => Ok(vec![serde_json::from_value(v)?]),
        };
    }
    s.split(';')
        .map(|block| {
            block
                .split(',')
                .map(|x| x.trim().parse::<T>().map_err(|_| CliError::Config(format!("cannot parse {x:?} in {s:?}"))))
                .collect()
        })
        .collect()
}

pub fn parse_list(s: &str) -> CliResult<Vec<i64>> {
    let mut blocks = parse_blocks::<i64>(s)?;
    if blocks.len() != 1 {
        return Err(CliError::Config(format!("expected a flat list, got {s:?}")));
    }
    Ok(blocks.remove(0))
}

fn missing(what: &str) -> CliError {
    CliError::Config(format!("missing {what}"))
}

impl InstanceConfig {
    fn dims(&self) -> CliResult<(usize, usize)> {
        let explicit = match &self.b {
            Some(BSpec::Explicit { tau, .. }) => Some(tau),
            _ => None,
        };
        let n = self
            .n
            .or_else(|| self.mu.as_ref().and_then(|m| m.first()).map(Vec::len))
            .or_else(|| explicit.and_then(|t| t.first()).map(Vec::len))
            .ok_or_else(|| missing("n"))?;
        let f = self
            .f
            .or_else(|| self.eps.as_ref().map(Vec::len))
            .or_else(|| self.mu.as_ref().map(Vec::len))
            .or_else(|| explicit.map(Vec::len))
            .unwrap_or(1);
        Ok((n, f))
    }

    pub fn shape(&self) -> CliResult<GroupShape> {
        let p = self.p.ok_or_else(|| missing("p"))?;
        let (n, f) = self.dims()?;
        Ok(match &self.eps {
            Some(eps) => {
                if eps.len() != f {
                    return Err(CliError::Config(format!("eps has {} entries but f = {f}", eps.len())));
                }
                GroupShape::new(n, p, eps.clone())?
            }
            None => GroupShape::res(n, f, p)?,
        })
    }

    /// The Frobenius datum, always in the fundamental alcove. Caruso data are
    /// reduced automatically; explicit data only with `alcove_reduce`.
    pub fn datum(&self) -> CliResult<FrobeniusDatum> {
        let shape = self.shape()?;
        match self.b.as_ref().ok_or_else(|| missing("b (--m or --tau/--w)"))? {
            BSpec::Caruso { caruso } => {
                if shape.eps().iter().any(|&e| e != shape.p()) {
                    return Err(CliError::Config("Caruso data need every scale equal to p".into()));
                }
                Ok(FrobeniusDatum::caruso(shape.n(), shape.blocks(), shape.p(), caruso.m)?)
            }
            BSpec::Explicit { .. } => {
                let raw = self.raw_datum()?;
                if raw.alcove_ok() {
                    Ok(raw)
                } else if self.alcove_reduce {
                    Ok(alcove_reduce(&raw)?.1)
                } else {
                    Err(Error::NotInAlcove.into())
                }
            }
        }
    }

    /// The datum as given, before any alcove reduction.
    pub fn raw_datum(&self) -> CliResult<FrobeniusDatum> {
        let shape = self.shape()?;
        match self.b.as_ref().ok_or_else(|| missing("b (--m or --tau/--w)"))? {
            BSpec::Caruso { caruso } => {
                Ok(FrobeniusDatum::caruso_raw(shape.n(), shape.blocks(), shape.p(), caruso.m)?)
            }
            BSpec::Explicit { tau, w } => {
                let perms = w.iter().map(|images| Perm::from_one_based(images)).collect::<Result<Vec<_>, _>>()?;
                Ok(FrobeniusDatum::new(shape, Cochar::from_blocks(tau.clone())?, WeylElt::new(perms)?)?)
            }
        }
    }

    pub fn mu(&self) -> CliResult<Cochar> {
        Ok(Cochar::from_blocks(self.mu.clone().ok_or_else(|| missing("mu"))?)?)
    }
}
