//! The JSON complex format: `{"name": ..., "facets": [[1,2],...],
//! "colors": {"1": 1, ...}}`, with `name` and `colors` optional.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::balanced::Coloring;
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::face::{Vertex, MAX_VERTICES};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub facets: Vec<Vec<Vertex>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub colors: Option<BTreeMap<Vertex, u32>>,
}

/// A parsed file: canonical complex plus validated coloring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LoadedComplex {
    pub name: Option<String>,
    pub complex: SimplicialComplex,
    pub coloring: Option<Coloring>,
}

impl ComplexFile {
    pub fn from_complex(c: &SimplicialComplex, name: Option<String>, coloring: Option<&Coloring>) -> Self {
        ComplexFile {
            name,
            facets: c.facet_labels(),
            colors: coloring.map(|k| k.as_map().clone()),
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain data serializes")
    }

    /// Validates labels against `cap` and the coloring against the complex.
    pub fn load_capped(&self, cap: u32) -> Result<LoadedComplex> {
        let complex = SimplicialComplex::from_labels_capped(&self.facets, cap)?;
        let coloring = match &self.colors {
            Some(m) => {
                let k = Coloring::new(m.clone());
                k.validate(&complex)?;
                Some(k)
            }
            None => None,
        };
        Ok(LoadedComplex {
            name: self.name.clone(),
            complex,
            coloring,
        })
    }

    pub fn load(&self) -> Result<LoadedComplex> {
        self.load_capped(MAX_VERTICES)
    }
}

/// Parses and validates in one step.
pub fn read_complex(text: &str, cap: u32) -> Result<LoadedComplex> {
    ComplexFile::parse(text)?.load_capped(cap)
}

pub fn write_complex(c: &SimplicialComplex, name: Option<&str>, coloring: Option<&Coloring>) -> String {
    ComplexFile::from_complex(c, name.map(str::to_string), coloring).to_json()
}
