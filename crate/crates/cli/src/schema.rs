//! JSON shapes for groups, forms, rings, data and characters, with
//! conversions to and from the core types.

use braidforge_core::abelian::{canonical_form, FinAbGroup};
use braidforge_core::cyclotomic::{CycloNum, RootExp};
use braidforge_core::fusion::FusionRing;
use braidforge_core::premodular::PreModularDatum;
use braidforge_core::qform::PreMetricGroup;
use braidforge_core::rational::{format_q, parse_q};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupJson {
    pub orders: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QFormJson {
    pub group: GroupJson,
    pub values: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RingJson {
    pub labels: Vec<String>,
    pub unit: usize,
    pub dual: Vec<usize>,
    #[serde(rename = "N")]
    pub n: Vec<Vec<Vec<u32>>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CycloJson {
    pub conductor: u64,
    pub coeffs: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DatumJson {
    pub ring: RingJson,
    pub twists: Vec<String>,
    pub dims: Vec<CycloJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CharacterJson {
    pub chi: Vec<i64>,
}

fn root(s: &str) -> Result<RootExp, CliError> {
    parse_q(s)
        .as_ref()
        .and_then(RootExp::from_q)
        .ok_or_else(|| CliError::Schema(format!("`{s}` is not a fraction a/b")))
}

/// Invariant-factor form of the presentation, with the map taking each
/// element of the presentation (in its own lexicographic order) to its
/// index in the canonical group.
fn canonical_group(g: &GroupJson) -> Result<(FinAbGroup, Vec<usize>), CliError> {
    let (group, hom) = canonical_form(&g.orders)?;
    let mut map = Vec::with_capacity(group.size());
    let mut coords = vec![0u64; g.orders.len()];
    loop {
        map.push(hom.apply_coords(&coords));
        // odometer with the last coordinate fastest
        let mut i = coords.len();
        loop {
            if i == 0 {
                return Ok((group, map));
            }
            i -= 1;
            coords[i] += 1;
            if coords[i] < g.orders[i] {
                break;
            }
            coords[i] = 0;
        }
    }
}

impl GroupJson {
    pub fn to_group(&self) -> Result<FinAbGroup, CliError> {
        Ok(canonical_group(self)?.0)
    }

    pub fn from_group(g: &FinAbGroup) -> Self {
        GroupJson {
            orders: g.orders().to_vec(),
        }
    }
}

impl QFormJson {
    pub fn to_form(&self) -> Result<PreMetricGroup, CliError> {
        let (group, map) = canonical_group(&self.group)?;
        if self.values.len() != group.size() {
            return Err(CliError::Schema(format!(
                "values has {} entries, the group has {} elements",
                self.values.len(),
                group.size()
            )));
        }
        let mut values = vec![RootExp::zero(); group.size()];
        for (v, &i) in self.values.iter().zip(&map) {
            values[i] = root(v)?;
        }
        Ok(PreMetricGroup::validate(group, values)?)
    }

    pub fn from_form(m: &PreMetricGroup) -> Self {
        QFormJson {
            group: GroupJson::from_group(m.group()),
            values: m.values().iter().map(ToString::to_string).collect(),
        }
    }
}

impl RingJson {
    pub fn to_ring(&self) -> Result<FusionRing, CliError> {
        Ok(FusionRing::validate(
            self.labels.clone(),
            self.unit,
            self.dual.clone(),
            self.n.clone(),
        )?)
    }

    pub fn from_ring(r: &FusionRing) -> Self {
        RingJson {
            labels: r.labels().to_vec(),
            unit: r.unit(),
            dual: r.duals().to_vec(),
            n: r.table(),
        }
    }
}

impl CycloJson {
    pub fn to_num(&self) -> Result<CycloNum, CliError> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| parse_q(c).ok_or_else(|| CliError::Schema(format!("`{c}` is not a rational"))))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(CycloNum::from_coeffs(self.conductor, coeffs)?)
    }

    pub fn from_num(x: &CycloNum) -> Self {
        CycloJson {
            conductor: x.conductor(),
            coeffs: x.coeffs().iter().map(format_q).collect(),
        }
    }
}

impl DatumJson {
    pub fn to_datum(&self) -> Result<PreModularDatum, CliError> {
        let ring = self.ring.to_ring()?;
        let twists = self.twists.iter().map(|t| root(t)).collect::<Result<_, _>>()?;
        let dims = self.dims.iter().map(CycloJson::to_num).collect::<Result<_, _>>()?;
        Ok(PreModularDatum::build(ring, twists, dims)?)
    }

    pub fn from_datum(d: &PreModularDatum) -> Self {
        DatumJson {
            ring: RingJson::from_ring(d.ring()),
            twists: d.twists().iter().map(ToString::to_string).collect(),
            dims: d.dims().iter().map(CycloJson::from_num).collect(),
        }
    }
}

pub fn read_json<T: serde::de::DeserializeOwned>(path: &std::path::Path) -> Result<T, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Schema(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| CliError::Schema(format!("{}: {e}", path.display())))
}
