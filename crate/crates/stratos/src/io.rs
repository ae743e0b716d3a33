//! Versioned JSON schemas for the CLI input documents.
//!
//! Every document carries a `schema` tag; unknown fields are rejected.

use std::collections::BTreeMap;
use std::str::FromStr;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::alexandroff::Space;
use crate::error::{Error, Result};
use crate::order::{MonotoneMap, Proset};
use crate::rational::{MonomialLaw, ParametricFamily};
use crate::stratify::Decomposition;

pub const POSET_SCHEMA: &str = "stratos.poset/1";
pub const SPACE_SCHEMA: &str = "stratos.space/1";
pub const DECOMPOSITION_SCHEMA: &str = "stratos.decomposition/1";
pub const MAP_SCHEMA: &str = "stratos.map/1";
pub const FAMILY_SCHEMA: &str = "stratos.family/1";

fn parse<'a, T: Deserialize<'a>>(s: &'a str) -> Result<T> {
    serde_json::from_str(s).map_err(|e| Error::InvalidInput(e.to_string()))
}

fn check_schema(got: &str, want: &str) -> Result<()> {
    if got != want {
        return Err(Error::InvalidInput(format!(
            "expected schema `{want}`, got `{got}`"
        )));
    }
    Ok(())
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PosetBody {
    pub elements: Vec<String>,
    #[serde(default)]
    pub relations: Vec<(String, String)>,
}

impl PosetBody {
    pub fn to_proset(&self) -> Result<Proset> {
        Proset::from_generating_pairs(&self.elements, &self.relations)
    }

    pub fn from_proset(p: &Proset) -> PosetBody {
        let mut relations = Vec::new();
        for i in 0..p.len() {
            for j in 0..p.len() {
                if i != j && p.leq(i, j) {
                    relations.push((p.label(i).to_owned(), p.label(j).to_owned()));
                }
            }
        }
        PosetBody {
            elements: p.elements().to_vec(),
            relations,
        }
    }
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PosetDoc {
    pub schema: String,
    pub elements: Vec<String>,
    #[serde(default)]
    pub relations: Vec<(String, String)>,
}

pub fn poset_from_json(s: &str) -> Result<Proset> {
    let doc: PosetDoc = parse(s)?;
    check_schema(&doc.schema, POSET_SCHEMA)?;
    Proset::from_generating_pairs(&doc.elements, &doc.relations)
}

pub fn poset_to_json(p: &Proset) -> String {
    let body = PosetBody::from_proset(p);
    let doc = PosetDoc {
        schema: POSET_SCHEMA.into(),
        elements: body.elements,
        relations: body.relations,
    };
    serde_json::to_string_pretty(&doc).expect("poset serializes")
}

/// A space either as an explicit open family or as the Alexandroff
/// space of a proset.
#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpaceBody {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub poset: Option<PosetBody>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub points: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub opens: Option<Vec<Vec<String>>>,
}

impl SpaceBody {
    pub fn to_space(&self) -> Result<Space> {
        match (&self.poset, &self.points, &self.opens) {
            (Some(body), None, None) => {
                let p = body.to_proset()?;
                if p.len() > 22 {
                    return Err(Error::InvalidInput(format!(
                        "at most 22 points for the Alexandroff form, got {}",
                        p.len()
                    )));
                }
                Ok(Space::from_proset(&p))
            }
            (None, Some(points), Some(opens)) => {
                let index = |l: &str| -> Result<usize> {
                    points
                        .iter()
                        .position(|x| x == l)
                        .ok_or_else(|| Error::UnknownLabel(l.to_owned()))
                };
                let mut sets = Vec::with_capacity(opens.len());
                for open in opens {
                    let mut u = 0u64;
                    for l in open {
                        u |= 1 << index(l)?;
                    }
                    sets.push(u);
                }
                Space::new(points.clone(), sets)
            }
            _ => Err(Error::InvalidInput(
                "space needs either `poset` or both `points` and `opens`".into(),
            )),
        }
    }
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpaceDoc {
    pub schema: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub poset: Option<PosetBody>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub points: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub opens: Option<Vec<Vec<String>>>,
}

pub fn space_from_json(s: &str) -> Result<Space> {
    let doc: SpaceDoc = parse(s)?;
    check_schema(&doc.schema, SPACE_SCHEMA)?;
    SpaceBody {
        poset: doc.poset,
        points: doc.points,
        opens: doc.opens,
    }
    .to_space()
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PieceBody {
    pub label: String,
    pub members: Vec<String>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DecompositionDoc {
    pub schema: String,
    pub space: SpaceBody,
    pub pieces: Vec<PieceBody>,
}

pub fn decomposition_from_json(s: &str) -> Result<Decomposition> {
    let doc: DecompositionDoc = parse(s)?;
    check_schema(&doc.schema, DECOMPOSITION_SCHEMA)?;
    let space = doc.space.to_space()?;
    let mut labels = Vec::new();
    let mut pieces = Vec::new();
    for piece in &doc.pieces {
        let mut u = 0u64;
        for m in &piece.members {
            let i = space
                .index_of(m)
                .ok_or_else(|| Error::UnknownLabel(m.clone()))?;
            u |= 1 << i;
        }
        labels.push(piece.label.clone());
        pieces.push(u);
    }
    Decomposition::new(space, labels, pieces)
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapDoc {
    pub schema: String,
    pub source: PosetBody,
    pub target: PosetBody,
    /// Source label -> target label.
    pub assignment: BTreeMap<String, String>,
}

pub fn map_from_json(s: &str) -> Result<MonotoneMap> {
    let doc: MapDoc = parse(s)?;
    check_schema(&doc.schema, MAP_SCHEMA)?;
    let source = doc.source.to_proset()?;
    let target = doc.target.to_proset()?;
    let mut assignment = Vec::with_capacity(source.len());
    for l in source.elements() {
        let img = doc
            .assignment
            .get(l)
            .ok_or_else(|| Error::NotTotal(l.clone()))?;
        let j = target
            .index_of(img)
            .ok_or_else(|| Error::UnknownLabel(img.clone()))?;
        assignment.push(j);
    }
    MonotoneMap::new(source, target, assignment)
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoordBody {
    pub source: usize,
    pub exponents: Vec<u32>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RepresentativeBody {
    pub label: String,
    /// Exact rationals as strings, e.g. `"2"`, `"-1/3"`.
    pub value: Vec<String>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FamilyDoc {
    pub schema: String,
    pub dim: usize,
    pub params: usize,
    pub coords: Vec<CoordBody>,
    pub representatives: Vec<RepresentativeBody>,
}

pub fn family_from_json(s: &str) -> Result<ParametricFamily> {
    let doc: FamilyDoc = parse(s)?;
    check_schema(&doc.schema, FAMILY_SCHEMA)?;
    let law = MonomialLaw {
        params: doc.params,
        coords: doc
            .coords
            .iter()
            .map(|c| (c.source, c.exponents.clone()))
            .collect(),
    };
    let mut labels = Vec::new();
    let mut reps = Vec::new();
    for r in &doc.representatives {
        labels.push(r.label.clone());
        let mut point = Vec::with_capacity(r.value.len());
        for v in &r.value {
            point.push(
                BigRational::from_str(v)
                    .map_err(|e| Error::InvalidInput(format!("bad rational `{v}`: {e}")))?,
            );
        }
        reps.push(point);
    }
    ParametricFamily::new(doc.dim, law, labels, reps)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn poset_roundtrip() {
        let p = crate::alexandroff::pseudocircle();
        let json = poset_to_json(&p);
        let q = poset_from_json(&json).unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn unknown_fields_rejected() {
        let s = r#"{"schema":"stratos.poset/1","elements":["a"],"relations":[],"extra":1}"#;
        assert!(poset_from_json(s).is_err());
    }

    #[test]
    fn wrong_schema_rejected() {
        let s = r#"{"schema":"stratos.poset/2","elements":["a"],"relations":[]}"#;
        assert!(poset_from_json(s).is_err());
    }

    #[test]
    fn space_from_explicit_opens() {
        let s = r#"{"schema":"stratos.space/1","points":["a","b"],"opens":[["b"],["a","b"],[]]}"#;
        let sp = space_from_json(s).unwrap();
        assert!(sp.is_open(0b10));
        assert!(!sp.is_open(0b01));
    }

    #[test]
    fn space_from_poset_body() {
        let s = r#"{"schema":"stratos.space/1","poset":{"elements":["a","b"],"relations":[["a","b"]]}}"#;
        let sp = space_from_json(s).unwrap();
        assert_eq!(sp.opens(), &[0b00, 0b10, 0b11]);
    }

    #[test]
    fn space_needs_exactly_one_form() {
        let s = r#"{"schema":"stratos.space/1","points":["a"]}"#;
        assert!(space_from_json(s).is_err());
    }

    #[test]
    fn decomposition_parses() {
        let s = r#"{
          "schema":"stratos.decomposition/1",
          "space":{"poset":{"elements":["a","b","c","d"],
            "relations":[["a","c"],["a","d"],["b","c"],["b","d"]]}},
          "pieces":[{"label":"min","members":["a","b"]},
                    {"label":"max","members":["c","d"]}]
        }"#;
        let d = decomposition_from_json(s).unwrap();
        assert!(d.is_stratification().all_hold());
    }

    #[test]
    fn map_parses_and_validates() {
        let s = r#"{
          "schema":"stratos.map/1",
          "source":{"elements":["a","b"],"relations":[["a","b"]]},
          "target":{"elements":["x","y"],"relations":[["x","y"]]},
          "assignment":{"a":"x","b":"y"}
        }"#;
        let m = map_from_json(s).unwrap();
        assert_eq!(m.assignment, vec![0, 1]);
        let bad = s.replace(r#""a":"x","b":"y""#, r#""a":"y","b":"x""#);
        assert!(map_from_json(&bad).is_err()); // order reversed
    }

    #[test]
    fn family_parses() {
        let s = r#"{
          "schema":"stratos.family/1",
          "dim":2,"params":2,
          "coords":[{"source":0,"exponents":[1,0]},{"source":1,"exponents":[0,1]}],
          "representatives":[{"label":"o","value":["0","0"]},
                             {"label":"i","value":["1","1/2"]}]
        }"#;
        let f = family_from_json(s).unwrap();
        assert_eq!(f.dim, 2);
        assert_eq!(f.representatives[1][1], BigRational::new(1.into(), 2.into()));
    }
}
