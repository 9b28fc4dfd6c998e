//! JSON documents for every input and output type, tagged `"schema": "umx/1"`.
//!
//! Documents are plain serde structs; `*_from_str` parsers validate them into
//! library values and `*_doc` builders go the other way. The schema tag is
//! optional on input and always written on output.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::arrangements::{parse_rational, Arrangement, Rational, Subspace};
use crate::complexes::PureComplex;
use crate::error::{Error, Result};
use crate::lattice::{DistLattice, Poset, Subset, TotalOrder};
use crate::umatroid::RankFunction;

pub const SCHEMA: &str = "umx/1";

fn schema_tag() -> Option<String> {
    Some(SCHEMA.to_string())
}

fn check_schema(tag: &Option<String>) -> Result<()> {
    match tag.as_deref() {
        None | Some(SCHEMA) => Ok(()),
        Some(other) => Err(Error::Parse(format!(
            "unsupported schema {other:?} (expected {SCHEMA:?})"
        ))),
    }
}

fn parse<'a, T: Deserialize<'a>>(s: &'a str) -> Result<T> {
    serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
}

/// Serializes with two-space indentation and a trailing newline.
pub fn to_pretty<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("documents serialize");
    s.push('\n');
    s
}

fn subset_of(n: usize, elems: &[usize]) -> Result<Subset> {
    if let Some(&e) = elems.iter().find(|&&e| e == 0 || e > n) {
        return Err(Error::ElementOutOfRange { elem: e, n });
    }
    Ok(Subset::from_elements(elems.iter().copied()))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PosetDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub schema: Option<String>,
    pub n: usize,
    #[serde(default)]
    pub relations: Vec<[usize; 2]>,
}

impl PosetDoc {
    /// Covering relations of `p`.
    pub fn new(p: &Poset) -> PosetDoc {
        PosetDoc {
            schema: schema_tag(),
            n: p.n(),
            relations: p.covers().into_iter().map(|(a, b)| [a, b]).collect(),
        }
    }

    pub fn build(&self) -> Result<Poset> {
        check_schema(&self.schema)?;
        let rel: Vec<(usize, usize)> = self.relations.iter().map(|r| (r[0], r[1])).collect();
        Poset::from_relations(self.n, &rel)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LatticeDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub schema: Option<String>,
    pub n: usize,
    pub sets: Vec<Vec<usize>>,
}

impl LatticeDoc {
    pub fn new(d: &DistLattice) -> LatticeDoc {
        LatticeDoc {
            schema: schema_tag(),
            n: d.n(),
            sets: d.iter().map(Subset::to_vec).collect(),
        }
    }

    pub fn build(&self) -> Result<DistLattice> {
        check_schema(&self.schema)?;
        let sets = self
            .sets
            .iter()
            .map(|s| subset_of(self.n, s))
            .collect::<Result<Vec<_>>>()?;
        DistLattice::from_sets(self.n, &sets)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TotalOrderDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub schema: Option<String>,
    pub perm: Vec<usize>,
}

impl TotalOrderDoc {
    pub fn new(s: &TotalOrder) -> TotalOrderDoc {
        TotalOrderDoc {
            schema: schema_tag(),
            perm: s.as_slice().to_vec(),
        }
    }

    pub fn build(&self) -> Result<TotalOrder> {
        check_schema(&self.schema)?;
        TotalOrder::new(self.perm.clone())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RankEntry {
    pub set: Vec<usize>,
    pub rank: i64,
}

/// A rank table over a lattice given either by its characteristic poset or
/// by its members. Output always uses the poset.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RankFunctionDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub schema: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub poset: Option<PosetDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lattice: Option<LatticeDoc>,
    pub values: Vec<RankEntry>,
}

impl RankFunctionDoc {
    pub fn new(r: &RankFunction) -> RankFunctionDoc {
        let mut poset = PosetDoc::new(r.lattice().irr_poset());
        poset.schema = None;
        RankFunctionDoc {
            schema: schema_tag(),
            poset: Some(poset),
            lattice: None,
            values: r
                .pairs()
                .map(|(s, rank)| RankEntry {
                    set: s.to_vec(),
                    rank,
                })
                .collect(),
        }
    }

    pub fn build(&self) -> Result<RankFunction> {
        check_schema(&self.schema)?;
        let d = match (&self.poset, &self.lattice) {
            (Some(p), None) => DistLattice::order_ideals(&p.build()?)?,
            (None, Some(l)) => l.build()?,
            _ => {
                return Err(Error::Parse(
                    "rank function needs exactly one of \"poset\" or \"lattice\"".into(),
                ))
            }
        };
        let n = d.n();
        let pairs = self
            .values
            .iter()
            .map(|e| Ok((subset_of(n, &e.set)?, e.rank)))
            .collect::<Result<Vec<_>>>()?;
        RankFunction::from_pairs(Arc::new(d), &pairs)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BasisSystemDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub schema: Option<String>,
    pub poset: PosetDoc,
    pub bases: Vec<Vec<usize>>,
}

impl BasisSystemDoc {
    pub fn new(p: &Poset, c: &PureComplex) -> BasisSystemDoc {
        let mut poset = PosetDoc::new(p);
        poset.schema = None;
        BasisSystemDoc {
            schema: schema_tag(),
            poset,
            bases: c.facets().iter().map(|s| s.to_vec()).collect(),
        }
    }

    pub fn build(&self) -> Result<(Poset, PureComplex)> {
        check_schema(&self.schema)?;
        let p = self.poset.build()?;
        let facets = self
            .bases
            .iter()
            .map(|b| subset_of(p.n(), b))
            .collect::<Result<Vec<_>>>()?;
        let c = PureComplex::new(p.n(), &facets)?;
        Ok((p, c))
    }
}

/// A rational written as a string `"p/q"` or a JSON integer.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RationalDoc {
    Int(i64),
    Str(String),
}

impl RationalDoc {
    /// Integers that fit in an `i64` are written as JSON numbers.
    pub fn new(q: &Rational) -> RationalDoc {
        use num_traits::ToPrimitive;
        match q.is_integer().then(|| q.to_integer().to_i64()).flatten() {
            Some(v) => RationalDoc::Int(v),
            None => RationalDoc::Str(q.to_string()),
        }
    }

    pub fn build(&self) -> Result<Rational> {
        match self {
            RationalDoc::Int(v) => Ok(Rational::from_integer((*v).into())),
            RationalDoc::Str(s) => parse_rational(s),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpaceDoc {
    pub normals: Vec<Vec<RationalDoc>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArrangementDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub schema: Option<String>,
    pub dim: usize,
    pub spaces: Vec<SpaceDoc>,
}

impl ArrangementDoc {
    pub fn new(x: &Arrangement) -> ArrangementDoc {
        ArrangementDoc {
            schema: schema_tag(),
            dim: x.dim(),
            spaces: x
                .spaces()
                .iter()
                .map(|s| SpaceDoc {
                    normals: s
                        .normals()
                        .iter()
                        .map(|v| v.iter().map(RationalDoc::new).collect())
                        .collect(),
                })
                .collect(),
        }
    }

    pub fn build(&self) -> Result<Arrangement> {
        check_schema(&self.schema)?;
        let spaces = self
            .spaces
            .iter()
            .map(|s| {
                let normals = s
                    .normals
                    .iter()
                    .map(|v| v.iter().map(RationalDoc::build).collect::<Result<Vec<_>>>())
                    .collect::<Result<Vec<_>>>()?;
                Subspace::new(self.dim, normals)
            })
            .collect::<Result<Vec<_>>>()?;
        Arrangement::new(self.dim, spaces)
    }
}

pub fn poset_from_str(s: &str) -> Result<Poset> {
    parse::<PosetDoc>(s)?.build()
}

pub fn lattice_from_str(s: &str) -> Result<DistLattice> {
    parse::<LatticeDoc>(s)?.build()
}

pub fn total_order_from_str(s: &str) -> Result<TotalOrder> {
    parse::<TotalOrderDoc>(s)?.build()
}

pub fn rank_function_from_str(s: &str) -> Result<RankFunction> {
    parse::<RankFunctionDoc>(s)?.build()
}

pub fn basis_system_from_str(s: &str) -> Result<(Poset, PureComplex)> {
    parse::<BasisSystemDoc>(s)?.build()
}

pub fn arrangement_from_str(s: &str) -> Result<Arrangement> {
    parse::<ArrangementDoc>(s)?.build()
}

/// A lattice from either a lattice document or a poset document.
pub fn lattice_or_poset_from_str(s: &str) -> Result<DistLattice> {
    let v: serde_json::Value = parse(s)?;
    if v.get("sets").is_some() {
        lattice_from_str(s)
    } else {
        DistLattice::order_ideals(&poset_from_str(s)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn poset_round_trip() {
        let p = poset_from_str(r#"{"n":4,"relations":[[1,2],[2,4],[1,4]]}"#).unwrap();
        let doc = PosetDoc::new(&p);
        assert_eq!(doc.relations, vec![[1, 2], [2, 4]]);
        let text = to_pretty(&doc);
        assert!(text.contains("\"schema\": \"umx/1\""));
        assert_eq!(poset_from_str(&text).unwrap(), p);
    }

    #[test]
    fn schema_mismatch_rejected() {
        assert!(poset_from_str(r#"{"schema":"umx/2","n":2}"#).is_err());
        assert!(poset_from_str(r#"{"n":2,"extra":1}"#).is_err());
    }

    #[test]
    fn lattice_round_trip() {
        let d = lattice_from_str(r#"{"n":3,"sets":[[],[1],[2],[1,2],[2,3],[1,2,3]]}"#).unwrap();
        assert!(d.irr_poset().lt(2, 3));
        let again = lattice_from_str(&to_pretty(&LatticeDoc::new(&d))).unwrap();
        assert_eq!(again, d);
        assert!(lattice_from_str(r#"{"n":2,"sets":[[],[1,2]]}"#).is_err());
    }

    #[test]
    fn rank_function_loading() {
        let text = r#"{"poset":{"n":2,"relations":[[1,2]]},
            "values":[{"set":[],"rank":0},{"set":[1],"rank":1},{"set":[1,2],"rank":1}]}"#;
        let r = rank_function_from_str(text).unwrap();
        assert_eq!(
            rank_function_from_str(&to_pretty(&RankFunctionDoc::new(&r))).unwrap(),
            r
        );
        let missing = r#"{"poset":{"n":2,"relations":[[1,2]]},"values":[{"set":[],"rank":0}]}"#;
        assert!(matches!(
            rank_function_from_str(missing),
            Err(Error::RankTable(_))
        ));
        let dup = r#"{"poset":{"n":1},"values":[{"set":[],"rank":0},{"set":[],"rank":0},{"set":[1],"rank":1}]}"#;
        assert!(matches!(
            rank_function_from_str(dup),
            Err(Error::RankTable(_))
        ));
        let outside = r#"{"poset":{"n":2,"relations":[[1,2]]},
            "values":[{"set":[],"rank":0},{"set":[2],"rank":1},{"set":[1],"rank":1},{"set":[1,2],"rank":1}]}"#;
        assert!(matches!(
            rank_function_from_str(outside),
            Err(Error::NotInLattice(_))
        ));
    }

    #[test]
    fn arrangement_rationals_reduce() {
        let x =
            arrangement_from_str(r#"{"dim":2,"spaces":[{"normals":[["2/4",1],["-3/6","7"]]}]}"#)
                .unwrap();
        let doc = ArrangementDoc::new(&x);
        assert_eq!(
            doc.spaces[0].normals[0],
            vec![RationalDoc::Str("1/2".into()), RationalDoc::Int(1)]
        );
        assert_eq!(arrangement_from_str(&to_pretty(&doc)).unwrap(), x);
        assert!(arrangement_from_str(r#"{"dim":2,"spaces":[{"normals":[["1"]]}]}"#).is_err());
    }

    #[test]
    fn total_order_and_basis_system() {
        let s = total_order_from_str(r#"{"perm":[3,1,2,4]}"#).unwrap();
        assert_eq!(s.to_string(), "3<1<2<4");
        assert!(total_order_from_str(r#"{"perm":[1,1]}"#).is_err());
        let (p, c) = basis_system_from_str(
            r#"{"poset":{"n":4,"relations":[[1,4]]},"bases":[[1,2],[1,3],[1,4],[2,3]]}"#,
        )
        .unwrap();
        let doc = BasisSystemDoc::new(&p, &c);
        assert_eq!(basis_system_from_str(&to_pretty(&doc)).unwrap(), (p, c));
    }
}
