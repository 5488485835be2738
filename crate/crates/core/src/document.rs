//! JSON documents for spaces, maps and covers.
//!
//! A space document looks like `{"n":2,"opens":[[],[1],[0,1]],"name":"S"}`.
//! `name` and `labels` are optional decorations and carry no meaning.
//! Emitted documents are canonical: members as ascending point lists,
//! families in bitmask order, keys in the order `n`, `opens`, `name`, `labels`.

use serde::{Deserialize, Serialize};
use serde_json::error::Category;

use crate::carrier::Family;
use crate::error::{Error, Result};
use crate::maps::FiniteMap;
use crate::space::{validate_topology, TopSpace};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpaceDocument {
    pub n: usize,
    pub opens: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl SpaceDocument {
    pub fn from_space(s: &TopSpace) -> SpaceDocument {
        SpaceDocument { n: s.n(), opens: s.opens().to_lists(), name: None, labels: None }
    }

    pub fn named(mut self, name: impl Into<String>) -> SpaceDocument {
        self.name = Some(name.into());
        self
    }

    pub fn to_space(&self) -> Result<TopSpace> {
        if let Some(labels) = &self.labels {
            if labels.len() != self.n {
                return Err(Error::InvalidDocument(format!("{} labels for {} points", labels.len(), self.n)));
            }
        }
        let fam = Family::from_lists(self.n, &self.opens)?;
        validate_topology(self.n, &fam).map_err(Error::InvalidTopology)
    }

    /// Same decorations, opens in canonical order.
    pub fn canonical(&self) -> Result<SpaceDocument> {
        let s = self.to_space()?;
        Ok(SpaceDocument { opens: s.opens().to_lists(), ..self.clone() })
    }
}

/// A space given inline or by reference (a path, resolved by the caller).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SpaceRef {
    Path(String),
    Inline(SpaceDocument),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapDocument {
    pub dom: SpaceRef,
    pub cod: SpaceRef,
    pub table: Vec<usize>,
}

/// A parsed map document.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MapData {
    pub dom: TopSpace,
    pub cod: TopSpace,
    pub map: FiniteMap,
}

fn from_json<'a, T: Deserialize<'a>>(text: &'a str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| match e.classify() {
        Category::Syntax | Category::Eof => Error::Syntax { line: e.line(), column: e.column(), message: strip_position(&e) },
        _ => Error::InvalidDocument(e.to_string()),
    })
}

fn strip_position(e: &serde_json::Error) -> String {
    let s = e.to_string();
    match s.rfind(" at line ") {
        Some(i) => s[..i].to_string(),
        None => s,
    }
}

pub fn parse_space_document(text: &str) -> Result<SpaceDocument> {
    let doc: SpaceDocument = from_json(text)?;
    doc.canonical()
}

pub fn parse_space(text: &str) -> Result<TopSpace> {
    from_json::<SpaceDocument>(text)?.to_space()
}

pub fn emit_document(doc: &SpaceDocument) -> String {
    serde_json::to_string(doc).expect("documents serialize")
}

pub fn emit_space(s: &TopSpace) -> String {
    emit_document(&SpaceDocument::from_space(s))
}

/// Parses a map document; `resolve` turns a path reference into document text.
pub fn parse_map<R: FnMut(&str) -> Result<String>>(text: &str, mut resolve: R) -> Result<MapData> {
    let doc: MapDocument = from_json(text)?;
    let mut load = |r: &SpaceRef| match r {
        SpaceRef::Inline(d) => d.to_space(),
        SpaceRef::Path(p) => parse_space(&resolve(p)?),
    };
    let dom = load(&doc.dom)?;
    let cod = load(&doc.cod)?;
    if doc.table.len() != dom.n() {
        return Err(Error::InvalidDocument(format!("table has {} entries for a domain of {} points", doc.table.len(), dom.n())));
    }
    let map = FiniteMap::new(cod.n(), doc.table)?;
    Ok(MapData { dom, cod, map })
}

pub fn emit_map(dom: &TopSpace, cod: &TopSpace, f: &FiniteMap) -> String {
    let doc = MapDocument {
        dom: SpaceRef::Inline(SpaceDocument::from_space(dom)),
        cod: SpaceRef::Inline(SpaceDocument::from_space(cod)),
        table: f.table().to_vec(),
    };
    serde_json::to_string(&doc).expect("documents serialize")
}

/// A family of subsets of an `n`-point carrier written as a list of point lists.
pub fn parse_family(n: usize, text: &str) -> Result<Family> {
    let lists: Vec<Vec<usize>> = from_json(text)?;
    Family::from_lists(n, &lists)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::space::{sierpinski, ViolationKind};

    #[test]
    fn sierpinski_document() {
        let s = parse_space(r#"{"n":2,"opens":[[],[1],[0,1]]}"#).unwrap();
        assert_eq!(s, sierpinski());
        assert_eq!(emit_space(&s), r#"{"n":2,"opens":[[],[1],[0,1]]}"#);
    }

    #[test]
    fn emit_canonicalizes() {
        let text = r#"{ "opens": [[1,0],[1],[]], "n": 2, "name": "S" }"#;
        let doc = parse_space_document(text).unwrap();
        assert_eq!(emit_document(&doc), r#"{"n":2,"opens":[[],[1],[0,1]],"name":"S"}"#);
        let again = parse_space_document(&emit_document(&doc)).unwrap();
        assert_eq!(emit_document(&again), emit_document(&doc));
    }

    #[test]
    fn missing_carrier_surfaces() {
        match parse_space(r#"{"n":2,"opens":[[],[0]]}"#) {
            Err(Error::InvalidTopology(v)) => assert!(v.iter().any(|x| x.kind == ViolationKind::MissingCarrier)),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn syntax_errors_have_positions() {
        match parse_space("{\n  \"n\": 2,\n  \"opens\": [[],\n}") {
            Err(Error::Syntax { line, column, .. }) => {
                assert_eq!(line, 4);
                assert!(column >= 1);
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(parse_space(r#"{"n":2}"#), Err(Error::InvalidDocument(_))));
        assert!(matches!(parse_space(r#"{"n":2,"opens":[[],[0,1]],"extra":1}"#), Err(Error::InvalidDocument(_))));
        assert!(matches!(parse_space(r#"{"n":2,"opens":[[],[0,5]]}"#), Err(Error::PointOutOfRange { .. })));
    }

    #[test]
    fn map_documents() {
        let text = r#"{"dom":"s.json","cod":{"n":1,"opens":[[],[0]]},"table":[0,0]}"#;
        let m = parse_map(text, |_| Ok(emit_space(&sierpinski()))).unwrap();
        assert_eq!(m.dom, sierpinski());
        assert_eq!(m.map.table(), &[0, 0]);
        let bad = r#"{"dom":{"n":1,"opens":[[],[0]]},"cod":{"n":1,"opens":[[],[0]]},"table":[0,0]}"#;
        assert!(matches!(parse_map(bad, |_| unreachable!()), Err(Error::InvalidDocument(_))));
        let round = emit_map(&sierpinski(), &sierpinski(), &FiniteMap::identity(2));
        let back = parse_map(&round, |_| unreachable!()).unwrap();
        assert_eq!(back.map, FiniteMap::identity(2));
    }
}
