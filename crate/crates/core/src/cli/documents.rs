//! JSON interchange documents for graphs and relations.
//!
//! Element labels are JSON strings; product elements are two-element arrays,
//! so `["a", ["b", "c"]]` is the element `(a,(b,c))`. The label `"*"` is the
//! unit element.

use std::fmt;

use serde::de::{self, SeqAccess, Visitor};
use serde::ser::SerializeTuple;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::graphcat::Graph;
use crate::relcore::{Element, FiniteSet, Relation};

pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Error)]
pub enum DocumentError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),

    #[error("unsupported schema version {0:?}")]
    SchemaVersion(String),

    #[error("edge references vertex {index}, but only {count} vertices are listed")]
    VertexReference { index: usize, count: usize },

    #[error(transparent)]
    Model(#[from] crate::Error),
}

impl Serialize for Element {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            Element::Unit => serializer.serialize_str("*"),
            Element::Atom(s) => serializer.serialize_str(s),
            Element::Pair(p) => {
                let mut t = serializer.serialize_tuple(2)?;
                t.serialize_element(&p.0)?;
                t.serialize_element(&p.1)?;
                t.end()
            }
        }
    }
}

struct ElementVisitor;

impl<'de> Visitor<'de> for ElementVisitor {
    type Value = Element;

    fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("a string label or a two-element array")
    }

    fn visit_str<E: de::Error>(self, v: &str) -> Result<Element, E> {
        Ok(Element::atom(v))
    }

    fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> Result<Element, A::Error> {
        let first = seq.next_element()?.ok_or_else(|| de::Error::invalid_length(0, &self))?;
        let second = seq.next_element()?.ok_or_else(|| de::Error::invalid_length(1, &self))?;
        if seq.next_element::<de::IgnoredAny>()?.is_some() {
            return Err(de::Error::invalid_length(3, &self));
        }
        Ok(Element::pair(first, second))
    }
}

impl<'de> Deserialize<'de> for Element {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Element, D::Error> {
        deserializer.deserialize_any(ElementVisitor)
    }
}

/// A graph `dom → cod`. Edges are index pairs into `vertices`; self-loops
/// are implied by vertex membership and never written.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct GraphDocument {
    pub schema_version: String,
    pub dom: Vec<Element>,
    pub cod: Vec<Element>,
    pub vertices: Vec<[Element; 2]>,
    pub edges: Vec<[usize; 2]>,
}

impl GraphDocument {
    /// The canonical document of a graph.
    pub fn from_graph(g: &Graph) -> Self {
        let slots: Vec<usize> = g.vertex_slots().collect();
        let position = |slot: usize| slots.binary_search(&slot).expect("edge endpoint is a vertex");
        GraphDocument {
            schema_version: SCHEMA_VERSION.to_string(),
            dom: g.dom().elements().to_vec(),
            cod: g.cod().elements().to_vec(),
            vertices: g.vertices().map(|(a, b)| [a.clone(), b.clone()]).collect(),
            edges: g.edge_slots().map(|(s, t)| [position(s), position(t)]).collect(),
        }
    }

    pub fn to_graph(&self) -> Result<Graph, DocumentError> {
        check_version(&self.schema_version)?;
        let dom = FiniteSet::new("dom", self.dom.iter().cloned())?;
        let cod = FiniteSet::new("cod", self.cod.iter().cloned())?;
        let count = self.vertices.len();
        let vertex = |index: usize| {
            self.vertices
                .get(index)
                .map(|[a, b]| (a.clone(), b.clone()))
                .ok_or(DocumentError::VertexReference { index, count })
        };
        let edges =
            self.edges.iter().map(|&[i, j]| Ok((vertex(i)?, vertex(j)?))).collect::<Result<Vec<_>, DocumentError>>()?;
        let vertices = self.vertices.iter().map(|[a, b]| (a.clone(), b.clone()));
        Ok(Graph::new(&dom, &cod, vertices, edges)?)
    }

    pub fn parse(text: &str) -> Result<Graph, DocumentError> {
        serde_json::from_str::<GraphDocument>(text)?.to_graph()
    }

    pub fn render(g: &Graph) -> String {
        let mut s = serde_json::to_string_pretty(&GraphDocument::from_graph(g)).expect("documents serialize");
        s.push('\n');
        s
    }

    /// Single-line form, one document per line when streaming.
    pub fn render_line(g: &Graph) -> String {
        serde_json::to_string(&GraphDocument::from_graph(g)).expect("documents serialize")
    }
}

/// A relation `dom → cod` as a list of related pairs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct RelationDocument {
    pub schema_version: String,
    pub dom: Vec<Element>,
    pub cod: Vec<Element>,
    pub pairs: Vec<[Element; 2]>,
}

impl RelationDocument {
    pub fn from_relation(r: &Relation) -> Self {
        RelationDocument {
            schema_version: SCHEMA_VERSION.to_string(),
            dom: r.dom().elements().to_vec(),
            cod: r.cod().elements().to_vec(),
            pairs: r.pairs().map(|(a, b)| [a.clone(), b.clone()]).collect(),
        }
    }

    pub fn to_relation(&self) -> Result<Relation, DocumentError> {
        check_version(&self.schema_version)?;
        let dom = FiniteSet::new("dom", self.dom.iter().cloned())?;
        let cod = FiniteSet::new("cod", self.cod.iter().cloned())?;
        Ok(Relation::new(&dom, &cod, self.pairs.iter().map(|[a, b]| (a.clone(), b.clone())))?)
    }

    pub fn parse(text: &str) -> Result<Relation, DocumentError> {
        serde_json::from_str::<RelationDocument>(text)?.to_relation()
    }

    pub fn render(r: &Relation) -> String {
        let mut s = serde_json::to_string_pretty(&RelationDocument::from_relation(r)).expect("documents serialize");
        s.push('\n');
        s
    }
}

fn check_version(v: &str) -> Result<(), DocumentError> {
    if v == SCHEMA_VERSION {
        Ok(())
    } else {
        Err(DocumentError::SchemaVersion(v.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nested_elements_serialize_as_arrays() {
        let e = Element::pair("a".into(), Element::pair(Element::Unit, "c".into()));
        let json = serde_json::to_string(&e).unwrap();
        assert_eq!(json, r#"["a",["*","c"]]"#);
        assert_eq!(serde_json::from_str::<Element>(&json).unwrap(), e);
    }

    #[test]
    fn rejects_triples() {
        assert!(serde_json::from_str::<Element>(r#"["a","b","c"]"#).is_err());
        assert!(serde_json::from_str::<Element>(r#"["a"]"#).is_err());
        assert!(serde_json::from_str::<Element>("3").is_err());
    }

    #[test]
    fn graph_document_layout() {
        let text = r#"{
          "schemaVersion": "1",
          "dom": ["*"],
          "cod": ["x", "y", "z"],
          "vertices": [["*", "x"], ["*", "y"], ["*", "z"]],
          "edges": [[0, 1], [0, 2]]
        }"#;
        let g = GraphDocument::parse(text).unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 2);
        let doc = GraphDocument::from_graph(&g);
        assert_eq!(doc.edges, vec![[0, 1], [0, 2]]);
        assert_eq!(serde_json::from_str::<GraphDocument>(text).unwrap(), doc);
    }

    #[test]
    fn bad_documents() {
        let bad_ref = r#"{"schemaVersion":"1","dom":["*"],"cod":["x"],"vertices":[["*","x"]],"edges":[[0,4]]}"#;
        assert!(matches!(GraphDocument::parse(bad_ref), Err(DocumentError::VertexReference { index: 4, count: 1 })));
        let bad_version = r#"{"schemaVersion":"9","dom":[],"cod":[],"vertices":[],"edges":[]}"#;
        assert!(matches!(GraphDocument::parse(bad_version), Err(DocumentError::SchemaVersion(_))));
        let foreign = r#"{"schemaVersion":"1","dom":["a"],"cod":["b"],"pairs":[["a","q"]]}"#;
        assert!(matches!(RelationDocument::parse(foreign), Err(DocumentError::Model(_))));
        assert!(matches!(GraphDocument::parse("{"), Err(DocumentError::Json(_))));
    }

    #[test]
    fn relation_document_round_trip() {
        let a = FiniteSet::new("A", ["a", "b"]).unwrap();
        let r = Relation::new(&a, &a, [("b", "a"), ("a", "a")]).unwrap();
        let text = RelationDocument::render(&r);
        assert_eq!(RelationDocument::parse(&text).unwrap(), r);
        assert_eq!(RelationDocument::from_relation(&r).pairs, vec![["a".into(), "a".into()], ["b".into(), "a".into()]]);
    }
}
