//! JSON documents for the three certificate kinds.
//!
//! ```text
//! {"ideal": "<ideal file>", "k": 0, "tree": {"cleaner": "x1", "colon": {...}, "sum": {...}}}
//! {"ideal": "<ideal file>", "k": 0, "tree": {"shedding_monomial": "x1", "upper": {...}, "lower": {...}}}
//! {"complex": "<complex file>", "k": 1, "tree": {"shedding": [2, 3], "link": {...}, "deletion": {...}}}
//! ```
//!
//! Leaves are `{"prime": ["x1", "x3"]}`, `{"generator": "x1*x2"}`, `{"simplex": [1, 2]}` and
//! `{"void": true}`. Keys are emitted in sorted order, so emitting a parsed document
//! reproduces it byte for byte.

use std::sync::Arc;

use serde_json::{json, Map, Value};

use crate::clean::{verify_certificate, IdealTree};
use crate::decomp::{verify_decomposition, DecompositionTree};
use crate::error::{Error, Result};
use crate::ideal::{MonomialIdeal, VariablePrime};
use crate::parse::{parse_complex, parse_ideal, write_complex, write_ideal};
use crate::ring::RingContext;
use crate::simplicial::{verify_shedding_certificate, SheddingTree, SimplicialComplex};
use crate::varset::VarSet;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    Clean {
        ideal: MonomialIdeal,
        k: usize,
        tree: IdealTree,
    },
    Decomposition {
        ideal: MonomialIdeal,
        k: usize,
        tree: DecompositionTree,
    },
    Complex {
        complex: SimplicialComplex,
        k: i64,
        tree: SheddingTree,
    },
}

impl Certificate {
    /// Checks every node from scratch.
    pub fn verify(&self) -> Result<()> {
        match self {
            Certificate::Clean { ideal, k, tree } => verify_certificate(ideal, tree, *k),
            Certificate::Decomposition { ideal, k, tree } => verify_decomposition(ideal, tree, *k),
            Certificate::Complex { complex, k, tree } => {
                verify_shedding_certificate(complex, tree, *k)
            }
        }
    }

    pub fn to_value(&self) -> Value {
        match self {
            Certificate::Clean { ideal, k, tree } => json!({
                "ideal": write_ideal(ideal),
                "k": k,
                "tree": ideal_tree_value(ideal.ctx(), tree),
            }),
            Certificate::Decomposition { ideal, k, tree } => json!({
                "ideal": write_ideal(ideal),
                "k": k,
                "tree": decomposition_value(ideal.ctx(), tree),
            }),
            Certificate::Complex { complex, k, tree } => json!({
                "complex": write_complex(complex),
                "k": k,
                "tree": shedding_value(tree),
            }),
        }
    }

    /// Pretty-printed document with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_value()).expect("values serialize");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let value: Value = serde_json::from_str(text).map_err(|e| Error::Json(e.to_string()))?;
        Self::from_value(&value)
    }

    pub fn from_value(value: &Value) -> Result<Self> {
        let obj = object(value, "document")?;
        let tree = obj.get("tree").ok_or_else(|| missing("document", "tree"))?;
        let k = obj
            .get("k")
            .and_then(Value::as_i64)
            .ok_or_else(|| Error::Json("`k` must be an integer".into()))?;
        if let Some(text) = obj.get("complex") {
            let complex = parse_complex(string(text, "complex")?)?;
            if k < -1 {
                return Err(Error::Json(format!("k = {k} is below -1")));
            }
            let tree = parse_shedding(tree, complex.n(), "tree")?;
            return Ok(Certificate::Complex { complex, k, tree });
        }
        let text = obj
            .get("ideal")
            .ok_or_else(|| missing("document", "ideal or complex"))?;
        let ideal = parse_ideal(string(text, "ideal")?)?;
        let k = usize::try_from(k).map_err(|_| Error::Json(format!("k = {k} is negative")))?;
        let root = object(tree, "tree")?;
        if root.contains_key("shedding_monomial") || root.contains_key("generator") {
            let tree = parse_decomposition(tree, &ideal, "tree")?;
            Ok(Certificate::Decomposition { ideal, k, tree })
        } else {
            let tree = parse_ideal_tree(tree, &ideal, "tree")?;
            Ok(Certificate::Clean { ideal, k, tree })
        }
    }
}

fn ideal_tree_value(ctx: &RingContext, tree: &IdealTree) -> Value {
    match tree {
        IdealTree::Leaf(p) => {
            let names: Vec<&str> = p.vars().iter().map(|i| ctx.name(i)).collect();
            json!({ "prime": names })
        }
        IdealTree::Node {
            cleaner,
            colon,
            sum,
        } => json!({
            "cleaner": cleaner.display(ctx).to_string(),
            "colon": ideal_tree_value(ctx, colon),
            "sum": ideal_tree_value(ctx, sum),
        }),
    }
}

fn decomposition_value(ctx: &RingContext, tree: &DecompositionTree) -> Value {
    match tree {
        DecompositionTree::Generator(g) => json!({ "generator": g.display(ctx).to_string() }),
        DecompositionTree::Node {
            shedding,
            upper,
            lower,
        } => json!({
            "shedding_monomial": shedding.display(ctx).to_string(),
            "upper": decomposition_value(ctx, upper),
            "lower": decomposition_value(ctx, lower),
        }),
    }
}

fn face_value(face: VarSet) -> Value {
    json!(face.iter().map(|v| v + 1).collect::<Vec<_>>())
}

fn shedding_value(tree: &SheddingTree) -> Value {
    match tree {
        SheddingTree::Void => json!({ "void": true }),
        SheddingTree::Simplex(f) => json!({ "simplex": face_value(*f) }),
        SheddingTree::Node {
            face,
            link,
            deletion,
        } => json!({
            "shedding": face_value(*face),
            "link": shedding_value(link),
            "deletion": shedding_value(deletion),
        }),
    }
}

fn missing(path: &str, key: &str) -> Error {
    Error::Json(format!("{path}: missing `{key}`"))
}

fn object<'a>(value: &'a Value, path: &str) -> Result<&'a Map<String, Value>> {
    value
        .as_object()
        .ok_or_else(|| Error::Json(format!("{path}: expected an object")))
}

fn string<'a>(value: &'a Value, path: &str) -> Result<&'a str> {
    value
        .as_str()
        .ok_or_else(|| Error::Json(format!("{path}: expected a string")))
}

fn child<'a>(obj: &'a Map<String, Value>, key: &str, path: &str) -> Result<&'a Value> {
    obj.get(key).ok_or_else(|| missing(path, key))
}

fn expect_keys(obj: &Map<String, Value>, keys: &[&str], path: &str) -> Result<()> {
    if obj.len() != keys.len() || !keys.iter().all(|k| obj.contains_key(*k)) {
        let mut found: Vec<&str> = obj.keys().map(String::as_str).collect();
        found.sort();
        return Err(Error::Json(format!(
            "{path}: expected keys {keys:?}, found {found:?}"
        )));
    }
    Ok(())
}

/// `ideal` only supplies the ring for names.
fn parse_ideal_tree(value: &Value, ideal: &MonomialIdeal, path: &str) -> Result<IdealTree> {
    let obj = object(value, path)?;
    if let Some(prime) = obj.get("prime") {
        expect_keys(obj, &["prime"], path)?;
        let names = prime
            .as_array()
            .ok_or_else(|| Error::Json(format!("{path}.prime: expected a list")))?;
        let mut vars = VarSet::EMPTY;
        for n in names {
            let name = string(n, path)?;
            let i = ideal
                .ctx()
                .index_of(name)
                .ok_or_else(|| Error::Json(format!("{path}.prime: unknown variable `{name}`")))?;
            vars.insert(i);
        }
        return Ok(IdealTree::Leaf(VariablePrime(vars)));
    }
    expect_keys(obj, &["cleaner", "colon", "sum"], path)?;
    let cleaner = ideal.parse_monomial(string(&obj["cleaner"], path)?)?;
    let colon = parse_ideal_tree(child(obj, "colon", path)?, ideal, &format!("{path}.colon"))?;
    let sum = parse_ideal_tree(child(obj, "sum", path)?, ideal, &format!("{path}.sum"))?;
    Ok(IdealTree::Node {
        cleaner,
        colon: Arc::new(colon),
        sum: Arc::new(sum),
    })
}

fn parse_decomposition(
    value: &Value,
    ideal: &MonomialIdeal,
    path: &str,
) -> Result<DecompositionTree> {
    let obj = object(value, path)?;
    if let Some(g) = obj.get("generator") {
        expect_keys(obj, &["generator"], path)?;
        return Ok(DecompositionTree::Generator(
            ideal.parse_monomial(string(g, path)?)?,
        ));
    }
    expect_keys(obj, &["lower", "shedding_monomial", "upper"], path)?;
    let shedding = ideal.parse_monomial(string(&obj["shedding_monomial"], path)?)?;
    let upper = parse_decomposition(&obj["upper"], ideal, &format!("{path}.upper"))?;
    let lower = parse_decomposition(&obj["lower"], ideal, &format!("{path}.lower"))?;
    Ok(DecompositionTree::Node {
        shedding,
        upper: Arc::new(upper),
        lower: Arc::new(lower),
    })
}

fn parse_face(value: &Value, n: usize, path: &str) -> Result<VarSet> {
    let list = value
        .as_array()
        .ok_or_else(|| Error::Json(format!("{path}: expected a list of vertices")))?;
    let mut face = VarSet::EMPTY;
    for v in list {
        match v.as_u64() {
            Some(v) if v >= 1 && v as usize <= n => face.insert(v as usize - 1),
            _ => return Err(Error::Json(format!("{path}: vertex {v} outside 1..={n}"))),
        }
    }
    Ok(face)
}

fn parse_shedding(value: &Value, n: usize, path: &str) -> Result<SheddingTree> {
    let obj = object(value, path)?;
    if obj.contains_key("void") {
        expect_keys(obj, &["void"], path)?;
        return Ok(SheddingTree::Void);
    }
    if let Some(f) = obj.get("simplex") {
        expect_keys(obj, &["simplex"], path)?;
        return Ok(SheddingTree::Simplex(parse_face(f, n, path)?));
    }
    expect_keys(obj, &["deletion", "link", "shedding"], path)?;
    Ok(SheddingTree::Node {
        face: parse_face(&obj["shedding"], n, path)?,
        link: Arc::new(parse_shedding(&obj["link"], n, &format!("{path}.link"))?),
        deletion: Arc::new(parse_shedding(
            &obj["deletion"],
            n,
            &format!("{path}.deletion"),
        )?),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clean::is_k_clean;
    use crate::decomp::is_k_decomposable_ideal;
    use crate::simplicial::is_k_decomposable;

    #[test]
    fn clean_certificate_round_trip() {
        let j = parse_ideal("vars x1 x2 x3 x4\nx1*x2\nx1*x3\nx1*x4\n").unwrap();
        let tree = is_k_clean(&j, 0).unwrap().unwrap();
        let cert = Certificate::Clean {
            ideal: j,
            k: 0,
            tree,
        };
        let text = cert.to_json();
        assert!(text.contains("\"cleaner\": \"x1\""));
        let back = Certificate::from_json(&text).unwrap();
        assert_eq!(back, cert);
        assert_eq!(back.to_json(), text);
        back.verify().unwrap();
    }

    #[test]
    fn complex_and_decomposition_round_trip() {
        let d = SimplicialComplex::from_facets(3, &[&[1, 2], &[1, 3]]).unwrap();
        let tree = is_k_decomposable(&d, 0).unwrap();
        let cert = Certificate::Complex {
            complex: d,
            k: 0,
            tree,
        };
        let text = cert.to_json();
        assert_eq!(Certificate::from_json(&text).unwrap().to_json(), text);

        let i = parse_ideal("vars x1 x2 x3\nx2*x3\nx1*x3\nx1*x2\n").unwrap();
        let tree = is_k_decomposable_ideal(&i, 0).unwrap().unwrap();
        let cert = Certificate::Decomposition {
            ideal: i,
            k: 0,
            tree,
        };
        let text = cert.to_json();
        let back = Certificate::from_json(&text).unwrap();
        assert_eq!(back, cert);
        back.verify().unwrap();
    }

    #[test]
    fn malformed_documents() {
        assert!(matches!(Certificate::from_json("[]"), Err(Error::Json(_))));
        assert!(matches!(
            Certificate::from_json(
                r#"{"ideal": "vars x1\nx1\n", "k": 0, "tree": {"prime": ["y"]}}"#
            ),
            Err(Error::Json(_))
        ));
        assert!(matches!(
            Certificate::from_json(
                r#"{"ideal": "vars x1\nx1\n", "k": -1, "tree": {"prime": ["x1"]}}"#
            ),
            Err(Error::Json(_))
        ));
        assert!(matches!(
            Certificate::from_json(
                r#"{"ideal": "vars x1\nz\n", "k": 0, "tree": {"prime": ["x1"]}}"#
            ),
            Err(Error::Parse { line: 2, .. })
        ));
    }
}
