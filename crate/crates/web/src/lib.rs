//! Browser bindings: analyse a tree, compare two trees, tabulate indices.
//!
//! Each export takes tree text and returns a JSON string. A tree is a family
//! expression (`CP(7,4)^2`), a canonical code (`(()())`) or an edge list with
//! one `u v` pair per line.

use edv_core::indices::{IndexSelector, IndexSpec};
use edv_core::{
    compare_trees, edge_division_vector, edge_mu, parse_tree, OrderRelation, Tree, TreeFormat,
};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

/// Largest order the page accepts; index tables stay interactive below it.
pub const MAX_ORDER: usize = 400;

pub fn read_tree(text: &str) -> Result<Tree, String> {
    let text = text.trim();
    let format = if text.starts_with('(') {
        TreeFormat::CanonicalCode
    } else if text.starts_with(|c: char| c.is_ascii_digit() || c == '#') {
        TreeFormat::EdgeList
    } else {
        TreeFormat::FamilyExpression
    };
    let t = parse_tree(text, format).map_err(|e| e.to_string())?;
    if t.order() > MAX_ORDER {
        return Err(format!("order {} is above the demo limit of {MAX_ORDER}", t.order()));
    }
    Ok(t)
}

/// Vertex positions for drawing: breadth-first layers from the first centroid.
fn layout(t: &Tree) -> Vec<[usize; 2]> {
    let root = t.centroids()[0];
    let depth = t.distances_from(root);
    let mut seen_at_depth = vec![0usize; t.order()];
    let mut order: Vec<usize> = (0..t.order()).collect();
    order.sort_by_key(|&v| (depth[v], v));
    let mut pos = vec![[0, 0]; t.order()];
    for v in order {
        pos[v] = [depth[v], seen_at_depth[depth[v]]];
        seen_at_depth[depth[v]] += 1;
    }
    pos
}

pub fn analyse_json(text: &str) -> Result<Value, String> {
    let t = read_tree(text)?;
    let map = edge_mu(&t);
    let r = edge_division_vector(&t);
    let profile = t.profile();
    let edges: Vec<Value> = t
        .edges()
        .iter()
        .enumerate()
        .map(|(e, &[u, v])| {
            let (nu, nv) = map.split(e);
            json!({ "u": u, "v": v, "n_u": nu, "n_v": nv, "mu": map.mu()[e] })
        })
        .collect();
    Ok(json!({
        "n": t.order(),
        "vector": r.counts(),
        "vector_text": r.to_string(),
        "code": t.canonical_code(),
        "diameter": profile.diameter,
        "pendants": profile.pendant_count,
        "max_degree": profile.max_degree,
        "caterpillar": profile.is_caterpillar,
        "edges": edges,
        "layout": layout(&t),
    }))
}

pub fn compare_json(left: &str, right: &str) -> Result<Value, String> {
    let (a, b) = (read_tree(left)?, read_tree(right)?);
    let rel = compare_trees(&a, &b).map_err(|e| e.to_string())?;
    let (ra, rb) = (edge_division_vector(&a), edge_division_vector(&b));
    let witness = match rel {
        OrderRelation::StrictlyLess { witness_k } | OrderRelation::StrictlyGreater { witness_k } => json!(witness_k),
        OrderRelation::Incomparable { less_at, greater_at } => json!([less_at, greater_at]),
        OrderRelation::Equivalent => Value::Null,
    };
    Ok(json!({
        "relation": rel.name(),
        "text": rel.to_string(),
        "witness": witness,
        "isomorphic": a.is_isomorphic(&b),
        "left": { "vector": ra.counts(), "suffix": ra.suffix_sums() },
        "right": { "vector": rb.counts(), "suffix": rb.suffix_sums() },
    }))
}

pub fn indices_json(text: &str) -> Result<Value, String> {
    let t = read_tree(text)?;
    let rows: Vec<Value> = IndexSpec::standard_set()
        .into_iter()
        .filter(|spec| spec.check(t.order()).is_ok())
        .map(|spec| {
            let sel = IndexSelector::Edge(spec);
            let value = sel.evaluate(&t).map(|v| v.to_string()).unwrap_or_else(|e| e.to_string());
            json!({ "index": sel.to_string(), "value": value, "class": spec.declared_class().to_string() })
        })
        .collect();
    Ok(json!(rows))
}

fn to_js(v: Result<Value, String>) -> Result<String, JsValue> {
    v.map(|v| v.to_string()).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn analyse(tree: &str) -> Result<String, JsValue> {
    to_js(analyse_json(tree))
}

#[wasm_bindgen]
pub fn compare(left: &str, right: &str) -> Result<String, JsValue> {
    to_js(compare_json(left, right))
}

#[wasm_bindgen]
pub fn indices(tree: &str) -> Result<String, JsValue> {
    to_js(indices_json(tree))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reads_all_three_forms() {
        assert_eq!(read_tree("P(4)").unwrap().order(), 4);
        assert_eq!(read_tree("0 1\n1 2").unwrap().order(), 3);
        assert_eq!(read_tree("(()())").unwrap().order(), 3);
        assert!(read_tree("P(401)").is_err());
        assert!(read_tree("Q(3)").is_err());
    }

    #[test]
    fn analyse_reports_vector_and_layout() {
        let v = analyse_json("S(5)").unwrap();
        assert_eq!(v["vector"], json!([4, 0]));
        assert_eq!(v["layout"].as_array().unwrap().len(), 5);
        assert_eq!(v["edges"].as_array().unwrap().len(), 4);
    }

    #[test]
    fn compare_star_and_path() {
        let v = compare_json("S(5)", "P(5)").unwrap();
        assert_eq!(v["relation"], "StrictlyLess");
        assert_eq!(v["witness"], 2);
        assert!(compare_json("P(4)", "P(5)").is_err());
    }

    #[test]
    fn indices_table() {
        let rows = indices_json("CP(7,4)^2").unwrap();
        let wiener = rows.as_array().unwrap().iter().find(|r| r["index"] == "wiener").unwrap();
        assert_eq!(wiener["value"], "40");
    }
}
