//! Browser bindings: build a named graph, bound its spectral radius, and
//! search it for a complete split subgraph. Every export takes and returns
//! strings so the page needs no glue beyond `JSON.parse`.

use serde_json::{json, Value};
use splitfree::constructions::{complete_split, turan, y_graph};
use splitfree::oracles::{chromatic_number, contains_complete_split};
use splitfree::spectral::{spectral_radius, DEFAULT_TOL};
use splitfree::{graph6, Graph};
use wasm_bindgen::prelude::*;

fn describe(g: &Graph) -> Value {
    let edges: Vec<[usize; 2]> = g.edges().map(|(a, b)| [a, b]).collect();
    json!({ "graph6": graph6::encode(g), "n": g.n(), "edge_count": g.edge_count(), "edges": edges })
}

/// `family` is one of `turan`, `y`, `split`.
pub fn construct_json(family: &str, a: usize, b: usize) -> Result<String, String> {
    let g = match family {
        "turan" => turan(a, b).map(|(g, _)| g),
        "y" => y_graph(a, b).map(|(g, _)| g),
        "split" => complete_split(a, b),
        other => return Err(format!("unknown family {other:?}")),
    }
    .map_err(|e| e.to_string())?;
    Ok(describe(&g).to_string())
}

pub fn spectrum_json(g6: &str) -> Result<String, String> {
    let g = graph6::decode(g6.trim()).map_err(|e| e.to_string())?;
    let r = spectral_radius(&g, DEFAULT_TOL).map_err(|e| e.to_string())?;
    let chi = chromatic_number(&g).map_err(|e| e.to_string())?;
    Ok(json!({ "rho": r.rho, "err": r.err, "perron": r.perron, "chi": chi.chi }).to_string())
}

pub fn contains_json(g6: &str, p: usize, q: usize) -> Result<String, String> {
    let g = graph6::decode(g6.trim()).map_err(|e| e.to_string())?;
    let w = contains_complete_split(&g, p, q).map_err(|e| e.to_string())?;
    Ok(json!({ "p": p, "q": q, "contains": w.is_some(), "witness": w }).to_string())
}

#[wasm_bindgen]
pub fn construct(family: &str, a: usize, b: usize) -> Result<String, JsValue> {
    construct_json(family, a, b).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn spectrum(g6: &str) -> Result<String, JsValue> {
    spectrum_json(g6).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn contains(g6: &str, p: usize, q: usize) -> Result<String, JsValue> {
    contains_json(g6, p, q).map_err(|e| JsValue::from_str(&e))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: &str) -> Value {
        serde_json::from_str(s).unwrap()
    }

    #[test]
    fn construct_families() {
        assert_eq!(parse(&construct_json("turan", 6, 3).unwrap())["edge_count"], 12);
        assert_eq!(parse(&construct_json("y", 5, 2).unwrap())["edge_count"], 5);
        assert_eq!(parse(&construct_json("split", 3, 2).unwrap())["n"], 5);
        assert!(construct_json("petersen", 1, 1).is_err());
        assert!(construct_json("y", 3, 2).is_err());
    }

    #[test]
    fn spectrum_of_triangle() {
        let v = parse(&spectrum_json("Bw").unwrap());
        assert!((v["rho"].as_f64().unwrap() - 2.0).abs() < 1e-9);
        assert_eq!(v["chi"], 3);
        assert!(spectrum_json("").is_err());
    }

    #[test]
    fn containment() {
        let y = parse(&construct_json("y", 9, 3).unwrap());
        let g6 = y["graph6"].as_str().unwrap();
        assert_eq!(parse(&contains_json(g6, 3, 2).unwrap())["contains"], false);
        assert_eq!(parse(&contains_json(g6, 2, 1).unwrap())["contains"], true);
    }
}
