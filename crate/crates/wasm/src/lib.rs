//! Browser bindings. Every export takes plain text or numbers and returns a
//! JSON string, so the same functions run natively under `cargo test`.

use cliquecode::formats::{detect_format, parse_graph};
use cliquecode::primes::prime_factors;
use cliquecode::{
    canonical_polynomial, code, divisor_graph, divisor_graph_polynomial_closed_form,
    minimum_total_coverings, realize_sequence, Budget, CodingSequence, Graph, LabeledGraph,
};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

fn respond(result: Result<Value, cliquecode::Error>) -> String {
    match result {
        Ok(v) => v.to_string(),
        Err(e) => {
            let kind = match e {
                cliquecode::Error::BudgetExceeded { .. } => "budget",
                _ => "input",
            };
            json!({ "error": { "kind": kind, "message": e.to_string() } }).to_string()
        }
    }
}

fn edges(g: &Graph) -> Vec<[usize; 2]> {
    g.edges().map(|(u, v)| [u, v]).collect()
}

fn labeled(lg: &LabeledGraph) -> Value {
    let labels: Vec<String> = lg.labels.iter().map(|l| l.to_string()).collect();
    json!({
        "vertices": lg.graph.vertex_count(),
        "labels": labels,
        "edges": edges(&lg.graph),
    })
}

/// Code, polynomial and minimum coverings of a graph given as edge-list,
/// DIMACS or graph6 text.
#[wasm_bindgen]
pub fn analyze(text: &str, budget: u32) -> String {
    respond((|| {
        let g = parse_graph(text, detect_format(None, text))?;
        let mut budget = Budget::new(budget.into());
        let covers = minimum_total_coverings(&g, &mut budget)?;
        let seq = code(&g, &mut budget)?;
        let poly = canonical_polynomial(&g, &mut budget)?;
        let covers: Vec<Vec<&[usize]>> = covers
            .iter()
            .map(|s| s.cliques().iter().map(|c| c.vertices()).collect())
            .collect();
        Ok(json!({
            "vertices": g.vertex_count(),
            "edges": edges(&g),
            "theta_t": covers.first().map_or(0, Vec::len),
            "coverings": covers,
            "code": seq.to_string(),
            "polynomial": poly.to_string(),
            "nodes": budget.spent(),
        }))
    })())
}

/// The divisor graph of `n` with its polynomial from both the search and the
/// product formula.
#[wasm_bindgen]
pub fn divisor(n: u32, budget: u32) -> String {
    respond((|| {
        let n = u64::from(n);
        let lg = divisor_graph(n)?;
        let mut budget = Budget::new(budget.into());
        let searched = canonical_polynomial(&lg.graph, &mut budget)?;
        let formula = divisor_graph_polynomial_closed_form(n)?;
        let mut v = labeled(&lg);
        v["theta_t"] = json!(prime_factors(&n.into())?.len());
        v["polynomial"] = json!(searched.to_string());
        v["closed_form"] = json!(formula.to_string());
        v["agree"] = json!(searched == formula);
        Ok(v)
    })())
}

/// The gcd graph of a sequence such as `(2,3,6)`.
#[wasm_bindgen]
pub fn realize(sequence: &str) -> String {
    respond((|| {
        let seq: CodingSequence = sequence.parse()?;
        Ok(labeled(&realize_sequence(seq.entries())?))
    })())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: String) -> Value {
        serde_json::from_str(&s).unwrap()
    }

    #[test]
    fn analyze_witness() {
        let v = parse(analyze("5 7\n0 1\n0 2\n1 2\n0 3\n2 3\n1 4\n2 4\n", 1_000_000));
        assert_eq!(v["theta_t"], 3);
        assert_eq!(v["coverings"].as_array().unwrap().len(), 2);
        assert_eq!(v["code"], "(2,3,6,10,15)");
    }

    #[test]
    fn divisor_sixty() {
        let v = parse(divisor(60, 1_000_000));
        assert_eq!(v["agree"], true);
        assert_eq!(v["theta_t"], 3);
        assert_eq!(v["closed_form"], "2*x1 + x2 + x3 + 2*x1*x2 + 2*x1*x3 + x2*x3 + 2*x1*x2*x3");
    }

    #[test]
    fn realize_and_errors() {
        let v = parse(realize("(2,3,6)"));
        assert_eq!(v["edges"], json!([[0, 2], [1, 2]]));
        assert_eq!(parse(realize("2,,x"))["error"]["kind"], "input");
        assert_eq!(parse(analyze("4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n", 1))["error"]["kind"], "budget");
    }
}
