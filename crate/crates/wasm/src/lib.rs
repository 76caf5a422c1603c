//! Browser bindings. Every function takes plain strings or numbers and
//! returns a JSON document, or an error message.

use rook_harmonics::combinatorics::{rsk_viennot, shadow_lines, shadow_set, Permutation, PointSet};
use rook_harmonics::ideal::{hilbert_series_via_lis, shadow_monomial};
use rook_harmonics::rook::{extend_to_permutation, extension_points, extended_shadow_set, LocusParams, RookPlacement};
use rook_harmonics::symfunc::grfrob_main;
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

const MAX_PERMUTATION: usize = 30;
const MAX_BOARD: usize = 12;

fn numbers(text: &str) -> Result<Vec<usize>, String> {
    text.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .map(|s| s.parse::<usize>().map_err(|_| format!("{s:?} is not a positive integer")))
        .collect()
}

fn points(ps: &PointSet) -> Value {
    json!(ps.points())
}

/// Shadow lines of a permutation in one-line notation, every iterate of the
/// shadow set, and the resulting RSK pair.
#[wasm_bindgen]
pub fn shadow_demo(one_line: &str) -> Result<String, String> {
    let images = numbers(one_line)?;
    if images.len() > MAX_PERMUTATION {
        return Err(format!("at most {MAX_PERMUTATION} letters"));
    }
    let w = Permutation::new(images).map_err(|e| e.to_string())?;
    let mut rounds = Vec::new();
    let mut current = w.diagram();
    while !current.is_empty() {
        let lines: Vec<Value> = shadow_lines(&current)
            .iter()
            .map(|l| json!({ "points": l.points, "corners": l.ne_corners, "x_ray": l.vertical_ray_x, "y_ray": l.horizontal_ray_y }))
            .collect();
        rounds.push(json!({ "points": points(&current), "lines": lines }));
        current = shadow_set(&current);
    }
    let pair = rsk_viennot(&w);
    let doc = json!({ "n": w.len(), "rounds": rounds, "p": pair.p.rows(), "q": pair.q.rows() });
    Ok(doc.to_string())
}

fn parse_cells(text: &str) -> Result<Vec<(usize, usize)>, String> {
    let flat = numbers(&text.replace(['(', ')', '{', '}', ';'], " "))?;
    if flat.len() % 2 != 0 {
        return Err("cells come in pairs i,j".into());
    }
    Ok(flat.chunks(2).map(|c| (c[0], c[1])).collect())
}

fn check_board(n: usize, m: usize, r: usize) -> Result<LocusParams, String> {
    if n > MAX_BOARD || m > MAX_BOARD {
        return Err(format!("boards up to {MAX_BOARD} x {MAX_BOARD}"));
    }
    LocusParams::new(n, m, r).map_err(|e| e.to_string())
}

/// The extended permutation of a placement, its labelled points, and the
/// extended shadow set with its monomial.
#[wasm_bindgen]
pub fn extension_demo(n: usize, m: usize, r: usize, cells: &str) -> Result<String, String> {
    let params = check_board(n, m, r)?;
    let placement = RookPlacement::new(n, m, parse_cells(cells)?).map_err(|e| e.to_string())?;
    let labelled: Vec<Value> = extension_points(&placement, params)
        .map_err(|e| e.to_string())?
        .into_iter()
        .map(|(x, y)| json!([x.to_string(), y.to_string()]))
        .collect();
    let w = extend_to_permutation(&placement, params).map_err(|e| e.to_string())?;
    let es = extended_shadow_set(&placement, params).map_err(|e| e.to_string())?;
    let mono = shadow_monomial(&placement, params).map_err(|e| e.to_string())?;
    let doc = json!({
        "n": n, "m": m, "r": r,
        "placement": placement.cells(),
        "extended_points": labelled,
        "added_columns": m - r,
        "added_rows": n - r,
        "extension": w.images(),
        "shadow_cells": es.cells(),
        "monomial": mono.to_string(),
        "degree": mono.degree(),
    });
    Ok(doc.to_string())
}

/// Hilbert series and graded Frobenius layers of the quotient.
#[wasm_bindgen]
pub fn module_demo(n: usize, m: usize, r: usize) -> Result<String, String> {
    let params = check_board(n, m, r)?;
    let series = grfrob_main(params);
    let layers: Vec<Value> = series
        .layers()
        .iter()
        .map(|layer| {
            let terms: Vec<Value> = layer
                .terms()
                .map(|((l, mu), c)| json!({ "lambda": l, "mu": mu, "coefficient": c.to_string() }))
                .collect();
            json!({ "text": layer.to_string(), "terms": terms })
        })
        .collect();
    let doc = json!({
        "n": n, "m": m, "r": r,
        "locus_size": params.locus_size().to_string(),
        "hilbert": hilbert_series_via_lis(params),
        "layers": layers,
    });
    Ok(doc.to_string())
}
