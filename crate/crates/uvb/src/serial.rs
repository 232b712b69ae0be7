//! Canonical JSON encodings for the structured values the CLI emits.
//!
//! Every encoder here is byte-stable: struct fields serialize in a fixed
//! order, pure components are already sorted by strand pair, syllables follow
//! word order, and no whitespace is emitted. Equal values always produce
//! identical bytes, so outputs can be compared or hashed directly.

use serde::Serialize;

use crate::crystal::CrystalQuotientElement;
use crate::normal::{NormalForm, RelationReport};
use crate::pure::PureElement;
use crate::torsion::Order;

#[derive(Serialize)]
struct ComponentDto {
    pair: [usize; 2],
    word: Vec<[i64; 3]>,
}

fn component_dtos(p: &PureElement) -> Vec<ComponentDto> {
    p.components()
        .map(|(pair, w)| ComponentDto {
            pair: [pair.lo(), pair.hi()],
            word: w
                .spelled_syllables()
                .map(|(a, b, e)| [a as i64, b as i64, e])
                .collect(),
        })
        .collect()
}

#[derive(Serialize)]
struct NormalFormDto {
    n: usize,
    perm: Vec<usize>,
    pure: Vec<ComponentDto>,
}

/// Encodes a normal form as `{"n":…,"perm":[…],"pure":[…]}` where each pure
/// component is `{"pair":[a,b],"word":[[a,b,e],…]}` with `[a,b,e]` meaning
/// `λ_{a,b}^e`.
pub fn normal_form_to_json(v: &NormalForm) -> String {
    let dto = NormalFormDto {
        n: v.n(),
        perm: v.perm().images().to_vec(),
        pure: component_dtos(v.pure()),
    };
    serde_json::to_string(&dto).expect("encoding cannot fail")
}

/// Encodes a pure element as the bare component list (the `pure` field of
/// [`normal_form_to_json`] on its own).
pub fn pure_to_json(p: &PureElement) -> String {
    serde_json::to_string(&component_dtos(p)).expect("encoding cannot fail")
}

#[derive(Serialize)]
struct CoordDto {
    pair: [usize; 2],
    coeff: i64,
}

#[derive(Serialize)]
struct CrystalDto {
    n: usize,
    perm: Vec<usize>,
    vector: Vec<CoordDto>,
}

/// Encodes a crystal quotient element as `{"n":…,"perm":[…],"vector":[…]}`
/// with one `{"pair":[a,b],"coeff":k}` entry per nonzero coordinate.
pub fn crystal_to_json(c: &CrystalQuotientElement) -> String {
    let dto = CrystalDto {
        n: c.n(),
        perm: c.perm().images().to_vec(),
        vector: c
            .coords()
            .map(|(pair, coeff)| CoordDto { pair: [pair.lo(), pair.hi()], coeff })
            .collect(),
    };
    serde_json::to_string(&dto).expect("encoding cannot fail")
}

#[derive(Serialize)]
struct OrderDto {
    finite: bool,
    order: Option<u64>,
}

/// Encodes an element order as `{"finite":true,"order":r}` or
/// `{"finite":false,"order":null}`.
pub fn order_to_json(o: &Order) -> String {
    let dto = match *o {
        Order::Finite(r) => OrderDto { finite: true, order: Some(r) },
        Order::Infinite => OrderDto { finite: false, order: None },
    };
    serde_json::to_string(&dto).expect("encoding cannot fail")
}

#[derive(Serialize)]
struct RelationCheckDto {
    family: &'static str,
    indices: Vec<usize>,
    lhs: String,
    rhs: String,
}

#[derive(Serialize)]
struct RelationReportDto {
    n: usize,
    total: usize,
    failed: usize,
    passed: bool,
    failures: Vec<RelationCheckDto>,
}

/// Encodes a relation report with counts and the failing instances (normally
/// none), each failure carrying its family name, generator indices, and the
/// two words that were compared.
pub fn relation_report_to_json(r: &RelationReport) -> String {
    let failures: Vec<RelationCheckDto> = r
        .failures()
        .map(|c| RelationCheckDto {
            family: c.family,
            indices: c.indices.clone(),
            lhs: c.lhs.render(),
            rhs: c.rhs.render(),
        })
        .collect();
    let dto = RelationReportDto {
        n: r.n(),
        total: r.checks().len(),
        failed: failures.len(),
        passed: failures.is_empty(),
        failures,
    };
    serde_json::to_string(&dto).expect("encoding cannot fail")
}
