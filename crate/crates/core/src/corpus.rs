//! Bundled example presentations.

use std::sync::Arc;

use crate::algebra::AlgebraPresentation;
use crate::parse::parse_presentation;

/// `(name, file contents)` for every bundled presentation.
pub const FILES: &[(&str, &str)] = &[
    ("weyl1", include_str!("../corpus/weyl1.alg")),
    ("weyl2", include_str!("../corpus/weyl2.alg")),
    ("qplane_q2", include_str!("../corpus/qplane_q2.alg")),
    ("qplane_q2_gf7", include_str!("../corpus/qplane_q2_gf7.alg")),
    ("usl2", include_str!("../corpus/usl2.alg")),
    ("heisenberg", include_str!("../corpus/heisenberg.alg")),
    ("inconsistent_demo", include_str!("../corpus/inconsistent_demo.alg")),
];

/// Looks up a bundled presentation by name, with or without `.alg`.
pub fn source(name: &str) -> Option<&'static str> {
    let name = name.strip_suffix(".alg").unwrap_or(name);
    FILES.iter().find(|(n, _)| *n == name).map(|(_, text)| *text)
}

/// Parses a bundled presentation. Panics on an unknown name.
pub fn load(name: &str) -> Arc<AlgebraPresentation> {
    let text = source(name).unwrap_or_else(|| panic!("no bundled presentation `{name}`"));
    parse_presentation(text).expect("bundled presentations parse")
}

pub fn weyl1() -> Arc<AlgebraPresentation> {
    load("weyl1")
}

pub fn weyl2() -> Arc<AlgebraPresentation> {
    load("weyl2")
}

pub fn qplane_q2() -> Arc<AlgebraPresentation> {
    load("qplane_q2")
}

pub fn qplane_q2_gf7() -> Arc<AlgebraPresentation> {
    load("qplane_q2_gf7")
}

pub fn usl2() -> Arc<AlgebraPresentation> {
    load("usl2")
}

pub fn heisenberg() -> Arc<AlgebraPresentation> {
    load("heisenberg")
}

pub fn inconsistent_demo() -> Arc<AlgebraPresentation> {
    load("inconsistent_demo")
}
