//! Shared fixtures for the benchmarks.

use subgen_core::harness::{BoundMode, ExperimentConfig};
use subgen_core::{HomPoly, PlaceSet, PolyIdeal, Rat, VarietySpec};

pub fn conic() -> PolyIdeal {
    PolyIdeal::parse(3, &["x0*x2 - x1^2"]).expect("valid conic")
}

/// The rational normal curve of degree `d` as the image of ℙ¹.
pub fn rational_normal_map(d: u32) -> Vec<HomPoly> {
    (0..=d)
        .map(|i| {
            let s = match (d - i, i) {
                (a, 0) => format!("x0^{a}"),
                (0, b) => format!("x1^{b}"),
                (a, b) => format!("x0^{a}*x1^{b}"),
            };
            HomPoly::parse(&s, 2).expect("valid monomial")
        })
        .collect()
}

/// Four lines on ℙ², three concurrent, with `S = {∞, 2, 3, 5}` and `N = 3`.
pub fn lines4(height_bound: u64) -> ExperimentConfig {
    ExperimentConfig {
        variety: VarietySpec::projective_space(2),
        polys: ["x0", "x1", "x0 + x1", "x2"]
            .iter()
            .map(|p| HomPoly::parse(p, 3).expect("valid line"))
            .collect(),
        places: PlaceSet::default_s(),
        n_big: 3,
        epsilon: Rat::new(1.into(), 10.into()),
        height_bound,
        mode: BoundMode::Main,
        seed: 0,
    }
}
