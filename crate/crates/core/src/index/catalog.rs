//! Named indices: the classical Szeged, PI and Mostar families and their
//! degree-weighted variants, plus two composite examples.

use num_traits::Signed;

use super::WeightMode;
use crate::rational::Rational;

/// The distinct six-variable functions behind the named indices.
///
/// Arguments are `(x1..x6) = (n_u, n_v, m_u, m_v, n_0, m_0)`. Every variant is
/// symmetric under `(x1,x2,x3,x4) -> (x2,x1,x4,x3)` by construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CatalogFunction {
    /// `x1 x2`
    Szeged,
    /// `x3 x4`
    EdgeSzeged,
    /// `(x1 + x5/2)(x2 + x5/2)`
    RevisedSzeged,
    /// `(x3 + x6/2)(x4 + x6/2)`
    RevisedEdgeSzeged,
    /// `x1 x4 + x2 x3`
    VertexEdgeSzeged,
    /// `(x1 + x3)(x2 + x4)`
    TotalSzeged,
    /// `x3 + x4`
    EdgePi,
    /// `x1 + x2`
    VertexPi,
    /// `x1 + x2 + x3 + x4`
    TotalPi,
    /// `|x1 - x2|`
    Mostar,
    /// `|x3 - x4|`
    EdgeMostar,
    /// `|x1 + x3 - x2 - x4|`
    TotalMostar,
    /// `x1^2 + x2^2`
    SquareVertexPi,
}

impl CatalogFunction {
    pub fn evaluate(self, x: &[Rational; 6]) -> Rational {
        let [x1, x2, x3, x4, x5, x6] = x;
        match self {
            CatalogFunction::Szeged => x1 * x2,
            CatalogFunction::EdgeSzeged => x3 * x4,
            CatalogFunction::RevisedSzeged => {
                let half = x5 / Rational::from_integer(2.into());
                (x1 + &half) * (x2 + &half)
            }
            CatalogFunction::RevisedEdgeSzeged => {
                let half = x6 / Rational::from_integer(2.into());
                (x3 + &half) * (x4 + &half)
            }
            CatalogFunction::VertexEdgeSzeged => x1 * x4 + x2 * x3,
            CatalogFunction::TotalSzeged => (x1 + x3) * (x2 + x4),
            CatalogFunction::EdgePi => x3 + x4,
            CatalogFunction::VertexPi => x1 + x2,
            CatalogFunction::TotalPi => x1 + x2 + x3 + x4,
            CatalogFunction::Mostar => (x1 - x2).abs(),
            CatalogFunction::EdgeMostar => (x3 - x4).abs(),
            CatalogFunction::TotalMostar => (x1 + x3 - x2 - x4).abs(),
            CatalogFunction::SquareVertexPi => x1 * x1 + x2 * x2,
        }
    }

    /// The same function in expression syntax.
    pub fn formula(self) -> &'static str {
        match self {
            CatalogFunction::Szeged => "x1*x2",
            CatalogFunction::EdgeSzeged => "x3*x4",
            CatalogFunction::RevisedSzeged => "(x1+x5/2)*(x2+x5/2)",
            CatalogFunction::RevisedEdgeSzeged => "(x3+x6/2)*(x4+x6/2)",
            CatalogFunction::VertexEdgeSzeged => "x1*x4+x2*x3",
            CatalogFunction::TotalSzeged => "(x1+x3)*(x2+x4)",
            CatalogFunction::EdgePi => "x3+x4",
            CatalogFunction::VertexPi => "x1+x2",
            CatalogFunction::TotalPi => "x1+x2+x3+x4",
            CatalogFunction::Mostar => "abs(x1-x2)",
            CatalogFunction::EdgeMostar => "abs(x3-x4)",
            CatalogFunction::TotalMostar => "abs(x1+x3-x2-x4)",
            CatalogFunction::SquareVertexPi => "x1*x1+x2*x2",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub title: &'static str,
    pub function: CatalogFunction,
    pub weight_mode: WeightMode,
}

const fn entry(
    name: &'static str,
    title: &'static str,
    function: CatalogFunction,
    weight_mode: WeightMode,
) -> CatalogEntry {
    CatalogEntry { name, title, function, weight_mode }
}

use CatalogFunction as F;
use WeightMode::{DegreeProduct as Prod, DegreeSum as Plus, Unit};

pub static CATALOG: [CatalogEntry; 30] = [
    entry("Sz", "Szeged index", F::Szeged, Unit),
    entry("Sz_e", "edge-Szeged index", F::EdgeSzeged, Unit),
    entry("Sz*", "revised Szeged index", F::RevisedSzeged, Unit),
    entry("Sz_e*", "revised edge-Szeged index", F::RevisedEdgeSzeged, Unit),
    entry("Sz_ve", "vertex-edge Szeged index", F::VertexEdgeSzeged, Unit),
    entry("Sz_t", "total Szeged index", F::TotalSzeged, Unit),
    entry("w+Sz", "weighted-plus Szeged index", F::Szeged, Plus),
    entry("w*Sz", "weighted-product Szeged index", F::Szeged, Prod),
    entry("w+Sz_e", "weighted-plus edge-Szeged index", F::EdgeSzeged, Plus),
    entry("w*Sz_e", "weighted-product edge-Szeged index", F::EdgeSzeged, Prod),
    entry("w+Sz_t", "weighted-plus total-Szeged index", F::TotalSzeged, Plus),
    entry("w*Sz_t", "weighted-product total-Szeged index", F::TotalSzeged, Prod),
    entry("PI", "(edge-)PI index", F::EdgePi, Unit),
    entry("PI_v", "vertex-PI index", F::VertexPi, Unit),
    entry("PI_t", "total PI index", F::TotalPi, Unit),
    entry("w+PI", "weighted-plus PI index", F::EdgePi, Plus),
    entry("w*PI", "weighted-product PI index", F::EdgePi, Prod),
    entry("w+PI_v", "weighted-plus vertex-PI index", F::VertexPi, Plus),
    entry("w*PI_v", "weighted-product vertex-PI index", F::VertexPi, Prod),
    entry("Mo", "Mostar index", F::Mostar, Unit),
    entry("Mo_e", "edge-Mostar index", F::EdgeMostar, Unit),
    entry("Mo_t", "total Mostar index", F::TotalMostar, Unit),
    entry("w+Mo", "weighted-plus Mostar index", F::Mostar, Plus),
    entry("w*Mo", "weighted-product Mostar index", F::Mostar, Prod),
    entry("w+Mo_e", "weighted-plus edge-Mostar index", F::EdgeMostar, Plus),
    entry("w*Mo_e", "weighted-product edge-Mostar index", F::EdgeMostar, Prod),
    entry("w+Mo_t", "weighted-plus total-Mostar index", F::TotalMostar, Plus),
    entry("w*Mo_t", "weighted-product total-Mostar index", F::TotalMostar, Prod),
    entry("w+Sz_e*", "weighted-plus revised edge-Szeged index", F::RevisedEdgeSzeged, Plus),
    entry("PI_v^s", "square vertex-PI index", F::SquareVertexPi, Unit),
];

/// Looks up a catalog entry. `w⁺` and `w^+` are accepted for `w+`.
pub fn lookup(name: &str) -> Option<&'static CatalogEntry> {
    let name = name.trim().replace('⁺', "+").replace("w^+", "w+").replace("w^*", "w*");
    CATALOG.iter().find(|e| e.name == name)
}
