//! Szeged-like indices `TI_F = Σ_e w_e(e) · F(e)`.

pub mod catalog;
mod engine;
pub mod expr;

use std::fmt;
use std::str::FromStr;

pub use catalog::{CatalogEntry, CatalogFunction, CATALOG};
pub use engine::{
    apply_weight_mode, edge_quantities, mode_edge_weights, normally_weight, ti_cut, ti_cut_tree, ti_direct,
    ti_direct_with_bfs, ti_tree, QuantityTable, DISTANCE_TABLE_CELL_LIMIT,
};
pub use expr::Expr;

use crate::error::{Error, Result};
use crate::rational::Rational;

/// How edge weights `w_e` are assigned before evaluation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WeightMode {
    /// `w_e = 1`
    Unit,
    /// `w_e(uv) = deg(u) + deg(v)`
    DegreeSum,
    /// `w_e(uv) = deg(u) · deg(v)`
    DegreeProduct,
    /// `w_e` taken from the graph as stored.
    Stored,
}

impl WeightMode {
    pub fn name(self) -> &'static str {
        match self {
            WeightMode::Unit => "unit",
            WeightMode::DegreeSum => "degree-sum",
            WeightMode::DegreeProduct => "degree-product",
            WeightMode::Stored => "stored",
        }
    }
}

impl fmt::Display for WeightMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for WeightMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "unit" => Ok(WeightMode::Unit),
            "degree-sum" => Ok(WeightMode::DegreeSum),
            "degree-product" => Ok(WeightMode::DegreeProduct),
            "stored" => Ok(WeightMode::Stored),
            other => Err(format!("unknown weight mode `{other}`")),
        }
    }
}

/// The six per-edge quantities of an edge `e = uv`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeQuantities {
    pub n_u: Rational,
    pub n_v: Rational,
    pub n_0: Rational,
    pub m_u: Rational,
    pub m_v: Rational,
    pub m_0: Rational,
}

impl EdgeQuantities {
    /// Arguments of a regular function: `(n_u, n_v, m_u, m_v, n_0, m_0)`.
    pub fn arguments(&self) -> [Rational; 6] {
        [self.n_u.clone(), self.n_v.clone(), self.m_u.clone(), self.m_v.clone(), self.n_0.clone(), self.m_0.clone()]
    }
}

/// A user expression that passed the symmetry sampler.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CustomFunction {
    source: String,
    expr: Expr,
}

impl CustomFunction {
    pub fn parse(source: &str) -> Result<Self> {
        let expr = expr::parse_expr(source)?;
        expr::check_symmetry(&expr)?;
        Ok(CustomFunction { source: source.trim().to_string(), expr })
    }

    pub fn source(&self) -> &str {
        &self.source
    }

    pub fn expr(&self) -> &Expr {
        &self.expr
    }
}

/// A function of six variables, symmetric under swapping the `u` and `v`
/// sides.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RegularFunction {
    Catalog(CatalogFunction),
    Custom(CustomFunction),
}

impl RegularFunction {
    pub fn evaluate_at(&self, x: &[Rational; 6]) -> Result<Rational> {
        match self {
            RegularFunction::Catalog(f) => Ok(f.evaluate(x)),
            RegularFunction::Custom(c) => c.expr.evaluate(x),
        }
    }

    pub fn evaluate(&self, q: &EdgeQuantities) -> Result<Rational> {
        self.evaluate_at(&q.arguments())
    }
}

/// Parses a custom regular function, sampling its symmetry.
pub fn parse_regular_function(source: &str) -> Result<RegularFunction> {
    CustomFunction::parse(source).map(RegularFunction::Custom)
}

/// A regular function together with the rule assigning `w_e`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexDescriptor {
    pub name: String,
    pub function: RegularFunction,
    pub weight_mode: WeightMode,
}

impl IndexDescriptor {
    pub fn from_entry(entry: &CatalogEntry) -> Self {
        IndexDescriptor {
            name: entry.name.to_string(),
            function: RegularFunction::Catalog(entry.function),
            weight_mode: entry.weight_mode,
        }
    }

    /// A named index with its own weight mode.
    pub fn catalog(name: &str) -> Result<Self> {
        catalog::lookup(name).map(Self::from_entry).ok_or_else(|| Error::UnknownIndex(name.to_string()))
    }

    pub fn custom(source: &str, weight_mode: WeightMode) -> Result<Self> {
        let function = parse_regular_function(source)?;
        Ok(IndexDescriptor { name: format!("expr:{}", source.trim()), function, weight_mode })
    }

    /// `expr:<source>` for a custom function (using `custom_mode`), else a
    /// catalog name.
    pub fn parse(text: &str, custom_mode: WeightMode) -> Result<Self> {
        match text.strip_prefix("expr:") {
            Some(source) => Self::custom(source, custom_mode),
            None => Self::catalog(text),
        }
    }

    pub fn with_weight_mode(&self, weight_mode: WeightMode) -> Self {
        IndexDescriptor { weight_mode, ..self.clone() }
    }

    /// Every catalog entry.
    pub fn all_catalog() -> Vec<Self> {
        CATALOG.iter().map(Self::from_entry).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    #[test]
    fn descriptor_parsing() {
        let sz = IndexDescriptor::parse("Sz", WeightMode::Stored).unwrap();
        assert_eq!(sz.weight_mode, WeightMode::Unit);
        let plus = IndexDescriptor::parse("w+Sz_e*", WeightMode::Unit).unwrap();
        assert_eq!(plus.weight_mode, WeightMode::DegreeSum);
        let custom = IndexDescriptor::parse("expr:(x3+x6/2)*(x4+x6/2)", WeightMode::DegreeSum).unwrap();
        assert_eq!(custom.weight_mode, WeightMode::DegreeSum);
        assert_eq!(IndexDescriptor::parse("nope", WeightMode::Unit), Err(Error::UnknownIndex("nope".into())));
        assert!(matches!(IndexDescriptor::parse("expr:x1*x3", WeightMode::Unit), Err(Error::SymmetryViolation { .. })));
        assert_eq!(IndexDescriptor::all_catalog().len(), 30);
    }

    #[test]
    fn custom_matches_catalog_szeged() {
        let custom = parse_regular_function("x1*x2").unwrap();
        let catalog = RegularFunction::Catalog(CatalogFunction::Szeged);
        for x in expr::symmetry_probes() {
            assert_eq!(custom.evaluate_at(&x).unwrap(), catalog.evaluate_at(&x).unwrap());
        }
    }

    #[test]
    fn argument_order() {
        let q = EdgeQuantities { n_u: int(1), n_v: int(2), n_0: int(3), m_u: int(4), m_v: int(5), m_0: int(6) };
        assert_eq!(q.arguments(), [int(1), int(2), int(4), int(5), int(3), int(6)]);
    }

    #[test]
    fn catalog_formulas_parse_to_the_same_function() {
        for entry in &CATALOG {
            let parsed = parse_regular_function(entry.function.formula()).unwrap();
            for x in expr::symmetry_probes() {
                assert_eq!(parsed.evaluate_at(&x).unwrap(), entry.function.evaluate(&x), "{}", entry.name);
            }
        }
    }
}
