//! Manifold models as rational homological data: dimension, orientability,
//! Betti profile and compactly supported Euler characteristic, plus the
//! connectivity condition detector and the puncturing operation.
//!
//! Exact homology computations downstream are restricted to
//! euclidean-like models (ℝ^d and its punctured variants); every other
//! model feeds only the range calculators.

use serde::{Deserialize, Serialize};

use crate::graded::GradedDim;
use crate::{Error, Result};

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ManifoldModel {
    pub name: String,
    #[serde(rename = "dim")]
    pub d: u32,
    pub orientable: bool,
    /// Interior of a manifold with non-empty boundary.
    #[serde(rename = "open")]
    pub open_interior: bool,
    /// Rational Betti numbers b_i.
    pub betti: GradedDim,
    /// Compactly supported Euler characteristic. Stored, not derived:
    /// for odd-dimensional open manifolds it is not determined by the
    /// Betti numbers alone.
    pub chi_c: i64,
    /// Exactly-computable flag: true for ℝ^d and its punctured variants.
    pub euclidean_like: bool,
}

/// Outcome of the low-degree vanishing test: either b_1 ≠ 0, or the
/// largest a < d−1 with reduced b_i = 0 for all i ≤ a.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum ConditionA {
    H1Nonzero,
    Holds(u32),
}

impl ManifoldModel {
    pub fn new(
        name: impl Into<String>,
        d: u32,
        orientable: bool,
        open_interior: bool,
        betti: GradedDim,
        chi_c: i64,
        euclidean_like: bool,
    ) -> Self {
        ManifoldModel {
            name: name.into(),
            d,
            orientable,
            open_interior,
            betti,
            chi_c,
            euclidean_like,
        }
    }

    /// Largest admissible a with reduced b_i = 0 for i ≤ a (capped by
    /// a < d−1), or the b_1 ≠ 0 marker.
    pub fn condition_a(&self) -> ConditionA {
        if self.betti.dim(1) != 0 {
            return ConditionA::H1Nonzero;
        }
        let cap = self.d.saturating_sub(2);
        let mut a = 0;
        while a < cap && self.betti.dim(a as usize + 1) == 0 {
            a += 1;
        }
        ConditionA::Holds(a)
    }

    /// Removes `r` points. Exact mode only: the input must be
    /// euclidean-like, in which case the Betti profile gains r classes in
    /// degree d−1 and χ_c drops by r.
    pub fn puncture(&self, r: u32) -> Result<ManifoldModel> {
        if !self.euclidean_like {
            return Err(Error::UnsupportedModel(format!(
                "puncture requires a euclidean-like model, got '{}'",
                self.name
            )));
        }
        if r == 0 {
            return Ok(self.clone());
        }
        let mut betti = self.betti.clone();
        let top = self.d as usize - 1;
        betti.set_dim(top, betti.dim(top) + r as u64);
        Ok(ManifoldModel {
            name: format!("{} minus {r} points", self.name),
            d: self.d,
            orientable: self.orientable,
            open_interior: true,
            betti,
            chi_c: self.chi_c - r as i64,
            euclidean_like: true,
        })
    }

    /// Invariant violations, empty when the model is consistent.
    pub fn validate(&self) -> Vec<String> {
        let mut violations = Vec::new();
        if self.d < 2 {
            violations.push(format!("dimension {} < 2", self.d));
        }
        if self.betti.dim(0) != 1 {
            violations.push("not connected (b_0 != 1)".into());
        }
        if let Some(top) = self.betti.max_degree() {
            if top > self.d as usize {
                violations.push(format!(
                    "Betti numbers supported above the dimension ({top} > {})",
                    self.d
                ));
            }
        }
        let alternating = self.betti.euler();
        if self.d % 2 == 0 && !self.open_interior && self.chi_c != alternating {
            violations.push(format!(
                "closed even-dimensional model must have chi_c = {alternating}, got {}",
                self.chi_c
            ));
        }
        if self.euclidean_like {
            // For ℝ^d minus points: χ_c = (−1)^d · Σ(−1)^i b_i.
            let sign = if self.d % 2 == 0 { 1 } else { -1 };
            if self.chi_c != sign * alternating {
                violations.push(format!(
                    "euclidean-like model must have chi_c = {}, got {}",
                    sign * alternating,
                    self.chi_c
                ));
            }
        }
        violations
    }
}

/// ℝ^d: connected, contractible, open, χ_c = (−1)^d.
pub fn euclidean(d: u32) -> ManifoldModel {
    ManifoldModel::new(
        format!("R{d}"),
        d,
        true,
        true,
        GradedDim::point(),
        if d % 2 == 0 { 1 } else { -1 },
        true,
    )
}

/// The built-in model library, addressable by name from the CLI.
pub fn builtin_models() -> Vec<ManifoldModel> {
    let mut models: Vec<ManifoldModel> = (2..=6).map(euclidean).collect();
    models.push(ManifoldModel::new(
        "S2",
        2,
        true,
        false,
        GradedDim::from_dims(vec![1, 0, 1]),
        2,
        false,
    ));
    models.push(euclidean(2).puncture(1).map(rename("R2minus1")).unwrap());
    models.push(euclidean(3).puncture(1).map(rename("R3minus1")).unwrap());
    // Open solid torus S¹ × ℝ².
    models.push(ManifoldModel::new(
        "solid-torus",
        3,
        true,
        true,
        GradedDim::from_dims(vec![1, 1]),
        0,
        false,
    ));
    // Non-orientable surface placeholder (open Möbius band); feeds the
    // range arithmetic only.
    models.push(ManifoldModel::new(
        "mobius",
        2,
        false,
        true,
        GradedDim::from_dims(vec![1, 1]),
        0,
        false,
    ));
    models
}

fn rename(name: &str) -> impl Fn(ManifoldModel) -> ManifoldModel + '_ {
    move |mut m| {
        m.name = name.to_string();
        m
    }
}

pub fn builtin(name: &str) -> Option<ManifoldModel> {
    builtin_models().into_iter().find(|m| m.name == name)
}

/// Loads a model from its JSON document
/// {name, dim, orientable, open, betti: […], chi_c, euclidean_like}.
pub fn from_json(json: &str) -> Result<ManifoldModel> {
    serde_json::from_str(json).map_err(|e| Error::Invalid(format!("manifold JSON: {e}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn condition_a_cases() {
        assert_eq!(euclidean(4).condition_a(), ConditionA::Holds(2));
        assert_eq!(
            builtin("solid-torus").unwrap().condition_a(),
            ConditionA::H1Nonzero
        );
        assert_eq!(builtin("S2").unwrap().condition_a(), ConditionA::Holds(0));
    }

    #[test]
    fn puncture_examples() {
        let m = euclidean(2).puncture(3).unwrap();
        assert_eq!(m.betti, GradedDim::from_dims(vec![1, 3]));
        assert_eq!(m.chi_c, -2);
        assert!(m.validate().is_empty());
        assert_eq!(euclidean(4).puncture(0).unwrap(), euclidean(4));
        let m = euclidean(3).puncture(2).unwrap();
        assert_eq!(m.betti, GradedDim::from_dims(vec![1, 0, 2]));
        assert_eq!(m.chi_c, -3);
        assert!(m.validate().is_empty());
        assert!(builtin("S2").unwrap().puncture(1).is_err());
    }

    #[test]
    fn puncture_composes() {
        for d in 2..=5 {
            for r in 0..=3 {
                for s in 0..=3 {
                    let a = euclidean(d).puncture(r).unwrap().puncture(s).unwrap();
                    let b = euclidean(d).puncture(r + s).unwrap();
                    assert_eq!((a.betti, a.chi_c), (b.betti, b.chi_c));
                }
            }
        }
    }

    #[test]
    fn condition_a_of_punctured_euclidean() {
        for d in 3..=6 {
            for r in 1..=5 {
                let m = euclidean(d).puncture(r).unwrap();
                // Punctures only touch degree d−1, above the a < d−1 cap.
                assert_eq!(m.condition_a(), euclidean(d).condition_a());
                assert_eq!(m.condition_a(), ConditionA::Holds(d - 2));
            }
        }
    }

    #[test]
    fn validation_flags() {
        assert!(euclidean(2).validate().is_empty());
        let mut bad = euclidean(2);
        bad.betti = GradedDim::from_dims(vec![2]);
        assert!(bad.validate().iter().any(|v| v.contains("connected")));
        let mut s2 = builtin("S2").unwrap();
        s2.chi_c = 3;
        assert!(s2.validate().iter().any(|v| v.contains("chi_c")));
    }

    #[test]
    fn builtins_validate() {
        for m in builtin_models() {
            assert!(m.validate().is_empty(), "{}: {:?}", m.name, m.validate());
        }
    }

    #[test]
    fn json_roundtrip() {
        let m = builtin("solid-torus").unwrap();
        let json = serde_json::to_string(&m).unwrap();
        assert_eq!(from_json(&json).unwrap(), m);
        let doc = r#"{"name":"X","dim":3,"orientable":true,"open":true,
                      "betti":[1,1],"chi_c":0,"euclidean_like":false}"#;
        let m = from_json(doc).unwrap();
        assert_eq!(m.d, 3);
        assert!(m.open_interior);
    }
}
