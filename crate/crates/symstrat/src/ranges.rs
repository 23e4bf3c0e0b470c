//! Closed-form homological stability ranges as exact integer functions,
//! with case selection driven by the manifold model. Divisions by two are
//! floored everywhere; the functions assert integer bounds.
//!
//! Eleven labeled ranges are exposed under one dispatcher: the three
//! orientable cases, the two non-orientable cases, the simplified range,
//! the integral surface range, the bounded symmetric power range, and
//! three auxiliary thresholds (stratum stabilization, per-column
//! compact-support thresholds, symmetric-power compact-support
//! stability).

use std::collections::BTreeMap;

use serde::Serialize;

use crate::manifolds::{ConditionA, ManifoldModel};
use crate::partitions::Partition;
use crate::{Error, Result};

/// Labels of the range formulas.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum RangeCase {
    #[serde(rename = "d>2-H1≠0")]
    HighDimH1,
    #[serde(rename = "d=2-H1≠0")]
    SurfaceH1,
    #[serde(rename = "star_a")]
    StarA,
    #[serde(rename = "nonorientable-d>2")]
    NonOrientableHighDim,
    #[serde(rename = "nonorientable-d=2")]
    NonOrientableSurface,
    #[serde(rename = "simplified")]
    Simplified,
    #[serde(rename = "integral-surface")]
    IntegralSurface,
    #[serde(rename = "bounded-sym")]
    BoundedSym,
    #[serde(rename = "stratum-stab")]
    StratumStab,
    #[serde(rename = "stratum-column")]
    StratumColumn,
    #[serde(rename = "sym-power")]
    SymPower,
}

/// An evaluated range: the largest degree for which stability is asserted
/// (or the threshold degree for the auxiliary labels), the selected case,
/// the echoed inputs, and any warnings.
#[derive(Clone, Debug, Serialize)]
pub struct RangeResult {
    pub bound: i64,
    pub case: RangeCase,
    pub inputs: BTreeMap<String, String>,
    pub warnings: Vec<String>,
}

fn echo_mlj(m: &ManifoldModel, lambda: &Partition, j: u32) -> BTreeMap<String, String> {
    let mut inputs = BTreeMap::new();
    inputs.insert("manifold".into(), m.name.clone());
    inputs.insert("d".into(), m.d.to_string());
    inputs.insert("lambda".into(), lambda.to_string());
    inputs.insert("k".into(), lambda.k().to_string());
    inputs.insert("r".into(), lambda.r().to_string());
    inputs.insert("j".into(), j.to_string());
    inputs
}

fn degenerate_warning(lambda: &Partition, warnings: &mut Vec<String>) {
    if lambda.all_ones() {
        warnings.push("degenerate: all-ones partition, the complement is empty".into());
    }
}

/// Stability range of the complement for orientable models: the largest i
/// with H_i independent of the number of added unit points.
pub fn f_or(m: &ManifoldModel, lambda: &Partition, j: u32) -> Result<RangeResult> {
    if !m.orientable {
        return Err(Error::NonOrientableInput(m.name.clone()));
    }
    if m.d < 2 {
        return Err(Error::Invalid("dimension must be at least 2".into()));
    }
    let d = m.d as i64;
    let k = lambda.k() as i64;
    let r = lambda.r() as i64;
    let j = j as i64;
    let mut warnings = Vec::new();
    degenerate_warning(lambda, &mut warnings);
    let mut inputs = echo_mlj(m, lambda, j as u32);
    let (case, bound) = match m.condition_a() {
        ConditionA::Holds(a) if a >= 1 => {
            let a = a as i64;
            inputs.insert("a".into(), a.to_string());
            (
                RangeCase::StarA,
                ((a + 1) * (k + j)).min(d * (k - r) + (a + 1) * j - 2) - 1,
            )
        }
        ConditionA::H1Nonzero if m.d > 2 => {
            (RangeCase::HighDimH1, (k + j).min(d * (k - r) + j - 1) - 1)
        }
        _ => {
            // d = 2: the connectivity case needs a ≥ 1 but a < d−1 caps a
            // at 0, so the surface formula is applied; flag when b_1 = 0.
            if m.betti.dim(1) == 0 {
                warnings.push("case not explicitly covered: d = 2 with H_1 = 0".into());
            }
            (RangeCase::SurfaceH1, (k + j).min(2 * (k - r) + j - 2) - 1)
        }
    };
    Ok(RangeResult {
        bound,
        case,
        inputs,
        warnings,
    })
}

/// Stability range of the complement for non-orientable models.
pub fn f_nor(m: &ManifoldModel, lambda: &Partition, j: u32) -> Result<RangeResult> {
    if m.orientable {
        return Err(Error::OrientableInput(m.name.clone()));
    }
    if m.d < 2 {
        return Err(Error::Invalid("dimension must be at least 2".into()));
    }
    let d = m.d as i64;
    let k = lambda.k() as i64;
    let r = lambda.r() as i64;
    let jj = j as i64;
    let mut warnings = Vec::new();
    degenerate_warning(lambda, &mut warnings);
    let inputs = echo_mlj(m, lambda, j);
    let (case, bound) = if m.d > 2 {
        (
            RangeCase::NonOrientableHighDim,
            (k + jj).min(d * (k - r) + jj - 1) - 1,
        )
    } else {
        (
            RangeCase::NonOrientableSurface,
            (k + jj).min(2 * (k - r) + jj / 2 - 1) - 1,
        )
    };
    Ok(RangeResult {
        bound,
        case,
        inputs,
        warnings,
    })
}

/// The manifold-only simplified range: j−1, except j/2−1 (floored) for
/// non-orientable surfaces.
pub fn simplified_range(m: &ManifoldModel, j: u32) -> Result<RangeResult> {
    if m.d < 2 {
        return Err(Error::Invalid("dimension must be at least 2".into()));
    }
    let jj = j as i64;
    let bound = if !m.orientable && m.d == 2 {
        jj / 2 - 1
    } else {
        jj - 1
    };
    let mut inputs = BTreeMap::new();
    inputs.insert("manifold".into(), m.name.clone());
    inputs.insert("d".into(), m.d.to_string());
    inputs.insert("j".into(), j.to_string());
    Ok(RangeResult {
        bound,
        case: RangeCase::Simplified,
        inputs,
        warnings: Vec::new(),
    })
}

/// The auxiliary labeled thresholds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AuxQuery {
    /// Stabilization range for a stratum whose partition has `i` ones:
    /// isomorphisms for degrees ≤ bound.
    StratumStab { i: u32, d: u32, a: Option<u32> },
    /// Per-column compact-support threshold for depth-p collapse columns:
    /// isomorphisms for degrees ≥ bound (case 1), > bound (cases 2, 3).
    StratumColumn {
        p: u32,
        j: u32,
        r: u32,
        n: u32,
        case: u8,
        a: Option<u32>,
    },
    /// Symmetric-power compact-support stability: isomorphisms for
    /// degrees ≥ bound.
    SymPower {
        n: u32,
        k: u32,
        j: u32,
        a: Option<u32>,
    },
    /// Integral-coefficient stability for surfaces.
    IntegralSurface { k: u32, r: u32, j: u32 },
    /// Bounded symmetric powers: stability for degrees ≤ bound.
    BoundedSym { k: u32, c: u32, d: u32 },
}

pub fn auxiliary_ranges(query: &AuxQuery) -> Result<RangeResult> {
    let mut inputs = BTreeMap::new();
    let mut warnings = Vec::new();
    let (case, bound) = match *query {
        AuxQuery::StratumStab { i, d, a } => {
            if d < 2 {
                return Err(Error::Invalid("dimension must be at least 2".into()));
            }
            inputs.insert("i".into(), i.to_string());
            inputs.insert("d".into(), d.to_string());
            let bound = match a {
                Some(a) => {
                    inputs.insert("a".into(), a.to_string());
                    (a as i64 + 1) * i as i64 - 1
                }
                None if d > 2 => i as i64,
                None => i as i64 - 1,
            };
            (RangeCase::StratumStab, bound)
        }
        AuxQuery::StratumColumn { p, j, r, n, case, a } => {
            inputs.insert("p".into(), p.to_string());
            inputs.insert("j".into(), j.to_string());
            inputs.insert("r".into(), r.to_string());
            inputs.insert("n".into(), n.to_string());
            inputs.insert("case".into(), case.to_string());
            let (p, j, r, n) = (p as i64, j as i64, r as i64, n as i64);
            let bound = match case {
                1 | 2 => 2 * n * (j + r - p + 1) - j + p,
                3 => {
                    let a = a.ok_or_else(|| {
                        Error::Invalid("case 3 needs the connectivity parameter a".into())
                    })? as i64;
                    inputs.insert("a".into(), a.to_string());
                    let statement = 2 * n * (j + r - p + 1) - (a + 1) * (j + p);
                    let per_column = 2 * n * (j + r - p + 1) - (a + 1) * (j - p) - p;
                    if statement != per_column {
                        warnings.push(format!(
                            "stated threshold {statement} differs from the per-column form {per_column}; the vanishing checks use the per-column form"
                        ));
                    }
                    statement
                }
                _ => return Err(Error::Invalid(format!("unknown case {case}"))),
            };
            (RangeCase::StratumColumn, bound)
        }
        AuxQuery::SymPower { n, k, j, a } => {
            inputs.insert("n".into(), n.to_string());
            inputs.insert("k".into(), k.to_string());
            inputs.insert("j".into(), j.to_string());
            let (n, k, j) = (n as i64, k as i64, j as i64);
            let bound = match a {
                Some(a) => {
                    inputs.insert("a".into(), a.to_string());
                    2 * n * (k + j + 1) - (a as i64 + 1) * (k + j)
                }
                None => 2 * n * (k + j + 1) - (k + j),
            };
            (RangeCase::SymPower, bound)
        }
        AuxQuery::IntegralSurface { k, r, j } => {
            inputs.insert("k".into(), k.to_string());
            inputs.insert("r".into(), r.to_string());
            inputs.insert("j".into(), j.to_string());
            let (k, r, j) = (k as i64, r as i64, j as i64);
            (
                RangeCase::IntegralSurface,
                (k + j).min(2 * (k - r) + j / 2 - 1) - 1,
            )
        }
        AuxQuery::BoundedSym { k, c, d } => {
            if d < 2 {
                return Err(Error::Invalid("dimension must be at least 2".into()));
            }
            inputs.insert("k".into(), k.to_string());
            inputs.insert("c".into(), c.to_string());
            inputs.insert("d".into(), d.to_string());
            let (k, c) = (k as i64, c as i64);
            let bound = if d > 2 { k - 1 } else { (k - 1).min(c - 4 + k) };
            (RangeCase::BoundedSym, bound)
        }
    };
    Ok(RangeResult {
        bound,
        case,
        inputs,
        warnings,
    })
}

/// One dispatcher over all eleven labeled ranges.
#[derive(Clone, Debug)]
pub enum RangeQuery {
    Orientable {
        manifold: ManifoldModel,
        lambda: Partition,
        j: u32,
    },
    NonOrientable {
        manifold: ManifoldModel,
        lambda: Partition,
        j: u32,
    },
    Simplified { manifold: ManifoldModel, j: u32 },
    Aux(AuxQuery),
}

pub fn evaluate(query: &RangeQuery) -> Result<RangeResult> {
    match query {
        RangeQuery::Orientable {
            manifold,
            lambda,
            j,
        } => f_or(manifold, lambda, *j),
        RangeQuery::NonOrientable {
            manifold,
            lambda,
            j,
        } => f_nor(manifold, lambda, *j),
        RangeQuery::Simplified { manifold, j } => simplified_range(manifold, *j),
        RangeQuery::Aux(aux) => auxiliary_ranges(aux),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graded::GradedDim;
    use crate::manifolds::{builtin, euclidean};

    fn p(s: &str) -> Partition {
        Partition::parse(s).unwrap()
    }

    #[test]
    fn orientable_spot_checks() {
        // ℝ⁴ (a = 2), λ = 2, j = 5: min(21, 4 + 15 − 2) − 1 = 16.
        let out = f_or(&euclidean(4), &p("2"), 5).unwrap();
        assert_eq!(out.bound, 16);
        assert_eq!(out.case, RangeCase::StarA);
        // Open solid torus (d = 3, b₁ ≠ 0), λ = 3, j = 4: min(7, 9) − 1.
        let out = f_or(&builtin("solid-torus").unwrap(), &p("3"), 4).unwrap();
        assert_eq!(out.bound, 6);
        assert_eq!(out.case, RangeCase::HighDimH1);
        // All-ones λ is degenerate but still computed.
        let out = f_or(&euclidean(3), &p("1,1"), 2).unwrap();
        assert!(out.warnings.iter().any(|w| w.contains("degenerate")));
        // Non-orientable input is rejected.
        assert!(matches!(
            f_or(&builtin("mobius").unwrap(), &p("2"), 1),
            Err(Error::NonOrientableInput(_))
        ));
    }

    #[test]
    fn surface_without_h1_gets_flagged() {
        let out = f_or(&euclidean(2), &p("2"), 3).unwrap();
        assert_eq!(out.case, RangeCase::SurfaceH1);
        assert!(out.warnings.iter().any(|w| w.contains("not explicitly covered")));
        // min(5, 2·1+3−2)−1 = 2.
        assert_eq!(out.bound, 2);
        // Punctured plane has b₁ ≠ 0: same formula, no warning.
        let out = f_or(&builtin("R2minus1").unwrap(), &p("2"), 3).unwrap();
        assert_eq!(out.case, RangeCase::SurfaceH1);
        assert!(out.warnings.is_empty());
    }

    #[test]
    fn nonorientable_spot_checks() {
        let mobius = builtin("mobius").unwrap();
        // min(6, 2 + 2 − 1) − 1 = 2.
        let out = f_nor(&mobius, &p("2"), 4).unwrap();
        assert_eq!(out.bound, 2);
        assert_eq!(out.case, RangeCase::NonOrientableSurface);
        // j = 0: min(2, 2 + 0 − 1) − 1 = 0.
        assert_eq!(f_nor(&mobius, &p("2"), 0).unwrap().bound, 0);
        // A non-orientable 3-model: min(6, 3 + 3) − 1 = 5.
        let m = ManifoldModel::new(
            "open-nonorientable-3",
            3,
            false,
            true,
            GradedDim::from_dims(vec![1, 1]),
            0,
            false,
        );
        let out = f_nor(&m, &p("2"), 4).unwrap();
        assert_eq!(out.bound, 5);
        assert_eq!(out.case, RangeCase::NonOrientableHighDim);
        assert!(matches!(
            f_nor(&euclidean(3), &p("2"), 1),
            Err(Error::OrientableInput(_))
        ));
    }

    #[test]
    fn simplified_spot_checks() {
        assert_eq!(simplified_range(&euclidean(3), 5).unwrap().bound, 4);
        assert_eq!(
            simplified_range(&builtin("mobius").unwrap(), 5).unwrap().bound,
            1
        );
        assert_eq!(simplified_range(&euclidean(2), 0).unwrap().bound, -1);
    }

    #[test]
    fn auxiliary_spot_checks() {
        let out = auxiliary_ranges(&AuxQuery::StratumStab {
            i: 4,
            d: 3,
            a: None,
        })
        .unwrap();
        assert_eq!(out.bound, 4);
        let out = auxiliary_ranges(&AuxQuery::StratumStab {
            i: 4,
            d: 2,
            a: None,
        })
        .unwrap();
        assert_eq!(out.bound, 3);
        let out = auxiliary_ranges(&AuxQuery::SymPower {
            n: 1,
            k: 2,
            j: 3,
            a: None,
        })
        .unwrap();
        assert_eq!(out.bound, 7);
        let out = auxiliary_ranges(&AuxQuery::BoundedSym { k: 6, c: 3, d: 2 }).unwrap();
        assert_eq!(out.bound, 5);
        let out = auxiliary_ranges(&AuxQuery::IntegralSurface { k: 2, r: 1, j: 4 }).unwrap();
        // min(6, 2 + 2 − 1) − 1 = 2.
        assert_eq!(out.bound, 2);
        // Column threshold, case 1: 2·2·(2+1−1+1) − 2 + 1 = 11.
        let out = auxiliary_ranges(&AuxQuery::StratumColumn {
            p: 1,
            j: 2,
            r: 1,
            n: 2,
            case: 1,
            a: None,
        })
        .unwrap();
        assert_eq!(out.bound, 11);
        // Case 3 with p > 0 surfaces the per-column variant.
        let out = auxiliary_ranges(&AuxQuery::StratumColumn {
            p: 1,
            j: 2,
            r: 1,
            n: 2,
            case: 3,
            a: Some(1),
        })
        .unwrap();
        assert!(!out.warnings.is_empty());
    }

    #[test]
    fn dominance_over_simplified() {
        // For k > r and j ≥ 2 the full formula is at least as good as the
        // simplified one, in all three orientable cases.
        let star_models: Vec<ManifoldModel> = (3..=6).map(euclidean).collect();
        let mut h1_models = vec![builtin("solid-torus").unwrap(), builtin("R2minus1").unwrap()];
        for d in 3..=6 {
            h1_models.push(ManifoldModel::new(
                format!("open-h1-{d}"),
                d,
                true,
                true,
                GradedDim::from_dims(vec![1, 1]),
                0,
                false,
            ));
        }
        for m in star_models.iter().chain(&h1_models) {
            for k in 2..=8u32 {
                for lam in crate::partitions::partitions_of(k) {
                    if lam.r() as u64 >= lam.k() {
                        continue;
                    }
                    for j in 2..=12u32 {
                        let full = f_or(m, &lam, j).unwrap().bound;
                        let simple = simplified_range(m, j).unwrap().bound;
                        assert!(
                            full >= simple,
                            "{} λ={lam} j={j}: {full} < {simple}",
                            m.name
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn monotone_in_j() {
        let models = [
            euclidean(2),
            euclidean(4),
            builtin("solid-torus").unwrap(),
            builtin("R2minus1").unwrap(),
        ];
        for m in &models {
            for k in 1..=6u32 {
                for lam in crate::partitions::partitions_of(k) {
                    let mut prev = None;
                    for j in 0..=12u32 {
                        let bound = f_or(m, &lam, j).unwrap().bound;
                        if let Some(prev) = prev {
                            assert!(bound >= prev, "{} λ={lam} j={j}", m.name);
                        }
                        prev = Some(bound);
                    }
                }
            }
        }
        let mobius = builtin("mobius").unwrap();
        let mut prev = None;
        for j in 0..=12u32 {
            let bound = f_nor(&mobius, &p("2,1"), j).unwrap().bound;
            if let Some(prev) = prev {
                assert!(bound >= prev);
            }
            prev = Some(bound);
        }
    }

    #[test]
    fn case_selection_ignores_betti_magnitudes() {
        // b₁ ≠ 0 is a vanishing test: scaling the profile must not change
        // the selected case or bound.
        let base = builtin("solid-torus").unwrap();
        let mut scaled = base.clone();
        scaled.betti = GradedDim::from_dims(vec![1, 3]);
        let a = f_or(&base, &p("3,2"), 4).unwrap();
        let b = f_or(&scaled, &p("3,2"), 4).unwrap();
        assert_eq!(a.case, b.case);
        assert_eq!(a.bound, b.bound);
    }

    #[test]
    fn dispatcher_covers_labels() {
        let queries = vec![
            RangeQuery::Orientable {
                manifold: euclidean(4),
                lambda: p("2"),
                j: 5,
            },
            RangeQuery::NonOrientable {
                manifold: builtin("mobius").unwrap(),
                lambda: p("2"),
                j: 4,
            },
            RangeQuery::Simplified {
                manifold: euclidean(3),
                j: 5,
            },
            RangeQuery::Aux(AuxQuery::StratumStab {
                i: 4,
                d: 3,
                a: None,
            }),
            RangeQuery::Aux(AuxQuery::StratumColumn {
                p: 0,
                j: 1,
                r: 1,
                n: 1,
                case: 1,
                a: None,
            }),
            RangeQuery::Aux(AuxQuery::SymPower {
                n: 1,
                k: 2,
                j: 3,
                a: None,
            }),
            RangeQuery::Aux(AuxQuery::IntegralSurface { k: 2, r: 1, j: 4 }),
            RangeQuery::Aux(AuxQuery::BoundedSym { k: 6, c: 3, d: 2 }),
        ];
        for q in &queries {
            assert!(evaluate(q).is_ok());
        }
    }
}
