//! E¹ pages of the open-filtration spectral sequence for discriminants of
//! symmetric powers of ℝ^d, their support and vanishing ranges, page
//! comparison under stabilization, and the long-exact-sequence
//! consequences for the complement W.
//!
//! Differentials are never computed. The filtration's connecting maps
//! raise total compactly-supported degree by one and drop the column
//! index, so two entries can interact only when the target sits in a
//! strictly smaller column with total degree one higher; "exactness by
//! sparsity" is that purely positional criterion. Only dimensions are
//! tracked, so there is no extension ambiguity over ℚ.

use std::collections::BTreeMap;

use num::BigInt;

use crate::confighomology::{
    stratum_compact_support, stratum_homology_discriminant_twist, MAX_POINTS,
};
use crate::euler::EulerLedger;
use crate::graded::GradedDim;
use crate::manifolds::{ConditionA, ManifoldModel};
use crate::partitions::Partition;
use crate::{Error, Result};

/// Which stratum groups feed the page.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum TwistMode {
    /// Even d: untwisted stratum homology.
    Even,
    /// Odd d: the sign-twisted stratum groups.
    OddTwisted,
}

/// One stratum's contribution to a column.
#[derive(Clone, Debug)]
pub struct ColumnStratum {
    pub partition: Partition,
    pub compact_support: GradedDim,
}

/// A bigraded table of non-negative integers with per-column metadata
/// naming the contributing collapse partitions.
#[derive(Clone, Debug)]
pub struct E1Page {
    pub lambda: Partition,
    pub j: usize,
    pub d: u32,
    pub twist: TwistMode,
    /// (p, q) → dimension; E¹_{p,q} bounds H^{p+q}_c of the discriminant.
    pub entries: BTreeMap<(i64, i64), u64>,
    pub columns: BTreeMap<i64, Vec<ColumnStratum>>,
    /// λ is all ones: the discriminant is the whole symmetric power.
    pub degenerate: bool,
}

impl E1Page {
    pub fn entry(&self, p: i64, q: i64) -> u64 {
        self.entries.get(&(p, q)).copied().unwrap_or(0)
    }

    /// Totals per compactly-supported degree t = p+q; degreewise upper
    /// bounds for the discriminant groups, exact when the page is sparse.
    pub fn totals_by_cs_degree(&self) -> GradedDim {
        let mut g = GradedDim::zero();
        for (&(p, q), &dim) in &self.entries {
            let t = p + q;
            assert!(t >= 0, "compactly supported degrees are non-negative");
            g.add_dim(t as usize, dim);
        }
        g
    }

    /// Σ (−1)^{p+q} over the page.
    pub fn euler(&self) -> BigInt {
        let mut sum = BigInt::from(0);
        for (&(p, q), &dim) in &self.entries {
            if (p + q) % 2 == 0 {
                sum += BigInt::from(dim);
            } else {
                sum -= BigInt::from(dim);
            }
        }
        sum
    }

    pub fn total_degree_range(&self) -> Option<(i64, i64)> {
        let mut range: Option<(i64, i64)> = None;
        for &(p, q) in self.entries.keys() {
            let t = p + q;
            range = Some(match range {
                None => (t, t),
                Some((lo, hi)) => (lo.min(t), hi.max(t)),
            });
        }
        range
    }

    /// Pairs of nonzero entries that some differential could connect:
    /// source (p₁, t) and target (p₂, t+1) with p₂ < p₁ (t = p+q).
    pub fn blocked_pairs(&self) -> Vec<((i64, i64), (i64, i64))> {
        let mut pairs = Vec::new();
        for (&(p1, q1), _) in &self.entries {
            for (&(p2, q2), _) in &self.entries {
                if p2 < p1 && p2 + q2 == p1 + q1 + 1 {
                    pairs.push(((p1, q1), (p2, q2)));
                }
            }
        }
        pairs
    }

    pub fn is_sparse(&self) -> bool {
        self.blocked_pairs().is_empty()
    }
}

/// Builds the E¹ page for the discriminant of 1^j λ inside the
/// (k+j)-th symmetric power of ℝ^d: column p collects the compactly
/// supported contributions of the depth-p collapses, entry
/// (p, q) = Σ dim H^{p+q}_c of those strata.
pub fn build_e1(lambda: &Partition, j: usize, d: u32) -> Result<E1Page> {
    if d < 2 {
        return Err(Error::Invalid("ambient dimension must be at least 2".into()));
    }
    let stabilized = lambda.add_ones(j);
    if stabilized.r() as u32 > MAX_POINTS {
        return Err(Error::ResourceBound {
            what: "parts of the stabilized partition",
            requested: stabilized.r() as u64,
            limit: MAX_POINTS as u64,
        });
    }
    let twist = if d % 2 == 0 {
        TwistMode::Even
    } else {
        TwistMode::OddTwisted
    };
    let mut entries = BTreeMap::new();
    let mut columns = BTreeMap::new();
    for (depth, level) in stabilized.collapses_by_depth().into_iter().enumerate() {
        let p = depth as i64;
        let mut column = Vec::new();
        for lp in level {
            let cs = stratum_compact_support(&lp, d)?;
            for (t, dim) in cs.iter() {
                *entries.entry((p, t as i64 - p)).or_insert(0) += dim;
            }
            column.push(ColumnStratum {
                partition: lp,
                compact_support: cs,
            });
        }
        columns.insert(p, column);
    }
    Ok(E1Page {
        lambda: lambda.clone(),
        j,
        d,
        twist,
        entries,
        columns,
        degenerate: lambda.all_ones(),
    })
}

/// Internal page built from the fully twisted stratum groups of the
/// odd-dimensional discriminant theory (nonzero only on all-ones strata);
/// this is the page whose totals feed the odd-d complement extraction.
fn build_e1_discriminant_twist(lambda: &Partition, j: usize, d: u32) -> Result<E1Page> {
    debug_assert!(d % 2 == 1);
    let stabilized = lambda.add_ones(j);
    let mut entries = BTreeMap::new();
    let mut columns = BTreeMap::new();
    for (depth, level) in stabilized.collapses_by_depth().into_iter().enumerate() {
        let p = depth as i64;
        let mut column = Vec::new();
        for lp in level {
            let h = stratum_homology_discriminant_twist(&lp, d)?;
            let cs = h.regrade_dual(d as usize * lp.r());
            for (t, dim) in cs.iter() {
                *entries.entry((p, t as i64 - p)).or_insert(0) += dim;
            }
            column.push(ColumnStratum {
                partition: lp,
                compact_support: cs,
            });
        }
        columns.insert(p, column);
    }
    Ok(E1Page {
        lambda: lambda.clone(),
        j,
        d,
        twist: TwistMode::OddTwisted,
        entries,
        columns,
        degenerate: lambda.all_ones(),
    })
}

/// One pass/fail line of a report.
#[derive(Clone, Debug)]
pub struct CheckLine {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Clone, Debug)]
pub struct SpectralReport {
    pub checks: Vec<CheckLine>,
    pub pass: bool,
}

impl SpectralReport {
    fn from_checks(checks: Vec<CheckLine>) -> Self {
        let pass = checks.iter().all(|c| c.pass);
        SpectralReport { checks, pass }
    }

    pub fn first_failure(&self) -> Option<&CheckLine> {
        self.checks.iter().find(|c| !c.pass)
    }
}

/// The stability cases of the range statements.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum VanishCase {
    HighDim,          // d > 2: p+q ≥ d(r+j+1) − j
    Surface,          // d = 2: p+q > 2(r+j+1) − j
    Connectivity(u32), // (*)_a, a ≥ 1: p+q > d(r+j+1) − (a+1)j
}

fn applicable_cases(m: &ManifoldModel) -> Vec<VanishCase> {
    let mut cases = Vec::new();
    if m.d > 2 {
        cases.push(VanishCase::HighDim);
        if let ConditionA::Holds(a) = m.condition_a() {
            if a >= 1 {
                cases.push(VanishCase::Connectivity(a));
            }
        }
    } else {
        cases.push(VanishCase::Surface);
    }
    cases
}

/// Checks the column supports of the page and, for the relative page of
/// the stabilization (the j page shifted by q ↦ q+d against the j+1
/// page), the vanishing thresholds of the applicable cases. The
/// connectivity case is additionally checked in its per-column form
/// q > d(j+r−p+1) − (a+1)(j−p) − p for columns p < j.
pub fn check_supports_and_vanishing(page: &E1Page, model: &ManifoldModel) -> Result<SpectralReport> {
    if model.d != page.d {
        return Err(Error::Invalid(format!(
            "model dimension {} does not match the page dimension {}",
            model.d, page.d
        )));
    }
    if !model.euclidean_like {
        return Err(Error::UnsupportedModel(format!(
            "pages are exact over euclidean-like models only, got '{}'",
            model.name
        )));
    }
    let mut checks = Vec::new();
    let r = page.lambda.r() as i64;
    let j = page.j as i64;
    let d = page.d as i64;

    // Column supports: nonzero entries satisfy 0 ≤ p ≤ r+j and
    // −p ≤ q ≤ d(r+j−p+1) − p.
    let mut support_ok = true;
    let mut support_detail = String::from("all entries inside the stated column supports");
    for (&(p, q), &dim) in &page.entries {
        if dim == 0 {
            continue;
        }
        let upper = d * (r + j - p + 1) - p;
        if p < 0 || p > r + j || q < -p || q > upper {
            support_ok = false;
            support_detail = format!("entry ({p},{q}) = {dim} violates the support bounds");
            break;
        }
    }
    checks.push(CheckLine {
        name: "column-support".into(),
        pass: support_ok,
        detail: support_detail,
    });

    // Relative page vanishing.
    let next = build_e1(&page.lambda, page.j + 1, page.d)?;
    let positions = matched_positions(page, &next);
    for case in applicable_cases(model) {
        let (name, in_region): (String, Box<dyn Fn(i64, i64) -> bool>) = match case {
            VanishCase::HighDim => (
                "vanishing-high-dim".into(),
                Box::new(move |p, q| p + q >= d * (r + j + 1) - j),
            ),
            VanishCase::Surface => (
                "vanishing-surface".into(),
                Box::new(move |p, q| p + q > d * (r + j + 1) - j),
            ),
            VanishCase::Connectivity(a) => {
                let a = a as i64;
                (
                    format!("vanishing-connectivity-a{a}"),
                    Box::new(move |p, q| p + q > d * (r + j + 1) - (a + 1) * j),
                )
            }
        };
        let mut pass = true;
        let mut detail = String::from("relative page vanishes in the asserted range");
        for &(p, q) in &positions {
            if !in_region(p, q) {
                continue;
            }
            let shifted = page.entry(p, q - d);
            let target = next.entry(p, q);
            if shifted != target {
                pass = false;
                detail = format!("mismatch at ({p},{q}): shifted {shifted} vs next {target}");
                break;
            }
        }
        checks.push(CheckLine { name, pass, detail });

        // Per-column form of the connectivity case on columns p < j.
        if let VanishCase::Connectivity(a) = case {
            let a = a as i64;
            let mut pass = true;
            let mut detail = String::from("per-column thresholds hold for p < j");
            for &(p, q) in &positions {
                if p >= j || q <= d * (j + r - p + 1) - (a + 1) * (j - p) - p {
                    continue;
                }
                let shifted = page.entry(p, q - d);
                let target = next.entry(p, q);
                if shifted != target {
                    pass = false;
                    detail = format!("mismatch at ({p},{q}): shifted {shifted} vs next {target}");
                    break;
                }
            }
            checks.push(CheckLine {
                name: format!("vanishing-connectivity-a{a}-per-column"),
                pass,
                detail,
            });
        }
    }
    Ok(SpectralReport::from_checks(checks))
}

/// Union of entry positions of the (shifted) page and the successor page.
fn matched_positions(page: &E1Page, next: &E1Page) -> Vec<(i64, i64)> {
    let mut positions: std::collections::BTreeSet<(i64, i64)> = std::collections::BTreeSet::new();
    for &(p, q) in page.entries.keys() {
        positions.insert((p, q + page.d as i64));
    }
    for &(p, q) in next.entries.keys() {
        positions.insert((p, q));
    }
    positions.into_iter().collect()
}

#[derive(Clone, Debug)]
pub struct EulerConsistency {
    pub page_sum: BigInt,
    pub chi_d: BigInt,
    pub consistent: bool,
}

/// The alternating sum of the page equals χ_c of the discriminant from
/// the falling-factorial ledger; differentials cancel in pairs over ℚ.
pub fn euler_consistency(page: &E1Page, ledger: &EulerLedger) -> Result<EulerConsistency> {
    if ledger.lambda != page.lambda || ledger.j != page.j {
        return Err(Error::Invalid(
            "ledger parameters do not match the page".into(),
        ));
    }
    let expected_chi = if page.d % 2 == 0 { 1 } else { -1 };
    if ledger.chi_m != BigInt::from(expected_chi) {
        return Err(Error::Invalid(format!(
            "ledger chi {} does not match chi_c of euclidean space of dimension {}",
            ledger.chi_m, page.d
        )));
    }
    let page_sum = page.euler();
    let consistent = page_sum == ledger.chi_d;
    Ok(EulerConsistency {
        page_sum,
        chi_d: ledger.chi_d.clone(),
        consistent,
    })
}

/// Output of the complement extraction.
#[derive(Clone, Debug)]
pub struct WBounds {
    pub lambda: Partition,
    pub j: usize,
    pub d: u32,
    pub degenerate: bool,
    /// No differential can connect two nonzero entries.
    pub sparse: bool,
    /// Exact Betti numbers of the complement, when sparsity forces them.
    pub exact_betti: Option<GradedDim>,
    pub exact_compact_support: Option<GradedDim>,
    /// Degreewise upper bounds for the compactly supported groups of the
    /// complement (equal to the exact values when sparse).
    pub compact_upper_bounds: GradedDim,
    pub betti_upper_bounds: GradedDim,
    pub warnings: Vec<String>,
}

/// Extracts the complement groups from the page and the long exact
/// sequence of the pair (symmetric power, discriminant). The symmetric
/// power contributes a single class in compactly supported degree d(k+j).
/// When the page is sparse the discriminant groups are the column totals
/// and the complement is exact; otherwise only upper bounds are returned.
/// Odd d uses the fully twisted page, for which the extraction matches
/// the sign-twisted duality.
pub fn les_w_bounds(lambda: &Partition, j: usize, d: u32) -> Result<WBounds> {
    let mut warnings = Vec::new();
    let degenerate = lambda.all_ones();
    let n_top = (d as usize) * (lambda.k() as usize + j);
    if degenerate {
        warnings.push("all-ones partition: the complement is empty".into());
        return Ok(WBounds {
            lambda: lambda.clone(),
            j,
            d,
            degenerate,
            sparse: true,
            exact_betti: Some(GradedDim::zero()),
            exact_compact_support: Some(GradedDim::zero()),
            compact_upper_bounds: GradedDim::zero(),
            betti_upper_bounds: GradedDim::zero(),
            warnings,
        });
    }
    let page = if d % 2 == 0 {
        build_e1(lambda, j, d)?
    } else {
        warnings.push(
            "odd dimension: extraction uses the fully twisted discriminant page".into(),
        );
        build_e1_discriminant_twist(lambda, j, d)?
    };
    let sparse = page.is_sparse();
    let cs_d = page.totals_by_cs_degree();
    // H^q_c(W) = H^{q−1}_c(D) away from the top; at the top the symmetric
    // power adds one class.
    let mut cs_w = cs_d.shift_up(1);
    cs_w.add_dim(n_top, 1);
    let betti = cs_w.regrade_dual(n_top);
    if sparse {
        Ok(WBounds {
            lambda: lambda.clone(),
            j,
            d,
            degenerate,
            sparse,
            exact_betti: Some(betti.clone()),
            exact_compact_support: Some(cs_w.clone()),
            compact_upper_bounds: cs_w,
            betti_upper_bounds: betti,
            warnings,
        })
    } else {
        warnings.push(
            "entries in adjacent total degrees with decreasing column: differentials may act"
                .into(),
        );
        Ok(WBounds {
            lambda: lambda.clone(),
            j,
            d,
            degenerate,
            sparse,
            exact_betti: None,
            exact_compact_support: None,
            compact_upper_bounds: cs_w,
            betti_upper_bounds: betti,
            warnings,
        })
    }
}

#[derive(Clone, Debug)]
pub struct StabCompare {
    pub lambda: Partition,
    pub j: usize,
    pub d: u32,
    pub checks: Vec<CheckLine>,
    pub pass: bool,
    /// Lemma-level indexing: columns p < j list the same partitions after
    /// prepending one 1.
    pub column_indexing_matches: bool,
    /// First entry mismatch outside every asserted range (informational).
    pub first_mismatch_outside: Option<(i64, i64, u64, u64)>,
}

/// Compares the q ↦ q+d shifted page for j with the page for j+1
/// entrywise, asserting equality inside the applicable vanishing ranges
/// and reporting the first mismatch outside them as information only.
pub fn stab_compare(lambda: &Partition, j: usize, d: u32) -> Result<StabCompare> {
    let page = build_e1(lambda, j, d)?;
    let model = crate::manifolds::euclidean(d);
    let report = check_supports_and_vanishing(&page, &model)?;
    let next = build_e1(lambda, j + 1, d)?;

    // Column indexing for p < j.
    let mut column_indexing_matches = true;
    for p in 0..j as i64 {
        let here: Vec<Partition> = page
            .columns
            .get(&p)
            .map(|c| c.iter().map(|s| s.partition.add_ones(1)).collect())
            .unwrap_or_default();
        let there: Vec<Partition> = next
            .columns
            .get(&p)
            .map(|c| c.iter().map(|s| s.partition.clone()).collect())
            .unwrap_or_default();
        let here_set: std::collections::BTreeSet<_> = here.into_iter().collect();
        let there_set: std::collections::BTreeSet<_> = there.into_iter().collect();
        if here_set != there_set {
            column_indexing_matches = false;
        }
    }

    // First mismatch outside all asserted regions, as information.
    let r = lambda.r() as i64;
    let jj = j as i64;
    let dd = d as i64;
    let regions: Vec<Box<dyn Fn(i64, i64) -> bool>> = applicable_cases(&model)
        .into_iter()
        .map(|case| -> Box<dyn Fn(i64, i64) -> bool> {
            match case {
                VanishCase::HighDim => Box::new(move |p, q| p + q >= dd * (r + jj + 1) - jj),
                VanishCase::Surface => Box::new(move |p, q| p + q > dd * (r + jj + 1) - jj),
                VanishCase::Connectivity(a) => {
                    let a = a as i64;
                    Box::new(move |p, q| p + q > dd * (r + jj + 1) - (a + 1) * jj)
                }
            }
        })
        .collect();
    let mut first_mismatch_outside = None;
    for (p, q) in matched_positions(&page, &next) {
        if regions.iter().any(|f| f(p, q)) {
            continue;
        }
        let shifted = page.entry(p, q - dd);
        let target = next.entry(p, q);
        if shifted != target {
            first_mismatch_outside = Some((p, q, shifted, target));
            break;
        }
    }

    Ok(StabCompare {
        lambda: lambda.clone(),
        j,
        d,
        pass: report.pass,
        checks: report.checks,
        column_indexing_matches,
        first_mismatch_outside,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::euler::{build_ledger, chi_int};

    fn p(s: &str) -> Partition {
        Partition::parse(s).unwrap()
    }

    fn g(s: &str) -> GradedDim {
        GradedDim::parse(s).unwrap()
    }

    #[test]
    fn diagonal_page_in_the_plane() {
        // λ=2, j=0, d=2: single column, one entry at (0, 2).
        let page = build_e1(&p("2"), 0, 2).unwrap();
        assert_eq!(page.entries, BTreeMap::from([((0, 2), 1)]));
        assert!(!page.degenerate);
        assert!(page.is_sparse());
    }

    #[test]
    fn worked_page_lambda_two_j_one() {
        // λ=2, j=1, d=2: entries 1 at (0,3), (0,4) from the 1+2 stratum
        // and 1 at (1,1) from the full diagonal.
        let page = build_e1(&p("2"), 1, 2).unwrap();
        assert_eq!(
            page.entries,
            BTreeMap::from([((0, 3), 1), ((0, 4), 1), ((1, 1), 1)])
        );
        // The (1,1) entry feeds the (0,3) entry: not sparse.
        assert!(!page.is_sparse());
        assert_eq!(page.blocked_pairs(), vec![((1, 1), (0, 3))]);
    }

    #[test]
    fn diagonal_page_in_three_space() {
        let page = build_e1(&p("2"), 0, 3).unwrap();
        assert_eq!(page.entries, BTreeMap::from([((0, 3), 1)]));
    }

    #[test]
    fn euler_consistency_examples() {
        for (lam, j, d) in [(p("2"), 1usize, 2u32), (p("2"), 0, 2), (p("3,2"), 2, 2), (p("2"), 2, 3)] {
            let page = build_e1(&lam, j, d).unwrap();
            let chi = if d % 2 == 0 { 1 } else { -1 };
            let ledger = build_ledger(&lam, j, &chi_int(chi)).unwrap();
            let check = euler_consistency(&page, &ledger).unwrap();
            assert!(
                check.consistent,
                "λ={lam} j={j} d={d}: page {} vs ledger {}",
                check.page_sum, check.chi_d
            );
        }
    }

    #[test]
    fn supports_and_vanishing_small_grid() {
        for d in [2u32, 3, 4] {
            let model = crate::manifolds::euclidean(d);
            for j in 0..=2usize {
                let page = build_e1(&p("2"), j, d).unwrap();
                let report = check_supports_and_vanishing(&page, &model).unwrap();
                assert!(
                    report.pass,
                    "d={d} j={j}: {:?}",
                    report.first_failure()
                );
            }
        }
    }

    #[test]
    fn les_w_recovers_configuration_space_of_two_points() {
        let out = les_w_bounds(&p("2"), 0, 2).unwrap();
        assert!(out.sparse);
        assert_eq!(out.exact_betti.unwrap(), g("1,1"));
        assert_eq!(out.exact_compact_support.unwrap(), g("0,0,0,1,1"));
    }

    #[test]
    fn les_w_flags_nonsparse_page() {
        let out = les_w_bounds(&p("2"), 1, 2).unwrap();
        assert!(!out.sparse);
        assert!(out.exact_betti.is_none());
        // Bounds dominate the true Betti numbers (1,1) of three points in
        // the plane, with equal Euler characteristics.
        assert!(out.betti_upper_bounds.dim(0) >= 1);
        assert!(out.betti_upper_bounds.dim(1) >= 1);
        assert_eq!(out.betti_upper_bounds.euler(), 0);
    }

    #[test]
    fn les_w_odd_dimension_is_exact() {
        let out = les_w_bounds(&p("2"), 0, 3).unwrap();
        assert!(out.sparse);
        assert_eq!(out.exact_betti.unwrap(), GradedDim::point());
        let out = les_w_bounds(&p("2"), 2, 3).unwrap();
        assert_eq!(out.exact_betti.unwrap(), GradedDim::point());
    }

    #[test]
    fn les_w_degenerate() {
        let out = les_w_bounds(&p("1,1"), 1, 2).unwrap();
        assert!(out.degenerate);
        assert_eq!(out.exact_betti.unwrap(), GradedDim::zero());
    }

    #[test]
    fn stab_compare_small() {
        for d in [2u32, 3, 4] {
            for j in 0..=2usize {
                let cmp = stab_compare(&p("2"), j, d).unwrap();
                assert!(cmp.pass, "d={d} j={j}");
                assert!(cmp.column_indexing_matches);
            }
        }
    }

    #[test]
    fn page_respects_resource_guard() {
        assert!(matches!(
            build_e1(&p("2"), 8, 2),
            Err(Error::ResourceBound { .. })
        ));
    }
}
