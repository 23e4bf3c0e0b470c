//! The invariant registry behind `symstrat verify`: every documented
//! library invariant has a named runner here. Runners return pass/fail
//! with the first counterexample, or report a skip when a resource guard
//! cuts the grid.

use num::BigInt;

use crate::confighomology::{
    colored_coinvariants, ordered_config_module, stratum_homology, TwistCharacter, MAX_POINTS,
};
use crate::euler::{build_ledger, chi_c_stratum, chi_c_sym, chi_int, partition_sum_identity_holds};
use crate::graded::GradedDim;
use crate::manifolds::{builtin, euclidean, ConditionA, ManifoldModel};
use crate::partitions::{
    ord_set_partition_count, ord_set_partitions, partitions_of, stab_collapse_check, Partition,
};
use crate::ranges::{f_or, simplified_range};
use crate::spectral::{build_e1, check_supports_and_vanishing, euler_consistency, les_w_bounds};
use crate::sympower::{
    builtin_profiles, stabilization_operator, sym_betti, sym_betti_oracle, verify_dold,
};
use crate::Error;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CheckOutcome {
    Pass { detail: String },
    Fail { detail: String },
    Skipped { detail: String },
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        !matches!(self, CheckOutcome::Fail { .. })
    }
}

#[derive(Clone, Copy)]
pub struct VerifyConfig {
    pub max_n: u32,
    pub max_k: u32,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig { max_n: 7, max_k: 8 }
    }
}

pub struct InvariantCheck {
    pub id: &'static str,
    pub module: &'static str,
    pub run: fn(&VerifyConfig) -> CheckOutcome,
}

fn pass(detail: impl Into<String>) -> CheckOutcome {
    CheckOutcome::Pass {
        detail: detail.into(),
    }
}

fn fail(detail: impl Into<String>) -> CheckOutcome {
    CheckOutcome::Fail {
        detail: detail.into(),
    }
}

// ---------------------------------------------------------------- partitions

fn collapse_depth_union(cfg: &VerifyConfig) -> CheckOutcome {
    let kmax = cfg.max_k.min(8);
    for k in 0..=kmax {
        for lam in partitions_of(k) {
            let levels = lam.collapses_by_depth();
            if levels[0] != std::iter::once(lam.clone()).collect() {
                return fail(format!("col_0({lam}) is not the singleton"));
            }
            if levels.len() > lam.r().max(1) {
                return fail(format!("col_p({lam}) nonempty for p >= r"));
            }
            let by_levels: usize = levels.iter().map(|l| l.len()).sum();
            if by_levels != lam.col().len() {
                return fail(format!("depth sum mismatch for {lam}"));
            }
        }
    }
    pass(format!("all partitions of k <= {kmax}"))
}

/// Sharp form: a merge can consume at most two ones (1+1 → 2), so every
/// depth-p collapse of 1^j λ retains at least j + ones(λ) − 2p ones. (The
/// j − p form fails, e.g. 2+2 ∈ col_1(1^2·2); see the acceptance suite.)
fn ones_lower_bound(_cfg: &VerifyConfig) -> CheckOutcome {
    for k in 0..=6u32 {
        for lam in partitions_of(k) {
            for j in 0..=6usize {
                let base_ones = lam.ones() + j;
                for (p, level) in lam.add_ones(j).collapses_by_depth().iter().enumerate() {
                    for lp in level {
                        if lp.ones() + 2 * p < base_ones {
                            return fail(format!(
                                "{lp} in depth {p} of 1^{j} {lam} has {} ones < j+ones(λ)-2p",
                                lp.ones()
                            ));
                        }
                    }
                }
            }
        }
    }
    pass("ones >= j + ones(λ) − 2p on the k <= 6, j <= 6 grid")
}

/// Sharp form: the pairing λ′ ↦ 1λ′ is always injective, its image is
/// exactly the target elements with at least one 1, and it is bijective
/// whenever j ≥ 2p. (Bijectivity for all p < j fails from j = 3 on; see
/// the acceptance suite.)
fn stabilized_depth_bijection(_cfg: &VerifyConfig) -> CheckOutcome {
    for k in 0..=6u32 {
        for lam in partitions_of(k) {
            for j in 0..=6usize {
                for p in 0..=j + lam.r() {
                    let check = stab_collapse_check(&lam, j, p);
                    let images: std::collections::BTreeSet<_> =
                        check.pairs.iter().map(|(_, img)| img.clone()).collect();
                    if images.len() != check.pairs.len() {
                        return fail(format!("pairing not injective for λ={lam} j={j} p={p}"));
                    }
                    if !images.iter().all(|img| check.target.contains(img)) {
                        return fail(format!("image escapes target for λ={lam} j={j} p={p}"));
                    }
                    let one_free = check.target.iter().filter(|t| t.ones() == 0).count();
                    let expected_bijective = one_free == 0;
                    if check.bijective != expected_bijective {
                        return fail(format!(
                            "bijectivity flag disagrees with the one-free count at λ={lam} j={j} p={p}"
                        ));
                    }
                    if j >= 2 * p && !check.bijective {
                        return fail(format!(
                            "not bijective at λ={lam} j={j} p={p} despite j >= 2p"
                        ));
                    }
                }
            }
        }
    }
    pass("injective always; image = targets with a 1; bijective for j >= 2p (k <= 6, j <= 6)")
}

fn set_partition_count(_cfg: &VerifyConfig) -> CheckOutcome {
    for k in 0..=9u32 {
        for shape in partitions_of(k) {
            let listed = match ord_set_partitions(&shape, 12) {
                Ok(v) => v.len(),
                Err(e) => return fail(format!("enumeration failed for {shape}: {e}")),
            };
            if BigInt::from(listed) != ord_set_partition_count(&shape).into() {
                return fail(format!("count mismatch for shape {shape}"));
            }
        }
    }
    pass("closed-form count matches enumeration for k <= 9")
}

fn collapse_membership_agreement(_cfg: &VerifyConfig) -> CheckOutcome {
    for k in 0..=7u32 {
        let all = partitions_of(k);
        for lam in &all {
            let reachable = lam.col();
            for other in &all {
                let direct = lam.is_collapse_of(other).unwrap();
                if direct != reachable.contains(other) {
                    return fail(format!("{lam} vs {other}: grouping {direct}, poset {}", !direct));
                }
            }
        }
    }
    pass("grouping test agrees with the collapse poset on all pairs k <= 7")
}

// ---------------------------------------------------------------- manifolds

fn condition_monotone(_cfg: &VerifyConfig) -> CheckOutcome {
    // Zeroing one more low-degree Betti number never decreases a.
    for d in 2..=6u32 {
        for b1 in 0..=2u64 {
            for b2 in 0..=2u64 {
                for b3 in 0..=2u64 {
                    let betti = vec![1, b1, b2, b3];
                    for zero_at in 1..=3usize {
                        if betti[zero_at] == 0 {
                            continue;
                        }
                        let mut zeroed = betti.clone();
                        for slot in zeroed.iter_mut().take(zero_at + 1).skip(1) {
                            *slot = 0;
                        }
                        let model = |b: &Vec<u64>| ManifoldModel {
                            name: "probe".into(),
                            d,
                            orientable: true,
                            open_interior: true,
                            betti: GradedDim::from_dims(b.clone()),
                            chi_c: 0,
                            euclidean_like: false,
                        };
                        let before = a_value(&model(&betti), d);
                        let after = a_value(&model(&zeroed), d);
                        if after < before {
                            return fail(format!("zeroing decreased a: {betti:?} -> {zeroed:?}"));
                        }
                    }
                }
            }
        }
    }
    pass("condition detector is monotone under zeroing low-degree Betti numbers")
}

fn a_value(m: &ManifoldModel, _d: u32) -> i64 {
    match m.condition_a() {
        ConditionA::H1Nonzero => -1,
        ConditionA::Holds(a) => a as i64,
    }
}

fn puncture_additivity(_cfg: &VerifyConfig) -> CheckOutcome {
    for d in 2..=6u32 {
        for r in 0..=4u32 {
            for s in 0..=4u32 {
                let a = euclidean(d).puncture(r).unwrap().puncture(s).unwrap();
                let b = euclidean(d).puncture(r + s).unwrap();
                if a.betti != b.betti || a.chi_c != b.chi_c {
                    return fail(format!("puncture additivity fails at d={d} r={r} s={s}"));
                }
            }
        }
    }
    pass("puncture(puncture(M,r),s) = puncture(M,r+s) on the grid")
}

fn punctured_condition(_cfg: &VerifyConfig) -> CheckOutcome {
    for d in 3..=6u32 {
        for r in 0..=5u32 {
            let punctured = euclidean(d).puncture(r).unwrap();
            if punctured.condition_a() != euclidean(d).condition_a() {
                return fail(format!("puncturing changed the condition at d={d} r={r}"));
            }
        }
    }
    pass("puncturing euclidean space preserves the connectivity condition, d >= 3")
}

// ----------------------------------------------------------------- sympower

fn sym_connected_degree_zero(_cfg: &VerifyConfig) -> CheckOutcome {
    for (name, profile) in builtin_profiles() {
        for k in 0..=8u32 {
            if sym_betti(&profile, k).unwrap().dim(0) != 1 {
                return fail(format!("degree-0 entry not 1 for {name} k={k}"));
            }
        }
    }
    pass("degree-0 entry is 1 for every connected profile")
}

fn oracle_agreement(_cfg: &VerifyConfig) -> CheckOutcome {
    for b1 in 0..=3u64 {
        for b2 in 0..=3u64 {
            for b3 in 0..=3u64 {
                if 1 + b1 + b2 + b3 > 4 {
                    continue;
                }
                let profile = GradedDim::from_dims(vec![1, b1, b2, b3]);
                for k in 0..=5 {
                    let fast = sym_betti(&profile, k).unwrap();
                    let slow = sym_betti_oracle(&profile, k).unwrap();
                    if fast != slow {
                        return fail(format!("profile {profile} k={k}: {fast} vs oracle {slow}"));
                    }
                }
            }
        }
    }
    pass("generating function agrees with the coinvariant oracle, dim <= 4, k <= 5")
}

fn steenrod_range(_cfg: &VerifyConfig) -> CheckOutcome {
    let cases: Vec<(GradedDim, u32)> = vec![
        (GradedDim::from_dims(vec![1, 2]), 0),
        (GradedDim::from_dims(vec![1, 1, 1]), 0),
        (GradedDim::from_dims(vec![1, 0, 1]), 1),
        (GradedDim::from_dims(vec![1, 0, 2, 1]), 1),
        (GradedDim::from_dims(vec![1, 0, 0, 1]), 2),
        (GradedDim::from_dims(vec![1, 0, 0, 0, 2]), 3),
    ];
    for (profile, a) in cases {
        for k in 1..=6u32 {
            let here = sym_betti(&profile, k).unwrap();
            let next = sym_betti(&profile, k + 1).unwrap();
            if !here.agrees_through(&next, ((a + 1) * k) as usize) {
                return fail(format!("profile {profile} k={k}: disagreement within the range"));
            }
        }
    }
    pass("symmetric-power tables stabilize through degree (a+1)k")
}

fn stabilization_rank(_cfg: &VerifyConfig) -> CheckOutcome {
    for b1 in 0..=2u64 {
        for b2 in 0..=2u64 {
            if 1 + b1 + b2 > 4 {
                continue;
            }
            let profile = GradedDim::from_dims(vec![1, b1, b2]);
            for k in 0..=5u32 {
                let op = stabilization_operator(&profile, k).unwrap();
                if op.rank() != op.cols() {
                    return fail(format!("not injective for {profile} k={k}"));
                }
                let here = sym_betti(&profile, k).unwrap();
                let next = sym_betti(&profile, k + 1).unwrap();
                let bijective_everywhere = here == next;
                if bijective_everywhere && op.rank() != op.rows() {
                    return fail(format!("dims equal but map not bijective, {profile} k={k}"));
                }
            }
        }
    }
    pass("multiplication by the unit is injective; bijective exactly when dimensions agree")
}

fn operator_identities(_cfg: &VerifyConfig) -> CheckOutcome {
    for (name, profile) in builtin_profiles() {
        let report = verify_dold(&profile, 6).unwrap();
        if !report.pass {
            return fail(format!("{name}: {}", report.first_failure.unwrap()));
        }
    }
    pass("transfer and stabilization identities hold on all built-in profiles, weights <= 6")
}

// ----------------------------------------------------------- confighomology

fn module_dimension(cfg: &VerifyConfig) -> CheckOutcome {
    let nmax = cfg.max_n.min(MAX_POINTS).min(7);
    for d in 2..=5u32 {
        for n in 0..=nmax {
            let module = ordered_config_module(d, n).unwrap();
            let expected_total: u64 = (1..=n as u64).product::<u64>().max(1);
            if module.dim() as u64 != expected_total {
                return fail(format!("total dim != n! at d={d} n={n}"));
            }
            let mut expected = GradedDim::point();
            for i in 1..n as usize {
                let mut next = GradedDim::zero();
                for (deg, dim) in expected.iter() {
                    next.add_dim(deg, dim);
                    next.add_dim(deg + d as usize - 1, dim * i as u64);
                }
                expected = next;
            }
            if module.graded_dims() != expected {
                return fail(format!("Poincaré polynomial mismatch at d={d} n={n}"));
            }
        }
    }
    pass(format!("dimension n! and Poincaré product up to n = {nmax}, d in 2..=5"))
}

fn group_relations(cfg: &VerifyConfig) -> CheckOutcome {
    let nmax = cfg.max_n.min(6);
    for d in 2..=3u32 {
        for n in 2..=nmax {
            let module = ordered_config_module(d, n).unwrap();
            for idx in 0..module.dim() {
                let e = vec![(idx, 1)];
                for i in 1..n {
                    let perm = transposition(n, i);
                    let twice =
                        module.apply_permutation_vec(&perm, &module.apply_permutation_vec(&perm, &e));
                    if twice != e {
                        return fail(format!("s_{i}^2 != id at d={d} n={n}"));
                    }
                }
                for i in 1..n.saturating_sub(1) {
                    let si = transposition(n, i);
                    let sj = transposition(n, i + 1);
                    let lhs = module.apply_permutation_vec(
                        &si,
                        &module.apply_permutation_vec(&sj, &module.apply_permutation_vec(&si, &e)),
                    );
                    let rhs = module.apply_permutation_vec(
                        &sj,
                        &module.apply_permutation_vec(&si, &module.apply_permutation_vec(&sj, &e)),
                    );
                    if lhs != rhs {
                        return fail(format!("braid relation fails at d={d} n={n} i={i}"));
                    }
                }
                for i in 1..n {
                    for j in (i + 2)..n {
                        let si = transposition(n, i);
                        let sj = transposition(n, j);
                        let lhs =
                            module.apply_permutation_vec(&si, &module.apply_permutation_vec(&sj, &e));
                        let rhs =
                            module.apply_permutation_vec(&sj, &module.apply_permutation_vec(&si, &e));
                        if lhs != rhs {
                            return fail(format!("commutation fails at d={d} n={n} ({i},{j})"));
                        }
                    }
                }
            }
        }
    }
    pass(format!("involution, braid and commutation relations exact, n <= {nmax}"))
}

fn transposition(n: u32, i: u32) -> Vec<u32> {
    (1..=n)
        .map(|v| {
            if v == i {
                i + 1
            } else if v == i + 1 {
                i
            } else {
                v
            }
        })
        .collect()
}

fn coinvariants_bounded(cfg: &VerifyConfig) -> CheckOutcome {
    let nmax = cfg.max_n.min(6);
    for d in 2..=3u32 {
        for n in 1..=nmax {
            let module = ordered_config_module(d, n).unwrap();
            let full = module.graded_dims();
            for colors in partitions_of(n) {
                let dims = colored_coinvariants(&module, &colors, &TwistCharacter::Trivial).unwrap();
                for (deg, dim) in dims.iter() {
                    if dim > full.dim(deg) {
                        return fail(format!("coinvariants exceed module dims at d={d} n={n}"));
                    }
                }
            }
        }
    }
    pass("coinvariant dimensions bounded by the module dimensions")
}

fn stratum_stability(cfg: &VerifyConfig) -> CheckOutcome {
    let mut skipped = 0usize;
    let mut checked = 0usize;
    for d in 2..=3u32 {
        for k in 0..=4u32 {
            for lam in partitions_of(k) {
                for j in 0..=4usize {
                    let here = lam.add_ones(j);
                    let there = lam.add_ones(j + 1);
                    if there.r() as u32 > cfg.max_n.min(MAX_POINTS) {
                        skipped += 1;
                        continue;
                    }
                    let a = stratum_homology(&here, d).unwrap();
                    let b = stratum_homology(&there, d).unwrap();
                    let through = if d > 2 { j as i64 } else { j as i64 - 1 };
                    for i in 0..=through.max(-1) {
                        if i < 0 {
                            continue;
                        }
                        if a.dim(i as usize) != b.dim(i as usize) {
                            return fail(format!(
                                "dims differ in degree {i} for λ={lam} j={j} d={d}: {a} vs {b}"
                            ));
                        }
                    }
                    checked += 1;
                }
            }
        }
    }
    pass(format!(
        "stratum dimension stability holds on {checked} grid points ({skipped} beyond the guard)"
    ))
}

fn stratum_canonical(_cfg: &VerifyConfig) -> CheckOutcome {
    let cases = [vec![2u32, 1, 2], vec![3, 1, 1, 2], vec![1, 1, 1]];
    for parts in cases {
        let mut reordered = parts.clone();
        reordered.reverse();
        let a = stratum_homology(&Partition::new(parts).unwrap(), 2).unwrap();
        let b = stratum_homology(&Partition::new(reordered).unwrap(), 2).unwrap();
        if a != b {
            return fail("stratum homology depends on input order".to_string());
        }
    }
    pass("stratum homology is invariant under permuting the input parts")
}

// -------------------------------------------------------------------- euler

fn partition_sum(_cfg: &VerifyConfig) -> CheckOutcome {
    for chi in -6..=6i64 {
        for k in 0..=10u32 {
            if !partition_sum_identity_holds(&chi_int(chi), k) {
                return fail(format!("partition-sum identity fails at chi={chi} k={k}"));
            }
        }
    }
    pass("sum over partitions equals the symmetric-power value, |chi| <= 6, k <= 10")
}

fn stratum_integrality(_cfg: &VerifyConfig) -> CheckOutcome {
    // chi_c_stratum asserts integrality internally; sweep the grid.
    for chi in -6..=6i64 {
        for k in 0..=10u32 {
            for lam in partitions_of(k) {
                let _ = chi_c_stratum(&lam, &chi_int(chi));
            }
        }
    }
    let _ = chi_c_sym(&chi_int(-6), 10);
    pass("falling-factorial stratum values are integers across the grid")
}

// ----------------------------------------------------------------- spectral

fn spectral_grid() -> Vec<(Partition, usize, u32)> {
    let mut grid = Vec::new();
    for d in [2u32, 3, 4] {
        for k in 2..=4u32 {
            for lam in partitions_of(k) {
                if lam.all_ones() {
                    continue;
                }
                for j in 0..=4usize {
                    grid.push((lam.clone(), j, d));
                }
            }
        }
    }
    grid
}

fn entry_bounds(cfg: &VerifyConfig) -> CheckOutcome {
    let mut skipped = 0;
    for (lam, j, d) in spectral_grid() {
        if (lam.r() + j) as u32 > cfg.max_n.min(MAX_POINTS) {
            skipped += 1;
            continue;
        }
        let page = build_e1(&lam, j, d).unwrap();
        let r = lam.r() as i64;
        for (&(p, _q), &dim) in &page.entries {
            if dim > 0 && (p < 0 || p > r + j as i64) {
                return fail(format!("entry at column {p} outside 0..=r+j for λ={lam} j={j}"));
            }
        }
    }
    pass(format!("columns confined to 0..=r+j ({skipped} grid points beyond the guard)"))
}

fn column_support(cfg: &VerifyConfig) -> CheckOutcome {
    let mut skipped = 0;
    for (lam, j, d) in spectral_grid() {
        if (lam.r() + j) as u32 > cfg.max_n.min(MAX_POINTS) {
            skipped += 1;
            continue;
        }
        let page = build_e1(&lam, j, d).unwrap();
        let r = lam.r() as i64;
        let jj = j as i64;
        let dd = d as i64;
        for (&(p, q), &dim) in &page.entries {
            if dim > 0 && (q < -p || q > dd * (r + jj - p + 1) - p) {
                return fail(format!("support violated at ({p},{q}) for λ={lam} j={j} d={d}"));
            }
        }
    }
    pass(format!("column supports hold ({skipped} grid points beyond the guard)"))
}

fn page_euler_consistency(cfg: &VerifyConfig) -> CheckOutcome {
    let mut skipped = 0;
    for d in [2u32, 3, 4] {
        for k in 0..=4u32 {
            for lam in partitions_of(k) {
                for j in 0..=3usize {
                    if (lam.r() + j) as u32 > cfg.max_n.min(MAX_POINTS) {
                        skipped += 1;
                        continue;
                    }
                    let page = build_e1(&lam, j, d).unwrap();
                    let chi = if d % 2 == 0 { 1 } else { -1 };
                    let ledger = build_ledger(&lam, j, &chi_int(chi)).unwrap();
                    let check = euler_consistency(&page, &ledger).unwrap();
                    if !check.consistent {
                        return fail(format!(
                            "page sum {} != chi_D {} for λ={lam} j={j} d={d}",
                            check.page_sum, check.chi_d
                        ));
                    }
                }
            }
        }
    }
    pass(format!("alternating page sums match the ledger ({skipped} beyond the guard)"))
}

fn stab_vanishing(cfg: &VerifyConfig) -> CheckOutcome {
    let mut skipped = 0;
    for (lam, j, d) in spectral_grid() {
        if (lam.r() + j + 1) as u32 > cfg.max_n.min(MAX_POINTS) {
            skipped += 1;
            continue;
        }
        let page = build_e1(&lam, j, d).unwrap();
        let report = check_supports_and_vanishing(&page, &euclidean(d)).unwrap();
        if !report.pass {
            let line = report.first_failure().unwrap();
            return fail(format!("λ={lam} j={j} d={d}: {} — {}", line.name, line.detail));
        }
    }
    pass(format!("supports and vanishing ranges hold ({skipped} beyond the guard)"))
}

fn les_w_exactness(cfg: &VerifyConfig) -> CheckOutcome {
    // Exact outputs must match independently computed configuration-space
    // homology where the complement is one: W of the doubled point is the
    // configuration space of k+j distinct points.
    let mut compared = 0;
    for d in [2u32, 3] {
        for j in 0..=4usize {
            let m = (2 + j) as u32;
            if m > cfg.max_n.min(MAX_POINTS) {
                continue;
            }
            let out = les_w_bounds(&Partition::single(2), j, d).unwrap();
            let module = ordered_config_module(d, m).unwrap();
            let expected =
                colored_coinvariants(&module, &Partition::single(m), &TwistCharacter::Trivial)
                    .unwrap();
            if let Some(exact) = out.exact_betti {
                if exact != expected {
                    return fail(format!("exact output {exact} != {expected} at j={j} d={d}"));
                }
                compared += 1;
            } else {
                // Bounds must dominate degreewise with equal Euler sums.
                let bounds = out.betti_upper_bounds;
                for (deg, dim) in expected.iter() {
                    if bounds.dim(deg) < dim {
                        return fail(format!("bound below truth in degree {deg} at j={j} d={d}"));
                    }
                }
                if bounds.euler() != expected.euler() {
                    return fail(format!("Euler mismatch at j={j} d={d}"));
                }
            }
        }
    }
    pass(format!("{compared} exact extractions matched configuration homology"))
}

// ------------------------------------------------------------------- ranges

fn range_dominance(_cfg: &VerifyConfig) -> CheckOutcome {
    let mut models: Vec<ManifoldModel> = (3..=6).map(euclidean).collect();
    models.push(builtin("solid-torus").unwrap());
    models.push(builtin("R2minus1").unwrap());
    for d in 3..=6 {
        models.push(ManifoldModel {
            name: format!("open-h1-{d}"),
            d,
            orientable: true,
            open_interior: true,
            betti: GradedDim::from_dims(vec![1, 1]),
            chi_c: 0,
            euclidean_like: false,
        });
    }
    for m in &models {
        for k in 2..=8u32 {
            for lam in partitions_of(k) {
                if lam.r() as u64 >= lam.k() {
                    continue;
                }
                for j in 2..=12u32 {
                    let full = f_or(m, &lam, j).unwrap().bound;
                    let simple = simplified_range(m, j).unwrap().bound;
                    if full < simple {
                        return fail(format!("{} λ={lam} j={j}: {full} < {simple}", m.name));
                    }
                }
            }
        }
    }
    pass("full ranges dominate the simplified range for k > r, j >= 2")
}

fn range_monotone(_cfg: &VerifyConfig) -> CheckOutcome {
    let models = [
        euclidean(2),
        euclidean(4),
        euclidean(6),
        builtin("solid-torus").unwrap(),
        builtin("R2minus1").unwrap(),
    ];
    for m in &models {
        for k in 1..=8u32 {
            for lam in partitions_of(k) {
                let mut prev = i64::MIN;
                for j in 0..=12u32 {
                    let bound = f_or(m, &lam, j).unwrap().bound;
                    if bound < prev {
                        return fail(format!("{} λ={lam} j={j} decreased", m.name));
                    }
                    prev = bound;
                }
            }
        }
    }
    let mobius = builtin("mobius").unwrap();
    for k in 1..=8u32 {
        for lam in partitions_of(k) {
            let mut prev = i64::MIN;
            for j in 0..=12u32 {
                let bound = crate::ranges::f_nor(&mobius, &lam, j).unwrap().bound;
                if bound < prev {
                    return fail(format!("mobius λ={lam} j={j} decreased"));
                }
                prev = bound;
            }
        }
    }
    pass("bounds are non-decreasing in j")
}

fn range_totality(_cfg: &VerifyConfig) -> CheckOutcome {
    // Every valid input evaluates to an exact integer; errors only on the
    // documented orientation mismatches.
    for d in 2..=6u32 {
        let m = euclidean(d);
        for k in 0..=6u32 {
            for lam in partitions_of(k) {
                for j in 0..=6u32 {
                    if f_or(&m, &lam, j).is_err() {
                        return fail(format!("f_or failed on R{d} λ={lam} j={j}"));
                    }
                }
            }
        }
    }
    match f_or(&builtin("mobius").unwrap(), &Partition::single(2), 1) {
        Err(Error::NonOrientableInput(_)) => {}
        other => return fail(format!("expected orientation error, got {other:?}")),
    }
    pass("total on valid inputs; orientation mismatches rejected")
}

fn range_case_stability(_cfg: &VerifyConfig) -> CheckOutcome {
    let base = builtin("solid-torus").unwrap();
    for scale in 1..=4u64 {
        let mut scaled = base.clone();
        scaled.betti = GradedDim::from_dims(vec![1, scale]);
        let a = f_or(&base, &Partition::parse("3,2").unwrap(), 4).unwrap();
        let b = f_or(&scaled, &Partition::parse("3,2").unwrap(), 4).unwrap();
        if a.case != b.case || a.bound != b.bound {
            return fail(format!("case changed under Betti scaling x{scale}"));
        }
    }
    pass("case selection depends only on vanishing, not magnitudes")
}

// ----------------------------------------------------------------- registry

pub fn registry() -> Vec<InvariantCheck> {
    vec![
        InvariantCheck { id: "partitions::collapse-depth-union", module: "partitions", run: collapse_depth_union },
        InvariantCheck { id: "partitions::ones-lower-bound", module: "partitions", run: ones_lower_bound },
        InvariantCheck { id: "partitions::stabilized-depth-bijection", module: "partitions", run: stabilized_depth_bijection },
        InvariantCheck { id: "partitions::set-partition-count", module: "partitions", run: set_partition_count },
        InvariantCheck { id: "partitions::collapse-membership-agreement", module: "partitions", run: collapse_membership_agreement },
        InvariantCheck { id: "manifolds::condition-monotone", module: "manifolds", run: condition_monotone },
        InvariantCheck { id: "manifolds::puncture-additivity", module: "manifolds", run: puncture_additivity },
        InvariantCheck { id: "manifolds::punctured-condition", module: "manifolds", run: punctured_condition },
        InvariantCheck { id: "sympower::connected-degree-zero", module: "sympower", run: sym_connected_degree_zero },
        InvariantCheck { id: "sympower::oracle-agreement", module: "sympower", run: oracle_agreement },
        InvariantCheck { id: "sympower::steenrod-range", module: "sympower", run: steenrod_range },
        InvariantCheck { id: "sympower::stabilization-rank", module: "sympower", run: stabilization_rank },
        InvariantCheck { id: "sympower::operator-identities", module: "sympower", run: operator_identities },
        InvariantCheck { id: "confighomology::module-dimension", module: "confighomology", run: module_dimension },
        InvariantCheck { id: "confighomology::group-relations", module: "confighomology", run: group_relations },
        InvariantCheck { id: "confighomology::coinvariants-bounded", module: "confighomology", run: coinvariants_bounded },
        InvariantCheck { id: "confighomology::stratum-stability", module: "confighomology", run: stratum_stability },
        InvariantCheck { id: "confighomology::stratum-canonical", module: "confighomology", run: stratum_canonical },
        InvariantCheck { id: "euler::partition-sum", module: "euler", run: partition_sum },
        InvariantCheck { id: "euler::stratum-integrality", module: "euler", run: stratum_integrality },
        InvariantCheck { id: "spectral::entry-bounds", module: "spectral", run: entry_bounds },
        InvariantCheck { id: "spectral::column-support", module: "spectral", run: column_support },
        InvariantCheck { id: "spectral::euler-consistency", module: "spectral", run: page_euler_consistency },
        InvariantCheck { id: "spectral::stab-vanishing", module: "spectral", run: stab_vanishing },
        InvariantCheck { id: "spectral::les-w-exactness", module: "spectral", run: les_w_exactness },
        InvariantCheck { id: "ranges::dominance", module: "ranges", run: range_dominance },
        InvariantCheck { id: "ranges::monotone", module: "ranges", run: range_monotone },
        InvariantCheck { id: "ranges::totality", module: "ranges", run: range_totality },
        InvariantCheck { id: "ranges::case-stability", module: "ranges", run: range_case_stability },
    ]
}

#[derive(Clone, Debug)]
pub struct SuiteLine {
    pub id: String,
    pub outcome: CheckOutcome,
}

#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub lines: Vec<SuiteLine>,
    pub pass: bool,
}

/// Runs one module's invariants (or all of them).
pub fn run_suite(suite: &str, cfg: &VerifyConfig) -> crate::Result<SuiteReport> {
    let checks = registry();
    let selected: Vec<&InvariantCheck> = if suite == "all" {
        checks.iter().collect()
    } else {
        let found: Vec<&InvariantCheck> = checks.iter().filter(|c| c.module == suite).collect();
        if found.is_empty() {
            return Err(Error::Invalid(format!(
                "unknown suite '{suite}'; use all, partitions, manifolds, sympower, confighomology, euler, spectral or ranges"
            )));
        }
        found
    };
    let mut lines = Vec::new();
    for check in selected {
        let outcome = (check.run)(cfg);
        lines.push(SuiteLine {
            id: check.id.to_string(),
            outcome,
        });
    }
    let pass = lines.iter().all(|l| l.outcome.passed());
    Ok(SuiteReport { lines, pass })
}
