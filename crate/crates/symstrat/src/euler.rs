//! Compactly supported Euler-characteristic calculus over the
//! stratification of symmetric powers. χ_c is additive over locally
//! closed strata, which makes these ledgers exact cross-checks for every
//! homological table. All arithmetic is arbitrary-precision integers;
//! no floating point.

use num::rational::BigRational;
use num::{BigInt, One};

use crate::partitions::Partition;
use crate::Result;

/// χ_c of the stratum with multiplicity pattern λ′ over a manifold with
/// compactly supported Euler characteristic `chi`:
/// chi·(chi−1)···(chi−m+1) / ∏_l n(l)!, with m the number of parts.
/// The quotient is always an integer (asserted).
pub fn chi_c_stratum(lambda_prime: &Partition, chi: &BigInt) -> BigInt {
    let m = lambda_prime.r() as i64;
    let mut numer = BigRational::one();
    for i in 0..m {
        numer *= BigRational::from(chi - BigInt::from(i));
    }
    for (_, mult) in lambda_prime.multiplicities() {
        for f in 1..=mult as i64 {
            numer /= BigRational::from(BigInt::from(f));
        }
    }
    assert!(numer.is_integer(), "stratum Euler characteristic must be integral");
    numer.to_integer()
}

/// χ_c of the k-th symmetric power: the coefficient of s^k in
/// (1 − s)^{−chi}, computed as the product formula ∏_{i<k} (chi+i)/(i+1).
pub fn chi_c_sym(chi: &BigInt, k: u32) -> BigInt {
    let mut acc = BigRational::one();
    for i in 0..k as i64 {
        acc *= BigRational::new(chi + BigInt::from(i), BigInt::from(i + 1));
    }
    assert!(acc.is_integer(), "symmetric power Euler characteristic must be integral");
    acc.to_integer()
}

/// The three Euler totals of the decomposition Sym = D ⊔ W for the
/// discriminant of 1^j λ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChiPieces {
    pub chi_d: BigInt,
    pub chi_w: BigInt,
    pub chi_sym: BigInt,
    /// λ is all ones, so D = Sym and W = ∅.
    pub degenerate: bool,
}

pub fn chi_c_pieces(lambda: &Partition, j: usize, chi: &BigInt) -> ChiPieces {
    let stabilized = lambda.add_ones(j);
    let chi_d: BigInt = stabilized
        .col()
        .iter()
        .map(|lp| chi_c_stratum(lp, chi))
        .sum();
    let chi_sym = chi_c_sym(chi, (lambda.k() as u32) + j as u32);
    let chi_w = &chi_sym - &chi_d;
    ChiPieces {
        chi_d,
        chi_w,
        chi_sym,
        degenerate: lambda.all_ones(),
    }
}

/// Per-stratum χ_c table with totals.
#[derive(Clone, Debug)]
pub struct EulerLedger {
    pub chi_m: BigInt,
    pub lambda: Partition,
    pub j: usize,
    pub per_stratum: Vec<(Partition, BigInt)>,
    pub chi_d: BigInt,
    pub chi_sym: BigInt,
    pub chi_w: BigInt,
    pub degenerate: bool,
}

pub fn build_ledger(lambda: &Partition, j: usize, chi: &BigInt) -> Result<EulerLedger> {
    let stabilized = lambda.add_ones(j);
    let mut per_stratum = Vec::new();
    for (depth, level) in stabilized.collapses_by_depth().into_iter().enumerate() {
        let _ = depth;
        for lp in level {
            let value = chi_c_stratum(&lp, chi);
            per_stratum.push((lp, value));
        }
    }
    let pieces = chi_c_pieces(lambda, j, chi);
    Ok(EulerLedger {
        chi_m: chi.clone(),
        lambda: lambda.clone(),
        j,
        per_stratum,
        chi_d: pieces.chi_d,
        chi_sym: pieces.chi_sym,
        chi_w: pieces.chi_w,
        degenerate: pieces.degenerate,
    })
}

/// Σ over all partitions of k of the stratum values equals the symmetric
/// power value; the partition-sum identity behind the ledger.
pub fn partition_sum_identity_holds(chi: &BigInt, k: u32) -> bool {
    let total: BigInt = crate::partitions::partitions_of(k)
        .iter()
        .map(|lam| chi_c_stratum(lam, chi))
        .sum();
    total == chi_c_sym(chi, k)
}

/// Convenience wrapper for i64 inputs.
pub fn chi_int(v: i64) -> BigInt {
    BigInt::from(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        Partition::parse(s).unwrap()
    }

    #[test]
    fn stratum_values() {
        // Single part: the stratum is the manifold itself.
        assert_eq!(chi_c_stratum(&p("2"), &chi_int(1)), chi_int(1));
        // 1·0 / 1!1! and 1·0 / 2!.
        assert_eq!(chi_c_stratum(&p("1,2"), &chi_int(1)), chi_int(0));
        assert_eq!(chi_c_stratum(&p("1,1"), &chi_int(1)), chi_int(0));
        // Falling factorial with negative χ.
        assert_eq!(chi_c_stratum(&p("1,1"), &chi_int(-1)), chi_int(1));
        assert_eq!(chi_c_stratum(&p("1,1,1"), &chi_int(-1)), chi_int(-1));
        // Empty partition: the empty stratum is a point.
        assert_eq!(chi_c_stratum(&Partition::empty(), &chi_int(5)), chi_int(1));
    }

    #[test]
    fn sym_values() {
        for k in 0..8 {
            assert_eq!(chi_c_sym(&chi_int(1), k), chi_int(1), "k={k}");
        }
        // χ = 2, k = 2: 3 (the plane count of the second symmetric power
        // of the sphere).
        assert_eq!(chi_c_sym(&chi_int(2), 2), chi_int(3));
        assert_eq!(chi_c_sym(&chi_int(5), 0), chi_int(1));
        // (1−s)^{+1}: coefficients 1, −1, 0, 0, …
        assert_eq!(chi_c_sym(&chi_int(-1), 1), chi_int(-1));
        assert_eq!(chi_c_sym(&chi_int(-1), 2), chi_int(0));
    }

    #[test]
    fn partition_sum_identity() {
        for chi in -6..=6i64 {
            for k in 0..=10u32 {
                assert!(
                    partition_sum_identity_holds(&chi_int(chi), k),
                    "chi={chi} k={k}"
                );
            }
        }
    }

    #[test]
    fn pieces_examples() {
        // λ=2, j=0, χ=1: D is the diagonal, χ_c(D) = 1, W = C_2 with χ_c 0.
        let pieces = chi_c_pieces(&p("2"), 0, &chi_int(1));
        assert_eq!(pieces.chi_d, chi_int(1));
        assert_eq!(pieces.chi_sym, chi_int(1));
        assert_eq!(pieces.chi_w, chi_int(0));
        assert!(!pieces.degenerate);
        // λ=2, j=1, χ=1: strata 1+2 and 3 contribute 0 + 1.
        let pieces = chi_c_pieces(&p("2"), 1, &chi_int(1));
        assert_eq!(pieces.chi_d, chi_int(1));
        assert_eq!(pieces.chi_w, chi_int(0));
        // All-ones λ: D exhausts Sym, W is empty.
        for j in 0..4 {
            let pieces = chi_c_pieces(&p("1,1"), j, &chi_int(1));
            assert_eq!(pieces.chi_w, chi_int(0));
            assert!(pieces.degenerate);
        }
    }

    #[test]
    fn all_ones_is_degenerate_for_any_chi() {
        // When λ is all ones, col(1^j λ) exhausts the partitions of k+j,
        // so χ_W = 0 by the partition-sum identity.
        for chi in -4..=4i64 {
            for j in 0..=3 {
                let pieces = chi_c_pieces(&p("1,1,1"), j, &chi_int(chi));
                assert_eq!(pieces.chi_w, chi_int(0), "chi={chi} j={j}");
            }
        }
    }

    #[test]
    fn ledger_totals_are_consistent() {
        let ledger = build_ledger(&p("2"), 2, &chi_int(1)).unwrap();
        let sum: BigInt = ledger.per_stratum.iter().map(|(_, v)| v.clone()).sum();
        assert_eq!(sum, ledger.chi_d);
        assert_eq!(&ledger.chi_sym - &ledger.chi_d, ledger.chi_w);
    }
}
