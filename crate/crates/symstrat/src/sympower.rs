//! Rational homology of symmetric powers from a Betti profile, realized
//! as the free graded-commutative algebra on the profile's generators
//! with its weight grading, plus the stabilization and transfer operators
//! and their composition identities.
//!
//! Even-degree generators are polynomial, odd-degree generators exterior;
//! the unit generator u is the degree-0 class of a point. Multiplication
//! by u is the stabilization operator; the derivation ∂/∂u (delete one
//! point in all positions, projecting the deleted factor to degree 0) is
//! the single-step transfer.

use std::collections::HashMap;

use num::rational::BigRational;
use num::{BigInt, Zero};

use crate::graded::GradedDim;
use crate::linalg::QMatrix;
use crate::{Error, Result};

/// Resource guards for the brute-force coinvariant oracle.
pub const ORACLE_MAX_TOTAL_DIM: u64 = 6;
pub const ORACLE_MAX_WEIGHT: u32 = 6;

/// A generator of the free graded-commutative algebra.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Generator {
    pub degree: u32,
    /// Position among same-degree generators (input order).
    pub index: u32,
}

impl Generator {
    pub fn is_odd(&self) -> bool {
        self.degree % 2 == 1
    }
}

/// Monomial = exponent vector over the generator list of a profile.
pub type Exponents = Vec<u32>;

/// The weight-k monomial basis of the free graded-commutative algebra on
/// a Betti profile. Monomials are sorted by (degree, exponent vector), so
/// fixed-degree blocks are contiguous.
#[derive(Clone, Debug)]
pub struct WeightedBasis {
    pub profile: GradedDim,
    pub weight: u32,
    pub generators: Vec<Generator>,
    pub monomials: Vec<Exponents>,
    index: HashMap<Exponents, usize>,
}

/// Generators of a profile sorted by (degree, input order).
pub fn generators_of(profile: &GradedDim) -> Vec<Generator> {
    let mut gens = Vec::new();
    for (degree, dim) in profile.iter() {
        for index in 0..dim {
            gens.push(Generator {
                degree: degree as u32,
                index: index as u32,
            });
        }
    }
    gens
}

impl WeightedBasis {
    pub fn new(profile: &GradedDim, weight: u32) -> Result<Self> {
        if profile.dim(0) < 1 {
            return Err(Error::Invalid(
                "profile must have b_0 >= 1 (a unit generator)".into(),
            ));
        }
        let generators = generators_of(profile);
        let mut monomials = Vec::new();
        let mut acc = vec![0u32; generators.len()];
        enumerate(&generators, 0, weight, &mut acc, &mut monomials);
        monomials.sort_by_key(|m| (degree_of(&generators, m), m.clone()));
        let index = monomials
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, m)| (m, i))
            .collect();
        Ok(WeightedBasis {
            profile: profile.clone(),
            weight,
            generators,
            monomials,
            index,
        })
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn index_of(&self, m: &Exponents) -> Option<usize> {
        self.index.get(m).copied()
    }

    pub fn degree_of(&self, m: &Exponents) -> u32 {
        degree_of(&self.generators, m)
    }

    /// Graded dimensions of the weight-k piece.
    pub fn graded_dims(&self) -> GradedDim {
        let mut g = GradedDim::zero();
        for m in &self.monomials {
            g.add_dim(self.degree_of(m) as usize, 1);
        }
        g
    }

    /// Position of the unit generator u (first degree-0 generator).
    pub fn unit_position(&self) -> usize {
        self.generators
            .iter()
            .position(|g| g.degree == 0 && g.index == 0)
            .expect("b_0 >= 1 guarantees a unit generator")
    }

    /// Pretty monomial like "u^2*v" for displays.
    pub fn monomial_string(&self, m: &Exponents) -> String {
        let mut pieces = Vec::new();
        for (g, &e) in self.generators.iter().zip(m) {
            if e == 0 {
                continue;
            }
            let name = if g.degree == 0 && g.index == 0 {
                "u".to_string()
            } else {
                format!("x{}_{}", g.degree, g.index)
            };
            pieces.push(if e == 1 { name } else { format!("{name}^{e}") });
        }
        if pieces.is_empty() {
            "1".to_string()
        } else {
            pieces.join("*")
        }
    }
}

fn degree_of(gens: &[Generator], m: &Exponents) -> u32 {
    gens.iter().zip(m).map(|(g, &e)| g.degree * e).sum()
}

fn enumerate(
    gens: &[Generator],
    pos: usize,
    remaining: u32,
    acc: &mut Exponents,
    out: &mut Vec<Exponents>,
) {
    if pos == gens.len() {
        if remaining == 0 {
            out.push(acc.clone());
        }
        return;
    }
    let cap = if gens[pos].is_odd() { remaining.min(1) } else { remaining };
    for e in 0..=cap {
        acc[pos] = e;
        enumerate(gens, pos + 1, remaining - e, acc, out);
    }
    acc[pos] = 0;
}

/// Coefficient of s^k in ∏_{i even} (1 − s t^i)^{−b_i} · ∏_{i odd} (1 + s t^i)^{b_i},
/// i.e. the Betti numbers of the k-th symmetric power of a space with the
/// given Betti profile.
pub fn sym_betti(profile: &GradedDim, k: u32) -> Result<GradedDim> {
    if profile.dim(0) < 1 {
        return Err(Error::Invalid("profile must have b_0 >= 1".into()));
    }
    // coeffs[w] = t-polynomial coefficient of s^w, truncated at s^k.
    let mut coeffs: Vec<GradedDim> = vec![GradedDim::zero(); k as usize + 1];
    coeffs[0] = GradedDim::point();
    for g in generators_of(profile) {
        let mut next = vec![GradedDim::zero(); k as usize + 1];
        if g.is_odd() {
            // Multiply by (1 + s t^deg).
            for w in 0..=k as usize {
                for (i, d) in coeffs[w].iter() {
                    next[w].add_dim(i, d);
                    if w + 1 <= k as usize {
                        next[w + 1].add_dim(i + g.degree as usize, d);
                    }
                }
            }
        } else {
            // Multiply by (1 − s t^deg)^{−1} = Σ_m s^m t^{m·deg}.
            for w in 0..=k as usize {
                let mut acc = GradedDim::zero();
                for m in 0..=w {
                    for (i, d) in coeffs[w - m].iter() {
                        acc.add_dim(i + m * g.degree as usize, d);
                    }
                }
                next[w] = acc;
            }
        }
        coeffs = next;
    }
    Ok(coeffs.swap_remove(k as usize))
}

/// Brute-force oracle: dimension of the S_k-coinvariants of the k-fold
/// graded tensor power with Koszul signs, by enumerating tensor words and
/// their orbits under all k! permutations. An orbit contributes 1 to its
/// degree unless some permutation fixes the word with sign −1.
pub fn sym_betti_oracle(profile: &GradedDim, k: u32) -> Result<GradedDim> {
    let total = profile.total_dim();
    if total > ORACLE_MAX_TOTAL_DIM {
        return Err(Error::ResourceBound {
            what: "oracle profile total dimension",
            requested: total,
            limit: ORACLE_MAX_TOTAL_DIM,
        });
    }
    if k > ORACLE_MAX_WEIGHT {
        return Err(Error::ResourceBound {
            what: "oracle weight k",
            requested: k as u64,
            limit: ORACLE_MAX_WEIGHT as u64,
        });
    }
    if profile.dim(0) < 1 {
        return Err(Error::Invalid("profile must have b_0 >= 1".into()));
    }
    let gens = generators_of(profile);
    let degrees: Vec<u32> = gens.iter().map(|g| g.degree).collect();
    let perms = permutations(k as usize);
    let mut out = GradedDim::zero();
    let mut seen = std::collections::HashSet::new();
    if k == 0 {
        return Ok(GradedDim::point());
    }
    // Words are k-tuples of generator indices, enumerated in base #gens.
    let mut word = vec![0usize; k as usize];
    loop {
        if !seen.contains(&word) {
            let mut orbit = Vec::new();
            let mut dies = false;
            for perm in &perms {
                let (img, sign) = permute_word(&word, &degrees, perm);
                if img == word && sign < 0 {
                    dies = true;
                }
                orbit.push(img);
            }
            let degree: u32 = word.iter().map(|&g| degrees[g]).sum();
            for img in orbit {
                seen.insert(img);
            }
            if !dies {
                out.add_dim(degree as usize, 1);
            }
        }
        // Advance the word.
        let mut pos = 0;
        loop {
            word[pos] += 1;
            if word[pos] < gens.len() {
                break;
            }
            word[pos] = 0;
            pos += 1;
            if pos == word.len() {
                return Ok(out);
            }
        }
    }
}

/// Applies σ to a tensor word with the Koszul sign: factors i < j that
/// invert under σ contribute (−1)^{deg_i · deg_j}.
fn permute_word(word: &[usize], degrees: &[u32], perm: &[usize]) -> (Vec<usize>, i32) {
    let k = word.len();
    let mut img = vec![0usize; k];
    for (i, &target) in perm.iter().enumerate() {
        img[target] = word[i];
    }
    let mut sign = 1;
    for i in 0..k {
        for j in (i + 1)..k {
            if perm[i] > perm[j] && degrees[word[i]] % 2 == 1 && degrees[word[j]] % 2 == 1 {
                sign = -sign;
            }
        }
    }
    (img, sign)
}

pub(crate) fn permutations(k: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for i in 0..k {
        let mut next = Vec::new();
        for p in out {
            for slot in 0..=i {
                let mut q = p.clone();
                q.insert(slot, i);
                next.push(q);
            }
        }
        out = next;
    }
    out
}

/// Matrix of multiplication by the unit u, from the weight-k basis to the
/// weight-(k+1) basis. Injective in every degree.
pub fn stabilization_operator(profile: &GradedDim, k: u32) -> Result<QMatrix> {
    let source = WeightedBasis::new(profile, k)?;
    let target = WeightedBasis::new(profile, k + 1)?;
    let u = source.unit_position();
    let mut m = QMatrix::zeros(target.len(), source.len());
    for (col, mono) in source.monomials.iter().enumerate() {
        let mut img = mono.clone();
        img[u] += 1;
        let row = target.index_of(&img).expect("u-multiple stays in basis");
        m.set(row, col, BigRational::from(BigInt::from(1)));
    }
    Ok(m)
}

/// Matrix of the derivation ∂/∂u on the weight-k basis: u^m x ↦ m·u^{m−1} x
/// for x free of u.
pub fn transfer_operator(profile: &GradedDim, k: u32) -> Result<QMatrix> {
    if k == 0 {
        return Err(Error::Invalid("transfer needs weight k >= 1".into()));
    }
    let source = WeightedBasis::new(profile, k)?;
    let target = WeightedBasis::new(profile, k - 1)?;
    let u = source.unit_position();
    let mut m = QMatrix::zeros(target.len(), source.len());
    for (col, mono) in source.monomials.iter().enumerate() {
        let e = mono[u];
        if e == 0 {
            continue;
        }
        let mut img = mono.clone();
        img[u] -= 1;
        let row = target.index_of(&img).expect("u-derivative stays in basis");
        m.set(row, col, BigRational::from(BigInt::from(e)));
    }
    Ok(m)
}

/// The normalized multi-step transfer from weight p to weight m ≤ p:
/// deletes p−m unit points as an unordered subset,
/// u^e x ↦ C(e, p−m)·u^{e−(p−m)} x.
pub fn multi_transfer(profile: &GradedDim, m_weight: u32, p_weight: u32) -> Result<QMatrix> {
    if m_weight > p_weight {
        return Err(Error::Invalid("multi_transfer needs m <= p".into()));
    }
    let steps = p_weight - m_weight;
    let source = WeightedBasis::new(profile, p_weight)?;
    let target = WeightedBasis::new(profile, m_weight)?;
    let u = source.unit_position();
    let mut mat = QMatrix::zeros(target.len(), source.len());
    for (col, mono) in source.monomials.iter().enumerate() {
        let e = mono[u];
        if e < steps {
            continue;
        }
        let mut img = mono.clone();
        img[u] -= steps;
        let row = target.index_of(&img).expect("deletion stays in basis");
        mat.set(row, col, BigRational::from(binomial(e as u64, steps as u64)));
    }
    Ok(mat)
}

pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut acc = BigInt::from(1);
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

fn factorial_int(n: u64) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

/// One line of the operator-identity report.
#[derive(Clone, Debug)]
pub struct DoldCheck {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Clone, Debug)]
pub struct DoldReport {
    pub checks: Vec<DoldCheck>,
    pub pass: bool,
    pub first_failure: Option<String>,
}

/// Verifies, for all weights p ≤ k_max:
///  1. τσ − στ = id on the weight-p basis;
///  2. the composite of single-step transfers from weight p to m equals
///     (p−m)! times the normalized multi-step transfer;
///  3. degreewise, dim B_p = Σ_{q ≤ p} dim(B_q / im σ_q), with cokernel
///     dimensions computed by the rational rank engine.
pub fn verify_dold(profile: &GradedDim, k_max: u32) -> Result<DoldReport> {
    let mut checks = Vec::new();
    let push = |checks: &mut Vec<DoldCheck>, name: String, pass: bool, detail: String| {
        checks.push(DoldCheck { name, pass, detail });
    };

    for p in 0..=k_max {
        // (1) τ_{p,p+1} σ_{p+1} − σ_p τ_{p−1,p} = id_{B_p}.
        let ts = transfer_operator(profile, p + 1)?.mul(&stabilization_operator(profile, p)?);
        let st = if p == 0 {
            QMatrix::zeros(ts.rows(), ts.cols())
        } else {
            stabilization_operator(profile, p - 1)?.mul(&transfer_operator(profile, p)?)
        };
        let pass = ts.sub(&st).is_identity();
        push(
            &mut checks,
            format!("commutator weight {p}"),
            pass,
            format!("tau.sigma - sigma.tau = id on B_{p}"),
        );
    }

    for p in 1..=k_max {
        for m in 0..p {
            // (2) τ_{m,m+1} ∘ … ∘ τ_{p−1,p} = (p−m)! τ_{m,p}.
            let mut composite = transfer_operator(profile, m + 1)?;
            for w in (m + 2)..=p {
                composite = composite.mul(&transfer_operator(profile, w)?);
            }
            let scaled = multi_transfer(profile, m, p)?
                .scale(&BigRational::from(factorial_int((p - m) as u64)));
            let pass = composite.sub(&scaled).is_zero();
            push(
                &mut checks,
                format!("composite {p}->{m}"),
                pass,
                format!(
                    "single-step composite equals ({})! x normalized transfer",
                    p - m
                ),
            );
        }
    }

    // (3) Dold dimension decomposition, degreewise.
    let mut coker_dims: Vec<GradedDim> = Vec::new();
    for q in 0..=k_max {
        let basis = WeightedBasis::new(profile, q)?;
        let dims = basis.graded_dims();
        let mut coker = GradedDim::zero();
        if q == 0 {
            coker = dims;
        } else {
            let sigma = stabilization_operator(profile, q - 1)?;
            let source = WeightedBasis::new(profile, q - 1)?;
            for (deg, dim) in dims.iter() {
                let rank = degree_block(&sigma, &basis, &source, deg).rank() as u64;
                coker.add_dim(deg, dim - rank);
            }
        }
        coker_dims.push(coker);
    }
    for p in 0..=k_max {
        let dims = WeightedBasis::new(profile, p)?.graded_dims();
        let max_deg = dims.max_degree().unwrap_or(0);
        let mut ok = true;
        let mut detail = String::from("dimension split holds degreewise");
        for deg in 0..=max_deg {
            let total: u64 = coker_dims[..=p as usize].iter().map(|c| c.dim(deg)).sum();
            if total != dims.dim(deg) {
                ok = false;
                detail = format!(
                    "degree {deg}: sum of cokernels {total} != dim {}",
                    dims.dim(deg)
                );
                break;
            }
        }
        push(&mut checks, format!("decomposition weight {p}"), ok, detail);
    }

    let first_failure = checks
        .iter()
        .find(|c| !c.pass)
        .map(|c| format!("{}: {}", c.name, c.detail));
    Ok(DoldReport {
        pass: first_failure.is_none(),
        checks,
        first_failure,
    })
}

/// Restriction of a degree-preserving operator matrix to one degree block.
fn degree_block(
    m: &QMatrix,
    target: &WeightedBasis,
    source: &WeightedBasis,
    degree: usize,
) -> QMatrix {
    let rows: Vec<usize> = (0..target.len())
        .filter(|&r| target.degree_of(&target.monomials[r]) as usize == degree)
        .collect();
    let cols: Vec<usize> = (0..source.len())
        .filter(|&c| source.degree_of(&source.monomials[c]) as usize == degree)
        .collect();
    QMatrix::from_fn(rows.len(), cols.len(), |r, c| {
        m.get(rows[r], cols[c]).clone()
    })
}

/// Betti profiles exercised by the operator-identity suites.
pub fn builtin_profiles() -> Vec<(String, GradedDim)> {
    vec![
        ("point".into(), GradedDim::from_dims(vec![1])),
        ("circle".into(), GradedDim::from_dims(vec![1, 1])),
        ("sphere".into(), GradedDim::from_dims(vec![1, 0, 1])),
        ("torus".into(), GradedDim::from_dims(vec![1, 2, 1])),
        ("wedge-two-circles".into(), GradedDim::from_dims(vec![1, 2])),
        ("three-sphere".into(), GradedDim::from_dims(vec![1, 0, 0, 1])),
        ("punctured-r3".into(), GradedDim::from_dims(vec![1, 0, 2])),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(s: &str) -> GradedDim {
        GradedDim::parse(s).unwrap()
    }

    #[test]
    fn sym_betti_of_sphere_is_projective_space() {
        // Betti numbers of the complex projective spaces: 1,0,1,…,0,1.
        for k in 0..=10u32 {
            let got = sym_betti(&g("1,0,1"), k).unwrap();
            let mut want = GradedDim::zero();
            for i in 0..=k as usize {
                want.add_dim(2 * i, 1);
            }
            assert_eq!(got, want, "k={k}");
        }
    }

    #[test]
    fn sym_betti_trivial_and_circle() {
        for k in 0..6 {
            assert_eq!(sym_betti(&g("1"), k).unwrap(), GradedDim::point());
        }
        for k in 1..6 {
            assert_eq!(sym_betti(&g("1,1"), k).unwrap(), g("1,1"));
        }
        assert_eq!(sym_betti(&g("1,1"), 0).unwrap(), GradedDim::point());
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(sym_betti_oracle(&g("1,0,1"), 2).unwrap(), g("1,0,1,0,1"));
        assert_eq!(sym_betti_oracle(&g("1"), 5).unwrap(), GradedDim::point());
        // Odd class squares to zero under Koszul signs.
        assert_eq!(sym_betti_oracle(&g("1,1"), 3).unwrap(), g("1,1"));
    }

    #[test]
    fn oracle_guards() {
        assert!(matches!(
            sym_betti_oracle(&g("1,6"), 2),
            Err(Error::ResourceBound { .. })
        ));
        assert!(matches!(
            sym_betti_oracle(&g("1"), 7),
            Err(Error::ResourceBound { .. })
        ));
    }

    #[test]
    fn oracle_agrees_with_generating_function() {
        // All profiles with b_0 = 1, support in degrees ≤ 3, total dim ≤ 4.
        for b1 in 0..=3u64 {
            for b2 in 0..=3u64 {
                for b3 in 0..=3u64 {
                    if 1 + b1 + b2 + b3 > 4 {
                        continue;
                    }
                    let profile = GradedDim::from_dims(vec![1, b1, b2, b3]);
                    for k in 0..=5 {
                        assert_eq!(
                            sym_betti(&profile, k).unwrap(),
                            sym_betti_oracle(&profile, k).unwrap(),
                            "profile {profile} k={k}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn weighted_basis_counts_match_sym_betti() {
        for profile in [g("1"), g("1,1"), g("1,0,1"), g("1,2,1"), g("1,1,2")] {
            for k in 0..=6 {
                let basis = WeightedBasis::new(&profile, k).unwrap();
                assert_eq!(basis.graded_dims(), sym_betti(&profile, k).unwrap());
            }
        }
    }

    #[test]
    fn stabilization_is_degreewise_identity_embedding_for_sphere() {
        // Weight 2 → 3 for the sphere profile: u^{2−i}v^i ↦ u^{3−i}v^i.
        let m = stabilization_operator(&g("1,0,1"), 2).unwrap();
        assert_eq!((m.rows(), m.cols()), (4, 3));
        for c in 0..3 {
            for r in 0..4 {
                let want = if r == c { 1 } else { 0 };
                assert_eq!(m.get(r, c), &BigRational::from(BigInt::from(want)));
            }
        }
    }

    #[test]
    fn stabilization_injective_ranks() {
        for profile in [g("1"), g("1,1"), g("1,0,1"), g("1,2"), g("1,1,1")] {
            for k in 0..=5u32 {
                let m = stabilization_operator(&profile, k).unwrap();
                assert_eq!(m.rank(), m.cols(), "profile {profile} k={k}");
            }
        }
    }

    #[test]
    fn transfer_examples() {
        // Sphere profile: u^{k−i}v^i ↦ (k−i)·u^{k−1−i}v^i; v-only ↦ 0.
        let k = 3;
        let m = transfer_operator(&g("1,0,1"), k).unwrap();
        let source = WeightedBasis::new(&g("1,0,1"), k).unwrap();
        let target = WeightedBasis::new(&g("1,0,1"), k - 1).unwrap();
        for (col, mono) in source.monomials.iter().enumerate() {
            let e = mono[source.unit_position()];
            for (row, _) in target.monomials.iter().enumerate() {
                let got = m.get(row, col);
                let mut img = mono.clone();
                if e > 0 {
                    img[source.unit_position()] -= 1;
                }
                let want = if e > 0 && target.index_of(&img) == Some(row) {
                    BigInt::from(e)
                } else {
                    BigInt::from(0)
                };
                assert_eq!(got, &BigRational::from(want));
            }
        }
        // Point profile: u^k ↦ k·u^{k−1}.
        let m = transfer_operator(&g("1"), 4).unwrap();
        assert_eq!(m.get(0, 0), &BigRational::from(BigInt::from(4)));
    }

    /// Hand check of the weight-2 transfer against the coinvariant
    /// definition for the sphere profile. Classes [u⊗u], [u⊗v], [v⊗v];
    /// summing over the two coset representatives and deleting the last
    /// point gives 2u, v, 0 respectively.
    #[test]
    fn transfer_weight_two_hand_check() {
        let profile = g("1,0,1");
        let m = transfer_operator(&profile, 2).unwrap();
        // Basis order by degree: weight 2 is u^2, uv, v^2; weight 1 is u, v.
        let expected = QMatrix::from_int_rows(vec![vec![2, 0, 0], vec![0, 1, 0]]);
        assert_eq!(m, expected);
        let sigma = stabilization_operator(&profile, 1).unwrap();
        let expected_sigma = QMatrix::from_int_rows(vec![vec![1, 0], vec![0, 1], vec![0, 0]]);
        assert_eq!(sigma, expected_sigma);
    }

    #[test]
    fn dold_report_passes_on_small_profiles() {
        for profile in [g("1"), g("1,1"), g("1,0,1")] {
            let report = verify_dold(&profile, 4).unwrap();
            assert!(report.pass, "{profile}: {:?}", report.first_failure);
        }
    }

    #[test]
    fn steenrod_stability_range() {
        // Entries of Sym_k and Sym_{k+1} agree in degrees ≤ k; with
        // b_1 = … = b_a = 0 the agreement extends to degrees ≤ (a+1)k.
        let cases = [
            (g("1,2"), 0u32),
            (g("1,1,1"), 0),
            (g("1,0,1"), 1),
            (g("1,0,2,1"), 1),
            (g("1,0,0,1"), 2),
            (g("1,0,0,0,2"), 3),
        ];
        for (profile, a) in cases {
            for k in 1..=6u32 {
                let here = sym_betti(&profile, k).unwrap();
                let next = sym_betti(&profile, k + 1).unwrap();
                let range = ((a + 1) * k) as usize;
                assert!(
                    here.agrees_through(&next, range),
                    "profile {profile} k={k} range {range}: {here} vs {next}"
                );
            }
        }
    }

    #[test]
    fn binomial_small() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(3, 5), BigInt::from(0));
        assert_eq!(binomial(0, 0), BigInt::from(1));
    }
}
