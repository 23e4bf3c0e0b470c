//! Rational homology of ordered configuration spaces of ℝ^d as a
//! symmetric-group module, and sign-twisted coinvariants producing the
//! homology of strata of symmetric powers.
//!
//! The module uses the classical presentation: generators A_{i,j}
//! (1 ≤ j < i ≤ n) of degree d−1 with A_{ij} = (−1)^d A_{ji},
//! A_{ij}² = 0, graded commutativity, and the three-term relation
//! A_{ij}A_{jk} + A_{jk}A_{ki} + A_{ki}A_{ij} = 0. Admissible monomials
//! have strictly increasing first indices, giving Poincaré polynomial
//! ∏_{i=1}^{n−1} (1 + i t^{d−1}) and total dimension n!.
//!
//! Straightening resolves a duplicated first index via
//! A_{ia}A_{ib} = A_{ba}A_{ib} − A_{ba}A_{ia} (a < b), a form of the
//! three-term relation valid for both parities of d once the flip and
//! commutation signs are factored out. The convention is not trusted a
//! priori: the n!-dimension, involution, braid and commutation invariants
//! plus the hand-computed coinvariant values gate it.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use num::rational::BigRational;
use num::BigInt;

use crate::graded::GradedDim;
use crate::linalg::QMatrix;
use crate::partitions::{partitions_of, Partition, SetPartition};
use crate::{Error, Result};

/// Hard cap on the number of configuration points.
pub const MAX_POINTS: u32 = 8;

/// A generator A_{hi,lo} with hi > lo.
pub type ConfigGen = (u8, u8);
/// Admissible monomial: generators with strictly increasing first index.
pub type ConfigMonomial = Vec<ConfigGen>;
/// Sparse vector in the admissible basis.
pub type SparseVec = Vec<(usize, i64)>;

/// The homology of the ordered configuration space of n points in ℝ^d,
/// with its S_n-action by signed straightened relabeling.
pub struct SymGroupModule {
    pub n: u32,
    pub d: u32,
    basis: Vec<ConfigMonomial>,
    index: HashMap<ConfigMonomial, usize>,
    straightener: Mutex<Straightener>,
}

struct Straightener {
    /// (−1)^d: sign of flipping A_{ab} to A_{ba}.
    flip_sign: i64,
    /// (−1)^{d−1}: sign of transposing two generators.
    commute_sign: i64,
    memo: HashMap<ConfigMonomial, Arc<Vec<(ConfigMonomial, i64)>>>,
}

impl Straightener {
    fn new(d: u32) -> Self {
        Straightener {
            flip_sign: if d % 2 == 0 { 1 } else { -1 },
            commute_sign: if d % 2 == 0 { -1 } else { 1 },
            memo: HashMap::new(),
        }
    }

    /// Sorts factors by (hi, lo), returning the permutation sign, or None
    /// when a repeated generator kills the monomial.
    fn sort_factors(&self, factors: &mut ConfigMonomial) -> Option<i64> {
        let mut sign = 1i64;
        for i in 1..factors.len() {
            let mut j = i;
            while j > 0 && factors[j - 1] > factors[j] {
                factors.swap(j - 1, j);
                sign *= self.commute_sign;
                j -= 1;
            }
        }
        for w in factors.windows(2) {
            if w[0] == w[1] {
                return None;
            }
        }
        Some(sign)
    }

    /// Straightens an arbitrary product of normalized generators into the
    /// admissible basis.
    fn straighten(&mut self, mut factors: ConfigMonomial) -> Vec<(ConfigMonomial, i64)> {
        let Some(sign) = self.sort_factors(&mut factors) else {
            return Vec::new();
        };
        let combo = self.straighten_sorted(factors);
        combo.iter().map(|(m, c)| (m.clone(), c * sign)).collect()
    }

    fn straighten_sorted(&mut self, factors: ConfigMonomial) -> Arc<Vec<(ConfigMonomial, i64)>> {
        if let Some(hit) = self.memo.get(&factors) {
            return Arc::clone(hit);
        }
        let collision = factors.windows(2).position(|w| w[0].0 == w[1].0);
        let result = match collision {
            None => Arc::new(vec![(factors.clone(), 1)]),
            Some(t) => {
                // Sorted, so the pair is A_{ia} A_{ib} with a < b; rewrite
                // as A_{ba}A_{ib} − A_{ba}A_{ia}.
                let (i, a) = factors[t];
                let (_, b) = factors[t + 1];
                let mut acc: HashMap<ConfigMonomial, i64> = HashMap::new();
                for (replacement, coeff) in [([(b, a), (i, b)], 1i64), ([(b, a), (i, a)], -1)] {
                    let mut child: ConfigMonomial = factors[..t].to_vec();
                    child.extend_from_slice(&replacement);
                    child.extend_from_slice(&factors[t + 2..]);
                    for (m, c) in self.straighten(child) {
                        *acc.entry(m).or_insert(0) += c * coeff;
                    }
                }
                let mut combo: Vec<(ConfigMonomial, i64)> =
                    acc.into_iter().filter(|&(_, c)| c != 0).collect();
                combo.sort();
                Arc::new(combo)
            }
        };
        self.memo.insert(factors, Arc::clone(&result));
        result
    }
}

/// Enumerates the admissible basis: for each first index i ∈ 2..=n either
/// no factor or one A_{i,j} with j < i.
fn admissible_basis(n: u32) -> Vec<ConfigMonomial> {
    let mut basis: Vec<ConfigMonomial> = vec![Vec::new()];
    for i in 2..=n as u8 {
        let mut next = Vec::new();
        for mono in &basis {
            next.push(mono.clone());
            for j in 1..i {
                let mut m = mono.clone();
                m.push((i, j));
                next.push(m);
            }
        }
        basis = next;
    }
    basis.sort_by_key(|m| (m.len(), m.clone()));
    basis
}

/// Builds (or fetches from the process-wide cache) the configuration
/// module for n points in ℝ^d. Guarded at n ≤ 8.
pub fn ordered_config_module(d: u32, n: u32) -> Result<Arc<SymGroupModule>> {
    if n > MAX_POINTS {
        return Err(Error::ResourceBound {
            what: "configuration points n",
            requested: n as u64,
            limit: MAX_POINTS as u64,
        });
    }
    if d < 2 {
        return Err(Error::Invalid("ambient dimension must be at least 2".into()));
    }
    static CACHE: OnceLock<Mutex<HashMap<(u32, u32), Arc<SymGroupModule>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = cache.lock().unwrap();
    if let Some(hit) = guard.get(&(d, n)) {
        return Ok(Arc::clone(hit));
    }
    let basis = admissible_basis(n);
    let index = basis
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, m)| (m, i))
        .collect();
    let module = Arc::new(SymGroupModule {
        n,
        d,
        basis,
        index,
        straightener: Mutex::new(Straightener::new(d)),
    });
    guard.insert((d, n), Arc::clone(&module));
    Ok(module)
}

impl SymGroupModule {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[ConfigMonomial] {
        &self.basis
    }

    /// Homological degree of a basis monomial.
    pub fn degree_of(&self, idx: usize) -> usize {
        self.basis[idx].len() * (self.d as usize - 1)
    }

    /// Poincaré polynomial; equals ∏_{i=1}^{n−1}(1 + i t^{d−1}).
    pub fn graded_dims(&self) -> GradedDim {
        let mut g = GradedDim::zero();
        for m in &self.basis {
            g.add_dim(m.len() * (self.d as usize - 1), 1);
        }
        g
    }

    /// Applies a permutation (1-based images: perm[v−1] = σ(v)) to a
    /// basis monomial, straightening back into the basis.
    pub fn apply_permutation(&self, perm: &[u32], idx: usize) -> SparseVec {
        let mono = &self.basis[idx];
        let mut sign = 1i64;
        let mut factors: ConfigMonomial = Vec::with_capacity(mono.len());
        let mut straightener = self.straightener.lock().unwrap();
        for &(hi, lo) in mono {
            let a = perm[hi as usize - 1] as u8;
            let b = perm[lo as usize - 1] as u8;
            if a > b {
                factors.push((a, b));
            } else {
                factors.push((b, a));
                sign *= straightener.flip_sign;
            }
        }
        straightener
            .straighten(factors)
            .into_iter()
            .map(|(m, c)| (self.index[&m], c * sign))
            .collect()
    }

    /// Applies the adjacent transposition s_i = (i, i+1), 1 ≤ i ≤ n−1.
    pub fn apply_transposition(&self, i: u32, idx: usize) -> SparseVec {
        assert!(i >= 1 && i < self.n);
        self.apply_permutation(&transposition_perm(self.n, i), idx)
    }

    /// Applies a permutation to a sparse vector.
    pub fn apply_permutation_vec(&self, perm: &[u32], vec: &SparseVec) -> SparseVec {
        let mut acc: BTreeMap<usize, i64> = BTreeMap::new();
        for &(idx, coeff) in vec {
            for (target, c) in self.apply_permutation(perm, idx) {
                *acc.entry(target).or_insert(0) += c * coeff;
            }
        }
        acc.into_iter().filter(|&(_, c)| c != 0).collect()
    }

    /// Dense action matrix of the adjacent transposition s_i; materialized
    /// on demand and guarded to modules of dimension ≤ 720.
    pub fn action_matrix(&self, i: u32) -> Result<QMatrix> {
        if self.dim() > 720 {
            return Err(Error::ResourceBound {
                what: "dense action matrix dimension",
                requested: self.dim() as u64,
                limit: 720,
            });
        }
        let mut m = QMatrix::zeros(self.dim(), self.dim());
        for col in 0..self.dim() {
            for (row, c) in self.apply_transposition(i, col) {
                m.set(row, col, BigRational::from(BigInt::from(c)));
            }
        }
        Ok(m)
    }

    /// Graded trace of a permutation with the given cycle type, indexed by
    /// generator count q (degree = q·(d−1)). Cached process-wide per
    /// (n, parity of d, cycle type); the trace is a class function.
    pub fn trace_by_cycle_type(&self, cycle_type: &Partition) -> Arc<Vec<i64>> {
        assert_eq!(cycle_type.k(), self.n as u64, "cycle type must partition n");
        static CACHE: OnceLock<Mutex<HashMap<(u32, u32, Vec<u32>), Arc<Vec<i64>>>>> =
            OnceLock::new();
        let key = (self.n, self.d % 2, cycle_type.parts().to_vec());
        let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
        if let Some(hit) = cache.lock().unwrap().get(&key) {
            return Arc::clone(hit);
        }
        let perm = representative(cycle_type, self.n);
        let mut traces = vec![0i64; self.n.max(1) as usize];
        for idx in 0..self.dim() {
            let q = self.basis[idx].len();
            for (target, c) in self.apply_permutation(&perm, idx) {
                if target == idx {
                    traces[q] += c;
                }
            }
        }
        let traces = Arc::new(traces);
        cache.lock().unwrap().insert(key, Arc::clone(&traces));
        traces
    }
}

fn transposition_perm(n: u32, i: u32) -> Vec<u32> {
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

/// A permutation of {1..n} with the given cycle type, cycles laid out on
/// consecutive points.
fn representative(cycle_type: &Partition, n: u32) -> Vec<u32> {
    let mut perm: Vec<u32> = (1..=n).collect();
    let mut start = 0usize;
    for &len in cycle_type.parts() {
        let len = len as usize;
        for off in 0..len {
            perm[start + off] = (start + (off + 1) % len) as u32 + 1;
        }
        start += len;
    }
    perm
}

/// Twisting character for coinvariants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TwistCharacter {
    Trivial,
    /// Sign character of the full symmetric group on the module's points.
    GlobalSign,
    /// The partial sign character attached to a set partition: on the
    /// permutations of the n(l) blocks of size l it is the product of the
    /// block-sum sign sgn^l and the block-permutation sign, i.e. sgn^{l+1}.
    Eta(SetPartition),
}

/// A color class: `size` interchangeable points carrying the character
/// sgn^`sign_exponent` of its S_size factor.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ColorClass {
    pub size: u32,
    pub sign_exponent: u8,
}

/// Degreewise dimension of the coinvariants of the module under the
/// product of symmetric groups on the color classes, twisted by the
/// per-class characters. Computed by the exact graded trace of the
/// averaging projector (the projector is idempotent, so its rank equals
/// its trace), summed over cycle types with exact integer arithmetic.
pub fn colored_coinvariant_dims(
    module: &SymGroupModule,
    classes: &[ColorClass],
) -> Result<GradedDim> {
    let total: u32 = classes.iter().map(|c| c.size).sum();
    if total != module.n {
        return Err(Error::Invalid(format!(
            "color classes cover {total} points, module has {}",
            module.n
        )));
    }
    let nq = module.n.max(1) as usize;
    let mut sums = vec![0i64; nq];
    let mut group_order = 1i64;
    for c in classes {
        group_order *= (1..=c.size as i64).product::<i64>();
    }
    let class_types: Vec<Vec<Partition>> =
        classes.iter().map(|c| partitions_of(c.size)).collect();
    // Walk all tuples of per-class cycle types.
    let mut tuple = vec![0usize; classes.len()];
    loop {
        let mut count = 1i64;
        let mut character = 1i64;
        let mut combined: Vec<u32> = Vec::new();
        for (t, class) in classes.iter().enumerate() {
            let ct = &class_types[t][tuple[t]];
            count *= class_size(ct, class.size);
            if class.sign_exponent % 2 == 1 {
                character *= sign_of_cycle_type(ct, class.size);
            }
            combined.extend_from_slice(ct.parts());
        }
        let combined = Partition::new(combined).expect("cycle lengths are positive");
        let traces = module.trace_by_cycle_type(&combined);
        for q in 0..nq {
            sums[q] += count * character * traces[q];
        }
        // Advance.
        let mut pos = 0;
        loop {
            if pos == tuple.len() {
                let mut out = GradedDim::zero();
                for (q, &s) in sums.iter().enumerate() {
                    assert!(
                        s % group_order == 0 && s / group_order >= 0,
                        "projector trace must be a non-negative multiple of |G|"
                    );
                    out.add_dim(q * (module.d as usize - 1), (s / group_order) as u64);
                }
                return Ok(out);
            }
            tuple[pos] += 1;
            if tuple[pos] < class_types[pos].len() {
                break;
            }
            tuple[pos] = 0;
            pos += 1;
        }
    }
}

/// Number of elements of S_m with the given cycle type: m!/z, where
/// z = ∏ i^{a_i} a_i! over cycle lengths i with multiplicity a_i.
fn class_size(cycle_type: &Partition, m: u32) -> i64 {
    let mut z = 1i64;
    for (len, mult) in cycle_type.multiplicities() {
        for _ in 0..mult {
            z *= len as i64;
        }
        z *= (1..=mult as i64).product::<i64>();
    }
    let fact: i64 = (1..=m as i64).product();
    fact / z
}

fn sign_of_cycle_type(cycle_type: &Partition, m: u32) -> i64 {
    let cycles = cycle_type.r() as u32;
    if (m - cycles) % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Coinvariants of the module under the colored subgroup with the twist
/// character restricted to it. Color classes occupy consecutive point
/// ranges in the order of `colors`; for the Eta twist the per-class block
/// sizes are read off the set partition's shape (largest blocks first)
/// and must agree with `colors` as a multiset.
pub fn colored_coinvariants(
    module: &SymGroupModule,
    colors: &Partition,
    twist: &TwistCharacter,
) -> Result<GradedDim> {
    let classes = resolve_classes(module.n, colors, twist)?;
    colored_coinvariant_dims(module, &classes)
}

fn resolve_classes(n: u32, colors: &Partition, twist: &TwistCharacter) -> Result<Vec<ColorClass>> {
    if colors.k() != n as u64 {
        return Err(Error::Invalid(format!(
            "colors {colors} do not sum to n = {n}"
        )));
    }
    match twist {
        TwistCharacter::Trivial => Ok(colors
            .parts()
            .iter()
            .map(|&c| ColorClass {
                size: c,
                sign_exponent: 0,
            })
            .collect()),
        TwistCharacter::GlobalSign => Ok(colors
            .parts()
            .iter()
            .map(|&c| ColorClass {
                size: c,
                sign_exponent: 1,
            })
            .collect()),
        TwistCharacter::Eta(sp) => {
            let mult = sp.shape().multiplicities();
            let mut sizes: Vec<u32> = mult.values().copied().collect();
            sizes.sort_unstable_by(|a, b| b.cmp(a));
            if sizes != colors.parts() {
                return Err(Error::Invalid(format!(
                    "set partition shape {} does not induce colors {colors}",
                    sp.shape()
                )));
            }
            // Classes by decreasing block size l; character sgn^{l+1}.
            Ok(mult
                .iter()
                .rev()
                .map(|(&l, &nl)| ColorClass {
                    size: nl,
                    sign_exponent: ((l + 1) % 2) as u8,
                })
                .collect())
        }
    }
}

/// Reference implementation of the coinvariant dimensions: dense
/// averaging projector (1/|G|) Σ χ(g)·ρ(g) per degree block, rank by
/// rational elimination. Exercised by the test suites to validate the
/// trace route; guarded to small modules. `layout` lists the point
/// positions of each class, `exponents` the per-class sign exponents.
pub fn colored_coinvariant_dims_rank(
    module: &SymGroupModule,
    layout: &[Vec<u32>],
    exponents: &[u8],
) -> Result<GradedDim> {
    if module.dim() > 720 {
        return Err(Error::ResourceBound {
            what: "dense projector dimension",
            requested: module.dim() as u64,
            limit: 720,
        });
    }
    let mut elements: Vec<(Vec<u32>, i64)> = vec![((1..=module.n).collect(), 1)];
    for (class, &exp) in layout.iter().zip(exponents) {
        let perms = crate::sympower::permutations(class.len());
        let mut next = Vec::new();
        for (base, base_sign) in &elements {
            for p in &perms {
                let mut perm = base.clone();
                let mut sign = 1i64;
                for (slot, &target) in p.iter().enumerate() {
                    perm[class[slot] as usize - 1] = base[class[target] as usize - 1];
                }
                for i in 0..p.len() {
                    for j in (i + 1)..p.len() {
                        if p[i] > p[j] {
                            sign = -sign;
                        }
                    }
                }
                let character = if exp % 2 == 1 { sign } else { 1 };
                next.push((perm, base_sign * character));
            }
        }
        elements = next;
    }
    let order = BigRational::from(BigInt::from(elements.len() as i64));
    let mut out = GradedDim::zero();
    let qmax = module.basis.last().map_or(0, |m| m.len());
    for q in 0..=qmax {
        let block: Vec<usize> = (0..module.dim())
            .filter(|&i| module.basis[i].len() == q)
            .collect();
        let pos: HashMap<usize, usize> = block
            .iter()
            .copied()
            .enumerate()
            .map(|(a, b)| (b, a))
            .collect();
        let mut projector = QMatrix::zeros(block.len(), block.len());
        for (col_local, &col) in block.iter().enumerate() {
            for (perm, character) in &elements {
                for (row, c) in module.apply_permutation(perm, col) {
                    projector.add_to(
                        pos[&row],
                        col_local,
                        &BigRational::from(BigInt::from(c * character)),
                    );
                }
            }
        }
        projector = projector.scale(&order.recip());
        out.add_dim(q * (module.d as usize - 1), projector.rank() as u64);
    }
    Ok(out)
}

/// Color classes of a stratum: parts of λ′ grouped by size, largest part
/// first; for odd d the class of size-l parts carries sgn^{l+1}.
fn stratum_classes(lambda_prime: &Partition, d: u32) -> Vec<ColorClass> {
    lambda_prime
        .multiplicities()
        .iter()
        .rev()
        .map(|(&l, &nl)| ColorClass {
            size: nl,
            sign_exponent: if d % 2 == 1 { ((l + 1) % 2) as u8 } else { 0 },
        })
        .collect()
}

/// Rational homology of the stratum of the symmetric power of ℝ^d whose
/// multiplicity pattern is exactly λ′. For even d this is the plain
/// homology of the colored configuration space (one color per part size);
/// for odd d it is the sign-twisted variant entering the odd-dimensional
/// spectral pages. Cached process-wide.
pub fn stratum_homology(lambda_prime: &Partition, d: u32) -> Result<GradedDim> {
    let m = lambda_prime.r() as u32;
    if m > MAX_POINTS {
        return Err(Error::ResourceBound {
            what: "stratum parts",
            requested: m as u64,
            limit: MAX_POINTS as u64,
        });
    }
    static CACHE: OnceLock<Mutex<HashMap<(Vec<u32>, u32), GradedDim>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let key = (lambda_prime.parts().to_vec(), d);
    if let Some(hit) = cache.lock().unwrap().get(&key) {
        return Ok(hit.clone());
    }
    let module = ordered_config_module(d, m)?;
    let classes = stratum_classes(lambda_prime, d);
    let dims = colored_coinvariant_dims(&module, &classes)?;
    cache.lock().unwrap().insert(key, dims.clone());
    Ok(dims)
}

/// Compactly supported cohomology of the stratum: the homology regraded
/// by q ↦ d·m − q, where m is the number of parts (the stratum dimension
/// is d·m). Odd d regrades the twisted groups.
pub fn stratum_compact_support(lambda_prime: &Partition, d: u32) -> Result<GradedDim> {
    let h = stratum_homology(lambda_prime, d)?;
    Ok(h.regrade_dual(d as usize * lambda_prime.r()))
}

/// The fully twisted stratum groups of the odd-dimensional discriminant
/// theory. The twisting character restricts to the sign character on the
/// within-block permutations of any part of size ≥ 2, and those act
/// trivially on the stratum, so the groups vanish unless every part is 1;
/// the all-ones stratum carries the untwisted full coinvariants.
pub(crate) fn stratum_homology_discriminant_twist(
    lambda_prime: &Partition,
    d: u32,
) -> Result<GradedDim> {
    debug_assert!(d % 2 == 1);
    if !lambda_prime.all_ones() {
        return Ok(GradedDim::zero());
    }
    let m = lambda_prime.r() as u32;
    if m > MAX_POINTS {
        return Err(Error::ResourceBound {
            what: "stratum parts",
            requested: m as u64,
            limit: MAX_POINTS as u64,
        });
    }
    if m == 0 {
        return Ok(GradedDim::point());
    }
    let module = ordered_config_module(d, m)?;
    colored_coinvariant_dims(
        &module,
        &[ColorClass {
            size: m,
            sign_exponent: 0,
        }],
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        Partition::parse(s).unwrap()
    }

    fn g(s: &str) -> GradedDim {
        GradedDim::parse(s).unwrap()
    }

    #[test]
    fn module_dimensions() {
        let m = ordered_config_module(2, 3).unwrap();
        assert_eq!(m.graded_dims(), g("1,3,2"));
        assert_eq!(m.dim(), 6);
        let m = ordered_config_module(3, 2).unwrap();
        assert_eq!(m.graded_dims(), g("1,0,1"));
        let m = ordered_config_module(4, 1).unwrap();
        assert_eq!(m.graded_dims(), GradedDim::point());
        for n in 0..=6u32 {
            for d in 2..=4 {
                let m = ordered_config_module(d, n).unwrap();
                let expected: u64 = (1..=n as u64).product::<u64>().max(1);
                assert_eq!(m.dim() as u64, expected, "n={n} d={d}");
            }
        }
        assert!(matches!(
            ordered_config_module(2, 9),
            Err(Error::ResourceBound { .. })
        ));
    }

    #[test]
    fn swap_sign_on_two_points() {
        // F(ℝ^d, 2): the swap fixes A_{21} for even d, negates it for odd.
        for d in 2..=5u32 {
            let m = ordered_config_module(d, 2).unwrap();
            let idx = m.index[&vec![(2u8, 1u8)]];
            let image = m.apply_transposition(1, idx);
            let want = if d % 2 == 0 { 1 } else { -1 };
            assert_eq!(image, vec![(idx, want)], "d={d}");
        }
    }

    /// The group relations hold exactly under the straightened action:
    /// s_i² = 1, braid, and commutation for distant indices.
    #[test]
    fn symmetric_group_relations_small() {
        for d in 2..=3u32 {
            for n in 2..=5u32 {
                let m = ordered_config_module(d, n).unwrap();
                for idx in 0..m.dim() {
                    let e: SparseVec = vec![(idx, 1)];
                    for i in 1..n {
                        let perm = transposition_perm(n, i);
                        let twice =
                            m.apply_permutation_vec(&perm, &m.apply_permutation_vec(&perm, &e));
                        assert_eq!(twice, e, "involution s_{i} d={d} n={n}");
                    }
                    for i in 1..n.saturating_sub(1) {
                        let si = transposition_perm(n, i);
                        let sj = transposition_perm(n, i + 1);
                        let lhs = m.apply_permutation_vec(
                            &si,
                            &m.apply_permutation_vec(&sj, &m.apply_permutation_vec(&si, &e)),
                        );
                        let rhs = m.apply_permutation_vec(
                            &sj,
                            &m.apply_permutation_vec(&si, &m.apply_permutation_vec(&sj, &e)),
                        );
                        assert_eq!(lhs, rhs, "braid s_{i} d={d} n={n}");
                    }
                    for i in 1..n {
                        for j in (i + 2)..n {
                            let si = transposition_perm(n, i);
                            let sj = transposition_perm(n, j);
                            let lhs =
                                m.apply_permutation_vec(&si, &m.apply_permutation_vec(&sj, &e));
                            let rhs =
                                m.apply_permutation_vec(&sj, &m.apply_permutation_vec(&si, &e));
                            assert_eq!(lhs, rhs, "commutation d={d} n={n}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn unordered_configuration_spaces_of_the_plane() {
        // C_n(ℝ²) has Betti numbers (1, 1) for n ≥ 2.
        for n in 2..=6u32 {
            let m = ordered_config_module(2, n).unwrap();
            let dims =
                colored_coinvariants(&m, &Partition::single(n), &TwistCharacter::Trivial).unwrap();
            assert_eq!(dims, g("1,1"), "n={n}");
        }
        // C_2(ℝ³) is rationally a point.
        let m = ordered_config_module(3, 2).unwrap();
        let dims =
            colored_coinvariants(&m, &Partition::single(2), &TwistCharacter::Trivial).unwrap();
        assert_eq!(dims, GradedDim::point());
    }

    #[test]
    fn trivial_colors_leave_module_unchanged() {
        let m = ordered_config_module(2, 4).unwrap();
        let dims = colored_coinvariants(&m, &p("1,1,1,1"), &TwistCharacter::Trivial).unwrap();
        assert_eq!(dims, m.graded_dims());
    }

    #[test]
    fn trace_route_matches_projector_rank() {
        // Dense projector rank = graded trace, across colors and twists.
        for d in 2..=3u32 {
            for n in 2..=4u32 {
                let module = ordered_config_module(d, n).unwrap();
                for colors in partitions_of(n) {
                    for exps in [vec![0u8; colors.r()], vec![1u8; colors.r()]] {
                        let classes: Vec<ColorClass> = colors
                            .parts()
                            .iter()
                            .zip(&exps)
                            .map(|(&size, &sign_exponent)| ColorClass {
                                size,
                                sign_exponent,
                            })
                            .collect();
                        let fast = colored_coinvariant_dims(&module, &classes).unwrap();
                        let layout = consecutive_layout(colors.parts());
                        let slow = colored_coinvariant_dims_rank(&module, &layout, &exps).unwrap();
                        assert_eq!(fast, slow, "d={d} n={n} colors={colors} exps={exps:?}");
                    }
                }
            }
        }
    }

    fn consecutive_layout(sizes: &[u32]) -> Vec<Vec<u32>> {
        let mut layout = Vec::new();
        let mut next = 1u32;
        for &s in sizes {
            layout.push((next..next + s).collect());
            next += s;
        }
        layout
    }

    #[test]
    fn layout_invariance_of_projector_rank() {
        // Which positions carry which color must not matter.
        let module = ordered_config_module(3, 4).unwrap();
        let a = colored_coinvariant_dims_rank(&module, &[vec![1, 2], vec![3, 4]], &[1, 0]).unwrap();
        let b = colored_coinvariant_dims_rank(&module, &[vec![3, 4], vec![1, 2]], &[1, 0]).unwrap();
        let c = colored_coinvariant_dims_rank(&module, &[vec![1, 4], vec![2, 3]], &[1, 0]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a, c);
    }

    #[test]
    fn stratum_homology_examples() {
        // Two distinguishable points in the plane.
        assert_eq!(stratum_homology(&p("1,2"), 2).unwrap(), g("1,1"));
        // A single multiplicity-m point: the stratum is ℝ^d itself.
        for m in 1..=4u32 {
            for d in 2..=3 {
                assert_eq!(
                    stratum_homology(&Partition::single(m), d).unwrap(),
                    GradedDim::point()
                );
            }
        }
        assert_eq!(stratum_homology(&p("1,1"), 2).unwrap(), g("1,1"));
        // Odd-dimensional pair of double points: only the degree-2 sphere
        // class survives the sgn^{l+1} twist.
        assert_eq!(stratum_homology(&p("2,2"), 3).unwrap(), g("0,0,1"));
        // Empty partition: the stratum of Sym_0 is a point.
        assert_eq!(
            stratum_homology(&Partition::empty(), 2).unwrap(),
            GradedDim::point()
        );
    }

    #[test]
    fn stratum_compact_support_examples() {
        assert_eq!(
            stratum_compact_support(&Partition::single(2), 2).unwrap(),
            g("0,0,1")
        );
        assert_eq!(
            stratum_compact_support(&p("1,2"), 2).unwrap(),
            g("0,0,0,1,1")
        );
        let h = stratum_homology(&p("1,1,2"), 2).unwrap();
        let cs = stratum_compact_support(&p("1,1,2"), 2).unwrap();
        assert_eq!(cs, h.regrade_dual(6));
    }

    #[test]
    fn stratum_input_order_is_irrelevant() {
        let a = stratum_homology(&p("2,1,2"), 2).unwrap();
        let b = stratum_homology(&p("1,2,2"), 2).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn discriminant_twist_strata() {
        assert_eq!(
            stratum_homology_discriminant_twist(&p("1,2"), 3).unwrap(),
            GradedDim::zero()
        );
        assert_eq!(
            stratum_homology_discriminant_twist(&p("1,1,1"), 3).unwrap(),
            GradedDim::point()
        );
    }

    #[test]
    fn eta_twist_resolution() {
        let sp = crate::partitions::ord_set_partitions(&p("2,2"), 12)
            .unwrap()
            .remove(0);
        let module = ordered_config_module(3, 2).unwrap();
        let dims =
            colored_coinvariants(&module, &Partition::single(2), &TwistCharacter::Eta(sp)).unwrap();
        assert_eq!(dims, g("0,0,1"));
    }
}
