//! Partition and set-partition combinatorics: adding ones, elementary
//! collapses, the collapse poset graded by depth, ordered set-partitions
//! and stabilizer shapes.
//!
//! A collapse merges two parts into their sum; the depth of a collapse is
//! the number of merges performed. `col(λ)` denotes the set of partitions
//! reachable from λ by merges, λ itself included at depth 0.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use num::BigUint;
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Enumeration guard for ordered set-partitions.
pub const DEFAULT_SET_PARTITION_BOUND: u64 = 12;

/// A partition of a non-negative integer, stored in canonical
/// non-increasing order. The empty partition (of 0) is legal.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::Invalid("partition parts must be positive".into()));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn single(part: u32) -> Self {
        assert!(part > 0);
        Partition { parts: vec![part] }
    }

    /// Non-increasing parts.
    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Sum of the parts.
    pub fn k(&self) -> u64 {
        self.parts.iter().map(|&p| p as u64).sum()
    }

    /// Number of parts.
    pub fn r(&self) -> usize {
        self.parts.len()
    }

    /// Number of parts equal to 1.
    pub fn ones(&self) -> usize {
        self.parts.iter().filter(|&&p| p == 1).count()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// True when every part equals 1 (includes the empty partition).
    pub fn all_ones(&self) -> bool {
        self.parts.iter().all(|&p| p == 1)
    }

    /// Multiplicity profile l ↦ n(l).
    pub fn multiplicities(&self) -> BTreeMap<u32, u32> {
        let mut m = BTreeMap::new();
        for &p in &self.parts {
            *m.entry(p).or_insert(0) += 1;
        }
        m
    }

    /// Prepends `j` parts equal to 1.
    pub fn add_ones(&self, j: usize) -> Partition {
        let mut parts = self.parts.clone();
        parts.extend(std::iter::repeat(1).take(j));
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// All partitions obtainable by merging exactly one pair of parts.
    pub fn elementary_collapses(&self) -> BTreeSet<Partition> {
        let mut out = BTreeSet::new();
        let n = self.parts.len();
        for i in 0..n {
            for j in (i + 1)..n {
                let mut parts = Vec::with_capacity(n - 1);
                for (t, &p) in self.parts.iter().enumerate() {
                    if t != i && t != j {
                        parts.push(p);
                    }
                }
                parts.push(self.parts[i] + self.parts[j]);
                parts.sort_unstable_by(|a, b| b.cmp(a));
                out.insert(Partition { parts });
            }
        }
        out
    }

    /// The collapse sets col_p graded by depth p: index p holds the set of
    /// partitions obtainable by exactly p merges. Index 0 is {self};
    /// the vector ends at the last nonempty depth (r−1 merges at most).
    ///
    /// Duplicates across different merge orders are collapsed by the
    /// breadth-first level sets; a partition's depth is forced by its part
    /// count, so the levels are automatically disjoint.
    pub fn collapses_by_depth(&self) -> Vec<BTreeSet<Partition>> {
        let mut levels: Vec<BTreeSet<Partition>> = Vec::new();
        let mut current = BTreeSet::new();
        current.insert(self.clone());
        while !current.is_empty() {
            let next: BTreeSet<Partition> = current
                .iter()
                .flat_map(|p| p.elementary_collapses())
                .collect();
            levels.push(std::mem::take(&mut current));
            current = next;
        }
        levels
    }

    /// Union of col_p over all depths.
    pub fn col(&self) -> BTreeSet<Partition> {
        self.collapses_by_depth().into_iter().flatten().collect()
    }

    /// Whether `other` is a collapse of `self`, i.e. reachable from `self`
    /// by a sequence of merges. Decided by grouping: the parts of `self`
    /// must split into groups summing to the parts of `other`. This is an
    /// independent route from `collapses_by_depth`.
    pub fn is_collapse_of(&self, other: &Partition) -> Result<bool> {
        if self.k() != other.k() {
            return Err(Error::MismatchedSums {
                left: self.k(),
                right: other.k(),
            });
        }
        if other.r() > self.r() {
            return Ok(false);
        }
        let mut remaining: Vec<u32> = other.parts.clone();
        Ok(group_parts(&self.parts, &mut remaining))
    }

    /// Parses "1,1,2" (any order) into the canonical partition. The empty
    /// string parses to the empty partition.
    pub fn parse(s: &str) -> Result<Partition> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Invalid(format!("bad partition part '{t}'")))
            })
            .collect::<Result<Vec<u32>>>()?;
        Partition::new(parts)
    }
}

/// Backtracking assignment of `parts` (non-increasing) to bins with target
/// sums `bins`; consumes bins exactly.
fn group_parts(parts: &[u32], bins: &mut Vec<u32>) -> bool {
    let Some((&first, rest)) = parts.split_first() else {
        return bins.iter().all(|&b| b == 0);
    };
    let mut seen = BTreeSet::new();
    for i in 0..bins.len() {
        if bins[i] >= first && seen.insert(bins[i]) {
            bins[i] -= first;
            if group_parts(rest, bins) {
                bins[i] += first;
                return true;
            }
            bins[i] += first;
        }
    }
    false
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let strs: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", strs.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Partition::parse(s)
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<u32>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Vec<u32> {
        p.parts
    }
}

/// All partitions of `k` (canonical order).
pub fn partitions_of(k: u32) -> Vec<Partition> {
    fn rec(remaining: u32, max: u32, acc: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition { parts: acc.clone() });
            return;
        }
        for next in (1..=remaining.min(max)).rev() {
            acc.push(next);
            rec(remaining - next, next, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    rec(k, k.max(1), &mut Vec::new(), &mut out);
    out
}

/// Result of pairing col_p(1^j λ) with col_p(1^{j+1} λ) via λ′ ↦ 1 λ′.
#[derive(Clone, Debug)]
pub struct StabCollapseCheck {
    /// (λ′, 1 λ′) for each λ′ ∈ col_p(1^j λ).
    pub pairs: Vec<(Partition, Partition)>,
    /// Source and target depth sets.
    pub source: BTreeSet<Partition>,
    pub target: BTreeSet<Partition>,
    /// Whether the pairing is a bijection onto the target set.
    pub bijective: bool,
}

/// Pairs col_p(1^j λ) with col_p(1^{j+1} λ) by prepending a 1. The map is
/// always injective and lands in the target; bijectivity is reported as
/// observed. It holds exactly when the target level has no one-free
/// partition, which is guaranteed for j ≥ 2p; a single merge can consume
/// two ones, so j > p alone does not suffice once p ≥ 2.
pub fn stab_collapse_check(lambda: &Partition, j: usize, p: usize) -> StabCollapseCheck {
    let depth_set = |part: &Partition| -> BTreeSet<Partition> {
        part.collapses_by_depth().into_iter().nth(p).unwrap_or_default()
    };
    let source = depth_set(&lambda.add_ones(j));
    let target = depth_set(&lambda.add_ones(j + 1));
    let pairs: Vec<(Partition, Partition)> = source
        .iter()
        .map(|lp| (lp.clone(), lp.add_ones(1)))
        .collect();
    debug_assert!(pairs.iter().all(|(_, img)| target.contains(img)));
    let image: BTreeSet<&Partition> = pairs.iter().map(|(_, img)| img).collect();
    let bijective = image.len() == target.len();
    StabCollapseCheck {
        pairs,
        source,
        target,
        bijective,
    }
}

/// A set partition of {1, …, m}: disjoint non-empty blocks covering
/// everything. Blocks are kept in canonical order: by decreasing size,
/// then by increasing smallest element; each block is sorted ascending.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct SetPartition {
    blocks: Vec<Vec<u32>>,
}

impl SetPartition {
    pub fn new(mut blocks: Vec<Vec<u32>>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for b in &mut blocks {
            if b.is_empty() {
                return Err(Error::Invalid("empty block in set partition".into()));
            }
            b.sort_unstable();
            for &x in b.iter() {
                if x == 0 || !seen.insert(x) {
                    return Err(Error::Invalid(format!(
                        "element {x} repeated or zero in set partition"
                    )));
                }
            }
        }
        let m = seen.len() as u32;
        if seen.iter().max().copied().unwrap_or(0) != m {
            return Err(Error::Invalid(
                "set partition blocks must cover {1..m} exactly".into(),
            ));
        }
        blocks.sort_by(|a, b| b.len().cmp(&a.len()).then(a[0].cmp(&b[0])));
        Ok(SetPartition { blocks })
    }

    pub fn blocks(&self) -> &[Vec<u32>] {
        &self.blocks
    }

    pub fn ground_size(&self) -> u32 {
        self.blocks.iter().map(|b| b.len() as u32).sum()
    }

    /// The integer partition of block sizes.
    pub fn shape(&self) -> Partition {
        Partition::new(self.blocks.iter().map(|b| b.len() as u32).collect())
            .expect("block sizes are positive")
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.blocks {
            let strs: Vec<String> = b.iter().map(|x| x.to_string()).collect();
            write!(f, "{{{}}}", strs.join(","))?;
        }
        Ok(())
    }
}

/// All set partitions of {1,…,k} with block-size shape `shape`, enumerated
/// via restricted-growth strings and filtered. Guarded by `bound` on k
/// (the full Bell-number sweep is the cost driver).
pub fn ord_set_partitions(shape: &Partition, bound: u64) -> Result<Vec<SetPartition>> {
    let k = shape.k();
    if k > bound {
        return Err(Error::ResourceBound {
            what: "set-partition ground size k",
            requested: k,
            limit: bound,
        });
    }
    let k = k as usize;
    let mut out = Vec::new();
    if k == 0 {
        if shape.is_empty() {
            out.push(SetPartition { blocks: Vec::new() });
        }
        return Ok(out);
    }
    // Restricted-growth strings: rgs[0] = 0, rgs[i] ≤ 1 + max(rgs[..i]).
    let mut rgs = vec![0usize; k];
    loop {
        let nblocks = rgs.iter().copied().max().unwrap() + 1;
        let mut blocks: Vec<Vec<u32>> = vec![Vec::new(); nblocks];
        for (i, &b) in rgs.iter().enumerate() {
            blocks[b].push(i as u32 + 1);
        }
        let sp = SetPartition::new(blocks).expect("rgs yields a valid set partition");
        if &sp.shape() == shape {
            out.push(sp);
        }
        // Advance to the next restricted-growth string.
        let mut i = k;
        loop {
            if i == 1 {
                out.sort();
                return Ok(out);
            }
            i -= 1;
            let max_prefix = rgs[..i].iter().copied().max().unwrap();
            if rgs[i] <= max_prefix {
                rgs[i] += 1;
                for x in rgs[i + 1..].iter_mut() {
                    *x = 0;
                }
                break;
            }
        }
    }
}

/// Closed-form count k! / ∏_l ( (l!)^{n(l)} · n(l)! ).
pub fn ord_set_partition_count(shape: &Partition) -> BigUint {
    let mut numer = factorial(shape.k());
    for (l, n) in shape.multiplicities() {
        let lf = factorial(l as u64);
        for _ in 0..n {
            numer /= &lf;
        }
        numer /= factorial(n as u64);
    }
    numer
}

/// The shape ∏_l S_l ≀ S_{n(l)} of a set-partition stabilizer, with its
/// exact order ∏_l (l!)^{n(l)} · n(l)!.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StabilizerShape {
    pub factors: BTreeMap<u32, u32>,
    pub order: BigUint,
}

pub fn stabilizer_shape(sp: &SetPartition) -> StabilizerShape {
    let factors = sp.shape().multiplicities();
    let mut order = BigUint::from(1u32);
    for (&l, &n) in &factors {
        let lf = factorial(l as u64);
        for _ in 0..n {
            order *= &lf;
        }
        order *= factorial(n as u64);
    }
    StabilizerShape { factors, order }
}

pub fn factorial(n: u64) -> BigUint {
    (1..=n).map(BigUint::from).product()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        Partition::parse(s).unwrap()
    }

    #[test]
    fn canonical_order_and_stats() {
        let lam = p("1,3,2,1");
        assert_eq!(lam.parts(), &[3, 2, 1, 1]);
        assert_eq!(lam.k(), 7);
        assert_eq!(lam.r(), 4);
        assert_eq!(lam.ones(), 2);
        assert_eq!(lam.to_string(), "3,2,1,1");
        assert_eq!(lam.multiplicities(), BTreeMap::from([(1, 2), (2, 1), (3, 1)]));
    }

    #[test]
    fn add_ones_examples() {
        assert_eq!(p("2,3").add_ones(2), p("1,1,2,3"));
        assert_eq!(p("2,3").add_ones(0), p("2,3"));
        let q = p("2").add_ones(2);
        assert_eq!((q.ones(), q.k(), q.r()), (2, 4, 3));
    }

    #[test]
    fn collapse_depths_of_one_two() {
        let levels = p("1,2").collapses_by_depth();
        assert_eq!(levels.len(), 2);
        assert_eq!(levels[0], BTreeSet::from([p("1,2")]));
        assert_eq!(levels[1], BTreeSet::from([p("3")]));
    }

    #[test]
    fn collapse_depths_of_one_one_two() {
        let levels = p("1,1,2").collapses_by_depth();
        assert_eq!(levels[0], BTreeSet::from([p("1,1,2")]));
        assert_eq!(levels[1], BTreeSet::from([p("1,3"), p("2,2")]));
        assert_eq!(levels[2], BTreeSet::from([p("4")]));
        assert_eq!(levels.len(), 3);
    }

    #[test]
    fn single_part_and_empty_have_trivial_poset() {
        assert_eq!(p("5").collapses_by_depth().len(), 1);
        let empty = Partition::empty();
        let levels = empty.collapses_by_depth();
        assert_eq!(levels.len(), 1);
        assert_eq!(levels[0], BTreeSet::from([Partition::empty()]));
    }

    #[test]
    fn collapse_membership() {
        // 1+2+2+4 is a collapse of 1+1+1+1+2+3.
        let fine = p("1,1,1,1,2,3");
        assert!(fine.is_collapse_of(&p("1,2,2,4")).unwrap());
        assert!(fine.is_collapse_of(&fine).unwrap());
        assert!(!p("2,2").is_collapse_of(&p("1,3")).unwrap());
        assert!(matches!(
            p("2,2").is_collapse_of(&p("3")),
            Err(Error::MismatchedSums { .. })
        ));
    }

    #[test]
    fn stab_collapse_examples() {
        // λ=2, j=2, p=1: {1+3, 2+2} → {1+1+3, 1+2+2}, bijective.
        let c = stab_collapse_check(&p("2"), 2, 1);
        assert_eq!(c.source, BTreeSet::from([p("1,3"), p("2,2")]));
        assert_eq!(c.target, BTreeSet::from([p("1,1,3"), p("1,2,2")]));
        assert!(c.bijective);
        // λ=2, j=1, p=1: {3} → {1+3}, missing 2+2: not bijective.
        let c = stab_collapse_check(&p("2"), 1, 1);
        assert!(!c.bijective);
        assert_eq!(c.target.len(), 2);
        // p=0 is always singleton → singleton.
        let c = stab_collapse_check(&p("3,2"), 1, 0);
        assert!(c.bijective);
    }

    #[test]
    fn ord_set_partitions_examples() {
        let got = ord_set_partitions(&p("1,2"), DEFAULT_SET_PARTITION_BOUND).unwrap();
        let strs: BTreeSet<String> = got.iter().map(|sp| sp.to_string()).collect();
        assert_eq!(
            strs,
            BTreeSet::from([
                "{2,3}{1}".to_string(),
                "{1,3}{2}".to_string(),
                "{1,2}{3}".to_string()
            ])
        );
        assert_eq!(ord_set_partitions(&p("1,1"), 12).unwrap().len(), 1);
        assert_eq!(ord_set_partitions(&p("2,2"), 12).unwrap().len(), 3);
        assert!(matches!(
            ord_set_partitions(&p("7,6"), 12),
            Err(Error::ResourceBound { .. })
        ));
    }

    #[test]
    fn count_matches_enumeration_small() {
        for k in 0..=7u32 {
            for shape in partitions_of(k) {
                let count = ord_set_partition_count(&shape);
                let listed = ord_set_partitions(&shape, 12).unwrap().len();
                assert_eq!(count, BigUint::from(listed), "shape {shape}");
            }
        }
    }

    #[test]
    fn stabilizer_orders() {
        let sp = ord_set_partitions(&p("2,2"), 12).unwrap().remove(0);
        let st = stabilizer_shape(&sp);
        assert_eq!(st.factors, BTreeMap::from([(2, 2)]));
        assert_eq!(st.order, BigUint::from(8u32));
        let sp = ord_set_partitions(&p("1,1,1"), 12).unwrap().remove(0);
        assert_eq!(stabilizer_shape(&sp).order, BigUint::from(6u32));
        let sp = ord_set_partitions(&p("1,2"), 12).unwrap().remove(0);
        assert_eq!(stabilizer_shape(&sp).order, BigUint::from(2u32));
    }

    #[test]
    fn partitions_of_counts() {
        let counts: Vec<usize> = (0..=10).map(|k| partitions_of(k).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
    }
}
