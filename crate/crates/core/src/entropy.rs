//! Degree distribution, tree degree entropy, and the fixed-point rounded
//! cost model.
//!
//! All rounded costs are exact integer numerators over the denominator L.
//! The ceiling of L*log2(n/n_i) is computed by integer comparison
//! (2^k * n_i^L vs n^L), never through floating point, so encodings are
//! bit-reproducible across platforms.

use std::collections::BTreeMap;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::tree::OrderedTree;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeDistribution {
    n: u64,
    counts: BTreeMap<u32, u64>,
}

impl DegreeDistribution {
    pub fn from_tree(tree: &OrderedTree) -> Self {
        let mut counts = BTreeMap::new();
        for x in 1..=tree.len() as u32 {
            *counts.entry(tree.degree(x)).or_insert(0u64) += 1;
        }
        DegreeDistribution { n: tree.len() as u64, counts }
    }

    pub fn from_counts(counts: BTreeMap<u32, u64>) -> Result<Self> {
        let n: u64 = counts.values().sum();
        let edges: u64 = counts.iter().map(|(&d, &c)| d as u64 * c).sum();
        if n == 0 || edges != n - 1 {
            return Err(Error::Format("degree counts do not describe a tree".into()));
        }
        Ok(DegreeDistribution { n, counts })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn count(&self, degree: u32) -> u64 {
        self.counts.get(&degree).copied().unwrap_or(0)
    }

    /// Degrees with n_i > 0, ascending.
    pub fn sigma(&self) -> impl Iterator<Item = u32> + '_ {
        self.counts.keys().copied()
    }

    pub fn sigma_len(&self) -> usize {
        self.counts.len()
    }

    pub fn contains(&self, degree: u32) -> bool {
        self.counts.contains_key(&degree)
    }

    /// Tree degree entropy H(T) in bits per node.
    pub fn entropy_bits_per_node(&self) -> f64 {
        let n = self.n as f64;
        let mut total = 0.0;
        for &c in self.counts.values() {
            total += c as f64 * (n / c as f64).log2();
        }
        total / n
    }

    /// Dump format used by the CLI: one "degree count" line per degree.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for (&d, &c) in &self.counts {
            out.push_str(&format!("{d} {c}\n"));
        }
        out
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, u64)> + '_ {
        self.counts.iter().map(|(&d, &c)| (d, c))
    }
}

/// Rounded-cost model: r_i = ceil(L*log2(n/n_i))/L when n_i > 0, and
/// ceil(L*log2 n)/L when n_i = 0. Costs are stored as integer numerators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EntropyModel {
    dist: DegreeDistribution,
    l: u32,
    costs: BTreeMap<u32, u64>,
    default_cost: u64,
}

impl EntropyModel {
    pub fn new(dist: DegreeDistribution, l: u32) -> Self {
        assert!(l >= 1, "L must be positive");
        let n = dist.n;
        let mut costs = BTreeMap::new();
        for (d, c) in dist.iter() {
            costs.insert(d, ceil_l_log2_ratio(l, n, c));
        }
        let default_cost = ceil_l_log2_ratio(l, n, 1);
        EntropyModel { dist, l, costs, default_cost }
    }

    pub fn dist(&self) -> &DegreeDistribution {
        &self.dist
    }

    pub fn l(&self) -> u32 {
        self.l
    }

    pub fn n(&self) -> u64 {
        self.dist.n
    }

    /// Cost numerator for a degree; value in bits is numerator / L.
    pub fn cost(&self, degree: u32) -> u64 {
        self.costs.get(&degree).copied().unwrap_or(self.default_cost)
    }

    pub fn in_sigma(&self, degree: u32) -> bool {
        self.dist.contains(degree)
    }

    /// Numerator of H*(S) summed over a preorder degree sequence; the first
    /// entry is the root (any degree allowed), the rest must be in Sigma.
    pub fn hstar_of_degrees(&self, degrees: &[u32]) -> Result<u64> {
        let mut total = 0u64;
        for (i, &d) in degrees.iter().enumerate() {
            if i > 0 && !self.in_sigma(d) {
                return Err(Error::DegreeOutsideSigma(d));
            }
            total += self.cost(d);
        }
        Ok(total)
    }

    pub fn bits(&self, numerator: u64) -> f64 {
        numerator as f64 / self.l as f64
    }
}

/// Exact ceil(l * log2(num/den)) for num >= den >= 1, i.e. the smallest k
/// with 2^k * den^l >= num^l. A float estimate is corrected by exact
/// big-integer comparison.
pub fn ceil_l_log2_ratio(l: u32, num: u64, den: u64) -> u64 {
    assert!(num >= den && den >= 1);
    if num == den {
        return 0;
    }
    let estimate = (l as f64) * ((num as f64).log2() - (den as f64).log2());
    let mut k = estimate.round() as i64;
    if k < 0 {
        k = 0;
    }
    let num_pow = BigUint::from(num).pow(l);
    let den_pow = BigUint::from(den).pow(l);
    // predicate: 2^k * den^l >= num^l
    let ge = |k: i64| -> bool {
        if k < 0 {
            return false;
        }
        (&den_pow << (k as u64)) >= num_pow
    };
    while ge(k - 1) {
        k -= 1;
    }
    while !ge(k) {
        k += 1;
    }
    k as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn entropy_examples() {
        // single node
        let t = OrderedTree::from_bp("()").unwrap();
        let d = DegreeDistribution::from_tree(&t);
        assert_eq!(d.entropy_bits_per_node(), 0.0);

        // path of 4: n_0 = 1, n_1 = 3
        let t = OrderedTree::from_bp("(((())))").unwrap();
        let d = DegreeDistribution::from_tree(&t);
        let expected = (4f64.log2() + 3.0 * (4f64 / 3.0).log2()) / 4.0;
        assert!((d.entropy_bits_per_node() - expected).abs() < 1e-12);
        assert!((expected - 0.8113).abs() < 1e-4);

        // T1: n = 6, n_0 = 4, n_2 = 1, n_3 = 1
        let t = OrderedTree::from_bp("(()(()())())").unwrap();
        let d = DegreeDistribution::from_tree(&t);
        let expected = (4.0 * (6f64 / 4.0).log2() + 2.0 * 6f64.log2()) / 6.0;
        assert!((d.entropy_bits_per_node() - expected).abs() < 1e-12);
        assert!((expected - 1.2516).abs() < 1e-4);
    }

    #[test]
    fn distribution_invariants() {
        let t = OrderedTree::from_bp("(()(()())())").unwrap();
        let d = DegreeDistribution::from_tree(&t);
        let total: u64 = d.iter().map(|(_, c)| c).sum();
        let edges: u64 = d.iter().map(|(deg, c)| deg as u64 * c).sum();
        assert_eq!(total, 6);
        assert_eq!(edges, 5);
    }

    #[test]
    fn rounded_cost_examples() {
        // n = 4, n_i = 4, L = 8 -> 0
        assert_eq!(ceil_l_log2_ratio(8, 4, 4), 0);
        // n = 4, n_1 = 3, L = 8 -> ceil(8*log2(4/3)) = ceil(3.3219) = 4
        assert_eq!(ceil_l_log2_ratio(8, 4, 3), 4);
        // n = 4, n_i = 0, L = 8 -> ceil(8*2) = 16 (exact power of two)
        assert_eq!(ceil_l_log2_ratio(8, 4, 1), 16);
    }

    #[test]
    fn rounded_cost_bounds() {
        // r_i >= log2(n/n_i) and r_i < log2(n/n_i) + 1/L
        for (n, c, l) in [(100u64, 7u64, 16u32), (1000, 3, 64), (17, 16, 8), (1 << 20, 5, 128)] {
            let k = ceil_l_log2_ratio(l, n, c) as f64;
            let exact = (l as f64) * ((n as f64) / (c as f64)).log2();
            assert!(k >= exact - 1e-9, "ceil below exact for {n}/{c} L={l}");
            assert!(k < exact + 1.0 + 1e-9, "ceil too far above for {n}/{c} L={l}");
        }
    }

    #[test]
    fn exact_ceiling_at_powers_of_two() {
        // log2(8/2) = 2 exactly: numerator must be exactly 2L, not 2L+1
        for l in [2u32, 7, 64, 1000] {
            assert_eq!(ceil_l_log2_ratio(l, 8, 2), 2 * l as u64);
        }
    }

    #[test]
    fn hstar_of_piece() {
        // model with r_0 = 1.0, r_1 = 2.0, r_2 = 2.0 (L = 1, n = 4: n_0 = 2, n_1 = 1, n_2 = 1)
        let mut counts = BTreeMap::new();
        counts.insert(0u32, 2u64);
        counts.insert(1, 1);
        counts.insert(2, 1);
        let dist = DegreeDistribution::from_counts(counts).unwrap();
        let model = EntropyModel::new(dist, 1);
        assert_eq!(model.cost(0), 1);
        assert_eq!(model.cost(1), 2);
        assert_eq!(model.cost(2), 2);
        // S: root deg 2, child deg 1, grandchild leaf, second child leaf
        let degs = [2u32, 1, 0, 0];
        assert_eq!(model.hstar_of_degrees(&degs).unwrap(), 2 + 2 + 1 + 1);
        // single node of degree 0
        assert_eq!(model.hstar_of_degrees(&[0]).unwrap(), 1);
        // empty sequence
        assert_eq!(model.hstar_of_degrees(&[]).unwrap(), 0);
        // degree outside sigma at a non-root position
        assert!(matches!(model.hstar_of_degrees(&[1, 3]), Err(Error::DegreeOutsideSigma(3))));
        // ... but fine at the root
        assert!(model.hstar_of_degrees(&[3, 0, 0, 0]).is_ok());
    }
}
