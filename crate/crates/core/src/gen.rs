//! Deterministic tree generators for the test corpus.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;

use crate::error::{Error, Result};
use crate::tree::OrderedTree;

/// Generator profile. `Skewed(p)` targets a fraction `p` of unary nodes with
/// the remainder split between leaves and binary nodes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Profile {
    UniformRandom,
    Path,
    Star,
    FullBinary,
    Skewed(f64),
}

impl Profile {
    pub fn parse(s: &str) -> Result<Profile> {
        match s {
            "uniform-random" | "uniform" => Ok(Profile::UniformRandom),
            "path" => Ok(Profile::Path),
            "star" => Ok(Profile::Star),
            "full-binary" => Ok(Profile::FullBinary),
            _ => {
                if let Some(rest) = s.strip_prefix("skewed(").and_then(|r| r.strip_suffix(')')) {
                    let p: f64 = rest
                        .parse()
                        .map_err(|_| Error::InfeasibleProfile(format!("bad skew fraction {rest:?}")))?;
                    if !(0.0..=1.0).contains(&p) {
                        return Err(Error::InfeasibleProfile(format!("skew fraction {p} not in [0,1]")));
                    }
                    Ok(Profile::Skewed(p))
                } else {
                    Err(Error::InfeasibleProfile(format!("unknown profile {s:?}")))
                }
            }
        }
    }
}

/// Generate a tree with `n` nodes, deterministic in `seed`.
pub fn random_tree(n: usize, profile: Profile, seed: u64) -> Result<OrderedTree> {
    if n == 0 {
        return Err(Error::InfeasibleProfile("n must be >= 1".into()));
    }
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    match profile {
        Profile::Path => {
            let mut degs = vec![1u32; n];
            degs[n - 1] = 0;
            OrderedTree::from_preorder_degrees(&degs)
        }
        Profile::Star => {
            let mut degs = vec![0u32; n];
            degs[0] = n as u32 - 1;
            OrderedTree::from_preorder_degrees(&degs)
        }
        Profile::FullBinary => {
            if n % 2 == 0 {
                return Err(Error::InfeasibleProfile(format!(
                    "full-binary needs an odd node count, got {n}"
                )));
            }
            // grow by repeatedly expanding a random leaf into an internal node
            let internal = (n - 1) / 2;
            let mut degs = vec![0u32; 1];
            let mut leaves: Vec<usize> = vec![0];
            // we build a degree *assignment* over an implicit shape by tracking
            // leaf slots; the preorder sequence is rebuilt at the end
            let mut tree_children: Vec<Vec<usize>> = vec![Vec::new()];
            for _ in 0..internal {
                let pick = rng.gen_range(0..leaves.len());
                let leaf = leaves.swap_remove(pick);
                degs[leaf] = 2;
                for _ in 0..2 {
                    let id = degs.len();
                    degs.push(0);
                    tree_children.push(Vec::new());
                    tree_children[leaf].push(id);
                    leaves.push(id);
                }
            }
            // emit preorder degrees
            let mut out = Vec::with_capacity(n);
            let mut stack = vec![0usize];
            while let Some(v) = stack.pop() {
                out.push(degs[v]);
                for &c in tree_children[v].iter().rev() {
                    stack.push(c);
                }
            }
            OrderedTree::from_preorder_degrees(&out)
        }
        Profile::UniformRandom => {
            if n == 1 {
                return OrderedTree::from_bp("()");
            }
            // uniform Dyck word of semilength n-1 via the cycle lemma, then
            // wrap it as the children forest of the root
            let m = n - 1;
            let mut steps: Vec<i8> = Vec::with_capacity(2 * m + 1);
            steps.extend(std::iter::repeat(1i8).take(m + 1));
            steps.extend(std::iter::repeat(-1i8).take(m));
            steps.shuffle(&mut rng);
            // unique rotation whose proper prefixes are all positive: start
            // just after the last position where the prefix sum is minimal
            // (the empty prefix counts)
            let mut sum = 0i64;
            let mut min = 0i64;
            let mut start = 0usize;
            for (i, &s) in steps.iter().enumerate() {
                sum += s as i64;
                if sum <= min {
                    min = sum;
                    start = (i + 1) % steps.len();
                }
            }
            let mut bp = String::with_capacity(2 * n);
            bp.push('(');
            // skip the leading step of the rotated dominating sequence
            for k in 1..steps.len() {
                let s = steps[(start + k) % steps.len()];
                bp.push(if s == 1 { '(' } else { ')' });
            }
            bp.push(')');
            OrderedTree::from_bp(&bp)
        }
        Profile::Skewed(p) => {
            let degs = skewed_degree_multiset(n, p)?;
            degree_multiset_to_tree(degs, &mut rng)
        }
    }
}

/// Target degree multiset: ~p*n unary nodes, the rest leaves and binary
/// nodes balanced so degrees sum to n-1.
fn skewed_degree_multiset(n: usize, p: f64) -> Result<Vec<u32>> {
    if n == 1 {
        return Ok(vec![0]);
    }
    let mut unary = ((n as f64) * p).round() as usize;
    if unary > n - 1 {
        unary = n - 1;
    }
    // remaining degree budget after unaries
    let mut rest = n - unary;
    let mut budget = (n - 1) - unary;
    // leaves + binaries: x binaries, rest - x leaves, 2x = budget
    if budget % 2 == 1 {
        if unary > 0 {
            unary -= 1;
            rest += 1;
            budget += 1;
        } else {
            // no unaries to borrow from: shift one unit into a ternary
            // by making n even-budget via one extra unary
            unary += 1;
            rest -= 1;
            budget -= 1;
        }
    }
    let binaries = budget / 2;
    if binaries > rest {
        return Err(Error::InfeasibleProfile(format!(
            "skew fraction leaves no room for leaves at n = {n}"
        )));
    }
    let leaves = rest - binaries;
    let mut degs = Vec::with_capacity(n);
    degs.extend(std::iter::repeat(1u32).take(unary));
    degs.extend(std::iter::repeat(2u32).take(binaries));
    degs.extend(std::iter::repeat(0u32).take(leaves));
    debug_assert_eq!(degs.len(), n);
    debug_assert_eq!(degs.iter().map(|&d| d as usize).sum::<usize>(), n - 1);
    Ok(degs)
}

/// Shuffle a degree multiset summing to n-1 and rotate it into the unique
/// valid preorder degree sequence (cycle lemma on the Lukasiewicz path).
fn degree_multiset_to_tree(mut degs: Vec<u32>, rng: &mut ChaCha12Rng) -> Result<OrderedTree> {
    degs.shuffle(rng);
    let mut sum = 0i64;
    let mut min = i64::MAX;
    let mut min_pos = 0usize;
    for (i, &d) in degs.iter().enumerate() {
        sum += d as i64 - 1;
        if sum < min {
            min = sum;
            min_pos = i;
        }
    }
    let start = (min_pos + 1) % degs.len();
    let rotated: Vec<u32> = (0..degs.len()).map(|k| degs[(start + k) % degs.len()]).collect();
    OrderedTree::from_preorder_degrees(&rotated)
}
