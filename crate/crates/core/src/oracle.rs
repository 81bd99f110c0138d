//! Naive reference implementation of the navigation query suite.
//!
//! Every query is answered by direct traversal of the explicit tree. This is
//! the ground truth the compressed index is validated against; nothing here
//! is allowed to share code with the index's query path.

use crate::error::{Error, Result};
use crate::tree::{NodeId, OrderedTree};

/// A navigation query. Node arguments are 1-based preorder ranks,
/// `child_rank`/`child_select` are 1-based, `level_ancestor(x, 0) = x`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QueryKind {
    Depth(NodeId),
    Height(NodeId),
    NumDescendants(NodeId),
    Parent(NodeId),
    Lca(NodeId, NodeId),
    LevelAncestor(NodeId, u32),
    Degree(NodeId),
    ChildRank(NodeId),
    ChildSelect(NodeId, u32),
    PreorderRank(NodeId),
    PreorderSelect(u32),
}

impl QueryKind {
    pub fn name(&self) -> &'static str {
        match self {
            QueryKind::Depth(_) => "depth",
            QueryKind::Height(_) => "height",
            QueryKind::NumDescendants(_) => "num_descendants",
            QueryKind::Parent(_) => "parent",
            QueryKind::Lca(..) => "lca",
            QueryKind::LevelAncestor(..) => "level_ancestor",
            QueryKind::Degree(_) => "degree",
            QueryKind::ChildRank(_) => "child_rank",
            QueryKind::ChildSelect(..) => "child_select",
            QueryKind::PreorderRank(_) => "preorder_rank",
            QueryKind::PreorderSelect(_) => "preorder_select",
        }
    }
}

fn depth_of(tree: &OrderedTree, mut x: NodeId) -> u64 {
    let mut d = 0;
    while let Some(p) = tree.parent(x) {
        d += 1;
        x = p;
    }
    d
}

fn height_of(tree: &OrderedTree, x: NodeId) -> u64 {
    // iterative post-order over the subtree
    let mut best = 0u64;
    let mut stack = vec![(x, 0u64)];
    while let Some((v, d)) = stack.pop() {
        best = best.max(d);
        for &c in tree.children(v) {
            stack.push((c, d + 1));
        }
    }
    best
}

fn subtree_size_of(tree: &OrderedTree, x: NodeId) -> u64 {
    let mut count = 0u64;
    let mut stack = vec![x];
    while let Some(v) = stack.pop() {
        count += 1;
        stack.extend_from_slice(tree.children(v));
    }
    count
}

fn ancestors_of(tree: &OrderedTree, mut x: NodeId) -> Vec<NodeId> {
    let mut chain = vec![x];
    while let Some(p) = tree.parent(x) {
        chain.push(p);
        x = p;
    }
    chain
}

/// Answer `q` on `tree` by direct traversal. Node-valued answers are the
/// node id as u64; counts are plain integers.
pub fn oracle_query(tree: &OrderedTree, q: QueryKind) -> Result<u64> {
    match q {
        QueryKind::Depth(x) => Ok(depth_of(tree, tree.check_node(x)?)),
        QueryKind::Height(x) => Ok(height_of(tree, tree.check_node(x)?)),
        QueryKind::NumDescendants(x) => Ok(subtree_size_of(tree, tree.check_node(x)?)),
        QueryKind::Parent(x) => {
            tree.check_node(x)?;
            tree.parent(x).map(|p| p as u64).ok_or(Error::NoSuchNode)
        }
        QueryKind::Lca(x, y) => {
            tree.check_node(x)?;
            tree.check_node(y)?;
            // deepest common node of the two ancestor chains
            let ax = ancestors_of(tree, x);
            let ay = ancestors_of(tree, y);
            let set: std::collections::HashSet<NodeId> = ay.into_iter().collect();
            for a in ax {
                if set.contains(&a) {
                    return Ok(a as u64);
                }
            }
            unreachable!("trees have a single root")
        }
        QueryKind::LevelAncestor(x, i) => {
            let mut v = tree.check_node(x)?;
            for _ in 0..i {
                v = tree.parent(v).ok_or(Error::NoSuchNode)?;
            }
            Ok(v as u64)
        }
        QueryKind::Degree(x) => Ok(tree.degree(tree.check_node(x)?) as u64),
        QueryKind::ChildRank(x) => {
            tree.check_node(x)?;
            let p = tree.parent(x).ok_or(Error::NoSuchNode)?;
            let rank = tree.children(p).iter().position(|&c| c == x).unwrap();
            Ok(rank as u64 + 1)
        }
        QueryKind::ChildSelect(x, i) => {
            tree.check_node(x)?;
            if i == 0 {
                return Err(Error::NoSuchNode);
            }
            tree.children(x)
                .get(i as usize - 1)
                .map(|&c| c as u64)
                .ok_or(Error::NoSuchNode)
        }
        QueryKind::PreorderRank(x) => Ok(tree.check_node(x)? as u64),
        QueryKind::PreorderSelect(i) => {
            if i >= 1 && i as usize <= tree.len() {
                Ok(i as u64)
            } else {
                Err(Error::NoSuchNode)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t1() -> OrderedTree {
        OrderedTree::from_bp("(()(()())())").unwrap()
    }

    // ids in T1: a=1 b=2 c=3 e=4 f=5 d=6

    #[test]
    fn t1_worked_examples() {
        let t = t1();
        assert_eq!(oracle_query(&t, QueryKind::Depth(4)).unwrap(), 2);
        assert_eq!(oracle_query(&t, QueryKind::Lca(4, 5)).unwrap(), 3);
        assert_eq!(oracle_query(&t, QueryKind::Parent(5)).unwrap(), 3);
        assert_eq!(oracle_query(&t, QueryKind::ChildRank(6)).unwrap(), 3);
        assert_eq!(oracle_query(&t, QueryKind::Degree(3)).unwrap(), 2);
        assert_eq!(oracle_query(&t, QueryKind::NumDescendants(1)).unwrap(), 6);
        assert_eq!(oracle_query(&t, QueryKind::Height(1)).unwrap(), 2);
    }

    #[test]
    fn identity_cases() {
        let t = t1();
        for x in 1..=6 {
            assert_eq!(oracle_query(&t, QueryKind::LevelAncestor(x, 0)).unwrap(), x as u64);
            assert_eq!(oracle_query(&t, QueryKind::Lca(x, x)).unwrap(), x as u64);
        }
    }

    #[test]
    fn error_cases() {
        let t = t1();
        assert!(matches!(oracle_query(&t, QueryKind::Parent(1)), Err(Error::NoSuchNode)));
        assert!(matches!(oracle_query(&t, QueryKind::ChildSelect(3, 3)), Err(Error::NoSuchNode)));
        assert!(matches!(oracle_query(&t, QueryKind::LevelAncestor(4, 3)), Err(Error::NoSuchNode)));
        assert!(matches!(oracle_query(&t, QueryKind::PreorderSelect(7)), Err(Error::NoSuchNode)));
        assert!(matches!(oracle_query(&t, QueryKind::ChildRank(1)), Err(Error::NoSuchNode)));
    }
}
