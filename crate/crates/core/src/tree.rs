//! Explicit ordered-tree representation.
//!
//! Nodes are identified by their 1-based preorder rank, so `preorder_rank`
//! and `preorder_select` are the identity on valid ids. Children are stored
//! in a flat CSR layout; the structure is immutable after construction.

use crate::error::{Error, Result};

/// 1-based preorder rank of a node. 0 is used internally as "none".
pub type NodeId = u32;

const NONE: NodeId = 0;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderedTree {
    /// parent[x] for x in 1..=n; parent[root] = 0. Slot 0 unused.
    parent: Vec<NodeId>,
    /// CSR offsets into `children`, indexed by node id; slot 0 unused.
    child_start: Vec<u32>,
    children: Vec<NodeId>,
}

impl OrderedTree {
    /// Parse a balanced-parentheses string: '(' opens a node in preorder,
    /// ')' closes it. The whole string must describe exactly one tree.
    pub fn from_bp(text: &str) -> Result<Self> {
        let trimmed = text.trim_end_matches(['\n', '\r']);
        if trimmed.is_empty() {
            return Err(Error::UnbalancedInput(0));
        }
        let mut parent: Vec<NodeId> = vec![NONE];
        let mut stack: Vec<NodeId> = Vec::new();
        let mut roots = 0usize;
        for (pos, ch) in trimmed.bytes().enumerate() {
            match ch {
                b'(' => {
                    let id = parent.len() as NodeId;
                    let par = stack.last().copied().unwrap_or(NONE);
                    if par == NONE {
                        roots += 1;
                        if roots > 1 {
                            return Err(Error::MultipleRoots);
                        }
                    }
                    parent.push(par);
                    stack.push(id);
                }
                b')' => {
                    if stack.pop().is_none() {
                        return Err(Error::UnbalancedInput(pos));
                    }
                }
                _ => return Err(Error::UnbalancedInput(pos)),
            }
        }
        if !stack.is_empty() {
            return Err(Error::UnbalancedInput(trimmed.len()));
        }
        Ok(Self::from_parents(parent))
    }

    /// Build from a preorder degree sequence. Valid iff it is a Lukasiewicz
    /// path: prefix sums of (d_i - 1) stay >= 0 before the end and the total
    /// is exactly -1.
    pub fn from_preorder_degrees(degrees: &[u32]) -> Result<Self> {
        if degrees.is_empty() {
            return Err(Error::UnbalancedInput(0));
        }
        let n = degrees.len();
        let mut parent: Vec<NodeId> = vec![NONE; n + 1];
        // stack of (node, remaining child slots)
        let mut stack: Vec<(NodeId, u32)> = Vec::new();
        for (i, &d) in degrees.iter().enumerate() {
            let id = (i + 1) as NodeId;
            match stack.last_mut() {
                None => {
                    if i != 0 {
                        return Err(Error::MultipleRoots);
                    }
                }
                Some((par, slots)) => {
                    parent[id as usize] = *par;
                    *slots -= 1;
                    if *slots == 0 {
                        stack.pop();
                    }
                }
            }
            if d > 0 {
                stack.push((id, d));
            }
        }
        if !stack.is_empty() {
            return Err(Error::UnbalancedInput(n));
        }
        Ok(Self::from_parents(parent))
    }

    /// `parent` indexed 1..=n with parent[root] = 0, listed in preorder so
    /// children end up ordered by id.
    fn from_parents(parent: Vec<NodeId>) -> Self {
        let n = parent.len() - 1;
        let mut counts = vec![0u32; n + 2];
        for x in 1..=n {
            let p = parent[x] as usize;
            if p != 0 {
                counts[p] += 1;
            }
        }
        let mut child_start = vec![0u32; n + 2];
        for x in 1..=n {
            child_start[x + 1] = child_start[x] + counts[x];
        }
        let mut cursor = child_start.clone();
        let mut children = vec![NONE; n.saturating_sub(1)];
        for x in 1..=n {
            let p = parent[x] as usize;
            if p != 0 {
                children[cursor[p] as usize] = x as NodeId;
                cursor[p] += 1;
            }
        }
        OrderedTree { parent, child_start, children }
    }

    /// Serialize to the balanced-parentheses string.
    pub fn to_bp(&self) -> String {
        let n = self.len();
        let mut out = String::with_capacity(2 * n);
        // preorder ids are contiguous per subtree, so a counter-based walk works
        let sizes = self.subtree_sizes();
        let mut close_at: Vec<u32> = Vec::new();
        for x in 1..=n as NodeId {
            out.push('(');
            let end = x + sizes[x as usize] - 1;
            close_at.push(end);
            while let Some(&e) = close_at.last() {
                if e == x {
                    out.push(')');
                    close_at.pop();
                } else {
                    break;
                }
            }
        }
        out
    }

    pub fn len(&self) -> usize {
        self.parent.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn root(&self) -> NodeId {
        1
    }

    pub fn is_valid_node(&self, x: NodeId) -> bool {
        x >= 1 && (x as usize) <= self.len()
    }

    pub fn parent(&self, x: NodeId) -> Option<NodeId> {
        let p = self.parent[x as usize];
        (p != NONE).then_some(p)
    }

    pub fn children(&self, x: NodeId) -> &[NodeId] {
        let a = self.child_start[x as usize] as usize;
        let b = self.child_start[x as usize + 1] as usize;
        &self.children[a..b]
    }

    pub fn degree(&self, x: NodeId) -> u32 {
        self.child_start[x as usize + 1] - self.child_start[x as usize]
    }

    /// Preorder degree sequence, index 0 = root.
    pub fn preorder_degrees(&self) -> Vec<u32> {
        (1..=self.len() as NodeId).map(|x| self.degree(x)).collect()
    }

    /// subtree_sizes()[x] = |subtree(x)|, slot 0 unused.
    pub fn subtree_sizes(&self) -> Vec<u32> {
        let n = self.len();
        let mut sizes = vec![1u32; n + 1];
        sizes[0] = 0;
        for x in (2..=n).rev() {
            let p = self.parent[x] as usize;
            sizes[p] += sizes[x];
        }
        sizes
    }

    /// depths()[x] = edge distance from the root, slot 0 unused.
    pub fn depths(&self) -> Vec<u32> {
        let n = self.len();
        let mut depths = vec![0u32; n + 1];
        for x in 2..=n {
            depths[x] = depths[self.parent[x] as usize] + 1;
        }
        depths
    }

    pub fn check_node(&self, x: NodeId) -> Result<NodeId> {
        if self.is_valid_node(x) {
            Ok(x)
        } else {
            Err(Error::NoSuchNode)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    // 6-node tree from the worked examples: root a; children b, c, d;
    // c has children e, f; preorder a,b,c,e,f,d.
    pub(crate) const T1: &str = "(()(()())())";

    #[test]
    fn parse_single_node() {
        let t = OrderedTree::from_bp("()").unwrap();
        assert_eq!(t.len(), 1);
        assert_eq!(t.to_bp(), "()");
    }

    #[test]
    fn parse_t1_structure() {
        let t = OrderedTree::from_bp(T1).unwrap();
        assert_eq!(t.len(), 6);
        // a=1, b=2, c=3, e=4, f=5, d=6
        assert_eq!(t.children(1), &[2, 3, 6]);
        assert_eq!(t.children(3), &[4, 5]);
        assert_eq!(t.parent(4), Some(3));
        assert_eq!(t.parent(1), None);
        assert_eq!(t.to_bp(), T1);
    }

    #[test]
    fn parse_path3() {
        let t = OrderedTree::from_bp("((()))").unwrap();
        assert_eq!(t.len(), 3);
        assert_eq!(t.to_bp(), "((()))");
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(OrderedTree::from_bp("(()"), Err(Error::UnbalancedInput(_))));
        assert!(matches!(OrderedTree::from_bp("()()"), Err(Error::MultipleRoots)));
        assert!(matches!(OrderedTree::from_bp(""), Err(Error::UnbalancedInput(0))));
        assert!(matches!(OrderedTree::from_bp("(a)"), Err(Error::UnbalancedInput(1))));
        assert!(matches!(OrderedTree::from_bp("))"), Err(Error::UnbalancedInput(0))));
    }

    #[test]
    fn degree_sequence_round_trip() {
        let t = OrderedTree::from_bp(T1).unwrap();
        let degs = t.preorder_degrees();
        assert_eq!(degs, vec![3, 0, 2, 0, 0, 0]);
        let t2 = OrderedTree::from_preorder_degrees(&degs).unwrap();
        assert_eq!(t, t2);
        assert!(OrderedTree::from_preorder_degrees(&[2, 0]).is_err());
        assert!(OrderedTree::from_preorder_degrees(&[1, 0, 0]).is_err());
    }

    #[test]
    fn subtree_sizes_and_depths() {
        let t = OrderedTree::from_bp(T1).unwrap();
        let sz = t.subtree_sizes();
        assert_eq!(&sz[1..], &[6, 1, 3, 1, 1, 1]);
        let d = t.depths();
        assert_eq!(&d[1..], &[0, 1, 1, 2, 2, 1]);
    }

    #[test]
    fn preorder_consecutive_subtrees() {
        let t = OrderedTree::from_bp("(()(()())(()))").unwrap();
        let sz = t.subtree_sizes();
        for x in 1..=t.len() as NodeId {
            // every child interval is adjacent to the previous one
            let mut next = x + 1;
            for &c in t.children(x) {
                assert_eq!(c, next);
                next += sz[c as usize];
            }
        }
    }
}
