//! Tree covering: partition of a tree's edges into subtree pieces of size
//! [2, 2L+1], with at most two boundary nodes each, plus the component tree
//! over the pieces and a mechanical checker for all cover properties.

use crate::error::{Error, Result};
use crate::tree::{NodeId, OrderedTree};

/// Heaviness of a node for a given size threshold L.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HeavyLabel {
    Light,
    /// heavy with at most one heavy child
    HeavyType1,
    /// heavy with at least two heavy children
    HeavyType2,
}

/// One piece of the cover. Non-root membership is represented by at most two
/// maximal preorder intervals; the root is stored separately and is not part
/// of the intervals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Piece {
    pub root: NodeId,
    pub boundary_leaf: Option<NodeId>,
    /// inclusive (start, end) preorder intervals, sorted, non-adjacent
    pub intervals: Vec<(NodeId, NodeId)>,
}

impl Piece {
    pub fn size(&self) -> u32 {
        1 + self.intervals.iter().map(|&(a, b)| b - a + 1).sum::<u32>()
    }

    pub fn contains_non_root(&self, x: NodeId) -> bool {
        self.intervals.iter().any(|&(a, b)| a <= x && x <= b)
    }

    pub fn contains(&self, x: NodeId) -> bool {
        x == self.root || self.contains_non_root(x)
    }

    /// All nodes in piece preorder: the root first, then the intervals.
    pub fn nodes(&self) -> impl Iterator<Item = NodeId> + '_ {
        std::iter::once(self.root).chain(self.intervals.iter().flat_map(|&(a, b)| a..=b))
    }

    fn first_non_root(&self) -> NodeId {
        self.intervals[0].0
    }
}

#[derive(Debug, Clone)]
pub struct Decomposition {
    pub pieces: Vec<Piece>,
    pub l: u32,
}

/// Component tree over the pieces: node 0 is the synthetic root, node i
/// (1-based) is piece i-1 in piece order. The weight of the edge above a
/// piece node equals the distance from the parent piece's root to the shared
/// node, so the weighted depth of a piece node is the depth of its root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentTree {
    parent: Vec<u32>,
    weight: Vec<u32>,
    child_start: Vec<u32>,
    children: Vec<u32>,
    weighted_depth: Vec<u64>,
}

impl ComponentTree {
    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    /// Parent of a component node; the synthetic root has none.
    pub fn parent(&self, v: u32) -> Option<u32> {
        (v != 0).then(|| self.parent[v as usize])
    }

    pub fn weight_above(&self, v: u32) -> u32 {
        self.weight[v as usize]
    }

    pub fn children(&self, v: u32) -> &[u32] {
        let a = self.child_start[v as usize] as usize;
        let b = self.child_start[v as usize + 1] as usize;
        &self.children[a..b]
    }

    pub fn weighted_depth(&self, v: u32) -> u64 {
        self.weighted_depth[v as usize]
    }

    /// Balanced-parentheses string, children in stored order.
    pub fn to_bp(&self) -> String {
        let mut out = String::with_capacity(2 * self.len());
        let mut stack: Vec<(u32, usize)> = vec![(0, 0)];
        out.push('(');
        while let Some(&mut (v, ref mut next)) = stack.last_mut() {
            let kids = self.children(v);
            if *next < kids.len() {
                let c = kids[*next];
                *next += 1;
                out.push('(');
                stack.push((c, 0));
            } else {
                out.push(')');
                stack.pop();
            }
        }
        out
    }

    /// Piece indices (0-based) in component-tree preorder.
    pub fn pieces_in_preorder(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.len() - 1);
        let mut stack: Vec<u32> = self.children(0).iter().rev().copied().collect();
        while let Some(v) = stack.pop() {
            out.push(v as usize - 1);
            for &c in self.children(v).iter().rev() {
                stack.push(c);
            }
        }
        out
    }
}

/// Label every node as light / heavy type 1 / heavy type 2 for threshold L.
pub fn heavy_classify(tree: &OrderedTree, l: u32) -> Vec<HeavyLabel> {
    let declared = vec![false; tree.len() + 1];
    classify_with_declared(tree, l, &tree.subtree_sizes(), &declared)
}

fn classify_with_declared(
    tree: &OrderedTree,
    l: u32,
    sizes: &[u32],
    declared: &[bool],
) -> Vec<HeavyLabel> {
    let n = tree.len();
    let mut labels = vec![HeavyLabel::Light; n + 1];
    for x in 1..=n as NodeId {
        if sizes[x as usize] >= l || declared[x as usize] {
            let heavy_kids = tree
                .children(x)
                .iter()
                .filter(|&&c| sizes[c as usize] >= l || declared[c as usize])
                .count();
            labels[x as usize] =
                if heavy_kids >= 2 { HeavyLabel::HeavyType2 } else { HeavyLabel::HeavyType1 };
        }
    }
    labels
}

/// Greedy left-to-right grouping of child subtrees. `sizes` are the
/// associated subtree sizes (excluding the shared parent); every group's
/// piece size (1 + sum of members) is at least L except possibly the last,
/// and at most 2L-1.
pub fn pack(sizes: &[u32], l: u32) -> Result<Vec<std::ops::Range<usize>>> {
    let mut groups = Vec::new();
    let mut start = 0usize;
    let mut acc = 1u32; // the shared root
    for (i, &s) in sizes.iter().enumerate() {
        if s >= l {
            return Err(Error::OversizedChild { index: i, size: s });
        }
        acc += s;
        if acc >= l {
            groups.push(start..i + 1);
            start = i + 1;
            acc = 1;
        }
    }
    if start < sizes.len() {
        groups.push(start..sizes.len());
    }
    Ok(groups)
}

/// Decompose `tree` with parameter L (Lemma 1 cover).
pub fn decompose(tree: &OrderedTree, l: u32) -> Result<Decomposition> {
    decompose_with_designation(tree, l, None)
}

/// Variant used when the tree is itself a piece with a designated boundary
/// leaf: the designated leaf and all its ancestors are treated as heavy, so
/// the designation always ends up in a component-leaf piece.
pub fn decompose_with_designation(
    tree: &OrderedTree,
    l: u32,
    designated: Option<NodeId>,
) -> Result<Decomposition> {
    let n = tree.len();
    if l < 2 {
        return Err(Error::Format("decomposition parameter L must be >= 2".into()));
    }
    if n < 2 {
        return Err(Error::TreeTooSmall);
    }
    let sizes = tree.subtree_sizes();
    let mut declared = vec![false; n + 1];
    if let Some(b) = designated {
        let mut v = b;
        declared[v as usize] = true;
        while let Some(p) = tree.parent(v) {
            declared[p as usize] = true;
            v = p;
        }
    }
    let labels = classify_with_declared(tree, l, &sizes, &declared);
    let is_heavy = |x: NodeId| labels[x as usize] != HeavyLabel::Light;

    let mut pieces: Vec<Piece> = Vec::new();

    if !is_heavy(tree.root()) {
        // no heavy nodes at all (n < L, no designation): one piece, whole tree
        pieces.push(Piece { root: 1, boundary_leaf: None, intervals: vec![(2, n as NodeId)] });
        return finish(tree, l, pieces);
    }

    let edge_piece = |p: NodeId, x: NodeId| Piece {
        root: p,
        boundary_leaf: None,
        intervals: vec![(x, x)],
    };

    // builds one pack-group piece rooted at x spanning children first..=last,
    // with an optional hole (an excluded preorder interval) carved out
    let make_pack_piece = |x: NodeId,
                           first: NodeId,
                           last: NodeId,
                           hole: Option<(NodeId, NodeId)>|
     -> Piece {
        let span_start = first;
        let span_end = last + sizes[last as usize] - 1;
        let mut intervals = Vec::with_capacity(2);
        match hole {
            Some((h_start, h_end)) if h_start >= span_start && h_end <= span_end => {
                if h_start > span_start {
                    intervals.push((span_start, h_start - 1));
                }
                if h_end < span_end {
                    intervals.push((h_end + 1, span_end));
                }
            }
            _ => intervals.push((span_start, span_end)),
        }
        Piece { root: x, boundary_leaf: None, intervals }
    };

    // phase 1: type-2 heavy nodes. The edge towards the parent is covered
    // elsewhere: by the parent's own heavy-child piece when the parent is
    // type 2, and by the parent's path stage when the parent is type 1.
    for x in 1..=n as NodeId {
        if labels[x as usize] != HeavyLabel::HeavyType2 {
            continue;
        }
        let kids = tree.children(x);
        let mut run_start = 0usize;
        for (i, &c) in kids.iter().enumerate() {
            if is_heavy(c) {
                pack_run(&mut pieces, x, &kids[run_start..i], &sizes, l, None, &make_pack_piece)?;
                pieces.push(edge_piece(x, c));
                run_start = i + 1;
            }
        }
        pack_run(&mut pieces, x, &kids[run_start..], &sizes, l, None, &make_pack_piece)?;
    }

    // phase 2: maximal paths of type-1 heavy nodes
    for head in 1..=n as NodeId {
        if labels[head as usize] != HeavyLabel::HeavyType1 {
            continue;
        }
        if let Some(p) = tree.parent(head) {
            if labels[p as usize] == HeavyLabel::HeavyType1 {
                continue; // not a path head
            }
        }
        let mut path = vec![head];
        loop {
            let cur = *path.last().unwrap();
            let next = tree.children(cur).iter().copied().find(|&c| is_heavy(c));
            match next {
                Some(c) if labels[c as usize] == HeavyLabel::HeavyType1 => path.push(c),
                _ => break,
            }
        }
        let end = *path.last().unwrap();
        // the heavy child of the path end, if any, is type 2 and its subtree
        // is excluded from this path's processing
        let mut excl: Option<NodeId> = tree.children(end).iter().copied().find(|&c| is_heavy(c));
        let mut m = path.len();
        loop {
            let xk = path[m - 1];
            // when the path end has an excluded heavy child z it is already
            // shared below, so it must stay a leaf of whatever piece absorbs
            // the chain above. Its children are packed here, rooted at xk,
            // with z participating as a single pinned leaf (this also covers
            // the edge xk -> z); everything below xk becomes a hole for the
            // stages above.
            let mut hole: Option<(NodeId, NodeId)> = None;
            let mut hole_len = 0u32;
            if let Some(z) = excl {
                let kids = tree.children(xk);
                let assoc: Vec<u32> = kids
                    .iter()
                    .map(|&c| if c == z { 1 } else { sizes[c as usize] })
                    .collect();
                let z_hole =
                    (sizes[z as usize] > 1).then(|| (z + 1, z + sizes[z as usize] - 1));
                for g in pack(&assoc, l)? {
                    pieces.push(make_pack_piece(xk, kids[g.start], kids[g.end - 1], z_hole));
                }
                hole_len = sizes[xk as usize] - 1;
                hole = Some((xk + 1, xk + hole_len));
            }
            // pivot: deepest remaining path node whose reduced subtree still
            // has >= L nodes; the pinned path end itself is not a candidate
            let top = if excl.is_some() { m - 1 } else { m };
            if top == 0 {
                break;
            }
            let mut piv = 0usize;
            for j in (0..top).rev() {
                if sizes[path[j] as usize] - hole_len >= l {
                    piv = j;
                    break;
                }
            }
            let x_i = path[piv];
            let kids = tree.children(x_i);
            let mut assoc: Vec<(NodeId, u32)> = Vec::with_capacity(kids.len());
            for &c in kids {
                let mut s = sizes[c as usize];
                if piv + 1 < m && c == path[piv + 1] {
                    s -= hole_len; // chain child minus the hole below xk
                }
                assoc.push((c, s));
            }
            let groups = pack(&assoc.iter().map(|&(_, s)| s).collect::<Vec<_>>(), l)?;
            for g in groups {
                let first = assoc[g.start].0;
                let last = assoc[g.end - 1].0;
                pieces.push(make_pack_piece(x_i, first, last, hole));
            }
            if piv == 0 {
                break;
            }
            m = piv;
            excl = Some(x_i);
        }
    }

    finish(tree, l, pieces)
}

fn pack_run(
    pieces: &mut Vec<Piece>,
    x: NodeId,
    run: &[NodeId],
    sizes: &[u32],
    l: u32,
    hole: Option<(NodeId, NodeId)>,
    make_pack_piece: &impl Fn(NodeId, NodeId, NodeId, Option<(NodeId, NodeId)>) -> Piece,
) -> Result<()> {
    if run.is_empty() {
        return Ok(());
    }
    let assoc: Vec<u32> = run.iter().map(|&c| sizes[c as usize]).collect();
    for g in pack(&assoc, l)? {
        pieces.push(make_pack_piece(x, run[g.start], run[g.end - 1], hole));
    }
    Ok(())
}

/// Sort pieces canonically and resolve boundary leaves.
fn finish(tree: &OrderedTree, l: u32, mut pieces: Vec<Piece>) -> Result<Decomposition> {
    pieces.sort_by_key(|p| (p.root, p.first_non_root()));
    let mut roots: Vec<NodeId> = pieces.iter().map(|p| p.root).collect();
    roots.sort_unstable();
    roots.dedup();
    for piece in &mut pieces {
        let mut found: Option<NodeId> = None;
        for &(a, b) in &piece.intervals {
            let lo = roots.partition_point(|&r| r < a);
            let hi = roots.partition_point(|&r| r <= b);
            for &r in &roots[lo..hi] {
                if found.is_some() {
                    return Err(Error::Format(
                        "internal: piece with two shared non-root nodes".into(),
                    ));
                }
                found = Some(r);
            }
        }
        piece.boundary_leaf = found;
    }
    let _ = tree;
    Ok(Decomposition { pieces, l })
}

/// Build the component tree of a decomposition.
pub fn component_tree(tree: &OrderedTree, d: &Decomposition) -> ComponentTree {
    let n = tree.len();
    let depths = tree.depths();
    // owner[x] = piece index whose non-root intervals contain x
    let mut owner = vec![u32::MAX; n + 1];
    for (pi, p) in d.pieces.iter().enumerate() {
        for &(a, b) in &p.intervals {
            for x in a..=b {
                owner[x as usize] = pi as u32;
            }
        }
    }
    let count = d.pieces.len() + 1;
    let mut parent = vec![0u32; count];
    let mut weight = vec![0u32; count];
    for (pi, p) in d.pieces.iter().enumerate() {
        let v = pi as u32 + 1;
        if p.root == tree.root() {
            parent[v as usize] = 0;
            weight[v as usize] = 0;
        } else {
            let owner_piece = owner[p.root as usize];
            debug_assert_ne!(owner_piece, u32::MAX);
            parent[v as usize] = owner_piece + 1;
            let pr = d.pieces[owner_piece as usize].root;
            weight[v as usize] = depths[p.root as usize] - depths[pr as usize];
        }
    }
    let mut counts = vec![0u32; count + 1];
    for v in 1..count {
        counts[parent[v]  as usize] += 1;
    }
    let mut child_start = vec![0u32; count + 1];
    for v in 0..count {
        child_start[v + 1] = child_start[v] + counts[v];
    }
    let mut cursor = child_start.clone();
    let mut children = vec![0u32; count - 1];
    for v in 1..count as u32 {
        let p = parent[v as usize] as usize;
        children[cursor[p] as usize] = v;
        cursor[p] += 1;
    }
    let mut weighted_depth = vec![0u64; count];
    // parents precede children in piece order? not guaranteed; do a BFS
    let mut queue = std::collections::VecDeque::new();
    queue.push_back(0u32);
    while let Some(v) = queue.pop_front() {
        let a = child_start[v as usize] as usize;
        let b = child_start[v as usize + 1] as usize;
        for &c in &children[a..b] {
            weighted_depth[c as usize] =
                weighted_depth[v as usize] + weight[c as usize] as u64;
            queue.push_back(c);
        }
    }
    ComponentTree { parent, weight, child_start, children, weighted_depth }
}

/// Outcome of one checked property.
#[derive(Debug, Clone)]
pub struct PropertyCheck {
    pub name: &'static str,
    pub pass: bool,
    pub witness: Option<String>,
}

#[derive(Debug, Clone)]
pub struct Lemma1Report {
    pub checks: Vec<PropertyCheck>,
}

impl Lemma1Report {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            out.push_str(&format!(
                "{}: {}{}\n",
                c.name,
                if c.pass { "PASS" } else { "FAIL" },
                c.witness.as_deref().map(|w| format!(" ({w})")).unwrap_or_default()
            ));
        }
        out
    }
}

/// Evaluate the six cover properties plus the heavy-path observation against
/// the origin tree. Failures carry a witness; nothing is assumed from the
/// construction.
pub fn check_lemma1(tree: &OrderedTree, d: &Decomposition) -> Lemma1Report {
    check_lemma1_designated(tree, d, None)
}

pub fn check_lemma1_designated(
    tree: &OrderedTree,
    d: &Decomposition,
    designated: Option<NodeId>,
) -> Lemma1Report {
    let n = tree.len();
    let l = d.l;
    let mut checks = Vec::new();

    // property 1: every edge in exactly one piece (edge identified by its
    // child endpoint; piece must also contain the parent endpoint)
    let mut edge_count = vec![0u32; n + 1];
    let mut connectivity_witness = None;
    for p in &d.pieces {
        for &(a, b) in &p.intervals {
            for x in a..=b {
                edge_count[x as usize] += 1;
                let par = tree.parent(x).unwrap_or(0);
                if !(par == p.root || p.contains_non_root(par)) && connectivity_witness.is_none() {
                    connectivity_witness = Some(format!("edge ({par},{x}) endpoint missing"));
                }
            }
        }
    }
    let mut edge_witness = connectivity_witness;
    if edge_witness.is_none() {
        for x in 2..=n as NodeId {
            if edge_count[x as usize] != 1 {
                edge_witness = Some(format!(
                    "edge ({},{x}) covered {} times",
                    tree.parent(x).unwrap_or(0),
                    edge_count[x as usize]
                ));
                break;
            }
        }
    }
    checks.push(PropertyCheck { name: "1 edge-partition", pass: edge_witness.is_none(), witness: edge_witness });

    // property 2: sizes in [2, 2L+1]
    let mut size_witness = None;
    for (pi, p) in d.pieces.iter().enumerate() {
        let s = p.size();
        if s < 2 || s > 2 * l + 1 {
            size_witness = Some(format!("piece {pi} (root {}) has size {s}", p.root));
            break;
        }
    }
    checks.push(PropertyCheck { name: "2 size-window", pass: size_witness.is_none(), witness: size_witness });

    // property 3: piece count within the empirical constant
    let bound = (4 * n as u64).div_ceil(l as u64) + 2;
    let count_ok = d.pieces.len() as u64 <= bound;
    checks.push(PropertyCheck {
        name: "3 piece-count",
        pass: count_ok,
        witness: (!count_ok).then(|| format!("{} pieces > bound {bound}", d.pieces.len())),
    });

    // properties 4+5: shared nodes per piece, and their positions
    let mut appearances = vec![0u32; n + 1];
    for p in &d.pieces {
        for x in p.nodes() {
            appearances[x as usize] += 1;
        }
    }
    let mut share_witness = None;
    for (pi, p) in d.pieces.iter().enumerate() {
        let mut shared: Vec<NodeId> = p.nodes().filter(|&x| appearances[x as usize] > 1).collect();
        shared.sort_unstable();
        if shared.len() > 2 {
            share_witness = Some(format!("piece {pi} shares {} nodes", shared.len()));
            break;
        }
        for &s in &shared {
            if s != p.root && p.boundary_leaf != Some(s) {
                share_witness =
                    Some(format!("piece {pi}: shared node {s} is neither root nor boundary leaf"));
                break;
            }
        }
        if share_witness.is_some() {
            break;
        }
    }
    checks.push(PropertyCheck { name: "4 boundary-count", pass: share_witness.is_none(), witness: share_witness });

    let mut leaf_witness = None;
    for (pi, p) in d.pieces.iter().enumerate() {
        if let Some(b) = p.boundary_leaf {
            if b == p.root {
                leaf_witness = Some(format!("piece {pi}: boundary leaf equals root"));
                break;
            }
            // a leaf of the piece: none of its children belong to the piece
            if tree.children(b).iter().any(|&c| p.contains_non_root(c)) {
                leaf_witness = Some(format!("piece {pi}: boundary node {b} is not a leaf"));
                break;
            }
        }
    }
    checks.push(PropertyCheck { name: "5 boundary-kind", pass: leaf_witness.is_none(), witness: leaf_witness });

    // property 6: at most two maximal intervals characterizing membership
    let mut interval_witness = None;
    for (pi, p) in d.pieces.iter().enumerate() {
        if p.intervals.len() > 2 {
            interval_witness = Some(format!("piece {pi} has {} intervals", p.intervals.len()));
            break;
        }
        let sorted = p.intervals.windows(2).all(|w| w[0].1 + 1 < w[1].0);
        if !sorted || p.intervals.iter().any(|&(a, b)| a > b || a < 2 || b > n as NodeId) {
            interval_witness = Some(format!("piece {pi} intervals not maximal/sorted"));
            break;
        }
        if p.contains_non_root(p.root) {
            interval_witness = Some(format!("piece {pi} intervals include the root"));
            break;
        }
    }
    checks.push(PropertyCheck { name: "6 intervals", pass: interval_witness.is_none(), witness: interval_witness });

    // observation: heavy nodes inside a piece form exactly the root-to-
    // boundary-leaf path (or just the root for component-tree leaves)
    let sizes = tree.subtree_sizes();
    let mut declared = vec![false; n + 1];
    if let Some(bd) = designated {
        let mut v = bd;
        declared[v as usize] = true;
        while let Some(p) = tree.parent(v) {
            declared[p as usize] = true;
            v = p;
        }
    }
    let mut obs_witness = None;
    'outer: for (pi, p) in d.pieces.iter().enumerate() {
        let mut expected: Vec<NodeId> = Vec::new();
        // the designated leaf plays the boundary-leaf role in its piece
        let target = p
            .boundary_leaf
            .or_else(|| designated.filter(|&b| p.contains_non_root(b)));
        if let Some(b) = target {
            let mut v = b;
            expected.push(v);
            while v != p.root {
                v = tree.parent(v).unwrap();
                expected.push(v);
            }
        } else {
            expected.push(p.root);
        }
        expected.sort_unstable();
        let mut actual: Vec<NodeId> = p
            .nodes()
            .filter(|&x| sizes[x as usize] >= l || declared[x as usize])
            .collect();
        actual.sort_unstable();
        // a piece that is itself the whole (small) tree has a light root
        if p.size() as usize == n && actual.is_empty() {
            continue;
        }
        if expected != actual {
            obs_witness = Some(format!("piece {pi}: heavy set {:?} != path {:?}", actual, expected));
            break 'outer;
        }
    }
    checks.push(PropertyCheck { name: "observation heavy-path", pass: obs_witness.is_none(), witness: obs_witness });

    Lemma1Report { checks }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen::{random_tree, Profile};

    #[test]
    fn heavy_classify_path_and_star() {
        let path = random_tree(10, Profile::Path, 0).unwrap();
        let labels = heavy_classify(&path, 3);
        for x in 1..=8u32 {
            assert_eq!(labels[x as usize], HeavyLabel::HeavyType1, "node {x}");
        }
        assert_eq!(labels[9], HeavyLabel::Light);
        assert_eq!(labels[10], HeavyLabel::Light);

        let star = random_tree(11, Profile::Star, 0).unwrap();
        let labels = heavy_classify(&star, 3);
        assert_eq!(labels[1], HeavyLabel::HeavyType1);
        for x in 2..=11 {
            assert_eq!(labels[x], HeavyLabel::Light);
        }

        // degenerate threshold: everything heavy
        let labels = heavy_classify(&star, 1);
        assert!(labels[1..].iter().all(|&l| l != HeavyLabel::Light));
    }

    #[test]
    fn pack_examples() {
        assert_eq!(pack(&[2, 2, 1, 3], 4).unwrap(), vec![0..2, 2..4]);
        assert_eq!(pack(&[1, 1, 1], 4).unwrap(), vec![0..3]);
        assert_eq!(pack(&[1], 4).unwrap(), vec![0..1]);
        assert!(matches!(pack(&[4], 4), Err(Error::OversizedChild { index: 0, size: 4 })));
        assert!(pack(&[], 4).unwrap().is_empty());
    }

    #[test]
    fn two_node_tree_single_piece() {
        let t = OrderedTree::from_bp("(())").unwrap();
        let d = decompose(&t, 2).unwrap();
        assert_eq!(d.pieces.len(), 1);
        assert_eq!(d.pieces[0].size(), 2);
        assert_eq!(d.pieces[0].boundary_leaf, None);
        assert!(check_lemma1(&t, &d).all_pass());
    }

    #[test]
    fn path_decomposition() {
        let t = random_tree(10, Profile::Path, 0).unwrap();
        let d = decompose(&t, 3).unwrap();
        let report = check_lemma1(&t, &d);
        assert!(report.all_pass(), "{}", report.render());
        for p in &d.pieces {
            assert!(p.size() >= 2 && p.size() <= 7);
        }
        assert!(d.pieces.len() as u64 <= (40u64).div_ceil(3) + 2);
        // on a path the component tree is itself a path
        let tl = component_tree(&t, &d);
        for v in 0..tl.len() as u32 {
            assert!(tl.children(v).len() <= 1);
        }
    }

    #[test]
    fn star_decomposition() {
        let t = random_tree(13, Profile::Star, 0).unwrap();
        let d = decompose(&t, 4).unwrap();
        let report = check_lemma1(&t, &d);
        assert!(report.all_pass(), "{}", report.render());
        // all pieces rooted at the center; component tree has depth 1
        for p in &d.pieces {
            assert_eq!(p.root, 1);
        }
        let tl = component_tree(&t, &d);
        assert_eq!(tl.children(0).len(), d.pieces.len());
    }

    #[test]
    fn negative_controls() {
        let t = random_tree(10, Profile::Path, 0).unwrap();
        let mut d = decompose(&t, 3).unwrap();
        // duplicate an edge by extending the first piece over its neighbour
        let dup = d.pieces[0].clone();
        d.pieces.push(dup);
        let report = check_lemma1(&t, &d);
        assert!(!report.checks[0].pass, "duplicated edge must fail property 1");

        // piece of size 2L+2 on a path of 9 with L=3: 9 non-root nodes > 7
        let t = random_tree(10, Profile::Path, 0).unwrap();
        let d = Decomposition {
            pieces: vec![Piece { root: 1, boundary_leaf: None, intervals: vec![(2, 10)] }],
            l: 3,
        };
        let report = check_lemma1(&t, &d);
        assert!(!report.checks[1].pass, "oversized piece must fail property 2");
    }

    #[test]
    fn random_corpus_all_properties() {
        for seed in 0..12 {
            for n in [2usize, 3, 5, 17, 64, 257] {
                let t = random_tree(n, Profile::UniformRandom, seed).unwrap();
                for l in [2u32, 3, 8] {
                    let d = decompose(&t, l).unwrap();
                    let report = check_lemma1(&t, &d);
                    assert!(report.all_pass(), "n={n} l={l} seed={seed}\n{}", report.render());
                }
            }
        }
    }

    #[test]
    fn component_tree_weights_match_root_depths() {
        let t = random_tree(200, Profile::UniformRandom, 3).unwrap();
        let depths = t.depths();
        let d = decompose(&t, 4).unwrap();
        let tl = component_tree(&t, &d);
        for (pi, p) in d.pieces.iter().enumerate() {
            assert_eq!(
                tl.weighted_depth(pi as u32 + 1),
                depths[p.root as usize] as u64,
                "piece {pi}"
            );
        }
    }
}
