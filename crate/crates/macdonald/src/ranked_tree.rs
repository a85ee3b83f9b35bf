//! Rooted ranked trees with optional partition payloads and hook /
//! one-dimensional markings. Shared by the Macdonald tree, the Pascal
//! parity graph, and the Young-Fibonacci odd subgraph.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::parity::is_odd;
use crate::partition::Partition;

/// Index of a node inside its tree.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct NodeId(pub usize);

/// Node markings: hook-shaped, and one-dimensional (single row or column).
#[derive(Clone, Copy, Default, PartialEq, Eq, Debug)]
pub struct Marks {
    pub hook: bool,
    pub one_dimensional: bool,
}

impl Marks {
    pub fn none() -> Self {
        Marks::default()
    }

    /// Shape-derived marks for a concrete partition node.
    pub fn of(lambda: &Partition) -> Self {
        Marks {
            hook: lambda.is_hook(),
            one_dimensional: lambda.is_one_dimensional(),
        }
    }
}

#[derive(Clone, Debug)]
struct Node {
    rank: usize,
    payload: Option<Partition>,
    marks: Marks,
    parent: Option<NodeId>,
    children: Vec<NodeId>,
}

/// A rooted tree whose nodes carry a rank (child rank = parent rank + 1).
#[derive(Clone, Debug)]
pub struct RankedTree {
    nodes: Vec<Node>,
}

impl RankedTree {
    pub fn new(root_rank: usize, payload: Option<Partition>, marks: Marks) -> Self {
        RankedTree {
            nodes: vec![Node {
                rank: root_rank,
                payload,
                marks,
                parent: None,
                children: Vec::new(),
            }],
        }
    }

    pub fn root(&self) -> NodeId {
        NodeId(0)
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        false // a tree always has its root
    }

    pub fn add_child(&mut self, parent: NodeId, payload: Option<Partition>, marks: Marks) -> NodeId {
        let rank = self.nodes[parent.0].rank + 1;
        let id = NodeId(self.nodes.len());
        self.nodes.push(Node {
            rank,
            payload,
            marks,
            parent: Some(parent),
            children: Vec::new(),
        });
        self.nodes[parent.0].children.push(id);
        id
    }

    pub fn rank(&self, id: NodeId) -> usize {
        self.nodes[id.0].rank
    }

    pub fn payload(&self, id: NodeId) -> Option<&Partition> {
        self.nodes[id.0].payload.as_ref()
    }

    pub fn marks(&self, id: NodeId) -> Marks {
        self.nodes[id.0].marks
    }

    pub fn set_marks(&mut self, id: NodeId, marks: Marks) {
        self.nodes[id.0].marks = marks;
    }

    pub fn children(&self, id: NodeId) -> &[NodeId] {
        &self.nodes[id.0].children
    }

    pub fn parent(&self, id: NodeId) -> Option<NodeId> {
        self.nodes[id.0].parent
    }

    pub fn node_ids(&self) -> impl Iterator<Item = NodeId> {
        (0..self.nodes.len()).map(NodeId)
    }

    pub fn edges(&self) -> impl Iterator<Item = (NodeId, NodeId)> + '_ {
        self.node_ids()
            .flat_map(move |id| self.children(id).iter().map(move |&c| (id, c)))
    }

    pub fn ids_at_rank(&self, rank: usize) -> Vec<NodeId> {
        self.node_ids().filter(|&id| self.rank(id) == rank).collect()
    }

    pub fn max_rank(&self) -> usize {
        self.nodes.iter().map(|n| n.rank).max().unwrap_or(0)
    }

    /// Strips payloads, keeping ranks and marks.
    pub fn to_abstract(&self) -> RankedTree {
        let mut t = self.clone();
        for node in &mut t.nodes {
            node.payload = None;
        }
        t
    }

    /// Copies `other` under `parent`: the copied root becomes a child of
    /// `parent` and ranks shift accordingly. Returns new ids indexed by
    /// `other`'s node indices.
    pub fn graft(&mut self, parent: NodeId, other: &RankedTree) -> Vec<NodeId> {
        let mut map = vec![NodeId(usize::MAX); other.len()];
        // Parents precede children in the node vector, so one pass suffices.
        for id in other.node_ids() {
            let target = match other.parent(id) {
                None => parent,
                Some(p) => map[p.0],
            };
            map[id.0] = self.add_child(target, other.payload(id).cloned(), other.marks(id));
        }
        map
    }

    /// Checks the payload invariants: payload size equals rank, every edge
    /// is a Young-lattice cover, every payload is odd.
    pub fn validate_payloads(&self) -> Result<()> {
        for id in self.node_ids() {
            let lam = self
                .payload(id)
                .ok_or_else(|| Error::Precondition(format!("node {} has no payload", id.0)))?;
            if lam.size() != self.rank(id) {
                return Err(Error::Precondition(format!(
                    "payload {lam} does not match rank {}",
                    self.rank(id)
                )));
            }
            if !is_odd(lam) {
                return Err(Error::NotOdd(lam.clone()));
            }
            if let Some(p) = self.parent(id) {
                let up = self.payload(p).expect("checked above");
                if !lam.contains(up) || lam.size() != up.size() + 1 {
                    return Err(Error::Precondition(format!(
                        "edge {up} -> {lam} is not a cover"
                    )));
                }
            }
        }
        Ok(())
    }

    fn canonical_code(&self, id: NodeId) -> String {
        let mut child_codes: Vec<String> = self
            .children(id)
            .iter()
            .map(|&c| self.canonical_code(c))
            .collect();
        child_codes.sort_unstable();
        let mut code = String::with_capacity(2 + child_codes.iter().map(String::len).sum::<usize>());
        code.push('(');
        for c in child_codes {
            code.push_str(&c);
        }
        code.push(')');
        code
    }
}

/// Rooted-tree isomorphism ignoring payloads. Ranks are respected up to the
/// uniform shift given by the root ranks, which is forced because child rank
/// is always parent rank + 1.
pub fn tree_isomorphic(a: &RankedTree, b: &RankedTree) -> bool {
    a.len() == b.len() && a.canonical_code(a.root()) == b.canonical_code(b.root())
}

/// DOT export options.
#[derive(Clone, Copy, Debug)]
pub struct DotStyle {
    /// Color edges by the endpoint markings: edges joining two hook-marked
    /// nodes are green, among those the ones joining two one-dimensional
    /// nodes are red, everything else is blue.
    pub color_edges: bool,
}

impl Default for DotStyle {
    fn default() -> Self {
        DotStyle { color_edges: true }
    }
}

/// Renders the tree as a DOT digraph, one vertex per node, edges parent to
/// child. Nodes are labelled by their payload when present.
pub fn export_dot(tree: &RankedTree, style: DotStyle) -> String {
    let mut out = String::new();
    out.push_str("digraph tree {\n");
    out.push_str("  rankdir=BT;\n  node [shape=box];\n");
    for id in tree.node_ids() {
        let label = match tree.payload(id) {
            Some(lam) => lam.to_string(),
            None => format!("{}.{}", tree.rank(id), id.0),
        };
        let _ = writeln!(out, "  n{} [label=\"{}\"];", id.0, label);
    }
    for (u, v) in tree.edges() {
        if style.color_edges {
            let mu = tree.marks(u);
            let mv = tree.marks(v);
            let color = if mu.one_dimensional && mv.one_dimensional && mu.hook && mv.hook {
                "red"
            } else if mu.hook && mv.hook {
                "green"
            } else {
                "blue"
            };
            let _ = writeln!(out, "  n{} -> n{} [color={}];", u.0, v.0, color);
        } else {
            let _ = writeln!(out, "  n{} -> n{};", u.0, v.0);
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn isomorphism_distinguishes_path_from_cherry() {
        let mut path = RankedTree::new(0, None, Marks::none());
        let a = path.add_child(path.root(), None, Marks::none());
        path.add_child(a, None, Marks::none());

        let mut cherry = RankedTree::new(0, None, Marks::none());
        cherry.add_child(cherry.root(), None, Marks::none());
        cherry.add_child(cherry.root(), None, Marks::none());

        assert!(!tree_isomorphic(&path, &cherry));
        assert!(tree_isomorphic(&path, &path.clone()));
    }

    #[test]
    fn isomorphism_ignores_child_order() {
        let mut left = RankedTree::new(0, None, Marks::none());
        let a = left.add_child(left.root(), None, Marks::none());
        left.add_child(a, None, Marks::none());
        left.add_child(left.root(), None, Marks::none());

        let mut right = RankedTree::new(0, None, Marks::none());
        right.add_child(right.root(), None, Marks::none());
        let b = right.add_child(right.root(), None, Marks::none());
        right.add_child(b, None, Marks::none());

        assert!(tree_isomorphic(&left, &right));
    }

    #[test]
    fn graft_shifts_ranks() {
        let mut small = RankedTree::new(0, None, Marks::none());
        small.add_child(small.root(), None, Marks::none());

        let mut big = RankedTree::new(0, None, Marks::none());
        let attach = big.add_child(big.root(), None, Marks::none());
        let map = big.graft(attach, &small);
        assert_eq!(big.rank(map[0]), 2);
        assert_eq!(big.rank(map[1]), 3);
        assert_eq!(big.len(), 4);
    }

    #[test]
    fn single_node_dot() {
        let t = RankedTree::new(0, Some(Partition::empty()), Marks::none());
        let dot = export_dot(&t, DotStyle::default());
        assert!(dot.starts_with("digraph"));
        assert!(dot.contains("n0 [label=\"[]\"]"));
        assert!(dot.ends_with("}\n"));
    }
}
