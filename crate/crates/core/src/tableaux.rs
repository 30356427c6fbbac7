//! Standard tableaux and their statistics.
//!
//! A tableau is stored as the list of nodes in entry order, so
//! `nodes[k - 1]` is the node holding `k`. Every prefix of that list is the
//! diagram of an l-partition exactly when the tableau is standard.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::cartan::{DominantWeight, Residue, RootVector};
use crate::error::{Error, Result};
use crate::partitions::{residue, MultiPartition, Node, Partition};
use crate::perm::{self, Word};

pub type ResidueSequence = Vec<Residue>;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "TableauRepr", into = "TableauRepr")]
pub struct StandardTableau {
    shape: MultiPartition,
    nodes: Vec<Node>,
}

/// JSON form: the shape, plus the entries row by row for each component.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TableauRepr {
    pub shape: MultiPartition,
    pub rows: Vec<Vec<Vec<usize>>>,
}

impl StandardTableau {
    /// Builds a tableau from its nodes listed in entry order.
    pub fn from_nodes(shape: MultiPartition, nodes: Vec<Node>) -> Result<Self> {
        let mut cur = MultiPartition::empty(shape.level());
        for (k, node) in nodes.iter().enumerate() {
            if !cur.is_addable(node) || !shape.contains_node(node) {
                return Err(Error::InvalidTableau(format!("entry {} at {node} breaks standardness", k + 1)));
            }
            cur.push_node(node);
        }
        if cur != shape {
            return Err(Error::InvalidTableau(format!("nodes fill {cur}, not {shape}")));
        }
        Ok(StandardTableau { shape, nodes })
    }

    /// Builds a tableau from entries given per component, per row.
    pub fn from_rows(shape: MultiPartition, rows: &[Vec<Vec<usize>>]) -> Result<Self> {
        let n = shape.size();
        let mut slots: Vec<Option<Node>> = vec![None; n];
        if rows.len() != shape.level() {
            return Err(Error::LevelMismatch { expected: shape.level(), found: rows.len() });
        }
        for (m, comp_rows) in rows.iter().enumerate() {
            let p = shape.component(m + 1);
            let lens: Vec<usize> = comp_rows.iter().map(Vec::len).collect();
            if lens != p.parts() {
                return Err(Error::InvalidTableau(format!("rows {comp_rows:?} do not fill {p}")));
            }
            for (r, row) in comp_rows.iter().enumerate() {
                for (c, &e) in row.iter().enumerate() {
                    if e == 0 || e > n || slots[e - 1].is_some() {
                        return Err(Error::InvalidTableau(format!("entry {e} is out of range or repeated")));
                    }
                    slots[e - 1] = Some(Node::new(r + 1, c + 1, m + 1));
                }
            }
        }
        let nodes = slots.into_iter().map(|s| s.expect("bijective filling")).collect();
        Self::from_nodes(shape, nodes)
    }

    pub fn shape(&self) -> &MultiPartition {
        &self.shape
    }

    pub fn nodes(&self) -> &[Node] {
        &self.nodes
    }

    pub fn size(&self) -> usize {
        self.nodes.len()
    }

    /// The node holding `k` (1-based).
    pub fn node_of(&self, k: usize) -> Node {
        self.nodes[k - 1]
    }

    pub fn entry(&self, node: &Node) -> Option<usize> {
        self.nodes.iter().position(|n| n == node).map(|k| k + 1)
    }

    pub fn rows(&self) -> Vec<Vec<Vec<usize>>> {
        let mut rows: Vec<Vec<Vec<usize>>> = self
            .shape
            .components()
            .iter()
            .map(|p| p.parts().iter().map(|&len| vec![0; len]).collect())
            .collect();
        for (k, n) in self.nodes.iter().enumerate() {
            rows[n.comp - 1][n.row - 1][n.col - 1] = k + 1;
        }
        rows
    }

    /// `Shape(t_{<=m})`.
    pub fn prefix_shape(&self, m: usize) -> MultiPartition {
        let mut cur = MultiPartition::empty(self.shape.level());
        for n in &self.nodes[..m] {
            cur.push_node(n);
        }
        cur
    }

    /// The tableau `t_{<=m}` on its own shape.
    pub fn restrict(&self, m: usize) -> StandardTableau {
        StandardTableau { shape: self.prefix_shape(m), nodes: self.nodes[..m].to_vec() }
    }

    /// Entries in reading order of the nodes, i.e. the one-line form of the
    /// permutation `w` with `w t^shape = t`.
    pub fn reading_permutation(&self) -> Vec<usize> {
        let mut by_node: Vec<(Node, usize)> = self.nodes.iter().enumerate().map(|(k, n)| (*n, k + 1)).collect();
        by_node.sort();
        by_node.into_iter().map(|(_, e)| e).collect()
    }
}

impl TryFrom<TableauRepr> for StandardTableau {
    type Error = Error;

    fn try_from(repr: TableauRepr) -> Result<Self> {
        StandardTableau::from_rows(repr.shape, &repr.rows)
    }
}

impl From<StandardTableau> for TableauRepr {
    fn from(t: StandardTableau) -> Self {
        let rows = t.rows();
        TableauRepr { shape: t.shape, rows }
    }
}

/// The row-initial tableau: rows of component 1, then component 2, and so on.
pub fn initial_tableau(shape: &MultiPartition) -> StandardTableau {
    StandardTableau { shape: shape.clone(), nodes: shape.nodes() }
}

/// Fills a 1-partition down successive columns.
pub fn column_initial_tableau(shape: &MultiPartition) -> Result<StandardTableau> {
    if shape.level() != 1 {
        return Err(Error::LevelMismatch { expected: 1, found: shape.level() });
    }
    Ok(column_initial_below(shape.component(1), 0))
}

/// Fills the first `head_rows` rows row by row, then the remaining rows
/// column by column. With `head_rows == 0` this is the column-initial tableau.
pub fn column_initial_below(shape: &Partition, head_rows: usize) -> StandardTableau {
    let mut nodes = Vec::with_capacity(shape.size());
    for r in 1..=head_rows.min(shape.len()) {
        nodes.extend((1..=shape.row(r)).map(|c| Node::new(r, c, 1)));
    }
    for c in 1..=shape.row(head_rows + 1) {
        for r in head_rows + 1..=shape.len() {
            if shape.row(r) >= c {
                nodes.push(Node::new(r, c, 1));
            }
        }
    }
    StandardTableau { shape: MultiPartition::single(shape.clone()), nodes }
}

pub fn residue_sequence(t: &StandardTableau, weight: &DominantWeight) -> ResidueSequence {
    t.nodes.iter().map(|n| residue(weight, n)).collect()
}

fn count_below(nodes: &[Node], weight: &DominantWeight, i: Residue, anchor: &Node) -> i64 {
    nodes.iter().filter(|b| b.is_below(anchor) && residue(weight, b) == i).count() as i64
}

/// The graded degree: for each entry `k` in node `A`, add the number of
/// addable minus removable `res(A)`-nodes of `Shape(t_{<=k})` strictly below `A`.
pub fn degree(t: &StandardTableau, weight: &DominantWeight) -> i64 {
    let mut cur = MultiPartition::empty(t.shape.level());
    let mut total = 0;
    for a in &t.nodes {
        cur.push_node(a);
        let i = residue(weight, a);
        total += count_below(&cur.addable(), weight, i, a) - count_below(&cur.removable(), weight, i, a);
    }
    total
}

/// Exponent of `y_k` in `y_t`: addable `res`-nodes of `Shape(t_{<=k-1})`
/// strictly below the node holding `k`.
pub fn y_exponents(t: &StandardTableau, weight: &DominantWeight) -> Vec<u32> {
    let mut cur = MultiPartition::empty(t.shape.level());
    t.nodes
        .iter()
        .map(|a| {
            let e = count_below(&cur.addable(), weight, residue(weight, a), a) as u32;
            cur.push_node(a);
            e
        })
        .collect()
}

/// Restricts enumeration to tableaux with a prescribed residue sequence.
#[derive(Debug, Clone, Copy)]
pub struct ResidueFilter<'a> {
    pub weight: &'a DominantWeight,
    pub residues: &'a [Residue],
}

/// Depth-first walk over standard tableaux of `shape`, entries 1..n placed
/// in turn with candidate nodes in reading order. With a filter, a node is
/// only tried when its residue matches, so non-matching tableaux are never
/// built. `visit` receives each completed node list.
pub fn for_each_standard(shape: &MultiPartition, filter: Option<ResidueFilter<'_>>, mut visit: impl FnMut(&[Node])) {
    let n = shape.size();
    if let Some(f) = filter {
        if f.residues.len() != n {
            return;
        }
    }
    let mut cur = MultiPartition::empty(shape.level());
    let mut path = Vec::with_capacity(n);
    walk(shape, filter, &mut cur, &mut path, n, &mut visit);
}

fn walk(
    shape: &MultiPartition,
    filter: Option<ResidueFilter<'_>>,
    cur: &mut MultiPartition,
    path: &mut Vec<Node>,
    n: usize,
    visit: &mut impl FnMut(&[Node]),
) {
    if path.len() == n {
        visit(path);
        return;
    }
    for node in cur.addable() {
        if !shape.contains_node(&node) {
            continue;
        }
        if let Some(f) = filter {
            if residue(f.weight, &node) != f.residues[path.len()] {
                continue;
            }
        }
        cur.push_node(&node);
        path.push(node);
        walk(shape, filter, cur, path, n, visit);
        path.pop();
        cur.pop_node(&node);
    }
}

pub fn enumerate_standard(shape: &MultiPartition, filter: Option<ResidueFilter<'_>>) -> Vec<StandardTableau> {
    let mut out = Vec::new();
    for_each_standard(shape, filter, |nodes| {
        out.push(StandardTableau { shape: shape.clone(), nodes: nodes.to_vec() })
    });
    out
}

pub fn count_standard(shape: &MultiPartition) -> u64 {
    let mut count = 0;
    for_each_standard(shape, None, |_| count += 1);
    count
}

/// `Std(i)`: standard tableaux of any l-partition with residue sequence `i`.
pub fn tableaux_with_residues(weight: &DominantWeight, residues: &[Residue]) -> Vec<StandardTableau> {
    fn go(
        weight: &DominantWeight,
        residues: &[Residue],
        cur: &mut MultiPartition,
        path: &mut Vec<Node>,
        out: &mut Vec<StandardTableau>,
    ) {
        if path.len() == residues.len() {
            out.push(StandardTableau { shape: cur.clone(), nodes: path.clone() });
            return;
        }
        for node in cur.addable() {
            if residue(weight, &node) != residues[path.len()] {
                continue;
            }
            cur.push_node(&node);
            path.push(node);
            go(weight, residues, cur, path, out);
            path.pop();
            cur.pop_node(&node);
        }
    }
    let mut out = Vec::new();
    go(weight, residues, &mut MultiPartition::empty(weight.level()), &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// Tableaux of `nu` whose first `ht(omega)` entries fill a diagram of content
/// `omega`, i.e. whose residue sequence factors as a word in `I^omega`
/// followed by the rest.
pub fn factorizable_tableaux(nu: &MultiPartition, weight: &DominantWeight, omega: &RootVector) -> Vec<StandardTableau> {
    let mut out = Vec::new();
    for_each_factorizable(nu, weight, omega, |nodes| {
        out.push(StandardTableau { shape: nu.clone(), nodes: nodes.to_vec() })
    });
    out
}

pub fn for_each_factorizable(
    nu: &MultiPartition,
    weight: &DominantWeight,
    omega: &RootVector,
    mut visit: impl FnMut(&[Node]),
) {
    struct Walk<'a, F> {
        nu: &'a MultiPartition,
        weight: &'a DominantWeight,
        head: usize,
        budget: BTreeMap<Residue, u32>,
        visit: F,
    }

    impl<F: FnMut(&[Node])> Walk<'_, F> {
        fn go(&mut self, cur: &mut MultiPartition, path: &mut Vec<Node>) {
            if path.len() == self.nu.size() {
                (self.visit)(path);
                return;
            }
            for node in cur.addable() {
                if !self.nu.contains_node(&node) {
                    continue;
                }
                let i = residue(self.weight, &node);
                let in_head = path.len() < self.head;
                if in_head {
                    match self.budget.get_mut(&i) {
                        Some(left) if *left > 0 => *left -= 1,
                        _ => continue,
                    }
                }
                cur.push_node(&node);
                path.push(node);
                self.go(cur, path);
                path.pop();
                cur.pop_node(&node);
                if in_head {
                    *self.budget.get_mut(&i).unwrap() += 1;
                }
            }
        }
    }

    if nu.size() < omega.height() {
        return;
    }
    let mut walk = Walk { nu, weight, head: omega.height(), budget: omega.iter().collect(), visit: &mut visit };
    walk.go(&mut MultiPartition::empty(nu.level()), &mut Vec::with_capacity(nu.size()));
}

/// A reduced word `s_{i_1} ... s_{i_r}` for `w^t`, where `w^t t^shape = t`.
/// The word is found by peeling off the largest available descent first.
pub fn permutation_word(t: &StandardTableau) -> Word {
    perm::reduced_word(&t.reading_permutation())
}

/// Applies `s_{i_1} ... s_{i_r}` (rightmost first) to a tableau by swapping
/// entries; fails if an intermediate filling is not standard.
pub fn apply_word(word: &[usize], t: &StandardTableau) -> Result<StandardTableau> {
    let mut nodes = t.nodes.clone();
    for &i in word.iter().rev() {
        if i == 0 || i >= nodes.len() {
            return Err(Error::InvalidTableau(format!("s_{i} does not act on {} entries", nodes.len())));
        }
        nodes.swap(i - 1, i);
    }
    StandardTableau::from_nodes(t.shape.clone(), nodes)
}
