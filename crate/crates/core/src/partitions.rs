//! Partitions, multipartitions and their Young diagrams.
//!
//! Nodes are `[row, col, comp]` triples, all 1-based. The reading order used
//! for signatures and for "below" is by component, then row; within a single
//! row at most one node of a given residue can be addable or removable, so
//! columns never need to break ties in that order.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::cartan::{CartanType, DominantWeight, Residue, RootVector};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition, dropping trailing zeros.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(parts));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    /// The rectangle `(width^height)`.
    pub fn rectangle(width: usize, height: usize) -> Self {
        if width == 0 {
            return Partition::empty();
        }
        Partition { parts: vec![width; height] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of non-zero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Length of row `r` (1-based); zero past the last row.
    pub fn row(&self, r: usize) -> usize {
        if r == 0 {
            return 0;
        }
        self.parts.get(r - 1).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.row(1);
        let parts = (1..=width).map(|c| self.parts.iter().filter(|&&p| p >= c).count()).collect();
        Partition { parts }
    }

    /// `Some((width, height))` when all parts are equal.
    pub fn as_rectangle(&self) -> Option<(usize, usize)> {
        match self.parts.first() {
            None => Some((0, 0)),
            Some(&w) if self.parts.iter().all(|&p| p == w) => Some((w, self.len())),
            Some(_) => None,
        }
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    pub fn contains_cell(&self, row: usize, col: usize) -> bool {
        row >= 1 && col >= 1 && col <= self.row(row)
    }

    /// All partitions of `n`, in decreasing lexicographic order.
    pub fn all_of_size(n: usize) -> Vec<Partition> {
        fn go(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if n == 0 {
                out.push(Partition { parts: prefix.clone() });
                return;
            }
            for k in (1..=n.min(max)).rev() {
                prefix.push(k);
                go(n - k, k, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out
    }

    fn grow_row(&mut self, r: usize) {
        if r == self.parts.len() + 1 {
            self.parts.push(1);
        } else {
            self.parts[r - 1] += 1;
        }
    }

    fn shrink_row(&mut self, r: usize) {
        self.parts[r - 1] -= 1;
        if self.parts[r - 1] == 0 {
            self.parts.pop();
        }
    }

    fn is_addable_row(&self, r: usize) -> bool {
        r >= 1 && r <= self.len() + 1 && (r == 1 || self.row(r - 1) > self.row(r))
    }

    fn is_removable_row(&self, r: usize) -> bool {
        r >= 1 && r <= self.len() && self.row(r) > self.row(r + 1)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "∅");
        }
        let parts: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Comma-separated parts; `-`, `∅` or the empty string for the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
        if s.is_empty() || s == "-" || s == "∅" {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad part {t:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// A box `[row, col, comp]` of a Young diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "[usize; 3]", into = "[usize; 3]")]
pub struct Node {
    pub row: usize,
    pub col: usize,
    pub comp: usize,
}

impl Node {
    pub fn new(row: usize, col: usize, comp: usize) -> Self {
        Node { row, col, comp }
    }

    /// Strictly later in the (component, row) reading order.
    pub fn is_below(&self, other: &Node) -> bool {
        (self.comp, self.row) > (other.comp, other.row)
    }
}

impl Ord for Node {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.comp, self.row, self.col).cmp(&(other.comp, other.row, other.col))
    }
}

impl PartialOrd for Node {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<[usize; 3]> for Node {
    fn from([row, col, comp]: [usize; 3]) -> Self {
        Node { row, col, comp }
    }
}

impl From<Node> for [usize; 3] {
    fn from(n: Node) -> Self {
        [n.row, n.col, n.comp]
    }
}

impl fmt::Display for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{},{}]", self.row, self.col, self.comp)
    }
}

/// An l-tuple of partitions.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct MultiPartition {
    components: Vec<Partition>,
}

impl MultiPartition {
    pub fn new(components: Vec<Partition>) -> Self {
        MultiPartition { components }
    }

    pub fn single(p: Partition) -> Self {
        MultiPartition { components: vec![p] }
    }

    pub fn pair(lambda: Partition, mu: Partition) -> Self {
        MultiPartition { components: vec![lambda, mu] }
    }

    pub fn empty(level: usize) -> Self {
        MultiPartition { components: vec![Partition::empty(); level] }
    }

    pub fn level(&self) -> usize {
        self.components.len()
    }

    pub fn size(&self) -> usize {
        self.components.iter().map(Partition::size).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.components.iter().all(Partition::is_empty)
    }

    pub fn components(&self) -> &[Partition] {
        &self.components
    }

    /// Component `m`, 1-based.
    pub fn component(&self, m: usize) -> &Partition {
        &self.components[m - 1]
    }

    pub fn into_components(self) -> Vec<Partition> {
        self.components
    }

    pub fn contains_node(&self, node: &Node) -> bool {
        node.comp >= 1
            && node.comp <= self.level()
            && self.components[node.comp - 1].contains_cell(node.row, node.col)
    }

    pub fn contains(&self, other: &MultiPartition) -> bool {
        self.level() == other.level()
            && self.components.iter().zip(&other.components).all(|(a, b)| a.contains(b))
    }

    /// All nodes of the diagram in reading order.
    pub fn nodes(&self) -> Vec<Node> {
        let mut out = Vec::with_capacity(self.size());
        for (m, p) in self.components.iter().enumerate() {
            for (r, &len) in p.parts().iter().enumerate() {
                out.extend((1..=len).map(|c| Node::new(r + 1, c, m + 1)));
            }
        }
        out
    }

    /// Every addable node, in reading order.
    pub fn addable(&self) -> Vec<Node> {
        let mut out = Vec::new();
        for (m, p) in self.components.iter().enumerate() {
            for r in 1..=p.len() + 1 {
                if p.is_addable_row(r) {
                    out.push(Node::new(r, p.row(r) + 1, m + 1));
                }
            }
        }
        out
    }

    /// Every removable node, in reading order.
    pub fn removable(&self) -> Vec<Node> {
        let mut out = Vec::new();
        for (m, p) in self.components.iter().enumerate() {
            for r in 1..=p.len() {
                if p.is_removable_row(r) {
                    out.push(Node::new(r, p.row(r), m + 1));
                }
            }
        }
        out
    }

    pub fn is_addable(&self, node: &Node) -> bool {
        node.comp >= 1
            && node.comp <= self.level()
            && self.components[node.comp - 1].is_addable_row(node.row)
            && self.components[node.comp - 1].row(node.row) + 1 == node.col
    }

    pub fn is_removable(&self, node: &Node) -> bool {
        node.comp >= 1
            && node.comp <= self.level()
            && self.components[node.comp - 1].is_removable_row(node.row)
            && self.components[node.comp - 1].row(node.row) == node.col
    }

    pub fn with_node(&self, node: &Node) -> Result<MultiPartition> {
        if !self.is_addable(node) {
            return Err(Error::InvalidTableau(format!("{node} is not addable to {self}")));
        }
        let mut out = self.clone();
        out.push_node(node);
        Ok(out)
    }

    pub fn without_node(&self, node: &Node) -> Result<MultiPartition> {
        if !self.is_removable(node) {
            return Err(Error::NodeNotInDiagram(*node));
        }
        let mut out = self.clone();
        out.pop_node(node);
        Ok(out)
    }

    /// Unchecked in-place growth; caller guarantees `node` is addable.
    pub(crate) fn push_node(&mut self, node: &Node) {
        self.components[node.comp - 1].grow_row(node.row);
    }

    /// Unchecked in-place removal; caller guarantees `node` is removable.
    pub(crate) fn pop_node(&mut self, node: &Node) {
        self.components[node.comp - 1].shrink_row(node.row);
    }

    /// All l-partitions of `n`, sorted lexicographically on their part lists.
    pub fn all_of_size(n: usize, level: usize) -> Vec<MultiPartition> {
        fn go(n: usize, level: usize, prefix: &mut Vec<Partition>, out: &mut Vec<MultiPartition>) {
            if level == 1 {
                for p in Partition::all_of_size(n) {
                    prefix.push(p);
                    out.push(MultiPartition::new(prefix.clone()));
                    prefix.pop();
                }
                return;
            }
            for k in 0..=n {
                for p in Partition::all_of_size(k) {
                    prefix.push(p);
                    go(n - k, level - 1, prefix, out);
                    prefix.pop();
                }
            }
        }
        if level == 0 {
            return if n == 0 { vec![MultiPartition::empty(0)] } else { Vec::new() };
        }
        let mut out = Vec::new();
        go(n, level, &mut Vec::new(), &mut out);
        out.sort();
        out
    }
}

impl From<Partition> for MultiPartition {
    fn from(p: Partition) -> Self {
        MultiPartition::single(p)
    }
}

impl fmt::Display for MultiPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.level() == 1 {
            return write!(f, "{}", self.components[0]);
        }
        let parts: Vec<String> = self.components.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

impl FromStr for MultiPartition {
    type Err = Error;

    /// Components separated by `/`, each in [`Partition`]'s comma form.
    fn from_str(s: &str) -> Result<Self> {
        let components = s.split('/').map(str::parse).collect::<Result<Vec<Partition>>>()?;
        Ok(MultiPartition::new(components))
    }
}

/// The A- or C-residue of a node; the charge must have at least `node.comp` entries.
pub fn residue(weight: &DominantWeight, node: &Node) -> Residue {
    let kappa = weight.charge()[node.comp - 1];
    let r = kappa + node.col as i64 - node.row as i64;
    match weight.cartan() {
        CartanType::AInfinity => r,
        CartanType::CInfinity => r.abs(),
    }
}

pub fn content(weight: &DominantWeight, mp: &MultiPartition) -> RootVector {
    mp.nodes().iter().map(|n| residue(weight, n)).collect()
}

pub fn addable_nodes(mp: &MultiPartition, weight: &DominantWeight, i: Residue) -> Vec<Node> {
    mp.addable().into_iter().filter(|n| residue(weight, n) == i).collect()
}

pub fn removable_nodes(mp: &MultiPartition, weight: &DominantWeight, i: Residue) -> Vec<Node> {
    mp.removable().into_iter().filter(|n| residue(weight, n) == i).collect()
}

/// Dominance order on l-partitions of the same size and level.
pub fn dominates(a: &MultiPartition, b: &MultiPartition) -> Result<bool> {
    if a.level() != b.level() {
        return Err(Error::LevelMismatch { expected: a.level(), found: b.level() });
    }
    if a.size() != b.size() {
        return Err(Error::SizeMismatch { left: a.size(), right: b.size() });
    }
    let (mut before_a, mut before_b) = (0usize, 0usize);
    for (pa, pb) in a.components().iter().zip(b.components()) {
        let rows = pa.len().max(pb.len());
        let (mut sa, mut sb) = (before_a, before_b);
        for r in 1..=rows {
            sa += pa.row(r);
            sb += pb.row(r);
            if sa < sb {
                return Ok(false);
            }
        }
        before_a += pa.size();
        before_b += pb.size();
    }
    Ok(true)
}

/// `rho + lambda` for a 1-partition, or `rho + (lambda, mu)` for a bipartition.
///
/// In the bipartition case `mu` is appended below the rectangle and must fit
/// under it, i.e. `mu_1 <= width(rho)`.
pub fn rect_add(rho: &Partition, x: &MultiPartition) -> Result<Partition> {
    let (width, height) = rho.as_rectangle().ok_or_else(|| Error::NotRectangle(rho.parts().to_vec()))?;
    let (lambda, mu) = match x.components() {
        [lambda] => (lambda, None),
        [lambda, mu] => (lambda, Some(mu)),
        _ => return Err(Error::LevelMismatch { expected: 2, found: x.level() }),
    };
    if lambda.len() > height {
        return Err(Error::RectAdd(format!("{lambda} has more rows than {rho}")));
    }
    let mut parts: Vec<usize> = (1..=height).map(|r| width + lambda.row(r)).collect();
    if let Some(mu) = mu {
        if mu.row(1) > width {
            return Err(Error::RectAdd(format!("{mu} is wider than {rho}")));
        }
        parts.extend_from_slice(mu.parts());
    }
    Partition::new(parts)
}

/// Inverse of `nu = rho + (lambda, mu')`: returns `(lambda, mu)`.
pub fn rect_split(nu: &Partition, rho: &Partition) -> Result<(Partition, Partition)> {
    let (width, height) = rho.as_rectangle().ok_or_else(|| Error::NotRectangle(rho.parts().to_vec()))?;
    if !nu.contains(rho) {
        return Err(Error::NotInBlockShape(format!("{rho} is not contained in {nu}")));
    }
    if nu.row(height + 1) > width {
        return Err(Error::NotInBlockShape(format!("row {} of {nu} is wider than {rho}", height + 1)));
    }
    let lambda = Partition::new((1..=height).map(|r| nu.row(r) - width).collect())?;
    let below = Partition::new(nu.parts().iter().skip(height).copied().collect())?;
    Ok((lambda, below.conjugate()))
}

/// All l-partitions of `ht(beta)` with the given content, lexicographically sorted.
pub fn enumerate_block(weight: &DominantWeight, beta: &RootVector) -> Vec<MultiPartition> {
    MultiPartition::all_of_size(beta.height(), weight.level())
        .into_iter()
        .filter(|mp| &content(weight, mp) == beta)
        .collect()
}

/// Every l-partition of `n` grouped by content.
pub fn blocks_of_size(weight: &DominantWeight, n: usize) -> BTreeMap<RootVector, Vec<MultiPartition>> {
    let mut out: BTreeMap<RootVector, Vec<MultiPartition>> = BTreeMap::new();
    for mp in MultiPartition::all_of_size(n, weight.level()) {
        out.entry(content(weight, &mp)).or_default().push(mp);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn c0() -> DominantWeight {
        DominantWeight::type_c(0).unwrap()
    }

    #[test]
    fn residues() {
        assert_eq!(residue(&c0(), &Node::new(1, 1, 1)), 0);
        assert_eq!(residue(&c0(), &Node::new(2, 1, 1)), 1);
        assert_eq!(residue(&c0(), &Node::new(1, 7, 1)), 6);
        let a44 = DominantWeight::type_a(vec![4, 4]);
        assert_eq!(residue(&a44, &Node::new(1, 1, 2)), 4);
    }

    #[test]
    fn contents() {
        assert_eq!(content(&c0(), &p(&[2, 1]).into()), RootVector::from_iter([0, 1, 1]));
        assert!(content(&c0(), &Partition::empty().into()).is_zero());
        let a11 = DominantWeight::type_a(vec![1, 1]);
        let bp = MultiPartition::pair(p(&[1]), p(&[1]));
        assert_eq!(content(&a11, &bp), RootVector::from_iter([1, 1]));
    }

    #[test]
    fn addable_removable() {
        let two: MultiPartition = p(&[2]).into();
        assert_eq!(removable_nodes(&two, &c0(), 1), vec![Node::new(1, 2, 1)]);
        assert_eq!(addable_nodes(&two, &c0(), 1), vec![Node::new(2, 1, 1)]);
        assert_eq!(addable_nodes(&MultiPartition::empty(1), &c0(), 0), vec![Node::new(1, 1, 1)]);
    }

    #[test]
    fn dominance_examples() {
        let a: MultiPartition = p(&[2, 1]).into();
        let b: MultiPartition = p(&[1, 1, 1]).into();
        assert!(dominates(&a, &b).unwrap());
        let x = MultiPartition::pair(p(&[1]), p(&[1]));
        assert!(dominates(&x, &x).unwrap());
        let lo = MultiPartition::pair(Partition::empty(), p(&[2]));
        let hi = MultiPartition::pair(p(&[2]), Partition::empty());
        assert!(!dominates(&lo, &hi).unwrap());
        assert!(dominates(&hi, &lo).unwrap());
        assert!(matches!(dominates(&a, &x), Err(Error::LevelMismatch { .. })));
        assert!(matches!(dominates(&a, &p(&[1]).into()), Err(Error::SizeMismatch { .. })));
    }

    #[test]
    fn conjugates() {
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p(&[2, 2]).conjugate(), p(&[2, 2]));
        for n in 0..=12 {
            for q in Partition::all_of_size(n) {
                assert_eq!(q.conjugate().conjugate(), q);
            }
        }
    }

    #[test]
    fn rect_add_examples() {
        let rho = Partition::rectangle(4, 4);
        let x = MultiPartition::pair(p(&[3, 2, 1]), Partition::empty());
        assert_eq!(rect_add(&rho, &x).unwrap(), p(&[7, 6, 5, 4]));
        assert_eq!(rect_add(&p(&[1]), &MultiPartition::empty(2)).unwrap(), p(&[1]));
        assert_eq!(rect_add(&p(&[1]), &MultiPartition::pair(p(&[1]), p(&[1]))).unwrap(), p(&[2, 1]));
        assert_eq!(rect_add(&p(&[2, 2]), &p(&[1]).into()).unwrap(), p(&[3, 2]));
    }

    #[test]
    fn rect_add_rejects() {
        let too_wide = MultiPartition::pair(Partition::empty(), p(&[2]));
        assert!(matches!(rect_add(&p(&[1]), &too_wide), Err(Error::RectAdd(_))));
        let too_long = MultiPartition::pair(p(&[1, 1]), Partition::empty());
        assert!(matches!(rect_add(&p(&[1]), &too_long), Err(Error::RectAdd(_))));
        assert!(matches!(rect_add(&p(&[2, 1]), &MultiPartition::empty(2)), Err(Error::NotRectangle(_))));
    }

    #[test]
    fn rect_split_examples() {
        let (l, m) = rect_split(&p(&[7, 6, 5, 4]), &Partition::rectangle(4, 4)).unwrap();
        assert_eq!((l, m), (p(&[3, 2, 1]), Partition::empty()));
        let (l, m) = rect_split(&p(&[2, 1]), &p(&[1])).unwrap();
        assert_eq!((l, m), (p(&[1]), p(&[1])));
        let (l, m) = rect_split(&p(&[3, 3]), &p(&[3, 3])).unwrap();
        assert!(l.is_empty() && m.is_empty());
        assert!(matches!(rect_split(&p(&[1]), &p(&[2])), Err(Error::NotInBlockShape(_))));
        assert!(rect_split(&p(&[1, 1]), &p(&[1])).is_ok());
        assert!(matches!(rect_split(&p(&[2, 2]), &p(&[1])), Err(Error::NotInBlockShape(_))));
    }

    #[test]
    fn rect_split_inverts_rect_add() {
        for n in 0..=12 {
            for nu in Partition::all_of_size(n) {
                for w in 1..=nu.row(1) {
                    for h in 1..=nu.len() {
                        let rho = Partition::rectangle(w, h);
                        if let Ok((lambda, mu)) = rect_split(&nu, &rho) {
                            let back = rect_add(&rho, &MultiPartition::pair(lambda, mu.conjugate())).unwrap();
                            assert_eq!(back, nu);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn enumerate_block_examples() {
        let b = enumerate_block(&c0(), &RootVector::from_iter([0, 1, 1]));
        assert_eq!(b, vec![MultiPartition::from(p(&[2, 1]))]);
        let a11 = DominantWeight::type_a(vec![1, 1]);
        let b = enumerate_block(&a11, &RootVector::from_iter([1, 1]));
        assert_eq!(b, vec![MultiPartition::pair(p(&[1]), p(&[1]))]);
        assert!(enumerate_block(&c0(), &RootVector::from_iter([1, 1])).is_empty());
    }

    #[test]
    fn multipartition_counts() {
        // number of bipartitions of n: 1, 2, 5, 10, 20, 36
        let counts: Vec<usize> = (0..6).map(|n| MultiPartition::all_of_size(n, 2).len()).collect();
        assert_eq!(counts, vec![1, 2, 5, 10, 20, 36]);
        let all = MultiPartition::all_of_size(5, 2);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn parsing() {
        assert_eq!("3,2,1".parse::<Partition>().unwrap(), p(&[3, 2, 1]));
        assert_eq!("-".parse::<Partition>().unwrap(), Partition::empty());
        assert!("1,2".parse::<Partition>().is_err());
        let bp: MultiPartition = "3,2,1/∅".parse().unwrap();
        assert_eq!(bp, MultiPartition::pair(p(&[3, 2, 1]), Partition::empty()));
        assert_eq!(serde_json::to_string(&bp).unwrap(), "[[3,2,1],[]]");
        assert_eq!(serde_json::to_string(&Node::new(1, 2, 1)).unwrap(), "[1,2,1]");
        assert!(serde_json::from_str::<Partition>("[1,3]").is_err());
    }
}
