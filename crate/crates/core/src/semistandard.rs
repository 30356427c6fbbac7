//! Semistandard tableaux of shape `rho + lambda` that are constant on the
//! rho-part and on the lambda-part of every row.
//!
//! Such a tableau is a labelling of the row pieces ("segments") by
//! `1..=l(rho) + l(lambda)`, each label used once. Columns force the
//! rho-labels and the lambda-labels to increase downwards, and the rho-piece
//! of a row to come before its lambda-piece.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cartan::{DominantWeight, Residue};
use crate::error::{Error, Result};
use crate::partitions::{rect_add, residue, MultiPartition, Node, Partition};
use crate::tableaux::{y_exponents, StandardTableau};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "SemistandardRepr", into = "SemistandardRepr")]
pub struct SemistandardTableauPlus {
    rho: Partition,
    lambda: Partition,
    rho_labels: Vec<usize>,
    lambda_labels: Vec<usize>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SemistandardRepr {
    pub shape: Partition,
    pub fill: Vec<Vec<usize>>,
}

/// Which piece of a row a segment occupies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Piece {
    Rho(usize),
    Lambda(usize),
}

fn check_shapes(rho: &Partition, lambda: &Partition) -> Result<(usize, usize)> {
    let (width, height) = rho.as_rectangle().ok_or_else(|| Error::NotRectangle(rho.parts().to_vec()))?;
    if rho.is_empty() {
        return Err(Error::InvalidSemistandard("rho must be non-empty".into()));
    }
    if lambda.len() > height {
        return Err(Error::InvalidSemistandard(format!("l({lambda}) exceeds l({rho})")));
    }
    Ok((width, height))
}

impl SemistandardTableauPlus {
    pub fn new(rho: Partition, lambda: Partition, rho_labels: Vec<usize>, lambda_labels: Vec<usize>) -> Result<Self> {
        let (_, height) = check_shapes(&rho, &lambda)?;
        if rho_labels.len() != height || lambda_labels.len() != lambda.len() {
            return Err(Error::InvalidSemistandard("one label per row piece is required".into()));
        }
        let t = SemistandardTableauPlus { rho, lambda, rho_labels, lambda_labels };
        let ell = t.segments();
        let mut seen = vec![false; ell];
        for &l in t.rho_labels.iter().chain(&t.lambda_labels) {
            if l == 0 || l > ell || std::mem::replace(&mut seen[l - 1], true) {
                return Err(Error::InvalidSemistandard(format!("labels must be a bijection onto 1..={ell}")));
            }
        }
        if !t.is_semistandard() {
            return Err(Error::InvalidSemistandard(format!("{t} is not semistandard")));
        }
        Ok(t)
    }

    /// `T^{rho+lambda}`: labels run along successive rows.
    pub fn row_initial(rho: &Partition, lambda: &Partition) -> Result<Self> {
        let (_, height) = check_shapes(rho, lambda)?;
        let mut next = 1..;
        let mut rho_labels = Vec::new();
        let mut lambda_labels = Vec::new();
        for r in 1..=height {
            rho_labels.push(next.next().unwrap());
            if lambda.row(r) > 0 {
                lambda_labels.push(next.next().unwrap());
            }
        }
        Self::new(rho.clone(), lambda.clone(), rho_labels, lambda_labels)
    }

    /// `T_{rho+lambda}`: labels run down successive columns, so every rho
    /// piece precedes every lambda piece.
    pub fn column_initial(rho: &Partition, lambda: &Partition) -> Result<Self> {
        let (_, height) = check_shapes(rho, lambda)?;
        let rho_labels = (1..=height).collect();
        let lambda_labels = (height + 1..=height + lambda.len()).collect();
        Self::new(rho.clone(), lambda.clone(), rho_labels, lambda_labels)
    }

    pub fn rho(&self) -> &Partition {
        &self.rho
    }

    pub fn lambda(&self) -> &Partition {
        &self.lambda
    }

    /// `l(rho) + l(lambda)`.
    pub fn segments(&self) -> usize {
        self.rho.len() + self.lambda.len()
    }

    pub fn shape(&self) -> Partition {
        rect_add(&self.rho, &MultiPartition::single(self.lambda.clone())).expect("validated at construction")
    }

    fn width(&self) -> usize {
        self.rho.row(1)
    }

    pub fn label(&self, node: &Node) -> usize {
        if node.col <= self.width() {
            self.rho_labels[node.row - 1]
        } else {
            self.lambda_labels[node.row - 1]
        }
    }

    pub fn fill(&self) -> Vec<Vec<usize>> {
        let shape = self.shape();
        (1..=shape.len())
            .map(|r| (1..=shape.row(r)).map(|c| self.label(&Node::new(r, c, 1))).collect())
            .collect()
    }

    fn is_semistandard(&self) -> bool {
        let fill = self.fill();
        let rows_ok = fill.iter().all(|row| row.windows(2).all(|w| w[0] <= w[1]));
        let cols_ok = fill.windows(2).all(|pair| pair[1].iter().zip(&pair[0]).all(|(below, above)| above < below));
        rows_ok && cols_ok
    }

    pub fn piece(&self, k: usize) -> Result<Piece> {
        if let Some(r) = self.rho_labels.iter().position(|&l| l == k) {
            return Ok(Piece::Rho(r + 1));
        }
        if let Some(r) = self.lambda_labels.iter().position(|&l| l == k) {
            return Ok(Piece::Lambda(r + 1));
        }
        Err(Error::InvalidSegment { k, max: self.segments() })
    }

    /// `T^{-1}(k)`, ordered left to right.
    pub fn segment(&self, k: usize) -> Result<Vec<Node>> {
        let width = self.width();
        Ok(match self.piece(k)? {
            Piece::Rho(r) => (1..=width).map(|c| Node::new(r, c, 1)).collect(),
            Piece::Lambda(r) => (width + 1..=width + self.lambda.row(r)).map(|c| Node::new(r, c, 1)).collect(),
        })
    }

    /// `s_k T`: exchanges labels `k` and `k + 1`, if the result is still semistandard.
    pub fn swap(&self, k: usize) -> Option<Self> {
        if k == 0 || k >= self.segments() {
            return None;
        }
        let flip = |l: usize| if l == k { k + 1 } else if l == k + 1 { k } else { l };
        Self::new(
            self.rho.clone(),
            self.lambda.clone(),
            self.rho_labels.iter().map(|&l| flip(l)).collect(),
            self.lambda_labels.iter().map(|&l| flip(l)).collect(),
        )
        .ok()
    }
}

impl fmt::Display for SemistandardTableauPlus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .fill()
            .iter()
            .map(|row| row.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(" "))
            .collect();
        write!(f, "[{}]", rows.join(" | "))
    }
}

impl TryFrom<SemistandardRepr> for SemistandardTableauPlus {
    type Error = Error;

    fn try_from(repr: SemistandardRepr) -> Result<Self> {
        let shape = repr.shape;
        let first = repr.fill.first().ok_or_else(|| Error::InvalidSemistandard("empty fill".into()))?;
        let width = first.iter().take_while(|&&l| l == first[0]).count();
        let lambda = Partition::new(
            shape
                .parts()
                .iter()
                .map(|&p| p.checked_sub(width).ok_or_else(|| Error::InvalidSemistandard("ragged rho part".into())))
                .collect::<Result<Vec<_>>>()?,
        )?;
        let rho = Partition::rectangle(width, shape.len());
        let rho_labels = repr.fill.iter().map(|row| row[0]).collect();
        let lambda_labels = repr.fill.iter().take(lambda.len()).map(|row| row[width]).collect();
        let t = SemistandardTableauPlus::new(rho, lambda, rho_labels, lambda_labels)?;
        if t.shape() != shape || t.fill() != repr.fill {
            return Err(Error::InvalidSemistandard("fill is not constant on row pieces".into()));
        }
        Ok(t)
    }
}

impl From<SemistandardTableauPlus> for SemistandardRepr {
    fn from(t: SemistandardTableauPlus) -> Self {
        SemistandardRepr { shape: t.shape(), fill: t.fill() }
    }
}

/// All of `SStd_+(rho + lambda)`.
pub fn enumerate_sstd_plus(rho: &Partition, lambda: &Partition) -> Result<Vec<SemistandardTableauPlus>> {
    let (_, height) = check_shapes(rho, lambda)?;
    let depth = lambda.len();
    let mut out = Vec::new();
    let mut rho_labels = Vec::with_capacity(height);
    let mut lambda_labels = Vec::with_capacity(depth);

    fn go(
        next: usize,
        height: usize,
        depth: usize,
        rho_labels: &mut Vec<usize>,
        lambda_labels: &mut Vec<usize>,
        out: &mut Vec<(Vec<usize>, Vec<usize>)>,
    ) {
        if rho_labels.len() == height && lambda_labels.len() == depth {
            out.push((rho_labels.clone(), lambda_labels.clone()));
            return;
        }
        if rho_labels.len() < height {
            rho_labels.push(next);
            go(next + 1, height, depth, rho_labels, lambda_labels, out);
            rho_labels.pop();
        }
        if lambda_labels.len() < depth && lambda_labels.len() < rho_labels.len() {
            lambda_labels.push(next);
            go(next + 1, height, depth, rho_labels, lambda_labels, out);
            lambda_labels.pop();
        }
    }

    let mut raw = Vec::new();
    go(1, height, depth, &mut rho_labels, &mut lambda_labels, &mut raw);
    for (r, l) in raw {
        out.push(SemistandardTableauPlus::new(rho.clone(), lambda.clone(), r, l)?);
    }
    Ok(out)
}

/// `phi(T)`: number segment 1 left to right, then segment 2, and so on.
pub fn standardize(t: &SemistandardTableauPlus) -> StandardTableau {
    let nodes = (1..=t.segments()).flat_map(|k| t.segment(k).expect("labels are 1..=segments")).collect();
    StandardTableau::from_nodes(MultiPartition::single(t.shape()), nodes).expect("phi(T) is standard")
}

/// `w^T_S` on labels: the permutation with `w S = T`.
pub fn label_permutation(s: &SemistandardTableauPlus, t: &SemistandardTableauPlus) -> Vec<usize> {
    let mut w = vec![0; s.segments()];
    for (ls, lt) in s.rho_labels.iter().zip(&t.rho_labels).chain(s.lambda_labels.iter().zip(&t.lambda_labels)) {
        w[ls - 1] = *lt;
    }
    w
}

/// The permutation of strands taking `phi(S)` to `phi(T)`.
pub fn strand_permutation(s: &SemistandardTableauPlus, t: &SemistandardTableauPlus) -> Vec<usize> {
    let (ps, pt) = (standardize(s), standardize(t));
    let mut w = vec![0; ps.size()];
    for (k, node) in ps.nodes().iter().enumerate() {
        w[k] = pt.entry(node).expect("same shape");
    }
    w
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SegmentData {
    pub k: usize,
    pub residues: Vec<Residue>,
    pub ydeg: u32,
}

/// Residues of `T^{-1}(k)` left to right, and the sum of the y-exponents of
/// `phi(T)` over those nodes.
pub fn segment_data(t: &SemistandardTableauPlus, k: usize, weight: &DominantWeight) -> Result<SegmentData> {
    let nodes = t.segment(k)?;
    let phi = standardize(t);
    let exps = y_exponents(&phi, weight);
    let residues = nodes.iter().map(|n| residue(weight, n)).collect();
    let ydeg = nodes.iter().map(|n| exps[phi.entry(n).unwrap() - 1]).sum();
    Ok(SegmentData { k, residues, ydeg })
}

/// No residue of one list equals or neighbours a residue of the other.
pub fn segments_well_separated(r1: &[Residue], r2: &[Residue]) -> bool {
    r1.iter().all(|a| r2.iter().all(|b| (a - b).abs() > 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn trivial_rho() {
        let all = enumerate_sstd_plus(&p("1"), &Partition::empty()).unwrap();
        assert_eq!(all.len(), 1);
        let w = DominantWeight::type_c(0).unwrap();
        let seg = segment_data(&all[0], 1, &w).unwrap();
        assert_eq!((seg.residues, seg.ydeg), (vec![0], 0));
    }

    #[test]
    fn distinguished_tableaux() {
        let rho = Partition::rectangle(4, 4);
        let lambda = p("3,2,1");
        let row = SemistandardTableauPlus::row_initial(&rho, &lambda).unwrap();
        assert_eq!(row.rho_labels, vec![1, 3, 5, 7]);
        assert_eq!(row.lambda_labels, vec![2, 4, 6]);
        let col = SemistandardTableauPlus::column_initial(&rho, &lambda).unwrap();
        assert_eq!(col.rho_labels, vec![1, 2, 3, 4]);
        assert_eq!(col.lambda_labels, vec![5, 6, 7]);
        let all = enumerate_sstd_plus(&rho, &lambda).unwrap();
        assert!(all.contains(&row) && all.contains(&col));
    }

    #[test]
    fn standardize_square() {
        let rho = p("2,2");
        let t = SemistandardTableauPlus::row_initial(&rho, &Partition::empty()).unwrap();
        assert_eq!(standardize(&t), crate::tableaux::initial_tableau(&MultiPartition::single(rho)));
    }

    #[test]
    fn rejects_bad_input() {
        assert!(enumerate_sstd_plus(&p("2,1"), &Partition::empty()).is_err());
        assert!(enumerate_sstd_plus(&p("1"), &p("1,1")).is_err());
        assert!(SemistandardTableauPlus::new(p("1,1"), Partition::empty(), vec![2, 1], vec![]).is_err());
        let t = SemistandardTableauPlus::row_initial(&p("1"), &Partition::empty()).unwrap();
        assert!(matches!(t.segment(2), Err(Error::InvalidSegment { k: 2, max: 1 })));
    }

    #[test]
    fn well_separated() {
        assert!(segments_well_separated(&[0, 1], &[3, 4]));
        assert!(!segments_well_separated(&[0, 1], &[2]));
        assert!(!segments_well_separated(&[5], &[5]));
    }

    #[test]
    fn json_round_trip() {
        let t = SemistandardTableauPlus::row_initial(&Partition::rectangle(3, 3), &p("2,1")).unwrap();
        let json = serde_json::to_string(&t).unwrap();
        assert_eq!(json, r#"{"shape":[5,4,3],"fill":[[1,1,1,2,2],[3,3,3,4],[5,5,5]]}"#);
        let back: SemistandardTableauPlus = serde_json::from_str(&json).unwrap();
        assert_eq!(back, t);
        let ragged = r#"{"shape":[3,3],"fill":[[1,1,2],[3,3,3]]}"#;
        assert!(serde_json::from_str::<SemistandardTableauPlus>(ragged).is_err());
    }
}
