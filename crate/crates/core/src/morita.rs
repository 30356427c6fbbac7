//! The bridge between a level-one type C block and a level-two type A block:
//! block data, the bijection `(lambda, mu) -> rho + (lambda, mu')`, the
//! induced tableau correspondence, and a battery of checks.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::cartan::{CartanType, DominantWeight, Residue, RootVector};
use crate::crystal::{cogood_path, factors_through, is_kleshchev};
use crate::error::{Error, Result};
use crate::graded::{gdim_factorizable, gdim_specht, LaurentPoly};
use crate::partitions::{blocks_of_size, content, dominates, enumerate_block, rect_add, rect_split, MultiPartition, Node, Partition};
use crate::tableaux::{count_standard, for_each_factorizable, StandardTableau};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockBridge {
    pub kappa_c: Residue,
    pub beta: RootVector,
    pub a0: usize,
    pub rho: Partition,
    pub omega: RootVector,
    pub kappa1: Residue,
    pub kappa2: Residue,
}

pub fn bridge(kappa_c: Residue, beta: &RootVector) -> Result<BlockBridge> {
    let weight = DominantWeight::type_c(kappa_c)?;
    if let Some((label, _)) = beta.iter().find(|&(i, _)| !CartanType::CInfinity.is_valid_label(i)) {
        return Err(Error::InvalidLabel { cartan: CartanType::CInfinity, label });
    }
    let a0 = beta.get(0) as usize;
    if a0 == 0 {
        return Err(Error::NoZeroNodes);
    }
    let rho = Partition::rectangle(a0, kappa_c as usize + a0);
    let omega = content(&weight, &MultiPartition::single(rho.clone()));
    if !omega.le(beta) {
        return Err(Error::OmegaNotInBeta { omega: omega.to_string(), beta: beta.to_string() });
    }
    Ok(BlockBridge {
        kappa_c,
        beta: beta.clone(),
        a0,
        rho,
        omega,
        kappa1: kappa_c + a0 as Residue,
        kappa2: a0 as Residue,
    })
}

impl BlockBridge {
    pub fn weight_c(&self) -> DominantWeight {
        DominantWeight::type_c(self.kappa_c).expect("validated at construction")
    }

    pub fn weight_a(&self) -> DominantWeight {
        DominantWeight::type_a(vec![self.kappa1, self.kappa2])
    }

    /// `beta - omega`, the content of the type A side.
    pub fn beta_rest(&self) -> RootVector {
        self.beta.sub(&self.omega).expect("omega <= beta")
    }

    pub fn c_block(&self) -> Vec<Partition> {
        enumerate_block(&self.weight_c(), &self.beta)
            .into_iter()
            .map(|mp| mp.into_components().remove(0))
            .collect()
    }

    pub fn a_block(&self) -> Vec<MultiPartition> {
        enumerate_block(&self.weight_a(), &self.beta_rest())
    }
}

pub fn to_type_c(bp: &MultiPartition, bridge: &BlockBridge) -> Result<Partition> {
    if bp.level() != 2 {
        return Err(Error::LevelMismatch { expected: 2, found: bp.level() });
    }
    let rest = bridge.beta_rest();
    if content(&bridge.weight_a(), bp) != rest {
        return Err(Error::NotInBlock { shape: bp.to_string(), block: rest.to_string() });
    }
    let (lambda, mu) = (bp.component(1), bp.component(2));
    rect_add(&bridge.rho, &MultiPartition::pair(lambda.clone(), mu.conjugate()))
}

pub fn from_type_c(nu: &Partition, bridge: &BlockBridge) -> Result<MultiPartition> {
    if content(&bridge.weight_c(), &MultiPartition::single(nu.clone())) != bridge.beta {
        return Err(Error::NotInBlock { shape: nu.to_string(), block: bridge.beta.to_string() });
    }
    let (lambda, mu) = rect_split(nu, &bridge.rho)?;
    Ok(MultiPartition::pair(lambda, mu))
}

fn place(node: &Node, bridge: &BlockBridge) -> Node {
    match node.comp {
        1 => Node::new(node.row, bridge.a0 + node.col, 1),
        _ => Node::new(bridge.rho.len() + node.col, node.row, 1),
    }
}

/// The `nu`-tableau holding `s` on `rho` followed by `u` placed on `nu / rho`.
pub fn tableau_to_type_c(s: &StandardTableau, u: &StandardTableau, bridge: &BlockBridge) -> Result<StandardTableau> {
    if s.shape() != &MultiPartition::single(bridge.rho.clone()) {
        return Err(Error::NotInBlockShape(format!("{} is not {}", s.shape(), bridge.rho)));
    }
    let nu = to_type_c(u.shape(), bridge)?;
    let nodes = s.nodes().iter().copied().chain(u.nodes().iter().map(|n| place(n, bridge))).collect();
    StandardTableau::from_nodes(MultiPartition::single(nu), nodes)
}

/// Inverse of [`tableau_to_type_c`].
pub fn tableau_from_type_c(t: &StandardTableau, bridge: &BlockBridge) -> Result<(StandardTableau, StandardTableau)> {
    let nu = t.shape().component(1).clone();
    let bp = from_type_c(&nu, bridge)?;
    let head = bridge.rho.size();
    let s = StandardTableau::from_nodes(MultiPartition::single(bridge.rho.clone()), t.nodes()[..head].to_vec())
        .map_err(|_| Error::NotInBlockShape(format!("the first {head} entries do not fill {}", bridge.rho)))?;
    let width = bridge.a0;
    let height = bridge.rho.len();
    let unplaced = t.nodes()[head..]
        .iter()
        .map(|n| if n.row <= height { Node::new(n.row, n.col - width, 1) } else { Node::new(n.col, n.row - height, 2) })
        .collect();
    let u = StandardTableau::from_nodes(bp, unplaced)?;
    Ok((s, u))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Check {
    Count,
    Graded,
    Dominance,
    Kleshchev,
    Goodpath,
}

impl Check {
    pub const ALL: [Check; 5] = [Check::Count, Check::Graded, Check::Dominance, Check::Kleshchev, Check::Goodpath];
}

impl FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "count" => Ok(Check::Count),
            "graded" => Ok(Check::Graded),
            "dominance" => Ok(Check::Dominance),
            "kleshchev" => Ok(Check::Kleshchev),
            "goodpath" => Ok(Check::Goodpath),
            other => Err(Error::Parse(format!("unknown check {other:?}"))),
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Check::Count => "count",
            Check::Graded => "graded",
            Check::Dominance => "dominance",
            Check::Kleshchev => "kleshchev",
            Check::Goodpath => "goodpath",
        };
        f.write_str(name)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShapeCount {
    pub nu: Partition,
    pub bipartition: MultiPartition,
    pub lhs: u64,
    pub rhs: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountReport {
    pub pass: bool,
    /// `sum_nu |Std_{omega, beta - omega}(nu)|^2`.
    pub lhs: u64,
    /// `|Std(rho)|^2 * sum_(lambda, mu) |Std(lambda, mu)|^2`.
    pub rhs: u64,
    /// Whether the map is a bijection between the two blocks.
    pub bijective: bool,
    pub per_shape: Vec<ShapeCount>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShapeGraded {
    pub nu: Partition,
    pub bipartition: MultiPartition,
    pub lhs: LaurentPoly,
    pub rhs: LaurentPoly,
    pub shift: Option<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedReport {
    pub pass: bool,
    /// The common shift when every shape has the same one.
    pub shift: Option<i64>,
    /// First shape whose shift is missing or nonzero.
    pub witness: Option<Partition>,
    pub per_shape: Vec<ShapeGraded>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DominanceViolation {
    pub bipartitions: (MultiPartition, MultiPartition),
    pub images: (Partition, Partition),
    pub a_dominates: bool,
    pub c_dominates: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DominanceReport {
    /// No violation in either direction.
    pub pass: bool,
    /// Dominance on the A side implies dominance of the images.
    pub monotone: bool,
    pub violations: Vec<DominanceViolation>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KleshchevReport {
    pub pass: bool,
    pub a_kleshchev: Vec<MultiPartition>,
    pub c_kleshchev: Vec<Partition>,
    /// Images of the A-side Kleshchev set.
    pub images: Vec<Partition>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoodpathWitness {
    pub nu: Partition,
    pub word: Option<Vec<Residue>>,
    pub replays: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoodpathReport {
    pub pass: bool,
    pub witnesses: Vec<GoodpathWitness>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReports {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub count: Option<CountReport>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub graded: Option<GradedReport>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub dominance: Option<DominanceReport>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub kleshchev: Option<KleshchevReport>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub goodpath: Option<GoodpathReport>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BridgeReport {
    pub bridge: BlockBridge,
    pub checks: CheckReports,
}

impl CheckReports {
    pub fn pass(&self) -> bool {
        self.count.as_ref().is_none_or(|r| r.pass)
            && self.graded.as_ref().is_none_or(|r| r.pass)
            && self.dominance.as_ref().is_none_or(|r| r.pass)
            && self.kleshchev.as_ref().is_none_or(|r| r.pass)
            && self.goodpath.as_ref().is_none_or(|r| r.pass)
    }
}

impl BridgeReport {
    pub fn pass(&self) -> bool {
        self.checks.pass()
    }
}

/// The C block paired with the preimage of each shape, in C-block order.
/// Shapes without a preimage are paired with `None`.
fn paired_shapes(bridge: &BlockBridge) -> Vec<(Partition, Option<MultiPartition>)> {
    bridge.c_block().into_iter().map(|nu| {
        let bp = from_type_c(&nu, bridge).ok();
        (nu, bp)
    }).collect()
}

fn count_factorizable(nu: &Partition, bridge: &BlockBridge) -> u64 {
    let mut n = 0;
    for_each_factorizable(&MultiPartition::single(nu.clone()), &bridge.weight_c(), &bridge.omega, |_| n += 1);
    n
}

fn is_bijective(bridge: &BlockBridge, pairs: &[(Partition, Option<MultiPartition>)]) -> bool {
    let a_block = bridge.a_block();
    let mut preimages: Vec<MultiPartition> = pairs.iter().filter_map(|(_, bp)| bp.clone()).collect();
    preimages.sort();
    let images_ok = a_block
        .iter()
        .all(|bp| to_type_c(bp, bridge).is_ok_and(|nu| pairs.iter().any(|(c, _)| c == &nu)));
    pairs.iter().all(|(_, bp)| bp.is_some()) && preimages == a_block && images_ok
}

fn check_count(bridge: &BlockBridge, pairs: &[(Partition, Option<MultiPartition>)]) -> CountReport {
    let std_rho = count_standard(&MultiPartition::single(bridge.rho.clone()));
    let lhs = pairs.iter().map(|(nu, _)| count_factorizable(nu, bridge).pow(2)).sum();
    let a_total: u64 = bridge.a_block().iter().map(|bp| count_standard(bp).pow(2)).sum();
    let rhs = std_rho * std_rho * a_total;
    let per_shape: Vec<ShapeCount> = pairs
        .iter()
        .filter_map(|(nu, bp)| {
            let bp = bp.clone()?;
            Some(ShapeCount { nu: nu.clone(), lhs: count_factorizable(nu, bridge), rhs: std_rho * count_standard(&bp), bipartition: bp })
        })
        .collect();
    let bijective = is_bijective(bridge, pairs);
    let pass = bijective && lhs == rhs && per_shape.iter().all(|s| s.lhs == s.rhs);
    CountReport { pass, lhs, rhs, bijective, per_shape }
}

fn check_graded(bridge: &BlockBridge, pairs: &[(Partition, Option<MultiPartition>)]) -> GradedReport {
    let (wc, wa) = (bridge.weight_c(), bridge.weight_a());
    let rho_poly = gdim_specht(&MultiPartition::single(bridge.rho.clone()), &wc);
    let per_shape: Vec<ShapeGraded> = pairs
        .iter()
        .filter_map(|(nu, bp)| {
            let bp = bp.clone()?;
            let lhs = gdim_factorizable(&MultiPartition::single(nu.clone()), &wc, &bridge.omega);
            let rhs = &rho_poly * &gdim_specht(&bp, &wa);
            let shift = lhs.shift_from(&rhs);
            Some(ShapeGraded { nu: nu.clone(), bipartition: bp, lhs, rhs, shift })
        })
        .collect();
    let shifts: BTreeSet<Option<i64>> = per_shape.iter().map(|s| s.shift).collect();
    let shift = match shifts.iter().collect::<Vec<_>>()[..] {
        [only] => *only,
        [] => Some(0),
        _ => None,
    };
    let witness = per_shape.iter().find(|s| s.shift != Some(0)).map(|s| s.nu.clone());
    let complete = per_shape.len() == pairs.len();
    GradedReport { pass: complete && witness.is_none(), shift, witness, per_shape }
}

fn check_dominance(bridge: &BlockBridge) -> DominanceReport {
    let pairs: Vec<(MultiPartition, Partition)> = bridge
        .a_block()
        .into_iter()
        .filter_map(|bp| to_type_c(&bp, bridge).ok().map(|nu| (bp, nu)))
        .collect();
    let mut violations = Vec::new();
    for (x, fx) in &pairs {
        for (y, fy) in &pairs {
            if x == y {
                continue;
            }
            let a_dominates = dominates(x, y).unwrap_or(false);
            let c_dominates = dominates(&fx.clone().into(), &fy.clone().into()).unwrap_or(false);
            if a_dominates != c_dominates {
                violations.push(DominanceViolation {
                    bipartitions: (x.clone(), y.clone()),
                    images: (fx.clone(), fy.clone()),
                    a_dominates,
                    c_dominates,
                });
            }
        }
    }
    let monotone = violations.iter().all(|v| !v.a_dominates);
    DominanceReport { pass: violations.is_empty(), monotone, violations }
}

fn check_kleshchev(bridge: &BlockBridge) -> KleshchevReport {
    let (wc, wa) = (bridge.weight_c(), bridge.weight_a());
    let a_kleshchev: Vec<MultiPartition> = bridge.a_block().into_iter().filter(|bp| is_kleshchev(bp, &wa)).collect();
    let c_kleshchev: Vec<Partition> =
        bridge.c_block().into_iter().filter(|nu| is_kleshchev(&MultiPartition::single(nu.clone()), &wc)).collect();
    let mut images: Vec<Partition> = a_kleshchev.iter().filter_map(|bp| to_type_c(bp, bridge).ok()).collect();
    images.sort();
    let mut expected = c_kleshchev.clone();
    expected.sort();
    let pass = images.len() == a_kleshchev.len() && images == expected;
    KleshchevReport { pass, a_kleshchev, c_kleshchev, images }
}

/// Replays `word` as cogood additions from the empty partition, requiring
/// the walk to pass through `rho` after `|rho|` steps and end at `nu`.
pub fn replay_witness(word: &[Residue], nu: &Partition, bridge: &BlockBridge) -> bool {
    let weight = bridge.weight_c();
    let head = bridge.rho.size();
    if word.len() != nu.size() || word.len() < head {
        return false;
    }
    let Ok(mid) = cogood_path(&MultiPartition::empty(1), &word[..head], &weight) else {
        return false;
    };
    if mid != MultiPartition::single(bridge.rho.clone()) {
        return false;
    }
    cogood_path(&mid, &word[head..], &weight).is_ok_and(|end| end == MultiPartition::single(nu.clone()))
}

fn check_goodpath(bridge: &BlockBridge) -> GoodpathReport {
    let wc = bridge.weight_c();
    let witnesses: Vec<GoodpathWitness> = bridge
        .c_block()
        .into_iter()
        .filter(|nu| is_kleshchev(&MultiPartition::single(nu.clone()), &wc))
        .map(|nu| {
            let word = factors_through(&nu, &bridge.rho, &wc);
            let replays = word.as_ref().is_some_and(|w| replay_witness(w, &nu, bridge));
            GoodpathWitness { nu, word, replays }
        })
        .collect();
    GoodpathReport { pass: witnesses.iter().all(|w| w.replays), witnesses }
}

pub fn verify_bridge(bridge: &BlockBridge, checks: &[Check]) -> BridgeReport {
    let pairs = paired_shapes(bridge);
    let wanted: BTreeSet<Check> = checks.iter().copied().collect();
    let mut reports = CheckReports::default();
    for check in wanted {
        match check {
            Check::Count => reports.count = Some(check_count(bridge, &pairs)),
            Check::Graded => reports.graded = Some(check_graded(bridge, &pairs)),
            Check::Dominance => reports.dominance = Some(check_dominance(bridge)),
            Check::Kleshchev => reports.kleshchev = Some(check_kleshchev(bridge)),
            Check::Goodpath => reports.goodpath = Some(check_goodpath(bridge)),
        }
    }
    BridgeReport { bridge: bridge.clone(), checks: reports }
}

/// Bridges for every type C block with `a0 >= 1` and height at most
/// `max_n`, by height and then by content.
pub fn c_blocks(kappa_c: Residue, max_n: usize) -> Result<Vec<BlockBridge>> {
    let weight = DominantWeight::type_c(kappa_c)?;
    let mut out = Vec::new();
    for n in 1..=max_n {
        for beta in blocks_of_size(&weight, n).into_keys() {
            if beta.get(0) > 0 {
                out.push(bridge(kappa_c, &beta)?);
            }
        }
    }
    Ok(out)
}
