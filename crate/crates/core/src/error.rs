use thiserror::Error;

use crate::cartan::{CartanType, Residue};
use crate::partitions::Node;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("residue {label} is not a valid label for type {cartan}")]
    InvalidLabel { cartan: CartanType, label: Residue },

    #[error("not a subroot: multiplicity of alpha_{label} would drop below zero")]
    NotSubroot { label: Residue },

    #[error("invalid partition {0:?}: parts must be weakly decreasing")]
    InvalidPartition(Vec<usize>),

    #[error("level mismatch: expected {expected}, found {found}")]
    LevelMismatch { expected: usize, found: usize },

    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("{0:?} is not a rectangular partition")]
    NotRectangle(Vec<usize>),

    #[error("rectangle addition: {0}")]
    RectAdd(String),

    #[error("not in the rho-block shape: {0}")]
    NotInBlockShape(String),

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("invalid semistandard tableau: {0}")]
    InvalidSemistandard(String),

    #[error("segment {k} out of range 1..={max}")]
    InvalidSegment { k: usize, max: usize },

    #[error("no cogood {residue}-node at position {position} of the word")]
    NoCogoodNode { position: usize, residue: Residue },

    #[error("no zero nodes: bridge undefined, block is already type-A-like")]
    NoZeroNodes,

    #[error("omega = {omega} is not contained in beta = {beta}")]
    OmegaNotInBeta { omega: String, beta: String },

    #[error("{shape} is not in the block {block}")]
    NotInBlock { shape: String, block: String },

    #[error("an omega restriction needs type C, got type {0}")]
    RestrictionNeedsTypeC(CartanType),

    #[error("node {0} is not in the diagram")]
    NodeNotInDiagram(Node),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
