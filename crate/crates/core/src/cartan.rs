//! Root data of types A-infinity and C-infinity.
//!
//! Residue labels are plain signed integers. Type A accepts every integer,
//! type C only the non-negative ones; the check happens when a value is
//! built, so both types share the same arithmetic.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Residue = i64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CartanType {
    #[serde(rename = "A")]
    AInfinity,
    #[serde(rename = "C")]
    CInfinity,
}

impl CartanType {
    pub fn is_valid_label(self, i: Residue) -> bool {
        match self {
            CartanType::AInfinity => true,
            CartanType::CInfinity => i >= 0,
        }
    }

    pub fn check_label(self, i: Residue) -> Result<Residue> {
        if self.is_valid_label(i) {
            Ok(i)
        } else {
            Err(Error::InvalidLabel { cartan: self, label: i })
        }
    }

    /// The symmetrizing factor `d_i`: 2 on the short end of C-infinity, 1 elsewhere.
    pub fn symmetrizer(self, i: Residue) -> i64 {
        match (self, i) {
            (CartanType::CInfinity, 0) => 2,
            _ => 1,
        }
    }

    /// Cartan matrix entry `a_ij`.
    pub fn cartan_entry(self, i: Residue, j: Residue) -> i64 {
        if i == j {
            return 2;
        }
        if (i - j).abs() != 1 {
            return 0;
        }
        match self {
            CartanType::CInfinity if j == 0 => -2,
            _ => -1,
        }
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CartanType::AInfinity => write!(f, "A"),
            CartanType::CInfinity => write!(f, "C"),
        }
    }
}

impl FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "a" | "a-infinity" | "ainf" => Ok(CartanType::AInfinity),
            "c" | "c-infinity" | "cinf" => Ok(CartanType::CInfinity),
            other => Err(Error::Parse(format!("unknown Cartan type {other:?}"))),
        }
    }
}

/// `(alpha_i, alpha_j) = d_i a_ij`.
pub fn bilinear_form(cartan: CartanType, i: Residue, j: Residue) -> Result<i64> {
    cartan.check_label(i)?;
    cartan.check_label(j)?;
    Ok(cartan.symmetrizer(i) * cartan.cartan_entry(i, j))
}

/// `<alpha_i^vee, Lambda>`: how many entries of the charge equal `i`.
pub fn cartan_pairing(i: Residue, weight: &DominantWeight) -> usize {
    weight.charge.iter().filter(|&&k| k == i).count()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Generator {
    Idempotent,
    Dot(Residue),
    Crossing(Residue, Residue),
}

/// Degree of `e(i)`, `y_r e(i)` or `psi_r e(i)` given the local residues.
pub fn generator_degree(cartan: CartanType, generator: Generator) -> Result<i64> {
    match generator {
        Generator::Idempotent => Ok(0),
        Generator::Dot(i) => bilinear_form(cartan, i, i),
        Generator::Crossing(i, j) => bilinear_form(cartan, i, j),
    }
}

/// A dominant weight `Lambda_kappa`, stored through its charge vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DominantWeight {
    cartan: CartanType,
    charge: Vec<Residue>,
}

impl DominantWeight {
    pub fn new(cartan: CartanType, charge: Vec<Residue>) -> Result<Self> {
        for &k in &charge {
            cartan.check_label(k)?;
        }
        Ok(DominantWeight { cartan, charge })
    }

    pub fn type_a(charge: Vec<Residue>) -> Self {
        DominantWeight { cartan: CartanType::AInfinity, charge }
    }

    pub fn type_c(kappa: Residue) -> Result<Self> {
        Self::new(CartanType::CInfinity, vec![kappa])
    }

    pub fn cartan(&self) -> CartanType {
        self.cartan
    }

    pub fn charge(&self) -> &[Residue] {
        &self.charge
    }

    pub fn level(&self) -> usize {
        self.charge.len()
    }
}

impl fmt::Display for DominantWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{:?}", self.cartan, self.charge)
    }
}

/// An element of the positive cone of the root lattice, `sum a_i alpha_i`.
/// Zero multiplicities are never stored.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "BTreeMap<Residue, u32>", into = "BTreeMap<Residue, u32>")]
pub struct RootVector {
    entries: BTreeMap<Residue, u32>,
}

impl RootVector {
    pub fn zero() -> Self {
        RootVector::default()
    }

    pub fn simple(i: Residue) -> Self {
        Self::from_iter([i])
    }

    pub fn get(&self, i: Residue) -> u32 {
        self.entries.get(&i).copied().unwrap_or(0)
    }

    pub fn height(&self) -> usize {
        self.entries.values().map(|&m| m as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Residue, u32)> + '_ {
        self.entries.iter().map(|(&i, &m)| (i, m))
    }

    pub fn add_simple(&mut self, i: Residue) {
        *self.entries.entry(i).or_insert(0) += 1;
    }

    pub fn add(&self, other: &RootVector) -> RootVector {
        let mut out = self.clone();
        for (i, m) in other.iter() {
            *out.entries.entry(i).or_insert(0) += m;
        }
        out
    }

    /// Entrywise difference; fails with [`Error::NotSubroot`] unless `other <= self`.
    pub fn sub(&self, other: &RootVector) -> Result<RootVector> {
        let mut out = self.clone();
        for (i, m) in other.iter() {
            let have = out.get(i);
            if have < m {
                return Err(Error::NotSubroot { label: i });
            }
            if have == m {
                out.entries.remove(&i);
            } else {
                out.entries.insert(i, have - m);
            }
        }
        Ok(out)
    }

    /// Entrywise `self <= other`.
    pub fn le(&self, other: &RootVector) -> bool {
        self.iter().all(|(i, m)| other.get(i) >= m)
    }

    pub fn is_valid_for(&self, cartan: CartanType) -> bool {
        self.entries.keys().all(|&i| cartan.is_valid_label(i))
    }
}

impl FromIterator<Residue> for RootVector {
    fn from_iter<T: IntoIterator<Item = Residue>>(iter: T) -> Self {
        let mut out = RootVector::zero();
        for i in iter {
            out.add_simple(i);
        }
        out
    }
}

impl TryFrom<BTreeMap<Residue, u32>> for RootVector {
    type Error = Error;

    fn try_from(mut entries: BTreeMap<Residue, u32>) -> Result<Self> {
        entries.retain(|_, m| *m > 0);
        Ok(RootVector { entries })
    }
}

impl From<RootVector> for BTreeMap<Residue, u32> {
    fn from(v: RootVector) -> Self {
        v.entries
    }
}

impl fmt::Display for RootVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .iter()
            .map(|(i, m)| if m == 1 { format!("a{i}") } else { format!("{m}a{i}") })
            .collect();
        write!(f, "{}", terms.join("+"))
    }
}

impl FromStr for RootVector {
    type Err = Error;

    /// Accepts the JSON object form `{"0":2,"1":2}` or the compact form `0:2,1:2`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.starts_with('{') {
            return serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()));
        }
        let mut out = RootVector::zero();
        for term in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let (label, mult) = match term.split_once(':') {
                Some((l, m)) => (l, m),
                None => (term, "1"),
            };
            let label: Residue = label.trim().parse().map_err(|_| Error::Parse(format!("bad residue {label:?}")))?;
            let mult: u32 = mult.trim().parse().map_err(|_| Error::Parse(format!("bad multiplicity {mult:?}")))?;
            for _ in 0..mult {
                out.add_simple(label);
            }
        }
        Ok(out)
    }
}
