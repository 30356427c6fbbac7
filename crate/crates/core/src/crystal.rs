//! Good and cogood nodes, Kleshchev multipartitions, and good-node paths.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::sync::{OnceLock, RwLock};

use serde::{Deserialize, Serialize};

use crate::cartan::{CartanType, DominantWeight, Residue};
use crate::error::{Error, Result};
use crate::partitions::{addable_nodes, removable_nodes, residue, MultiPartition, Node, Partition};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Marker {
    #[serde(rename = "a")]
    Addable,
    #[serde(rename = "r")]
    Removable,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SignatureEntry {
    pub marker: Marker,
    pub node: Node,
}

/// Addable and removable `i`-nodes in reading order.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Signature(pub Vec<SignatureEntry>);

impl Signature {
    pub fn markers(&self) -> Vec<Marker> {
        self.0.iter().map(|e| e.marker).collect()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

pub fn i_signature(mp: &MultiPartition, weight: &DominantWeight, i: Residue) -> Signature {
    let mut entries: Vec<SignatureEntry> = addable_nodes(mp, weight, i)
        .into_iter()
        .map(|node| SignatureEntry { marker: Marker::Addable, node })
        .chain(
            removable_nodes(mp, weight, i)
                .into_iter()
                .map(|node| SignatureEntry { marker: Marker::Removable, node }),
        )
        .collect();
    entries.sort_by_key(|e| e.node);
    Signature(entries)
}

/// Repeatedly deletes every adjacent `(r, a)` pair until the word reads
/// `a...a r...r`.
pub fn reduce_signature(sig: &Signature) -> Signature {
    let mut cur = sig.0.clone();
    loop {
        let mut next = Vec::with_capacity(cur.len());
        let mut k = 0;
        while k < cur.len() {
            if k + 1 < cur.len() && cur[k].marker == Marker::Removable && cur[k + 1].marker == Marker::Addable {
                k += 2;
            } else {
                next.push(cur[k]);
                k += 1;
            }
        }
        if next.len() == cur.len() {
            return Signature(next);
        }
        cur = next;
    }
}

/// The removable node at the leftmost `r` of the reduced signature.
pub fn good_node(mp: &MultiPartition, weight: &DominantWeight, i: Residue) -> Option<Node> {
    reduce_signature(&i_signature(mp, weight, i))
        .0
        .into_iter()
        .find(|e| e.marker == Marker::Removable)
        .map(|e| e.node)
}

/// The addable node at the rightmost `a` of the reduced signature.
pub fn cogood_node(mp: &MultiPartition, weight: &DominantWeight, i: Residue) -> Option<Node> {
    reduce_signature(&i_signature(mp, weight, i))
        .0
        .into_iter()
        .rev()
        .find(|e| e.marker == Marker::Addable)
        .map(|e| e.node)
}

/// Residues carrying a good node, ascending.
pub fn good_residues(mp: &MultiPartition, weight: &DominantWeight) -> Vec<(Residue, Node)> {
    let residues: BTreeSet<Residue> = mp.removable().iter().map(|n| residue(weight, n)).collect();
    residues.into_iter().filter_map(|i| good_node(mp, weight, i).map(|n| (i, n))).collect()
}

type CacheKey = (CartanType, Vec<Residue>, MultiPartition);

fn kleshchev_cache() -> &'static RwLock<HashMap<CacheKey, bool>> {
    static CACHE: OnceLock<RwLock<HashMap<CacheKey, bool>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Kleshchev test by recursion on good-node removal, memoized across calls.
pub fn is_kleshchev(mp: &MultiPartition, weight: &DominantWeight) -> bool {
    if mp.is_empty() {
        return true;
    }
    let key = (weight.cartan(), weight.charge().to_vec(), mp.clone());
    if let Some(&known) = kleshchev_cache().read().unwrap().get(&key) {
        return known;
    }
    let result = good_residues(mp, weight)
        .into_iter()
        .any(|(_, node)| is_kleshchev(&mp.without_node(&node).expect("good nodes are removable"), weight));
    kleshchev_cache().write().unwrap().insert(key, result);
    result
}

/// Adds cogood nodes of residues `word[0], word[1], ...` in turn.
pub fn cogood_path(start: &MultiPartition, word: &[Residue], weight: &DominantWeight) -> Result<MultiPartition> {
    let mut cur = start.clone();
    for (position, &i) in word.iter().enumerate() {
        let node = cogood_node(&cur, weight, i).ok_or(Error::NoCogoodNode { position, residue: i })?;
        cur.push_node(&node);
    }
    Ok(cur)
}

/// Residue word (in addition order) of some good-removal path from `mp`
/// down to `target`, never leaving shapes that contain `target`.
pub fn good_path_to(mp: &MultiPartition, target: &MultiPartition, weight: &DominantWeight) -> Option<Vec<Residue>> {
    fn go(
        cur: &MultiPartition,
        target: &MultiPartition,
        weight: &DominantWeight,
        dead: &mut HashSet<MultiPartition>,
        removed: &mut Vec<Residue>,
    ) -> bool {
        if cur == target {
            return true;
        }
        if dead.contains(cur) {
            return false;
        }
        for (i, node) in good_residues(cur, weight) {
            let next = cur.without_node(&node).expect("good nodes are removable");
            if !next.contains(target) {
                continue;
            }
            removed.push(i);
            if go(&next, target, weight, dead, removed) {
                return true;
            }
            removed.pop();
        }
        dead.insert(cur.clone());
        false
    }
    if !mp.contains(target) {
        return None;
    }
    let mut removed = Vec::new();
    go(mp, target, weight, &mut HashSet::new(), &mut removed).then(|| {
        removed.reverse();
        removed
    })
}

/// A witness word `j' ⊗ j''` with `∅ -j'-> rho -j''-> nu` along good nodes,
/// found by searching good removals from `nu` down to `rho` and then from
/// `rho` to the empty partition. `None` when no such path exists.
pub fn factors_through(nu: &Partition, rho: &Partition, weight: &DominantWeight) -> Option<Vec<Residue>> {
    let nu = MultiPartition::single(nu.clone());
    let rho = MultiPartition::single(rho.clone());
    let tail = good_path_to(&nu, &rho, weight)?;
    let mut word = good_path_to(&rho, &MultiPartition::empty(1), weight)?;
    word.extend(tail);
    Some(word)
}
