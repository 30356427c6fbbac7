use std::collections::{BTreeSet, HashSet, VecDeque};

use proptest::prelude::*;

use klr_core::crystal::{cogood_node, good_node, i_signature, is_kleshchev, reduce_signature, Marker, Signature, SignatureEntry};
use klr_core::graded::{gdim_block, gdim_specht, gdim_specht_weight, LaurentPoly};
use klr_core::partitions::{blocks_of_size, dominates, rect_add, rect_split, residue};
use klr_core::tableaux::{count_standard, enumerate_standard, residue_sequence, ResidueFilter};
use klr_core::{DominantWeight, MultiPartition, Node, Partition, Residue};

fn hook_length_count(p: &Partition) -> u128 {
    let conj = p.conjugate();
    let mut hooks: u128 = 1;
    for r in 1..=p.len() {
        for c in 1..=p.row(r) {
            hooks *= (p.row(r) - c + conj.row(c) - r + 1) as u128;
        }
    }
    (1..=p.size() as u128).product::<u128>() / hooks
}

#[test]
fn standard_counts_match_hook_length_formula() {
    for n in 0..=10 {
        for p in Partition::all_of_size(n) {
            let got = count_standard(&MultiPartition::single(p.clone())) as u128;
            assert_eq!(got, hook_length_count(&p), "shape {p}");
        }
    }
}

fn weights() -> Vec<DominantWeight> {
    vec![
        DominantWeight::type_c(0).unwrap(),
        DominantWeight::type_c(1).unwrap(),
        DominantWeight::type_a(vec![0]),
    ]
}

#[test]
fn filtered_enumeration_matches_filter_after() {
    for weight in weights() {
        for n in 0..=9 {
            for p in Partition::all_of_size(n) {
                let shape = MultiPartition::single(p);
                let all = enumerate_standard(&shape, None);
                let mut seqs: BTreeSet<Vec<Residue>> = all.iter().map(|t| residue_sequence(t, &weight)).collect();
                // a sequence with no tableaux at all
                seqs.insert(vec![7; n]);
                for seq in seqs {
                    let filter = ResidueFilter { weight: &weight, residues: &seq };
                    let pruned = enumerate_standard(&shape, Some(filter));
                    let after: Vec<_> = all.iter().filter(|t| residue_sequence(t, &weight) == seq).cloned().collect();
                    assert_eq!(pruned, after, "shape {shape} seq {seq:?}");
                }
            }
        }
    }
}

#[test]
fn filtered_enumeration_on_bipartitions() {
    let weight = DominantWeight::type_a(vec![1, 3]);
    for n in 0..=6 {
        for shape in MultiPartition::all_of_size(n, 2) {
            let all = enumerate_standard(&shape, None);
            let seqs: BTreeSet<Vec<Residue>> = all.iter().map(|t| residue_sequence(t, &weight)).collect();
            for seq in seqs {
                let pruned = enumerate_standard(&shape, Some(ResidueFilter { weight: &weight, residues: &seq }));
                let after: Vec<_> = all.iter().filter(|t| residue_sequence(t, &weight) == seq).cloned().collect();
                assert_eq!(pruned, after);
            }
        }
    }
}

#[test]
fn dominance_is_a_partial_order() {
    for level in 1..=2 {
        for n in 0..=6 {
            let shapes = MultiPartition::all_of_size(n, level);
            let dom = |a: &MultiPartition, b: &MultiPartition| dominates(a, b).unwrap();
            for a in &shapes {
                assert!(dom(a, a));
                for b in &shapes {
                    if a != b && dom(a, b) {
                        assert!(!dom(b, a), "{a} and {b}");
                    }
                    for c in &shapes {
                        if dom(a, b) && dom(b, c) {
                            assert!(dom(a, c), "{a} {b} {c}");
                        }
                    }
                }
            }
        }
    }
}

/// Cancels each `a` against the nearest uncancelled `r` on its left.
fn stack_reduce(sig: &Signature) -> Signature {
    let mut stack: Vec<SignatureEntry> = Vec::new();
    for e in &sig.0 {
        match (stack.last(), e.marker) {
            (Some(top), Marker::Addable) if top.marker == Marker::Removable => {
                stack.pop();
            }
            _ => stack.push(*e),
        }
    }
    Signature(stack)
}

fn signature_from(markers: &[bool]) -> Signature {
    Signature(
        markers
            .iter()
            .enumerate()
            .map(|(k, &r)| SignatureEntry {
                marker: if r { Marker::Removable } else { Marker::Addable },
                node: Node::new(k + 1, 1, 1),
            })
            .collect(),
    )
}

proptest! {
    #[test]
    fn reduction_matches_stack(markers in prop::collection::vec(any::<bool>(), 0..40)) {
        let sig = signature_from(&markers);
        prop_assert_eq!(reduce_signature(&sig), stack_reduce(&sig));
    }

    #[test]
    fn reduced_signature_is_a_then_r(markers in prop::collection::vec(any::<bool>(), 0..40)) {
        let reduced = reduce_signature(&signature_from(&markers)).markers();
        let first_r = reduced.iter().position(|m| *m == Marker::Removable).unwrap_or(reduced.len());
        prop_assert!(reduced[first_r..].iter().all(|m| *m == Marker::Removable));
    }

    #[test]
    fn laurent_ring_axioms(
        a in prop::collection::vec((-5i64..5, -4i64..4), 0..6),
        b in prop::collection::vec((-5i64..5, -4i64..4), 0..6),
        c in prop::collection::vec((-5i64..5, -4i64..4), 0..6),
    ) {
        let (a, b, c) = (LaurentPoly::from(a), LaurentPoly::from(b), LaurentPoly::from(c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &LaurentPoly::one(), a.clone());
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(a.bar().bar(), a.clone());
        prop_assert_eq!((&a * &b).bar(), &a.bar() * &b.bar());
        prop_assert_eq!((&a * &b).eval_at_1(), a.eval_at_1() * b.eval_at_1());
        prop_assert!(a.terms().all(|(_, coeff)| coeff != 0));
    }

    #[test]
    fn laurent_json_round_trip(a in prop::collection::vec((-9i64..9, -9i64..9), 0..8)) {
        let a = LaurentPoly::from(a);
        let json = serde_json::to_string(&a).unwrap();
        prop_assert_eq!(serde_json::from_str::<LaurentPoly>(&json).unwrap(), a);
    }
}

/// Shapes reachable from the empty one by cogood additions.
fn reachable(weight: &DominantWeight, max_n: usize) -> HashSet<MultiPartition> {
    let start = MultiPartition::empty(weight.level());
    let mut seen = HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    while let Some(cur) = queue.pop_front() {
        if cur.size() == max_n {
            continue;
        }
        let residues: BTreeSet<Residue> = cur.addable().iter().map(|n| residue(weight, n)).collect();
        for i in residues {
            if let Some(node) = cogood_node(&cur, weight, i) {
                let next = cur.with_node(&node).unwrap();
                if seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
    }
    seen
}

#[test]
fn kleshchev_matches_reachability() {
    let cases = [
        (DominantWeight::type_c(0).unwrap(), 8),
        (DominantWeight::type_c(1).unwrap(), 8),
        (DominantWeight::type_c(2).unwrap(), 7),
        (DominantWeight::type_a(vec![1, 1]), 6),
        (DominantWeight::type_a(vec![2, 0]), 6),
        (DominantWeight::type_a(vec![4, 4]), 6),
    ];
    for (weight, max_n) in cases {
        let reach = reachable(&weight, max_n);
        for n in 0..=max_n {
            for mp in MultiPartition::all_of_size(n, weight.level()) {
                assert_eq!(is_kleshchev(&mp, &weight), reach.contains(&mp), "{mp} for {weight}");
            }
        }
    }
}

#[test]
fn good_and_cogood_are_partial_inverses() {
    for weight in [DominantWeight::type_c(0).unwrap(), DominantWeight::type_c(1).unwrap()] {
        for n in 0..=8 {
            for mp in MultiPartition::all_of_size(n, 1) {
                for i in 0..=(n as Residue + 2) {
                    if let Some(node) = cogood_node(&mp, &weight, i) {
                        let up = mp.with_node(&node).unwrap();
                        assert_eq!(good_node(&up, &weight, i), Some(node), "{mp} + {i}");
                    }
                    if let Some(node) = good_node(&mp, &weight, i) {
                        let down = mp.without_node(&node).unwrap();
                        assert_eq!(cogood_node(&down, &weight, i), Some(node), "{mp} - {i}");
                    }
                }
            }
        }
    }
}

#[test]
fn signatures_are_in_reading_order() {
    let weight = DominantWeight::type_a(vec![0, 2]);
    for mp in MultiPartition::all_of_size(5, 2) {
        for i in -3..=6 {
            let nodes: Vec<Node> = i_signature(&mp, &weight, i).0.iter().map(|e| e.node).collect();
            assert!(nodes.windows(2).all(|w| w[0] < w[1]));
        }
    }
}

#[test]
fn weight_spaces_sum_to_specht() {
    for weight in weights() {
        for n in 0..=9 {
            for p in Partition::all_of_size(n) {
                let shape = MultiPartition::single(p);
                let seqs: BTreeSet<Vec<Residue>> =
                    enumerate_standard(&shape, None).iter().map(|t| residue_sequence(t, &weight)).collect();
                let total: LaurentPoly = seqs.iter().map(|s| gdim_specht_weight(&shape, &weight, s)).sum();
                assert_eq!(total, gdim_specht(&shape, &weight), "{shape}");
            }
        }
    }
}

#[test]
fn block_dimension_counts_pairs_of_tableaux() {
    for weight in [DominantWeight::type_c(0).unwrap(), DominantWeight::type_c(1).unwrap(), DominantWeight::type_a(vec![1, 2])] {
        let max_n = if weight.level() == 1 { 8 } else { 6 };
        for n in 0..=max_n {
            for (beta, shapes) in blocks_of_size(&weight, n) {
                let oracle: u64 = shapes.iter().map(|s| count_standard(s).pow(2)).sum();
                assert_eq!(gdim_block(&weight, &beta, None).unwrap().eval_at_1() as u64, oracle, "{beta}");
            }
        }
    }
}

#[test]
fn specht_dimension_evaluates_to_tableau_count() {
    let weight = DominantWeight::type_c(0).unwrap();
    for p in Partition::all_of_size(7) {
        let shape = MultiPartition::single(p);
        assert_eq!(gdim_specht(&shape, &weight).eval_at_1() as u64, count_standard(&shape));
    }
}

#[test]
fn rect_split_inverts_rect_add() {
    for width in 1..=3 {
        for height in 1..=4 {
            let rho = Partition::rectangle(width, height);
            for n in 0..=6 {
                for bp in MultiPartition::all_of_size(n, 2) {
                    let (lambda, mu) = (bp.component(1).clone(), bp.component(2).clone());
                    let Ok(nu) = rect_add(&rho, &MultiPartition::pair(lambda.clone(), mu.conjugate())) else {
                        continue;
                    };
                    assert_eq!(rect_split(&nu, &rho).unwrap(), (lambda, mu));
                }
            }
        }
    }
}
