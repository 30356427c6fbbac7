use std::collections::BTreeSet;

use klr_core::morita::{
    bridge, c_blocks, from_type_c, tableau_from_type_c, tableau_to_type_c, to_type_c, verify_bridge, BlockBridge, Check,
};
use klr_core::partitions::content;
use klr_core::tableaux::{enumerate_standard, factorizable_tableaux, residue_sequence};
use klr_core::{MultiPartition, Partition, RootVector, StandardTableau};

fn mp(s: &str) -> MultiPartition {
    s.parse().unwrap()
}

fn all_bridges(max_n: usize) -> Vec<BlockBridge> {
    [0, 1, 2].into_iter().flat_map(|k| c_blocks(k, max_n).unwrap()).collect()
}

#[test]
fn bijection_round_trips() {
    for b in all_bridges(9) {
        let a_block = b.a_block();
        let c_block = b.c_block();
        assert_eq!(a_block.len(), c_block.len(), "{}", b.beta);
        for bp in &a_block {
            let nu = to_type_c(bp, &b).unwrap();
            assert_eq!(&from_type_c(&nu, &b).unwrap(), bp);
            assert_eq!(content(&b.weight_c(), &MultiPartition::single(nu.clone())), b.beta);
        }
        for nu in &c_block {
            assert_eq!(&to_type_c(&from_type_c(nu, &b).unwrap(), &b).unwrap(), nu);
        }
    }
}

#[test]
fn tableau_map_is_a_bijection_onto_factorizable_tableaux() {
    for b in all_bridges(9) {
        let rho = MultiPartition::single(b.rho.clone());
        let rho_tableaux = enumerate_standard(&rho, None);
        for bp in b.a_block() {
            let nu = MultiPartition::single(to_type_c(&bp, &b).unwrap());
            let expected: BTreeSet<StandardTableau> = factorizable_tableaux(&nu, &b.weight_c(), &b.omega).into_iter().collect();
            let mut images = BTreeSet::new();
            for s in &rho_tableaux {
                for u in enumerate_standard(&bp, None) {
                    let t = tableau_to_type_c(s, &u, &b).unwrap();
                    // residues of u under the type A charges are literal type C labels
                    let mut seq = residue_sequence(s, &b.weight_c());
                    seq.extend(residue_sequence(&u, &b.weight_a()));
                    assert_eq!(residue_sequence(&t, &b.weight_c()), seq);
                    assert_eq!(tableau_from_type_c(&t, &b).unwrap(), (s.clone(), u));
                    assert!(images.insert(t));
                }
            }
            assert_eq!(images, expected, "{nu}");
        }
    }
}

#[test]
fn type_a_residues_are_positive() {
    for b in all_bridges(9) {
        for bp in b.a_block() {
            assert!(content(&b.weight_a(), &bp).iter().all(|(i, _)| i >= 1));
        }
    }
}

#[test]
fn worked_examples() {
    let b = bridge(0, &RootVector::from_iter([0, 1])).unwrap();
    let report = verify_bridge(&b, &Check::ALL);
    assert!(report.pass(), "{report:?}");
    let k = report.checks.kleshchev.unwrap();
    assert_eq!(k.a_kleshchev, vec![mp("-/1")]);
    assert_eq!(k.images, vec!["1,1".parse::<Partition>().unwrap()]);

    let b = bridge(0, &RootVector::simple(0)).unwrap();
    assert_eq!(b.a_block(), vec![mp("-/-")]);
    assert!(verify_bridge(&b, &Check::ALL).pass());
}

#[test]
fn goodpath_witnesses_replay() {
    for b in all_bridges(8) {
        let report = verify_bridge(&b, &[Check::Goodpath]);
        let gp = report.checks.goodpath.unwrap();
        assert!(gp.pass, "{}", b.beta);
        for w in gp.witnesses {
            assert_eq!(w.word.unwrap().len(), w.nu.size());
        }
    }
}

/// Dominance is carried forward by the bijection, but the images of
/// incomparable bipartitions can be comparable.
#[test]
fn dominance_is_monotone_but_not_reflected() {
    let mut violating = Vec::new();
    for k in 0..=2 {
        for b in c_blocks(k, 10).unwrap() {
            let d = verify_bridge(&b, &[Check::Dominance]).checks.dominance.unwrap();
            assert!(d.monotone, "{}", b.beta);
            for v in d.violations {
                assert!(!v.a_dominates && v.c_dominates);
                violating.push((k, v.bipartitions, v.images));
            }
        }
    }
    assert_eq!(violating.len(), 4);
    assert!(violating.iter().all(|(k, _, _)| *k == 0));
    let witness = (mp("2/1,1"), mp("1,1/2"));
    let (_, _, images) = violating.iter().find(|(_, bps, _)| *bps == witness).expect("frozen witness");
    assert_eq!(images.0, "4,2,2".parse().unwrap());
    assert_eq!(images.1, "3,3,1,1".parse().unwrap());
}
