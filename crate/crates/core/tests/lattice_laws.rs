use std::collections::BTreeSet;

use secmod_core::{corpus_generate, CorpusSpec, FinModule, SubLattice};

fn corpus(max: u64) -> Vec<FinModule> {
    corpus_generate(&CorpusSpec::up_to(max)).unwrap()
}

fn element_set(n: &secmod_core::Submodule) -> BTreeSet<Vec<u64>> {
    n.elements()
        .unwrap()
        .iter()
        .map(|x| x.coords().to_vec())
        .collect()
}

#[test]
fn known_subgroup_counts() {
    let cases: &[(&[u64], usize)] = &[
        (&[12], 6),
        (&[30], 8),
        (&[64], 7),
        (&[2, 2], 5),
        (&[3, 3], 6),
        (&[5, 5], 8),
        (&[2, 2, 2], 16),
        (&[2, 4], 8),
        (&[4, 4], 15),
        (&[6, 10], 20),
    ];
    for &(factors, count) in cases {
        let m = FinModule::new(None, factors).unwrap();
        assert_eq!(
            SubLattice::enumerate(&m).unwrap().len(),
            count,
            "{factors:?}"
        );
    }
}

#[test]
fn product_formula_and_elementwise_meets() {
    for m in corpus(24) {
        let l = SubLattice::enumerate(&m).unwrap();
        for i in 0..l.len() {
            for j in 0..l.len() {
                let (a, b) = (l.node(i), l.node(j));
                let meet = l.node(l.meet(i, j));
                let join = l.node(l.join(i, j));
                assert_eq!(join.order() * meet.order(), a.order() * b.order());
                let common: BTreeSet<_> = element_set(a)
                    .intersection(&element_set(b))
                    .cloned()
                    .collect();
                assert_eq!(element_set(meet), common);
                assert_eq!(&a.intersect(b).unwrap(), meet);
                assert_eq!(&a.sum(b).unwrap(), join);
            }
        }
    }
}

#[test]
fn generators_round_trip_and_annihilators() {
    for m in corpus(48) {
        let l = SubLattice::enumerate(&m).unwrap();
        for n in l.nodes() {
            assert_eq!(&m.span(&n.gen_elements()).unwrap(), n);
            let ann = n.annihilator();
            assert!(n.scale(ann.generator()).is_zero());
            assert!(n.is_subset(&m.full().colon(&ann).unwrap()));
            assert_eq!(ann.generator(), n.exponent());
        }
    }
}

#[test]
fn covers_are_prime_index_steps() {
    for m in corpus(32) {
        let l = SubLattice::enumerate(&m).unwrap();
        for &(lo, hi) in l.covers() {
            let index = l.node(hi).order() / l.node(lo).order();
            assert!(
                index > 1 && (2..index).all(|d| !index.is_multiple_of(d)),
                "index {index}"
            );
        }
    }
}
