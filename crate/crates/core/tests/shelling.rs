mod common;

use common::*;
use proptest::prelude::*;
use shellob::canonical::canonical_key;
use shellob::shelling::lemma6_shelling;
use shellob::{
    find_shelling, is_shellable, is_shelling, Error, SearchBudget, SearchOutcome, Shellability,
    ShellingCheck, ShellingOrder, SimplicialComplex,
};

fn decide(k: &SimplicialComplex) -> bool {
    match is_shellable(k, &SearchBudget::default()).unwrap() {
        Shellability::Shellable => true,
        Shellability::NotShellable => false,
        Shellability::Undecided => panic!("undecided on {k}"),
    }
}

fn cx(faces: &[&[u32]]) -> SimplicialComplex {
    SimplicialComplex::from_facets(faces.iter().map(|f| f.iter().copied())).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn search_agrees_with_brute_force(k in arb_complex(7, 9)) {
        prop_assert_eq!(decide(&k), oracle_shellable(&to_masks(&k)));
    }

    #[test]
    fn certificates_replay(k in arb_complex(7, 9)) {
        if let SearchOutcome::Certificate(cert) = find_shelling(&k, &SearchBudget::default(), false).unwrap() {
            prop_assert!(is_shelling(&k, &cert.order).unwrap().is_valid());
            let masks: Vec<u64> = cert
                .order
                .facets()
                .iter()
                .map(|f| f.vertices().iter().fold(0u64, |m, &v| m | 1 << (v - 1)))
                .collect();
            prop_assert!(is_shelling_order(&masks));
            prop_assert_eq!(cert.step_intersections.len(), k.facet_count() - 1);
        }
    }

    #[test]
    fn verifier_agrees_with_face_level_oracle(k in arb_complex(6, 7), seed in any::<u64>()) {
        let mut facets = k.facets().to_vec();
        let m = facets.len();
        let mut s = seed;
        for i in (1..m).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            facets.swap(i, (s >> 33) as usize % (i + 1));
        }
        let masks: Vec<u64> = facets.iter().map(|f| f.vertices().iter().fold(0u64, |a, &v| a | 1 << (v - 1))).collect();
        let got = is_shelling(&k, &ShellingOrder(facets)).unwrap();
        prop_assert_eq!(got.is_valid(), is_shelling_order(&masks));
        if let ShellingCheck::Fails { step, .. } = got {
            prop_assert!(is_shelling_order(&masks[..step - 1]));
            prop_assert!(!is_shelling_order(&masks[..step]));
        }
    }

    #[test]
    fn shellable_complexes_have_decreasing_dimension_shellings(k in arb_complex(7, 9)) {
        let any = find_shelling(&k, &SearchBudget::default(), false).unwrap();
        let dec = find_shelling(&k, &SearchBudget::default(), true).unwrap();
        prop_assert_eq!(
            matches!(any, SearchOutcome::Certificate(_)),
            matches!(dec, SearchOutcome::Certificate(_))
        );
        if let SearchOutcome::Certificate(c) = dec {
            let dims: Vec<usize> = c.order.facets().iter().map(|f| f.len()).collect();
            prop_assert!(dims.windows(2).all(|w| w[0] >= w[1]));
        }
    }

    #[test]
    fn links_and_pure_parts_of_shellable_complexes_are_shellable(k in arb_complex(6, 8)) {
        prop_assume!(decide(&k));
        for &v in k.vertices() {
            prop_assert!(decide(&k.link(v).unwrap()), "link of {} in {}", v, k);
        }
        prop_assert!(decide(&k.pure_part().unwrap()));
    }

    #[test]
    fn shellability_is_a_class_invariant(k in arb_complex(6, 8), shift in 1u32..20) {
        let moved = k.relabel(|v| (64 - v) * 3 + shift * 100).unwrap();
        prop_assert_eq!(canonical_key(&k).unwrap(), canonical_key(&moved).unwrap());
        prop_assert_eq!(decide(&k), decide(&moved));
    }

    #[test]
    fn canonical_key_matches_brute_force_classes(a in arb_complex(5, 6), b in arb_complex(5, 6)) {
        let same = a.vertex_count() == b.vertex_count()
            && oracle_key(a.vertex_count(), &to_masks(&a.normalized()))
                == oracle_key(b.vertex_count(), &to_masks(&b.normalized()));
        prop_assert_eq!(canonical_key(&a).unwrap() == canonical_key(&b).unwrap(), same);
    }

    #[test]
    fn lemma6_combines_valid_pieces(k in arb_complex(6, 8)) {
        let b = SearchBudget::default();
        for &v in k.vertices() {
            let del = k.deletion(v).unwrap();
            let link = k.link(v).unwrap();
            if del.is_void() || link.facets().iter().any(|g| del.is_facet(g)) {
                continue;
            }
            let (SearchOutcome::Certificate(dc), SearchOutcome::Certificate(lc)) =
                (find_shelling(&del, &b, false).unwrap(), find_shelling(&link, &b, false).unwrap())
            else {
                continue;
            };
            let order = lemma6_shelling(&k, v, &dc.order, &lc.order).unwrap();
            prop_assert!(is_shelling(&k, &order).unwrap().is_valid());
        }
    }
}

#[test]
fn named_shelling_examples() {
    let m5 = shellob::families::m_cycle(5).unwrap();
    match is_shelling(&m5, &ShellingOrder::lex(&m5)).unwrap() {
        ShellingCheck::Fails { step, .. } => assert!(step >= 2),
        ShellingCheck::Valid => panic!("lex order shells M_5"),
    }
    assert!(!decide(&m5));
    assert!(decide(&SimplicialComplex::irrelevant()));
    assert!(decide(&cx(&[&[1], &[2], &[3]])));
    assert!(!decide(&cx(&[&[1, 2], &[3, 4]])));
    assert!(decide(&cx(&[&[1, 2, 3], &[3, 4]])));
    assert!(matches!(is_shellable(&SimplicialComplex::void(), &SearchBudget::default()), Err(Error::Domain(_))));
}

fn lemma6(k: &SimplicialComplex, v: u32) -> shellob::Result<ShellingOrder> {
    let del = k.deletion(v).unwrap();
    let link = k.link(v).unwrap();
    lemma6_shelling(k, v, &ShellingOrder::lex(&del), &ShellingOrder::lex(&link))
}

fn violation(r: shellob::Result<ShellingOrder>) -> String {
    match r {
        Err(Error::HypothesisViolation(m)) => m,
        other => panic!("expected a hypothesis violation, got {other:?}"),
    }
}

#[test]
fn lemma6_examples() {
    let k = cx(&[&[1, 2, 3], &[3, 4]]);
    assert!(is_shelling(&k, &lemma6(&k, 4).unwrap()).unwrap().is_valid());
    let j = cx(&[&[1, 2], &[3]]);
    assert_eq!(lemma6(&j, 3).unwrap().facets().len(), 2);

    let bad_deletion = cx(&[&[1, 2], &[2, 3], &[3, 4]]);
    assert!(violation(lemma6(&bad_deletion, 2)).contains("deletion order"));
    let bad_link = cx(&[&[1, 2, 5], &[3, 4, 5], &[1, 3], &[2, 3]]);
    assert!(violation(lemma6(&bad_link, 5)).contains("link order"));
    let shared = cx(&[&[1, 2], &[3, 4]]);
    assert!(violation(lemma6(&shared, 4)).contains("also a facet"));
}
