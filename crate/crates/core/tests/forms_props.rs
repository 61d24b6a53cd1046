use palgroup::forms::{
    decompose_pl2, decompose_pl3, factors_verify, group_pl_small, match_pl2, match_pl3, GroupPl,
};
use palgroup::lemmas::{lemma_catalog_with, verify_catalog, Phi};
use palgroup::palfact::semigroup_pl;
use palgroup::{Letter, ReducedWord, Word};
use proptest::prelude::*;

fn reduced(max_gen: u32, max_len: usize) -> impl Strategy<Value = ReducedWord> {
    proptest::collection::vec(0..2 * max_gen, 0..=max_len)
        .prop_map(|codes| Word::from_letters(codes.into_iter().map(Letter::from_code).collect()).reduce())
}

/// Words built from a random ABP or APB shape, so long inputs of length
/// three are common.
fn three_form() -> impl Strategy<Value = ReducedWord> {
    let w = || reduced(3, 5);
    let pal = || reduced(3, 4).prop_map(|h| h.concat(&h.mirror()).into_word().reduce());
    (any::<bool>(), w(), w(), pal(), pal(), pal()).prop_map(|(abp, a, b, p, q, r)| {
        let (a, b) = (a.into_word(), b.into_word());
        let parts = if abp {
            vec![a.clone(), b.clone(), p.into_word(), q.into_word(), b.invert(), r.into_word(), a.mirror()]
        } else {
            vec![a.clone(), p.into_word(), b.clone(), q.into_word(), r.into_word(), b.invert(), a.mirror()]
        };
        Word::concat_all(&parts).reduce()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn symmetric_under_mirror_and_inverse(w in reduced(3, 24)) {
        let g = group_pl_small(&w);
        prop_assert_eq!(g, group_pl_small(&w.mirror()));
        prop_assert_eq!(g, group_pl_small(&w.invert()));
    }

    #[test]
    fn bounded_by_semigroup_length(w in reduced(3, 24)) {
        let g = group_pl_small(&w);
        let k = semigroup_pl(&w).k;
        if let GroupPl::Exact(g) = g {
            prop_assert!(g as usize <= k);
        } else {
            prop_assert!(k > 3);
        }
    }

    #[test]
    fn decompositions_verify(w in reduced(3, 24)) {
        if let Some(wit) = match_pl2(&w) {
            prop_assert_eq!(wit.spell(), w.as_word().clone());
            prop_assert!(factors_verify(&decompose_pl2(&wit), &w));
        }
        if let Some(wit) = match_pl3(&w) {
            prop_assert_eq!(wit.spell(), w.as_word().clone());
            prop_assert!(factors_verify(&decompose_pl3(&wit), &w));
        }
    }

    #[test]
    fn three_forms_are_recognized(w in three_form()) {
        let wit = match_pl3(&w);
        prop_assert!(wit.is_some(), "{}", w);
        prop_assert!(factors_verify(&decompose_pl3(&wit.unwrap()), &w));
    }
}

#[test]
fn antimorphism_lemmas_hold_for_the_mirror_too() {
    let specs: Vec<_> = lemma_catalog_with(Phi::Mirror)
        .into_iter()
        .filter(|s| s.id.starts_with("APQAX"))
        .collect();
    assert_eq!(specs.len(), 2);
    let r = verify_catalog(&specs, 2, 6).unwrap();
    assert!(r.passed(), "{}", r.to_text());
}
