//! The matcher against exhaustive segmentation.

use std::collections::BTreeSet;

use palgroup::pattern::{Binding, Constraint, Pattern};
use palgroup::words::{reduced_words_up_to, Word};
use palgroup::parse_word;
use proptest::prelude::*;

/// Every cut of `w` into `pattern.atoms().len()` pieces that gives each
/// variable one consistent value.
fn brute_force(pattern: &Pattern, w: &Word) -> BTreeSet<Binding> {
    fn rec(pattern: &Pattern, w: &Word, j: usize, pos: usize, b: &Binding, out: &mut BTreeSet<Binding>) {
        let atoms = pattern.atoms();
        if j == atoms.len() {
            if pos == w.len() {
                out.insert(b.clone());
            }
            return;
        }
        let spec = pattern.atom_var(&atoms[j]);
        for end in pos..=w.len() {
            // atom transforms are involutions
            let value = w.slice(pos, end).transform(atoms[j].transform);
            if spec.constraint == Constraint::Palindrome && !value.is_palindrome() {
                continue;
            }
            if spec.nonempty && value.is_empty() {
                continue;
            }
            let mut next = b.clone();
            match b.get(&spec.name) {
                Some(v) if *v != value => continue,
                Some(_) => {}
                None => next.insert(spec.name.clone(), value),
            }
            rec(pattern, w, j + 1, end, &next, out);
        }
    }
    let mut out = BTreeSet::new();
    rec(pattern, w, 0, 0, &Binding::new(), &mut out);
    out
}

const PATTERNS: &[&str] = &[
    "P | P",
    "P.Q | P Q",
    "A.P.Q.!A | P Q",
    "A.B.P.Q.!B.R.~A | P Q R",
    "A.P.B.Q.R.!B.~A | P Q R",
    "X.~!X",
    "X.Y.~X | Y",
    "P.X.Q.!X | P Q",
    "A.~!A.B.~B",
];

#[test]
fn match_all_equals_exhaustive_segmentation() {
    for text in PATTERNS {
        let pattern: Pattern = text.parse().unwrap();
        let max = if pattern.atoms().len() > 5 { 6 } else { 8 };
        for w in reduced_words_up_to(2, max) {
            let got = pattern.match_all(&w);
            let set: BTreeSet<Binding> = got.iter().cloned().collect();
            assert_eq!(set.len(), got.len(), "{text} on {}: duplicates", *w);
            assert_eq!(set, brute_force(&pattern, &w), "{text} on {}", *w);
            assert_eq!(pattern.match_word(&w), got.first().cloned());
            for b in &got {
                assert!(pattern.accepts(b, &w));
            }
        }
    }
}

#[test]
fn unreduced_targets_are_matched_literally() {
    let pattern: Pattern = "X.Y".parse().unwrap();
    let w = parse_word("aA", 1).unwrap();
    assert_eq!(pattern.match_all(&w).len(), 3);
    assert_eq!(
        "P.Q | P Q".parse::<Pattern>().unwrap().match_all(&parse_word("abBa", 2).unwrap()).len(),
        brute_force(&"P.Q | P Q".parse().unwrap(), &parse_word("abBa", 2).unwrap()).len()
    );
}

fn word_strategy() -> impl Strategy<Value = Word> {
    proptest::collection::vec(0u32..6, 0..14).prop_map(|codes| {
        Word::from_letters(codes.into_iter().map(palgroup::Letter::from_code).collect())
    })
}

proptest! {
    #[test]
    fn every_match_is_sound(w in word_strategy(), idx in 0..PATTERNS.len()) {
        let pattern: Pattern = PATTERNS[idx].parse().unwrap();
        for b in pattern.match_all(&w) {
            prop_assert!(pattern.accepts(&b, &w));
        }
    }

    #[test]
    fn substituted_bindings_are_found(values in proptest::collection::vec(word_strategy(), 4)) {
        // build a target from arbitrary values and ask the matcher to recover one
        let pattern: Pattern = "A.B.~!A.C.!B".parse().unwrap();
        let b: Binding = ["A", "B", "C"].iter().zip(&values).map(|(n, v)| (*n, v.clone())).collect();
        let w = pattern.substitute(&b).unwrap();
        let all = pattern.match_all(&w);
        prop_assert!(all.contains(&b));
    }

    #[test]
    fn matches_commute_with_mirror(w in word_strategy()) {
        // w = A.P.Q.!A with P, Q palindromes iff ~w = ~!A.Q.P.~A
        let fwd: Pattern = "A.P.Q.!A | P Q".parse().unwrap();
        let back: Pattern = "~!A.Q.P.~A | P Q".parse().unwrap();
        prop_assert_eq!(fwd.match_all(&w).len(), back.match_all(&w.mirror()).len());
    }
}
