//! Group palindromic length up to three: exact deciders by reduced form,
//! constructive decompositions into palindromes, product closures and the
//! four-palindrome experiment.
//!
//! A reduced word is a product of at most two palindromes iff it is
//! `A P Q A⁻¹` as written, and of at most three iff it is
//! `A B P Q B⁻¹ R Ā` or `A P B Q R B⁻¹ Ā`, with `P, Q, R` palindromes
//! (possibly empty) and `Ā` the mirror image of `A`.

mod closure;
mod verify;

pub use closure::{enumerate_palindromes, in_product_closure, product_closure, ClosureSet};
pub use verify::{k4_experiment, verify_theorem2, verify_theorem3, K4_FORMS};

use std::fmt;
use std::sync::OnceLock;

use serde::Serialize;

use crate::palfact::PalTable;
use crate::pattern::{Binding, Pattern};
use crate::words::{ReducedWord, Word};

pub const PL2_PATTERN: &str = "A.P.Q.!A | P Q";
pub const ABP_PATTERN: &str = "A.B.P.Q.!B.R.~A | P Q R";
pub const APB_PATTERN: &str = "A.P.B.Q.R.!B.~A | P Q R";

fn abp() -> &'static Pattern {
    static P: OnceLock<Pattern> = OnceLock::new();
    P.get_or_init(|| ABP_PATTERN.parse().expect("valid pattern"))
}

fn apb() -> &'static Pattern {
    static P: OnceLock<Pattern> = OnceLock::new();
    P.get_or_init(|| APB_PATTERN.parse().expect("valid pattern"))
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Pl2Witness {
    pub a: Word,
    pub p: Word,
    pub q: Word,
}

impl Pl2Witness {
    /// `A P Q A⁻¹` as a plain concatenation.
    pub fn spell(&self) -> Word {
        Word::concat_all([&self.a, &self.p, &self.q, &self.a.invert()])
    }
}

impl fmt::Display for Pl2Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "A={} P={} Q={}", self.a, self.p, self.q)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
pub enum Pl3Variant {
    #[serde(rename = "ABP")]
    Abp,
    #[serde(rename = "APB")]
    Apb,
}

impl fmt::Display for Pl3Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Pl3Variant::Abp => "ABP",
            Pl3Variant::Apb => "APB",
        })
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Pl3Witness {
    pub variant: Pl3Variant,
    pub a: Word,
    pub b: Word,
    pub p: Word,
    pub q: Word,
    pub r: Word,
}

impl Pl3Witness {
    pub fn spell(&self) -> Word {
        let (a, b) = (&self.a, &self.b);
        match self.variant {
            Pl3Variant::Abp => Word::concat_all([
                a,
                b,
                &self.p,
                &self.q,
                &b.invert(),
                &self.r,
                &a.mirror(),
            ]),
            Pl3Variant::Apb => Word::concat_all([
                a,
                &self.p,
                b,
                &self.q,
                &self.r,
                &b.invert(),
                &a.mirror(),
            ]),
        }
    }

    fn from_binding(variant: Pl3Variant, b: &Binding) -> Self {
        let get = |k: &str| b.get(k).expect("pattern variable").clone();
        Pl3Witness {
            variant,
            a: get("A"),
            b: get("B"),
            p: get("P"),
            q: get("Q"),
            r: get("R"),
        }
    }
}

impl fmt::Display for Pl3Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} A={} B={} P={} Q={} R={}",
            self.variant, self.a, self.b, self.p, self.q, self.r
        )
    }
}

/// `w` as `A P Q A⁻¹`. Among all forms, `A` is longest, then `P`.
pub fn match_pl2(w: &ReducedWord) -> Option<Pl2Witness> {
    let l = w.letters();
    let n = l.len();
    let mut a_max = 0;
    while a_max < n / 2 && l[n - 1 - a_max] == l[a_max].inverse() {
        a_max += 1;
    }
    let table = PalTable::new(l);
    for a in (0..=a_max).rev() {
        let end = n - a;
        for mid in (a..=end).rev() {
            if table.is_pal(a, mid) && table.is_pal(mid, end) {
                return Some(Pl2Witness {
                    a: w.slice(0, a),
                    p: w.slice(a, mid),
                    q: w.slice(mid, end),
                });
            }
        }
    }
    None
}

/// `w` as an ABP-word or, failing that, an APB-word.
pub fn match_pl3(w: &ReducedWord) -> Option<Pl3Witness> {
    if let Some(b) = abp().match_word(w) {
        return Some(Pl3Witness::from_binding(Pl3Variant::Abp, &b));
    }
    apb()
        .match_word(w)
        .map(|b| Pl3Witness::from_binding(Pl3Variant::Apb, &b))
}

/// `A P Q A⁻¹ = (A P Ā)(Ā⁻¹ Q A⁻¹)`, each factor freely reduced.
pub fn decompose_pl2(wit: &Pl2Witness) -> [ReducedWord; 2] {
    let a = &wit.a;
    [
        Word::concat_all([a, &wit.p, &a.mirror()]).reduce(),
        Word::concat_all([&a.mirror_invert(), &wit.q, &a.invert()]).reduce(),
    ]
}

/// The two three-palindrome identities:
///
/// `A B P Q B⁻¹ R Ā = (A B P B̄ Ā)(Ā⁻¹ B̄⁻¹ Q B⁻¹ A⁻¹)(A R Ā)` and
/// `A P B Q R B⁻¹ Ā = (A P Ā)(Ā⁻¹ B Q B̄ A⁻¹)(A B̄⁻¹ R B⁻¹ Ā)`.
pub fn decompose_pl3(wit: &Pl3Witness) -> [ReducedWord; 3] {
    let (a, b) = (&wit.a, &wit.b);
    // Ā⁻¹ is the letterwise inverse of A, no reversal
    let (a_bar, a_inv, a_bar_inv) = (a.mirror(), a.invert(), a.mirror_invert());
    let (b_bar, b_inv, b_bar_inv) = (b.mirror(), b.invert(), b.mirror_invert());
    let parts: [Word; 3] = match wit.variant {
        Pl3Variant::Abp => [
            Word::concat_all([a, b, &wit.p, &b_bar, &a_bar]),
            Word::concat_all([&a_bar_inv, &b_bar_inv, &wit.q, &b_inv, &a_inv]),
            Word::concat_all([a, &wit.r, &a_bar]),
        ],
        Pl3Variant::Apb => [
            Word::concat_all([a, &wit.p, &a_bar]),
            Word::concat_all([&a_bar_inv, b, &wit.q, &b_bar, &a_inv]),
            Word::concat_all([a, &b_bar_inv, &wit.r, &b_inv, &a_bar]),
        ],
    };
    parts.map(|p| p.reduce())
}

/// Every factor is a palindrome no longer than `2|w|` and the reduced product
/// of the factors is `w`.
pub fn factors_verify(factors: &[ReducedWord], w: &ReducedWord) -> bool {
    factors
        .iter()
        .all(|f| f.is_palindrome() && f.len() <= 2 * w.len())
        && ReducedWord::product(factors) == *w
}

/// Group palindromic length when it is at most three.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum GroupPl {
    Exact(u8),
    AboveThree,
}

impl fmt::Display for GroupPl {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupPl::Exact(k) => write!(f, "{k}"),
            GroupPl::AboveThree => f.write_str(">3"),
        }
    }
}

impl Serialize for GroupPl {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            GroupPl::Exact(k) => s.serialize_u8(*k),
            GroupPl::AboveThree => s.serialize_str(">3"),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
#[serde(tag = "form")]
pub enum GroupForm {
    Empty,
    Palindrome,
    Pl2(Pl2Witness),
    Pl3(Pl3Witness),
    Unknown,
}

/// The value, the reduced form that proves it, and palindrome factors.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct GroupPlResult {
    pub value: GroupPl,
    pub form: GroupForm,
    pub factors: Vec<ReducedWord>,
}

pub fn group_pl_small(w: &ReducedWord) -> GroupPl {
    group_pl_detailed(w).value
}

pub fn group_pl_detailed(w: &ReducedWord) -> GroupPlResult {
    if w.is_empty() {
        return GroupPlResult {
            value: GroupPl::Exact(0),
            form: GroupForm::Empty,
            factors: Vec::new(),
        };
    }
    if w.is_palindrome() {
        return GroupPlResult {
            value: GroupPl::Exact(1),
            form: GroupForm::Palindrome,
            factors: vec![w.clone()],
        };
    }
    if let Some(wit) = match_pl2(w) {
        return GroupPlResult {
            value: GroupPl::Exact(2),
            factors: decompose_pl2(&wit).to_vec(),
            form: GroupForm::Pl2(wit),
        };
    }
    if let Some(wit) = match_pl3(w) {
        return GroupPlResult {
            value: GroupPl::Exact(3),
            factors: decompose_pl3(&wit).to_vec(),
            form: GroupForm::Pl3(wit),
        };
    }
    GroupPlResult {
        value: GroupPl::AboveThree,
        form: GroupForm::Unknown,
        factors: Vec::new(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> ReducedWord {
        ReducedWord::parse(s, 26).unwrap()
    }

    fn strs<const N: usize>(f: &[ReducedWord; N]) -> Vec<String> {
        f.iter().map(|w| w.to_string()).collect()
    }

    #[test]
    fn pl2_examples() {
        assert_eq!(match_pl2(&r("abA")).unwrap().to_string(), "A=a P=b Q=1");
        assert_eq!(match_pl2(&r("ab")).unwrap().to_string(), "A=1 P=a Q=b");
        assert!(match_pl2(&r("abc")).is_none());
        assert_eq!(match_pl2(&r("1")).unwrap().to_string(), "A=1 P=1 Q=1");
    }

    #[test]
    fn pl2_agrees_with_generic_matcher() {
        let pattern: Pattern = PL2_PATTERN.parse().unwrap();
        for w in crate::words::reduced_words_up_to(2, 8) {
            let fast = match_pl2(&w);
            let generic = pattern.match_word(&w).map(|b| Pl2Witness {
                a: b.get("A").unwrap().clone(),
                p: b.get("P").unwrap().clone(),
                q: b.get("Q").unwrap().clone(),
            });
            assert_eq!(fast, generic, "{w}");
        }
    }

    #[test]
    fn decompose_pl2_examples() {
        let w = |a: &str, p: &str, q: &str| Pl2Witness {
            a: r(a).into_word(),
            p: r(p).into_word(),
            q: r(q).into_word(),
        };
        assert_eq!(strs(&decompose_pl2(&w("a", "b", "1"))), ["aba", "AA"]);
        assert_eq!(strs(&decompose_pl2(&w("1", "a", "b"))), ["a", "b"]);
        // (ab)(ba) then (AB)(BA)
        assert_eq!(strs(&decompose_pl2(&w("ab", "1", "1"))), ["abba", "ABBA"]);
    }

    #[test]
    fn pl3_examples() {
        let wit = match_pl3(&r("abcdba")).unwrap();
        assert_eq!(wit.to_string(), "ABP A=ab B=1 P=c Q=d R=1");
        assert_eq!(strs(&decompose_pl3(&wit)), ["abcba", "ABdBA", "abba"]);
        assert!(factors_verify(&decompose_pl3(&wit), &r("abcdba")));

        let wit = match_pl3(&r("abca")).unwrap();
        assert_eq!(wit.spell(), r("abca").into_word());
        assert!(factors_verify(&decompose_pl3(&wit), &r("abca")));

        assert_eq!(match_pl3(&r("abc")).unwrap().to_string(), "ABP A=1 B=1 P=a Q=b R=c");
    }

    #[test]
    fn decompose_pl3_trivial() {
        let wit = Pl3Witness {
            variant: Pl3Variant::Apb,
            a: Word::empty(),
            b: Word::empty(),
            p: r("a").into_word(),
            q: r("b").into_word(),
            r: r("c").into_word(),
        };
        assert_eq!(strs(&decompose_pl3(&wit)), ["a", "b", "c"]);
        let empty = Pl3Witness {
            variant: Pl3Variant::Abp,
            a: Word::empty(),
            b: Word::empty(),
            p: Word::empty(),
            q: Word::empty(),
            r: Word::empty(),
        };
        let f = decompose_pl3(&empty);
        assert!(f.iter().all(|x| x.is_empty()));
        assert!(factors_verify(&f, &ReducedWord::empty()));
    }

    #[test]
    fn group_pl_examples() {
        assert_eq!(group_pl_small(&r("abca")), GroupPl::Exact(3));
        assert_eq!(group_pl_small(&r("aba")), GroupPl::Exact(1));
        assert_eq!(group_pl_small(&r("abA")), GroupPl::Exact(2));
        assert_eq!(group_pl_small(&r("1")), GroupPl::Exact(0));
        assert_eq!(GroupPl::AboveThree.to_string(), ">3");
        let d = group_pl_detailed(&r("abca"));
        assert_eq!(d.factors.len(), 3);
        assert!(factors_verify(&d.factors, &r("abca")));
    }
}
