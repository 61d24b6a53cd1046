//! Letters of `Σ ∪ Σ⁻¹`, words over them, free reduction, and the two
//! involutive antimorphisms (mirror image and group inverse).
//!
//! Text format: `a`..`z` are generators 0..25, the uppercase letter is the
//! inverse of its lowercase generator, and the single character `1` is the
//! empty word.

use std::fmt;
use std::ops::Deref;

use crate::error::{Error, Result};

/// A generator or the inverse of a generator, packed as `generator << 1 | inverted`.
///
/// The derived order is `a < A < b < B < ...`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter(u32);

impl Letter {
    pub const fn new(generator: u32, inverted: bool) -> Self {
        Letter(generator << 1 | inverted as u32)
    }

    pub const fn generator(self) -> u32 {
        self.0 >> 1
    }

    pub const fn is_inverted(self) -> bool {
        self.0 & 1 == 1
    }

    pub const fn inverse(self) -> Self {
        Letter(self.0 ^ 1)
    }

    /// Dense index in `0..2m`, usable as an array offset.
    pub const fn code(self) -> u32 {
        self.0
    }

    pub const fn from_code(code: u32) -> Self {
        Letter(code)
    }

    pub fn to_char(self) -> Option<char> {
        let g = self.generator();
        if g >= 26 {
            return None;
        }
        let base = if self.is_inverted() { b'A' } else { b'a' };
        Some((base + g as u8) as char)
    }
}

impl fmt::Debug for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.to_char() {
            Some(c) => write!(f, "{c}"),
            None if self.is_inverted() => write!(f, "[-{}]", self.generator()),
            None => write!(f, "[{}]", self.generator()),
        }
    }
}

/// One of the four compositions of mirror image and inverse.
///
/// They form the Klein four-group: `Mirror` reverses, `MirrorInverse` flips
/// every letter, `Inverse` does both.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Transform {
    Identity,
    Mirror,
    Inverse,
    MirrorInverse,
}

impl Transform {
    pub const ALL: [Transform; 4] = [
        Transform::Identity,
        Transform::Mirror,
        Transform::Inverse,
        Transform::MirrorInverse,
    ];

    pub const fn reverses(self) -> bool {
        matches!(self, Transform::Mirror | Transform::Inverse)
    }

    pub const fn flips(self) -> bool {
        matches!(self, Transform::Inverse | Transform::MirrorInverse)
    }

    pub const fn from_bits(reverses: bool, flips: bool) -> Self {
        match (reverses, flips) {
            (false, false) => Transform::Identity,
            (true, false) => Transform::Mirror,
            (true, true) => Transform::Inverse,
            (false, true) => Transform::MirrorInverse,
        }
    }

    /// `self ∘ other`. The group is abelian, so the order does not matter.
    pub const fn compose(self, other: Transform) -> Self {
        Transform::from_bits(
            self.reverses() ^ other.reverses(),
            self.flips() ^ other.flips(),
        )
    }

    /// Letter `k` of `self(letters)`, without materializing the image.
    #[inline]
    pub fn letter_at(self, letters: &[Letter], k: usize) -> Letter {
        let l = if self.reverses() {
            letters[letters.len() - 1 - k]
        } else {
            letters[k]
        };
        if self.flips() {
            l.inverse()
        } else {
            l
        }
    }

    pub fn apply(self, letters: &[Letter]) -> Word {
        Word((0..letters.len()).map(|k| self.letter_at(letters, k)).collect())
    }

    /// Prefix used by the pattern literal syntax.
    pub const fn prefix(self) -> &'static str {
        match self {
            Transform::Identity => "",
            Transform::Mirror => "~",
            Transform::Inverse => "!",
            Transform::MirrorInverse => "~!",
        }
    }
}

/// A finite sequence of letters, compared as a plain sequence (no reduction).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word(Vec<Letter>);

impl Word {
    pub const fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn from_letters(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    pub fn parse(text: &str, alphabet: u32) -> Result<Self> {
        parse_word(text, alphabet)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Largest generator index plus one; 0 for the empty word.
    pub fn alphabet_hint(&self) -> u32 {
        self.0.iter().map(|l| l.generator() + 1).max().unwrap_or(0)
    }

    pub fn slice(&self, start: usize, end: usize) -> Word {
        Word(self.0[start..end].to_vec())
    }

    /// Plain concatenation, no cancellation.
    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn concat_all<'a>(parts: impl IntoIterator<Item = &'a Word>) -> Word {
        let mut v = Vec::new();
        for p in parts {
            v.extend_from_slice(&p.0);
        }
        Word(v)
    }

    pub fn transform(&self, t: Transform) -> Word {
        t.apply(&self.0)
    }

    pub fn mirror(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    pub fn invert(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.inverse()).collect())
    }

    pub fn mirror_invert(&self) -> Word {
        Word(self.0.iter().map(|l| l.inverse()).collect())
    }

    pub fn is_palindrome(&self) -> bool {
        is_palindrome(&self.0)
    }

    pub fn is_reduced(&self) -> bool {
        self.0.windows(2).all(|p| p[1] != p[0].inverse())
    }

    pub fn reduce(&self) -> ReducedWord {
        let mut stack: Vec<Letter> = Vec::with_capacity(self.len());
        for &l in &self.0 {
            if stack.last() == Some(&l.inverse()) {
                stack.pop();
            } else {
                stack.push(l);
            }
        }
        ReducedWord(Word(stack))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for l in &self.0 {
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

/// Serialized as its text form, so reports read like the command line.
impl serde::Serialize for Word {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl serde::Serialize for ReducedWord {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(&self.0)
    }
}

impl From<ReducedWord> for Word {
    fn from(w: ReducedWord) -> Self {
        w.0
    }
}

/// A word with no factor `x x⁻¹`: the canonical form of a free-group element.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ReducedWord(Word);

impl ReducedWord {
    pub const fn empty() -> Self {
        ReducedWord(Word::empty())
    }

    pub fn new(word: Word) -> Result<Self> {
        if word.is_reduced() {
            Ok(ReducedWord(word))
        } else {
            Err(Error::NotReduced(word.to_string()))
        }
    }

    /// Parses and then requires the text to be already reduced.
    pub fn parse(text: &str, alphabet: u32) -> Result<Self> {
        ReducedWord::new(parse_word(text, alphabet)?)
    }

    pub fn as_word(&self) -> &Word {
        &self.0
    }

    pub fn into_word(self) -> Word {
        self.0
    }

    /// Group product: concatenation with cancellation at the seam only.
    pub fn concat(&self, other: &ReducedWord) -> ReducedWord {
        let a = self.0.letters();
        let b = other.0.letters();
        let mut k = 0;
        while k < a.len() && k < b.len() && b[k] == a[a.len() - 1 - k].inverse() {
            k += 1;
        }
        let mut v = Vec::with_capacity(a.len() + b.len() - 2 * k);
        v.extend_from_slice(&a[..a.len() - k]);
        v.extend_from_slice(&b[k..]);
        ReducedWord(Word(v))
    }

    pub fn product<'a>(factors: impl IntoIterator<Item = &'a ReducedWord>) -> ReducedWord {
        factors
            .into_iter()
            .fold(ReducedWord::empty(), |acc, f| acc.concat(f))
    }

    pub fn mirror(&self) -> ReducedWord {
        ReducedWord(self.0.mirror())
    }

    pub fn invert(&self) -> ReducedWord {
        ReducedWord(self.0.invert())
    }

    pub fn mirror_invert(&self) -> ReducedWord {
        ReducedWord(self.0.mirror_invert())
    }
}

impl Deref for ReducedWord {
    type Target = Word;

    fn deref(&self) -> &Word {
        &self.0
    }
}

impl fmt::Display for ReducedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl fmt::Debug for ReducedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ReducedWord({})", self.0)
    }
}

pub fn is_palindrome(letters: &[Letter]) -> bool {
    let n = letters.len();
    (0..n / 2).all(|i| letters[i] == letters[n - 1 - i])
}

pub fn parse_word(text: &str, alphabet: u32) -> Result<Word> {
    if text.is_empty() {
        return Err(Error::EmptyText);
    }
    if text == "1" {
        return Ok(Word::empty());
    }
    let mut letters = Vec::with_capacity(text.len());
    for (pos, ch) in text.chars().enumerate() {
        let letter = match ch {
            'a'..='z' => Letter::new(ch as u32 - 'a' as u32, false),
            'A'..='Z' => Letter::new(ch as u32 - 'A' as u32, true),
            _ => {
                return Err(Error::BadCharacter {
                    text: text.to_string(),
                    pos,
                    ch,
                })
            }
        };
        if letter.generator() >= alphabet {
            return Err(Error::GeneratorOutOfRange {
                generator: letter.generator(),
                alphabet,
            });
        }
        letters.push(letter);
    }
    Ok(Word(letters))
}

pub fn format_word(w: &Word) -> String {
    w.to_string()
}

/// Every reduced word of length `len` over `alphabet` generators, in
/// lexicographic order of the letter order `a < A < b < ...`.
pub fn reduced_words_of_length(alphabet: u32, len: usize) -> Vec<ReducedWord> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(len);
    fn go(alphabet: u32, len: usize, cur: &mut Vec<Letter>, out: &mut Vec<ReducedWord>) {
        if cur.len() == len {
            out.push(ReducedWord(Word(cur.clone())));
            return;
        }
        for code in 0..2 * alphabet {
            let l = Letter::from_code(code);
            if cur.last().is_some_and(|&p| p == l.inverse()) {
                continue;
            }
            cur.push(l);
            go(alphabet, len, cur, out);
            cur.pop();
        }
    }
    go(alphabet, len, &mut cur, &mut out);
    out
}

/// Number of reduced words of length `len` over `alphabet` generators.
pub fn count_reduced_words(alphabet: u32, len: usize) -> u128 {
    if len == 0 {
        return 1;
    }
    let m = alphabet as u128;
    if m == 0 {
        return 0;
    }
    let mut n = 2 * m;
    for _ in 1..len {
        n = n.saturating_mul(2 * m - 1);
    }
    n
}

/// Reduced words of length `0..=max_len` in shortlex order.
pub fn reduced_words_up_to(alphabet: u32, max_len: usize) -> Vec<ReducedWord> {
    (0..=max_len)
        .flat_map(|len| reduced_words_of_length(alphabet, len))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        parse_word(s, 26).unwrap()
    }

    #[test]
    fn parse_examples() {
        let a = Letter::new(0, false);
        let b = Letter::new(1, false);
        assert_eq!(parse_word("abA", 2).unwrap().letters(), &[a, b, a.inverse()]);
        assert!(parse_word("1", 2).unwrap().is_empty());
        assert_eq!(parse_word("aBa", 2).unwrap().letters(), &[a, b.inverse(), a]);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            parse_word("ab c", 3),
            Err(Error::BadCharacter { pos: 2, ch: ' ', .. })
        ));
        assert!(matches!(parse_word("a1", 3), Err(Error::BadCharacter { .. })));
        assert!(matches!(
            parse_word("abc", 2),
            Err(Error::GeneratorOutOfRange { generator: 2, alphabet: 2 })
        ));
        assert!(matches!(parse_word("", 2), Err(Error::EmptyText)));
    }

    #[test]
    fn format_examples() {
        assert_eq!(w("aBa").to_string(), "aBa");
        assert_eq!(Word::empty().to_string(), "1");
        assert_eq!(w("aa").to_string(), "aa");
        assert_eq!(Letter::new(30, true).to_string(), "[-30]");
    }

    #[test]
    fn reduce_examples() {
        assert_eq!(w("aA").reduce().to_string(), "1");
        assert_eq!(w("abBA").reduce().to_string(), "1");
        assert_eq!(w("abcCBd").reduce().to_string(), "ad");
    }

    #[test]
    fn concat_examples() {
        let r = |s: &str| ReducedWord::parse(s, 26).unwrap();
        assert_eq!(r("ab").concat(&r("BA")).to_string(), "1");
        assert_eq!(r("ab").concat(&r("cd")).to_string(), "abcd");
        assert_eq!(r("abc").concat(&r("Cd")).to_string(), "abd");
    }

    #[test]
    fn antimorphism_examples() {
        assert_eq!(w("ab").mirror().to_string(), "ba");
        assert_eq!(w("aBc").mirror().to_string(), "cBa");
        assert_eq!(Word::empty().mirror().to_string(), "1");
        assert_eq!(w("ab").invert().to_string(), "BA");
        assert_eq!(w("aB").invert().to_string(), "bA");
        assert_eq!(Word::empty().invert().to_string(), "1");
        assert_eq!(w("ab").mirror_invert().to_string(), "AB");
        assert_eq!(w("aB").mirror_invert().to_string(), "Ab");
        assert_eq!(Word::empty().mirror_invert().to_string(), "1");
    }

    #[test]
    fn palindrome_examples() {
        assert!(w("aBa").is_palindrome());
        assert!(!w("ab").is_palindrome());
        assert!(Word::empty().is_palindrome());
    }

    #[test]
    fn transforms_match_named_operations() {
        let x = w("abCaB");
        assert_eq!(x.transform(Transform::Mirror), x.mirror());
        assert_eq!(x.transform(Transform::Inverse), x.invert());
        assert_eq!(x.transform(Transform::MirrorInverse), x.mirror_invert());
        for s in Transform::ALL {
            for t in Transform::ALL {
                assert_eq!(
                    x.transform(t).transform(s),
                    x.transform(s.compose(t)),
                    "{s:?} after {t:?}"
                );
            }
        }
    }

    #[test]
    fn reduced_counts() {
        for m in 1..=3 {
            for len in 0..=5 {
                assert_eq!(
                    reduced_words_of_length(m, len).len() as u128,
                    count_reduced_words(m, len)
                );
            }
        }
        let words: Vec<String> = reduced_words_up_to(1, 2).iter().map(|w| w.to_string()).collect();
        assert_eq!(words, ["1", "a", "A", "aa", "AA"]);
    }

    #[test]
    fn reduced_word_rejects_cancelling_pair() {
        assert!(ReducedWord::parse("abBa", 2).is_err());
        assert!(ReducedWord::parse("abab", 2).is_ok());
    }
}
