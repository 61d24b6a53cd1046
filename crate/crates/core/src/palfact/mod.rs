//! Semigroup palindromic length `|X|_p`: a reference dynamic program over a
//! [`PalTable`] and an `O(n log n)` path over the [`Eertree`].

mod eertree;
mod table;

pub use eertree::Eertree;
pub use table::PalTable;

use std::fmt;

use crate::words::Word;

/// A factorization of a word into nonempty palindromes (plain concatenation).
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Factorization {
    pub factors: Vec<Word>,
}

impl Factorization {
    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn concatenation(&self) -> Word {
        Word::concat_all(&self.factors)
    }

    /// Every factor is a nonempty palindrome and the factors spell `w`.
    pub fn is_valid_for(&self, w: &Word) -> bool {
        self.factors
            .iter()
            .all(|f| !f.is_empty() && f.is_palindrome())
            && self.concatenation() == *w
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("1");
        }
        for (i, p) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SemigroupPl {
    pub k: usize,
    pub witness: Factorization,
}

/// Minimal palindromic factorization by dynamic programming over suffixes.
///
/// Among minimal factorizations the witness has the lexicographically
/// smallest sequence of split positions.
pub fn semigroup_pl(w: &Word) -> SemigroupPl {
    let table = PalTable::new(w.letters());
    semigroup_pl_with(w, &table)
}

pub fn semigroup_pl_with(w: &Word, table: &PalTable) -> SemigroupPl {
    let n = w.len();
    let reach = table.max_palindrome_len();
    // best[i]: |w[i..]|_p; next[i]: smallest end of a first factor achieving it
    let mut best = vec![0usize; n + 1];
    let mut next = vec![n; n + 1];
    for i in (0..n).rev() {
        let mut b = usize::MAX;
        let mut nx = n;
        for j in i + 1..=n.min(i + reach) {
            if best[j] + 1 < b && table.is_pal(i, j) {
                b = best[j] + 1;
                nx = j;
            }
        }
        best[i] = b;
        next[i] = nx;
    }
    let mut factors = Vec::with_capacity(best[0]);
    let mut i = 0;
    while i < n {
        factors.push(w.slice(i, next[i]));
        i = next[i];
    }
    SemigroupPl {
        k: best[0],
        witness: Factorization { factors },
    }
}

/// `|w|_p` via the palindromic tree and series links.
pub fn semigroup_pl_fast(w: &Word) -> usize {
    *Eertree::new(w.letters())
        .prefix_palindromic_lengths()
        .last()
        .expect("prefix lengths include the empty prefix")
}

/// A factorization into at most `k` nonempty palindromes, if one exists.
///
/// The returned witness is the minimal one from [`semigroup_pl`].
pub fn pl_at_most(w: &Word, k: usize) -> Option<Factorization> {
    let r = semigroup_pl(w);
    (r.k <= k).then_some(r.witness)
}

/// The two inequalities `|X|_p ≤ |Y|_p + |XY|_p` and `|Y|_p ≤ |X|_p + |XY|_p`.
pub fn saarela_check(x: &Word, y: &Word) -> bool {
    let px = semigroup_pl(x).k;
    let py = semigroup_pl(y).k;
    let pxy = semigroup_pl(&x.concat(y)).k;
    px <= py + pxy && py <= px + pxy
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::{parse_word, reduced_words_up_to};

    fn w(s: &str) -> Word {
        parse_word(s, 26).unwrap()
    }

    fn strings(f: &Factorization) -> Vec<String> {
        f.factors.iter().map(|p| p.to_string()).collect()
    }

    /// Exhaustive minimum over all 2^(n-1) split sets.
    fn brute_pl(w: &Word) -> usize {
        let n = w.len();
        if n == 0 {
            return 0;
        }
        let mut best = n;
        for mask in 0u32..1 << (n - 1) {
            let mut start = 0;
            let mut ok = true;
            let mut count = 0;
            for end in 1..=n {
                if end == n || mask >> (end - 1) & 1 == 1 {
                    ok &= w.slice(start, end).is_palindrome();
                    count += 1;
                    start = end;
                }
            }
            if ok {
                best = best.min(count);
            }
        }
        best
    }

    #[test]
    fn semigroup_examples() {
        assert_eq!(semigroup_pl(&w("abca")).k, 4);
        assert_eq!(semigroup_pl(&w("abcdba")).k, 6);
        let r = semigroup_pl(&w("abba"));
        assert_eq!(r.k, 1);
        assert_eq!(strings(&r.witness), ["abba"]);
        assert_eq!(semigroup_pl(&Word::empty()).k, 0);
    }

    #[test]
    fn fast_examples() {
        assert_eq!(semigroup_pl_fast(&w("abca")), 4);
        assert_eq!(semigroup_pl_fast(&w("aaaa")), 1);
        assert_eq!(semigroup_pl_fast(&Word::empty()), 0);
    }

    #[test]
    fn at_most_examples() {
        assert_eq!(strings(&pl_at_most(&w("aab"), 2).unwrap()), ["aa", "b"]);
        assert!(pl_at_most(&w("abc"), 2).is_none());
        assert_eq!(strings(&pl_at_most(&w("abc"), 3).unwrap()), ["a", "b", "c"]);
        assert_eq!(pl_at_most(&Word::empty(), 1).unwrap().len(), 0);
    }

    #[test]
    fn witness_prefers_leftmost_splits() {
        // a·bab and aba·b are both minimal
        let r = semigroup_pl(&w("abab"));
        assert_eq!(r.k, 2);
        assert_eq!(strings(&r.witness), ["a", "bab"]);
    }

    #[test]
    fn dp_and_fast_match_brute_force() {
        for word in reduced_words_up_to(2, 7) {
            let word: &Word = &word;
            let r = semigroup_pl(word);
            assert_eq!(r.k, brute_pl(word), "{word}");
            assert!(r.witness.is_valid_for(word), "{word}");
            assert_eq!(semigroup_pl_fast(word), r.k, "{word}");
        }
    }

    #[test]
    fn saarela_examples() {
        assert!(saarela_check(&w("ab"), &w("ba")));
        assert!(saarela_check(&w("a"), &Word::empty()));
    }
}
