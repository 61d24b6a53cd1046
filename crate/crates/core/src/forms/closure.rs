use std::collections::HashMap;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::pattern::MAX_ENUMERATED_WORDS;
use crate::words::{count_reduced_words, reduced_words_of_length, Letter, ReducedWord, Word};

/// Upper bound on palindrome products a closure may form.
pub const MAX_CLOSURE_PRODUCTS: u128 = 2_000_000_000;

fn palindrome_count(alphabet: u32, max_len: usize) -> u128 {
    (0..=max_len)
        .map(|n| {
            if n == 0 {
                1
            } else {
                count_reduced_words(alphabet, n.div_ceil(2))
            }
        })
        .fold(0u128, |a, b| a.saturating_add(b))
}

/// All reduced palindromes of length at most `max_len`, in shortlex order.
///
/// A reduced palindrome is determined by its first `⌈n/2⌉` letters, which
/// form an arbitrary reduced word.
pub fn enumerate_palindromes(alphabet: u32, max_len: usize) -> Result<Vec<ReducedWord>> {
    let total = palindrome_count(alphabet, max_len);
    if total > MAX_ENUMERATED_WORDS {
        return Err(Error::BoundTooLarge(format!(
            "{total} palindromes for m = {alphabet}, length <= {max_len}"
        )));
    }
    let mut out = Vec::with_capacity(total as usize);
    out.push(ReducedWord::empty());
    for n in 1..=max_len {
        for half in reduced_words_of_length(alphabet, n.div_ceil(2)) {
            let mut letters = half.letters().to_vec();
            let keep = n / 2;
            letters.extend(half.letters()[..keep].iter().rev());
            out.push(ReducedWord::new(Word::from_letters(letters)).expect("mirrored half is reduced"));
        }
    }
    Ok(out)
}

/// Reduced products of at most `k` reduced palindromes of length at most `L`,
/// each member with the first witness found breadth-first.
#[derive(Clone, Debug)]
pub struct ClosureSet {
    pub alphabet: u32,
    pub k: usize,
    pub max_factor_len: usize,
    members: HashMap<ReducedWord, Vec<ReducedWord>>,
}

impl ClosureSet {
    pub fn contains(&self, w: &ReducedWord) -> bool {
        self.members.contains_key(w)
    }

    /// Nonempty palindromes whose reduced product is `w`.
    pub fn witness(&self, w: &ReducedWord) -> Option<&[ReducedWord]> {
        self.members.get(w).map(Vec::as_slice)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Members in shortlex order.
    pub fn words(&self) -> Vec<&ReducedWord> {
        let mut v: Vec<&ReducedWord> = self.members.keys().collect();
        v.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        v
    }
}

pub fn product_closure(alphabet: u32, k: usize, max_factor_len: usize) -> Result<ClosureSet> {
    let pals = enumerate_palindromes(alphabet, max_factor_len)?;
    let products = (pals.len() as u128).saturating_pow(k as u32);
    if products > MAX_CLOSURE_PRODUCTS {
        return Err(Error::BoundTooLarge(format!(
            "up to {products} products of {k} palindromes"
        )));
    }
    let mut members = HashMap::new();
    members.insert(ReducedWord::empty(), Vec::new());
    let mut frontier = vec![ReducedWord::empty()];
    // the empty palindrome makes level j contain level j-1, so only the
    // words new at the previous level need extending
    for _ in 0..k {
        if frontier.is_empty() {
            break;
        }
        let found: Vec<Vec<(ReducedWord, usize, usize)>> = frontier
            .par_iter()
            .enumerate()
            .map(|(i, u)| {
                pals.iter()
                    .enumerate()
                    .skip(1)
                    .filter_map(|(j, p)| {
                        let w = u.concat(p);
                        (!members.contains_key(&w)).then_some((w, i, j))
                    })
                    .collect()
            })
            .collect();
        let mut next = Vec::new();
        for (w, i, j) in found.into_iter().flatten() {
            if members.contains_key(&w) {
                continue;
            }
            let mut wit = members[&frontier[i]].clone();
            wit.push(pals[j].clone());
            members.insert(w.clone(), wit);
            next.push(w);
        }
        next.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        frontier = next;
    }
    Ok(ClosureSet {
        alphabet,
        k,
        max_factor_len,
        members,
    })
}

/// Letter-valued variables related by equality or inversion, some fixed.
struct Classes {
    parent: Vec<usize>,
    /// 1 when the value is the inverse of the parent's value
    flip: Vec<bool>,
    fixed: Vec<Option<Letter>>,
}

impl Classes {
    fn new() -> Self {
        Classes {
            parent: Vec::new(),
            flip: Vec::new(),
            fixed: Vec::new(),
        }
    }

    fn node(&mut self, fixed: Option<Letter>) -> usize {
        self.parent.push(self.parent.len());
        self.flip.push(false);
        self.fixed.push(fixed);
        self.parent.len() - 1
    }

    fn find(&mut self, x: usize) -> (usize, bool) {
        let p = self.parent[x];
        if p == x {
            return (x, false);
        }
        let (root, f) = self.find(p);
        self.parent[x] = root;
        self.flip[x] ^= f;
        (root, self.flip[x])
    }

    /// Imposes `value(a)^fa == value(b)^fb`; false on contradiction.
    fn unify(&mut self, (a, fa): (usize, bool), (b, fb): (usize, bool)) -> bool {
        let (ra, pa) = self.find(a);
        let (rb, pb) = self.find(b);
        let rel = pa ^ fa ^ pb ^ fb;
        if ra == rb {
            // a letter never equals its own inverse
            return !rel;
        }
        let implied = self.fixed[ra].map(|l| if rel { l.inverse() } else { l });
        match (implied, self.fixed[rb]) {
            (Some(x), Some(y)) if x != y => return false,
            (Some(x), None) => self.fixed[rb] = Some(x),
            _ => {}
        }
        self.parent[ra] = rb;
        self.flip[ra] = rel;
        true
    }
}

/// A sequence of signed nodes, read as a word.
type Seq = Vec<(usize, bool)>;

fn unknown(c: &mut Classes, len: usize) -> Seq {
    (0..len).map(|_| (c.node(None), false)).collect()
}

fn inverse(s: &[(usize, bool)]) -> Seq {
    s.iter().rev().map(|&(n, f)| (n, !f)).collect()
}

fn palindromic(c: &mut Classes, parts: &[&[(usize, bool)]]) -> bool {
    let s: Seq = parts.concat();
    let n = s.len();
    (0..n / 2).all(|i| c.unify(s[i], s[n - 1 - i]))
}

/// Whether `w` is the reduced product of at most `k ≤ 3` palindromes of
/// length at most `bound`, decided without enumerating palindromes.
///
/// Free cancellation between consecutive reduced factors leaves one of a few
/// shapes; for each split of `w` and each length of the cancelled segments the
/// palindrome conditions become letter equalities, solved by union-find.
/// Factors need not be reduced here: a palindrome reduces to a shorter one.
pub fn in_product_closure(w: &ReducedWord, k: usize, bound: usize) -> Result<bool> {
    let n = w.len();
    match k {
        0 => Ok(n == 0),
        1 => Ok(n <= bound && w.is_palindrome()),
        2 => Ok(in_product_closure(w, 1, bound)? || two_shape(w, bound)),
        3 => Ok(in_product_closure(w, 2, bound)? || three_shapes(w, bound)),
        _ => Err(Error::Unsupported(format!(
            "closure membership without enumeration is implemented for k <= 3, not {k}"
        ))),
    }
}

fn letters(c: &mut Classes, w: &[Letter]) -> Seq {
    w.iter().map(|&l| (c.node(Some(l)), false)).collect()
}

// w = a c; p1 = a x, p2 = x⁻¹ c
fn two_shape(w: &ReducedWord, bound: usize) -> bool {
    let l = w.letters();
    let n = l.len();
    for i in 0..=n {
        let (a, c) = (i, n - i);
        for s in 0..=bound.saturating_sub(a.max(c)) {
            if a + s > bound || s + c > bound {
                continue;
            }
            let mut cl = Classes::new();
            let wa = letters(&mut cl, &l[..i]);
            let wc = letters(&mut cl, &l[i..]);
            let x = unknown(&mut cl, s);
            if palindromic(&mut cl, &[&wa, &x]) && palindromic(&mut cl, &[&inverse(&x), &wc]) {
                return true;
            }
        }
    }
    false
}

fn three_shapes(w: &ReducedWord, bound: usize) -> bool {
    let l = w.letters();
    let n = l.len();
    // w = a m c; p1 = a x, p2 = x⁻¹ m y, p3 = y⁻¹ c
    for i in 0..=n {
        for j in i..=n {
            let (a, m, c) = (i, j - i, n - j);
            if a > bound || c > bound || m > bound {
                continue;
            }
            for s in 0..=bound - a {
                for t in 0..=(bound - c).min(bound.saturating_sub(s + m)) {
                    if s + m + t > bound {
                        continue;
                    }
                    let mut cl = Classes::new();
                    let wa = letters(&mut cl, &l[..i]);
                    let wm = letters(&mut cl, &l[i..j]);
                    let wc = letters(&mut cl, &l[j..]);
                    let x = unknown(&mut cl, s);
                    let y = unknown(&mut cl, t);
                    if palindromic(&mut cl, &[&wa, &x])
                        && palindromic(&mut cl, &[&inverse(&x), &wm, &y])
                        && palindromic(&mut cl, &[&inverse(&y), &wc])
                    {
                        return true;
                    }
                }
            }
        }
    }
    // w = a c; p1 = a z x, p2 = x⁻¹ b, p3 = b⁻¹ z⁻¹ c
    for i in 0..=n {
        let (a, c) = (i, n - i);
        if a > bound || c > bound {
            continue;
        }
        for r in 0..=bound - a.max(c) {
            for s in 0..=bound - a - r {
                for u in 0..=(bound - s).min(bound - c - r) {
                    let mut cl = Classes::new();
                    let wa = letters(&mut cl, &l[..i]);
                    let wc = letters(&mut cl, &l[i..]);
                    let z = unknown(&mut cl, r);
                    let x = unknown(&mut cl, s);
                    let b = unknown(&mut cl, u);
                    if palindromic(&mut cl, &[&wa, &z, &x])
                        && palindromic(&mut cl, &[&inverse(&x), &b])
                        && palindromic(&mut cl, &[&inverse(&b), &inverse(&z), &wc])
                    {
                        return true;
                    }
                }
            }
        }
    }
    false
}
