use crate::palfact::PalTable;
use crate::words::{Letter, Transform};

const MOD: u64 = (1 << 61) - 1;
const BASE: u64 = 0x1f3d_5b79_a2c4_e681 % MOD;

#[inline]
fn mul(a: u64, b: u64) -> u64 {
    let p = a as u128 * b as u128;
    let lo = (p as u64) & MOD;
    let hi = (p >> 61) as u64;
    let s = lo + hi;
    if s >= MOD {
        s - MOD
    } else {
        s
    }
}

/// A word with polynomial prefix hashes of all four transformed images and
/// its palindrome table, so that `t(w[a..b]) == target[i..j]` is an O(1)
/// rejection test.
#[derive(Clone, Debug)]
pub(crate) struct HashedWord {
    pub letters: Vec<Letter>,
    /// Indexed by `Transform as usize`; prefix hashes of `t(letters)`.
    prefix: [Vec<u64>; 4],
    pow: Vec<u64>,
    pub pal: PalTable,
}

impl HashedWord {
    pub fn new(letters: &[Letter]) -> Self {
        let n = letters.len();
        let mut pow = Vec::with_capacity(n + 1);
        pow.push(1u64);
        for i in 0..n {
            pow.push(mul(pow[i], BASE));
        }
        let prefix = Transform::ALL.map(|t| {
            let mut h = Vec::with_capacity(n + 1);
            h.push(0u64);
            for k in 0..n {
                let c = t.letter_at(letters, k).code() as u64 + 1;
                let next = mul(h[k], BASE) + c;
                h.push(if next >= MOD { next - MOD } else { next });
            }
            h
        });
        HashedWord {
            letters: letters.to_vec(),
            prefix,
            pow,
            pal: PalTable::new(letters),
        }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    /// Hash of `t(letters[a..b])`.
    #[inline]
    pub fn hash(&self, t: Transform, a: usize, b: usize) -> u64 {
        let (lo, hi) = if t.reverses() {
            (self.len() - b, self.len() - a)
        } else {
            (a, b)
        };
        let h = &self.prefix[t as usize];
        let sub = mul(h[lo], self.pow[hi - lo]);
        if h[hi] >= sub {
            h[hi] - sub
        } else {
            h[hi] + MOD - sub
        }
    }

    /// Whether `t(self[a..b]) == other[i..i + (b - a)]`.
    #[inline]
    pub fn equal_image(&self, t: Transform, a: usize, b: usize, other: &HashedWord, i: usize) -> bool {
        let len = b - a;
        if self.hash(t, a, b) != other.hash(Transform::Identity, i, i + len) {
            return false;
        }
        let src = &self.letters[a..b];
        (0..len).all(|k| t.letter_at(src, k) == other.letters[i + k])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::parse_word;

    #[test]
    fn transformed_substrings_compare_exactly() {
        let x = HashedWord::new(parse_word("abcAbaC", 3).unwrap().letters());
        for t in Transform::ALL {
            for a in 0..=x.len() {
                for b in a..=x.len() {
                    let img = t.apply(&x.letters[a..b]);
                    let y = HashedWord::new(img.letters());
                    assert!(x.equal_image(t, a, b, &y, 0));
                    assert_eq!(x.hash(t, a, b), y.hash(Transform::Identity, 0, y.len()));
                    if b > a {
                        let other = HashedWord::new(&x.letters[a..b]);
                        let same = img.letters() == other.letters.as_slice();
                        assert_eq!(x.equal_image(t, a, b, &other, 0), same);
                    }
                }
            }
        }
    }
}
