use crate::words::Letter;

const DENSE_LIMIT: usize = 4096;

/// Constant-time "is `w[i..j]` a palindrome?" queries over one word.
///
/// Words up to 4096 letters use a dense triangular bit table; longer words
/// use Manacher radii (one radius per center, doubled coordinates).
#[derive(Clone, Debug)]
pub struct PalTable {
    n: usize,
    max_len: usize,
    repr: Repr,
}

#[derive(Clone, Debug)]
enum Repr {
    Dense(Vec<u64>),
    Radii(Vec<u32>),
}

impl PalTable {
    pub fn new(letters: &[Letter]) -> Self {
        if letters.len() <= DENSE_LIMIT {
            Self::dense(letters)
        } else {
            Self::radii(letters)
        }
    }

    /// Forces the Manacher representation regardless of length.
    pub fn radii(letters: &[Letter]) -> Self {
        let radii = manacher(letters);
        let max_len = radii.iter().copied().max().unwrap_or(0) as usize;
        PalTable {
            n: letters.len(),
            max_len,
            repr: Repr::Radii(radii),
        }
    }

    /// Forces the dense bit table regardless of length.
    pub fn dense(letters: &[Letter]) -> Self {
        let n = letters.len();
        let stride = n + 1;
        let mut bits = vec![0u64; (stride * stride).div_ceil(64)];
        let set = |bits: &mut Vec<u64>, i: usize, j: usize| {
            let k = i * stride + j;
            bits[k / 64] |= 1 << (k % 64);
        };
        let get = |bits: &Vec<u64>, i: usize, j: usize| {
            let k = i * stride + j;
            bits[k / 64] >> (k % 64) & 1 == 1
        };
        let mut max_len = 0;
        for i in 0..=n {
            set(&mut bits, i, i);
            if i < n {
                set(&mut bits, i, i + 1);
                max_len = 1;
            }
        }
        for len in 2..=n {
            for i in 0..=n - len {
                let j = i + len;
                if letters[i] == letters[j - 1] && get(&bits, i + 1, j - 1) {
                    set(&mut bits, i, j);
                    max_len = len;
                }
            }
        }
        PalTable {
            n,
            max_len,
            repr: Repr::Dense(bits),
        }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// Length of the longest palindromic factor.
    pub fn max_palindrome_len(&self) -> usize {
        self.max_len
    }

    /// Whether `w[i..j]` is a palindrome; requires `i <= j <= len`.
    #[inline]
    pub fn is_pal(&self, i: usize, j: usize) -> bool {
        debug_assert!(i <= j && j <= self.n);
        match &self.repr {
            Repr::Dense(bits) => {
                let k = i * (self.n + 1) + j;
                bits[k / 64] >> (k % 64) & 1 == 1
            }
            Repr::Radii(r) => r[i + j] as usize >= j - i,
        }
    }
}

/// Radius (in letters of `w`) of the longest palindrome centered at each
/// position of the separator-interleaved word; `w[i..j]` is a palindrome
/// iff `radii[i + j] >= j - i`.
fn manacher(w: &[Letter]) -> Vec<u32> {
    let m = 2 * w.len() + 1;
    let at = |k: usize| if k % 2 == 1 { Some(w[k / 2]) } else { None };
    let mut p = vec![0u32; m];
    let (mut center, mut right) = (0usize, 0usize);
    for k in 0..m {
        let mut rad = if k < right {
            (p[2 * center - k] as usize).min(right - k)
        } else {
            0
        };
        while k > rad && k + rad + 1 < m && at(k - rad - 1) == at(k + rad + 1) {
            rad += 1;
        }
        p[k] = rad as u32;
        if k + rad > right {
            center = k;
            right = k + rad;
        }
    }
    p
}
