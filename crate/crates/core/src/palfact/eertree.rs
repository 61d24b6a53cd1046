use crate::words::Letter;

const IMAGINARY: u32 = 0;
const EMPTY: u32 = 1;

#[derive(Clone, Debug)]
struct Node {
    len: i32,
    link: u32,
    /// `len - len(link)`; 0 on the two roots.
    diff: i32,
    /// Suffix link skipping the rest of this node's arithmetic series.
    series: u32,
    edges: Vec<(Letter, u32)>,
}

impl Node {
    fn root(len: i32) -> Self {
        Node {
            len,
            link: IMAGINARY,
            diff: 0,
            series: IMAGINARY,
            edges: Vec::new(),
        }
    }

    fn child(&self, c: Letter) -> Option<u32> {
        self.edges.iter().find(|(l, _)| *l == c).map(|&(_, n)| n)
    }
}

/// Palindromic tree: one node per distinct nonempty palindromic factor,
/// with suffix links and series links.
#[derive(Clone, Debug)]
pub struct Eertree {
    nodes: Vec<Node>,
    /// Node of the longest palindromic suffix of each prefix `w[..i+1]`.
    suffix_node: Vec<u32>,
}

impl Eertree {
    pub fn new(word: &[Letter]) -> Self {
        let mut tree = Eertree {
            nodes: vec![Node::root(-1), Node::root(0)],
            suffix_node: Vec::with_capacity(word.len()),
        };
        let mut last = EMPTY;
        for i in 0..word.len() {
            last = tree.extend(word, i, last);
            tree.suffix_node.push(last);
        }
        tree
    }

    fn fits(&self, word: &[Letter], i: usize, node: u32) -> bool {
        let back = i as i64 - 1 - self.nodes[node as usize].len as i64;
        back >= 0 && word[back as usize] == word[i]
    }

    fn extend(&mut self, word: &[Letter], i: usize, last: u32) -> u32 {
        let c = word[i];
        let mut cur = last;
        while !self.fits(word, i, cur) {
            cur = self.nodes[cur as usize].link;
        }
        if let Some(existing) = self.nodes[cur as usize].child(c) {
            return existing;
        }
        let len = self.nodes[cur as usize].len + 2;
        let link = if len == 1 {
            EMPTY
        } else {
            let mut p = self.nodes[cur as usize].link;
            while !self.fits(word, i, p) {
                p = self.nodes[p as usize].link;
            }
            self.nodes[p as usize]
                .child(c)
                .expect("proper palindromic suffix already has a node")
        };
        let diff = len - self.nodes[link as usize].len;
        let series = if diff == self.nodes[link as usize].diff {
            self.nodes[link as usize].series
        } else {
            link
        };
        let id = self.nodes.len() as u32;
        self.nodes.push(Node {
            len,
            link,
            diff,
            series,
            edges: Vec::new(),
        });
        self.nodes[cur as usize].edges.push((c, id));
        id
    }

    /// Number of distinct nonempty palindromic factors.
    pub fn distinct_palindromes(&self) -> usize {
        self.nodes.len() - 2
    }

    /// Length of the longest palindromic suffix of `w[..=i]`.
    pub fn longest_suffix_len(&self, i: usize) -> usize {
        self.nodes[self.suffix_node[i] as usize].len as usize
    }

    /// Semigroup palindromic length of every prefix, via series links.
    ///
    /// Runs in `O(n log n)`: each position walks `O(log n)` series.
    pub fn prefix_palindromic_lengths(&self) -> Vec<usize> {
        let n = self.suffix_node.len();
        let mut ans = vec![usize::MAX; n + 1];
        let mut series_ans = vec![usize::MAX; self.nodes.len()];
        ans[0] = 0;
        for i in 1..=n {
            let mut v = self.suffix_node[i - 1];
            let mut best = usize::MAX;
            while self.nodes[v as usize].len > 0 {
                let node = &self.nodes[v as usize];
                let start = i - (self.nodes[node.series as usize].len.max(0) + node.diff) as usize;
                let mut s = ans[start];
                if node.diff == self.nodes[node.link as usize].diff {
                    s = s.min(series_ans[node.link as usize]);
                }
                series_ans[v as usize] = s;
                best = best.min(s + 1);
                v = node.series;
            }
            ans[i] = best;
        }
        ans
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::palfact::PalTable;
    use crate::words::parse_word;

    #[test]
    fn counts_distinct_palindromes() {
        let w = parse_word("abacaba", 3).unwrap();
        // a b c aba aca bacab abacaba
        assert_eq!(Eertree::new(w.letters()).distinct_palindromes(), 7);
        let w = parse_word("aAaA", 1).unwrap();
        // a A aAa AaA
        assert_eq!(Eertree::new(w.letters()).distinct_palindromes(), 4);
    }

    #[test]
    fn longest_suffix_matches_table() {
        for s in ["abacabadabacaba", "aaaabaaaa", "abBAbaab", "zyx"] {
            let w = parse_word(s, 26).unwrap();
            let t = Eertree::new(w.letters());
            let table = PalTable::new(w.letters());
            assert!(t.distinct_palindromes() <= w.len());
            for i in 0..w.len() {
                let expect = (0..=i).find(|&s| table.is_pal(s, i + 1)).map(|s| i + 1 - s).unwrap();
                assert_eq!(t.longest_suffix_len(i), expect, "{s} at {i}");
            }
        }
    }

    #[test]
    fn prefix_lengths_small() {
        let w = parse_word("abca", 3).unwrap();
        assert_eq!(Eertree::new(w.letters()).prefix_palindromic_lengths(), vec![0, 1, 2, 3, 4]);
        let w = parse_word("aaaa", 1).unwrap();
        assert_eq!(Eertree::new(w.letters()).prefix_palindromic_lengths(), vec![0, 1, 1, 1, 1]);
    }
}
