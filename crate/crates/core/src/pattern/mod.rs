//! Structural-form patterns: concatenations of variables under the four
//! transforms, with palindrome constraints, matched against concrete words
//! without any free reduction.
//!
//! Literal syntax: atoms separated by `.`, transform prefixes `~` (mirror),
//! `!` (inverse) and `~!` (mirror of inverse), and an optional `| P Q ...`
//! clause listing the palindrome variables. `A.P.Q.!A | P Q` is the form of
//! a product of two palindromes.

mod hashed;
pub(crate) mod solver;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::ControlFlow;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::words::{count_reduced_words, reduced_words_of_length, ReducedWord, Transform, Word};
use solver::System;

/// Upper bound on the number of candidate words an enumeration may visit.
pub const MAX_ENUMERATED_WORDS: u128 = 5_000_000;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Constraint {
    Free,
    Palindrome,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VarSpec {
    pub name: String,
    pub constraint: Constraint,
    pub nonempty: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Atom {
    /// Index into [`Pattern::vars`].
    pub var: usize,
    pub transform: Transform,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Pattern {
    atoms: Vec<Atom>,
    vars: Vec<VarSpec>,
}

fn valid_name(name: &str) -> bool {
    !name.is_empty()
        && name
            .chars()
            .all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '\'')
}

impl Pattern {
    /// Builds a pattern from `(variable, transform)` atoms; variables listed in
    /// `palindromes` are palindrome-constrained in every occurrence.
    pub fn new(atoms: &[(&str, Transform)], palindromes: &[&str]) -> Result<Self> {
        let text = || {
            atoms
                .iter()
                .map(|(n, t)| format!("{}{n}", t.prefix()))
                .collect::<Vec<_>>()
                .join(".")
        };
        if atoms.is_empty() {
            return Err(Error::BadPattern {
                text: text(),
                reason: "a pattern needs at least one atom".into(),
            });
        }
        let mut vars: Vec<VarSpec> = Vec::new();
        let mut out = Vec::with_capacity(atoms.len());
        for &(name, transform) in atoms {
            if !valid_name(name) {
                return Err(Error::BadPattern {
                    text: text(),
                    reason: format!("invalid variable name {name:?}"),
                });
            }
            let var = match vars.iter().position(|v| v.name == name) {
                Some(i) => i,
                None => {
                    vars.push(VarSpec {
                        name: name.to_string(),
                        constraint: Constraint::Free,
                        nonempty: false,
                    });
                    vars.len() - 1
                }
            };
            out.push(Atom { var, transform });
        }
        for &p in palindromes {
            match vars.iter_mut().find(|v| v.name == p) {
                Some(v) => v.constraint = Constraint::Palindrome,
                None => {
                    return Err(Error::BadPattern {
                        text: text(),
                        reason: format!("palindrome variable {p:?} does not occur"),
                    })
                }
            }
        }
        Ok(Pattern { atoms: out, vars })
    }

    /// Marks a variable as nonempty. Unknown names are an error.
    pub fn with_nonempty(mut self, name: &str) -> Result<Self> {
        match self.vars.iter_mut().find(|v| v.name == name) {
            Some(v) => {
                v.nonempty = true;
                Ok(self)
            }
            None => Err(Error::BadPattern {
                text: self.to_string(),
                reason: format!("unknown variable {name:?}"),
            }),
        }
    }

    pub fn atoms(&self) -> &[Atom] {
        &self.atoms
    }

    pub fn vars(&self) -> &[VarSpec] {
        &self.vars
    }

    pub fn var(&self, name: &str) -> Option<&VarSpec> {
        self.vars.iter().find(|v| v.name == name)
    }

    pub fn atom_var(&self, atom: &Atom) -> &VarSpec {
        &self.vars[atom.var]
    }

    /// The concatenation of the transformed values, if every variable is bound.
    pub fn substitute(&self, binding: &Binding) -> Option<Word> {
        let mut letters = Vec::new();
        for a in &self.atoms {
            let value = binding.get(&self.vars[a.var].name)?;
            letters.extend(value.transform(a.transform).into_letters());
        }
        Some(Word::from_letters(letters))
    }

    /// Whether `binding` spells `w` through this pattern and respects every
    /// constraint.
    pub fn accepts(&self, binding: &Binding, w: &Word) -> bool {
        let constraints_hold = self.vars.iter().all(|v| match binding.get(&v.name) {
            Some(value) => {
                (v.constraint == Constraint::Free || value.is_palindrome())
                    && !(v.nonempty && value.is_empty())
            }
            None => false,
        });
        constraints_hold && self.substitute(binding).as_ref() == Some(w)
    }

    fn system(&self, w: &Word) -> System {
        let mut sys = System::new();
        for v in &self.vars {
            sys.add_var(v.constraint == Constraint::Palindrome, v.nonempty);
        }
        sys.add_goal(
            self.atoms.iter().map(|a| (a.var, a.transform)).collect(),
            w,
        );
        sys
    }

    fn to_binding(&self, values: &[Option<Word>]) -> Binding {
        Binding(
            self.vars
                .iter()
                .zip(values)
                .map(|(v, w)| (v.name.clone(), w.clone().expect("every variable occurs")))
                .collect(),
        )
    }

    /// The first binding in search order: the one whose sequence of segment
    /// boundaries is lexicographically largest (earlier segments longest).
    pub fn match_word(&self, w: &Word) -> Option<Binding> {
        self.system(w)
            .first_solution()
            .map(|values| self.to_binding(&values))
    }

    /// Every binding, in the same order as [`Pattern::match_word`] explores them.
    pub fn match_all(&self, w: &Word) -> Vec<Binding> {
        let mut out = Vec::new();
        self.system(w).for_each_solution(&mut |values| {
            out.push(self.to_binding(values));
            ControlFlow::Continue(())
        });
        out
    }

    /// Every `(w, binding)` with `w` a reduced word of length at most
    /// `max_len` over `alphabet` generators, words in shortlex order.
    pub fn enumerate_instances(
        &self,
        alphabet: u32,
        max_len: usize,
    ) -> Result<impl Iterator<Item = (ReducedWord, Binding)> + '_> {
        let total: u128 = (0..=max_len)
            .map(|n| count_reduced_words(alphabet, n))
            .fold(0u128, |a, b| a.saturating_add(b));
        if total > MAX_ENUMERATED_WORDS {
            return Err(Error::BoundTooLarge(format!(
                "{total} candidate words for m = {alphabet}, length <= {max_len}"
            )));
        }
        Ok((0..=max_len)
            .flat_map(move |n| reduced_words_of_length(alphabet, n))
            .flat_map(move |w| {
                self.match_all(&w)
                    .into_iter()
                    .map(move |b| (w.clone(), b))
            }))
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, a) in self.atoms.iter().enumerate() {
            if i > 0 {
                f.write_str(".")?;
            }
            write!(f, "{}{}", a.transform.prefix(), self.vars[a.var].name)?;
        }
        let pals: Vec<&str> = self
            .vars
            .iter()
            .filter(|v| v.constraint == Constraint::Palindrome)
            .map(|v| v.name.as_str())
            .collect();
        if !pals.is_empty() {
            write!(f, " | {}", pals.join(" "))?;
        }
        Ok(())
    }
}

/// Parses a single atom such as `A`, `~A`, `!A` or `~!A`.
pub(crate) fn parse_atom(text: &str) -> Option<(&str, Transform)> {
    let (t, name) = if let Some(rest) = text.strip_prefix("~!") {
        (Transform::MirrorInverse, rest)
    } else if let Some(rest) = text.strip_prefix('~') {
        (Transform::Mirror, rest)
    } else if let Some(rest) = text.strip_prefix('!') {
        (Transform::Inverse, rest)
    } else {
        (Transform::Identity, text)
    };
    valid_name(name).then_some((name, t))
}

impl FromStr for Pattern {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let bad = |reason: String| Error::BadPattern {
            text: text.to_string(),
            reason,
        };
        let (body, pals) = match text.split_once('|') {
            Some((b, p)) => (b, p),
            None => (text, ""),
        };
        if pals.contains('|') {
            return Err(bad("more than one `|` clause".into()));
        }
        let mut atoms = Vec::new();
        for part in body.split('.') {
            let part = part.trim();
            let atom = parse_atom(part).ok_or_else(|| bad(format!("invalid atom {part:?}")))?;
            atoms.push(atom);
        }
        let pals: Vec<&str> = pals.split_whitespace().collect();
        Pattern::new(&atoms, &pals).map_err(|e| match e {
            Error::BadPattern { reason, .. } => bad(reason),
            other => other,
        })
    }
}

/// An assignment of words to variable names, ordered by name.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Binding(pub BTreeMap<String, Word>);

impl Binding {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, name: &str) -> Option<&Word> {
        self.0.get(name)
    }

    pub fn insert(&mut self, name: impl Into<String>, value: Word) {
        self.0.insert(name.into(), value);
    }

    pub fn iter(&self) -> impl Iterator<Item = (&String, &Word)> {
        self.0.iter()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Union of two bindings; `None` if a shared name has different values.
    pub fn merge(&self, other: &Binding) -> Option<Binding> {
        let mut out = self.clone();
        for (k, v) in &other.0 {
            match out.0.get(k) {
                Some(existing) if existing != v => return None,
                Some(_) => {}
                None => {
                    out.0.insert(k.clone(), v.clone());
                }
            }
        }
        Some(out)
    }
}

impl<S: Into<String>> FromIterator<(S, Word)> for Binding {
    fn from_iter<I: IntoIterator<Item = (S, Word)>>(iter: I) -> Self {
        Binding(iter.into_iter().map(|(k, v)| (k.into(), v)).collect())
    }
}

impl fmt::Display for Binding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (k, v)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{k}={v}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::parse_word;

    fn w(s: &str) -> Word {
        parse_word(s, 26).unwrap()
    }

    fn p(s: &str) -> Pattern {
        s.parse().unwrap()
    }

    fn show(b: &Binding) -> String {
        b.to_string()
    }

    #[test]
    fn parse_and_display() {
        let pat = p("A.P.Q.!A | P Q");
        assert_eq!(pat.to_string(), "A.P.Q.!A | P Q");
        assert_eq!(pat.atoms().len(), 4);
        assert_eq!(pat.vars().len(), 3);
        assert_eq!(pat.atoms()[3].transform, Transform::Inverse);
        let pat = p("X . ~!Y.~X|Y");
        assert_eq!(pat.to_string(), "X.~!Y.~X | Y");
        assert_eq!(p("X'.~X'").vars()[0].name, "X'");
    }

    #[test]
    fn parse_errors() {
        for bad in ["", "A..B", "A.?B", "A | B", "A | A | A", "!~A"] {
            assert!(bad.parse::<Pattern>().is_err(), "{bad}");
        }
    }

    #[test]
    fn match_examples() {
        assert_eq!(show(&p("P.Q | P Q").match_word(&w("aab")).unwrap()), "P=aa Q=b");
        assert_eq!(
            show(&p("A.P.Q.!A | P Q").match_word(&w("abA")).unwrap()),
            "A=a P=b Q=1"
        );
        assert!(p("A.P.Q.!A | P Q").match_word(&w("abc")).is_none());
    }

    #[test]
    fn match_all_examples() {
        let all = p("P.Q | P Q").match_all(&w("aa"));
        assert_eq!(all.len(), 3);
        assert_eq!(
            all.iter().map(show).collect::<Vec<_>>(),
            ["P=aa Q=1", "P=a Q=a", "P=1 Q=aa"]
        );
        let all = p("P.Q | P Q").match_all(&Word::empty());
        assert_eq!(all.len(), 1);
        assert_eq!(show(&all[0]), "P=1 Q=1");
        let all = p("A.!A").match_all(&w("aA"));
        assert!(all.iter().any(|b| show(b) == "A=a"));
    }

    #[test]
    fn transforms_under_repetition() {
        let b = p("X.~!X").match_word(&w("abAB")).unwrap();
        assert_eq!(show(&b), "X=ab");
        assert!(p("X.~X").match_word(&w("abab")).is_none());
        assert_eq!(show(&p("X.~X").match_word(&w("abba")).unwrap()), "X=ab");
        assert_eq!(show(&p("X.X").match_word(&w("abab")).unwrap()), "X=ab");
    }

    #[test]
    fn nonempty_flag() {
        let pat = p("P.Q | P Q").with_nonempty("Q").unwrap();
        let all = pat.match_all(&w("aa"));
        assert_eq!(all.len(), 2);
        assert!(pat.match_word(&Word::empty()).is_none());
        assert!(p("P.Q").with_nonempty("R").is_err());
    }

    #[test]
    fn enumerate_examples() {
        let count = |s: &str, m, n| p(s).enumerate_instances(m, n).unwrap().count();
        assert_eq!(count("P | P", 1, 2), 5);
        let words: Vec<String> = p("P | P")
            .enumerate_instances(1, 2)
            .unwrap()
            .map(|(w, _)| w.to_string())
            .collect();
        assert_eq!(words, ["1", "a", "A", "aa", "AA"]);
        assert_eq!(count("P | P", 2, 1), 5);
        // (1,1), (a,1), (1,a), (A,1), (1,A)
        assert_eq!(count("P.Q | P Q", 1, 1), 5);
        assert!(p("P").enumerate_instances(26, 12).is_err());
    }

    #[test]
    fn merge_conflicts() {
        let a: Binding = [("X", w("a"))].into_iter().collect();
        let b: Binding = [("X", w("b"))].into_iter().collect();
        let c: Binding = [("Y", w("b"))].into_iter().collect();
        assert!(a.merge(&b).is_none());
        assert_eq!(a.merge(&c).unwrap().len(), 2);
        assert_eq!(a.merge(&a).unwrap(), a);
    }
}
