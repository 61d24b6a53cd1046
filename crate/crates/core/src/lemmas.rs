//! Word equations with palindromes: a catalog of lemmas, each an equation and
//! an ordered list of solution shapes, with a classifier and an exhaustive
//! bounded check that every solution has one of the listed shapes.
//!
//! Equations are read in the free semigroup: both sides are plain
//! concatenations. Instances are drawn from reduced words, which is how the
//! lemmas get applied to free-group elements.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::ControlFlow;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::pattern::{parse_atom, solver::System, Binding, Constraint, Pattern, MAX_ENUMERATED_WORDS};
use crate::report::VerificationReport;
use crate::words::{count_reduced_words, reduced_words_of_length, Word};

/// The involutive antimorphism written `^` in the two lemmas that take one.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default, Serialize)]
pub enum Phi {
    #[default]
    Inverse,
    Mirror,
}

impl Phi {
    fn prefix(self) -> &'static str {
        match self {
            Phi::Inverse => "!",
            Phi::Mirror => "~",
        }
    }
}

struct Raw {
    id: &'static str,
    equations: &'static [&'static str],
    /// Fresh palindrome variables; other fresh variables are arbitrary words.
    fresh_palindromes: &'static str,
    cases: &'static [&'static str],
}

const ST: &str = "S T U";

const RAW: &[Raw] = &[
    Raw {
        id: "P=QX",
        equations: &["P = Q.X | P Q", "P = X.Q | P Q"],
        fresh_palindromes: ST,
        cases: &["X=S.T"],
    },
    Raw {
        id: "px=qy",
        equations: &["P.X = Q.Y | P Q"],
        fresh_palindromes: ST,
        cases: &["X=S.T.Y", "Y=S.T.X"],
    },
    Raw {
        id: "xy=zp",
        equations: &["X.Y = Z.P | P"],
        fresh_palindromes: "P'",
        cases: &["Z=X.A ; Y=A.P", "X=Z.A ; Y=P'.~A", "X=Z.~Y.P'"],
    },
    Raw {
        id: "PXY=QZ",
        equations: &["P.X.Y = Q.Z | P Q"],
        fresh_palindromes: ST,
        cases: &[
            "Z=S.T.X.Y",
            "X=S.T.X' ; Z=X'.Y",
            "Y=S.~X.T.Z",
            "X=X'.S ; Y=~X'.T.Z",
            "X=S.X' ; Y=T.~X'.Z",
            "X=S.X'.T ; Y=~X'.Z",
        ],
    },
    Raw {
        id: "XY=PQ",
        equations: &["X.Y = P.Q | P Q"],
        fresh_palindromes: "P' Q'",
        cases: &[
            "Y=P'.~X.Q ; P=X.P'.~X",
            "X=Z.P' ; Y=~Z.Q ; P=Z.P'.~Z",
            "X=P.Z ; Y=Q'.~Z ; Q=Z.Q'.~Z",
            "X=P.~Y.Q' ; Q=~Y.Q'.Y",
        ],
    },
    Raw {
        id: "PX=YQ",
        equations: &["P.X = Y.Q | P Q"],
        fresh_palindromes: ST,
        cases: &["X=S.Y.T", "X=Z.S ; Y=T.Z", "X=S.Z ; Y=Z.T", "Y=S.X.T"],
    },
    Raw {
        id: "XPY=Q",
        equations: &["X.P.Y = Q | P Q"],
        fresh_palindromes: ST,
        cases: &["X=~Y.S.T", "Y=S.T.~X"],
    },
    Raw {
        id: "XPY=QZ",
        equations: &["X.P.Y = Q.Z | P Q"],
        fresh_palindromes: ST,
        cases: &[
            "X=~F.S.T ; Y=F.Z",
            "Y=S.T.~X.Z",
            "Z=S.X.T.Y",
            "X=S.F ; Z=F.T.Y",
            "X=F.S ; Z=T.F.Y",
            "X=S.F.T ; Z=F.Y",
        ],
    },
    Raw {
        id: "PXQ=R",
        equations: &["P.X.Q = R | P Q R"],
        fresh_palindromes: ST,
        cases: &["X=S.T.U"],
    },
    Raw {
        id: "P=QXRY",
        equations: &["P = Q.X.R.Y | P Q R"],
        fresh_palindromes: ST,
        cases: &[
            "X=S.~Y.T.U",
            "X=Z.S.T ; Y=~Z.U",
            "X=S.Z.T ; Y=U.~Z",
            "X=Z.S ; Y=T.~Z.U",
            "X=S.Z ; Y=T.U.~Z",
            "Y=S.T.~X.U",
        ],
    },
    Raw {
        id: "PX=QYR",
        equations: &["P.X = Q.Y.R | P Q R"],
        fresh_palindromes: ST,
        cases: &[
            "X=S.T.Y.U",
            "X=S.Z.T ; Y=U.Z",
            "X=Z.S ; Y=T.U.Z",
            "X=S.Z ; Y=T.Z.U",
            "Y=S.T.X.U",
            "X=S.T.Z ; Y=Z.U",
        ],
    },
    Raw {
        id: "PX=QYRZ",
        equations: &["P.X = Q.Y.R.Z | P Q R"],
        fresh_palindromes: ST,
        cases: &[
            "X=S.T.Y.U.Z",
            "X=S.C.T.Z ; Y=U.C",
            "X=C.S.Z ; Y=T.U.C",
            "X=S.C.Z ; Y=T.C.U",
            "X=C.Z ; Y=S.T.C.U",
            "X=S.T.C.Z ; Y=C.U",
            "Y=S.C.T.U ; Z=~C.X",
            "Y=C.S.T ; Z=~C.U.X",
            "Y=S.C.T ; Z=U.~C.X",
            "Y=C.S ; Z=T.~C.U.X",
            "Y=S.C ; Z=T.U.~C.X",
            "Z=S.T.~Y.U.X",
        ],
    },
    Raw {
        id: "PX=YQR",
        equations: &["P.X = Y.Q.R | P Q R"],
        fresh_palindromes: ST,
        cases: &[
            "X=S.Y.T.U",
            "X=Z.S.T ; Y=U.Z",
            "X=S.Z.T ; Y=Z.U",
            "X=Z.S ; Y=T.Z.U",
            "X=S.Z ; Y=Z.T.U",
            "Y=S.X.T.U",
        ],
    },
    Raw {
        id: "APQAX=R",
        equations: &["A.P.Q.^A.X = R | P Q R"],
        fresh_palindromes: ST,
        cases: &["X=Z.S.T.^Z.U", "X=S.Z.T.U.^Z"],
    },
    Raw {
        id: "APQAX=RY",
        equations: &["A.P.Q.^A.X = R.Y | P Q R"],
        fresh_palindromes: ST,
        cases: &[
            "X=Z.S.T.^Z.U.Y",
            "X=S.Z.T.U.^Z.Y",
            "Y=Z.S.T.^Z.U.X",
            "Y=S.Z.T.U.^Z.X",
        ],
    },
];

/// `var = pattern`, with the pattern over equation and fresh variables.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Definition {
    pub var: String,
    pub pattern: Pattern,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LemmaCase {
    /// 1-based position in the lemma's list.
    pub id: usize,
    pub label: String,
    pub definitions: Vec<Definition>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Equation {
    pub lhs: Pattern,
    pub rhs: Pattern,
}

impl fmt::Display for Equation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let bare = |p: &Pattern| p.to_string().split(" |").next().unwrap_or_default().to_string();
        write!(f, "{} = {}", bare(&self.lhs), bare(&self.rhs))
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LemmaSpec {
    pub id: String,
    pub phi: Phi,
    /// Alternative equations; an instance satisfies one of them.
    pub equations: Vec<Equation>,
    pub cases: Vec<LemmaCase>,
    /// Name to palindrome constraint, for equation and fresh variables.
    pub variables: BTreeMap<String, Constraint>,
    pub equation_vars: BTreeSet<String>,
}

fn bad(text: &str, reason: impl Into<String>) -> Error {
    Error::BadPattern {
        text: text.to_string(),
        reason: reason.into(),
    }
}

/// Parses `atoms` with the palindrome variables among `pals` that occur.
fn side(text: &str, pals: &BTreeSet<&str>) -> Result<Pattern> {
    let mut atoms = Vec::new();
    for part in text.split('.') {
        let part = part.trim();
        atoms.push(parse_atom(part).ok_or_else(|| bad(text, format!("invalid atom {part:?}")))?);
    }
    let used: Vec<&str> = pals
        .iter()
        .copied()
        .filter(|p| atoms.iter().any(|(n, _)| n == p))
        .collect();
    Pattern::new(&atoms, &used)
}

impl LemmaSpec {
    fn build(raw: &Raw, phi: Phi) -> Result<Self> {
        let subst = |s: &str| s.replace('^', phi.prefix());
        let mut equations = Vec::new();
        let mut variables = BTreeMap::new();
        let mut equation_vars = BTreeSet::new();
        for text in raw.equations {
            let text = subst(text);
            let (body, pals) = text.split_once('|').unwrap_or((&text, ""));
            let pals: BTreeSet<&str> = pals.split_whitespace().collect();
            let (l, r) = body
                .split_once(" = ")
                .ok_or_else(|| bad(&text, "equation needs ` = `"))?;
            let eq = Equation {
                lhs: side(l, &pals)?,
                rhs: side(r, &pals)?,
            };
            for v in eq.lhs.vars().iter().chain(eq.rhs.vars()) {
                variables.insert(v.name.clone(), v.constraint);
                equation_vars.insert(v.name.clone());
            }
            equations.push(eq);
        }
        let fresh_pals: BTreeSet<&str> = raw.fresh_palindromes.split_whitespace().collect();
        let eq_pals: Vec<String> = variables
            .iter()
            .filter(|(_, c)| **c == Constraint::Palindrome)
            .map(|(n, _)| n.clone())
            .collect();
        let mut pals: BTreeSet<&str> = fresh_pals.clone();
        pals.extend(eq_pals.iter().map(String::as_str));
        let mut cases = Vec::new();
        for (i, text) in raw.cases.iter().enumerate() {
            let text = subst(text);
            let mut definitions = Vec::new();
            for def in text.split(';') {
                let (var, pat) = def
                    .split_once('=')
                    .ok_or_else(|| bad(&text, "definition needs `=`"))?;
                let var = var.trim().to_string();
                if !equation_vars.contains(&var) {
                    return Err(bad(&text, format!("{var} is not an equation variable")));
                }
                let pattern = side(pat, &pals)?;
                for v in pattern.vars() {
                    let c = if pals.contains(v.name.as_str()) {
                        Constraint::Palindrome
                    } else {
                        Constraint::Free
                    };
                    variables.entry(v.name.clone()).or_insert(c);
                }
                definitions.push(Definition { var, pattern });
            }
            cases.push(LemmaCase {
                id: i + 1,
                label: text.replace(' ', ""),
                definitions,
            });
        }
        Ok(LemmaSpec {
            id: raw.id.to_string(),
            phi,
            equations,
            cases,
            variables,
            equation_vars,
        })
    }

    /// Whether `inst` binds exactly the equation variables, respects their
    /// constraints and satisfies one of the equations.
    pub fn satisfied_by(&self, inst: &Binding) -> bool {
        let names: BTreeSet<&String> = inst.iter().map(|(k, _)| k).collect();
        names == self.equation_vars.iter().collect()
            && inst.iter().all(|(k, v)| {
                self.variables.get(k) != Some(&Constraint::Palindrome) || v.is_palindrome()
            })
            && self.equations.iter().any(|e| {
                let l = e.lhs.substitute(inst);
                l.is_some() && l == e.rhs.substitute(inst)
            })
    }

    /// Every `(binding)` of the equation variables whose common value is a
    /// reduced word of length at most `max_len`, grouped by that word.
    pub fn instances_of(&self, w: &Word) -> Vec<Binding> {
        let mut out = BTreeSet::new();
        for e in &self.equations {
            let ls = e.lhs.match_all(w);
            let rs = e.rhs.match_all(w);
            for l in &ls {
                for r in &rs {
                    if let Some(b) = l.merge(r) {
                        out.insert(b);
                    }
                }
            }
        }
        out.into_iter().collect()
    }
}

impl fmt::Display for LemmaSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let eqs: Vec<String> = self.equations.iter().map(|e| e.to_string()).collect();
        write!(f, "{}: {}", self.id, eqs.join(" or "))
    }
}

/// The full catalog with `^` read as the inverse.
pub fn lemma_catalog() -> Vec<LemmaSpec> {
    lemma_catalog_with(Phi::Inverse)
}

pub fn lemma_catalog_with(phi: Phi) -> Vec<LemmaSpec> {
    RAW.iter()
        .map(|r| LemmaSpec::build(r, phi).expect("catalog entries parse"))
        .collect()
}

fn normalize(id: &str) -> String {
    id.trim().trim_start_matches("l:").to_ascii_lowercase()
}

/// Looks a lemma up by id, ignoring case and an optional `l:` prefix.
pub fn lemma(id: &str) -> Result<LemmaSpec> {
    let key = normalize(id);
    RAW.iter()
        .find(|r| normalize(r.id) == key)
        .map(|r| LemmaSpec::build(r, Phi::Inverse).expect("catalog entries parse"))
        .ok_or_else(|| Error::UnknownLemma(id.to_string()))
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct CaseResult {
    pub lemma: String,
    #[serde(serialize_with = "binding_text")]
    pub instance: Binding,
    /// 1-based case number, `None` when no listed case fits.
    pub case: Option<usize>,
    /// Values of the fresh variables of the matched case.
    #[serde(serialize_with = "binding_text")]
    pub witnesses: Binding,
}

fn binding_text<S: serde::Serializer>(b: &Binding, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(b)
}

impl CaseResult {
    /// Re-substitutes the witnesses into every definition of the matched case.
    pub fn resubstitutes(&self, spec: &LemmaSpec) -> bool {
        let Some(c) = self.case else { return false };
        let Some(all) = self.instance.merge(&self.witnesses) else {
            return false;
        };
        let constraints_hold = self.witnesses.iter().all(|(k, v)| {
            spec.variables.get(k) != Some(&Constraint::Palindrome) || v.is_palindrome()
        });
        constraints_hold
            && spec.cases[c - 1].definitions.iter().all(|d| {
                d.pattern.substitute(&all).as_ref() == self.instance.get(&d.var)
            })
    }
}

/// Solves the definitions of one case with the equation variables fixed.
fn solve_case(spec: &LemmaSpec, case: &LemmaCase, inst: &Binding) -> Option<Binding> {
    let mut sys = System::new();
    let mut index: BTreeMap<&str, usize> = BTreeMap::new();
    let mut fresh = Vec::new();
    let names = case
        .definitions
        .iter()
        .flat_map(|d| d.pattern.vars().iter().map(|v| v.name.as_str()).chain([d.var.as_str()]));
    for name in names {
        if index.contains_key(name) {
            continue;
        }
        let pal = spec.variables.get(name) == Some(&Constraint::Palindrome);
        let i = sys.add_var(pal, false);
        index.insert(name, i);
        match inst.get(name) {
            Some(v) => sys.bind(i, v),
            None => fresh.push((name, i)),
        }
    }
    for d in &case.definitions {
        let atoms = d
            .pattern
            .atoms()
            .iter()
            .map(|a| (index[d.pattern.atom_var(a).name.as_str()], a.transform))
            .collect();
        sys.add_goal(atoms, inst.get(&d.var)?);
    }
    let mut found = None;
    sys.for_each_solution(&mut |values| {
        found = Some(
            fresh
                .iter()
                .map(|&(n, i)| (n, values[i].clone().expect("fresh variable occurs in a goal")))
                .collect::<Binding>(),
        );
        ControlFlow::Break(())
    });
    found
}

/// The first listed case whose shapes fit `inst`.
pub fn classify_instance(spec: &LemmaSpec, inst: &Binding) -> Result<CaseResult> {
    if !spec.satisfied_by(inst) {
        return Err(Error::EquationViolated(format!("{} with {inst}", spec.id)));
    }
    for case in &spec.cases {
        if let Some(witnesses) = solve_case(spec, case, inst) {
            return Ok(CaseResult {
                lemma: spec.id.clone(),
                instance: inst.clone(),
                case: Some(case.id),
                witnesses,
            });
        }
    }
    Ok(CaseResult {
        lemma: spec.id.clone(),
        instance: inst.clone(),
        case: None,
        witnesses: Binding::new(),
    })
}

fn words_guard(alphabet: u32, max_len: usize) -> Result<()> {
    let total: u128 = (0..=max_len)
        .map(|n| count_reduced_words(alphabet, n))
        .fold(0u128, |a, b| a.saturating_add(b));
    if total > MAX_ENUMERATED_WORDS {
        return Err(Error::BoundTooLarge(format!(
            "{total} candidate words for m = {alphabet}, length <= {max_len}"
        )));
    }
    Ok(())
}

#[derive(Default)]
struct Tally {
    instances: u64,
    per_case: BTreeMap<usize, u64>,
    problems: Vec<String>,
}

/// Classifies every instance whose common value is a reduced word of length
/// at most `max_len` over `alphabet` generators.
pub fn verify_lemma(spec: &LemmaSpec, alphabet: u32, max_len: usize) -> Result<VerificationReport> {
    let started = Instant::now();
    words_guard(alphabet, max_len)?;
    let words: Vec<Word> = (0..=max_len)
        .flat_map(|n| reduced_words_of_length(alphabet, n))
        .map(|w| w.into_word())
        .collect();
    let tallies: Vec<Tally> = words
        .par_iter()
        .map(|w| {
            let mut t = Tally::default();
            for inst in spec.instances_of(w) {
                t.instances += 1;
                let r = classify_instance(spec, &inst).expect("enumerated instances satisfy the equation");
                match r.case {
                    Some(c) => {
                        *t.per_case.entry(c).or_default() += 1;
                        if !r.resubstitutes(spec) {
                            t.problems.push(format!("{inst}: case {c} witnesses {} do not re-substitute", r.witnesses));
                        }
                    }
                    None => t.problems.push(format!("{inst}: NONE")),
                }
            }
            t
        })
        .collect();
    let mut report = VerificationReport::new(format!("lemma {}", spec.id))
        .param("m", alphabet)
        .param("L", max_len)
        .param("phi", format!("{:?}", spec.phi).to_lowercase());
    report.add_total("words", words.len() as u64);
    report.add_total("instances", 0);
    report.add_total("none", 0);
    for c in &spec.cases {
        report.add_form(&format!("{:02}: {}", c.id, c.label), 0);
    }
    for t in tallies {
        report.add_total("instances", t.instances);
        for (c, n) in t.per_case {
            report.add_form(&format!("{c:02}: {}", spec.cases[c - 1].label), n);
        }
        report.add_total("none", t.problems.iter().filter(|p| p.ends_with("NONE")).count() as u64);
        report.counterexamples.extend(t.problems);
    }
    Ok(report.finish(started))
}

/// [`verify_lemma`] over the whole catalog; case counts are keyed `id/case`.
pub fn verify_all_lemmas(alphabet: u32, max_len: usize) -> Result<VerificationReport> {
    verify_catalog(&lemma_catalog(), alphabet, max_len)
}

pub fn verify_catalog(specs: &[LemmaSpec], alphabet: u32, max_len: usize) -> Result<VerificationReport> {
    let started = Instant::now();
    let mut report = VerificationReport::new("lemmas")
        .param("m", alphabet)
        .param("L", max_len)
        .param("lemmas", specs.len());
    for spec in specs {
        let r = verify_lemma(spec, alphabet, max_len)?;
        report.absorb(&r);
    }
    report.add_total("words", 0);
    Ok(report.finish(started))
}
