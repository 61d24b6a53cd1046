use std::sync::OnceLock;
use std::time::Instant;

use rayon::prelude::*;

use super::{decompose_pl2, decompose_pl3, factors_verify, match_pl2, match_pl3, product_closure};
use crate::error::Result;
use crate::pattern::Pattern;
use crate::report::VerificationReport;
use crate::words::{reduced_words_up_to, ReducedWord};

/// Candidate reduced forms of products of four palindromes.
pub const K4_FORMS: [&str; 5] = [
    "A.P.B.Q.C.R.S.!C.~B.!A | P Q R S",
    "A.P.B.C.Q.R.!C.S.~B.!A | P Q R S",
    "A.B.P.Q.!B.C.R.S.!C.!A | P Q R S",
    "A.B.P.C.Q.R.!C.~B.S.!A | P Q R S",
    "A.B.C.P.Q.!C.R.~B.S.!A | P Q R S",
];

fn k4_patterns() -> &'static [Pattern] {
    static P: OnceLock<Vec<Pattern>> = OnceLock::new();
    P.get_or_init(|| K4_FORMS.iter().map(|s| s.parse().expect("valid pattern")).collect())
}

/// Outcome of checking one word.
#[derive(Default)]
struct Check {
    matched: bool,
    verified: bool,
    form: Option<&'static str>,
    problem: Option<String>,
}

fn check_pl2(w: &ReducedWord, must_match: bool) -> Check {
    match match_pl2(w) {
        Some(wit) => {
            let f = decompose_pl2(&wit);
            let ok = wit.spell() == *w.as_word() && factors_verify(&f, w);
            Check {
                matched: true,
                verified: ok,
                form: Some("APQ!A"),
                problem: (!ok).then(|| format!("{w}: decomposition of {wit} fails to verify")),
            }
        }
        None => Check {
            problem: must_match
                .then(|| format!("{w}: product of two palindromes without the form A.P.Q.!A")),
            ..Check::default()
        },
    }
}

fn check_pl3(w: &ReducedWord, must_match: bool) -> Check {
    match match_pl3(w) {
        Some(wit) => {
            let f = decompose_pl3(&wit);
            let ok = wit.spell() == *w.as_word() && factors_verify(&f, w);
            Check {
                matched: true,
                verified: ok,
                form: Some(match wit.variant {
                    super::Pl3Variant::Abp => "ABP",
                    super::Pl3Variant::Apb => "APB",
                }),
                problem: (!ok).then(|| format!("{w}: decomposition of {wit} fails to verify")),
            }
        }
        None => Check {
            problem: must_match
                .then(|| format!("{w}: product of three palindromes with neither ABP nor APB form")),
            ..Check::default()
        },
    }
}

fn run_theorem(
    target: &str,
    alphabet: u32,
    k: usize,
    max_factor_len: usize,
    check: fn(&ReducedWord, bool) -> Check,
) -> Result<VerificationReport> {
    let started = Instant::now();
    let closure = product_closure(alphabet, k, max_factor_len)?;
    let members = closure.words();
    // every reduced word up to the factor bound, whether or not it is a member,
    // exercises the decomposer on whatever the matcher accepts
    let others: Vec<ReducedWord> = reduced_words_up_to(alphabet, max_factor_len)
        .into_iter()
        .filter(|w| !closure.contains(w))
        .collect();
    let mut report = VerificationReport::new(target)
        .param("m", alphabet)
        .param("L", max_factor_len)
        .param("k", k);
    let results: Vec<Check> = members
        .par_iter()
        .map(|w| check(w, true))
        .chain(others.par_iter().map(|w| check(w, false)))
        .collect();
    report.add_total("closure_members", members.len() as u64);
    report.add_total("other_words", others.len() as u64);
    for c in results {
        report.add_total("matched", c.matched as u64);
        report.add_total("decompositions_verified", c.verified as u64);
        if let Some(f) = c.form {
            report.add_form(f, 1);
        }
        report.counterexamples.extend(c.problem);
    }
    Ok(report.finish(started))
}

/// Every reduced product of two palindromes of length at most `L` has the
/// form `A P Q A⁻¹`, and every such form decomposes back into two palindromes.
pub fn verify_theorem2(alphabet: u32, max_factor_len: usize) -> Result<VerificationReport> {
    run_theorem("thm2", alphabet, 2, max_factor_len, check_pl2)
}

/// As [`verify_theorem2`] for three palindromes and the ABP/APB forms.
pub fn verify_theorem3(alphabet: u32, max_factor_len: usize) -> Result<VerificationReport> {
    run_theorem("thm3", alphabet, 3, max_factor_len, check_pl3)
}

/// Tests every product of four palindromes of length at most `L` against
/// the five candidate forms. Words matching none are reported, not asserted.
pub fn k4_experiment(alphabet: u32, max_factor_len: usize) -> Result<VerificationReport> {
    let started = Instant::now();
    let closure = product_closure(alphabet, 4, max_factor_len)?;
    let members = closure.words();
    let hits: Vec<[bool; 5]> = members
        .par_iter()
        .map(|w| {
            let mut h = [false; 5];
            for (i, p) in k4_patterns().iter().enumerate() {
                h[i] = p.match_word(w).is_some();
            }
            h
        })
        .collect();
    let mut report = VerificationReport::new("k4")
        .param("m", alphabet)
        .param("L", max_factor_len)
        .param("k", 4);
    report.add_total("closure_members", members.len() as u64);
    for form in K4_FORMS {
        report.add_form(form, 0);
    }
    for (w, h) in members.iter().zip(&hits) {
        for (i, &hit) in h.iter().enumerate() {
            if hit {
                report.add_form(K4_FORMS[i], 1);
            }
        }
        if h.iter().any(|&x| x) {
            report.add_total("matched_some_form", 1);
        } else {
            report.add_total("matched_no_form", 1);
            report.counterexamples.push(w.to_string());
        }
    }
    report.add_total("matched_some_form", 0);
    report.add_total("matched_no_form", 0);
    Ok(report.finish(started))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_theorem_runs_pass() {
        for (m, l) in [(1, 5), (2, 4), (2, 0)] {
            let r = verify_theorem2(m, l).unwrap();
            assert!(r.passed(), "{}", r.to_text());
        }
        for (m, l) in [(1, 4), (2, 3), (2, 0)] {
            let r = verify_theorem3(m, l).unwrap();
            assert!(r.passed(), "{}", r.to_text());
        }
    }

    #[test]
    fn trivial_k4_run() {
        let r = k4_experiment(2, 0).unwrap();
        assert_eq!(r.totals["closure_members"], 1);
        assert!(r.passed());
        assert_eq!(r.per_form_counts.len(), 5);
    }

    #[test]
    fn one_generator_k4_run() {
        let r = k4_experiment(1, 3).unwrap();
        assert!(r.passed(), "{}", r.to_text());
    }
}
