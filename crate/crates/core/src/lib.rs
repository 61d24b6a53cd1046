//! Palindromic length of words in free semigroups and free groups.
//!
//! - [`words`]: letters, words, free reduction, mirror image and inverse.
//! - [`palfact`]: semigroup palindromic length (dynamic program and palindromic tree).
//! - [`pattern`]: matcher for concatenation patterns with palindrome constraints.
//! - [`forms`]: group palindromic length up to 3, decompositions, product closures.
//! - [`lemmas`]: catalog of word equations with palindromes and bounded verification.

pub mod error;
pub mod forms;
pub mod lemmas;
pub mod palfact;
pub mod pattern;
pub mod report;
pub mod words;

pub use error::{Error, Result};
pub use words::{format_word, parse_word, Letter, ReducedWord, Transform, Word};
