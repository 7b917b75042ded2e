//! Distinguished translation words and the exponent labels that express
//! lattice tau-functions as their monomials.

use super::action::{act_word_weight, GenSymbol, Word};
use super::weight::Weight;
use GenSymbol::*;

/// The four commuting translation elements used to label lattice sites.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TranslationWord {
    THat13,
    THat40,
    THat34,
    T14,
}

/// Defining word of each translation element.
pub fn translation_word(t: TranslationWord) -> Word {
    match t {
        TranslationWord::THat13 => Word::new([S1, S2, S0, S4, S2, S1, Sigma3]),
        TranslationWord::THat40 => Word::new([S4, S2, S1, S3, S2, S4, Sigma3]),
        TranslationWord::THat34 => Word::new([S3, S2, S0, S1, S2, S3, Sigma1]),
        TranslationWord::T14 => Word::new([S1, S4, S2, S0, S3, S2, Sigma2]),
    }
}

/// Net displacement of a base point under a word: `w(base) - base`.
pub fn displacement_vector(w: &Word, base: &Weight) -> Weight {
    act_word_weight(w, base) - *base
}

/// Exponents (k, l, m, n) of the translation monomial
/// `THat13^k THat40^l THat34^m T14^n` attached to one lattice site, for the
/// numerator and denominator tau-functions, together with the overall sign.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TauLabel {
    pub numerator: [i64; 4],
    pub denominator: [i64; 4],
    pub sign: i64,
}

/// Monomial exponents of the tau-quotient at lattice site `(l1, l2)`.
pub fn tau_label(l1: i64, l2: i64) -> TauLabel {
    let sign = if (l1 - 1).rem_euclid(2) == 0 { 1 } else { -1 };
    if (l1 + l2).rem_euclid(2) == 0 {
        let s = (l1 + l2) / 2;
        TauLabel {
            numerator: [-s - 1, -s - 1, -2, l1],
            denominator: [-s, -s, 0, l1],
            sign,
        }
    } else {
        let t = (l1 + l2 + 1) / 2;
        TauLabel {
            numerator: [-t, -t - 1, -2, l1],
            denominator: [-(l1 + l2 - 1) / 2, -t, 0, l1],
            sign,
        }
    }
}

/// Expands exponents `(k, l, m, n)` into the concrete word
/// `THat13^k THat40^l THat34^m T14^n` (negative exponents via reversal).
pub fn tau_label_word(exponents: &[i64; 4]) -> Word {
    use TranslationWord::*;
    let mut word = Word::identity();
    for (t, &e) in [THat13, THat40, THat34, T14].iter().zip(exponents.iter()) {
        word = word.then(&translation_word(*t).pow(e));
    }
    word
}
