//! Word rewriting: `x_j x_i -> c_ij x_i x_j + d_ij` on adjacent descending
//! pairs, and the cubic overlap check built on it.

use std::cmp::Reverse;
use std::collections::BTreeMap;
use std::sync::Arc;

use super::{add_term, AlgebraPresentation, Exponent, Polynomial, Terms};
use crate::field::Scalar;

type Words = BTreeMap<(Reverse<usize>, Vec<usize>), Scalar>;

fn push_word(words: &mut Words, word: Vec<usize>, coeff: Scalar) {
    if coeff.is_zero() {
        return;
    }
    let key = (Reverse(word.len()), word);
    let sum = match words.remove(&key) {
        Some(old) => &old + &coeff,
        None => coeff,
    };
    if !sum.is_zero() {
        words.insert(key, sum);
    }
}

/// A cubic overlap `x_k x_j x_i` (`i < j < k`, 0-based) whose two
/// resolutions disagree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OverlapFailure {
    pub triple: (usize, usize, usize),
    /// Normal form when `x_k x_j` is rewritten first.
    pub upper_first: Polynomial,
    /// Normal form when `x_j x_i` is rewritten first.
    pub lower_first: Polynomial,
}

impl OverlapFailure {
    pub fn difference(&self) -> Polynomial {
        &self.upper_first - &self.lower_first
    }
}

impl AlgebraPresentation {
    /// Applies the relation at position `pos` (`word[pos] > word[pos + 1]`).
    fn rewrite_at(&self, word: &[usize], pos: usize, coeff: &Scalar, into: &mut Words) {
        let (j, i) = (word[pos], word[pos + 1]);
        debug_assert!(j > i);
        let splice = |middle: &[usize]| {
            let mut w = Vec::with_capacity(word.len());
            w.extend_from_slice(&word[..pos]);
            w.extend_from_slice(middle);
            w.extend_from_slice(&word[pos + 2..]);
            w
        };
        push_word(into, splice(&[i, j]), coeff * &self.c[i][j]);
        let d = &self.d[i][j];
        push_word(into, splice(&[]), coeff * &d.constant);
        for (v, cv) in &d.coeffs {
            push_word(into, splice(&[*v]), coeff * cv);
        }
    }

    fn normalize_words(
        self: &Arc<Self>,
        mut pending: Words,
        choose: &mut dyn FnMut(&[usize], &[usize]) -> usize,
    ) -> Polynomial {
        let n = self.nvars();
        let mut done = Terms::new();
        while let Some(((_, word), coeff)) = pending.pop_first() {
            let descents: Vec<usize> =
                (0..word.len().saturating_sub(1)).filter(|&p| word[p] > word[p + 1]).collect();
            if descents.is_empty() {
                let mut exp = vec![0u32; n];
                for v in &word {
                    exp[*v] += 1;
                }
                add_term(&mut done, Exponent::new(exp), coeff);
            } else {
                let pick = choose(&word, &descents);
                self.rewrite_at(&word, descents[pick % descents.len()], &coeff, &mut pending);
            }
        }
        Polynomial::from_map(self, done)
    }

    /// Normal form of the product of the listed variables, rewriting the
    /// leftmost descending pair first. The empty word is `1`.
    pub fn normalize_word(self: &Arc<Self>, word: &[usize]) -> Polynomial {
        self.normalize_word_by(word, |_, _| 0)
    }

    /// As [`Self::normalize_word`], with `choose(word, descents)` selecting
    /// which descending position to rewrite next (taken modulo the count).
    pub fn normalize_word_by<F>(self: &Arc<Self>, word: &[usize], mut choose: F) -> Polynomial
    where
        F: FnMut(&[usize], &[usize]) -> usize,
    {
        assert!(word.iter().all(|&v| v < self.nvars()), "variable index out of range");
        let mut pending = Words::new();
        push_word(&mut pending, word.to_vec(), self.field.one());
        self.normalize_words(pending, &mut choose)
    }

    /// Resolves every overlap `x_k x_j x_i`, `i < j < k`, both ways and
    /// reports the triples where the normal forms differ.
    pub fn consistency_check(self: &Arc<Self>) -> Vec<OverlapFailure> {
        let n = self.nvars();
        let one = self.field.one();
        let mut failures = Vec::new();
        for k in 0..n {
            for j in 0..k {
                for i in 0..j {
                    let word = [k, j, i];
                    let resolve = |pos: usize| {
                        let mut pending = Words::new();
                        self.rewrite_at(&word, pos, &one, &mut pending);
                        self.normalize_words(pending, &mut |_, _| 0)
                    };
                    let upper_first = resolve(0);
                    let lower_first = resolve(1);
                    if upper_first != lower_first {
                        failures.push(OverlapFailure { triple: (i, j, k), upper_first, lower_first });
                    }
                }
            }
        }
        failures
    }
}
