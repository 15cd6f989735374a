//! The defining relations of the plactic congruence as explicit rewrite
//! steps, and the congruence decision procedure.

use crate::alphabet::{Letter, Word};
use crate::column::{contract, Column};
use crate::crystal::same_position;
use crate::error::Result;

/// Which relation a step instantiates.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Rule {
    /// `y z x ≡ y x z` for `x ≤ y < z`, `z ≠ x̄`
    R1a,
    /// `x z y ≡ z x y` for `x < y ≤ z`, `z ≠ x̄`
    R1b,
    /// `y (x−1)bar (x−1) ≡ y x x̄` for `1 < x ≤ n`, `x ≤ y ≤ x̄`
    R2a,
    /// `x x̄ y ≡ (x−1)bar (x−1) y` for `1 < x ≤ n`, `x ≤ y ≤ x̄`
    R2b,
    /// two-cell contraction of a minimal non-admissible column factor
    R3,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Direction {
    Forward,
    Backward,
}

/// One elementary rewrite: the rule, the direction it was applied in, the
/// start position of the rewritten factor, and the whole resulting word.
#[derive(Clone, Debug)]
pub struct RewriteStep {
    pub rule: Rule,
    pub direction: Direction,
    pub position: usize,
    pub result: Word,
}

/// The unique forward three-letter rewrite applicable to a window, if any.
/// Used by the insertion sweep, which relies on uniqueness.
pub(crate) fn forward_window_rewrites(win: [Letter; 3], rank: u8) -> Vec<(Rule, [Letter; 3])> {
    let mut out = Vec::new();
    let [w1, w2, w3] = win;
    // R1a: (y, z, x) → (y, x, z)
    {
        let (y, z, x) = (w1, w2, w3);
        if x <= y && y < z && z != x.bar() {
            out.push((Rule::R1a, [y, x, z]));
        }
    }
    // R1b: (x, z, y) → (z, x, y)
    {
        let (x, z, y) = (w1, w2, w3);
        if x < y && y <= z && z != x.bar() {
            out.push((Rule::R1b, [z, x, y]));
        }
    }
    // R2a: (y, (x−1)bar, x−1) → (y, x, x̄)
    {
        let (y, m2, m3) = (w1, w2, w3);
        if m2.is_barred() && !m3.is_barred() && m2.value() == m3.value() {
            let x = m3.value() + 1;
            if x <= rank {
                let xu = Letter::unbarred(x);
                let xb = Letter::barred(x);
                if xu <= y && y <= xb {
                    out.push((Rule::R2a, [y, xu, xb]));
                }
            }
        }
    }
    // R2b: (x, x̄, y) → ((x−1)bar, x−1, y)
    {
        let (m1, m2, y) = (w1, w2, w3);
        if !m1.is_barred()
            && m2.is_barred()
            && m1.value() == m2.value()
            && m1.value() > 1
            && m1 <= y
            && y <= m2
        {
            let v = m1.value() - 1;
            out.push((Rule::R2b, [Letter::barred(v), Letter::unbarred(v), y]));
        }
    }
    out
}

fn backward_window_rewrites(win: [Letter; 3], rank: u8) -> Vec<(Rule, [Letter; 3])> {
    let mut out = Vec::new();
    let [w1, w2, w3] = win;
    // R1a backward: (y, x, z) → (y, z, x)
    {
        let (y, x, z) = (w1, w2, w3);
        if x <= y && y < z && z != x.bar() {
            out.push((Rule::R1a, [y, z, x]));
        }
    }
    // R1b backward: (z, x, y) → (x, z, y)
    {
        let (z, x, y) = (w1, w2, w3);
        if x < y && y <= z && z != x.bar() {
            out.push((Rule::R1b, [x, z, y]));
        }
    }
    // R2a backward: (y, x, x̄) → (y, (x−1)bar, x−1)
    {
        let (y, m2, m3) = (w1, w2, w3);
        if !m2.is_barred()
            && m3.is_barred()
            && m2.value() == m3.value()
            && m2.value() > 1
            && m2 <= y
            && y <= m3
        {
            let v = m2.value() - 1;
            out.push((Rule::R2a, [y, Letter::barred(v), Letter::unbarred(v)]));
        }
    }
    // R2b backward: ((x−1)bar, x−1, y) → (x, x̄, y)
    {
        let (m1, m2, y) = (w1, w2, w3);
        if m1.is_barred() && !m2.is_barred() && m1.value() == m2.value() {
            let x = m2.value() + 1;
            if x <= rank {
                let xu = Letter::unbarred(x);
                let xb = Letter::barred(x);
                if xu <= y && y <= xb {
                    out.push((Rule::R2b, [xu, xb, y]));
                }
            }
        }
    }
    out
}

fn with_window(w: &Word, pos: usize, win: [Letter; 3]) -> Word {
    let mut letters = w.letters().to_vec();
    letters[pos..pos + 3].copy_from_slice(&win);
    Word::new(w.rank(), letters).expect("window letters stay in range")
}

/// Every applicable instance of the three-letter relations, in both
/// directions, at every position, plus every contraction of a minimal
/// non-admissible column factor. Pair insertions (the inverse of the
/// contraction) are not enumerated; tests that need them construct the
/// expanded word and contract it back.
pub fn elementary_rewrites(w: &Word) -> Vec<RewriteStep> {
    let mut steps = Vec::new();
    let n = w.rank();
    for pos in 0..w.len().saturating_sub(2) {
        let win = [w.letters()[pos], w.letters()[pos + 1], w.letters()[pos + 2]];
        for (rule, img) in forward_window_rewrites(win, n) {
            steps.push(RewriteStep {
                rule,
                direction: Direction::Forward,
                position: pos,
                result: with_window(w, pos, img),
            });
        }
        for (rule, img) in backward_window_rewrites(win, n) {
            steps.push(RewriteStep {
                rule,
                direction: Direction::Backward,
                position: pos,
                result: with_window(w, pos, img),
            });
        }
    }
    // Contractions: for each start of a strictly increasing run, the
    // shortest non-admissible window is the factor the relation names.
    for start in 0..w.len() {
        let mut end = start;
        while end + 1 < w.len() && w.letters()[end] < w.letters()[end + 1] {
            end += 1;
            let factor = Column::new(n, w.letters()[start..=end].to_vec())
                .expect("increasing run is a column");
            if factor.is_admissible() {
                continue;
            }
            if let Ok(contracted) = contract(&factor) {
                let mut letters = w.letters()[..start].to_vec();
                letters.extend_from_slice(contracted.cells());
                letters.extend_from_slice(&w.letters()[end + 1..]);
                steps.push(RewriteStep {
                    rule: Rule::R3,
                    direction: Direction::Forward,
                    position: start,
                    result: Word::new(n, letters).expect("contracted letters in range"),
                });
            }
            break; // longer windows from this start contain a bad strict factor
        }
    }
    steps
}

/// Decides the congruence. Equivalent to equality of the associated tableaux;
/// decided through the position relation rather than by rewriting search,
/// since the relations admit no confluent orientation here.
pub fn congruent(w1: &Word, w2: &Word) -> Result<bool> {
    same_position(w1, w2)
}

/// Breadth-first search over elementary rewrites, bounded in depth. A test
/// utility: handy for checking that specific congruent words are connected
/// by short chains.
pub fn rewrite_reachable(from: &Word, to: &Word, max_depth: usize) -> bool {
    use std::collections::HashSet;
    let mut frontier = vec![from.clone()];
    let mut seen: HashSet<Word> = frontier.iter().cloned().collect();
    if from == to {
        return true;
    }
    for _ in 0..max_depth {
        let mut next = Vec::new();
        for word in &frontier {
            for step in elementary_rewrites(word) {
                if step.result == *to {
                    return true;
                }
                if seen.insert(step.result.clone()) {
                    next.push(step.result);
                }
            }
        }
        if next.is_empty() {
            return false;
        }
        frontier = next;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crystal::{epsilon, f_op, phi_coeff};
    use crate::test_util::{all_words, w};

    #[test]
    fn the_121_step() {
        let steps = elementary_rewrites(&w(2, &[1, 2, 1]));
        assert_eq!(steps.len(), 1);
        assert_eq!(steps[0].result, w(2, &[1, 1, 2]));
        assert_eq!(steps[0].rule, Rule::R1a);
        assert_eq!(steps[0].direction, Direction::Forward);
    }

    #[test]
    fn column_contraction_step() {
        let steps = elementary_rewrites(&w(3, &[1, 2, 3, -3]));
        let r3: Vec<_> = steps.iter().filter(|s| s.rule == Rule::R3).collect();
        assert_eq!(r3.len(), 1);
        assert_eq!(r3[0].result, w(3, &[1, 2]));
        // and the increasing word admits no three-letter step
        assert_eq!(steps.len(), 1);
    }

    #[test]
    fn short_words_have_no_steps() {
        assert!(elementary_rewrites(&w(2, &[1])).is_empty());
        assert!(elementary_rewrites(&Word::empty(2)).is_empty());
    }

    #[test]
    fn congruent_examples() {
        assert!(congruent(&w(2, &[1, 2, 1]), &w(2, &[1, 1, 2])).unwrap());
        let x = w(2, &[2, -2, 1]);
        assert!(congruent(&x, &x).unwrap());
        assert!(congruent(&w(2, &[1]), &w(3, &[1])).is_err());
    }

    #[test]
    fn steps_preserve_position_and_string_functions() {
        for word in all_words(2, 5) {
            for step in elementary_rewrites(&word) {
                assert!(
                    same_position(&word, &step.result).unwrap(),
                    "{:?} --{:?}/{:?}--> {:?}",
                    word,
                    step.rule,
                    step.direction,
                    step.result
                );
                assert_eq!(word.weight(), step.result.weight());
                for i in 1..=2 {
                    assert_eq!(epsilon(&word, i), epsilon(&step.result, i));
                    assert_eq!(phi_coeff(&word, i), phi_coeff(&step.result, i));
                }
            }
        }
    }

    #[test]
    fn steps_commute_with_lowering() {
        for word in all_words(2, 4) {
            for step in elementary_rewrites(&word) {
                for i in 1..=2 {
                    match (f_op(&word, i), f_op(&step.result, i)) {
                        (None, None) => {}
                        (Some(a), Some(b)) => {
                            assert!(
                                same_position(&a, &b).unwrap(),
                                "{:?} --{}--> diverges over {:?}",
                                word,
                                i,
                                step.rule
                            );
                        }
                        _ => panic!("lowering defined on one side only: {:?}", word),
                    }
                }
            }
        }
    }

    #[test]
    fn length_changes_only_under_contraction() {
        for word in all_words(2, 4) {
            for step in elementary_rewrites(&word) {
                let expect = if step.rule == Rule::R3 {
                    word.len() - 2
                } else {
                    word.len()
                };
                assert_eq!(step.result.len(), expect);
            }
        }
    }
}
