//! The recording tableau, the word ↔ (tableau, shape sequence) bijection,
//! and its inverse through the crystal structure.

use crate::alphabet::{Letter, Word};
use crate::crystal::{is_highest_weight, replay, to_highest};
use crate::error::{Error, Result};
use crate::insertion::{insert_letter_tableau, p_symbol};
use crate::tableau::{
    highest_weight_tableau, one_box_diff, validate_oscillating, OscillatingTableau, Shape,
    SymplecticTableau,
};

/// The image of one word: its tableau and the sequence of intermediate
/// shapes, which together determine the word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RsPair {
    pub p: SymplecticTableau,
    pub q: OscillatingTableau,
}

/// Shapes of the tableaux of the prefixes `x_1`, `x_1x_2`, …, `x_1…x_l`,
/// collected along the insertion fold.
pub fn q_symbol(w: &Word) -> Result<OscillatingTableau> {
    let mut t = SymplecticTableau::empty(w.rank());
    let mut shapes = Vec::with_capacity(w.len());
    for &x in w.letters() {
        t = insert_letter_tableau(x, &t)?;
        shapes.push(t.shape());
    }
    Ok(OscillatingTableau { shapes })
}

/// The correspondence `w ↦ (P, Q)`.
pub fn rs_map(w: &Word) -> Result<RsPair> {
    Ok(RsPair {
        p: p_symbol(w)?,
        q: q_symbol(w)?,
    })
}

/// Inverse correspondence. The shape sequence determines a highest-weight
/// word; the canonical raising path of the tableau's reading, replayed from
/// it, recovers the original word. The result is re-encoded and compared to
/// the input pair, so an inconsistent pair is reported rather than silently
/// accepted.
pub fn rs_inverse(pair: &RsPair, rank: u8) -> Result<Word> {
    if pair.p.rank() != rank {
        return Err(Error::RankMismatch(rank, pair.p.rank()));
    }
    if !validate_oscillating(&pair.q, rank) {
        return Err(Error::InvalidInput(
            "shape sequence does not move one box at a time within the rank".into(),
        ));
    }
    if pair.p.shape() != pair.q.last() {
        return Err(Error::InvalidInput(format!(
            "tableau shape {:?} does not match final shape {:?}",
            pair.p.shape(),
            pair.q.last()
        )));
    }

    // Letter i: box added in row k gives k, box removed gives k̄.
    let mut letters = Vec::with_capacity(pair.q.len());
    let mut prev = Shape::empty();
    for s in &pair.q.shapes {
        let (added, row) = one_box_diff(&prev, s).expect("validated above");
        letters.push(if added {
            Letter::unbarred(row as u8)
        } else {
            Letter::barred(row as u8)
        });
        prev = s.clone();
    }
    let skeleton = Word::new(rank, letters)?;
    if !is_highest_weight(&skeleton) {
        return Err(Error::Internal(format!(
            "shape-sequence word {:?} is not of highest weight",
            skeleton
        )));
    }

    let (top, path) = to_highest(&pair.p.reading());
    if top.weight() != skeleton.weight() {
        return Err(Error::Internal(
            "tableau and shape sequence disagree on the highest weight".into(),
        ));
    }
    let word = replay(&skeleton, &path)?;

    let check = rs_map(&word)?;
    if check.p != pair.p || check.q != pair.q {
        return Err(Error::InvalidInput(
            "pair is not the image of any word".into(),
        ));
    }
    Ok(word)
}

/// Builds the tableau side of a pair for a given final shape, mostly for
/// counting arguments in tests: readings of tableaux of shape `λ`.
pub fn tableaux_of_shape(shape: &Shape, rank: u8, cap: usize) -> Result<Vec<SymplecticTableau>> {
    let lambda = shape.lambda(rank)?;
    let hw = highest_weight_tableau(&lambda, rank)?;
    let component = crate::crystal::enumerate_component(&hw.reading(), cap)?;
    component
        .vertices
        .iter()
        .map(|v| crate::tableau::tableau_from_reading(v, shape))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::test_util::{all_words, w};

    #[test]
    fn q_of_single_letter() {
        let q = q_symbol(&w(2, &[1])).unwrap();
        assert_eq!(q.shapes, vec![Shape::new(vec![1]).unwrap()]);
    }

    #[test]
    fn q_of_cancelling_pair() {
        let q = q_symbol(&w(2, &[1, -1])).unwrap();
        assert_eq!(q.shapes, vec![Shape::new(vec![1]).unwrap(), Shape::empty()]);
    }

    #[test]
    fn q_final_shape_matches_p() {
        for word in all_words(2, 4) {
            let pair = rs_map(&word).unwrap();
            assert_eq!(pair.p.shape(), pair.q.last());
            assert!(validate_oscillating(&pair.q, 2));
        }
    }

    #[test]
    fn round_trip_small() {
        for word in all_words(2, 4) {
            let pair = rs_map(&word).unwrap();
            assert_eq!(rs_inverse(&pair, 2).unwrap(), word, "{:?}", word);
        }
    }

    #[test]
    fn inverse_of_single_letter_pair() {
        let pair = rs_map(&w(2, &[1])).unwrap();
        assert_eq!(rs_inverse(&pair, 2).unwrap(), w(2, &[1]));
    }

    #[test]
    fn mismatched_shapes_are_rejected() {
        let pair = rs_map(&w(2, &[1, 2])).unwrap();
        let broken = RsPair {
            p: pair.p.clone(),
            q: OscillatingTableau {
                shapes: vec![
                    Shape::new(vec![1]).unwrap(),
                    Shape::new(vec![1, 1]).unwrap(),
                ],
            },
        };
        assert!(rs_inverse(&broken, 2).is_err());
    }

    #[test]
    fn injective_on_small_words() {
        use std::collections::HashMap;
        let mut seen: HashMap<String, Word> = HashMap::new();
        for word in all_words(2, 4) {
            let pair = rs_map(&word).unwrap();
            let key = format!("{:?}|{:?}", pair.p, pair.q);
            if let Some(other) = seen.insert(key, word.clone()) {
                panic!("{:?} and {:?} share an image", other, word);
            }
        }
    }
}
