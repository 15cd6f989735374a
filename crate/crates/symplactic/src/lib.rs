//! Crystal combinatorics for the doubled signed alphabet
//! `1 < … < n < n̄ < … < 1̄`: raising and lowering operators on words,
//! admissible-column calculus, symplectic tableaux, the plactic congruence,
//! a column insertion algorithm with its word ↔ (tableau, shape-sequence)
//! correspondence, and the sliding algorithm with confluent rectification.
//!
//! Everything is a pure transformation on immutable values; all types are
//! safe to share across threads. The [`oracle`] module recomputes the main
//! pipelines by an independent route and ships the differential suites that
//! compare them exhaustively at small ranks.
//!
//! ```
//! use symplactic::{insertion, rs, Word};
//!
//! // the tableau of a word, and the pair that determines the word
//! let w = Word::from_signed(2, &[2, -2, 1, 1])?;
//! let tableau = insertion::p_symbol(&w)?;
//! assert_eq!(tableau.shape().heights(), &[2, 1, 1]);
//!
//! let pair = rs::rs_map(&w)?;
//! assert_eq!(rs::rs_inverse(&pair, 2)?, w);
//! # Ok::<(), symplactic::Error>(())
//! ```

pub mod alphabet;
pub mod column;
pub mod crystal;
pub mod error;
pub mod insertion;
pub mod io;
pub mod oracle;
pub mod plactic;
pub mod rs;
pub mod sjdt;
pub mod tableau;

pub use alphabet::{DominantWeight, Letter, Word};
pub use error::{Error, Result};

#[cfg(test)]
pub(crate) mod test_util {
    use crate::alphabet::Word;

    pub fn w(rank: u8, signed: &[i64]) -> Word {
        Word::from_signed(rank, signed).expect("test word")
    }

    pub fn all_words(rank: u8, max_len: usize) -> Vec<Word> {
        crate::oracle::all_words(rank, max_len)
    }
}
