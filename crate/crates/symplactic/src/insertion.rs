//! The bumping algorithm: a letter into an admissible column, a letter into
//! a tableau, and the recursively defined tableau of a word.

use crate::alphabet::{Letter, Word};
use crate::column::{contract, split, Column, ExtLetter};
use crate::error::{Error, Result};
use crate::plactic::forward_window_rewrites;
use crate::tableau::SymplecticTableau;

/// Outcome of inserting a letter into an admissible column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ColumnInsertResult {
    /// The letter extends the column below.
    Grew(Column),
    /// A pair was erased: the new column is one cell shorter than the old
    /// column plus the letter.
    Contracted(Column),
    /// The column keeps its height and a letter exits to the right.
    Bumped { column: Column, exiting: Letter },
}

/// Inserts `x` into the admissible column `c`.
///
/// Dispatch is purely combinatorial: appending `x` gives an admissible
/// column word (grow), a non-admissible increasing word (contract), or no
/// increasing word at all, in which case a right-to-left sweep of
/// three-letter windows pushes one letter out to the left. Each window
/// admits exactly one forward rewrite; the sweep asserts it.
pub fn insert_letter_column(x: Letter, c: &Column) -> Result<ColumnInsertResult> {
    if !c.is_admissible() {
        return Err(Error::NotAdmissible(format!("{:?}", c)));
    }
    let increasing = c.cells().last().is_none_or(|&last| last < x);
    if increasing {
        let grown = Column::new(c.rank(), {
            let mut cells = c.cells().to_vec();
            cells.push(x);
            cells
        })
        .expect("still strictly increasing");
        if grown.is_admissible() {
            return Ok(ColumnInsertResult::Grew(grown));
        }
        let shrunk = contract(&grown)
            .map_err(|e| Error::Internal(format!("contraction rejected {:?}: {}", grown, e)))?;
        return Ok(ColumnInsertResult::Contracted(shrunk));
    }

    // Bump: sweep the word w(c)·x with overlapping windows from the right.
    let mut letters = c.cells().to_vec();
    letters.push(x);
    for k in (0..letters.len().saturating_sub(2)).rev() {
        let win = [letters[k], letters[k + 1], letters[k + 2]];
        let mut hits = forward_window_rewrites(win, c.rank());
        if hits.len() != 1 {
            return Err(Error::Internal(format!(
                "window {:?} admits {} forward rewrites during a bump",
                win,
                hits.len()
            )));
        }
        let (_, img) = hits.pop().expect("one rewrite");
        letters[k..k + 3].copy_from_slice(&img);
    }
    let exiting = letters[0];
    let column = Column::new(c.rank(), letters[1..].to_vec())
        .map_err(|e| Error::Internal(format!("bump left a non-column: {}", e)))?;
    if !column.is_admissible() {
        return Err(Error::Internal(format!(
            "bump left non-admissible column {:?}",
            column
        )));
    }
    // The bumped column and the exiting letter must form a valid two-column
    // tableau: right half of the column stays below the exiting letter.
    let sc = split(&column).expect("admissible column splits");
    if sc.right[0] > ExtLetter::Plain(exiting) {
        return Err(Error::Internal(format!(
            "bump broke the two-column condition: {:?} then {}",
            column, exiting
        )));
    }
    Ok(ColumnInsertResult::Bumped { column, exiting })
}

/// Inserts `x` into the tableau `t`: bump left to right; a contraction can
/// only happen at the first column, in which case the contracted word is
/// re-inserted letter by letter into the remaining columns.
pub fn insert_letter_tableau(x: Letter, t: &SymplecticTableau) -> Result<SymplecticTableau> {
    let rank = t.rank();
    if x.value() > rank {
        return Err(Error::LetterOutOfRange {
            value: x.signed(),
            rank,
        });
    }
    let mut columns = t.columns().to_vec();
    let mut carry = x;
    let mut j = 0;
    loop {
        if j == columns.len() {
            columns.push(Column::new(rank, vec![carry]).expect("single cell"));
            break;
        }
        match insert_letter_column(carry, &columns[j])? {
            ColumnInsertResult::Grew(c) => {
                columns[j] = c;
                break;
            }
            ColumnInsertResult::Bumped { column, exiting } => {
                columns[j] = column;
                carry = exiting;
                j += 1;
            }
            ColumnInsertResult::Contracted(c) => {
                if j != 0 {
                    return Err(Error::Internal(format!(
                        "contraction at column {} during insertion",
                        j + 1
                    )));
                }
                let rest = SymplecticTableau::new(rank, columns[1..].to_vec())
                    .map_err(|e| Error::Internal(format!("tail tableau invalid: {}", e)))?;
                let mut acc = rest;
                for &y in c.cells() {
                    let before = acc.num_boxes();
                    acc = insert_letter_tableau(y, &acc)?;
                    if acc.num_boxes() != before + 1 {
                        return Err(Error::Internal(
                            "second contraction during the contraction branch".into(),
                        ));
                    }
                }
                return Ok(acc);
            }
        }
    }
    SymplecticTableau::new(rank, columns)
        .map_err(|e| Error::Internal(format!("insertion left an invalid tableau: {}", e)))
}

/// The tableau of a word: left fold of the insertion over its letters.
pub fn p_symbol(w: &Word) -> Result<SymplecticTableau> {
    let mut t = SymplecticTableau::empty(w.rank());
    for &x in w.letters() {
        t = insert_letter_tableau(x, &t)?;
    }
    Ok(t)
}
