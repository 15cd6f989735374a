//! The sliding algorithm: elementary two-column steps on punctured skew
//! tableaux, full slides from an inner corner with the end-of-slide
//! contraction, and confluent rectification.

use crate::alphabet::Letter;
use crate::column::{contract, phi_inverse, phi_map, Column};
use crate::error::{Error, Result};
use crate::tableau::{PuncturedSkewTableau, SkewColumn, SkewTableau, SplitCell, SymplecticTableau};

/// A mid-slide state: the punctured tableau plus the column where the slide
/// started, which is the only column allowed to go marker-deficient.
#[derive(Clone, Debug)]
pub struct SlideState {
    pub tab: PuncturedSkewTableau,
    pub start_col: usize,
}

/// Rule for picking the next inner corner during rectification. The result
/// does not depend on the choice; a fixed rule keeps traces reproducible.
#[derive(Clone, Debug)]
pub enum CornerPolicy {
    /// Topmost corner first, leftmost among ties.
    TopmostLeftmost,
    /// An explicit `(row, column)` sequence; each entry must be an inner
    /// corner when its turn comes, and the sequence must finish the job.
    Sequence(Vec<(usize, usize)>),
}

fn column_plus(c: &Column, x: Letter) -> Result<Column> {
    let mut cells = c.cells().to_vec();
    cells.push(x);
    cells.sort();
    Column::new(c.rank(), cells)
        .map_err(|_| Error::Internal(format!("letter {} collides entering {:?}", x, c)))
}

fn column_minus(c: &Column, x: Letter) -> Result<Column> {
    let pos = c
        .cells()
        .iter()
        .position(|&l| l == x)
        .ok_or_else(|| Error::Internal(format!("letter {} missing from {:?}", x, c)))?;
    let mut cells = c.cells().to_vec();
    cells.remove(pos);
    Ok(Column::new(c.rank(), cells).expect("removal keeps strict increase"))
}

/// True when the puncture has no box below and none to the right.
pub fn star_is_outside_corner(t: &PuncturedSkewTableau) -> bool {
    let jc = t.star_col();
    let r = t.star_row();
    let below = r < t.outer_height(jc);
    let right = match t.parts().get(jc + 1) {
        Some(q) => {
            debug_assert!(r > q.offset, "puncture faces an inner box");
            r <= q.outer_height()
        }
        None => false,
    };
    !below && !right
}

/// One elementary step. On the split form, with the puncture's own column
/// split as `(lC₁, rC₁)` and the next column as `(lC₂, rC₂)`:
///
/// * vertical: the letter below the puncture moves up one cell;
/// * horizontal, incoming letter barred: the letter joins the coadmissible
///   companion of the punctured column, which is pulled back through the
///   column bijection; the next column loses the letter directly;
/// * horizontal, incoming letter unbarred: the letter joins the punctured
///   column directly (possibly leaving it splittable only with the marker),
///   and the companion of the next column loses it before pulling back.
pub fn sjdt_elementary(state: &SlideState) -> Result<SlideState> {
    let t = &state.tab;
    let rank = t.rank();
    let jc = t.star_col();
    let r = t.star_row();
    if star_is_outside_corner(t) {
        return Err(Error::InvalidInput(
            "puncture is already an outside corner".into(),
        ));
    }

    let below_exists = r < t.outer_height(jc);
    let right =
        match t.parts().get(jc + 1) {
            Some(q) if r > q.offset && r <= q.outer_height() => {
                let split = t.split_column(jc + 1)?;
                match split.left[r - q.offset - 1] {
                    SplitCell::Letter(e) => Some(e.plain().ok_or_else(|| {
                        Error::Internal("marker letter faces the puncture".into())
                    })?),
                    SplitCell::Star => {
                        return Err(Error::Internal("two punctures in one tableau".into()))
                    }
                }
            }
            _ => None,
        };

    let vertical = match right {
        None => true,
        Some(b) => {
            if below_exists {
                // a′ is the right-half letter directly below the puncture
                let own = t.split_column(jc)?;
                let a_prime = match own.right[r - t.parts()[jc].offset] {
                    SplitCell::Letter(e) => e,
                    SplitCell::Star => return Err(Error::Internal("puncture below itself".into())),
                };
                a_prime <= crate::column::ExtLetter::Plain(b)
            } else {
                false
            }
        }
    };

    let mut parts = t.parts().to_vec();
    if vertical {
        let tab = PuncturedSkewTableau::new_unchecked(rank, parts, jc, r + 1)?;
        return Ok(SlideState {
            tab,
            start_col: state.start_col,
        });
    }

    let b = right.expect("horizontal move has an incoming letter");
    let own_letters = &parts[jc].column;
    let next = &parts[jc + 1].column;
    let (new_own, new_next) = if b.is_barred() {
        let companion = phi_map(own_letters)
            .map_err(|e| Error::Internal(format!("punctured column lost admissibility: {}", e)))?;
        let enlarged = column_plus(&companion, b)?;
        if !enlarged.is_coadmissible() {
            return Err(Error::Internal(format!(
                "{:?} plus {} is not coadmissible",
                companion, b
            )));
        }
        let new_own = phi_inverse(&enlarged)?;
        let new_next = column_minus(next, b)?;
        (new_own, new_next)
    } else {
        let new_own = column_plus(own_letters, b)?;
        let companion = phi_map(next)
            .map_err(|e| Error::Internal(format!("next column lost admissibility: {}", e)))?;
        let shrunk = column_minus(&companion, b)?;
        let new_next = phi_inverse(&shrunk)
            .map_err(|e| Error::Internal(format!("companion pull-back failed: {}", e)))?;
        (new_own, new_next)
    };
    parts[jc] = SkewColumn::new(parts[jc].offset, new_own);
    parts[jc + 1] = SkewColumn::new(parts[jc + 1].offset, new_next);
    let tab = PuncturedSkewTableau::new_unchecked(rank, parts, jc + 1, r)?;
    Ok(SlideState {
        tab,
        start_col: state.start_col,
    })
}

/// Checks the running invariants of a slide: every column splits at worst
/// with the marker, only the start column ever needs it, and the split-form
/// rows stay weakly increasing around the puncture.
fn assert_slide_invariants(state: &SlideState) -> Result<()> {
    let form = state
        .tab
        .split_form()
        .map_err(|e| Error::Internal(format!("mid-slide column refuses to split: {}", e)))?;
    for j in form.marker_columns() {
        if j != state.start_col {
            return Err(Error::Internal(format!(
                "marker appeared in column {} away from the slide's start column {}",
                j + 1,
                state.start_col + 1
            )));
        }
    }
    if !form.rows_weakly_increasing() {
        return Err(Error::Internal(
            "mid-slide split rows lost weak increase".into(),
        ));
    }
    Ok(())
}

/// Runs a full slide from an inner corner: puncture, iterate elementary
/// steps until the puncture is an outside corner, delete it, and contract
/// the single marker-deficient column if one remains.
pub fn sjdt_slide(t: &SkewTableau, corner: (usize, usize)) -> Result<SkewTableau> {
    if !t.inner_corners().contains(&corner) {
        return Err(Error::InvalidInput(format!(
            "{:?} is not an inner corner of {:?}",
            corner, t
        )));
    }
    let rank = t.rank();
    let (row, col) = corner;
    let j0 = col - 1;
    let mut parts = t.parts().to_vec();
    parts[j0] = SkewColumn::new(parts[j0].offset - 1, parts[j0].column.clone());
    let mut state = SlideState {
        tab: PuncturedSkewTableau::new_unchecked(rank, parts, j0, row)?,
        start_col: j0,
    };
    assert_slide_invariants(&state)?;
    while !star_is_outside_corner(&state.tab) {
        state = sjdt_elementary(&state)?;
        assert_slide_invariants(&state)?;
    }

    // The puncture sits at the bottom of its column, so dropping the
    // punctured view deletes exactly that cell.
    let mut parts = state.tab.parts().to_vec();
    let deficient: Vec<usize> = parts
        .iter()
        .enumerate()
        .filter(|(_, p)| !p.column.is_admissible())
        .map(|(j, _)| j)
        .collect();
    match deficient.as_slice() {
        [] => {}
        [k] => {
            if *k != state.start_col {
                return Err(Error::Internal(format!(
                    "deficient column {} is not the start column",
                    k + 1
                )));
            }
            let contracted = contract(&parts[*k].column)
                .map_err(|e| Error::Internal(format!("end-of-slide contraction: {}", e)))?;
            parts[*k] = SkewColumn::new(parts[*k].offset + 1, contracted);
        }
        more => {
            return Err(Error::Internal(format!(
                "{} columns left deficient by one slide",
                more.len()
            )));
        }
    }
    SkewTableau::new(rank, parts)
        .map_err(|e| Error::Internal(format!("slide produced an invalid tableau: {}", e)))
}

/// Rectification: slide on policy-chosen inner corners until none remain.
pub fn rectify(t: &SkewTableau, policy: &CornerPolicy) -> Result<SymplecticTableau> {
    let mut cur = t.clone();
    match policy {
        CornerPolicy::TopmostLeftmost => loop {
            let corners = cur.inner_corners();
            match corners.first() {
                Some(&c) => cur = sjdt_slide(&cur, c)?,
                None => break,
            }
        },
        CornerPolicy::Sequence(seq) => {
            for &c in seq {
                cur = sjdt_slide(&cur, c)?;
            }
            if !cur.inner_corners().is_empty() {
                return Err(Error::InvalidInput(
                    "corner sequence ended before rectification finished".into(),
                ));
            }
        }
    }
    cur.to_straight()
}

/// The two-column specialization: a skew tableau of two columns whose inner
/// shape is a single column has a unique inner corner; slide it.
pub fn two_column_slide(t: &SkewTableau) -> Result<SkewTableau> {
    if t.parts().len() != 2 {
        return Err(Error::InvalidInput(format!(
            "expected two columns, found {}",
            t.parts().len()
        )));
    }
    if t.parts()[0].offset == 0 || t.parts()[1].offset != 0 {
        return Err(Error::InvalidInput(
            "inner shape must be a single first-column stack".into(),
        ));
    }
    let corner = (t.parts()[0].offset, 1);
    sjdt_slide(t, corner)
}
