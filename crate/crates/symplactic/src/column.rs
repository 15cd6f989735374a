//! Admissible and coadmissible columns: the splitting algorithm, the
//! bijection between the two families, the two-cell contraction, and the
//! marker-extended split used by the sliding algorithm.

use std::fmt;

use crate::alphabet::{Letter, Word};
use crate::error::{Error, Result};

/// A strictly increasing column of letters, top to bottom.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Column {
    rank: u8,
    cells: Vec<Letter>,
}

impl Column {
    pub fn new(rank: u8, cells: Vec<Letter>) -> Result<Self> {
        for l in &cells {
            if l.value() > rank {
                return Err(Error::LetterOutOfRange {
                    value: l.signed(),
                    rank,
                });
            }
        }
        if !cells.windows(2).all(|w| w[0] < w[1]) {
            return Err(Error::NotAColumn(format!("{:?}", cells)));
        }
        Ok(Column { rank, cells })
    }

    pub fn from_word(w: &Word) -> Result<Self> {
        Column::new(w.rank(), w.letters().to_vec())
    }

    pub fn from_signed(rank: u8, signed: &[i64]) -> Result<Self> {
        Column::from_word(&Word::from_signed(rank, signed)?)
    }

    pub fn empty(rank: u8) -> Self {
        Column {
            rank,
            cells: Vec::new(),
        }
    }

    pub fn rank(&self) -> u8 {
        self.rank
    }

    pub fn cells(&self) -> &[Letter] {
        &self.cells
    }

    pub fn height(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn word(&self) -> Word {
        Word::new(self.rank, self.cells.clone()).expect("column cells are valid letters")
    }

    fn contains_value(&self, v: u8) -> bool {
        self.cells.iter().any(|l| l.value() == v)
    }

    /// `N(m)`: number of letters `x` with `x ≤ m` or `x ≥ m̄`, i.e. letters
    /// whose value is at most `m` in either barred state.
    pub fn n_count(&self, m: u8) -> usize {
        self.cells.iter().filter(|l| l.value() <= m).count()
    }

    /// Admissibility: `N(m) ≤ m` for every `m`.
    pub fn is_admissible(&self) -> bool {
        (1..=self.rank).all(|m| self.n_count(m) <= m as usize)
    }

    /// `N*(z)`: number of letters `x` with `z ≤ x ≤ z̄`, i.e. letters whose
    /// value is at least `z` in either barred state.
    pub fn n_star(&self, z: u8) -> usize {
        self.cells.iter().filter(|l| l.value() >= z).count()
    }

    /// Coadmissibility: `N*(z) ≤ n − z + 1` for every pair `(z, z̄)` present.
    pub fn is_coadmissible(&self) -> bool {
        self.pairs()
            .iter()
            .all(|&z| self.n_star(z) <= (self.rank - z + 1) as usize)
    }

    /// Unbarred values `z` such that both `z` and `z̄` occur, in decreasing order.
    pub fn pairs(&self) -> Vec<u8> {
        let mut zs: Vec<u8> = (1..=self.rank)
            .filter(|&z| {
                self.cells.contains(&Letter::unbarred(z)) && self.cells.contains(&Letter::barred(z))
            })
            .collect();
        zs.reverse();
        zs
    }
}

impl fmt::Debug for Column {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "col[")?;
        for (i, l) in self.cells.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}", l)?;
        }
        write!(f, "]")
    }
}

/// A letter of the marker-extended alphabet: one extra symbol below every
/// ordinary letter and one above. Ordinary columns can never hold markers;
/// they appear only in split halves.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExtLetter {
    /// The low marker, smaller than every ordinary letter.
    Low,
    Plain(Letter),
    /// The high marker, larger than every ordinary letter.
    High,
}

impl ExtLetter {
    pub fn plain(&self) -> Option<Letter> {
        match self {
            ExtLetter::Plain(l) => Some(*l),
            _ => None,
        }
    }

    pub fn is_marker(&self) -> bool {
        !matches!(self, ExtLetter::Plain(_))
    }
}

impl fmt::Display for ExtLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtLetter::Low => write!(f, "a"),
            ExtLetter::Plain(l) => write!(f, "{}", l),
            ExtLetter::High => write!(f, "-a"),
        }
    }
}

impl fmt::Debug for ExtLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The two halves of a split column, plus the replacements that produced
/// them: the left half trades each paired unbarred `z_i` for `t_i`, the right
/// half trades each `z̄_i` for `t̄_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitColumn {
    pub left: Vec<ExtLetter>,
    pub right: Vec<ExtLetter>,
    /// `(z_i, t_i)` with `z_1 > z_2 > …`; `t_i` is `Low` when the marker was needed.
    pub replacements: Vec<(u8, ExtLetter)>,
}

impl SplitColumn {
    pub fn uses_marker(&self) -> bool {
        self.replacements.iter().any(|(_, t)| t.is_marker())
    }

    /// Both halves as ordinary columns, when no marker was needed.
    pub fn plain(&self, rank: u8) -> Option<(Column, Column)> {
        let strip =
            |v: &[ExtLetter]| -> Option<Vec<Letter>> { v.iter().map(|e| e.plain()).collect() };
        let l = Column::new(rank, strip(&self.left)?).ok()?;
        let r = Column::new(rank, strip(&self.right)?).ok()?;
        Some((l, r))
    }
}

fn split_greedy(c: &Column, allow_marker: bool) -> Result<SplitColumn> {
    let zs = c.pairs();
    let mut replacements: Vec<(u8, ExtLetter)> = Vec::with_capacity(zs.len());
    // t_i is the greatest free value below min(t_{i-1}, z_i); "free" means
    // neither the letter nor its bar occurs in the column.
    let mut bound = u8::MAX;
    for (idx, &z) in zs.iter().enumerate() {
        let hi = z.min(bound).saturating_sub(1);
        let t = (1..=hi).rev().find(|&v| !c.contains_value(v));
        match t {
            Some(v) => {
                replacements.push((z, ExtLetter::Plain(Letter::unbarred(v))));
                bound = v;
            }
            None => {
                if !allow_marker || idx + 1 != zs.len() {
                    return Err(Error::NotAdmissible(format!("{:?}", c)));
                }
                // The marker is below every letter, so it must be the last
                // replacement; a second shortfall has no letter left to take.
                replacements.push((z, ExtLetter::Low));
            }
        }
    }

    let bar_ext = |t: ExtLetter| match t {
        ExtLetter::Plain(l) => ExtLetter::Plain(l.bar()),
        ExtLetter::Low => ExtLetter::High,
        ExtLetter::High => unreachable!("high marker never replaces a letter"),
    };
    let mut left: Vec<ExtLetter> = Vec::with_capacity(c.height());
    let mut right: Vec<ExtLetter> = Vec::with_capacity(c.height());
    for &cell in c.cells() {
        match replacements.iter().find(|(z, _)| *z == cell.value()) {
            Some(&(_, t)) if !cell.is_barred() => {
                // z becomes t in the left half, the right half keeps z
                left.push(t);
                right.push(ExtLetter::Plain(cell));
            }
            Some(&(_, t)) => {
                // z̄ becomes t̄ in the right half, the left half keeps z̄
                right.push(bar_ext(t));
                left.push(ExtLetter::Plain(cell));
            }
            None => {
                left.push(ExtLetter::Plain(cell));
                right.push(ExtLetter::Plain(cell));
            }
        }
    }
    left.sort();
    right.sort();
    debug_assert_eq!(left.len(), c.height());
    debug_assert_eq!(right.len(), c.height());
    Ok(SplitColumn {
        left,
        right,
        replacements,
    })
}

/// Splits an admissible column into its two halves. Fails exactly on
/// non-admissible input.
pub fn split(c: &Column) -> Result<SplitColumn> {
    split_greedy(c, false)
}

/// Split in the marker-extended alphabet: ordinary split when the column is
/// admissible; otherwise the greedy rule spends the single low marker, which
/// succeeds when every strict factor of the column is admissible. Doubly
/// deficient columns are rejected.
pub fn split_extended(c: &Column) -> Result<SplitColumn> {
    split_greedy(c, true)
}

/// The coadmissible companion: unbarred letters of the left half, then
/// barred letters of the right half.
pub fn phi_map(c: &Column) -> Result<Column> {
    let sc = split(c)?;
    let mut cells: Vec<Letter> = Vec::with_capacity(c.height());
    for e in &sc.left {
        let l = e.plain().expect("plain split has no markers");
        if !l.is_barred() {
            cells.push(l);
        }
    }
    for e in &sc.right {
        let l = e.plain().expect("plain split has no markers");
        if l.is_barred() {
            cells.push(l);
        }
    }
    let out = Column::new(c.rank(), cells)
        .map_err(|e| Error::Internal(format!("companion of {:?} not a column: {}", c, e)))?;
    debug_assert!(out.is_coadmissible());
    Ok(out)
}

/// Inverse of the companion map: recovers the unique admissible column from a
/// coadmissible one by running the greedy rule upward.
pub fn phi_inverse(cstar: &Column) -> Result<Column> {
    if !cstar.is_coadmissible() {
        return Err(Error::NotCoadmissible(format!("{:?}", cstar)));
    }
    let ts = cstar.pairs(); // t_1 > t_2 > … > t_r
    let mut zs: Vec<u8> = vec![0; ts.len()];
    // z_i is the smallest free value above max(t_i, z_{i+1}), found from the
    // smallest pair upward.
    let mut bound = 0u8;
    for i in (0..ts.len()).rev() {
        let lo = ts[i].max(bound) + 1;
        let z = (lo..=cstar.rank()).find(|&v| !cstar.contains_value(v));
        match z {
            Some(v) => {
                zs[i] = v;
                bound = v;
            }
            None => return Err(Error::NotCoadmissible(format!("{:?}", cstar))),
        }
    }
    let swap = |l: Letter| -> Letter {
        match ts.iter().position(|&t| t == l.value()) {
            Some(i) if l.is_barred() => Letter::barred(zs[i]),
            Some(i) => Letter::unbarred(zs[i]),
            None => l,
        }
    };
    // The coadmissible column carries t_i where the admissible one carries
    // z_i, in both barred states; swapping them back recovers it.
    let mut cells: Vec<Letter> = cstar.cells().iter().map(|&l| swap(l)).collect();
    cells.sort();
    let out = Column::new(cstar.rank(), cells)
        .map_err(|e| Error::Internal(format!("inverse of {:?} not a column: {}", cstar, e)))?;
    if !out.is_admissible() {
        return Err(Error::Internal(format!(
            "inverse of {:?} gave non-admissible {:?}",
            cstar, out
        )));
    }
    Ok(out)
}

/// The two-cell contraction: on a strictly increasing word that is not
/// admissible but whose strict factors all are, erases the pair `(z, z̄)`
/// for the lowest unbarred `z` with `N(z) = z + 1`. Every part of the
/// precondition is checked.
pub fn contract(c: &Column) -> Result<Column> {
    if c.is_admissible() {
        return Err(Error::InvalidInput(format!(
            "{:?} is admissible, nothing to contract",
            c
        )));
    }
    let h = c.height();
    let head = Column::new(c.rank(), c.cells()[..h - 1].to_vec()).expect("factor of a column");
    let tail = Column::new(c.rank(), c.cells()[1..].to_vec()).expect("factor of a column");
    if !head.is_admissible() || !tail.is_admissible() {
        return Err(Error::InvalidInput(format!(
            "{:?} has a non-admissible strict factor",
            c
        )));
    }
    let z = c
        .pairs()
        .into_iter()
        .filter(|&z| c.n_count(z) == z as usize + 1)
        .min()
        .ok_or_else(|| {
            Error::Internal(format!("no contractible pair in minimal column {:?}", c))
        })?;
    let cells: Vec<Letter> = c
        .cells()
        .iter()
        .copied()
        .filter(|&l| l.value() != z)
        .collect();
    let out = Column::new(c.rank(), cells).expect("subword of a column");
    debug_assert!(out.is_admissible());
    Ok(out)
}
