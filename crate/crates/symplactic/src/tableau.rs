//! Symplectic tableaux, skew and punctured skew tableaux, split forms,
//! readings, and validation under both the configuration criterion and the
//! split criterion.

use std::fmt;

use crate::alphabet::{DominantWeight, Letter, Word};
use crate::column::{split, split_extended, Column, ExtLetter};
use crate::error::{Error, Result};

/// A Young-diagram shape stored as weakly decreasing column heights.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Shape {
    heights: Vec<usize>,
}

impl Shape {
    pub fn new(heights: Vec<usize>) -> Result<Self> {
        if heights.contains(&0) {
            return Err(Error::InvalidInput("shape has a zero column".into()));
        }
        if !heights.windows(2).all(|w| w[0] >= w[1]) {
            return Err(Error::InvalidInput(format!(
                "column heights {:?} not weakly decreasing",
                heights
            )));
        }
        Ok(Shape { heights })
    }

    pub fn empty() -> Self {
        Shape {
            heights: Vec::new(),
        }
    }

    pub fn heights(&self) -> &[usize] {
        &self.heights
    }

    pub fn num_cols(&self) -> usize {
        self.heights.len()
    }

    pub fn num_boxes(&self) -> usize {
        self.heights.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.heights.is_empty()
    }

    /// Height of column `j`, zero past the last column.
    pub fn height(&self, j: usize) -> usize {
        self.heights.get(j).copied().unwrap_or(0)
    }

    /// Coordinates on the fundamental-weight basis: `λ_i` = number of
    /// columns of height `i`.
    pub fn lambda(&self, rank: u8) -> Result<DominantWeight> {
        let mut lambda = vec![0u32; rank as usize];
        for &h in &self.heights {
            if h == 0 || h > rank as usize {
                return Err(Error::InvalidInput(format!(
                    "column height {} exceeds rank {}",
                    h, rank
                )));
            }
            lambda[h - 1] += 1;
        }
        Ok(DominantWeight::new(lambda))
    }

    pub fn from_lambda(lambda: &DominantWeight) -> Shape {
        let mut heights = Vec::new();
        for (i, &count) in lambda.coords().iter().enumerate().rev() {
            for _ in 0..count {
                heights.push(i + 1);
            }
        }
        Shape { heights }
    }

    /// Does `inner` fit inside `self` column by column?
    pub fn contains(&self, inner: &Shape) -> bool {
        (0..inner.num_cols()).all(|j| inner.height(j) <= self.height(j))
    }
}

impl fmt::Debug for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "shape{:?}", self.heights)
    }
}

/// If `to` is `from` plus one box, returns `(true, row)`; if minus one box,
/// `(false, row)`. The row of an added box is the new column height, the row
/// of a removed box the old one.
pub fn one_box_diff(from: &Shape, to: &Shape) -> Option<(bool, usize)> {
    fn grown_row(small: &Shape, big: &Shape) -> Option<usize> {
        if big.num_boxes() != small.num_boxes() + 1 {
            return None;
        }
        let mut row = None;
        for k in 0..big.num_cols() {
            let s = small.height(k);
            let b = big.height(k);
            if b == s {
                continue;
            }
            if b == s + 1 && row.is_none() {
                row = Some(b);
            } else {
                return None;
            }
        }
        row
    }
    if let Some(r) = grown_row(from, to) {
        return Some((true, r));
    }
    grown_row(to, from).map(|r| (false, r))
}

/// One cell of a split form: a letter of the extended alphabet, or the
/// puncture.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SplitCell {
    Star,
    Letter(ExtLetter),
}

/// One doubled column of a split form.
#[derive(Clone, Debug)]
pub struct SplitFormColumn {
    pub offset: usize,
    pub left: Vec<SplitCell>,
    pub right: Vec<SplitCell>,
}

impl SplitFormColumn {
    fn cell(&self, side_left: bool, row: usize) -> Option<SplitCell> {
        let cells = if side_left { &self.left } else { &self.right };
        if row <= self.offset || row > self.offset + cells.len() {
            return None;
        }
        Some(cells[row - self.offset - 1])
    }

    pub fn uses_marker(&self) -> bool {
        self.left
            .iter()
            .chain(&self.right)
            .any(|c| matches!(c, SplitCell::Letter(e) if e.is_marker()))
    }
}

/// The doubled-width display of a (possibly skew, possibly punctured)
/// tableau: each column replaced by its two halves, offsets preserved.
#[derive(Clone, Debug)]
pub struct SplitForm {
    pub columns: Vec<SplitFormColumn>,
}

impl SplitForm {
    /// Weak increase along every row, punctures ignored. Within one column
    /// the two halves already sandwich the cells, so only the right half of
    /// each column against the left half of the next is at stake.
    pub fn rows_weakly_increasing(&self) -> bool {
        for pair in self.columns.windows(2) {
            let (a, b) = (&pair[0], &pair[1]);
            let lo = b.offset + 1;
            let hi = (a.offset + a.left.len()).min(b.offset + b.left.len());
            for row in lo..=hi {
                if let (Some(SplitCell::Letter(x)), Some(SplitCell::Letter(y))) =
                    (a.cell(false, row), b.cell(true, row))
                {
                    if x > y {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn marker_columns(&self) -> Vec<usize> {
        self.columns
            .iter()
            .enumerate()
            .filter(|(_, c)| c.uses_marker())
            .map(|(j, _)| j)
            .collect()
    }
}

fn letters_to_cells(v: &[ExtLetter]) -> Vec<SplitCell> {
    v.iter().map(|&e| SplitCell::Letter(e)).collect()
}

/// A tableau over the rank-`n` alphabet: admissible columns of weakly
/// decreasing heights whose adjacent split halves increase along rows.
/// Validated on construction.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SymplecticTableau {
    rank: u8,
    columns: Vec<Column>,
}

/// The split criterion on a column sequence: columns admissible, heights
/// weakly decreasing, and the right half of each column at most the left
/// half of the next on every shared row.
pub fn validate_tableau_columns(rank: u8, columns: &[Column]) -> Result<()> {
    let mut splits = Vec::with_capacity(columns.len());
    for (j, c) in columns.iter().enumerate() {
        if c.rank() != rank {
            return Err(Error::RankMismatch(rank, c.rank()));
        }
        if !c.is_admissible() {
            return Err(Error::InvalidTableau(format!(
                "column {} is not admissible: {:?}",
                j + 1,
                c
            )));
        }
        splits.push(split(c)?);
    }
    for j in 0..columns.len().saturating_sub(1) {
        let (h1, h2) = (columns[j].height(), columns[j + 1].height());
        if h1 < h2 {
            return Err(Error::InvalidTableau(format!(
                "column {} is shorter than column {}",
                j + 1,
                j + 2
            )));
        }
        for row in 0..h2 {
            if splits[j].right[row] > splits[j + 1].left[row] {
                return Err(Error::InvalidTableau(format!(
                    "row {} decreases between columns {} and {}",
                    row + 1,
                    j + 1,
                    j + 2
                )));
            }
        }
    }
    Ok(())
}

/// Split criterion as a predicate.
pub fn is_symplectic(rank: u8, columns: &[Column]) -> bool {
    validate_tableau_columns(rank, columns).is_ok()
}

/// Configuration criterion: admissible columns, weakly increasing rows, and
/// no adjacent pair carrying an `(a,b)`-configuration with
/// `p(a,b) = (s−r)+(q−p) ≥ b−a`.
pub fn is_kn_tableau(rank: u8, columns: &[Column]) -> bool {
    for c in columns {
        if !c.is_admissible() {
            return false;
        }
    }
    for pair in columns.windows(2) {
        let (c1, c2) = (&pair[0], &pair[1]);
        if c1.height() < c2.height() {
            return false;
        }
        for row in 0..c2.height() {
            if c1.cells()[row] > c2.cells()[row] {
                return false;
            }
        }
        if has_bad_config(c1, c2, rank) {
            return false;
        }
    }
    true
}

fn has_bad_config(c1: &Column, c2: &Column, rank: u8) -> bool {
    let pos = |c: &Column, l: Letter| c.cells().iter().position(|&x| x == l).map(|p| p + 1);
    for a in 1..=rank {
        for b in a..=rank {
            // a in the first column; b, b̄, ā down the second
            if let (Some(p), Some(q), Some(r), Some(s)) = (
                pos(c1, Letter::unbarred(a)),
                pos(c2, Letter::unbarred(b)),
                pos(c2, Letter::barred(b)),
                pos(c2, Letter::barred(a)),
            ) {
                if p <= q && q < r && r <= s && (s - r) + (q - p) >= (b - a) as usize {
                    return true;
                }
            }
            // a, b, b̄ down the first column; ā in the second
            if let (Some(p), Some(q), Some(r), Some(s)) = (
                pos(c1, Letter::unbarred(a)),
                pos(c1, Letter::unbarred(b)),
                pos(c1, Letter::barred(b)),
                pos(c2, Letter::barred(a)),
            ) {
                if p <= q && q < r && r <= s && (s - r) + (q - p) >= (b - a) as usize {
                    return true;
                }
            }
        }
    }
    false
}

impl SymplecticTableau {
    pub fn new(rank: u8, columns: Vec<Column>) -> Result<Self> {
        validate_tableau_columns(rank, &columns)?;
        Ok(SymplecticTableau { rank, columns })
    }

    pub fn empty(rank: u8) -> Self {
        SymplecticTableau {
            rank,
            columns: Vec::new(),
        }
    }

    pub fn rank(&self) -> u8 {
        self.rank
    }

    pub fn columns(&self) -> &[Column] {
        &self.columns
    }

    pub fn is_empty(&self) -> bool {
        self.columns.is_empty()
    }

    pub fn shape(&self) -> Shape {
        Shape {
            heights: self.columns.iter().map(|c| c.height()).collect(),
        }
    }

    pub fn num_boxes(&self) -> usize {
        self.columns.iter().map(|c| c.height()).sum()
    }

    /// The reading: rightmost column first, each column top to bottom.
    pub fn reading(&self) -> Word {
        let mut letters = Vec::with_capacity(self.num_boxes());
        for c in self.columns.iter().rev() {
            letters.extend_from_slice(c.cells());
        }
        Word::new(self.rank, letters).expect("tableau letters are valid")
    }

    pub fn split_form(&self) -> SplitForm {
        let columns = self
            .columns
            .iter()
            .map(|c| {
                let sc = split(c).expect("tableau columns are admissible");
                SplitFormColumn {
                    offset: 0,
                    left: letters_to_cells(&sc.left),
                    right: letters_to_cells(&sc.right),
                }
            })
            .collect();
        SplitForm { columns }
    }
}

impl fmt::Debug for SymplecticTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "tab{:?}", self.columns)
    }
}

/// The tableau of shape `λ` whose row `i` holds only the letter `i`; its
/// reading is a highest-weight word of weight `λ`.
pub fn highest_weight_tableau(lambda: &DominantWeight, rank: u8) -> Result<SymplecticTableau> {
    if lambda.coords().len() != rank as usize {
        return Err(Error::InvalidInput(format!(
            "weight has {} coordinates, rank is {}",
            lambda.coords().len(),
            rank
        )));
    }
    let shape = Shape::from_lambda(lambda);
    let columns = shape
        .heights()
        .iter()
        .map(|&h| {
            Column::new(rank, (1..=h as u8).map(Letter::unbarred).collect())
                .expect("1..h is a column")
        })
        .collect();
    SymplecticTableau::new(rank, columns)
}

/// Cuts a word into a tableau of the given shape: the reading consumes the
/// rightmost (shortest) column first.
pub fn tableau_from_reading(w: &Word, shape: &Shape) -> Result<SymplecticTableau> {
    if w.len() != shape.num_boxes() {
        return Err(Error::InvalidInput(format!(
            "word length {} does not fill shape {:?}",
            w.len(),
            shape
        )));
    }
    let mut columns: Vec<Column> = Vec::with_capacity(shape.num_cols());
    let mut at = 0;
    for &h in shape.heights().iter().rev() {
        let cells = w.letters()[at..at + h].to_vec();
        at += h;
        columns.push(Column::new(w.rank(), cells)?);
    }
    columns.reverse();
    SymplecticTableau::new(w.rank(), columns)
}

/// One column of a skew tableau: cells start after `offset` skipped rows.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SkewColumn {
    pub offset: usize,
    pub column: Column,
}

impl SkewColumn {
    pub fn new(offset: usize, column: Column) -> Self {
        SkewColumn { offset, column }
    }

    pub fn outer_height(&self) -> usize {
        self.offset + self.column.height()
    }
}

/// Validation for a skew filling: a genuine skew diagram, admissible
/// columns, and weakly increasing split rows.
pub fn validate_skew_parts(rank: u8, parts: &[SkewColumn]) -> Result<()> {
    for (j, p) in parts.iter().enumerate() {
        if p.column.rank() != rank {
            return Err(Error::RankMismatch(rank, p.column.rank()));
        }
        if p.outer_height() == 0 {
            return Err(Error::InvalidTableau(format!("column {} is empty", j + 1)));
        }
        if !p.column.is_admissible() {
            return Err(Error::InvalidTableau(format!(
                "column {} is not admissible: {:?}",
                j + 1,
                p.column
            )));
        }
    }
    for j in 0..parts.len().saturating_sub(1) {
        if parts[j].offset < parts[j + 1].offset {
            return Err(Error::InvalidTableau(format!(
                "inner shape grows from column {} to {}",
                j + 1,
                j + 2
            )));
        }
        if parts[j].outer_height() < parts[j + 1].outer_height() {
            return Err(Error::InvalidTableau(format!(
                "outer shape grows from column {} to {}",
                j + 1,
                j + 2
            )));
        }
    }
    let form = skew_split_form(parts)?;
    if !form.rows_weakly_increasing() {
        return Err(Error::InvalidTableau(
            "split-form rows are not weakly increasing".into(),
        ));
    }
    Ok(())
}

fn skew_split_form(parts: &[SkewColumn]) -> Result<SplitForm> {
    let columns = parts
        .iter()
        .map(|p| {
            let sc = split(&p.column)?;
            Ok(SplitFormColumn {
                offset: p.offset,
                left: letters_to_cells(&sc.left),
                right: letters_to_cells(&sc.right),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SplitForm { columns })
}

/// A skew tableau: columns with top offsets realizing an outer shape minus
/// an inner shape. Validated on construction.
#[derive(Clone, PartialEq, Eq)]
pub struct SkewTableau {
    rank: u8,
    parts: Vec<SkewColumn>,
}

impl SkewTableau {
    pub fn new(rank: u8, mut parts: Vec<SkewColumn>) -> Result<Self> {
        while parts.last().is_some_and(|p| p.outer_height() == 0) {
            parts.pop();
        }
        validate_skew_parts(rank, &parts)?;
        Ok(SkewTableau { rank, parts })
    }

    pub(crate) fn from_parts_unchecked(rank: u8, mut parts: Vec<SkewColumn>) -> Self {
        while parts.last().is_some_and(|p| p.outer_height() == 0) {
            parts.pop();
        }
        debug_assert!(validate_skew_parts(rank, &parts).is_ok());
        SkewTableau { rank, parts }
    }

    pub fn from_straight(t: &SymplecticTableau) -> Self {
        SkewTableau {
            rank: t.rank(),
            parts: t
                .columns()
                .iter()
                .map(|c| SkewColumn::new(0, c.clone()))
                .collect(),
        }
    }

    /// A straight tableau back out, failing when an inner shape remains.
    pub fn to_straight(&self) -> Result<SymplecticTableau> {
        if !self.inner().is_empty() {
            return Err(Error::InvalidInput(format!(
                "skew tableau still has inner shape {:?}",
                self.inner()
            )));
        }
        SymplecticTableau::new(
            self.rank,
            self.parts.iter().map(|p| p.column.clone()).collect(),
        )
    }

    pub fn rank(&self) -> u8 {
        self.rank
    }

    pub fn parts(&self) -> &[SkewColumn] {
        &self.parts
    }

    pub fn outer(&self) -> Shape {
        Shape {
            heights: self.parts.iter().map(|p| p.outer_height()).collect(),
        }
    }

    pub fn inner(&self) -> Shape {
        Shape {
            heights: self
                .parts
                .iter()
                .map(|p| p.offset)
                .take_while(|&o| o > 0)
                .collect(),
        }
    }

    pub fn num_cells(&self) -> usize {
        self.parts.iter().map(|p| p.column.height()).sum()
    }

    pub fn reading(&self) -> Word {
        let mut letters = Vec::with_capacity(self.num_cells());
        for p in self.parts.iter().rev() {
            letters.extend_from_slice(p.column.cells());
        }
        Word::new(self.rank, letters).expect("skew tableau letters are valid")
    }

    pub fn split_form(&self) -> SplitForm {
        skew_split_form(&self.parts).expect("validated skew tableau splits")
    }

    /// Boxes of the inner shape with no inner box below or to the right:
    /// `(row, column)` pairs, both 1-based, topmost first.
    pub fn inner_corners(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (j, p) in self.parts.iter().enumerate() {
            let next = self.parts.get(j + 1).map_or(0, |q| q.offset);
            if p.offset > 0 && p.offset > next {
                out.push((p.offset, j + 1));
            }
        }
        out.sort();
        out
    }

    /// Boxes of the outer shape with no outer box below or to the right.
    pub fn outside_corners(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (j, p) in self.parts.iter().enumerate() {
            let next = self.parts.get(j + 1).map_or(0, |q| q.outer_height());
            if p.outer_height() > next {
                out.push((p.outer_height(), j + 1));
            }
        }
        out.sort();
        out
    }
}

impl fmt::Debug for SkewTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "skew[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, " | ")?;
            }
            write!(f, "+{} {:?}", p.offset, p.column)?;
        }
        write!(f, "]")
    }
}

/// A skew tableau with one cell holding the puncture. The starred column
/// stores its letters only; the star occupies one extra cell at `star_row`.
#[derive(Clone, Debug)]
pub struct PuncturedSkewTableau {
    rank: u8,
    parts: Vec<SkewColumn>,
    star_col: usize,
    star_row: usize,
}

impl PuncturedSkewTableau {
    /// Validating constructor: the puncture-ignoring filling must be an
    /// admissible skew filling with weakly increasing split rows (puncture
    /// ignored).
    pub fn new(rank: u8, parts: Vec<SkewColumn>, star_col: usize, star_row: usize) -> Result<Self> {
        let t = PuncturedSkewTableau::new_unchecked(rank, parts, star_col, star_row)?;
        for (j, p) in t.parts.iter().enumerate() {
            if !p.column.is_admissible() {
                return Err(Error::InvalidTableau(format!(
                    "column {} is not admissible ignoring the puncture",
                    j + 1
                )));
            }
        }
        let form = t.split_form()?;
        if !form.rows_weakly_increasing() {
            return Err(Error::InvalidTableau(
                "punctured split-form rows are not weakly increasing".into(),
            ));
        }
        Ok(t)
    }

    /// Geometry checks only; admissibility is the caller's business.
    pub(crate) fn new_unchecked(
        rank: u8,
        parts: Vec<SkewColumn>,
        star_col: usize,
        star_row: usize,
    ) -> Result<Self> {
        if star_col >= parts.len() {
            return Err(Error::InvalidInput(format!(
                "puncture column {} out of range",
                star_col + 1
            )));
        }
        let p = &parts[star_col];
        if star_row <= p.offset || star_row > p.offset + p.column.height() + 1 {
            return Err(Error::InvalidInput(format!(
                "puncture row {} outside column {}",
                star_row,
                star_col + 1
            )));
        }
        Ok(PuncturedSkewTableau {
            rank,
            parts,
            star_col,
            star_row,
        })
    }

    pub fn rank(&self) -> u8 {
        self.rank
    }

    pub fn parts(&self) -> &[SkewColumn] {
        &self.parts
    }

    pub fn star_col(&self) -> usize {
        self.star_col
    }

    pub fn star_row(&self) -> usize {
        self.star_row
    }

    /// Outer height of column `j`, counting the star cell.
    pub fn outer_height(&self, j: usize) -> usize {
        let p = &self.parts[j];
        p.outer_height() + usize::from(j == self.star_col)
    }

    /// The split of column `j` with the star cell re-inserted; ordinary
    /// columns split in the plain alphabet, deficient ones spend the marker.
    pub fn split_column(&self, j: usize) -> Result<SplitFormColumn> {
        let p = &self.parts[j];
        let sc = split_extended(&p.column)?;
        let (mut left, mut right) = (letters_to_cells(&sc.left), letters_to_cells(&sc.right));
        if j == self.star_col {
            let idx = self.star_row - p.offset - 1;
            left.insert(idx, SplitCell::Star);
            right.insert(idx, SplitCell::Star);
        }
        Ok(SplitFormColumn {
            offset: p.offset,
            left,
            right,
        })
    }

    pub fn split_form(&self) -> Result<SplitForm> {
        let columns = (0..self.parts.len())
            .map(|j| self.split_column(j))
            .collect::<Result<Vec<_>>>()?;
        Ok(SplitForm { columns })
    }
}

/// A sequence of shapes in which consecutive entries differ by exactly one
/// box; the recording half of the correspondence.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OscillatingTableau {
    pub shapes: Vec<Shape>,
}

impl OscillatingTableau {
    pub fn len(&self) -> usize {
        self.shapes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.shapes.is_empty()
    }

    pub fn last(&self) -> Shape {
        self.shapes.last().cloned().unwrap_or_else(Shape::empty)
    }
}

/// Checks the one-box-difference chain (starting from the empty shape) and
/// the height bound `≤ n`.
pub fn validate_oscillating(q: &OscillatingTableau, rank: u8) -> bool {
    let mut prev = Shape::empty();
    for s in &q.shapes {
        if s.heights().iter().any(|&h| h > rank as usize) {
            return false;
        }
        if one_box_diff(&prev, s).is_none() {
            return false;
        }
        prev = s.clone();
    }
    true
}

/// All admissible columns of the given height, in lexicographic order of
/// their readings.
pub fn admissible_columns(rank: u8, height: usize) -> Vec<Column> {
    let mut alphabet: Vec<Letter> = (1..=rank).map(Letter::unbarred).collect();
    alphabet.extend((1..=rank).rev().map(Letter::barred));
    let mut out = Vec::new();
    let mut pick = Vec::with_capacity(height);
    fn rec(
        alphabet: &[Letter],
        rank: u8,
        height: usize,
        from: usize,
        pick: &mut Vec<Letter>,
        out: &mut Vec<Column>,
    ) {
        if pick.len() == height {
            let c = Column::new(rank, pick.clone()).expect("increasing by construction");
            if c.is_admissible() {
                out.push(c);
            }
            return;
        }
        for i in from..alphabet.len() {
            pick.push(alphabet[i]);
            rec(alphabet, rank, height, i + 1, pick, out);
            pick.pop();
        }
    }
    rec(&alphabet, rank, height, 0, &mut pick, &mut out);
    out
}

/// Row compatibility of two adjacent skew columns, by their split halves.
pub fn skew_columns_row_compatible(a: &SkewColumn, b: &SkewColumn) -> bool {
    let (Ok(sa), Ok(sb)) = (split(&a.column), split(&b.column)) else {
        return false;
    };
    let lo = a.offset.max(b.offset) + 1;
    let hi = a.outer_height().min(b.outer_height());
    for row in lo..=hi {
        let x = sa.right[row - a.offset - 1];
        let y = sb.left[row - b.offset - 1];
        if x > y {
            return false;
        }
    }
    true
}

/// Exhaustive, deterministic enumeration of the admissible skew fillings of
/// `outer/inner`. Backtracks column by column, pruning with per-column
/// admissibility and the adjacent split-row check. Errs past `cap` results.
pub fn enumerate_skew_tableaux(
    outer: &Shape,
    inner: &Shape,
    rank: u8,
    cap: usize,
) -> Result<Vec<SkewTableau>> {
    if !outer.contains(inner) {
        return Err(Error::InvalidInput(format!(
            "inner {:?} not contained in outer {:?}",
            inner, outer
        )));
    }
    let ncols = outer.num_cols();
    let geometry: Vec<(usize, usize)> = (0..ncols)
        .map(|j| {
            let off = inner.height(j);
            (off, outer.height(j) - off)
        })
        .collect();
    let mut candidates: Vec<Vec<Column>> = Vec::with_capacity(ncols);
    for &(_, h) in &geometry {
        candidates.push(admissible_columns(rank, h));
    }
    let mut out: Vec<SkewTableau> = Vec::new();
    let mut acc: Vec<SkewColumn> = Vec::with_capacity(ncols);
    fn rec(
        j: usize,
        geometry: &[(usize, usize)],
        candidates: &[Vec<Column>],
        rank: u8,
        cap: usize,
        acc: &mut Vec<SkewColumn>,
        out: &mut Vec<SkewTableau>,
    ) -> Result<()> {
        if j == geometry.len() {
            if out.len() >= cap {
                return Err(Error::CapExceeded(cap));
            }
            out.push(SkewTableau::from_parts_unchecked(rank, acc.clone()));
            return Ok(());
        }
        for cand in &candidates[j] {
            let part = SkewColumn::new(geometry[j].0, cand.clone());
            if let Some(prev) = acc.last() {
                if !skew_columns_row_compatible(prev, &part) {
                    continue;
                }
            }
            acc.push(part);
            rec(j + 1, geometry, candidates, rank, cap, acc, out)?;
            acc.pop();
        }
        Ok(())
    }
    rec(0, &geometry, &candidates, rank, cap, &mut acc, &mut out)?;
    Ok(out)
}
