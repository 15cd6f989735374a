//! Text and JSON formats: signed-integer word text, tableau JSON, shape
//! syntax, and DOT export for crystal components.
//!
//! Words are whitespace-separated signed integers, `k` for an unbarred
//! letter and `-k` for a barred one. Pretty printers can render bars with
//! combining overlines instead.

use serde::{Deserialize, Serialize};

use crate::alphabet::{Letter, Word};
use crate::column::Column;
use crate::crystal::Component;
use crate::error::{Error, Result};
use crate::rs::RsPair;
use crate::tableau::{OscillatingTableau, Shape, SkewColumn, SkewTableau, SymplecticTableau};

/// Parses a word from signed-integer text.
pub fn parse_word(text: &str, rank: u8) -> Result<Word> {
    let mut letters = Vec::new();
    for (i, tok) in text.split_whitespace().enumerate() {
        let value: i64 = tok
            .parse()
            .map_err(|_| Error::Parse(format!("token {} ({:?}) is not an integer", i + 1, tok)))?;
        letters.push(
            Letter::from_signed(value, rank)
                .map_err(|e| Error::Parse(format!("token {}: {}", i + 1, e)))?,
        );
    }
    Word::new(rank, letters)
}

/// Parses a strictly increasing word as a column.
pub fn parse_column(text: &str, rank: u8) -> Result<Column> {
    Column::from_word(&parse_word(text, rank)?)
}

fn format_letter(l: Letter, unicode: bool) -> String {
    if unicode && l.is_barred() {
        format!("{}\u{0305}", l.value())
    } else {
        l.signed().to_string()
    }
}

pub fn format_word(w: &Word, unicode: bool) -> String {
    w.letters()
        .iter()
        .map(|&l| format_letter(l, unicode))
        .collect::<Vec<_>>()
        .join(" ")
}

/// JSON form of a tableau: `n`, columns top-to-bottom left-to-right as
/// signed integers, and per-column offsets when the tableau is skew.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TableauJson {
    pub n: u8,
    pub columns: Vec<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub offsets: Option<Vec<usize>>,
}

impl TableauJson {
    pub fn from_tableau(t: &SymplecticTableau) -> Self {
        TableauJson {
            n: t.rank(),
            columns: t
                .columns()
                .iter()
                .map(|c| c.cells().iter().map(|l| l.signed()).collect())
                .collect(),
            offsets: None,
        }
    }

    pub fn from_skew(t: &SkewTableau) -> Self {
        let offsets: Vec<usize> = t.parts().iter().map(|p| p.offset).collect();
        TableauJson {
            n: t.rank(),
            columns: t
                .parts()
                .iter()
                .map(|p| p.column.cells().iter().map(|l| l.signed()).collect())
                .collect(),
            offsets: if offsets.iter().all(|&o| o == 0) {
                None
            } else {
                Some(offsets)
            },
        }
    }

    fn columns_with_coords(&self) -> Result<Vec<Column>> {
        self.columns
            .iter()
            .enumerate()
            .map(|(j, cells)| {
                let letters = cells
                    .iter()
                    .enumerate()
                    .map(|(i, &v)| {
                        Letter::from_signed(v, self.n).map_err(|e| {
                            Error::Parse(format!("column {}, cell {}: {}", j + 1, i + 1, e))
                        })
                    })
                    .collect::<Result<Vec<_>>>()?;
                Column::new(self.n, letters)
                    .map_err(|e| Error::Parse(format!("column {}: {}", j + 1, e)))
            })
            .collect()
    }

    /// Builds and validates a straight tableau.
    pub fn to_tableau(&self) -> Result<SymplecticTableau> {
        if self
            .offsets
            .as_ref()
            .is_some_and(|o| o.iter().any(|&x| x > 0))
        {
            return Err(Error::Parse(
                "tableau has offsets; parse it as a skew tableau".into(),
            ));
        }
        SymplecticTableau::new(self.n, self.columns_with_coords()?)
    }

    /// Builds and validates a skew tableau; missing offsets mean zero.
    pub fn to_skew(&self) -> Result<SkewTableau> {
        let columns = self.columns_with_coords()?;
        let offsets = match &self.offsets {
            Some(o) => {
                if o.len() != columns.len() {
                    return Err(Error::Parse(format!(
                        "{} offsets for {} columns",
                        o.len(),
                        columns.len()
                    )));
                }
                o.clone()
            }
            None => vec![0; columns.len()],
        };
        SkewTableau::new(
            self.n,
            offsets
                .into_iter()
                .zip(columns)
                .map(|(offset, column)| SkewColumn::new(offset, column))
                .collect(),
        )
    }
}

/// JSON form of a correspondence pair: the tableau plus the shape sequence,
/// each shape as its column heights.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PairJson {
    pub p: TableauJson,
    pub q: Vec<Vec<usize>>,
}

impl PairJson {
    pub fn from_pair(pair: &RsPair) -> Self {
        PairJson {
            p: TableauJson::from_tableau(&pair.p),
            q: pair.q.shapes.iter().map(|s| s.heights().to_vec()).collect(),
        }
    }

    pub fn to_pair(&self) -> Result<RsPair> {
        let shapes = self
            .q
            .iter()
            .enumerate()
            .map(|(i, heights)| {
                Shape::new(heights.clone())
                    .map_err(|e| Error::Parse(format!("shape {}: {}", i + 1, e)))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(RsPair {
            p: self.p.to_tableau()?,
            q: OscillatingTableau { shapes },
        })
    }
}

/// Parses `3,2,1` or `3,2,1/1` into outer and inner shapes.
pub fn parse_shape_spec(text: &str) -> Result<(Shape, Shape)> {
    let mut halves = text.splitn(2, '/');
    let outer = parse_heights(halves.next().unwrap_or(""))?;
    let inner = match halves.next() {
        Some(h) if !h.trim().is_empty() => parse_heights(h)?,
        _ => Shape::empty(),
    };
    if !outer.contains(&inner) {
        return Err(Error::Parse(format!(
            "inner shape {:?} does not fit in outer {:?}",
            inner, outer
        )));
    }
    Ok((outer, inner))
}

fn parse_heights(text: &str) -> Result<Shape> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Shape::empty());
    }
    let heights = text
        .split(',')
        .map(|tok| {
            tok.trim()
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad column height {:?}", tok)))
        })
        .collect::<Result<Vec<usize>>>()?;
    Shape::new(heights).map_err(|e| Error::Parse(format!("{}", e)))
}

/// Renders a straight or skew tableau as an aligned text grid.
pub fn render_grid(columns: &[(usize, Vec<Letter>)], unicode: bool) -> String {
    // combining overlines take no terminal columns, so they are free
    let visible = |s: &str| s.chars().filter(|&c| c != '\u{0305}').count();
    let rows = columns
        .iter()
        .map(|(off, cells)| off + cells.len())
        .max()
        .unwrap_or(0);
    let mut width = 1;
    // skipped inner cells render as dots, cells past a column's end as blanks
    let mut grid: Vec<Vec<String>> = vec![vec![String::new(); columns.len()]; rows];
    for (j, (off, cells)) in columns.iter().enumerate() {
        for row in grid.iter_mut().take(*off) {
            row[j] = ".".to_string();
        }
        for (i, &l) in cells.iter().enumerate() {
            let s = format_letter(l, unicode);
            width = width.max(visible(&s));
            grid[off + i][j] = s;
        }
    }
    let mut out = String::new();
    for row in grid {
        let line: Vec<String> = row
            .into_iter()
            .map(|s| {
                let pad = width.saturating_sub(visible(&s));
                format!("{}{}", " ".repeat(pad), s)
            })
            .collect();
        out.push_str(line.join(" ").trim_end());
        out.push('\n');
    }
    out
}

pub fn render_tableau(t: &SymplecticTableau, unicode: bool) -> String {
    render_grid(
        &t.columns()
            .iter()
            .map(|c| (0, c.cells().to_vec()))
            .collect::<Vec<_>>(),
        unicode,
    )
}

pub fn render_skew(t: &SkewTableau, unicode: bool) -> String {
    render_grid(
        &t.parts()
            .iter()
            .map(|p| (p.offset, p.column.cells().to_vec()))
            .collect::<Vec<_>>(),
        unicode,
    )
}

/// DOT rendering of a component: nodes labeled by word text, edges by color.
/// Stable across runs because the enumeration order is deterministic.
pub fn component_dot(c: &Component, unicode: bool) -> String {
    let mut out = String::from("digraph crystal {\n  rankdir=TB;\n");
    for (i, v) in c.vertices.iter().enumerate() {
        out.push_str(&format!(
            "  v{} [label=\"{}\"];\n",
            i,
            format_word(v, unicode)
        ));
    }
    for &(a, color, b) in &c.edges {
        out.push_str(&format!("  v{} -> v{} [label=\"{}\"];\n", a, b, color));
    }
    out.push_str("}\n");
    out
}
