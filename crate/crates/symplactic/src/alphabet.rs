//! The ordered alphabet `1 < 2 < … < n < n̄ < … < 2̄ < 1̄`, words over it,
//! and their weights.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// A letter of the rank-`n` alphabet: an integer value in `1..=n`, barred or not.
///
/// The total order is *not* integer order: unbarred letters ascend, every
/// unbarred letter precedes every barred one, and barred letters descend
/// (`1 < … < n < n̄ < … < 1̄`).
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Letter {
    value: u8,
    barred: bool,
}

impl Letter {
    pub fn unbarred(value: u8) -> Self {
        assert!(value >= 1, "letter value must be >= 1");
        Letter {
            value,
            barred: false,
        }
    }

    pub fn barred(value: u8) -> Self {
        assert!(value >= 1, "letter value must be >= 1");
        Letter {
            value,
            barred: true,
        }
    }

    /// Builds a letter from its signed encoding (`k` unbarred, `-k` barred),
    /// checking it fits the given rank.
    pub fn from_signed(signed: i64, rank: u8) -> Result<Self> {
        let v = signed.unsigned_abs();
        if signed == 0 || v > rank as u64 {
            return Err(Error::LetterOutOfRange {
                value: signed,
                rank,
            });
        }
        Ok(Letter {
            value: v as u8,
            barred: signed < 0,
        })
    }

    pub fn value(&self) -> u8 {
        self.value
    }

    pub fn is_barred(&self) -> bool {
        self.barred
    }

    /// The letter with the bar toggled.
    pub fn bar(&self) -> Letter {
        Letter {
            value: self.value,
            barred: !self.barred,
        }
    }

    /// Signed encoding: `k` for unbarred `k`, `-k` for barred `k`.
    pub fn signed(&self) -> i64 {
        if self.barred {
            -(self.value as i64)
        } else {
            self.value as i64
        }
    }
}

impl Ord for Letter {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self.barred, other.barred) {
            (false, false) => self.value.cmp(&other.value),
            (false, true) => Ordering::Less,
            (true, false) => Ordering::Greater,
            (true, true) => other.value.cmp(&self.value),
        }
    }
}

impl PartialOrd for Letter {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.signed())
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.signed())
    }
}

/// A finite word over the rank-`n` alphabet. The rank travels with the word;
/// mixing ranks is an input error, not a silent coercion.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Word {
    rank: u8,
    letters: Vec<Letter>,
}

impl Word {
    pub fn new(rank: u8, letters: Vec<Letter>) -> Result<Self> {
        if rank == 0 {
            return Err(Error::InvalidInput("rank must be >= 1".into()));
        }
        for l in &letters {
            if l.value() > rank {
                return Err(Error::LetterOutOfRange {
                    value: l.signed(),
                    rank,
                });
            }
        }
        Ok(Word { rank, letters })
    }

    pub fn empty(rank: u8) -> Self {
        Word {
            rank,
            letters: Vec::new(),
        }
    }

    /// Parses a word from signed values.
    pub fn from_signed(rank: u8, signed: &[i64]) -> Result<Self> {
        let letters = signed
            .iter()
            .map(|&s| Letter::from_signed(s, rank))
            .collect::<Result<Vec<_>>>()?;
        Word::new(rank, letters)
    }

    pub fn rank(&self) -> u8 {
        self.rank
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Result<Word> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch(self.rank, other.rank));
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(Word {
            rank: self.rank,
            letters,
        })
    }

    pub fn appended(&self, x: Letter) -> Result<Word> {
        if x.value() > self.rank {
            return Err(Error::LetterOutOfRange {
                value: x.signed(),
                rank: self.rank,
            });
        }
        let mut letters = self.letters.clone();
        letters.push(x);
        Ok(Word {
            rank: self.rank,
            letters,
        })
    }

    pub(crate) fn from_letters_unchecked(rank: u8, letters: Vec<Letter>) -> Word {
        Word { rank, letters }
    }

    /// The weight `d(w)`: `d_i` = (number of `i`) − (number of `ī`).
    pub fn weight(&self) -> WeightVector {
        let mut d = vec![0i64; self.rank as usize];
        for l in &self.letters {
            let idx = (l.value() - 1) as usize;
            if l.is_barred() {
                d[idx] -= 1;
            } else {
                d[idx] += 1;
            }
        }
        WeightVector { d }
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "w[")?;
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}", l)?;
        }
        write!(f, "]")
    }
}

/// The weight vector `d(w) = (d_1, …, d_n)`.
///
/// Additive under concatenation: `d(uv) = d(u) + d(v)`.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct WeightVector {
    d: Vec<i64>,
}

impl WeightVector {
    pub fn zero(rank: u8) -> Self {
        WeightVector {
            d: vec![0; rank as usize],
        }
    }

    pub fn coords(&self) -> &[i64] {
        &self.d
    }

    pub fn add(&self, other: &WeightVector) -> WeightVector {
        assert_eq!(self.d.len(), other.d.len());
        WeightVector {
            d: self.d.iter().zip(&other.d).map(|(a, b)| a + b).collect(),
        }
    }
}

/// A dominant weight written on the fundamental-weight basis:
/// `λ = Σ λ_i Λ_i` with all `λ_i ≥ 0`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DominantWeight {
    lambda: Vec<u32>,
}

impl DominantWeight {
    pub fn new(lambda: Vec<u32>) -> Self {
        DominantWeight { lambda }
    }

    pub fn coords(&self) -> &[u32] {
        &self.lambda
    }

    /// Number of boxes of the associated diagram: `Σ λ_i · i`.
    pub fn box_count(&self) -> usize {
        self.lambda
            .iter()
            .enumerate()
            .map(|(i, &c)| (i + 1) * c as usize)
            .sum()
    }
}
