//! Kashiwara raising/lowering operators on words, computed by the signature
//! rule, plus canonical raising paths, the position relation and component
//! enumeration.

use std::collections::HashMap;

use crate::alphabet::{DominantWeight, Letter, Word};
use crate::error::{Error, Result};

/// The reduced sign word `ρ_i(w) = −^r +^s`, with the index in `w` of the
/// letter that produced each surviving sign.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Signature {
    /// Positions of the surviving `−` signs, left to right.
    pub minus: Vec<usize>,
    /// Positions of the surviving `+` signs, left to right.
    pub plus: Vec<usize>,
}

fn assert_color(w: &Word, color: u8) {
    assert!(
        color >= 1 && color <= w.rank(),
        "color {} out of range 1..={}",
        color,
        w.rank()
    );
}

/// Sign carried by `letter` in the color-`i` encoding, if it participates.
///
/// For `i < n`: `i` and `(i+1)bar` are `+`; `i+1` and `ibar` are `−`.
/// For `i = n`: `n` is `+` and `nbar` is `−`.
fn sign_of(letter: Letter, color: u8, rank: u8) -> Option<bool> {
    let v = letter.value();
    let b = letter.is_barred();
    if color == rank {
        if v == rank {
            return Some(!b);
        }
        return None;
    }
    if v == color {
        // i is +, ibar is −
        return Some(!b);
    }
    if v == color + 1 {
        // i+1 is −, (i+1)bar is +
        return Some(b);
    }
    None
}

/// Signature rule: encode, then cancel adjacent `+−` factors until none are
/// left. One linear scan with a stack of pending `+` positions.
pub fn signature(w: &Word, color: u8) -> Signature {
    assert_color(w, color);
    let mut minus = Vec::new();
    let mut plus: Vec<usize> = Vec::new();
    for (pos, &l) in w.letters().iter().enumerate() {
        match sign_of(l, color, w.rank()) {
            Some(true) => plus.push(pos),
            // a pending + cancels this −; otherwise the − survives
            Some(false) if plus.pop().is_some() => {}
            Some(false) => minus.push(pos),
            None => {}
        }
    }
    Signature { minus, plus }
}

/// Number of surviving `−` signs; equals the largest `k` with `e_op^k` defined.
pub fn epsilon(w: &Word, color: u8) -> usize {
    signature(w, color).minus.len()
}

/// Number of surviving `+` signs; equals the largest `k` with `f_op^k` defined.
pub fn phi_coeff(w: &Word, color: u8) -> usize {
    signature(w, color).plus.len()
}

fn lower_letter(l: Letter, color: u8, rank: u8) -> Letter {
    // leftmost + flips: i → i+1, (i+1)bar → ibar, and n → nbar for color n
    if color == rank {
        debug_assert!(l == Letter::unbarred(rank));
        return Letter::barred(rank);
    }
    if l == Letter::unbarred(color) {
        Letter::unbarred(color + 1)
    } else {
        debug_assert!(l == Letter::barred(color + 1));
        Letter::barred(color)
    }
}

fn raise_letter(l: Letter, color: u8, rank: u8) -> Letter {
    // rightmost − flips: i+1 → i, ibar → (i+1)bar, and nbar → n for color n
    if color == rank {
        debug_assert!(l == Letter::barred(rank));
        return Letter::unbarred(rank);
    }
    if l == Letter::unbarred(color + 1) {
        Letter::unbarred(color)
    } else {
        debug_assert!(l == Letter::barred(color));
        Letter::barred(color + 1)
    }
}

fn replace_at(w: &Word, pos: usize, letter: Letter) -> Word {
    let mut letters = w.letters().to_vec();
    letters[pos] = letter;
    Word::from_letters_unchecked(w.rank(), letters)
}

/// Lowering operator: flips the letter behind the leftmost surviving `+`.
/// `None` when the signature has no `+`.
pub fn f_op(w: &Word, color: u8) -> Option<Word> {
    let sig = signature(w, color);
    let &pos = sig.plus.first()?;
    let l = w.letters()[pos];
    Some(replace_at(w, pos, lower_letter(l, color, w.rank())))
}

/// Raising operator: flips the letter behind the rightmost surviving `−`.
/// `None` when the signature has no `−`.
pub fn e_op(w: &Word, color: u8) -> Option<Word> {
    let sig = signature(w, color);
    let &pos = sig.minus.last()?;
    let l = w.letters()[pos];
    Some(replace_at(w, pos, raise_letter(l, color, w.rank())))
}

/// True when every raising operator vanishes on `w`.
pub fn is_highest_weight(w: &Word) -> bool {
    (1..=w.rank()).all(|i| epsilon(w, i) == 0)
}

/// The colors of a canonical raising path, in application order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrystalPath {
    pub colors: Vec<u8>,
}

impl CrystalPath {
    pub fn empty() -> Self {
        CrystalPath { colors: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }
}

/// Canonical raising: repeatedly apply `e_op` with the smallest color whose
/// epsilon is positive, until the word is of highest weight. Any fixed rule
/// would do since the component isomorphism is unique; smallest-first keeps
/// runs reproducible.
pub fn to_highest(w: &Word) -> (Word, CrystalPath) {
    let mut cur = w.clone();
    let mut colors = Vec::new();
    'outer: loop {
        for i in 1..=cur.rank() {
            if let Some(next) = e_op(&cur, i) {
                colors.push(i);
                cur = next;
                continue 'outer;
            }
        }
        break;
    }
    (cur, CrystalPath { colors })
}

/// Replays a raising path backwards as lowering steps from `start`.
/// Fails with an internal error if some step is undefined, which cannot
/// happen when `start` is the highest-weight vertex of a component
/// isomorphic to the one the path was recorded in.
pub fn replay(start: &Word, path: &CrystalPath) -> Result<Word> {
    let mut cur = start.clone();
    for &i in path.colors.iter().rev() {
        cur = f_op(&cur, i).ok_or_else(|| {
            Error::Internal(format!("lowering path broke at color {} on {:?}", i, cur))
        })?;
    }
    Ok(cur)
}

/// Weight of a highest-weight word on the fundamental-weight basis:
/// `λ_n = d_n`, `λ_i = d_i − d_{i+1}` for `i < n`.
pub fn highest_weight_lambda(w0: &Word) -> Result<DominantWeight> {
    if !is_highest_weight(w0) {
        return Err(Error::InvalidInput(format!(
            "{:?} is not a highest-weight word",
            w0
        )));
    }
    let d = w0.weight();
    let d = d.coords();
    let n = w0.rank() as usize;
    let mut lambda = Vec::with_capacity(n);
    for i in 0..n {
        let c = if i + 1 == n { d[i] } else { d[i] - d[i + 1] };
        if c < 0 {
            return Err(Error::Internal(format!(
                "highest-weight word {:?} has non-dominant weight",
                w0
            )));
        }
        lambda.push(c as u32);
    }
    Ok(DominantWeight::new(lambda))
}

/// The position relation: true iff the two words occupy the same place in two
/// isomorphic connected components. Decided by raising both words, comparing
/// the highest weights, and replaying the first word's path from the second
/// word's top.
pub fn same_position(w1: &Word, w2: &Word) -> Result<bool> {
    if w1.rank() != w2.rank() {
        return Err(Error::RankMismatch(w1.rank(), w2.rank()));
    }
    let (h1, path1) = to_highest(w1);
    let (h2, _) = to_highest(w2);
    if h1.weight() != h2.weight() {
        return Ok(false);
    }
    // Same highest weight means isomorphic components, so the replay is total.
    let image = replay(&h2, &path1)?;
    Ok(image == *w2)
}

/// A connected component of the crystal of words, in deterministic order:
/// vertices in BFS discovery order from the highest-weight vertex, colors
/// ascending; edges `(from, color, to)` by vertex indices.
#[derive(Clone, Debug)]
pub struct Component {
    pub rank: u8,
    pub vertices: Vec<Word>,
    pub edges: Vec<(usize, u8, usize)>,
}

impl Component {
    pub fn highest(&self) -> &Word {
        &self.vertices[0]
    }
}

/// BFS closure of `w`'s component under the lowering operators, starting from
/// its highest-weight vertex. Errs when the vertex count exceeds `cap`.
pub fn enumerate_component(w: &Word, cap: usize) -> Result<Component> {
    let (top, _) = to_highest(w);
    let mut vertices = vec![top.clone()];
    let mut index: HashMap<Word, usize> = HashMap::new();
    index.insert(top, 0);
    let mut edges = Vec::new();
    let mut next = 0;
    while next < vertices.len() {
        for color in 1..=w.rank() {
            if let Some(img) = f_op(&vertices[next], color) {
                let to = match index.get(&img) {
                    Some(&i) => i,
                    None => {
                        if vertices.len() >= cap {
                            return Err(Error::CapExceeded(cap));
                        }
                        vertices.push(img.clone());
                        index.insert(img, vertices.len() - 1);
                        vertices.len() - 1
                    }
                };
                edges.push((next, color, to));
            }
        }
        next += 1;
    }
    Ok(Component {
        rank: w.rank(),
        vertices,
        edges,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::test_util::{all_words, w};

    // The running example word: 1 2 1̄ 3 1̄ 2̄ 2 1 2 1 1 1̄ 3̄ 2 1 1̄ 2̄ 2̄ 4 2
    fn example_word() -> Word {
        w(
            4,
            &[
                1, 2, -1, 3, -1, -2, 2, 1, 2, 1, 1, -1, -3, 2, 1, -1, -2, -2, 4, 2,
            ],
        )
    }

    #[test]
    fn signature_of_example_is_minus_minus_plus() {
        let sig = signature(&example_word(), 1);
        assert_eq!(sig.minus.len(), 2);
        assert_eq!(sig.plus.len(), 1);
        assert_eq!(epsilon(&example_word(), 1), 2);
        assert_eq!(phi_coeff(&example_word(), 1), 1);
    }

    #[test]
    fn signature_trivial_cases() {
        assert_eq!(signature(&w(2, &[1]), 1).plus, vec![0]);
        assert!(signature(&w(2, &[1]), 1).minus.is_empty());
        // the +− factor of "1 2" cancels completely
        let sig = signature(&w(2, &[1, 2]), 1);
        assert!(sig.plus.is_empty() && sig.minus.is_empty());
        // a barred 2 encodes as + for color 1, so "1 2̄" reads ++
        let sig = signature(&w(2, &[1, -2]), 1);
        assert_eq!(sig.plus, vec![0, 1]);
        assert!(sig.minus.is_empty());
        assert_eq!(epsilon(&Word::empty(2), 1), 0);
        assert_eq!(phi_coeff(&Word::empty(2), 1), 0);
    }

    #[test]
    fn ops_on_the_example_match_the_known_results() {
        // e flips the 1̄ at position 5 (1-based) into 2̄
        let e = e_op(&example_word(), 1).unwrap();
        let expected_e = w(
            4,
            &[
                1, 2, -1, 3, -2, -2, 2, 1, 2, 1, 1, -1, -3, 2, 1, -1, -2, -2, 4, 2,
            ],
        );
        assert_eq!(e, expected_e);
        // f flips the 2̄ at position 17 (1-based) into 1̄
        let f = f_op(&example_word(), 1).unwrap();
        let expected_f = w(
            4,
            &[
                1, 2, -1, 3, -1, -2, 2, 1, 2, 1, 1, -1, -3, 2, 1, -1, -1, -2, 4, 2,
            ],
        );
        assert_eq!(f, expected_f);
    }

    #[test]
    fn vector_crystal_chain() {
        // 1 →1 2 →2 2̄ →1 1̄ for n = 2
        let mut cur = w(2, &[1]);
        let expect = [vec![2], vec![-2], vec![-1]];
        for (step, exp) in expect.iter().enumerate() {
            let color = [1u8, 2, 1][step];
            cur = f_op(&cur, color).unwrap();
            assert_eq!(cur, w(2, exp));
        }
        assert!(f_op(&w(2, &[-1]), 1).is_none());
        assert!(e_op(&w(2, &[1]), 1).is_none());
        // "1 2" is a +− pair for color 1, so lowering vanishes there,
        // while "1 2̄" reads ++ and lowers at its first letter
        assert!(f_op(&w(2, &[1, 2]), 1).is_none());
        assert_eq!(f_op(&w(2, &[1, -2]), 1), Some(w(2, &[2, -2])));
    }

    #[test]
    fn involution_exhaustive_small() {
        for word in all_words(2, 4) {
            for i in 1..=2 {
                if let Some(fw) = f_op(&word, i) {
                    assert_eq!(e_op(&fw, i).unwrap(), word);
                }
                if let Some(ew) = e_op(&word, i) {
                    assert_eq!(f_op(&ew, i).unwrap(), word);
                }
            }
        }
    }

    #[test]
    fn epsilon_counts_raising_steps() {
        for word in all_words(2, 4) {
            for i in 1..=2 {
                let mut k = 0;
                let mut cur = word.clone();
                while let Some(next) = e_op(&cur, i) {
                    cur = next;
                    k += 1;
                }
                assert_eq!(epsilon(&word, i), k, "{:?} color {}", word, i);
            }
        }
    }

    #[test]
    fn to_highest_replay_identity() {
        for word in all_words(2, 5) {
            let (top, path) = to_highest(&word);
            assert!(is_highest_weight(&top));
            assert_eq!(replay(&top, &path).unwrap(), word);
        }
    }

    #[test]
    fn known_highest_weight_words() {
        let (t, p) = to_highest(&w(2, &[1, 1, 2]));
        assert_eq!(t, w(2, &[1, 1, 2]));
        assert!(p.is_empty());
        let (t, p) = to_highest(&w(2, &[1, 2, 1]));
        assert_eq!(t, w(2, &[1, 2, 1]));
        assert!(p.is_empty());
    }

    #[test]
    fn lambda_of_highest_weight_words() {
        assert_eq!(
            highest_weight_lambda(&w(2, &[1, 1, 2])).unwrap().coords(),
            &[1, 1]
        );
        assert_eq!(
            highest_weight_lambda(&w(2, &[1])).unwrap().coords(),
            &[1, 0]
        );
        // 1 2 … p has weight Λ_p
        assert_eq!(
            highest_weight_lambda(&w(4, &[1, 2, 3])).unwrap().coords(),
            &[0, 0, 1, 0]
        );
        assert!(highest_weight_lambda(&w(2, &[2])).is_err());
    }

    #[test]
    fn same_position_examples() {
        assert!(same_position(&w(2, &[1, 2, 1]), &w(2, &[1, 1, 2])).unwrap());
        let any = w(2, &[2, -1, 1]);
        assert!(same_position(&any, &any).unwrap());
        // Differing weights are never matched.
        assert!(!same_position(&w(2, &[1]), &w(2, &[2])).unwrap());
        assert!(same_position(&w(2, &[1]), &w(3, &[1])).is_err());
    }

    #[test]
    fn same_position_allows_contracted_lengths() {
        // 1 1̄ and the empty word both sit alone in trivial components.
        assert!(same_position(&w(2, &[1, -1]), &Word::empty(2)).unwrap());
        assert!(same_position(&Word::empty(2), &w(2, &[1, -1])).unwrap());
    }

    #[test]
    fn same_position_agrees_with_component_positions() {
        // Cross-check against explicit component enumeration at n = 2, length 3:
        // two words are matched iff they sit at the same BFS index of
        // components with equal highest weight.
        let words = all_words(2, 3).into_iter().filter(|x| x.len() == 3);
        let mut seen: Vec<Word> = Vec::new();
        for word in words {
            seen.push(word);
        }
        for w1 in &seen {
            let c1 = enumerate_component(w1, 10_000).unwrap();
            let i1 = c1.vertices.iter().position(|v| v == w1).unwrap();
            for w2 in &seen {
                let c2 = enumerate_component(w2, 10_000).unwrap();
                let i2 = c2.vertices.iter().position(|v| v == w2).unwrap();
                let expected = c1.highest().weight() == c2.highest().weight() && i1 == i2;
                assert_eq!(
                    same_position(w1, w2).unwrap(),
                    expected,
                    "{:?} vs {:?}",
                    w1,
                    w2
                );
            }
        }
    }

    #[test]
    fn vector_component_is_a_chain() {
        let c = enumerate_component(&w(3, &[2]), 100).unwrap();
        assert_eq!(c.vertices.len(), 6);
        assert_eq!(c.edges.len(), 5);
    }

    #[test]
    fn component_cap_overflows() {
        assert!(matches!(
            enumerate_component(&w(2, &[1, 2, 1]), 3),
            Err(Error::CapExceeded(3))
        ));
    }

    #[test]
    fn components_of_121_and_112_have_equal_sizes() {
        let a = enumerate_component(&w(2, &[1, 2, 1]), 1000).unwrap();
        let b = enumerate_component(&w(2, &[1, 1, 2]), 1000).unwrap();
        assert_eq!(a.vertices.len(), b.vertices.len());
        assert_eq!(a.edges.len(), b.edges.len());
    }

    #[test]
    fn component_of_121_is_characterized_by_its_factors() {
        // exactly the words a b c with a < b, b ≥ c and ab not the minimal
        // cancelling pair
        for rank in 2..=3u8 {
            let got: std::collections::HashSet<Word> =
                enumerate_component(&w(rank, &[1, 2, 1]), 100_000)
                    .unwrap()
                    .vertices
                    .into_iter()
                    .collect();
            let mut want = std::collections::HashSet::new();
            for abc in all_words(rank, 3).into_iter().filter(|x| x.len() == 3) {
                let (a, b, c) = (abc.letters()[0], abc.letters()[1], abc.letters()[2]);
                if a < b && b >= c && !(a == Letter::unbarred(1) && b == Letter::barred(1)) {
                    want.insert(abc);
                }
            }
            assert_eq!(got, want, "rank {}", rank);
        }
    }

    #[test]
    fn highest_weight_factor_law() {
        // u·v is highest weight iff u is and ε_i(v) ≤ φ_i(u) for all i.
        for len in 0..=5 {
            for word in all_words(2, len).into_iter().filter(|x| x.len() == len) {
                for cut in 0..=word.len() {
                    let u = Word::new(2, word.letters()[..cut].to_vec()).unwrap();
                    let v = Word::new(2, word.letters()[cut..].to_vec()).unwrap();
                    let law = is_highest_weight(&u)
                        && (1..=2).all(|i| epsilon(&v, i) <= phi_coeff(&u, i));
                    assert_eq!(is_highest_weight(&word), law, "{:?} cut {}", word, cut);
                }
            }
        }
    }

    #[test]
    fn coplactic_factor_law_spot_check() {
        // Words of one component have factor pairs in matching components.
        let comp = enumerate_component(&w(2, &[1, 2, 1]), 1000).unwrap();
        for v in &comp.vertices {
            let u = Word::new(2, v.letters()[..2].to_vec()).unwrap();
            let u_ref = Word::new(2, comp.highest().letters()[..2].to_vec()).unwrap();
            assert_eq!(
                to_highest(&u).0.weight(),
                to_highest(&u_ref).0.weight(),
                "left factors of {:?} drifted",
                v
            );
        }
    }

    #[test]
    fn same_position_is_an_equivalence() {
        let words: Vec<_> = all_words(2, 3);
        for a in &words {
            assert!(same_position(a, a).unwrap());
            for b in &words {
                let ab = same_position(a, b).unwrap();
                assert_eq!(ab, same_position(b, a).unwrap());
                if !ab {
                    continue;
                }
                for c in &words {
                    if same_position(b, c).unwrap() {
                        assert!(same_position(a, c).unwrap());
                    }
                }
            }
        }
    }
}
