//! Structural invariants beyond the acceptance goldens: an independent
//! recursive implementation of the operators via the binary tensor dispatch,
//! congruence chains, sub-crystal stability, and randomized round trips.

use proptest::prelude::*;

use symplactic::alphabet::{Letter, Word};
use symplactic::column::Column;
use symplactic::crystal::{
    e_op, enumerate_component, epsilon, f_op, is_highest_weight, phi_coeff, same_position,
};
use symplactic::insertion::p_symbol;
use symplactic::io::{format_word, parse_word, TableauJson};
use symplactic::oracle::{all_words, sample_skew_tableau};
use symplactic::plactic::rewrite_reachable;
use symplactic::rs::{rs_inverse, rs_map};
use symplactic::sjdt::sjdt_slide;
use symplactic::tableau::{admissible_columns, enumerate_skew_tableaux, Shape};

// ---------------------------------------------------------------------------
// an independent route to the operators: binary tensor dispatch
// ---------------------------------------------------------------------------

fn letter_eps(l: Letter, color: u8, rank: u8) -> usize {
    if color == rank {
        return usize::from(l == Letter::barred(rank));
    }
    usize::from(l == Letter::unbarred(color + 1) || l == Letter::barred(color))
}

fn letter_phi(l: Letter, color: u8, rank: u8) -> usize {
    if color == rank {
        return usize::from(l == Letter::unbarred(rank));
    }
    usize::from(l == Letter::unbarred(color) || l == Letter::barred(color + 1))
}

fn letter_lower(l: Letter, color: u8, rank: u8) -> Option<Letter> {
    if color == rank {
        return (l == Letter::unbarred(rank)).then(|| Letter::barred(rank));
    }
    if l == Letter::unbarred(color) {
        Some(Letter::unbarred(color + 1))
    } else if l == Letter::barred(color + 1) {
        Some(Letter::barred(color))
    } else {
        None
    }
}

fn eps_rec(w: &[Letter], color: u8, rank: u8) -> usize {
    match w.len() {
        0 => 0,
        1 => letter_eps(w[0], color, rank),
        _ => {
            let (u, v) = w.split_at(w.len() / 2);
            let eu = eps_rec(u, color, rank);
            let pu = phi_rec(u, color, rank);
            let ev = eps_rec(v, color, rank);
            eu + ev.saturating_sub(pu)
        }
    }
}

fn phi_rec(w: &[Letter], color: u8, rank: u8) -> usize {
    match w.len() {
        0 => 0,
        1 => letter_phi(w[0], color, rank),
        _ => {
            let (u, v) = w.split_at(w.len() / 2);
            let pv = phi_rec(v, color, rank);
            let pu = phi_rec(u, color, rank);
            let ev = eps_rec(v, color, rank);
            pv + pu.saturating_sub(ev)
        }
    }
}

fn lower_rec(w: &[Letter], color: u8, rank: u8) -> Option<Vec<Letter>> {
    match w.len() {
        0 => None,
        1 => letter_lower(w[0], color, rank).map(|l| vec![l]),
        _ => {
            let (u, v) = w.split_at(w.len() / 2);
            if phi_rec(u, color, rank) > eps_rec(v, color, rank) {
                let mut out = lower_rec(u, color, rank)?;
                out.extend_from_slice(v);
                Some(out)
            } else {
                let mut out = u.to_vec();
                out.extend(lower_rec(v, color, rank)?);
                Some(out)
            }
        }
    }
}

fn check_tensor_agreement(word: &Word) {
    for color in 1..=word.rank() {
        assert_eq!(
            epsilon(word, color),
            eps_rec(word.letters(), color, word.rank()),
            "epsilon mismatch on {:?} color {}",
            word,
            color
        );
        assert_eq!(
            phi_coeff(word, color),
            phi_rec(word.letters(), color, word.rank()),
            "phi mismatch on {:?} color {}",
            word,
            color
        );
        let via_signature = f_op(word, color).map(|w| w.letters().to_vec());
        let via_tensor = lower_rec(word.letters(), color, word.rank());
        assert_eq!(
            via_signature, via_tensor,
            "lowering mismatch on {:?} color {}",
            word, color
        );
    }
}

#[test]
fn tensor_dispatch_agrees_exhaustively() {
    for word in all_words(2, 5) {
        check_tensor_agreement(&word);
    }
}

// ---------------------------------------------------------------------------
// congruence chains and sub-crystal structure
// ---------------------------------------------------------------------------

#[test]
fn highest_weight_words_reach_their_tableau_by_rewrites() {
    for word in all_words(2, 5) {
        if !is_highest_weight(&word) {
            continue;
        }
        let target = p_symbol(&word).unwrap().reading();
        assert!(
            rewrite_reachable(&word, &target, 16),
            "{:?} has no short chain to {:?}",
            word,
            target
        );
    }
}

#[test]
fn skew_readings_are_closed_under_the_operators() {
    let cases = [
        (2u8, vec![2, 1], vec![1]),
        (2u8, vec![2, 1], vec![]),
        (3u8, vec![2, 2], vec![1]),
    ];
    for (rank, outer, inner) in cases {
        let outer = Shape::new(outer).unwrap();
        let inner = if inner.is_empty() {
            Shape::empty()
        } else {
            Shape::new(inner).unwrap()
        };
        let readings: std::collections::HashSet<Word> =
            enumerate_skew_tableaux(&outer, &inner, rank, 1_000_000)
                .unwrap()
                .into_iter()
                .map(|t| t.reading())
                .collect();
        assert!(!readings.is_empty());
        for word in &readings {
            for color in 1..=rank {
                if let Some(img) = f_op(word, color) {
                    assert!(
                        readings.contains(&img),
                        "lowering left the reading set: {:?} --{}--> {:?}",
                        word,
                        color,
                        img
                    );
                }
                if let Some(img) = e_op(word, color) {
                    assert!(
                        readings.contains(&img),
                        "raising left the reading set: {:?} --{}--> {:?}",
                        word,
                        color,
                        img
                    );
                }
            }
        }
    }
}

#[test]
fn admissible_columns_of_fixed_content_form_one_sl_component() {
    let rank = 3u8;
    for r in 0..=rank as usize {
        for s in 0..=(rank as usize - r) {
            if r + s == 0 {
                continue;
            }
            let members: Vec<Word> = admissible_columns(rank, r + s)
                .into_iter()
                .map(|c| c.word())
                .filter(|w| w.letters().iter().filter(|l| !l.is_barred()).count() == r)
                .collect();
            // closure and unique local top under the colors below the rank
            let mut tops = Vec::new();
            for word in &members {
                let mut is_top = true;
                for color in 1..rank {
                    if let Some(img) = f_op(word, color) {
                        assert!(
                            members.contains(&img),
                            "{:?} lowers out of the family",
                            word
                        );
                    }
                    if e_op(word, color).is_some() {
                        is_top = false;
                    }
                }
                if is_top {
                    tops.push(word.clone());
                }
            }
            let mut expected: Vec<i64> = (1..=r as i64).collect();
            expected.extend((0..s).map(|k| -(rank as i64 - k as i64)));
            assert_eq!(
                tops,
                vec![Word::from_signed(rank, &expected).unwrap()],
                "family (r,s)=({},{})",
                r,
                s
            );
            // connectivity: everything is reachable from the top by lowering
            let mut seen = std::collections::HashSet::new();
            let mut queue = vec![tops[0].clone()];
            seen.insert(tops[0].clone());
            while let Some(word) = queue.pop() {
                for color in 1..rank {
                    if let Some(img) = f_op(&word, color) {
                        if seen.insert(img.clone()) {
                            queue.push(img);
                        }
                    }
                }
            }
            assert_eq!(seen.len(), members.len(), "family (r,s)=({},{})", r, s);
        }
    }
}

#[test]
fn tableau_spans_stay_tableau_spans_along_a_component() {
    // embed a tableau reading between two extra letters and walk the component
    let word = Word::from_signed(2, &[2, 1, 1, -2]).unwrap();
    let mid = 1..3;
    assert_eq!(
        p_symbol(&Word::new(2, word.letters()[mid.clone()].to_vec()).unwrap())
            .unwrap()
            .reading(),
        Word::new(2, word.letters()[mid.clone()].to_vec()).unwrap()
    );
    let comp = enumerate_component(&word, 100_000).unwrap();
    for v in &comp.vertices {
        let span = Word::new(2, v.letters()[mid.clone()].to_vec()).unwrap();
        assert_eq!(
            p_symbol(&span).unwrap().reading(),
            span,
            "span of {:?} is not a tableau reading",
            v
        );
    }
}

#[test]
fn p_symbol_partition_matches_position_partition() {
    use std::collections::HashMap;
    // the tableau determines the position and vice versa: group all words of
    // rank 2 up to length 6 both ways and compare the partitions
    let mut by_tableau: HashMap<String, usize> = HashMap::new();
    let mut by_position: HashMap<String, usize> = HashMap::new();
    for word in all_words(2, 6) {
        let t = p_symbol(&word).unwrap();
        let tab_key = format!("{:?}", t);
        let (top, path) = symplactic::crystal::to_highest(&word);
        let pos_key = format!("{:?}|{:?}", top.weight(), path.colors);
        let a = by_tableau.len();
        let a = *by_tableau.entry(tab_key).or_insert(a);
        let b = by_position.len();
        let b = *by_position.entry(pos_key).or_insert(b);
        assert_eq!(a, b, "partitions diverge at {:?}", word);
    }
}

#[test]
fn random_slides_preserve_the_position() {
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(2024);
    let pool = [
        (vec![3, 2, 2, 1], vec![2, 1]),
        (vec![3, 3, 2], vec![2, 1]),
        (vec![2, 2, 2, 1], vec![1, 1]),
    ];
    let mut done = 0;
    while done < 200 {
        let (outer, inner) = &pool[done % pool.len()];
        let outer = Shape::new(outer.clone()).unwrap();
        let inner = Shape::new(inner.clone()).unwrap();
        let t = sample_skew_tableau(&outer, &inner, 3, &mut rng).expect("pool shapes fill");
        for corner in t.inner_corners() {
            let slid = sjdt_slide(&t, corner).unwrap();
            // the weight survives every step; a contraction erases one
            // (z, z̄) pair, which keeps it as well
            assert_eq!(t.reading().weight(), slid.reading().weight());
            assert!(
                same_position(&t.reading(), &slid.reading()).unwrap(),
                "slide at {:?} moved {:?} out of position",
                corner,
                t
            );
        }
        done += 1;
    }
}

#[test]
fn slides_commute_with_lowering_on_general_shapes() {
    use std::collections::HashMap;
    use symplactic::tableau::SkewTableau;
    let cases = [
        (2u8, vec![2, 1], vec![1]),
        (2u8, vec![2, 2], vec![1]),
        (3u8, vec![2, 2, 1], vec![1, 1]),
    ];
    for (rank, outer, inner) in cases {
        let outer = Shape::new(outer).unwrap();
        let inner = Shape::new(inner).unwrap();
        let fillings = enumerate_skew_tableaux(&outer, &inner, rank, 1_000_000).unwrap();
        let by_reading: HashMap<Word, SkewTableau> =
            fillings.iter().map(|t| (t.reading(), t.clone())).collect();
        for t in &fillings {
            for corner in t.inner_corners() {
                let image = sjdt_slide(t, corner).unwrap().reading();
                for color in 1..=rank {
                    match (f_op(&t.reading(), color), f_op(&image, color)) {
                        (None, None) => {}
                        (Some(fw), Some(fi)) => {
                            let ft = by_reading
                                .get(&fw)
                                .expect("lowering stays among the readings");
                            assert_eq!(
                                sjdt_slide(ft, corner).unwrap().reading(),
                                fi,
                                "slide at {:?} does not commute with color {} on {:?}",
                                corner,
                                color,
                                t
                            );
                        }
                        (a, b) => panic!(
                            "one-sided lowering at color {} on {:?}: source {}, image {}",
                            color,
                            t,
                            a.is_some(),
                            b.is_some()
                        ),
                    }
                }
            }
        }
    }
}

// ---------------------------------------------------------------------------
// randomized round trips
// ---------------------------------------------------------------------------

fn arb_word(rank: u8, max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(0..(2 * rank as i64), 0..=max_len).prop_map(move |raw| {
        let signed: Vec<i64> = raw
            .into_iter()
            .map(|x| {
                if x < rank as i64 {
                    x + 1
                } else {
                    -(x - rank as i64 + 1)
                }
            })
            .collect();
        Word::from_signed(rank, &signed).expect("generated letters fit")
    })
}

proptest! {
    #[test]
    fn word_text_round_trips(word in arb_word(4, 12)) {
        let text = format_word(&word, false);
        prop_assert_eq!(parse_word(&text, 4).unwrap(), word);
    }

    #[test]
    fn tensor_dispatch_agrees_on_random_words(word in arb_word(3, 10)) {
        check_tensor_agreement(&word);
    }

    #[test]
    fn operators_are_mutually_inverse(word in arb_word(3, 10), color in 1u8..=3) {
        if let Some(down) = f_op(&word, color) {
            prop_assert_eq!(e_op(&down, color).unwrap(), word.clone());
        }
        if let Some(up) = e_op(&word, color) {
            prop_assert_eq!(f_op(&up, color).unwrap(), word);
        }
    }

    #[test]
    fn correspondence_round_trips(word in arb_word(3, 8)) {
        let pair = rs_map(&word).unwrap();
        prop_assert_eq!(rs_inverse(&pair, 3).unwrap(), word);
    }

    #[test]
    fn tableau_json_round_trips(word in arb_word(3, 8)) {
        let t = p_symbol(&word).unwrap();
        let json = serde_json::to_string(&TableauJson::from_tableau(&t)).unwrap();
        let parsed: TableauJson = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(parsed.to_tableau().unwrap(), t);
    }

    #[test]
    fn insertion_result_is_congruent_to_the_word(word in arb_word(3, 8)) {
        let t = p_symbol(&word).unwrap();
        prop_assert!(same_position(&word, &t.reading()).unwrap());
    }
}

#[test]
fn columns_shorter_than_their_words_are_rejected() {
    assert!(Column::from_signed(3, &[1, 1]).is_err());
    assert!(Column::from_signed(3, &[2, 1]).is_err());
    assert!(Column::from_signed(3, &[1, 2, -2, -1]).is_ok());
}

/// Classical dimension count for the symplectic Lie algebra of rank `n`:
/// with row lengths `a_k = Σ_{i ≥ k} c_i` and `ρ = (n, …, 1)`, the product
/// over positive roots of `(λ+ρ, α) / (ρ, α)`.
fn weyl_dimension(n: usize, coords: &[u32]) -> i128 {
    let a: Vec<i128> = (0..n)
        .map(|k| coords[k..].iter().map(|&c| c as i128).sum())
        .collect();
    let rho: Vec<i128> = (1..=n as i128).rev().collect();
    let l: Vec<i128> = (0..n).map(|i| a[i] + rho[i]).collect();
    let mut num = 1i128;
    let mut den = 1i128;
    for i in 0..n {
        for j in (i + 1)..n {
            num *= (l[i] - l[j]) * (l[i] + l[j]);
            den *= (rho[i] - rho[j]) * (rho[i] + rho[j]);
        }
        num *= l[i];
        den *= rho[i];
    }
    assert_eq!(num % den, 0);
    num / den
}

#[test]
fn component_sizes_match_the_weyl_dimension_formula() {
    use symplactic::alphabet::DominantWeight;
    use symplactic::tableau::highest_weight_tableau;
    // an entirely independent count of each component's vertices
    for rank in 1u8..=3 {
        let n = rank as usize;
        let mut coords = vec![0u32; n];
        loop {
            let boxes: usize = coords
                .iter()
                .enumerate()
                .map(|(i, &c)| (i + 1) * c as usize)
                .sum();
            if boxes > 0 && boxes <= 6 {
                let hw =
                    highest_weight_tableau(&DominantWeight::new(coords.clone()), rank).unwrap();
                let comp = enumerate_component(&hw.reading(), 2_000_000).unwrap();
                assert_eq!(
                    comp.vertices.len() as i128,
                    weyl_dimension(n, &coords),
                    "rank {} coords {:?}",
                    rank,
                    coords
                );
            }
            // odometer over coordinate vectors bounded by six boxes per entry
            let mut k = 0;
            loop {
                if k == n {
                    break;
                }
                coords[k] += 1;
                if (k + 1) * coords[k] as usize <= 6 {
                    break;
                }
                coords[k] = 0;
                k += 1;
            }
            if k == n {
                break;
            }
        }
    }
}
