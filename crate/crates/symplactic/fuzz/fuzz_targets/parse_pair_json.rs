#![no_main]

use libfuzzer_sys::fuzz_target;
use symplactic::io::PairJson;
use symplactic::rs::{rs_inverse, rs_map};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(json) = serde_json::from_str::<PairJson>(text) else {
        return;
    };
    if json.q.len() > 12
        || json.p.columns.len() > 12
        || json.p.columns.iter().any(|c| c.len() > 12)
        || json.p.n == 0
        || json.p.n > 6
    {
        return;
    }
    let Ok(pair) = json.to_pair() else {
        return;
    };
    // pairs that pass validation invert, and the inverse maps back
    if let Ok(word) = rs_inverse(&pair, pair.p.rank()) {
        let again = rs_map(&word).expect("words always map");
        assert_eq!(again.p, pair.p);
        assert_eq!(again.q, pair.q);
    }
});
