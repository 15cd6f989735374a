#![no_main]

use libfuzzer_sys::fuzz_target;
use symplactic::io::TableauJson;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(json) = serde_json::from_str::<TableauJson>(text) else {
        return;
    };
    // keep validation work bounded on absurd inputs
    if json.columns.len() > 64 || json.columns.iter().any(|c| c.len() > 64) {
        return;
    }
    if let Ok(t) = json.to_tableau() {
        let printed = serde_json::to_string(&TableauJson::from_tableau(&t)).unwrap();
        let back: TableauJson = serde_json::from_str(&printed).unwrap();
        assert_eq!(back.to_tableau().expect("round trip validates"), t);
        // a validated tableau always reinserts to itself
        let p = symplactic::insertion::p_symbol(&t.reading()).expect("readings insert");
        assert_eq!(p, t);
    }
    if let Ok(t) = json.to_skew() {
        let printed = serde_json::to_string(&TableauJson::from_skew(&t)).unwrap();
        let back: TableauJson = serde_json::from_str(&printed).unwrap();
        assert_eq!(back.to_skew().expect("round trip validates"), t);
    }
});
