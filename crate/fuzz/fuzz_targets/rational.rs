#![no_main]
use libfuzzer_sys::fuzz_target;

use reidzeta::rat::{parse_rat, rat_to_string};

fuzz_target!(|data: &[u8]| {
    let Ok(input) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(r) = parse_rat(input) {
        // canonical form round-trips exactly
        let s = rat_to_string(&r);
        let back = parse_rat(&s).expect("own output must parse");
        assert_eq!(back, r);
        assert_eq!(rat_to_string(&back), s);
    }
});
