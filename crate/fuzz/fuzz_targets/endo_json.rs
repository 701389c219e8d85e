#![no_main]
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(input) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(images) = reidzeta::schema::parse_endo_json(input) {
        let json = reidzeta::schema::endo_to_json(&images);
        let back = reidzeta::schema::parse_endo_json(&json).expect("own output must parse");
        assert_eq!(back, images);
    }
});
