#![no_main]
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(input) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(group) = reidzeta::schema::parse_cayley_json(input) {
        // anything accepted is a genuine group: the identity endomorphism
        // exists and twisted counting terminates
        let images: Vec<usize> = (0..group.order()).collect();
        let endo = reidzeta::oracle::FiniteEndo::new(&group, images)
            .expect("identity is always an endomorphism");
        let classes = reidzeta::oracle::twisted_classes_finite(&group, &endo);
        assert!(classes >= 1 && classes <= group.order());
    }
});
