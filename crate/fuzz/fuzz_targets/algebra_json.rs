#![no_main]
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(input) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(algebra) = reidzeta::schema::parse_algebra_json(input) {
        // accepted input must survive an emit/reparse round trip
        let json = reidzeta::schema::algebra_to_json(&algebra);
        let back = reidzeta::schema::parse_algebra_json(&json).expect("own output must parse");
        assert_eq!(back.brackets(), algebra.brackets());
        assert_eq!(back.dim(), algebra.dim());
        // Jacobi/nilpotency validation may reject, but must not panic;
        // cubic in dim, so keep it to small algebras
        if algebra.dim() <= 24 {
            let _ = algebra.validate();
        }
    }
});
