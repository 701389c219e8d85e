#![no_main]
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(input) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(matrix) = reidzeta::schema::parse_matrix_json(input) {
        let json = reidzeta::schema::matrix_to_json(&matrix);
        let back = reidzeta::schema::parse_matrix_json(&json).expect("own output must parse");
        assert_eq!(back, matrix);
        if matrix.is_square() && matrix.rows() <= 8 {
            // char poly at 0 must be the determinant up to sign
            let p = matrix.char_poly().expect("square matrix has a char poly");
            let det = matrix.det().expect("square matrix has a determinant");
            let sign = if matrix.rows() % 2 == 0 {
                det.clone()
            } else {
                -det.clone()
            };
            assert_eq!(p.coeff(0), sign);
        }
    }
});
