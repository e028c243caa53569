#![no_main]

use libfuzzer_sys::fuzz_target;
use superschur::LaurentPoly;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(p) = LaurentPoly::from_json(s) {
        assert_eq!(LaurentPoly::from_json(&p.to_json()).unwrap(), p);
    }
});
