#![no_main]

use libfuzzer_sys::fuzz_target;
use superschur::verify::{GridSpec, Suite};

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(spec) = s.parse::<GridSpec>() {
        let _ = spec.resolve(Suite::Rho.default_grid());
    }
    let _ = s.parse::<Suite>();
});
