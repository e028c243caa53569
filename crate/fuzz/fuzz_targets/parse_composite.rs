#![no_main]

use libfuzzer_sys::fuzz_target;
use superschur::combinatorics::CompositePartition;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(c) = s.parse::<CompositePartition>() {
        assert_eq!(c.to_string().parse::<CompositePartition>().unwrap(), c);
        if c.nu.weight() + c.mu.weight() < 200 {
            let _ = c.is_mn_standard(3, 2);
        }
    }
});
