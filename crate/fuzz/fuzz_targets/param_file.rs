#![no_main]

use libfuzzer_sys::fuzz_target;

use fabgraph::params::{parse_quantity, ParamFile};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let _ = parse_quantity(text);
    let Ok(file) = ParamFile::parse(text) else { return };
    for key in file.keys().map(str::to_owned).collect::<Vec<_>>() {
        // Typed getters must either produce a finite base-unit value or a
        // clean dimension error; parsed values are never NaN.
        if let Ok(v) = file.number(&key) {
            assert!(!v.is_nan());
        }
        let _ = file.frequency(&key);
        let _ = file.data_rate(&key);
        let _ = file.size_bits(&key);
        let _ = file.count(&key);
    }
});
