#![no_main]

use libfuzzer_sys::fuzz_target;
use pclie::serial::{nword_to_json, parse_nword_json};
use pclie::words::Alphabet;

fuzz_target!(|data: &[u8]| {
    let alphabet = Alphabet::numbered(4);
    if let Ok(t) = parse_nword_json(data, &alphabet) {
        let text = nword_to_json(&t, &alphabet).to_string();
        assert_eq!(parse_nword_json(text.as_bytes(), &alphabet).unwrap(), t);
    }
});
