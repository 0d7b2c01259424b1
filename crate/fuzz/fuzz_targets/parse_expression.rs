#![no_main]

use libfuzzer_sys::fuzz_target;
use pclie::expr::parse_expression;
use pclie::words::Alphabet;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let alphabet = Alphabet::numbered(4);
    let Ok(e) = parse_expression(text, &alphabet) else { return };
    // Bound the work: deep brackets over four letters can blow up.
    if let Ok(p) = e.lower_bounded(10_000) {
        let printed = p.display(&alphabet).to_string();
        let back = parse_expression(&printed, &alphabet).expect("printed form parses");
        assert_eq!(back.lower(), p);
    }
});
