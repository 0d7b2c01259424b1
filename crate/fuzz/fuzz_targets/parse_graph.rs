#![no_main]

use libfuzzer_sys::fuzz_target;
use pclie::graph::parse_graph;

fuzz_target!(|data: &[u8]| {
    if let Ok(g) = parse_graph(data) {
        let again = parse_graph(g.to_json().as_bytes()).expect("canonical form parses");
        assert_eq!(again, g);
    }
});
