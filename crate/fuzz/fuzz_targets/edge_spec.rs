#![no_main]
use libfuzzer_sys::fuzz_target;

use reidzeta::families::Graph;

fuzz_target!(|data: &[u8]| {
    let Ok(spec) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(graph) = Graph::from_edge_spec(spec, None) {
        // the inferred vertex count covers every edge endpoint
        for (a, b) in graph.edges() {
            assert!(a < graph.vertex_count() && b < graph.vertex_count());
            assert!(a < b);
        }
    }
    let _ = Graph::from_edge_spec(spec, Some(8));
});
