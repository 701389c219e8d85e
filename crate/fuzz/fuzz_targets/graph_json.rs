#![no_main]
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(input) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(graph) = reidzeta::schema::parse_graph_json(input) {
        let json = reidzeta::schema::graph_to_json(&graph);
        let back = reidzeta::schema::parse_graph_json(&json).expect("own output must parse");
        assert_eq!(back, graph);
        if graph.vertex_count() <= 16 {
            // the coherence relation must partition into edgeless or
            // complete components on every accepted graph
            let verdict = reidzeta::families::graph_tameness(&graph)
                .expect("coherent partition exists for every simple graph");
            let total: usize = verdict.partition.components.iter().map(|c| c.size()).sum();
            assert_eq!(total, graph.vertex_count());
        }
    }
});
