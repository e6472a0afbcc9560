fn main() {
    for k in 1..=7 {
        let t = std::time::Instant::now();
        let r = sgdim::nu(k).unwrap();
        println!("nu({}) = {} [{} vertices, {} edges] in {:?}", k, r.value, r.graph_vertices, r.graph_edges, t.elapsed());
    }
    for k in 1..=5 {
        let t = std::time::Instant::now();
        let r = sgdim::lambda_lines(k).unwrap();
        println!("lambda({}) = {} [{} lines] in {:?}", k, r.value, r.graph_vertices, t.elapsed());
    }
}
