use sgdim::generators::{self, NegativeEdges};
use sgdim::solver::{bdim, sbdim, SolverConfig};

fn main() {
    let cfg = SolverConfig::default();
    let cases: Vec<(String, sgdim::SignedGraph)> = vec![
        ("C3- bdim".into(), generators::cycle(3, 1).unwrap()),
        ("C10- bdim".into(), generators::cycle(10, 1).unwrap()),
        ("W7- bdim".into(), generators::wheel_antibalanced(6).unwrap()),
        ("K6 one-neg bdim".into(), generators::complete(6, NegativeEdges::One).unwrap()),
        ("-K5 bdim".into(), generators::complete(5, NegativeEdges::All).unwrap()),
    ];
    for (name, g) in &cases {
        let t = std::time::Instant::now();
        let r = bdim(g, &cfg).unwrap();
        println!("{name} = {} (nodes {}) in {:?}", r.value, r.stats.nodes, t.elapsed());
    }
    let scases: Vec<(String, sgdim::SignedGraph)> = vec![
        ("C8- sbdim".into(), generators::cycle(8, 7).unwrap()),
        ("fig2 sbdim".into(), generators::figure2()),
        ("fig3 sbdim".into(), generators::figure3()),
        ("W4- sbdim".into(), generators::wheel_antibalanced(3).unwrap()),
        ("-K5 sbdim".into(), generators::complete(5, NegativeEdges::All).unwrap()),
        ("3xC3- sbdim".into(), generators::disjoint_union(&[
            generators::cycle(3,1).unwrap(), generators::cycle(3,1).unwrap(), generators::cycle(3,1).unwrap()]).unwrap()),
    ];
    for (name, g) in &scases {
        let t = std::time::Instant::now();
        let r = sbdim(g, &cfg).unwrap();
        println!("{name} = {} (nodes {}) in {:?}", r.value, r.stats.nodes, t.elapsed());
    }
    // k-switching non-invariance pair
    let k5 = generators::complete(5, NegativeEdges::All).unwrap();
    let mu = sgdim::SwitchingAssignment::new(3, vec![
        sgdim::TernaryVector::new(vec![1,1,1]).unwrap(),
        sgdim::TernaryVector::new(vec![1,1,1]).unwrap(),
        sgdim::TernaryVector::new(vec![1,1,1]).unwrap(),
        sgdim::TernaryVector::new(vec![-1,1,-1]).unwrap(),
        sgdim::TernaryVector::new(vec![-1,-1,1]).unwrap(),
    ]).unwrap();
    let switched = sgdim::apply_k_switching(&k5, &mu).unwrap();
    let t = std::time::Instant::now();
    let r = bdim(&switched, &SolverConfig::default()).unwrap();
    println!("(-K5)^mu bdim = {} in {:?}", r.value, t.elapsed());
}
