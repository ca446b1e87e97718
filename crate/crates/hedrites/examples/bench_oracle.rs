use hedrites::gen::{oracle_generate, GraphClass};
use std::time::Instant;
fn main() {
    let n: usize = std::env::args().nth(1).map(|s| s.parse().unwrap()).unwrap_or(10);
    for class in [
        GraphClass::Octahedrite,
        GraphClass::Ihedrite(4),
        GraphClass::Ihedrite(5),
        GraphClass::Ihedrite(6),
        GraphClass::Ihedrite(7),
    ] {
        let t = Instant::now();
        let run = oracle_generate(class, n).unwrap();
        let counts: Vec<(usize, usize)> = run.counts().into_iter().collect();
        println!("{class} to {n}: {:?} in {:?}", counts, t.elapsed());
    }
}
