use std::time::Instant;
fn main() {
    let args: Vec<String> = std::env::args().collect();
    let n_max: usize = args.get(1).map(|s| s.parse().unwrap()).unwrap_or(20);
    let jobs: usize = args.get(2).map(|s| s.parse().unwrap()).unwrap_or(1);
    let t = Instant::now();
    let run = hedrites::gen::generate_octahedrites_jobs(n_max, jobs).unwrap();
    println!("octahedrites to {} in {:?}", n_max, t.elapsed());
    for (n, c) in run.counts() {
        print!("{}:{} ", n, c);
    }
    println!();
}
