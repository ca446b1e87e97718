use std::time::Instant;
fn main() {
    let args: Vec<String> = std::env::args().collect();
    let n_max: usize = args.get(1).map(|s| s.parse().unwrap()).unwrap_or(12);
    let jobs: usize = args.get(2).map(|s| s.parse().unwrap()).unwrap_or(1);
    let t = Instant::now();
    let all = hedrites::gen::generate_all_ihedrites(n_max, jobs).unwrap();
    println!("all i-hedrites to {} in {:?}", n_max, t.elapsed());
    for n in 2..=n_max {
        print!("n={n}: ");
        for i in 4..=8u8 {
            print!("{} ", all.get(&(i, n)).map_or(0, |v| v.len()));
        }
        println!();
    }
    let t = Instant::now();
    for i in 2..=4u8 {
        let run = hedrites::gen::generate_self_hedrites_jobs(i, (n_max + 2) / 2, jobs).unwrap();
        let counts: Vec<usize> = (i as usize..=(n_max + 2) / 2).map(|n| run.count(n)).collect();
        println!("self-hedrites i={i}: {:?}", counts);
    }
    println!("self-hedrites in {:?}", t.elapsed());
}
