use hedrites::gen::{generate_all_ihedrites, generate_octahedrites, generate_self_hedrites};
use hedrites::symmetry::group_census;

fn main() {
    let run = generate_octahedrites(18).unwrap();
    let maps: Vec<_> = run.all().cloned().collect();
    let census = group_census(maps.iter()).unwrap();
    println!("octahedrites <= 18:");
    for (g, (count, min_n)) in &census {
        println!("  {}: count={count} min_n={min_n}", g.symbol());
    }
    let all = generate_all_ihedrites(12, 2).unwrap();
    for i in 4..=7u8 {
        let maps: Vec<_> = all
            .iter()
            .filter(|&(&(ci, _), _)| ci == i)
            .flat_map(|(_, ms)| ms.iter().cloned())
            .collect();
        let census = group_census(maps.iter()).unwrap();
        print!("{i}-hedrites <= 12: ");
        for (g, (count, min_n)) in &census {
            print!("{}@{min_n}(x{count}) ", g.symbol());
        }
        println!();
    }
    for i in 2..=4u8 {
        let run = generate_self_hedrites(i, 12).unwrap();
        let maps: Vec<_> = run.all().cloned().collect();
        let census = group_census(maps.iter()).unwrap();
        print!("{i}-self-hedrites <= 12: ");
        for (g, (count, min_n)) in &census {
            print!("{}@{min_n}(x{count}) ", g.symbol());
        }
        println!();
    }
}
