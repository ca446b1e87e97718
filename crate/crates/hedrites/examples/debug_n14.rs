use hedrites::circuits::{central_circuits, railroads};
use hedrites::gen::generate_octahedrites;
use hedrites::symmetry::classify;

fn main() {
    let run = generate_octahedrites(14).unwrap();
    for m in run.by_n[&14].iter() {
        let cc = central_circuits(m).unwrap();
        if !cc.all_simple() {
            continue;
        }
        let rails = railroads(m).unwrap();
        println!(
            "n=14 sym={} cc={:?} rails={}",
            classify(m).unwrap(),
            cc.sorted_lengths(),
            rails.len()
        );
        println!("  crossings: {:?}", cc.crossings.iter().map(|(k, v)| (*k, v.len())).collect::<Vec<_>>());
        for r in &rails {
            // verify band structure: consecutive faces share an edge, all size 4
            for &f in r {
                assert_eq!(m.face_size(f), 4);
            }
            println!("  rail {:?}", r);
        }
    }
}
