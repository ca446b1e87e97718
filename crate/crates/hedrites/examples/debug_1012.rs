use hedrites::circuits::central_circuits;
use hedrites::gen::generate_octahedrites;
use hedrites::symmetry::{classify, element_type};

fn main() {
    let run = generate_octahedrites(12).unwrap();
    for n in [10usize, 12] {
        for m in run.by_n[&n].iter() {
            let g = m.automorphisms();
            println!(
                "n={n} sym={} order={} proper={} cc={:?}",
                classify(m).unwrap(),
                g.order(),
                g.proper_count,
                central_circuits(m).unwrap().sorted_lengths()
            );
            for a in &g.elements {
                print!("{:?} ", element_type(m, a).unwrap());
            }
            println!();
        }
    }
}
