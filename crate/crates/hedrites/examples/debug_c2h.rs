use hedrites::gen::{generate_octahedrites, generate_self_hedrites};
use hedrites::symmetry::{classify, element_type};

fn main() {
    // three-connectivity of the D2 octahedrite at n=10
    let run = generate_octahedrites(10).unwrap();
    for m in run.by_n[&10].iter() {
        println!(
            "n=10 sym={} three_connected={}",
            classify(m).unwrap(),
            m.is_three_connected()
        );
    }
    // the 2-self-hedrites at n=4 and n=5
    for n in [4usize, 5] {
        let run = generate_self_hedrites(2, n).unwrap();
        for m in run.by_n[&n].iter() {
            let g = m.automorphisms();
            println!(
                "2-self-hedrite n={n}: sym={} order={}",
                classify(m).unwrap(),
                g.order()
            );
            for a in &g.elements {
                print!("{:?} ", element_type(m, a).unwrap());
            }
            println!();
            println!("{}", hedrites::io::emit_rotation_text(m));
        }
    }
}
