use hedrites::circuits::{central_circuits, railroads, zigzags};
use hedrites::gen::generate_self_hedrites;
use hedrites::symmetry::{classify, element_type, ElementKind};

fn main() {
    let run = generate_self_hedrites(4, 8).unwrap();
    for m in run.by_n[&8].iter() {
        if m.automorphisms().order() != 8 {
            continue;
        }
        println!("== self-hedrite sym={}", classify(m).unwrap());
        let g = m.automorphisms();
        for a in &g.elements {
            print!("{:?} ", element_type(m, a).unwrap());
        }
        println!();
        let med = m.medial();
        let rails = railroads(&med).unwrap();
        println!(
            "medial: n={} sym={} rails={:?} cc_lens={:?}",
            med.vertex_count(),
            classify(&med).unwrap(),
            rails,
            central_circuits(&med).unwrap().sorted_lengths()
        );
        let zz = zigzags(m);
        println!("selfhedrite zigzag lens {:?}", zz.sorted_lengths());
        // cross-check: medial CC lengths must equal zigzag lengths of m
        assert_eq!(zz.sorted_lengths(), central_circuits(&med).unwrap().sorted_lengths());
    }
}
