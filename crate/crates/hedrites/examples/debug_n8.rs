use hedrites::circuits::{central_circuits, is_irreducible, zigzags};
use hedrites::gen::generate_self_hedrites;
use hedrites::symmetry::classify;

fn main() {
    let run = generate_self_hedrites(4, 8).unwrap();
    for m in run.by_n[&8].iter() {
        let med = m.medial();
        let zz = zigzags(m);
        let cc = central_circuits(&med).unwrap();
        println!(
            "n=8 self-hedrite: sym={} zz_simple={} med_irred={} med_sym={} med_cc_simple={} zz_lens={:?} aut_order={}",
            classify(m).unwrap(),
            zz.all_simple(),
            is_irreducible(&med).unwrap(),
            classify(&med).unwrap(),
            cc.all_simple(),
            zz.sorted_lengths(),
            m.automorphisms().order(),
        );
    }
}
