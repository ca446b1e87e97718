use hedrites::gen::generate_self_hedrites;
use hedrites::symmetry::{classify, element_type, ElementKind};

fn main() {
    let run = generate_self_hedrites(2, 4).unwrap();
    for m in run.by_n[&4].iter() {
        let med = m.medial();
        let mg = med.automorphisms();
        let mut kinds = std::collections::BTreeMap::new();
        for a in &mg.elements {
            *kinds
                .entry(format!("{:?}", element_type(&med, a).unwrap()))
                .or_insert(0)
            += 1;
        }
        println!(
            "G sym={} -> Med sym={} order={} elements {:?}",
            classify(m).unwrap(),
            classify(&med).unwrap(),
            mg.order(),
            kinds
        );
        // double the order exactly
        assert_eq!(mg.order(), 2 * m.automorphisms().order());
        let g_has_inv = m.automorphisms().elements.iter().any(|a| {
            element_type(m, a).unwrap() == ElementKind::Inversion
        });
        let med_has_inv = mg.elements.iter().any(|a| {
            element_type(&med, a).unwrap() == ElementKind::Inversion
        });
        println!("  G has inversion: {g_has_inv}, Med has inversion: {med_has_inv}");
    }
}
