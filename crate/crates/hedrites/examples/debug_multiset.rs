use hedrites::gen::{generate_octahedrites, oracle_generate, GraphClass};

fn main() {
    let prod = generate_octahedrites(12).unwrap();
    let oracle = oracle_generate(GraphClass::Octahedrite, 12).unwrap();
    for n in 6..=12usize {
        let pc: Vec<Vec<u32>> = prod
            .by_n
            .get(&n)
            .map(|v| v.iter().map(|m| m.canonical_code().code).collect())
            .unwrap_or_default();
        let oc: Vec<Vec<u32>> = oracle
            .by_n
            .get(&n)
            .map(|v| v.iter().map(|m| m.canonical_code().code).collect())
            .unwrap_or_default();
        println!("n={n}: prod {} oracle {} equal={}", pc.len(), oc.len(), pc == oc);
        assert_eq!(pc, oc);
    }
    println!("canonical-code multisets identical through n=12");
}
