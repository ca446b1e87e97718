use hedrites::gen::generate_octahedrites;

fn main() {
    let run = generate_octahedrites(10).unwrap();
    for m in run.by_n[&10].iter() {
        if m.automorphisms().order() != 4 {
            continue;
        }
        println!("{}", hedrites::io::emit_rotation_text(m));
        println!("faces:");
        for f in 0..m.face_count() as u32 {
            let verts: Vec<u32> = m.face_darts(f).map(|d| m.vertex_of(d)).collect();
            println!("  f{f}: {:?}", verts);
        }
        println!("adjacency:");
        for v in 0..m.vertex_count() as u32 {
            let nbrs: Vec<u32> = m.vertex_darts(v).map(|d| m.vertex_of(m.twin(d))).collect();
            println!("  v{v}: {:?}", nbrs);
        }
    }
}
