use hedrites::gen::generate_octahedrites;
use hedrites::pmap::PlanarMap;

// Abstract multigraph automorphism count via vertex backtracking.
fn adjacency_matrix(m: &PlanarMap) -> Vec<Vec<u8>> {
    let n = m.vertex_count();
    let mut adj = vec![vec![0u8; n]; n];
    for d in 0..m.dart_count() as u32 {
        if d < m.twin(d) {
            let a = m.vertex_of(d) as usize;
            let b = m.vertex_of(m.twin(d)) as usize;
            adj[a][b] += 1;
            adj[b][a] += 1;
        }
    }
    adj
}

fn count_graph_autos(adj: &[Vec<u8>]) -> usize {
    let n = adj.len();
    let mut perm = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn go(adj: &[Vec<u8>], perm: &mut [usize], used: &mut [bool], v: usize, count: &mut usize) {
        let n = adj.len();
        if v == n {
            *count += 1;
            return;
        }
        for img in 0..n {
            if used[img] {
                continue;
            }
            let ok = (0..v).all(|w| adj[v][w] == adj[img][perm[w]]);
            if ok {
                perm[v] = img;
                used[img] = true;
                go(adj, perm, used, v + 1, count);
                used[img] = false;
                perm[v] = usize::MAX;
            }
        }
    }
    let mut count = 0;
    go(adj, &mut perm, &mut used, 0, &mut count);
    count
}

fn main() {
    let run = generate_octahedrites(12).unwrap();
    for n in [10usize, 12] {
        for m in run.by_n[&n].iter() {
            let map_order = m.automorphisms().order();
            let graph_order = count_graph_autos(&adjacency_matrix(m));
            println!(
                "n={n}: map-aut {} vertex-perm graph-aut {} {}",
                map_order,
                graph_order,
                if map_order == graph_order { "agree" } else { "DIFFER" }
            );
        }
    }
}
