//! Checkerboard structure of 4-regular maps, the inverse medial, self-dual
//! detection and the Goldberg-Coxeter construction on the octahedron.
//!
//! The dual of a 4-regular plane map is bipartite, so its faces split into
//! two classes with edge-adjacent faces always in different classes. Reading
//! the two classes as vertex sets recovers the two plane graphs whose common
//! medial is the given map.

use crate::canon::is_isomorphic;
use crate::error::{Error, Result};
use crate::pmap::PlanarMap;

/// A proper 2-coloring of the faces of a 4-regular map.
///
/// Class 0 is the class of the face bounded by dart 0, which fixes the
/// coloring deterministically.
#[derive(Clone, Debug)]
pub struct Checkerboard {
    pub class_of_face: Vec<u8>,
}

impl Checkerboard {
    pub fn class_of_dart(&self, m: &PlanarMap, d: u32) -> u8 {
        self.class_of_face[m.face_of(d) as usize]
    }

    /// Color of the face owning the corner between `d` and `rot(d)`.
    pub fn class_of_corner(&self, m: &PlanarMap, d: u32) -> u8 {
        self.class_of_face[m.face_of_corner(d) as usize]
    }
}

/// Two-colors the faces of a 4-regular map so that faces sharing an edge get
/// different colors.
pub fn checkerboard(m: &PlanarMap) -> Result<Checkerboard> {
    m.require_four_regular()?;
    let mut class = vec![u8::MAX; m.face_count()];
    class[m.face_of(0) as usize] = 0;
    let mut stack = vec![m.face_of(0)];
    while let Some(f) = stack.pop() {
        let c = class[f as usize];
        for d in m.face_darts(f) {
            let g = m.face_of(m.twin(d));
            if class[g as usize] == u8::MAX {
                class[g as usize] = 1 - c;
                stack.push(g);
            } else if class[g as usize] == c {
                return Err(Error::Unclassifiable(
                    "face 2-coloring conflict on a 4-regular map".into(),
                ));
            }
        }
    }
    Ok(Checkerboard {
        class_of_face: class,
    })
}

/// Rebuilds the two plane graphs whose medial is `m`.
///
/// The first component is built on the class-0 faces, the second on the
/// class-1 faces; they are plane duals of each other and `medial` of either
/// is isomorphic to `m`.
pub fn inverse_medial(m: &PlanarMap) -> Result<(PlanarMap, PlanarMap)> {
    let board = checkerboard(m)?;
    let g0 = inverse_medial_class(m, &board, 0);
    let g1 = inverse_medial_class(m, &board, 1);
    Ok((g0, g1))
}

/// One inverse-medial component: vertices are the faces of one checkerboard
/// class, edges pass through the vertices of `m`. The darts of the result
/// are the corners of `m` colored with that class.
fn inverse_medial_class(m: &PlanarMap, board: &Checkerboard, class: u8) -> PlanarMap {
    let n = m.dart_count() as u32;
    let corners: Vec<u32> = (0..n)
        .filter(|&d| board.class_of_corner(m, d) == class)
        .collect();
    let mut index = vec![u32::MAX; n as usize];
    for (i, &d) in corners.iter().enumerate() {
        index[d as usize] = i as u32;
    }
    let rot: Vec<u32> = corners
        .iter()
        .map(|&x| index[m.twin(m.rot(x)) as usize])
        .collect();
    let twin: Vec<u32> = corners
        .iter()
        .map(|&x| index[m.rot(m.rot(x)) as usize])
        .collect();
    debug_assert!(rot.iter().chain(&twin).all(|&d| d != u32::MAX));
    PlanarMap::from_permutations(rot, twin).expect("inverse medial of a 4-regular map is valid")
}

/// When the two inverse-medial halves of `m` are isomorphic, returns that
/// common graph (`m` is then the medial of a self-dual map).
pub fn is_self_hedrite(m: &PlanarMap) -> Result<Option<PlanarMap>> {
    let (g0, g1) = inverse_medial(m)?;
    Ok(if is_isomorphic(&g0, &g1) {
        Some(g0)
    } else {
        None
    })
}

/// Parameters of the Goldberg-Coxeter construction, a Gaussian integer
/// `k + l*i` with `0 <= l <= k` and `k >= 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GcParams {
    pub k: u32,
    pub l: u32,
}

impl GcParams {
    pub fn new(k: u32, l: u32) -> Result<GcParams> {
        if k == 0 || l > k {
            return Err(Error::BadGcParams { k, l });
        }
        Ok(GcParams { k, l })
    }

    /// Vertex count of `GC_{k,l}(Octahedron)`.
    pub fn vertex_count(&self) -> usize {
        6 * (self.k as usize * self.k as usize + self.l as usize * self.l as usize)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
struct G(i64, i64);

impl G {
    fn add(self, o: G) -> G {
        G(self.0 + o.0, self.1 + o.1)
    }
    fn sub(self, o: G) -> G {
        G(self.0 - o.0, self.1 - o.1)
    }
    /// Multiplication by i^m.
    fn rot(self, m: u8) -> G {
        match m % 4 {
            0 => self,
            1 => G(-self.1, self.0),
            2 => G(-self.0, -self.1),
            3 => G(self.1, -self.0),
            _ => unreachable!(),
        }
    }
    fn dot(self, o: G) -> i64 {
        self.0 * o.0 + self.1 * o.1
    }
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }
    fn find(&mut self, x: usize) -> usize {
        if self.0[x] != x {
            let r = self.find(self.0[x]);
            self.0[x] = r;
        }
        self.0[x]
    }
    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let r = ra.min(rb);
            self.0[ra] = r;
            self.0[rb] = r;
        }
    }
}

/// The octahedrite `GC_{k,l}(Octahedron)` with `6(k^2+l^2)` vertices.
///
/// The dual cube is unfolded into six charts, each carrying the master
/// square with corners `0, z, z+iz, iz` for `z = k + l*i` over the unit
/// lattice. Lattice cells glued across chart boundaries become the vertices
/// of the result, lattice edges its edges, and dualizing the resulting
/// quadrangulation is implicit in reading cells as vertices.
pub fn gc_octahedron(params: GcParams) -> Result<PlanarMap> {
    let (k, l) = (params.k as i64, params.l as i64);
    let z = G(k, l);
    let corners = [G(0, 0), z, z.add(z.rot(1)), z.rot(1)];

    let cube = crate::pmap::fixtures::cube();
    let faces: Vec<Vec<u32>> = (0..cube.face_count() as u32)
        .map(|f| cube.face_darts(f).collect())
        .collect();
    // side_of[dart] = (face, index of the dart in the face cycle)
    let mut side_of = vec![(0u32, 0usize); cube.dart_count()];
    for (f, cycle) in faces.iter().enumerate() {
        for (j, &d) in cycle.iter().enumerate() {
            side_of[d as usize] = (f as u32, j);
        }
    }

    // Candidate cells per chart: unit cells with positive-area overlap with
    // the master square, found by a separating-axis test in exact integers.
    let axes = [G(1, 0), G(0, 1), G(-l, k), G(k, l)];
    let master_proj: Vec<(i64, i64)> = axes
        .iter()
        .map(|&ax| {
            let ps: Vec<i64> = corners.iter().map(|&c| c.dot(ax)).collect();
            (*ps.iter().min().unwrap(), *ps.iter().max().unwrap())
        })
        .collect();
    let cell_in_master = |p: G| -> bool {
        for (i, &ax) in axes.iter().enumerate() {
            let ps = [
                p.dot(ax),
                p.add(G(1, 0)).dot(ax),
                p.add(G(0, 1)).dot(ax),
                p.add(G(1, 1)).dot(ax),
            ];
            let lo = *ps.iter().min().unwrap();
            let hi = *ps.iter().max().unwrap();
            if lo.max(master_proj[i].0) >= hi.min(master_proj[i].1) {
                return false;
            }
        }
        true
    };
    let mut cells: Vec<G> = Vec::new();
    for a in -l - 1..=k {
        for b in -1..=k + l {
            let p = G(a, b);
            if cell_in_master(p) {
                cells.push(p);
            }
        }
    }
    let area = (k * k + l * l) as usize;
    let per_face = cells.len();
    let mut cell_index = std::collections::HashMap::new();
    for (i, &p) in cells.iter().enumerate() {
        cell_index.insert(p, i);
    }

    // Global ids: cell (f, i) -> f*per_face + i, side s of it -> 4x + s.
    let ncells = 6 * per_face;
    let mut cell_uf = UnionFind::new(ncells);
    let mut side_uf = UnionFind::new(4 * ncells);

    // Transition across side j of face f: u = -i^(j'-j), c = corner_{j'+1} -
    // u*corner_j, where j' locates the twin dart in the neighbor chart.
    for (f, cycle) in faces.iter().enumerate() {
        for (j, &d) in cycle.iter().enumerate() {
            let (g_face, jp) = side_of[cube.twin(d) as usize];
            let m = ((jp + 6 - j) % 4) as u8; // u = -i^(j'-j) = i^m
            let c = corners[(jp + 1) % 4].sub(corners[j].rot(m));
            let offset = match m % 4 {
                0 => G(0, 0),
                1 => G(-1, 0),
                2 => G(-1, -1),
                3 => G(0, -1),
                _ => unreachable!(),
            };
            for (i, &p) in cells.iter().enumerate() {
                let q = p.rot(m).add(c).add(offset);
                if let Some(&qi) = cell_index.get(&q) {
                    let a = f * per_face + i;
                    let b = g_face as usize * per_face + qi;
                    cell_uf.union(a, b);
                    for s in 0..4usize {
                        side_uf.union(4 * a + s, 4 * b + (s + m as usize) % 4);
                    }
                }
            }
        }
    }

    // Dense ids for global cells and darts.
    let mut cell_id = vec![usize::MAX; ncells];
    let mut n_vertices = 0usize;
    for x in 0..ncells {
        let r = cell_uf.find(x);
        if cell_id[r] == usize::MAX {
            cell_id[r] = n_vertices;
            n_vertices += 1;
        }
        cell_id[x] = cell_id[r];
    }
    if n_vertices != 6 * area {
        return Err(Error::Unclassifiable(format!(
            "gc construction produced {n_vertices} cells, expected {}",
            6 * area
        )));
    }
    let mut dart_id = vec![usize::MAX; 4 * ncells];
    let mut n_darts = 0usize;
    for x in 0..4 * ncells {
        let r = side_uf.find(x);
        if dart_id[r] == usize::MAX {
            dart_id[r] = n_darts;
            n_darts += 1;
        }
        dart_id[x] = dart_id[r];
    }

    // Rotation: the four sides of a cell in ccw order S, E, N, W.
    let mut rot = vec![u32::MAX; n_darts];
    for x in 0..ncells {
        for s in 0..4usize {
            rot[dart_id[4 * x + s]] = dart_id[4 * x + (s + 1) % 4] as u32;
        }
    }

    // Edge pairing through a union-find over chart-local lattice edges.
    // An edge is keyed by its lower endpoint and axis (0 horizontal,
    // 1 vertical); the sides S, E, N, W of cell p touch the edges at
    // p, p+1, p+i and p respectively.
    let edge_of_side = |p: G, s: usize| -> (G, u8) {
        match s {
            0 => (p, 0),
            1 => (p.add(G(1, 0)), 1),
            2 => (p.add(G(0, 1)), 0),
            3 => (p, 1),
            _ => unreachable!(),
        }
    };
    let mut edge_keys: Vec<std::collections::HashMap<(G, u8), usize>> = vec![Default::default(); 6];
    let mut n_edges = 0usize;
    for f in 0..6usize {
        for &p in &cells {
            for s in 0..4usize {
                edge_keys[f].entry(edge_of_side(p, s)).or_insert_with(|| {
                    n_edges += 1;
                    n_edges - 1
                });
            }
        }
    }
    let mut edge_uf = UnionFind::new(n_edges);
    let map_edge = |(start, axis): (G, u8), m: u8, c: G| -> (G, u8) {
        let dir = if axis == 0 { G(1, 0) } else { G(0, 1) };
        let a = start.rot(m).add(c);
        let b = start.add(dir).rot(m).add(c);
        let lo = if (a.0, a.1) <= (b.0, b.1) { a } else { b };
        ((lo), if a.0 == b.0 { 1 } else { 0 })
    };
    for (f, cycle) in faces.iter().enumerate() {
        for (j, &d) in cycle.iter().enumerate() {
            let (g_face, jp) = side_of[cube.twin(d) as usize];
            let m = ((jp + 6 - j) % 4) as u8;
            let c = corners[(jp + 1) % 4].sub(corners[j].rot(m));
            for (&key, &eid) in &edge_keys[f] {
                if let Some(&other) = edge_keys[g_face as usize].get(&map_edge(key, m, c)) {
                    edge_uf.union(eid, other);
                }
            }
        }
    }

    // Each global edge has exactly two incident cell-sides; pair them.
    let mut twin = vec![u32::MAX; n_darts];
    let mut side_at_edge: Vec<u32> = vec![u32::MAX; n_edges];
    for f in 0..6usize {
        for (i, &p) in cells.iter().enumerate() {
            for s in 0..4usize {
                let dart = dart_id[4 * (f * per_face + i) + s] as u32;
                let e = edge_uf.find(edge_keys[f][&edge_of_side(p, s)]);
                let seen = side_at_edge[e];
                if seen == u32::MAX {
                    side_at_edge[e] = dart;
                } else if seen != dart {
                    if twin[seen as usize] != u32::MAX && twin[seen as usize] != dart {
                        return Err(Error::Unclassifiable(
                            "gc construction found an edge with three sides".into(),
                        ));
                    }
                    twin[seen as usize] = dart;
                    twin[dart as usize] = seen;
                }
            }
        }
    }
    if twin.iter().any(|&t| t == u32::MAX) {
        return Err(Error::Unclassifiable(
            "gc construction left an unmatched lattice edge".into(),
        ));
    }

    PlanarMap::from_permutations(rot, twin)
}

/// The 4-self-hedrites with tetrahedral symmetry, enumerated through the
/// Goldberg-Coxeter construction: for every `0 <= l <= k <= k_max` with
/// `k + l` odd, the inverse medial of `GC_{k,l}(Octahedron)` is self-dual
/// with symmetry `Td` when `l` is 0 or `k`, and `T` otherwise. Even `k + l`
/// puts all triangles in one checkerboard class and yields nothing.
pub fn t_td_pipeline(k_max: u32) -> Result<Vec<(GcParams, PlanarMap)>> {
    let mut out = Vec::new();
    for k in 1..=k_max {
        for l in 0..=k {
            if (k + l) % 2 == 0 {
                continue;
            }
            let params = GcParams::new(k, l)?;
            let m = gc_octahedron(params)?;
            let g = is_self_hedrite(&m)?.ok_or_else(|| {
                Error::Unclassifiable(format!(
                    "GC({k},{l}) with k+l odd must have isomorphic halves"
                ))
            })?;
            out.push((params, g));
        }
    }
    Ok(out)
}

/// The 4-self-hedrites up to `n_max` all of whose zigzags are simple.
pub fn simple_zigzag_self_hedrites(n_max: usize, jobs: usize) -> Result<Vec<PlanarMap>> {
    let run = crate::gen::generate_self_hedrites_jobs(4, n_max, jobs)?;
    Ok(run
        .all()
        .filter(|m| crate::circuits::zigzags(m).all_simple())
        .cloned()
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pmap::fixtures::*;
    use crate::symmetry::{classify, PointGroup};

    #[test]
    fn checkerboard_octahedron() {
        let m = octahedron();
        let board = checkerboard(&m).unwrap();
        let zeros = board.class_of_face.iter().filter(|&&c| c == 0).count();
        assert_eq!(zeros, 4);
        for d in 0..m.dart_count() as u32 {
            assert_ne!(
                board.class_of_face[m.face_of(d) as usize],
                board.class_of_face[m.face_of(m.twin(d)) as usize]
            );
        }
    }

    #[test]
    fn checkerboard_two_one() {
        let board = checkerboard(&two_one()).unwrap();
        let zeros = board.class_of_face.iter().filter(|&&c| c == 0).count();
        assert_eq!(zeros, 2);
    }

    #[test]
    fn inverse_medial_octahedron_gives_tetrahedra() {
        let (g0, g1) = inverse_medial(&octahedron()).unwrap();
        assert!(is_isomorphic(&g0, &tetrahedron()));
        assert!(is_isomorphic(&g1, &tetrahedron()));
    }

    #[test]
    fn inverse_medial_round_trip() {
        for m in [octahedron(), two_one(), tetrahedron().medial(), cube().medial()] {
            let (g0, g1) = inverse_medial(&m).unwrap();
            assert!(is_isomorphic(&g0.medial(), &m));
            assert!(is_isomorphic(&g1.medial(), &m));
            assert!(is_isomorphic(&g1, &g0.dual()));
        }
    }

    #[test]
    fn self_hedrite_detection() {
        assert!(is_isomorphic(
            &is_self_hedrite(&octahedron()).unwrap().unwrap(),
            &tetrahedron()
        ));
        assert!(is_isomorphic(
            &is_self_hedrite(&two_one()).unwrap().unwrap(),
            &bundle(2)
        ));
        // The medial of the cube (cuboctahedron) splits into cube and
        // octahedron, which are not isomorphic.
        assert!(is_self_hedrite(&cube().medial()).unwrap().is_none());
    }

    #[test]
    fn gc_1_0_is_octahedron() {
        let m = gc_octahedron(GcParams::new(1, 0).unwrap()).unwrap();
        assert!(is_isomorphic(&m, &octahedron()));
    }

    #[test]
    fn gc_1_1_is_cuboctahedron() {
        let m = gc_octahedron(GcParams::new(1, 1).unwrap()).unwrap();
        assert_eq!(m.vertex_count(), 12);
        assert!(is_isomorphic(&m, &octahedron().medial()));
        assert_eq!(classify(&m).unwrap(), PointGroup::Oh);
    }

    #[test]
    fn gc_vertex_counts_and_symmetry() {
        for k in 1..=3u32 {
            for l in 0..=k {
                let params = GcParams::new(k, l).unwrap();
                let m = gc_octahedron(params).unwrap();
                assert_eq!(m.vertex_count(), params.vertex_count());
                assert!(m.is_four_regular());
                let stats = m.face_stats();
                assert_eq!(stats.p_count(3), 8);
                assert_eq!(stats.defect(), 8);
                let sym = classify(&m).unwrap();
                if l == 0 || l == k {
                    assert_eq!(sym, PointGroup::Oh, "GC({k},{l})");
                } else {
                    assert_eq!(sym, PointGroup::O, "GC({k},{l})");
                }
            }
        }
    }

    #[test]
    fn gc_rejects_bad_params() {
        assert!(GcParams::new(0, 0).is_err());
        assert!(GcParams::new(1, 2).is_err());
    }

    #[test]
    fn gc_2_1_inverse_medial_is_t_symmetric() {
        let m = gc_octahedron(GcParams::new(2, 1).unwrap()).unwrap();
        assert_eq!(m.vertex_count(), 30);
        assert_eq!(classify(&m).unwrap(), PointGroup::O);
        let g = is_self_hedrite(&m).unwrap().expect("k+l odd gives a self-dual half");
        assert_eq!(g.vertex_count(), 16);
        assert_eq!(classify(&g).unwrap(), PointGroup::T);
        assert!(is_isomorphic(&g, &g.dual()));
    }

    #[test]
    fn gc_1_1_halves_are_not_self_dual() {
        // k+l even: the triangles all land in one checkerboard class.
        let m = gc_octahedron(GcParams::new(1, 1).unwrap()).unwrap();
        assert!(is_self_hedrite(&m).unwrap().is_none());
    }

    #[test]
    fn t_td_pipeline_small() {
        let out = t_td_pipeline(2).unwrap();
        // (1,0) and (2,1)
        assert_eq!(out.len(), 2);
        assert!(is_isomorphic(&out[0].1, &tetrahedron()));
        assert_eq!(classify(&out[0].1).unwrap(), PointGroup::Td);
        assert_eq!(out[1].1.vertex_count(), 16);
        assert_eq!(classify(&out[1].1).unwrap(), PointGroup::T);
    }

    #[test]
    fn simple_zigzag_self_hedrites_to_8() {
        let found = simple_zigzag_self_hedrites(8, 1).unwrap();
        // the irreducible members in range: Td@4, C3v@7, D2d@8
        let mut tagged: Vec<(usize, String)> = found
            .iter()
            .filter(|g| {
                crate::circuits::is_irreducible(&g.medial()).unwrap()
            })
            .map(|g| (g.vertex_count(), classify(g).unwrap().symbol()))
            .collect();
        tagged.sort();
        assert_eq!(
            tagged,
            vec![
                (4, "Td".to_string()),
                (7, "C3v".to_string()),
                (8, "D2d".to_string())
            ]
        );
        // every member's medial is an octahedrite with simple central circuits
        for g in &found {
            let med = g.medial();
            assert!(crate::circuits::central_circuits(&med).unwrap().all_simple());
        }
    }
}
