//! Plane combinatorial maps encoded as a dart rotation system.
//!
//! A map on the sphere is a pair of permutations of the darts `0..dart_count`:
//! the fixed-point-free edge involution `twin` pairing the two darts of every
//! edge, and the vertex rotation `rot` sending a dart to the next dart
//! counterclockwise around its vertex. Faces are the orbits of the composite
//! `d -> rot(twin(d))` (edge involution first, then vertex rotation); this is
//! the single face convention used everywhere in the crate. The Euler count
//! `V - E + F = 2` is enforced at construction, so every `PlanarMap` value is
//! a genus-0 embedding of a connected multigraph.

use crate::error::{Error, Result};

/// An immutable, validated plane map.
///
/// Vertices and faces are identified by the dense ids `0..vertex_count` and
/// `0..face_count`, numbered by the smallest dart of each orbit.
#[derive(Clone, Debug)]
pub struct PlanarMap {
    rot: Vec<u32>,
    inv_rot: Vec<u32>,
    twin: Vec<u32>,
    vertex_of: Vec<u32>,
    face_of: Vec<u32>,
    vertex_count: usize,
    face_count: usize,
}

impl PlanarMap {
    /// Builds a map from raw permutations and checks every invariant.
    pub fn from_permutations(rot: Vec<u32>, twin: Vec<u32>) -> Result<PlanarMap> {
        let n = rot.len();
        if n % 2 != 0 {
            return Err(Error::OddDartCount(n));
        }
        if twin.len() != n {
            return Err(Error::NotInvolution(twin.len() as u32));
        }
        for d in 0..n {
            let t = twin[d] as usize;
            if t >= n || t == d || twin[t] as usize != d {
                return Err(Error::NotInvolution(d as u32));
            }
        }
        let mut seen = vec![false; n];
        for d in 0..n {
            let r = rot[d] as usize;
            if r >= n || seen[r] {
                return Err(Error::NotPermutation(d as u32));
            }
            seen[r] = true;
        }
        let mut inv_rot = vec![0u32; n];
        for d in 0..n {
            inv_rot[rot[d] as usize] = d as u32;
        }

        let (vertex_of, vertex_count) = orbit_ids(n, |d| rot[d] as usize);
        let face_of_fn = |d: usize| rot[twin[d] as usize] as usize;
        let (face_of, face_count) = orbit_ids(n, face_of_fn);

        // Connectivity of the dart action generated by rot and twin.
        if n > 0 {
            let mut reach = vec![false; n];
            let mut stack = vec![0usize];
            reach[0] = true;
            let mut count = 1usize;
            while let Some(d) = stack.pop() {
                for next in [rot[d] as usize, twin[d] as usize] {
                    if !reach[next] {
                        reach[next] = true;
                        count += 1;
                        stack.push(next);
                    }
                }
            }
            if count != n {
                return Err(Error::Disconnected);
            }
        }

        let euler = vertex_count as i64 - (n / 2) as i64 + face_count as i64;
        if euler != 2 {
            return Err(Error::NonzeroGenus((2 - euler) / 2));
        }

        Ok(PlanarMap {
            rot,
            inv_rot,
            twin,
            vertex_of,
            face_of,
            vertex_count,
            face_count,
        })
    }

    /// Assembles a map from per-vertex counterclockwise dart lists and an
    /// edge pairing given as `pairing[d] = twin of d`.
    pub fn build(rotation_lists: &[Vec<u32>], pairing: &[u32]) -> Result<PlanarMap> {
        let n: usize = rotation_lists.iter().map(|l| l.len()).sum();
        let mut rot = vec![u32::MAX; n];
        for list in rotation_lists {
            for (i, &d) in list.iter().enumerate() {
                if d as usize >= n || rot[d as usize] != u32::MAX {
                    return Err(Error::NotPermutation(d));
                }
                rot[d as usize] = list[(i + 1) % list.len()];
            }
        }
        // A dart missing from every list leaves a MAX hole that the
        // permutation check would report confusingly; catch it here.
        if let Some(d) = rot.iter().position(|&x| x == u32::MAX) {
            return Err(Error::NotPermutation(d as u32));
        }
        PlanarMap::from_permutations(rot, pairing.to_vec())
    }

    pub fn dart_count(&self) -> usize {
        self.rot.len()
    }

    pub fn edge_count(&self) -> usize {
        self.rot.len() / 2
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn face_count(&self) -> usize {
        self.face_count
    }

    /// Next dart counterclockwise around the vertex of `d`.
    pub fn rot(&self, d: u32) -> u32 {
        self.rot[d as usize]
    }

    /// Next dart clockwise around the vertex of `d`.
    pub fn rot_inv(&self, d: u32) -> u32 {
        self.inv_rot[d as usize]
    }

    /// The other dart of the edge of `d`.
    pub fn twin(&self, d: u32) -> u32 {
        self.twin[d as usize]
    }

    /// Next dart along the face of `d` (twin, then rotation).
    pub fn face_next(&self, d: u32) -> u32 {
        self.rot[self.twin[d as usize] as usize]
    }

    pub fn vertex_of(&self, d: u32) -> u32 {
        self.vertex_of[d as usize]
    }

    pub fn face_of(&self, d: u32) -> u32 {
        self.face_of[d as usize]
    }

    /// Face owning the corner between `d` and `rot(d)` at the vertex of `d`.
    pub fn face_of_corner(&self, d: u32) -> u32 {
        self.face_of[self.twin[d as usize] as usize]
    }

    /// Edge id of `d`: the smaller dart of the pair.
    pub fn edge_of(&self, d: u32) -> u32 {
        d.min(self.twin(d))
    }

    pub fn degree(&self, v: u32) -> usize {
        self.vertex_darts(v).count()
    }

    pub fn face_size(&self, f: u32) -> usize {
        self.face_darts(f).count()
    }

    /// One dart per vertex, the smallest.
    pub fn vertex_first_darts(&self) -> Vec<u32> {
        first_darts(&self.vertex_of, self.vertex_count)
    }

    /// One dart per face, the smallest.
    pub fn face_first_darts(&self) -> Vec<u32> {
        first_darts(&self.face_of, self.face_count)
    }

    /// Darts around vertex `v` in counterclockwise order from the smallest.
    pub fn vertex_darts(&self, v: u32) -> OrbitIter<'_> {
        let start = self.vertex_first_darts()[v as usize];
        OrbitIter::new(&self.rot, start)
    }

    /// Darts along face `f` in traversal order from the smallest.
    pub fn face_darts(&self, f: u32) -> OrbitIter<'_> {
        let start = self.face_first_darts()[f as usize];
        OrbitIter::owned_face(self, start)
    }

    /// Dart cycle of the face containing `d`, starting at `d`.
    pub fn face_cycle_from(&self, d: u32) -> Vec<u32> {
        let mut cycle = vec![d];
        let mut cur = self.face_next(d);
        while cur != d {
            cycle.push(cur);
            cur = self.face_next(cur);
        }
        cycle
    }

    /// True when some edge joins a vertex to itself.
    pub fn has_loop(&self) -> bool {
        (0..self.dart_count() as u32).any(|d| self.vertex_of(d) == self.vertex_of(self.twin(d)))
    }

    /// True when two edges share both endpoints (loops count as well).
    pub fn has_multi_edge(&self) -> bool {
        let mut pairs: Vec<(u32, u32)> = (0..self.dart_count() as u32)
            .filter(|&d| d < self.twin(d))
            .map(|d| {
                let a = self.vertex_of(d);
                let b = self.vertex_of(self.twin(d));
                (a.min(b), a.max(b))
            })
            .collect();
        let before = pairs.len();
        pairs.sort_unstable();
        pairs.dedup();
        pairs.len() != before || pairs.iter().any(|&(a, b)| a == b)
    }

    /// Histogram of face sizes and vertex degrees.
    pub fn face_stats(&self) -> FaceStats {
        let mut p = std::collections::BTreeMap::new();
        for f in 0..self.face_count as u32 {
            *p.entry(self.face_size(f)).or_insert(0usize) += 1;
        }
        let mut v = std::collections::BTreeMap::new();
        for w in 0..self.vertex_count as u32 {
            *v.entry(self.degree(w)).or_insert(0usize) += 1;
        }
        FaceStats { p, v }
    }

    pub fn is_four_regular(&self) -> bool {
        (0..self.vertex_count as u32).all(|v| self.degree(v) == 4)
    }

    /// Rejects the map unless every vertex has degree 4.
    pub fn require_four_regular(&self) -> Result<()> {
        for v in 0..self.vertex_count as u32 {
            let d = self.degree(v);
            if d != 4 {
                return Err(Error::NotFourRegular(v, d));
            }
        }
        Ok(())
    }

    /// The dual map: faces become vertices and vice versa. Applying it twice
    /// returns the original permutations exactly.
    pub fn dual(&self) -> PlanarMap {
        let n = self.dart_count();
        let mut rot = vec![0u32; n];
        for d in 0..n as u32 {
            rot[d as usize] = self.face_next(d);
        }
        PlanarMap::from_permutations(rot, self.twin.clone())
            .expect("dual of a valid map is valid")
    }

    /// The medial map: one vertex per edge, 4-regular, with one face per face
    /// of the original interleaved with one face per original vertex.
    ///
    /// Dart `2d` of the medial runs from the midpoint of `edge(d)` into the
    /// corner between `d` and `rot(d)`; dart `2d+1` is its twin.
    pub fn medial(&self) -> PlanarMap {
        let n = self.dart_count();
        let mut rot = vec![0u32; 2 * n];
        let mut twin = vec![0u32; 2 * n];
        for d in 0..n as u32 {
            rot[2 * d as usize] = 2 * self.rot_inv(d) + 1;
            rot[2 * d as usize + 1] = 2 * self.twin(self.rot(d));
            twin[2 * d as usize] = 2 * d + 1;
            twin[2 * d as usize + 1] = 2 * d;
        }
        PlanarMap::from_permutations(rot, twin).expect("medial of a valid map is valid")
    }

    /// Brute-force 3-connectivity of the underlying graph. Multigraphs and
    /// maps with fewer than 4 vertices are not 3-connected by convention.
    pub fn is_three_connected(&self) -> bool {
        let n = self.vertex_count;
        if n < 4 || self.has_multi_edge() {
            return false;
        }
        let mut adj = vec![Vec::new(); n];
        for d in 0..self.dart_count() as u32 {
            adj[self.vertex_of(d) as usize].push(self.vertex_of(self.twin(d)) as usize);
        }
        for a in 0..n {
            for b in a + 1..n {
                if !connected_without(&adj, n, a, b) {
                    return false;
                }
            }
        }
        true
    }

    /// Relabels the darts by `perm` (dart `d` becomes `perm[d]`), producing
    /// an isomorphic map.
    pub fn relabeled(&self, perm: &[u32]) -> PlanarMap {
        let n = self.dart_count();
        assert_eq!(perm.len(), n);
        let mut rot = vec![0u32; n];
        let mut twin = vec![0u32; n];
        for d in 0..n {
            rot[perm[d] as usize] = perm[self.rot[d] as usize];
            twin[perm[d] as usize] = perm[self.twin[d] as usize];
        }
        PlanarMap::from_permutations(rot, twin).expect("relabeling preserves validity")
    }

    /// The mirror image: same edges, reversed rotation at every vertex.
    pub fn mirrored(&self) -> PlanarMap {
        PlanarMap::from_permutations(self.inv_rot.clone(), self.twin.clone())
            .expect("mirror of a valid map is valid")
    }

    pub(crate) fn rot_slice(&self) -> &[u32] {
        &self.rot
    }

    pub(crate) fn twin_slice(&self) -> &[u32] {
        &self.twin
    }
}

fn connected_without(adj: &[Vec<usize>], n: usize, a: usize, b: usize) -> bool {
    let mut seen = vec![false; n];
    seen[a] = true;
    seen[b] = true;
    let start = match (0..n).find(|&v| !seen[v]) {
        Some(v) => v,
        None => return true,
    };
    let mut stack = vec![start];
    seen[start] = true;
    let mut reached = 1;
    while let Some(v) = stack.pop() {
        for &w in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                reached += 1;
                stack.push(w);
            }
        }
    }
    reached == n - 2
}

fn orbit_ids(n: usize, next: impl Fn(usize) -> usize) -> (Vec<u32>, usize) {
    let mut ids = vec![u32::MAX; n];
    let mut count = 0usize;
    for d in 0..n {
        if ids[d] != u32::MAX {
            continue;
        }
        let mut cur = d;
        loop {
            ids[cur] = count as u32;
            cur = next(cur);
            if cur == d {
                break;
            }
        }
        count += 1;
    }
    (ids, count)
}

fn first_darts(ids: &[u32], count: usize) -> Vec<u32> {
    let mut first = vec![u32::MAX; count];
    for (d, &id) in ids.iter().enumerate() {
        if first[id as usize] == u32::MAX {
            first[id as usize] = d as u32;
        }
    }
    first
}

/// Iterator over a rotation or face orbit.
pub struct OrbitIter<'a> {
    rot: Option<&'a [u32]>,
    map: Option<&'a PlanarMap>,
    start: u32,
    cur: Option<u32>,
}

impl<'a> OrbitIter<'a> {
    fn new(rot: &'a [u32], start: u32) -> Self {
        OrbitIter {
            rot: Some(rot),
            map: None,
            start,
            cur: Some(start),
        }
    }

    fn owned_face(map: &'a PlanarMap, start: u32) -> Self {
        OrbitIter {
            rot: None,
            map: Some(map),
            start,
            cur: Some(start),
        }
    }
}

impl Iterator for OrbitIter<'_> {
    type Item = u32;

    fn next(&mut self) -> Option<u32> {
        let cur = self.cur?;
        let next = match (self.rot, self.map) {
            (Some(rot), _) => rot[cur as usize],
            (None, Some(map)) => map.face_next(cur),
            _ => unreachable!(),
        };
        self.cur = if next == self.start { None } else { Some(next) };
        Some(cur)
    }
}

/// Face-size and vertex-degree histograms of a map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceStats {
    /// face size -> number of faces of that size
    pub p: std::collections::BTreeMap<usize, usize>,
    /// vertex degree -> number of vertices of that degree
    pub v: std::collections::BTreeMap<usize, usize>,
}

impl FaceStats {
    pub fn p_count(&self, size: usize) -> usize {
        self.p.get(&size).copied().unwrap_or(0)
    }

    pub fn v_count(&self, degree: usize) -> usize {
        self.v.get(&degree).copied().unwrap_or(0)
    }

    /// The curvature sum `sum_j (4 - j) p_j`, which equals 8 for every
    /// 4-regular sphere map and 4 for every self-dual one.
    pub fn defect(&self) -> i64 {
        self.p
            .iter()
            .map(|(&size, &count)| (4 - size as i64) * count as i64)
            .sum()
    }
}

/// Reference maps used across the crate and its tests.
pub mod fixtures {
    use super::PlanarMap;

    /// The octahedron: 6 vertices, 12 edges, 8 triangles.
    pub fn octahedron() -> PlanarMap {
        // Vertices: 0 top, 5 bottom, 1..4 equator. Darts 4v..4v+3, with the
        // counterclockwise order taken as seen from outside the sphere.
        // Slots per equator vertex i: 4i+0 to top, 4i+1 to the next equator
        // vertex, 4i+2 to bottom, 4i+3 to the previous one; the ccw cycle is
        // [top, prev, bottom, next].
        let rotation_lists: Vec<Vec<u32>> = vec![
            vec![0, 1, 2, 3],
            vec![4, 7, 6, 5],
            vec![8, 11, 10, 9],
            vec![12, 15, 14, 13],
            vec![16, 19, 18, 17],
            vec![20, 21, 22, 23],
        ];
        let mut pairing = vec![0u32; 24];
        let mut pair = |a: u32, b: u32| {
            pairing[a as usize] = b;
            pairing[b as usize] = a;
        };
        // top (vertex 0) to equator 1..4
        pair(0, 4);
        pair(1, 8);
        pair(2, 12);
        pair(3, 16);
        // equator ring: slot 1 of e_i to slot 3 of e_{i-1}
        pair(5, 11);
        pair(9, 15);
        pair(13, 19);
        pair(17, 7);
        // bottom (vertex 5) to equator, slot 2 of each equator vertex;
        // seen from below the ccw order of the equator reverses.
        pair(20, 6);
        pair(21, 18);
        pair(22, 14);
        pair(23, 10);
        PlanarMap::build(&rotation_lists, &pairing).expect("octahedron fixture")
    }

    /// The tetrahedron: 4 vertices, 6 edges, 4 triangles.
    pub fn tetrahedron() -> PlanarMap {
        let rotation_lists: Vec<Vec<u32>> = vec![
            vec![0, 1, 2],
            vec![3, 4, 5],
            vec![6, 7, 8],
            vec![9, 10, 11],
        ];
        // 0: [to1,to2,to3]; 1: [to0,to3,to2]; 2: [to0,to1,to3]; 3: [to0,to2,to1]
        let pairing = vec![3, 6, 9, 0, 11, 7, 1, 5, 10, 2, 8, 4];
        PlanarMap::build(&rotation_lists, &pairing).expect("tetrahedron fixture")
    }

    /// `Bundle_k`: two vertices joined by `k` parallel edges.
    pub fn bundle(k: usize) -> PlanarMap {
        assert!(k >= 2);
        let rotation_lists: Vec<Vec<u32>> = vec![
            (0..k as u32).collect(),
            (k as u32..2 * k as u32).rev().collect(),
        ];
        let pairing: Vec<u32> = (0..2 * k as u32)
            .map(|d| if d < k as u32 { d + k as u32 } else { d - k as u32 })
            .collect();
        PlanarMap::build(&rotation_lists, &pairing).expect("bundle fixture")
    }

    /// The graph `2_1`: two vertices joined by four parallel edges, the
    /// unique map whose four faces are all 2-gons.
    pub fn two_one() -> PlanarMap {
        bundle(4)
    }

    /// The cube, realized as the dual of the octahedron.
    pub fn cube() -> PlanarMap {
        octahedron().dual()
    }
}

#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;
    use crate::error::Error;

    #[test]
    fn octahedron_counts() {
        let m = octahedron();
        assert_eq!(m.vertex_count(), 6);
        assert_eq!(m.edge_count(), 12);
        assert_eq!(m.face_count(), 8);
        let stats = m.face_stats();
        assert_eq!(stats.p_count(3), 8);
        assert_eq!(stats.p_count(4), 0);
        assert_eq!(stats.v_count(4), 6);
        assert_eq!(stats.defect(), 8);
    }

    #[test]
    fn two_one_counts() {
        let m = two_one();
        assert_eq!(m.vertex_count(), 2);
        assert_eq!(m.edge_count(), 4);
        assert_eq!(m.face_count(), 4);
        let stats = m.face_stats();
        assert_eq!(stats.p_count(2), 4);
        assert_eq!(stats.v_count(4), 2);
        assert_eq!(2 * stats.p_count(2) + stats.p_count(3), 8);
    }

    #[test]
    fn tetrahedron_counts() {
        let m = tetrahedron();
        assert_eq!(m.vertex_count(), 4);
        assert_eq!(m.face_count(), 4);
        let stats = m.face_stats();
        assert_eq!(stats.p_count(3), 4);
        assert_eq!(stats.v_count(3), 4);
        assert_eq!(stats.defect(), 4);
    }

    #[test]
    fn build_rejects_fixed_point_pairing() {
        let rotation_lists: Vec<Vec<u32>> = vec![vec![0, 1], vec![2, 3]];
        // dart 0 paired with itself
        let pairing = vec![0, 3, 2, 1];
        match PlanarMap::build(&rotation_lists, &pairing) {
            Err(Error::NotInvolution(_)) => {}
            other => panic!("expected involution error, got {other:?}"),
        }
    }

    #[test]
    fn build_rejects_disconnected() {
        // two separate bundles
        let rotation_lists: Vec<Vec<u32>> = vec![
            vec![0, 1],
            vec![2, 3],
            vec![4, 5],
            vec![6, 7],
        ];
        let pairing = vec![2, 3, 0, 1, 6, 7, 4, 5];
        match PlanarMap::build(&rotation_lists, &pairing) {
            Err(Error::Disconnected) => {}
            other => panic!("expected disconnected error, got {other:?}"),
        }
    }

    #[test]
    fn build_rejects_torus() {
        // K4 with all rotations equal is not planar (genus 1).
        let rotation_lists: Vec<Vec<u32>> = vec![
            vec![0, 1, 2],
            vec![3, 4, 5],
            vec![6, 7, 8],
            vec![9, 10, 11],
        ];
        // 0: [to1,to2,to3]; 1: [to0,to2,to3]; 2: [to0,to1,to3]; 3: [to0,to1,to2]
        let pairing = vec![3, 6, 9, 0, 7, 10, 1, 4, 11, 2, 5, 8];
        match PlanarMap::build(&rotation_lists, &pairing) {
            Err(Error::NonzeroGenus(_)) => {}
            other => panic!("expected genus error, got {other:?}"),
        }
    }

    #[test]
    fn dual_octahedron_is_cube() {
        let c = octahedron().dual();
        assert_eq!(c.vertex_count(), 8);
        assert_eq!(c.face_count(), 6);
        let stats = c.face_stats();
        assert_eq!(stats.p_count(4), 6);
        assert_eq!(stats.v_count(3), 8);
    }

    #[test]
    fn dual_is_involutive_on_the_nose() {
        for m in [octahedron(), tetrahedron(), two_one(), bundle(2)] {
            let dd = m.dual().dual();
            assert_eq!(dd.rot_slice(), m.rot_slice());
            assert_eq!(dd.twin_slice(), m.twin_slice());
        }
    }

    #[test]
    fn dual_of_two_one_is_a_four_cycle() {
        let d = two_one().dual();
        assert_eq!(d.vertex_count(), 4);
        assert_eq!(d.edge_count(), 4);
        let stats = d.face_stats();
        assert_eq!(stats.v_count(2), 4);
        assert_eq!(stats.p_count(4), 2);
    }

    #[test]
    fn medial_vertex_count_is_edge_count() {
        for m in [octahedron(), tetrahedron(), two_one(), bundle(2), cube()] {
            let med = m.medial();
            assert_eq!(med.vertex_count(), m.edge_count());
            assert!(med.is_four_regular());
        }
    }

    #[test]
    fn medial_of_bundle2_is_two_one() {
        let med = bundle(2).medial();
        assert_eq!(med.vertex_count(), 2);
        let stats = med.face_stats();
        assert_eq!(stats.p_count(2), 4);
    }

    #[test]
    fn medial_of_tetrahedron_matches_octahedron_stats() {
        let med = tetrahedron().medial();
        assert_eq!(med.vertex_count(), 6);
        let stats = med.face_stats();
        assert_eq!(stats.p_count(3), 8);
        assert!(med.is_three_connected());
    }

    #[test]
    fn three_connectivity() {
        assert!(octahedron().is_three_connected());
        assert!(tetrahedron().is_three_connected());
        assert!(!two_one().is_three_connected());
        assert!(!cube().dual().has_multi_edge());
    }

    #[test]
    fn loops_and_multi_edges_detected() {
        assert!(two_one().has_multi_edge());
        assert!(!two_one().has_loop());
        assert!(!octahedron().has_multi_edge());
    }
}
