//! Exhaustive octahedrite generation by patch growing.
//!
//! A patch is a sphere map whose faces are either placed (sizes 3 and 4)
//! or holes still to be filled. Each search step picks the hole edge with
//! the smallest dart and tries every face that a completion could put
//! behind it: the face walk may run along the hole boundary, cut across it
//! through new edges, or pass through fresh vertices; touching the boundary
//! in several runs splits the hole. Partial patches are deduplicated by a
//! canonical bordered code (scan code restricted to hole roots, with hole
//! flags), which keeps the search tree isomorph-free without losing
//! completions.
//!
//! Two exact prunes carry the performance. Filling a hole with boundary
//! walk length B, distinct boundary vertices V and free vertex capacities
//! f_v forces exactly `4 + 3B - 4V + sum f_v` triangles once the shared
//! capacities are accounted, so the triangle budget of 8 fixes the total
//! over all holes. And octahedrites are simple with simple face boundaries,
//! so walks revisiting a vertex or doubling an edge are dead.

use std::collections::{BTreeMap, HashSet};
use std::sync::Mutex;

use sha2::{Digest, Sha256};

use crate::canon::CodeScan;
use crate::pmap::PlanarMap;

#[derive(Clone)]
struct Patch {
    rot: Vec<u32>,
    inv: Vec<u32>,
    twin: Vec<u32>,
    hole: Vec<bool>,
    vertex_of: Vec<u32>,
    degree: Vec<u8>,
    some_dart: Vec<u32>,
    tri: u8,
    quad: u16,
}

#[derive(Clone, Copy, Debug)]
enum Target {
    /// Land on the hole boundary at this cycle position (`m` closes the walk).
    Pos(usize),
    /// Land on a brand-new degree-2 vertex.
    Fresh,
}

#[derive(Clone, Copy, Debug)]
enum Step {
    /// Consume the next hole boundary dart.
    Glue,
    /// Insert a new edge to the target.
    Edge(Target),
}

impl Patch {
    fn triangle() -> Patch {
        Patch {
            rot: vec![1, 0, 3, 2, 5, 4],
            inv: vec![1, 0, 3, 2, 5, 4],
            twin: vec![5, 2, 1, 4, 3, 0],
            // face {0,4,2} is the placed triangle, {1,5,3} the hole
            hole: vec![false, true, false, true, false, true],
            vertex_of: vec![0, 0, 1, 1, 2, 2],
            degree: vec![2, 2, 2],
            some_dart: vec![0, 2, 4],
            tri: 1,
            quad: 0,
        }
    }

    fn face_next(&self, d: u32) -> u32 {
        self.rot[self.twin[d as usize] as usize]
    }

    fn hole_cycle(&self, start: u32) -> Vec<u32> {
        let mut cycle = vec![start];
        let mut cur = self.face_next(start);
        while cur != start {
            cycle.push(cur);
            cur = self.face_next(cur);
        }
        cycle
    }

    fn slot(&self) -> Option<u32> {
        self.hole.iter().position(|&h| h).map(|d| d as u32)
    }

    fn vertex_on_hole(&self, v: u32) -> bool {
        let start = self.some_dart[v as usize];
        let mut cur = start;
        loop {
            if self.hole[cur as usize] || self.hole[self.twin[cur as usize] as usize] {
                return true;
            }
            cur = self.rot[cur as usize];
            if cur == start {
                break;
            }
        }
        false
    }

    fn adjacent(&self, a: u32, b: u32) -> bool {
        let start = self.some_dart[a as usize];
        let mut cur = start;
        loop {
            if self.vertex_of[self.twin[cur as usize] as usize] == b {
                return true;
            }
            cur = self.rot[cur as usize];
            if cur == start {
                return false;
            }
        }
    }

    fn insert_after(&mut self, anchor: u32, new: u32) {
        let next = self.rot[anchor as usize];
        self.rot[anchor as usize] = new;
        self.rot[new as usize] = next;
        self.inv[next as usize] = new;
        self.inv[new as usize] = anchor;
    }

    /// Every face walk of length `s` that a completion could place behind
    /// hole edge `b[0]`, as step sequences.
    fn walks(&self, b: &[u32], s: usize, n_max: usize) -> Vec<Vec<Step>> {
        let m = b.len();
        let vertex_at = |pos: usize| self.vertex_of[b[pos % m] as usize];
        let mut out = Vec::new();
        let mut steps: Vec<Step> = vec![Step::Glue];
        // visited walk vertices; u32::MAX stands for fresh ones
        let mut visited: Vec<u32> = vec![vertex_at(0), vertex_at(1)];
        let mut added: Vec<(u32, u8)> = Vec::new();

        fn room(added: &[(u32, u8)], degree: &[u8], v: u32) -> bool {
            let extra: u8 = added.iter().filter(|&&(w, _)| w == v).map(|&(_, k)| k).sum();
            degree[v as usize] + extra < 4
        }

        #[allow(clippy::too_many_arguments)]
        fn recurse(
            patch: &Patch,
            b: &[u32],
            s: usize,
            n_max: usize,
            pos: usize,
            fresh_now: bool,
            fresh_total: usize,
            steps: &mut Vec<Step>,
            visited: &mut Vec<u32>,
            added: &mut Vec<(u32, u8)>,
            out: &mut Vec<Vec<Step>>,
        ) {
            let m = b.len();
            let used = steps.len();
            if used == s {
                if pos == m && !fresh_now {
                    out.push(steps.clone());
                }
                return;
            }
            if pos == m {
                // the walk is back at the start vertex; continuing would
                // make the face visit it twice
                return;
            }
            let vertex_at = |p: usize| patch.vertex_of[b[p % m] as usize];
            let cur_vertex = *visited.last().unwrap();
            let remaining = s - used;

            // Continue along the boundary.
            if !fresh_now && pos < m {
                let next_v = vertex_at(pos + 1);
                let revisit = pos + 1 < m && visited.contains(&next_v);
                if !revisit {
                    steps.push(Step::Glue);
                    visited.push(next_v);
                    recurse(
                        patch, b, s, n_max, pos + 1, false, fresh_total, steps, visited, added,
                        out,
                    );
                    visited.pop();
                    steps.pop();
                }
                // note: when pos+1 == m the walk has closed; next_v is v0
            }

            // Leave through a new edge, if the current vertex has capacity.
            let can_leave = fresh_now || room(added, &patch.degree, cur_vertex);
            if !can_leave {
                return;
            }
            // Jump to a later boundary position (m closes the walk).
            let first = if pos == 0 { 1 } else { pos + 1 };
            for t in first..=m {
                let closing = t == m;
                if closing && remaining != 1 {
                    continue;
                }
                if !closing && remaining < 2 {
                    continue;
                }
                let tv = vertex_at(t);
                if !closing && visited.contains(&tv) {
                    continue;
                }
                if !room(added, &patch.degree, tv) {
                    continue;
                }
                // a duplicate of an existing edge would make the map
                // non-simple, which no octahedrite is
                if !fresh_now && patch.adjacent(cur_vertex, tv) {
                    continue;
                }
                steps.push(Step::Edge(Target::Pos(t)));
                if !fresh_now {
                    added.push((cur_vertex, 1));
                }
                added.push((tv, 1));
                if !closing {
                    visited.push(tv);
                }
                recurse(
                    patch, b, s, n_max, t, false, fresh_total, steps, visited, added, out,
                );
                if !closing {
                    visited.pop();
                }
                added.pop();
                if !fresh_now {
                    added.pop();
                }
                steps.pop();
            }
            // Step onto a fresh vertex.
            if remaining >= 2 && patch.degree.len() + fresh_total + 1 <= n_max {
                steps.push(Step::Edge(Target::Fresh));
                if !fresh_now {
                    added.push((cur_vertex, 1));
                }
                visited.push(u32::MAX);
                recurse(
                    patch,
                    b,
                    s,
                    n_max,
                    pos,
                    true,
                    fresh_total + 1,
                    steps,
                    visited,
                    added,
                    out,
                );
                visited.pop();
                if !fresh_now {
                    added.pop();
                }
                steps.pop();
            }
        }

        recurse(
            self,
            b,
            s,
            n_max,
            1,
            false,
            0,
            &mut steps,
            &mut visited,
            &mut added,
            &mut out,
        );
        out
    }

    /// Applies one face placement; returns the grown patch unless a prune
    /// shows it cannot complete within the budgets.
    fn apply(&self, b: &[u32], s: usize, walk: &[Step], n_max: usize) -> Option<Patch> {
        let mut p = self.clone();
        let m = b.len();
        if s == 3 {
            p.tri += 1;
        } else {
            p.quad += 1;
        }

        let mut pos = 1usize;
        let mut anchor = p.twin[b[0] as usize];
        let mut cur_vertex = p.vertex_of[b[1 % m] as usize];
        let mut new_darts: Vec<u32> = Vec::new();
        for step in &walk[1..] {
            match *step {
                Step::Glue => {
                    pos += 1;
                    anchor = p.twin[b[pos - 1] as usize];
                    cur_vertex = p.vertex_of[b[pos % m] as usize];
                }
                Step::Edge(target) => {
                    let out_dart = p.rot.len() as u32;
                    let in_dart = out_dart + 1;
                    p.rot.extend_from_slice(&[0, 0]);
                    p.inv.extend_from_slice(&[0, 0]);
                    p.twin.extend_from_slice(&[in_dart, out_dart]);
                    p.hole.extend_from_slice(&[true, true]);
                    p.vertex_of.extend_from_slice(&[cur_vertex, 0]);
                    p.insert_after(anchor, out_dart);
                    p.degree[cur_vertex as usize] += 1;
                    match target {
                        Target::Pos(t) => {
                            let tv = p.vertex_of[b[t % m] as usize];
                            // land immediately before the boundary dart
                            let pre = p.inv[b[t % m] as usize];
                            p.insert_after(pre, in_dart);
                            p.vertex_of[in_dart as usize] = tv;
                            p.degree[tv as usize] += 1;
                            pos = t;
                            cur_vertex = tv;
                        }
                        Target::Fresh => {
                            let v = p.degree.len() as u32;
                            p.degree.push(1);
                            p.some_dart.push(in_dart);
                            p.vertex_of[in_dart as usize] = v;
                            p.rot[in_dart as usize] = in_dart;
                            p.inv[in_dart as usize] = in_dart;
                            cur_vertex = v;
                        }
                    }
                    anchor = in_dart;
                    new_darts.push(out_dart);
                    new_darts.push(in_dart);
                }
            }
        }

        // Retag the faces covering the old hole region.
        let mut pending: Vec<u32> = b.to_vec();
        pending.extend_from_slice(&new_darts);
        let mut seen: HashSet<u32> = HashSet::new();
        let mut hole_sizes: Vec<usize> = Vec::new();
        let mut face_len = 0usize;
        for &d in &pending.clone() {
            if seen.contains(&d) {
                continue;
            }
            let mut orbit = Vec::new();
            let mut cur = d;
            loop {
                orbit.push(cur);
                seen.insert(cur);
                cur = p.face_next(cur);
                if cur == d {
                    break;
                }
            }
            let is_new_face = orbit.contains(&b[0]);
            for &x in &orbit {
                p.hole[x as usize] = !is_new_face;
            }
            if is_new_face {
                face_len = orbit.len();
            } else {
                if orbit.len() < 3 {
                    return None;
                }
                hole_sizes.push(orbit.len());
            }
        }
        debug_assert_eq!(face_len, s, "face walk length mismatch");

        // Vertices that left every hole must have reached degree 4.
        let mut boundary_vertices: Vec<u32> = b.iter().map(|&d| p.vertex_of[d as usize]).collect();
        for &d in &new_darts {
            boundary_vertices.push(p.vertex_of[d as usize]);
        }
        boundary_vertices.sort_unstable();
        boundary_vertices.dedup();
        for &v in &boundary_vertices {
            if p.degree[v as usize] < 4 && !p.vertex_on_hole(v) {
                return None;
            }
        }

        if p.quad as usize > n_max.saturating_sub(6) || p.degree.len() > n_max {
            return None;
        }

        // The triangles still needed are forced exactly by the hole
        // boundaries; mismatch with the budget of 8 kills the branch.
        if p.tri as i64 + p.forced_triangles() != 8 {
            return None;
        }

        Some(p)
    }

    /// `sum over holes of (4 + 3B - 4V)` plus the free capacity of every
    /// hole vertex: the exact number of triangles all fillings will use.
    fn forced_triangles(&self) -> i64 {
        let mut total: i64 = 0;
        let mut seen = vec![false; self.rot.len()];
        let mut hole_vertices: HashSet<u32> = HashSet::new();
        for d0 in 0..self.rot.len() as u32 {
            if !self.hole[d0 as usize] || seen[d0 as usize] {
                continue;
            }
            let mut b = 0i64;
            let mut verts: HashSet<u32> = HashSet::new();
            let mut cur = d0;
            loop {
                seen[cur as usize] = true;
                b += 1;
                verts.insert(self.vertex_of[cur as usize]);
                cur = self.face_next(cur);
                if cur == d0 {
                    break;
                }
            }
            total += 4 + 3 * b - 4 * verts.len() as i64;
            hole_vertices.extend(verts);
        }
        for &v in &hole_vertices {
            total += 4 - self.degree[v as usize] as i64;
        }
        total
    }

    fn code_key(&self) -> [u8; 16] {
        let roots: Vec<u32> = (0..self.rot.len() as u32)
            .filter(|&d| self.hole[d as usize])
            .collect();
        let mut scan = CodeScan::new(&self.rot, &self.inv, &self.twin);
        let hole = &self.hole;
        let flag = |d: u32| hole[d as usize] as u32;
        let (code, _) = scan.minimize(&roots, Some(&flag));
        let mut hasher = Sha256::new();
        for v in &code {
            hasher.update(v.to_le_bytes());
        }
        let digest = hasher.finalize();
        let mut key = [0u8; 16];
        key.copy_from_slice(&digest[..16]);
        key
    }
}

struct ShardedSet {
    shards: Vec<Mutex<HashSet<[u8; 16]>>>,
}

impl ShardedSet {
    fn new() -> Self {
        ShardedSet {
            shards: (0..64).map(|_| Mutex::new(HashSet::new())).collect(),
        }
    }

    fn insert(&self, key: [u8; 16]) -> bool {
        self.shards[key[0] as usize % 64].lock().unwrap().insert(key)
    }
}

/// All octahedrites with at most `n_max` vertices, one canonical
/// representative per isomorphism class, keyed by canonical code.
pub(crate) fn grow_octahedrites(n_max: usize, jobs: usize) -> BTreeMap<Vec<u32>, PlanarMap> {
    let memo = ShardedSet::new();
    let results: Mutex<BTreeMap<Vec<u32>, PlanarMap>> = Mutex::new(BTreeMap::new());

    // Breadth-first warmup to get enough independent subtrees.
    let seed = Patch::triangle();
    memo.insert(seed.code_key());
    let mut frontier = vec![seed];
    let want = 16 * jobs.max(1);
    while frontier.len() < want {
        let mut next = Vec::new();
        let mut advanced = false;
        for patch in frontier.drain(..) {
            match expand_once(&patch, n_max, &memo, &results) {
                Some(children) => {
                    advanced = advanced || !children.is_empty();
                    next.extend(children);
                }
                None => {}
            }
        }
        frontier = next;
        if !advanced || frontier.is_empty() {
            break;
        }
    }

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .expect("thread pool");
    pool.install(|| {
        use rayon::prelude::*;
        frontier.par_iter().for_each(|patch| {
            let mut stack = vec![patch.clone()];
            while let Some(p) = stack.pop() {
                if let Some(children) = expand_once(&p, n_max, &memo, &results) {
                    stack.extend(children);
                }
            }
        });
    });

    results.into_inner().unwrap()
}

/// Expands one patch by a single face placement in every legal way;
/// completed maps go straight to `results`.
fn expand_once(
    patch: &Patch,
    n_max: usize,
    memo: &ShardedSet,
    results: &Mutex<BTreeMap<Vec<u32>, PlanarMap>>,
) -> Option<Vec<Patch>> {
    let slot = match patch.slot() {
        Some(s) => s,
        None => {
            finalize(patch, results);
            return None;
        }
    };
    let b = patch.hole_cycle(slot);
    let mut children = Vec::new();
    let mut sizes = Vec::new();
    if patch.tri < 8 {
        sizes.push(3);
    }
    if (patch.quad as usize) < n_max.saturating_sub(6) {
        sizes.push(4);
    }
    for s in sizes {
        for walk in patch.walks(&b, s, n_max) {
            if let Some(child) = patch.apply(&b, s, &walk, n_max) {
                if child.slot().is_none() {
                    finalize(&child, results);
                } else if memo.insert(child.code_key()) {
                    children.push(child);
                }
            }
        }
    }
    Some(children)
}

fn finalize(patch: &Patch, results: &Mutex<BTreeMap<Vec<u32>, PlanarMap>>) {
    let m = match PlanarMap::from_permutations(patch.rot.clone(), patch.twin.clone()) {
        Ok(m) => m,
        Err(_) => {
            debug_assert!(false, "completed patch failed validation");
            return;
        }
    };
    if !m.is_four_regular() {
        return;
    }
    let stats = m.face_stats();
    if stats.p_count(3) != 8 || stats.p.keys().any(|&s| s != 3 && s != 4) {
        return;
    }
    let canon = m.canonical_form();
    let code = canon.canonical_code().code;
    results.lock().unwrap().entry(code).or_insert(canon);
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_patch_invariants() {
        let p = Patch::triangle();
        assert_eq!(p.forced_triangles(), 7);
        assert_eq!(p.hole_cycle(p.slot().unwrap()).len(), 3);
    }

    #[test]
    fn small_octahedrite_counts() {
        let all = grow_octahedrites(10, 1);
        let mut by_n: BTreeMap<usize, usize> = BTreeMap::new();
        for m in all.values() {
            *by_n.entry(m.vertex_count()).or_insert(0) += 1;
        }
        assert_eq!(by_n.get(&6), Some(&1));
        assert_eq!(by_n.get(&7), None);
        assert_eq!(by_n.get(&8), Some(&1));
        assert_eq!(by_n.get(&9), Some(&1));
        assert_eq!(by_n.get(&10), Some(&2));
    }

    #[test]
    fn the_unique_6_vertex_octahedrite_is_the_octahedron() {
        let all = grow_octahedrites(6, 1);
        assert_eq!(all.len(), 1);
        let m = all.values().next().unwrap();
        assert!(crate::canon::is_isomorphic(m, &crate::pmap::fixtures::octahedron()));
    }
}
