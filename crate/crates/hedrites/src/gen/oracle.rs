//! Brute-force cross-check generator.
//!
//! A second exhaustive search over the same classes, kept deliberately
//! different from the production path: plain depth-first gluing from the
//! highest open boundary dart, no isomorph rejection of partial states, no
//! curvature accounting, 2-gonal faces allowed, and every completed map
//! validated from scratch. Exponential, hence capped at 12 substrate
//! vertices; it exists to disagree loudly when the fast generators are
//! wrong.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::pmap::PlanarMap;

use super::{GenerationRun, GraphClass};

const ORACLE_CAP: usize = 12;

/// Exhaustive reference enumeration of a class, capped at 12 vertices of
/// the underlying 4-regular search (so self-hedrites reach `n <= 7`).
pub fn oracle_generate(class: GraphClass, n_max: usize) -> Result<GenerationRun> {
    match class {
        GraphClass::Octahedrite | GraphClass::Ihedrite(_) => {
            if n_max > ORACLE_CAP {
                return Err(Error::OracleTooLarge {
                    max: ORACLE_CAP,
                    got: n_max,
                });
            }
            let (p2, p3) = class.p2_p3();
            let maps = glue_search(p2, p3, n_max);
            let kept: Vec<PlanarMap> = maps
                .into_values()
                .filter(|m| class.matches(m) && m.vertex_count() <= n_max)
                .collect();
            Ok(collect(class, n_max, kept))
        }
        GraphClass::SelfHedrite(i) => {
            let substrate = 2 * n_max - 2;
            if substrate > ORACLE_CAP {
                return Err(Error::OracleTooLarge {
                    max: (ORACLE_CAP + 2) / 2,
                    got: n_max,
                });
            }
            let (p2, p3) = GraphClass::Ihedrite(2 * i).p2_p3();
            let maps = glue_search(p2, p3, substrate);
            let mut found: BTreeMap<Vec<u32>, PlanarMap> = BTreeMap::new();
            for m in maps.values() {
                if !GraphClass::Ihedrite(2 * i).matches(m) {
                    continue;
                }
                if let Some(g) = crate::selfdual::is_self_hedrite(m)? {
                    let canon = g.canonical_form();
                    if class.matches(&canon) && canon.vertex_count() <= n_max {
                        found.entry(canon.canonical_code().code).or_insert(canon);
                    }
                }
            }
            Ok(collect(class, n_max, found.into_values().collect()))
        }
    }
}

fn collect(class: GraphClass, n_max: usize, maps: Vec<PlanarMap>) -> GenerationRun {
    let mut by_n: BTreeMap<usize, Vec<PlanarMap>> = BTreeMap::new();
    for m in maps {
        by_n.entry(m.vertex_count()).or_default().push(m);
    }
    for v in by_n.values_mut() {
        v.sort_by(|a, b| a.canonical_code().cmp(&b.canonical_code()));
    }
    GenerationRun { class, n_max, by_n }
}

#[derive(Clone)]
struct State {
    rot: Vec<u32>,
    inv: Vec<u32>,
    twin: Vec<u32>,
    vert: Vec<u32>,
    open: Vec<bool>,
    deg: Vec<u8>,
    faces2: usize,
    faces3: usize,
    faces4: usize,
}

impl State {
    /// One placed face of the given size plus the complementary hole.
    fn seed(size: usize) -> State {
        let mut rot = Vec::new();
        let mut inv = Vec::new();
        let mut twin = Vec::new();
        let mut vert = Vec::new();
        for v in 0..size as u32 {
            // darts 2v (to previous vertex) and 2v+1 (to next vertex)
            rot.push(2 * v + 1);
            rot.push(2 * v);
            inv.push(2 * v + 1);
            inv.push(2 * v);
            let prev = (v + size as u32 - 1) % size as u32;
            twin.push(2 * prev + 1);
            twin.push(2 * ((v + 1) % size as u32));
            vert.push(v);
            vert.push(v);
        }
        let mut s = State {
            rot,
            inv,
            twin,
            vert,
            open: vec![false; 2 * size],
            deg: vec![2; size],
            faces2: (size == 2) as usize,
            faces3: (size == 3) as usize,
            faces4: (size == 4) as usize,
        };
        // mark one of the two face orbits as the open region
        let mut d = 0u32;
        loop {
            s.open[d as usize] = true;
            d = s.face_next(d);
            if d == 0 {
                break;
            }
        }
        s
    }

    fn face_next(&self, d: u32) -> u32 {
        self.rot[self.twin[d as usize] as usize]
    }

    fn slot(&self) -> Option<u32> {
        (0..self.open.len() as u32).rev().find(|&d| self.open[d as usize])
    }

    fn boundary(&self, start: u32) -> Vec<u32> {
        let mut cycle = vec![start];
        let mut cur = self.face_next(start);
        while cur != start {
            cycle.push(cur);
            cur = self.face_next(cur);
        }
        cycle
    }

    fn insert_after(&mut self, anchor: u32, new: u32) {
        let next = self.rot[anchor as usize];
        self.rot[anchor as usize] = new;
        self.rot[new as usize] = next;
        self.inv[next as usize] = new;
        self.inv[new as usize] = anchor;
    }
}

#[derive(Clone, Copy)]
enum Move {
    Along,
    Chord(usize),
    Sprout,
}

/// All maps reachable by gluing faces of sizes 2..4 within the budgets,
/// deduplicated by canonical code only after completion.
fn glue_search(p2: usize, p3: usize, n_max: usize) -> BTreeMap<Vec<u32>, PlanarMap> {
    let mut results = BTreeMap::new();
    let p4 = n_max + 2 - p2 - p3;
    // Every target contains a face of the smallest budgeted size (2-gons
    // when p2 > 0, triangles otherwise), so one seed suffices.
    let seed_size = if p2 > 0 { 2 } else { 3 };
    dfs(State::seed(seed_size), p2, p3, p4, n_max, &mut results);
    results
}

fn dfs(
    state: State,
    p2: usize,
    p3: usize,
    p4: usize,
    n_max: usize,
    results: &mut BTreeMap<Vec<u32>, PlanarMap>,
) {
    let slot = match state.slot() {
        Some(s) => s,
        None => {
            if let Ok(m) = PlanarMap::from_permutations(state.rot.clone(), state.twin.clone()) {
                let canon = m.canonical_form();
                results
                    .entry(canon.canonical_code().code)
                    .or_insert(canon);
            }
            return;
        }
    };
    let boundary = state.boundary(slot);
    for size in 2..=4usize {
        let budget = match size {
            2 => state.faces2 < p2,
            3 => state.faces3 < p3,
            _ => state.faces4 < p4,
        };
        if !budget {
            continue;
        }
        let mut moves: Vec<Move> = Vec::new();
        enumerate(&state, &boundary, size, n_max, 1, false, &mut moves, &mut |walk| {
            if let Some(next) = place(&state, &boundary, size, walk) {
                dfs(next, p2, p3, p4, n_max, results);
            }
        });
    }
}

/// Recursive walk enumeration: continue along the boundary, cut a chord to
/// a strictly later boundary corner (`m` closes the walk), or sprout a new
/// vertex. Edge 0 always glues the slot dart.
#[allow(clippy::too_many_arguments)]
fn enumerate(
    state: &State,
    boundary: &[u32],
    size: usize,
    n_max: usize,
    pos: usize,
    sprouted: bool,
    moves: &mut Vec<Move>,
    sink: &mut impl FnMut(&[Move]),
) {
    let m = boundary.len();
    let used = moves.len() + 1;
    if used == size {
        if pos == m && !sprouted {
            sink(moves);
        }
        return;
    }
    if pos == m && !sprouted {
        return; // back at the start with edges left over
    }
    let remaining = size - used;
    if !sprouted && pos < m {
        moves.push(Move::Along);
        enumerate(state, boundary, size, n_max, pos + 1, false, moves, sink);
        moves.pop();
    }
    let cur_vertex = if sprouted {
        None
    } else {
        Some(state.vert[boundary[pos % m] as usize])
    };
    let can_leave = match cur_vertex {
        Some(v) => state.deg[v as usize] < 4,
        None => true,
    };
    if !can_leave {
        return;
    }
    for t in pos + 1..=m {
        if (t == m) != (remaining == 1) {
            continue;
        }
        let tv = state.vert[boundary[t % m] as usize];
        if state.deg[tv as usize] >= 4 {
            continue;
        }
        if cur_vertex == Some(tv) {
            continue; // loop
        }
        moves.push(Move::Chord(t));
        enumerate(state, boundary, size, n_max, t, false, moves, sink);
        moves.pop();
    }
    if state.deg.len() < n_max && remaining >= 2 {
        moves.push(Move::Sprout);
        enumerate(state, boundary, size, n_max, pos, true, moves, sink);
        moves.pop();
    }
}

/// Applies a face walk; `walk[j]` is the move taken for edge `j+1` (edge 0
/// always glues the slot dart).
fn place(state: &State, boundary: &[u32], size: usize, walk: &[Move]) -> Option<State> {
    let mut s = state.clone();
    let m = boundary.len();
    match size {
        2 => s.faces2 += 1,
        3 => s.faces3 += 1,
        _ => s.faces4 += 1,
    }
    let mut pos = 1usize;
    let mut anchor = s.twin[boundary[0] as usize];
    let mut cur_vertex = s.vert[boundary[1 % m] as usize];
    let mut new_darts = Vec::new();
    for &mv in walk {
        match mv {
            Move::Along => {
                pos += 1;
                anchor = s.twin[boundary[pos - 1] as usize];
                cur_vertex = s.vert[boundary[pos % m] as usize];
            }
            Move::Chord(t) => {
                let out = s.rot.len() as u32;
                let inn = out + 1;
                s.rot.extend_from_slice(&[0, 0]);
                s.inv.extend_from_slice(&[0, 0]);
                s.twin.extend_from_slice(&[inn, out]);
                s.open.extend_from_slice(&[true, true]);
                s.vert.extend_from_slice(&[cur_vertex, 0]);
                s.insert_after(anchor, out);
                if s.deg[cur_vertex as usize] >= 4 {
                    return None;
                }
                s.deg[cur_vertex as usize] += 1;
                let tv = s.vert[boundary[t % m] as usize];
                if s.deg[tv as usize] >= 4 {
                    return None;
                }
                let pre = s.inv[boundary[t % m] as usize];
                s.insert_after(pre, inn);
                s.vert[inn as usize] = tv;
                s.deg[tv as usize] += 1;
                pos = t;
                cur_vertex = tv;
                anchor = inn;
                new_darts.extend_from_slice(&[out, inn]);
            }
            Move::Sprout => {
                let out = s.rot.len() as u32;
                let inn = out + 1;
                s.rot.extend_from_slice(&[0, 0]);
                s.inv.extend_from_slice(&[0, 0]);
                s.twin.extend_from_slice(&[inn, out]);
                s.open.extend_from_slice(&[true, true]);
                s.vert.extend_from_slice(&[cur_vertex, 0]);
                s.insert_after(anchor, out);
                if s.deg[cur_vertex as usize] >= 4 {
                    return None;
                }
                s.deg[cur_vertex as usize] += 1;
                let v = s.deg.len() as u32;
                s.deg.push(1);
                s.vert[inn as usize] = v;
                s.rot[inn as usize] = inn;
                s.inv[inn as usize] = inn;
                cur_vertex = v;
                anchor = inn;
                new_darts.extend_from_slice(&[out, inn]);
            }
        }
    }
    // retag the region: the orbit through the slot dart is the new face
    let mut pending: Vec<u32> = boundary.to_vec();
    pending.extend_from_slice(&new_darts);
    let mut handled: std::collections::HashSet<u32> = Default::default();
    for &d in &pending.clone() {
        if handled.contains(&d) {
            continue;
        }
        let mut orbit = vec![];
        let mut cur = d;
        loop {
            orbit.push(cur);
            handled.insert(cur);
            cur = s.face_next(cur);
            if cur == d {
                break;
            }
        }
        let is_face = orbit.contains(&boundary[0]);
        if is_face && orbit.len() != size {
            return None;
        }
        for &x in &orbit {
            s.open[x as usize] = !is_face;
        }
    }
    Some(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn oracle_octahedrites_to_9() {
        let run = oracle_generate(GraphClass::Octahedrite, 9).unwrap();
        assert_eq!(run.count(6), 1);
        assert_eq!(run.count(7), 0);
        assert_eq!(run.count(8), 1);
        assert_eq!(run.count(9), 1);
    }

    #[test]
    fn oracle_7_hedrites_to_9() {
        let run = oracle_generate(GraphClass::Ihedrite(7), 9).unwrap();
        assert_eq!(run.count(7), 1);
        assert_eq!(run.count(8), 1);
        assert_eq!(run.count(9), 1);
    }

    #[test]
    fn oracle_4_hedrites_to_6() {
        let run = oracle_generate(GraphClass::Ihedrite(4), 6).unwrap();
        assert_eq!(run.count(2), 1);
        assert_eq!(run.count(3), 0);
        assert_eq!(run.count(4), 2);
        assert_eq!(run.count(5), 0);
        assert_eq!(run.count(6), 2);
    }

    #[test]
    fn oracle_rejects_large_requests() {
        assert!(matches!(
            oracle_generate(GraphClass::Octahedrite, 13),
            Err(Error::OracleTooLarge { .. })
        ));
    }

    #[test]
    fn oracle_self_hedrites_to_6() {
        let run = oracle_generate(GraphClass::SelfHedrite(2), 6).unwrap();
        assert_eq!(run.count(2), 1);
        assert_eq!(run.count(3), 1);
        assert_eq!(run.count(4), 2);
        assert_eq!(run.count(5), 2);
        assert_eq!(run.count(6), 3);
    }
}
