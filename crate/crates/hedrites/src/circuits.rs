//! Central circuits, railroads, zigzags, and alternating-link structure.
//!
//! A central circuit of a 4-regular map is the straight-ahead walk leaving
//! every vertex by the edge opposite the entering one; the circuits
//! partition the edge set. A zigzag is the left-right walk in which any two
//! consecutive edges share a face but no three do; every edge carries
//! exactly two zigzag passes. Reading central circuits as link components
//! with the checkerboard coloring deciding over and under yields the
//! alternating link diagram of the map.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::pmap::PlanarMap;
use crate::selfdual::checkerboard;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CircuitKind {
    Central,
    Zigzag,
}

/// One traversal: a central circuit records the vertices it passes, a
/// zigzag the edges. `self_intersections` lists the repeated cells of the
/// traversal (vertices for central circuits, edges for zigzags).
#[derive(Clone, Debug)]
pub struct Circuit {
    pub darts: Vec<u32>,
    pub edges: Vec<u32>,
    pub vertices: Vec<u32>,
    pub self_intersections: Vec<u32>,
}

impl Circuit {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn is_simple(&self) -> bool {
        self.self_intersections.is_empty()
    }
}

/// A partition of the map's traversals into circuits of one kind.
#[derive(Clone, Debug)]
pub struct CircuitSet {
    pub kind: CircuitKind,
    pub circuits: Vec<Circuit>,
    /// Central circuits only: vertices where two distinct circuits cross,
    /// keyed by the circuit index pair.
    pub crossings: BTreeMap<(usize, usize), Vec<u32>>,
}

impl CircuitSet {
    pub fn lengths(&self) -> Vec<usize> {
        self.circuits.iter().map(|c| c.len()).collect()
    }

    /// Length multiset, sorted ascending.
    pub fn sorted_lengths(&self) -> Vec<usize> {
        let mut l = self.lengths();
        l.sort_unstable();
        l
    }

    pub fn all_simple(&self) -> bool {
        self.circuits.iter().all(|c| c.is_simple())
    }
}

fn repeated(values: &[u32]) -> Vec<u32> {
    let mut sorted = values.to_vec();
    sorted.sort_unstable();
    let mut reps = Vec::new();
    for w in sorted.windows(2) {
        if w[0] == w[1] && reps.last() != Some(&w[0]) {
            reps.push(w[0]);
        }
    }
    reps
}

/// Straight-ahead partition of a 4-regular map into central circuits.
pub fn central_circuits(m: &PlanarMap) -> Result<CircuitSet> {
    m.require_four_regular()?;
    let n = m.dart_count() as u32;
    // circuit id per dart; both darts of an edge share the id
    let mut circuit_of = vec![usize::MAX; n as usize];
    let mut circuits = Vec::new();
    for start in 0..n {
        if circuit_of[start as usize] != usize::MAX {
            continue;
        }
        let id = circuits.len();
        let mut darts = Vec::new();
        let mut cur = start;
        loop {
            darts.push(cur);
            circuit_of[cur as usize] = id;
            circuit_of[m.twin(cur) as usize] = id;
            cur = m.rot(m.rot(m.twin(cur)));
            if cur == start {
                break;
            }
        }
        let edges: Vec<u32> = darts.iter().map(|&d| m.edge_of(d)).collect();
        let vertices: Vec<u32> = darts.iter().map(|&d| m.vertex_of(d)).collect();
        let self_intersections = repeated(&vertices);
        circuits.push(Circuit {
            darts,
            edges,
            vertices,
            self_intersections,
        });
    }
    // Crossings: at each vertex the two passes pair opposite darts; distinct
    // circuit ids there mean a crossing.
    let mut crossings: BTreeMap<(usize, usize), Vec<u32>> = BTreeMap::new();
    for v in 0..m.vertex_count() as u32 {
        let d = m.vertex_first_darts()[v as usize];
        let a = circuit_of[d as usize];
        let b = circuit_of[m.rot(d) as usize];
        if a != b {
            crossings.entry((a.min(b), a.max(b))).or_default().push(v);
        }
    }
    Ok(CircuitSet {
        kind: CircuitKind::Central,
        circuits,
        crossings,
    })
}

/// Closed strips of 4-gonal faces glued along opposite edges; each one
/// separates a parallel pair of central circuits. Every railroad is
/// reported once, as its cyclic face sequence.
pub fn railroads(m: &PlanarMap) -> Result<Vec<Vec<u32>>> {
    m.require_four_regular()?;
    // state = the face dart we exit through; successor enters the face
    // behind it and leaves through the opposite edge.
    let n = m.dart_count() as u32;
    let mut visited = vec![false; n as usize];
    let mut found = Vec::new();
    for start in 0..n {
        if visited[start as usize] || m.face_size(m.face_of(start)) != 4 {
            continue;
        }
        let mut states = Vec::new();
        let mut cur = start;
        let closed = loop {
            if visited[cur as usize] {
                break cur == start && !states.is_empty();
            }
            visited[cur as usize] = true;
            // opposite dart of the same 4-gon: travelling the strip the
            // other way exits through it
            let partner = m.face_next(m.face_next(cur));
            visited[partner as usize] = true;
            states.push(cur);
            let entry = m.twin(cur);
            if m.face_size(m.face_of(entry)) != 4 {
                break false;
            }
            cur = m.face_next(m.face_next(entry));
        };
        if closed {
            found.push(states.iter().map(|&d| m.face_of(d)).collect());
        }
    }
    Ok(found)
}

/// True when the map has no railroads.
pub fn is_irreducible(m: &PlanarMap) -> Result<bool> {
    Ok(railroads(m)?.is_empty())
}

/// Left-right walk partition. Every edge is traversed by exactly two zigzag
/// passes, so the lengths sum to twice the edge count.
pub fn zigzags(m: &PlanarMap) -> CircuitSet {
    let n = m.dart_count() as u32;
    // state 2x+t: entered along dart x, next turn left (t=0) or right (t=1)
    let step = |s: u32| -> u32 {
        let (x, t) = (s / 2, s % 2);
        let out = if t == 0 { m.rot(x) } else { m.rot_inv(x) };
        2 * m.twin(out) + (1 - t)
    };
    // reversal: the backward walk enters along the exit dart with the
    // opposite turn pending
    let reverse = |s: u32| -> u32 {
        let (x, t) = (s / 2, s % 2);
        let out = if t == 0 { m.rot(x) } else { m.rot_inv(x) };
        2 * out + (1 - t)
    };
    let mut visited = vec![false; 2 * n as usize];
    let mut circuits = Vec::new();
    for start in 0..2 * n {
        if visited[start as usize] {
            continue;
        }
        let mut darts = Vec::new();
        let mut cur = start;
        loop {
            visited[cur as usize] = true;
            visited[reverse(cur) as usize] = true;
            darts.push(cur / 2);
            cur = step(cur);
            if cur == start {
                break;
            }
        }
        let edges: Vec<u32> = darts.iter().map(|&d| m.edge_of(d)).collect();
        let vertices: Vec<u32> = darts.iter().map(|&d| m.vertex_of(d)).collect();
        let self_intersections = repeated(&edges);
        circuits.push(Circuit {
            darts,
            edges,
            vertices,
            self_intersections,
        });
    }
    CircuitSet {
        kind: CircuitKind::Zigzag,
        circuits,
        crossings: BTreeMap::new(),
    }
}

/// Alternating link diagram of a 4-regular map: one component per central
/// circuit, one crossing per vertex, over/under from the checkerboard
/// coloring.
#[derive(Clone, Debug)]
pub struct GaussCode {
    /// Per component: the crossings passed, with `true` for an overpass.
    pub components: Vec<Vec<(u32, bool)>>,
    pub crossing_count: usize,
}

impl GaussCode {
    /// Text form: one line per component, `component: +c -c ...`.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (i, comp) in self.components.iter().enumerate() {
            out.push_str(&format!("component {i}:"));
            for &(crossing, over) in comp {
                out.push_str(&format!(" {}{}", if over { '+' } else { '-' }, crossing));
            }
            out.push('\n');
        }
        out
    }
}

/// Builds the alternating diagram. The strand through a vertex goes over
/// exactly when the face on its front left belongs to checkerboard class 0;
/// adjacent corners alternate classes, so every strand alternates.
pub fn gauss_code(m: &PlanarMap) -> Result<GaussCode> {
    let board = checkerboard(m)?;
    let circuits = central_circuits(m)?;
    let mut components = Vec::new();
    for c in &circuits.circuits {
        let mut comp = Vec::new();
        for &out in &c.darts {
            let over = board.class_of_corner(m, out) == 0;
            comp.push((m.vertex_of(out), over));
        }
        components.push(comp);
    }
    Ok(GaussCode {
        components,
        crossing_count: m.vertex_count(),
    })
}

/// Sufficient condition for the link of the map to be Borromean: every arc
/// between consecutive crossings of two circuits has even edge length.
/// Requires at least three circuits.
pub fn borromean_parity(m: &PlanarMap) -> Result<bool> {
    let set = central_circuits(m)?;
    if set.circuits.len() < 3 {
        return Err(Error::TooFewCircuits {
            need: 3,
            got: set.circuits.len(),
        });
    }
    // circuit id of the other pass at each vertex passed
    let mut circuit_of = vec![usize::MAX; m.dart_count()];
    for (id, c) in set.circuits.iter().enumerate() {
        for &d in &c.darts {
            circuit_of[d as usize] = id;
            circuit_of[m.twin(d) as usize] = id;
        }
    }
    for (i, c) in set.circuits.iter().enumerate() {
        let len = c.len();
        for j in 0..set.circuits.len() {
            if i == j {
                continue;
            }
            let hits: Vec<usize> = (0..len)
                .filter(|&p| circuit_of[m.rot(c.darts[p]) as usize] == j)
                .collect();
            if hits.is_empty() {
                continue;
            }
            for w in 0..hits.len() {
                let arc = if w + 1 < hits.len() {
                    hits[w + 1] - hits[w]
                } else {
                    len - hits[w] + hits[0]
                };
                if arc % 2 != 0 {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// The octahedrites up to `n_max` with no railroads and only simple central
/// circuits; exactly eight exist over all sizes, the largest at n=32.
pub fn find_irreducible_simple_cc(n_max: usize, jobs: usize) -> Result<Vec<PlanarMap>> {
    let run = crate::gen::generate_octahedrites_jobs(n_max, jobs)?;
    let mut out = Vec::new();
    for m in run.all() {
        if is_irreducible(m)? && central_circuits(m)?.all_simple() {
            out.push(m.clone());
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pmap::fixtures::*;

    #[test]
    fn octahedron_central_circuits() {
        let set = central_circuits(&octahedron()).unwrap();
        assert_eq!(set.sorted_lengths(), vec![4, 4, 4]);
        assert!(set.all_simple());
        // three equatorial squares, each pair crossing twice
        assert_eq!(set.crossings.len(), 3);
        for pts in set.crossings.values() {
            assert_eq!(pts.len(), 2);
        }
    }

    #[test]
    fn two_one_central_circuits() {
        let set = central_circuits(&two_one()).unwrap();
        assert_eq!(set.sorted_lengths(), vec![2, 2]);
    }

    #[test]
    fn circuit_lengths_partition_edges() {
        for m in [octahedron(), two_one(), cube().medial(), octahedron().medial()] {
            let set = central_circuits(&m).unwrap();
            let total: usize = set.lengths().iter().sum();
            assert_eq!(total, m.edge_count());
        }
    }

    #[test]
    fn octahedron_has_no_railroads() {
        assert!(is_irreducible(&octahedron()).unwrap());
        assert!(railroads(&octahedron()).unwrap().is_empty());
    }

    #[test]
    fn cuboctahedron_is_irreducible() {
        // medial(Octahedron) = GC_{1,1}: every square is surrounded by
        // triangles, so no strip closes.
        let m = octahedron().medial();
        assert!(is_irreducible(&m).unwrap());
        let set = central_circuits(&m).unwrap();
        assert_eq!(set.sorted_lengths(), vec![6, 6, 6, 6]);
        assert!(set.all_simple());
    }

    #[test]
    fn doubled_octahedron_has_railroads() {
        // GC_{2,0} doubles every central circuit; the doubled pairs are
        // separated by closed bands of squares.
        let m = crate::selfdual::gc_octahedron(crate::selfdual::GcParams::new(2, 0).unwrap())
            .unwrap();
        let rails = railroads(&m).unwrap();
        assert!(!rails.is_empty());
        for rail in &rails {
            for &f in rail {
                assert_eq!(m.face_size(f), 4);
            }
        }
        assert!(!is_irreducible(&m).unwrap());
    }

    #[test]
    fn tetrahedron_zigzags() {
        let set = zigzags(&tetrahedron());
        assert_eq!(set.sorted_lengths(), vec![4, 4, 4]);
        assert!(set.all_simple());
    }

    #[test]
    fn zigzag_lengths_sum_to_twice_edges() {
        for m in [octahedron(), tetrahedron(), two_one(), cube(), bundle(2)] {
            let set = zigzags(&m);
            let total: usize = set.lengths().iter().sum();
            assert_eq!(total, 2 * m.edge_count());
        }
    }

    #[test]
    fn zigzags_match_medial_central_circuits() {
        for m in [tetrahedron(), cube(), octahedron(), bundle(2), two_one()] {
            let zz = zigzags(&m).sorted_lengths();
            let cc = central_circuits(&m.medial()).unwrap().sorted_lengths();
            assert_eq!(zz, cc, "zigzag/medial mismatch");
        }
    }

    #[test]
    fn bundle2_zigzags() {
        let set = zigzags(&bundle(2));
        assert_eq!(set.sorted_lengths(), vec![2, 2]);
    }

    #[test]
    fn octahedron_gauss_code_is_borromean_diagram() {
        let m = octahedron();
        let code = gauss_code(&m).unwrap();
        assert_eq!(code.components.len(), 3);
        assert_eq!(code.crossing_count, 6);
        // each crossing appears once over, once under
        let mut over = std::collections::BTreeMap::new();
        let mut under = std::collections::BTreeMap::new();
        for comp in &code.components {
            for &(c, o) in comp {
                *if o { &mut over } else { &mut under }.entry(c).or_insert(0) += 1;
            }
        }
        for v in 0..6u32 {
            assert_eq!(over.get(&v), Some(&1));
            assert_eq!(under.get(&v), Some(&1));
        }
        // alternation along each component
        for comp in &code.components {
            for w in 0..comp.len() {
                assert_ne!(comp[w].1, comp[(w + 1) % comp.len()].1);
            }
        }
    }

    #[test]
    fn two_one_gauss_code_is_hopf_like() {
        let code = gauss_code(&two_one()).unwrap();
        assert_eq!(code.components.len(), 2);
        assert_eq!(code.crossing_count, 2);
        for comp in &code.components {
            assert_eq!(comp.len(), 2);
            assert_ne!(comp[0].1, comp[1].1);
        }
    }

    #[test]
    fn octahedron_borromean_parity_holds() {
        assert!(borromean_parity(&octahedron()).unwrap());
    }

    #[test]
    fn irreducible_simple_cc_up_to_12() {
        // the octahedron, GC_{1,1} and the D3h member at n=12
        let found = find_irreducible_simple_cc(12, 1).unwrap();
        let mut sizes: Vec<usize> = found.iter().map(|m| m.vertex_count()).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![6, 12, 12]);
    }

    #[test]
    fn borromean_parity_needs_three_circuits() {
        assert!(matches!(
            borromean_parity(&two_one()),
            Err(crate::error::Error::TooFewCircuits { .. })
        ));
    }
}
