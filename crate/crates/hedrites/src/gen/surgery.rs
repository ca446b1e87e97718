//! The 2-gon reduction and its inverse, the vertex expansion.
//!
//! Reduction squeezes a 2-gonal face to a single degree-4 vertex, merging
//! its endpoints and shortening the two faces behind its edges. Expansion
//! splits a degree-4 vertex along one of its two opposite-corner axes into a
//! doubled edge, growing the two corner faces by one. Both preserve
//! `2*p2 + p3 = 8` on 4-regular maps.

use crate::error::{Error, Result};
use crate::pmap::PlanarMap;

/// Splits vertex `w` along `axis` (0 or 1, selecting one of the two
/// opposite-corner pairs) into two vertices joined by a new 2-gon.
///
/// The two corner faces on the axis each grow by one edge and must end at
/// size 4 or less.
pub fn expand_vertex(m: &PlanarMap, w: u32, axis: u8) -> Result<PlanarMap> {
    m.require_four_regular()?;
    let first = m.vertex_first_darts()[w as usize];
    let mut e = [0u32; 4];
    e[0] = if axis == 0 { first } else { m.rot(first) };
    for i in 1..4 {
        e[i] = m.rot(e[i - 1]);
    }

    // Corner faces on the axis: between e0,e1 and between e2,e3.
    let fa = m.face_of_corner(e[0]);
    let fb = m.face_of_corner(e[2]);
    for f in [fa, fb] {
        let growth = [fa, fb].iter().filter(|&&x| x == f).count();
        if m.face_size(f) + growth > 4 {
            return Err(Error::FaceTooBig { face: f });
        }
    }

    let n = m.dart_count() as u32;
    // New darts: a = n (at v), a' = n+1 (at v'), b = n+2 (at v), b' = n+3.
    let mut rot: Vec<u32> = (0..n).map(|d| m.rot(d)).collect();
    let mut twin: Vec<u32> = (0..n).map(|d| m.twin(d)).collect();
    rot.extend_from_slice(&[0; 4]);
    twin.extend_from_slice(&[n + 1, n, n + 3, n + 2]);
    let (a, ap, b, bp) = (n, n + 1, n + 2, n + 3);
    // v keeps e0, e3; v' keeps e1, e2.
    rot[e[0] as usize] = a;
    rot[a as usize] = b;
    rot[b as usize] = e[3];
    rot[e[3] as usize] = e[0];
    rot[e[1] as usize] = e[2];
    rot[e[2] as usize] = bp;
    rot[bp as usize] = ap;
    rot[ap as usize] = e[1];
    PlanarMap::from_permutations(rot, twin)
}

/// Squeezes the 2-gonal face `f` to a vertex, undoing `expand_vertex`.
///
/// Fails when a neighboring face would drop below size 2 or when the merge
/// would turn a third parallel edge into a loop.
pub fn reduce_2gon(m: &PlanarMap, f: u32) -> Result<PlanarMap> {
    m.require_four_regular()?;
    if m.face_size(f) != 2 {
        return Err(Error::NotATwoGon(f));
    }
    let x = m.face_darts(f).next().unwrap();
    let y = m.face_next(x);
    let (vp, v) = (m.vertex_of(x), m.vertex_of(y));
    if v == vp {
        return Err(Error::Unreducible("2-gon is a pair of loops".into()));
    }
    // Lens darts at v: y and twin(x); at v': x and twin(y).
    let a = m.twin(x);
    let bp = m.twin(y);
    debug_assert_eq!(m.vertex_of(a), v);
    debug_assert_eq!(m.vertex_of(bp), vp);

    // Neighbor faces lose one edge each (or one face loses two).
    let na = m.face_of(a);
    let nb = m.face_of(bp);
    for g in [na, nb] {
        let loss = [na, nb].iter().filter(|&&x| x == g).count();
        if m.face_size(g) < 2 + loss {
            return Err(Error::Unreducible(format!(
                "face {g} would shrink below a 2-gon"
            )));
        }
    }

    // A third edge between v and v' would collapse to a loop.
    for d in m.vertex_darts(v) {
        if d != y && d != a && m.vertex_of(m.twin(d)) == vp {
            return Err(Error::Unreducible("a parallel edge would become a loop".into()));
        }
    }

    // Splice out the four lens darts and fuse the rotations.
    let d0 = m.rot(m.rot(y));
    let d1 = m.rot(x);
    let d2 = m.rot(m.rot(x));
    let d3 = m.rot(y);
    let n = m.dart_count() as u32;
    let dead = [x, y, a, bp];
    let mut newid = vec![u32::MAX; n as usize];
    let mut next = 0u32;
    for d in 0..n {
        if !dead.contains(&d) {
            newid[d as usize] = next;
            next += 1;
        }
    }
    let mut rot = vec![0u32; next as usize];
    let mut twin = vec![0u32; next as usize];
    for d in 0..n {
        if dead.contains(&d) {
            continue;
        }
        let r = match d {
            _ if d == d0 => d1,
            _ if d == d2 => d3,
            _ => {
                let mut r = m.rot(d);
                while dead.contains(&r) {
                    r = m.rot(r);
                }
                r
            }
        };
        rot[newid[d as usize] as usize] = newid[r as usize];
        twin[newid[d as usize] as usize] = newid[m.twin(d) as usize];
    }
    PlanarMap::from_permutations(rot, twin)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::is_isomorphic;
    use crate::pmap::fixtures::*;

    #[test]
    fn expanding_octahedron_gives_the_7_hedrite() {
        let m = octahedron();
        let e = expand_vertex(&m, 0, 0).unwrap();
        assert_eq!(e.vertex_count(), 7);
        assert!(e.is_four_regular());
        let stats = e.face_stats();
        assert_eq!(stats.p_count(2), 1);
        assert_eq!(stats.p_count(3), 6);
        assert_eq!(2 * stats.p_count(2) + stats.p_count(3), 8);
    }

    #[test]
    fn expansion_axes_of_octahedron_agree() {
        // By symmetry every vertex and axis of the octahedron gives the
        // same 7-vertex 7-hedrite.
        let m = octahedron();
        let reference = expand_vertex(&m, 0, 0).unwrap();
        for w in 0..6u32 {
            for axis in 0..2u8 {
                assert!(is_isomorphic(&expand_vertex(&m, w, axis).unwrap(), &reference));
            }
        }
    }

    #[test]
    fn reduce_undoes_expand() {
        for (m, w) in [(octahedron(), 0u32), (two_one(), 1u32)] {
            let e = expand_vertex(&m, w, 1).unwrap();
            let lens = (0..e.face_count() as u32)
                .filter(|&f| e.face_size(f) == 2)
                .find(|&f| {
                    // the freshly created 2-gon contains the new darts
                    e.face_darts(f).any(|d| d as usize >= m.dart_count())
                })
                .expect("expansion creates a 2-gon");
            let r = reduce_2gon(&e, lens).unwrap();
            assert!(is_isomorphic(&r, &m));
        }
    }

    #[test]
    fn expanding_two_one_gives_the_5_hedrite() {
        // Both corner faces are 2-gons, so i rises from 4 to 5: the unique
        // 3-vertex 5-hedrite.
        let e = expand_vertex(&two_one(), 0, 0).unwrap();
        assert_eq!(e.vertex_count(), 3);
        let stats = e.face_stats();
        assert_eq!(stats.p_count(2), 3);
        assert_eq!(stats.p_count(3), 2);
    }

    #[test]
    fn two_one_2gons_are_unreducible() {
        let m = two_one();
        for f in 0..m.face_count() as u32 {
            assert!(matches!(
                reduce_2gon(&m, f),
                Err(Error::Unreducible(_))
            ));
        }
    }

    #[test]
    fn reduce_rejects_non_2gon() {
        let m = octahedron();
        assert!(matches!(reduce_2gon(&m, 0), Err(Error::NotATwoGon(0))));
    }

    #[test]
    fn reducing_the_7_hedrite_returns_the_octahedron() {
        let m = octahedron();
        let e = expand_vertex(&m, 3, 0).unwrap();
        let lens = (0..e.face_count() as u32)
            .find(|&f| e.face_size(f) == 2)
            .unwrap();
        assert!(is_isomorphic(&reduce_2gon(&e, lens).unwrap(), &m));
    }
}
