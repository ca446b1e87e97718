//! Canonical codes, isomorphism testing and automorphism groups.
//!
//! A rooted map is labeled by a breadth-first scan over darts: starting from
//! the root, each processed dart first exposes its rotation successor, then
//! its twin. The emitted sequence of relabeled permutation entries is a
//! complete invariant of the rooted map. Minimizing over every root and both
//! orientations gives a code that is invariant under relabeling and closed
//! under reflection, so equal codes mean isomorphic maps (orientation
//! preserving or reversing).

use crate::error::{Error, Result};
use crate::pmap::PlanarMap;

/// Canonical code of a map. Equality and ordering look at the code only;
/// `reflected` records whether some minimal scan used the mirror orientation.
#[derive(Clone, Debug)]
pub struct CanonicalCode {
    pub code: Vec<u32>,
    pub reflected: bool,
}

impl PartialEq for CanonicalCode {
    fn eq(&self, other: &Self) -> bool {
        self.code == other.code
    }
}
impl Eq for CanonicalCode {}
impl PartialOrd for CanonicalCode {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for CanonicalCode {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.code.cmp(&other.code)
    }
}

/// One symmetry of a map: a dart permutation commuting with the edge
/// involution, and with the rotation (preserving) or its inverse (reversing).
#[derive(Clone, Debug)]
pub struct Automorphism {
    pub perm: Vec<u32>,
    pub reversing: bool,
}

/// The full automorphism group, reflections included.
#[derive(Clone, Debug)]
pub struct AutomorphismGroup {
    pub elements: Vec<Automorphism>,
    pub proper_count: usize,
}

impl AutomorphismGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }
}

/// Streaming scan engine shared by the map code and the generator's
/// bordered-patch code. `roots` restricts the scan starts; `extra` appends
/// one additional value per processed dart (used to mark hole darts).
pub(crate) struct CodeScan<'a> {
    rot: &'a [u32],
    inv_rot: &'a [u32],
    twin: &'a [u32],
    label: Vec<u32>,
    order: Vec<u32>,
}

impl<'a> CodeScan<'a> {
    pub(crate) fn new(rot: &'a [u32], inv_rot: &'a [u32], twin: &'a [u32]) -> Self {
        CodeScan {
            rot,
            inv_rot,
            twin,
            label: vec![u32::MAX; rot.len()],
            order: Vec::with_capacity(rot.len()),
        }
    }

    /// Minimal code over `roots x {forward, reversed}`, plus every achiever.
    pub(crate) fn minimize(
        &mut self,
        roots: &[u32],
        extra: Option<&dyn Fn(u32) -> u32>,
    ) -> (Vec<u32>, Vec<(u32, bool)>) {
        let n = self.rot.len();
        let entry_width = if extra.is_some() { 3 } else { 2 };
        let mut best: Vec<u32> = Vec::new();
        let mut achievers: Vec<(u32, bool)> = Vec::new();
        for reversed in [false, true] {
            for &root in roots {
                let rho = if reversed { self.inv_rot } else { self.rot };
                for d in &self.order {
                    self.label[*d as usize] = u32::MAX;
                }
                self.order.clear();
                self.label[root as usize] = 0;
                self.order.push(root);
                let mut cmp = std::cmp::Ordering::Equal;
                let first = best.is_empty();
                let mut pos = 0usize;
                let mut i = 0usize;
                'scan: while i < self.order.len() {
                    let d = self.order[i];
                    let r = rho[d as usize];
                    let t = self.twin[d as usize];
                    if self.label[r as usize] == u32::MAX {
                        self.label[r as usize] = self.order.len() as u32;
                        self.order.push(r);
                    }
                    if self.label[t as usize] == u32::MAX {
                        self.label[t as usize] = self.order.len() as u32;
                        self.order.push(t);
                    }
                    let entries = [
                        self.label[r as usize],
                        self.label[t as usize],
                        extra.map(|f| f(d)).unwrap_or(0),
                    ];
                    for &e in &entries[..entry_width] {
                        if first || cmp == std::cmp::Ordering::Less {
                            best.push(e);
                        } else {
                            match e.cmp(&best[pos]) {
                                std::cmp::Ordering::Equal => pos += 1,
                                std::cmp::Ordering::Less => {
                                    cmp = std::cmp::Ordering::Less;
                                    best.truncate(pos);
                                    best.push(e);
                                }
                                std::cmp::Ordering::Greater => {
                                    cmp = std::cmp::Ordering::Greater;
                                    break 'scan;
                                }
                            }
                        }
                    }
                    i += 1;
                }
                debug_assert!(cmp != std::cmp::Ordering::Equal || self.order.len() == n);
                if first || cmp == std::cmp::Ordering::Less {
                    achievers.clear();
                    achievers.push((root, reversed));
                } else if cmp == std::cmp::Ordering::Equal {
                    achievers.push((root, reversed));
                }
            }
        }
        (best, achievers)
    }

    /// The dart order of one scan; `order[i]` is the dart labeled `i`.
    pub(crate) fn labeling(&mut self, root: u32, reversed: bool) -> Vec<u32> {
        let rho = if reversed { self.inv_rot } else { self.rot };
        for d in &self.order {
            self.label[*d as usize] = u32::MAX;
        }
        self.order.clear();
        self.label[root as usize] = 0;
        self.order.push(root);
        let mut i = 0usize;
        while i < self.order.len() {
            let d = self.order[i];
            for x in [rho[d as usize], self.twin[d as usize]] {
                if self.label[x as usize] == u32::MAX {
                    self.label[x as usize] = self.order.len() as u32;
                    self.order.push(x);
                }
            }
            i += 1;
        }
        self.order.clone()
    }
}

fn scan_parts(m: &PlanarMap) -> (Vec<u32>, Vec<u32>) {
    let n = m.dart_count();
    let mut inv = vec![0u32; n];
    for d in 0..n as u32 {
        inv[m.rot(d) as usize] = d;
    }
    let rot: Vec<u32> = (0..n as u32).map(|d| m.rot(d)).collect();
    (rot, inv)
}

impl PlanarMap {
    /// The canonical code: minimal scan code over all darts and both
    /// orientations, prefixed with the dart count.
    pub fn canonical_code(&self) -> CanonicalCode {
        let (rot, inv) = scan_parts(self);
        let twin: Vec<u32> = (0..self.dart_count() as u32).map(|d| self.twin(d)).collect();
        let roots: Vec<u32> = (0..self.dart_count() as u32).collect();
        let mut scan = CodeScan::new(&rot, &inv, &twin);
        let (body, achievers) = scan.minimize(&roots, None);
        let mut code = Vec::with_capacity(body.len() + 1);
        code.push(self.dart_count() as u32);
        code.extend_from_slice(&body);
        let reflected = achievers.iter().any(|&(_, rev)| rev);
        CanonicalCode { code, reflected }
    }

    /// Relabels the map into its canonical form: the map reconstructed from
    /// the canonical code. Isomorphic maps (mirrors included) produce
    /// identical permutations.
    pub fn canonical_form(&self) -> PlanarMap {
        let code = self.canonical_code();
        let n = code.code[0] as usize;
        let mut rot = vec![0u32; n];
        let mut twin = vec![0u32; n];
        for i in 0..n {
            rot[i] = code.code[1 + 2 * i];
            twin[i] = code.code[2 + 2 * i];
        }
        PlanarMap::from_permutations(rot, twin).expect("canonical code encodes a valid map")
    }

    /// The automorphism group, computed from the scans achieving the
    /// canonical minimum: each achiever induces one symmetry.
    pub fn automorphisms(&self) -> AutomorphismGroup {
        let (rot, inv) = scan_parts(self);
        let twin: Vec<u32> = (0..self.dart_count() as u32).map(|d| self.twin(d)).collect();
        let roots: Vec<u32> = (0..self.dart_count() as u32).collect();
        let mut scan = CodeScan::new(&rot, &inv, &twin);
        let (_, achievers) = scan.minimize(&roots, None);
        let (ref_root, ref_rev) = achievers[0];
        let ref_order = scan.labeling(ref_root, ref_rev);
        let n = self.dart_count();
        let mut elements = Vec::with_capacity(achievers.len());
        let mut proper_count = 0usize;
        for &(root, rev) in &achievers {
            let order = scan.labeling(root, rev);
            let mut perm = vec![0u32; n];
            for i in 0..n {
                perm[ref_order[i] as usize] = order[i];
            }
            let reversing = rev != ref_rev;
            if !reversing {
                proper_count += 1;
            }
            debug_assert!(self.check_automorphism(&perm, reversing).is_ok());
            elements.push(Automorphism { perm, reversing });
        }
        AutomorphismGroup {
            elements,
            proper_count,
        }
    }

    /// Verifies that `perm` commutes with the map structure.
    pub fn check_automorphism(&self, perm: &[u32], reversing: bool) -> Result<()> {
        if perm.len() != self.dart_count() {
            return Err(Error::NotAnAutomorphism);
        }
        for d in 0..self.dart_count() as u32 {
            let img = perm[d as usize];
            if perm[self.twin(d) as usize] != self.twin(img) {
                return Err(Error::NotAnAutomorphism);
            }
            let expect = if reversing {
                self.rot_inv(img)
            } else {
                self.rot(img)
            };
            if perm[self.rot(d) as usize] != expect {
                return Err(Error::NotAnAutomorphism);
            }
        }
        Ok(())
    }
}

/// True when the two maps are isomorphic as maps on the sphere, allowing
/// orientation-reversing correspondences.
pub fn is_isomorphic(a: &PlanarMap, b: &PlanarMap) -> bool {
    a.dart_count() == b.dart_count() && a.canonical_code() == b.canonical_code()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pmap::fixtures::*;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;

    fn random_relabel(m: &PlanarMap, rng: &mut impl rand::Rng) -> PlanarMap {
        let mut perm: Vec<u32> = (0..m.dart_count() as u32).collect();
        perm.shuffle(rng);
        m.relabeled(&perm)
    }

    #[test]
    fn code_invariant_under_relabeling() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for m in [octahedron(), tetrahedron(), two_one(), cube()] {
            let code = m.canonical_code();
            for _ in 0..100 {
                assert_eq!(random_relabel(&m, &mut rng).canonical_code(), code);
            }
        }
    }

    #[test]
    fn code_closed_under_reflection() {
        for m in [octahedron(), tetrahedron(), two_one(), cube()] {
            assert_eq!(m.mirrored().canonical_code(), m.canonical_code());
        }
    }

    #[test]
    fn canonical_form_is_stable() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let m = octahedron();
        let canon = m.canonical_form();
        for _ in 0..10 {
            let other = random_relabel(&m, &mut rng).canonical_form();
            assert_eq!(other.rot_slice(), canon.rot_slice());
            assert_eq!(other.twin_slice(), canon.twin_slice());
        }
    }

    #[test]
    fn isomorphism_basics() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        let oct = octahedron();
        assert!(is_isomorphic(&oct, &random_relabel(&oct, &mut rng)));
        assert!(!is_isomorphic(&oct, &cube()));
        let tet = tetrahedron();
        assert!(is_isomorphic(&tet, &tet.dual()));
    }

    #[test]
    fn octahedron_automorphisms() {
        let g = octahedron().automorphisms();
        assert_eq!(g.order(), 48);
        assert_eq!(g.proper_count, 24);
        // Every element must individually commute with the structure, and
        // they must be pairwise distinct.
        let m = octahedron();
        let mut seen = std::collections::BTreeSet::new();
        for a in &g.elements {
            m.check_automorphism(&a.perm, a.reversing).unwrap();
            assert!(seen.insert((a.perm.clone(), a.reversing)));
        }
        // Closure under composition.
        for a in &g.elements {
            for b in &g.elements {
                let comp: Vec<u32> = (0..m.dart_count())
                    .map(|d| a.perm[b.perm[d] as usize])
                    .collect();
                let rev = a.reversing != b.reversing;
                assert!(seen.contains(&(comp, rev)));
            }
        }
    }

    #[test]
    fn tetrahedron_automorphisms() {
        let g = tetrahedron().automorphisms();
        assert_eq!(g.order(), 24);
        assert_eq!(g.proper_count, 12);
    }

    #[test]
    fn automorphism_order_divides_twice_darts() {
        for m in [octahedron(), tetrahedron(), two_one(), cube(), bundle(2)] {
            let g = m.automorphisms();
            assert_eq!(2 * m.dart_count() % g.order(), 0);
        }
    }

    #[test]
    fn two_one_group_order() {
        // The lens with four parallel edges has the symmetry of a square
        // prism cross-section: D4h, order 16.
        let g = two_one().automorphisms();
        assert_eq!(g.order(), 16);
        assert_eq!(g.proper_count, 8);
    }

    #[test]
    fn bundle2_group_order() {
        // Two vertices on a circle: D2h, order 8.
        let g = bundle(2).automorphisms();
        assert_eq!(g.order(), 8);
    }
}
