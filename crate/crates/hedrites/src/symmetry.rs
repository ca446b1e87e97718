//! Schoenflies point-group classification of map symmetries.
//!
//! Every 3-connected plane graph can be realized as a polytope whose
//! isometries are exactly the map automorphisms, so the combinatorial group
//! can be named by the usual chemical nomenclature. The classification here
//! is purely combinatorial: orientation-preserving elements are rotations,
//! and an orientation-reversing involution is a reflection exactly when it
//! stabilizes some vertex, edge or face setwise (a mirror circle always
//! passes through cells, while the antipodal inversion stabilizes nothing).

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::canon::Automorphism;
use crate::error::{Error, Result};
use crate::pmap::PlanarMap;

/// A finite point group of the sphere in Schoenflies nomenclature.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PointGroup {
    C1,
    Cs,
    Ci,
    /// Cyclic rotation group of order k >= 2.
    C(u32),
    /// C_k plus k vertical mirrors.
    Cv(u32),
    /// C_k plus the horizontal mirror.
    Ch(u32),
    /// Rotoreflection group S_2k, stored by its order 2k.
    S(u32),
    /// Dihedral rotation group of order 2k.
    D(u32),
    /// D_k plus k diagonal mirrors.
    Dd(u32),
    /// D_k plus k+1 mirrors.
    Dh(u32),
    T,
    Td,
    Th,
    O,
    Oh,
    I,
    Ih,
}

impl PointGroup {
    pub fn order(&self) -> usize {
        use PointGroup::*;
        match *self {
            C1 => 1,
            Cs | Ci => 2,
            C(k) => k as usize,
            Cv(k) | Ch(k) => 2 * k as usize,
            S(m) => m as usize,
            D(k) => 2 * k as usize,
            Dd(k) | Dh(k) => 4 * k as usize,
            T => 12,
            Td | Th | O => 24,
            Oh => 48,
            I => 60,
            Ih => 120,
        }
    }

    pub fn proper_order(&self) -> usize {
        use PointGroup::*;
        match *self {
            C1 | Cs | Ci => 1,
            C(k) | Cv(k) | Ch(k) => k as usize,
            S(m) => m as usize / 2,
            D(k) | Dd(k) | Dh(k) => 2 * k as usize,
            T | Td | Th => 12,
            O | Oh => 24,
            I | Ih => 60,
        }
    }

    pub fn symbol(&self) -> String {
        use PointGroup::*;
        match *self {
            C1 => "C1".into(),
            Cs => "Cs".into(),
            Ci => "Ci".into(),
            C(k) => format!("C{k}"),
            Cv(k) => format!("C{k}v"),
            Ch(k) => format!("C{k}h"),
            S(m) => format!("S{m}"),
            D(k) => format!("D{k}"),
            Dd(k) => format!("D{k}d"),
            Dh(k) => format!("D{k}h"),
            T => "T".into(),
            Td => "Td".into(),
            Th => "Th".into(),
            O => "O".into(),
            Oh => "Oh".into(),
            I => "I".into(),
            Ih => "Ih".into(),
        }
    }
}

impl fmt::Display for PointGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.symbol())
    }
}

impl FromStr for PointGroup {
    type Err = Error;

    fn from_str(s: &str) -> Result<PointGroup> {
        use PointGroup::*;
        let fixed = match s {
            "C1" => Some(C1),
            "Cs" | "C1h" => Some(Cs),
            "Ci" | "S2" => Some(Ci),
            "T" => Some(T),
            "Td" => Some(Td),
            "Th" => Some(Th),
            "O" => Some(O),
            "Oh" => Some(Oh),
            "I" => Some(I),
            "Ih" => Some(Ih),
            _ => None,
        };
        if let Some(g) = fixed {
            return Ok(g);
        }
        let bad = || Error::BadClass(format!("unknown point group symbol {s:?}"));
        let (head, tail) = s.split_at(1);
        let digits: String = tail.chars().take_while(|c| c.is_ascii_digit()).collect();
        let suffix = &tail[digits.len()..];
        let k: u32 = digits.parse().map_err(|_| bad())?;
        match (head, suffix) {
            ("C", "") if k >= 2 => Ok(C(k)),
            ("C", "v") => Ok(Cv(k)),
            ("C", "h") => Ok(Ch(k)),
            ("S", "") if k % 2 == 0 && k >= 4 => Ok(S(k)),
            ("D", "") => Ok(D(k)),
            ("D", "d") => Ok(Dd(k)),
            ("D", "h") => Ok(Dh(k)),
            _ => Err(bad()),
        }
    }
}

/// Geometric type of one symmetry element.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ElementKind {
    Identity,
    /// Proper rotation of the given order.
    Rotation(u32),
    Reflection,
    Inversion,
    /// Improper rotation of the given (even) order.
    Rotoreflection(u32),
}

fn perm_order(perm: &[u32]) -> u32 {
    let mut seen = vec![false; perm.len()];
    let mut order = 1u64;
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0u64;
        let mut cur = start;
        while !seen[cur] {
            seen[cur] = true;
            cur = perm[cur] as usize;
            len += 1;
        }
        order = lcm(order, len);
    }
    order as u32
}

fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Order of the group element `(perm, reversing)`: reversing elements square
/// to proper ones, so an odd permutation order doubles.
fn element_order(a: &Automorphism) -> u32 {
    let p = perm_order(&a.perm);
    if a.reversing && p % 2 == 1 {
        2 * p
    } else {
        p
    }
}

/// True when the element stabilizes some vertex, edge or face setwise.
fn fixes_some_cell(m: &PlanarMap, a: &Automorphism) -> bool {
    let perm = &a.perm;
    for d in 0..m.dart_count() as u32 {
        if m.vertex_of(perm[d as usize]) == m.vertex_of(d) {
            return true;
        }
        if m.edge_of(perm[d as usize]) == m.edge_of(d) {
            return true;
        }
        // Corners map to corners; for reversing elements the corner at d
        // lands on the corner at perm(rot(d)).
        let image_corner = if a.reversing {
            perm[m.rot(d) as usize]
        } else {
            perm[d as usize]
        };
        if m.face_of_corner(image_corner) == m.face_of_corner(d) {
            return true;
        }
    }
    false
}

/// Classifies one automorphism as a geometric symmetry element.
pub fn element_type(m: &PlanarMap, a: &Automorphism) -> Result<ElementKind> {
    m.check_automorphism(&a.perm, a.reversing)?;
    let order = element_order(a);
    if !a.reversing {
        return Ok(if order == 1 {
            ElementKind::Identity
        } else {
            ElementKind::Rotation(order)
        });
    }
    if order == 2 {
        Ok(if fixes_some_cell(m, a) {
            ElementKind::Reflection
        } else {
            ElementKind::Inversion
        })
    } else {
        Ok(ElementKind::Rotoreflection(order))
    }
}

enum ProperKind {
    Cyclic(u32),
    Dihedral(u32),
    Tetra,
    Octa,
    Icosa,
}

/// Names the full symmetry group of the map.
pub fn classify(m: &PlanarMap) -> Result<PointGroup> {
    let group = m.automorphisms();
    let n_proper = group.proper_count;
    let n_rev = group.order() - n_proper;

    let mut proper_orders = Vec::new();
    let mut reflections = 0usize;
    let mut inversion = false;
    let mut max_improper = 0u32;
    for a in &group.elements {
        if !a.reversing {
            proper_orders.push(element_order(a));
            continue;
        }
        match element_type(m, a)? {
            ElementKind::Reflection => reflections += 1,
            ElementKind::Inversion => inversion = true,
            ElementKind::Rotoreflection(o) => max_improper = max_improper.max(o),
            _ => unreachable!("reversing element"),
        }
    }
    let max_rot = proper_orders.iter().copied().max().unwrap_or(1);
    let order2 = proper_orders.iter().filter(|&&o| o == 2).count();

    let evidence = || {
        format!(
            "order {} ({} proper, max rotation {max_rot}, {reflections} reflections, \
             inversion {inversion}, max improper {max_improper})",
            group.order(),
            n_proper
        )
    };

    let n = n_proper as u32;
    let proper = if n == 1 {
        ProperKind::Cyclic(1)
    } else if proper_orders.contains(&n) {
        ProperKind::Cyclic(n)
    } else if n % 2 == 0 && max_rot == n / 2 && order2 >= (n / 2) as usize {
        ProperKind::Dihedral(n / 2)
    } else if n == 12 && max_rot == 3 {
        ProperKind::Tetra
    } else if n == 24 && max_rot == 4 {
        ProperKind::Octa
    } else if n == 60 && max_rot == 5 {
        ProperKind::Icosa
    } else {
        return Err(Error::Unclassifiable(evidence()));
    };

    use PointGroup::*;
    let result = if n_rev == 0 {
        match proper {
            ProperKind::Cyclic(1) => C1,
            ProperKind::Cyclic(k) => C(k),
            ProperKind::Dihedral(k) => D(k),
            ProperKind::Tetra => T,
            ProperKind::Octa => O,
            ProperKind::Icosa => I,
        }
    } else if n_rev != n_proper {
        return Err(Error::Unclassifiable(evidence()));
    } else {
        match proper {
            ProperKind::Cyclic(1) => {
                if reflections == 1 {
                    Cs
                } else if inversion {
                    Ci
                } else {
                    return Err(Error::Unclassifiable(evidence()));
                }
            }
            ProperKind::Cyclic(k) => {
                if reflections == k as usize {
                    Cv(k)
                } else if reflections == 1 {
                    Ch(k)
                } else if reflections == 0 && max_improper == 2 * k {
                    S(2 * k)
                } else {
                    return Err(Error::Unclassifiable(evidence()));
                }
            }
            ProperKind::Dihedral(k) => {
                if reflections == k as usize + 1 {
                    Dh(k)
                } else if reflections == k as usize {
                    Dd(k)
                } else {
                    return Err(Error::Unclassifiable(evidence()));
                }
            }
            ProperKind::Tetra => {
                if inversion {
                    Th
                } else if reflections == 6 {
                    Td
                } else {
                    return Err(Error::Unclassifiable(evidence()));
                }
            }
            ProperKind::Octa => Oh,
            ProperKind::Icosa => Ih,
        }
    };

    if result.order() != group.order() || result.proper_order() != n_proper {
        return Err(Error::Unclassifiable(evidence()));
    }
    Ok(result)
}

/// Per-symbol count and minimal vertex count over a set of maps.
pub fn group_census<'a>(
    maps: impl IntoIterator<Item = &'a PlanarMap>,
) -> Result<BTreeMap<PointGroup, (usize, usize)>> {
    let mut census: BTreeMap<PointGroup, (usize, usize)> = BTreeMap::new();
    for m in maps {
        let g = classify(m)?;
        let entry = census.entry(g).or_insert((0, usize::MAX));
        entry.0 += 1;
        entry.1 = entry.1.min(m.vertex_count());
    }
    Ok(census)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pmap::fixtures::*;

    #[test]
    fn platonic_groups() {
        assert_eq!(classify(&octahedron()).unwrap(), PointGroup::Oh);
        assert_eq!(classify(&tetrahedron()).unwrap(), PointGroup::Td);
        assert_eq!(classify(&cube()).unwrap(), PointGroup::Oh);
    }

    #[test]
    fn lens_groups() {
        // Four parallel edges: a square cross-section lens.
        assert_eq!(classify(&two_one()).unwrap(), PointGroup::Dh(4));
        // Two parallel edges: the minimal 2-self-hedrite.
        assert_eq!(classify(&bundle(2)).unwrap(), PointGroup::Dh(2));
        assert_eq!(classify(&bundle(3)).unwrap(), PointGroup::Dh(3));
        // The 4-cycle map (dual of the lens) has the same symmetry.
        assert_eq!(classify(&two_one().dual()).unwrap(), PointGroup::Dh(4));
    }

    #[test]
    fn medial_doubles_tetrahedral_group() {
        // medial(Tetrahedron) is the octahedron: order 24 -> 48.
        let med = tetrahedron().medial();
        assert_eq!(classify(&med).unwrap(), PointGroup::Oh);
    }

    #[test]
    fn octahedron_element_types() {
        let m = octahedron();
        let g = m.automorphisms();
        let mut rot_orders = std::collections::BTreeMap::new();
        let mut reflections = 0;
        let mut inversions = 0;
        let mut improper = std::collections::BTreeMap::new();
        for a in &g.elements {
            match element_type(&m, a).unwrap() {
                ElementKind::Identity => {}
                ElementKind::Rotation(k) => *rot_orders.entry(k).or_insert(0) += 1,
                ElementKind::Reflection => reflections += 1,
                ElementKind::Inversion => inversions += 1,
                ElementKind::Rotoreflection(k) => *improper.entry(k).or_insert(0) += 1,
            }
        }
        // O_h: 8 C3, 6 C4 + 3 C4^2, 6 C2', 9 mirrors, inversion, 8 S6, 6 S4.
        assert_eq!(rot_orders.get(&4), Some(&6));
        assert_eq!(rot_orders.get(&3), Some(&8));
        assert_eq!(rot_orders.get(&2), Some(&9));
        assert_eq!(reflections, 9);
        assert_eq!(inversions, 1);
        assert_eq!(improper.get(&6), Some(&8));
        assert_eq!(improper.get(&4), Some(&6));
    }

    #[test]
    fn tetrahedron_reflections_fix_edges() {
        let m = tetrahedron();
        let g = m.automorphisms();
        let reflections = g
            .elements
            .iter()
            .filter(|a| element_type(&m, a).unwrap() == ElementKind::Reflection)
            .count();
        assert_eq!(reflections, 6);
    }

    #[test]
    fn element_type_rejects_non_automorphism() {
        let m = octahedron();
        let bogus = Automorphism {
            perm: (0..m.dart_count() as u32).rev().collect(),
            reversing: false,
        };
        assert!(element_type(&m, &bogus).is_err());
    }

    #[test]
    fn symbol_round_trip() {
        for s in [
            "C1", "Cs", "Ci", "C2", "C2v", "C2h", "C3", "C3v", "C4", "C4v", "S4", "D2", "D2d",
            "D2h", "D3", "D3d", "D3h", "D4", "D4d", "D4h", "T", "Td", "Th", "O", "Oh", "I", "Ih",
        ] {
            let g: PointGroup = s.parse().unwrap();
            assert_eq!(g.symbol(), s);
            assert!(g.order() == g.proper_order() || g.order() == 2 * g.proper_order());
        }
        assert_eq!("S2".parse::<PointGroup>().unwrap(), PointGroup::Ci);
        assert_eq!("C1h".parse::<PointGroup>().unwrap(), PointGroup::Cs);
    }

    #[test]
    fn census_of_fixtures() {
        let maps = [octahedron(), tetrahedron(), two_one()];
        let census = group_census(maps.iter()).unwrap();
        assert_eq!(census[&PointGroup::Oh], (1, 6));
        assert_eq!(census[&PointGroup::Td], (1, 4));
        assert_eq!(census[&PointGroup::Dh(4)], (1, 2));
    }
}
