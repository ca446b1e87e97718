//! Isomorph-free exhaustive generation of the three graph classes.
//!
//! Octahedrites come from the patch grower in [`grow`]. The i-hedrites with
//! 2-gons are produced by expanding unreducible graphs: every i-hedrite
//! reduces by 2-gon squeezes to an octahedrite, to the four-fold doubled
//! edge `2_1`, or to a member of one infinite family of unreducible
//! 4-hedrites, so breadth-first closure of the expansion move over those
//! seeds enumerates every class member. Self-hedrites with n vertices are
//! the inverse medials of the 2i-hedrites with 2n-2 vertices whose
//! checkerboard halves are isomorphic. A deliberately plain depth-first
//! gluing search in [`oracle`] double-checks all of it at small sizes.

mod grow;
mod oracle;
mod surgery;

pub use oracle::oracle_generate;
pub use surgery::{expand_vertex, reduce_2gon};

use std::collections::BTreeMap;

use crate::canon::is_isomorphic;
use crate::error::{Error, Result};
use crate::pmap::{fixtures, PlanarMap};
use crate::selfdual;

/// The families of maps this crate enumerates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GraphClass {
    /// 4-regular, faces of size 3 and 4 (equivalently an 8-hedrite).
    Octahedrite,
    /// 4-regular, faces of size 2..4 with `p2 + p3 = i`, `i` in `4..=8`.
    Ihedrite(u8),
    /// Self-dual, degrees and face sizes in 2..4 with `p2 + p3 = i`,
    /// `i` in `2..=4`.
    SelfHedrite(u8),
}

impl GraphClass {
    pub fn ihedrite(i: u8) -> Result<GraphClass> {
        if (4..=8).contains(&i) {
            Ok(GraphClass::Ihedrite(i))
        } else {
            Err(Error::BadClass(format!("no {i}-hedrites exist")))
        }
    }

    pub fn self_hedrite(i: u8) -> Result<GraphClass> {
        if (2..=4).contains(&i) {
            Ok(GraphClass::SelfHedrite(i))
        } else {
            Err(Error::BadClass(format!("no {i}-self-hedrites exist")))
        }
    }

    /// The forced 2-gon and 3-gon counts of the class.
    pub fn p2_p3(&self) -> (usize, usize) {
        match *self {
            GraphClass::Octahedrite => (0, 8),
            GraphClass::Ihedrite(i) => ((8 - i as usize), (2 * i as usize - 8)),
            GraphClass::SelfHedrite(i) => ((4 - i as usize), (2 * i as usize - 4)),
        }
    }

    /// Smallest vertex count at which the class is nonempty.
    pub fn min_n(&self) -> usize {
        match *self {
            GraphClass::Octahedrite => 6,
            GraphClass::Ihedrite(4) => 2,
            GraphClass::Ihedrite(5) => 3,
            GraphClass::Ihedrite(6) => 4,
            GraphClass::Ihedrite(7) => 7,
            GraphClass::Ihedrite(_) => 6,
            GraphClass::SelfHedrite(i) => i as usize,
        }
    }

    /// True when multigraphs occur in the class (everything except
    /// octahedrites, which are simple).
    pub fn admits_multigraphs(&self) -> bool {
        !matches!(self, GraphClass::Octahedrite | GraphClass::Ihedrite(8))
    }

    /// Full membership check for a finished map.
    pub fn matches(&self, m: &PlanarMap) -> bool {
        if m.has_loop() {
            return false;
        }
        let stats = m.face_stats();
        let (p2, p3) = self.p2_p3();
        match *self {
            GraphClass::Octahedrite | GraphClass::Ihedrite(_) => {
                m.is_four_regular()
                    && stats.p.keys().all(|&s| (2..=4).contains(&s))
                    && stats.p_count(2) == p2
                    && stats.p_count(3) == p3
            }
            GraphClass::SelfHedrite(_) => {
                stats.p.keys().all(|&s| (2..=4).contains(&s))
                    && stats.v.keys().all(|&d| (2..=4).contains(&d))
                    && stats.p_count(2) == p2
                    && stats.p_count(3) == p3
                    && is_isomorphic(m, &m.dual())
            }
        }
    }
}

impl std::fmt::Display for GraphClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match *self {
            GraphClass::Octahedrite => write!(f, "octahedrite"),
            GraphClass::Ihedrite(i) => write!(f, "{i}-hedrite"),
            GraphClass::SelfHedrite(i) => write!(f, "{i}-self-hedrite"),
        }
    }
}

/// Output of one generation call: canonical representatives grouped and
/// sorted by vertex count, each list sorted by canonical code.
#[derive(Clone, Debug)]
pub struct GenerationRun {
    pub class: GraphClass,
    pub n_max: usize,
    pub by_n: BTreeMap<usize, Vec<PlanarMap>>,
}

impl GenerationRun {
    pub fn count(&self, n: usize) -> usize {
        self.by_n.get(&n).map_or(0, |v| v.len())
    }

    pub fn counts(&self) -> BTreeMap<usize, usize> {
        self.by_n.iter().map(|(&n, v)| (n, v.len())).collect()
    }

    pub fn total(&self) -> usize {
        self.by_n.values().map(|v| v.len()).sum()
    }

    pub fn all(&self) -> impl Iterator<Item = &PlanarMap> {
        self.by_n.values().flatten()
    }

    fn from_sorted(class: GraphClass, n_max: usize, maps: Vec<PlanarMap>) -> GenerationRun {
        let mut by_n: BTreeMap<usize, Vec<PlanarMap>> = BTreeMap::new();
        for m in maps {
            by_n.entry(m.vertex_count()).or_default().push(m);
        }
        GenerationRun { class, n_max, by_n }
    }
}

/// Every octahedrite with at most `n_max` vertices (n_max >= 6).
pub fn generate_octahedrites(n_max: usize) -> Result<GenerationRun> {
    generate_octahedrites_jobs(n_max, 1)
}

/// Parallel variant; the output does not depend on the worker count.
pub fn generate_octahedrites_jobs(n_max: usize, jobs: usize) -> Result<GenerationRun> {
    if n_max < 6 {
        return Err(Error::NMaxTooSmall { min: 6, got: n_max });
    }
    let found = grow::grow_octahedrites(n_max, jobs);
    Ok(GenerationRun::from_sorted(
        GraphClass::Octahedrite,
        n_max,
        found.into_values().collect(),
    ))
}

/// The member of the infinite unreducible 4-hedrite family with `n`
/// vertices (n even, n >= 2). The first member is `2_1`; the larger ones
/// are tubes of 4-gons with doubled rims, capped by a third parallel edge
/// at each end, and admit no expansion.
pub fn unreducible_family_member(n: usize) -> Result<PlanarMap> {
    if n < 2 || n % 2 != 0 {
        return Err(Error::BadClass(format!(
            "the unreducible 4-hedrite family has even members only, got n={n}"
        )));
    }
    if n == 2 {
        return Ok(fixtures::two_one());
    }
    let k = n / 2;
    // Vertices a_0..a_{k-1} (ids 0..k) and b_0..b_{k-1} (ids k..2k).
    // Slots per vertex: 0 rim1, 1 rim2, 2 towards lower index (cap at the
    // left end), 3 towards higher index (cap at the right end).
    let dart = |v: usize, slot: usize| (4 * v + slot) as u32;
    let a = |i: usize| i;
    let b = |i: usize| k + i;
    let mut pairing = vec![0u32; 8 * k];
    let mut pair = |x: u32, y: u32| {
        pairing[x as usize] = y;
        pairing[y as usize] = x;
    };
    for i in 0..k {
        pair(dart(a(i), 0), dart(b(i), 0));
        pair(dart(a(i), 1), dart(b(i), 1));
    }
    for i in 0..k - 1 {
        pair(dart(a(i), 3), dart(a(i + 1), 2));
        pair(dart(b(i), 3), dart(b(i + 1), 2));
    }
    pair(dart(a(0), 2), dart(b(0), 2));
    pair(dart(a(k - 1), 3), dart(b(k - 1), 3));
    // Rotations: rims sit opposite each other, the tube edges and caps fill
    // the remaining opposite pair; the b side runs backwards.
    let mut lists: Vec<Vec<u32>> = Vec::new();
    for i in 0..k {
        lists.push(vec![dart(a(i), 0), dart(a(i), 2), dart(a(i), 1), dart(a(i), 3)]);
    }
    for i in 0..k {
        lists.push(vec![dart(b(i), 0), dart(b(i), 3), dart(b(i), 1), dart(b(i), 2)]);
    }
    PlanarMap::build(&lists, &pairing)
}

/// The unreducible trichotomy, or a reducible witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum UnreducibleKind {
    Octahedrite,
    TwoOne,
    InfiniteFamily,
    /// A 2-gon face on which `reduce_2gon` succeeds.
    Reducible { witness: u32 },
}

/// Classifies an i-hedrite as reducible (with a witness 2-gon) or as one of
/// the three unreducible shapes.
pub fn detect_unreducible(m: &PlanarMap) -> Result<UnreducibleKind> {
    m.require_four_regular()?;
    for f in 0..m.face_count() as u32 {
        if m.face_size(f) == 2 && reduce_2gon(m, f).is_ok() {
            return Ok(UnreducibleKind::Reducible { witness: f });
        }
    }
    let stats = m.face_stats();
    if stats.p_count(2) == 0 {
        return Ok(UnreducibleKind::Octahedrite);
    }
    if is_isomorphic(m, &fixtures::two_one()) {
        return Ok(UnreducibleKind::TwoOne);
    }
    if m.vertex_count() % 2 == 0
        && is_isomorphic(m, &unreducible_family_member(m.vertex_count())?)
    {
        return Ok(UnreducibleKind::InfiniteFamily);
    }
    Err(Error::Unclassifiable(
        "unreducible graph outside the known trichotomy".into(),
    ))
}

/// All i-hedrites for every `i` in `4..=8` up to `n_max`, keyed by `(i, n)`.
///
/// Seeds are the octahedrites, `2_1` and the unreducible family members;
/// each level expands every vertex along both axes and deduplicates by
/// canonical code.
pub fn generate_all_ihedrites(
    n_max: usize,
    jobs: usize,
) -> Result<BTreeMap<(u8, usize), Vec<PlanarMap>>> {
    let octa = generate_octahedrites_jobs(n_max.max(6), jobs)?;
    let mut levels: BTreeMap<usize, BTreeMap<Vec<u32>, PlanarMap>> = BTreeMap::new();
    let mut insert = |m: PlanarMap| {
        let canon = m.canonical_form();
        levels
            .entry(canon.vertex_count())
            .or_default()
            .entry(canon.canonical_code().code)
            .or_insert(canon);
    };
    insert(fixtures::two_one());
    for n in (4..=n_max).step_by(2) {
        insert(unreducible_family_member(n)?);
    }
    for m in octa.all() {
        if m.vertex_count() <= n_max {
            insert(m.clone());
        }
    }

    for n in 2..n_max {
        let Some(current) = levels.get(&n) else { continue };
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs.max(1))
            .build()
            .expect("thread pool");
        let maps: Vec<&PlanarMap> = current.values().collect();
        let expanded: Vec<PlanarMap> = pool.install(|| {
            use rayon::prelude::*;
            maps.par_iter()
                .flat_map_iter(|m| {
                    let mut out = Vec::new();
                    for w in 0..m.vertex_count() as u32 {
                        for axis in 0..2u8 {
                            if let Ok(e) = expand_vertex(m, w, axis) {
                                out.push(e.canonical_form());
                            }
                        }
                    }
                    out
                })
                .collect()
        });
        let next = levels.entry(n + 1).or_default();
        for m in expanded {
            next.entry(m.canonical_code().code).or_insert(m);
        }
    }

    let mut out: BTreeMap<(u8, usize), Vec<PlanarMap>> = BTreeMap::new();
    for (&n, maps) in &levels {
        for m in maps.values() {
            let p2 = m.face_stats().p_count(2);
            let i = (8 - 2 * p2) + p2; // p2 + p3 with 2 p2 + p3 = 8
            out.entry((i as u8, n)).or_default().push(m.clone());
        }
    }
    Ok(out)
}

/// The i-hedrites for one `i` in `4..=7`.
pub fn generate_ihedrites(i: u8, n_max: usize) -> Result<GenerationRun> {
    generate_ihedrites_jobs(i, n_max, 1)
}

pub fn generate_ihedrites_jobs(i: u8, n_max: usize, jobs: usize) -> Result<GenerationRun> {
    if !(4..=7).contains(&i) {
        return Err(Error::BadClass(format!(
            "expansion generation covers 4..=7-hedrites, got i={i}"
        )));
    }
    let class = GraphClass::Ihedrite(i);
    if n_max < class.min_n() {
        return Err(Error::NMaxTooSmall {
            min: class.min_n(),
            got: n_max,
        });
    }
    let all = generate_all_ihedrites(n_max, jobs)?;
    let mut maps = Vec::new();
    for ((ci, _), ms) in all {
        if ci == i {
            maps.extend(ms);
        }
    }
    Ok(GenerationRun::from_sorted(class, n_max, maps))
}

/// The i-self-hedrites for `i` in `2..=4`: inverse medials of the
/// 2i-hedrites on `2n-2` vertices whose checkerboard halves agree.
pub fn generate_self_hedrites(i: u8, n_max: usize) -> Result<GenerationRun> {
    generate_self_hedrites_jobs(i, n_max, 1)
}

pub fn generate_self_hedrites_jobs(i: u8, n_max: usize, jobs: usize) -> Result<GenerationRun> {
    let class = GraphClass::self_hedrite(i)?;
    if n_max < class.min_n() {
        return Err(Error::NMaxTooSmall {
            min: class.min_n(),
            got: n_max,
        });
    }
    let substrate_max = 2 * n_max - 2;
    let substrates: Vec<PlanarMap> = if i == 4 {
        generate_octahedrites_jobs(substrate_max.max(6), jobs)?
            .all()
            .cloned()
            .collect()
    } else {
        let all = generate_all_ihedrites(substrate_max, jobs)?;
        all.into_iter()
            .filter(|&((ci, _), _)| ci == 2 * i)
            .flat_map(|(_, ms)| ms)
            .collect()
    };
    let mut found: BTreeMap<Vec<u32>, PlanarMap> = BTreeMap::new();
    for m in &substrates {
        let n = (m.vertex_count() + 2) / 2;
        if m.vertex_count() % 2 != 0 || n > n_max {
            continue;
        }
        if let Some(g) = selfdual::is_self_hedrite(m)? {
            let canon = g.canonical_form();
            if class.matches(&canon) {
                found.entry(canon.canonical_code().code).or_insert(canon);
            }
        }
    }
    Ok(GenerationRun::from_sorted(
        class,
        n_max,
        found.into_values().collect(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_members_are_unreducible_4_hedrites() {
        for n in [4usize, 6, 8, 10] {
            let m = unreducible_family_member(n).unwrap();
            assert_eq!(m.vertex_count(), n);
            assert!(GraphClass::Ihedrite(4).matches(&m), "n={n}");
            assert!(!m.is_three_connected());
            assert_eq!(detect_unreducible(&m).unwrap(), UnreducibleKind::InfiniteFamily);
            // no expansion applies: every axis has an oversized corner face
            for w in 0..m.vertex_count() as u32 {
                for axis in 0..2 {
                    assert!(expand_vertex(&m, w, axis).is_err(), "n={n} w={w} axis={axis}");
                }
            }
        }
    }

    #[test]
    fn trichotomy_detection() {
        assert_eq!(
            detect_unreducible(&fixtures::octahedron()).unwrap(),
            UnreducibleKind::Octahedrite
        );
        assert_eq!(
            detect_unreducible(&fixtures::two_one()).unwrap(),
            UnreducibleKind::TwoOne
        );
        let seven = expand_vertex(&fixtures::octahedron(), 0, 0).unwrap();
        assert!(matches!(
            detect_unreducible(&seven).unwrap(),
            UnreducibleKind::Reducible { .. }
        ));
    }

    #[test]
    fn ihedrite_counts_to_10() {
        // Rows n=2..10 of the published table, columns i=4..8.
        let expected: &[(usize, [usize; 5])] = &[
            (2, [1, 0, 0, 0, 0]),
            (3, [0, 1, 0, 0, 0]),
            (4, [2, 0, 1, 0, 0]),
            (5, [0, 1, 1, 0, 0]),
            (6, [2, 2, 2, 0, 1]),
            (7, [0, 3, 1, 1, 0]),
            (8, [4, 1, 5, 1, 1]),
            (9, [0, 2, 5, 1, 1]),
            (10, [3, 3, 9, 3, 2]),
        ];
        let all = generate_all_ihedrites(10, 1).unwrap();
        for &(n, row) in expected {
            for (col, &want) in row.iter().enumerate() {
                let i = col as u8 + 4;
                let got = all.get(&(i, n)).map_or(0, |v| v.len());
                assert_eq!(got, want, "i={i} n={n}");
            }
        }
    }

    #[test]
    fn four_hedrites_exist_only_at_even_n() {
        let run = generate_ihedrites(4, 9).unwrap();
        for (&n, maps) in &run.by_n {
            assert!(n % 2 == 0 || maps.is_empty());
        }
    }

    #[test]
    fn every_generated_ihedrite_matches_its_class() {
        let all = generate_all_ihedrites(8, 1).unwrap();
        for (&(i, _), maps) in &all {
            let class = if i == 8 {
                GraphClass::Octahedrite
            } else {
                GraphClass::Ihedrite(i)
            };
            for m in maps {
                assert!(class.matches(m));
            }
        }
    }

    #[test]
    fn self_hedrite_counts_to_8() {
        // Columns i=2,3,4 of the published self-hedrite table, n=2..8.
        let expected: &[(usize, [usize; 3])] = &[
            (2, [1, 0, 0]),
            (3, [1, 1, 0]),
            (4, [2, 1, 1]),
            (5, [2, 4, 1]),
            (6, [3, 6, 2]),
            (7, [3, 7, 4]),
            (8, [3, 11, 6]),
        ];
        for (col, i) in [(0usize, 2u8), (1, 3), (2, 4)] {
            let run = generate_self_hedrites(i, 8).unwrap();
            for &(n, row) in expected {
                assert_eq!(run.count(n), row[col], "i={i} n={n}");
            }
        }
    }

    #[test]
    fn reductions_terminate_in_the_trichotomy() {
        let all = generate_all_ihedrites(7, 1).unwrap();
        for maps in all.values() {
            for m in maps {
                let mut cur = m.clone();
                loop {
                    match detect_unreducible(&cur).unwrap() {
                        UnreducibleKind::Reducible { witness } => {
                            cur = reduce_2gon(&cur, witness).unwrap();
                        }
                        _ => break,
                    }
                }
            }
        }
    }
}
