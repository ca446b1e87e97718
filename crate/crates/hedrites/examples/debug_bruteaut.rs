use hedrites::gen::generate_octahedrites;
use hedrites::pmap::PlanarMap;

// Count automorphisms by direct transport: theta is fixed by the image of
// dart 0 plus orientation; propagate via rot/twin and check consistency.
fn brute_aut(m: &PlanarMap) -> (usize, usize) {
    let n = m.dart_count() as u32;
    let mut proper = 0;
    let mut total = 0;
    for reversed in [false, true] {
        for image in 0..n {
            let mut theta = vec![u32::MAX; n as usize];
            theta[0] = image;
            let mut stack = vec![0u32];
            let mut ok = true;
            while let Some(d) = stack.pop() {
                let td = theta[d as usize];
                let pairs = [
                    (m.rot(d), if reversed { m.rot_inv(td) } else { m.rot(td) }),
                    (m.twin(d), m.twin(td)),
                ];
                for (src, dst) in pairs {
                    if theta[src as usize] == u32::MAX {
                        theta[src as usize] = dst;
                        stack.push(src);
                    } else if theta[src as usize] != dst {
                        ok = false;
                        break;
                    }
                }
                if !ok {
                    break;
                }
            }
            // also must be a bijection
            if ok {
                let mut seen = vec![false; n as usize];
                for &t in &theta {
                    if t == u32::MAX || seen[t as usize] {
                        ok = false;
                        break;
                    }
                    seen[t as usize] = true;
                }
            }
            if ok {
                total += 1;
                if !reversed {
                    proper += 1;
                }
            }
        }
    }
    (total, proper)
}

fn main() {
    let run = generate_octahedrites(12).unwrap();
    for n in [10usize, 12] {
        for m in run.by_n[&n].iter() {
            let g = m.automorphisms();
            let (bt, bp) = brute_aut(m);
            println!(
                "n={n}: canon order={}/{} brute={}/{} {}",
                g.order(),
                g.proper_count,
                bt,
                bp,
                if g.order() == bt && g.proper_count == bp { "OK" } else { "MISMATCH" }
            );
        }
    }
}
