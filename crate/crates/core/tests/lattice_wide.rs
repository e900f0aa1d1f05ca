//! Involution and bijection over wider parameters than the acceptance family:
//! more variables, extra paths beyond λ₁, and larger shapes.

use std::collections::HashSet;

use dualgroth::lattice::{enumerate_systems, from_rpp, path_involution, to_rpp, PathSystem, DEFAULT_CAP};
use dualgroth::{enumerate_rpp, g_oracle, MultiPoly, SkewShape};

/// Returns the number of systems moved by the involution.
fn exercise(s: &SkewShape, n: usize, m: usize) -> usize {
    let all = enumerate_systems(s, n, m, DEFAULT_CAP).unwrap();
    let members: HashSet<&PathSystem> = all.iter().collect();
    let mut good = MultiPoly::zero();
    let mut rpps = HashSet::new();
    let mut moved = 0;
    for p in &all {
        let q = path_involution(p).unwrap_or_else(|e| panic!("{s} n={n} m={m}: {e}\n{}", p.to_json()));
        assert_eq!(&path_involution(&q).unwrap(), p, "{s} n={n} m={m}\n{}", p.to_json());
        if &q == p {
            good += &p.weight();
            let t = to_rpp(p).unwrap();
            assert_eq!(&from_rpp(&t, n, m).unwrap(), p, "{s} n={n} m={m}");
            rpps.insert(t);
        } else {
            moved += 1;
            assert!(members.contains(&q), "{s} n={n} m={m}\n{}", p.to_json());
            assert_eq!(q.sign(), -p.sign());
            assert_eq!(q.weight(), p.weight());
        }
    }
    assert_eq!(good, g_oracle(s, m, true), "{s} n={n} m={m}");
    assert_eq!(rpps.len(), enumerate_rpp(s, m as u32).len(), "{s} n={n} m={m}");
    moved
}

#[test]
fn more_variables() {
    let mut moved = 0;
    for s in SkewShape::family(5, 3, 3) {
        for m in 3..=4 {
            moved += exercise(&s, s.outer().first(), m);
        }
    }
    eprintln!("moved {moved}");
    assert!(moved > 0);
}

#[test]
fn padded_path_count() {
    let mut moved = 0;
    for s in SkewShape::family(4, 3, 3) {
        for extra in 1..=2 {
            moved += exercise(&s, s.outer().first() + extra, 2);
        }
    }
    eprintln!("moved {moved}");
    assert!(moved > 0);
}

#[test]
fn larger_shapes() {
    let mut moved = 0;
    for s in SkewShape::family(6, 4, 4) {
        moved += exercise(&s, s.outer().first(), 3);
    }
    eprintln!("moved {moved}");
    assert!(moved > 0);
}
