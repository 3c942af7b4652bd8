mod common;

use common::invariants::*;
use flipsurf::kernel::Pt;
use flipsurf::EdgeSet;
use proptest::prelude::*;

fn holds(c: Check) -> Result<(), TestCaseError> {
    c.map_err(TestCaseError::fail)
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 48, ..ProptestConfig::default() })]

    #[test]
    fn polygon_flips_are_involutions_and_closed(cylinder: bool, n in 4usize..=7, seed in 0u64..10_000) {
        let p = polygon(cylinder, n, seed);
        let g = polygon_graph(&p);
        holds(flips_closed(&p, &g))?;
        holds(graph_symmetric(&g))?;
    }

    #[test]
    fn point_set_flips_are_involutions_and_closed(kind in 0u8..3, n in 4usize..=6, seed in 0u64..10_000) {
        let Some(s) = point_set(kind, n, seed) else { return Ok(()) };
        let g = point_set_graph(&s);
        holds(flips_closed(&s, &g))?;
        holds(graph_symmetric(&g))?;
    }

    #[test]
    fn euler_face_counts(kind in 0u8..3, n in 3usize..=6, seed in 0u64..10_000) {
        let Some(s) = point_set(kind, n, seed) else { return Ok(()) };
        holds(euler_counts(&s))?;
    }

    #[test]
    fn canonicalization_is_idempotent_and_orbit_invariant(
        which in 0u8..4,
        x in -300i64..300, y in -300i64..300,
        k1 in -2i64..=2, k2 in -2i64..=2,
    ) {
        holds(canonical_form(&sample_group(which), &Pt::from_ratios((x, 100), (y, 100)), k1, k2))?;
    }

    #[test]
    fn admissibility_is_motion_equivariant(
        cylinder: bool, n in 4usize..=7, seed in 0u64..10_000,
        tx in -10i64..10, ty in -10i64..10, reflect: bool,
    ) {
        holds(motion_equivariance(&polygon(cylinder, n, seed), (tx, ty), reflect))?;
    }
}

#[test]
fn keys_are_canonical_sets() {
    let key: EdgeSet = [(3, 1), (0, 2), (1, 3)].into_iter().collect();
    assert_eq!(key.label(), "0,2-1,3");
    assert_eq!(EdgeSet::parse_label(&key.label()).unwrap(), key);
}
