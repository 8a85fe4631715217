use orbitres::lie::Parabolic;
use orbitres::oracle::{generic_jordan_type, generic_jordan_type_of, Caps};
use orbitres::orbits::{compositions, orbit_dimension};
use orbitres::resolutions::{polarizations, richardson_partition, type_a_richardson};

#[test]
fn classical_recipe_matches_generic_nilradical_element() {
    let caps = Caps::default();
    for t in ["B2", "B3", "C2", "C3", "D3", "D4"] {
        for p in Parabolic::all_proper(t.parse().unwrap()) {
            let recipe = richardson_partition(&p).unwrap();
            let oracle = generic_jordan_type_of(&p, 11, &caps).unwrap();
            assert!(oracle.seeds_agree, "{p}");
            assert_eq!(recipe.partition().unwrap(), &oracle.jordan_type, "{p}");
            // Richardson orbits have twice the dimension of G/P.
            assert_eq!(orbit_dimension(&recipe), 2 * p.flag_dimension().unwrap() as u64, "{p}");
        }
    }
}

#[test]
fn type_a_round_trip() {
    let caps = Caps::default();
    for n in 2..=6 {
        for c in compositions(n) {
            if c.len() == 1 {
                continue;
            }
            let p = Parabolic::from_composition(&c).unwrap();
            let o = richardson_partition(&p).unwrap();
            assert_eq!(o.partition().unwrap(), &type_a_richardson(&c));
            assert_eq!(generic_jordan_type(&c, 1, &caps).unwrap().jordan_type, type_a_richardson(&c));
            let pols = polarizations(&o).unwrap();
            assert!(pols.iter().any(|q| q.composition.as_deref() == Some(&c[..])), "{c:?}");
            for q in &pols {
                assert_eq!(2 * q.flag_dimension as u64, orbit_dimension(&o));
            }
        }
    }
}
