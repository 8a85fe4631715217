use proptest::prelude::*;

use orbitres::lie::{Family, Parabolic, ProjectiveSpaceCriterion, SimpleType};
use orbitres::linalg::q_frac;
use orbitres::oracle::{jordan_nilpotent, Caps};
use orbitres::orbits::{
    compositions, is_minimal_orbit, orbit_dimension, projective_normalization_smooth, ExceptionalTable, OrbitLabel,
    Partition,
};
use orbitres::resolutions::{contact_resolution_exists, equivalent_parabolics, polarizations, Verdict};
use orbitres::verify::brute_force_orderings;

fn ty(s: &str) -> SimpleType {
    s.parse().unwrap()
}

fn factorial(n: u64) -> u64 {
    (1..=n).product()
}

fn weyl_order(t: SimpleType) -> u64 {
    let n = t.rank() as u64;
    match t.family() {
        Family::A => factorial(n + 1),
        Family::B | Family::C => (1 << n) * factorial(n),
        Family::D => (1 << (n - 1)) * factorial(n),
        Family::G => 12,
        Family::F => 1152,
        Family::E => match n {
            6 => 51_840,
            7 => 2_903_040,
            _ => 696_729_600,
        },
    }
}

const SMALL: [&str; 14] = ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "C2", "C3", "C4", "D4", "G2", "F4", "D5"];

#[test]
fn poincare_routes_agree_and_count_cosets() {
    for t in SMALL {
        let t = ty(t);
        let full: Vec<usize> = (1..=t.rank()).collect();
        for p in Parabolic::all_proper(t) {
            let heights = p.poincare_by_heights();
            if let Some(enumerated) = p.poincare_by_enumeration() {
                assert_eq!(enumerated, heights, "{p}");
            }
            assert_eq!(heights.degree(), p.flag_dimension().unwrap(), "{p}");
            if p.marked().len() == full.len() {
                assert_eq!(heights.at_one(), weyl_order(t), "{p}");
            }
            if let Some(c) = p.composition() {
                let denom: u64 = c.iter().map(|&k| factorial(k as u64)).product();
                assert_eq!(heights.at_one(), factorial(t.rank() as u64 + 1) / denom, "{p}");
            }
        }
    }
}

#[test]
fn type_a_flag_dimension() {
    for n in 2..=6 {
        for c in compositions(n) {
            if c.len() < 2 {
                continue;
            }
            let p = Parabolic::from_composition(&c).unwrap();
            let mut expected = 0;
            for i in 0..c.len() {
                for j in i + 1..c.len() {
                    expected += c[i] * c[j];
                }
            }
            assert_eq!(p.flag_dimension().unwrap(), expected, "{c:?}");
        }
    }
}

#[test]
fn flag_dimension_grows_with_the_marking() {
    for t in SMALL {
        let all = Parabolic::all_proper(ty(t));
        for p in &all {
            for q in &all {
                if p.marked().is_subset(q.marked()) && p != q {
                    assert!(p.flag_dimension().unwrap() < q.flag_dimension().unwrap(), "{p} {q}");
                }
            }
        }
    }
}

#[test]
fn projective_spaces_are_exactly_the_known_ones() {
    for t in SMALL {
        let t = ty(t);
        let n = t.rank();
        for p in Parabolic::all_proper(t) {
            let marks: Vec<usize> = p.marked().iter().copied().collect();
            let expected = match t.family() {
                Family::A => marks == [1] || marks == [n],
                Family::C => marks == [1],
                // so5 ≅ sp4: the isotropic planes in C⁵ form P³.
                Family::B => n == 2 && marks == [2],
                _ => false,
            };
            assert_eq!(p.is_projective_space().unwrap(), expected, "{p}");
        }
    }
    // The weaker criterion is fooled by the odd quadric and by G2.
    let quadric = Parabolic::parse("B3:{1}").unwrap();
    assert!(quadric.is_projective_space_with(ProjectiveSpaceCriterion::BettiAllOnes).unwrap());
    assert!(!quadric.is_projective_space().unwrap());
    let g2 = Parabolic::parse("G2:{1}").unwrap();
    assert!(g2.is_projective_space_with(ProjectiveSpaceCriterion::BettiAllOnes).unwrap());
    assert!(!g2.is_projective_space().unwrap());
}

#[test]
fn smooth_projectivisation_is_minimal_or_g2_dim8() {
    for t in ["A1", "A2", "A3", "A4", "A5", "B2", "B3", "C2", "C3", "D4", "G2", "F4", "E6"] {
        for o in OrbitLabel::all_of_type(ty(t)) {
            if orbit_dimension(&o) == 0 {
                continue;
            }
            let expected = is_minimal_orbit(&o).unwrap() || o.to_string() == "G2:dim8";
            assert_eq!(projective_normalization_smooth(&o).unwrap(), expected, "{o}");
        }
    }
}

#[test]
fn equivalence_is_an_equivalence_relation() {
    for n in 2..=6u32 {
        for p in Partition::all(n) {
            if p.is_all_ones() {
                continue;
            }
            let o = OrbitLabel::type_a(p.parts().to_vec()).unwrap();
            let class: Vec<Parabolic> = polarizations(&o).unwrap().into_iter().map(|x| x.parabolic).collect();
            for a in &class {
                let eq = equivalent_parabolics(a).unwrap();
                assert!(eq.contains(a), "reflexive {a}");
                assert_eq!(eq, class, "{a}");
                for b in &eq {
                    assert!(equivalent_parabolics(b).unwrap().contains(a), "symmetric {a} {b}");
                }
            }
        }
    }
}

#[test]
fn type_a_polarizations_are_orderings_of_the_dual() {
    for n in 2..=7u32 {
        for p in Partition::all(n) {
            if p.is_all_ones() {
                continue;
            }
            let o = OrbitLabel::type_a(p.parts().to_vec()).unwrap();
            let list = polarizations(&o).unwrap();
            assert_eq!(list.len(), brute_force_orderings(p.dual().parts()), "{o}");
            assert!(list.iter().all(|x| x.is_birational == Some(true) && x.springer_degree == Some(1)));
            let r = contact_resolution_exists(&o).unwrap();
            assert_ne!(r.verdict, Verdict::Unknown, "{o}");
            assert!(r.is_coherent(), "{o}");
        }
    }
}

#[test]
fn shipped_table_is_consistent() {
    let table = ExceptionalTable::shipped();
    for e in table.entries() {
        let t = ty(&e.simple_type);
        assert!(e.dimension as usize <= t.dim_algebra() - t.rank(), "{}", e.key);
        assert_eq!(e.dimension % 2, 0, "{}", e.key);
        if e.key == "A1" {
            assert_eq!(e.dimension as usize, t.minimal_orbit_dimension());
        }
        if e.admits_symplectic_resolution == Some(true) {
            assert!(!e.polarizations.is_empty(), "{}", e.key);
        }
        for pol in &e.polarizations {
            let p = Parabolic::of_type(t, pol.marked.iter().copied()).unwrap();
            assert_eq!(2 * p.flag_dimension().unwrap(), e.dimension as usize, "{} {p}", e.key);
        }
    }
    for t in ["G2", "F4", "E6", "E7", "E8"] {
        let t = ty(t);
        let regular = t.dim_algebra() - t.rank();
        assert!(table.entries_for(t).any(|e| e.dimension as usize == regular), "{t}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn contact_check_is_scale_invariant(
        idx in 0usize..100,
        num in 1i64..50,
        den in 1i64..50,
        neg in any::<bool>(),
    ) {
        let all: Vec<Partition> = (2..=5u32).flat_map(Partition::all).filter(|p| !p.is_all_ones()).collect();
        let p = &all[idx % all.len()];
        let m = jordan_nilpotent(p, &Caps::default()).unwrap();
        let t = q_frac(if neg { -num } else { num }, den);
        let base = m.contact_check().unwrap();
        let scaled = m.scaled(&t).contact_check().unwrap();
        prop_assert_eq!(&base, &scaled);
        prop_assert!(scaled.is_nondegenerate());
        prop_assert_eq!(m.scaled(&t).kks_rank(), m.kks_rank());
    }

    #[test]
    fn orbit_dimension_matches_the_centraliser_formula(parts in prop::collection::vec(1u32..5, 1..5)) {
        let p = Partition::new(parts);
        prop_assume!(p.total() >= 2);
        let n = p.total() as u64;
        let o = OrbitLabel::type_a(p.parts().to_vec()).unwrap();
        prop_assert_eq!(orbit_dimension(&o), n * n - p.dual().sum_of_squares());
    }
}
