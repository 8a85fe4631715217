//! Rational cones, ample cones of flag varieties and the chamber complex of
//! the movable cone.

mod chambers;
mod cone;

pub use chambers::{movable_chambers, Chamber, ChamberComplex, Wall, WallCrossing};
pub use cone::{
    cone_from_generators, cone_from_int_generators, dual_cone, Facets, RationalCone, CONE_DIMENSION_CAP,
};

use crate::error::Result;
use crate::lie::Parabolic;
use crate::linalg::Q;

/// Closure of the relative ample cone, in the `ϖ_α` (`α ∈ I`) basis: the
/// dual of the cone spanned by the Schubert curves under the
/// curve/divisor pairing.
pub fn ample_cone(p: &Parabolic) -> Result<RationalCone> {
    let lattice = p.curve_divisor_lattice()?;
    let r = lattice.rank();
    let curves: Vec<Vec<Q>> = (0..r)
        .map(|i| (0..r).map(|j| Q::from_integer(((i == j) as i64).into())).collect())
        .collect();
    let ne = cone_from_generators(r, &curves)?;
    // Pull the dual back through the pairing: y·(P x) ≥ 0 ⇔ (Pᵀ y)·x ≥ 0.
    let dual = dual_cone(&ne);
    let inv_t = lattice
        .pairing
        .transpose()
        .inverse()
        .expect("curve/divisor pairing is perfect");
    let gens: Vec<Vec<Q>> = dual
        .generators()
        .iter()
        .map(|g| {
            let v: Vec<Q> = g.iter().map(|x| Q::from_integer(x.clone())).collect();
            inv_t.mul_vec(&v)
        })
        .collect();
    cone_from_generators(r, &gens)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    #[test]
    fn ample_cone_examples() {
        let c = ample_cone(&Parabolic::parse("A3:{1,3}").unwrap()).unwrap();
        let rays: Vec<Vec<i64>> = c.rays().iter().map(|r| r.iter().map(|x| x.to_i64().unwrap()).collect()).collect();
        assert_eq!(rays, vec![vec![0, 1], vec![1, 0]]);
        let c = ample_cone(&Parabolic::parse("A3:{2}").unwrap()).unwrap();
        assert_eq!(c.rays().len(), 1);
        let c = ample_cone(&Parabolic::parse("A5:{1,2,3,4,5}").unwrap()).unwrap();
        assert!(c.is_simplicial() && c.rays().len() == 5);
    }
}
