//! Blowup algebras and the invariants built on them.

pub mod invariants;
pub mod jmult;
pub mod presentation;
pub mod reduction;

pub use invariants::{
    a_invariant_f, a_invariant_g, an_minus_certificate, check_gs, classify_with_reduction, core_probe,
    generically_complete_intersection, is_goto_minimal_with, ratliff_rush, residual_chain, valabrega_valla_check,
    valabrega_valla_range, AInvariantF, AnCertificate, AnMethod, Classification, ColonCheck, CoreProbe, Filtration,
    GsReport, RatliffRush, ResidualStep,
};
pub use jmult::{dim1_reduction, j_multiplicity, Dim1Reduction, JMultLengths, JMultReport};
pub use presentation::{
    analytic_spread, rees_ideal_by_elimination, rees_presentation, AlgebraDepth, BlowupPresentation,
};
pub use reduction::{random_minimal_reduction, reduction_number, tau, ReductionData};

use crate::poly::Polynomial;
use rand::Rng;

/// `k` combinations of `gens` with coefficients drawn uniformly from the field.
pub(crate) fn random_combinations<R: Rng>(
    gens: &[Polynomial],
    k: usize,
    rng: &mut R,
) -> (Vec<Polynomial>, Vec<Vec<u32>>) {
    let ring = gens[0].ring();
    let p = ring.field().characteristic();
    let mut polys = Vec::with_capacity(k);
    let mut coeffs = Vec::with_capacity(k);
    for _ in 0..k {
        let row: Vec<u32> = gens.iter().map(|_| rng.gen_range(0..p)).collect();
        let mut acc = Polynomial::zero(ring);
        for (g, &c) in gens.iter().zip(&row) {
            if c != 0 {
                acc = &acc + &g.scale(c);
            }
        }
        polys.push(acc);
        coeffs.push(row);
    }
    (polys, coeffs)
}
