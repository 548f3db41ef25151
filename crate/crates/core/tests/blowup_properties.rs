mod common;

use blowup_core::blowup::{
    an_minus_certificate, classify_with_reduction, j_multiplicity, random_minimal_reduction, rees_ideal_by_elimination,
    rees_presentation,
};
use blowup_core::harness::specialize_general_linear_form;
use blowup_core::hilbert::{self, hs_multiplicity};
use blowup_core::resolution::{self, cohen_macaulay_by_parameters, is_cohen_macaulay};
use blowup_core::{Ideal, Polynomial};
use common::*;
use proptest::prelude::*;
use rand::Rng;

/// Squarefree or pure-power monomials of degree two, chosen at random.
fn random_quadric_monomials(n: usize, count: usize, seed: u64) -> Ideal {
    let r = ring(n);
    let mut g = rng(seed);
    let x = Polynomial::vars(&r);
    let gens = (0..count)
        .map(|_| {
            let (a, b) = (g.gen_range(0..n), g.gen_range(0..n));
            &x[a] * &x[b]
        })
        .collect();
    Ideal::new(&r, gens).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn fitting_ideals_commute_with_a_regular_linear_section(seed in any::<u64>(), count in 2usize..=4) {
        let r = ring(4);
        let mut g = rng(seed);
        let i = random_ideal(&r, count, 2, 2, &mut g);
        prop_assume!(resolution::depth_of_quotient(&i).unwrap().unwrap_or(0) >= 1);
        let cut = specialize_general_linear_form(&i, seed).unwrap();
        let mu = i.mu().unwrap();
        for k in 1..mu {
            let fitt = i.fitting_ideal(k).unwrap();
            let down = specialize_general_linear_form(&fitt, seed).unwrap();
            let fitt_cut = cut.fitting_ideal(k).unwrap();
            prop_assert!(down.equals(&fitt_cut).unwrap(), "Fitt_{}", k);
            // a general hyperplane section cuts every positive dimension by one
            if let Some(dim) = hilbert::dimension(&fitt).unwrap() {
                prop_assert_eq!(hilbert::dimension(&fitt_cut).unwrap(), Some(dim.saturating_sub(1)));
            }
        }
    }

    #[test]
    fn j_multiplicity_of_a_primary_ideal_is_its_multiplicity(seed in any::<u64>(), n in 2usize..=3, deg in 2u32..=3, extra in 0usize..=2) {
        let r = ring(n);
        let mut g = rng(seed);
        let i = random_primary(&r, deg, extra, &mut g);
        let j = j_multiplicity(&i, seed).unwrap().j_value;
        prop_assert_eq!(j, hs_multiplicity(&i, seed ^ 0xabcd).unwrap());
        // the pure powers alone have multiplicity deg^n and the extra forms can only lower it
        prop_assert!(j <= (deg as u64).pow(n as u32));
    }

    #[test]
    fn j_multiplicity_vanishes_exactly_below_maximal_spread(seed in any::<u64>(), count in 1usize..=6) {
        let i = random_quadric_monomials(3, count, seed);
        let rep = j_multiplicity(&i, seed).unwrap();
        prop_assert!(rep.analytic_spread <= 3.min(i.mu().unwrap()));
        prop_assert_eq!(rep.j_value == 0, rep.analytic_spread < 3);
    }

    #[test]
    fn general_reductions_agree_on_the_reduction_number(seed in any::<u64>(), count in 3usize..=5) {
        let i = random_quadric_monomials(3, count, seed);
        let a = random_minimal_reduction(&i, seed).unwrap();
        let b = random_minimal_reduction(&i, seed.wrapping_add(7777)).unwrap();
        prop_assert_eq!(a.r_j, b.r_j);
        // the defining property, directly: I^{r+1} = J I^r and not one step earlier
        let r = a.r_j.unwrap();
        let ir = i.power(r).unwrap();
        prop_assert!(a.j.product(&ir).unwrap().contains(&i.power(r + 1).unwrap()).unwrap());
        if r > 0 {
            let below = a.j.product(&i.power(r - 1).unwrap()).unwrap();
            prop_assert!(!below.contains(&ir).unwrap());
        }
    }

    #[test]
    fn goto_flags_agree_between_the_two_paths(seed in any::<u64>(), extra in 0usize..=3) {
        let r = ring(3);
        let mut g = rng(seed);
        let i = random_primary(&r, 2, extra, &mut g);
        let red = random_minimal_reduction(&i, seed).unwrap();
        let cert = an_minus_certificate(&i, false).unwrap();
        prop_assert!(cert.certified());
        let cls = classify_with_reduction(&i, &red.j, &cert).unwrap();
        let jm = j_multiplicity(&i, seed).unwrap();
        prop_assert_eq!(cls.goto_minimal, jm.goto_minimal_j);
        prop_assert_eq!(cls.almost_goto_minimal, jm.almost_goto_minimal_j);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn rees_ideal_by_saturation_matches_elimination(seed in any::<u64>(), count in 2usize..=3) {
        let r = ring(3);
        let mut g = rng(seed);
        let mut gens = vec![random_form(&r, 2, 2, &mut g)];
        for _ in 1..count {
            gens.push(random_form(&r, 3, 2, &mut g));
        }
        let i = Ideal::new(&r, gens).unwrap();
        prop_assume!(i.mu().unwrap() == count);
        let p = rees_presentation(&i).unwrap();
        prop_assert!(p.verify_kernel().unwrap());
        let e = rees_ideal_by_elimination(&i, &p.ambient).unwrap();
        prop_assert!(e.equals(&p.rees_ideal).unwrap());
    }

    #[test]
    fn parameters_and_resolutions_agree_on_cohen_macaulayness(seed in any::<u64>(), n in 3usize..=4, count in 1usize..=4) {
        let r = ring(n);
        let mut g = rng(seed);
        let i = random_ideal(&r, count, 1, 3, &mut g);
        let by_resolution = is_cohen_macaulay(&i).unwrap();
        match cohen_macaulay_by_parameters(&i, seed).unwrap() {
            Some(v) => prop_assert_eq!(v, by_resolution),
            // standard graded rings always have linear parameters
            None => prop_assert!(false, "no system of parameters found"),
        }
    }
}

#[test]
fn multiplicity_of_powers_of_the_maximal_ideal() {
    for n in 2..=3 {
        let r = ring(n);
        for k in 1..=3u32 {
            let i = Ideal::maximal(&r).power(k).unwrap();
            let expect = (k as u64).pow(n as u32);
            assert_eq!(j_multiplicity(&i, 1).unwrap().j_value, expect);
            assert_eq!(hs_multiplicity(&i, 1).unwrap(), expect);
        }
    }
}
