//! Ideals built between a minimal reduction `J` and `I`, and the family of
//! height-two perfect ideals with linear presentation.

use super::Analysis;
use crate::blowup::invariants::{check_gs, is_goto_minimal_with};
use crate::blowup::presentation::rees_presentation;
use crate::blowup::random_combinations;
use crate::blowup::reduction::{draw_reduction, reduction_number, REDUCTION_CAP};
use crate::determinant::all_minors;
use crate::error::{Error, Result};
use crate::hilbert;
use crate::ideal::Ideal;
use crate::poly::Polynomial;
use crate::resolution;
use crate::ring::{MonomialOrder, PolyRing};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ConstructionMode {
    /// `J ⊆ K ⊆ (J : m) ∩ I`
    Goto,
    /// `K + (a)` with `a` in `I ∩ (J : m^2) ∩ (J : (x_1..x_{n-1}))` but not in `J : x_n`
    AlmostGoto,
}

const EXTENSION_DRAWS: usize = 8;

fn by_degree(polys: Vec<Polynomial>) -> BTreeMap<u32, Vec<Polynomial>> {
    let mut out: BTreeMap<u32, Vec<Polynomial>> = BTreeMap::new();
    for p in polys {
        out.entry(p.degree().unwrap_or(0)).or_default().push(p);
    }
    out
}

/// A random ideal between `J` and `(J : m) ∩ I`, optionally extended by one
/// element as in [`almost_goto_extension`].
pub fn construct_intermediate(a: &Analysis, j: &Ideal, mode: ConstructionMode, seed: u64) -> Result<Ideal> {
    let i = &a.ideal;
    if !i.contains(j)? {
        return Err(Error::Containment("J is not contained in I".into()));
    }
    reduction_number(i, j, REDUCTION_CAP)?;
    if a.spread()? != a.dim() || !a.gd()?.holds || !a.an_certificate()?.certified() {
        return Err(Error::Precondition(
            "needs l(I) = d, G_d and a certified AN^-_{d-2}".into(),
        ));
    }
    let ring = i.ring();
    let m = Ideal::maximal(ring);
    let socle = j.colon(&m)?.intersect(i)?;
    let mut cands = Vec::new();
    for g in socle.min_gens()? {
        if !j.contains_poly(&g)? {
            cands.push(g);
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut extras = Vec::new();
    for (_, group) in by_degree(cands) {
        let k = rng.gen_range(0..=group.len());
        if k > 0 {
            extras.extend(random_combinations(&group, k, &mut rng).0);
        }
    }
    let k = j.add_gens(&extras)?;
    match mode {
        ConstructionMode::Goto => Ok(k),
        ConstructionMode::AlmostGoto => almost_goto_extension(i, j, &k, rng.gen()),
    }
}

/// `K + (a)` for a general `a` in `I ∩ (J : m^2) ∩ (J : (x_1..x_{n-1}))`
/// outside `J : x_n`. Fails when that set difference is empty.
pub fn almost_goto_extension(i: &Ideal, j: &Ideal, k: &Ideal, seed: u64) -> Result<Ideal> {
    let ring = i.ring();
    let n = ring.nvars();
    let m = Ideal::maximal(ring);
    let mut pool = i.intersect(&j.colon(&m.power(2)?)?)?;
    if n > 1 {
        let front = Ideal::of_vars(ring, &(0..n - 1).collect::<Vec<_>>());
        pool = pool.intersect(&j.colon(&front)?)?;
    }
    let last = Polynomial::var(ring, n - 1);
    let avoid = j.colon_poly(&last)?;
    let gens = pool.min_gens()?;
    let mut target = None;
    for g in &gens {
        if !avoid.contains_poly(g)? {
            target = g.degree();
            break;
        }
    }
    let Some(e) = target else {
        return Err(Error::Construction(
            "no element of I ∩ (J : m^2) ∩ (J : x_1..x_{n-1}) avoids J : x_n; re-seed J".into(),
        ));
    };
    let same: Vec<Polynomial> = gens.into_iter().filter(|g| g.degree() == Some(e)).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..EXTENSION_DRAWS {
        let (mut pick, _) = random_combinations(&same, 1, &mut rng);
        let a = pick.pop().unwrap();
        if !avoid.contains_poly(&a)? {
            return k.add_gens(&[a]);
        }
    }
    Err(Error::Construction(format!(
        "{EXTENSION_DRAWS} draws all fell in J : x_n"
    )))
}

/// Quotient by a general linear form, realized by solving it for the last variable.
pub fn specialize_general_linear_form(i: &Ideal, seed: u64) -> Result<Ideal> {
    let ring = i.ring();
    let n = ring.nvars();
    if n < 2 || !ring.is_standard_graded() {
        return Err(Error::Precondition(
            "specialization needs a standard graded ring in at least two variables".into(),
        ));
    }
    let field = *ring.field();
    let p = field.characteristic();
    let target = PolyRing::new(
        ring.names()[..n - 1].to_vec(),
        vec![1; n - 1],
        MonomialOrder::GRevLex,
        field,
    )?
    .with_degree_cap(ring.degree_cap());
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let coeffs: Vec<u32> = (0..n).map(|_| rng.gen_range(1..p)).collect();
    // c_n x_n = -(c_1 x_1 + ... + c_{n-1} x_{n-1})
    let scale = field.neg(field.inv(coeffs[n - 1]));
    let mut images: Vec<Polynomial> = (0..n - 1).map(|k| Polynomial::var(&target, k)).collect();
    let mut last = Polynomial::zero(&target);
    for (k, &c) in coeffs[..n - 1].iter().enumerate() {
        last = last.checked_add(&Polynomial::var(&target, k).scale(field.mul(c, scale)))?;
    }
    images.push(last);
    let gens = i
        .gens()
        .iter()
        .map(|g| g.substitute(&target, &images))
        .collect::<Result<Vec<_>>>()?;
    Ideal::new(&target, gens)
}

#[derive(Clone, Debug, Serialize)]
pub struct FamilyConfig {
    pub d: usize,
    pub n: usize,
    pub count: usize,
    pub seed: u64,
    /// Also compute depths of `R(K)`, `G(K)`, `F(K)` for Goto-minimal `K`.
    pub check_algebras: bool,
    pub threads: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct FamilySample {
    pub index: usize,
    pub seed: u64,
    pub matrix_attempts: usize,
    /// Whether the sample was drawn inside `I m^{n-d-1} + J`.
    pub drawn_inside: bool,
    /// `K ⊆ I m^{n-d-1} + J`, by ideal membership.
    pub inside: bool,
    /// `K m = J m`.
    pub goto_minimal: bool,
    pub agrees: bool,
    pub k_generators: Vec<String>,
    pub r_k: u32,
    pub s: usize,
    pub g: usize,
    /// `r(K) ∈ {0, s - g + 1}`
    pub dichotomy_holds: bool,
    /// `depth R/K`. The dichotomy needs `depth R/K^j >= d - g - j + 1`
    /// for `1 <= j <= s - g + 1`, which can fail inside the family.
    pub quotient_depth: Option<usize>,
    pub socle_degrees: Vec<u32>,
    pub expected_socle_degree: u32,
    pub socle_ok: bool,
    pub algebras_cm: Option<bool>,
}

#[derive(Clone, Debug, Serialize)]
pub struct FamilyReport {
    pub d: usize,
    pub n: usize,
    pub count: usize,
    pub seed: u64,
    pub samples: Vec<FamilySample>,
    pub errors: Vec<String>,
    pub agreements: usize,
    pub disagreements: usize,
    pub goto_minimal_count: usize,
    pub dichotomy_failures: usize,
    pub socle_failures: usize,
    pub cm_failures: usize,
}

impl FamilyReport {
    pub fn all_agree(&self) -> bool {
        self.disagreements == 0 && self.errors.is_empty()
    }
}

const MATRIX_ATTEMPTS: usize = 8;

fn random_linear_form(ring: &PolyRing, rng: &mut ChaCha8Rng) -> Result<Polynomial> {
    let p = ring.field().characteristic();
    let mut out = Polynomial::zero(ring);
    for k in 0..ring.nvars() {
        out = out.checked_add(&Polynomial::var(ring, k).scale(rng.gen_range(0..p)))?;
    }
    Ok(out)
}

/// Maximal minors of a random `n x (n-1)` matrix of linear forms, re-drawn
/// until the ideal has height two, `n` generators, `G_d` and spread `d`.
fn perfect_height_two(ring: &PolyRing, n: usize, rng: &mut ChaCha8Rng) -> Result<(Ideal, usize)> {
    let d = ring.nvars();
    for attempt in 1..=MATRIX_ATTEMPTS {
        let mut m = Vec::with_capacity(n);
        for _ in 0..n {
            let row = (0..n - 1)
                .map(|_| random_linear_form(ring, rng))
                .collect::<Result<Vec<_>>>()?;
            m.push(row);
        }
        let minors = all_minors(ring, &m, n - 1)?;
        let i = Ideal::new(ring, minors)?;
        if i.mu()? != n || hilbert::height(&i)? != 2 || !check_gs(&i, d)?.holds {
            continue;
        }
        return Ok((i, attempt));
    }
    Err(Error::Construction(format!(
        "{MATRIX_ATTEMPTS} random matrices failed the height or G_d check; re-seed"
    )))
}

/// A drawn member of the family: `J ⊆ K ⊆ I` and the bound `I m^{n-d-1} + J`.
#[derive(Clone, Debug)]
pub struct FamilyMember {
    pub i: Ideal,
    pub j: Ideal,
    pub k: Ideal,
    pub bound: Ideal,
    pub matrix_attempts: usize,
}

/// Draws the matrix, the reduction `J` and an intermediate `K`, inside or
/// outside the bound.
pub fn draw_family_member(d: usize, n: usize, seed: u64, inside: bool) -> Result<FamilyMember> {
    if !(3 <= d && d < n) {
        return Err(Error::Precondition(format!("needs 3 <= d < n, got d = {d}, n = {n}")));
    }
    let e = (n - d - 1) as u32;
    if !inside && e == 0 {
        return Err(Error::Precondition(
            "with n = d + 1 every K lies inside I m^0 + J".into(),
        ));
    }
    let ring = PolyRing::indexed("x", d)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (i, attempts) = perfect_height_two(&ring, n, &mut rng)?;
    let pres = rees_presentation(&i)?;
    let spread = pres.analytic_spread()?;
    if spread != d {
        return Err(Error::Construction(format!("analytic spread {spread} != {d}; re-seed")));
    }
    let (j, _, _, _) = draw_reduction(&pres, rng.gen())?;

    let m = Ideal::maximal(&ring);
    let inner_ideal = i.product_compact(&m.power_compact(e)?)?;
    let bound = inner_ideal.sum(&j)?;
    let inner = inner_ideal.min_gens()?;
    let mut extras = Vec::new();
    if inside {
        let k = rng.gen_range(1..=2);
        extras.extend(random_combinations(&inner, k, &mut rng).0);
    } else {
        extras.extend(random_combinations(&i.min_gens()?, 1, &mut rng).0);
        if rng.gen_bool(0.5) {
            extras.extend(random_combinations(&inner, 1, &mut rng).0);
        }
    }
    let k = j.add_gens(&extras)?;
    Ok(FamilyMember {
        i,
        j,
        k,
        bound,
        matrix_attempts: attempts,
    })
}

/// One draw with every check on it.
pub fn family_sample(d: usize, n: usize, seed: u64, inside: bool, check_algebras: bool) -> Result<FamilySample> {
    let FamilyMember {
        j,
        k,
        bound,
        matrix_attempts: attempts,
        ..
    } = draw_family_member(d, n, seed, inside)?;
    let m = Ideal::maximal(k.ring());
    let is_inside = bound.contains(&k)?;
    let goto = is_goto_minimal_with(&k, &j)?;
    let r_k = reduction_number(&k, &j, REDUCTION_CAP)?;
    let g = hilbert::height(&k)?;
    let top = (d + 1).saturating_sub(g) as u32;
    let dichotomy = r_k == 0 || r_k == top;
    let quotient_depth = resolution::depth_of_quotient(&k)?;

    let socle = j.colon(&m)?;
    let mut socle_degrees = Vec::new();
    for s in socle.min_gens()? {
        if !j.contains_poly(&s)? {
            socle_degrees.push(s.degree().unwrap_or(0));
        }
    }
    socle_degrees.sort_unstable();
    socle_degrees.dedup();
    let expected = (2 * (n - 1) - d) as u32;
    let socle_ok = socle_degrees == [expected];

    let algebras_cm = if check_algebras && goto {
        let pk = rees_presentation(&k)?;
        Some(pk.rees_depth()?.cohen_macaulay && pk.agr_depth()?.cohen_macaulay && pk.fiber_depth()?.cohen_macaulay)
    } else {
        None
    };
    Ok(FamilySample {
        index: 0,
        seed,
        matrix_attempts: attempts,
        drawn_inside: inside,
        inside: is_inside,
        goto_minimal: goto,
        agrees: goto == is_inside,
        k_generators: k.gens().iter().map(|g| g.to_string()).collect(),
        r_k,
        s: d,
        g,
        dichotomy_holds: dichotomy,
        quotient_depth,
        socle_degrees,
        expected_socle_degree: expected,
        socle_ok,
        algebras_cm,
    })
}

/// Seed of the `index`-th sample.
pub fn sample_seed(seed: u64, index: usize) -> u64 {
    seed.wrapping_add((index as u64 + 1).wrapping_mul(0x9E37_79B9_7F4A_7C15))
}

/// Whether the `index`-th sample is drawn inside the bound. Every third
/// sample is drawn outside when `n > d + 1`.
pub fn sample_inside(d: usize, n: usize, index: usize) -> bool {
    n == d + 1 || index % 3 != 2
}

/// Runs `count` samples over `threads` workers; results are ordered by index.
pub fn family(cfg: &FamilyConfig) -> Result<FamilyReport> {
    if !(3 <= cfg.d && cfg.d < cfg.n) {
        return Err(Error::Precondition(format!(
            "needs 3 <= d < n, got d = {}, n = {}",
            cfg.d, cfg.n
        )));
    }
    let threads = cfg.threads.max(1).min(cfg.count.max(1));
    let mut results: Vec<Option<Result<FamilySample>>> = (0..cfg.count).map(|_| None).collect();
    std::thread::scope(|scope| {
        let handles: Vec<_> = (0..threads)
            .map(|w| {
                scope.spawn(move || {
                    let mut out = Vec::new();
                    let mut idx = w;
                    while idx < cfg.count {
                        let s = sample_seed(cfg.seed, idx);
                        let inside = sample_inside(cfg.d, cfg.n, idx);
                        let res = family_sample(cfg.d, cfg.n, s, inside, cfg.check_algebras).map(|mut x| {
                            x.index = idx;
                            x
                        });
                        out.push((idx, res));
                        idx += threads;
                    }
                    out
                })
            })
            .collect();
        for h in handles {
            for (idx, res) in h.join().expect("family worker panicked") {
                results[idx] = Some(res);
            }
        }
    });
    let mut samples = Vec::new();
    let mut errors = Vec::new();
    for (idx, r) in results.into_iter().enumerate() {
        match r.expect("every index is assigned") {
            Ok(s) => samples.push(s),
            Err(e) => errors.push(format!("sample {idx}: {e}")),
        }
    }
    let agreements = samples.iter().filter(|s| s.agrees).count();
    let gm: Vec<&FamilySample> = samples.iter().filter(|s| s.goto_minimal).collect();
    Ok(FamilyReport {
        d: cfg.d,
        n: cfg.n,
        count: cfg.count,
        seed: cfg.seed,
        agreements,
        disagreements: samples.len() - agreements,
        goto_minimal_count: gm.len(),
        dichotomy_failures: gm.iter().filter(|s| !s.dichotomy_holds).count(),
        socle_failures: samples.iter().filter(|s| !s.socle_ok).count(),
        cm_failures: gm.iter().filter(|s| s.algebras_cm == Some(false)).count(),
        samples,
        errors,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::blowup::invariants::check_gs;
    use crate::harness::examples::ex61;

    #[test]
    fn intermediate_ideal_of_monomial_example_is_goto_minimal() {
        let e = ex61(3, 3).unwrap();
        let a = Analysis::from_example(&e).with_seed(2);
        let j = a.general_reduction().unwrap().j.clone();
        for seed in 0..3 {
            let k = construct_intermediate(&a, &j, ConstructionMode::Goto, seed).unwrap();
            assert!(k.contains(&j).unwrap() && e.ideal.contains(&k).unwrap());
            assert!(is_goto_minimal_with(&k, &j).unwrap());
        }
    }

    #[test]
    fn almost_goto_extension_of_a_cubic_power() {
        // m^3 in two variables: the socle of R/J sits in degree 4
        let r = PolyRing::indexed("x", 2).unwrap();
        let i = Ideal::maximal(&r).power(3).unwrap();
        let a = Analysis::new(i.clone()).with_seed(5);
        let j = a.general_reduction().unwrap().j.clone();
        let h = almost_goto_extension(&i, &j, &j, 9).unwrap();
        let m = Ideal::maximal(&r);
        let len = hilbert::length_of_quotient(&h.product(&m).unwrap(), &j.product(&m).unwrap()).unwrap();
        assert_eq!(len.finite(), Some(1));
    }

    #[test]
    fn empty_extension_is_reported() {
        // for m^2 in two variables J : m^2 ∩ I ⊆ J : x_2
        let r = PolyRing::indexed("x", 2).unwrap();
        let i = Ideal::maximal(&r).power(2).unwrap();
        let a = Analysis::new(i.clone()).with_seed(1);
        let j = a.general_reduction().unwrap().j.clone();
        assert!(matches!(
            almost_goto_extension(&i, &j, &j, 0),
            Err(Error::Construction(_))
        ));
    }

    #[test]
    fn specialization_keeps_gs_below_dimension() {
        let r = PolyRing::indexed("x", 4).unwrap();
        let i = Ideal::parse(&r, &["x1*x2", "x1*x3", "x2*x3"]).unwrap();
        assert!(check_gs(&i, 3).unwrap().holds);
        let bar = specialize_general_linear_form(&i, 3).unwrap();
        assert_eq!(bar.ring().nvars(), 3);
        assert!(check_gs(&bar, 3).unwrap().holds);
    }

    #[test]
    fn family_sample_checks() {
        let s = family_sample(3, 4, 11, true, true).unwrap();
        assert!(s.inside && s.goto_minimal && s.agrees);
        assert_eq!(s.expected_socle_degree, 3);
        assert!(s.socle_ok, "{:?}", s.socle_degrees);
        assert_eq!(s.algebras_cm, Some(true));
        assert!(family_sample(3, 4, 11, false, false).is_err());
        let out = family_sample(3, 5, 4, false, false).unwrap();
        assert!(!out.inside && !out.goto_minimal);
    }

    #[test]
    fn empty_family() {
        let cfg = FamilyConfig {
            d: 3,
            n: 5,
            count: 0,
            seed: 1,
            check_algebras: false,
            threads: 2,
        };
        let rep = family(&cfg).unwrap();
        assert!(rep.samples.is_empty() && rep.all_agree());
    }
}
