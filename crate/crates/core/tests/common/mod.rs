#![allow(dead_code)]

use blowup_core::ideal::monomials_of_degree;
use blowup_core::{Ideal, Monomial, PolyRing, Polynomial, PrimeField, Term};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn ring(n: usize) -> PolyRing {
    let names = ["x", "y", "z", "w", "v"];
    PolyRing::standard(&names[..n], PrimeField::default()).unwrap()
}

/// Homogeneous form of degree `deg` with about `terms` random terms.
pub fn random_form(ring: &PolyRing, deg: u32, terms: usize, rng: &mut ChaCha8Rng) -> Polynomial {
    let monos = monomials_of_degree(ring, deg);
    let p = ring.field().characteristic();
    let picked = (0..terms.max(1))
        .map(|_| Term {
            coeff: rng.gen_range(1..p),
            mono: monos[rng.gen_range(0..monos.len())],
        })
        .collect();
    let f = Polynomial::from_terms(ring, picked);
    if f.is_zero() {
        Polynomial::monomial(ring, 1, monos[0])
    } else {
        f
    }
}

/// A few sparse forms with degrees in `lo..=hi`.
pub fn random_ideal(ring: &PolyRing, count: usize, lo: u32, hi: u32, rng: &mut ChaCha8Rng) -> Ideal {
    let gens = (0..count)
        .map(|_| {
            let deg = rng.gen_range(lo..=hi);
            let terms = rng.gen_range(1..=4);
            random_form(ring, deg, terms, rng)
        })
        .collect();
    Ideal::new(ring, gens).unwrap()
}

/// Pure powers of every variable in degree `deg` plus `extra` random forms of
/// the same degree: equigenerated and primary to the maximal ideal.
pub fn random_primary(ring: &PolyRing, deg: u32, extra: usize, rng: &mut ChaCha8Rng) -> Ideal {
    let mut gens: Vec<Polynomial> = (0..ring.nvars())
        .map(|k| Polynomial::var(ring, k).checked_pow(deg).unwrap())
        .collect();
    for _ in 0..extra {
        gens.push(random_form(ring, deg, 3, rng));
    }
    Ideal::new(ring, gens).unwrap()
}

/// Rank of a dense matrix over `F_p` by plain Gaussian elimination.
pub fn dense_rank(p: u32, mut rows: Vec<Vec<u32>>) -> usize {
    let p64 = p as u64;
    let inv = |a: u64| -> u64 {
        let (mut r, mut b, mut e) = (1u64, a % p64, p64 - 2);
        while e > 0 {
            if e & 1 == 1 {
                r = r * b % p64;
            }
            b = b * b % p64;
            e >>= 1;
        }
        r
    };
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..ncols {
        let Some(piv) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, piv);
        let s = inv(rows[rank][col] as u64);
        for v in rows[rank].iter_mut() {
            *v = (*v as u64 * s % p64) as u32;
        }
        for r in 0..rows.len() {
            if r != rank && rows[r][col] != 0 {
                let f = rows[r][col] as u64;
                for c in 0..ncols {
                    let sub = f * rows[rank][c] as u64 % p64;
                    rows[r][c] = ((rows[r][c] as u64 + p64 - sub) % p64) as u32;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// `dim_k (R/I)_t` from the span of all `m * g` with `deg m + deg g = t`,
/// without any Groebner basis.
pub fn hilbert_function_by_linear_algebra(i: &Ideal, t: u32) -> usize {
    let ring = i.ring();
    let basis = monomials_of_degree(ring, t);
    let index = |m: &Monomial| basis.iter().position(|b| b == m).unwrap();
    let mut rows = Vec::new();
    for g in i.gens() {
        let Some(dg) = g.degree() else { continue };
        if dg > t {
            continue;
        }
        for m in monomials_of_degree(ring, t - dg) {
            let mut row = vec![0u32; basis.len()];
            for term in g.terms() {
                row[index(&term.mono.mul(&m))] = term.coeff;
            }
            rows.push(row);
        }
    }
    basis.len() - dense_rank(ring.field().characteristic(), rows)
}

/// Whether `f` lies in the span of `{m g}` in degree `deg f`, by linear algebra.
pub fn in_degree_span(i: &Ideal, f: &Polynomial) -> bool {
    let Some(t) = f.degree() else { return true };
    let ring = i.ring();
    let basis = monomials_of_degree(ring, t);
    let index = |m: &Monomial| basis.iter().position(|b| b == m).unwrap();
    let mut rows = Vec::new();
    for g in i.gens() {
        let Some(dg) = g.degree() else { continue };
        if dg > t {
            continue;
        }
        for m in monomials_of_degree(ring, t - dg) {
            let mut row = vec![0u32; basis.len()];
            for term in g.terms() {
                row[index(&term.mono.mul(&m))] = term.coeff;
            }
            rows.push(row);
        }
    }
    let p = ring.field().characteristic();
    let before = dense_rank(p, rows.clone());
    let mut row = vec![0u32; basis.len()];
    for term in f.terms() {
        row[index(&term.mono)] = term.coeff;
    }
    rows.push(row);
    dense_rank(p, rows) == before
}
