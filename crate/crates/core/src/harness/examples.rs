//! The three worked examples used throughout the test corpus and the CLI.

use crate::determinant::all_minors;
use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::ideal::Ideal;
use crate::poly::Polynomial;
use crate::ring::PolyRing;

#[derive(Clone, Debug)]
pub struct BuiltinExample {
    pub name: String,
    pub ideal: Ideal,
    /// A reduction to use in place of a random one, when the example fixes one.
    pub reduction: Option<Ideal>,
    /// `AN^-_{s-2}` is known for this ideal from the literature even where no
    /// sufficient condition here certifies it.
    pub an_known: bool,
}

/// `(x1^2, x1x2..x1xd, x2^2, x2x3..x2xn)` in `k[x1..xd]`, a strongly stable
/// ideal of height two.
pub fn ex61(d: usize, n: usize) -> Result<BuiltinExample> {
    if d < 2 || n < 2 || n > d {
        return Err(Error::Precondition(format!(
            "ex61 needs 2 <= n <= d, got d = {d}, n = {n}"
        )));
    }
    let ring = PolyRing::indexed("x", d)?;
    let x = Polynomial::vars(&ring);
    let mut gens = Vec::new();
    for k in 0..d {
        gens.push(x[0].checked_mul(&x[k])?);
    }
    for k in 1..n {
        gens.push(x[1].checked_mul(&x[k])?);
    }
    Ok(BuiltinExample {
        name: format!("ex61({d},{n})"),
        ideal: Ideal::new(&ring, gens)?,
        reduction: None,
        an_known: true,
    })
}

/// 2-minors of `[[x, y, z, w], [w, x, y, z]]` in `k[x, y, z, w]`.
pub fn ex62() -> Result<BuiltinExample> {
    let ring = PolyRing::standard(&["x", "y", "z", "w"], PrimeField::default())?;
    let v = Polynomial::vars(&ring);
    let m = vec![
        vec![v[0].clone(), v[1].clone(), v[2].clone(), v[3].clone()],
        vec![v[3].clone(), v[0].clone(), v[1].clone(), v[2].clone()],
    ];
    let gens = all_minors(&ring, &m, 2)?;
    Ok(BuiltinExample {
        name: "ex62".into(),
        ideal: Ideal::new(&ring, gens)?,
        reduction: None,
        an_known: true,
    })
}

/// `(-x^2+y^2, -y^2+z^2, xy, yz, zx)` in `k[x, y, z]` with the reduction
/// generated by the first three.
pub fn ex63() -> Result<BuiltinExample> {
    let ring = PolyRing::standard(&["x", "y", "z"], PrimeField::default())?;
    let srcs = ["-x^2+y^2", "-y^2+z^2", "x*y", "y*z", "z*x"];
    Ok(BuiltinExample {
        name: "ex63".into(),
        ideal: Ideal::parse(&ring, &srcs)?,
        reduction: Some(Ideal::parse(&ring, &srcs[..3])?),
        an_known: false,
    })
}

/// Looks up `ex61`, `ex61(d,n)`, `ex62` or `ex63`. Bare `ex61` is `(3, 3)`.
pub fn example_by_name(name: &str) -> Result<BuiltinExample> {
    let compact: String = name.chars().filter(|c| !c.is_whitespace()).collect();
    match compact.as_str() {
        "ex61" => ex61(3, 3),
        "ex62" => ex62(),
        "ex63" => ex63(),
        s if s.starts_with("ex61(") && s.ends_with(')') => {
            let inner = &s[5..s.len() - 1];
            let parts: Vec<&str> = inner.split(',').collect();
            let parse = |p: &str| {
                p.parse::<usize>()
                    .map_err(|_| Error::Precondition(format!("bad ex61 parameter `{p}`")))
            };
            match parts.as_slice() {
                [d, n] => ex61(parse(d)?, parse(n)?),
                _ => Err(Error::Precondition(format!("ex61 takes (d,n), got `{name}`"))),
            }
        }
        _ => Err(Error::Precondition(format!("unknown example `{name}`"))),
    }
}

pub fn builtin_examples() -> Result<Vec<BuiltinExample>> {
    Ok(vec![ex61(3, 3)?, ex61(4, 4)?, ex62()?, ex63()?])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generator_counts() {
        let e = ex61(3, 3).unwrap();
        assert_eq!(e.ideal.gens().len(), 5);
        assert!(e
            .ideal
            .gens()
            .iter()
            .all(|g| g.terms().len() == 1 && g.degree() == Some(2)));
        assert_eq!(ex61(4, 4).unwrap().ideal.gens().len(), 7);
        assert_eq!(ex61(4, 2).unwrap().ideal.gens().len(), 5);
        assert!(ex61(3, 4).is_err());
        let e = ex62().unwrap();
        assert_eq!(e.ideal.gens().len(), 6);
        assert_eq!(e.ideal.mu().unwrap(), 6);
        let e = ex63().unwrap();
        assert_eq!(e.ideal.gens().len(), 5);
        assert_eq!(e.reduction.unwrap().gens().len(), 3);
    }

    #[test]
    fn lookup() {
        assert_eq!(example_by_name("ex61(4, 3)").unwrap().name, "ex61(4,3)");
        assert_eq!(example_by_name("ex61").unwrap().name, "ex61(3,3)");
        assert!(example_by_name("ex64").is_err());
        assert!(example_by_name("ex61(4)").is_err());
    }

    #[test]
    fn ex62_minors_are_the_listed_quadrics() {
        let e = ex62().unwrap();
        let r = e.ideal.ring();
        let expect = Ideal::parse(r, &["x^2-y*w", "x*y-z*w", "x*z-w^2", "y^2-x*z", "y*z-x*w", "z^2-y*w"]).unwrap();
        assert!(e.ideal.equals(&expect).unwrap());
    }
}
