//! Exponent vectors.

use std::fmt;

/// Hard limit on the number of ring variables.
pub const MAX_VARS: usize = 32;

/// An exponent vector. Entries past the ring's variable count are always zero,
/// so two monomials of the same ring compare equal iff their arrays do.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(pub(crate) [u8; MAX_VARS]);

impl Default for Monomial {
    fn default() -> Self {
        Monomial([0; MAX_VARS])
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let last = self.0.iter().rposition(|&e| e != 0).map_or(0, |i| i + 1);
        write!(f, "{:?}", &self.0[..last])
    }
}

impl Monomial {
    pub fn one() -> Self {
        Self::default()
    }

    /// Builds from an exponent slice; `None` if it is too long or an entry exceeds 255.
    pub fn from_exponents(exps: &[u32]) -> Option<Self> {
        if exps.len() > MAX_VARS {
            return None;
        }
        let mut m = [0u8; MAX_VARS];
        for (slot, &e) in m.iter_mut().zip(exps) {
            *slot = u8::try_from(e).ok()?;
        }
        Some(Monomial(m))
    }

    pub fn var(i: usize, e: u8) -> Self {
        let mut m = [0u8; MAX_VARS];
        m[i] = e;
        Monomial(m)
    }

    #[inline]
    pub fn exp(&self, i: usize) -> u32 {
        self.0[i] as u32
    }

    #[inline]
    pub fn set_exp(&mut self, i: usize, e: u8) {
        self.0[i] = e;
    }

    pub fn exponents(&self, nvars: usize) -> Vec<u32> {
        self.0[..nvars].iter().map(|&e| e as u32).collect()
    }

    #[inline]
    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    #[inline]
    pub fn total_degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn checked_mul(&self, other: &Monomial) -> Option<Monomial> {
        let mut m = [0u8; MAX_VARS];
        for i in 0..MAX_VARS {
            m[i] = self.0[i].checked_add(other.0[i])?;
        }
        Some(Monomial(m))
    }

    /// Product without overflow checks; callers guarantee the degree cap.
    #[inline]
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut m = [0u8; MAX_VARS];
        for i in 0..MAX_VARS {
            m[i] = self.0[i].wrapping_add(other.0[i]);
        }
        Monomial(m)
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self` divides `other`.
    #[inline]
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        let mut m = [0u8; MAX_VARS];
        for i in 0..MAX_VARS {
            m[i] = other.0[i] - self.0[i];
        }
        Monomial(m)
    }

    pub fn checked_div(&self, divisor: &Monomial) -> Option<Monomial> {
        if divisor.divides(self) {
            Some(divisor.quotient_of(self))
        } else {
            None
        }
    }

    #[inline]
    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut m = [0u8; MAX_VARS];
        for i in 0..MAX_VARS {
            m[i] = self.0[i].max(other.0[i]);
        }
        Monomial(m)
    }

    #[inline]
    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut m = [0u8; MAX_VARS];
        for i in 0..MAX_VARS {
            m[i] = self.0[i].min(other.0[i]);
        }
        Monomial(m)
    }

    #[inline]
    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(&a, &b)| a == 0 || b == 0)
    }

    /// Bit i set iff variable i occurs. Divisibility `a | b` implies `mask(a) & !mask(b) == 0`.
    #[inline]
    pub fn support_mask(&self) -> u32 {
        let mut mask = 0u32;
        for (i, &e) in self.0.iter().enumerate() {
            if e != 0 {
                mask |= 1 << i;
            }
        }
        mask
    }

    /// Two bits per variable (exponent >= 1, exponent >= 2), packed into 64 bits.
    #[inline]
    pub fn short_mask(&self) -> u64 {
        let mut mask = 0u64;
        for (i, &e) in self.0.iter().enumerate() {
            if e >= 1 {
                mask |= 1 << (2 * i);
            }
            if e >= 2 {
                mask |= 1 << (2 * i + 1);
            }
        }
        mask
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lcm_gcd_divide() {
        let a = Monomial::from_exponents(&[2, 0, 1]).unwrap();
        let b = Monomial::from_exponents(&[1, 3, 0]).unwrap();
        let l = a.lcm(&b);
        assert_eq!(l.exponents(3), vec![2, 3, 1]);
        assert!(a.divides(&l) && b.divides(&l));
        assert_eq!(a.gcd(&b).exponents(3), vec![1, 0, 0]);
        assert_eq!(a.quotient_of(&l).exponents(3), vec![0, 3, 0]);
        assert!(!a.is_coprime(&b));
        assert!(Monomial::var(0, 1).is_coprime(&Monomial::var(1, 4)));
    }

    #[test]
    fn overflow_is_detected() {
        let big = Monomial::var(0, 200);
        assert!(big.checked_mul(&big).is_none());
        assert!(Monomial::from_exponents(&[256]).is_none());
    }

    #[test]
    fn short_mask_filters_divisibility() {
        let a = Monomial::from_exponents(&[2, 1]).unwrap();
        let b = Monomial::from_exponents(&[1, 5]).unwrap();
        assert!(!a.divides(&b));
        assert_ne!(a.short_mask() & !b.short_mask(), 0);
    }
}
