//! Finite field arithmetic for GF(p^m).
//!
//! Elements are encoded as a single `u64`: the base-p digit string of the
//! polynomial residue representation (for p = 2 this is the plain bit
//! string, so all arithmetic is carryless and word-sized). The modulus is
//! the lexicographically smallest monic irreducible of degree m, comparing
//! coefficient sequences low-degree first, which makes every field
//! representation deterministic across runs.

use crate::numtheory::{factorize, gcd, is_prime, mult_order};
use crate::poly;
use crate::{Error, Result};
use alloc::vec;
use alloc::vec::Vec;

/// Arithmetic context for GF(p^m).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldSpec {
    p: u64,
    m: u32,
    /// Monic irreducible modulus, coefficients ascending, length m + 1.
    modulus: Vec<u64>,
    /// For p = 2: the modulus as a bit string (bit i = coefficient of x^i).
    modulus_bits: u64,
    order: u64,
}

/// Operation selector for the checked arithmetic entry point.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Mul,
    Inv,
    Pow,
    Neg,
}

impl FieldSpec {
    /// Builds GF(p^m) with the deterministic modulus choice.
    pub fn create(p: u64, m: u32) -> Result<FieldSpec> {
        if !is_prime(p) {
            return Err(Error::NonPrime(p));
        }
        if m == 0 {
            return Err(Error::FieldTooLarge { p, m });
        }
        let order = checked_pow(p, m).ok_or(Error::FieldTooLarge { p, m })?;
        let modulus = find_irreducible(p, m);
        let modulus_bits = if p == 2 {
            modulus
                .iter()
                .enumerate()
                .fold(0u64, |acc, (i, &c)| acc | (c << i))
        } else {
            0
        };
        Ok(FieldSpec { p, m, modulus, modulus_bits, order })
    }

    /// GF(q) for a prime power q.
    pub fn of_order(q: u64) -> Result<FieldSpec> {
        let f = factorize(q);
        if f.len() != 1 {
            return Err(Error::InvalidParameter(alloc::format!(
                "{q} is not a prime power"
            )));
        }
        FieldSpec::create(f[0].0, f[0].1)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn contains(&self, a: u64) -> bool {
        a < self.order
    }

    /// Base-p digit decomposition (the coefficient vector), length m.
    pub fn coeffs(&self, a: u64) -> Vec<u64> {
        let mut v = vec![0u64; self.m as usize];
        let mut a = a;
        for d in v.iter_mut() {
            *d = a % self.p;
            a /= self.p;
        }
        v
    }

    pub fn from_coeffs(&self, c: &[u64]) -> u64 {
        let mut a = 0u64;
        for &d in c.iter().rev() {
            a = a * self.p + d % self.p;
        }
        a
    }

    /// Embeds a prime-subfield constant.
    pub fn from_base(&self, c: u64) -> u64 {
        c % self.p
    }

    /// True iff the element lies in the prime subfield F_p.
    pub fn in_prime_subfield(&self, a: u64) -> bool {
        a < self.p
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        if self.p == 2 {
            return a ^ b;
        }
        let mut out = 0u64;
        let (mut a, mut b, mut w) = (a, b, 1u64);
        for _ in 0..self.m {
            out += ((a % self.p + b % self.p) % self.p) * w;
            a /= self.p;
            b /= self.p;
            w = w.saturating_mul(self.p);
        }
        out
    }

    pub fn neg(&self, a: u64) -> u64 {
        if self.p == 2 {
            return a;
        }
        let mut out = 0u64;
        let (mut a, mut w) = (a, 1u64);
        for _ in 0..self.m {
            let d = a % self.p;
            out += if d == 0 { 0 } else { self.p - d } * w;
            a /= self.p;
            w = w.saturating_mul(self.p);
        }
        out
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        if self.p == 2 {
            return reduce2(clmul(a, b), self.modulus_bits, self.m);
        }
        let pa = self.coeffs(a);
        let pb = self.coeffs(b);
        let prod = poly::mul(self.p, &pa, &pb);
        let r = poly::rem(self.p, &prod, &self.modulus);
        self.from_coeffs(&r)
    }

    pub fn pow(&self, a: u64, mut e: u64) -> u64 {
        let mut acc = 1u64;
        let mut base = a;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: u64) -> Result<u64> {
        if a == 0 {
            return Err(Error::InversionOfZero);
        }
        Ok(self.pow(a, self.order - 2))
    }

    /// Checked arithmetic entry point; validates operand range. For `Pow`
    /// the second operand is a plain integer exponent.
    pub fn arith(&self, op: ArithOp, a: u64, b: u64) -> Result<u64> {
        if !self.contains(a) {
            return Err(Error::ElementOutOfRange(a));
        }
        if !matches!(op, ArithOp::Pow) && !self.contains(b) {
            return Err(Error::ElementOutOfRange(b));
        }
        Ok(match op {
            ArithOp::Add => self.add(a, b),
            ArithOp::Mul => self.mul(a, b),
            ArithOp::Inv => self.inv(a)?,
            ArithOp::Pow => self.pow(a, b),
            ArithOp::Neg => self.neg(a),
        })
    }

    /// Multiplicative order of a nonzero element.
    pub fn element_order(&self, a: u64) -> Result<u64> {
        if a == 0 {
            return Err(Error::InversionOfZero);
        }
        let mut ord = 1u64;
        let mut x = a;
        while x != 1 {
            x = self.mul(x, a);
            ord += 1;
        }
        Ok(ord)
    }

    /// Smallest element (in encoding order) of multiplicative order q - 1.
    pub fn primitive_element(&self) -> u64 {
        let n = self.order - 1;
        if n == 1 {
            return 1;
        }
        let primes: Vec<u64> = factorize(n).into_iter().map(|(p, _)| p).collect();
        for g in 2..self.order {
            if primes.iter().all(|&r| self.pow(g, n / r) != 1) {
                return g;
            }
        }
        unreachable!("every finite field has a primitive element")
    }
}

/// Smallest extension field of F_q containing a primitive n-th root of
/// unity, together with such a root. Requires q prime and gcd(n, q) = 1.
pub fn nth_root_of_unity(n: u64, q: u64) -> Result<(FieldSpec, u64)> {
    if !is_prime(q) {
        return Err(Error::NonPrime(q));
    }
    if n == 0 || gcd(n, q) != 1 {
        return Err(Error::GcdViolation { a: n, b: q });
    }
    if n == 1 {
        let f = FieldSpec::create(q, 1)?;
        return Ok((f, 1));
    }
    let m = mult_order(q % n, n) as u32;
    let field = FieldSpec::create(q, m)?;
    let g = field.primitive_element();
    let alpha = field.pow(g, (field.order() - 1) / n);
    debug_assert_eq!(field.pow(alpha, n), 1);
    Ok((field, alpha))
}

fn checked_pow(p: u64, m: u32) -> Option<u64> {
    let mut acc = 1u64;
    for _ in 0..m {
        acc = acc.checked_mul(p)?;
    }
    Some(acc)
}

/// Carryless multiply of two ≤63-bit operands.
fn clmul(a: u64, b: u64) -> u128 {
    let mut r = 0u128;
    let a = a as u128;
    let mut b = b;
    while b != 0 {
        let i = b.trailing_zeros();
        r ^= a << i;
        b &= b - 1;
    }
    r
}

/// Reduces a ≤126-bit carryless product modulo the degree-m modulus.
fn reduce2(mut r: u128, modulus_bits: u64, m: u32) -> u64 {
    let md = modulus_bits as u128;
    while r >> m != 0 {
        let i = 127 - r.leading_zeros();
        r ^= md << (i - m);
    }
    r as u64
}

/// Lexicographically smallest monic irreducible of degree m over F_p,
/// coefficients compared low-degree first.
fn find_irreducible(p: u64, m: u32) -> Vec<u64> {
    let m = m as usize;
    let total = checked_pow(p, m as u32).expect("order checked by caller");
    // For m > 1 a zero constant term means divisible by x, so skip the
    // entire leading block (t < p^(m-1)) rather than rejecting its
    // members one by one; the first polynomial found is unchanged.
    let start = if m > 1 { total / p } else { 0 };
    for t in start..total {
        let mut f = vec![0u64; m + 1];
        f[m] = 1;
        // c_0 is the most significant digit of t so that candidates are
        // visited in low-degree-first lexicographic order.
        let mut rest = t;
        for i in (0..m).rev() {
            f[i] = rest % p;
            rest /= p;
        }
        if is_irreducible(p, &f) {
            return f;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

/// Rabin irreducibility test.
pub fn is_irreducible(p: u64, f: &[u64]) -> bool {
    let d = match poly::deg(f) {
        Some(d) if d >= 1 => d as u32,
        _ => return false,
    };
    if f[0] == 0 && d > 1 {
        return false; // divisible by x
    }
    let x = vec![0u64, 1];
    // x^(p^d) must equal x mod f.
    let q_d = match checked_pow(p, d) {
        Some(v) => v,
        None => return false,
    };
    let frob = poly::powmod(p, &x, q_d, f);
    if frob != poly::rem(p, &x, f) {
        return false;
    }
    // gcd(x^(p^(d/r)) - x, f) must be trivial for each prime r | d.
    for (r, _) in factorize(d as u64) {
        let e = checked_pow(p, d / r as u32).unwrap();
        let xe = poly::powmod(p, &x, e, f);
        let diff = poly::sub(p, &xe, &x);
        let g = poly::gcd(p, &diff, f);
        if poly::deg(&g) != Some(0) {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_modulus_is_x() {
        let f = FieldSpec::create(2, 1).unwrap();
        assert_eq!(f.order(), 2);
        assert_eq!(f.modulus(), &[0, 1]);
    }

    #[test]
    fn gf8_modulus_is_irreducible() {
        let f = FieldSpec::create(2, 3).unwrap();
        assert_eq!(f.order(), 8);
        // Independent check by trial division: no root in F_2, no factor of
        // degree <= 3/2 = 1.
        let md = f.modulus();
        let eval = |x: u64| md.iter().rev().fold(0u64, |acc, &c| (acc * x + c) % 2);
        assert_ne!(eval(0), 0);
        assert_ne!(eval(1), 0);
    }

    #[test]
    fn gf32_has_31st_root() {
        let f = FieldSpec::create(2, 5).unwrap();
        assert_eq!(f.order(), 32);
        let g = f.primitive_element();
        assert_eq!(f.element_order(g).unwrap(), 31);
    }

    #[test]
    fn characteristic_two_self_cancel() {
        let f = FieldSpec::create(2, 4).unwrap();
        for a in 0..16 {
            assert_eq!(f.add(a, a), 0);
        }
        assert_eq!(f.inv(1).unwrap(), 1);
    }

    #[test]
    fn gf8_nonzero_pow7_is_one() {
        let f = FieldSpec::create(2, 3).unwrap();
        for a in 1..8 {
            assert_eq!(f.pow(a, 7), 1, "a={a}");
        }
    }

    #[test]
    fn gf4_primitive_element() {
        let f = FieldSpec::create(2, 2).unwrap();
        let g = f.primitive_element();
        assert_ne!(g, 1);
        assert_eq!(f.pow(g, 3), 1);
        assert_ne!(f.pow(g, 1), 1);
    }

    #[test]
    fn roots_of_unity_examples() {
        let (f, a) = nth_root_of_unity(31, 2).unwrap();
        assert_eq!(f.m(), 5);
        assert_eq!(f.element_order(a).unwrap(), 31);

        let (f, _) = nth_root_of_unity(7, 2).unwrap();
        assert_eq!(f.m(), 3);

        let (f, a) = nth_root_of_unity(9, 2).unwrap();
        assert_eq!(f.m(), 6);
        assert_eq!(f.element_order(a).unwrap(), 9);

        assert!(nth_root_of_unity(6, 2).is_err());
    }

    #[test]
    fn root_order_is_exact() {
        // alpha^n = 1 and alpha^d != 1 for every proper divisor d of n.
        for n in [7u64, 9, 15, 17, 21, 31] {
            let (f, a) = nth_root_of_unity(n, 2).unwrap();
            assert_eq!(f.pow(a, n), 1);
            for d in 1..n {
                if n % d == 0 {
                    assert_ne!(f.pow(a, d), 1, "n={n} d={d}");
                }
            }
        }
    }

    #[test]
    fn modulus_divides_frobenius_closure() {
        // f | x^(p^m) - x for every supported (p, m) sampled here.
        for (p, m) in [(2u64, 1u32), (2, 3), (2, 8), (3, 2), (5, 1), (11, 1), (2, 20)] {
            let f = FieldSpec::create(p, m).unwrap();
            let x = vec![0u64, 1];
            let e = checked_pow(p, m).unwrap();
            let frob = poly::powmod(p, &x, e, f.modulus());
            assert_eq!(frob, poly::rem(p, &x, f.modulus()), "p={p} m={m}");
        }
    }

    #[test]
    fn checked_arith_errors() {
        let f = FieldSpec::create(2, 3).unwrap();
        assert_eq!(f.arith(ArithOp::Inv, 0, 0), Err(Error::InversionOfZero));
        assert_eq!(f.arith(ArithOp::Add, 9, 0), Err(Error::ElementOutOfRange(9)));
        assert!(FieldSpec::create(6, 1).is_err());
        assert!(FieldSpec::create(2, 64).is_err());
    }

    #[test]
    fn field_of_order() {
        assert_eq!(FieldSpec::of_order(8).unwrap().m(), 3);
        assert_eq!(FieldSpec::of_order(11).unwrap().p(), 11);
        assert!(FieldSpec::of_order(12).is_err());
    }

    #[test]
    fn odd_characteristic_axioms_sampled() {
        let f = FieldSpec::create(5, 2).unwrap();
        let q = f.order();
        // Deterministic stride sampling of triples.
        let mut seen = 0;
        for a in (0..q).step_by(3) {
            for b in (0..q).step_by(5) {
                let c = (a * 7 + b * 11 + 1) % q;
                assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                assert_eq!(f.mul(a, b), f.mul(b, a));
                assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                seen += 1;
            }
        }
        assert!(seen > 10);
        for a in 1..q {
            assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
        }
    }
}
