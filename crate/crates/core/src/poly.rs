//! Dense polynomial arithmetic over prime fields F_p.
//!
//! Polynomials are coefficient vectors in ascending degree with entries in
//! [0, p). The zero polynomial is the empty vector.

use crate::numtheory::{mod_inverse, mulmod};
use alloc::vec;
use alloc::vec::Vec;

pub fn trim(mut v: Vec<u64>) -> Vec<u64> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

pub fn deg(a: &[u64]) -> Option<usize> {
    a.iter().rposition(|&c| c != 0)
}

pub fn is_zero(a: &[u64]) -> bool {
    deg(a).is_none()
}

pub fn add(p: u64, a: &[u64], b: &[u64]) -> Vec<u64> {
    let n = a.len().max(b.len());
    let mut out = vec![0u64; n];
    for i in 0..n {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        out[i] = (x + y) % p;
    }
    trim(out)
}

pub fn sub(p: u64, a: &[u64], b: &[u64]) -> Vec<u64> {
    let n = a.len().max(b.len());
    let mut out = vec![0u64; n];
    for i in 0..n {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        out[i] = (x + p - y) % p;
    }
    trim(out)
}

pub fn mul(p: u64, a: &[u64], b: &[u64]) -> Vec<u64> {
    if is_zero(a) || is_zero(b) {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            if y != 0 {
                out[i + j] = (out[i + j] + mulmod(x, y, p)) % p;
            }
        }
    }
    trim(out)
}

/// Quotient and remainder of a by b; b must be nonzero.
pub fn divrem(p: u64, a: &[u64], b: &[u64]) -> (Vec<u64>, Vec<u64>) {
    let db = deg(b).expect("division by zero polynomial");
    let lead_inv = mod_inverse(b[db], p).expect("leading coefficient not invertible");
    let mut rem: Vec<u64> = a.to_vec();
    let mut quot = vec![0u64; a.len().saturating_sub(db)];
    while let Some(dr) = deg(&rem) {
        if dr < db {
            break;
        }
        let c = mulmod(rem[dr], lead_inv, p);
        let shift = dr - db;
        quot[shift] = c;
        for i in 0..=db {
            let t = mulmod(c, b[i], p);
            rem[shift + i] = (rem[shift + i] + p - t) % p;
        }
    }
    (trim(quot), trim(rem))
}

pub fn rem(p: u64, a: &[u64], b: &[u64]) -> Vec<u64> {
    divrem(p, a, b).1
}

/// Monic gcd.
pub fn gcd(p: u64, a: &[u64], b: &[u64]) -> Vec<u64> {
    let mut a = trim(a.to_vec());
    let mut b = trim(b.to_vec());
    while !is_zero(&b) {
        let r = rem(p, &a, &b);
        a = b;
        b = r;
    }
    make_monic(p, a)
}

pub fn make_monic(p: u64, a: Vec<u64>) -> Vec<u64> {
    match deg(&a) {
        None => a,
        Some(d) => {
            let inv = mod_inverse(a[d], p).unwrap();
            trim(a.iter().map(|&c| mulmod(c, inv, p)).collect())
        }
    }
}

/// Extended Euclid: returns (g, s, t) with s*a + t*b = g, g monic.
pub fn extended_gcd(p: u64, a: &[u64], b: &[u64]) -> (Vec<u64>, Vec<u64>, Vec<u64>) {
    let mut r0 = trim(a.to_vec());
    let mut r1 = trim(b.to_vec());
    let mut s0: Vec<u64> = vec![1];
    let mut s1: Vec<u64> = Vec::new();
    let mut t0: Vec<u64> = Vec::new();
    let mut t1: Vec<u64> = vec![1];
    while !is_zero(&r1) {
        let (q, r) = divrem(p, &r0, &r1);
        let s = sub(p, &s0, &mul(p, &q, &s1));
        let t = sub(p, &t0, &mul(p, &q, &t1));
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s;
        t0 = t1;
        t1 = t;
    }
    // Normalize so the gcd is monic.
    if let Some(d) = deg(&r0) {
        let inv = mod_inverse(r0[d], p).unwrap();
        let scale = |v: &[u64]| trim(v.iter().map(|&c| mulmod(c, inv, p)).collect());
        return (scale(&r0), scale(&s0), scale(&t0));
    }
    (r0, s0, t0)
}

/// base^exp mod modulus, exponent a plain integer.
pub fn powmod(p: u64, base: &[u64], mut exp: u64, modulus: &[u64]) -> Vec<u64> {
    let mut acc: Vec<u64> = vec![1];
    let mut b = rem(p, base, modulus);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = rem(p, &mul(p, &acc, &b), modulus);
        }
        b = rem(p, &mul(p, &b, &b), modulus);
        exp >>= 1;
    }
    acc
}

/// x^n - 1 over F_p.
pub fn x_pow_minus_one(p: u64, n: usize) -> Vec<u64> {
    let mut v = vec![0u64; n + 1];
    v[0] = p - 1;
    v[n] = 1;
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divrem_roundtrip() {
        let p = 2;
        let a = vec![1, 0, 0, 0, 0, 0, 0, 1]; // x^7 + 1
        let b = vec![1, 1, 0, 1]; // x^3 + x + 1
        let (q, r) = divrem(p, &a, &b);
        assert!(is_zero(&r) || deg(&r).unwrap() < deg(&b).unwrap());
        let back = add(p, &mul(p, &q, &b), &r);
        assert_eq!(back, trim(a));
    }

    #[test]
    fn extended_gcd_identity() {
        let p = 2;
        // x^7 - 1 = (x+1)(x^3+x+1)(x^3+x^2+1); pick coprime factors.
        let g = vec![1, 1]; // x + 1
        let h = vec![1, 1, 0, 1]; // x^3 + x + 1
        let (d, s, t) = extended_gcd(p, &g, &h);
        assert_eq!(d, vec![1]);
        let lhs = add(p, &mul(p, &s, &g), &mul(p, &t, &h));
        assert_eq!(lhs, vec![1]);
    }

    #[test]
    fn gcd_of_shared_factor() {
        let p = 3;
        let f = vec![1, 1]; // x + 1
        let a = mul(p, &f, &[2, 1]); // (x+1)(x+2)
        let b = mul(p, &f, &[1, 0, 1]); // (x+1)(x^2+1)
        assert_eq!(gcd(p, &a, &b), f);
    }
}
