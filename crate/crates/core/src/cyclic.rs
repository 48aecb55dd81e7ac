//! Cyclotomic cosets and cyclic-code algebra.
//!
//! A cyclic code of length n over F_q (gcd(n, q) = 1) is identified by its
//! set of nonzeroes T, a union of q-cyclotomic cosets modulo n. This module
//! computes generator and check polynomials, multiplier permutations,
//! primitive idempotents, and the field isomorphism onto an irreducible
//! cyclic code used by the Piret concatenation.
//!
//! Polynomial-level operations require prime q; the coset machinery works
//! for any prime power q.

use crate::code::GeneratorMatrix;
use crate::gf::{nth_root_of_unity, FieldSpec};
use crate::numtheory::{gcd, mod_inverse};
use crate::poly;
use crate::{Error, Result};
use alloc::vec;
use alloc::vec::Vec;

/// Orbit of i under multiplication by q modulo n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclotomicCoset {
    pub representative: u64,
    /// Sorted members.
    pub members: Vec<u64>,
    pub n: u64,
    pub q: u64,
}

pub fn coset(i: u64, n: u64, q: u64) -> Result<CyclotomicCoset> {
    if gcd(n, q) != 1 {
        return Err(Error::GcdViolation { a: n, b: q });
    }
    let i = i % n;
    let mut members = vec![i];
    let mut x = i * q % n;
    while x != i {
        members.push(x);
        x = x * q % n;
    }
    members.sort_unstable();
    Ok(CyclotomicCoset { representative: members[0], members, n, q })
}

/// All q-cyclotomic cosets modulo n, sorted by representative.
pub fn coset_partition(n: u64, q: u64) -> Result<Vec<CyclotomicCoset>> {
    if gcd(n, q) != 1 {
        return Err(Error::GcdViolation { a: n, b: q });
    }
    let mut seen = vec![false; n as usize];
    let mut out = Vec::new();
    for i in 0..n {
        if seen[i as usize] {
            continue;
        }
        let c = coset(i, n, q)?;
        for &m in &c.members {
            seen[m as usize] = true;
        }
        out.push(c);
    }
    Ok(out)
}

/// The algebraic identity of a cyclic code: (n, q, nonzero set T).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicCodeSpec {
    n: u64,
    q: u64,
    /// Sorted, deduplicated, coset-closed.
    nonzeroes: Vec<u64>,
}

impl CyclicCodeSpec {
    pub fn new(n: u64, q: u64, nonzeroes: impl IntoIterator<Item = u64>) -> Result<Self> {
        if gcd(n, q) != 1 {
            return Err(Error::GcdViolation { a: n, b: q });
        }
        let mut t: Vec<u64> = nonzeroes.into_iter().map(|i| i % n).collect();
        t.sort_unstable();
        t.dedup();
        for &i in &t {
            if t.binary_search(&(i * q % n)).is_err() {
                return Err(Error::NotCosetClosed(i));
            }
        }
        Ok(CyclicCodeSpec { n, q, nonzeroes: t })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn nonzeroes(&self) -> &[u64] {
        &self.nonzeroes
    }

    /// Dimension |T|.
    pub fn dimension(&self) -> usize {
        self.nonzeroes.len()
    }

    pub fn zeroes(&self) -> Vec<u64> {
        (0..self.n).filter(|i| self.nonzeroes.binary_search(i).is_err()).collect()
    }

    /// True iff T is a single cyclotomic coset.
    pub fn is_irreducible(&self) -> bool {
        if self.nonzeroes.is_empty() {
            return false;
        }
        let c = coset(self.nonzeroes[0], self.n, self.q).expect("spec invariant");
        c.members == self.nonzeroes
    }

    /// Nonzeroes with 0 removed: the even-weight subcode (q = 2).
    pub fn even_weight_subcode(&self) -> Result<CyclicCodeSpec> {
        if self.nonzeroes.binary_search(&0).is_err() {
            return Err(Error::AlreadyEvenWeight);
        }
        let t: Vec<u64> = self.nonzeroes.iter().copied().filter(|&i| i != 0).collect();
        CyclicCodeSpec::new(self.n, self.q, t)
    }
}

/// Result of applying the multiplier permutation mu_a.
#[derive(Debug, Clone)]
pub struct MultiplierTransform {
    /// Transformed spec: nonzeroes a^{-1} T.
    pub spec: CyclicCodeSpec,
    /// Coordinate permutation i -> a*i mod n for codeword-level use:
    /// coefficient at position i moves to position perm[i].
    pub perm: Vec<usize>,
}

pub fn multiplier_transform(spec: &CyclicCodeSpec, a: u64) -> Result<MultiplierTransform> {
    let n = spec.n();
    let a = a % n;
    let a_inv = mod_inverse(a, n).ok_or(Error::GcdViolation { a, b: n })?;
    let t: Vec<u64> = spec.nonzeroes().iter().map(|&i| a_inv * i % n).collect();
    let new_spec = CyclicCodeSpec::new(n, spec.q(), t)?;
    let perm = (0..n as usize).map(|i| (a as usize * i) % n as usize).collect();
    Ok(MultiplierTransform { spec: new_spec, perm })
}

/// Residue-class polynomial in R_n = F_q[x]/(x^n - 1), q prime.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingPolynomial {
    pub n: usize,
    pub q: u64,
    /// Ascending coefficients, trimmed; degree may reach n only for the
    /// plain-polynomial view of x^n - 1 itself.
    pub coeffs: Vec<u64>,
}

impl RingPolynomial {
    pub fn new(n: usize, q: u64, coeffs: Vec<u64>) -> Self {
        RingPolynomial { n, q, coeffs: poly::trim(coeffs) }
    }

    pub fn zero(n: usize, q: u64) -> Self {
        RingPolynomial { n, q, coeffs: Vec::new() }
    }

    pub fn one(n: usize, q: u64) -> Self {
        RingPolynomial { n, q, coeffs: vec![1] }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        poly::deg(&self.coeffs)
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!((self.n, self.q), (other.n, other.q));
        RingPolynomial::new(self.n, self.q, poly::add(self.q, &self.coeffs, &other.coeffs))
    }

    /// Product reduced modulo x^n - 1.
    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!((self.n, self.q), (other.n, other.q));
        let raw = poly::mul(self.q, &self.coeffs, &other.coeffs);
        let mut folded = vec![0u64; self.n];
        for (i, &c) in raw.iter().enumerate() {
            let j = i % self.n;
            folded[j] = (folded[j] + c) % self.q;
        }
        RingPolynomial::new(self.n, self.q, folded)
    }

    /// Multiplication by x^j (cyclic shift).
    pub fn shift(&self, j: usize) -> Self {
        let mut out = vec![0u64; self.n];
        for (i, &c) in self.coeffs.iter().enumerate() {
            out[(i + j) % self.n] = c;
        }
        RingPolynomial::new(self.n, self.q, out)
    }

    /// Dense coefficient vector of length n.
    pub fn to_word(&self) -> Vec<u64> {
        let mut w = vec![0u64; self.n];
        w[..self.coeffs.len()].copy_from_slice(&self.coeffs);
        w
    }
}

fn require_prime_q(q: u64) -> Result<()> {
    if crate::numtheory::is_prime(q) {
        Ok(())
    } else {
        Err(Error::InvalidParameter(alloc::format!(
            "polynomial operations require prime q, got {q}"
        )))
    }
}

/// Minimal polynomial over F_q of alpha^i for i ranging over one coset:
/// the product of (x - alpha^j), j in the coset, computed in the splitting
/// field and projected back to F_q.
fn coset_minimal_polynomial(
    field: &FieldSpec,
    alpha: u64,
    members: &[u64],
    q: u64,
) -> Vec<u64> {
    // Coefficients live in the extension field during the product.
    let mut acc: Vec<u64> = vec![1]; // constant 1 in the extension encoding
    for &j in members {
        let root = field.pow(alpha, j);
        // acc *= (x - root)
        let mut next = vec![0u64; acc.len() + 1];
        for (i, &c) in acc.iter().enumerate() {
            next[i + 1] = field.add(next[i + 1], c);
            next[i] = field.add(next[i], field.mul(field.neg(root), c));
        }
        acc = next;
    }
    // Every coefficient must land in the prime subfield.
    acc.iter()
        .map(|&c| {
            assert!(
                field.in_prime_subfield(c),
                "coset product coefficient escaped the base field"
            );
            c % q
        })
        .collect()
}

/// g(x): monic divisor of x^n - 1 with roots alpha^i over the zero cosets.
pub fn generator_polynomial(spec: &CyclicCodeSpec) -> Result<RingPolynomial> {
    require_prime_q(spec.q())?;
    let n = spec.n();
    let q = spec.q();
    let (field, alpha) = nth_root_of_unity(n, q)?;
    let mut g: Vec<u64> = vec![1];
    let mut covered = vec![false; n as usize];
    for &i in &spec.zeroes() {
        if covered[i as usize] {
            continue;
        }
        let c = coset(i, n, q)?;
        for &m in &c.members {
            covered[m as usize] = true;
        }
        let mp = coset_minimal_polynomial(&field, alpha, &c.members, q);
        g = poly::mul(q, &g, &mp);
    }
    debug_assert_eq!(poly::deg(&g), Some(n as usize - spec.dimension()));
    debug_assert!(poly::is_zero(&poly::rem(q, &poly::x_pow_minus_one(q, n as usize), &g)));
    Ok(RingPolynomial::new(n as usize, q, g))
}

/// h(x) = (x^n - 1) / g(x).
pub fn check_polynomial(spec: &CyclicCodeSpec) -> Result<RingPolynomial> {
    let g = generator_polynomial(spec)?;
    let n = spec.n() as usize;
    let q = spec.q();
    let (h, r) = poly::divrem(q, &poly::x_pow_minus_one(q, n), &g.coeffs);
    debug_assert!(poly::is_zero(&r));
    Ok(RingPolynomial::new(n, q, h))
}

/// The idempotent identity e of the ideal (g): e = s*g with s*g + t*h = 1.
pub fn primitive_idempotent(spec: &CyclicCodeSpec) -> Result<RingPolynomial> {
    if spec.dimension() == 0 {
        return Err(Error::ZeroIdeal);
    }
    let q = spec.q();
    let n = spec.n() as usize;
    let g = generator_polynomial(spec)?;
    let h = check_polynomial(spec)?;
    let (d, s, _t) = poly::extended_gcd(q, &g.coeffs, &h.coeffs);
    debug_assert_eq!(poly::deg(&d), Some(0), "g and h must be coprime (squarefree x^n - 1)");
    let scale = mod_inverse(d[0], q).unwrap();
    let s: Vec<u64> = s.iter().map(|&c| crate::numtheory::mulmod(c, scale, q)).collect();
    let e = RingPolynomial::new(n, q, s).mul(&g);
    debug_assert_eq!(e.mul(&e), e);
    Ok(e)
}

/// Standard cyclic generator matrix: rows x^j g(x), j = 0..|T|-1.
pub fn generator_matrix_of(spec: &CyclicCodeSpec) -> Result<GeneratorMatrix> {
    require_prime_q(spec.q())?;
    let field = FieldSpec::create(spec.q(), 1)?;
    let g = generator_polynomial(spec)?;
    let k = spec.dimension();
    let rows: Vec<Vec<u64>> = (0..k).map(|j| g.shift(j).to_word()).collect();
    GeneratorMatrix::new(field, rows)
}

/// Field isomorphism phi: F_{2^k} -> C onto an irreducible binary cyclic
/// code whose nonzero coset has full size k = ord_n(2).
///
/// phi is the inverse of the evaluation map c(x) -> c(alpha^b) (b the coset
/// representative), which is a ring isomorphism from the ideal onto
/// F_{2^k}; it is computed once as a k x k basis-change matrix over F_2.
#[derive(Debug, Clone)]
pub struct CodeFieldIso {
    pub spec: CyclicCodeSpec,
    /// Idempotent identity of the ideal; equals phi(1).
    pub idempotent: RingPolynomial,
    /// phi(gamma) for the primitive element gamma of F_{2^k}; has
    /// multiplicative order 2^k - 1 under ring multiplication.
    pub theta: RingPolynomial,
    /// The source field F_{2^k}.
    pub field: FieldSpec,
    /// Images of the polynomial basis x^i of F_{2^k}, i = 0..k-1.
    pub basis_images: Vec<RingPolynomial>,
}

pub fn code_field_iso(spec: &CyclicCodeSpec) -> Result<CodeFieldIso> {
    if spec.q() != 2 {
        return Err(Error::InvalidParameter("code field isomorphism requires q = 2".into()));
    }
    if !spec.is_irreducible() {
        return Err(Error::NotIrreducible);
    }
    let n = spec.n();
    let k = spec.dimension();
    let (field, alpha) = nth_root_of_unity(n, 2)?;
    if field.m() as usize != k {
        return Err(Error::InvalidParameter(
            "nonzero coset must have full size ord_n(2)".into(),
        ));
    }
    let b = spec.nonzeroes()[0];
    let beta = field.pow(alpha, b);
    // Powers of beta for fast evaluation.
    let mut pw = vec![1u64; n as usize];
    for i in 1..n as usize {
        pw[i] = field.mul(pw[i - 1], beta);
    }
    let eval = |p: &RingPolynomial| -> u64 {
        p.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .fold(0u64, |acc, (i, _)| field.add(acc, pw[i]))
    };
    let g = generator_polynomial(spec)?;
    let basis: Vec<RingPolynomial> = (0..k).map(|j| g.shift(j)).collect();
    // M over F_2: column j = bits of eval(x^j g).
    let cols: Vec<u64> = basis.iter().map(eval).collect();
    let minv = invert_f2(&cols, k).ok_or(Error::RankDeficient { expected: k, actual: 0 })?;
    // basis_images[i] = phi(x^i): combine ideal basis by column i of M^{-1}.
    let basis_images: Vec<RingPolynomial> = (0..k)
        .map(|i| {
            let mut acc = RingPolynomial::zero(n as usize, 2);
            for (j, row) in minv.iter().enumerate() {
                if row >> i & 1 == 1 {
                    acc = acc.add(&basis[j]);
                }
            }
            acc
        })
        .collect();
    let apply = |a: u64| -> RingPolynomial {
        let mut acc = RingPolynomial::zero(n as usize, 2);
        for (i, img) in basis_images.iter().enumerate() {
            if a >> i & 1 == 1 {
                acc = acc.add(img);
            }
        }
        acc
    };
    let idempotent = apply(1);
    let theta = apply(field.primitive_element());
    Ok(CodeFieldIso {
        spec: spec.clone(),
        idempotent,
        theta,
        field,
        basis_images,
    })
}

impl CodeFieldIso {
    /// phi(a) as a ring polynomial.
    pub fn apply(&self, a: u64) -> RingPolynomial {
        let mut acc = RingPolynomial::zero(self.spec.n() as usize, 2);
        for (i, img) in self.basis_images.iter().enumerate() {
            if a >> i & 1 == 1 {
                acc = acc.add(img);
            }
        }
        acc
    }

    /// phi(a) as a dense codeword of length n.
    pub fn apply_word(&self, a: u64) -> Vec<u64> {
        self.apply(a).to_word()
    }
}

/// Inverts a k x k F_2 matrix given as column bit-vectors; returns rows of
/// the inverse as bit-vectors, or None if singular.
fn invert_f2(cols: &[u64], k: usize) -> Option<Vec<u64>> {
    // Work on rows of M: row r bit c = bit r of cols[c].
    let mut m: Vec<u64> = (0..k)
        .map(|r| {
            cols.iter()
                .enumerate()
                .fold(0u64, |acc, (c, &col)| acc | (((col >> r) & 1) << c))
        })
        .collect();
    let mut inv: Vec<u64> = (0..k).map(|r| 1u64 << r).collect();
    for col in 0..k {
        let pivot = (col..k).find(|&r| m[r] >> col & 1 == 1)?;
        m.swap(col, pivot);
        inv.swap(col, pivot);
        for r in 0..k {
            if r != col && m[r] >> col & 1 == 1 {
                m[r] ^= m[col];
                inv[r] ^= inv[col];
            }
        }
    }
    Some(inv)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coset_examples_n31() {
        assert_eq!(coset(1, 31, 2).unwrap().members, vec![1, 2, 4, 8, 16]);
        assert_eq!(coset(0, 31, 2).unwrap().members, vec![0]);
        assert_eq!(coset(11, 31, 2).unwrap().members, vec![11, 13, 21, 22, 26]);
    }

    #[test]
    fn partition_n31() {
        let parts = coset_partition(31, 2).unwrap();
        let reps: Vec<u64> = parts.iter().map(|c| c.representative).collect();
        assert_eq!(reps, vec![0, 1, 3, 5, 7, 11, 15]);
        let total: usize = parts.iter().map(|c| c.members.len()).sum();
        assert_eq!(total, 31);
    }

    #[test]
    fn partition_n7() {
        let parts = coset_partition(7, 2).unwrap();
        let members: Vec<Vec<u64>> = parts.iter().map(|c| c.members.clone()).collect();
        assert_eq!(members, vec![vec![0], vec![1, 2, 4], vec![3, 5, 6]]);
    }

    #[test]
    fn partition_disjoint_union_many() {
        for (n, q) in [(9u64, 2u64), (15, 2), (21, 2), (31, 2), (26, 3), (8, 3)] {
            let parts = coset_partition(n, q).unwrap();
            let mut all: Vec<u64> = parts.iter().flat_map(|c| c.members.clone()).collect();
            all.sort_unstable();
            assert_eq!(all, (0..n).collect::<Vec<_>>(), "n={n} q={q}");
        }
        assert!(coset_partition(6, 2).is_err());
    }

    #[test]
    fn single_parity_check_generator() {
        let spec = CyclicCodeSpec::new(31, 2, 1..31).unwrap();
        let g = generator_polynomial(&spec).unwrap();
        assert_eq!(g.coeffs, vec![1, 1]); // x + 1
        let h = check_polynomial(&spec).unwrap();
        assert_eq!(h.degree(), Some(30));
    }

    #[test]
    fn whole_ring_generator() {
        let spec = CyclicCodeSpec::new(7, 2, 0..7).unwrap();
        let g = generator_polynomial(&spec).unwrap();
        assert_eq!(g.coeffs, vec![1]);
        let h = check_polynomial(&spec).unwrap();
        assert_eq!(h.degree(), Some(7)); // x^7 - 1
    }

    #[test]
    fn gh_identity_n7() {
        let spec = CyclicCodeSpec::new(7, 2, [1, 2, 4]).unwrap();
        let g = generator_polynomial(&spec).unwrap();
        assert_eq!(g.degree(), Some(4));
        let h = check_polynomial(&spec).unwrap();
        let prod = poly::mul(2, &g.coeffs, &h.coeffs);
        assert_eq!(prod, poly::x_pow_minus_one(2, 7));
    }

    #[test]
    fn gh_identity_various() {
        for (n, t) in [
            (31u64, vec![1u64, 2, 4, 8, 16, 3, 6, 12, 24, 17]),
            (9, vec![1, 2, 4, 8, 7, 5]),
            (15, vec![1, 2, 4, 8]),
            (17, coset(1, 17, 2).unwrap().members),
        ] {
            let spec = CyclicCodeSpec::new(n, 2, t).unwrap();
            let g = generator_polynomial(&spec).unwrap();
            let h = check_polynomial(&spec).unwrap();
            assert_eq!(
                poly::mul(2, &g.coeffs, &h.coeffs),
                poly::x_pow_minus_one(2, n as usize),
                "n={n}"
            );
            assert_eq!(g.degree().unwrap() + h.degree().unwrap(), n as usize);
        }
    }

    #[test]
    fn multiplier_example1() {
        // T_2 = C_5 u C_15 = 5 * T_1, and 5^{-1} = 25, so mu_5 maps the
        // T_2 code onto the T_1 = C_1 u C_3 code.
        let t2: Vec<u64> = [coset(5, 31, 2).unwrap().members, coset(15, 31, 2).unwrap().members]
            .concat();
        let spec2 = CyclicCodeSpec::new(31, 2, t2).unwrap();
        let t1: Vec<u64> = [coset(1, 31, 2).unwrap().members, coset(3, 31, 2).unwrap().members]
            .concat();
        let spec1 = CyclicCodeSpec::new(31, 2, t1).unwrap();
        assert_eq!(multiplier_transform(&spec2, 5).unwrap().spec, spec1);

        let t3: Vec<u64> = [coset(7, 31, 2).unwrap().members, coset(11, 31, 2).unwrap().members]
            .concat();
        let spec3 = CyclicCodeSpec::new(31, 2, t3).unwrap();
        // T_3 = 7 * T_1 with 7^{-1} = 9.
        assert_eq!(multiplier_transform(&spec3, 7).unwrap().spec, spec1);

        // Identity and inverse round trip.
        assert_eq!(multiplier_transform(&spec1, 1).unwrap().spec, spec1);
        let fwd = multiplier_transform(&spec2, 9).unwrap().spec;
        let back = multiplier_transform(&fwd, mod_inverse(9, 31).unwrap()).unwrap().spec;
        assert_eq!(back, spec2);
    }

    #[test]
    fn even_weight_subcode_edges() {
        let spec = CyclicCodeSpec::new(31, 2, 0..31).unwrap();
        let even = spec.even_weight_subcode().unwrap();
        assert_eq!(even.nonzeroes(), (1..31).collect::<Vec<_>>());

        let zero_only = CyclicCodeSpec::new(31, 2, [0]).unwrap();
        assert!(zero_only.even_weight_subcode().unwrap().nonzeroes().is_empty());

        assert_eq!(even.even_weight_subcode(), Err(Error::AlreadyEvenWeight));
    }

    #[test]
    fn irreducibility_flag() {
        let c1 = CyclicCodeSpec::new(31, 2, coset(1, 31, 2).unwrap().members).unwrap();
        assert!(c1.is_irreducible());
        let t: Vec<u64> = [coset(1, 31, 2).unwrap().members, coset(3, 31, 2).unwrap().members]
            .concat();
        assert!(!CyclicCodeSpec::new(31, 2, t).unwrap().is_irreducible());
        let c9 = CyclicCodeSpec::new(9, 2, coset(1, 9, 2).unwrap().members).unwrap();
        assert!(c9.is_irreducible());
        assert_eq!(c9.dimension(), 6);
    }

    #[test]
    fn idempotent_properties() {
        // Whole ring: e = 1.
        let whole = CyclicCodeSpec::new(7, 2, 0..7).unwrap();
        assert_eq!(primitive_idempotent(&whole).unwrap(), RingPolynomial::one(7, 2));

        // [9,6] irreducible code: e^2 = e, e*g = g.
        let spec = CyclicCodeSpec::new(9, 2, coset(1, 9, 2).unwrap().members).unwrap();
        let e = primitive_idempotent(&spec).unwrap();
        assert!(!e.is_zero());
        assert_eq!(e.mul(&e), e);
        let g = generator_polynomial(&spec).unwrap();
        assert_eq!(e.mul(&g), g);

        let empty = CyclicCodeSpec::new(9, 2, core::iter::empty()).unwrap();
        assert_eq!(primitive_idempotent(&empty), Err(Error::ZeroIdeal));
    }

    #[test]
    fn iso_is_a_field_isomorphism() {
        let spec = CyclicCodeSpec::new(9, 2, coset(1, 9, 2).unwrap().members).unwrap();
        let iso = code_field_iso(&spec).unwrap();
        let f = &iso.field;
        assert_eq!(f.order(), 64);
        assert!(iso.apply(0).is_zero());
        assert_eq!(iso.apply(1), iso.idempotent);
        assert_eq!(iso.idempotent, primitive_idempotent(&spec).unwrap());
        // Additivity and multiplicativity on all pairs of a small slice.
        for a in 0..16u64 {
            for b in 0..16u64 {
                assert_eq!(iso.apply(f.add(a, b)), iso.apply(a).add(&iso.apply(b)));
                assert_eq!(iso.apply(f.mul(a, b)), iso.apply(a).mul(&iso.apply(b)));
            }
        }
        // phi(gamma) has multiplicative order 2^6 - 1 = 63.
        let mut x = iso.theta.clone();
        let mut ord = 1;
        while x != iso.idempotent {
            x = x.mul(&iso.theta);
            ord += 1;
            assert!(ord <= 63);
        }
        assert_eq!(ord, 63);
    }

    #[test]
    fn iso_rejects_non_irreducible() {
        let spec = CyclicCodeSpec::new(31, 2, 1..31).unwrap();
        assert_eq!(code_field_iso(&spec).err(), Some(Error::NotIrreducible));
    }
}
