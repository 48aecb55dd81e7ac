//! Code-family constructions: punctured-GRS optimal collections,
//! concatenation, Piret two-component pairs from irreducible cyclic codes,
//! primitive-coset pairs, quadratic-residue pairs, cubic-residue triples,
//! and coset-partition presets.

use crate::code::{
    binary_weight_sweep, min_distance, pack_word, xor_row, DistanceConfig, GeneratorMatrix,
    LinearCode, PackedRow, SweepOutcome,
};
use crate::cyclic::{code_field_iso, coset, generator_matrix_of, CyclicCodeSpec};
use crate::eccir::{Eccir, EquivalenceClaim, Provenance};
use crate::gf::FieldSpec;
use crate::numtheory::{gcd, is_prime, mod_inverse, mulmod, mult_order, powmod};
use crate::{Error, Result};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

// ---------------------------------------------------------------------------
// Punctured GRS collections (k = 1, every subset meets Singleton).

/// Optimal single-symbol collection: takes the systematic [n + L, L, n + 1]
/// Reed-Solomon code [I | G] and returns the L rows of G as components.
/// Requires q > n + L distinct evaluation points.
pub fn mdsir_from_grs(q: u64, n: usize, l: usize) -> Result<Eccir> {
    if q <= (n + l) as u64 {
        return Err(Error::InvalidParameter(format!(
            "need q > n + L distinct points, got q={q}, n+L={}",
            n + l
        )));
    }
    let field = FieldSpec::of_order(q)?;
    // Points 0, 1, g, g^2, ... for primitive g.
    let g = field.primitive_element();
    let mut points = Vec::with_capacity(n + l);
    points.push(0u64);
    let mut p = 1u64;
    for _ in 0..n + l - 1 {
        points.push(p);
        p = field.mul(p, g);
    }
    let rows: Vec<Vec<u64>> = (0..l)
        .map(|i| points.iter().map(|&x| field.pow(x, i as u64)).collect())
        .collect();
    let rs = GeneratorMatrix::new(field.clone(), rows)?;
    let sys = to_systematic(&rs)?;
    let components: Vec<GeneratorMatrix> = sys
        .rows
        .iter()
        .map(|r| GeneratorMatrix::new(field.clone(), vec![r[l..].to_vec()]))
        .collect::<Result<_>>()?;
    let provenance = Provenance {
        construction: String::from("grs-mdsir"),
        params: vec![
            (String::from("q"), q.to_string()),
            (String::from("n"), n.to_string()),
            (String::from("L"), l.to_string()),
        ],
        ..Default::default()
    };
    Eccir::new(components, Some(provenance))
}

/// Row-reduces to [I | G]; fails if the leading k columns are not
/// independent.
pub fn to_systematic(g: &GeneratorMatrix) -> Result<GeneratorMatrix> {
    let f = &g.field;
    let k = g.k();
    let mut m = g.rows.clone();
    for col in 0..k {
        let piv = (col..k)
            .find(|&i| m[i][col] != 0)
            .ok_or(Error::NotSystematic)?;
        m.swap(col, piv);
        let inv = f.inv(m[col][col])?;
        for x in m[col].iter_mut() {
            *x = f.mul(*x, inv);
        }
        let pivot_row = m[col].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != col && row[col] != 0 {
                let c = row[col];
                for (x, &p) in row.iter_mut().zip(&pivot_row) {
                    *x = f.sub(*x, f.mul(c, p));
                }
            }
        }
    }
    GeneratorMatrix::new(f.clone(), m)
}

/// True iff every square submatrix of G is nonsingular; the brute-force
/// certificate that the k = 1 collection meets Singleton everywhere.
/// Refuses when the number of determinants exceeds `budget`.
pub fn verify_all_square_submatrices(g: &GeneratorMatrix, budget: u64) -> Result<bool> {
    let (l, n) = (g.k(), g.n());
    let mut total: u64 = 0;
    for s in 1..=l.min(n) {
        total = total.saturating_add(binomial(l, s).saturating_mul(binomial(n, s)));
    }
    if total > budget {
        return Err(Error::BudgetExceeded);
    }
    for s in 1..=l.min(n) {
        for rows in combinations(l, s) {
            for cols in combinations(n, s) {
                let sub: Vec<Vec<u64>> = rows
                    .iter()
                    .map(|&r| cols.iter().map(|&c| g.rows[r][c]).collect())
                    .collect();
                if square_rank(&g.field, sub) < s {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

fn binomial(n: usize, k: usize) -> u64 {
    let mut acc: u64 = 1;
    for i in 0..k {
        acc = acc.saturating_mul((n - i) as u64) / (i as u64 + 1);
    }
    acc
}

fn combinations(n: usize, s: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..s).collect();
    if s > n {
        return out;
    }
    loop {
        out.push(idx.clone());
        // Advance the rightmost index that can still move.
        let mut i = s;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] < n - (s - i) {
                idx[i] += 1;
                for j in i + 1..s {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
    }
}

fn square_rank(f: &FieldSpec, mut m: Vec<Vec<u64>>) -> usize {
    let s = m.len();
    let mut r = 0;
    for col in 0..s {
        let Some(piv) = (r..s).find(|&i| m[i][col] != 0) else {
            continue;
        };
        m.swap(r, piv);
        let inv = f.inv(m[r][col]).unwrap();
        for x in m[r].iter_mut() {
            *x = f.mul(*x, inv);
        }
        let pr = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && row[col] != 0 {
                let c = row[col];
                for (x, &p) in row.iter_mut().zip(&pr) {
                    *x = f.sub(*x, f.mul(c, p));
                }
            }
        }
        r += 1;
    }
    r
}

// ---------------------------------------------------------------------------
// Concatenation.

/// Outer collection over F_{2^m} plus a binary inner [n_in, m] code.
#[derive(Debug, Clone)]
pub struct ConcatConfig {
    pub outer: Eccir,
    pub inner: GeneratorMatrix,
}

/// Expands every outer symbol on the polynomial basis of F_{2^m} and
/// encodes the m bits with the inner code; components become binary
/// (k_out * m) x (n_out * n_in) matrices.
pub fn concatenate(cfg: &ConcatConfig) -> Result<Eccir> {
    let outer_field = cfg.outer.field().clone();
    if outer_field.p() != 2 {
        return Err(Error::InvalidParameter(String::from(
            "concatenation requires a binary-extension outer field",
        )));
    }
    let m = outer_field.m() as usize;
    if cfg.inner.q() != 2 || cfg.inner.k() != m {
        return Err(Error::DimensionMismatch);
    }
    let bin = FieldSpec::create(2, 1)?;
    let n_out = cfg.outer.n();
    let n_in = cfg.inner.n();
    let mut components = Vec::with_capacity(cfg.outer.l());
    for g in &cfg.outer.components {
        let mut rows = Vec::with_capacity(g.k() * m);
        for outer_row in &g.rows {
            for i in 0..m {
                let xi = outer_field.pow(2, i as u64); // the element x^i
                let mut row = Vec::with_capacity(n_out * n_in);
                for &sym in outer_row {
                    let bits = outer_field.coeffs(outer_field.mul(sym, xi));
                    row.extend(cfg.inner.encode(&bits)?);
                }
                rows.push(row);
            }
        }
        components.push(GeneratorMatrix::new(bin.clone(), rows)?);
    }
    let provenance = Provenance {
        construction: String::from("concat"),
        params: vec![
            (String::from("outer_q"), outer_field.order().to_string()),
            (String::from("n_out"), n_out.to_string()),
            (String::from("n_in"), n_in.to_string()),
        ],
        ..Default::default()
    };
    Eccir::new(components, Some(provenance))
}

/// Guaranteed subcode distance of a concatenated collection whose outer
/// code is an optimal k = 1 collection: d_in * (n_out - size + 1).
pub fn concat_distance_bound(d_in: u64, n_out: usize, size: usize) -> u64 {
    d_in * (n_out - size + 1) as u64
}

// ---------------------------------------------------------------------------
// Piret pairs from irreducible binary cyclic codes.

/// Two-component pair over an inner irreducible [n, k] cyclic code via the
/// field isomorphism phi: C_1 = {(phi(a), phi(beta a))},
/// C_2 = {(phi(beta a), phi(a))} for beta outside {0, 1}.
#[derive(Debug, Clone)]
pub struct PiretPair {
    pub inner: CyclicCodeSpec,
    pub beta: u64,
    pub eccir: Eccir,
}

/// Search outcome: the canonical maximizer of d(C_1) plus all ties.
#[derive(Debug, Clone)]
pub struct PiretSearch {
    pub pair: PiretPair,
    pub component_distance: u64,
    /// Every beta achieving the maximum, in enumeration order.
    pub maximizers: Vec<u64>,
}

struct PiretTables {
    iso_field: FieldSpec,
    k: usize,
    n_in: usize,
    /// Packed (phi(x^i), 0) rows.
    low: Vec<PackedRow>,
    /// high[i][t] = packed (0, phi(x^{i+t})): toggling bit t of beta flips
    /// this into row i.
    high: Vec<Vec<PackedRow>>,
    /// Unpacked phi images of x^e for direct row construction.
    images: Vec<Vec<u64>>,
}

fn piret_tables(inner: &CyclicCodeSpec) -> Result<PiretTables> {
    let iso = code_field_iso(inner)?;
    let k = iso.field.m() as usize;
    let n_in = inner.n() as usize;
    if 2 * k > 40 {
        return Err(Error::BudgetExceeded);
    }
    // phi(x^e) for e = 0..2k-2: x^e reduced in F_{2^k} is pow(x, e).
    let images: Vec<Vec<u64>> = (0..2 * k - 1)
        .map(|e| iso.apply_word(iso.field.pow(2, e as u64)))
        .collect();
    let low: Vec<PackedRow> = (0..k)
        .map(|i| {
            let mut w = images[i].clone();
            w.extend(core::iter::repeat(0).take(n_in));
            pack_word(&w)
        })
        .collect();
    let high: Vec<Vec<PackedRow>> = (0..k)
        .map(|i| {
            (0..k)
                .map(|t| {
                    let mut w = vec![0u64; n_in];
                    w.extend(images[i + t].iter().copied());
                    pack_word(&w)
                })
                .collect()
        })
        .collect();
    Ok(PiretTables { iso_field: iso.field, k, n_in, low, high, images })
}

impl PiretTables {
    /// Rows of C_1 for a given beta, as plain vectors.
    fn c1_rows(&self, beta: u64) -> Vec<Vec<u64>> {
        (0..self.k)
            .map(|i| {
                let mut w = self.images[i].clone();
                let mut hi = vec![0u64; self.n_in];
                for t in 0..self.k {
                    if beta >> t & 1 == 1 {
                        for (h, &b) in hi.iter_mut().zip(&self.images[i + t]) {
                            *h ^= b;
                        }
                    }
                }
                w.extend(hi);
                w
            })
            .collect()
    }
}

pub fn piret_pair(inner: &CyclicCodeSpec, beta: u64) -> Result<PiretPair> {
    let tables = piret_tables(inner)?;
    if beta <= 1 || !tables.iso_field.contains(beta) {
        return Err(Error::InvalidParameter(format!("beta must be in F_2^k minus {{0,1}}, got {beta}")));
    }
    let bin = FieldSpec::create(2, 1)?;
    let c1 = tables.c1_rows(beta);
    let c2: Vec<Vec<u64>> = c1
        .iter()
        .map(|r| {
            let (lo, hi) = r.split_at(tables.n_in);
            let mut w = hi.to_vec();
            w.extend_from_slice(lo);
            w
        })
        .collect();
    let d_in = {
        let g = generator_matrix_of(inner)?;
        min_distance(&LinearCode::new(g), &DistanceConfig::default()).exact_value()
    };
    let provenance = Provenance {
        construction: String::from("piret"),
        params: vec![
            (String::from("inner_n"), inner.n().to_string()),
            (String::from("beta"), beta.to_string()),
        ],
        product_inner_distance: d_in,
        ..Default::default()
    };
    let eccir = Eccir::new(
        vec![
            GeneratorMatrix::new(bin.clone(), c1)?,
            GeneratorMatrix::new(bin, c2)?,
        ],
        Some(provenance),
    )?;
    Ok(PiretPair { inner: inner.clone(), beta, eccir })
}

/// Scans every admissible beta (Gray order over F_{2^k} \ {0, 1}) and
/// returns a maximizer of d(C_1). Each candidate's enumeration aborts as
/// soon as it falls below the incumbent.
pub fn piret_search(inner: &CyclicCodeSpec) -> Result<PiretSearch> {
    piret_scan(inner, None)
}

/// Early-exit variant: returns the first beta whose component distance
/// reaches `target`. Err(Undecidable) when no beta reaches it.
pub fn piret_targeted_search(inner: &CyclicCodeSpec, target: u64) -> Result<PiretSearch> {
    piret_scan(inner, Some(target))
}

fn piret_scan(inner: &CyclicCodeSpec, target: Option<u64>) -> Result<PiretSearch> {
    let tables = piret_tables(inner)?;
    let k = tables.k;
    let mut rows: Vec<PackedRow> = tables.low.clone(); // beta = 0
    let mut beta: u64 = 0;
    let mut best: u32 = 0;
    let mut maximizers: Vec<u64> = Vec::new();
    for j in 1..(1u64 << k) {
        let t = j.trailing_zeros() as usize;
        beta ^= 1 << t;
        for (row, flips) in rows.iter_mut().zip(&tables.high) {
            xor_row(row, &flips[t]);
        }
        if beta <= 1 {
            continue;
        }
        let threshold = match target {
            Some(tg) => tg as u32,
            None => best,
        };
        match binary_weight_sweep(&rows, Some(threshold)) {
            SweepOutcome::Aborted => {}
            SweepOutcome::Completed { min } => {
                if let Some(tg) = target {
                    if min as u64 >= tg {
                        let pair = piret_pair(inner, beta)?;
                        return Ok(PiretSearch {
                            pair,
                            component_distance: min as u64,
                            maximizers: vec![beta],
                        });
                    }
                } else if min > best {
                    best = min;
                    maximizers.clear();
                    maximizers.push(beta);
                } else if min == best {
                    maximizers.push(beta);
                }
            }
        }
    }
    if target.is_some() || maximizers.is_empty() {
        return Err(Error::Undecidable);
    }
    let chosen = maximizers[0];
    let pair = piret_pair(inner, chosen)?;
    Ok(PiretSearch { pair, component_distance: best as u64, maximizers })
}

/// Irreducible binary cyclic code with nonzeroes C_1 mod n; dimension is
/// the multiplicative order of 2.
pub fn irreducible_inner(n: u64) -> Result<CyclicCodeSpec> {
    if n < 3 || n % 2 == 0 {
        return Err(Error::InvalidParameter(format!("need odd n >= 3, got {n}")));
    }
    CyclicCodeSpec::new(n, 2, coset(1, n, 2)?.members)
}

// ---------------------------------------------------------------------------
// Primitive-coset pairs (nonzeroes C_1 and C_3 mod 2^m - 1).

/// Pair of the [2^m - 1, m, 2^{m-1}] code (nonzeroes C_1) and the code
/// with nonzeroes C_3; the sum is a multiplier image of the dual of the
/// double-error-correcting primitive BCH code, so its distance obeys the
/// even Carlitz-Uchiyama lower bound.
pub fn primitive_pair(m: u32) -> Result<Eccir> {
    if m < 3 {
        return Err(Error::InvalidParameter(String::from("need m >= 3")));
    }
    let n = (1u64 << m) - 1;
    let t1 = coset(1, n, 2)?.members;
    let t3 = coset(3, n, 2)?.members;
    if t1.len() != m as usize || t3.len() != m as usize {
        return Err(Error::InvalidParameter(format!("cosets at n={n} not of full size {m}")));
    }
    let s1 = CyclicCodeSpec::new(n, 2, t1.clone())?;
    let s3 = CyclicCodeSpec::new(n, 2, t3.clone())?;
    let equivalences = if gcd(3, n) == 1 {
        vec![EquivalenceClaim { from: 1, to: 0, multiplier: 3 }]
    } else {
        Vec::new()
    };
    let provenance = Provenance {
        construction: String::from("primitive-pair"),
        params: vec![(String::from("m"), m.to_string())],
        cyclic_nonzeroes: Some(vec![t1, t3]),
        equivalences,
        carlitz_uchiyama_m: Some(m),
        ..Default::default()
    };
    Eccir::new(
        vec![generator_matrix_of(&s1)?, generator_matrix_of(&s3)?],
        Some(provenance),
    )
}

// ---------------------------------------------------------------------------
// Power-residue families.

fn residue_subgroup(n: u64, power: u64) -> Vec<u64> {
    let mut set = vec![false; n as usize];
    for a in 1..n {
        set[powmod(a, power, n) as usize] = true;
    }
    (1..n).filter(|&i| set[i as usize]).collect()
}

/// Pair of the two quadratic-residue codes at prime n = +-1 mod 8:
/// nonzeroes are the squares mod n and the non-squares; the sum is the
/// [n, n-1, 2] single-parity code.
pub fn quadratic_residue_pair(n: u64) -> Result<Eccir> {
    if !is_prime(n) || (n % 8 != 1 && n % 8 != 7) {
        return Err(Error::InvalidParameter(format!(
            "need prime n = +-1 mod 8, got {n}"
        )));
    }
    let t1 = residue_subgroup(n, 2);
    if !t1.contains(&2) {
        return Err(Error::InvalidParameter(format!("2 is not a square mod {n}")));
    }
    let t2: Vec<u64> = (1..n).filter(|i| !t1.contains(i)).collect();
    let b = t2[0]; // smallest non-residue; b maps the T_1 code onto T_2
    let s1 = CyclicCodeSpec::new(n, 2, t1.clone())?;
    let s2 = CyclicCodeSpec::new(n, 2, t2.clone())?;
    let provenance = Provenance {
        construction: String::from("qr"),
        params: vec![(String::from("n"), n.to_string())],
        cyclic_nonzeroes: Some(vec![t1, t2]),
        equivalences: vec![EquivalenceClaim { from: 1, to: 0, multiplier: b }],
        ..Default::default()
    };
    Eccir::new(
        vec![generator_matrix_of(&s1)?, generator_matrix_of(&s2)?],
        Some(provenance),
    )
}

/// Triple of the three cubic-residue codes at prime n with 3 | n - 1 and
/// 2 a cube mod n: nonzeroes are the cubes T_1 and its two cosets
/// T_2 = c T_1, T_3 = c^2 T_1 for the smallest non-cube c.
pub fn cubic_residue_triple(n: u64) -> Result<Eccir> {
    if !is_prime(n) || (n - 1) % 3 != 0 {
        return Err(Error::InvalidParameter(format!("need prime n with 3 | n-1, got {n}")));
    }
    if powmod(2, (n - 1) / 3, n) != 1 {
        return Err(Error::InvalidParameter(format!("2 is not a cube mod {n}")));
    }
    let t1 = residue_subgroup(n, 3);
    let c = (2..n).find(|&x| !t1.contains(&x)).unwrap();
    let coset_of = |mult: u64| -> Vec<u64> {
        let mut v: Vec<u64> = t1.iter().map(|&x| mulmod(x, mult, n)).collect();
        v.sort_unstable();
        v
    };
    let t2 = coset_of(c);
    let t3 = coset_of(mulmod(c, c, n));
    let specs = [
        CyclicCodeSpec::new(n, 2, t1.clone())?,
        CyclicCodeSpec::new(n, 2, t2.clone())?,
        CyclicCodeSpec::new(n, 2, t3.clone())?,
    ];
    let provenance = Provenance {
        construction: String::from("cr"),
        params: vec![
            (String::from("n"), n.to_string()),
            (String::from("c"), c.to_string()),
        ],
        cyclic_nonzeroes: Some(vec![t1, t2, t3]),
        // T_2 = c T_1 and T_3 = c^2 T_1, so mu_c and mu_{c^2} map the
        // T_2 and T_3 codes onto the T_1 code.
        equivalences: vec![
            EquivalenceClaim { from: 1, to: 0, multiplier: c },
            EquivalenceClaim { from: 2, to: 0, multiplier: mulmod(c, c, n) },
        ],
        ..Default::default()
    };
    let components = specs
        .iter()
        .map(generator_matrix_of)
        .collect::<Result<Vec<_>>>()?;
    Eccir::new(components, Some(provenance))
}

// ---------------------------------------------------------------------------
// Coset-partition collections.

/// Cyclic collection from disjoint unions of cyclotomic cosets; `parts`
/// lists coset representatives per component.
pub fn coset_partition_eccir(n: u64, q: u64, parts: &[Vec<u64>]) -> Result<Eccir> {
    if parts.is_empty() {
        return Err(Error::EmptySubset);
    }
    let mut nonzeroes: Vec<Vec<u64>> = Vec::with_capacity(parts.len());
    let mut specs = Vec::with_capacity(parts.len());
    for reps in parts {
        let mut t: Vec<u64> = Vec::new();
        for &r in reps {
            t.extend(coset(r, n, q)?.members);
        }
        let spec = CyclicCodeSpec::new(n, q, t)?;
        nonzeroes.push(spec.nonzeroes().to_vec());
        specs.push(spec);
    }
    // Derive multiplier equivalences onto the first component when they
    // exist; the profile re-verifies every claim before use.
    let mut equivalences = Vec::new();
    for (j, nz) in nonzeroes.iter().enumerate().skip(1) {
        if nz.len() != nonzeroes[0].len() {
            continue;
        }
        let found = (2..n).filter(|&a| gcd(a, n) == 1).find(|&a| {
            let inv = mod_inverse(a, n).unwrap();
            let mut img: Vec<u64> = nz.iter().map(|&x| mulmod(x, inv, n)).collect();
            img.sort_unstable();
            img == nonzeroes[0]
        });
        if let Some(a) = found {
            equivalences.push(EquivalenceClaim { from: j, to: 0, multiplier: a });
        }
    }
    let provenance = Provenance {
        construction: String::from("coset-partition"),
        params: vec![
            (String::from("n"), n.to_string()),
            (String::from("q"), q.to_string()),
        ],
        cyclic_nonzeroes: Some(nonzeroes),
        equivalences,
        ..Default::default()
    };
    let components = specs
        .iter()
        .map(generator_matrix_of)
        .collect::<Result<Vec<_>>>()?;
    Eccir::new(components, Some(provenance))
}

/// The [31,10,12] / [31,20,6] / [31,30,2] triple from the coset partition
/// {C_1 u C_3, C_5 u C_15, C_7 u C_11} at n = 31.
pub fn example1_triple() -> Result<Eccir> {
    coset_partition_eccir(
        31,
        2,
        &[vec![1, 3], vec![5, 15], vec![7, 11]],
    )
}

/// Sanity helper for power-residue preconditions: order of 2 mod n.
pub fn order_of_two(n: u64) -> u64 {
    mult_order(2, n)
}
