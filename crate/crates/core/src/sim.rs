//! Informed-receiver channel simulation: side-information cancellation,
//! exhaustive maximum-likelihood decoding, and seeded trial batches.

use crate::code::{
    pack_rows, pack_word, packed_weight, xor_row, LinearCode, PackedRow,
};
use crate::eccir::Eccir;
use crate::gf::FieldSpec;
use crate::{Error, Result};
use alloc::vec;
use alloc::vec::Vec;
use rand_core::{RngCore, SeedableRng};

/// Identifier of the trial RNG, recorded in reports for cross-language
/// reproducibility.
pub const RNG_ALGORITHM: &str = "chacha8";

/// How channel errors are drawn.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ErrorModel {
    /// Exactly t errors at distinct uniform positions, uniform nonzero
    /// values. Matches the worst-case distance guarantees.
    FixedWeight(usize),
    /// Independent per-coordinate corruption with the given probability.
    Bsc(f64),
}

/// Cancels the known contributions: y_S = y - sum over known components.
/// `s` lists the known component indices (0-based, proper subset) and
/// `known` their message blocks.
pub fn receiver_reduce(
    e: &Eccir,
    y: &[u64],
    s: &[usize],
    known: &[Vec<u64>],
) -> Result<Vec<u64>> {
    if s.len() >= e.l() {
        return Err(Error::NothingToDecode);
    }
    if s.len() != known.len() || y.len() != e.n() {
        return Err(Error::DimensionMismatch);
    }
    let f = e.field().clone();
    let mut out = y.to_vec();
    for (&idx, w) in s.iter().zip(known) {
        if idx >= e.l() {
            return Err(Error::DimensionMismatch);
        }
        let c = e.components[idx].encode(w)?;
        for (o, &ci) in out.iter_mut().zip(&c) {
            *o = f.sub(*o, ci);
        }
    }
    Ok(out)
}

/// Nearest-codeword decoding result.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decoded {
    pub message: Vec<u64>,
    pub codeword: Vec<u64>,
    pub distance: u64,
    /// Another codeword at the same distance exists; the reported one is
    /// the first in enumeration order.
    pub tie: bool,
}

/// Exhaustive maximum-likelihood decoding: the codeword nearest to y in
/// Hamming distance, over all q^k codewords.
pub fn ml_decode(code: &LinearCode, y: &[u64], limit_bits: u32) -> Result<Decoded> {
    let g = &code.gen;
    let (k, q) = (g.k(), g.q());
    if y.len() != g.n() {
        return Err(Error::DimensionMismatch);
    }
    let mut acc: u128 = 1;
    for _ in 0..k {
        acc = acc.saturating_mul(q as u128);
        if acc > 1u128 << limit_bits.min(126) {
            return Err(Error::BudgetExceeded);
        }
    }
    if q == 2 {
        Ok(ml_decode_binary(g.field.clone(), &g.rows, y))
    } else {
        Ok(ml_decode_generic(&g.field, &g.rows, y))
    }
}

fn ml_decode_binary(field: FieldSpec, rows: &[Vec<u64>], y: &[u64]) -> Decoded {
    let k = rows.len();
    let packed = pack_rows(rows);
    let target = pack_word(y);
    // Start at the zero codeword; Gray steps change one message bit.
    let mut cw: PackedRow = [0; 4];
    let mut best_dist = diff_weight(&cw, &target);
    let mut best_msg: u64 = 0;
    let mut tie = false;
    for j in 1..(1u64 << k) {
        let t = j.trailing_zeros() as usize;
        xor_row(&mut cw, &packed[t]);
        let dist = diff_weight(&cw, &target);
        let msg = j ^ (j >> 1); // current message in Gray order
        match dist.cmp(&best_dist) {
            core::cmp::Ordering::Less => {
                best_dist = dist;
                best_msg = msg;
                tie = false;
            }
            core::cmp::Ordering::Equal => tie = true,
            core::cmp::Ordering::Greater => {}
        }
    }
    let message: Vec<u64> = (0..k).map(|i| best_msg >> i & 1).collect();
    let codeword = {
        let mut c = vec![0u64; y.len()];
        for (i, row) in rows.iter().enumerate() {
            if best_msg >> i & 1 == 1 {
                for (ci, &ri) in c.iter_mut().zip(row) {
                    *ci = field.add(*ci, ri);
                }
            }
        }
        c
    };
    Decoded { message, codeword, distance: best_dist as u64, tie }
}

fn diff_weight(a: &PackedRow, b: &PackedRow) -> u32 {
    let mut d = *a;
    xor_row(&mut d, b);
    packed_weight(&d)
}

fn ml_decode_generic(field: &FieldSpec, rows: &[Vec<u64>], y: &[u64]) -> Decoded {
    let k = rows.len();
    let n = y.len();
    let q = field.order();
    let mut digits = vec![0u64; k];
    let mut focus: Vec<usize> = (0..=k).collect();
    let mut dir = vec![true; k];
    let mut cw = vec![0u64; n];
    let hamming = |c: &[u64]| c.iter().zip(y).filter(|(a, b)| a != b).count() as u64;
    let mut best_dist = hamming(&cw);
    let mut best_msg = digits.clone();
    let mut best_cw = cw.clone();
    let mut tie = false;
    loop {
        let j = focus[0];
        focus[0] = 0;
        if j == k {
            break;
        }
        if dir[j] {
            digits[j] += 1;
            for (c, &g) in cw.iter_mut().zip(&rows[j]) {
                *c = field.add(*c, g);
            }
        } else {
            digits[j] -= 1;
            for (c, &g) in cw.iter_mut().zip(&rows[j]) {
                *c = field.sub(*c, g);
            }
        }
        if digits[j] == 0 || digits[j] == q - 1 {
            dir[j] = !dir[j];
            focus[j] = focus[j + 1];
            focus[j + 1] = j + 1;
        }
        let dist = hamming(&cw);
        match dist.cmp(&best_dist) {
            core::cmp::Ordering::Less => {
                best_dist = dist;
                best_msg = digits.clone();
                best_cw = cw.clone();
                tie = false;
            }
            core::cmp::Ordering::Equal => tie = true,
            core::cmp::Ordering::Greater => {}
        }
    }
    Decoded { message: best_msg, codeword: best_cw, distance: best_dist, tie }
}

/// Outcome of a seeded trial batch.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrialReport {
    pub trials: u64,
    pub successes: u64,
    pub ties: u64,
    /// floor((d_low - 1) / 2) for the decoded subcode; all error patterns
    /// of at most this weight decode correctly.
    pub guaranteed_radius: u64,
    /// Lower bound on the subcode distance the radius came from; exact
    /// when `distance_exact`.
    pub distance_lower_bound: u64,
    pub distance_exact: bool,
    pub rng: &'static str,
    pub seed: u64,
}

/// Runs N independent seeded trials: draw all L messages, corrupt the sum
/// codeword, cancel the known components `s`, ML-decode the rest, and
/// compare. Trial i uses seed + i, so batches are order-independent and
/// reproducible.
pub fn run_trials(
    e: &Eccir,
    s: &[usize],
    model: ErrorModel,
    trials: u64,
    seed: u64,
    limit_bits: u32,
) -> Result<TrialReport> {
    if s.len() >= e.l() {
        return Err(Error::NothingToDecode);
    }
    let mut sorted_s = s.to_vec();
    sorted_s.sort_unstable();
    sorted_s.dedup();
    if sorted_s.len() != s.len() || sorted_s.iter().any(|&i| i >= e.l()) {
        return Err(Error::DimensionMismatch);
    }
    let sbar: Vec<usize> = (0..e.l()).filter(|i| !sorted_s.contains(i)).collect();
    let subcode = e.subcode(&sbar)?;
    let dist = crate::code::min_distance(
        &subcode,
        &crate::code::DistanceConfig::with_limit(limit_bits),
    );
    let guaranteed_radius = (dist.lower_bound.saturating_sub(1)) / 2;
    let f = e.field().clone();
    let (k, n, q) = (e.k(), e.n(), e.q());
    let mut successes = 0u64;
    let mut ties = 0u64;
    for trial in 0..trials {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed.wrapping_add(trial));
        // All L message blocks.
        let w: Vec<Vec<u64>> = (0..e.l())
            .map(|_| (0..k).map(|_| rng.next_u64() % q).collect())
            .collect();
        let mut y = vec![0u64; n];
        for (g, wl) in e.components.iter().zip(&w) {
            let c = g.encode(wl)?;
            for (yi, &ci) in y.iter_mut().zip(&c) {
                *yi = f.add(*yi, ci);
            }
        }
        apply_errors(&f, &mut y, model, &mut rng);
        let known: Vec<Vec<u64>> = sorted_s.iter().map(|&i| w[i].clone()).collect();
        let reduced = receiver_reduce(e, &y, &sorted_s, &known)?;
        let decoded = ml_decode(&subcode, &reduced, limit_bits)?;
        if decoded.tie {
            ties += 1;
        }
        let expected: Vec<u64> = sbar.iter().flat_map(|&i| w[i].iter().copied()).collect();
        if decoded.message == expected {
            successes += 1;
        }
    }
    Ok(TrialReport {
        trials,
        successes,
        ties,
        guaranteed_radius,
        distance_lower_bound: dist.lower_bound,
        distance_exact: dist.is_exact(),
        rng: RNG_ALGORITHM,
        seed,
    })
}

fn apply_errors(
    f: &FieldSpec,
    y: &mut [u64],
    model: ErrorModel,
    rng: &mut rand_chacha::ChaCha8Rng,
) {
    let n = y.len();
    let q = f.order();
    let nonzero = |rng: &mut rand_chacha::ChaCha8Rng| 1 + rng.next_u64() % (q - 1);
    match model {
        ErrorModel::FixedWeight(t) => {
            assert!(t <= n, "error weight exceeds length");
            // Partial Fisher-Yates for t distinct positions.
            let mut pos: Vec<usize> = (0..n).collect();
            for i in 0..t {
                let j = i + (rng.next_u64() as usize) % (n - i);
                pos.swap(i, j);
                let p = pos[i];
                y[p] = f.add(y[p], nonzero(rng));
            }
        }
        ErrorModel::Bsc(p) => {
            let threshold = (p.clamp(0.0, 1.0) * u64::MAX as f64) as u64;
            for yi in y.iter_mut() {
                if rng.next_u64() < threshold {
                    *yi = f.add(*yi, nonzero(rng));
                }
            }
        }
    }
}
