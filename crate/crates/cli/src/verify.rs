//! Built-in verification suites with embedded expected values. Each named
//! suite recomputes a published set of code parameters and compares.
//!
//! Feasibility classes: `exact` checks recompute distances by exhaustive
//! enumeration; `structural` checks validate dimensions, partitions, and
//! equivalences where exact distances are out of desk scale; `bounds-only`
//! entries assert interval consistency instead of point values.

use eccir_core::code::{
    carlitz_uchiyama_even_bound, DistanceConfig, DistanceMethod, GeneratorMatrix,
};
use eccir_core::constructions::{
    concat_distance_bound, concatenate, cubic_residue_triple, example1_triple, irreducible_inner,
    mdsir_from_grs, piret_search, piret_targeted_search, quadratic_residue_pair,
    verify_all_square_submatrices, ConcatConfig,
};
use eccir_core::cyclic::generator_matrix_of;
use eccir_core::eccir::{dbt_guaranteed_bounds, group_messages, is_mdsir, DistanceProfile};
use eccir_core::gf::FieldSpec;

pub const SUITES: &[&str] = &[
    "example1",
    "table1",
    "table2",
    "table3",
    "qr_list",
    "concat_example",
    "mdsir_small",
    "dbt_comparison",
];

#[derive(Debug)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

fn check(out: &mut Vec<Check>, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
    out.push(Check { name: name.into(), passed, detail: detail.into() });
}

fn exact_by_size(profile: &DistanceProfile, size: usize) -> Vec<Option<u64>> {
    profile
        .entries
        .iter()
        .filter(|e| e.subset.len() == size)
        .map(|e| e.distance.exact_value())
        .collect()
}

pub fn run_suite(suite: &str, cfg: &DistanceConfig) -> Result<Vec<Check>, String> {
    match suite {
        "example1" => Ok(suite_example1(cfg)),
        "table1" => Ok(suite_table1(cfg)),
        "table2" => Ok(suite_table2(cfg)),
        "table3" => Ok(suite_table3(cfg)),
        "qr_list" => Ok(suite_qr_list(cfg)),
        "concat_example" => Ok(suite_concat_example(cfg)),
        "mdsir_small" => Ok(suite_mdsir_small(cfg)),
        "dbt_comparison" => Ok(suite_dbt_comparison(cfg)),
        other => Err(format!("unknown suite '{other}'; known: {}", SUITES.join(", "))),
    }
}

/// The n = 31 coset-partition triple: components [31,10,12], pairwise sums
/// [31,20,6], full sum [31,30,2]; all seven subcodes exact.
fn suite_example1(cfg: &DistanceConfig) -> Vec<Check> {
    let mut out = Vec::new();
    let e = example1_triple().expect("preset construction");
    let profile = e.distance_profile(cfg);
    check(
        &mut out,
        "example1/entries",
        profile.entries.len() == 7,
        format!("{} subcode entries", profile.entries.len()),
    );
    for (size, want) in [(1usize, 12u64), (2, 6), (3, 2)] {
        let got = exact_by_size(&profile, size);
        let pass = !got.is_empty() && got.iter().all(|&d| d == Some(want));
        check(
            &mut out,
            format!("example1/size{size}"),
            pass,
            format!("expected {want} for all size-{size} subsets, got {got:?}"),
        );
    }
    // The derived multiplier equivalences onto component 1 were verified
    // and reused during profiling.
    let reused = profile
        .entries
        .iter()
        .filter(|p| p.subset.len() == 1 && p.reused_from.is_some())
        .count();
    check(
        &mut out,
        "example1/equivalences",
        reused == 2,
        format!("{reused} of 2 components reused via verified multiplier maps"),
    );
    // Distances match the best-known values for these parameters.
    let optimal = profile.entries.iter().all(|p| match p.known {
        Some(k) => p.distance.exact_value() == Some(k.d_star_low) && k.d_star_low == k.d_star_high,
        None => false,
    });
    check(&mut out, "example1/optimal", optimal, "every subcode meets the best-known distance");
    out
}

/// Irreducible-inner two-component pairs. Feasible component searches are
/// exhaustive over all beta; the two 2^20-dimensional rows use the
/// targeted early-exit search and still assert the exact values.
fn suite_table1(cfg: &DistanceConfig) -> Vec<Check> {
    let mut out = Vec::new();
    // (inner n, d_inner, d components, full search?)
    let rows: &[(u64, u64, u64, bool)] = &[
        (9, 2, 6, true),
        (17, 6, 14, true),
        (21, 8, 20, true),
        (39, 12, 32, true),
        (41, 10, 26, false),
        (55, 16, 40, false),
        (65, 26, 56, true),
    ];
    for &(n, d_in, d1, full) in rows {
        let inner = irreducible_inner(n).expect("odd n");
        let found = if full {
            piret_search(&inner)
        } else {
            piret_targeted_search(&inner, d1)
        };
        let found = match found {
            Ok(f) => f,
            Err(err) => {
                check(&mut out, format!("table1/n{n}"), false, format!("search failed: {err}"));
                continue;
            }
        };
        let e = &found.pair.eccir;
        let profile = e.distance_profile(cfg);
        let got1 = profile.entry(&[0]).and_then(|p| p.distance.exact_value());
        let got2 = profile.entry(&[1]).and_then(|p| p.distance.exact_value());
        let gots = profile.entry(&[0, 1]).and_then(|p| p.distance.exact_value());
        let pass = found.component_distance == d1
            && got1 == Some(d1)
            && got2 == Some(d1)
            && gots == Some(d_in);
        check(
            &mut out,
            format!("table1/n{n}"),
            pass,
            format!(
                "beta={}, components ({got1:?}, {got2:?}) want {d1}, sum {gots:?} want {d_in}{}",
                found.pair.beta,
                if full { "" } else { " [targeted search]" }
            ),
        );
    }
    out
}

/// Primitive-coset pairs at n = 2^m - 1, m = 3..8: simplex component
/// 2^{m-1}, second component per the published list, and the sum code even
/// with the stated even square-root lower bound.
fn suite_table2(cfg: &DistanceConfig) -> Vec<Check> {
    let mut out = Vec::new();
    let d2_expected = [4u64, 6, 16, 24, 64, 120];
    let bound_expected = [2u64, 4, 12, 24, 54, 112];
    for (i, m) in (3u32..=8).enumerate() {
        let e = match eccir_core::constructions::primitive_pair(m) {
            Ok(e) => e,
            Err(err) => {
                check(&mut out, format!("table2/m{m}"), false, format!("{err}"));
                continue;
            }
        };
        let profile = e.distance_profile(cfg);
        let d1 = profile.entry(&[0]).and_then(|p| p.distance.exact_value());
        let d2 = profile.entry(&[1]).and_then(|p| p.distance.exact_value());
        let ds = profile.entry(&[0, 1]).and_then(|p| p.distance.exact_value());
        let bound = carlitz_uchiyama_even_bound(m);
        let pass = d1 == Some(1 << (m - 1))
            && d2 == Some(d2_expected[i])
            && bound == bound_expected[i]
            && ds.is_some_and(|d| d % 2 == 0 && d >= bound);
        check(
            &mut out,
            format!("table2/m{m}"),
            pass,
            format!(
                "d1={d1:?} want {}, d2={d2:?} want {}, sum={ds:?} even and >= {bound}",
                1u64 << (m - 1),
                d2_expected[i]
            ),
        );
    }
    out
}

/// Cubic-residue triples. n = 31 and 43 are exact; n = 109 and 127 are
/// verified structurally (dimensions, partition, equivalence reuse, parity
/// sum) with bounds-only distance entries.
fn suite_table3(cfg: &DistanceConfig) -> Vec<Check> {
    let mut out = Vec::new();
    for (n, k, d1, dpair) in [(31u64, 10usize, 10u64, 6u64), (43, 14, 14, 6)] {
        let e = cubic_residue_triple(n).expect("valid cubic-residue length");
        let profile = e.distance_profile(cfg);
        let comp = exact_by_size(&profile, 1);
        let pair = exact_by_size(&profile, 2);
        let full = profile.entry(&[0, 1, 2]).and_then(|p| p.distance.exact_value());
        let pass = e.k() == k
            && comp.iter().all(|&d| d == Some(d1))
            && pair.iter().all(|&d| d == Some(dpair))
            && full == Some(2);
        check(
            &mut out,
            format!("table3/n{n}"),
            pass,
            format!("components {comp:?} want {d1}, pairs {pair:?} want {dpair}, sum {full:?} want 2"),
        );
    }
    for (n, k) in [(109u64, 36usize), (127, 42)] {
        let e = cubic_residue_triple(n).expect("valid cubic-residue length");
        let prov = e.provenance.clone().expect("construction provenance");
        let nz = prov.cyclic_nonzeroes.expect("cyclic identity");
        let mut all: Vec<u64> = nz.concat();
        all.sort_unstable();
        let partition_ok = all == (1..n).collect::<Vec<_>>();
        let profile = e.distance_profile(cfg);
        // Components and pairwise sums are beyond exhaustive reach:
        // bounds-only entries, mutually equivalent via the recorded
        // multiplier; the full sum is the parity code.
        let reused = profile.entries.iter().filter(|p| p.reused_from.is_some()).count();
        let intervals_ok = profile
            .entries
            .iter()
            .filter(|p| p.subset.len() < 3)
            .all(|p| {
                !p.distance.is_exact()
                    && p.distance.lower_bound <= p.distance.upper_bound
                    && p.distance.upper_bound <= p.singleton
            });
        let full = profile.entry(&[0, 1, 2]).map(|p| (p.distance.exact_value(), p.distance.method));
        let pass = e.k() == k
            && partition_ok
            && reused >= 4
            && intervals_ok
            && full == Some((Some(2), DistanceMethod::StructuralParity));
        check(
            &mut out,
            format!("table3/n{n}"),
            pass,
            format!(
                "k={} want {k}, partition {partition_ok}, {reused} entries reused, bounds-only entries {intervals_ok}, sum {full:?}",
                e.k()
            ),
        );
    }
    out
}

/// Quadratic-residue pairs: exact component distances for the published
/// list, and every sum is the [n, n-1, 2] single-parity code.
fn suite_qr_list(cfg: &DistanceConfig) -> Vec<Check> {
    let mut out = Vec::new();
    for (n, d) in [(7u64, 4u64), (17, 6), (23, 8), (31, 8), (41, 10), (47, 12)] {
        let e = match quadratic_residue_pair(n) {
            Ok(e) => e,
            Err(err) => {
                check(&mut out, format!("qr_list/n{n}"), false, format!("{err}"));
                continue;
            }
        };
        let profile = e.distance_profile(cfg);
        let d1 = profile.entry(&[0]).and_then(|p| p.distance.exact_value());
        let d2 = profile.entry(&[1]).and_then(|p| p.distance.exact_value());
        let ds = profile.entry(&[0, 1]).and_then(|p| p.distance.exact_value());
        let pass = e.k() as u64 == (n - 1) / 2
            && d1 == Some(d)
            && d2 == Some(d)
            && ds == Some(2)
            && d % 2 == 0
            && d * d >= n;
        check(
            &mut out,
            format!("qr_list/n{n}"),
            pass,
            format!("components ({d1:?}, {d2:?}) want {d}, sum {ds:?} want 2"),
        );
    }
    out
}

/// Concatenation of the (q=8, n_out=3, L=2) outer collection with the
/// [7,3,4] inner code: exact distances 12, 12, 8 and the guaranteed
/// lower bounds d_in * (n_out - size + 1).
fn suite_concat_example(cfg: &DistanceConfig) -> Vec<Check> {
    let mut out = Vec::new();
    let outer = mdsir_from_grs(8, 3, 2).expect("q > n + L");
    let inner_spec = irreducible_inner(7).expect("n = 7");
    let inner = generator_matrix_of(&inner_spec).expect("cyclic generator");
    let e = concatenate(&ConcatConfig { outer, inner }).expect("matching dimensions");
    let profile = e.distance_profile(cfg);
    let d1 = profile.entry(&[0]).and_then(|p| p.distance.exact_value());
    let d2 = profile.entry(&[1]).and_then(|p| p.distance.exact_value());
    let ds = profile.entry(&[0, 1]).and_then(|p| p.distance.exact_value());
    check(
        &mut out,
        "concat_example/shape",
        e.l() == 2 && e.k() == 3 && e.n() == 21 && e.q() == 2,
        format!("[{}] components of dim {} at n {}", e.l(), e.k(), e.n()),
    );
    check(
        &mut out,
        "concat_example/distances",
        d1 == Some(12) && d2 == Some(12) && ds == Some(8),
        format!("got ({d1:?}, {d2:?}, {ds:?}), want (12, 12, 8)"),
    );
    let b1 = concat_distance_bound(4, 3, 1);
    let b2 = concat_distance_bound(4, 3, 2);
    check(
        &mut out,
        "concat_example/bounds",
        b1 == 12 && b2 == 8 && d1 >= Some(b1) && ds >= Some(b2),
        format!("guaranteed bounds ({b1}, {b2}) satisfied"),
    );
    out
}

/// The q=11, n=6, L=4 punctured-RS collection: the all-submatrices
/// certificate, Singleton equality on all 15 subsets, and preservation
/// under message grouping.
fn suite_mdsir_small(cfg: &DistanceConfig) -> Vec<Check> {
    let mut out = Vec::new();
    let e = mdsir_from_grs(11, 6, 4).expect("q > n + L");
    let stacked =
        GeneratorMatrix::stack(&e.components.iter().collect::<Vec<_>>()).expect("same shape");
    let submx = verify_all_square_submatrices(&stacked, 1_000_000);
    check(
        &mut out,
        "mdsir_small/submatrices",
        submx == Ok(true),
        format!("all square submatrices nonsingular: {submx:?}"),
    );
    let profile = e.distance_profile(cfg);
    let opt = is_mdsir(&profile);
    check(
        &mut out,
        "mdsir_small/profile",
        profile.entries.len() == 15 && opt == Ok(true),
        format!("{} subsets, Singleton equality everywhere: {opt:?}", profile.entries.len()),
    );
    let grouped = group_messages(&e, 2).expect("2 divides 4");
    let gprofile = grouped.distance_profile(cfg);
    let gopt = is_mdsir(&gprofile);
    check(
        &mut out,
        "mdsir_small/grouped",
        grouped.l() == 2 && grouped.k() == 2 && gopt == Ok(true),
        format!("grouped to L=2, k=2, still optimal: {gopt:?}"),
    );
    check(
        &mut out,
        "mdsir_small/precondition",
        mdsir_from_grs(7, 6, 2).is_err(),
        "q <= n + L rejected",
    );
    out
}

/// The split-baseline comparison at (k=10, L=3, d=12): guaranteed bounds
/// max{12 - 10s, 0} = 2, 0, 0 against the partition triple's exact
/// 12, 6, 2.
fn suite_dbt_comparison(cfg: &DistanceConfig) -> Vec<Check> {
    let mut out = Vec::new();
    let bounds = dbt_guaranteed_bounds(10, 3, 12);
    check(
        &mut out,
        "dbt_comparison/bounds",
        bounds == vec![2, 0, 0],
        format!("guaranteed bounds {bounds:?}, want [2, 0, 0]"),
    );
    let e = example1_triple().expect("preset");
    let profile = e.distance_profile(cfg);
    let actual: Vec<u64> = profile.summary.iter().map(|s| s.min_lower).collect();
    check(
        &mut out,
        "dbt_comparison/partition-wins",
        actual == vec![12, 6, 2] && actual.iter().zip(&bounds).all(|(a, b)| a >= b),
        format!("partition triple achieves {actual:?} vs baseline guarantees {bounds:?}"),
    );
    // Exercise the split mechanics on a synthetic systematic [61, 30]
    // generator; the bounds depend only on (k, L, d).
    let f = FieldSpec::create(2, 1).expect("GF(2)");
    let mut state = 0x1234_5678_9abc_def0u64;
    let mut rows = Vec::with_capacity(30);
    for i in 0..30usize {
        let mut row = vec![0u64; 61];
        row[i] = 1;
        for x in row.iter_mut().skip(30) {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            *x = state & 1;
        }
        rows.push(row);
    }
    let a = GeneratorMatrix::new(f, rows).expect("binary matrix");
    let split = eccir_core::eccir::dbt_baseline_split(&a, 10, 3, 12);
    let pass = match &split {
        Ok((se, sb)) => {
            se.l() == 3 && se.k() == 10 && se.n() == 31 && *sb == vec![2, 0, 0]
        }
        Err(_) => false,
    };
    check(
        &mut out,
        "dbt_comparison/split",
        pass,
        "systematic [61,30] splits into a 3-component collection at n=31",
    );
    out
}
