//! Multi-message code collections for informed receivers: validation,
//! subset-sum subcodes, the full distance profile over all 2^L - 1
//! receiver configurations, optimality certification, and message
//! grouping.

use crate::code::{
    equal_up_to_permutation, known_distance, linearly_independent, min_distance, singleton_bound,
    DistanceConfig, DistanceResult, GeneratorMatrix, KnownDistanceEntry, LinearCode,
    StructuralHints,
};
use crate::cyclic::{multiplier_transform, CyclicCodeSpec};
use crate::gf::FieldSpec;
use crate::numtheory::mod_inverse;
use crate::{Error, Result};
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

/// The permutation i -> multiplier * i mod n maps component `from` onto
/// component `to`. Claims are advisory: the profile re-verifies each use.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivalenceClaim {
    pub from: usize,
    pub to: usize,
    pub multiplier: u64,
}

/// How the collection was built, plus structural facts the distance
/// dispatch may exploit.
#[derive(Debug, Clone, Default)]
pub struct Provenance {
    pub construction: String,
    pub params: Vec<(String, String)>,
    /// Nonzero sets of the components when they are cyclic codes, in
    /// component order.
    pub cyclic_nonzeroes: Option<Vec<Vec<u64>>>,
    pub equivalences: Vec<EquivalenceClaim>,
    /// The full sum code is {(a, b) : a, b in C_in} with d(C_in) known.
    pub product_inner_distance: Option<u64>,
    /// The full sum code is a multiplier image of the dual of a
    /// double-error-correcting primitive BCH code of degree m.
    pub carlitz_uchiyama_m: Option<u32>,
}

/// L linearly independent component codes of common dimension k over a
/// shared field; the joint codeword is the sum of the component words.
#[derive(Debug, Clone)]
pub struct Eccir {
    pub components: Vec<GeneratorMatrix>,
    pub provenance: Option<Provenance>,
}

impl Eccir {
    /// Validates shape, per-component rank, and collection independence.
    pub fn new(components: Vec<GeneratorMatrix>, provenance: Option<Provenance>) -> Result<Self> {
        let e = Eccir { components, provenance };
        e.validate()?;
        Ok(e)
    }

    pub fn l(&self) -> usize {
        self.components.len()
    }

    pub fn k(&self) -> usize {
        self.components.first().map(|g| g.k()).unwrap_or(0)
    }

    pub fn n(&self) -> usize {
        self.components.first().map(|g| g.n()).unwrap_or(0)
    }

    pub fn field(&self) -> &FieldSpec {
        &self.components[0].field
    }

    pub fn q(&self) -> u64 {
        self.field().order()
    }

    /// Full rank per component, kL <= n, and joint independence. When the
    /// components carry cyclic nonzero sets, the disjointness criterion is
    /// cross-checked against the rank test; the two must agree.
    pub fn validate(&self) -> Result<()> {
        let l = self.l();
        if l == 0 {
            return Err(Error::DimensionMismatch);
        }
        let k = self.k();
        let n = self.n();
        for g in &self.components {
            if g.k() != k || g.n() != n || g.field != self.components[0].field {
                return Err(Error::MixedFields);
            }
            let r = g.rank();
            if r != k {
                return Err(Error::RankDeficient { expected: k, actual: r });
            }
        }
        if k * l > n {
            return Err(Error::DimensionMismatch);
        }
        let refs: Vec<&GeneratorMatrix> = self.components.iter().collect();
        let rank_independent = linearly_independent(&refs)?;
        if let Some(prov) = &self.provenance {
            if let Some(nz) = &prov.cyclic_nonzeroes {
                if nz.len() == l {
                    let disjoint = (0..l).all(|i| {
                        (i + 1..l).all(|j| nz[i].iter().all(|x| !nz[j].contains(x)))
                    });
                    if disjoint != rank_independent {
                        return Err(Error::InvalidParameter(String::from(
                            "cyclic disjointness disagrees with rank independence",
                        )));
                    }
                }
            }
        }
        if !rank_independent {
            return Err(Error::DependentCollection(self.offending_subset()));
        }
        Ok(())
    }

    /// Smallest prefix of components whose joint rank falls short; used
    /// for dependency diagnostics.
    fn offending_subset(&self) -> Vec<usize> {
        let mut acc: Vec<&GeneratorMatrix> = Vec::new();
        let mut idx: Vec<usize> = Vec::new();
        for (i, g) in self.components.iter().enumerate() {
            acc.push(g);
            idx.push(i);
            let stacked = GeneratorMatrix::stack(&acc).unwrap();
            if stacked.rank() < acc.iter().map(|m| m.rank()).sum() {
                return idx;
            }
        }
        idx
    }

    /// Subset-sum code for receivers missing exactly the messages in
    /// `sbar` (0-based component indices): rows of the selected components
    /// stacked. Structural hints are attached from provenance.
    pub fn subcode(&self, sbar: &[usize]) -> Result<LinearCode> {
        if sbar.is_empty() {
            return Err(Error::EmptySubset);
        }
        let mut sorted = sbar.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != sbar.len() || *sorted.last().unwrap() >= self.l() {
            return Err(Error::InvalidParameter(String::from("bad subset index")));
        }
        let mats: Vec<&GeneratorMatrix> = sorted.iter().map(|&i| &self.components[i]).collect();
        let gen = GeneratorMatrix::stack(&mats)?;
        let mut hints = StructuralHints::default();
        if let Some(prov) = &self.provenance {
            if let Some(spec) = self.subset_cyclic_spec(prov, &sorted) {
                hints.cyclic = Some(spec);
            }
            if sorted.len() == self.l() {
                hints.product_inner_distance = prov.product_inner_distance;
                hints.carlitz_uchiyama_m = prov.carlitz_uchiyama_m;
            }
        }
        Ok(LinearCode::with_hints(gen, hints))
    }

    fn subset_cyclic_spec(&self, prov: &Provenance, sorted: &[usize]) -> Option<CyclicCodeSpec> {
        let nz = prov.cyclic_nonzeroes.as_ref()?;
        if nz.len() != self.l() {
            return None;
        }
        let union: Vec<u64> = sorted.iter().flat_map(|&i| nz[i].iter().copied()).collect();
        CyclicCodeSpec::new(self.n() as u64, self.q(), union).ok()
    }

    /// Distance of every nonempty subset-sum code, in size-then-lex
    /// subset order. Permutation-equivalent subsets (detected through
    /// provenance multipliers and always re-verified) share one
    /// computation.
    pub fn distance_profile(&self, cfg: &DistanceConfig) -> DistanceProfile {
        let l = self.l();
        let k = self.k();
        let n = self.n();
        let mut entries: Vec<ProfileEntry> = Vec::with_capacity((1usize << l) - 1);
        for sbar in subsets_by_size_then_lex(l) {
            let code = self.subcode(&sbar).expect("validated subsets");
            let dim = k * sbar.len();
            let mut reused_from = None;
            let distance = match self.find_equivalent(&entries, &code, &sbar) {
                Some((d, src)) => {
                    reused_from = Some(src);
                    d
                }
                None => min_distance(&code, cfg),
            };
            entries.push(ProfileEntry {
                subset: sbar,
                dim,
                distance,
                singleton: singleton_bound(n, dim),
                known: known_distance(n as u64, dim as u64),
                reused_from,
            });
        }
        let summary = summarize(&entries, k);
        DistanceProfile { entries, summary }
    }

    /// Looks for an already-profiled subset whose subcode is a verified
    /// multiplier image of this one.
    fn find_equivalent(
        &self,
        done: &[ProfileEntry],
        code: &LinearCode,
        sbar: &[usize],
    ) -> Option<(DistanceResult, Vec<usize>)> {
        let prov = self.provenance.as_ref()?;
        let spec = self.subset_cyclic_spec(prov, sbar)?;
        let n = self.n() as u64;
        let mut multipliers: Vec<u64> = Vec::new();
        for c in &prov.equivalences {
            let a = c.multiplier % n;
            let Some(inv) = mod_inverse(a, n) else { continue };
            for cand in [a, inv, a * a % n, inv * inv % n] {
                if cand > 1 && !multipliers.contains(&cand) {
                    multipliers.push(cand);
                }
            }
        }
        for prev in done.iter().filter(|p| p.subset.len() == sbar.len()) {
            let prev_spec = self.subset_cyclic_spec(prov, &prev.subset)?;
            for &a in &multipliers {
                let Ok(t) = multiplier_transform(&spec, a) else { continue };
                if t.spec != prev_spec {
                    continue;
                }
                // Trust but verify: the claimed permutation must really
                // carry this row space onto the previous one.
                let prev_code = self.subcode(&prev.subset).expect("validated subsets");
                if equal_up_to_permutation(&code.gen, &prev_code.gen, &t.perm) == Ok(true) {
                    return Some((prev.distance, prev.subset.clone()));
                }
            }
        }
        None
    }
}

/// One profile row: the receivers missing exactly `subset` decode a code
/// of dimension `dim` with the stated distance.
#[derive(Debug, Clone)]
pub struct ProfileEntry {
    /// 0-based component indices, sorted.
    pub subset: Vec<usize>,
    pub dim: usize,
    pub distance: DistanceResult,
    pub singleton: u64,
    pub known: Option<KnownDistanceEntry>,
    /// Set when the distance was reused from a permutation-equivalent
    /// subset.
    pub reused_from: Option<Vec<usize>>,
}

/// Per-size minimum over all subsets of that size.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SizeSummary {
    pub size: usize,
    pub dim: usize,
    pub min_lower: u64,
    pub min_upper: u64,
}

#[derive(Debug, Clone)]
pub struct DistanceProfile {
    /// All 2^L - 1 nonempty subsets, size-then-lex order.
    pub entries: Vec<ProfileEntry>,
    pub summary: Vec<SizeSummary>,
}

impl DistanceProfile {
    pub fn entry(&self, subset: &[usize]) -> Option<&ProfileEntry> {
        let mut s = subset.to_vec();
        s.sort_unstable();
        self.entries.iter().find(|e| e.subset == s)
    }

    pub fn all_exact(&self) -> bool {
        self.entries.iter().all(|e| e.distance.is_exact())
    }
}

fn summarize(entries: &[ProfileEntry], k: usize) -> Vec<SizeSummary> {
    let mut out: Vec<SizeSummary> = Vec::new();
    for e in entries {
        let size = e.subset.len();
        match out.iter_mut().find(|s| s.size == size) {
            Some(s) => {
                s.min_lower = s.min_lower.min(e.distance.lower_bound);
                s.min_upper = s.min_upper.min(e.distance.upper_bound);
            }
            None => out.push(SizeSummary {
                size,
                dim: k * size,
                min_lower: e.distance.lower_bound,
                min_upper: e.distance.upper_bound,
            }),
        }
    }
    out
}

/// All nonempty subsets of {0..l-1} ordered by size, then
/// lexicographically as sorted index lists.
pub fn subsets_by_size_then_lex(l: usize) -> Vec<Vec<usize>> {
    assert!(l <= 20, "subset enumeration out of range");
    let mut masks: Vec<u32> = (1..(1u32 << l)).collect();
    let as_list = |m: u32| -> Vec<usize> { (0..l).filter(|&i| m >> i & 1 == 1).collect() };
    masks.sort_by(|&a, &b| {
        a.count_ones().cmp(&b.count_ones()).then_with(|| as_list(a).cmp(&as_list(b)))
    });
    masks.into_iter().map(as_list).collect()
}

/// True iff every profile entry meets its Singleton bound with equality.
/// Refuses to answer on interval entries.
pub fn is_mdsir(profile: &DistanceProfile) -> Result<bool> {
    if !profile.all_exact() {
        return Err(Error::Undecidable);
    }
    Ok(profile
        .entries
        .iter()
        .all(|e| e.distance.exact_value() == Some(e.singleton)))
}

/// Merges consecutive blocks of k0 single-symbol components into L/k0
/// components of dimension k0.
pub fn group_messages(e: &Eccir, k0: usize) -> Result<Eccir> {
    if e.k() != 1 {
        return Err(Error::InvalidParameter(String::from(
            "grouping requires single-symbol components",
        )));
    }
    if k0 == 0 || e.l() % k0 != 0 {
        return Err(Error::InvalidParameter(String::from("block size must divide L")));
    }
    let components: Vec<GeneratorMatrix> = e
        .components
        .chunks(k0)
        .map(|chunk| {
            let refs: Vec<&GeneratorMatrix> = chunk.iter().collect();
            GeneratorMatrix::stack(&refs).expect("validated shapes")
        })
        .collect::<Vec<_>>();
    let provenance = e.provenance.clone().map(|mut p| {
        p.params.push((String::from("grouped_k0"), format_usize(k0)));
        // Component-level claims no longer apply after grouping.
        p.equivalences.clear();
        p.cyclic_nonzeroes = None;
        p
    });
    Eccir::new(components, provenance)
}

fn format_usize(v: usize) -> String {
    let mut s = String::new();
    core::fmt::Write::write_fmt(&mut s, format_args!("{v}")).unwrap();
    s
}

/// Guaranteed subcode distance lower bounds of the split-baseline scheme:
/// max{d - k * size, 0} for size = 1..L, where d is the distance of the
/// systematic [n + kL, kL] mother code.
pub fn dbt_guaranteed_bounds(k: usize, l: usize, d: u64) -> Vec<u64> {
    (1..=l).map(|s| d.saturating_sub((k * s) as u64)).collect()
}

/// Splits a systematic [n + kL, kL] generator A = [I | G] into the L
/// row-block components of G, with the per-|subset| guaranteed distance
/// lower bounds max{d - k * size, 0} where d is the distance of the code
/// generated by A.
pub fn dbt_baseline_split(
    a: &GeneratorMatrix,
    k: usize,
    l: usize,
    d: u64,
) -> Result<(Eccir, Vec<u64>)> {
    let kl = k * l;
    if a.k() != kl || a.n() <= kl {
        return Err(Error::DimensionMismatch);
    }
    for (i, row) in a.rows.iter().enumerate() {
        for (j, &x) in row.iter().take(kl).enumerate() {
            let want = if i == j { 1 } else { 0 };
            if x != want {
                return Err(Error::NotSystematic);
            }
        }
    }
    let g_rows: Vec<Vec<u64>> = a.rows.iter().map(|r| r[kl..].to_vec()).collect();
    let components: Vec<GeneratorMatrix> = g_rows
        .chunks(k)
        .map(|chunk| GeneratorMatrix::new(a.field.clone(), chunk.to_vec()))
        .collect::<Result<_>>()?;
    let provenance = Provenance {
        construction: String::from("dbt-split"),
        params: vec![
            (String::from("k"), format_usize(k)),
            (String::from("L"), format_usize(l)),
            (String::from("d"), format_usize(d as usize)),
        ],
        ..Default::default()
    };
    let e = Eccir::new(components, Some(provenance))?;
    Ok((e, dbt_guaranteed_bounds(k, l, d)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::DistanceMethod;
    use crate::cyclic::{coset, generator_matrix_of};

    fn example1() -> Eccir {
        let parts: [&[u64]; 3] = [&[1, 3], &[5, 15], &[7, 11]];
        let mut components = Vec::new();
        let mut nonzeroes = Vec::new();
        for reps in parts {
            let t: Vec<u64> = reps
                .iter()
                .flat_map(|&r| coset(r, 31, 2).unwrap().members)
                .collect();
            let spec = CyclicCodeSpec::new(31, 2, t).unwrap();
            nonzeroes.push(spec.nonzeroes().to_vec());
            components.push(generator_matrix_of(&spec).unwrap());
        }
        let prov = Provenance {
            construction: String::from("coset-partition"),
            cyclic_nonzeroes: Some(nonzeroes),
            equivalences: vec![
                EquivalenceClaim { from: 1, to: 0, multiplier: 5 },
                EquivalenceClaim { from: 2, to: 0, multiplier: 7 },
            ],
            ..Default::default()
        };
        Eccir::new(components, Some(prov)).unwrap()
    }

    #[test]
    fn subset_order() {
        assert_eq!(
            subsets_by_size_then_lex(3),
            vec![
                vec![0],
                vec![1],
                vec![2],
                vec![0, 1],
                vec![0, 2],
                vec![1, 2],
                vec![0, 1, 2],
            ]
        );
        assert_eq!(subsets_by_size_then_lex(1), vec![vec![0]]);
    }

    #[test]
    fn validation_rejects_dependence() {
        let e = example1();
        // Duplicate component: dependent.
        let dup = Eccir::new(
            vec![e.components[0].clone(), e.components[0].clone()],
            None,
        );
        assert!(matches!(dup, Err(Error::DependentCollection(_))));
        // Overlapping nonzero sets: rank test and coset test agree.
        let t_a: Vec<u64> = [coset(1, 31, 2).unwrap().members, coset(3, 31, 2).unwrap().members]
            .concat();
        let t_b: Vec<u64> = [coset(3, 31, 2).unwrap().members, coset(5, 31, 2).unwrap().members]
            .concat();
        let ga = generator_matrix_of(&CyclicCodeSpec::new(31, 2, t_a.clone()).unwrap()).unwrap();
        let gb = generator_matrix_of(&CyclicCodeSpec::new(31, 2, t_b.clone()).unwrap()).unwrap();
        let prov = Provenance {
            cyclic_nonzeroes: Some(vec![t_a, t_b]),
            ..Default::default()
        };
        match Eccir::new(vec![ga, gb], Some(prov)) {
            Err(Error::DependentCollection(s)) => assert_eq!(s, vec![0, 1]),
            other => panic!("expected dependent collection, got {other:?}"),
        }
    }

    #[test]
    fn subcode_shapes() {
        let e = example1();
        assert_eq!((e.l(), e.k(), e.n(), e.q()), (3, 10, 31, 2));
        let c = e.subcode(&[1, 2]).unwrap();
        assert_eq!(c.gen.k(), 20);
        assert_eq!(c.gen.rank(), 20);
        assert!(e.subcode(&[]).is_err());
        assert!(e.subcode(&[3]).is_err());
        assert!(e.subcode(&[1, 1]).is_err());
        // Full subset carries the whole nonzero union: zeroes = {0}.
        let full = e.subcode(&[0, 1, 2]).unwrap();
        assert_eq!(full.hints.cyclic.as_ref().unwrap().zeroes(), vec![0]);
    }

    #[test]
    fn example1_profile() {
        let e = example1();
        let profile = e.distance_profile(&DistanceConfig::default());
        assert_eq!(profile.entries.len(), 7);
        let by_size: Vec<(usize, Option<u64>)> = profile
            .entries
            .iter()
            .map(|en| (en.subset.len(), en.distance.exact_value()))
            .collect();
        for (size, d) in by_size {
            let want = match size {
                1 => 12,
                2 => 6,
                _ => 2,
            };
            assert_eq!(d, Some(want));
        }
        assert_eq!(
            profile.summary,
            vec![
                SizeSummary { size: 1, dim: 10, min_lower: 12, min_upper: 12 },
                SizeSummary { size: 2, dim: 20, min_lower: 6, min_upper: 6 },
                SizeSummary { size: 3, dim: 30, min_lower: 2, min_upper: 2 },
            ]
        );
        // Components 2 and 3 reuse component 1's distance via the
        // multiplier claims.
        assert!(profile.entry(&[1]).unwrap().reused_from.is_some());
        assert!(profile.entry(&[2]).unwrap().reused_from.is_some());
        // The known-distance annotation is present for [31,10].
        assert_eq!(profile.entry(&[0]).unwrap().known.unwrap().d_star_low, 12);
        // Binary codes cannot meet Singleton here.
        assert_eq!(is_mdsir(&profile), Ok(false));
    }

    #[test]
    fn profile_monotone_on_nested_chain() {
        let e = example1();
        let profile = e.distance_profile(&DistanceConfig::default());
        let d = |s: &[usize]| profile.entry(s).unwrap().distance.exact_value().unwrap();
        assert!(d(&[0, 1]) <= d(&[0]));
        assert!(d(&[0, 1, 2]) <= d(&[0, 1]));
        assert!(d(&[1, 2]) <= d(&[2]));
    }

    #[test]
    fn single_component_profile() {
        let f = FieldSpec::create(2, 1).unwrap();
        let g = GeneratorMatrix::new(f, vec![vec![1, 1, 1]]).unwrap();
        let e = Eccir::new(vec![g], None).unwrap();
        let profile = e.distance_profile(&DistanceConfig::default());
        assert_eq!(profile.entries.len(), 1);
        assert_eq!(profile.entries[0].distance.exact_value(), Some(3));
        // [3,1,3] is MDS, so the singleton check says yes.
        assert_eq!(is_mdsir(&profile), Ok(true));
    }

    #[test]
    fn mdsir_undecidable_on_intervals() {
        let e = example1();
        let profile = e.distance_profile(&DistanceConfig::with_limit(4));
        assert!(!profile.all_exact());
        assert_eq!(is_mdsir(&profile), Err(Error::Undecidable));
        // The full-sum entry still resolves exactly via the parity
        // structure even under the tiny limit.
        let full = profile.entry(&[0, 1, 2]).unwrap();
        assert_eq!(full.distance.exact_value(), Some(2));
        assert_eq!(full.distance.method, DistanceMethod::StructuralParity);
    }

    #[test]
    fn grouping_blocks() {
        // Four independent weight-1 components over GF(2), n = 4.
        let f = FieldSpec::create(2, 1).unwrap();
        let comps: Vec<GeneratorMatrix> = (0..4)
            .map(|i| {
                let mut row = vec![0u64; 4];
                row[i] = 1;
                GeneratorMatrix::new(f.clone(), vec![row]).unwrap()
            })
            .collect();
        let e = Eccir::new(comps, None).unwrap();
        let g1 = group_messages(&e, 1).unwrap();
        assert_eq!((g1.l(), g1.k()), (4, 1));
        let g2 = group_messages(&e, 2).unwrap();
        assert_eq!((g2.l(), g2.k()), (2, 2));
        let g4 = group_messages(&e, 4).unwrap();
        assert_eq!((g4.l(), g4.k()), (1, 4));
        assert!(group_messages(&e, 3).is_err());
        assert!(group_messages(&g2, 2).is_err());
    }

    #[test]
    fn baseline_split_bounds() {
        // Systematic [6, 2] toy: A = [I | G] with G full of ones except a
        // staircase, d irrelevant to the split itself.
        let f = FieldSpec::create(2, 1).unwrap();
        let a = GeneratorMatrix::new(
            f.clone(),
            vec![vec![1, 0, 1, 1, 0, 1], vec![0, 1, 0, 1, 1, 1]],
        )
        .unwrap();
        let (e, bounds) = dbt_baseline_split(&a, 1, 2, 3).unwrap();
        assert_eq!((e.l(), e.k(), e.n()), (2, 1, 4));
        assert_eq!(e.components[0].rows, vec![vec![1, 1, 0, 1]]);
        assert_eq!(bounds, vec![2, 1]);
        // Bound clamps at zero.
        let (_, b0) = dbt_baseline_split(&a, 1, 2, 1).unwrap();
        assert_eq!(b0, vec![0, 0]);
        // Non-systematic input rejected.
        let bad = GeneratorMatrix::new(
            f,
            vec![vec![1, 1, 1, 1, 0, 1], vec![0, 1, 0, 1, 1, 1]],
        )
        .unwrap();
        assert_eq!(dbt_baseline_split(&bad, 1, 2, 3).unwrap_err(), Error::NotSystematic);
    }
}
