//! File formats: collection files, generator-matrix files, profile
//! reports (JSON and CSV), and trial reports. All component indices and
//! subsets are 1-based in files and reports.

use eccir_core::code::{DistanceResult, GeneratorMatrix};
use eccir_core::eccir::{DistanceProfile, Eccir, EquivalenceClaim, Provenance};
use eccir_core::gf::FieldSpec;
use serde::{Deserialize, Serialize};
use std::fmt::Write as _;

#[derive(Debug, Serialize, Deserialize)]
pub struct EccirFile {
    #[serde(rename = "L")]
    pub l: usize,
    pub k: usize,
    pub n: usize,
    pub q: u64,
    /// One generator matrix (list of rows) per component.
    pub components: Vec<Vec<Vec<u64>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub provenance: Option<ProvenanceFile>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct ProvenanceFile {
    pub construction: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub params: Vec<(String, String)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cyclic_nonzeroes: Option<Vec<Vec<u64>>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub equivalences: Vec<EquivalenceFile>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub product_inner_distance: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub carlitz_uchiyama_m: Option<u32>,
}

/// 1-based component indices.
#[derive(Debug, Serialize, Deserialize)]
pub struct EquivalenceFile {
    pub from: usize,
    pub to: usize,
    pub multiplier: u64,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct GeneratorMatrixFile {
    pub q: u64,
    pub rows: Vec<Vec<u64>>,
}

pub fn eccir_to_file(e: &Eccir) -> EccirFile {
    EccirFile {
        l: e.l(),
        k: e.k(),
        n: e.n(),
        q: e.q(),
        components: e.components.iter().map(|g| g.rows.clone()).collect(),
        provenance: e.provenance.as_ref().map(|p| ProvenanceFile {
            construction: p.construction.clone(),
            params: p.params.clone(),
            cyclic_nonzeroes: p.cyclic_nonzeroes.clone(),
            equivalences: p
                .equivalences
                .iter()
                .map(|c| EquivalenceFile {
                    from: c.from + 1,
                    to: c.to + 1,
                    multiplier: c.multiplier,
                })
                .collect(),
            product_inner_distance: p.product_inner_distance,
            carlitz_uchiyama_m: p.carlitz_uchiyama_m,
        }),
    }
}

pub fn eccir_from_file(f: &EccirFile) -> Result<Eccir, String> {
    let field = FieldSpec::of_order(f.q).map_err(|e| e.to_string())?;
    if f.components.len() != f.l {
        return Err(format!(
            "component count {} does not match L={}",
            f.components.len(),
            f.l
        ));
    }
    let components = f
        .components
        .iter()
        .map(|rows| GeneratorMatrix::new(field.clone(), rows.clone()))
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| e.to_string())?;
    let provenance = match &f.provenance {
        None => None,
        Some(p) => {
            for c in &p.equivalences {
                if c.from == 0 || c.to == 0 || c.from > f.l || c.to > f.l {
                    return Err(format!("equivalence index out of range: {c:?}"));
                }
            }
            Some(Provenance {
                construction: p.construction.clone(),
                params: p.params.clone(),
                cyclic_nonzeroes: p.cyclic_nonzeroes.clone(),
                equivalences: p
                    .equivalences
                    .iter()
                    .map(|c| EquivalenceClaim {
                        from: c.from - 1,
                        to: c.to - 1,
                        multiplier: c.multiplier,
                    })
                    .collect(),
                product_inner_distance: p.product_inner_distance,
                carlitz_uchiyama_m: p.carlitz_uchiyama_m,
            })
        }
    };
    let e = Eccir::new(components, provenance).map_err(|e| e.to_string())?;
    if e.k() != f.k || e.n() != f.n {
        return Err(format!(
            "declared k={}, n={} do not match components ({}, {})",
            f.k,
            f.n,
            e.k(),
            e.n()
        ));
    }
    Ok(e)
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum DistanceJson {
    Exact { value: u64, method: String },
    Bounded { lower_bound: u64, upper_bound: u64, method: String },
}

impl From<&DistanceResult> for DistanceJson {
    fn from(d: &DistanceResult) -> Self {
        if d.is_exact() {
            DistanceJson::Exact {
                value: d.lower_bound,
                method: d.method.as_str().to_string(),
            }
        } else {
            DistanceJson::Bounded {
                lower_bound: d.lower_bound,
                upper_bound: d.upper_bound,
                method: d.method.as_str().to_string(),
            }
        }
    }
}

#[derive(Debug, Serialize, Deserialize)]
pub struct DStarJson {
    pub low: u64,
    pub high: u64,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct ProfileRow {
    /// 1-based component indices.
    pub subset: Vec<usize>,
    pub dim: usize,
    pub distance: DistanceJson,
    pub singleton: u64,
    pub d_star: Option<DStarJson>,
}

pub fn profile_rows(profile: &DistanceProfile) -> Vec<ProfileRow> {
    profile
        .entries
        .iter()
        .map(|e| ProfileRow {
            subset: e.subset.iter().map(|&i| i + 1).collect(),
            dim: e.dim,
            distance: (&e.distance).into(),
            singleton: e.singleton,
            d_star: e.known.map(|k| DStarJson { low: k.d_star_low, high: k.d_star_high }),
        })
        .collect()
}

pub fn profile_csv(profile: &DistanceProfile) -> String {
    let mut out = String::from("subset,dim,d_low,d_high,kind,method,singleton,d_star_low,d_star_high\n");
    for e in &profile.entries {
        let subset = e
            .subset
            .iter()
            .map(|&i| (i + 1).to_string())
            .collect::<Vec<_>>()
            .join("+");
        let kind = if e.distance.is_exact() { "exact" } else { "bounded" };
        let (ds_lo, ds_hi) = match e.known {
            Some(k) => (k.d_star_low.to_string(), k.d_star_high.to_string()),
            None => (String::new(), String::new()),
        };
        writeln!(
            out,
            "{subset},{},{},{},{kind},{},{},{ds_lo},{ds_hi}",
            e.dim,
            e.distance.lower_bound,
            e.distance.upper_bound,
            e.distance.method.as_str(),
            e.singleton
        )
        .unwrap();
    }
    out
}

#[derive(Debug, Serialize, Deserialize)]
pub struct TrialReportJson {
    pub trials: u64,
    pub successes: u64,
    pub ties: u64,
    pub guaranteed_radius: u64,
    pub distance_lower_bound: u64,
    pub distance_exact: bool,
    pub rng: String,
    pub seed: u64,
}

impl From<&eccir_core::sim::TrialReport> for TrialReportJson {
    fn from(r: &eccir_core::sim::TrialReport) -> Self {
        TrialReportJson {
            trials: r.trials,
            successes: r.successes,
            ties: r.ties,
            guaranteed_radius: r.guaranteed_radius,
            distance_lower_bound: r.distance_lower_bound,
            distance_exact: r.distance_exact,
            rng: r.rng.to_string(),
            seed: r.seed,
        }
    }
}

/// Canonical serialization used everywhere, so serialize -> parse ->
/// serialize round trips byte-identically.
pub fn to_json_string<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}
