use foliant_core::families::ParamMap;
use foliant_core::git::{HullPosition, StabilityVerdict, WeightSupport};
use foliant_core::localgeom::{IntersectionNumber, SingularityReport};
use foliant_core::poly::format_rational;
use serde::Serialize;
use std::collections::BTreeMap;

/// Field order here is the JSON field order.
#[derive(Serialize, Default)]
pub struct Report {
    /// Canonical z-reduced representative.
    pub input: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub singularity: Option<SingularityReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verdict: Option<StabilityVerdict>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub weights: Option<WeightsReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub generated: Option<GeneratedReport>,
}

#[derive(Serialize)]
pub struct WeightsReport {
    pub support: WeightSupport,
    pub classes: usize,
    pub hull: HullPosition,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dump: Option<String>,
}

#[derive(Serialize)]
pub struct GeneratedReport {
    pub family: String,
    pub params: BTreeMap<String, String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub multiplicity: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub milnor: Option<IntersectionNumber>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub file: Option<String>,
}

pub fn params_to_strings(map: &ParamMap) -> BTreeMap<String, String> {
    map.iter().map(|(k, v)| (k.clone(), format_rational(v))).collect()
}

#[derive(Serialize)]
pub struct CatalogRow {
    pub name: String,
    pub field: String,
    pub point: String,
    pub multiplicity: u32,
    pub milnor: u64,
    pub verdict: String,
}

impl Report {
    pub fn to_text(&self) -> String {
        let mut out = format!("input: {}\n", self.input);
        if let Some(s) = &self.singularity {
            out.push_str(&format!(
                "point: {}\nmultiplicity: {}\nmilnor: {}\nunique: {}\n",
                s.point, s.multiplicity, s.milnor, s.unique
            ));
        }
        if let Some(v) = &self.verdict {
            out.push_str(&format!("class: {}\nnotes: {}\n", v.class, v.notes));
            out.push_str(&format!(
                "certificate: {}\n",
                serde_json::to_string(&v.certificate).expect("serializable")
            ));
        }
        if let Some(w) = &self.weights {
            out.push_str(&format!("classes: {}\nhull: {}\n", w.classes, w.hull.label()));
            if let HullPosition::OriginOutside(lambda) = &w.hull {
                out.push_str(&format!("lambda: {lambda}\n"));
            }
            if let Some(d) = &w.dump {
                out.push_str(d);
            }
        }
        if let Some(g) = &self.generated {
            out.push_str(&format!("family: {}\n", g.family));
            for (k, v) in &g.params {
                out.push_str(&format!("  {k} = {v}\n"));
            }
            if let (Some(m), Some(mu)) = (g.multiplicity, g.milnor) {
                out.push_str(&format!("multiplicity: {m}\nmilnor: {mu}\n"));
            }
        }
        out
    }
}
