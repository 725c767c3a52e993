//! Versioned JSON result records.

use serde::{Deserialize, Serialize};
use vshape_core::{CanonicalType, Point, UnitDir, VShape};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Algorithm {
    Exact,
    Approx,
    Ptas,
    Oracle,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct VShapeRecord {
    pub apex_inner: [f64; 2],
    pub apex_outer: [f64; 2],
    pub dir_left: [f64; 2],
    pub dir_right: [f64; 2],
    pub width_left: f64,
    pub width_right: f64,
}

impl From<&VShape> for VShapeRecord {
    fn from(v: &VShape) -> Self {
        let w = v.widths();
        VShapeRecord {
            apex_inner: [v.apex_inner.x, v.apex_inner.y],
            apex_outer: [v.apex_outer.x, v.apex_outer.y],
            dir_left: [v.dir_left.dx, v.dir_left.dy],
            dir_right: [v.dir_right.dx, v.dir_right.dy],
            width_left: w.left,
            width_right: w.right,
        }
    }
}

impl VShapeRecord {
    pub fn to_vshape(&self) -> VShape {
        let pt = |a: [f64; 2]| Point::new(a[0], a[1]);
        let dir = |a: [f64; 2]| UnitDir { dx: a[0], dy: a[1] };
        VShape {
            apex_inner: pt(self.apex_inner),
            apex_outer: pt(self.apex_outer),
            dir_left: dir(self.dir_left),
            dir_right: dir(self.dir_right),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ResultRecord {
    pub schema_version: u32,
    pub algorithm: Algorithm,
    pub width: f64,
    pub balanced: bool,
    pub vshape: VShapeRecord,
    /// `both_outer`, `inner_outer` or `both_inner`.
    pub canonical_type: Option<String>,
    /// Proven factor over the optimum; absent for exact results.
    pub guarantee: Option<f64>,
    pub degenerate: bool,
    pub n_points: usize,
    pub duplicates_removed: usize,
    pub candidates_examined: u64,
    pub elapsed_ms: f64,
    /// Every optimum found, when enumeration was requested.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub optima: Option<Vec<VShapeRecord>>,
}

pub fn canonical_name(t: CanonicalType) -> &'static str {
    match t {
        CanonicalType::BothOuter => "both_outer",
        CanonicalType::InnerOuter => "inner_outer",
        CanonicalType::BothInner => "both_inner",
    }
}

impl ResultRecord {
    pub fn new(algorithm: Algorithm, v: &VShape, balanced: bool) -> Self {
        ResultRecord {
            schema_version: SCHEMA_VERSION,
            algorithm,
            width: v.width(),
            balanced,
            vshape: v.into(),
            canonical_type: None,
            guarantee: None,
            degenerate: false,
            n_points: 0,
            duplicates_removed: 0,
            candidates_examined: 0,
            elapsed_ms: 0.0,
            optima: None,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("record serializes")
    }

    pub fn from_json(s: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(s)
    }
}
