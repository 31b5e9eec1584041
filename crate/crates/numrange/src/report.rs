//! The aggregate `analyze` report.

use numrange_core::analysis::{
    circularity_criterion_5x5, classify_3x3, flat_portions, genericity,
    irreducibility_readings_5x5, reducibility, ShapeVerdict, COMMUTANT_REL_TOL, DEFAULT_GAP_TOL,
};
use numrange_core::kipp::{
    circular_disk_test, detect_circles, numerical_radius, rank_k_range, RankKRange, RankKVerdict,
    CIRCLE_TOL,
};
use numrange_core::pisom::{validate_partial_isometry, PisomSpec};
use numrange_core::{Complex64, ComplexMatrix, Error, DEFAULT_TOL};
use serde_json::{json, Value};

use crate::spec_json::spec_summary;

/// Spread of `λ₁` below which `W(A)` counts as an origin-centred disk.
pub const DISK_TOL: f64 = 1e-9;
/// Width below which a rank-k range collapses to a point.
pub const RANK_K_TOL: f64 = 1e-7;
const MAX_REDUCIBILITY_DIM: usize = 12;

#[derive(Debug, Clone)]
pub struct AnalyzeOptions {
    pub grid: usize,
    /// Replaces every default tolerance when set.
    pub tol: Option<f64>,
    /// Rank-k ranges to report; vertices are listed only for explicit requests.
    pub ks: Option<Vec<usize>>,
}

pub fn pair(z: Complex64) -> Value {
    json!([z.re, z.im])
}

pub fn rank_k_json(r: &RankKRange, with_vertices: bool) -> Value {
    let mut v = json!({"k": r.k, "kind": r.verdict.kind()});
    match &r.verdict {
        RankKVerdict::EmptySet => {}
        RankKVerdict::SinglePoint(z) => v["point"] = pair(*z),
        RankKVerdict::Polygon(vs) => {
            v["vertex_count"] = json!(vs.len());
            if with_vertices {
                v["vertices"] = Value::Array(vs.iter().map(|z| pair(*z)).collect());
            }
        }
    }
    v
}

pub fn analyze(
    a: &ComplexMatrix,
    spec: Option<&PisomSpec>,
    opts: &AnalyzeOptions,
) -> Result<Value, Error> {
    let n = a.dim();
    let m = opts.grid;
    let tol = |default: f64| opts.tol.unwrap_or(default);

    let pi_defect = (&a.matmul(&a.adjoint()).matmul(a) - a).frobenius_norm();
    let gen = genericity(a, m, tol(DEFAULT_GAP_TOL))?;
    let disk = circular_disk_test(a, m, tol(DISK_TOL))?;
    let circles = detect_circles(a, m, tol(CIRCLE_TOL))?;
    let flats = flat_portions(a, m, tol(DEFAULT_GAP_TOL))?;

    let mut report = json!({
        "dimension": n,
        "partial_isometry": validate_partial_isometry(a, tol(DEFAULT_TOL)),
        "partial_isometry_defect": pi_defect,
        "generic": gen.generic,
        "min_gap": gen.min_gap,
        "witness_theta": gen.witness_theta,
        "witness_level": gen.witness_level,
        "numerical_radius": numerical_radius(a, m)?,
        "circular": disk.is_some(),
        "radius": disk,
        "circles": circles.radii,
        "flat_portions": flats.iter().map(|p| json!({
            "direction": p.direction,
            "endpoints": [pair(p.endpoints[0]), pair(p.endpoints[1])],
            "support_value": p.support_value,
            "length": p.length(),
            "eigenspace_dim": p.eigenspace_dim,
        })).collect::<Vec<_>>(),
    });

    if n <= MAX_REDUCIBILITY_DIM {
        let red = reducibility(a, tol(COMMUTANT_REL_TOL))?;
        report["reducible"] = json!(red.reducible);
        report["commutant_dim"] = json!(red.commutant_dim);
        report["reducing_projector_rank"] =
            json!(red.projector.map(|p| p.trace().re.round() as usize));
    } else {
        report["reducible"] = Value::Null;
        report["commutant_dim"] = Value::Null;
    }

    let (ks, explicit) = match &opts.ks {
        Some(ks) => (ks.clone(), true),
        None => ((2..=n).collect(), false),
    };
    let mut ranges = Vec::with_capacity(ks.len());
    for k in ks {
        ranges.push(rank_k_json(
            &rank_k_range(a, k, m, tol(RANK_K_TOL))?,
            explicit,
        ));
    }
    report["rank_k"] = Value::Array(ranges);

    if let Some(spec) = spec {
        report["spec"] = spec_summary(spec);
        let five = match spec {
            PisomSpec::NilpotentDim5(s) => Some(*s),
            PisomSpec::ExceptionalDim5(s) => Some(s.base()),
            _ => None,
        };
        if let Some(s) = five {
            let crit = circularity_criterion_5x5(&s);
            let readings = irreducibility_readings_5x5(&s);
            report["criterion_5x5"] = json!({
                "bcst": s.bcst(),
                "circular": crit.circular,
                "radius": crit.radius,
                "irreducible_as_stated": readings.as_stated,
                "irreducible_by_case_analysis": readings.case_analysis,
            });
        }
    }

    if n == 3 {
        match classify_3x3(a, tol(DEFAULT_TOL)) {
            Ok(c) => {
                let mut v = json!({
                    "lambda_star": pair(c.lambda_star),
                    "flat_condition": c.flat_condition,
                });
                match c.verdict {
                    ShapeVerdict::EllipticalDisk { foci } => {
                        v["verdict"] = json!("elliptical_disk");
                        v["foci"] = json!([pair(foci[0]), pair(foci[1])]);
                    }
                    ShapeVerdict::Ovular => v["verdict"] = json!("ovular"),
                    ShapeVerdict::FlatPortion => v["verdict"] = json!("flat_portion"),
                    ShapeVerdict::LineSegment => v["verdict"] = json!("line_segment"),
                }
                report["classification_3x3"] = v;
            }
            Err(Error::NotTriangular | Error::ReducibleInput) => {}
            Err(e) => return Err(e),
        }
    }
    Ok(report)
}
