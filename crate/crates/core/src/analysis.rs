//! The full pipeline from a parsed presentation to its volume entropy.

use std::time::Instant;

use serde::Serialize;

use crate::bigons::MinimalBigons;
use crate::error::Result;
use crate::kneading::{all_jumps, build_matrix, entropy_from_matrix, KneadingMatrix, DEFAULT_TOLERANCE};
use crate::ordering::{compute_cyclic_order, orientation_map, CyclicOrder, Orientation, OrientationMap};
use crate::polyalg::IntPolynomial;
use crate::presentation::{occurrence_check, Presentation};
use crate::symbolic::{Side, SymbolicDynamics};
use crate::tiling::{build_ball, SphereCounts};

/// Relative gap between the oracle's last sphere ratio and the kneading growth rate accepted as agreement.
pub const ORACLE_AGREEMENT: f64 = 0.02;

/// A presentation that passed the geometricity tests, with its planar data.
#[derive(Debug, Clone)]
pub struct Geometry {
    pub presentation: Presentation,
    pub order: CyclicOrder,
    pub orientation: OrientationMap,
}

impl Geometry {
    pub fn new(p: &Presentation) -> Result<Self> {
        occurrence_check(p)?;
        let order = compute_cyclic_order(p)?;
        let orientation = orientation_map(&order)?;
        Ok(Self { presentation: p.clone(), order, orientation })
    }

    pub fn bigons(&self) -> Result<MinimalBigons> {
        MinimalBigons::compute(&self.presentation, &self.order)
    }
}

#[derive(Debug, Clone)]
pub struct AnalysisOptions {
    pub tolerance: f64,
    pub include_matrix: bool,
    pub include_itineraries: bool,
    /// Radius of the tiling cross-check, if requested.
    pub oracle_radius: Option<usize>,
}

impl Default for AnalysisOptions {
    fn default() -> Self {
        Self { tolerance: DEFAULT_TOLERANCE, include_matrix: false, include_itineraries: false, oracle_radius: None }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LetterInfo {
    pub letter: String,
    pub value: i32,
    pub orientation: Orientation,
    pub cell: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BigonInfo {
    pub pair: (String, String),
    pub left: String,
    pub right: String,
    pub length: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MatrixInfo {
    pub rows: Vec<String>,
    pub cols: Vec<String>,
    /// Entries as ascending-power coefficient arrays.
    pub entries: Vec<Vec<IntPolynomial>>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ItineraryInfo {
    pub turning_point: String,
    pub minus: Vec<String>,
    pub plus: Vec<String>,
    /// Nonzero jump coefficients by lap label.
    pub jump: Vec<(String, String)>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OracleInfo {
    pub radius: usize,
    pub sigma: Vec<u64>,
    pub ratios: Vec<f64>,
    pub relative_error: f64,
    pub agrees: bool,
    pub vertices_built: usize,
}

/// Wall-clock milliseconds per stage.
#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct Timings {
    pub geometry_ms: f64,
    pub bigons_ms: f64,
    pub symbolic_ms: f64,
    pub matrix_ms: f64,
    pub determinant_ms: f64,
    pub oracle_ms: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AnalysisReport {
    pub geometric: bool,
    pub relators: Vec<Vec<i32>>,
    pub n_generators: u32,
    pub cyclic_order: Vec<i32>,
    pub letters: Vec<LetterInfo>,
    pub bigons: Vec<BigonInfo>,
    pub splits: Vec<String>,
    pub laps: Vec<String>,
    pub matrix_shape: (usize, usize),
    #[serde(skip_serializing_if = "Option::is_none")]
    pub matrix: Option<MatrixInfo>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub itineraries: Option<Vec<ItineraryInfo>>,
    pub determinant: IntPolynomial,
    pub root_factor: IntPolynomial,
    pub root: f64,
    pub lambda: f64,
    pub entropy: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleInfo>,
    pub timings: Timings,
}

fn millis(since: Instant) -> f64 {
    since.elapsed().as_secs_f64() * 1e3
}

pub fn bigon_table(g: &Geometry, bigons: &MinimalBigons) -> Vec<BigonInfo> {
    (0..g.order.len())
        .map(|i| {
            let b = bigons.at(i);
            BigonInfo {
                pair: (g.order.letter(i + g.order.len() - 1).to_string(), g.order.letter(i).to_string()),
                left: b.left.to_string(),
                right: b.right.to_string(),
                length: b.len(),
            }
        })
        .collect()
}

pub fn matrix_info(sd: &SymbolicDynamics, km: &KneadingMatrix) -> MatrixInfo {
    MatrixInfo {
        rows: km.rows.iter().map(|tp| tp.label(sd.order())).collect(),
        cols: km.cols.iter().map(|l| l.label(sd.order())).collect(),
        entries: km.matrix.to_rows(),
    }
}

pub fn itinerary_table(sd: &SymbolicDynamics) -> Result<Vec<ItineraryInfo>> {
    let o = sd.order();
    let labels = |laps: Vec<crate::symbolic::Lap>| laps.iter().map(|l| l.label(o)).collect::<Vec<_>>();
    let jumps = all_jumps(sd)?;
    let mut out = Vec::new();
    for (tp, jump) in jumps {
        let (minus, plus) = match tp {
            crate::symbolic::TurningPoint::Cutting(j) => {
                (labels(sd.side_itinerary(j, Side::Minus)?), labels(sd.side_itinerary(j, Side::Plus)?))
            }
            crate::symbolic::TurningPoint::Preimage(_) => (Vec::new(), Vec::new()),
        };
        let jump = jump
            .coeffs()
            .iter()
            .zip(sd.laps())
            .filter(|(c, _)| !c.is_zero())
            .map(|(c, l)| (l.label(o), c.to_string()))
            .collect();
        out.push(ItineraryInfo { turning_point: tp.label(o), minus, plus, jump });
    }
    Ok(out)
}

/// Runs the tiling cross-check at `radius` against the growth rate `lambda`.
pub fn oracle_check(g: &Geometry, radius: usize, lambda: f64) -> Result<OracleInfo> {
    let ball = build_ball(&g.order, &g.orientation, radius)?;
    let SphereCounts { sigma } = ball.sphere_sizes(radius);
    let counts = SphereCounts { sigma: sigma.clone() };
    let ratios = counts.ratios();
    let relative_error = ratios.last().map_or(f64::INFINITY, |r| (r - lambda).abs() / lambda);
    Ok(OracleInfo {
        radius,
        sigma,
        ratios,
        relative_error,
        agrees: relative_error < ORACLE_AGREEMENT,
        vertices_built: ball.vertex_count(),
    })
}

/// Volume entropy of a presentation, with the intermediate data that produced it.
pub fn analyze(p: &Presentation, options: &AnalysisOptions) -> Result<AnalysisReport> {
    let mut timings = Timings::default();

    let start = Instant::now();
    let g = Geometry::new(p)?;
    timings.geometry_ms = millis(start);

    let start = Instant::now();
    let bigons = g.bigons()?;
    timings.bigons_ms = millis(start);

    let start = Instant::now();
    let sd = SymbolicDynamics::new(&g.order, &g.orientation, &bigons)?;
    timings.symbolic_ms = millis(start);

    let start = Instant::now();
    let km = build_matrix(&sd)?;
    timings.matrix_ms = millis(start);

    let start = Instant::now();
    let est = entropy_from_matrix(&km, options.tolerance)?;
    timings.determinant_ms = millis(start);

    let oracle = match options.oracle_radius {
        Some(radius) => {
            let start = Instant::now();
            let info = oracle_check(&g, radius, est.lambda)?;
            timings.oracle_ms = Some(millis(start));
            Some(info)
        }
        None => None,
    };

    let o = &g.order;
    let letters = (0..o.len())
        .map(|i| LetterInfo {
            letter: o.letter(i).to_string(),
            value: o.letter(i).value(),
            orientation: g.orientation.at(i),
            cell: o.cell_word(i).to_string(),
        })
        .collect();

    Ok(AnalysisReport {
        geometric: true,
        relators: p.to_int_relators(),
        n_generators: p.n_generators(),
        cyclic_order: o.to_ints(),
        letters,
        bigons: bigon_table(&g, &bigons),
        splits: sd.splits().iter().map(|&i| o.letter(i).to_string()).collect(),
        laps: sd.laps().iter().map(|l| l.label(o)).collect(),
        matrix_shape: (km.matrix.rows(), km.matrix.cols()),
        matrix: options.include_matrix.then(|| matrix_info(&sd, &km)),
        itineraries: if options.include_itineraries { Some(itinerary_table(&sd)?) } else { None },
        determinant: est.determinant,
        root_factor: est.root_factor,
        root: est.root,
        lambda: est.lambda,
        entropy: est.entropy,
        oracle,
        timings,
    })
}
