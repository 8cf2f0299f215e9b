//! Jump polynomials at the turning points, the kneading matrix, and the
//! growth rate read off its determinant.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::polyalg::{bareiss_determinant, smallest_root_bracket, IntPolynomial, PolyMatrix};
use crate::symbolic::{Lap, LapPart, Side, SymbolicDynamics, TurningPoint};

/// Default absolute tolerance for the root of the determinant.
pub const DEFAULT_TOLERANCE: f64 = 1e-12;

/// Formal combination of laps with polynomial coefficients, indexed by lap column.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct JumpVector {
    coeffs: Vec<IntPolynomial>,
}

impl JumpVector {
    pub fn zero(laps: usize) -> Self {
        Self { coeffs: vec![IntPolynomial::zero(); laps] }
    }

    pub fn from_coeffs(coeffs: Vec<IntPolynomial>) -> Self {
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[IntPolynomial] {
        &self.coeffs
    }

    pub fn get(&self, col: usize) -> &IntPolynomial {
        &self.coeffs[col]
    }

    pub fn add_term(&mut self, col: usize, term: &IntPolynomial) {
        self.coeffs[col] += term;
    }

    /// Largest degree among the coefficients, `None` when all vanish.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.iter().filter_map(IntPolynomial::degree).max()
    }

    /// Coefficient of `t^power` as integer weights on the laps.
    pub fn coefficient_of_power(&self, power: usize) -> Vec<i64> {
        self.coeffs.iter().map(|c| c.to_i64s().and_then(|v| v.get(power).copied()).unwrap_or(0)).collect()
    }
}

/// Itinerary difference of the two sides of cutting point `j`, truncated after the bigon length.
pub fn jump_at_cutting_point(sd: &SymbolicDynamics, j: usize) -> Result<JumpVector> {
    let signs = sd.images().sign.clone();
    let mut jump = JumpVector::zero(sd.laps().len());
    for (side, weight) in [(Side::Plus, 1), (Side::Minus, -1)] {
        let mut running = 1;
        for (m, lap) in sd.side_itinerary(j, side)?.into_iter().enumerate() {
            jump.add_term(sd.lap_index(lap), &IntPolynomial::monomial(weight * running, m));
            running *= signs[lap.base];
        }
    }
    Ok(jump)
}

/// Jump at the preimage of the first cutting point in split interval `i`:
/// `(i_r - i_l) + t * first`.
pub fn jump_at_preimage(sd: &SymbolicDynamics, i: usize, first: &JumpVector) -> JumpVector {
    let mut jump = JumpVector::zero(sd.laps().len());
    let t = IntPolynomial::t();
    for (col, c) in first.coeffs().iter().enumerate() {
        jump.add_term(col, &(&t * c));
    }
    jump.add_term(sd.lap_index(Lap { base: i, part: LapPart::Right }), &IntPolynomial::one());
    jump.add_term(sd.lap_index(Lap { base: i, part: LapPart::Left }), &-IntPolynomial::one());
    jump
}

/// All jumps, in turning-point order including the first cutting point.
pub fn all_jumps(sd: &SymbolicDynamics) -> Result<Vec<(TurningPoint, JumpVector)>> {
    let first = jump_at_cutting_point(sd, 0)?;
    let mut out = Vec::new();
    for tp in sd.turning_points() {
        let jump = match tp {
            TurningPoint::Cutting(0) => first.clone(),
            TurningPoint::Cutting(j) => jump_at_cutting_point(sd, j)?,
            TurningPoint::Preimage(i) => jump_at_preimage(sd, i, &first),
        };
        out.push((tp, jump));
    }
    Ok(out)
}

/// Jump coefficients of every turning point but the first, over the lap basis.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KneadingMatrix {
    pub matrix: PolyMatrix,
    pub rows: Vec<TurningPoint>,
    pub cols: Vec<Lap>,
    /// Slope sign of each column's lap.
    pub col_signs: Vec<i32>,
}

pub fn build_matrix(sd: &SymbolicDynamics) -> Result<KneadingMatrix> {
    let jumps = all_jumps(sd)?;
    let rows: Vec<TurningPoint> = jumps.iter().skip(1).map(|(tp, _)| *tp).collect();
    let entries: Vec<Vec<IntPolynomial>> = jumps.into_iter().skip(1).map(|(_, j)| j.coeffs).collect();
    Ok(KneadingMatrix {
        matrix: PolyMatrix::from_rows(entries),
        rows,
        cols: sd.laps().to_vec(),
        col_signs: sd.lap_signs(),
    })
}

/// Growth data extracted from the kneading determinant.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EntropyEstimate {
    /// Determinant with the first column deleted.
    pub determinant: IntPolynomial,
    /// Squarefree part of the determinant without cyclotomic factors or factors `t`.
    pub root_factor: IntPolynomial,
    /// Smallest root in `(0, 1)`.
    pub root: f64,
    /// Endpoints of a bracket around the root, no wider than the tolerance.
    pub root_bracket: (f64, f64),
    /// Growth rate, the reciprocal of the root.
    pub lambda: f64,
    /// Natural logarithm of the growth rate.
    pub entropy: f64,
}

/// Determinant of the matrix with column `col` deleted.
pub fn column_deleted_determinant(km: &KneadingMatrix, col: usize) -> IntPolynomial {
    bareiss_determinant(&km.matrix.delete_column(col))
}

pub fn entropy_from_matrix(km: &KneadingMatrix, tol: f64) -> Result<EntropyEstimate> {
    let determinant = column_deleted_determinant(km, 0);
    entropy_from_determinant(determinant, tol)
}

pub fn entropy_from_determinant(determinant: IntPolynomial, tol: f64) -> Result<EntropyEstimate> {
    let bracket = smallest_root_bracket(&determinant, tol).ok_or(Error::NoRootInUnitInterval)?;
    let root = bracket.midpoint();
    let root_factor = determinant.squarefree_part().strip_unit_interval_endpoints().strip_cyclotomic().primitive_part();
    let lo = num_traits::ToPrimitive::to_f64(&bracket.lo).unwrap_or(f64::NAN);
    let hi = num_traits::ToPrimitive::to_f64(&bracket.hi).unwrap_or(f64::NAN);
    Ok(EntropyEstimate {
        determinant,
        root_factor,
        root,
        root_bracket: (lo, hi),
        lambda: 1.0 / root,
        entropy: -root.ln(),
    })
}

/// `D_i` for every column `i`.
pub fn column_deletion_determinants(km: &KneadingMatrix) -> Vec<IntPolynomial> {
    (0..km.matrix.cols()).map(|c| column_deleted_determinant(km, c)).collect()
}

/// Pairs of zero-based columns violating
/// `(-1)^i D_i (1 - s_j t) = (-1)^j D_j (1 - s_i t)`.
pub fn column_deletion_violations(km: &KneadingMatrix, dets: &[IntPolynomial]) -> Vec<(usize, usize)> {
    let factor = |i: usize| IntPolynomial::from_i64s(&[1, -i64::from(km.col_signs[i])]);
    let signed = |i: usize| if i.is_multiple_of(2) { dets[i].clone() } else { -&dets[i] };
    let mut bad = Vec::new();
    for i in 0..dets.len() {
        for j in i + 1..dets.len() {
            if &signed(i) * &factor(j) != &signed(j) * &factor(i) {
                bad.push((i, j));
            }
        }
    }
    bad
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bigons::MinimalBigons;
    use crate::ordering::{compute_cyclic_order, orientation_map};
    use crate::presentation::parse;

    fn dynamics(input: &str) -> SymbolicDynamics {
        let p = parse(input).unwrap();
        let o = compute_cyclic_order(&p).unwrap();
        let orient = orientation_map(&o).unwrap();
        let bigons = MinimalBigons::compute(&p, &o).unwrap();
        SymbolicDynamics::new(&o, &orient, &bigons).unwrap()
    }

    #[test]
    fn jump_vector_arithmetic() {
        let mut v = JumpVector::zero(3);
        assert_eq!(v.degree(), None);
        v.add_term(1, &IntPolynomial::monomial(2, 3));
        v.add_term(1, &IntPolynomial::monomial(-1, 0));
        assert_eq!(v.degree(), Some(3));
        assert_eq!(v.coefficient_of_power(3), [0, 2, 0]);
        assert_eq!(v.coefficient_of_power(0), [0, -1, 0]);
        assert_eq!(v.get(1), &IntPolynomial::from_i64s(&[-1, 0, 0, 2]));
    }

    #[test]
    fn p3_jump_at_theta_c() {
        let sd = dynamics("abaBd / ccd");
        let o = sd.order();
        let c = o.position(crate::presentation::Letter::from_char('c').unwrap());
        let nu = jump_at_cutting_point(&sd, c).unwrap();
        // (c_l - D_r) + (-D_l - c_r) t over the basis a_l a_r D_l D_r c_l c_r ...
        assert_eq!(nu.coefficient_of_power(0)[..6], [0, 0, 0, -1, 1, 0]);
        assert_eq!(nu.coefficient_of_power(1)[..6], [0, 0, -1, 0, 0, -1]);
        assert_eq!(nu.degree(), Some(1));
    }

    #[test]
    fn preimage_jump_extends_the_first() {
        let sd = dynamics("abaBd / ccd");
        let first = jump_at_cutting_point(&sd, 0).unwrap();
        let m = jump_at_preimage(&sd, 0, &first);
        assert_eq!(m.coefficient_of_power(0)[..2], [-1, 1]);
        assert_eq!(m.coefficient_of_power(1), first.coefficient_of_power(0));
    }

    #[test]
    fn p4_entropy() {
        let km = build_matrix(&dynamics("abABcdCD")).unwrap();
        assert_eq!((km.matrix.rows(), km.matrix.cols()), (13, 14));
        let est = entropy_from_matrix(&km, DEFAULT_TOLERANCE).unwrap();
        assert_eq!(est.root_factor, IntPolynomial::from_i64s(&[1, -6, -6, -6, 1]));
        assert!((est.root - 0.143269846).abs() < 1e-9);
        assert!(est.root_bracket.1 - est.root_bracket.0 <= DEFAULT_TOLERANCE);
        assert!((est.lambda.ln() - est.entropy).abs() < 1e-12);
    }

    #[test]
    fn determinant_without_unit_roots_is_rejected() {
        let err = entropy_from_determinant(IntPolynomial::from_i64s(&[1, 0, 1]), 1e-9).unwrap_err();
        assert!(matches!(err, Error::NoRootInUnitInterval));
    }
}
