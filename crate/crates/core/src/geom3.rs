//! Small fixed-size linear algebra and SO(3) utilities.
//!
//! Everything here is value-semantic and allocation-free except [`kron`],
//! which works on dynamically sized matrices. The `vec` operator stacks
//! columns (column-major), matching nalgebra's internal storage order, and
//! every output-matrix index in [`crate::ltv`] depends on that convention.

use nalgebra::{DMatrix, Matrix3, SMatrix, SVector, Vector3};

use crate::error::{Error, Result};

pub type Vec3 = Vector3<f64>;
pub type Vec9 = SVector<f64, 9>;
pub type Mat3 = Matrix3<f64>;

/// Frobenius tolerance on `R Rᵀ = I` and `det R = 1` for [`Rotation`].
pub const ROTATION_TOL: f64 = 1e-9;
/// Singular-value gap below which the SVD projection is flagged degenerate.
pub const SVD_DEGENERACY_TOL: f64 = 1e-12;
/// Angle below which `exp_so3` switches to its series expansion.
const SMALL_ANGLE: f64 = 1e-4;

/// A 3x3 direction-cosine matrix constrained to SO(3).
///
/// Construction is checked ([`Rotation::try_new`]) or goes through maps that
/// land on the group by construction ([`exp_so3`], [`project_to_so3`]).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Rotation {
    m: Mat3,
}

impl Rotation {
    pub fn identity() -> Self {
        Rotation {
            m: Mat3::identity(),
        }
    }

    /// Checks orthogonality and determinant within [`ROTATION_TOL`].
    pub fn try_new(m: Mat3) -> Result<Self> {
        Self::try_new_with_tol(m, ROTATION_TOL)
    }

    pub fn try_new_with_tol(m: Mat3, tol: f64) -> Result<Self> {
        if !m.iter().all(|x| x.is_finite()) {
            return Err(Error::NonFinite("rotation matrix"));
        }
        let residual = orthogonality_residual(&m).max((m.determinant() - 1.0).abs());
        if residual > tol {
            return Err(Error::NotARotation { residual });
        }
        Ok(Rotation { m })
    }

    /// For matrices already on the group by construction.
    pub(crate) fn from_matrix_unchecked(m: Mat3) -> Self {
        Rotation { m }
    }

    pub fn matrix(&self) -> &Mat3 {
        &self.m
    }

    pub fn transpose(&self) -> Rotation {
        Rotation {
            m: self.m.transpose(),
        }
    }

    /// Rotates a vector: `R v`.
    pub fn rotate(&self, v: &Vec3) -> Vec3 {
        self.m * v
    }

    /// Inverse rotation: `Rᵀ v`.
    pub fn unrotate(&self, v: &Vec3) -> Vec3 {
        self.m.tr_mul(v)
    }

    pub fn compose(&self, other: &Rotation) -> Rotation {
        Rotation {
            m: self.m * other.m,
        }
    }

    /// Geodesic distance to another rotation, in radians.
    pub fn angle_to(&self, other: &Rotation) -> f64 {
        let c = ((self.m.tr_mul(&other.m)).trace() - 1.0) / 2.0;
        c.clamp(-1.0, 1.0).acos()
    }
}

/// `‖M Mᵀ − I‖_F`.
pub fn orthogonality_residual(m: &Mat3) -> f64 {
    (m * m.transpose() - Mat3::identity()).norm()
}

/// The hat map: `skew(v) w = v × w`.
pub fn skew(v: &Vec3) -> Mat3 {
    Mat3::new(0.0, -v.z, v.y, v.z, 0.0, -v.x, -v.y, v.x, 0.0)
}

/// Column-major stacking of a 3x3 matrix into R⁹.
pub fn vec(m: &Mat3) -> Vec9 {
    Vec9::from_iterator(m.iter().copied())
}

/// Inverse of [`vec`]: reshapes R⁹ back into a 3x3 matrix.
pub fn unvec3(z: &Vec9) -> Mat3 {
    Mat3::from_iterator(z.iter().copied())
}

/// Kronecker product `A ⊗ B` with the block convention `(A ⊗ B)_{ij} = a_ij B`.
pub fn kron(a: &DMatrix<f64>, b: &DMatrix<f64>) -> DMatrix<f64> {
    let (ar, ac) = a.shape();
    let (br, bc) = b.shape();
    let mut out = DMatrix::zeros(ar * br, ac * bc);
    for i in 0..ar {
        for j in 0..ac {
            let s = a[(i, j)];
            for bi in 0..br {
                for bj in 0..bc {
                    out[(i * br + bi, j * bc + bj)] = s * b[(bi, bj)];
                }
            }
        }
    }
    out
}

/// The exponential map so(3) → SO(3) (Rodrigues formula).
pub fn exp_so3(v: &Vec3) -> Rotation {
    let theta2 = v.norm_squared();
    let k = skew(v);
    // sin(t)/t and (1 - cos(t))/t^2, series-expanded near zero.
    let (a, b) = if theta2 < SMALL_ANGLE * SMALL_ANGLE {
        (
            1.0 - theta2 / 6.0 + theta2 * theta2 / 120.0,
            0.5 - theta2 / 24.0 + theta2 * theta2 / 720.0,
        )
    } else {
        let theta = theta2.sqrt();
        (theta.sin() / theta, (1.0 - theta.cos()) / theta2)
    };
    Rotation::from_matrix_unchecked(Mat3::identity() + k * a + k * k * b)
}

/// Projects a matrix to the nearest rotation (Frobenius norm) via SVD.
///
/// Returns `U diag(1, 1, det(UVᵀ)) Vᵀ`. The boolean flags the degenerate
/// case where the two smallest singular values coincide within `tol` while
/// `det(UVᵀ) < 0`: the minimizer is then non-unique and the map can jump as
/// the input varies, but the returned matrix is still a valid minimizer.
pub fn project_to_so3(m: &Mat3) -> (Rotation, bool) {
    project_to_so3_with_tol(m, SVD_DEGENERACY_TOL)
}

pub fn project_to_so3_with_tol(m: &Mat3, tol: f64) -> (Rotation, bool) {
    assert!(
        m.iter().all(|x| x.is_finite()),
        "project_to_so3: non-finite input"
    );
    let svd = m.svd(true, true);
    let u = svd.u.expect("svd requested with u");
    let v_t = svd.v_t.expect("svd requested with v_t");
    let det_uv = (u * v_t).determinant();
    let sign = if det_uv < 0.0 { -1.0 } else { 1.0 };
    let d = Mat3::from_diagonal(&Vec3::new(1.0, 1.0, sign));
    let r = u * d * v_t;

    // Singular values from nalgebra's `svd` come out sorted descending.
    let sv = svd.singular_values;
    let degenerate = (sv[1] - sv[2]).abs() <= tol && det_uv < 0.0;
    (Rotation::from_matrix_unchecked(r), degenerate)
}
