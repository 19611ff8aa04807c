//! Inertial navigation as a linear time-varying (LTV) system.
//!
//! Rigid-body pose estimation (position, velocity, attitude) from an IMU plus
//! generic exteroceptive outputs (body-frame landmarks, GPS position with
//! lever arm, inertial/body-frame velocity, magnetometer). Expressing the
//! state in the body frame and stacking the columns of the transposed
//! rotation matrix turns the full problem into a 15-dimensional LTV system,
//! so a plain continuous-time Kalman observer applies globally: no
//! linearization around the estimate, no error-state bookkeeping.
//!
//! Modules:
//! - [`geom3`]: small fixed-size linear algebra, SO(3) exponential, SVD
//!   projection to the nearest rotation.
//! - [`truth`]: reference trajectories and rigid-body kinematics integration.
//! - [`sensors`]: synthetic measurement generation with seeded noise.
//! - [`ltv`]: body-frame state packing and assembly of the time-varying
//!   system matrices and stacked output vector.
//! - [`observer`]: the Riccati Kalman observer, the constant-gain variant,
//!   attitude reconstruction and inertial-frame recovery.
//! - [`obsv`]: transition matrices, observability Gramians and
//!   persistency-of-excitation diagnostics.
//! - [`scenario`]: end-to-end simulation scenarios, metrics and CSV export.

pub mod error;
pub mod geom3;
pub mod ltv;
pub mod observer;
pub mod obsv;
pub mod scenario;
pub mod sensors;
pub mod truth;

pub use error::{Error, Result};
