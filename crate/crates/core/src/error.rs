//! Error type shared across the toolkit.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Argument outside the domain of a scalar function (log 0, atan ±i, ν ∈ {0, 1}).
    #[error("domain error in {op}: {detail}")]
    Domain { op: &'static str, detail: String },

    /// A pivot fell below the floor during LU elimination. Usually means the
    /// working precision is too low for the requested subsystem size.
    #[error("singular matrix in {op}: pivot magnitude {pivot:e} below floor {floor:e} at step {step}")]
    SingularMatrix {
        op: &'static str,
        step: usize,
        pivot: f64,
        floor: f64,
    },

    /// QR iteration failed to deflate within the sweep cap.
    #[error("eigensolver did not converge: {swept} sweeps on a {n}x{n} matrix (cap {cap})")]
    NoConvergence { n: usize, swept: usize, cap: usize },

    /// Eigenvector matrix too ill-conditioned for a function of the matrix.
    /// Raise the precision or the boundary twist δ.
    #[error("matrix is defective at working precision: eigenvector condition ~1e{cond_log10:.0} exceeds cap 1e{cap_log10:.0}")]
    NearDefective { cond_log10: f64, cap_log10: f64 },

    /// Parameters are in the wrong phase for the requested quantity.
    #[error("phase error: {0}")]
    Phase(String),

    /// Closed-form symbol disagrees with the biorthogonal eigenvector
    /// construction; a √ or tan⁻¹ branch is wrong at this momentum.
    #[error("branch inconsistency in G(k) at k={k}: max entry deviation {dev:e} (tol {tol:e})")]
    BranchInconsistency { k: f64, dev: f64, tol: f64 },

    /// Bloch bands indistinguishable at this momentum.
    #[error("defective Bloch point at k={k}: {detail}")]
    DefectivePoint { k: f64, detail: String },

    /// Spectra {ε_j} and {log[(1−ν_j)/ν_j]} failed to match as multisets.
    #[error("spectral pairing mismatch: worst pair deviation {dev:e} (tol {tol:e})")]
    PairingMismatch { dev: f64, tol: f64 },

    /// Many-body ground energy has a nonzero imaginary part (PT-broken phase).
    #[error("ground energy not real: Im E = {im_energy:e} (tol {tol:e})")]
    ComplexSpectrum { im_energy: f64, tol: f64 },

    /// Gap above the ground state below resolution; left-right state ill-defined.
    #[error("near-degenerate ground state: gap {gap:e} below {tol:e}")]
    DegenerateGround { gap: f64, tol: f64 },

    /// Exact diagonalization requested beyond the dense-size cap.
    #[error("system size L={l} exceeds the exact-diagonalization cap L={cap}")]
    Size { l: usize, cap: usize },

    /// Malformed parameter or config value.
    #[error("invalid parameter {name}: {detail}")]
    InvalidParam { name: &'static str, detail: String },

    /// Serialization container problems.
    #[error("store error: {0}")]
    Store(String),
}

pub type Result<T> = std::result::Result<T, Error>;
