//! Error type shared by every module of the crate.

use alloc::string::String;
use core::fmt;

/// Everything that can go wrong while validating inputs or running one of the
/// constructions.
///
/// Variants are grouped by flavour: `Shape*` and `*Violation` variants are
/// precondition failures (the input does not satisfy the hypotheses of the
/// construction), `NonConvergence` and `RouteDisagreement` are numerical
/// outcomes, and the rest are plain invalid-argument errors.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Matrix dimensions incompatible with the requested operation.
    Shape(String),
    /// A matrix entry is NaN or infinite.
    NonFinite,
    /// Matrix expected to be Hermitian is not, within the stated tolerance.
    NotHermitian { defect: f64 },
    /// An eigenvalue of a supposedly positive semidefinite matrix is below
    /// the admissible tolerance.
    NegativeEigenvalue { value: f64 },
    /// A matrix required to be invertible is numerically singular.
    Singular(String),
    /// Multiplication table entry out of range.
    TableEntryOutOfRange { row: usize, col: usize, value: usize },
    /// Associativity fails at the witness triple `(i, j, k)`.
    NotAssociative { i: usize, j: usize, k: usize },
    /// The supplied index map is not surjective onto `0..m`.
    NotSurjective { missing: usize },
    /// The supplied index map is not a homomorphism; `(x, y)` is a witness
    /// pair with conflicting products.
    NotAHomomorphism { x: usize, y: usize },
    /// An infeasibility certificate failed internal verification, so the
    /// solver result cannot be trusted.
    CertificateUnverified { margin: f64 },
    /// A mean was required to be feasible but is not.
    MeanNotFeasible,
    /// The affine action law `(x.s).t = x.(st)` fails at the witness pair.
    ActionLawViolation { s: usize, t: usize, defect: f64 },
    /// Two generators that must commute do not; `defect` is the commutator
    /// norm relative to the admissible tolerance.
    NonCommuting { g: usize, h: usize, defect: f64 },
    /// The subspace is not invariant under generator `g`:
    /// `T_g(Y) ⊆ Y` fails with the given residual.
    SubspaceNotInvariant { generator: usize, residual: f64 },
    /// Generator `g` maps the subspace into itself but its restriction is
    /// singular, so `T_g(Y) = Y` with invertible restriction fails.
    SingularRestriction { generator: usize },
    /// Generator `g` of the target action is not invertible.
    SingularGenerator { generator: usize },
    /// The inverse supplied for generator `g` is not an inverse.
    InverseMismatch { generator: usize, residual: f64 },
    /// The exact linear system defining the construction has no solution
    /// within tolerance, i.e. the requested object does not exist.
    NoSolution { residual: f64 },
    /// The averaging orbit grew past the admissible multiple of the seed
    /// norm, evidence that the boundedness hypothesis fails.
    OrbitGrowth { factor: f64 },
    /// The joint lower bound vanished: some word of generators is singular,
    /// so the two-sided sandwich hypothesis fails.
    LowerBoundVanished,
    /// The averaging route and the exact route disagree beyond tolerance.
    RouteDisagreement { distance: f64, tolerance: f64 },
    /// The averaging engine did not converge; the report carries the
    /// residual history.
    NonConvergence(crate::folner::ConvergenceReport),
    /// A sandwich bound `m/M ≤ ‖T_w u‖/‖u‖ ≤ M/m` fails; carries the witness
    /// word (signed exponents), probe index and observed ratio.
    BoundViolation { word: alloc::vec::Vec<i64>, probe: usize, ratio: f64 },
    /// The fixed-point set of the requested averaging map is empty.
    EmptyFixedSet,
    /// Generic invalid argument with a human-readable reason.
    Invalid(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Shape(msg) => write!(f, "shape mismatch: {msg}"),
            Error::NonFinite => write!(f, "matrix entries must be finite"),
            Error::NotHermitian { defect } => {
                write!(f, "matrix is not Hermitian (defect {defect:.3e})")
            }
            Error::NegativeEigenvalue { value } => {
                write!(f, "matrix is not positive semidefinite (eigenvalue {value:.3e})")
            }
            Error::Singular(what) => write!(f, "singular matrix: {what}"),
            Error::TableEntryOutOfRange { row, col, value } => write!(
                f,
                "table entry at ({row},{col}) is {value}, outside the element range"
            ),
            Error::NotAssociative { i, j, k } => write!(
                f,
                "multiplication table is not associative: ({i}*{j})*{k} != {i}*({j}*{k})"
            ),
            Error::NotSurjective { missing } => {
                write!(f, "index map misses image element {missing}")
            }
            Error::NotAHomomorphism { x, y } => write!(
                f,
                "index map is not a homomorphism: products conflict at pair ({x},{y})"
            ),
            Error::CertificateUnverified { margin } => write!(
                f,
                "infeasibility certificate failed verification (margin {margin:.3e})"
            ),
            Error::MeanNotFeasible => write!(f, "mean is not feasible"),
            Error::ActionLawViolation { s, t, defect } => write!(
                f,
                "action law (x.s).t = x.(st) fails at (s,t)=({s},{t}) with defect {defect:.3e}"
            ),
            Error::NonCommuting { g, h, defect } => write!(
                f,
                "generators {g} and {h} do not commute (commutator norm {defect:.3e})"
            ),
            Error::SubspaceNotInvariant { generator, residual } => write!(
                f,
                "hypothesis violated: generator {generator} does not map the subspace \
                 into itself (residual {residual:.3e}); the construction requires \
                 T(Y) = Y with invertible restriction"
            ),
            Error::SingularRestriction { generator } => write!(
                f,
                "hypothesis violated: the restriction of generator {generator} to the \
                 subspace is singular, so T(Y) = Y with invertible restriction fails"
            ),
            Error::SingularGenerator { generator } => write!(
                f,
                "hypothesis violated: target generator {generator} is not invertible"
            ),
            Error::InverseMismatch { generator, residual } => write!(
                f,
                "supplied inverse for generator {generator} is not an inverse \
                 (residual {residual:.3e})"
            ),
            Error::NoSolution { residual } => write!(
                f,
                "the defining linear system is inconsistent (residual {residual:.3e}); \
                 no such operator exists"
            ),
            Error::OrbitGrowth { factor } => write!(
                f,
                "averaging orbit grew by factor {factor:.3e}; boundedness hypothesis \
                 evidently fails"
            ),
            Error::LowerBoundVanished => write!(
                f,
                "hypothesis violated: a word of generators is singular, the lower \
                 sandwich bound m > 0 fails"
            ),
            Error::RouteDisagreement { distance, tolerance } => write!(
                f,
                "averaging and exact routes disagree: distance {distance:.3e} exceeds \
                 {tolerance:.3e}"
            ),
            Error::NonConvergence(report) => write!(
                f,
                "averaging did not converge: {:?} after {} boxes, final residual {:.3e}",
                report.status,
                report.boxes_used,
                report.final_residual
            ),
            Error::BoundViolation { word, probe, ratio } => write!(
                f,
                "sandwich bound violated by word {word:?} on probe {probe} \
                 (ratio {ratio:.6})"
            ),
            Error::EmptyFixedSet => write!(f, "the fixed-point set is empty"),
            Error::Invalid(msg) => write!(f, "{msg}"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
