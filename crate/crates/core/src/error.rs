use thiserror::Error;

use crate::laurent::Var;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("variable mismatch: {left} vs {right}")]
    VariableMismatch { left: Var, right: Var },
    #[error("division is not exact")]
    NotDivisible,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("evaluation at the pole t = 0")]
    PoleAtZero,
    #[error("exponent {exponent} of {from} has no integral image in {to}")]
    ExponentNotConvertible { exponent: i64, from: Var, to: Var },
    #[error("parse error: {0}")]
    Parse(String),
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum DtwistError {
    #[error("double-twist index must be at least 1")]
    InvalidIndex,
    #[error("invalid root of unity e^(2πi·{k}/{order})")]
    InvalidRootOfUnity { k: u64, order: u64 },
    /// ζ = -1 never solves J_n = 1; carries J_2(-1) as a sample obstruction.
    #[error("ζ = -1 is excluded: J_n(-1) = (-1)^n(6n+1) ≠ 1 (e.g. J_2(-1) = {obstruction})")]
    MinusOneExcluded { obstruction: i64 },
    #[error("leading coefficient ζ^3(1+ζ) vanishes (|·| = {0:e})")]
    DegenerateLeadingCoefficient(f64),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiagramError {
    #[error("edge label {label} occurs {count} times (expected 2)")]
    LabelMultiplicity { label: u32, count: usize },
    #[error("edge labels must be positive")]
    NonPositiveLabel,
    #[error("orientation cannot be derived: {0}")]
    OrientationUnderivable(String),
    #[error("{crossings} crossings exceed the state-sum cap of {cap}")]
    TooManyCrossings { crossings: usize, cap: usize },
    #[error("invalid Conway code: {0}")]
    InvalidCode(String),
    #[error("diagram has a component without crossings")]
    FreeLoop,
    #[error("expected a knot, diagram has {0} components")]
    NotAKnot(usize),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("table line {line}: {message}")]
    Table { line: usize, message: String },
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum RootError {
    #[error("the zero polynomial has no isolated roots")]
    ZeroPolynomial,
    #[error("polynomial must be in t, found {0}")]
    WrongVariable(Var),
    #[error("{} root(s) did not converge within {sweeps} sweeps", .unconverged.len())]
    NoConvergence { sweeps: usize, unconverged: Vec<usize> },
    #[error("coefficient too large for floating point evaluation")]
    CoefficientOverflow,
    #[error(transparent)]
    Poly(#[from] PolyError),
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum BkwError {
    #[error("evaluation at the pole t = 0")]
    PoleAtZero,
    #[error("no equimodular point found near {t0} (tried |s| = 1..={s_max})")]
    NoEquimodularPointFound { t0: String, s_max: u32 },
    #[error("dominance violated at t* = {t_star}: |Λ1| = {modulus1}, |Λ2| = {modulus2}")]
    DominanceViolated {
        t_star: String,
        modulus1: f64,
        modulus2: f64,
    },
    #[error("expected a JW family (constant term -1)")]
    NotJwFamily,
    #[error("no zero of F_{n} within the search box")]
    NoZeroInBox { n: u32 },
    #[error("eigenvalues are proportional on the sampled points")]
    ProportionalEigenvalues,
    #[error("invalid twist parameter s = 0")]
    ZeroTwist,
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error(transparent)]
    Root(#[from] RootError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}
