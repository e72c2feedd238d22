//! Expression trees for analytic functions on the unit disk.
//!
//! Functions are represented as immutable trees over one complex variable,
//! evaluated exactly in binary64 and differentiated symbolically. All
//! catalog functions are rational, so no branch cuts ever arise and exact
//! derivatives remove one tolerance source from everything downstream.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::tol::POLE_GUARD;

/// Complex scalar used throughout the library.
pub type Cplx = num_complex::Complex64;

#[derive(Debug)]
enum Node {
    /// The single free variable z.
    Variable,
    Constant(Cplx),
    Add(AnalyticExpr, AnalyticExpr),
    Sub(AnalyticExpr, AnalyticExpr),
    Mul(AnalyticExpr, AnalyticExpr),
    Div(AnalyticExpr, AnalyticExpr),
    Neg(AnalyticExpr),
    /// Integer power with exponent k ≥ 1; constructed only via `int_pow`.
    IntPow(AnalyticExpr, u32),
}

/// An immutable expression tree denoting an analytic function of z.
///
/// Cloning is cheap: subtrees are reference-counted and shared, never
/// mutated after construction. Trees are evaluated exactly as built —
/// there is no simplification pass.
#[derive(Debug, Clone)]
pub struct AnalyticExpr {
    node: Arc<Node>,
}

impl AnalyticExpr {
    fn from_node(node: Node) -> Self {
        Self { node: Arc::new(node) }
    }

    /// The free variable z.
    pub fn variable() -> Self {
        Self::from_node(Node::Variable)
    }

    /// A complex constant.
    pub fn constant(c: Cplx) -> Self {
        Self::from_node(Node::Constant(c))
    }

    /// A real constant.
    pub fn constant_re(x: f64) -> Self {
        Self::constant(Cplx::new(x, 0.0))
    }

    /// Integer power with exponent `k ≥ 1`.
    ///
    /// # Panics
    /// Panics when `k == 0`: a zeroth power is a constant and must be built
    /// as one, keeping the power rule free of degenerate exponents.
    pub fn int_pow(self, k: u32) -> Self {
        assert!(k >= 1, "int_pow exponent must be at least 1");
        Self::from_node(Node::IntPow(self, k))
    }

    /// Evaluates the tree at `z`.
    ///
    /// Fails with [`Error::PoleProximity`] when a division denominator has
    /// modulus below [`POLE_GUARD`], and with [`Error::NonFinite`] if the
    /// result overflows — neither occurs for catalog functions on any
    /// closed subdisk |z| ≤ r < 1.
    pub fn eval(&self, z: Cplx) -> Result<Cplx> {
        let value = self.eval_inner(z)?;
        if value.re.is_finite() && value.im.is_finite() {
            Ok(value)
        } else {
            Err(Error::NonFinite { z })
        }
    }

    fn eval_inner(&self, z: Cplx) -> Result<Cplx> {
        match &*self.node {
            Node::Variable => Ok(z),
            Node::Constant(c) => Ok(*c),
            Node::Add(l, r) => Ok(l.eval_inner(z)? + r.eval_inner(z)?),
            Node::Sub(l, r) => Ok(l.eval_inner(z)? - r.eval_inner(z)?),
            Node::Mul(l, r) => Ok(l.eval_inner(z)? * r.eval_inner(z)?),
            Node::Div(l, r) => {
                let den = r.eval_inner(z)?;
                if den.norm() < POLE_GUARD {
                    return Err(Error::PoleProximity { z, denom_mag: den.norm() });
                }
                Ok(l.eval_inner(z)? / den)
            }
            Node::Neg(e) => Ok(-e.eval_inner(z)?),
            Node::IntPow(e, k) => Ok(e.eval_inner(z)?.powu(*k)),
        }
    }

    /// Symbolic derivative by the standard rules.
    ///
    /// The result is a new tree sharing subtrees with `self`; no
    /// simplification is attempted.
    pub fn derivative(&self) -> AnalyticExpr {
        match &*self.node {
            Node::Variable => Self::constant_re(1.0),
            Node::Constant(_) => Self::constant_re(0.0),
            Node::Add(l, r) => l.derivative() + r.derivative(),
            Node::Sub(l, r) => l.derivative() - r.derivative(),
            Node::Mul(l, r) => l.derivative() * r.clone() + l.clone() * r.derivative(),
            Node::Div(l, r) => {
                let num = l.derivative() * r.clone() - l.clone() * r.derivative();
                num / r.clone().int_pow(2)
            }
            Node::Neg(e) => -e.derivative(),
            Node::IntPow(e, k) => {
                let scaled = Self::constant_re(f64::from(*k)) * e.derivative();
                if *k == 1 {
                    scaled
                } else {
                    scaled * e.clone().int_pow(*k - 1)
                }
            }
        }
    }
}

impl std::ops::Add for AnalyticExpr {
    type Output = AnalyticExpr;
    fn add(self, rhs: AnalyticExpr) -> AnalyticExpr {
        AnalyticExpr::from_node(Node::Add(self, rhs))
    }
}

impl std::ops::Sub for AnalyticExpr {
    type Output = AnalyticExpr;
    fn sub(self, rhs: AnalyticExpr) -> AnalyticExpr {
        AnalyticExpr::from_node(Node::Sub(self, rhs))
    }
}

impl std::ops::Mul for AnalyticExpr {
    type Output = AnalyticExpr;
    fn mul(self, rhs: AnalyticExpr) -> AnalyticExpr {
        AnalyticExpr::from_node(Node::Mul(self, rhs))
    }
}

impl std::ops::Div for AnalyticExpr {
    type Output = AnalyticExpr;
    fn div(self, rhs: AnalyticExpr) -> AnalyticExpr {
        AnalyticExpr::from_node(Node::Div(self, rhs))
    }
}

impl std::ops::Neg for AnalyticExpr {
    type Output = AnalyticExpr;
    fn neg(self) -> AnalyticExpr {
        AnalyticExpr::from_node(Node::Neg(self))
    }
}

/// Sign parameter for the half-plane and Koebe-type catalog entries.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    /// The sign as a real scalar, +1 or −1.
    pub fn value(self) -> f64 {
        match self {
            Sign::Plus => 1.0,
            Sign::Minus => -1.0,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sign::Plus => write!(f, "+1"),
            Sign::Minus => write!(f, "-1"),
        }
    }
}

impl FromStr for Sign {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "+1" | "1" => Ok(Sign::Plus),
            "-1" => Ok(Sign::Minus),
            other => Err(Error::Parse { detail: format!("expected +1 or -1, got {other:?}") }),
        }
    }
}

/// Identifier for the built-in function catalog.
///
/// | Variant | Function | Parameter domain |
/// |---|---|---|
/// | `HalfPlane(s)` | z/(1+sz) | s ∈ {+1, −1} |
/// | `Koebe(s)` | z/(1+sz)² | s ∈ {+1, −1} |
/// | `Blaschke(ζ)` | (z+ζ)/(1+ζz) | ζ ∈ [−1, 1] |
/// | `Monomial(θ, n)` | e^{iθ}·zⁿ | θ real, n ≥ 1 |
/// | `ConstantFn(c)` | c | \|c\| < 1 |
///
/// The half-plane and Koebe entries serve as analytic parts; the other
/// three are unit-bounded and serve as dilatations.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum CatalogId {
    HalfPlane { s: Sign },
    Koebe { s: Sign },
    Blaschke { zeta: f64 },
    Monomial { theta: f64, n: u32 },
    ConstantFn { c: Cplx },
}

/// Builds the expression tree for a catalog entry, validating its
/// parameter domain.
pub fn build_catalog(id: CatalogId) -> Result<AnalyticExpr> {
    let z = AnalyticExpr::variable;
    let one = || AnalyticExpr::constant_re(1.0);
    match id {
        CatalogId::HalfPlane { s } => {
            let den = one() + AnalyticExpr::constant_re(s.value()) * z();
            Ok(z() / den)
        }
        CatalogId::Koebe { s } => {
            let den = one() + AnalyticExpr::constant_re(s.value()) * z();
            Ok(z() / den.int_pow(2))
        }
        CatalogId::Blaschke { zeta } => {
            if !(-1.0..=1.0).contains(&zeta) {
                return Err(Error::InvalidCatalog {
                    detail: format!("Blaschke parameter must lie in [-1, 1], got {zeta}"),
                });
            }
            let zeta = AnalyticExpr::constant_re(zeta);
            Ok((z() + zeta.clone()) / (one() + zeta * z()))
        }
        CatalogId::Monomial { theta, n } => {
            if n < 1 {
                return Err(Error::InvalidCatalog {
                    detail: "monomial degree must be at least 1".into(),
                });
            }
            Ok(AnalyticExpr::constant(Cplx::from_polar(1.0, theta)) * z().int_pow(n))
        }
        CatalogId::ConstantFn { c } => {
            if c.norm() >= 1.0 {
                return Err(Error::InvalidCatalog {
                    detail: format!("constant dilatation must have |c| < 1, got |c| = {}", c.norm()),
                });
            }
            Ok(AnalyticExpr::constant(c))
        }
    }
}

impl fmt::Display for CatalogId {
    /// Canonical text form, e.g. `halfplane:-1`, `koebe:+1`, `blaschke:0.9`,
    /// `monomial:0:2`, `const:0.5+0i`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CatalogId::HalfPlane { s } => write!(f, "halfplane:{s}"),
            CatalogId::Koebe { s } => write!(f, "koebe:{s}"),
            CatalogId::Blaschke { zeta } => write!(f, "blaschke:{zeta}"),
            CatalogId::Monomial { theta, n } => write!(f, "monomial:{theta}:{n}"),
            CatalogId::ConstantFn { c } => write!(f, "const:{c}"),
        }
    }
}

impl FromStr for CatalogId {
    type Err = Error;

    /// Parses the canonical text form; see the [`fmt::Display`] impl.
    fn from_str(s: &str) -> Result<Self> {
        let bad = |detail: String| Error::Parse { detail };
        let (name, rest) = s
            .split_once(':')
            .ok_or_else(|| bad(format!("catalog spec {s:?} is missing a ':' separator")))?;
        match name {
            "halfplane" => Ok(CatalogId::HalfPlane { s: rest.parse()? }),
            "koebe" => Ok(CatalogId::Koebe { s: rest.parse()? }),
            "blaschke" => {
                let zeta: f64 = rest
                    .parse()
                    .map_err(|_| bad(format!("invalid Blaschke parameter {rest:?}")))?;
                Ok(CatalogId::Blaschke { zeta })
            }
            "monomial" => {
                let (theta, n) = rest
                    .split_once(':')
                    .ok_or_else(|| bad(format!("monomial spec needs theta:n, got {rest:?}")))?;
                let theta: f64 = theta
                    .parse()
                    .map_err(|_| bad(format!("invalid monomial angle {theta:?}")))?;
                let n: u32 = n
                    .parse()
                    .map_err(|_| bad(format!("invalid monomial degree {n:?}")))?;
                Ok(CatalogId::Monomial { theta, n })
            }
            "const" => {
                let c: Cplx = rest
                    .parse()
                    .map_err(|_| bad(format!("invalid complex constant {rest:?} (use forms like 0.5+0i)")))?;
                Ok(CatalogId::ConstantFn { c })
            }
            other => Err(bad(format!("unknown catalog entry {other:?}"))),
        }
    }
}
