//! Witness solvers, verifiers and transports.
//!
//! Every criterion is an affine condition on an unknown matrix. Each one is
//! written once as a residual function (zero exactly on witnesses); the
//! verifier evaluates it and the solver linearizes it and returns the
//! canonical solution.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::entwine::{yetter_drinfeld, Entwining};
use crate::field::{Field, Scalar};
use crate::linalg::{solve_matrix, Matrix};
use crate::strucalg::{Algebra, Coalgebra, Hopf, Report, RightComodule, RightModule};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Tag {
    NormalizedIntegral,
    DualIntegral,
    RelativeCasimir,
    BimoduleRetraction,
    Theta,
    Cocasimir,
    TotalIntegral,
    AugmentedCointegral,
    Beta,
    FrobeniusRing,
    FrobeniusEntwining,
    FrobeniusHK,
    Alpha,
    CentralX,
    QuantumIntegral,
}

/// A tagged exact witness. Pairs (Frobenius systems) carry two matrices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub tag: Tag,
    pub data: Vec<Matrix>,
}

impl Witness {
    pub fn new(tag: Tag, data: Matrix) -> Self {
        Witness { tag, data: vec![data] }
    }

    pub fn pair(tag: Tag, first: Matrix, second: Matrix) -> Self {
        Witness {
            tag,
            data: vec![first, second],
        }
    }

    pub fn matrix(&self) -> &Matrix {
        &self.data[0]
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WitnessError {
    #[error("T is not a subalgebra: {0}")]
    TNotSubalgebra(String),
    #[error("not an algebra map: {0}")]
    NotAlgebraMap(String),
    #[error("not a Frobenius system: {0}")]
    NotAFrobeniusSystem(String),
    #[error("wrong tag: expected {expected:?}, found {found:?}")]
    WrongTag { expected: Tag, found: Tag },
    #[error("wrong mode: {0}")]
    WrongMode(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
}

fn all_zero(rs: &[Matrix]) -> bool {
    rs.iter().all(Matrix::is_zero)
}

fn holds(x: &Matrix, shape: (usize, usize), residual: impl Fn(&Matrix) -> Vec<Matrix>) -> bool {
    x.shape() == shape && all_zero(&residual(x))
}

fn scalar_one(f: &Field) -> Matrix {
    Matrix::identity(f, 1)
}

fn ue(a: &Algebra, c: &Coalgebra) -> Matrix {
    a.unit.mul(&c.counit)
}

fn expect_tag(w: &Witness, tag: Tag) -> Result<(), WitnessError> {
    if w.tag == tag {
        Ok(())
    } else {
        Err(WitnessError::WrongTag {
            expected: tag,
            found: w.tag,
        })
    }
}

// ---------------------------------------------------------------------------
// Hopf integrals
// ---------------------------------------------------------------------------

/// `t·h = ε(h) t`, `ε(t) = 1`; `t` is `n × 1`.
fn integral_residual(h: &Hopf, t: &Matrix) -> Vec<Matrix> {
    let id = Matrix::identity(h.field(), h.dim());
    vec![
        h.algebra.mult.mul(&t.kron(&id)).sub(&t.mul(&h.coalgebra.counit)),
        h.coalgebra.counit.mul(t).sub(&scalar_one(h.field())),
    ]
}

pub fn solve_normalized_integral(h: &Hopf) -> Option<Witness> {
    solve_matrix(h.field(), h.dim(), 1, |t| integral_residual(h, t)).map(|t| Witness::new(Tag::NormalizedIntegral, t))
}

pub fn verify_normalized_integral(h: &Hopf, t: &Matrix) -> bool {
    holds(t, (h.dim(), 1), |t| integral_residual(h, t))
}

/// `φ(h₍₁₎)h₍₂₎ = φ(h)1`, `φ(1) = 1`; `φ` is `1 × n`.
fn dual_integral_residual(h: &Hopf, phi: &Matrix) -> Vec<Matrix> {
    let id = Matrix::identity(h.field(), h.dim());
    vec![
        phi.kron(&id).mul(&h.coalgebra.comult).sub(&h.algebra.unit.mul(phi)),
        phi.mul(&h.algebra.unit).sub(&scalar_one(h.field())),
    ]
}

pub fn solve_dual_normalized_integral(h: &Hopf) -> Option<Witness> {
    solve_matrix(h.field(), 1, h.dim(), |p| dual_integral_residual(h, p)).map(|p| Witness::new(Tag::DualIntegral, p))
}

pub fn verify_dual_normalized_integral(h: &Hopf, phi: &Matrix) -> bool {
    holds(phi, (1, h.dim()), |p| dual_integral_residual(h, p))
}

// ---------------------------------------------------------------------------
// Ring extensions (base ring k)
// ---------------------------------------------------------------------------

/// Checks that the columns of `t` span a unital subalgebra of `s` and
/// returns them as elements.
pub fn subalgebra_elements(s: &Algebra, t: &Matrix) -> Result<Vec<Vec<Scalar>>, WitnessError> {
    if t.rows() != s.dim {
        return Err(WitnessError::DimensionMismatch(format!(
            "subalgebra generators have length {}, algebra has dimension {}",
            t.rows(),
            s.dim
        )));
    }
    let rank = t.rank();
    let in_span = |v: Vec<Scalar>| t.hstack(&Matrix::column(&s.field, v)).rank() == rank;
    if !in_span(s.unit_vec()) {
        return Err(WitnessError::TNotSubalgebra("does not contain 1".into()));
    }
    let elems: Vec<Vec<Scalar>> = (0..t.cols()).map(|j| t.col(j)).collect();
    for (i, x) in elems.iter().enumerate() {
        for (j, y) in elems.iter().enumerate() {
            if !in_span(s.product(x, y)) {
                return Err(WitnessError::TNotSubalgebra(format!(
                    "product of generators {i} and {j} leaves the span"
                )));
            }
        }
    }
    Ok(elems)
}

/// `t e = e t` for `t ∈ T`, `m(e) = 1`; `e` is `n² × 1`.
fn casimir_residual(s: &Algebra, ts: &[Vec<Scalar>], e: &Matrix) -> Vec<Matrix> {
    let id = s.identity();
    let mut out: Vec<Matrix> = ts
        .iter()
        .map(|t| s.left_mult(t).kron(&id).mul(e).sub(&id.kron(&s.right_mult(t)).mul(e)))
        .collect();
    out.push(s.mult.mul(e).sub(&s.unit));
    out
}

pub fn solve_relative_casimir(s: &Algebra, t: &Matrix) -> Result<Option<Witness>, WitnessError> {
    let ts = subalgebra_elements(s, t)?;
    Ok(
        solve_matrix(&s.field, s.dim * s.dim, 1, |e| casimir_residual(s, &ts, e))
            .map(|e| Witness::new(Tag::RelativeCasimir, e)),
    )
}

pub fn verify_relative_casimir(s: &Algebra, t: &Matrix, e: &Matrix) -> Result<bool, WitnessError> {
    let ts = subalgebra_elements(s, t)?;
    Ok(holds(e, (s.dim * s.dim, 1), |e| casimir_residual(s, &ts, e)))
}

/// Separability idempotent: `T = S`.
pub fn solve_separability_idempotent(s: &Algebra) -> Option<Witness> {
    solve_relative_casimir(s, &s.identity()).expect("S is a subalgebra of itself")
}

pub fn verify_separability_idempotent(s: &Algebra, e: &Matrix) -> bool {
    verify_relative_casimir(s, &s.identity(), e).expect("S is a subalgebra of itself")
}

/// An algebra map `ι : R → S` given by its matrix.
#[derive(Debug, Clone, Copy)]
pub struct Inclusion<'a> {
    pub source: &'a Algebra,
    pub map: &'a Matrix,
}

impl Inclusion<'_> {
    fn check(&self, s: &Algebra, name: &str) -> Result<(), WitnessError> {
        let i = self.map;
        if i.shape() != (s.dim, self.source.dim) {
            return Err(WitnessError::DimensionMismatch(format!("{name}: wrong shape")));
        }
        if i.mul(&self.source.mult) != s.mult.mul(&i.kron(i)) {
            return Err(WitnessError::NotAlgebraMap(format!("{name} is not multiplicative")));
        }
        if i.mul(&self.source.unit) != s.unit {
            return Err(WitnessError::NotAlgebraMap(format!("{name} is not unital")));
        }
        Ok(())
    }
}

/// `ν(rs) = rν(s)`, `ν(sq) = ν(s)q`, `ν(1) = 1`, evaluated inside `S`.
fn retraction_residual(s: &Algebra, r: Inclusion, q: Inclusion, nu: &Matrix) -> Vec<Matrix> {
    let ids = s.identity();
    let inu = r.map.mul(nu);
    vec![
        inu.mul(&s.mult.mul(&r.map.kron(&ids)))
            .sub(&s.mult.mul(&r.map.kron(&inu))),
        inu.mul(&s.mult.mul(&ids.kron(q.map)))
            .sub(&s.mult.mul(&inu.kron(q.map))),
        nu.mul(&s.unit).sub(&r.source.unit),
    ]
}

pub fn solve_bimodule_retraction(s: &Algebra, r: Inclusion, q: Inclusion) -> Result<Option<Witness>, WitnessError> {
    r.check(s, "R → S")?;
    q.check(s, "Q → S")?;
    Ok(
        solve_matrix(&s.field, r.source.dim, s.dim, |nu| retraction_residual(s, r, q, nu))
            .map(|nu| Witness::new(Tag::BimoduleRetraction, nu)),
    )
}

pub fn verify_bimodule_retraction(s: &Algebra, r: Inclusion, q: Inclusion, nu: &Matrix) -> Result<bool, WitnessError> {
    r.check(s, "R → S")?;
    q.check(s, "Q → S")?;
    Ok(holds(nu, (r.source.dim, s.dim), |nu| retraction_residual(s, r, q, nu)))
}

/// `k → S` by the unit.
pub fn unit_inclusion(s: &Algebra) -> (Algebra, Matrix) {
    (Algebra::ground(&s.field), s.unit.clone())
}

// ---------------------------------------------------------------------------
// Frobenius ring extensions
// ---------------------------------------------------------------------------

fn frobenius_casimir_residual(s: &Algebra, f: &Matrix) -> Vec<Matrix> {
    let ts: Vec<Vec<Scalar>> = (0..s.dim).map(|i| s.basis(i)).collect();
    let id = s.identity();
    ts.iter()
        .map(|t| s.left_mult(t).kron(&id).mul(f).sub(&id.kron(&s.right_mult(t)).mul(f)))
        .collect()
}

fn frobenius_normalization(s: &Algebra, mu: &Matrix, f: &Matrix) -> [Matrix; 2] {
    let id = s.identity();
    [mu.kron(&id).mul(f).sub(&s.unit), id.kron(mu).mul(f).sub(&s.unit)]
}

/// Checks a Frobenius system `(μ̄, f)` of `k → S`: `μ̄` is `1 × n`, `f` is `n² × 1`.
pub fn verify_frobenius_ring(s: &Algebra, mu: &Matrix, f: &Matrix) -> Report {
    let mut r = Report::default();
    let n = s.dim;
    let shapes = mu.shape() == (1, n) && f.shape() == (n * n, 1);
    r.flag("shapes", shapes);
    if !shapes {
        return r;
    }
    // any k-linear functional is a k-bimodule map
    r.flag("bimodule map", true);
    r.flag("Casimir element", all_zero(&frobenius_casimir_residual(s, f)));
    let [left, right] = frobenius_normalization(s, mu, f);
    r.flag("dual basis, left", left.is_zero());
    r.flag("dual basis, right", right.is_zero());
    r
}

/// The Casimir element dual to a given functional, if `μ̄` is a Frobenius form.
pub fn solve_frobenius_casimir(s: &Algebra, mu: &Matrix) -> Option<Witness> {
    let f = solve_matrix(&s.field, s.dim * s.dim, 1, |f| {
        let mut out = frobenius_casimir_residual(s, f);
        out.extend(frobenius_normalization(s, mu, f));
        out
    })?;
    Some(Witness::pair(Tag::FrobeniusRing, mu.clone(), f))
}

fn require_frobenius(s: &Algebra, mu: &Matrix, f: &Matrix) -> Result<(), WitnessError> {
    match verify_frobenius_ring(s, mu, f).first_failure() {
        None => Ok(()),
        Some(c) => Err(WitnessError::NotAFrobeniusSystem(c.axiom.clone())),
    }
}

/// `α(st) = α(s)t` for `t ∈ T`, `Σ f¹α(f²) = 1`.
fn alpha_residual(s: &Algebra, f: &Matrix, ts: &[Vec<Scalar>], alpha: &Matrix) -> Vec<Matrix> {
    let mut out: Vec<Matrix> = ts
        .iter()
        .map(|t| {
            let rt = s.right_mult(t);
            alpha.mul(&rt).sub(&rt.mul(alpha))
        })
        .collect();
    out.push(s.mult.mul(&s.identity().kron(alpha)).mul(f).sub(&s.unit));
    out
}

pub fn solve_alpha(s: &Algebra, mu: &Matrix, f: &Matrix, t: &Matrix) -> Result<Option<Witness>, WitnessError> {
    require_frobenius(s, mu, f)?;
    let ts = subalgebra_elements(s, t)?;
    Ok(solve_matrix(&s.field, s.dim, s.dim, |a| alpha_residual(s, f, &ts, a)).map(|a| Witness::new(Tag::Alpha, a)))
}

pub fn verify_alpha(s: &Algebra, f: &Matrix, t: &Matrix, alpha: &Matrix) -> Result<bool, WitnessError> {
    let ts = subalgebra_elements(s, t)?;
    Ok(holds(alpha, (s.dim, s.dim), |a| alpha_residual(s, f, &ts, a)))
}

/// `x q = q x` for `q ∈ Q`, `μ̄(x) = 1`.
fn central_x_residual(s: &Algebra, mu: &Matrix, qs: &[Vec<Scalar>], x: &Matrix) -> Vec<Matrix> {
    let mut out: Vec<Matrix> = qs.iter().map(|q| s.right_mult(q).sub(&s.left_mult(q)).mul(x)).collect();
    out.push(mu.mul(x).sub(&scalar_one(&s.field)));
    out
}

pub fn solve_x(s: &Algebra, mu: &Matrix, f: &Matrix, q: &Matrix) -> Result<Option<Witness>, WitnessError> {
    require_frobenius(s, mu, f)?;
    let qs = subalgebra_elements(s, q)?;
    Ok(solve_matrix(&s.field, s.dim, 1, |x| central_x_residual(s, mu, &qs, x)).map(|x| Witness::new(Tag::CentralX, x)))
}

pub fn verify_x(s: &Algebra, mu: &Matrix, q: &Matrix, x: &Matrix) -> Result<bool, WitnessError> {
    let qs = subalgebra_elements(s, q)?;
    Ok(holds(x, (s.dim, 1), |x| central_x_residual(s, mu, &qs, x)))
}

// ---------------------------------------------------------------------------
// Entwinings
// ---------------------------------------------------------------------------

/// `θ(c⊗d₍₁₎)⊗d₍₂₎ = θ(c₍₂₎⊗d)_ψ ⊗ c₍₁₎^ψ` as maps `C⊗C → A⊗C`.
fn theta_colinearity(e: &Entwining, theta: &Matrix) -> Matrix {
    let ic = e.ic();
    let d = &e.coalgebra.comult;
    theta
        .kron(&ic)
        .mul(&ic.kron(d))
        .sub(&Matrix::chain(&[&e.psi, &ic.kron(theta), &d.kron(&ic)]))
}

fn theta_residual(e: &Entwining, theta: &Matrix) -> Vec<Matrix> {
    vec![
        theta_colinearity(e, theta),
        theta.mul(&e.coalgebra.comult).sub(&ue(&e.algebra, &e.coalgebra)),
    ]
}

/// `θ : C ⊗ C → A` (`dim A × dim C²`).
pub fn solve_theta(e: &Entwining) -> Option<Witness> {
    let (na, nc) = e.dims();
    solve_matrix(e.field(), na, nc * nc, |t| theta_residual(e, t)).map(|t| Witness::new(Tag::Theta, t))
}

pub fn verify_theta(e: &Entwining, theta: &Matrix) -> bool {
    let (na, nc) = e.dims();
    holds(theta, (na, nc * nc), |t| theta_residual(e, t))
}

/// `e¹(c)⊗e²(c)a = a_ψ e¹(c^ψ)⊗e²(c^ψ)` as maps `C⊗A → A⊗A`.
fn cocasimir_centralizing(ent: &Entwining, e: &Matrix) -> Matrix {
    let ia = ent.ia();
    let m = &ent.algebra.mult;
    ia.kron(m)
        .mul(&e.kron(&ia))
        .sub(&Matrix::chain(&[&m.kron(&ia), &ia.kron(e), &ent.psi]))
}

fn cocasimir_residual(ent: &Entwining, e: &Matrix) -> Vec<Matrix> {
    vec![
        cocasimir_centralizing(ent, e),
        ent.algebra.mult.mul(e).sub(&ue(&ent.algebra, &ent.coalgebra)),
    ]
}

/// `e : C → A ⊗ A` (`dim A² × dim C`).
pub fn solve_cocasimir(ent: &Entwining) -> Option<Witness> {
    let (na, nc) = ent.dims();
    solve_matrix(ent.field(), na * na, nc, |e| cocasimir_residual(ent, e)).map(|e| Witness::new(Tag::Cocasimir, e))
}

pub fn verify_cocasimir(ent: &Entwining, e: &Matrix) -> bool {
    let (na, nc) = ent.dims();
    holds(e, (na * na, nc), |e| cocasimir_residual(ent, e))
}

/// Colinearity `ρ_A φ = (φ⊗I)Δ` and `φ(1) = 1` for `φ : L → A`.
fn total_integral_residual(l: &Hopf, a: &Algebra, rho: &RightComodule, phi: &Matrix) -> Vec<Matrix> {
    let il = Matrix::identity(l.field(), l.dim());
    vec![
        rho.rho.mul(phi).sub(&phi.kron(&il).mul(&l.coalgebra.comult)),
        phi.mul(&l.algebra.unit).sub(&a.unit),
    ]
}

pub fn solve_total_integral(l: &Hopf, a: &Algebra, rho: &RightComodule) -> Option<Witness> {
    solve_matrix(l.field(), a.dim, l.dim(), |p| total_integral_residual(l, a, rho, p))
        .map(|p| Witness::new(Tag::TotalIntegral, p))
}

pub fn verify_total_integral(l: &Hopf, a: &Algebra, rho: &RightComodule, phi: &Matrix) -> bool {
    holds(phi, (a.dim, l.dim()), |p| total_integral_residual(l, a, rho, p))
}

/// `ψ(c·h) = ψ(c)h` and `ε_L ψ = ε_C` for `ψ : C → L`.
fn cointegral_residual(l: &Hopf, c: &Coalgebra, act: &RightModule, psi: &Matrix) -> Vec<Matrix> {
    let il = Matrix::identity(l.field(), l.dim());
    vec![
        psi.mul(&act.action_map(l.field()))
            .sub(&l.algebra.mult.mul(&psi.kron(&il))),
        l.coalgebra.counit.mul(psi).sub(&c.counit),
    ]
}

pub fn solve_augmented_cointegral(l: &Hopf, c: &Coalgebra, act: &RightModule) -> Option<Witness> {
    solve_matrix(l.field(), l.dim(), c.dim, |p| cointegral_residual(l, c, act, p))
        .map(|p| Witness::new(Tag::AugmentedCointegral, p))
}

pub fn verify_augmented_cointegral(l: &Hopf, c: &Coalgebra, act: &RightModule, psi: &Matrix) -> bool {
    holds(psi, (l.dim(), c.dim), |p| cointegral_residual(l, c, act, p))
}

// ---------------------------------------------------------------------------
// Transports
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Direction {
    /// `e = S(t₍₁₎) ⊗ t₍₂₎`
    IntegralToIdempotent,
    /// `θ(h⊗k) = φ(S(h)k)`
    TotalIntegralToTheta,
    /// `φ(h) = θ(1⊗h)`
    ThetaToTotalIntegral,
    /// `ψ(c) = ε_L(e¹(c)) e²(c)`
    CocasimirToCointegral,
}

impl Direction {
    pub fn source(self) -> Tag {
        match self {
            Direction::IntegralToIdempotent => Tag::NormalizedIntegral,
            Direction::TotalIntegralToTheta => Tag::TotalIntegral,
            Direction::ThetaToTotalIntegral => Tag::Theta,
            Direction::CocasimirToCointegral => Tag::Cocasimir,
        }
    }

    pub fn target(self) -> Tag {
        match self {
            Direction::IntegralToIdempotent => Tag::RelativeCasimir,
            Direction::TotalIntegralToTheta => Tag::Theta,
            Direction::ThetaToTotalIntegral => Tag::TotalIntegral,
            Direction::CocasimirToCointegral => Tag::AugmentedCointegral,
        }
    }

    pub fn parse(s: &str) -> Option<Direction> {
        Some(match s {
            "integral->idempotent" | "integral-to-idempotent" => Direction::IntegralToIdempotent,
            "totalintegral->theta" | "total-integral-to-theta" => Direction::TotalIntegralToTheta,
            "theta->totalintegral" | "theta-to-total-integral" => Direction::ThetaToTotalIntegral,
            "cocasimir->cointegral" | "cocasimir-to-cointegral" => Direction::CocasimirToCointegral,
            _ => return None,
        })
    }
}

/// Applies a transport; `l` is the Hopf algebra the witness is built over.
pub fn transport(w: &Witness, direction: Direction, l: &Hopf) -> Result<Witness, WitnessError> {
    expect_tag(w, direction.source())?;
    let x = w.matrix();
    let il = Matrix::identity(l.field(), l.dim());
    let s = &l.antipode;
    let data = match direction {
        Direction::IntegralToIdempotent => s.kron(&il).mul(&l.coalgebra.comult).mul(x),
        Direction::TotalIntegralToTheta => Matrix::chain(&[x, &l.algebra.mult, &s.kron(&il)]),
        Direction::ThetaToTotalIntegral => x.mul(&l.algebra.unit.kron(&il)),
        Direction::CocasimirToCointegral => l.coalgebra.counit.kron(&il).mul(x),
    };
    Ok(Witness::new(direction.target(), data))
}

// ---------------------------------------------------------------------------
// Frobenius systems for the forgetful functors
// ---------------------------------------------------------------------------

/// The four `(θ, z)` conditions, `z ∈ A ⊗ C` as a `dim A·dim C × 1` column.
fn fg_residuals(e: &Entwining, theta: &Matrix, z: &Matrix) -> [(&'static str, Matrix); 5] {
    let (ia, ic) = (e.ia(), e.ic());
    let m = &e.algebra.mult;
    let psi = &e.psi;
    let uep = ue(&e.algebra, &e.coalgebra);
    let m_theta = m.mul(&ia.kron(theta));
    [
        (
            "θ(c⊗d)a = a_ψΨ θ(c^Ψ⊗d^ψ)",
            m.mul(&theta.kron(&ia))
                .sub(&Matrix::chain(&[&m_theta, &psi.kron(&ic), &ic.kron(psi)])),
        ),
        ("θ is colinear", theta_colinearity(e, theta)),
        (
            "az = za",
            m.kron(&ic)
                .mul(&ia.kron(z))
                .sub(&Matrix::chain(&[&m.kron(&ic), &ia.kron(psi), &z.kron(&ia)])),
        ),
        ("Σ a_l θ(c_l⊗d) = ε(d)1", m_theta.mul(&z.kron(&ic)).sub(&uep)),
        (
            "Σ a_lψ θ(d^ψ⊗c_l) = ε(d)1",
            Matrix::chain(&[&m_theta, &psi.kron(&ic), &ic.kron(z)]).sub(&uep),
        ),
    ]
}

fn fg_shapes(e: &Entwining, theta: &Matrix, z: &Matrix) -> bool {
    let (na, nc) = e.dims();
    theta.shape() == (na, nc * nc) && z.shape() == (na * nc, 1)
}

pub fn verify_frobenius_entwining(e: &Entwining, theta: &Matrix, z: &Matrix) -> Report {
    let mut r = Report::default();
    let ok = fg_shapes(e, theta, z);
    r.flag("shapes", ok);
    if ok {
        for (name, m) in fg_residuals(e, theta, z) {
            r.flag(name, m.is_zero());
        }
    }
    r
}

fn require_fg(e: &Entwining, theta: &Matrix, z: &Matrix) -> Result<(), WitnessError> {
    match verify_frobenius_entwining(e, theta, z).first_failure() {
        None => Ok(()),
        Some(c) => Err(WitnessError::NotAFrobeniusSystem(c.axiom.clone())),
    }
}

/// Solves for `θ` with `z` fixed.
pub fn solve_fg_theta(e: &Entwining, z: &Matrix) -> Option<Witness> {
    let (na, nc) = e.dims();
    let theta = solve_matrix(e.field(), na, nc * nc, |t| {
        let [a, b, _, d, f] = fg_residuals(e, t, z);
        vec![a.1, b.1, d.1, f.1]
    })?;
    Some(Witness::pair(Tag::FrobeniusEntwining, theta, z.clone()))
}

/// Solves for `z` with `θ` fixed.
pub fn solve_fg_z(e: &Entwining, theta: &Matrix) -> Option<Witness> {
    let (na, nc) = e.dims();
    let z = solve_matrix(e.field(), na * nc, 1, |z| {
        let [_, _, c, d, f] = fg_residuals(e, theta, z);
        vec![c.1, d.1, f.1]
    })?;
    Some(Witness::pair(Tag::FrobeniusEntwining, theta.clone(), z))
}

/// `ψ(I⊗m)(I⊗I⊗θ)(I⊗ψ⊗I)(I⊗I⊗β⊗I)Δ³ = u⊗I` as maps `C → A⊗C`.
fn beta_hsep_residual(e: &Entwining, theta: &Matrix, beta: &Matrix) -> Matrix {
    let (ia, ic) = (e.ia(), e.ic());
    let d = &e.coalgebra.comult;
    let d3 = Matrix::chain(&[&d.kron(&ic).kron(&ic), &d.kron(&ic), d]);
    Matrix::chain(&[
        &e.psi,
        &ic.kron(&e.algebra.mult),
        &Matrix::kron_all(&[&ic, &ia, theta]),
        &Matrix::kron_all(&[&ic, &e.psi, &ic]),
        &Matrix::kron_all(&[&ic, &ic, beta, &ic]),
        &d3,
    ])
    .sub(&e.algebra.unit.kron(&ic))
}

/// `β(c)a = a_ψ β(c^ψ)` as maps `C⊗A → A`.
fn beta_centralizing(e: &Entwining, beta: &Matrix) -> Matrix {
    let m = &e.algebra.mult;
    m.mul(&beta.kron(&e.ia()))
        .sub(&Matrix::chain(&[m, &e.ia().kron(beta), &e.psi]))
}

/// `β : C → A` with the `H`-separability condition.
pub fn solve_beta_hsep(e: &Entwining, theta: &Matrix, z: &Matrix) -> Result<Option<Witness>, WitnessError> {
    require_fg(e, theta, z)?;
    let (na, nc) = e.dims();
    Ok(solve_matrix(e.field(), na, nc, |b| vec![beta_hsep_residual(e, theta, b)]).map(|b| Witness::new(Tag::Beta, b)))
}

/// `β` with both the `H`-separability and the centralizing condition.
pub fn solve_beta_sep(e: &Entwining, theta: &Matrix, z: &Matrix) -> Result<Option<Witness>, WitnessError> {
    require_fg(e, theta, z)?;
    let (na, nc) = e.dims();
    Ok(solve_matrix(e.field(), na, nc, |b| {
        vec![beta_hsep_residual(e, theta, b), beta_centralizing(e, b)]
    })
    .map(|b| Witness::new(Tag::Beta, b)))
}

pub fn verify_beta_hsep(e: &Entwining, theta: &Matrix, beta: &Matrix) -> bool {
    holds(beta, (e.dims().0, e.dims().1), |b| {
        vec![beta_hsep_residual(e, theta, b)]
    })
}

pub fn verify_beta_sep(e: &Entwining, theta: &Matrix, beta: &Matrix) -> bool {
    holds(beta, (e.dims().0, e.dims().1), |b| {
        vec![beta_hsep_residual(e, theta, b), beta_centralizing(e, b)]
    })
}

/// The four `(ϑ, e)` conditions; `ϑ` is `1 × dim C·dim A`, `e` is `dim A² × dim C`.
fn hk_residuals(ent: &Entwining, vt: &Matrix, e: &Matrix) -> [(&'static str, Matrix); 5] {
    let (ia, ic) = (ent.ia(), ent.ic());
    let d = &ent.coalgebra.comult;
    let psi = &ent.psi;
    let uep = ue(&ent.algebra, &ent.coalgebra);
    let e_d = ic.kron(e).mul(d);
    [
        (
            "ϑ(c₁⊗a_ψ)c₂^ψ = ϑ(c₂⊗a)c₁",
            Matrix::chain(&[&vt.kron(&ic), &ic.kron(psi), &d.kron(&ia)]).sub(&ic.kron(vt).mul(&d.kron(&ia))),
        ),
        (
            "e is colinear",
            e.kron(&ic)
                .mul(d)
                .sub(&Matrix::chain(&[&ia.kron(psi), &psi.kron(&ia), &e_d])),
        ),
        ("e is centralizing", cocasimir_centralizing(ent, e)),
        ("ϑ(c₁⊗e¹(c₂))e²(c₂) = ε(c)1", vt.kron(&ia).mul(&e_d).sub(&uep)),
        (
            "ϑ(c₁^ψ⊗e²(c₂))e¹(c₂)_ψ = ε(c)1",
            Matrix::chain(&[&ia.kron(vt), &psi.kron(&ia), &e_d]).sub(&uep),
        ),
    ]
}

pub fn verify_frobenius_hk(ent: &Entwining, vt: &Matrix, e: &Matrix) -> Report {
    let (na, nc) = ent.dims();
    let mut r = Report::default();
    let ok = vt.shape() == (1, nc * na) && e.shape() == (na * na, nc);
    r.flag("shapes", ok);
    if ok {
        for (name, m) in hk_residuals(ent, vt, e) {
            r.flag(name, m.is_zero());
        }
    }
    r
}

/// Solves for `ϑ` with `e` fixed.
pub fn solve_hk_vartheta(ent: &Entwining, e: &Matrix) -> Option<Witness> {
    let (na, nc) = ent.dims();
    let vt = solve_matrix(ent.field(), 1, nc * na, |v| {
        let [a, b, c, d, f] = hk_residuals(ent, v, e);
        vec![a.1, b.1, c.1, d.1, f.1]
    })?;
    Some(Witness::pair(Tag::FrobeniusHK, vt, e.clone()))
}

fn require_hk(ent: &Entwining, vt: &Matrix, e: &Matrix) -> Result<(), WitnessError> {
    match verify_frobenius_hk(ent, vt, e).first_failure() {
        None => Ok(()),
        Some(c) => Err(WitnessError::NotAFrobeniusSystem(c.axiom.clone())),
    }
}

/// `ε(c)a = a_ψ₁ψ₂ e¹(c₂^ψ₁)_ψ₃ β(c₁^ψ₂ψ₃) e²(c₂^ψ₁)` as maps `C⊗A → A`.
fn beta_fsep_residual(ent: &Entwining, e: &Matrix, beta: &Matrix) -> Matrix {
    let (ia, ic) = (ent.ia(), ent.ic());
    let m = &ent.algebra.mult;
    let psi = &ent.psi;
    Matrix::chain(&[
        m,
        &m.kron(&ia),
        &Matrix::kron_all(&[&ia, beta, &ia]),
        &psi.kron(&ia),
        &Matrix::kron_all(&[&ic, m, &ia]),
        &Matrix::kron_all(&[&ic, &ia, e]),
        &ic.kron(psi),
        &ent.coalgebra.comult.kron(&ia),
    ])
    .sub(&ent.coalgebra.counit.kron(&ia))
}

/// `β(c₁)⊗c₂ = β(c₂)_ψ⊗c₁^ψ`.
fn beta_colinear(ent: &Entwining, beta: &Matrix) -> Matrix {
    let d = &ent.coalgebra.comult;
    let ic = ent.ic();
    beta.kron(&ic)
        .mul(d)
        .sub(&Matrix::chain(&[&ent.psi, &ic.kron(beta), d]))
}

/// `β` making `H` `F`-separable.
pub fn solve_beta_hfsep(ent: &Entwining, vt: &Matrix, e: &Matrix) -> Result<Option<Witness>, WitnessError> {
    require_hk(ent, vt, e)?;
    let (na, nc) = ent.dims();
    Ok(solve_matrix(ent.field(), na, nc, |b| vec![beta_fsep_residual(ent, e, b)]).map(|b| Witness::new(Tag::Beta, b)))
}

/// `β` making `H` separable.
pub fn solve_beta_fsep(ent: &Entwining, vt: &Matrix, e: &Matrix) -> Result<Option<Witness>, WitnessError> {
    require_hk(ent, vt, e)?;
    let (na, nc) = ent.dims();
    Ok(solve_matrix(ent.field(), na, nc, |b| {
        vec![beta_fsep_residual(ent, e, b), beta_colinear(ent, b)]
    })
    .map(|b| Witness::new(Tag::Beta, b)))
}

pub fn verify_beta_hfsep(ent: &Entwining, e: &Matrix, beta: &Matrix) -> bool {
    holds(beta, ent.dims(), |b| vec![beta_fsep_residual(ent, e, b)])
}

pub fn verify_beta_fsep(ent: &Entwining, e: &Matrix, beta: &Matrix) -> bool {
    holds(beta, ent.dims(), |b| {
        vec![beta_fsep_residual(ent, e, b), beta_colinear(ent, b)]
    })
}

// ---------------------------------------------------------------------------
// Quantum integrals
// ---------------------------------------------------------------------------

/// `γ(h)(g) = θ(g⊗h)`; `γ` is `n² × n` with `End(L)` flattened row-major.
pub fn curry(theta: &Matrix, n: usize) -> Matrix {
    Matrix::from_fn(theta.field(), n * n, n, |r, h| {
        theta.get(r / n, (r % n) * n + h).clone()
    })
}

pub fn uncurry(gamma: &Matrix, n: usize) -> Matrix {
    Matrix::from_fn(gamma.field(), n, n * n, |k, c| gamma.get(k * n + c / n, c % n).clone())
}

pub fn solve_quantum_integral(l: &Hopf) -> Option<Witness> {
    let theta = solve_theta(&yetter_drinfeld(l))?;
    Some(Witness::new(Tag::QuantumIntegral, curry(theta.matrix(), l.dim())))
}

pub fn verify_quantum_integral(l: &Hopf, gamma: &Matrix) -> bool {
    let n = l.dim();
    gamma.shape() == (n * n, n) && verify_theta(&yetter_drinfeld(l), &uncurry(gamma, n))
}

/// The dual form: a cocasimir map on the Yetter–Drinfeld entwining.
pub fn solve_yd_cocasimir(l: &Hopf) -> Option<Witness> {
    solve_cocasimir(&yetter_drinfeld(l))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::entwine::DoiKoppinenDatum;
    use crate::strucalg::{cyclic_table, extension_algebra, group_algebra, sweedler_h4, trivial_hopf};

    fn q() -> Field {
        Field::rationals()
    }

    fn gf(p: u64) -> Field {
        Field::prime(p).unwrap()
    }

    fn kc(f: &Field, n: usize) -> Hopf {
        group_algebra(f, &cyclic_table(n)).unwrap()
    }

    fn col(f: &Field, v: &[(i64, i64)]) -> Matrix {
        let v = v
            .iter()
            .map(|&(a, b)| f.div(&f.from_int(a), &f.from_int(b)).unwrap())
            .collect();
        Matrix::column(f, v)
    }

    #[test]
    fn integral_of_qc2_is_half_sum() {
        let h = kc(&q(), 2);
        let t = solve_normalized_integral(&h).unwrap();
        assert_eq!(t.matrix(), &col(&q(), &[(1, 2), (1, 2)]));
        assert!(verify_normalized_integral(&h, t.matrix()));
    }

    #[test]
    fn integrals_fail_in_bad_characteristic_and_for_h4() {
        assert!(solve_normalized_integral(&kc(&gf(3), 3)).is_none());
        assert!(solve_normalized_integral(&sweedler_h4(&q())).is_none());
        assert!(solve_normalized_integral(&kc(&gf(2), 3)).is_some());
    }

    #[test]
    fn dual_integrals() {
        let h = kc(&q(), 2);
        let phi = solve_dual_normalized_integral(&h).unwrap();
        assert_eq!(phi.matrix(), &Matrix::from_ints(&q(), &[&[1, 0]]));
        let k = trivial_hopf(&q());
        assert_eq!(
            solve_dual_normalized_integral(&k).unwrap().matrix(),
            &Matrix::identity(&q(), 1)
        );
        // the group algebra is cosemisimple in every characteristic
        let h2 = kc(&gf(2), 2);
        let phi = solve_dual_normalized_integral(&h2).unwrap();
        assert!(verify_dual_normalized_integral(&h2, phi.matrix()));
        assert!(solve_dual_normalized_integral(&sweedler_h4(&q())).is_none());
    }

    #[test]
    fn separability_idempotent_of_qc2() {
        let h = kc(&q(), 2);
        let e = solve_separability_idempotent(&h.algebra).unwrap();
        assert_eq!(e.matrix(), &col(&q(), &[(1, 2), (0, 1), (0, 1), (1, 2)]));
        assert!(solve_separability_idempotent(&kc(&gf(2), 2).algebra).is_none());
    }

    #[test]
    fn scalar_subalgebra_admits_one_tensor_one() {
        let h = sweedler_h4(&q());
        let t = h.algebra.unit.clone();
        let e = solve_relative_casimir(&h.algebra, &t).unwrap().unwrap();
        assert!(verify_relative_casimir(&h.algebra, &t, e.matrix()).unwrap());
        let one_one = h.algebra.unit.kron(&h.algebra.unit);
        assert!(verify_relative_casimir(&h.algebra, &t, &one_one).unwrap());
    }

    #[test]
    fn non_subalgebra_rejected() {
        let h = sweedler_h4(&q());
        let g_only = Matrix::column(&q(), h.algebra.basis(1));
        assert!(matches!(
            solve_relative_casimir(&h.algebra, &g_only),
            Err(WitnessError::TNotSubalgebra(_))
        ));
    }

    #[test]
    fn transport_integral_to_idempotent() {
        let h = kc(&q(), 2);
        let t = solve_normalized_integral(&h).unwrap();
        let e = transport(&t, Direction::IntegralToIdempotent, &h).unwrap();
        assert!(verify_separability_idempotent(&h.algebra, e.matrix()));
        assert!(matches!(
            transport(&e, Direction::IntegralToIdempotent, &h),
            Err(WitnessError::WrongTag { .. })
        ));
    }

    #[test]
    fn bimodule_retractions() {
        let f = q();
        let s = kc(&f, 3).algebra;
        let id = s.identity();
        let r = Inclusion { source: &s, map: &id };
        let nu = solve_bimodule_retraction(&s, r, r).unwrap().unwrap();
        assert_eq!(nu.matrix(), &id);
        let (k, u) = unit_inclusion(&s);
        let ku = Inclusion { source: &k, map: &u };
        let nu = solve_bimodule_retraction(&s, ku, ku).unwrap().unwrap();
        assert!(verify_bimodule_retraction(&s, ku, ku, nu.matrix()).unwrap());
        let ext = Field::simple_extension(&f, vec![f.from_int(-2), f.zero(), f.one()]).unwrap();
        let k2 = extension_algebra(&ext).unwrap();
        let (kq, uq) = unit_inclusion(&k2);
        let id2 = k2.identity();
        let res = solve_bimodule_retraction(
            &k2,
            Inclusion { source: &kq, map: &uq },
            Inclusion { source: &k2, map: &id2 },
        )
        .unwrap();
        assert!(res.is_none());
        let not_unital = Matrix::zeros(&f, 2, 1);
        assert!(matches!(
            solve_bimodule_retraction(
                &k2,
                Inclusion {
                    source: &kq,
                    map: &not_unital
                },
                Inclusion { source: &kq, map: &uq }
            ),
            Err(WitnessError::NotAlgebraMap(_))
        ));
    }

    #[test]
    fn theta_for_trivial_coalgebra_is_the_unit() {
        let a = sweedler_h4(&q()).algebra;
        let e = crate::entwine::Entwining::flip(a.clone(), Coalgebra::ground(&q()));
        let t = solve_theta(&e).unwrap();
        assert_eq!(t.matrix(), &a.unit);
    }

    #[test]
    fn theta_for_yd_c2_is_diagonal() {
        let h = kc(&q(), 2);
        let t = solve_theta(&yetter_drinfeld(&h)).unwrap();
        assert_eq!(t.matrix(), &Matrix::from_ints(&q(), &[&[1, 0, 0, 1], &[0, 0, 0, 0]]));
        let g = solve_quantum_integral(&h).unwrap();
        assert!(verify_quantum_integral(&h, g.matrix()));
        assert_eq!(uncurry(g.matrix(), 2), *t.matrix());
        // γ(h)(g) = δ_{g,h} 1
        for hh in 0..2 {
            for gg in 0..2 {
                let expected = if gg == hh { 1 } else { 0 };
                assert_eq!(g.matrix().get(gg, hh), &q().from_int(expected));
            }
        }
    }

    #[test]
    fn relative_hopf_gf2_has_theta_and_total_integral() {
        let h = kc(&gf(2), 2);
        let d = DoiKoppinenDatum::regular_relative_hopf(h.clone());
        let e = d.entwining();
        let t = solve_theta(&e).unwrap();
        let phi = solve_total_integral(&h, &d.algebra, &d.coaction).unwrap();
        assert!(verify_total_integral(&h, &d.algebra, &d.coaction, phi.matrix()));
        assert!(verify_total_integral(
            &h,
            &d.algebra,
            &d.coaction,
            &h.algebra.identity()
        ));
        let th = transport(&phi, Direction::TotalIntegralToTheta, &h).unwrap();
        assert!(verify_theta(&e, th.matrix()));
        assert!(verify_theta(&e, t.matrix()));
        let back = transport(&th, Direction::ThetaToTotalIntegral, &h).unwrap();
        assert_eq!(back.matrix(), phi.matrix());
    }

    #[test]
    fn total_integral_of_trivial_comodule_algebra_is_dual_integral() {
        let h = kc(&q(), 2);
        let d = DoiKoppinenDatum::trivial_relative_hopf(h.clone());
        let phi = solve_total_integral(&h, &d.algebra, &d.coaction).unwrap();
        assert_eq!(phi.matrix(), solve_dual_normalized_integral(&h).unwrap().matrix());
        let h4 = sweedler_h4(&q());
        let d = DoiKoppinenDatum::trivial_relative_hopf(h4.clone());
        assert!(solve_total_integral(&h4, &d.algebra, &d.coaction).is_none());
    }

    #[test]
    fn cocasimir_cases() {
        let f = q();
        let a = kc(&f, 2).algebra;
        let e = DoiKoppinenDatum::modules(a.clone()).entwining();
        let c = solve_cocasimir(&e).unwrap();
        assert_eq!(c.matrix(), solve_separability_idempotent(&a).unwrap().matrix());
        let e2 = DoiKoppinenDatum::modules(kc(&gf(2), 2).algebra).entwining();
        assert!(solve_cocasimir(&e2).is_none());
        let ec = DoiKoppinenDatum::comodules(kc(&f, 2).coalgebra).entwining();
        assert_eq!(solve_cocasimir(&ec).unwrap().matrix(), &ec.coalgebra.counit);
    }

    #[test]
    fn augmented_cointegral_cases() {
        let h = kc(&q(), 2);
        let d = DoiKoppinenDatum::trivial_lc(h.clone());
        let psi = solve_augmented_cointegral(&h, &d.coalgebra, &d.action).unwrap();
        assert_eq!(psi.matrix(), &col(&q(), &[(1, 2), (1, 2)]));
        let d = DoiKoppinenDatum::regular_lc(h.clone());
        let psi = solve_augmented_cointegral(&h, &d.coalgebra, &d.action).unwrap();
        assert!(verify_augmented_cointegral(&h, &d.coalgebra, &d.action, psi.matrix()));
        assert!(verify_augmented_cointegral(
            &h,
            &d.coalgebra,
            &d.action,
            &h.algebra.identity()
        ));
        let h2 = kc(&gf(2), 2);
        let d = DoiKoppinenDatum::trivial_lc(h2.clone());
        assert!(solve_augmented_cointegral(&h2, &d.coalgebra, &d.action).is_none());
    }

    #[test]
    fn cocasimir_transport_to_cointegral() {
        let h = kc(&q(), 2);
        let d = DoiKoppinenDatum::regular_lc(h.clone());
        let e = solve_cocasimir(&d.entwining()).unwrap();
        let psi = transport(&e, Direction::CocasimirToCointegral, &h).unwrap();
        assert!(verify_augmented_cointegral(&h, &d.coalgebra, &d.action, psi.matrix()));
    }

    #[test]
    fn frobenius_ring_of_sqrt2() {
        let f = q();
        let ext = Field::simple_extension(&f, vec![f.from_int(-2), f.zero(), f.one()]).unwrap();
        let s = extension_algebra(&ext).unwrap();
        let mu = Matrix::from_ints(&f, &[&[1, 0]]);
        let w = solve_frobenius_casimir(&s, &mu).unwrap();
        let fc = &w.data[1];
        assert!(verify_frobenius_ring(&s, &mu, fc).all_pass());
        // f = 1⊗1 + ½ α⊗α
        assert_eq!(fc, &col(&f, &[(1, 1), (0, 1), (0, 1), (1, 2)]));
        let x = solve_x(&s, &mu, fc, &s.unit).unwrap().unwrap();
        assert_eq!(x.matrix(), &s.unit);
        let alpha = solve_alpha(&s, &mu, fc, &s.identity()).unwrap().unwrap();
        assert!(verify_alpha(&s, fc, &s.identity(), alpha.matrix()).unwrap());
        let bad = Matrix::zeros(&f, 4, 1);
        assert!(matches!(
            solve_x(&s, &mu, &bad, &s.unit),
            Err(WitnessError::NotAFrobeniusSystem(_))
        ));
    }

    #[test]
    fn alpha_agrees_with_separability_for_group_algebras() {
        for (f, expect) in [(q(), true), (gf(2), false)] {
            let s = kc(&f, 2).algebra;
            let mu = Matrix::from_ints(&f, &[&[1, 0]]);
            let fc = solve_frobenius_casimir(&s, &mu).unwrap().data[1].clone();
            let alpha = solve_alpha(&s, &mu, &fc, &s.identity()).unwrap();
            assert_eq!(alpha.is_some(), expect);
            assert_eq!(solve_separability_idempotent(&s).is_some(), expect);
        }
    }

    #[test]
    fn frobenius_entwining_trivial_and_yd() {
        let f = q();
        let a = kc(&f, 2).algebra;
        let e = crate::entwine::Entwining::flip(a.clone(), Coalgebra::ground(&f));
        let (theta, z) = (a.unit.clone(), a.unit.clone());
        assert!(verify_frobenius_entwining(&e, &theta, &z).all_pass());
        let beta = solve_beta_hsep(&e, &theta, &z).unwrap().unwrap();
        assert!(verify_beta_hsep(&e, &theta, beta.matrix()));

        let h = kc(&f, 2);
        let yd = yetter_drinfeld(&h);
        let theta = solve_theta(&yd).unwrap().data.remove(0);
        let w = solve_fg_z(&yd, &theta).unwrap();
        assert!(verify_frobenius_entwining(&yd, &w.data[0], &w.data[1]).all_pass());
        let beta = solve_beta_hsep(&yd, &w.data[0], &w.data[1]).unwrap().unwrap();
        assert!(verify_beta_hsep(&yd, &theta, beta.matrix()));
        let beta = solve_beta_sep(&yd, &w.data[0], &w.data[1]).unwrap().unwrap();
        assert!(verify_beta_sep(&yd, &theta, beta.matrix()));
        let again = solve_fg_theta(&yd, &w.data[1]).unwrap();
        assert!(verify_frobenius_entwining(&yd, &again.data[0], &again.data[1]).all_pass());
    }

    #[test]
    fn noncentral_z_fails_az_za() {
        let f = q();
        let h = sweedler_h4(&f);
        let e = DoiKoppinenDatum::modules(h.algebra.clone()).entwining();
        let theta = h.algebra.unit.clone();
        let z = Matrix::column(&f, h.algebra.basis(1));
        let r = verify_frobenius_entwining(&e, &theta, &z);
        assert_eq!(r.first_failure().unwrap().axiom, "az = za");
    }

    #[test]
    fn hk_system_for_trivial_algebra_reduces_to_coalgebra() {
        let f = q();
        let h = kc(&f, 2);
        let e = DoiKoppinenDatum::comodules(h.coalgebra.clone()).entwining();
        let cas = e.coalgebra.counit.clone();
        let w = solve_hk_vartheta(&e, &cas).unwrap();
        assert!(verify_frobenius_hk(&e, &w.data[0], &cas).all_pass());
        let beta = solve_beta_fsep(&e, &w.data[0], &cas).unwrap().unwrap();
        assert!(verify_beta_fsep(&e, &cas, beta.matrix()));
    }

    #[test]
    fn fsep_degenerates_to_classical_separability_when_c_is_trivial() {
        for (f, expect) in [(q(), true), (gf(2), false)] {
            let a = kc(&f, 2).algebra;
            let e = DoiKoppinenDatum::modules(a.clone()).entwining();
            let cas = solve_cocasimir(&e);
            assert_eq!(cas.is_some(), expect);
            if let Some(cas) = cas {
                let vt = solve_hk_vartheta(&e, cas.matrix()).unwrap();
                let beta = solve_beta_fsep(&e, &vt.data[0], cas.matrix()).unwrap().unwrap();
                assert!(verify_beta_fsep(&e, cas.matrix(), beta.matrix()));
            }
        }
    }

    #[test]
    fn quantum_integral_entry_points_agree_on_h4_gf3() {
        let h = sweedler_h4(&gf(3));
        let yd = yetter_drinfeld(&h);
        assert_eq!(solve_quantum_integral(&h).is_some(), solve_theta(&yd).is_some());
        assert_eq!(
            solve_quantum_integral(&trivial_hopf(&q())).unwrap().matrix(),
            &Matrix::identity(&q(), 1)
        );
    }

    #[test]
    fn solvers_are_deterministic() {
        let h = group_algebra(&q(), &crate::strucalg::s3_table()).unwrap();
        let a = solve_separability_idempotent(&h.algebra).unwrap();
        let b = solve_separability_idempotent(&h.algebra).unwrap();
        assert_eq!(a, b);
        assert!(verify_separability_idempotent(&h.algebra, a.matrix()));
    }
}
