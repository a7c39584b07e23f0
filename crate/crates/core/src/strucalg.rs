//! Algebras, coalgebras, Hopf algebras, modules and comodules given by
//! structure constants.
//!
//! All structure maps are stored as matrices in the global flattening:
//! multiplication is `n × n²`, comultiplication `n² × n`, a right action is a
//! list of `dim M × dim M` matrices `R(e_j)` with `m·e_j = R(e_j) m`, and a right
//! coaction is a `(dim M · dim C) × dim M` matrix.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::field::{Field, FieldError, Scalar};
use crate::linalg::{matrix_kernel, solve_matrix, swap, unflatten_index, LinalgError, Matrix};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StrucError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("invalid group table: {0}")]
    InvalidGroupTable(String),
    #[error("structure mismatch: {0}")]
    StructureMismatch(String),
    #[error("field error: {0}")]
    Field(#[from] FieldError),
    #[error("linear algebra error: {0}")]
    Linalg(#[from] LinalgError),
}

pub(crate) fn expect_shape(m: &Matrix, shape: (usize, usize), what: &str) -> Result<(), StrucError> {
    if m.shape() == shape {
        Ok(())
    } else {
        Err(StrucError::DimensionMismatch(format!(
            "{what}: expected {}x{}, got {}x{}",
            shape.0,
            shape.1,
            m.rows(),
            m.cols()
        )))
    }
}

/// One axiom outcome. `witness` is an offending basis tuple on failure.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub axiom: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<usize>>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub checks: Vec<Check>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl Report {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.pass)
    }

    /// Records `lhs = rhs`, blaming the first differing input basis tuple.
    pub fn equation(&mut self, axiom: &str, lhs: &Matrix, rhs: &Matrix, input_dims: &[usize]) {
        let witness = lhs.first_differing_column(rhs).map(|c| unflatten_index(c, input_dims));
        self.checks.push(Check {
            axiom: axiom.to_string(),
            pass: witness.is_none(),
            witness,
        });
    }

    pub fn flag(&mut self, axiom: &str, pass: bool) {
        self.checks.push(Check {
            axiom: axiom.to_string(),
            pass,
            witness: None,
        });
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
        self.notes.extend(other.notes);
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Algebra {
    pub field: Field,
    pub dim: usize,
    /// `n × n²`
    pub mult: Matrix,
    /// `n × 1`
    pub unit: Matrix,
}

impl Algebra {
    pub fn new(mult: Matrix, unit: Matrix) -> Result<Self, StrucError> {
        let n = unit.rows();
        expect_shape(&unit, (n, 1), "unit")?;
        expect_shape(&mult, (n, n * n), "multiplication")?;
        Ok(Algebra {
            field: mult.field().clone(),
            dim: n,
            mult,
            unit,
        })
    }

    pub fn identity(&self) -> Matrix {
        Matrix::identity(&self.field, self.dim)
    }

    pub fn basis(&self, i: usize) -> Vec<Scalar> {
        crate::linalg::unit_vector(&self.field, self.dim, i)
    }

    pub fn product(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        let ab = Matrix::column(&self.field, a.to_vec()).kron(&Matrix::column(&self.field, b.to_vec()));
        self.mult.mul(&ab).col(0)
    }

    /// `x ↦ a·x`
    pub fn left_mult(&self, a: &[Scalar]) -> Matrix {
        let a = Matrix::column(&self.field, a.to_vec());
        self.mult.mul(&a.kron(&self.identity()))
    }

    /// `x ↦ x·a`
    pub fn right_mult(&self, a: &[Scalar]) -> Matrix {
        let a = Matrix::column(&self.field, a.to_vec());
        self.mult.mul(&self.identity().kron(&a))
    }

    pub fn unit_vec(&self) -> Vec<Scalar> {
        self.unit.col(0)
    }

    pub fn check(&self) -> Report {
        let n = self.dim;
        let id = self.identity();
        let mut r = Report::default();
        r.equation(
            "associativity",
            &self.mult.mul(&self.mult.kron(&id)),
            &self.mult.mul(&id.kron(&self.mult)),
            &[n, n, n],
        );
        r.equation("left unit", &self.mult.mul(&self.unit.kron(&id)), &id, &[n]);
        r.equation("right unit", &self.mult.mul(&id.kron(&self.unit)), &id, &[n]);
        r
    }

    /// The 1-dimensional algebra `k`.
    pub fn ground(field: &Field) -> Self {
        Algebra::new(Matrix::identity(field, 1), Matrix::identity(field, 1)).expect("shapes")
    }

    /// `A ⊗ B` with componentwise multiplication.
    pub fn tensor(&self, other: &Algebra) -> Algebra {
        let (a, b) = (self.dim, other.dim);
        let mid = Matrix::identity(&self.field, a)
            .kron(&swap(&self.field, b, a))
            .kron(&Matrix::identity(&self.field, b));
        Algebra::new(self.mult.kron(&other.mult).mul(&mid), self.unit.kron(&other.unit)).expect("shapes")
    }

    pub fn regular_module(&self) -> RightModule {
        RightModule::new(self, (0..self.dim).map(|j| self.right_mult(&self.basis(j))).collect()).expect("shapes")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coalgebra {
    pub field: Field,
    pub dim: usize,
    /// `n² × n`
    pub comult: Matrix,
    /// `1 × n`
    pub counit: Matrix,
}

impl Coalgebra {
    pub fn new(comult: Matrix, counit: Matrix) -> Result<Self, StrucError> {
        let n = counit.cols();
        expect_shape(&counit, (1, n), "counit")?;
        expect_shape(&comult, (n * n, n), "comultiplication")?;
        Ok(Coalgebra {
            field: comult.field().clone(),
            dim: n,
            comult,
            counit,
        })
    }

    pub fn identity(&self) -> Matrix {
        Matrix::identity(&self.field, self.dim)
    }

    pub fn check(&self) -> Report {
        let n = self.dim;
        let id = self.identity();
        let mut r = Report::default();
        r.equation(
            "coassociativity",
            &self.comult.kron(&id).mul(&self.comult),
            &id.kron(&self.comult).mul(&self.comult),
            &[n],
        );
        r.equation("left counit", &self.counit.kron(&id).mul(&self.comult), &id, &[n]);
        r.equation("right counit", &id.kron(&self.counit).mul(&self.comult), &id, &[n]);
        r
    }

    pub fn ground(field: &Field) -> Self {
        Coalgebra::new(Matrix::identity(field, 1), Matrix::identity(field, 1)).expect("shapes")
    }

    /// `Δ² = (Δ⊗I)Δ : C → C⊗C⊗C`
    pub fn comult2(&self) -> Matrix {
        self.comult.kron(&self.identity()).mul(&self.comult)
    }

    pub fn regular_comodule(&self) -> RightComodule {
        RightComodule::new(self, self.comult.clone()).expect("shapes")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hopf {
    pub algebra: Algebra,
    pub coalgebra: Coalgebra,
    /// `n × n`
    pub antipode: Matrix,
    /// Informational flags such as degenerate signs in characteristic 2.
    pub notes: Vec<String>,
}

impl Hopf {
    pub fn new(algebra: Algebra, coalgebra: Coalgebra, antipode: Matrix) -> Result<Self, StrucError> {
        let n = algebra.dim;
        if coalgebra.dim != n || algebra.field != coalgebra.field {
            return Err(StrucError::StructureMismatch(
                "algebra and coalgebra live on different spaces".into(),
            ));
        }
        expect_shape(&antipode, (n, n), "antipode")?;
        Ok(Hopf {
            algebra,
            coalgebra,
            antipode,
            notes: Vec::new(),
        })
    }

    pub fn field(&self) -> &Field {
        &self.algebra.field
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim
    }

    pub fn check_bialgebra(&self) -> Report {
        let n = self.dim();
        let f = self.field();
        let (m, u) = (&self.algebra.mult, &self.algebra.unit);
        let (d, e) = (&self.coalgebra.comult, &self.coalgebra.counit);
        let id = Matrix::identity(f, n);
        let mid = id.kron(&swap(f, n, n)).kron(&id);
        let mut r = self.algebra.check();
        r.extend(self.coalgebra.check());
        r.equation(
            "comultiplication is multiplicative",
            &d.mul(m),
            &Matrix::chain(&[&m.kron(m), &mid, &d.kron(d)]),
            &[n, n],
        );
        r.equation("comultiplication is unital", &d.mul(u), &u.kron(u), &[1]);
        r.equation("counit is multiplicative", &e.mul(m), &e.kron(e), &[n, n]);
        r.equation("counit is unital", &e.mul(u), &Matrix::identity(f, 1), &[1]);
        r
    }

    pub fn check(&self) -> Report {
        let n = self.dim();
        let id = Matrix::identity(self.field(), n);
        let (m, d) = (&self.algebra.mult, &self.coalgebra.comult);
        let ue = self.algebra.unit.mul(&self.coalgebra.counit);
        let mut r = self.check_bialgebra();
        r.equation(
            "left antipode",
            &Matrix::chain(&[m, &self.antipode.kron(&id), d]),
            &ue,
            &[n],
        );
        r.equation(
            "right antipode",
            &Matrix::chain(&[m, &id.kron(&self.antipode), d]),
            &ue,
            &[n],
        );
        r.notes.extend(self.notes.iter().cloned());
        r
    }

    pub fn counit_vec(&self) -> Vec<Scalar> {
        self.coalgebra.counit.row_vec(0)
    }
}

/// A right module over an algebra `A`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RightModule {
    pub dim: usize,
    /// `action[j] = R(e_j)`, so `m·e_j = R(e_j) m`.
    pub action: Vec<Matrix>,
}

impl RightModule {
    pub fn new(algebra: &Algebra, action: Vec<Matrix>) -> Result<Self, StrucError> {
        if action.len() != algebra.dim {
            return Err(StrucError::DimensionMismatch(format!(
                "{} action matrices for an algebra of dimension {}",
                action.len(),
                algebra.dim
            )));
        }
        let d = action.first().map_or(0, Matrix::rows);
        for a in &action {
            expect_shape(a, (d, d), "action matrix")?;
        }
        Ok(RightModule { dim: d, action })
    }

    /// `R(a)` for an arbitrary element `a`.
    pub fn act_by(&self, field: &Field, a: &[Scalar]) -> Matrix {
        let mut out = Matrix::zeros(field, self.dim, self.dim);
        for (c, r) in a.iter().zip(&self.action) {
            if !field.is_zero(c) {
                out = out.add(&r.scale(c));
            }
        }
        out
    }

    /// The action as one map `M ⊗ A → M`.
    pub fn action_map(&self, field: &Field) -> Matrix {
        let n = self.action.len();
        Matrix::from_fn(field, self.dim, self.dim * n, |k, c| {
            self.action[c % n].get(k, c / n).clone()
        })
    }

    /// Inverse of [`RightModule::action_map`].
    pub fn from_action_map(algebra: &Algebra, act: &Matrix) -> Result<Self, StrucError> {
        let n = algebra.dim;
        let d = act.rows();
        expect_shape(act, (d, d * n), "action map")?;
        let action = (0..n)
            .map(|j| Matrix::from_fn(&algebra.field, d, d, |k, i| act.get(k, i * n + j).clone()))
            .collect();
        RightModule::new(algebra, action)
    }

    pub fn check(&self, algebra: &Algebra) -> Report {
        let f = &algebra.field;
        let n = algebra.dim;
        let mut r = Report::default();
        let mut assoc = None;
        'outer: for i in 0..n {
            for j in 0..n {
                let prod = algebra.product(&algebra.basis(i), &algebra.basis(j));
                if self.act_by(f, &prod) != self.action[j].mul(&self.action[i]) {
                    assoc = Some(vec![i, j]);
                    break 'outer;
                }
            }
        }
        r.checks.push(Check {
            axiom: "action is associative".into(),
            pass: assoc.is_none(),
            witness: assoc,
        });
        r.equation(
            "unit acts trivially",
            &self.act_by(f, &algebra.unit_vec()),
            &Matrix::identity(f, self.dim),
            &[self.dim],
        );
        r
    }

    /// Transports the structure along an isomorphism `P : M → M'`.
    pub fn conjugate(&self, p: &Matrix, p_inv: &Matrix) -> RightModule {
        RightModule {
            dim: self.dim,
            action: self.action.iter().map(|a| Matrix::chain(&[p, a, p_inv])).collect(),
        }
    }

    pub fn direct_sum(&self, other: &RightModule, field: &Field) -> RightModule {
        let (a, b) = (self.dim, other.dim);
        let action = self
            .action
            .iter()
            .zip(&other.action)
            .map(|(x, y)| {
                Matrix::from_fn(field, a + b, a + b, |i, j| match (i < a, j < a) {
                    (true, true) => x.get(i, j).clone(),
                    (false, false) => y.get(i - a, j - a).clone(),
                    _ => field.zero(),
                })
            })
            .collect();
        RightModule { dim: a + b, action }
    }
}

/// A right comodule over a coalgebra `C`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RightComodule {
    pub dim: usize,
    /// `(dim M · dim C) × dim M`
    pub rho: Matrix,
}

impl RightComodule {
    pub fn new(coalgebra: &Coalgebra, rho: Matrix) -> Result<Self, StrucError> {
        let d = rho.cols();
        expect_shape(&rho, (d * coalgebra.dim, d), "coaction")?;
        Ok(RightComodule { dim: d, rho })
    }

    pub fn check(&self, coalgebra: &Coalgebra) -> Report {
        let f = &coalgebra.field;
        let im = Matrix::identity(f, self.dim);
        let ic = coalgebra.identity();
        let mut r = Report::default();
        r.equation(
            "coaction is coassociative",
            &self.rho.kron(&ic).mul(&self.rho),
            &im.kron(&coalgebra.comult).mul(&self.rho),
            &[self.dim],
        );
        r.equation(
            "coaction is counital",
            &im.kron(&coalgebra.counit).mul(&self.rho),
            &im,
            &[self.dim],
        );
        r
    }

    /// The trivial comodule `k` with `ρ(1) = 1 ⊗ g` for a group-like `g`.
    pub fn trivial(field: &Field, grouplike: &[Scalar]) -> Self {
        RightComodule {
            dim: 1,
            rho: Matrix::column(field, grouplike.to_vec()),
        }
    }

    pub fn conjugate(&self, p: &Matrix, p_inv: &Matrix, dim_c: usize) -> RightComodule {
        let ic = Matrix::identity(p.field(), dim_c);
        RightComodule {
            dim: self.dim,
            rho: Matrix::chain(&[&p.kron(&ic), &self.rho, p_inv]),
        }
    }
}

/// Basis of `{f : M → N | f R_M(e_j) = R_N(e_j) f}`.
pub fn module_hom_space(field: &Field, m: &RightModule, n: &RightModule) -> Result<Vec<Matrix>, StrucError> {
    if m.action.len() != n.action.len() {
        return Err(StrucError::StructureMismatch("modules over different algebras".into()));
    }
    Ok(matrix_kernel(field, n.dim, m.dim, |f| module_hom_residual(f, m, n)))
}

pub(crate) fn module_hom_residual(f: &Matrix, m: &RightModule, n: &RightModule) -> Vec<Matrix> {
    m.action
        .iter()
        .zip(&n.action)
        .map(|(rm, rn)| f.mul(rm).sub(&rn.mul(f)))
        .collect()
}

pub(crate) fn comodule_hom_residual(f: &Matrix, m: &RightComodule, n: &RightComodule, dim_c: usize) -> Matrix {
    let ic = Matrix::identity(f.field(), dim_c);
    f.kron(&ic).mul(&m.rho).sub(&n.rho.mul(f))
}

/// Basis of `{f : M → N | (f⊗I)ρ_M = ρ_N f}`.
pub fn comodule_hom_space(
    coalgebra: &Coalgebra,
    m: &RightComodule,
    n: &RightComodule,
) -> Result<Vec<Matrix>, StrucError> {
    let c = coalgebra.dim;
    if m.rho.rows() != m.dim * c || n.rho.rows() != n.dim * c {
        return Err(StrucError::StructureMismatch(
            "comodules over different coalgebras".into(),
        ));
    }
    Ok(matrix_kernel(&coalgebra.field, n.dim, m.dim, |f| {
        vec![comodule_hom_residual(f, m, n, c)]
    }))
}

/// A colinear `λ : M ⊗ C → M` with `λ ρ_M = I`, if one exists.
pub fn coaction_retraction(coalgebra: &Coalgebra, m: &RightComodule) -> Option<Matrix> {
    let f = &coalgebra.field;
    let c = coalgebra.dim;
    let im = Matrix::identity(f, m.dim);
    let cofree = RightComodule {
        dim: m.dim * c,
        rho: im.kron(&coalgebra.comult),
    };
    solve_matrix(f, m.dim, m.dim * c, |lam| {
        vec![comodule_hom_residual(lam, &cofree, m, c), lam.mul(&m.rho).sub(&im)]
    })
}

/// Verifies a candidate coaction retraction.
pub fn check_coaction_retraction(coalgebra: &Coalgebra, m: &RightComodule, lam: &Matrix) -> bool {
    let c = coalgebra.dim;
    if lam.shape() != (m.dim, m.dim * c) {
        return false;
    }
    let im = Matrix::identity(&coalgebra.field, m.dim);
    let cofree = RightComodule {
        dim: m.dim * c,
        rho: im.kron(&coalgebra.comult),
    };
    comodule_hom_residual(lam, &cofree, m, c).is_zero() && lam.mul(&m.rho) == im
}

// ---------------------------------------------------------------------------
// Builders
// ---------------------------------------------------------------------------

/// Group algebra `kG` from a multiplication table `table[i][j] = index of g_i g_j`.
pub fn group_algebra(field: &Field, table: &[Vec<usize>]) -> Result<Hopf, StrucError> {
    let n = table.len();
    let bad = |msg: String| Err(StrucError::InvalidGroupTable(msg));
    if n == 0 {
        return bad("empty table".into());
    }
    for (i, row) in table.iter().enumerate() {
        if row.len() != n {
            return bad(format!("row {i} has length {}", row.len()));
        }
        if let Some(&x) = row.iter().find(|&&x| x >= n) {
            return bad(format!("entry {x} in row {i} is out of range"));
        }
    }
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if table[table[i][j]][k] != table[i][table[j][k]] {
                    return bad(format!("not associative at ({i},{j},{k})"));
                }
            }
        }
    }
    let Some(e) = (0..n).find(|&e| (0..n).all(|i| table[e][i] == i && table[i][e] == i)) else {
        return bad("no identity element".into());
    };
    let mut inverse = vec![0; n];
    for (i, slot) in inverse.iter_mut().enumerate() {
        match (0..n).find(|&j| table[i][j] == e && table[j][i] == e) {
            Some(j) => *slot = j,
            None => return bad(format!("element {i} has no inverse")),
        }
    }
    let one = field.one();
    let zero = field.zero();
    let mult = Matrix::from_fn(field, n, n * n, |k, c| {
        if table[c / n][c % n] == k {
            one.clone()
        } else {
            zero.clone()
        }
    });
    let unit = Matrix::column(field, crate::linalg::unit_vector(field, n, e));
    let comult = Matrix::from_fn(
        field,
        n * n,
        n,
        |r, i| {
            if r == i * n + i {
                one.clone()
            } else {
                zero.clone()
            }
        },
    );
    let counit = Matrix::row(field, vec![one.clone(); n]);
    let antipode = Matrix::from_fn(
        field,
        n,
        n,
        |k, i| {
            if inverse[i] == k {
                one.clone()
            } else {
                zero.clone()
            }
        },
    );
    Hopf::new(Algebra::new(mult, unit)?, Coalgebra::new(comult, counit)?, antipode)
}

pub fn cyclic_table(n: usize) -> Vec<Vec<usize>> {
    (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect()
}

/// `S₃` with elements `e, r, r², s, sr, sr²` (indices 0–5), `r³ = s² = 1`, `rs = sr²`.
pub fn s3_table() -> Vec<Vec<usize>> {
    // Element (a, b) = s^a r^b has index 3a + b.
    // s^a r^b · s^c r^d = s^(a+c) r^((-1)^c b + d)
    let mut t = vec![vec![0; 6]; 6];
    for (x, row) in t.iter_mut().enumerate() {
        for (y, slot) in row.iter_mut().enumerate() {
            let (a, b) = (x / 3, x % 3);
            let (c, d) = (y / 3, y % 3);
            let b = if c == 1 { (3 - b) % 3 } else { b };
            *slot = 3 * ((a + c) % 2) + (b + d) % 3;
        }
    }
    t
}

/// The Sweedler Hopf algebra on basis `{1, g, x, gx}`.
pub fn sweedler_h4(field: &Field) -> Hopf {
    let n = 4;
    let z = field.zero();
    let (one, m_one) = (field.one(), field.from_int(-1));
    // products e_i e_j as (coefficient, index); indices: 1=0, g=1, x=2, gx=3
    let prod = |i: usize, j: usize| -> Option<(i64, usize)> {
        match (i, j) {
            (0, j) => Some((1, j)),
            (i, 0) => Some((1, i)),
            (1, 1) => Some((1, 0)),
            (1, 2) => Some((1, 3)),
            (1, 3) => Some((1, 2)),
            (2, 1) => Some((-1, 3)),
            (3, 1) => Some((-1, 2)),
            _ => None,
        }
    };
    let mut mult = Matrix::zeros(field, n, n * n);
    for i in 0..n {
        for j in 0..n {
            if let Some((c, k)) = prod(i, j) {
                mult.set(k, i * n + j, field.from_int(c));
            }
        }
    }
    let unit = Matrix::column(field, crate::linalg::unit_vector(field, n, 0));
    let mut comult = Matrix::zeros(field, n * n, n);
    for (i, terms) in [vec![(0, 0)], vec![(1, 1)], vec![(2, 0), (1, 2)], vec![(3, 1), (0, 3)]]
        .iter()
        .enumerate()
    {
        for &(a, b) in terms {
            comult.set(a * n + b, i, one.clone());
        }
    }
    let counit = Matrix::row(field, vec![one.clone(), one.clone(), z.clone(), z.clone()]);
    let mut antipode = Matrix::zeros(field, n, n);
    antipode.set(0, 0, one.clone());
    antipode.set(1, 1, one.clone());
    antipode.set(3, 2, m_one);
    antipode.set(2, 3, one);
    let mut h = Hopf::new(
        Algebra::new(mult, unit).expect("shapes"),
        Coalgebra::new(comult, counit).expect("shapes"),
        antipode,
    )
    .expect("shapes");
    if field.characteristic() == 2 {
        h.notes
            .push("degenerate signs: characteristic 2 identifies xg and gx".into());
    }
    h
}

/// The dual Hopf algebra: structure tensors transposed.
pub fn dual_of(h: &Hopf) -> Hopf {
    let algebra = Algebra::new(h.coalgebra.comult.transpose(), h.coalgebra.counit.transpose()).expect("shapes");
    let coalgebra = Coalgebra::new(h.algebra.mult.transpose(), h.algebra.unit.transpose()).expect("shapes");
    let mut d = Hopf::new(algebra, coalgebra, h.antipode.transpose()).expect("shapes");
    d.notes = h.notes.clone();
    d
}

/// The trivial Hopf algebra `k`.
pub fn trivial_hopf(field: &Field) -> Hopf {
    Hopf::new(
        Algebra::ground(field),
        Coalgebra::ground(field),
        Matrix::identity(field, 1),
    )
    .expect("shapes")
}

/// A simple extension `K = k[X]/(p)` as a `k`-algebra on the power basis.
pub fn extension_algebra(ext: &Field) -> Result<Algebra, StrucError> {
    let base = ext
        .base()
        .ok_or_else(|| StrucError::StructureMismatch(format!("{} is not a simple extension", ext.name())))?
        .clone();
    let n = ext.extension_degree();
    let coords = |s: &Scalar| -> Vec<Scalar> {
        match s {
            Scalar::Ext(v) => v.clone(),
            _ => unreachable!("extension scalar"),
        }
    };
    let basis: Vec<Scalar> = (0..n)
        .map(|i| Scalar::Ext(crate::linalg::unit_vector(&base, n, i)))
        .collect();
    let mut mult = Matrix::zeros(&base, n, n * n);
    for i in 0..n {
        for j in 0..n {
            for (k, c) in coords(&ext.mul(&basis[i], &basis[j])).into_iter().enumerate() {
                mult.set(k, i * n + j, c);
            }
        }
    }
    let unit = Matrix::column(&base, coords(&ext.one()));
    Algebra::new(mult, unit)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::rationals()
    }

    #[test]
    fn group_algebra_c2_passes() {
        let h = group_algebra(&q(), &cyclic_table(2)).unwrap();
        let r = h.check();
        assert!(r.all_pass(), "{r:?}");
        assert_eq!(r.checks.len(), 12);
    }

    #[test]
    fn zero_unit_fails_at_basis_zero() {
        let mut h = group_algebra(&q(), &cyclic_table(2)).unwrap();
        h.algebra.unit = Matrix::zeros(&q(), 2, 1);
        let r = h.algebra.check();
        let fail = r.first_failure().unwrap();
        assert_eq!(fail.axiom, "left unit");
        assert_eq!(fail.witness, Some(vec![0]));
    }

    #[test]
    fn h4_is_hopf_over_q_gf3_gf2() {
        for f in [q(), Field::prime(3).unwrap(), Field::prime(2).unwrap()] {
            let h = sweedler_h4(&f);
            assert!(h.check().all_pass());
            assert_eq!(h.notes.is_empty(), f.characteristic() != 2);
        }
    }

    #[test]
    fn h4_delta_x_has_two_terms() {
        let h = sweedler_h4(&q());
        let nonzero = h.coalgebra.comult.col(2).iter().filter(|c| !q().is_zero(c)).count();
        assert_eq!(nonzero, 2);
    }

    #[test]
    fn h4_products_by_hand() {
        let f = q();
        let h = sweedler_h4(&f);
        let a = &h.algebra;
        let e = |i| a.basis(i);
        let neg = |v: Vec<Scalar>| v.iter().map(|c| f.neg(c)).collect::<Vec<_>>();
        assert_eq!(a.product(&e(1), &e(1)), e(0));
        assert_eq!(a.product(&e(2), &e(1)), neg(e(3)));
        assert_eq!(a.product(&e(2), &e(2)), vec![f.zero(); 4]);
        assert_eq!(a.product(&e(3), &e(1)), neg(e(2)));
        assert_eq!(a.product(&e(1), &e(3)), e(2));
    }

    #[test]
    fn invalid_tables_rejected() {
        assert!(group_algebra(&q(), &[vec![0, 1], vec![1, 1]]).is_err());
        assert!(group_algebra(&q(), &[vec![0, 2], vec![1, 0]]).is_err());
        assert!(group_algebra(&q(), &[]).is_err());
    }

    #[test]
    fn s3_is_a_nonabelian_group() {
        let t = s3_table();
        let h = group_algebra(&q(), &t).unwrap();
        assert!(h.check().all_pass());
        assert_ne!(t[1][3], t[3][1]);
    }

    #[test]
    fn dual_is_involutive_for_c3() {
        let h = group_algebra(&q(), &cyclic_table(3)).unwrap();
        let d = dual_of(&h);
        assert!(d.check().all_pass());
        assert_eq!(dual_of(&d), h);
    }

    #[test]
    fn regular_module_homs_have_dimension_two() {
        let h = group_algebra(&q(), &cyclic_table(2)).unwrap();
        let m = h.algebra.regular_module();
        assert!(m.check(&h.algebra).all_pass());
        assert_eq!(module_hom_space(&q(), &m, &m).unwrap().len(), 2);
    }

    #[test]
    fn trivial_comodule_into_regular_has_dimension_one() {
        let f = q();
        let h = group_algebra(&f, &cyclic_table(2)).unwrap();
        let k = RightComodule::trivial(&f, &h.algebra.unit_vec());
        let c = h.coalgebra.regular_comodule();
        assert!(k.check(&h.coalgebra).all_pass());
        assert_eq!(comodule_hom_space(&h.coalgebra, &k, &c).unwrap().len(), 1);
    }

    #[test]
    fn identity_is_always_a_hom() {
        let f = q();
        let h = sweedler_h4(&f);
        let m = h.algebra.regular_module();
        let basis = module_hom_space(&f, &m, &m).unwrap();
        let id = Matrix::identity(&f, 4);
        let stacked = basis.iter().fold(Matrix::zeros(&f, 16, 0), |acc, b| {
            acc.hstack(&Matrix::column(&f, b.entries().to_vec()))
        });
        let with_id = stacked.hstack(&Matrix::column(&f, id.entries().to_vec()));
        assert_eq!(stacked.rank(), with_id.rank());
    }

    #[test]
    fn coaction_retractions() {
        let f = q();
        let h = group_algebra(&f, &cyclic_table(2)).unwrap();
        let c = h.coalgebra.regular_comodule();
        let lam = coaction_retraction(&h.coalgebra, &c).unwrap();
        assert!(check_coaction_retraction(&h.coalgebra, &c, &lam));
        let k = RightComodule::trivial(&f, &h.algebra.unit_vec());
        let lam = coaction_retraction(&h.coalgebra, &k).unwrap();
        assert!(check_coaction_retraction(&h.coalgebra, &k, &lam));
    }

    #[test]
    fn trivial_comodule_over_h4_has_no_retraction() {
        let f = q();
        let h = sweedler_h4(&f);
        let k = RightComodule::trivial(&f, &h.algebra.unit_vec());
        assert!(coaction_retraction(&h.coalgebra, &k).is_none());
    }

    #[test]
    fn sqrt2_as_q_algebra() {
        let f = q();
        let k = Field::simple_extension(&f, vec![f.from_int(-2), f.zero(), f.one()]).unwrap();
        let a = extension_algebra(&k).unwrap();
        assert!(a.check().all_pass());
        assert_eq!(a.product(&a.basis(1), &a.basis(1)), vec![f.from_int(2), f.zero()]);
    }
}
