//! Deformations of maps that are split or linear at a weaker level into
//! morphisms at a stronger level.

use thiserror::Error;

use crate::entwine::{EntwinedModule, Entwining};
use crate::field::{Field, Scalar};
use crate::linalg::{solve_matrix, Matrix};
use crate::poly;
use crate::strucalg::{extension_algebra, Algebra};
use crate::witness::verify_theta;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DeformError {
    #[error("minimal polynomial is inseparable")]
    InseparableMinimalPolynomial,
    #[error("minimal polynomial has zero constant term")]
    ReducibleMinimalPolynomial,
    #[error("{0} is not a simple extension")]
    NotAnExtension(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("theta does not satisfy its defining conditions")]
    InvalidTheta,
    #[error("p is not a retraction of i")]
    NotARetraction,
}

/// `K = k(α)` with `p(X) = Xⁿ − Σ cᵢXⁱ` separable.
#[derive(Debug, Clone)]
pub struct PrimitiveExtension {
    pub base: Field,
    pub ext: Field,
    /// `c₀ … c_{n−1}`
    pub c: Vec<Scalar>,
    /// The `k`-algebra `K` on the power basis.
    pub algebra: Algebra,
    /// `κᵢ = p′(α)⁻¹ α^{−i−1} Σ_{j≤i} c_j α^j` in power-basis coordinates.
    kappa: Vec<Vec<Scalar>>,
}

impl PrimitiveExtension {
    pub fn new(ext: &Field) -> Result<Self, DeformError> {
        let base = ext
            .base()
            .ok_or_else(|| DeformError::NotAnExtension(ext.name()))?
            .clone();
        let p = ext.modulus().expect("extension has a modulus").to_vec();
        let n = p.len() - 1;
        let dp = poly::derivative(&base, &p);
        if poly::gcd(&base, &p, &dp) != vec![base.one()] {
            return Err(DeformError::InseparableMinimalPolynomial);
        }
        if base.is_zero(&p[0]) {
            return Err(DeformError::ReducibleMinimalPolynomial);
        }
        let c: Vec<Scalar> = p[..n].iter().map(|a| base.neg(a)).collect();
        let alpha = ext.generator().expect("generator");
        let embed = |x: &Scalar| ext.embed(x);
        let dp_alpha = dp
            .iter()
            .rev()
            .fold(ext.zero(), |acc, coef| ext.add(&ext.mul(&acc, &alpha), &embed(coef)));
        let dp_inv = ext
            .inv(&dp_alpha)
            .map_err(|_| DeformError::InseparableMinimalPolynomial)?;
        let mut kappa = Vec::with_capacity(n);
        let mut partial = ext.zero();
        for (i, ci) in c.iter().enumerate() {
            let term = ext.mul(&embed(ci), &ext.pow(&alpha, i as i64).expect("α ≠ 0"));
            partial = ext.add(&partial, &term);
            let shift = ext.pow(&alpha, -(i as i64) - 1).expect("α ≠ 0");
            let k = ext.mul(&dp_inv, &ext.mul(&shift, &partial));
            kappa.push(coords(&k));
        }
        Ok(PrimitiveExtension {
            algebra: extension_algebra(ext).expect("simple extension"),
            base,
            ext: ext.clone(),
            c,
            kappa,
        })
    }

    pub fn degree(&self) -> usize {
        self.c.len()
    }

    /// Multiplication by a scalar of `K` on `K` itself, as a `k`-matrix.
    pub fn mult_matrix(&self, x: &Scalar) -> Matrix {
        self.algebra.left_mult(&coords(x))
    }

    /// `Kʳ` as a `k`-space of dimension `r·n`.
    pub fn free_space(&self, r: usize) -> KSpace {
        free_space_over(&self.ext, &self.algebra, r)
    }

    /// A `K`-matrix `Kᶜ → Kʳ` as a `k`-matrix between the free spaces.
    pub fn restrict(&self, m: &Matrix) -> Matrix {
        restrict_over(&self.algebra, m)
    }

    fn act(&self, space: &KSpace, x: &[Scalar]) -> Matrix {
        let d = space.dim();
        let mut out = Matrix::zeros(&self.base, d, d);
        let mut power = Matrix::identity(&self.base, d);
        for coef in x {
            if !self.base.is_zero(coef) {
                out = out.add(&power.scale(coef));
            }
            power = space.alpha.mul(&power);
        }
        out
    }

    /// `P(f) = Σᵢ κᵢ · f ∘ αⁱ`.
    pub fn deform(&self, m: &KSpace, n: &KSpace, f: &Matrix) -> Result<Matrix, DeformError> {
        if f.shape() != (n.dim(), m.dim()) {
            return Err(DeformError::DimensionMismatch(format!(
                "map is {}x{}, spaces have dimensions {} and {}",
                f.rows(),
                f.cols(),
                m.dim(),
                n.dim()
            )));
        }
        let mut out = Matrix::zeros(&self.base, n.dim(), m.dim());
        let mut f_alpha = f.clone();
        for k in &self.kappa {
            out = out.add(&self.act(n, k).mul(&f_alpha));
            f_alpha = f_alpha.mul(&m.alpha);
        }
        Ok(out)
    }
}

/// `Lʳ` as a `k`-space for any simple extension `L/k`, separable or not.
pub fn free_space(ext: &Field, r: usize) -> Result<KSpace, DeformError> {
    Ok(free_space_over(ext, &ext_algebra(ext)?, r))
}

/// An `L`-matrix as a `k`-matrix, for any simple extension `L/k`.
pub fn restrict_scalars(ext: &Field, m: &Matrix) -> Result<Matrix, DeformError> {
    Ok(restrict_over(&ext_algebra(ext)?, m))
}

/// An `L`-linear retraction of a monic `i : M → N`, by direct solve.
pub fn linear_retraction(m: &KSpace, n: &KSpace, i: &Matrix) -> Option<Matrix> {
    let f = m.alpha.field();
    let id = Matrix::identity(f, m.dim());
    solve_matrix(f, m.dim(), n.dim(), |r| {
        vec![r.mul(&n.alpha).sub(&m.alpha.mul(r)), r.mul(i).sub(&id)]
    })
}

fn ext_algebra(ext: &Field) -> Result<Algebra, DeformError> {
    extension_algebra(ext).map_err(|_| DeformError::NotAnExtension(ext.name()))
}

fn free_space_over(ext: &Field, algebra: &Algebra, r: usize) -> KSpace {
    let gen = ext.generator().expect("generator");
    KSpace {
        alpha: Matrix::identity(&algebra.field, r).kron(&algebra.left_mult(&coords(&gen))),
    }
}

fn restrict_over(algebra: &Algebra, m: &Matrix) -> Matrix {
    let n = algebra.dim;
    Matrix::from_fn(&algebra.field, m.rows() * n, m.cols() * n, |r, c| {
        algebra
            .left_mult(&coords(m.get(r / n, c / n)))
            .get(r % n, c % n)
            .clone()
    })
}

fn coords(x: &Scalar) -> Vec<Scalar> {
    match x {
        Scalar::Ext(v) => v.clone(),
        _ => unreachable!("extension scalar"),
    }
}

/// A `K`-vector space presented as a `k`-space with the action of `α`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KSpace {
    pub alpha: Matrix,
}

impl KSpace {
    pub fn dim(&self) -> usize {
        self.alpha.rows()
    }

    pub fn is_linear(&self, target: &KSpace, f: &Matrix) -> bool {
        f.mul(&self.alpha) == target.alpha.mul(f)
    }
}

/// `P(g) = act_N (I_N ⊗ θ)(ρ_N ⊗ I_C)(g ⊗ I_C) ρ_M`, colinear whenever `g` is `A`-linear.
pub fn deform_to_colinear(
    e: &Entwining,
    theta: &Matrix,
    m: &EntwinedModule,
    n: &EntwinedModule,
    g: &Matrix,
) -> Result<Matrix, DeformError> {
    if !verify_theta(e, theta) {
        return Err(DeformError::InvalidTheta);
    }
    if g.shape() != (n.dim, m.dim) {
        return Err(DeformError::DimensionMismatch(format!(
            "map is {}x{}, modules have dimensions {} and {}",
            g.rows(),
            g.cols(),
            m.dim,
            n.dim
        )));
    }
    let f = e.field();
    let ic = e.ic();
    Ok(Matrix::chain(&[
        &n.module.action_map(f),
        &Matrix::identity(f, n.dim).kron(theta),
        &n.comodule.rho.kron(&ic),
        &g.kron(&ic),
        &m.comodule.rho,
    ]))
}

/// A colinear retraction of `H(i)` from an `A`-linear retraction `p` of `F(i)`.
pub fn maschke_split(
    e: &Entwining,
    theta: &Matrix,
    m: &EntwinedModule,
    n: &EntwinedModule,
    i: &Matrix,
    p: &Matrix,
) -> Result<Matrix, DeformError> {
    if i.shape() != (n.dim, m.dim) || p.shape() != (m.dim, n.dim) {
        return Err(DeformError::DimensionMismatch("monic and retraction shapes".into()));
    }
    if p.mul(i) != Matrix::identity(e.field(), m.dim) {
        return Err(DeformError::NotARetraction);
    }
    deform_to_colinear(e, theta, n, m, p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::entwine::yetter_drinfeld;
    use crate::strucalg::{comodule_hom_residual, cyclic_table, group_algebra};
    use crate::witness::solve_theta;

    fn sqrt2() -> PrimitiveExtension {
        let q = Field::rationals();
        let k = Field::simple_extension(&q, vec![q.from_int(-2), q.zero(), q.one()]).unwrap();
        PrimitiveExtension::new(&k).unwrap()
    }

    #[test]
    fn conjugation_deforms_to_zero() {
        let d = sqrt2();
        let k = d.free_space(1);
        let sigma = Matrix::from_ints(&d.base, &[&[1, 0], &[0, -1]]);
        assert!(d.deform(&k, &k, &sigma).unwrap().is_zero());
    }

    #[test]
    fn projection_deforms_to_half_identity() {
        let d = sqrt2();
        let k = d.free_space(1);
        let proj = Matrix::from_ints(&d.base, &[&[1, 0], &[0, 0]]);
        let half = d.base.div(&d.base.one(), &d.base.from_int(2)).unwrap();
        let p = d.deform(&k, &k, &proj).unwrap();
        assert_eq!(p, Matrix::identity(&d.base, 2).scale(&half));
        assert!(k.is_linear(&k, &p));
    }

    #[test]
    fn linear_maps_are_fixed() {
        let d = sqrt2();
        let alpha = d.ext.generator().unwrap();
        let f = d.restrict(&Matrix::from_rows(&d.ext, vec![vec![alpha.clone(), d.ext.one()]]).unwrap());
        let (m, n) = (d.free_space(2), d.free_space(1));
        assert!(m.is_linear(&n, &f));
        assert_eq!(d.deform(&m, &n, &f).unwrap(), f);
    }

    #[test]
    fn inseparable_and_reducible_rejected() {
        let k = Field::rational_functions(2, "s").unwrap();
        let s = k.parse("s").unwrap();
        let l = Field::simple_extension(&k, vec![k.neg(&s), k.zero(), k.one()]).unwrap();
        assert_eq!(
            PrimitiveExtension::new(&l).unwrap_err(),
            DeformError::InseparableMinimalPolynomial
        );
        let q = Field::rationals();
        let r = Field::simple_extension(&q, vec![q.zero(), q.from_int(-1), q.one()]).unwrap();
        assert_eq!(
            PrimitiveExtension::new(&r).unwrap_err(),
            DeformError::ReducibleMinimalPolynomial
        );
        assert!(matches!(
            PrimitiveExtension::new(&q),
            Err(DeformError::NotAnExtension(_))
        ));
    }

    #[test]
    fn colinear_deformation_on_yd_flip() {
        let q = Field::rationals();
        let h = group_algebra(&q, &cyclic_table(2)).unwrap();
        let e = yetter_drinfeld(&h);
        let theta = solve_theta(&e).unwrap().data.remove(0);
        let m = crate::entwine::induce(&e, &h.algebra.regular_module());
        let id = Matrix::identity(&q, m.dim);
        assert_eq!(deform_to_colinear(&e, &theta, &m, &m, &id).unwrap(), id);
        let bad = Matrix::zeros(&q, 2, 8);
        assert_eq!(
            deform_to_colinear(&e, &bad, &m, &m, &id).unwrap_err(),
            DeformError::InvalidTheta
        );
        let gs = crate::strucalg::module_hom_space(&q, &m.module, &m.module).unwrap();
        for g in gs {
            let p = deform_to_colinear(&e, &theta, &m, &m, &g).unwrap();
            assert!(comodule_hom_residual(&p, &m.comodule, &m.comodule, 2).is_zero());
        }
    }

    #[test]
    fn maschke_split_rejects_non_retraction() {
        let q = Field::rationals();
        let h = group_algebra(&q, &cyclic_table(2)).unwrap();
        let e = yetter_drinfeld(&h);
        let theta = solve_theta(&e).unwrap().data.remove(0);
        let m = crate::entwine::induce(&e, &h.algebra.regular_module());
        let z = Matrix::zeros(&q, m.dim, m.dim);
        assert_eq!(
            maschke_split(&e, &theta, &m, &m, &Matrix::identity(&q, m.dim), &z).unwrap_err(),
            DeformError::NotARetraction
        );
    }

    #[test]
    fn inseparable_monic_has_linear_retraction() {
        let k = Field::rational_functions(2, "s").unwrap();
        let s = k.parse("s").unwrap();
        let l = Field::simple_extension(&k, vec![k.neg(&s), k.zero(), k.one()]).unwrap();
        let u = l.generator().unwrap();
        let i = Matrix::from_rows(&l, vec![vec![l.one()], vec![u]]).unwrap();
        let (m, n) = (free_space(&l, 1).unwrap(), free_space(&l, 2).unwrap());
        let ik = restrict_scalars(&l, &i).unwrap();
        assert!(m.is_linear(&n, &ik));
        let r = linear_retraction(&m, &n, &ik).unwrap();
        assert_eq!(r.mul(&ik), Matrix::identity(&k, 2));
        assert!(n.is_linear(&m, &r));
    }
}
