//! Entwining structures `(A, C, ψ)` with `ψ : C ⊗ A → A ⊗ C`, their
//! Doi-Koppinen and Yetter–Drinfeld sources, entwined modules and the cofree
//! constructions `G(N) = N ⊗ C` and `Hom(A, V) ⊗ C`.

use crate::field::Field;
use crate::linalg::{matrix_kernel, solve_matrix, swap, Matrix};
use crate::strucalg::{
    comodule_hom_residual, expect_shape, module_hom_residual, Algebra, Coalgebra, Hopf, Report, RightComodule,
    RightModule, StrucError,
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Entwining {
    pub algebra: Algebra,
    pub coalgebra: Coalgebra,
    /// `(dim A · dim C) × (dim C · dim A)`
    pub psi: Matrix,
}

impl Entwining {
    pub fn new(algebra: Algebra, coalgebra: Coalgebra, psi: Matrix) -> Result<Self, StrucError> {
        if algebra.field != coalgebra.field {
            return Err(StrucError::StructureMismatch(
                "algebra and coalgebra over different fields".into(),
            ));
        }
        let n = algebra.dim * coalgebra.dim;
        expect_shape(&psi, (n, n), "entwining map")?;
        Ok(Entwining {
            algebra,
            coalgebra,
            psi,
        })
    }

    pub fn field(&self) -> &Field {
        &self.algebra.field
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.algebra.dim, self.coalgebra.dim)
    }

    pub fn ia(&self) -> Matrix {
        self.algebra.identity()
    }

    pub fn ic(&self) -> Matrix {
        self.coalgebra.identity()
    }

    /// The four entwining axioms.
    pub fn check(&self) -> Report {
        let (na, nc) = self.dims();
        let (ia, ic) = (self.ia(), self.ic());
        let (m, u) = (&self.algebra.mult, &self.algebra.unit);
        let (d, e) = (&self.coalgebra.comult, &self.coalgebra.counit);
        let psi = &self.psi;
        let mut r = Report::default();
        r.equation(
            "multiplicativity",
            &psi.mul(&ic.kron(m)),
            &Matrix::chain(&[&m.kron(&ic), &ia.kron(psi), &psi.kron(&ia)]),
            &[nc, na, na],
        );
        r.equation("unitality", &psi.mul(&ic.kron(u)), &u.kron(&ic), &[nc]);
        r.equation(
            "comultiplicativity",
            &ia.kron(d).mul(psi),
            &Matrix::chain(&[&psi.kron(&ic), &ic.kron(psi), &d.kron(&ia)]),
            &[nc, na],
        );
        r.equation("counitality", &ia.kron(e).mul(psi), &e.kron(&ia), &[nc, na]);
        r
    }

    /// `ψ = τ` on `C ⊗ A`.
    pub fn flip(algebra: Algebra, coalgebra: Coalgebra) -> Self {
        let psi = swap(&algebra.field, coalgebra.dim, algebra.dim);
        Entwining::new(algebra, coalgebra, psi).expect("shapes")
    }
}

/// A Doi-Koppinen datum `(H, A, C)`: `A` a right `H`-comodule algebra and `C`
/// a right `H`-module coalgebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DoiKoppinenDatum {
    pub hopf: Hopf,
    pub algebra: Algebra,
    pub coaction: RightComodule,
    pub coalgebra: Coalgebra,
    pub action: RightModule,
}

impl DoiKoppinenDatum {
    pub fn new(
        hopf: Hopf,
        algebra: Algebra,
        coaction: RightComodule,
        coalgebra: Coalgebra,
        action: RightModule,
    ) -> Result<Self, StrucError> {
        let nh = hopf.dim();
        expect_shape(
            &coaction.rho,
            (algebra.dim * nh, algebra.dim),
            "comodule algebra coaction",
        )?;
        if action.dim != coalgebra.dim || action.action.len() != nh {
            return Err(StrucError::DimensionMismatch("module coalgebra action".into()));
        }
        Ok(DoiKoppinenDatum {
            hopf,
            algebra,
            coaction,
            coalgebra,
            action,
        })
    }

    /// `(k, A, k)`: entwined modules are `A`-modules.
    pub fn modules(algebra: Algebra) -> Self {
        let f = algebra.field.clone();
        let coaction = RightComodule {
            dim: algebra.dim,
            rho: algebra.identity(),
        };
        let action = RightModule {
            dim: 1,
            action: vec![Matrix::identity(&f, 1)],
        };
        DoiKoppinenDatum::new(
            crate::strucalg::trivial_hopf(&f),
            algebra,
            coaction,
            Coalgebra::ground(&f),
            action,
        )
        .expect("shapes")
    }

    /// `(k, k, C)`: entwined modules are `C`-comodules.
    pub fn comodules(coalgebra: Coalgebra) -> Self {
        let f = coalgebra.field.clone();
        let action = RightModule {
            dim: coalgebra.dim,
            action: vec![coalgebra.identity()],
        };
        DoiKoppinenDatum::new(
            crate::strucalg::trivial_hopf(&f),
            Algebra::ground(&f),
            RightComodule {
                dim: 1,
                rho: Matrix::identity(&f, 1),
            },
            coalgebra,
            action,
        )
        .expect("shapes")
    }

    /// `(L, A, L)`: relative Hopf modules for a right `L`-comodule algebra `A`.
    pub fn relative_hopf(hopf: Hopf, algebra: Algebra, coaction: RightComodule) -> Result<Self, StrucError> {
        let action = hopf.algebra.regular_module();
        let coalgebra = hopf.coalgebra.clone();
        DoiKoppinenDatum::new(hopf, algebra, coaction, coalgebra, action)
    }

    /// `(L, L, C)`: `[L, C]`-modules for a right `L`-module coalgebra `C`.
    pub fn lc(hopf: Hopf, coalgebra: Coalgebra, action: RightModule) -> Result<Self, StrucError> {
        let algebra = hopf.algebra.clone();
        let coaction = hopf.coalgebra.regular_comodule();
        DoiKoppinenDatum::new(hopf, algebra, coaction, coalgebra, action)
    }

    /// `L` coacting on itself by `Δ`.
    pub fn regular_relative_hopf(hopf: Hopf) -> Self {
        let algebra = hopf.algebra.clone();
        let coaction = hopf.coalgebra.regular_comodule();
        DoiKoppinenDatum::relative_hopf(hopf, algebra, coaction).expect("shapes")
    }

    /// `k` as a comodule algebra with `ρ(1) = 1 ⊗ 1`.
    pub fn trivial_relative_hopf(hopf: Hopf) -> Self {
        let f = hopf.field().clone();
        let coaction = RightComodule::trivial(&f, &hopf.algebra.unit_vec());
        DoiKoppinenDatum::relative_hopf(hopf, Algebra::ground(&f), coaction).expect("shapes")
    }

    /// `L` acting on itself by right multiplication.
    pub fn regular_lc(hopf: Hopf) -> Self {
        let coalgebra = hopf.coalgebra.clone();
        let action = hopf.algebra.regular_module();
        DoiKoppinenDatum::lc(hopf, coalgebra, action).expect("shapes")
    }

    /// `k` as a module coalgebra with `1·h = ε(h)`.
    pub fn trivial_lc(hopf: Hopf) -> Self {
        let f = hopf.field().clone();
        let action = RightModule {
            dim: 1,
            action: hopf
                .counit_vec()
                .into_iter()
                .map(|c| Matrix::column(&f, vec![c]))
                .collect(),
        };
        DoiKoppinenDatum::lc(hopf, Coalgebra::ground(&f), action).expect("shapes")
    }

    /// Comodule-algebra and module-coalgebra axioms.
    pub fn check(&self) -> Report {
        let f = self.hopf.field();
        let nh = self.hopf.dim();
        let (na, nc) = (self.algebra.dim, self.coalgebra.dim);
        let ih = Matrix::identity(f, nh);
        let mut r = self.hopf.check();
        r.extend(self.algebra.check());
        r.extend(self.coalgebra.check());
        r.extend(self.coaction.check(&self.hopf.coalgebra));
        r.extend(self.action.check(&self.hopf.algebra));
        let rho = &self.coaction.rho;
        let (ma, mh) = (&self.algebra.mult, &self.hopf.algebra.mult);
        let ia = self.algebra.identity();
        r.equation(
            "coaction is multiplicative",
            &rho.mul(ma),
            &Matrix::chain(&[&ma.kron(mh), &ia.kron(&swap(f, nh, na)).kron(&ih), &rho.kron(rho)]),
            &[na, na],
        );
        r.equation(
            "coaction is unital",
            &rho.mul(&self.algebra.unit),
            &self.algebra.unit.kron(&self.hopf.algebra.unit),
            &[1],
        );
        let act = self.action.action_map(f);
        let ic = self.coalgebra.identity();
        let dc = &self.coalgebra.comult;
        r.equation(
            "action is comultiplicative",
            &dc.mul(&act),
            &Matrix::chain(&[
                &act.kron(&act),
                &ic.kron(&swap(f, nc, nh)).kron(&ih),
                &dc.kron(&self.hopf.coalgebra.comult),
            ]),
            &[nc, nh],
        );
        r.equation(
            "action is counital",
            &self.coalgebra.counit.mul(&act),
            &self.coalgebra.counit.kron(&self.hopf.coalgebra.counit),
            &[nc, nh],
        );
        r
    }

    /// `ψ(c ⊗ a) = a₍₀₎ ⊗ c·a₍₁₎`.
    pub fn entwining(&self) -> Entwining {
        let f = self.hopf.field();
        let (na, nc, nh) = (self.algebra.dim, self.coalgebra.dim, self.hopf.dim());
        let act = self.action.action_map(f);
        let psi = Matrix::chain(&[
            &self.algebra.identity().kron(&act),
            &swap(f, nc, na).kron(&Matrix::identity(f, nh)),
            &self.coalgebra.identity().kron(&self.coaction.rho),
        ]);
        Entwining::new(self.algebra.clone(), self.coalgebra.clone(), psi).expect("shapes")
    }
}

/// `ψ(g ⊗ h) = h₍₂₎ ⊗ S(h₍₁₎) g h₍₃₎` on `L ⊗ L`.
pub fn yetter_drinfeld(hopf: &Hopf) -> Entwining {
    let f = hopf.field();
    let n = hopf.dim();
    let a = &hopf.algebra;
    let d2 = hopf.coalgebra.comult2();
    let mut psi = Matrix::zeros(f, n * n, n * n);
    for g in 0..n {
        for h in 0..n {
            let col = g * n + h;
            for t in 0..n * n * n {
                let c = d2.get(t, h);
                if f.is_zero(c) {
                    continue;
                }
                let (i, j, k) = (t / (n * n), (t / n) % n, t % n);
                let s = hopf.antipode.col(i);
                let left = a.product(&a.product(&s, &a.basis(g)), &a.basis(k));
                for (l, x) in left.iter().enumerate() {
                    if f.is_zero(x) {
                        continue;
                    }
                    let row = j * n + l;
                    psi.set(row, col, f.add(psi.get(row, col), &f.mul(c, x)));
                }
            }
        }
    }
    Entwining::new(hopf.algebra.clone(), hopf.coalgebra.clone(), psi).expect("shapes")
}

/// A right `A`-module and right `C`-comodule on the same space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EntwinedModule {
    pub dim: usize,
    pub module: RightModule,
    pub comodule: RightComodule,
}

impl EntwinedModule {
    pub fn new(module: RightModule, comodule: RightComodule) -> Result<Self, StrucError> {
        if module.dim != comodule.dim {
            return Err(StrucError::DimensionMismatch(format!(
                "action on dimension {}, coaction on dimension {}",
                module.dim, comodule.dim
            )));
        }
        Ok(EntwinedModule {
            dim: module.dim,
            module,
            comodule,
        })
    }

    pub fn conjugate(&self, p: &Matrix, p_inv: &Matrix, dim_c: usize) -> Self {
        EntwinedModule {
            dim: self.dim,
            module: self.module.conjugate(p, p_inv),
            comodule: self.comodule.conjugate(p, p_inv, dim_c),
        }
    }

    pub fn direct_sum(&self, other: &EntwinedModule, dim_c: usize) -> Self {
        let f = self.comodule.rho.field();
        let (a, b) = (self.dim, other.dim);
        let rho = Matrix::from_fn(f, (a + b) * dim_c, a + b, |r, j| {
            let (i, c) = (r / dim_c, r % dim_c);
            match (i < a, j < a) {
                (true, true) => self.comodule.rho.get(i * dim_c + c, j).clone(),
                (false, false) => other.comodule.rho.get((i - a) * dim_c + c, j - a).clone(),
                _ => f.zero(),
            }
        });
        EntwinedModule {
            dim: a + b,
            module: self.module.direct_sum(&other.module, f),
            comodule: RightComodule { dim: a + b, rho },
        }
    }
}

/// `ρ ∘ act − (act ⊗ I_C)(I_M ⊗ ψ)(ρ ⊗ I_A)` as a map `M ⊗ A → M ⊗ C`.
pub(crate) fn compatibility_sides(e: &Entwining, m: &EntwinedModule) -> (Matrix, Matrix) {
    let f = e.field();
    let act = m.module.action_map(f);
    let im = Matrix::identity(f, m.dim);
    let lhs = m.comodule.rho.mul(&act);
    let rhs = Matrix::chain(&[&act.kron(&e.ic()), &im.kron(&e.psi), &m.comodule.rho.kron(&e.ia())]);
    (lhs, rhs)
}

pub fn check_entwined_module(e: &Entwining, m: &EntwinedModule) -> Report {
    let mut r = m.module.check(&e.algebra);
    r.extend(m.comodule.check(&e.coalgebra));
    let (lhs, rhs) = compatibility_sides(e, m);
    r.equation(
        "action and coaction are compatible",
        &lhs,
        &rhs,
        &[m.dim, e.algebra.dim],
    );
    r
}

pub(crate) fn entwined_hom_residual(f: &Matrix, e: &Entwining, m: &EntwinedModule, n: &EntwinedModule) -> Vec<Matrix> {
    let mut out = module_hom_residual(f, &m.module, &n.module);
    out.push(comodule_hom_residual(f, &m.comodule, &n.comodule, e.coalgebra.dim));
    out
}

pub fn is_entwined_morphism(f: &Matrix, e: &Entwining, m: &EntwinedModule, n: &EntwinedModule) -> bool {
    f.shape() == (n.dim, m.dim) && entwined_hom_residual(f, e, m, n).iter().all(Matrix::is_zero)
}

/// Basis of the morphisms `M → N` in the entwined category.
pub fn entwined_hom_space(e: &Entwining, m: &EntwinedModule, n: &EntwinedModule) -> Vec<Matrix> {
    matrix_kernel(e.field(), n.dim, m.dim, |f| entwined_hom_residual(f, e, m, n))
}

/// `G(N) = N ⊗ C` with action `(act_N ⊗ I_C)(I_N ⊗ ψ)` and coaction `I_N ⊗ Δ`.
pub fn induce(e: &Entwining, n: &RightModule) -> EntwinedModule {
    let f = e.field();
    let i_n = Matrix::identity(f, n.dim);
    let act = n.action_map(f).kron(&e.ic()).mul(&i_n.kron(&e.psi));
    let module = RightModule::from_action_map(&e.algebra, &act).expect("shapes");
    let comodule = RightComodule {
        dim: n.dim * e.coalgebra.dim,
        rho: i_n.kron(&e.coalgebra.comult),
    };
    EntwinedModule::new(module, comodule).expect("shapes")
}

/// `G(f) = f ⊗ I_C`.
pub fn induce_map(e: &Entwining, f: &Matrix) -> Matrix {
    f.kron(&e.ic())
}

/// `Hom(A, V)` with `(f·a)(b) = f(ab)`; coordinates `F[k][i] = f(e_i)_k` flattened as `k·dim A + i`.
pub fn hom_module(algebra: &Algebra, dim_v: usize) -> RightModule {
    let iv = Matrix::identity(&algebra.field, dim_v);
    let action = (0..algebra.dim)
        .map(|j| iv.kron(&algebra.left_mult(&algebra.basis(j)).transpose()))
        .collect();
    RightModule::new(algebra, action).expect("shapes")
}

/// `Hom(A, V) ⊗ C`.
pub fn cofree(e: &Entwining, dim_v: usize) -> EntwinedModule {
    induce(e, &hom_module(&e.algebra, dim_v))
}

/// `m ↦ (b ↦ m·b)` as a map `M → Hom(A, M)`.
pub fn bullet(field: &Field, m: &RightModule) -> Matrix {
    let na = m.action.len();
    Matrix::from_fn(field, m.dim * na, m.dim, |r, j| m.action[r % na].get(r / na, j).clone())
}

/// The unit `η_M(m) = m₍₀₎• ⊗ m₍₁₎ : M → Hom(A, M) ⊗ C`.
pub fn unit_map(e: &Entwining, m: &EntwinedModule) -> Matrix {
    bullet(e.field(), &m.module).kron(&e.ic()).mul(&m.comodule.rho)
}

/// An entwined morphism `r : Hom(A, M) ⊗ C → M` with `r ∘ η_M = I`, if any.
pub fn unit_splits(e: &Entwining, m: &EntwinedModule) -> Option<Matrix> {
    let target = cofree(e, m.dim);
    let eta = unit_map(e, m);
    let im = Matrix::identity(e.field(), m.dim);
    solve_matrix(e.field(), m.dim, target.dim, |r| {
        let mut out = entwined_hom_residual(r, e, &target, m);
        out.push(r.mul(&eta).sub(&im));
        out
    })
}

pub fn check_unit_splitting(e: &Entwining, m: &EntwinedModule, r: &Matrix) -> bool {
    let target = cofree(e, m.dim);
    is_entwined_morphism(r, e, &target, m) && r.mul(&unit_map(e, m)) == Matrix::identity(e.field(), m.dim)
}
