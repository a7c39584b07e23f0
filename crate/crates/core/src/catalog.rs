//! Built-in instances and the cross-checks run over them.
//!
//! Each entry runs every applicable solver, verifies every witness it gets,
//! compares existence against the expected table and checks the equivalences
//! and transports that tie the criteria together. The report is one line per
//! assertion.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::deform::{
    deform_to_colinear, free_space, linear_retraction, restrict_scalars, DeformError, PrimitiveExtension,
};
use crate::entwine::{check_entwined_module, induce, yetter_drinfeld, DoiKoppinenDatum, Entwining};
use crate::field::Field;
use crate::linalg::Matrix;
use crate::strucalg::{
    check_coaction_retraction, coaction_retraction, cyclic_table, extension_algebra, group_algebra, s3_table,
    sweedler_h4, Algebra, Coalgebra, Hopf, Report,
};
use crate::witness::{self as w, Direction, Witness};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Expected {
    Exists,
    NotExists,
    Pass,
    Unspecified,
}

impl Expected {
    fn from_bool(exists: bool) -> Self {
        if exists {
            Expected::Exists
        } else {
            Expected::NotExists
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Exists,
    NotExists,
    /// A solver returned something its verifier rejects.
    Unverified,
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Line {
    pub entry: String,
    pub solver: String,
    pub outcome: Outcome,
    pub expected: Expected,
    pub pass: bool,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CatalogReport {
    pub lines: Vec<Line>,
}

impl CatalogReport {
    pub fn all_pass(&self) -> bool {
        self.lines.iter().all(|l| l.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Line> {
        self.lines.iter().filter(|l| !l.pass)
    }

    /// Number of witnesses produced and verified.
    pub fn witnesses(&self) -> usize {
        self.lines.iter().filter(|l| l.outcome == Outcome::Exists).count()
    }
}

#[derive(Debug, Clone)]
enum Recipe {
    Hopf(Hopf, Option<bool>),
    Extension(Field, bool),
    Modules(Algebra),
    Comodules(Coalgebra),
    RelativeHopf(DoiKoppinenDatum, bool),
    YetterDrinfeld(Hopf),
    Lc(DoiKoppinenDatum),
}

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub name: String,
    recipe: Recipe,
}

fn q() -> Field {
    Field::rationals()
}

fn gf(p: u64) -> Field {
    Field::prime(p).expect("prime")
}

fn kc2(f: &Field) -> Hopf {
    group_algebra(f, &cyclic_table(2)).expect("group table")
}

/// `ℚ(√2)` over `ℚ`.
pub fn sqrt2_field() -> Field {
    let q = q();
    Field::simple_extension(&q, vec![q.from_int(-2), q.zero(), q.one()]).expect("irreducible")
}

/// `F₂(u)` as `K[x]/(x² − s)` over `K = F₂(s)`, `s = u²`.
pub fn inseparable_field() -> Field {
    let k = Field::rational_functions(2, "s").expect("prime");
    let s = k.parse("s").expect("variable");
    Field::simple_extension(&k, vec![k.neg(&s), k.zero(), k.one()]).expect("irreducible")
}

pub fn entries() -> Vec<CatalogEntry> {
    let mut out = Vec::new();
    let mut push = |name: String, recipe| out.push(CatalogEntry { name, recipe });
    for (g, table) in [("C2", cyclic_table(2)), ("C3", cyclic_table(3)), ("S3", s3_table())] {
        for f in [q(), gf(2), gf(3), gf(5)] {
            let order = table.len() as u64;
            let semisimple = f.characteristic() == 0 || !order.is_multiple_of(f.characteristic());
            let h = group_algebra(&f, &table).expect("group table");
            push(format!("{g}/{}", f.name()), Recipe::Hopf(h, Some(semisimple)));
        }
    }
    for f in [q(), gf(3)] {
        push(format!("H4/{}", f.name()), Recipe::Hopf(sweedler_h4(&f), None));
    }
    push("ext Q(sqrt2)/Q".into(), Recipe::Extension(sqrt2_field(), true));
    push(
        "ext F2(u)/F2(u^2)".into(),
        Recipe::Extension(inseparable_field(), false),
    );
    push("modules (k,C2,k)/Q".into(), Recipe::Modules(kc2(&q()).algebra));
    push("comodules (k,k,C2)/Q".into(), Recipe::Comodules(kc2(&q()).coalgebra));
    let h4 = sweedler_h4(&q());
    for (name, d, exists) in [
        (
            "relhopf (C2,C2)/Q",
            DoiKoppinenDatum::regular_relative_hopf(kc2(&q())),
            true,
        ),
        (
            "relhopf (C2,C2)/GF(2)",
            DoiKoppinenDatum::regular_relative_hopf(kc2(&gf(2))),
            true,
        ),
        (
            "relhopf (C2,k)/Q",
            DoiKoppinenDatum::trivial_relative_hopf(kc2(&q())),
            true,
        ),
        (
            "relhopf (H4,H4)/Q",
            DoiKoppinenDatum::regular_relative_hopf(h4.clone()),
            true,
        ),
        (
            "relhopf (H4,k)/Q",
            DoiKoppinenDatum::trivial_relative_hopf(h4.clone()),
            false,
        ),
    ] {
        push(name.into(), Recipe::RelativeHopf(d, exists));
    }
    push("yd C2/Q".into(), Recipe::YetterDrinfeld(kc2(&q())));
    push("yd H4/Q".into(), Recipe::YetterDrinfeld(h4.clone()));
    push(
        "lc (C2,C2)/Q".into(),
        Recipe::Lc(DoiKoppinenDatum::regular_lc(kc2(&q()))),
    );
    push(
        "lc (C2,k)/Q".into(),
        Recipe::Lc(DoiKoppinenDatum::trivial_lc(kc2(&q()))),
    );
    push("lc (H4,H4)/Q".into(), Recipe::Lc(DoiKoppinenDatum::regular_lc(h4)));
    out.sort_by(|a, b| a.name.cmp(&b.name));
    out
}

/// Runs every entry whose name contains `filter`, in parallel; lines are
/// ordered by entry name.
pub fn run(filter: Option<&str>) -> CatalogReport {
    let selected: Vec<CatalogEntry> = entries()
        .into_iter()
        .filter(|e| filter.is_none_or(|f| e.name.contains(f)))
        .collect();
    let lines = selected
        .par_iter()
        .map(run_entry)
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect();
    CatalogReport { lines }
}

pub fn run_entry(entry: &CatalogEntry) -> Vec<Line> {
    let mut r = Recorder {
        entry: entry.name.clone(),
        lines: Vec::new(),
    };
    match &entry.recipe {
        Recipe::Hopf(h, semisimple) => run_hopf(&mut r, h, *semisimple),
        Recipe::Extension(f, separable) => run_extension(&mut r, f, *separable),
        Recipe::Modules(a) => {
            let e = DoiKoppinenDatum::modules(a.clone()).entwining();
            r.report("entwining-axioms", &e.check());
            let theta = r.solved("theta", Expected::Exists, w::solve_theta(&e), |x| {
                w::verify_theta(&e, x.matrix())
            });
            run_entwining_extras(&mut r, &e, theta.as_ref());
        }
        Recipe::Comodules(c) => {
            let e = DoiKoppinenDatum::comodules(c.clone()).entwining();
            r.report("entwining-axioms", &e.check());
            let theta = r.solved("theta", Expected::Unspecified, w::solve_theta(&e), |x| {
                w::verify_theta(&e, x.matrix())
            });
            run_entwining_extras(&mut r, &e, theta.as_ref());
        }
        Recipe::RelativeHopf(d, exists) => run_relative_hopf(&mut r, d, *exists),
        Recipe::YetterDrinfeld(l) => run_yd(&mut r, l),
        Recipe::Lc(d) => run_lc(&mut r, d),
    }
    r.lines
}

struct Recorder {
    entry: String,
    lines: Vec<Line>,
}

impl Recorder {
    fn push(&mut self, solver: &str, outcome: Outcome, expected: Expected) {
        let pass = match (outcome, expected) {
            (Outcome::Unverified | Outcome::Fail, _) => false,
            (_, Expected::Unspecified) => true,
            (Outcome::Exists, Expected::Exists) | (Outcome::NotExists, Expected::NotExists) => true,
            (Outcome::Pass, Expected::Pass) => true,
            _ => false,
        };
        self.lines.push(Line {
            entry: self.entry.clone(),
            solver: solver.to_string(),
            outcome,
            expected,
            pass,
        });
    }

    /// Records a solver result; only verified witnesses are passed on.
    fn solved(
        &mut self,
        solver: &str,
        expected: Expected,
        result: Option<Witness>,
        verify: impl FnOnce(&Witness) -> bool,
    ) -> Option<Witness> {
        match result {
            None => {
                self.push(solver, Outcome::NotExists, expected);
                None
            }
            Some(x) if verify(&x) => {
                self.push(solver, Outcome::Exists, expected);
                Some(x)
            }
            Some(_) => {
                self.push(solver, Outcome::Unverified, expected);
                None
            }
        }
    }

    fn check(&mut self, name: &str, ok: bool) {
        self.push(name, if ok { Outcome::Pass } else { Outcome::Fail }, Expected::Pass);
    }

    fn report(&mut self, name: &str, report: &Report) {
        self.check(name, report.all_pass());
    }
}

fn run_hopf(r: &mut Recorder, h: &Hopf, semisimple: Option<bool>) {
    r.report("hopf-axioms", &h.check());
    // Group algebras: Maschke; H4: nothing exists.
    let integral_expected = Expected::from_bool(semisimple.unwrap_or(false));
    let dual_expected = Expected::from_bool(semisimple.is_some());
    let t = r.solved("integral", integral_expected, w::solve_normalized_integral(h), |x| {
        w::verify_normalized_integral(h, x.matrix())
    });
    r.solved(
        "dual-integral",
        dual_expected,
        w::solve_dual_normalized_integral(h),
        |x| w::verify_dual_normalized_integral(h, x.matrix()),
    );
    let e = r.solved(
        "idempotent",
        integral_expected,
        w::solve_separability_idempotent(&h.algebra),
        |x| w::verify_separability_idempotent(&h.algebra, x.matrix()),
    );
    r.check("integral<=>idempotent", t.is_some() == e.is_some());
    if let Some(t) = t {
        transported(r, &t, Direction::IntegralToIdempotent, h, |x| {
            w::verify_separability_idempotent(&h.algebra, x.matrix())
        });
    }
    r.solved(
        "quantum-integral",
        Expected::Unspecified,
        w::solve_quantum_integral(h),
        |x| w::verify_quantum_integral(h, x.matrix()),
    );
    let yd = yetter_drinfeld(h);
    r.solved("yd-cocasimir", Expected::Unspecified, w::solve_yd_cocasimir(h), |x| {
        w::verify_cocasimir(&yd, x.matrix())
    });
}

fn transported(r: &mut Recorder, x: &Witness, d: Direction, l: &Hopf, verify: impl FnOnce(&Witness) -> bool) {
    let name = format!("transport {}", direction_name(d));
    let ok = w::transport(x, d, l).is_ok_and(|y| y.tag == d.target() && verify(&y));
    r.check(&name, ok);
}

pub fn direction_name(d: Direction) -> &'static str {
    match d {
        Direction::IntegralToIdempotent => "integral->idempotent",
        Direction::TotalIntegralToTheta => "totalintegral->theta",
        Direction::ThetaToTotalIntegral => "theta->totalintegral",
        Direction::CocasimirToCointegral => "cocasimir->cointegral",
    }
}

fn run_extension(r: &mut Recorder, ext: &Field, separable: bool) {
    let a = extension_algebra(ext).expect("simple extension");
    r.report("algebra-axioms", &a.check());
    r.solved(
        "idempotent",
        Expected::from_bool(separable),
        w::solve_separability_idempotent(&a),
        |x| w::verify_separability_idempotent(&a, x.matrix()),
    );
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let base = ext.base().expect("extension").clone();
    // Maschke for L-spaces: random monics L → L² split L-linearly.
    let (m, n) = (
        free_space(ext, 1).expect("extension"),
        free_space(ext, 2).expect("extension"),
    );
    let mut all_split = true;
    for _ in 0..5 {
        let i = loop {
            let i = Matrix::random(ext, 2, 1, &mut rng);
            if !i.is_zero() {
                break i;
            }
        };
        let ik = restrict_scalars(ext, &i).expect("extension");
        all_split &= linear_retraction(&m, &n, &ik)
            .is_some_and(|p| p.mul(&ik) == Matrix::identity(&base, m.dim()) && n.is_linear(&m, &p));
    }
    r.check("linear-monics-split", all_split);
    match PrimitiveExtension::new(ext) {
        Ok(d) => {
            r.check("deformation-available", separable);
            let k = d.free_space(1);
            // α ↦ −α on the power basis of `k[x]/(x² − c)`.
            if d.degree() == 2 && d.c[1] == base.zero() {
                let sigma = Matrix::from_fn(&base, 2, 2, |i, j| match (i, j) {
                    (0, 0) => base.one(),
                    (1, 1) => base.from_int(-1),
                    _ => base.zero(),
                });
                r.check("P(conjugation)=0", d.deform(&k, &k, &sigma).is_ok_and(|p| p.is_zero()));
            }
            let f = Matrix::random(&base, 2, 2, &mut rng);
            let p = d.deform(&k, &k, &f).expect("shapes");
            r.check("P(f) is K-linear", k.is_linear(&k, &p));
            r.check("P∘P=P", d.deform(&k, &k, &p).is_ok_and(|pp| pp == p));
        }
        Err(e) => {
            let expected_reason = e == DeformError::InseparableMinimalPolynomial;
            r.check("deformation-rejected-inseparable", !separable && expected_reason);
        }
    }
}

fn run_relative_hopf(r: &mut Recorder, d: &DoiKoppinenDatum, exists: bool) {
    r.report("datum-axioms", &d.check());
    let e = d.entwining();
    r.report("entwining-axioms", &e.check());
    let l = &d.hopf;
    let expected = Expected::from_bool(exists);
    let theta = r.solved("theta", expected, w::solve_theta(&e), |x| {
        w::verify_theta(&e, x.matrix())
    });
    let phi = r.solved(
        "total-integral",
        expected,
        w::solve_total_integral(l, &d.algebra, &d.coaction),
        |x| w::verify_total_integral(l, &d.algebra, &d.coaction, x.matrix()),
    );
    r.check("theta<=>total-integral", theta.is_some() == phi.is_some());
    if let Some(t) = &theta {
        transported(r, t, Direction::ThetaToTotalIntegral, l, |x| {
            w::verify_total_integral(l, &d.algebra, &d.coaction, x.matrix())
        });
    }
    if let Some(p) = &phi {
        transported(r, p, Direction::TotalIntegralToTheta, l, |x| {
            w::verify_theta(&e, x.matrix())
        });
    }
    run_entwining_extras(r, &e, theta.as_ref());
}

fn run_yd(r: &mut Recorder, l: &Hopf) {
    let e = yetter_drinfeld(l);
    r.report("entwining-axioms", &e.check());
    let theta = r.solved("theta", Expected::Unspecified, w::solve_theta(&e), |x| {
        w::verify_theta(&e, x.matrix())
    });
    run_entwining_extras(r, &e, theta.as_ref());
}

fn run_lc(r: &mut Recorder, d: &DoiKoppinenDatum) {
    r.report("datum-axioms", &d.check());
    let e = d.entwining();
    r.report("entwining-axioms", &e.check());
    let theta = r.solved("theta", Expected::Unspecified, w::solve_theta(&e), |x| {
        w::verify_theta(&e, x.matrix())
    });
    let cocasimir = run_entwining_extras(r, &e, theta.as_ref());
    let l = &d.hopf;
    let psi = r.solved(
        "augmented-cointegral",
        Expected::Unspecified,
        w::solve_augmented_cointegral(l, &d.coalgebra, &d.action),
        |x| w::verify_augmented_cointegral(l, &d.coalgebra, &d.action, x.matrix()),
    );
    r.check("cocasimir<=>cointegral", cocasimir.is_some() == psi.is_some());
    if let Some(c) = &cocasimir {
        transported(r, c, Direction::CocasimirToCointegral, l, |x| {
            w::verify_augmented_cointegral(l, &d.coalgebra, &d.action, x.matrix())
        });
    }
}

/// Cocasimir, Frobenius systems, `β` maps and the deformation and
/// injectivity invariants attached to `θ`. Returns the cocasimir witness.
fn run_entwining_extras(r: &mut Recorder, e: &Entwining, theta: Option<&Witness>) -> Option<Witness> {
    let cocasimir = r.solved("cocasimir", Expected::Unspecified, w::solve_cocasimir(e), |x| {
        w::verify_cocasimir(e, x.matrix())
    });
    if let Some(t) = theta {
        let t = t.matrix();
        let g = induce(e, &e.algebra.regular_module());
        r.check("G(A) is entwined", check_entwined_module(e, &g).all_pass());
        let id = Matrix::identity(e.field(), g.dim);
        r.check(
            "deform(id)=id",
            deform_to_colinear(e, t, &g, &g, &id).is_ok_and(|p| p == id),
        );
        r.check(
            "coaction-retraction on G(A)",
            coaction_retraction(&e.coalgebra, &g.comodule)
                .is_some_and(|lam| check_coaction_retraction(&e.coalgebra, &g.comodule, &lam)),
        );
        let fz = r.solved("frobenius z", Expected::Unspecified, w::solve_fg_z(e, t), |x| {
            w::verify_frobenius_entwining(e, &x.data[0], &x.data[1]).all_pass()
        });
        if let Some(fz) = fz {
            let z = &fz.data[1];
            r.solved(
                "beta H-separable",
                Expected::Unspecified,
                w::solve_beta_hsep(e, t, z).ok().flatten(),
                |b| w::verify_beta_hsep(e, t, b.matrix()),
            );
            r.solved(
                "beta separable",
                Expected::Unspecified,
                w::solve_beta_sep(e, t, z).ok().flatten(),
                |b| w::verify_beta_sep(e, t, b.matrix()),
            );
        }
    }
    if let Some(c) = &cocasimir {
        let ce = c.matrix();
        let hk = r.solved("hk vartheta", Expected::Unspecified, w::solve_hk_vartheta(e, ce), |x| {
            w::verify_frobenius_hk(e, &x.data[0], &x.data[1]).all_pass()
        });
        if let Some(hk) = hk {
            let vt = &hk.data[0];
            r.solved(
                "beta F-separable",
                Expected::Unspecified,
                w::solve_beta_hfsep(e, vt, ce).ok().flatten(),
                |b| w::verify_beta_hfsep(e, ce, b.matrix()),
            );
            r.solved(
                "beta separable (HK)",
                Expected::Unspecified,
                w::solve_beta_fsep(e, vt, ce).ok().flatten(),
                |b| w::verify_beta_fsep(e, ce, b.matrix()),
            );
        }
    }
    cocasimir
}
