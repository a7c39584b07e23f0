//! JSON forms of presentations, modules, entwinings, data and witnesses.
//!
//! Every map is listed by images of basis vectors: `mult[i][j]` is `e_i e_j`,
//! `comult[i][j][k]` is the coefficient of `e_j ⊗ e_k` in `Δ(e_i)`,
//! `antipode[i]` is `S(e_i)`, `action[j][i]` is `m_i · e_j`, `rho[i]` is
//! `ρ(m_i)` in `M ⊗ C`, and `psi[k]` is `ψ` of the `k`-th basis vector of
//! `C ⊗ A`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::entwine::{DoiKoppinenDatum, EntwinedModule, Entwining};
use crate::field::{Field, FieldError, FieldSpec, ScalarText};
use crate::linalg::{LinalgError, Matrix, MatrixJson};
use crate::strucalg::{Algebra, Coalgebra, Hopf, RightComodule, RightModule, StrucError};
use crate::witness::{Tag, Witness};

#[derive(Debug, Error)]
pub enum JsonError {
    #[error("invalid JSON: {0}")]
    Syntax(#[from] serde_json::Error),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Struc(#[from] StrucError),
    #[error("missing {0}")]
    Missing(&'static str),
    #[error("shape: {0}")]
    Shape(String),
}

type Vector = Vec<ScalarText>;
type Table = Vec<Vec<ScalarText>>;
type Cube = Vec<Vec<Vec<ScalarText>>>;

/// Columns listed as images; `len` is the expected image length.
fn from_images(field: &Field, images: &[Vector], len: usize, what: &str) -> Result<Matrix, JsonError> {
    let mut m = Matrix::zeros(field, len, images.len());
    for (j, img) in images.iter().enumerate() {
        if img.len() != len {
            return Err(JsonError::Shape(format!(
                "{what}[{j}] has length {}, expected {len}",
                img.len()
            )));
        }
        for (i, t) in img.iter().enumerate() {
            m.set(i, j, field.parse(&t.0)?);
        }
    }
    Ok(m)
}

fn to_images(m: &Matrix) -> Table {
    (0..m.cols())
        .map(|j| m.col(j).iter().map(|x| ScalarText(m.field().format(x))).collect())
        .collect()
}

fn expect_len<T>(v: &[T], n: usize, what: &str) -> Result<(), JsonError> {
    if v.len() == n {
        Ok(())
    } else {
        Err(JsonError::Shape(format!(
            "{what} has {} entries, expected {n}",
            v.len()
        )))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentationJson {
    pub field: FieldSpec,
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mult: Option<Cube>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unit: Option<Vector>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub comult: Option<Cube>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counit: Option<Vector>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub antipode: Option<Table>,
}

/// A parsed presentation; parts absent from the JSON are `None`.
#[derive(Debug, Clone)]
pub struct Presentation {
    pub field: Field,
    pub dim: usize,
    pub algebra: Option<Algebra>,
    pub coalgebra: Option<Coalgebra>,
    pub antipode: Option<Matrix>,
}

impl Presentation {
    pub fn from_json(j: &PresentationJson) -> Result<Self, JsonError> {
        let field = Field::from_spec(&j.field)?;
        let n = j.dim;
        let algebra = match (&j.mult, &j.unit) {
            (Some(mult), Some(unit)) => {
                expect_len(mult, n, "mult")?;
                let mut images = Vec::with_capacity(n * n);
                for row in mult {
                    expect_len(row, n, "mult row")?;
                    images.extend(row.iter().cloned());
                }
                let m = from_images(&field, &images, n, "mult")?;
                let u = from_images(&field, std::slice::from_ref(unit), n, "unit")?;
                Some(Algebra::new(m, u)?)
            }
            (None, None) => None,
            _ => return Err(JsonError::Missing("mult and unit must appear together")),
        };
        let coalgebra = match (&j.comult, &j.counit) {
            (Some(comult), Some(counit)) => {
                expect_len(comult, n, "comult")?;
                let mut images = Vec::with_capacity(n);
                for (i, t) in comult.iter().enumerate() {
                    expect_len(t, n, "comult table")?;
                    let flat: Vector = t.iter().flatten().cloned().collect();
                    if flat.len() != n * n {
                        return Err(JsonError::Shape(format!("comult[{i}] is not {n}x{n}")));
                    }
                    images.push(flat);
                }
                let d = from_images(&field, &images, n * n, "comult")?;
                expect_len(counit, n, "counit")?;
                let e = from_images(
                    &field,
                    &counit.iter().map(|x| vec![x.clone()]).collect::<Vec<_>>(),
                    1,
                    "counit",
                )?;
                Some(Coalgebra::new(d, e)?)
            }
            (None, None) => None,
            _ => return Err(JsonError::Missing("comult and counit must appear together")),
        };
        let antipode = match &j.antipode {
            Some(s) => {
                expect_len(s, n, "antipode")?;
                Some(from_images(&field, s, n, "antipode")?)
            }
            None => None,
        };
        Ok(Presentation {
            field,
            dim: n,
            algebra,
            coalgebra,
            antipode,
        })
    }

    pub fn parse(text: &str) -> Result<Self, JsonError> {
        Self::from_json(&serde_json::from_str(text)?)
    }

    pub fn algebra(&self) -> Result<Algebra, JsonError> {
        self.algebra
            .clone()
            .ok_or(JsonError::Missing("algebra structure (mult, unit)"))
    }

    pub fn coalgebra(&self) -> Result<Coalgebra, JsonError> {
        self.coalgebra
            .clone()
            .ok_or(JsonError::Missing("coalgebra structure (comult, counit)"))
    }

    pub fn hopf(&self) -> Result<Hopf, JsonError> {
        let s = self.antipode.clone().ok_or(JsonError::Missing("antipode"))?;
        Ok(Hopf::new(self.algebra()?, self.coalgebra()?, s)?)
    }
}

impl PresentationJson {
    fn bare(field: &Field, dim: usize) -> Self {
        PresentationJson {
            field: field.spec(),
            dim,
            mult: None,
            unit: None,
            comult: None,
            counit: None,
            antipode: None,
        }
    }

    pub fn from_algebra(a: &Algebra) -> Self {
        let mut j = Self::bare(&a.field, a.dim);
        j.set_algebra(a);
        j
    }

    pub fn from_coalgebra(c: &Coalgebra) -> Self {
        let mut j = Self::bare(&c.field, c.dim);
        j.set_coalgebra(c);
        j
    }

    pub fn from_hopf(h: &Hopf) -> Self {
        let mut j = Self::bare(h.field(), h.dim());
        j.set_algebra(&h.algebra);
        j.set_coalgebra(&h.coalgebra);
        j.antipode = Some(to_images(&h.antipode));
        j
    }

    fn set_algebra(&mut self, a: &Algebra) {
        let n = a.dim;
        let images = to_images(&a.mult);
        self.mult = Some(images.chunks(n).map(|c| c.to_vec()).collect());
        self.unit = Some(to_images(&a.unit).remove(0));
    }

    fn set_coalgebra(&mut self, c: &Coalgebra) {
        let n = c.dim;
        self.comult = Some(
            to_images(&c.comult)
                .into_iter()
                .map(|img| img.chunks(n).map(|r| r.to_vec()).collect())
                .collect(),
        );
        self.counit = Some(to_images(&c.counit).into_iter().flatten().collect());
    }
}

/// A module, comodule or entwined module: whichever of `action`, `rho` is present.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleJson {
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub action: Option<Cube>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rho: Option<Table>,
}

impl ModuleJson {
    pub fn from_module(m: &RightModule) -> Self {
        ModuleJson {
            dim: m.dim,
            action: Some(m.action.iter().map(to_images).collect()),
            rho: None,
        }
    }

    pub fn from_comodule(m: &RightComodule) -> Self {
        ModuleJson {
            dim: m.dim,
            action: None,
            rho: Some(to_images(&m.rho)),
        }
    }

    pub fn from_entwined(m: &EntwinedModule) -> Self {
        ModuleJson {
            rho: Some(to_images(&m.comodule.rho)),
            ..Self::from_module(&m.module)
        }
    }

    pub fn module(&self, a: &Algebra) -> Result<RightModule, JsonError> {
        let action = self.action.as_ref().ok_or(JsonError::Missing("action"))?;
        module_from(a, self.dim, action)
    }

    pub fn comodule(&self, c: &Coalgebra) -> Result<RightComodule, JsonError> {
        let rho = self.rho.as_ref().ok_or(JsonError::Missing("rho"))?;
        comodule_from(c, self.dim, rho)
    }

    pub fn entwined(&self, e: &Entwining) -> Result<EntwinedModule, JsonError> {
        Ok(EntwinedModule::new(
            self.module(&e.algebra)?,
            self.comodule(&e.coalgebra)?,
        )?)
    }
}

fn module_from(a: &Algebra, dim: usize, action: &Cube) -> Result<RightModule, JsonError> {
    expect_len(action, a.dim, "action")?;
    let mats = action
        .iter()
        .map(|imgs| {
            expect_len(imgs, dim, "action images")?;
            from_images(&a.field, imgs, dim, "action")
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(RightModule::new(a, mats)?)
}

fn comodule_from(c: &Coalgebra, dim: usize, rho: &Table) -> Result<RightComodule, JsonError> {
    expect_len(rho, dim, "rho")?;
    let m = from_images(&c.field, rho, dim * c.dim, "rho")?;
    Ok(RightComodule::new(c, m)?)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntwiningJson {
    #[serde(rename = "A")]
    pub a: PresentationJson,
    #[serde(rename = "C")]
    pub c: PresentationJson,
    pub psi: Table,
}

impl EntwiningJson {
    pub fn from_entwining(e: &Entwining) -> Self {
        EntwiningJson {
            a: PresentationJson::from_algebra(&e.algebra),
            c: PresentationJson::from_coalgebra(&e.coalgebra),
            psi: to_images(&e.psi),
        }
    }

    pub fn build(&self) -> Result<Entwining, JsonError> {
        let a = Presentation::from_json(&self.a)?.algebra()?;
        let c = Presentation::from_json(&self.c)?.coalgebra()?;
        if a.field != c.field {
            return Err(JsonError::Shape("A and C are over different fields".into()));
        }
        let n = a.dim * c.dim;
        expect_len(&self.psi, n, "psi")?;
        let psi = from_images(&a.field, &self.psi, n, "psi")?;
        Ok(Entwining::new(a, c, psi)?)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DatumJson {
    #[serde(rename = "H")]
    pub h: PresentationJson,
    #[serde(rename = "A")]
    pub a: PresentationJson,
    #[serde(rename = "C")]
    pub c: PresentationJson,
    #[serde(rename = "coactionA")]
    pub coaction_a: Table,
    #[serde(rename = "actionC")]
    pub action_c: Cube,
}

impl DatumJson {
    pub fn from_datum(d: &DoiKoppinenDatum) -> Self {
        DatumJson {
            h: PresentationJson::from_hopf(&d.hopf),
            a: PresentationJson::from_algebra(&d.algebra),
            c: PresentationJson::from_coalgebra(&d.coalgebra),
            coaction_a: to_images(&d.coaction.rho),
            action_c: d.action.action.iter().map(to_images).collect(),
        }
    }

    pub fn build(&self) -> Result<DoiKoppinenDatum, JsonError> {
        let h = Presentation::from_json(&self.h)?.hopf()?;
        let a = Presentation::from_json(&self.a)?.algebra()?;
        let c = Presentation::from_json(&self.c)?.coalgebra()?;
        if a.field != *h.field() || c.field != *h.field() {
            return Err(JsonError::Shape("H, A and C are over different fields".into()));
        }
        let coaction = comodule_from(&h.coalgebra, a.dim, &self.coaction_a)?;
        let action = module_from(&h.algebra, c.dim, &self.action_c)?;
        Ok(DoiKoppinenDatum::new(h, a, coaction, c, action)?)
    }
}

/// Lowercase hex SHA-256 of the canonical (key-sorted, compact) form of `v`.
pub fn content_hash(v: &serde_json::Value) -> String {
    let digest = Sha256::digest(v.to_string().as_bytes());
    digest.iter().map(|b| format!("{b:02x}")).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessFile {
    pub tag: Tag,
    pub data: Vec<MatrixJson>,
    pub context: BTreeMap<String, String>,
    pub verified: bool,
}

impl WitnessFile {
    pub fn new(w: &Witness, context: BTreeMap<String, String>) -> Self {
        WitnessFile {
            tag: w.tag,
            data: w.data.iter().map(Matrix::to_json).collect(),
            context,
            verified: true,
        }
    }

    pub fn witness(&self, field: &Field) -> Result<Witness, JsonError> {
        if self.data.is_empty() {
            return Err(JsonError::Missing("witness data"));
        }
        let data = self
            .data
            .iter()
            .map(|m| Matrix::from_json(field, m))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Witness { tag: self.tag, data })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::entwine::yetter_drinfeld;
    use crate::strucalg::{cyclic_table, group_algebra, sweedler_h4};

    #[test]
    fn hopf_round_trip() {
        for h in [
            group_algebra(&Field::rationals(), &cyclic_table(3)).unwrap(),
            sweedler_h4(&Field::prime(3).unwrap()),
        ] {
            let text = serde_json::to_string(&PresentationJson::from_hopf(&h)).unwrap();
            let back = Presentation::parse(&text).unwrap().hopf().unwrap();
            assert_eq!(back.algebra, h.algebra);
            assert_eq!(back.coalgebra, h.coalgebra);
            assert_eq!(back.antipode, h.antipode);
        }
    }

    #[test]
    fn kc2_literal() {
        let text = r#"{"field":{"kind":"Q"},"dim":2,
            "mult":[[["1","0"],["0","1"]],[["0","1"],["1","0"]]],
            "unit":["1","0"],
            "comult":[[["1","0"],["0","0"]],[["0","0"],["0","1"]]],
            "counit":["1","1"],
            "antipode":[["1","0"],["0","1"]]}"#;
        let h = Presentation::parse(text).unwrap().hopf().unwrap();
        assert_eq!(h, group_algebra(&Field::rationals(), &cyclic_table(2)).unwrap());
    }

    #[test]
    fn entwining_and_datum_round_trip() {
        let h = sweedler_h4(&Field::rationals());
        let e = yetter_drinfeld(&h);
        let j = EntwiningJson::from_entwining(&e);
        let back: EntwiningJson = serde_json::from_str(&serde_json::to_string(&j).unwrap()).unwrap();
        assert_eq!(back.build().unwrap(), e);

        let d = DoiKoppinenDatum::regular_relative_hopf(h);
        assert_eq!(DatumJson::from_datum(&d).build().unwrap(), d);
    }

    #[test]
    fn missing_parts_are_reported() {
        let j = PresentationJson::from_algebra(&group_algebra(&Field::rationals(), &cyclic_table(2)).unwrap().algebra);
        let p = Presentation::from_json(&j).unwrap();
        assert!(matches!(p.hopf(), Err(JsonError::Missing(_))));
    }

    #[test]
    fn bad_shape_is_rejected() {
        let text = r#"{"field":{"kind":"Q"},"dim":2,"mult":[[["1","0"]]],"unit":["1","0"]}"#;
        assert!(matches!(Presentation::parse(text), Err(JsonError::Shape(_))));
    }

    #[test]
    fn hash_ignores_key_order() {
        let a: serde_json::Value = serde_json::from_str(r#"{"x":1,"y":[2,3]}"#).unwrap();
        let b: serde_json::Value = serde_json::from_str(r#"{ "y":[2, 3], "x":1 }"#).unwrap();
        assert_eq!(content_hash(&a), content_hash(&b));
        assert_eq!(content_hash(&a).len(), 64);
    }
}
