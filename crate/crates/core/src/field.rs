//! Exact base fields: ℚ, GF(p), rational functions over GF(p) and simple
//! algebraic extensions `base[X]/(p(X))` of any of these.
//!
//! A [`Field`] is a cheap, shareable handle; [`Scalar`]s are plain values in
//! canonical form, so structural equality is value equality. All arithmetic
//! goes through the handle.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use rand::Rng;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::poly::{self, Poly};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("modulus {0} is not prime")]
    NonPrimeModulus(u64),
    #[error("minimal polynomial is not monic")]
    NonMonicMinimalPolynomial,
    #[error("extension of degree zero")]
    ZeroDegreeExtension,
    #[error("division by zero")]
    DivisionByZero,
    #[error("element is a zero divisor modulo the defining polynomial")]
    ZeroDivisor,
    #[error("cannot parse scalar `{text}`: {reason}")]
    Parse { text: String, reason: String },
}

fn parse_err(text: &str, reason: impl Into<String>) -> FieldError {
    FieldError::Parse {
        text: text.to_string(),
        reason: reason.into(),
    }
}

/// JSON description of a field.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum FieldSpec {
    #[serde(rename = "Q")]
    Rationals,
    #[serde(rename = "GFp")]
    PrimeField { p: u64 },
    #[serde(rename = "RatFunc")]
    RationalFunctions { p: u64, var: String },
    /// `minpoly` lists coefficients in ascending degree, written in the base grammar.
    #[serde(rename = "SimpleExt")]
    SimpleExtension {
        base: Box<FieldSpec>,
        minpoly: Vec<ScalarText>,
    },
}

/// A scalar as it appears in JSON: a string in the field's grammar, or a bare integer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScalarText(pub String);

impl Serialize for ScalarText {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.0)
    }
}

impl<'de> Deserialize<'de> for ScalarText {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Int(i64),
            Text(String),
        }
        Ok(match Raw::deserialize(d)? {
            Raw::Int(n) => ScalarText(n.to_string()),
            Raw::Text(s) => ScalarText(s),
        })
    }
}

impl From<&str> for ScalarText {
    fn from(s: &str) -> Self {
        ScalarText(s.to_string())
    }
}

#[derive(Debug, PartialEq, Eq, Hash)]
enum Kind {
    Rationals,
    Prime(u64),
    RatFunc {
        p: u64,
        var: String,
        coeffs: Field,
    },
    /// `modulus` is monic, ascending, of length degree + 1.
    Ext {
        base: Field,
        modulus: Poly,
    },
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Field(Arc<Kind>);

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Field({})", self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    /// Canonical residue in `[0, p)`.
    Residue(u64),
    /// Reduced fraction of polynomials over GF(p) with monic denominator.
    Fraction {
        num: Poly,
        den: Poly,
    },
    /// Coefficients of `1, α, …, α^{n-1}` over the base field.
    Ext(Vec<Scalar>),
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn mod_pow(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = ((r as u128 * b as u128) % p as u128) as u64;
        }
        b = ((b as u128 * b as u128) % p as u128) as u64;
        e >>= 1;
    }
    r
}

impl Field {
    pub fn rationals() -> Self {
        Field(Arc::new(Kind::Rationals))
    }

    pub fn prime(p: u64) -> Result<Self, FieldError> {
        if !is_prime(p) || p > u32::MAX as u64 {
            return Err(FieldError::NonPrimeModulus(p));
        }
        Ok(Field(Arc::new(Kind::Prime(p))))
    }

    pub fn rational_functions(p: u64, var: &str) -> Result<Self, FieldError> {
        let coeffs = Field::prime(p)?;
        Ok(Field(Arc::new(Kind::RatFunc {
            p,
            var: var.to_string(),
            coeffs,
        })))
    }

    /// `base[X]/(minpoly)`, with `minpoly` ascending and monic.
    pub fn simple_extension(base: &Field, minpoly: Vec<Scalar>) -> Result<Self, FieldError> {
        let modulus = poly::trim(base, minpoly);
        match modulus.last() {
            None => Err(FieldError::ZeroDegreeExtension),
            Some(_) if modulus.len() == 1 => Err(FieldError::ZeroDegreeExtension),
            Some(lc) if !base.is_one(lc) => Err(FieldError::NonMonicMinimalPolynomial),
            Some(_) => Ok(Field(Arc::new(Kind::Ext {
                base: base.clone(),
                modulus,
            }))),
        }
    }

    pub fn from_spec(spec: &FieldSpec) -> Result<Self, FieldError> {
        match spec {
            FieldSpec::Rationals => Ok(Field::rationals()),
            FieldSpec::PrimeField { p } => Field::prime(*p),
            FieldSpec::RationalFunctions { p, var } => Field::rational_functions(*p, var),
            FieldSpec::SimpleExtension { base, minpoly } => {
                let base = Field::from_spec(base)?;
                let coeffs = minpoly
                    .iter()
                    .map(|t| base.parse(&t.0))
                    .collect::<Result<Vec<_>, _>>()?;
                Field::simple_extension(&base, coeffs)
            }
        }
    }

    pub fn spec(&self) -> FieldSpec {
        match &*self.0 {
            Kind::Rationals => FieldSpec::Rationals,
            Kind::Prime(p) => FieldSpec::PrimeField { p: *p },
            Kind::RatFunc { p, var, .. } => FieldSpec::RationalFunctions {
                p: *p,
                var: var.clone(),
            },
            Kind::Ext { base, modulus } => FieldSpec::SimpleExtension {
                base: Box::new(base.spec()),
                minpoly: modulus.iter().map(|c| ScalarText(base.format(c))).collect(),
            },
        }
    }

    /// Short human-readable name, e.g. `Q`, `GF(5)`, `GF(2)(s)`, `Q[x]/(...)`.
    pub fn name(&self) -> String {
        match &*self.0 {
            Kind::Rationals => "Q".into(),
            Kind::Prime(p) => format!("GF({p})"),
            Kind::RatFunc { p, var, .. } => format!("GF({p})({var})"),
            Kind::Ext { base, modulus } => {
                let terms: Vec<String> = modulus.iter().map(|c| base.format(c)).collect();
                format!("{}[x]/[{}]", base.name(), terms.join(","))
            }
        }
    }

    pub fn characteristic(&self) -> u64 {
        match &*self.0 {
            Kind::Rationals => 0,
            Kind::Prime(p) | Kind::RatFunc { p, .. } => *p,
            Kind::Ext { base, .. } => base.characteristic(),
        }
    }

    /// Base field of a simple extension.
    pub fn base(&self) -> Option<&Field> {
        match &*self.0 {
            Kind::Ext { base, .. } => Some(base),
            _ => None,
        }
    }

    /// Defining polynomial of a simple extension (ascending, monic).
    pub fn modulus(&self) -> Option<&[Scalar]> {
        match &*self.0 {
            Kind::Ext { modulus, .. } => Some(modulus),
            _ => None,
        }
    }

    /// Degree over the base for extensions, 1 otherwise.
    pub fn extension_degree(&self) -> usize {
        match &*self.0 {
            Kind::Ext { modulus, .. } => modulus.len() - 1,
            _ => 1,
        }
    }

    /// The class of X in an extension, or the variable of a rational function field.
    pub fn generator(&self) -> Option<Scalar> {
        match &*self.0 {
            Kind::Ext { base, modulus } => {
                let mut v = vec![base.zero(); modulus.len() - 1];
                if v.len() == 1 {
                    // X ≡ -c0 in a degree-one extension
                    v[0] = base.neg(&modulus[0]);
                } else {
                    v[1] = base.one();
                }
                Some(Scalar::Ext(v))
            }
            Kind::RatFunc { coeffs, .. } => Some(Scalar::Fraction {
                num: vec![coeffs.zero(), coeffs.one()],
                den: vec![coeffs.one()],
            }),
            _ => None,
        }
    }

    /// Image of a base-field scalar in a simple extension.
    pub fn embed(&self, c: &Scalar) -> Scalar {
        match &*self.0 {
            Kind::Ext { base, modulus } => {
                let mut v = vec![base.zero(); modulus.len() - 1];
                v[0] = c.clone();
                Scalar::Ext(v)
            }
            _ => c.clone(),
        }
    }

    pub fn zero(&self) -> Scalar {
        match &*self.0 {
            Kind::Rationals => Scalar::Rational(BigRational::zero()),
            Kind::Prime(_) => Scalar::Residue(0),
            Kind::RatFunc { coeffs, .. } => Scalar::Fraction {
                num: Vec::new(),
                den: vec![coeffs.one()],
            },
            Kind::Ext { base, modulus } => Scalar::Ext(vec![base.zero(); modulus.len() - 1]),
        }
    }

    pub fn one(&self) -> Scalar {
        self.from_int(1)
    }

    pub fn from_int(&self, n: i64) -> Scalar {
        self.from_bigint(&BigInt::from(n))
    }

    pub fn from_bigint(&self, n: &BigInt) -> Scalar {
        match &*self.0 {
            Kind::Rationals => Scalar::Rational(BigRational::from_integer(n.clone())),
            Kind::Prime(p) => {
                let r = n.mod_floor(&BigInt::from(*p));
                Scalar::Residue(r.to_u64().expect("residue fits"))
            }
            Kind::RatFunc { coeffs, .. } => Scalar::Fraction {
                num: poly::constant(coeffs, coeffs.from_bigint(n)),
                den: vec![coeffs.one()],
            },
            Kind::Ext { base, .. } => self.embed(&base.from_bigint(n)),
        }
    }

    pub fn from_rational(&self, q: &BigRational) -> Result<Scalar, FieldError> {
        let num = self.from_bigint(q.numer());
        let den = self.from_bigint(q.denom());
        self.div(&num, &den)
    }

    pub fn is_zero(&self, a: &Scalar) -> bool {
        match a {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Residue(r) => *r == 0,
            Scalar::Fraction { num, .. } => num.is_empty(),
            Scalar::Ext(v) => {
                let base = self.base().expect("extension scalar in extension field");
                v.iter().all(|c| base.is_zero(c))
            }
        }
    }

    pub fn is_one(&self, a: &Scalar) -> bool {
        *a == self.one()
    }

    fn normalize_fraction(coeffs: &Field, num: Poly, den: Poly) -> Result<Scalar, FieldError> {
        if den.is_empty() {
            return Err(FieldError::DivisionByZero);
        }
        if num.is_empty() {
            return Ok(Scalar::Fraction {
                num,
                den: vec![coeffs.one()],
            });
        }
        let g = poly::gcd(coeffs, &num, &den);
        let num = poly::divrem(coeffs, &num, &g)?.0;
        let den = poly::divrem(coeffs, &den, &g)?.0;
        let lc_inv = coeffs.inv(den.last().expect("nonzero"))?;
        Ok(Scalar::Fraction {
            num: poly::scale(coeffs, &num, &lc_inv),
            den: poly::scale(coeffs, &den, &lc_inv),
        })
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (&*self.0, a, b) {
            (Kind::Rationals, Scalar::Rational(x), Scalar::Rational(y)) => Scalar::Rational(x + y),
            (Kind::Prime(p), Scalar::Residue(x), Scalar::Residue(y)) => {
                Scalar::Residue(((*x as u128 + *y as u128) % *p as u128) as u64)
            }
            (
                Kind::RatFunc { coeffs, .. },
                Scalar::Fraction { num: n1, den: d1 },
                Scalar::Fraction { num: n2, den: d2 },
            ) => {
                if d1 == d2 {
                    let num = poly::add(coeffs, n1, n2);
                    return Field::normalize_fraction(coeffs, num, d1.clone()).expect("nonzero den");
                }
                let num = poly::add(coeffs, &poly::mul(coeffs, n1, d2), &poly::mul(coeffs, n2, d1));
                let den = poly::mul(coeffs, d1, d2);
                Field::normalize_fraction(coeffs, num, den).expect("nonzero den")
            }
            (Kind::Ext { base, .. }, Scalar::Ext(x), Scalar::Ext(y)) => {
                Scalar::Ext(x.iter().zip(y).map(|(u, v)| base.add(u, v)).collect())
            }
            _ => panic!("scalar does not belong to {}", self.name()),
        }
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        match (&*self.0, a) {
            (Kind::Rationals, Scalar::Rational(x)) => Scalar::Rational(-x),
            (Kind::Prime(p), Scalar::Residue(x)) => Scalar::Residue(if *x == 0 { 0 } else { p - x }),
            (Kind::RatFunc { coeffs, .. }, Scalar::Fraction { num, den }) => Scalar::Fraction {
                num: poly::neg(coeffs, num),
                den: den.clone(),
            },
            (Kind::Ext { base, .. }, Scalar::Ext(x)) => Scalar::Ext(x.iter().map(|u| base.neg(u)).collect()),
            _ => panic!("scalar does not belong to {}", self.name()),
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (&*self.0, a, b) {
            (Kind::Rationals, Scalar::Rational(x), Scalar::Rational(y)) => {
                if x.is_zero() || y.is_zero() {
                    return Scalar::Rational(BigRational::zero());
                }
                Scalar::Rational(x * y)
            }
            (Kind::Prime(p), Scalar::Residue(x), Scalar::Residue(y)) => {
                Scalar::Residue(((*x as u128 * *y as u128) % *p as u128) as u64)
            }
            (
                Kind::RatFunc { coeffs, .. },
                Scalar::Fraction { num: n1, den: d1 },
                Scalar::Fraction { num: n2, den: d2 },
            ) => {
                if n1.is_empty() || n2.is_empty() {
                    return self.zero();
                }
                let num = poly::mul(coeffs, n1, n2);
                let den = poly::mul(coeffs, d1, d2);
                Field::normalize_fraction(coeffs, num, den).expect("nonzero den")
            }
            (Kind::Ext { base, modulus }, Scalar::Ext(x), Scalar::Ext(y)) => {
                let prod = poly::mul(base, x, y);
                let r = poly::rem(base, &prod, modulus).expect("monic modulus");
                self.pad_ext(base, modulus, r)
            }
            _ => panic!("scalar does not belong to {}", self.name()),
        }
    }

    fn pad_ext(&self, base: &Field, modulus: &[Scalar], mut r: Poly) -> Scalar {
        r.resize(modulus.len() - 1, base.zero());
        Scalar::Ext(r)
    }

    pub fn inv(&self, a: &Scalar) -> Result<Scalar, FieldError> {
        if self.is_zero(a) {
            return Err(FieldError::DivisionByZero);
        }
        Ok(match (&*self.0, a) {
            (Kind::Rationals, Scalar::Rational(x)) => Scalar::Rational(x.recip()),
            (Kind::Prime(p), Scalar::Residue(x)) => Scalar::Residue(mod_pow(*x, p - 2, *p)),
            (Kind::RatFunc { coeffs, .. }, Scalar::Fraction { num, den }) => {
                Field::normalize_fraction(coeffs, den.clone(), num.clone())?
            }
            (Kind::Ext { base, modulus }, Scalar::Ext(x)) => {
                let x = poly::trim(base, x.clone());
                let (g, s, _) = poly::ext_gcd(base, &x, modulus);
                if g.len() != 1 {
                    return Err(FieldError::ZeroDivisor);
                }
                let r = poly::rem(base, &s, modulus)?;
                self.pad_ext(base, modulus, r)
            }
            _ => panic!("scalar does not belong to {}", self.name()),
        })
    }

    pub fn div(&self, a: &Scalar, b: &Scalar) -> Result<Scalar, FieldError> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    /// `a^e` for any integer exponent; negative exponents need `a ≠ 0`.
    pub fn pow(&self, a: &Scalar, e: i64) -> Result<Scalar, FieldError> {
        let mut base = if e < 0 { self.inv(a)? } else { a.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        Ok(acc)
    }

    /// Small random element, used by randomized checks.
    pub fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Scalar {
        match &*self.0 {
            Kind::Rationals => {
                let n = rng.gen_range(-6i64..=6);
                let d = rng.gen_range(1i64..=4);
                Scalar::Rational(BigRational::new(n.into(), d.into()))
            }
            Kind::Prime(p) => Scalar::Residue(rng.gen_range(0..*p)),
            Kind::RatFunc { coeffs, .. } => {
                let num: Poly = (0..rng.gen_range(0..=3)).map(|_| coeffs.random(rng)).collect();
                let mut den: Poly = (0..rng.gen_range(0..=1)).map(|_| coeffs.random(rng)).collect();
                den.push(coeffs.one());
                Field::normalize_fraction(coeffs, poly::trim(coeffs, num), den).expect("monic den")
            }
            Kind::Ext { base, modulus } => Scalar::Ext((0..modulus.len() - 1).map(|_| base.random(rng)).collect()),
        }
    }

    /// Random nonzero element.
    pub fn random_nonzero<R: Rng + ?Sized>(&self, rng: &mut R) -> Scalar {
        loop {
            let x = self.random(rng);
            if !self.is_zero(&x) {
                return x;
            }
        }
    }

    /// Canonical text form; `parse(format(a)) == a`.
    pub fn format(&self, a: &Scalar) -> String {
        match (&*self.0, a) {
            (Kind::Rationals, Scalar::Rational(q)) => {
                if q.is_integer() {
                    q.numer().to_string()
                } else {
                    format!("{}/{}", q.numer(), q.denom())
                }
            }
            (Kind::Prime(_), Scalar::Residue(r)) => r.to_string(),
            (Kind::RatFunc { var, .. }, Scalar::Fraction { num, den }) => {
                format!("({})/({})", format_fp_poly(num, var), format_fp_poly(den, var))
            }
            (Kind::Ext { base, .. }, Scalar::Ext(v)) => {
                let parts: Vec<String> = v.iter().map(|c| base.format(c)).collect();
                format!("[{}]", parts.join(","))
            }
            _ => panic!("scalar does not belong to {}", self.name()),
        }
    }

    pub fn parse(&self, text: &str) -> Result<Scalar, FieldError> {
        let t = text.trim();
        match &*self.0 {
            Kind::Rationals => parse_rational(t).map(Scalar::Rational),
            Kind::Prime(_) => {
                let q = parse_rational(t)?;
                self.from_rational(&q)
                    .map_err(|_| parse_err(t, "denominator vanishes modulo p"))
            }
            Kind::RatFunc { coeffs, var, .. } => {
                let (num, den) = split_fraction(t)?;
                let num = parse_fp_poly(coeffs, num, var)?;
                let den = match den {
                    Some(d) => parse_fp_poly(coeffs, d, var)?,
                    None => vec![coeffs.one()],
                };
                Field::normalize_fraction(coeffs, num, den).map_err(|_| parse_err(t, "zero denominator"))
            }
            Kind::Ext { base, modulus } => {
                let n = modulus.len() - 1;
                if let Some(inner) = t.strip_prefix('[').and_then(|s| s.strip_suffix(']')) {
                    let parts = split_top_level(inner);
                    if parts.len() > n {
                        return Err(parse_err(t, format!("more than {n} coefficients")));
                    }
                    let mut coeffs = parts
                        .iter()
                        .filter(|s| !s.trim().is_empty())
                        .map(|s| base.parse(s))
                        .collect::<Result<Vec<_>, _>>()?;
                    coeffs.resize(n, base.zero());
                    Ok(Scalar::Ext(coeffs))
                } else {
                    Ok(self.embed(&base.parse(t)?))
                }
            }
        }
    }
}

fn parse_rational(t: &str) -> Result<BigRational, FieldError> {
    let int = |s: &str| -> Result<BigInt, FieldError> {
        s.trim()
            .trim_start_matches('+')
            .parse::<BigInt>()
            .map_err(|e| parse_err(t, e.to_string()))
    };
    match t.split_once('/') {
        Some((n, d)) => {
            let d = int(d)?;
            if d.is_zero() {
                return Err(parse_err(t, "zero denominator"));
            }
            Ok(BigRational::new(int(n)?, d))
        }
        None => Ok(BigRational::from_integer(int(t)?)),
    }
}

/// Splits on commas that are not nested inside brackets or parentheses.
fn split_top_level(s: &str) -> Vec<&str> {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, ch) in s.char_indices() {
        match ch {
            '[' | '(' => depth += 1,
            ']' | ')' => depth -= 1,
            ',' if depth == 0 => {
                parts.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push(&s[start..]);
    parts
}

/// `(num)/(den)`, `(num)` or a bare polynomial.
fn split_fraction(t: &str) -> Result<(&str, Option<&str>), FieldError> {
    if !t.starts_with('(') {
        return Ok((t, None));
    }
    let mut depth = 0;
    for (i, ch) in t.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth == 0 {
                    let num = &t[1..i];
                    let rest = t[i + 1..].trim();
                    if rest.is_empty() {
                        return Ok((num, None));
                    }
                    let den = rest
                        .strip_prefix('/')
                        .map(str::trim)
                        .ok_or_else(|| parse_err(t, "expected `/` after numerator"))?;
                    let den = den.strip_prefix('(').and_then(|d| d.strip_suffix(')')).unwrap_or(den);
                    return Ok((num, Some(den)));
                }
            }
            _ => {}
        }
    }
    Err(parse_err(t, "unbalanced parentheses"))
}

fn parse_fp_poly(coeffs: &Field, text: &str, var: &str) -> Result<Poly, FieldError> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(parse_err(text, "empty polynomial"));
    }
    let mut terms: Vec<(bool, String)> = Vec::new();
    let mut cur = String::new();
    let mut negative = false;
    for (i, ch) in s.chars().enumerate() {
        if (ch == '+' || ch == '-') && i > 0 && !cur.ends_with('^') {
            terms.push((negative, std::mem::take(&mut cur)));
            negative = ch == '-';
        } else if (ch == '+' || ch == '-') && i == 0 {
            negative = ch == '-';
        } else {
            cur.push(ch);
        }
    }
    terms.push((negative, cur));
    let mut out: Poly = Vec::new();
    for (negative, term) in terms {
        if term.is_empty() {
            return Err(parse_err(text, "empty term"));
        }
        let (coef, exp) = match term.find(var) {
            None => (term.as_str(), 0usize),
            Some(pos) => {
                let coef = term[..pos].trim_end_matches('*');
                let rest = &term[pos + var.len()..];
                let exp = if rest.is_empty() {
                    1
                } else {
                    rest.strip_prefix('^')
                        .and_then(|e| e.parse::<usize>().ok())
                        .ok_or_else(|| parse_err(text, format!("bad exponent in `{term}`")))?
                };
                (coef, exp)
            }
        };
        let mut c = if coef.is_empty() {
            coeffs.one()
        } else {
            coef.parse::<BigInt>()
                .map(|n| coeffs.from_bigint(&n))
                .map_err(|_| parse_err(text, format!("bad coefficient in `{term}`")))?
        };
        if negative {
            c = coeffs.neg(&c);
        }
        if out.len() <= exp {
            out.resize(exp + 1, coeffs.zero());
        }
        out[exp] = coeffs.add(&out[exp], &c);
    }
    Ok(poly::trim(coeffs, out))
}

fn format_fp_poly(p: &[Scalar], var: &str) -> String {
    if p.is_empty() {
        return "0".into();
    }
    let mut terms = Vec::new();
    for (k, c) in p.iter().enumerate().rev() {
        let Scalar::Residue(c) = c else {
            unreachable!("coefficients live in GF(p)")
        };
        if *c == 0 {
            continue;
        }
        let mono = match k {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{k}"),
        };
        terms.push(match (k, *c) {
            (0, c) => c.to_string(),
            (_, 1) => mono,
            (_, c) => format!("{c}*{mono}"),
        });
    }
    terms.join("+")
}

impl Scalar {
    /// Rational value, if this is a rational scalar.
    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rational(q) => Some(q),
            _ => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn sqrt2() -> Field {
        let q = Field::rationals();
        Field::simple_extension(&q, vec![q.from_int(-2), q.zero(), q.one()]).unwrap()
    }

    #[test]
    fn prime_field_addition_wraps() {
        let f = Field::prime(5).unwrap();
        assert_eq!(f.add(&f.from_int(3), &f.from_int(4)), f.from_int(2));
    }

    #[test]
    fn rejects_composite_modulus() {
        assert_eq!(Field::prime(6).unwrap_err(), FieldError::NonPrimeModulus(6));
        assert!(Field::rational_functions(9, "u").is_err());
    }

    #[test]
    fn extension_validation() {
        let q = Field::rationals();
        assert_eq!(
            Field::simple_extension(&q, vec![q.from_int(-2), q.from_int(2)]).unwrap_err(),
            FieldError::NonMonicMinimalPolynomial
        );
        assert_eq!(
            Field::simple_extension(&q, vec![q.one()]).unwrap_err(),
            FieldError::ZeroDegreeExtension
        );
    }

    #[test]
    fn sqrt_two_squares_to_two() {
        let k = sqrt2();
        let a = k.generator().unwrap();
        assert_eq!(k.mul(&a, &a), k.from_int(2));
    }

    #[test]
    fn inverses() {
        let q = Field::rationals();
        assert_eq!(q.inv(&q.parse("2/3").unwrap()).unwrap(), q.parse("3/2").unwrap());
        let f5 = Field::prime(5).unwrap();
        assert_eq!(f5.inv(&f5.from_int(2)).unwrap(), f5.from_int(3));
        let k = sqrt2();
        let a = k.generator().unwrap();
        // α⁻¹ = α/2, checked by multiplying back
        let inv = k.inv(&a).unwrap();
        assert_eq!(inv, k.parse("[0,1/2]").unwrap());
        assert_eq!(k.mul(&a, &inv), k.one());
        assert_eq!(q.inv(&q.zero()).unwrap_err(), FieldError::DivisionByZero);
    }

    #[test]
    fn rational_function_cancels_common_factor() {
        let f = Field::rational_functions(2, "u").unwrap();
        let x = f.parse("(u^2+u)/(u)").unwrap();
        assert_eq!(x, f.parse("u+1").unwrap());
        assert_eq!(f.format(&x), "(u+1)/(1)");
    }

    #[test]
    fn denominators_are_monic() {
        let f = Field::rational_functions(3, "t").unwrap();
        let x = f.parse("(1)/(2*t+2)").unwrap();
        let Scalar::Fraction { den, .. } = &x else { panic!() };
        assert_eq!(den.last(), Some(&Scalar::Residue(1)));
        assert_eq!(f.format(&x), "(2)/(t+1)");
    }

    #[test]
    fn inseparable_catalog_field_frobenius() {
        // L = K[x]/(x^2 - s) with K = GF(2)(s): α² = s
        let k = Field::rational_functions(2, "s").unwrap();
        let s = k.generator().unwrap();
        let l = Field::simple_extension(&k, vec![k.neg(&s), k.zero(), k.one()]).unwrap();
        let alpha = l.generator().unwrap();
        assert_eq!(l.mul(&alpha, &alpha), l.embed(&s));
        let p = l.modulus().unwrap();
        assert!(poly::derivative(&k, p).is_empty());
    }

    #[test]
    fn parse_accepts_json_style_integers_and_negatives() {
        let f = Field::prime(7).unwrap();
        assert_eq!(f.parse("-1").unwrap(), f.from_int(6));
        assert_eq!(f.parse("1/2").unwrap(), f.from_int(4));
        let r = Field::rational_functions(5, "u").unwrap();
        assert_eq!(r.parse("-u+1").unwrap(), r.parse("4*u+1").unwrap());
    }

    #[test]
    fn spec_roundtrip() {
        let k = sqrt2();
        assert_eq!(Field::from_spec(&k.spec()).unwrap(), k);
        let json = r#"{"kind":"SimpleExt","base":{"kind":"Q"},"minpoly":[-2,0,1]}"#;
        let spec: FieldSpec = serde_json::from_str(json).unwrap();
        assert_eq!(Field::from_spec(&spec).unwrap(), k);
    }

    #[test]
    fn nested_extension_text_roundtrip() {
        let k = sqrt2();
        let a = k.generator().unwrap();
        // k(√2)[y]/(y^2 - √2)
        let l = Field::simple_extension(&k, vec![k.neg(&a), k.zero(), k.one()]).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..50 {
            let x = l.random(&mut rng);
            assert_eq!(l.parse(&l.format(&x)).unwrap(), x);
        }
        let y = l.generator().unwrap();
        let y4 = l.pow(&y, 4).unwrap();
        assert_eq!(y4, l.from_int(2));
    }
}
