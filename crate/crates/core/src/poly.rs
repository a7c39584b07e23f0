//! Dense univariate polynomials over a [`Field`], stored as ascending
//! coefficient vectors with no trailing zeros (the zero polynomial is `[]`).

use crate::field::{Field, FieldError, Scalar};

pub type Poly = Vec<Scalar>;

pub fn trim(field: &Field, mut p: Poly) -> Poly {
    while p.last().is_some_and(|c| field.is_zero(c)) {
        p.pop();
    }
    p
}

/// Degree of `p`, or `None` for the zero polynomial.
pub fn degree(p: &[Scalar]) -> Option<usize> {
    p.len().checked_sub(1)
}

pub fn constant(field: &Field, c: Scalar) -> Poly {
    trim(field, vec![c])
}

pub fn add(field: &Field, a: &[Scalar], b: &[Scalar]) -> Poly {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|i| match (a.get(i), b.get(i)) {
            (Some(x), Some(y)) => field.add(x, y),
            (Some(x), None) | (None, Some(x)) => x.clone(),
            (None, None) => unreachable!(),
        })
        .collect();
    trim(field, out)
}

pub fn neg(field: &Field, a: &[Scalar]) -> Poly {
    a.iter().map(|c| field.neg(c)).collect()
}

pub fn sub(field: &Field, a: &[Scalar], b: &[Scalar]) -> Poly {
    add(field, a, &neg(field, b))
}

pub fn scale(field: &Field, a: &[Scalar], c: &Scalar) -> Poly {
    trim(field, a.iter().map(|x| field.mul(x, c)).collect())
}

pub fn mul(field: &Field, a: &[Scalar], b: &[Scalar]) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![field.zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if field.is_zero(x) {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = field.add(&out[i + j], &field.mul(x, y));
        }
    }
    trim(field, out)
}

/// Euclidean division `a = q·b + r` with `deg r < deg b`.
pub fn divrem(field: &Field, a: &[Scalar], b: &[Scalar]) -> Result<(Poly, Poly), FieldError> {
    let db = degree(b).ok_or(FieldError::DivisionByZero)?;
    let lead_inv = field.inv(&b[db])?;
    let mut r: Poly = a.to_vec();
    let mut q = vec![field.zero(); a.len().saturating_sub(db)];
    while let Some(dr) = degree(&r) {
        if dr < db {
            break;
        }
        let coef = field.mul(&r[dr], &lead_inv);
        let shift = dr - db;
        for (i, c) in b.iter().enumerate() {
            r[shift + i] = field.sub(&r[shift + i], &field.mul(&coef, c));
        }
        q[shift] = coef;
        r = trim(field, r);
    }
    Ok((trim(field, q), r))
}

pub fn rem(field: &Field, a: &[Scalar], b: &[Scalar]) -> Result<Poly, FieldError> {
    divrem(field, a, b).map(|(_, r)| r)
}

/// Scales `p` so that its leading coefficient is one. Zero stays zero.
pub fn monic(field: &Field, p: &[Scalar]) -> Poly {
    match p.last() {
        None => Vec::new(),
        Some(lc) => {
            let inv = field.inv(lc).expect("leading coefficient is nonzero");
            scale(field, p, &inv)
        }
    }
}

/// Monic greatest common divisor; `gcd(0, 0) = 0`.
pub fn gcd(field: &Field, a: &[Scalar], b: &[Scalar]) -> Poly {
    let (mut x, mut y) = (a.to_vec(), b.to_vec());
    while !y.is_empty() {
        let r = rem(field, &x, &y).expect("divisor is nonzero");
        x = y;
        y = r;
    }
    monic(field, &x)
}

/// Extended Euclid: returns `(g, s, t)` with `s·a + t·b = g`, `g` monic.
pub fn ext_gcd(field: &Field, a: &[Scalar], b: &[Scalar]) -> (Poly, Poly, Poly) {
    let (mut r0, mut r1) = (a.to_vec(), b.to_vec());
    let (mut s0, mut s1) = (constant(field, field.one()), Vec::new());
    let (mut t0, mut t1) = (Vec::new(), constant(field, field.one()));
    while !r1.is_empty() {
        let (q, r) = divrem(field, &r0, &r1).expect("divisor is nonzero");
        let s = sub(field, &s0, &mul(field, &q, &s1));
        let t = sub(field, &t0, &mul(field, &q, &t1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
        t0 = std::mem::replace(&mut t1, t);
    }
    match r0.last() {
        None => (r0, s0, t0),
        Some(lc) => {
            let inv = field.inv(lc).expect("nonzero");
            (
                scale(field, &r0, &inv),
                scale(field, &s0, &inv),
                scale(field, &t0, &inv),
            )
        }
    }
}

pub fn derivative(field: &Field, p: &[Scalar]) -> Poly {
    let out = p
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| field.mul(&field.from_int(i as i64), c))
        .collect();
    trim(field, out)
}

/// Horner evaluation of `p` at `x`.
pub fn eval(field: &Field, p: &[Scalar], x: &Scalar) -> Scalar {
    p.iter()
        .rev()
        .fold(field.zero(), |acc, c| field.add(&field.mul(&acc, x), c))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: &[i64]) -> (Field, Poly) {
        let f = Field::rationals();
        let p = trim(&f, v.iter().map(|&c| f.from_int(c)).collect());
        (f, p)
    }

    #[test]
    fn divrem_reconstructs_dividend() {
        let (f, a) = q(&[1, 2, 0, 3]);
        let (_, b) = q(&[-1, 1]);
        let (quo, r) = divrem(&f, &a, &b).unwrap();
        assert_eq!(add(&f, &mul(&f, &quo, &b), &r), a);
        assert!(degree(&r).unwrap_or(0) < 1);
    }

    #[test]
    fn ext_gcd_bezout_identity() {
        let (f, a) = q(&[-2, 0, 1]);
        let (_, b) = q(&[0, 1]);
        let (g, s, t) = ext_gcd(&f, &a, &b);
        assert_eq!(g, vec![f.one()]);
        assert_eq!(add(&f, &mul(&f, &s, &a), &mul(&f, &t, &b)), g);
    }

    #[test]
    fn gcd_of_shared_factor() {
        // (x-1)(x+2) and (x-1)(x-3)
        let (f, a) = q(&[-2, 1, 1]);
        let (_, b) = q(&[3, -4, 1]);
        let (_, expected) = q(&[-1, 1]);
        assert_eq!(gcd(&f, &a, &b), expected);
    }

    #[test]
    fn derivative_in_characteristic_two_vanishes_on_squares() {
        let f = Field::prime(2).unwrap();
        let p: Poly = vec![f.one(), f.zero(), f.one()];
        assert!(derivative(&f, &p).is_empty());
    }
}
