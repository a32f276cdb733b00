//! Exact ground-field arithmetic: arbitrary-precision rationals and
//! cyclotomic extensions Q(zeta_m) stored as residues modulo the m-th
//! cyclotomic polynomial.
//!
//! Every value is canonical after construction: rationals are reduced with a
//! positive denominator (num-rational guarantees this), cyclotomic coefficient
//! vectors are reduced modulo Phi_m and padded to length deg(Phi_m). Equal
//! values therefore have identical representations and `==` is semantic
//! equality.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

/// Selects the ground field: Q, or Q(zeta_m) for a fixed order m >= 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Rational,
    Cyclotomic { order: u32 },
}

impl FieldSpec {
    pub fn cyclotomic(order: u32) -> Result<FieldSpec> {
        if order == 0 {
            return Err(Error::BadOrder { order, reason: "cyclotomic order must be >= 1" });
        }
        Ok(FieldSpec::Cyclotomic { order })
    }

    /// Degree of the field over Q: 1 for the rationals, deg(Phi_m) otherwise.
    pub fn degree(&self) -> usize {
        match self {
            FieldSpec::Rational => 1,
            FieldSpec::Cyclotomic { order } => cyclotomic_polynomial(*order).degree(),
        }
    }

    pub fn zero(&self) -> Scalar {
        match self {
            FieldSpec::Rational => Scalar::Rational(Rational::zero()),
            FieldSpec::Cyclotomic { order } => {
                Scalar::Cyclotomic(CycElem { order: *order, coeffs: vec![Rational::zero(); self.degree()] })
            }
        }
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        self.from_ratio(v, 1)
    }

    /// Embeds the rational n/d into the field. Panics if d == 0.
    pub fn from_ratio(&self, n: i64, d: i64) -> Scalar {
        assert!(d != 0, "from_ratio: zero denominator");
        let r = Rational::new(BigInt::from(n), BigInt::from(d));
        self.from_rational(r)
    }

    pub fn from_rational(&self, r: Rational) -> Scalar {
        match self {
            FieldSpec::Rational => Scalar::Rational(r),
            FieldSpec::Cyclotomic { order } => {
                let deg = self.degree();
                let mut coeffs = vec![Rational::zero(); deg];
                coeffs[0] = r;
                Scalar::Cyclotomic(CycElem { order: *order, coeffs })
            }
        }
    }

    /// Short label used in error messages and CLI arguments, e.g. "cyclotomic:4".
    pub fn label(&self) -> String {
        match self {
            FieldSpec::Rational => "rational".to_string(),
            FieldSpec::Cyclotomic { order } => format!("cyclotomic:{order}"),
        }
    }
}

/// An element of the selected ground field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Scalar {
    Rational(Rational),
    Cyclotomic(CycElem),
}

/// A residue in Q[t]/(Phi_m(t)). `coeffs` always has length deg(Phi_m).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycElem {
    order: u32,
    coeffs: Vec<Rational>,
}

impl CycElem {
    /// Reduces an arbitrary coefficient vector modulo Phi_m and pads to degree.
    fn reduced(order: u32, raw: Vec<Rational>) -> CycElem {
        let phi = cyclotomic_polynomial(order);
        let (_, rem) = UPoly::from_coeffs(raw).divrem(&phi);
        let mut coeffs = rem.0;
        coeffs.resize(phi.degree(), Rational::zero());
        CycElem { order, coeffs }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rational::is_zero)
    }

    fn zip_with(&self, other: &CycElem, f: impl Fn(&Rational, &Rational) -> Rational) -> CycElem {
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| f(a, b)).collect();
        CycElem { order: self.order, coeffs }
    }

    fn mul(&self, other: &CycElem) -> CycElem {
        let prod = UPoly::from_coeffs(self.coeffs.clone()).mul(&UPoly::from_coeffs(other.coeffs.clone()));
        CycElem::reduced(self.order, prod.0)
    }

    /// Inverse modulo Phi_m via the extended Euclidean algorithm. Phi_m is
    /// irreducible over Q, so every nonzero residue is invertible.
    fn inv(&self) -> Result<CycElem> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let phi = cyclotomic_polynomial(self.order);
        let mut r0 = phi.clone();
        let mut r1 = UPoly::from_coeffs(self.coeffs.clone());
        let mut t0 = UPoly::zero();
        let mut t1 = UPoly::one();
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1);
            let t = t0.sub(&q.mul(&t1));
            r0 = r1;
            r1 = r;
            t0 = t1;
            t1 = t;
        }
        // r0 is a nonzero constant gcd; scale t0 by its inverse.
        debug_assert_eq!(r0.degree(), 0, "Phi_m must be coprime to any nonzero residue");
        let c = r0.0[0].clone();
        let coeffs = t0.0.into_iter().map(|a| a / c.clone()).collect();
        Ok(CycElem::reduced(self.order, coeffs))
    }
}

impl Scalar {
    pub fn field_spec(&self) -> FieldSpec {
        match self {
            Scalar::Rational(_) => FieldSpec::Rational,
            Scalar::Cyclotomic(c) => FieldSpec::Cyclotomic { order: c.order },
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Cyclotomic(c) => c.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Cyclotomic(c) => {
                c.coeffs[0].is_one() && c.coeffs[1..].iter().all(Rational::is_zero)
            }
        }
    }

    /// True for rational values strictly below zero. Cyclotomic values carry
    /// no canonical sign and always report false.
    pub fn is_negative_rational(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_negative(),
            Scalar::Cyclotomic(_) => false,
        }
    }

    fn check_same_field(&self, other: &Scalar) -> Result<()> {
        if self.field_spec() == other.field_spec() {
            Ok(())
        } else {
            Err(Error::FieldMismatch {
                left: self.field_spec().label(),
                right: other.field_spec().label(),
            })
        }
    }

    pub fn try_add(&self, other: &Scalar) -> Result<Scalar> {
        self.check_same_field(other)?;
        Ok(match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Cyclotomic(a), Scalar::Cyclotomic(b)) => {
                Scalar::Cyclotomic(a.zip_with(b, |x, y| x + y))
            }
            _ => unreachable!(),
        })
    }

    pub fn try_sub(&self, other: &Scalar) -> Result<Scalar> {
        self.check_same_field(other)?;
        Ok(match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a - b),
            (Scalar::Cyclotomic(a), Scalar::Cyclotomic(b)) => {
                Scalar::Cyclotomic(a.zip_with(b, |x, y| x - y))
            }
            _ => unreachable!(),
        })
    }

    pub fn try_mul(&self, other: &Scalar) -> Result<Scalar> {
        self.check_same_field(other)?;
        Ok(match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Cyclotomic(a), Scalar::Cyclotomic(b)) => Scalar::Cyclotomic(a.mul(b)),
            _ => unreachable!(),
        })
    }

    pub fn try_div(&self, other: &Scalar) -> Result<Scalar> {
        self.try_mul(&other.try_inv()?)
    }

    pub fn try_inv(&self) -> Result<Scalar> {
        match self {
            Scalar::Rational(r) => {
                if r.is_zero() {
                    Err(Error::DivisionByZero)
                } else {
                    Ok(Scalar::Rational(r.recip()))
                }
            }
            Scalar::Cyclotomic(c) => Ok(Scalar::Cyclotomic(c.inv()?)),
        }
    }

    pub fn negated(&self) -> Scalar {
        match self {
            Scalar::Rational(r) => Scalar::Rational(-r),
            Scalar::Cyclotomic(c) => {
                Scalar::Cyclotomic(CycElem { order: c.order, coeffs: c.coeffs.iter().map(|a| -a).collect() })
            }
        }
    }

    /// Integer power; negative exponents invert first (error on zero base).
    pub fn pow(&self, e: i64) -> Result<Scalar> {
        let field = self.field_spec();
        if e == 0 {
            return Ok(field.one());
        }
        let base = if e < 0 { self.try_inv()? } else { self.clone() };
        let mut acc = field.one();
        for _ in 0..e.unsigned_abs() {
            acc = acc.try_mul(&base)?;
        }
        Ok(acc)
    }

    /// Embeds the value into `target`. Only the identity embedding and
    /// rational -> cyclotomic are supported; everything else is a field
    /// mismatch.
    pub fn embed(&self, target: &FieldSpec) -> Result<Scalar> {
        match (self, target) {
            (Scalar::Rational(r), FieldSpec::Rational) => Ok(Scalar::Rational(r.clone())),
            (Scalar::Rational(r), t @ FieldSpec::Cyclotomic { .. }) => Ok(t.from_rational(r.clone())),
            (Scalar::Cyclotomic(c), FieldSpec::Cyclotomic { order }) if c.order == *order => {
                Ok(self.clone())
            }
            _ => Err(Error::FieldMismatch {
                left: self.field_spec().label(),
                right: target.label(),
            }),
        }
    }

    /// Parses the canonical text encoding in the context of `field`:
    /// rationals as "p/q" or "p" (embedded when the field is cyclotomic),
    /// cyclotomic values as "[c0,c1,...;m]" with rational entries.
    pub fn from_str_in(s: &str, field: &FieldSpec) -> Result<Scalar> {
        let s = s.trim();
        if let Some(body) = s.strip_prefix('[') {
            let body = body
                .strip_suffix(']')
                .ok_or_else(|| Error::Parse { pos: s.len(), msg: "missing ']'".into() })?;
            let (entries, order) = body.split_once(';').ok_or_else(|| Error::Parse {
                pos: 0,
                msg: "cyclotomic literal needs ';order'".into(),
            })?;
            let order: u32 = order.trim().parse().map_err(|_| Error::Parse {
                pos: 0,
                msg: format!("bad cyclotomic order '{}'", order.trim()),
            })?;
            if order == 0 {
                return Err(Error::BadOrder { order, reason: "cyclotomic order must be >= 1" });
            }
            match field {
                FieldSpec::Cyclotomic { order: m } if *m == order => {}
                _ => {
                    return Err(Error::FieldMismatch {
                        left: format!("cyclotomic:{order}"),
                        right: field.label(),
                    })
                }
            }
            let coeffs = entries
                .split(',')
                .map(parse_rational)
                .collect::<Result<Vec<_>>>()?;
            Ok(Scalar::Cyclotomic(CycElem::reduced(order, coeffs)))
        } else {
            let r = parse_rational(s)?;
            Ok(field.from_rational(r))
        }
    }
}

/// Parses "p", "-p", or "p/q" into a reduced rational.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let (num_str, den_str) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let numer = BigInt::from_str(num_str)
        .map_err(|_| Error::Parse { pos: 0, msg: format!("bad integer '{num_str}'") })?;
    let denom = BigInt::from_str(den_str)
        .map_err(|_| Error::Parse { pos: 0, msg: format!("bad integer '{den_str}'") })?;
    if denom.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(Rational::new(numer, denom))
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => write!(f, "{r}"),
            Scalar::Cyclotomic(c) => {
                write!(f, "[")?;
                for (k, a) in c.coeffs.iter().enumerate() {
                    if k > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{a}")?;
                }
                write!(f, ";{}]", c.order)
            }
        }
    }
}

// Operator impls for references; they panic on mixed ground fields, which the
// container types rule out at construction time. Use try_* at trust
// boundaries.
impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        self.try_add(rhs).expect("scalar field mismatch")
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self.try_sub(rhs).expect("scalar field mismatch")
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        self.try_mul(rhs).expect("scalar field mismatch")
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.negated()
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = self.try_add(rhs).expect("scalar field mismatch");
    }
}

/// The canonical generator zeta_m of Q(zeta_m): the residue class of t.
/// Requires m >= 2.
pub fn primitive_root(m: u32) -> Result<Scalar> {
    if m < 2 {
        return Err(Error::BadOrder { order: m, reason: "primitive root needs m >= 2" });
    }
    Ok(Scalar::Cyclotomic(CycElem::reduced(m, vec![Rational::zero(), Rational::one()])))
}

// ---- Cyclotomic polynomials ----

/// Dense univariate polynomial over Q, ascending coefficients, no trailing
/// zeros (the zero polynomial is the empty vector).
#[derive(Debug, Clone, PartialEq, Eq)]
struct UPoly(Vec<Rational>);

impl UPoly {
    fn zero() -> UPoly {
        UPoly(Vec::new())
    }

    fn one() -> UPoly {
        UPoly(vec![Rational::one()])
    }

    fn from_coeffs(mut coeffs: Vec<Rational>) -> UPoly {
        while coeffs.last().map_or(false, Rational::is_zero) {
            coeffs.pop();
        }
        UPoly(coeffs)
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree, with the convention deg 0 = 0 for the zero polynomial.
    fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    fn sub(&self, other: &UPoly) -> UPoly {
        let n = self.0.len().max(other.0.len());
        let mut coeffs = vec![Rational::zero(); n];
        for (k, a) in self.0.iter().enumerate() {
            coeffs[k] += a;
        }
        for (k, b) in other.0.iter().enumerate() {
            coeffs[k] -= b;
        }
        UPoly::from_coeffs(coeffs)
    }

    fn mul(&self, other: &UPoly) -> UPoly {
        if self.is_zero() || other.is_zero() {
            return UPoly::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                coeffs[i + j] += &(a * b);
            }
        }
        UPoly::from_coeffs(coeffs)
    }

    /// Euclidean division; the divisor must be nonzero.
    fn divrem(&self, divisor: &UPoly) -> (UPoly, UPoly) {
        assert!(!divisor.is_zero(), "UPoly::divrem: zero divisor");
        let dd = divisor.degree();
        let lead = divisor.0[dd].clone();
        let mut rem = self.0.clone();
        // self is stored trimmed, so the last entry of rem is nonzero.
        if rem.len() < dd + 1 {
            return (UPoly::zero(), UPoly(rem));
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        while rem.len() >= dd + 1 {
            let k = rem.len() - 1;
            let coeff = rem[k].clone() / lead.clone();
            quot[k - dd] = coeff.clone();
            for (j, b) in divisor.0.iter().enumerate() {
                let delta = &coeff * b;
                rem[k - dd + j] -= delta;
            }
            // the top coefficient cancels exactly
            rem.pop();
            while rem.last().map_or(false, Rational::is_zero) {
                rem.pop();
            }
        }
        (UPoly::from_coeffs(quot), UPoly::from_coeffs(rem))
    }
}

/// Phi_m over Q, by dividing t^m - 1 by the cyclotomic polynomials of the
/// proper divisors of m.
fn cyclotomic_polynomial(m: u32) -> UPoly {
    fn go(m: u32, memo: &mut HashMap<u32, UPoly>) -> UPoly {
        if let Some(p) = memo.get(&m) {
            return p.clone();
        }
        // t^m - 1
        let mut coeffs = vec![Rational::zero(); m as usize + 1];
        coeffs[0] = -Rational::one();
        coeffs[m as usize] = Rational::one();
        let mut p = UPoly::from_coeffs(coeffs);
        for d in 1..m {
            if m % d == 0 {
                let phi_d = go(d, memo);
                let (q, r) = p.divrem(&phi_d);
                debug_assert!(r.is_zero(), "Phi_d must divide t^m - 1 exactly");
                p = q;
            }
        }
        memo.insert(m, p.clone());
        p
    }
    assert!(m >= 1, "cyclotomic polynomial needs m >= 1");
    go(m, &mut HashMap::new())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> Scalar {
        FieldSpec::Rational.from_ratio(n, d)
    }

    #[test]
    fn rational_add_reduces() {
        let sum = q(1, 2).try_add(&q(1, 3)).unwrap();
        assert_eq!(sum, q(5, 6));
        assert_eq!(sum.to_string(), "5/6");
    }

    #[test]
    fn zeta4_squares_to_minus_one() {
        let z = primitive_root(4).unwrap();
        let sq = z.try_mul(&z).unwrap();
        let field = FieldSpec::Cyclotomic { order: 4 };
        assert_eq!(sq, field.from_i64(-1));
        assert_eq!(sq.to_string(), "[-1,0;4]");
    }

    #[test]
    fn zeta3_satisfies_phi3() {
        // zeta^2 + zeta + 1 = 0
        let z = primitive_root(3).unwrap();
        let field = FieldSpec::Cyclotomic { order: 3 };
        let lhs = z.pow(2).unwrap().try_add(&z).unwrap().try_add(&field.one()).unwrap();
        assert!(lhs.is_zero());
    }

    #[test]
    fn zeta2_is_minus_one() {
        let z = primitive_root(2).unwrap();
        let field = FieldSpec::Cyclotomic { order: 2 };
        assert_eq!(z, field.from_i64(-1));
    }

    #[test]
    fn inverse_of_zeta_is_power_m_minus_one() {
        for m in 2..=12u32 {
            let z = primitive_root(m).unwrap();
            assert_eq!(z.try_inv().unwrap(), z.pow(m as i64 - 1).unwrap());
        }
    }

    #[test]
    fn primitive_root_orders() {
        for m in 2..=16u32 {
            let z = primitive_root(m).unwrap();
            for k in 1..m {
                assert!(!z.pow(k as i64).unwrap().is_one(), "zeta_{m}^{k} must not be 1");
            }
            assert!(z.pow(m as i64).unwrap().is_one());
        }
    }

    #[test]
    fn primitive_root_rejects_small_orders() {
        assert!(primitive_root(0).is_err());
        assert!(primitive_root(1).is_err());
    }

    #[test]
    fn mixed_fields_are_rejected() {
        let a = q(1, 2);
        let b = primitive_root(4).unwrap();
        assert!(matches!(a.try_add(&b), Err(Error::FieldMismatch { .. })));
        assert!(matches!(a.try_mul(&b), Err(Error::FieldMismatch { .. })));
        let c5 = primitive_root(5).unwrap();
        assert!(matches!(b.try_add(&c5), Err(Error::FieldMismatch { .. })));
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert!(matches!(q(1, 1).try_div(&q(0, 1)), Err(Error::DivisionByZero)));
        let field = FieldSpec::Cyclotomic { order: 4 };
        assert!(matches!(field.one().try_div(&field.zero()), Err(Error::DivisionByZero)));
    }

    #[test]
    fn display_round_trips() {
        let field = FieldSpec::Cyclotomic { order: 4 };
        for s in [q(-7, 3), q(4, 1), primitive_root(4).unwrap(), field.from_ratio(-1, 2)] {
            let text = s.to_string();
            assert_eq!(Scalar::from_str_in(&text, &s.field_spec()).unwrap(), s);
        }
    }

    #[test]
    fn long_cyclotomic_literals_reduce() {
        // t^4 reduces to 1 modulo Phi_4.
        let field = FieldSpec::Cyclotomic { order: 4 };
        let v = Scalar::from_str_in("[0,0,0,0,1;4]", &field).unwrap();
        assert!(v.is_one());
    }

    #[test]
    fn phi_degrees_match_euler_totient() {
        let expect = [(1u32, 1usize), (2, 1), (3, 2), (4, 2), (5, 4), (6, 2), (8, 4), (12, 4), (24, 8)];
        for (m, deg) in expect {
            assert_eq!(FieldSpec::Cyclotomic { order: m }.degree(), deg, "phi({m})");
        }
    }

    fn arb_rational() -> impl Strategy<Value = Scalar> {
        (-40i64..=40, 1i64..=12).prop_map(|(n, d)| q(n, d))
    }

    fn arb_cyclotomic(m: u32) -> impl Strategy<Value = Scalar> {
        let deg = FieldSpec::Cyclotomic { order: m }.degree();
        proptest::collection::vec((-9i64..=9, 1i64..=4), deg).prop_map(move |entries| {
            let coeffs = entries
                .into_iter()
                .map(|(n, d)| Rational::new(BigInt::from(n), BigInt::from(d)))
                .collect();
            Scalar::Cyclotomic(CycElem::reduced(m, coeffs))
        })
    }

    fn arb_scalar() -> impl Strategy<Value = Scalar> {
        prop_oneof![arb_rational(), arb_cyclotomic(3), arb_cyclotomic(4), arb_cyclotomic(6)]
    }

    proptest! {
        #[test]
        fn add_is_associative((a, b, c) in arb_scalar().prop_flat_map(|a| {
            let f = a.field_spec();
            (Just(a), arb_for(f), arb_for(f))
        })) {
            let lhs = a.try_add(&b).unwrap().try_add(&c).unwrap();
            let rhs = a.try_add(&b.try_add(&c).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn mul_distributes((a, b, c) in arb_scalar().prop_flat_map(|a| {
            let f = a.field_spec();
            (Just(a), arb_for(f), arb_for(f))
        })) {
            let lhs = a.try_mul(&b.try_add(&c).unwrap()).unwrap();
            let rhs = a.try_mul(&b).unwrap().try_add(&a.try_mul(&c).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn nonzero_inverts(a in arb_scalar()) {
            if !a.is_zero() {
                let prod = a.try_mul(&a.try_inv().unwrap()).unwrap();
                prop_assert!(prod.is_one());
            }
        }

        #[test]
        fn rational_embedding_is_a_ring_hom((n1, d1, n2, d2) in (-20i64..=20, 1i64..=9, -20i64..=20, 1i64..=9)) {
            let target = FieldSpec::Cyclotomic { order: 6 };
            let a = q(n1, d1);
            let b = q(n2, d2);
            let sum = a.try_add(&b).unwrap().embed(&target).unwrap();
            let sum2 = a.embed(&target).unwrap().try_add(&b.embed(&target).unwrap()).unwrap();
            prop_assert_eq!(sum, sum2);
            let prod = a.try_mul(&b).unwrap().embed(&target).unwrap();
            let prod2 = a.embed(&target).unwrap().try_mul(&b.embed(&target).unwrap()).unwrap();
            prop_assert_eq!(prod, prod2);
        }
    }

    fn arb_for(f: FieldSpec) -> BoxedStrategy<Scalar> {
        match f {
            FieldSpec::Rational => arb_rational().boxed(),
            FieldSpec::Cyclotomic { order } => arb_cyclotomic(order).boxed(),
        }
    }
}
