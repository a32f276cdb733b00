//! Sparse multivariate polynomials over the exact ground field.
//!
//! Terms live in a BTreeMap keyed by exponent vectors ordered graded-
//! lexicographically, so every polynomial has one canonical form and display
//! order is deterministic (leading term first). No zero coefficient is ever
//! stored.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::{FieldSpec, Scalar};

/// An exponent vector. Ordering is graded lexicographic: lower total degree
/// first, ties broken by the exponent vector itself.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Monomial(Vec<u64>);

impl Monomial {
    pub fn new(exponents: Vec<u64>) -> Monomial {
        Monomial(exponents)
    }

    pub fn constant(nvars: usize) -> Monomial {
        Monomial(vec![0; nvars])
    }

    pub fn exponents(&self) -> &[u64] {
        &self.0
    }

    pub fn total_degree(&self) -> u64 {
        self.0.iter().sum()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.checked_add(*b).expect("monomial exponent overflow"))
                .collect(),
        )
    }

    /// Componentwise quotient, or None when not divisible.
    fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = Vec::with_capacity(self.0.len());
        for (a, b) in self.0.iter().zip(&other.0) {
            out.push(a.checked_sub(*b)?);
        }
        Some(Monomial(out))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Monomial) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Monomial) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A polynomial in K[x1..xn].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiPoly {
    nvars: usize,
    field: FieldSpec,
    terms: BTreeMap<Monomial, Scalar>,
}

impl MultiPoly {
    pub fn zero(field: FieldSpec, nvars: usize) -> MultiPoly {
        MultiPoly { nvars, field, terms: BTreeMap::new() }
    }

    pub fn constant(field: FieldSpec, nvars: usize, c: Scalar) -> MultiPoly {
        let mut p = MultiPoly::zero(field, nvars);
        p.add_term(Monomial::constant(nvars), c);
        p
    }

    pub fn one(field: FieldSpec, nvars: usize) -> MultiPoly {
        MultiPoly::constant(field, nvars, field.one())
    }

    /// The variable x_i (0-based index).
    pub fn var(field: FieldSpec, nvars: usize, i: usize) -> Result<MultiPoly> {
        if i >= nvars {
            return Err(Error::VariableOutOfRange { index: i + 1, nvars });
        }
        let mut exps = vec![0; nvars];
        exps[i] = 1;
        let mut p = MultiPoly::zero(field, nvars);
        p.add_term(Monomial(exps), field.one());
        Ok(p)
    }

    pub fn monomial(field: FieldSpec, exponents: Vec<u64>, coeff: Scalar) -> MultiPoly {
        let nvars = exponents.len();
        let mut p = MultiPoly::zero(field, nvars);
        p.add_term(Monomial(exponents), coeff);
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.keys().next_back().map(Monomial::total_degree)
    }

    pub fn coeff(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(|| self.field.zero())
    }

    /// Leading term in graded-lexicographic order.
    fn leading(&self) -> Option<(&Monomial, &Scalar)> {
        self.terms.iter().next_back()
    }

    /// Adds c * m in place, dropping the entry when it cancels.
    pub fn add_term(&mut self, m: Monomial, c: Scalar) {
        debug_assert_eq!(m.0.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&m) {
            None => {
                self.terms.insert(m, c);
            }
            Some(old) => {
                let sum = &old + &c;
                if !sum.is_zero() {
                    self.terms.insert(m, sum);
                }
            }
        }
    }

    pub fn add(&self, other: &MultiPoly) -> MultiPoly {
        debug_assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &MultiPoly) -> MultiPoly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> MultiPoly {
        MultiPoly {
            nvars: self.nvars,
            field: self.field,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.negated())).collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(self.field, self.nvars);
        }
        MultiPoly {
            nvars: self.nvars,
            field: self.field,
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    pub fn mul(&self, other: &MultiPoly) -> MultiPoly {
        debug_assert_eq!(self.nvars, other.nvars);
        let mut out = MultiPoly::zero(self.field, self.nvars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    pub fn pow(&self, e: u64) -> MultiPoly {
        let mut acc = MultiPoly::one(self.field, self.nvars);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Exact division: returns q with self = q * divisor, or
    /// `Error::InexactDivision` when the divisor does not divide exactly.
    /// Reduction by leading terms in graded-lex order; for an exact multiple
    /// every step cancels the leading term, so failure to divide the leading
    /// monomials certifies a nonzero remainder.
    pub fn exact_div(&self, divisor: &MultiPoly) -> Result<MultiPoly> {
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (dm, dc) = divisor.leading().expect("nonzero divisor");
        let dm = dm.clone();
        let dc = dc.clone();
        let mut rem = self.clone();
        let mut quot = MultiPoly::zero(self.field, self.nvars);
        while let Some((rm, rc)) = rem.leading() {
            let qm = match rm.div(&dm) {
                Some(qm) => qm,
                None => return Err(Error::InexactDivision),
            };
            let qc = rc.try_div(&dc).expect("leading coefficient is nonzero");
            quot.add_term(qm.clone(), qc.clone());
            let piece = MultiPoly::monomial(self.field, qm.0, qc);
            rem = rem.sub(&piece.mul(divisor));
        }
        Ok(quot)
    }

    /// Substitutes each variable by the given polynomial (the multiplicative
    /// linear extension). `images[i]` replaces x_{i+1}.
    pub fn substitute(&self, images: &[MultiPoly]) -> Result<MultiPoly> {
        if images.len() != self.nvars {
            return Err(Error::DimensionMismatch { expected: self.nvars, got: images.len() });
        }
        let out_vars = images.first().map_or(self.nvars, MultiPoly::nvars);
        let mut out = MultiPoly::zero(self.field, out_vars);
        for (m, c) in &self.terms {
            let mut term = MultiPoly::constant(self.field, out_vars, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    term = term.mul(&images[i].pow(e));
                }
            }
            out = out.add(&term);
        }
        Ok(out)
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (pos, (m, c)) in self.terms.iter().rev().enumerate() {
            let constant_term = m.total_degree() == 0;
            // negative rationals print through the sign of the join
            let (joiner, coeff) = if pos > 0 && c.is_negative_rational() {
                (" - ", c.negated())
            } else if pos > 0 {
                (" + ", c.clone())
            } else {
                ("", c.clone())
            };
            write!(f, "{joiner}")?;
            if constant_term {
                write!(f, "{coeff}")?;
            } else {
                let mut wrote_factor = false;
                if !coeff.is_one() {
                    if coeff == self.field.from_i64(-1) && matches!(coeff, Scalar::Rational(_)) {
                        write!(f, "-")?;
                    } else {
                        write!(f, "{coeff}")?;
                        wrote_factor = true;
                    }
                }
                for (i, &e) in m.0.iter().enumerate() {
                    if e == 0 {
                        continue;
                    }
                    if wrote_factor {
                        write!(f, "*")?;
                    }
                    write!(f, "x{}", i + 1)?;
                    if e > 1 {
                        write!(f, "^{e}")?;
                    }
                    wrote_factor = true;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;
    use proptest::prelude::*;

    fn f() -> FieldSpec {
        FieldSpec::Rational
    }

    fn x(i: usize) -> MultiPoly {
        MultiPoly::var(f(), 3, i).unwrap()
    }

    #[test]
    fn canonicalization_drops_cancelled_terms() {
        let p = x(0).add(&x(0).neg());
        assert!(p.is_zero());
        let q = x(0).add(&x(0));
        assert_eq!(q.num_terms(), 1);
        assert_eq!(q.coeff(&Monomial::new(vec![1, 0, 0])), f().from_i64(2));
    }

    #[test]
    fn display_matches_expected_shapes() {
        let p = x(0).pow(2).mul(&x(1)).sub(&x(2).scale(&f().from_i64(3)));
        assert_eq!(p.to_string(), "x1^2*x2 - 3*x3");
        assert_eq!(MultiPoly::zero(f(), 3).to_string(), "0");
        let q = x(0).neg();
        assert_eq!(q.to_string(), "-x1");
        let r = MultiPoly::constant(f(), 3, f().from_ratio(1, 2)).add(&x(1));
        assert_eq!(r.to_string(), "x2 + 1/2");
    }

    #[test]
    fn exact_division_of_power_difference() {
        // (x1^4 - x2^4) / (x1 - x2) = x1^3 + x1^2 x2 + x1 x2^2 + x2^3
        let num = x(0).pow(4).sub(&x(1).pow(4));
        let den = x(0).sub(&x(1));
        let q = num.exact_div(&den).unwrap();
        let expect = x(0)
            .pow(3)
            .add(&x(0).pow(2).mul(&x(1)))
            .add(&x(0).mul(&x(1).pow(2)))
            .add(&x(1).pow(3));
        assert_eq!(q, expect);
    }

    #[test]
    fn inexact_division_is_detected() {
        let num = x(0).pow(2).add(&MultiPoly::one(f(), 3));
        let den = x(0).sub(&x(1));
        assert!(matches!(num.exact_div(&den), Err(Error::InexactDivision)));
        assert!(matches!(
            num.exact_div(&MultiPoly::zero(f(), 3)),
            Err(Error::DivisionByZero)
        ));
    }

    #[test]
    fn substitution_swaps_variables() {
        let p = x(0).pow(2).mul(&x(1));
        let images = vec![x(1), x(0), x(2)];
        let q = p.substitute(&images).unwrap();
        assert_eq!(q, x(1).pow(2).mul(&x(0)));
    }

    fn arb_poly() -> impl Strategy<Value = MultiPoly> {
        proptest::collection::vec(
            (
                proptest::collection::vec(0u64..4, 3),
                (-6i64..=6, 1i64..=3),
            ),
            0..6,
        )
        .prop_map(|terms| {
            let mut p = MultiPoly::zero(FieldSpec::Rational, 3);
            for (exps, (n, d)) in terms {
                p.add_term(Monomial::new(exps), FieldSpec::Rational.from_ratio(n, d));
            }
            p
        })
    }

    proptest! {
        #[test]
        fn display_parse_round_trip(p in arb_poly()) {
            let text = p.to_string();
            let q = parse_poly(&text, 3, &FieldSpec::Rational).unwrap();
            prop_assert_eq!(p, q);
        }

        #[test]
        fn mul_distributes_over_add((p, q, r) in (arb_poly(), arb_poly(), arb_poly())) {
            let lhs = p.mul(&q.add(&r));
            let rhs = p.mul(&q).add(&p.mul(&r));
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn product_divides_exactly((p, q) in (arb_poly(), arb_poly())) {
            if !q.is_zero() {
                let prod = p.mul(&q);
                prop_assert_eq!(prod.exact_div(&q).unwrap(), p);
            }
        }
    }
}
