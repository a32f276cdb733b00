//! Linear automorphisms of the variable space, pseudo-reflection detection,
//! the induced twisted derivations on the polynomial ring, and the twisted
//! polynomial brackets.
//!
//! A pseudo-reflection is a finite-order automorphism R with rank(I - R) = 1.
//! For such R there is a linear form l_R and a covector Delta_R with
//! (I - R) x = Delta_R(x) l_R on the variable span, and every polynomial
//! satisfies R(f) = f - D_R(f) l_R for a twisted derivation D_R, computed
//! here by exact division.

use crate::error::{Error, Result};
use crate::matrix::Mat;
use crate::poly::MultiPoly;
use crate::scalar::{FieldSpec, Scalar};

/// Default search bound for the order of an automorphism.
pub const DEFAULT_MAX_ORDER: u32 = 24;

/// An invertible linear substitution on the variables x1..xn. Row i of the
/// matrix is the image of x_{i+1}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearAuto {
    nvars: usize,
    matrix: Mat,
    order_hint: Option<u32>,
}

impl LinearAuto {
    pub fn new(matrix: Mat, order_hint: Option<u32>) -> Result<LinearAuto> {
        if !matrix.is_square() {
            return Err(Error::DimensionMismatch { expected: matrix.rows(), got: matrix.cols() });
        }
        if matrix.det().is_zero() {
            return Err(Error::SingularMatrix);
        }
        Ok(LinearAuto { nvars: matrix.rows(), matrix, order_hint })
    }

    pub fn identity(field: FieldSpec, nvars: usize) -> LinearAuto {
        LinearAuto { nvars, matrix: Mat::identity(field, nvars), order_hint: Some(1) }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn field(&self) -> FieldSpec {
        self.matrix.field()
    }

    pub fn matrix(&self) -> &Mat {
        &self.matrix
    }

    pub fn order_hint(&self) -> Option<u32> {
        self.order_hint
    }

    /// The image of x_{i+1} as a linear form.
    pub fn image_of_var(&self, i: usize) -> MultiPoly {
        let mut p = MultiPoly::zero(self.field(), self.nvars);
        for j in 0..self.nvars {
            let c = self.matrix.at(i, j);
            if !c.is_zero() {
                let mut exps = vec![0u64; self.nvars];
                exps[j] = 1;
                p.add_term(crate::poly::Monomial::new(exps), c.clone());
            }
        }
        p
    }

    /// The automorphism induced on the dual space: the inverse transpose.
    pub fn dual(&self) -> LinearAuto {
        let m = self.matrix.inverse().expect("invertible by construction").transpose();
        LinearAuto { nvars: self.nvars, matrix: m, order_hint: self.order_hint }
    }
}

/// Applies the multiplicative-linear extension of the automorphism:
/// substitutes each variable by its image row.
pub fn apply_auto(auto: &LinearAuto, f: &MultiPoly) -> Result<MultiPoly> {
    if f.nvars() != auto.nvars {
        return Err(Error::DimensionMismatch { expected: auto.nvars, got: f.nvars() });
    }
    if f.field() != auto.field() {
        return Err(Error::FieldMismatch { left: auto.field().label(), right: f.field().label() });
    }
    let images: Vec<MultiPoly> = (0..auto.nvars).map(|i| auto.image_of_var(i)).collect();
    f.substitute(&images)
}

/// Data of a detected pseudo-reflection: the canonical linear form spanning
/// the image of I - R (first nonzero coefficient scaled to 1), the covector
/// solving (I - R) x_i = delta_r[i] * l_r, the minimal order, and the
/// non-unit eigenvalue omega = trace(R) - (n - 1).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReflectionData {
    pub l_r: MultiPoly,
    pub delta_r: Vec<Scalar>,
    pub order: u32,
    pub omega: Scalar,
}

/// Why a matrix is not a pseudo-reflection.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NotReflection {
    /// rank(I - R) differs from one.
    RankNotOne { rank: usize },
    /// No power up to the bound equals the identity.
    NoFiniteOrder { bound: u32 },
}

impl std::fmt::Display for NotReflection {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            NotReflection::RankNotOne { rank } => {
                write!(f, "rank(I - R) = {rank}, expected 1")
            }
            NotReflection::NoFiniteOrder { bound } => {
                write!(f, "no order m <= {bound} with R^m = I")
            }
        }
    }
}

/// Decides pseudo-reflection status: rank(I - R) must be exactly one and the
/// minimal m <= max_order with R^m = I must exist.
pub fn is_pseudo_reflection(auto: &LinearAuto, max_order: u32) -> std::result::Result<ReflectionData, NotReflection> {
    let n = auto.nvars;
    let field = auto.field();
    let diff = Mat::identity(field, n).sub(&auto.matrix);
    let rank = diff.rank();
    if rank != 1 {
        return Err(NotReflection::RankNotOne { rank });
    }
    let mut order = None;
    let mut power = auto.matrix.clone();
    for m in 1..=max_order {
        if power.is_identity() {
            order = Some(m);
            break;
        }
        power = power.mul(&auto.matrix);
    }
    let order = match order {
        Some(m) => m,
        None => return Err(NotReflection::NoFiniteOrder { bound: max_order }),
    };
    // rows of I - R are the coefficient vectors of (I - R) x_i; rank one
    // means they all lie on the line spanned by l_r
    let pivot_row = (0..n)
        .find(|&i| diff.row(i).iter().any(|c| !c.is_zero()))
        .expect("rank one has a nonzero row");
    let pivot_col = (0..n)
        .find(|&j| !diff.at(pivot_row, j).is_zero())
        .expect("nonzero row has a nonzero entry");
    let scale = diff.at(pivot_row, pivot_col).try_inv().expect("pivot is nonzero");
    let l_coeffs: Vec<Scalar> = (0..n).map(|j| diff.at(pivot_row, j) * &scale).collect();
    let mut l_r = MultiPoly::zero(field, n);
    for (j, c) in l_coeffs.iter().enumerate() {
        if !c.is_zero() {
            let mut exps = vec![0u64; n];
            exps[j] = 1;
            l_r.add_term(crate::poly::Monomial::new(exps), c.clone());
        }
    }
    // row_i = delta_r[i] * l_coeffs, and l_coeffs[pivot_col] = 1, so the
    // multiplier is just the pivot-column entry
    let delta_r: Vec<Scalar> = (0..n).map(|i| diff.at(i, pivot_col).clone()).collect();
    debug_assert!((0..n).all(|i| {
        (0..n).all(|j| diff.at(i, j) == &(&delta_r[i] * &l_coeffs[j]))
    }));
    let mut trace = field.zero();
    for i in 0..n {
        trace += &auto.matrix.at(i, i).clone();
    }
    let omega = &trace - &field.from_i64(n as i64 - 1);
    Ok(ReflectionData { l_r, delta_r, order, omega })
}

/// The twisted derivation induced by a pseudo-reflection:
/// D_R(f) = (f - R(f)) / l_R by exact division. A nonzero remainder signals
/// inconsistent reflection data and is reported as an error.
pub fn twisted_derivation(rd: &ReflectionData, auto: &LinearAuto, f: &MultiPoly) -> Result<MultiPoly> {
    let rf = apply_auto(auto, f)?;
    f.sub(&rf).exact_div(&rd.l_r)
}

/// Which of the two published twisted bracket shapes to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BracketVariant {
    /// [f, g] = f D(g) - R(g) D(f)
    Theorem,
    /// [f, g] = D(f) g - R(f) D(g)
    Intro,
}

/// The twisted polynomial bracket. Both variants satisfy the symmetric
/// Jacobi identity for every input.
pub fn poly_alia_bracket(
    rd: &ReflectionData,
    auto: &LinearAuto,
    f: &MultiPoly,
    g: &MultiPoly,
    variant: BracketVariant,
) -> Result<MultiPoly> {
    let df = twisted_derivation(rd, auto, f)?;
    let dg = twisted_derivation(rd, auto, g)?;
    Ok(match variant {
        BracketVariant::Theorem => {
            let rg = apply_auto(auto, g)?;
            f.mul(&dg).sub(&rg.mul(&df))
        }
        BracketVariant::Intro => {
            let rf = apply_auto(auto, f)?;
            df.mul(g).sub(&rf.mul(&dg))
        }
    })
}

/// The trilinear bracket [f, g, h] = ([[f,g] - [g,f], h]) / 2 built from the
/// theorem-variant bracket.
pub fn poly_lie_triple(
    rd: &ReflectionData,
    auto: &LinearAuto,
    f: &MultiPoly,
    g: &MultiPoly,
    h: &MultiPoly,
) -> Result<MultiPoly> {
    let fg = poly_alia_bracket(rd, auto, f, g, BracketVariant::Theorem)?;
    let gf = poly_alia_bracket(rd, auto, g, f, BracketVariant::Theorem)?;
    let skew = fg.sub(&gf);
    let outer = poly_alia_bracket(rd, auto, &skew, h, BracketVariant::Theorem)?;
    Ok(outer.scale(&auto.field().from_ratio(1, 2)))
}

/// True when f is fixed by every listed generator (hence by the group they
/// generate).
pub fn invariance_check(f: &MultiPoly, generators: &[LinearAuto]) -> Result<bool> {
    for g in generators {
        if apply_auto(g, f)? != *f {
            return Ok(false);
        }
    }
    Ok(true)
}
