//! Structure-constant algebras and the left-/right-Alia identity machinery:
//! the direct symmetric-Jacobi checker, the equivalent structure-constant
//! contraction, classification flags, special left-Alia brackets on
//! commutative associative algebras, and Lie triple systems.

use crate::error::{Error, Result};
use crate::matrix::{unit_vector, Mat};
use crate::report::{CheckReport, ReportBuilder, DEFAULT_VIOLATION_CAP};
use crate::scalar::{FieldSpec, Scalar};

/// Which orientation of the Alia identity to check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// A finite-dimensional algebra given by its structure-constant tensor:
/// [e_i, e_j] = sum_t c[i][j][t] e_t.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraSC {
    field: FieldSpec,
    dim: usize,
    c: Vec<Scalar>, // flattened n*n*n, index (i*n + j)*n + t
}

impl AlgebraSC {
    pub fn new(field: FieldSpec, dim: usize, constants: Vec<Scalar>) -> Result<AlgebraSC> {
        if constants.len() != dim * dim * dim {
            return Err(Error::DimensionMismatch { expected: dim * dim * dim, got: constants.len() });
        }
        for s in &constants {
            if s.field_spec() != field {
                return Err(Error::FieldMismatch {
                    left: field.label(),
                    right: s.field_spec().label(),
                });
            }
        }
        Ok(AlgebraSC { field, dim, c: constants })
    }

    pub fn zero_algebra(field: FieldSpec, dim: usize) -> AlgebraSC {
        AlgebraSC { field, dim, c: vec![field.zero(); dim * dim * dim] }
    }

    /// Builds from a sparse list of (i, j, t, coefficient), all 0-based.
    pub fn from_entries(field: FieldSpec, dim: usize, entries: &[(usize, usize, usize, Scalar)]) -> Result<AlgebraSC> {
        let mut a = AlgebraSC::zero_algebra(field, dim);
        for (i, j, t, s) in entries {
            for &idx in &[*i, *j, *t] {
                if idx >= dim {
                    return Err(Error::DimensionMismatch { expected: dim, got: idx + 1 });
                }
            }
            let v = s.embed(&field)?;
            a.c[(i * dim + j) * dim + t] = v;
        }
        Ok(a)
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn c(&self, i: usize, j: usize, t: usize) -> &Scalar {
        &self.c[(i * self.dim + j) * self.dim + t]
    }

    pub fn set_c(&mut self, i: usize, j: usize, t: usize, v: Scalar) {
        debug_assert_eq!(v.field_spec(), self.field);
        self.c[(i * self.dim + j) * self.dim + t] = v;
    }

    /// [e_i, e_j] as a coordinate vector.
    pub fn bracket_basis(&self, i: usize, j: usize) -> Vec<Scalar> {
        (0..self.dim).map(|t| self.c(i, j, t).clone()).collect()
    }

    /// Bilinear extension of the bracket to coordinate vectors.
    pub fn bracket_eval(&self, x: &[Scalar], y: &[Scalar]) -> Result<Vec<Scalar>> {
        if x.len() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, got: x.len() });
        }
        if y.len() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, got: y.len() });
        }
        let mut out = vec![self.field.zero(); self.dim];
        for i in 0..self.dim {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..self.dim {
                if y[j].is_zero() {
                    continue;
                }
                let xy = &x[i] * &y[j];
                for t in 0..self.dim {
                    let c = self.c(i, j, t);
                    if !c.is_zero() {
                        out[t] += &(&xy * c);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Opposite algebra: [x, y]_op = [y, x].
    pub fn opposite(&self) -> AlgebraSC {
        let mut op = AlgebraSC::zero_algebra(self.field, self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                for t in 0..self.dim {
                    op.set_c(i, j, t, self.c(j, i, t).clone());
                }
            }
        }
        op
    }

    /// Matrix of the left multiplication L(e_i): y -> [e_i, y].
    pub fn left_mult_mat(&self, i: usize) -> Mat {
        Mat::from_fn(self.field, self.dim, self.dim, |t, j| self.c(i, j, t).clone())
    }

    /// Matrix of the right multiplication R(e_i): x -> [x, e_i].
    pub fn right_mult_mat(&self, i: usize) -> Mat {
        Mat::from_fn(self.field, self.dim, self.dim, |t, j| self.c(j, i, t).clone())
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.dim;
        (0..n).all(|i| (0..n).all(|j| (0..n).all(|t| self.c(i, j, t) == self.c(j, i, t))))
    }

    pub fn is_skew(&self) -> bool {
        let n = self.dim;
        (0..n).all(|i| {
            (0..n).all(|j| (0..n).all(|t| *self.c(i, j, t) == self.c(j, i, t).negated()))
        })
    }

    /// Jacobi identity [[x,y],z] + [[y,z],x] + [[z,x],y] = 0 on all basis triples.
    pub fn satisfies_jacobi(&self) -> bool {
        let n = self.dim;
        for i in 0..n {
            for j in 0..n {
                for l in 0..n {
                    for m in 0..n {
                        let mut acc = self.field.zero();
                        for k in 0..n {
                            acc += &(self.c(i, j, k) * self.c(k, l, m));
                            acc += &(self.c(j, l, k) * self.c(k, i, m));
                            acc += &(self.c(l, i, k) * self.c(k, j, m));
                        }
                        if !acc.is_zero() {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    pub fn is_associative(&self) -> bool {
        let n = self.dim;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let ij = self.bracket_basis(i, j);
                    let jk = self.bracket_basis(j, k);
                    let lhs = self.bracket_eval(&ij, &unit_vector(self.field, n, k)).unwrap();
                    let rhs = self.bracket_eval(&unit_vector(self.field, n, i), &jk).unwrap();
                    if lhs != rhs {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// Checks the Alia identity on every basis triple. Runs both the direct
/// symmetric-Jacobi expansion and the structure-constant contraction and
/// panics if they ever disagree; the returned report comes from the direct
/// route. The right-hand variant is checked as the left identity of the
/// opposite algebra.
pub fn check_alia(a: &AlgebraSC, side: Side) -> CheckReport {
    check_alia_capped(a, side, DEFAULT_VIOLATION_CAP)
}

pub fn check_alia_capped(a: &AlgebraSC, side: Side, cap: usize) -> CheckReport {
    let direct = check_alia_direct_capped(a, side, cap);
    let contracted = check_alia_contraction_capped(a, side, cap);
    assert_eq!(
        direct.violation_count, contracted.violation_count,
        "internal defect: the two Alia criteria disagree"
    );
    for (d, c) in direct.violations.iter().zip(&contracted.violations) {
        assert_eq!((&d.indices, &d.residual), (&c.indices, &c.residual),
            "internal defect: the two Alia criteria disagree on a witness");
    }
    direct
}

/// Direct route: evaluates the six nested brackets of the symmetric Jacobi
/// identity through `bracket_eval`.
pub fn check_alia_direct(a: &AlgebraSC, side: Side) -> CheckReport {
    check_alia_direct_capped(a, side, DEFAULT_VIOLATION_CAP)
}

pub fn check_alia_direct_capped(a: &AlgebraSC, side: Side, cap: usize) -> CheckReport {
    let a = match side {
        Side::Left => a.clone(),
        Side::Right => a.opposite(),
    };
    let n = a.dim();
    let mut rb = ReportBuilder::new(vec!["symmetric-jacobi"], cap);
    let basis: Vec<Vec<Scalar>> = (0..n).map(|i| unit_vector(a.field(), n, i)).collect();
    for i in 0..n {
        for j in 0..n {
            for l in 0..n {
                let mut residual = vec![a.field().zero(); n];
                // [[x,y],z] + [[y,z],x] + [[z,x],y] - [[y,x],z] - [[z,y],x] - [[x,z],y]
                let terms: [(usize, usize, usize, bool); 6] = [
                    (i, j, l, false),
                    (j, l, i, false),
                    (l, i, j, false),
                    (j, i, l, true),
                    (l, j, i, true),
                    (i, l, j, true),
                ];
                for (p, q, r, negate) in terms {
                    let inner = a.bracket_basis(p, q);
                    let outer = a.bracket_eval(&inner, &basis[r]).unwrap();
                    for t in 0..n {
                        if negate {
                            residual[t] = &residual[t] - &outer[t];
                        } else {
                            residual[t] += &outer[t];
                        }
                    }
                }
                rb.check_residual("symmetric-jacobi", &[i, j, l], residual);
            }
        }
    }
    rb.finish()
}

/// Contraction route: the skew part of the constants contracted against the
/// tensor itself, one output component per basis index.
pub fn check_alia_contraction(a: &AlgebraSC, side: Side) -> CheckReport {
    check_alia_contraction_capped(a, side, DEFAULT_VIOLATION_CAP)
}

pub fn check_alia_contraction_capped(a: &AlgebraSC, side: Side, cap: usize) -> CheckReport {
    let a = match side {
        Side::Left => a.clone(),
        Side::Right => a.opposite(),
    };
    let n = a.dim();
    let mut rb = ReportBuilder::new(vec!["structural-constants"], cap);
    let skew = |i: usize, j: usize, k: usize| a.c(i, j, k) - a.c(j, i, k);
    for i in 0..n {
        for j in 0..n {
            for l in 0..n {
                let mut residual = vec![a.field().zero(); n];
                for m in 0..n {
                    let mut acc = a.field().zero();
                    for k in 0..n {
                        acc += &(&skew(i, j, k) * a.c(k, l, m));
                        acc += &(&skew(j, l, k) * a.c(k, i, m));
                        acc += &(&skew(l, i, k) * a.c(k, j, m));
                    }
                    residual[m] = acc;
                }
                rb.check_residual("structural-constants", &[i, j, l], residual);
            }
        }
    }
    rb.finish()
}

/// Classification flags for a structure-constant algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AlgebraFlags {
    pub is_left_alia: bool,
    pub is_right_alia: bool,
    pub is_skew: bool,
    pub is_symmetric: bool,
    pub is_lie: bool,
    pub is_anti_pre_lie: bool,
}

pub fn classify(a: &AlgebraSC) -> AlgebraFlags {
    let is_left_alia = check_alia_capped(a, Side::Left, 1).passed;
    let is_right_alia = check_alia_capped(a, Side::Right, 1).passed;
    let is_skew = a.is_skew();
    let is_symmetric = a.is_symmetric();
    let is_lie = is_skew && a.satisfies_jacobi();
    let is_anti_pre_lie = anti_pre_lie_by_definition(a);
    if is_left_alia {
        // For a left-Alia bracket the single extra compatibility condition is
        // equivalent to the two defining identities; a disagreement would be
        // an internal defect.
        assert_eq!(
            is_anti_pre_lie,
            anti_pre_lie_by_remark(a),
            "internal defect: the two anti-pre-Lie criteria disagree on a left-Alia input"
        );
    }
    AlgebraFlags { is_left_alia, is_right_alia, is_skew, is_symmetric, is_lie, is_anti_pre_lie }
}

/// The two defining identities of an anti-pre-Lie algebra, with the algebra's
/// bracket playing the role of the product and its commutator as [.,.]:
///   x(yz) - y(xz) = (yx - xy) z   and the cyclic sum of (xy - yx) z vanishes.
fn anti_pre_lie_by_definition(a: &AlgebraSC) -> bool {
    let n = a.dim();
    let f = a.field();
    let basis: Vec<Vec<Scalar>> = (0..n).map(|i| unit_vector(f, n, i)).collect();
    let comm = |i: usize, j: usize| -> Vec<Scalar> {
        let ij = a.bracket_basis(i, j);
        let ji = a.bracket_basis(j, i);
        ij.iter().zip(&ji).map(|(p, q)| p - q).collect()
    };
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let jk = a.bracket_basis(j, k);
                let ik = a.bracket_basis(i, k);
                let lhs1 = a.bracket_eval(&basis[i], &jk).unwrap();
                let lhs2 = a.bracket_eval(&basis[j], &ik).unwrap();
                let rhs = a.bracket_eval(&comm(j, i), &basis[k]).unwrap();
                for t in 0..n {
                    if &(&lhs1[t] - &lhs2[t]) - &rhs[t] != f.zero() {
                        return false;
                    }
                }
                let c1 = a.bracket_eval(&comm(i, j), &basis[k]).unwrap();
                let c2 = a.bracket_eval(&comm(j, k), &basis[i]).unwrap();
                let c3 = a.bracket_eval(&comm(k, i), &basis[j]).unwrap();
                for t in 0..n {
                    let sum = &(&c1[t] + &c2[t]) + &c3[t];
                    if !sum.is_zero() {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// The single extra condition that upgrades a left-Alia algebra:
///   [x,[y,z]] - [y,[x,z]] = [[y,x],z] - [[x,y],z].
fn anti_pre_lie_by_remark(a: &AlgebraSC) -> bool {
    let n = a.dim();
    let f = a.field();
    let basis: Vec<Vec<Scalar>> = (0..n).map(|i| unit_vector(f, n, i)).collect();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let jk = a.bracket_basis(j, k);
                let ik = a.bracket_basis(i, k);
                let l1 = a.bracket_eval(&basis[i], &jk).unwrap();
                let l2 = a.bracket_eval(&basis[j], &ik).unwrap();
                let r1 = a.bracket_eval(&a.bracket_basis(j, i), &basis[k]).unwrap();
                let r2 = a.bracket_eval(&a.bracket_basis(i, j), &basis[k]).unwrap();
                for t in 0..n {
                    if &(&l1[t] - &l2[t]) - &(&r1[t] - &r2[t]) != f.zero() {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Bracket [x, y] = x . f(y) + g(x . y) on a commutative associative algebra,
/// with f and g acting on column coordinates (column j is the image of e_j).
/// Always yields a left-Alia algebra.
pub fn special_left_alia(assoc: &AlgebraSC, f: &Mat, g: &Mat) -> Result<AlgebraSC> {
    if !assoc.is_symmetric() {
        return Err(Error::NotCommutative);
    }
    if !assoc.is_associative() {
        return Err(Error::NotAssociative);
    }
    let n = assoc.dim();
    for m in [f, g] {
        if m.rows() != n || m.cols() != n {
            return Err(Error::DimensionMismatch { expected: n, got: m.rows() });
        }
    }
    let mut out = AlgebraSC::zero_algebra(assoc.field(), n);
    for i in 0..n {
        for j in 0..n {
            for s in 0..n {
                let mut acc = assoc.field().zero();
                for k in 0..n {
                    acc += &(f.at(k, j) * assoc.c(i, k, s));
                    acc += &(assoc.c(i, j, k) * g.at(s, k));
                }
                out.set_c(i, j, s, acc);
            }
        }
    }
    Ok(out)
}

/// A trilinear map given by its structure constants:
/// [e_i, e_j, e_k] = sum_t t[i][j][k][t] e_t.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrilinearSC {
    field: FieldSpec,
    dim: usize,
    t: Vec<Scalar>, // flattened n^4
}

impl TrilinearSC {
    pub fn zero(field: FieldSpec, dim: usize) -> TrilinearSC {
        TrilinearSC { field, dim, t: vec![field.zero(); dim * dim * dim * dim] }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn t(&self, i: usize, j: usize, k: usize, t: usize) -> &Scalar {
        &self.t[((i * self.dim + j) * self.dim + k) * self.dim + t]
    }

    pub fn set_t(&mut self, i: usize, j: usize, k: usize, t: usize, v: Scalar) {
        self.t[((i * self.dim + j) * self.dim + k) * self.dim + t] = v;
    }

    pub fn eval_basis(&self, i: usize, j: usize, k: usize) -> Vec<Scalar> {
        (0..self.dim).map(|t| self.t(i, j, k, t).clone()).collect()
    }

    /// Trilinear extension to coordinate vectors.
    pub fn eval(&self, x: &[Scalar], y: &[Scalar], z: &[Scalar]) -> Result<Vec<Scalar>> {
        for v in [x, y, z] {
            if v.len() != self.dim {
                return Err(Error::DimensionMismatch { expected: self.dim, got: v.len() });
            }
        }
        let mut out = vec![self.field.zero(); self.dim];
        for i in 0..self.dim {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..self.dim {
                if y[j].is_zero() {
                    continue;
                }
                let xy = &x[i] * &y[j];
                for k in 0..self.dim {
                    if z[k].is_zero() {
                        continue;
                    }
                    let xyz = &xy * &z[k];
                    for t in 0..self.dim {
                        let c = self.t(i, j, k, t);
                        if !c.is_zero() {
                            out[t] += &(&xyz * c);
                        }
                    }
                }
            }
        }
        Ok(out)
    }
}

/// Which trilinear bracket to derive from a left-Alia bracket.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TripleVariant {
    /// [x, y, z] = [[x, y] - [y, x], z]
    Alia,
    /// [x, y, z] = ([[x, y] - [y, x], z]) / 2
    HalfBracket,
}

/// Builds the trilinear bracket from a left-Alia algebra and checks the three
/// Lie-triple-system axioms. The alternating and cyclic axioms always hold on
/// a left-Alia input; the five-argument fundamental identity may fail and is
/// reported honestly.
pub fn lie_triple_from_alia(a: &AlgebraSC, variant: TripleVariant) -> Result<(TrilinearSC, CheckReport)> {
    if !check_alia_capped(a, Side::Left, 1).passed {
        return Err(Error::NotLeftAlia);
    }
    let n = a.dim();
    let f = a.field();
    let half = f.from_ratio(1, 2);
    let mut tri = TrilinearSC::zero(f, n);
    for i in 0..n {
        for j in 0..n {
            let ij = a.bracket_basis(i, j);
            let ji = a.bracket_basis(j, i);
            let skew: Vec<Scalar> = ij.iter().zip(&ji).map(|(p, q)| p - q).collect();
            for k in 0..n {
                let w = a.bracket_eval(&skew, &unit_vector(f, n, k))?;
                for t in 0..n {
                    let v = match variant {
                        TripleVariant::Alia => w[t].clone(),
                        TripleVariant::HalfBracket => &w[t] * &half,
                    };
                    tri.set_t(i, j, k, t, v);
                }
            }
        }
    }
    let report = check_lie_triple(&tri);
    Ok((tri, report))
}

/// Checks the three axioms of a Lie triple system on the given trilinear
/// tensor: alternation in the first two slots, the cyclic identity, and the
/// five-argument fundamental identity.
pub fn check_lie_triple(tri: &TrilinearSC) -> CheckReport {
    check_lie_triple_capped(tri, DEFAULT_VIOLATION_CAP)
}

pub fn check_lie_triple_capped(tri: &TrilinearSC, cap: usize) -> CheckReport {
    let n = tri.dim();
    let f = tri.field();
    let mut rb = ReportBuilder::new(vec!["lts-alternating", "lts-cyclic", "lts-fundamental"], cap);
    // [x, x, y] = 0 for all x is the symmetrized vanishing on basis pairs.
    for i in 0..n {
        for j in i..n {
            for k in 0..n {
                let residual: Vec<Scalar> = (0..n)
                    .map(|t| tri.t(i, j, k, t) + tri.t(j, i, k, t))
                    .collect();
                rb.check_residual("lts-alternating", &[i, j, k], residual);
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let residual: Vec<Scalar> = (0..n)
                    .map(|t| &(tri.t(i, j, k, t) + tri.t(j, k, i, t)) + tri.t(k, i, j, t))
                    .collect();
                rb.check_residual("lts-cyclic", &[i, j, k], residual);
            }
        }
    }
    let basis: Vec<Vec<Scalar>> = (0..n).map(|i| unit_vector(f, n, i)).collect();
    for a in 0..n {
        for b in 0..n {
            for x in 0..n {
                for y in 0..n {
                    for z in 0..n {
                        let inner = tri.eval_basis(x, y, z);
                        let lhs = tri.eval(&basis[a], &basis[b], &inner).unwrap();
                        let abx = tri.eval_basis(a, b, x);
                        let aby = tri.eval_basis(a, b, y);
                        let abz = tri.eval_basis(a, b, z);
                        let r1 = tri.eval(&abx, &basis[y], &basis[z]).unwrap();
                        let r2 = tri.eval(&basis[x], &aby, &basis[z]).unwrap();
                        let r3 = tri.eval(&basis[x], &basis[y], &abz).unwrap();
                        let residual: Vec<Scalar> = (0..n)
                            .map(|t| &lhs[t] - &(&(&r1[t] + &r2[t]) + &r3[t]))
                            .collect();
                        rb.check_residual("lts-fundamental", &[a, b, x, y, z], residual);
                    }
                }
            }
        }
    }
    rb.finish()
}
