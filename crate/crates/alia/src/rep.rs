//! Representations of left-Alia algebras: the defining compatibility
//! identity, adjoint and dual (coadjoint) constructions, semidirect products,
//! representation equivalence, and matched pairs of two algebras acting on
//! each other.

use crate::algebra::{check_alia_capped, AlgebraSC, Side};
use crate::error::{Error, Result};
use crate::matrix::{unit_vector, Mat};
use crate::report::{CheckReport, ReportBuilder, DEFAULT_VIOLATION_CAP};
use crate::scalar::Scalar;

/// Orientation for dual-space constructions: representations of left-Alia
/// algebras dualize to (l*, l* - r*); representations of right-Alia algebras
/// dualize to (r* - l*, r*). The right case is handled through the opposite
/// algebra with the two actions swapped.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    Left,
    Right,
}

/// A pair of linear actions (l, r) of a structure-constant algebra on a
/// module of dimension `module_dim`; `l_mats[i]` is the matrix of l(e_i).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Representation {
    algebra: AlgebraSC,
    module_dim: usize,
    l_mats: Vec<Mat>,
    r_mats: Vec<Mat>,
}

impl Representation {
    pub fn new(algebra: AlgebraSC, module_dim: usize, l_mats: Vec<Mat>, r_mats: Vec<Mat>) -> Result<Representation> {
        for fam in [&l_mats, &r_mats] {
            if fam.len() != algebra.dim() {
                return Err(Error::DimensionMismatch { expected: algebra.dim(), got: fam.len() });
            }
            for m in fam {
                if m.rows() != module_dim || m.cols() != module_dim {
                    return Err(Error::DimensionMismatch { expected: module_dim, got: m.rows() });
                }
                if m.field() != algebra.field() {
                    return Err(Error::FieldMismatch {
                        left: algebra.field().label(),
                        right: m.field().label(),
                    });
                }
            }
        }
        Ok(Representation { algebra, module_dim, l_mats, r_mats })
    }

    pub fn zero(algebra: AlgebraSC, module_dim: usize) -> Representation {
        let z = Mat::zeros(algebra.field(), module_dim, module_dim);
        let n = algebra.dim();
        Representation { algebra, module_dim, l_mats: vec![z.clone(); n], r_mats: vec![z; n] }
    }

    pub fn algebra(&self) -> &AlgebraSC {
        &self.algebra
    }

    pub fn module_dim(&self) -> usize {
        self.module_dim
    }

    pub fn l(&self, i: usize) -> &Mat {
        &self.l_mats[i]
    }

    pub fn r(&self, i: usize) -> &Mat {
        &self.r_mats[i]
    }

    /// l extended through the bracket: l([e_i, e_j]) = sum_t C_ij^t l(e_t).
    fn l_of_bracket(&self, i: usize, j: usize) -> Mat {
        let mut acc = Mat::zeros(self.algebra.field(), self.module_dim, self.module_dim);
        for t in 0..self.algebra.dim() {
            let c = self.algebra.c(i, j, t);
            if !c.is_zero() {
                acc = acc.add(&self.l_mats[t].scale(c));
            }
        }
        acc
    }
}

/// Checks the defining identity of a representation on all basis pairs:
/// l([x,y]) - l([y,x]) = r(x)r(y) - r(y)r(x) + r(y)l(x) - r(x)l(y).
pub fn check_representation(rep: &Representation) -> CheckReport {
    check_representation_capped(rep, DEFAULT_VIOLATION_CAP)
}

pub fn check_representation_capped(rep: &Representation, cap: usize) -> CheckReport {
    let mut rb = ReportBuilder::new(vec!["rep-0-alia"], cap);
    rep_violations(rep, "rep-0-alia", &mut rb);
    rb.finish()
}

fn rep_violations(rep: &Representation, identity: &'static str, rb: &mut ReportBuilder) {
    let n = rep.algebra.dim();
    for i in 0..n {
        for j in 0..n {
            let lhs = rep.l_of_bracket(i, j).sub(&rep.l_of_bracket(j, i));
            let ri = rep.r(i);
            let rj = rep.r(j);
            let rhs = ri
                .mul(rj)
                .sub(&rj.mul(ri))
                .add(&rj.mul(rep.l(i)))
                .sub(&ri.mul(rep.l(j)));
            let diff = lhs.sub(&rhs);
            rb.check_residual(identity, &[i, j], diff.flatten());
        }
    }
}

/// The adjoint representation (L, R, A) of a left-Alia algebra on itself.
pub fn adjoint_rep(a: &AlgebraSC) -> Result<Representation> {
    if !check_alia_capped(a, Side::Left, 1).passed {
        return Err(Error::NotLeftAlia);
    }
    let n = a.dim();
    let l_mats = (0..n).map(|i| a.left_mult_mat(i)).collect();
    let r_mats = (0..n).map(|i| a.right_mult_mat(i)).collect();
    Representation::new(a.clone(), n, l_mats, r_mats)
}

/// The dual representation on V*. For the left orientation this is
/// (l*, l* - r*) with l*(x) = -l(x)^T; applied to the adjoint representation
/// it yields the coadjoint representation. The input must itself be a valid
/// representation.
pub fn dual_rep(rep: &Representation) -> Result<Representation> {
    dual_rep_oriented(rep, Orientation::Left)
}

pub fn dual_rep_oriented(rep: &Representation, orientation: Orientation) -> Result<Representation> {
    let valid = match orientation {
        Orientation::Left => check_representation_capped(rep, 1).passed,
        Orientation::Right => check_representation_right_capped(rep, 1).passed,
    };
    if !valid {
        return Err(Error::InvalidRepresentation);
    }
    let n = rep.algebra.dim();
    let mut l_mats = Vec::with_capacity(n);
    let mut r_mats = Vec::with_capacity(n);
    for i in 0..n {
        let lstar = rep.l(i).transpose().neg();
        let rstar = rep.r(i).transpose().neg();
        match orientation {
            Orientation::Left => {
                l_mats.push(lstar.clone());
                r_mats.push(lstar.sub(&rstar));
            }
            Orientation::Right => {
                l_mats.push(rstar.sub(&lstar));
                r_mats.push(rstar);
            }
        }
    }
    Representation::new(rep.algebra.clone(), rep.module_dim, l_mats, r_mats)
}

/// A pair (l, r) is a representation of a right-Alia algebra exactly when the
/// swapped pair (r, l) represents the opposite (left-Alia) algebra.
pub fn check_representation_right(rep: &Representation) -> CheckReport {
    check_representation_right_capped(rep, DEFAULT_VIOLATION_CAP)
}

pub fn check_representation_right_capped(rep: &Representation, cap: usize) -> CheckReport {
    let swapped = Representation {
        algebra: rep.algebra.opposite(),
        module_dim: rep.module_dim,
        l_mats: rep.r_mats.clone(),
        r_mats: rep.l_mats.clone(),
    };
    check_representation_capped(&swapped, cap)
}

/// The semidirect product bracket on A + V:
/// [x + u, y + v] = [x, y] + l(x)v + r(y)u.
/// The result is left-Alia exactly when the input pair is a representation.
pub fn semidirect_product(rep: &Representation) -> AlgebraSC {
    let a = &rep.algebra;
    let n = a.dim();
    let m = rep.module_dim;
    let mut out = AlgebraSC::zero_algebra(a.field(), n + m);
    for i in 0..n {
        for j in 0..n {
            for t in 0..n {
                out.set_c(i, j, t, a.c(i, j, t).clone());
            }
        }
    }
    for i in 0..n {
        let l = rep.l(i);
        let r = rep.r(i);
        for b in 0..m {
            for t in 0..m {
                // [e_i, f_b] = l(e_i) f_b
                out.set_c(i, n + b, n + t, l.at(t, b).clone());
                // [f_b, e_i] = r(e_i) f_b
                out.set_c(n + b, i, n + t, r.at(t, b).clone());
            }
        }
    }
    out
}

/// Verifies that phi intertwines two representations of the same algebra:
/// phi l(e_i) = l'(e_i) phi and phi r(e_i) = r'(e_i) phi, with phi invertible.
pub fn check_equivalence(rep: &Representation, rep2: &Representation, phi: &Mat) -> Result<CheckReport> {
    check_equivalence_capped(rep, rep2, phi, DEFAULT_VIOLATION_CAP)
}

pub fn check_equivalence_capped(
    rep: &Representation,
    rep2: &Representation,
    phi: &Mat,
    cap: usize,
) -> Result<CheckReport> {
    if rep.module_dim != rep2.module_dim {
        return Err(Error::DimensionMismatch { expected: rep.module_dim, got: rep2.module_dim });
    }
    if rep.algebra.dim() != rep2.algebra.dim() {
        return Err(Error::DimensionMismatch { expected: rep.algebra.dim(), got: rep2.algebra.dim() });
    }
    if phi.rows() != rep.module_dim || phi.cols() != rep.module_dim {
        return Err(Error::DimensionMismatch { expected: rep.module_dim, got: phi.rows() });
    }
    let mut rb = ReportBuilder::new(
        vec!["phi-invertible", "equivalence-l", "equivalence-r"],
        cap,
    );
    let det = phi.det();
    if det.is_zero() {
        rb.violation("phi-invertible", vec![], vec![det]);
    }
    for i in 0..rep.algebra.dim() {
        for (identity, m1, m2) in [
            ("equivalence-l", rep.l(i), rep2.l(i)),
            ("equivalence-r", rep.r(i), rep2.r(i)),
        ] {
            let diff = phi.mul(m1).sub(&m2.mul(phi));
            rb.check_residual(identity, &[i], diff.flatten());
        }
    }
    Ok(rb.finish())
}

/// Two left-Alia algebras with mutual actions: (l_a, r_a) maps A into
/// endomorphisms of B, (l_b, r_b) maps B into endomorphisms of A.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatchedPairData {
    a: AlgebraSC,
    b: AlgebraSC,
    l_a: Vec<Mat>,
    r_a: Vec<Mat>,
    l_b: Vec<Mat>,
    r_b: Vec<Mat>,
}

impl MatchedPairData {
    pub fn new(
        a: AlgebraSC,
        b: AlgebraSC,
        l_a: Vec<Mat>,
        r_a: Vec<Mat>,
        l_b: Vec<Mat>,
        r_b: Vec<Mat>,
    ) -> Result<MatchedPairData> {
        if a.field() != b.field() {
            return Err(Error::FieldMismatch { left: a.field().label(), right: b.field().label() });
        }
        for (fam, count, size) in [
            (&l_a, a.dim(), b.dim()),
            (&r_a, a.dim(), b.dim()),
            (&l_b, b.dim(), a.dim()),
            (&r_b, b.dim(), a.dim()),
        ] {
            if fam.len() != count {
                return Err(Error::DimensionMismatch { expected: count, got: fam.len() });
            }
            for m in fam {
                if m.rows() != size || m.cols() != size {
                    return Err(Error::DimensionMismatch { expected: size, got: m.rows() });
                }
                if m.field() != a.field() {
                    return Err(Error::FieldMismatch {
                        left: a.field().label(),
                        right: m.field().label(),
                    });
                }
            }
        }
        Ok(MatchedPairData { a, b, l_a, r_a, l_b, r_b })
    }

    pub fn algebra_a(&self) -> &AlgebraSC {
        &self.a
    }

    pub fn algebra_b(&self) -> &AlgebraSC {
        &self.b
    }

    pub fn action_a(&self) -> (&[Mat], &[Mat]) {
        (&self.l_a, &self.r_a)
    }

    pub fn action_b(&self) -> (&[Mat], &[Mat]) {
        (&self.l_b, &self.r_b)
    }

    /// Swaps the roles of A and B.
    pub fn transposed(&self) -> MatchedPairData {
        MatchedPairData {
            a: self.b.clone(),
            b: self.a.clone(),
            l_a: self.l_b.clone(),
            r_a: self.r_b.clone(),
            l_b: self.l_a.clone(),
            r_b: self.r_a.clone(),
        }
    }
}

/// Checks the matched-pair conditions: both action pairs are representations
/// and the two mixed compatibility equations hold on all basis tuples.
/// Equivalent to `matched_pair_sum` being left-Alia.
pub fn check_matched_pair(mp: &MatchedPairData) -> CheckReport {
    check_matched_pair_capped(mp, DEFAULT_VIOLATION_CAP)
}

pub fn check_matched_pair_capped(mp: &MatchedPairData, cap: usize) -> CheckReport {
    let mut rb = ReportBuilder::new(
        vec![
            "alia-a",
            "alia-b",
            "rep-0-alia-a-on-b",
            "rep-0-alia-b-on-a",
            "matched-pair-1",
            "matched-pair-2",
        ],
        cap,
    );
    // both constituents must be left-Alia; together with the conditions below
    // this is exactly the symmetric Jacobi identity of the sum bracket,
    // split by basis-tuple type and component
    for (alg, identity) in [(&mp.a, "alia-a"), (&mp.b, "alia-b")] {
        let mut sub = check_alia_capped(alg, Side::Left, cap);
        for v in &mut sub.violations {
            v.identity = identity;
        }
        sub.identities = vec![identity];
        rb.absorb(sub);
    }
    let rep_a = Representation::new(mp.a.clone(), mp.b.dim(), mp.l_a.clone(), mp.r_a.clone())
        .expect("shapes validated at construction");
    rep_violations(&rep_a, "rep-0-alia-a-on-b", &mut rb);
    let rep_b = Representation::new(mp.b.clone(), mp.a.dim(), mp.l_b.clone(), mp.r_b.clone())
        .expect("shapes validated at construction");
    rep_violations(&rep_b, "rep-0-alia-b-on-a", &mut rb);
    mixed_violations(&mp.a, &mp.l_a, &mp.r_a, &mp.l_b, &mp.r_b, "matched-pair-1", &mut rb);
    mixed_violations(&mp.b, &mp.l_b, &mp.r_b, &mp.l_a, &mp.r_a, "matched-pair-2", &mut rb);
    rb.finish()
}

/// The mixed compatibility condition: the component in `alg` of the symmetric
/// Jacobi identity of the sum bracket, evaluated on tuples with two elements
/// of `alg` and one of the partner space. With `alg` = A this reads
///   r_B(a)([x,y] - [y,x]) + [(r_B - l_B)(a)y, x] + [(l_B - r_B)(a)x, y]
///     + l_B((l_A - r_A)(y)a) x + l_B((r_A - l_A)(x)a) y = 0,
/// where (l_s, r_s) = (l_A, r_A) is the action of `alg` on the partner and
/// (l_o, r_o) = (l_B, r_B) the action of the partner on `alg`. The second
/// condition is the same with the roles swapped. The partner components of
/// the same tuples are exactly the two representation conditions.
fn mixed_violations(
    alg: &AlgebraSC,
    l_self: &[Mat],
    r_self: &[Mat],
    l_other: &[Mat],
    r_other: &[Mat],
    identity: &'static str,
    rb: &mut ReportBuilder,
) {
    let n = alg.dim();
    let m = l_other.len();
    let field = alg.field();
    // applies sum_c w[c] * mats[c] to the unit vector e_idx
    let apply_family = |mats: &[Mat], w: &[Scalar], idx: usize| -> Vec<Scalar> {
        let mut acc = vec![field.zero(); n];
        for (c, coeff) in w.iter().enumerate() {
            if coeff.is_zero() {
                continue;
            }
            for (t, slot) in acc.iter_mut().enumerate() {
                *slot += &(coeff * mats[c].at(t, idx));
            }
        }
        acc
    };
    for a_idx in 0..m {
        let e_a = unit_vector(field, m, a_idx);
        for x in 0..n {
            for y in 0..n {
                let e_x = unit_vector(field, n, x);
                let e_y = unit_vector(field, n, y);
                let bxy = alg.bracket_basis(x, y);
                let byx = alg.bracket_basis(y, x);
                let skew: Vec<Scalar> = bxy.iter().zip(&byx).map(|(p, q)| p - q).collect();
                let t0 = r_other[a_idx].mul_vec(&skew);
                let u1 = r_other[a_idx].sub(&l_other[a_idx]).mul_vec(&e_y);
                let t1 = alg.bracket_eval(&u1, &e_x).expect("dims validated");
                let u2 = l_other[a_idx].sub(&r_other[a_idx]).mul_vec(&e_x);
                let t2 = alg.bracket_eval(&u2, &e_y).expect("dims validated");
                let w1 = l_self[y].sub(&r_self[y]).mul_vec(&e_a);
                let t3 = apply_family(l_other, &w1, x);
                let w2 = r_self[x].sub(&l_self[x]).mul_vec(&e_a);
                let t4 = apply_family(l_other, &w2, y);
                let residual: Vec<Scalar> = (0..n)
                    .map(|t| &(&(&t0[t] + &t1[t]) + &(&t2[t] + &t3[t])) + &t4[t])
                    .collect();
                rb.check_residual(identity, &[a_idx, x, y], residual);
            }
        }
    }
}

/// The direct-sum bracket of a matched pair:
/// [x + a, y + b] = [x,y]_A + l_B(a)y + r_B(b)x + [a,b]_B + l_A(x)b + r_A(y)a.
pub fn matched_pair_sum(mp: &MatchedPairData) -> AlgebraSC {
    let n = mp.a.dim();
    let m = mp.b.dim();
    let field = mp.a.field();
    let mut out = AlgebraSC::zero_algebra(field, n + m);
    for i in 0..n {
        for j in 0..n {
            for t in 0..n {
                out.set_c(i, j, t, mp.a.c(i, j, t).clone());
            }
        }
    }
    for a in 0..m {
        for b in 0..m {
            for t in 0..m {
                out.set_c(n + a, n + b, n + t, mp.b.c(a, b, t).clone());
            }
        }
    }
    for i in 0..n {
        for b in 0..m {
            // [e_i, f_b] = r_B(f_b) e_i + l_A(e_i) f_b
            for t in 0..n {
                out.set_c(i, n + b, t, mp.r_b[b].at(t, i).clone());
            }
            for t in 0..m {
                out.set_c(i, n + b, n + t, mp.l_a[i].at(t, b).clone());
            }
            // [f_b, e_i] = l_B(f_b) e_i + r_A(e_i) f_b
            for t in 0..n {
                out.set_c(n + b, i, t, mp.l_b[b].at(t, i).clone());
            }
            for t in 0..m {
                out.set_c(n + b, i, n + t, mp.r_a[i].at(t, b).clone());
            }
        }
    }
    out
}
