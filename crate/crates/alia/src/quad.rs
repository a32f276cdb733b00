//! Symmetric invariant bilinear forms on left-Alia algebras, the Frobenius
//! construction of quadratic brackets on commutative associative algebras,
//! and the tensor form of the invariance criterion.

use crate::algebra::{special_left_alia, AlgebraSC};
use crate::error::{Error, Result};
use crate::matrix::{unit_vector, Mat};
use crate::report::{CheckReport, ReportBuilder, DEFAULT_VIOLATION_CAP};
use crate::scalar::{FieldSpec, Scalar};

/// A bilinear form given by its Gram matrix: gram[i][j] = B(e_i, e_j).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BilinearForm {
    gram: Mat,
}

impl BilinearForm {
    pub fn new(gram: Mat) -> Result<BilinearForm> {
        if !gram.is_square() {
            return Err(Error::DimensionMismatch { expected: gram.rows(), got: gram.cols() });
        }
        Ok(BilinearForm { gram })
    }

    pub fn identity(field: FieldSpec, n: usize) -> BilinearForm {
        BilinearForm { gram: Mat::identity(field, n) }
    }

    pub fn dim(&self) -> usize {
        self.gram.rows()
    }

    pub fn field(&self) -> FieldSpec {
        self.gram.field()
    }

    pub fn gram(&self) -> &Mat {
        &self.gram
    }

    /// B(x, y) for coordinate vectors.
    pub fn eval(&self, x: &[Scalar], y: &[Scalar]) -> Scalar {
        let gy = self.gram.mul_vec(y);
        let mut acc = self.field().zero();
        for (xi, gyi) in x.iter().zip(&gy) {
            acc += &(xi * gyi);
        }
        acc
    }
}

/// An element of A tensor A: entries[i][j] is the coefficient of e_i x e_j.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tensor2 {
    entries: Mat,
}

impl Tensor2 {
    pub fn new(entries: Mat) -> Result<Tensor2> {
        if !entries.is_square() {
            return Err(Error::DimensionMismatch { expected: entries.rows(), got: entries.cols() });
        }
        Ok(Tensor2 { entries })
    }

    pub fn dim(&self) -> usize {
        self.entries.rows()
    }

    pub fn entries(&self) -> &Mat {
        &self.entries
    }

    pub fn is_symmetric(&self) -> bool {
        self.entries.is_symmetric()
    }

    /// Reads the tensor as the Gram matrix of a bilinear form.
    pub fn as_form(&self) -> BilinearForm {
        BilinearForm { gram: self.entries.clone() }
    }
}

/// Checks that (A, B) is a quadratic left-Alia pairing: the Gram matrix is
/// symmetric and nondegenerate and the invariance law
/// B([x,y], z) = B(x, [z,y] - [y,z]) holds on all basis triples. The
/// skew-invariance consequence B([x,y], z) + B(y, [x,z]) = 0 is evaluated as
/// well; it must follow whenever symmetry and the invariance law hold.
pub fn check_quadratic(a: &AlgebraSC, b: &BilinearForm) -> Result<CheckReport> {
    check_quadratic_capped(a, b, DEFAULT_VIOLATION_CAP)
}

pub fn check_quadratic_capped(a: &AlgebraSC, b: &BilinearForm, cap: usize) -> Result<CheckReport> {
    let n = a.dim();
    if b.dim() != n {
        return Err(Error::DimensionMismatch { expected: n, got: b.dim() });
    }
    let field = a.field();
    let mut rb = ReportBuilder::new(
        vec!["gram-symmetric", "gram-nondegenerate", "eq-quad", "eq-inv"],
        cap,
    );
    let mut symmetric = true;
    for i in 0..n {
        for j in 0..i {
            let d = b.gram.at(i, j) - b.gram.at(j, i);
            if !d.is_zero() {
                symmetric = false;
                rb.violation("gram-symmetric", vec![i, j], vec![d]);
            }
        }
    }
    let det = b.gram.det();
    if det.is_zero() {
        rb.violation("gram-nondegenerate", vec![], vec![det]);
    }
    let basis: Vec<Vec<Scalar>> = (0..n).map(|i| unit_vector(field, n, i)).collect();
    let mut quad_ok = true;
    let mut inv_ok = true;
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let bij = a.bracket_basis(i, j);
                let lhs = b.eval(&bij, &basis[k]);
                let kj = a.bracket_basis(k, j);
                let jk = a.bracket_basis(j, k);
                let diff: Vec<Scalar> = kj.iter().zip(&jk).map(|(p, q)| p - q).collect();
                let rhs = b.eval(&basis[i], &diff);
                let r = &lhs - &rhs;
                if !r.is_zero() {
                    quad_ok = false;
                    rb.violation("eq-quad", vec![i, j, k], vec![r]);
                }
                let ik = a.bracket_basis(i, k);
                let r2 = &lhs + &b.eval(&basis[j], &ik);
                if !r2.is_zero() {
                    inv_ok = false;
                    rb.violation("eq-inv", vec![i, j, k], vec![r2]);
                }
            }
        }
    }
    assert!(
        !(symmetric && quad_ok) || inv_ok,
        "internal defect: eq-inv must follow from symmetry plus eq-quad"
    );
    Ok(rb.finish())
}

/// Frobenius construction: for a commutative associative algebra with an
/// invariant nondegenerate symmetric form B and any linear map f, the bracket
/// [x, y] = x . f(y) - fhat(x . y) with fhat the B-adjoint of f is a quadratic
/// left-Alia algebra. Returns the bracket tensor together with fhat.
pub fn quadratic_from_frobenius(assoc: &AlgebraSC, b: &BilinearForm, f: &Mat) -> Result<(AlgebraSC, Mat)> {
    let n = assoc.dim();
    if b.dim() != n {
        return Err(Error::DimensionMismatch { expected: n, got: b.dim() });
    }
    if f.rows() != n || f.cols() != n {
        return Err(Error::DimensionMismatch { expected: n, got: f.rows() });
    }
    if !assoc.is_symmetric() {
        return Err(Error::NotCommutative);
    }
    if !assoc.is_associative() {
        return Err(Error::NotAssociative);
    }
    if !b.gram.is_symmetric() {
        return Err(Error::GramNotSymmetric);
    }
    let gram_inv = b.gram.inverse().map_err(|_| Error::SingularMatrix)?;
    // associativity of the form: B(xy, z) = B(x, yz) on all basis triples
    let field = assoc.field();
    let basis: Vec<Vec<Scalar>> = (0..n).map(|i| unit_vector(field, n, i)).collect();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let ij = assoc.bracket_basis(i, j);
                let jk = assoc.bracket_basis(j, k);
                let lhs = b.eval(&ij, &basis[k]);
                let rhs = b.eval(&basis[i], &jk);
                if lhs != rhs {
                    return Err(Error::FormNotInvariant);
                }
            }
        }
    }
    // fhat = G^{-1} f^T G satisfies B(fhat(x), y) = B(x, f(y))
    let fhat = gram_inv.mul(&f.transpose()).mul(&b.gram);
    let bracket = special_left_alia(assoc, f, &fhat.neg())?;
    Ok((bracket, fhat))
}

/// Invariance of a 2-tensor r under h(x) = (R - L)(x) x id - id x R(x):
/// passed exactly when h(e_i) annihilates r for every basis element.
pub fn tensor_invariance(a: &AlgebraSC, r: &Tensor2) -> Result<CheckReport> {
    tensor_invariance_capped(a, r, DEFAULT_VIOLATION_CAP)
}

pub fn tensor_invariance_capped(a: &AlgebraSC, r: &Tensor2, cap: usize) -> Result<CheckReport> {
    let n = a.dim();
    if r.dim() != n {
        return Err(Error::DimensionMismatch { expected: n, got: r.dim() });
    }
    let mut rb = ReportBuilder::new(vec!["tensor-invariance"], cap);
    for i in 0..n {
        let rl = a.right_mult_mat(i).sub(&a.left_mult_mat(i));
        let rmat = a.right_mult_mat(i);
        // ((R-L)(e_i) x id) r has entries sum_j rl[a][j] r[j][b];
        // (id x R(e_i)) r has entries sum_k r[a][k] rmat[b][k]
        let first = rl.mul(r.entries());
        let second = r.entries().mul(&rmat.transpose());
        let diff = first.sub(&second);
        rb.check_residual("tensor-invariance", &[i], diff.flatten());
    }
    Ok(rb.finish())
}

/// The 2-tensor induced by a nondegenerate form: the inverse Gram matrix.
pub fn btilde(b: &BilinearForm) -> Result<Tensor2> {
    let inv = b.gram.inverse().map_err(|_| Error::SingularMatrix)?;
    Tensor2::new(inv)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::fixtures::golden3;
    use crate::algebra::{check_alia, Side};
    use crate::rep::{adjoint_rep, check_equivalence, dual_rep};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn q(n: i64) -> Scalar {
        FieldSpec::Rational.from_i64(n)
    }

    /// K[t]/(t^3) with basis 1, t, t^2.
    fn trunc3() -> AlgebraSC {
        let f = FieldSpec::Rational;
        AlgebraSC::from_entries(
            f,
            3,
            &[
                (0, 0, 0, f.one()),
                (0, 1, 1, f.one()),
                (1, 0, 1, f.one()),
                (0, 2, 2, f.one()),
                (2, 0, 2, f.one()),
                (1, 1, 2, f.one()),
            ],
        )
        .unwrap()
    }

    /// B(t^i, t^j) = 1 when i + j = 2, else 0: the invariant pairing.
    fn trunc3_form() -> BilinearForm {
        let f = FieldSpec::Rational;
        let gram = Mat::from_fn(f, 3, 3, |i, j| if i + j == 2 { f.one() } else { f.zero() });
        BilinearForm::new(gram).unwrap()
    }

    #[test]
    fn non_symmetric_gram_fails() {
        let f = FieldSpec::Rational;
        let a = AlgebraSC::zero_algebra(f, 2);
        let mut gram = Mat::zeros(f, 2, 2);
        gram.set(0, 1, q(1));
        let b = BilinearForm::new(gram).unwrap();
        let report = check_quadratic(&a, &b).unwrap();
        assert!(!report.passed);
        assert!(report.violations.iter().any(|v| v.identity == "gram-symmetric"));
    }

    #[test]
    fn singular_gram_fails_nondegeneracy() {
        let f = FieldSpec::Rational;
        let a = AlgebraSC::zero_algebra(f, 2);
        let mut gram = Mat::zeros(f, 2, 2);
        gram.set(0, 0, q(1));
        let b = BilinearForm::new(gram).unwrap();
        let report = check_quadratic(&a, &b).unwrap();
        assert!(!report.passed);
        assert!(report.violations.iter().any(|v| v.identity == "gram-nondegenerate"));
    }

    #[test]
    fn frobenius_trivial_maps() {
        let assoc = trunc3();
        let b = trunc3_form();
        let f = FieldSpec::Rational;
        let zero = Mat::zeros(f, 3, 3);
        let (bracket, fhat) = quadratic_from_frobenius(&assoc, &b, &zero).unwrap();
        assert_eq!(bracket, AlgebraSC::zero_algebra(f, 3));
        assert!(fhat.is_zero());
        // f = identity gives fhat = identity and the zero bracket
        let id = Mat::identity(f, 3);
        let (bracket, fhat) = quadratic_from_frobenius(&assoc, &b, &id).unwrap();
        assert!(fhat.is_identity());
        assert_eq!(bracket, AlgebraSC::zero_algebra(f, 3));
    }

    #[test]
    fn frobenius_random_maps_are_quadratic() {
        let assoc = trunc3();
        let b = trunc3_form();
        let field = FieldSpec::Rational;
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for _ in 0..8 {
            let f = Mat::from_fn(field, 3, 3, |_, _| field.from_ratio(rng.gen_range(-5..=5), rng.gen_range(1..=4)));
            let (bracket, fhat) = quadratic_from_frobenius(&assoc, &b, &f).unwrap();
            // fhat is the adjoint: B(fhat x, y) = B(x, f y) on the basis
            for i in 0..3 {
                for j in 0..3 {
                    let lhs = b.eval(&fhat.mul_vec(&unit_vector(field, 3, i)), &unit_vector(field, 3, j));
                    let rhs = b.eval(&unit_vector(field, 3, i), &f.mul_vec(&unit_vector(field, 3, j)));
                    assert_eq!(lhs, rhs);
                }
            }
            assert!(check_alia(&bracket, Side::Left).passed);
            assert!(check_quadratic(&bracket, &b).unwrap().passed);
        }
    }

    #[test]
    fn frobenius_rejects_bad_inputs() {
        let assoc = trunc3();
        let f = FieldSpec::Rational;
        let id = Mat::identity(f, 3);
        // non-invariant form: the standard inner product pairs 1 with 1
        let b = BilinearForm::identity(f, 3);
        assert!(matches!(
            quadratic_from_frobenius(&assoc, &b, &id),
            Err(Error::FormNotInvariant)
        ));
        // singular form
        let b = BilinearForm::new(Mat::zeros(f, 3, 3)).unwrap();
        assert!(matches!(
            quadratic_from_frobenius(&assoc, &b, &id),
            Err(Error::SingularMatrix)
        ));
        // non-commutative input
        let b = trunc3_form();
        assert!(matches!(
            quadratic_from_frobenius(&crate::algebra::fixtures::cross_product(), &b, &id),
            Err(Error::NotCommutative)
        ));
    }

    #[test]
    fn btilde_inverts_the_gram_matrix() {
        let f = FieldSpec::Rational;
        let id = BilinearForm::identity(f, 2);
        assert!(btilde(&id).unwrap().entries().is_identity());
        let mut gram = Mat::zeros(f, 2, 2);
        gram.set(0, 0, q(2));
        gram.set(1, 1, q(3));
        let b = BilinearForm::new(gram).unwrap();
        let t = btilde(&b).unwrap();
        assert_eq!(t.entries().at(0, 0), &f.from_ratio(1, 2));
        assert_eq!(t.entries().at(1, 1), &f.from_ratio(1, 3));
        // round trip: btilde of btilde-as-form is the original gram
        let back = btilde(&t.as_form()).unwrap();
        assert_eq!(back.entries(), b.gram());
        // singular gram errors
        let b = BilinearForm::new(Mat::zeros(f, 2, 2)).unwrap();
        assert!(matches!(btilde(&b), Err(Error::SingularMatrix)));
    }

    #[test]
    fn zero_tensor_is_invariant() {
        let a = golden3();
        let r = Tensor2::new(Mat::zeros(a.field(), 3, 3)).unwrap();
        assert!(tensor_invariance(&a, &r).unwrap().passed);
    }

    #[test]
    fn e1_tensor_e1_on_golden3_by_direct_evaluation() {
        // status of r = e1 x e1 determined componentwise
        let a = golden3();
        let mut m = Mat::zeros(a.field(), 3, 3);
        m.set(0, 0, q(1));
        let r = Tensor2::new(m).unwrap();
        let report = tensor_invariance(&a, &r).unwrap();
        // (R-L)(e_i) e_1 has nonzero components off e_1 for this bracket,
        // so invariance fails; the report carries the witnesses
        assert!(!report.passed);
        assert!(report.violations.iter().all(|v| v.identity == "tensor-invariance"));
    }

    #[test]
    fn quadratic_iff_btilde_symmetric_invariant() {
        let assoc = trunc3();
        let b = trunc3_form();
        let field = FieldSpec::Rational;
        let mut rng = ChaCha8Rng::seed_from_u64(29);
        for round in 0..6 {
            let f = Mat::from_fn(field, 3, 3, |_, _| field.from_i64(rng.gen_range(-4..=4)));
            let (bracket, _) = quadratic_from_frobenius(&assoc, &b, &f).unwrap();
            let bt = btilde(&b).unwrap();
            assert!(bt.is_symmetric());
            assert!(tensor_invariance(&bracket, &bt).unwrap().passed, "round {round}");
            // corrupt the bracket: both predicates must fail together
            let mut bad = bracket.clone();
            bad.set_c(0, 1, 2, bad.c(0, 1, 2) + &field.one());
            let quad_ok = check_quadratic(&bad, &b).unwrap().passed;
            let tensor_ok = bt.is_symmetric() && tensor_invariance(&bad, &bt).unwrap().passed;
            assert_eq!(quad_ok, tensor_ok);
        }
    }

    #[test]
    fn quadratic_form_intertwines_adjoint_and_coadjoint() {
        let assoc = trunc3();
        let b = trunc3_form();
        let field = FieldSpec::Rational;
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        let f = Mat::from_fn(field, 3, 3, |_, _| field.from_i64(rng.gen_range(-3..=3)));
        let (bracket, _) = quadratic_from_frobenius(&assoc, &b, &f).unwrap();
        let adj = adjoint_rep(&bracket).unwrap();
        let coadj = dual_rep(&adj).unwrap();
        let report = check_equivalence(&adj, &coadj, b.gram()).unwrap();
        assert!(report.passed, "violations: {:?}", report.violations);
    }

    #[test]
    fn dimension_mismatch_is_an_error() {
        let a = golden3();
        let b = BilinearForm::identity(a.field(), 2);
        assert!(check_quadratic(&a, &b).is_err());
        let r = Tensor2::new(Mat::zeros(a.field(), 2, 2)).unwrap();
        assert!(tensor_invariance(&a, &r).is_err());
    }
}
