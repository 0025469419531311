#include "kroncd/linalg.hpp"

#include <cmath>

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>

namespace kroncd {

bool is_hermitian(const CMat& m, double rel_tol) {
    if (m.rows() != m.cols()) return false;
    double scale = m.norm();
    if (scale == 0.0) return true;
    return (m - m.adjoint()).norm() <= rel_tol * scale;
}

CMat resymmetrize(const CMat& m) {
    return 0.5 * (m + m.adjoint());
}

CMat kron(const CMat& a, const CMat& b) {
    const Index ar = a.rows(), ac = a.cols(), br = b.rows(), bc = b.cols();
    CMat out(ar * br, ac * bc);
    for (Index i = 0; i < ar; ++i)
        for (Index j = 0; j < ac; ++j)
            out.block(i * br, j * bc, br, bc) = a(i, j) * b;
    return out;
}

CMat herm_matfun(const CMat& m, MatFun f) {
    if (m.rows() != m.cols()) throw DimensionMismatch("herm_matfun: matrix not square");
    Eigen::SelfAdjointEigenSolver<CMat> eig(m);
    if (eig.info() != Eigen::Success)
        throw NotPositiveDefinite("herm_matfun: eigendecomposition failed");
    RVec lam = eig.eigenvalues();
    const double floor = kEigRelTol * std::max(lam.cwiseAbs().maxCoeff(), 1e-300);
    if (f != MatFun::Exp && lam.minCoeff() <= floor)
        throw NotPositiveDefinite("herm_matfun: matrix not positive definite");

    RVec flam(lam.size());
    switch (f) {
        case MatFun::Log:
            flam = lam.array().log();
            break;
        case MatFun::Exp:
            flam = lam.array().exp();
            break;
        case MatFun::Sqrt:
            flam = lam.array().sqrt();
            break;
        case MatFun::InvSqrt:
            flam = lam.array().rsqrt();
            break;
    }
    CMat out = eig.eigenvectors() * flam.asDiagonal() * eig.eigenvectors().adjoint();
    return resymmetrize(out);
}

CMat hermitian_toeplitz(Complex rho, Index dim) {
    if (std::abs(rho) >= 1.0)
        throw InvalidCoefficient("hermitian_toeplitz: |rho| must be < 1");
    if (dim < 1) throw InvalidDims("hermitian_toeplitz: dim must be >= 1");
    CMat out(dim, dim);
    for (Index i = 0; i < dim; ++i) {
        out(i, i) = 1.0;
        Complex power = 1.0;
        for (Index j = i + 1; j < dim; ++j) {
            power *= rho;
            out(i, j) = power;
            out(j, i) = std::conj(power);
        }
    }
    return out;
}

double kron_quad_form(const CVec& x, const CMat& a_inv, const CMat& b_inv) {
    const Index a = a_inv.rows(), b = b_inv.rows();
    if (a_inv.cols() != a || b_inv.cols() != b)
        throw DimensionMismatch("kron_quad_form: factor inverses not square");
    if (x.size() != a * b)
        throw DimensionMismatch("kron_quad_form: sample length != a*b");
    Eigen::Map<const CMat> m(x.data(), b, a);
    // tr(A^-T M^H B^-1 M), cost O(ab(a+b)).
    CMat bm = b_inv * m;
    Complex tr = (a_inv.transpose() * (m.adjoint() * bm)).trace();
    return tr.real();
}

std::pair<UnitDetHpd, double> unit_det_normalize(const CMat& m) {
    if (m.rows() != m.cols()) throw DimensionMismatch("unit_det_normalize: matrix not square");
    Eigen::SelfAdjointEigenSolver<CMat> eig(m);
    if (eig.info() != Eigen::Success)
        throw NotPositiveDefinite("unit_det_normalize: eigendecomposition failed");
    const RVec& lam = eig.eigenvalues();
    if (lam.minCoeff() <= kEigRelTol * std::max(lam.maxCoeff(), 1e-300))
        throw NotPositiveDefinite("unit_det_normalize: matrix not positive definite");
    const double scale = std::exp(lam.array().log().mean());
    return {UnitDetHpd{resymmetrize(m / scale)}, scale};
}

double logdet_hpd(const CMat& m) {
    Eigen::LLT<CMat> llt(m);
    if (llt.info() != Eigen::Success)
        throw NotPositiveDefinite("logdet_hpd: Cholesky failed");
    return 2.0 * llt.matrixL().toDenseMatrix().diagonal().real().array().log().sum();
}

CMat hpd_inverse(const CMat& m) {
    Eigen::LLT<CMat> llt(m);
    if (llt.info() != Eigen::Success)
        throw NotPositiveDefinite("hpd_inverse: Cholesky failed");
    CMat inv = llt.solve(CMat::Identity(m.rows(), m.cols()));
    return resymmetrize(inv);
}

CMat reshape_sample(const CVec& x, Index rows, Index cols) {
    if (rows * cols != x.size())
        throw DimensionMismatch("reshape_sample: rows*cols != sample length");
    return Eigen::Map<const CMat>(x.data(), rows, cols);
}

CVec stack_columns(const CMat& m) {
    return Eigen::Map<const CVec>(m.data(), m.size());
}

}  // namespace kroncd
