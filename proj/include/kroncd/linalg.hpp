#pragma once

#include <utility>

#include "kroncd/types.hpp"

namespace kroncd {

/// Relative tolerance under which an eigenvalue counts as non-positive.
inline constexpr double kEigRelTol = 1e-12;

/// |det - 1| tolerance for unit-determinant factors.
inline constexpr double kUnitDetTol = 1e-10;

bool is_hermitian(const CMat& m, double rel_tol = 1e-12);

/// (m + m^H) / 2 — used on every Hermitian-valued result to suppress
/// round-off drift.
CMat resymmetrize(const CMat& m);

/// Unit-determinant Hermitian positive definite factor. Construct through
/// unit_det_normalize or identity so the invariant holds.
struct UnitDetHpd {
    CMat m;

    Index dim() const { return m.rows(); }
    static UnitDetHpd identity(Index d) { return UnitDetHpd{CMat::Identity(d, d)}; }
};

/// Kronecker product; block (i, j) of the result is a(i, j) * b.
CMat kron(const CMat& a, const CMat& b);

enum class MatFun { Log, Exp, Sqrt, InvSqrt };

/// U f(Lambda) U^H from the eigendecomposition of a Hermitian matrix.
/// Log/Sqrt/InvSqrt require positive definiteness: the smallest eigenvalue
/// must exceed kEigRelTol times the largest.
CMat herm_matfun(const CMat& m, MatFun f);

/// Hermitian Toeplitz matrix with unit diagonal and entry (i, j) = rho^(j-i)
/// for j >= i. Requires |rho| < 1.
CMat hermitian_toeplitz(Complex rho, Index dim);

/// x^H (A kron B)^-1 x evaluated through the reshaped-sample trace identity
/// tr(A^-T M^H B^-1 M), without materializing the p x p Kronecker product.
/// a_inv and b_inv are the inverses of the HPD factors.
double kron_quad_form(const CVec& x, const CMat& a_inv, const CMat& b_inv);

/// Splits an HPD matrix into a unit-determinant factor and the positive
/// scale det(m)^(1/dim), so that m = scale * factor.
std::pair<UnitDetHpd, double> unit_det_normalize(const CMat& m);

/// log det of an HPD matrix via Cholesky.
double logdet_hpd(const CMat& m);

/// Resymmetrized inverse of an HPD matrix.
CMat hpd_inverse(const CMat& m);

/// Copy-reshape of a sample vector into a rows x cols matrix whose
/// column-stacking equals x. For samples of the Kronecker model the shape is
/// b x a: with M = reshape_sample(x, b, a), (A kron B) vec(M) = vec(B M A^T).
CMat reshape_sample(const CVec& x, Index rows, Index cols);

/// Inverse of reshape_sample.
CVec stack_columns(const CMat& m);

}  // namespace kroncd
