#pragma once

#include <cstdint>
#include <vector>

#include "kroncd/linalg.hpp"
#include "kroncd/rng.hpp"
#include "kroncd/types.hpp"

namespace kroncd {

/// Problem dimensions: factor sizes a and b (p = a*b) and the number of
/// samples n in a patch.
struct ModelDims {
    Index a = 1;
    Index b = 1;
    Index p = 1;
    Index n = 1;

    static ModelDims make(Index a, Index b, Index n);
};

/// Model parameter point theta = (A, B, tau): two unit-determinant HPD
/// factors and a strictly positive per-sample texture vector.
struct ThetaKron {
    UnitDetHpd a_factor;
    UnitDetHpd b_factor;
    RVec textures;

    static ThetaKron identity(const ModelDims& dims);
};

/// The n complex p-vectors observed at one time index, one sample per column.
struct Patch {
    ModelDims dims;
    CMat samples;  // p x n
};

Patch make_patch(const ModelDims& dims, CMat samples);

/// Texture shape parameter of the K-distributed simulation noise. Texture law
/// is Gamma(shape_nu, 1/shape_nu), unit mean; large shape_nu approaches the
/// Gaussian case.
struct SimNoise {
    double shape_nu = 1.0;
};

/// Per-sample quadratic forms q_i = x_i^H (A kron B)^-1 x_i given the factor
/// inverses.
RVec quad_forms(const Patch& patch, const CMat& a_inv, const CMat& b_inv);

/// Negative log-likelihood (cost) of one patch, up to an additive constant:
/// sum_i [ p log tau_i + log|A kron B| + q_i / tau_i ].
double nll_patch(const Patch& patch, const ThetaKron& theta);

/// Cost of a stack of patches under the shared-parameter hypothesis: the
/// per-sample textures are reused across all time indices.
double nll_h0_stack(const std::vector<Patch>& patches, const ThetaKron& theta0);

/// Texture vector draw: n i.i.d. Gamma(nu, 1/nu) variates.
RVec sample_textures(const SimNoise& noise, Index n, Rng& rng);

/// One scaled-Gaussian sample sqrt(tau) * (A kron B)^(1/2) g built from the
/// precomputed factor square roots, without forming the Kronecker product.
CVec sample_sg_given_texture(const CMat& a_sqrt, const CMat& b_sqrt, double tau, Rng& rng);

/// A patch of n samples x = sqrt(tau) (A kron B)^(1/2) g with fresh textures
/// drawn from the compound-Gaussian texture law. Deterministic per seed.
Patch sample_sg_kron(const CMat& a, const CMat& b, const SimNoise& noise, Index n,
                     std::uint64_t seed);

/// T patches sharing one texture vector across time (the shared-parameter
/// regime of the model).
std::vector<Patch> sample_sg_kron_stream(const CMat& a, const CMat& b, const RVec& textures,
                                         Index frames, Rng& rng);

}  // namespace kroncd
