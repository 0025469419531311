#include "kroncd/model.hpp"

#include <cmath>

namespace kroncd {

ModelDims ModelDims::make(Index a, Index b, Index n) {
    if (a < 1 || b < 1) throw InvalidDims("ModelDims: factor sizes must be >= 1");
    if (n < 1) throw InvalidDims("ModelDims: n must be >= 1");
    return ModelDims{a, b, a * b, n};
}

ThetaKron ThetaKron::identity(const ModelDims& dims) {
    return ThetaKron{UnitDetHpd::identity(dims.a), UnitDetHpd::identity(dims.b),
                     RVec::Ones(dims.n)};
}

Patch make_patch(const ModelDims& dims, CMat samples) {
    if (samples.rows() != dims.p || samples.cols() != dims.n)
        throw DimensionMismatch("make_patch: samples must be p x n");
    if (!samples.allFinite()) throw InvalidDims("make_patch: non-finite sample entries");
    return Patch{dims, std::move(samples)};
}

RVec quad_forms(const Patch& patch, const CMat& a_inv, const CMat& b_inv) {
    const Index n = patch.dims.n;
    RVec q(n);
    for (Index i = 0; i < n; ++i) {
        Eigen::Map<const CVec> x(patch.samples.col(i).data(), patch.dims.p);
        q(i) = kron_quad_form(x, a_inv, b_inv);
    }
    return q;
}

double nll_patch(const Patch& patch, const ThetaKron& theta) {
    const ModelDims& d = patch.dims;
    if (theta.a_factor.dim() != d.a || theta.b_factor.dim() != d.b ||
        theta.textures.size() != d.n)
        throw DimensionMismatch("nll_patch: parameter/patch dimensions disagree");
    if ((theta.textures.array() <= 0.0).any() || !theta.textures.allFinite())
        throw NonPositiveTexture("nll_patch: textures must be strictly positive");

    const CMat a_inv = hpd_inverse(theta.a_factor.m);
    const CMat b_inv = hpd_inverse(theta.b_factor.m);
    // = 0 for unit-determinant factors, kept for exactness near the tolerance.
    const double logdet_ab = static_cast<double>(d.b) * logdet_hpd(theta.a_factor.m) +
                             static_cast<double>(d.a) * logdet_hpd(theta.b_factor.m);
    const RVec q = quad_forms(patch, a_inv, b_inv);

    double cost = 0.0;
    for (Index i = 0; i < d.n; ++i)
        cost += static_cast<double>(d.p) * std::log(theta.textures(i)) + logdet_ab +
                q(i) / theta.textures(i);
    return cost;
}

double nll_h0_stack(const std::vector<Patch>& patches, const ThetaKron& theta0) {
    if (patches.empty()) throw EmptyInput("nll_h0_stack: no patches");
    double cost = 0.0;
    for (const Patch& patch : patches) cost += nll_patch(patch, theta0);
    return cost;
}

RVec sample_textures(const SimNoise& noise, Index n, Rng& rng) {
    if (noise.shape_nu <= 0.0) throw InvalidCoefficient("sample_textures: shape_nu must be > 0");
    RVec tau(n);
    for (Index i = 0; i < n; ++i) tau(i) = rng.gamma(noise.shape_nu, 1.0 / noise.shape_nu);
    return tau;
}

CVec sample_sg_given_texture(const CMat& a_sqrt, const CMat& b_sqrt, double tau, Rng& rng) {
    const Index a = a_sqrt.rows(), b = b_sqrt.rows();
    CMat g(b, a);
    for (Index j = 0; j < a; ++j)
        for (Index i = 0; i < b; ++i) g(i, j) = rng.cnormal();
    // (A^1/2 kron B^1/2) vec(G) = vec(B^1/2 G A^1/2^T)
    CMat m = b_sqrt * g * a_sqrt.transpose();
    return std::sqrt(tau) * stack_columns(m);
}

Patch sample_sg_kron(const CMat& a, const CMat& b, const SimNoise& noise, Index n,
                     std::uint64_t seed) {
    Rng rng(seed);
    const RVec tau = sample_textures(noise, n, rng);
    const CMat a_sqrt = herm_matfun(a, MatFun::Sqrt);
    const CMat b_sqrt = herm_matfun(b, MatFun::Sqrt);
    const ModelDims dims = ModelDims::make(a.rows(), b.rows(), n);
    CMat samples(dims.p, n);
    for (Index i = 0; i < n; ++i)
        samples.col(i) = sample_sg_given_texture(a_sqrt, b_sqrt, tau(i), rng);
    return Patch{dims, std::move(samples)};
}

std::vector<Patch> sample_sg_kron_stream(const CMat& a, const CMat& b, const RVec& textures,
                                         Index frames, Rng& rng) {
    const CMat a_sqrt = herm_matfun(a, MatFun::Sqrt);
    const CMat b_sqrt = herm_matfun(b, MatFun::Sqrt);
    const ModelDims dims = ModelDims::make(a.rows(), b.rows(), textures.size());
    std::vector<Patch> out;
    out.reserve(frames);
    for (Index t = 0; t < frames; ++t) {
        CMat samples(dims.p, dims.n);
        for (Index i = 0; i < dims.n; ++i)
            samples.col(i) = sample_sg_given_texture(a_sqrt, b_sqrt, textures(i), rng);
        out.push_back(Patch{dims, std::move(samples)});
    }
    return out;
}

}  // namespace kroncd
