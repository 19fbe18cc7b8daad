#pragma once

#include "mphylo/sparse.hpp"

#include <cstddef>
#include <span>

namespace mphylo {

enum class ScaleMode {
    Affine,           ///< (A - m I) / r
    Radius,           ///< A / max(rho(A), eps_rad)
    DegenerateScalar  ///< scalar matrix, normalized operator is 0
};

struct ScaleParams {
    ScaleMode mode = ScaleMode::Affine;
    double center = 0.0;  // m
    double radius = 1.0;  // r
    double eps_rel = 0.01;
    double eps_rad = 1e-300;
};

enum class EndpointMethod { Auto, DenseExact, Gershgorin, PowerLanczos };

/// How to pick the normalization. `None` is the diagnostic no-scale mode
/// (affine with m = 0, r = 1); `Auto` uses Radius for nonsymmetric input.
enum class ScaleHint { Auto, Affine, Radius, None };

struct ScaleOptions {
    double eps_rel = 0.01;
    double eps_rad = 1e-300;
    ScaleHint hint = ScaleHint::Auto;
    EndpointMethod endpoints = EndpointMethod::Auto;
    /// Krylov steps for PowerLanczos when chosen explicitly.
    std::size_t budget = 5;
    /// Krylov steps when Auto falls back to PowerLanczos above the dense cutoff.
    std::size_t auto_budget = 40;
    /// Largest n for which Auto uses the dense eigenvalue path.
    std::size_t dense_cutoff = 512;
};

struct SpectralInterval {
    double lo = 0.0;
    double hi = 0.0;
};

/// Hard limit for DenseExact.
inline constexpr std::size_t kDenseEndpointLimit = 2048;

/// Spectral endpoints of a symmetric matrix. DenseExact computes eigenvalues
/// only; Gershgorin returns an enclosing interval; PowerLanczos runs `budget`
/// Lanczos steps (whose Krylov space contains the power and shifted-power
/// iterates), widens each extreme Ritz value by its residual bound and clips
/// the result to the Gershgorin interval. Throws NumericalError on
/// non-finite entries.
SpectralInterval estimate_endpoints(const CsrMatrix& a, EndpointMethod method, std::size_t budget = 5,
                                    std::size_t dense_cutoff = 512);

/// Spectral radius; dense for n <= dense_cutoff, else ||A||_2 via power iteration.
double spectral_radius_est(const CsrMatrix& a, std::size_t dense_cutoff = 512);

/// Normalized operator y = (A x - m x) / r, y = A x / r, or y = 0.
/// Holds a non-owning reference: the source matrix must outlive it.
class ScaledOperator {
public:
    ScaledOperator(const CsrMatrix& source, ScaleParams params) : source_(&source), params_(params) {}

    const CsrMatrix& source() const noexcept { return *source_; }
    const ScaleParams& params() const noexcept { return params_; }
    std::size_t n() const noexcept { return source_->n(); }

    void apply(std::span<const double> x, std::span<double> y) const;
    /// Maps an eigenvalue of the source to the normalized axis.
    double map(double lambda) const noexcept;
    /// Dense normalized operator (desk-scale checks only).
    Eigen::MatrixXd to_dense() const;

private:
    const CsrMatrix* source_;
    ScaleParams params_;
};

/// Relative threshold below which r0 marks a scalar matrix.
inline constexpr double kDegenerateRelTol = 1e-12;

/// Builds the normalized operator. Affine: m = (hi + lo)/2,
/// r = (1 + eps_rel)(hi - lo)/2, or DegenerateScalar when
/// r0 <= 1e-12 max(|lo|, |hi|). Radius: r = max(rho(A), eps_rad).
ScaledOperator make_scaled(const CsrMatrix& a, const ScaleOptions& opts = {});
ScaledOperator make_scaled(CsrMatrix&&, const ScaleOptions& = {}) = delete;

/// Same, from already-known endpoints.
ScaleParams affine_params(SpectralInterval interval, double eps_rel);

} // namespace mphylo
