#pragma once

#include "mphylo/scale.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace mphylo {

enum class EstimatorKind { ExactEigen, ExactBasis, Hutchinson };
enum class ProbeKind { Rademacher, Gaussian };

struct ProbeSet {
    std::size_t count = 64;
    ProbeKind kind = ProbeKind::Rademacher;
    std::uint64_t seed = 0;
    /// Probes advanced together in fixed-K runs; bounds memory to batch * n.
    std::size_t batch = 16;
    std::size_t workers = 1;
};

/// Damped Chebyshev trace moments d_k = exp(-eta k) tr T_k(A~), k < K,
/// with d_0 fixed to w0.
struct MomentSeries {
    std::vector<double> d;
    std::optional<std::vector<double>> se;  // present iff Hutchinson
    double eta = 0.0;
    double w0 = 0.0;
    EstimatorKind estimator = EstimatorKind::ExactEigen;
    std::optional<ProbeSet> probes;

    std::size_t size() const noexcept { return d.size(); }
};

/// Exact moments. ExactEigen maps dense eigenvalues of the source through
/// the normalization (complex eigenvalues for nonsymmetric input); ExactBasis
/// runs the three-term recurrence on every basis vector. Requires K >= 1.
MomentSeries exact_moments(const ScaledOperator& op, std::size_t K, double eta, double w0,
                           EstimatorKind kind = EstimatorKind::ExactEigen);

/// Undamped traces tr T_k(A~), k < K, from an explicit normalized spectrum.
std::vector<double> chebyshev_traces(std::span<const double> normalized_spectrum, std::size_t K);

/// Hutchinson estimate with per-probe standard errors. Probe i draws from an
/// RNG stream derived from (seed, i), so results do not depend on batching
/// or the worker count. Requires K >= 1 and p >= 2.
MomentSeries hutchinson_moments(const ScaledOperator& op, std::size_t K, double eta, double w0,
                                const ProbeSet& probes);

/// Fills z with probe `index` of the probe set.
void draw_probe(const ProbeSet& probes, std::size_t index, std::span<double> z);

/**
 Incremental Hutchinson recurrence for adaptive stopping.

 Keeps (u_{k-1}, u_k) for every probe, i.e. O(p n) memory, and yields one
 damped moment per call. The sequence equals the prefix of
 hutchinson_moments() for the same probe set.
 */
class HutchinsonStream {
public:
    HutchinsonStream(const ScaledOperator& op, double eta, double w0, const ProbeSet& probes);

    /// Next moment index to be produced.
    std::size_t k() const noexcept { return k_; }
    /// Produces (d_k, se_k) and advances.
    std::pair<double, double> next();

private:
    const ScaledOperator* op_;
    double eta_;
    double w0_;
    ProbeSet probes_;
    std::size_t k_ = 0;
    std::vector<std::vector<double>> z_, prev_, curr_;
    std::vector<double> scratch_;
};

/// Incremental exact moments (eigenvalue path when available, else basis).
class ExactStream {
public:
    ExactStream(const ScaledOperator& op, double eta, double w0, EstimatorKind kind = EstimatorKind::ExactEigen);

    std::size_t k() const noexcept { return k_; }
    double next();

private:
    const ScaledOperator* op_;
    double eta_;
    double w0_;
    EstimatorKind kind_;
    std::size_t k_ = 0;
    // Eigen path: per-eigenvalue (T_{k-1}, T_k), complex to admit nonsymmetric input.
    std::vector<std::complex<double>> lam_, t_prev_, t_curr_;
    // Basis path: per basis vector recurrences.
    std::vector<std::vector<double>> b_prev_, b_curr_;
    std::vector<double> scratch_;
};

} // namespace mphylo
