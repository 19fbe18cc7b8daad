#pragma once

#include "mphylo/moments.hpp"

#include <json.hpp>

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace mphylo {

enum class FingerprintMethod { CSF, ASF, ASF_H };

std::string to_string(FingerprintMethod m);
FingerprintMethod parse_method(const std::string& s);

/// Unit-norm moment vector plus the settings that produced it.
struct Fingerprint {
    std::vector<double> phi;
    FingerprintMethod method = FingerprintMethod::CSF;
    EstimatorKind estimator = EstimatorKind::ExactEigen;
    double eta = 0.06;
    double w0 = 1.0;
    std::optional<std::size_t> probes;  // p, when sketched
    std::string matrix_id;
    std::string view;  // set by multi-view late averaging

    std::size_t K() const noexcept { return phi.size(); }
};

struct StoppingConfig {
    std::size_t k_min = 3;
    std::size_t k_max = 64;
    std::size_t window = 2;
    double tau_e = 1e-3;
    double tau_h = 1e-3;
    double gamma = 2.0;
    double eps = 1e-12;
    double lambda_tik = 1e-10;
    bool scaled_hankel = false;
    bool use_energy = true;
    bool use_hankel = true;

    /// Throws ConfigError when out of range.
    void validate() const;
};

/// One evaluated step of the stopping loop.
struct StopStep {
    std::size_t k = 0;
    double rho = 0.0;        // energy ratio d_k^2 / (E_k + eps)
    double threshold = 0.0;  // tau_e, inflated by the SE guard for ASF-H
    double r_hankel = 1.0;
    bool energy_hit = false;
    bool hankel_hit = false;
    bool hit = false;
    std::size_t counter = 0;
};

enum class StopReason { Energy, Hankel, Both, Fallback };

struct StopDiagnostics {
    std::size_t k_star = 0;
    StopReason reason = StopReason::Fallback;
    std::vector<StopStep> steps;
    /// Full moment prefix that was computed (length >= k_star).
    std::vector<double> moments;
};

struct FingerprintOptions {
    double eta = 0.06;
    /// Zeroth moment; unset means w0 = n.
    std::optional<double> w0;
    /// Trace estimator for CSF. ASF always uses exact traces, ASF-H always sketches.
    EstimatorKind estimator = EstimatorKind::ExactEigen;
    ProbeSet probes;
    ScaleOptions scale;

    double resolve_w0(std::size_t n) const { return w0 ? *w0 : static_cast<double>(n); }
};

/// d_k^2 / (sum_{j<=k} d_j^2 + eps) for k = len(d) - 1.
double energy_ratio(std::span<const double> d, double eps = 1e-12);

/// sigma_min / sigma_max of the Tikhonov-stacked Hankel [H; sqrt(lambda) I]
/// built from the l2-normalized sequence, side floor(len(d)/2). A 1x1
/// Hankel gives 1.
double hankel_ratio(std::span<const double> d, double lambda_tik = 1e-10, bool scaled = false);

/// Fixed-K fingerprint.
Fingerprint csf(const CsrMatrix& a, std::size_t K, const FingerprintOptions& opts = {});

/// Adaptive fingerprint on exact traces.
std::pair<Fingerprint, StopDiagnostics> asf(const CsrMatrix& a, const StoppingConfig& cfg,
                                            const FingerprintOptions& opts = {});

/// Adaptive fingerprint on Hutchinson traces with the SE-guarded energy rule.
std::pair<Fingerprint, StopDiagnostics> asf_h(const CsrMatrix& a, const StoppingConfig& cfg,
                                              const FingerprintOptions& opts = {});

/// Normalizes a moment series into a fingerprint. Throws NumericalError if d is all zero.
std::vector<double> normalize_moments(std::span<const double> d);

struct FingerprintConfig {
    FingerprintMethod method = FingerprintMethod::CSF;
    std::size_t K = 5;
    StoppingConfig stopping;
    FingerprintOptions options;
};

/// Dispatches on cfg.method.
Fingerprint compute_fingerprint(const CsrMatrix& a, const FingerprintConfig& cfg, std::string matrix_id = {});

enum class MultiViewMode { Concatenate, LateAverage };

/// Concatenate: one fingerprint, per-view vectors stacked and renormalized.
/// LateAverage: one fingerprint per view, tagged "view<i>", for averaging of
/// per-view distances downstream.
std::vector<Fingerprint> multi_view_fingerprint(std::span<const CsrMatrix> views, MultiViewMode mode,
                                                const FingerprintConfig& cfg, const std::string& matrix_id = {});

/// Stacks fingerprints and renormalizes.
Fingerprint concatenate(std::span<const Fingerprint> parts);

nlohmann::ordered_json to_json(const Fingerprint& fp);
Fingerprint fingerprint_from_json(const nlohmann::json& j);
void write_fingerprint(const Fingerprint& fp, const std::filesystem::path& path);
Fingerprint read_fingerprint(const std::filesystem::path& path);

} // namespace mphylo
