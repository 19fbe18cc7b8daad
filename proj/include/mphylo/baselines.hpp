#pragma once

#include "mphylo/phylogeny.hpp"
#include "mphylo/scale.hpp"

#include <span>
#include <string>
#include <vector>

namespace mphylo {

enum class BaselineKind { FrobeniusDirect, SpectralNormScalar, TopMEigs, HeatTrace, PowerMoments, EigenHistW1 };

std::string to_string(BaselineKind k);

struct BaselineParams {
    std::size_t top_m = 16;
    std::vector<double> heat_times{0.1, 0.5, 1.0, 2.0, 5.0};
    std::size_t power_m = 10;
    std::size_t bins = 64;
    ScaleOptions scale;
};

/// Feature vector for one matrix. FrobeniusDirect has no descriptor (it
/// compares matrices directly) and throws InputError here.
struct BaselineDescriptor {
    BaselineKind kind = BaselineKind::SpectralNormScalar;
    std::vector<double> payload;
};

BaselineDescriptor describe(const CsrMatrix& a, BaselineKind kind, const BaselineParams& params = {});

/// Distance between two descriptors of the same kind: W1 for EigenHistW1,
/// absolute difference for the scalar, l2 otherwise.
double descriptor_distance(const BaselineDescriptor& a, const BaselineDescriptor& b, const BaselineParams& params = {});

/// ||A - B||_F for equal sizes; DimensionError otherwise.
double frobenius_distance(const CsrMatrix& a, const CsrMatrix& b);
/// ||A - B||_F after embedding both in the top-left corner of the larger size.
double frobenius_distance_padded(const CsrMatrix& a, const CsrMatrix& b);

double baseline_distance(const CsrMatrix& a, const CsrMatrix& b, BaselineKind kind, const BaselineParams& params = {});

/// Probability histogram of a normalized spectrum on [-1, 1] with `bins` equal bins.
std::vector<double> eigen_histogram(std::span<const double> normalized_spectrum, std::size_t bins);
/// W1 between histograms on [-1, 1]: sum |CDF_a - CDF_b| * bin width.
double histogram_w1(std::span<const double> a, std::span<const double> b);

/// Descriptor length as reported in result tables (n*n for Frobenius).
std::size_t baseline_dimension(BaselineKind kind, const BaselineParams& params, std::size_t n = 0);

/// Pairwise distances for a corpus; FrobeniusDirect uses the padded variant
/// when `pad_frobenius` is set and throws on mixed sizes otherwise.
DistanceMatrix baseline_distance_matrix(std::span<const CsrMatrix> corpus, std::vector<std::string> ids,
                                        BaselineKind kind, const BaselineParams& params = {},
                                        bool pad_frobenius = false);

} // namespace mphylo
