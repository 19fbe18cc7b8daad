#pragma once

#include "mphylo/fingerprint.hpp"

#include <Eigen/Dense>
#include <json.hpp>

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace mphylo {

enum class Metric { Euclidean, Cosine, Whitened };
enum class PadMode { ZeroPad, Truncate };
enum class Linkage { Average, Single, Complete };

std::string to_string(Metric m);
Metric parse_metric(const std::string& s);
std::string to_string(Linkage l);
Linkage parse_linkage(const std::string& s);

struct DistanceMatrix {
    std::vector<std::string> ids;
    Eigen::MatrixXd d;
    std::string metric;

    std::size_t size() const noexcept { return ids.size(); }
    /// Throws InputError unless d is square, symmetric, zero-diagonal, finite and >= 0.
    void validate() const;
};

/// Linear map applied before Euclidean distance: d(u,v) = ||W (u - v)||.
struct WhiteningModel {
    Eigen::MatrixXd transform;
};

/// Brings vectors to a common length: zero-pad to the longest (or cut to the
/// shortest) and renormalize to unit length.
std::vector<std::vector<double>> align_vectors(std::span<const std::vector<double>> vecs, PadMode pad);

/// Pooled within-class covariance whitening, (S_w + ridge I)^{-1/2}.
/// Vectors must already share one length.
WhiteningModel fit_whitening(std::span<const std::vector<double>> vecs, std::span<const int> labels,
                             double ridge = 1e-6);

DistanceMatrix pairwise_distance(std::span<const std::vector<double>> vecs, std::vector<std::string> ids,
                                 Metric metric, PadMode pad = PadMode::ZeroPad,
                                 const WhiteningModel* whitening = nullptr);
DistanceMatrix pairwise_distance(std::span<const Fingerprint> fps, Metric metric, PadMode pad = PadMode::ZeroPad,
                                 const WhiteningModel* whitening = nullptr);

/// Entrywise mean of per-view distance matrices over the same ids.
DistanceMatrix late_average(std::span<const DistanceMatrix> views);

struct Merge {
    std::size_t left = 0;   // node id: leaves are 0..n-1, merge i creates node n+i
    std::size_t right = 0;
    double height = 0.0;
    std::size_t size = 0;
};

struct ClusteringResult {
    std::vector<std::string> ids;
    std::vector<int> labels;
    std::size_t k = 0;
    Linkage linkage = Linkage::Average;
    std::vector<Merge> merges;  // full hierarchy, n-1 merges
};

/// Agglomerative clustering, cut at k clusters. Ties resolve to the lowest
/// (i, j) pair, where a cluster is indexed by its smallest member. Labels are
/// numbered in order of first appearance.
ClusteringResult hierarchical_cluster(const DistanceMatrix& d, std::size_t k, Linkage linkage = Linkage::Average);

/// Newick text, branch lengths = parent height - child height.
std::string dendrogram_newick(const ClusteringResult& r);

struct NewickNode {
    std::string name;
    double length = 0.0;
    std::vector<NewickNode> children;
};

/// Throws ParseError on malformed input.
NewickNode parse_newick(const std::string& text);

double ari(std::span<const int> truth, std::span<const int> pred);
/// Per-point silhouette (b - a) / max(a, b); singleton clusters score 0.
/// Needs >= 2 clusters.
std::vector<double> silhouette_samples(const DistanceMatrix& d, std::span<const int> labels);
/// Mean of silhouette_samples.
double silhouette(const DistanceMatrix& d, std::span<const int> labels);

void write_distance_csv(const DistanceMatrix& d, std::ostream& out);
void write_distance_csv(const DistanceMatrix& d, const std::filesystem::path& path);
DistanceMatrix read_distance_csv(const std::filesystem::path& path);

nlohmann::ordered_json to_json(const ClusteringResult& r);

} // namespace mphylo
