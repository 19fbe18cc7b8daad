#pragma once

#include "mphylo/sparse.hpp"

#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace mphylo {

enum class Family { Covariance, KernelRBF, GOE, AdjacencyBA, AdjacencyER, SPDLaplacianLike };

std::string to_string(Family f);
Family parse_family(const std::string& s);

enum class LaplacianGraph { ErdosRenyi, Grid };

struct FamilyParams {
    std::size_t samples = 0;     // Covariance: s (0 means 2n)
    double rbf_gamma = 0.0;      // KernelRBF: 0 means 1 / dim
    std::size_t rbf_dim = 3;     // KernelRBF point dimension
    std::size_t m_attach = 3;    // AdjacencyBA
    double p_edge = 0.1;         // AdjacencyER and ErdosRenyi Laplacians
    double ridge = 1e-2;         // SPDLaplacianLike: L + ridge I
    LaplacianGraph graph = LaplacianGraph::ErdosRenyi;
};

struct FamilySpec {
    Family family = Family::GOE;
    std::size_t n = 64;
    FamilyParams params;
    std::uint64_t seed = 0;

    /// Throws ConfigError on n < 4 or out-of-range parameters.
    void validate() const;
    /// Compact "key=value;..." parameter summary for manifests.
    std::string describe() const;
};

/// Deterministic in (spec, seed); every output is exactly symmetric.
CsrMatrix generate(const FamilySpec& spec);

/// Number of edges the BA procedure produces: m (n - m0) + m0 (m0 - 1) / 2 with m0 = m + 1.
std::size_t ba_edge_count(std::size_t n, std::size_t m_attach);

enum class NoiseSupport { Dense, Pattern };

/// A + eps E with E = (N + N^T)/2 rescaled so ||E||_F = ||A||_F. Pattern
/// support draws N only on the stored pattern of A (keeps sparsity).
CsrMatrix add_noise(const CsrMatrix& a, double eps, std::uint64_t seed, NoiseSupport support = NoiseSupport::Dense);

/// A - delta e_i e_i^T.
CsrMatrix diag_spike(const CsrMatrix& a, std::size_t index, double delta);

/// Smallest spike (found by bisection on the dense spectrum) at `index` that
/// divides lambda_min of the SPD matrix A by `drop`. Requires n <= 2048.
double spike_for_min_eig_drop(const CsrMatrix& a, std::size_t index, double drop);

/// 2-norm condition number of an SPD matrix via the dense spectrum.
double spd_condition(const CsrMatrix& a);

/// Random orthogonal-similar matrix Q diag(values) Q^T with Q a product of
/// `layers` sweeps of random Givens rotations (sparse-ish for few layers).
CsrMatrix orthogonal_similar(std::span<const double> values, std::size_t layers, std::uint64_t seed);

/// Entry of a generated corpus.
struct CorpusItem {
    std::string id;
    std::string family;
    std::uint64_t seed = 0;
    std::string params;
    CsrMatrix matrix;
    bool query = false;
    bool trap = false;
};

/// Trap corpus recipe for the preconditioner-selection experiment. Database
/// families share one size n:
///   laplacian   random-graph Laplacian + ridge
///   graded      S L S with log-uniform S over +-grading_decades
///   diagonal    uniform diagonal in [1, 10]
///   twolevel    orth_scale * Q diag({1,2}) Q^T
/// Trap queries are graded matrices rescaled to Frobenius norm trap_norm,
/// which puts their Frobenius-nearest neighbours in the tiny two-level
/// family, whose best preconditioner (identity) fails on graded input.
struct TrapCorpusConfig {
    std::size_t n = 64;
    std::size_t db_per_family = 6;
    std::size_t traps = 1;
    std::size_t ordinary_queries = 3;
    double grading_decades = 3.0;
    double trap_norm = 1.0;  // delta_F
    double orth_scale = 1e-2;
    std::size_t max_retries = 8;
    std::uint64_t seed = 0;
};

struct TrapCorpus {
    std::vector<CorpusItem> db;
    std::vector<CorpusItem> queries;
};

/// Predicate deciding whether a trap query is valid against the database.
using TrapVerifier = std::function<bool(const std::vector<CorpusItem>& db, const CorpusItem& query)>;

/// Builds the corpus; each trap query is regenerated until `verify` accepts
/// it (at most max_retries draws, then InputError naming the case). A
/// non-positive trap_norm is rejected up front.
TrapCorpus generate_trap_corpus(const TrapCorpusConfig& cfg, const TrapVerifier& verify = {});

/// One manifest row per item: id,family,seed,params,path.
void write_manifest(std::span<const CorpusItem> items, std::span<const std::filesystem::path> paths, std::ostream& out);

} // namespace mphylo
