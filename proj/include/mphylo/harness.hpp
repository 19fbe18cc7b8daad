#pragma once

#include "mphylo/baselines.hpp"
#include "mphylo/fingerprint.hpp"
#include "mphylo/generators.hpp"
#include "mphylo/phylogeny.hpp"
#include "mphylo/recommender.hpp"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace mphylo {

inline const std::vector<std::string> kExperimentIds{"e0", "e1", "e2", "e2b", "e3", "e4", "e5", "e6plus"};

/// Everything an experiment run reads. Loaded from a key = value text file;
/// unset keys keep the defaults below.
struct ExperimentConfig {
    std::string experiment = "e1";
    std::uint64_t seed = 20240601;
    std::size_t workers = 0;  // 0: hardware concurrency

    // synthetic corpus (e1, e2, e2b, e4, e5)
    std::vector<Family> families;  // empty: experiment default
    std::size_t per_family = 10;
    std::size_t n_min = 96;
    std::size_t n_max = 160;
    FamilyParams family_params;

    // fingerprints
    double eta = 0.06;
    std::optional<double> w0;  // unset: n
    StoppingConfig stopping;
    std::size_t probes = 64;
    ProbeKind probe_kind = ProbeKind::Rademacher;
    std::vector<std::size_t> csf_k{1, 3, 5, 10, 50};
    Metric metric = Metric::Euclidean;
    Linkage linkage = Linkage::Average;

    // baselines
    BaselineParams baselines;

    // e0
    std::size_t e0_matrices = 20;
    std::size_t e0_n = 64;
    std::size_t e0_k = 5;
    std::vector<double> alphas{1e-3, 1e3};

    // e3
    std::vector<std::string> ss_names{"HB/bcsstk01", "HB/bcsstk06", "HB/gr_30_30", "AG-Monien/netz4504"};
    std::filesystem::path cache_dir;  // empty: $MPHYLO_CACHE or ./ss_cache
    std::size_t variants = 5;
    double variant_noise = 0.01;
    std::size_t e3_probes = 100;
    std::size_t e3_k = 5;

    // e4
    std::vector<std::size_t> p_grid{10, 50, 100, 200, 500, 1000};
    std::vector<std::size_t> e4_k{3, 5};

    // e5
    std::size_t e5_matrices = 20;
    std::size_t e5_k = 5;
    std::vector<double> eps_grid;  // empty: 7 log-spaced points in [1e-4, 1e-1]

    // e6plus
    std::size_t e6_seeds = 20;
    TrapCorpusConfig trap;
    ProbeOptions probe;
    std::size_t knn = 3;
    Metric e6_metric = Metric::Cosine;
    SolveOptions solve;
    std::optional<std::uint64_t> rhs_seed = 7;  // unset: b = A 1

    /// Throws ConfigError on inconsistent values.
    void validate() const;
};

/// Parses "key = value" lines ('#' starts a comment, lists are comma
/// separated). Unknown keys and malformed values throw ConfigError with the
/// line number.
ExperimentConfig parse_config(std::istream& in);
ExperimentConfig load_config(const std::filesystem::path& path);
/// Writes every key with its current value; parse_config reads it back.
void write_config(const ExperimentConfig& cfg, std::ostream& out);

std::vector<double> log_space(double lo, double hi, std::size_t count);

struct LinearFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r2 = 0.0;
};

/// Ordinary least squares y = slope x + intercept.
LinearFit linear_fit(std::span<const double> x, std::span<const double> y);

struct SummaryStats {
    double mean = 0.0;
    double median = 0.0;
    double iqr = 0.0;  // linear-interpolated quartiles
    double max = 0.0;
};

SummaryStats summarize(std::vector<double> values);

/// One labelled synthetic corpus.
struct LabelledCorpus {
    std::vector<CorpusItem> items;
    std::vector<int> labels;
    std::vector<std::string> family_names;

    std::vector<CsrMatrix> matrices() const;
    std::vector<std::string> ids() const;
};

/// per_family matrices for each family, sizes drawn uniformly from
/// [n_min, n_max]. Deterministic in (families, seed).
LabelledCorpus make_family_corpus(const ExperimentConfig& cfg, const std::vector<Family>& families);

struct ClusterScore {
    std::string method;
    std::string params;
    double ari = 0.0;
    double silhouette = 0.0;
    double dim = 0.0;
    double runtime_seconds = 0.0;
    bool eigendecomposition = false;
    std::vector<double> family_silhouette;  // mean silhouette per family
};

/// Clusters a distance matrix into as many groups as there are families and
/// scores it against the labels.
ClusterScore score_distances(const DistanceMatrix& d, std::span<const int> labels, std::size_t families,
                             Linkage linkage);

struct E0Stats {
    std::string mode;  // "scaled" or "noscale"
    std::string transform;
    SummaryStats stats;
};

struct E0Result {
    std::vector<E0Stats> rows;
};

struct StopRecord {
    std::string matrix_id;
    std::size_t k_star = 0;
    StopReason reason = StopReason::Fallback;
    std::optional<std::size_t> energy_start;  // t: first index of the energy run that stopped the loop
    double tail_share = 0.0;                  // tail energy share to K_max past t
};

struct E1Result {
    std::vector<ClusterScore> scores;
    std::vector<StopRecord> stops;
    SummaryStats k_star;
};

struct E2Result {
    std::vector<ClusterScore> scores;
    std::vector<std::string> family_names;
    Eigen::MatrixXi confusion;  // CSF-K=5: rows truth, columns cluster
};

struct E3Result {
    bool skipped = false;
    std::string status;
    std::vector<ClusterScore> scores;
    std::vector<std::pair<std::string, std::size_t>> matrices;  // name, n
};

struct E4Cell {
    std::string method;
    std::size_t p = 0;
    std::size_t K = 0;
    double ari = 0.0;
    double silhouette = 0.0;
    double runtime_seconds = 0.0;
    double distance_to_exact = 0.0;  // mean ||phi_H - phi|| over the corpus
};

struct E4Result {
    std::vector<E4Cell> cells;
    LinearFit convergence;  // log distance_to_exact vs log p, CSF-H at the largest K
};

struct E5Result {
    std::vector<double> eps;
    std::vector<double> mean_distance;
    std::vector<std::vector<double>> distances;  // [eps][matrix]
    LinearFit fit;                               // log mean distance vs log eps
};

struct E6Query {
    std::uint64_t seed = 0;
    std::string id;
    bool trap = false;
    SolveReport oracle;
    std::map<std::string, SolveReport> policy;  // policy name -> executed solve
    std::map<std::string, std::string> first_choice;
    std::size_t phylo_switches = 0;
};

struct E6Result {
    std::vector<RegretSummary> summaries;  // phylo, fro-1nn, fro-knn
    std::vector<E6Query> queries;
};

E0Result run_e0(const ExperimentConfig& cfg);
E1Result run_e1(const ExperimentConfig& cfg);
E2Result run_e2(const ExperimentConfig& cfg, bool strong_baselines);
E3Result run_e3(const ExperimentConfig& cfg);
E4Result run_e4(const ExperimentConfig& cfg);
E5Result run_e5(const ExperimentConfig& cfg);
E6Result run_e6(const ExperimentConfig& cfg);

/// Generic table row written to results.csv.
struct ResultRow {
    std::string experiment;
    std::string method;
    std::string params;
    std::optional<double> ari;
    std::optional<double> silhouette;
    std::optional<double> runtime_seconds;
    std::vector<std::pair<std::string, double>> aux;
};

struct ExperimentOutput {
    std::string experiment;
    std::string status = "ok";  // "ok" or "skipped: ..."
    std::vector<ResultRow> rows;
    std::vector<std::filesystem::path> files;
};

/// Runs the configured experiment and writes results.csv, the
/// experiment-specific tables and plot_*.csv series (columns series,x,y)
/// into out_dir. E3 without its matrices returns status "skipped".
ExperimentOutput run_experiment(const ExperimentConfig& cfg, const std::filesystem::path& out_dir);

void write_result_rows(std::span<const ResultRow> rows, std::ostream& out);

/// SuiteSparse download location; $MPHYLO_SS_URL overrides the default
/// https://sparse.tamu.edu/MM.
std::string suitesparse_base_url();
/// Explicit dir, else $MPHYLO_CACHE, else ./ss_cache.
std::filesystem::path resolve_cache_dir(const std::filesystem::path& explicit_dir = {});

/// Local path a "Group/name" entry is cached under.
std::filesystem::path cached_matrix_path(const std::filesystem::path& cache_dir, const std::string& name);

struct FetchStats {
    std::size_t downloads = 0;
    std::size_t cache_hits = 0;
};

/// Ensures every "Group/name" is present as cache_dir/Group/name.mtx,
/// downloading and unpacking the Matrix Market tarball when missing. A
/// corrupt archive is deleted and fetched once more. Throws InputError for
/// malformed names and NetworkError listing every name that could not be
/// obtained.
std::vector<std::filesystem::path> fetch_suitesparse(const std::vector<std::string>& names,
                                                     const std::filesystem::path& cache_dir,
                                                     FetchStats* stats = nullptr);

/// Extracts the first member whose name ends in `suffix` from a .tar.gz.
/// Throws InputError when the archive is unreadable or has no such member.
std::string extract_tar_gz_member(const std::filesystem::path& archive, const std::string& suffix);

} // namespace mphylo
