#pragma once

#include "mphylo/fingerprint.hpp"
#include "mphylo/generators.hpp"
#include "mphylo/krylov.hpp"
#include "mphylo/phylogeny.hpp"

#include <json.hpp>

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace mphylo {

struct PortfolioConfig {
    std::vector<PreconditionerSpec> portfolio = default_portfolio();
    SolveOptions solve;
    FingerprintConfig fingerprint;  // CSF, K = 5 by default
    /// Unset: b = A 1. Set: seeded standard normal b (same b for equal n).
    std::optional<std::uint64_t> rhs_seed;

    std::vector<double> rhs(const CsrMatrix& a) const;
};

struct PortfolioRecord {
    std::string matrix_id;
    Fingerprint fingerprint;
    std::vector<SolveReport> reports;  // portfolio order
    PreconditionerSpec oracle_best;
    CsrMatrix matrix;  // kept for the Frobenius policies

    const SolveReport& oracle_report() const;
};

/// Fewest iterations among converged reports (ties: portfolio order); if
/// none converged, least final residual.
std::size_t oracle_index(std::span<const SolveReport> reports);

PortfolioRecord make_record(const std::string& id, const CsrMatrix& a, const PortfolioConfig& cfg);
std::vector<PortfolioRecord> build_portfolio(std::span<const CorpusItem> corpus, const PortfolioConfig& cfg);

enum class PolicyKind { PhyloKnn, Frobenius1nn, FrobeniusKnn };

std::string to_string(PolicyKind p);
PolicyKind parse_policy(const std::string& s);

struct Policy {
    PolicyKind kind = PolicyKind::PhyloKnn;
    std::size_t k = 3;
    Metric metric = Metric::Cosine;  // PhyloKnn only
};

struct Recommendation {
    std::vector<PreconditionerSpec> ranked;
    std::vector<std::pair<std::string, double>> neighbors;  // (matrix id, distance)
};

/// Ranks the portfolio for a query. Neighbours vote for their oracle best
/// with weight 1/distance (a zero distance wins outright); unvoted
/// preconditioners follow by database win count, ties by portfolio order.
/// Frobenius policies throw DimensionError on a size mismatch.
Recommendation recommend(const CsrMatrix& query, const Fingerprint& query_fp, std::span<const PortfolioRecord> db,
                         const Policy& policy, std::span<const PreconditionerSpec> portfolio = {});

struct ProbeOptions {
    std::size_t probe_iters = 10;
    double switch_factor = 0.9;
    double tol = 1e-8;
    std::size_t maxit = 0;  // 0 means 10 n
};

struct ProbeDecision {
    PreconditionerSpec pc;
    double rate = 0.0;  // (||r_probe|| / ||r_0||)^(1/iters)
    std::size_t iterations = 0;
    bool switched = false;
    std::string note;
};

struct ProbeOutcome {
    SolveReport report;  // iterations are cumulative across abandoned probes
    std::vector<ProbeDecision> trace;
    std::size_t switches = 0;
};

/// Probes ranked[0]; on a slow rate (> switch_factor) or breakdown it moves
/// to the next candidate with a fresh solve, otherwise it continues the same
/// CG run to completion. The last candidate always runs to maxit.
ProbeOutcome probe_and_switch(const CsrMatrix& a, std::span<const double> b,
                              std::span<const PreconditionerSpec> ranked, const ProbeOptions& opts = {});

struct RegretSummary {
    std::string policy;
    std::size_t count = 0;
    double success_rate = 0.0;
    double extra_median = 0.0;
    double extra_mean = 0.0;
    double extra_p90 = 0.0;
    std::size_t switches = 0;
};

/// Aligned by matrix id (InputError otherwise). extra = max(0, policy - oracle);
/// success = converged; p90 by nearest rank.
RegretSummary regret_metrics(std::span<const SolveReport> reports, std::span<const SolveReport> oracle,
                             const std::string& policy = {});

/// Nearest-rank percentile (q in (0, 1]).
double nearest_rank(std::vector<double> values, double q);

/// True when the Frobenius-nearest database matrix has a different oracle
/// label than the query while the fingerprint-nearest one agrees with it.
bool verify_trap(const CsrMatrix& query, std::span<const PortfolioRecord> db, const PortfolioConfig& cfg);

nlohmann::ordered_json to_json(const PortfolioRecord& r);
PortfolioRecord portfolio_record_from_json(const nlohmann::json& j);
void write_portfolio_db(std::span<const PortfolioRecord> db, const PortfolioConfig& cfg,
                        const std::filesystem::path& path);
std::pair<std::vector<PortfolioRecord>, PortfolioConfig> read_portfolio_db(const std::filesystem::path& path);

/// CSV mirroring the regret table rows.
void write_regret_csv(std::span<const RegretSummary> rows, std::ostream& out);

} // namespace mphylo
