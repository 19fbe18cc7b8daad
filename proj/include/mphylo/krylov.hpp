#pragma once

#include "mphylo/sparse.hpp"

#include <json.hpp>

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace mphylo {

enum class PcKind { Identity, Jacobi, SSOR, IC0 };

struct PreconditionerSpec {
    PcKind kind = PcKind::Identity;
    double omega = 1.0;  // SSOR only

    /// "identity", "jacobi", "ssor(1.5)", "ic0".
    std::string name() const;
    static PreconditionerSpec parse(const std::string& name);
    friend bool operator==(const PreconditionerSpec&, const PreconditionerSpec&) = default;
};

/// {Identity, Jacobi, SSOR(1.0), SSOR(1.5), IC0}.
std::vector<PreconditionerSpec> default_portfolio();

/// z = M^{-1} r for one of the portfolio preconditioners.
class Preconditioner {
public:
    /// Throws InputError on a zero diagonal (Jacobi/SSOR) or bad omega, and
    /// NumericalError when IC0 still breaks down after the shifted retries.
    Preconditioner(const CsrMatrix& a, const PreconditionerSpec& spec);

    void apply(std::span<const double> r, std::span<double> z) const;
    const PreconditionerSpec& spec() const noexcept { return spec_; }
    /// Diagonal shift that IC0 needed (0 when the plain factorization worked).
    double ic0_shift() const noexcept { return shift_; }
    /// Lower factor for IC0 (CSR, diagonal stored last in each row).
    const CsrMatrix& ic0_factor() const noexcept { return factor_; }

private:
    PreconditionerSpec spec_;
    const CsrMatrix* a_ = nullptr;
    std::vector<double> diag_;
    CsrMatrix factor_;
    CsrMatrix factor_t_;
    double shift_ = 0.0;
};

/// Incomplete Cholesky with zero fill on the lower-triangle pattern. Returns
/// false on a non-positive pivot.
bool ic0_factorize(const CsrMatrix& a, double shift, CsrMatrix& lower);

struct SolveOptions {
    double tol = 1e-8;
    std::size_t maxit = 0;  // 0 means 10 n
    bool record_history = true;
};

struct SolveReport {
    std::string matrix_id;
    PreconditionerSpec pc;
    std::size_t iterations = 0;
    bool converged = false;
    bool breakdown = false;
    double final_relative_residual = 1.0;
    std::vector<double> residual_history;  // relative residual per iteration, starting at k = 0
    std::string note;
};

/**
 Resumable preconditioned CG. Each step() performs one iteration; the state
 can be inspected between steps, which is what the probe-and-switch policy
 needs.
 */
class CgSolver {
public:
    CgSolver(const CsrMatrix& a, std::span<const double> b, const Preconditioner& m, double tol = 1e-8,
             bool record_history = true);

    /// One iteration. Returns false when already finished.
    bool step();
    /// Steps until finished or `total_iterations` is reached.
    void run_until(std::size_t total_iterations);

    bool finished() const noexcept { return converged_ || breakdown_; }
    bool converged() const noexcept { return converged_; }
    bool breakdown() const noexcept { return breakdown_; }
    std::size_t iterations() const noexcept { return iters_; }
    double relative_residual() const noexcept { return rel_; }
    const std::vector<double>& x() const noexcept { return x_; }
    const std::vector<double>& history() const noexcept { return history_; }

    SolveReport report(std::string matrix_id = {}) const;

private:
    void restart_from_true_residual();

    const CsrMatrix* a_;
    const Preconditioner* m_;
    std::vector<double> b_, x_, r_, z_, p_, q_;
    double bnorm_ = 0.0;
    double rz_ = 0.0;
    double rel_ = 1.0;
    double tol_;
    bool record_;
    std::size_t iters_ = 0;
    bool converged_ = false;
    bool breakdown_ = false;
    std::vector<double> history_;
};

SolveReport cg_solve(const CsrMatrix& a, std::span<const double> b, const PreconditionerSpec& spec,
                     const SolveOptions& opts = {});

/// b = A * ones.
std::vector<double> default_rhs(const CsrMatrix& a);

/// Standard normal b, deterministic in (n, seed).
std::vector<double> random_rhs(std::size_t n, std::uint64_t seed);

/// Runs every preconditioner. Build failures become non-converged reports
/// with maxit iterations and a note.
std::vector<SolveReport> run_portfolio(const CsrMatrix& a, std::span<const double> b,
                                       std::span<const PreconditionerSpec> portfolio, const SolveOptions& opts = {},
                                       const std::string& matrix_id = {});

/// CSV rows: matrix_id, pc, iters, converged, final_res.
void write_solve_csv(std::span<const SolveReport> reports, std::ostream& out);

nlohmann::ordered_json to_json(const SolveReport& r);
SolveReport solve_report_from_json(const nlohmann::json& j);

} // namespace mphylo
