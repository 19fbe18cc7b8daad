#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace mphylo {

struct Triplet {
    std::size_t row;
    std::size_t col;
    double value;
};

/**
 Square sparse matrix in CSR form with sorted, unique column indices.

 This is the universal input type. Symmetry is not enforced by construction;
 use `is_symmetric()` to validate it (similarity transforms may legitimately
 produce nonsymmetric matrices that are routed through the radius path).
 Instances are immutable after construction and safe to share across threads.
 */
class CsrMatrix {
public:
    CsrMatrix() = default;

    /// Validating constructor. Throws InputError on malformed arrays.
    CsrMatrix(std::size_t n, std::vector<std::size_t> row_ptr, std::vector<std::size_t> col_idx,
              std::vector<double> values);

    /// Duplicate (row, col) triplets are summed; explicit zeros are kept.
    static CsrMatrix from_triplets(std::size_t n, std::vector<Triplet> triplets);
    /// Exact zeros are dropped.
    static CsrMatrix from_dense(const Eigen::MatrixXd& dense);
    static CsrMatrix identity(std::size_t n);
    static CsrMatrix diagonal(std::span<const double> diag);

    std::size_t n() const noexcept { return n_; }
    std::size_t nnz() const noexcept { return values_.size(); }
    std::span<const std::size_t> row_ptr() const noexcept { return row_ptr_; }
    std::span<const std::size_t> col_idx() const noexcept { return col_idx_; }
    std::span<const double> values() const noexcept { return values_; }

    /// y = A x without allocating. Sizes must match n().
    void multiply(std::span<const double> x, std::span<double> y) const;

    /// Stored value at (i, j), or 0.
    double at(std::size_t i, std::size_t j) const;
    std::vector<double> diagonal_values() const;
    std::vector<Triplet> triplets() const;
    Eigen::MatrixXd to_dense() const;

    /// Every stored (i,j,v) has a partner (j,i) within rtol * max|value|.
    bool is_symmetric(double rtol = 1e-12) const;
    bool all_finite() const;
    double max_abs() const;

    CsrMatrix transposed() const;
    CsrMatrix scaled(double alpha) const;

    friend bool operator==(const CsrMatrix&, const CsrMatrix&) = default;

private:
    std::size_t n_ = 0;
    std::vector<std::size_t> row_ptr_{0};
    std::vector<std::size_t> col_idx_;
    std::vector<double> values_;
};

/// Ax. Throws DimensionError when len(x) != A.n().
std::vector<double> matvec(const CsrMatrix& a, std::span<const double> x);

/// Symmetric dense matrix; construction mirrors the lower triangle so that
/// entries(i,j) == entries(j,i) exactly. Used by desk-scale oracles.
class DenseSymMatrix {
public:
    explicit DenseSymMatrix(const Eigen::MatrixXd& m);
    explicit DenseSymMatrix(const CsrMatrix& a) : DenseSymMatrix(a.to_dense()) {}

    std::size_t n() const noexcept { return static_cast<std::size_t>(m_.rows()); }
    const Eigen::MatrixXd& entries() const noexcept { return m_; }
    /// Ascending eigenvalues (no eigenvectors).
    std::vector<double> eigenvalues() const;

private:
    Eigen::MatrixXd m_;
};

/// Ascending eigenvalues of a symmetric matrix via the dense path.
std::vector<double> symmetric_eigenvalues(const CsrMatrix& a);
/// Eigenvalues of a general matrix via the dense path (unordered).
std::vector<std::complex<double>> general_eigenvalues(const CsrMatrix& a);

enum class SymmetrizeMode { HalfSum, Gram };

/// (A + A^T)/2 or A^T A.
CsrMatrix symmetrize(const CsrMatrix& a, SymmetrizeMode mode);

enum class TransformKind { Permutation, DiagonalSimilarity, GeneralSimilarity, PositiveScale };

struct Transform {
    TransformKind kind = TransformKind::PositiveScale;
    std::vector<std::size_t> permutation;  // B(i,j) = A(p[i], p[j])
    std::vector<double> diagonal;          // D, entries > 0
    Eigen::MatrixXd factor;                // S, invertible
    double alpha = 1.0;

    static Transform permute(std::vector<std::size_t> p);
    static Transform diagonal_similarity(std::vector<double> d);
    static Transform general_similarity(Eigen::MatrixXd s);
    static Transform scale(double alpha);
};

/// Condition estimate above which a general similarity factor is rejected.
inline constexpr double kMaxSimilarityCondition = 1e12;

/// P^T A P, D^-1 A D, S^-1 A S or alpha A. General similarity is dense.
CsrMatrix apply_transform(const CsrMatrix& a, const Transform& t);

double frobenius_norm(const CsrMatrix& a);
/// ||A||_2: dense path for n <= dense_cutoff, else power iteration (>= 30 steps).
double spectral_norm_est(const CsrMatrix& a, std::size_t dense_cutoff = 512);

/// Gershgorin interval [min(a_ii - R_i), max(a_ii + R_i)].
std::pair<double, double> gershgorin_interval(const CsrMatrix& a);

} // namespace mphylo
