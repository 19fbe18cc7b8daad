#pragma once

#include "mphylo/sparse.hpp"

#include <filesystem>
#include <iosfwd>
#include <string>

namespace mphylo {

enum class MmField { Real, Integer, Pattern };
enum class MmSymmetry { General, Symmetric };

struct MatrixMarketData {
    CsrMatrix matrix;
    MmField field = MmField::Real;
    MmSymmetry symmetry = MmSymmetry::General;
    /// True when a nonsymmetric general matrix was replaced by (A + A^T)/2.
    bool symmetrized = false;
};

/// Parses coordinate-format Matrix Market text. Pattern entries get 1.0,
/// duplicates are summed, symmetric storage is expanded to both triangles.
/// Throws ParseError (with 1-based line numbers) on malformed content,
/// complex/hermitian fields, array format or non-square shapes.
MatrixMarketData parse_matrix_market(std::istream& in);

/// Reads a .mtx or gzip-compressed .mtx(.gz) file.
MatrixMarketData read_matrix_market(const std::filesystem::path& path);

/// Writes coordinate real format. Symmetric matrices are written as their
/// lower triangle with the `symmetric` qualifier.
void write_matrix_market(const CsrMatrix& a, const std::filesystem::path& path);
void write_matrix_market(const CsrMatrix& a, std::ostream& out);

} // namespace mphylo
