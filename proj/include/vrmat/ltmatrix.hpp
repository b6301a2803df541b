#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "vrmat/kernel.hpp"

namespace vrmat {

/// Malformed matrix JSON; path() names the offending location ("rows[2]").
class JsonSchemaError : public std::runtime_error {
public:
    JsonSchemaError(const std::string& path, const std::string& message)
        : std::runtime_error(path + ": " + message), path_(path) {}
    const std::string& path() const { return path_; }

private:
    std::string path_;
};

/// Square lower-triangular matrix with exact integer entries, stored as a
/// ragged triangle: row i holds the i + 1 entries at or below the diagonal.
class LTMatrix {
public:
    /// Takes ownership of the ragged rows; row i must have i + 1 entries.
    explicit LTMatrix(std::vector<std::vector<Integer>> rows);

    static LTMatrix identity(std::size_t order);

    std::size_t order() const { return rows_.size(); }

    /// Entry (i, j) with the upper triangle read as zero. Pre: i, j < order.
    Integer entry(std::size_t i, std::size_t j) const;
    /// Stored entry (i, j), j <= i < order.
    const Integer& at(std::size_t i, std::size_t j) const;
    Integer& at(std::size_t i, std::size_t j);

    const std::vector<std::vector<Integer>>& rows() const { return rows_; }
    std::vector<Integer> first_column() const;

    bool operator==(const LTMatrix&) const = default;

    /// A^m by repeated squaring; A^0 is the identity.
    LTMatrix pow(unsigned long m) const;

    /// Exact inverse. The product of the diagonals must be a unit, so every
    /// diagonal entry has to be 1 or -1; throws std::domain_error otherwise.
    LTMatrix inverse() const;

    /// {"order": N, "rows": [["1"], ["2", "1"], ...]} with entries as
    /// decimal strings.
    std::string to_json() const;
    static LTMatrix from_json(const std::string& text);

    /// One row per line, comma-separated, trailing newline.
    std::string to_csv() const;

private:
    std::vector<std::vector<Integer>> rows_;
};

/// Matrix product; both factors must have the same order.
LTMatrix operator*(const LTMatrix& a, const LTMatrix& b);

/// [1] (+) A: prepend a unit row/column, growing the order by one.
LTMatrix direct_sum_1(const LTMatrix& a);

/// Compact one-line form "[1; 2 1; 4 4 1]" for diagnostics.
std::ostream& operator<<(std::ostream& os, const LTMatrix& a);

}  // namespace vrmat
