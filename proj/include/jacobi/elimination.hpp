#pragma once

#include "jacobi/rational.hpp"

#include <map>
#include <utility>
#include <vector>

namespace jacobi {

using SparseRow = std::vector<std::pair<int, Rational>>; ///< sorted by column, no zeros

/// Incrementally built row echelon form over Q. Every stored row starts at
/// its pivot column with coefficient 1.
class EchelonForm {
public:
    explicit EchelonForm(int columns) : columns_(columns) {}

    /// Reduces `row` against the stored rows and keeps it if anything is
    /// left. Returns whether the rank grew.
    bool insert(SparseRow row);

    /// Clears every pivot column out of every other row (reduced form).
    void back_substitute();

    /// Subtracts stored rows from a dense vector until no pivot column of it
    /// is nonzero.
    void reduce(std::vector<Rational>& dense) const;

    int columns() const { return columns_; }
    int rank() const { return static_cast<int>(rows_.size()); }
    std::vector<int> free_columns() const;
    const std::map<int, SparseRow>& rows() const { return rows_; }

    static EchelonForm from_rows(int columns, std::map<int, SparseRow> rows);

private:
    int columns_;
    std::map<int, SparseRow> rows_; ///< keyed by pivot column
};

/// row -= factor * other
void axpy(SparseRow& row, const Rational& factor, const SparseRow& other);

/// Rank of a dense matrix (copied), by exact elimination.
int rank_of(std::vector<std::vector<Rational>> matrix);

} // namespace jacobi
