#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <vector>

#include "qtorus/scalar.hpp"

namespace qtorus {

using IntRow = std::vector<mpz_class>;

/// Row echelon form over the integers, built incrementally. Each stored row
/// is primitive; reduction multiplies through by pivots instead of dividing.
class IntegerEchelon {
public:
    explicit IntegerEchelon(std::size_t cols) : cols_(cols) {}

    /// Reduces the row against the stored rows; returns true if it was
    /// independent (and keeps it).
    bool add_row(IntRow row);
    /// Rational rows are scaled to integers first.
    bool add_row(const std::vector<Scalar>& row);

    [[nodiscard]] std::size_t rank() const { return rows_.size(); }
    [[nodiscard]] std::size_t cols() const { return cols_; }
    /// Primitive integer basis of the right nullspace.
    [[nodiscard]] std::vector<IntRow> nullspace() const;

private:
    std::size_t cols_;
    std::vector<IntRow> rows_;
    std::vector<std::size_t> pivots_;
};

/// Basis of {x : A x = 0} for a rational matrix given by rows.
std::vector<IntRow> nullspace(const std::vector<std::vector<Scalar>>& rows, std::size_t cols);
std::size_t rank(const std::vector<std::vector<Scalar>>& rows, std::size_t cols);

}  // namespace qtorus
