#pragma once

#include <cstddef>
#include <vector>

#include "spinor/errors.hpp"
#include "spinor/numeric.hpp"

namespace spinor {

/// Dense matrix of exact rationals. Small dimensions only (the oracle caps
/// at 16); everything is value-semantic and exact.
class RatMat {
  public:
    RatMat() = default;
    RatMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static RatMat identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    RatMat operator*(const RatMat& other) const;
    RatMat transposed() const;
    Rat trace() const;
    bool is_identity() const;
    bool is_diagonal() const;

    bool operator==(const RatMat& other) const { return rows_ == other.rows_ && cols_ == other.cols_ && a_ == other.a_; }
    bool operator!=(const RatMat& other) const { return !(*this == other); }
    /// Lexicographic order; used to key closure sets of matrix groups.
    bool operator<(const RatMat& other) const;

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rat> a_;
};

/// x^T B y for the symmetric form B.
Rat bilinear(const RatMat& B, const std::vector<Rat>& x, const std::vector<Rat>& y);

/// Exact positive-definiteness test: all leading principal minors positive.
bool is_positive_definite(const RatMat& B);

Rat determinant(const RatMat& m);

}  // namespace spinor
