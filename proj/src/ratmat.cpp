#include "spinor/ratmat.hpp"

namespace spinor {

RatMat RatMat::identity(std::size_t n) {
    RatMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RatMat RatMat::operator*(const RatMat& other) const {
    if (cols_ != other.rows_) throw DimensionMismatch("matrix product shape mismatch");
    RatMat out(rows_, other.cols_);
    Rat t;
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rat& aik = at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < other.cols_; ++j) {
                const Rat& bkj = other.at(k, j);
                if (bkj == 0) continue;
                t = aik * bkj;
                out.at(i, j) += t;
            }
        }
    }
    return out;
}

RatMat RatMat::transposed() const {
    RatMat out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

Rat RatMat::trace() const {
    Rat t;
    for (std::size_t i = 0; i < rows_ && i < cols_; ++i) t += at(i, i);
    return t;
}

bool RatMat::is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (at(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

bool RatMat::is_diagonal() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (i != j && at(i, j) != 0) return false;
    return true;
}

bool RatMat::operator<(const RatMat& other) const {
    if (rows_ != other.rows_) return rows_ < other.rows_;
    if (cols_ != other.cols_) return cols_ < other.cols_;
    for (std::size_t k = 0; k < a_.size(); ++k) {
        int c = cmp(a_[k], other.a_[k]);
        if (c != 0) return c < 0;
    }
    return false;
}

Rat bilinear(const RatMat& B, const std::vector<Rat>& x, const std::vector<Rat>& y) {
    if (B.rows() != x.size() || B.cols() != y.size())
        throw DimensionMismatch("bilinear form shape mismatch");
    Rat acc;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0) continue;
        Rat row;
        for (std::size_t j = 0; j < y.size(); ++j) {
            if (y[j] == 0) continue;
            row += B.at(i, j) * y[j];
        }
        acc += x[i] * row;
    }
    return acc;
}

Rat determinant(const RatMat& m) {
    if (m.rows() != m.cols()) throw DimensionMismatch("determinant needs a square matrix");
    std::size_t n = m.rows();
    RatMat a = m;
    Rat det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a.at(pivot, col) == 0) ++pivot;
        if (pivot == n) return Rat(0);
        if (pivot != col) {
            for (std::size_t j = col; j < n; ++j) std::swap(a.at(pivot, j), a.at(col, j));
            det = -det;
        }
        det *= a.at(col, col);
        for (std::size_t i = col + 1; i < n; ++i) {
            if (a.at(i, col) == 0) continue;
            Rat f = a.at(i, col) / a.at(col, col);
            for (std::size_t j = col; j < n; ++j) a.at(i, j) -= f * a.at(col, j);
        }
    }
    return det;
}

bool is_positive_definite(const RatMat& B) {
    if (B.rows() != B.cols()) return false;
    for (std::size_t k = 1; k <= B.rows(); ++k) {
        RatMat lead(k, k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) lead.at(i, j) = B.at(i, j);
        if (determinant(lead) <= 0) return false;
    }
    return true;
}

}  // namespace spinor
