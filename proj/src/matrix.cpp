#include "quadnorm/matrix.hpp"

namespace quadnorm {

Matrix::Matrix(RingPtr ring, size_t rows, size_t cols, std::vector<RingElement> entries)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), entries_(std::move(entries)) {
    require(entries_.size() == rows_ * cols_, Errc::DimensionMismatch,
            "entry count does not match matrix shape");
    for (const auto& e : entries_)
        require(same_ring(e.ring(), ring_), Errc::MixedRings, "matrix entry from another ring");
}

Matrix Matrix::zero(const RingPtr& ring, size_t rows, size_t cols) {
    return Matrix(ring, rows, cols, std::vector<RingElement>(rows * cols, ring->zero()));
}

Matrix Matrix::identity(const RingPtr& ring, size_t n) {
    Matrix m = zero(ring, n, n);
    for (size_t i = 0; i < n; ++i) m.set(i, i, ring->one());
    return m;
}

const RingElement& Matrix::at(size_t i, size_t j) const {
    require(i < rows_ && j < cols_, Errc::DimensionMismatch, "matrix index out of range");
    return entries_[i * cols_ + j];
}

void Matrix::set(size_t i, size_t j, RingElement value) {
    require(i < rows_ && j < cols_, Errc::DimensionMismatch, "matrix index out of range");
    require(same_ring(value.ring(), ring_), Errc::MixedRings, "matrix entry from another ring");
    entries_[i * cols_ + j] = std::move(value);
}

bool operator==(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    if (!same_ring(a.ring(), b.ring())) return false;
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j)
            if (!(a.at(i, j) == b.at(i, j))) return false;
    return true;
}

Matrix mat_add(const Matrix& a, const Matrix& b) {
    require(a.rows() == b.rows() && a.cols() == b.cols(), Errc::DimensionMismatch,
            "matrix addition shape mismatch");
    Matrix out = Matrix::zero(a.ring(), a.rows(), a.cols());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j) out.set(i, j, add(a.at(i, j), b.at(i, j)));
    return out;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
    require(a.cols() == b.rows(), Errc::DimensionMismatch, "matrix product shape mismatch");
    Matrix out = Matrix::zero(a.ring(), a.rows(), b.cols());
    for (size_t i = 0; i < a.rows(); ++i) {
        for (size_t j = 0; j < b.cols(); ++j) {
            RingElement acc = a.ring()->zero();
            for (size_t k = 0; k < a.cols(); ++k) acc = add(acc, mul(a.at(i, k), b.at(k, j)));
            out.set(i, j, std::move(acc));
        }
    }
    return out;
}

Matrix transpose(const Matrix& a) {
    Matrix out = Matrix::zero(a.ring(), a.cols(), a.rows());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j) out.set(j, i, a.at(i, j));
    return out;
}

RingElement mat_trace(const Matrix& a) {
    require(a.rows() == a.cols(), Errc::NotSquare, "trace of a non-square matrix");
    RingElement acc = a.ring()->zero();
    for (size_t i = 0; i < a.rows(); ++i) acc = add(acc, a.at(i, i));
    return acc;
}

// Berkowitz / Samuelson iteration. Maintains the characteristic-polynomial
// coefficient vector of the leading principal submatrices (for det(lambda*I - A),
// from the leading power of lambda down to the constant term) and extends it
// one row/column at a time with a Toeplitz product; no divisions are needed.
RingElement det(const Matrix& m) {
    require(m.rows() == m.cols(), Errc::NotSquare, "determinant of a non-square matrix");
    const size_t n = m.rows();
    const RingPtr& ring = m.ring();
    if (n == 0) return ring->one();

    std::vector<RingElement> charvec{ring->one(), neg(m.at(0, 0))};
    for (size_t r = 1; r < n; ++r) {
        // Toeplitz column: 1, -a_rr, -(R S), -(R B S), ..., -(R B^{r-1} S)
        // with B the leading r x r block, R the new row, S the new column.
        std::vector<RingElement> col;
        col.reserve(r + 2);
        col.push_back(ring->one());
        col.push_back(neg(m.at(r, r)));
        std::vector<RingElement> w;
        w.reserve(r);
        for (size_t k = 0; k < r; ++k) w.push_back(m.at(k, r));
        for (size_t i = 0; i < r; ++i) {
            RingElement q = ring->zero();
            for (size_t k = 0; k < r; ++k) q = add(q, mul(m.at(r, k), w[k]));
            col.push_back(neg(q));
            if (i + 1 < r) {
                std::vector<RingElement> next;
                next.reserve(r);
                for (size_t j = 0; j < r; ++j) {
                    RingElement acc = ring->zero();
                    for (size_t k = 0; k < r; ++k) acc = add(acc, mul(m.at(j, k), w[k]));
                    next.push_back(std::move(acc));
                }
                w = std::move(next);
            }
        }
        std::vector<RingElement> next(r + 2, ring->zero());
        for (size_t i = 0; i <= r + 1; ++i)
            for (size_t j = 0; j <= std::min(i, charvec.size() - 1); ++j)
                next[i] = add(next[i], mul(col[i - j], charvec[j]));
        charvec = std::move(next);
    }
    // charvec holds det(lambda*I - A); at lambda = 0 this is (-1)^n det(A).
    RingElement d = charvec[n];
    if (n % 2 == 1) d = neg(d);
    return d;
}

} // namespace quadnorm
