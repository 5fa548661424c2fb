#pragma once

#include "quadnorm/ring.hpp"

namespace quadnorm {

/// Dense matrix over a commutative ring, row-major.
class Matrix {
public:
    Matrix(RingPtr ring, size_t rows, size_t cols, std::vector<RingElement> entries);

    static Matrix zero(const RingPtr& ring, size_t rows, size_t cols);
    static Matrix identity(const RingPtr& ring, size_t n);

    const RingPtr& ring() const noexcept { return ring_; }
    size_t rows() const noexcept { return rows_; }
    size_t cols() const noexcept { return cols_; }

    const RingElement& at(size_t i, size_t j) const;
    void set(size_t i, size_t j, RingElement value);

private:
    RingPtr ring_;
    size_t rows_;
    size_t cols_;
    std::vector<RingElement> entries_;
};

bool operator==(const Matrix& a, const Matrix& b);

Matrix mat_add(const Matrix& a, const Matrix& b);
Matrix mat_mul(const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& a);
RingElement mat_trace(const Matrix& a);

/// Division-free determinant (Berkowitz); sound over rings with zero divisors.
RingElement det(const Matrix& m);

} // namespace quadnorm
